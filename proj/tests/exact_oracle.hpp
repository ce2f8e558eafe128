// Exact rational-arithmetic reference predicates for the test suite.
// Deliberately independent of the expansion-based production path:
// everything here goes through GMP rationals.
#pragma once

#include <gmpxx.h>

#include "afmesh/geometry.hpp"

namespace afmesh::oracle {

using Q = mpq_class;

inline Q q(double v) { return Q(v); }

inline int qsign(const Q& v) { return sgn(v); }

inline int orient2d_exact(const Vec2& a, const Vec2& b, const Vec2& c) {
  Q det = (q(a.x) - q(c.x)) * (q(b.y) - q(c.y)) - (q(a.y) - q(c.y)) * (q(b.x) - q(c.x));
  return qsign(det);
}

inline int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  Q ux = q(b.x) - q(a.x), uy = q(b.y) - q(a.y), uz = q(b.z) - q(a.z);
  Q vx = q(c.x) - q(a.x), vy = q(c.y) - q(a.y), vz = q(c.z) - q(a.z);
  Q wx = q(d.x) - q(a.x), wy = q(d.y) - q(a.y), wz = q(d.z) - q(a.z);
  Q det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return qsign(det);
}

/// + iff e strictly inside the circumsphere of abcd (orientation-insensitive).
inline int insphere_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                          const Vec3& e) {
  auto row = [&](const Vec3& p, Q* out) {
    out[0] = q(p.x) - q(e.x);
    out[1] = q(p.y) - q(e.y);
    out[2] = q(p.z) - q(e.z);
    out[3] = out[0] * out[0] + out[1] * out[1] + out[2] * out[2];
  };
  Q m[4][4];
  row(a, m[0]);
  row(b, m[1]);
  row(c, m[2]);
  row(d, m[3]);
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  Q det = m[0][3] * det3(1, 2, 3, 0, 1, 2) - m[1][3] * det3(0, 2, 3, 0, 1, 2) +
          m[2][3] * det3(0, 1, 3, 0, 1, 2) - m[3][3] * det3(0, 1, 2, 0, 1, 2);
  // det sign depends on orientation of abcd; normalize like the production
  // predicate: positive means strictly inside.
  int o = orient3d_exact(a, b, c, d);
  int s = qsign(det);
  // With rows (p - e | |p - e|^2), the lifted determinant is positive for a
  // point inside when abcd is negatively oriented in our convention.
  return s * o;
}

inline int incircle_exact(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto row = [&](const Vec2& p, Q* out) {
    out[0] = q(p.x) - q(d.x);
    out[1] = q(p.y) - q(d.y);
    out[2] = out[0] * out[0] + out[1] * out[1];
  };
  Q m[3][3];
  row(a, m[0]);
  row(b, m[1]);
  row(c, m[2]);
  Q det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  int o = orient2d_exact(a, b, c);
  return qsign(det) * o;
}

}  // namespace afmesh::oracle
