#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>

namespace afmesh {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const { return *this / norm(); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Orthonormal in-plane frame for a facet. Points on the facet are addressed
/// by 2D coordinates (s, t) with p = origin + u*s + v*t.
struct PlaneFrame {
  Vec3 origin;
  Vec3 u, v;  // orthonormal in-plane basis
  Vec3 n;     // unit normal, n = u x v

  Vec2 to_plane(const Vec3& p) const {
    Vec3 d = p - origin;
    return {d.dot(u), d.dot(v)};
  }
  Vec3 to_space(const Vec2& q) const { return origin + u * q.x + v * q.y; }
  double height(const Vec3& p) const { return (p - origin).dot(n); }
};

/// Sphere (or circle, in-plane) through the defining vertices of a simplex.
struct CircumBall {
  Vec3 center;
  double radius = 0.0;
};

struct CircumBall2 {
  Vec2 center;
  double radius = 0.0;
};

// ---- robust predicate signs -------------------------------------------------

/// Sign of det(b-a, c-a, d-a): + when d lies on the positive side of the
/// plane through a,b,c oriented by (b-a) x (c-a). Exact.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Sign of cross(b-a, c-a): + when a,b,c wind counterclockwise. Exact.
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

/// + iff e lies strictly inside the circumsphere of tetrahedron abcd,
/// - iff strictly outside, 0 on the sphere. Input orientation does not
/// matter; abcd must not be coplanar. Exact.
int insphere(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& e);

/// + iff d lies strictly inside the circumcircle of triangle abc,
/// - iff strictly outside, 0 on the circle. Orientation-insensitive;
/// abc must not be collinear. Exact.
int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// ---- constructions (plain floating point) -----------------------------------

/// Circumball of a 3D triangle; the center lies in the triangle's plane.
CircumBall circumball_tri3d(const Vec3& a, const Vec3& b, const Vec3& c);

CircumBall2 circumball_tri2d(const Vec2& a, const Vec2& b, const Vec2& c);

/// Circumball of a tetrahedron.
CircumBall circumball_tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

double radius_edge_tri2d(const Vec2& a, const Vec2& b, const Vec2& c);
double radius_edge_tri3d(const Vec3& a, const Vec3& b, const Vec3& c);
double radius_edge_tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

double shortest_edge_tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

double dist_point_segment(const Vec3& p, const Vec3& a, const Vec3& b);
double dist_point_segment2(const Vec2& p, const Vec2& a, const Vec2& b);
double dist_point_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

/// Closest parameter t in [0,1] of p on segment ab.
double closest_param_segment(const Vec3& p, const Vec3& a, const Vec3& b);

/// Distance between two segments (closed sets).
double dist_segment_segment(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// true if segments ab and cd intersect at a point that is not a shared
/// endpoint (2D, exact predicates).
bool segments_cross_2d(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// true if the open segment pq crosses the interior (or edges) of triangle abc.
/// Touching at p or q exactly is not a crossing.
bool segment_crosses_triangle(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b,
                              const Vec3& c);

}  // namespace afmesh
