// Robust geometric predicates: a floating-point evaluation guarded by a
// static error bound, with an exact fallback built on nonoverlapping
// floating-point expansions (Shewchuk-style error-free transformations).
// Constructions elsewhere are plain floating point; only the *signs*
// computed here are exact.

#include <cmath>
#include <vector>

#include "afmesh/geometry.hpp"

namespace afmesh {
namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kCcwErrA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kO3dErrA = (7.0 + 56.0 * kEps) * kEps;
constexpr double kIccErrA = (10.0 + 96.0 * kEps) * kEps;
constexpr double kIspErrA = (16.0 + 224.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bv = x - a;
  double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bv = a - x;
  double av = x + bv;
  y = (a - av) - (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// An expansion is a sum of doubles, stored by increasing magnitude,
// whose components do not overlap. Zero components are elided.
using Exp = std::vector<double>;

Exp make_exp(double a) {
  Exp e;
  if (a != 0.0) e.push_back(a);
  return e;
}

Exp make_exp(double hi, double lo) {
  Exp e;
  if (lo != 0.0) e.push_back(lo);
  if (hi != 0.0) e.push_back(hi);
  return e;
}

// fast_expansion_sum_zeroelim
Exp add(const Exp& e, const Exp& f) {
  if (e.empty()) return f;
  if (f.empty()) return e;
  Exp h;
  h.reserve(e.size() + f.size());
  size_t ei = 0, fi = 0;
  double enow = e[0], fnow = f[0];
  double q;
  if ((fnow > enow) == (fnow > -enow)) {
    q = enow;
    ++ei;
  } else {
    q = fnow;
    ++fi;
  }
  double qnew, hh;
  if (ei < e.size() && fi < f.size()) {
    enow = e[ei];
    fnow = f[fi];
    if ((fnow > enow) == (fnow > -enow)) {
      two_sum(enow, q, qnew, hh);
      ++ei;
    } else {
      two_sum(fnow, q, qnew, hh);
      ++fi;
    }
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
    while (ei < e.size() && fi < f.size()) {
      enow = e[ei];
      fnow = f[fi];
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(q, enow, qnew, hh);
        ++ei;
      } else {
        two_sum(q, fnow, qnew, hh);
        ++fi;
      }
      q = qnew;
      if (hh != 0.0) h.push_back(hh);
    }
  }
  while (ei < e.size()) {
    two_sum(q, e[ei], qnew, hh);
    ++ei;
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  while (fi < f.size()) {
    two_sum(q, f[fi], qnew, hh);
    ++fi;
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

// scale_expansion_zeroelim
Exp scale(const Exp& e, double b) {
  Exp h;
  if (e.empty() || b == 0.0) return h;
  h.reserve(2 * e.size());
  double q, hh;
  two_product(e[0], b, q, hh);
  if (hh != 0.0) h.push_back(hh);
  for (size_t i = 1; i < e.size(); ++i) {
    double p1, p0;
    two_product(e[i], b, p1, p0);
    double sum;
    two_sum(q, p0, sum, hh);
    if (hh != 0.0) h.push_back(hh);
    two_sum(p1, sum, q, hh);
    if (hh != 0.0) h.push_back(hh);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

Exp mul(const Exp& e, const Exp& f) {
  Exp r;
  for (double c : f) r = add(r, scale(e, c));
  return r;
}

Exp neg(Exp e) {
  for (double& c : e) c = -c;
  return e;
}

inline int exp_sign(const Exp& e) {
  if (e.empty()) return 0;
  double top = e.back();
  return top > 0.0 ? 1 : -1;
}

inline int dsign(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

Exp diff_exp(double a, double b) {
  double x, y;
  two_diff(a, b, x, y);
  return make_exp(x, y);
}

// det2(p,q,r,s) = p*s - q*r on 2-term expansions.
Exp det2(const Exp& p, const Exp& q, const Exp& r, const Exp& s) {
  return add(mul(p, s), neg(mul(q, r)));
}

int orient2d_exact(const Vec2& a, const Vec2& b, const Vec2& c) {
  Exp acx = diff_exp(a.x, c.x), acy = diff_exp(a.y, c.y);
  Exp bcx = diff_exp(b.x, c.x), bcy = diff_exp(b.y, c.y);
  return exp_sign(det2(acx, acy, bcx, bcy));
}

int orient3d_exact(const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& a) {
  // det of rows (b-a, c-a, d-a)
  Exp ux = diff_exp(b.x, a.x), uy = diff_exp(b.y, a.y), uz = diff_exp(b.z, a.z);
  Exp vx = diff_exp(c.x, a.x), vy = diff_exp(c.y, a.y), vz = diff_exp(c.z, a.z);
  Exp wx = diff_exp(d.x, a.x), wy = diff_exp(d.y, a.y), wz = diff_exp(d.z, a.z);
  Exp m1 = det2(vy, vz, wy, wz);
  Exp m2 = det2(vx, vz, wx, wz);
  Exp m3 = det2(vx, vy, wx, wy);
  Exp det = add(add(mul(ux, m1), neg(mul(uy, m2))), mul(uz, m3));
  return exp_sign(det);
}

Exp norm2_exp(const Exp& x, const Exp& y) { return add(mul(x, x), mul(y, y)); }
Exp norm2_exp(const Exp& x, const Exp& y, const Exp& z) {
  return add(add(mul(x, x), mul(y, y)), mul(z, z));
}

int incircle_exact(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  Exp ax = diff_exp(a.x, d.x), ay = diff_exp(a.y, d.y);
  Exp bx = diff_exp(b.x, d.x), by = diff_exp(b.y, d.y);
  Exp cx = diff_exp(c.x, d.x), cy = diff_exp(c.y, d.y);
  Exp al = norm2_exp(ax, ay), bl = norm2_exp(bx, by), cl = norm2_exp(cx, cy);
  Exp det = add(add(mul(al, det2(bx, by, cx, cy)), neg(mul(bl, det2(ax, ay, cx, cy)))),
                mul(cl, det2(ax, ay, bx, by)));
  return exp_sign(det);
}

int insphere_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& e) {
  Exp ax = diff_exp(a.x, e.x), ay = diff_exp(a.y, e.y), az = diff_exp(a.z, e.z);
  Exp bx = diff_exp(b.x, e.x), by = diff_exp(b.y, e.y), bz = diff_exp(b.z, e.z);
  Exp cx = diff_exp(c.x, e.x), cy = diff_exp(c.y, e.y), cz = diff_exp(c.z, e.z);
  Exp dx = diff_exp(d.x, e.x), dy = diff_exp(d.y, e.y), dz = diff_exp(d.z, e.z);

  Exp ab = det2(ax, ay, bx, by);
  Exp bc = det2(bx, by, cx, cy);
  Exp cd = det2(cx, cy, dx, dy);
  Exp da = det2(dx, dy, ax, ay);
  Exp ac = det2(ax, ay, cx, cy);
  Exp bd = det2(bx, by, dx, dy);

  Exp abc = add(add(mul(az, bc), neg(mul(bz, ac))), mul(cz, ab));
  Exp bcd = add(add(mul(bz, cd), neg(mul(cz, bd))), mul(dz, bc));
  Exp cda = add(add(mul(cz, da), mul(dz, ac)), mul(az, cd));
  Exp dab = add(add(mul(dz, ab), mul(az, bd)), mul(bz, da));

  Exp al = norm2_exp(ax, ay, az), bl = norm2_exp(bx, by, bz);
  Exp cl = norm2_exp(cx, cy, cz), dl = norm2_exp(dx, dy, dz);

  Exp det = add(add(mul(dl, abc), neg(mul(cl, dab))), add(mul(bl, cda), neg(mul(al, bcd))));
  return exp_sign(det);
}

}  // namespace

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return dsign(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return dsign(det);
    detsum = -detleft - detright;
  } else {
    return dsign(-detright);
  }
  if (std::fabs(det) > kCcwErrA * detsum) return dsign(det);
  return orient2d_exact(a, b, c);
}

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  double wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;

  double uvy = vx * wy, uvx = vy * wx;
  double vwy = vy * wz, vwx = vz * wy;
  double wuy = vz * wx, wux = vx * wz;

  double det = ux * (vwy - vwx) + uy * (wuy - wux) + uz * (uvy - uvx);
  double permanent = (std::fabs(vwy) + std::fabs(vwx)) * std::fabs(ux) +
                     (std::fabs(wuy) + std::fabs(wux)) * std::fabs(uy) +
                     (std::fabs(uvy) + std::fabs(uvx)) * std::fabs(uz);
  if (std::fabs(det) > kO3dErrA * permanent) return dsign(det);
  return orient3d_exact(b, c, d, a);
}

int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  double adx = a.x - d.x, ady = a.y - d.y;
  double bdx = b.x - d.x, bdy = b.y - d.y;
  double cdx = c.x - d.x, cdy = c.y - d.y;

  double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  double alift = adx * adx + ady * ady;
  double cdxady = cdx * ady, adxcdy = adx * cdy;
  double blift = bdx * bdx + bdy * bdy;
  double adxbdy = adx * bdy, bdxady = bdx * ady;
  double clift = cdx * cdx + cdy * cdy;

  double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                     (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                     (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  int s;
  if (std::fabs(det) > kIccErrA * permanent) {
    s = dsign(det);
  } else {
    s = incircle_exact(a, b, c, d);
  }
  // Normalize: + means strictly inside regardless of abc winding.
  int o = orient2d(a, b, c);
  return s * o;
}

int insphere(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& e) {
  double aex = a.x - e.x, aey = a.y - e.y, aez = a.z - e.z;
  double bex = b.x - e.x, bey = b.y - e.y, bez = b.z - e.z;
  double cex = c.x - e.x, cey = c.y - e.y, cez = c.z - e.z;
  double dex = d.x - e.x, dey = d.y - e.y, dez = d.z - e.z;

  double aexbey = aex * bey, bexaey = bex * aey;
  double bexcey = bex * cey, cexbey = cex * bey;
  double cexdey = cex * dey, dexcey = dex * cey;
  double dexaey = dex * aey, aexdey = aex * dey;
  double aexcey = aex * cey, cexaey = cex * aey;
  double bexdey = bex * dey, dexbey = dex * bey;

  double ab = aexbey - bexaey;
  double bc = bexcey - cexbey;
  double cd = cexdey - dexcey;
  double da = dexaey - aexdey;
  double ac = aexcey - cexaey;
  double bd = bexdey - dexbey;

  double abc = aez * bc - bez * ac + cez * ab;
  double bcd = bez * cd - cez * bd + dez * bc;
  double cda = cez * da + dez * ac + aez * cd;
  double dab = dez * ab + aez * bd + bez * da;

  double alift = aex * aex + aey * aey + aez * aez;
  double blift = bex * bex + bey * bey + bez * bez;
  double clift = cex * cex + cey * cey + cez * cez;
  double dlift = dex * dex + dey * dey + dez * dez;

  double det = (dlift * abc - clift * dab) + (blift * cda - alift * bcd);

  double aezplus = std::fabs(aez), bezplus = std::fabs(bez);
  double cezplus = std::fabs(cez), dezplus = std::fabs(dez);
  double aexbeyplus = std::fabs(aexbey), bexaeyplus = std::fabs(bexaey);
  double bexceyplus = std::fabs(bexcey), cexbeyplus = std::fabs(cexbey);
  double cexdeyplus = std::fabs(cexdey), dexceyplus = std::fabs(dexcey);
  double dexaeyplus = std::fabs(dexaey), aexdeyplus = std::fabs(aexdey);
  double aexceyplus = std::fabs(aexcey), cexaeyplus = std::fabs(cexaey);
  double bexdeyplus = std::fabs(bexdey), dexbeyplus = std::fabs(dexbey);

  double permanent = ((cexdeyplus + dexceyplus) * bezplus + (dexbeyplus + bexdeyplus) * cezplus +
                      (bexceyplus + cexbeyplus) * dezplus) *
                         alift +
                     ((dexaeyplus + aexdeyplus) * cezplus + (aexceyplus + cexaeyplus) * dezplus +
                      (cexdeyplus + dexceyplus) * aezplus) *
                         blift +
                     ((aexbeyplus + bexaeyplus) * dezplus + (bexdeyplus + dexbeyplus) * aezplus +
                      (dexaeyplus + aexdeyplus) * bezplus) *
                         clift +
                     ((bexceyplus + cexbeyplus) * aezplus + (cexaeyplus + aexceyplus) * bezplus +
                      (aexbeyplus + bexaeyplus) * cezplus) *
                         dlift;

  int s;
  if (std::fabs(det) > kIspErrA * permanent) {
    s = dsign(det);
  } else {
    s = insphere_exact(a, b, c, d, e);
  }
  // Normalize: + means strictly inside regardless of abcd orientation.
  int o = orient3d(a, b, c, d);
  return -s * o;
}

}  // namespace afmesh
