#include "sphereloop/sphere_loop.hpp"

#include <algorithm>
#include <cmath>

#include "sphereloop/error.hpp"

namespace sphereloop {

namespace {

constexpr double kAcceptRadius = 1e-6;

void same_dim(const SpherePoint& x, const SpherePoint& y) {
  if (x.dim() != y.dim()) raise(ErrorCode::Dimension, "sphere points of different dimension");
}

// 1 + x0 evaluated as |x_perp|^2 / (1 - x0) on the southern half, so that
// rounding in |x| is not amplified near -e0.
double one_plus_x0(const HVector& v) {
  if (v.x0() >= 0.0) return 1.0 + v.x0();
  const double p = v.perp_norm();
  return p * p / (1.0 - v.x0());
}

}  // namespace

const char* to_string(PoleClass p) noexcept {
  switch (p) {
    case PoleClass::IdentityPt: return "identity";
    case PoleClass::Antipode: return "antipode";
    case PoleClass::Generic: return "generic";
  }
  return "unknown";
}

SpherePoint::SpherePoint(const HVector& v, const Tolerances& tol) : v_(v), pole_(PoleClass::Generic) {
  const double n = v.norm();
  if (!(std::abs(n - 1.0) <= kAcceptRadius))
    raise(ErrorCode::Domain, "vector is not on the unit sphere (|norm - 1| > 1e-6)");
  v_ = v * (1.0 / n);
  const HVector e0 = HVector::e0(v_.dim());
  if ((v_ + e0).norm() <= tol.eps_pole)
    pole_ = PoleClass::Antipode;
  else if ((v_ - e0).norm() <= tol.eps_pole)
    pole_ = PoleClass::IdentityPt;
}

double distance(const SpherePoint& x, const SpherePoint& y) { return (x.vec() - y.vec()).norm(); }

SpherePoint apply(const Operator& A, const SpherePoint& x, const Tolerances& tol) {
  return SpherePoint(A * x.vec(), tol);
}

SpherePoint symm(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  same_dim(x, y);
  return SpherePoint(2.0 * inner(x.vec(), y.vec()) * x.vec() - y.vec(), tol);
}

SpherePoint sqrt_point(const SpherePoint& x, const Tolerances& tol) {
  if (x.is_antipode()) raise(ErrorCode::Domain, "the antipode -e0 has no canonical square root");
  HVector s = x.vec().perp() + one_plus_x0(x.vec()) * HVector::e0(x.dim());
  return SpherePoint(s * (1.0 / s.norm()), tol);
}

SpherePoint inverse(const SpherePoint& x, const Tolerances& tol) {
  return SpherePoint(apply_J(x.vec()), tol);
}

SpherePoint odot(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  same_dim(x, y);
  if (x.is_antipode()) return SpherePoint(-y.vec(), tol);
  // (2 P_u - I) J y with u = x^{1/2} a unit vector.
  const HVector u = sqrt_point(x, tol).vec();
  const HVector jy = apply_J(y.vec());
  return SpherePoint(2.0 * inner(u, jy) * u - jy, tol);
}

SpherePoint odot_alt(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  same_dim(x, y);
  if (x.is_antipode()) raise(ErrorCode::Domain, "closed form is undefined at x = -e0");
  const double xjy = inner(x.vec(), apply_J(y.vec()));
  const double c = one_plus_x0(x.vec());
  const double coef = (y.x0() * c - inner(x.vec().perp(), y.vec().perp())) / c;
  return SpherePoint(xjy * HVector::e0(x.dim()) + coef * x.vec().perp() + y.vec().perp(), tol);
}

SpherePoint power(const SpherePoint& x, double t, const Tolerances& tol) {
  if (x.is_antipode()) raise(ErrorCode::Domain, "x^t is undefined at x = -e0");
  const double pn = x.vec().perp_norm();
  if (x.is_identity() || (pn < tol.eps_pole && x.x0() > 0.0)) return SpherePoint::e0(x.dim());
  const double a = std::atan2(pn, x.x0());
  const HVector dir = x.vec().perp() * (1.0 / pn);
  return SpherePoint(std::cos(t * a) * HVector::e0(x.dim()) + std::sin(t * a) * dir, tol);
}

Operator left_translation(const SpherePoint& x, const Tolerances& tol) {
  const std::size_t n = x.dim();
  if (x.is_antipode()) return -Operator::identity(n);
  const HVector u = sqrt_point(x, tol).vec();
  return (projector(u) * 2.0 - Operator::identity(n)) * Operator::J(n);
}

SpherePoint right_translate(const SpherePoint& y, const SpherePoint& x, const Tolerances& tol) {
  return odot(x, y, tol);
}

Operator left_inner(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  same_dim(x, y);
  const SpherePoint xy = odot(x, y, tol);
  return left_translation(xy, tol).transpose() * left_translation(x, tol) * left_translation(y, tol);
}

double compat_residual(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lhs = symm(x, y, tol);
  const SpherePoint rhs = odot(x, odot(x, inverse(y, tol), tol), tol);
  return distance(lhs, rhs);
}

}  // namespace sphereloop
