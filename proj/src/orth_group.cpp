#include "sphereloop/orth_group.hpp"

#include "sphereloop/error.hpp"

namespace sphereloop {

namespace {

void require_OV(const Operator& A, const Tolerances& tol, const char* what) {
  if (!is_orthogonal(A, true, tol)) raise(ErrorCode::Domain, std::string(what) + ": operator is not in O(V)");
}

}  // namespace

SemidirectElement::SemidirectElement(SpherePoint point, Operator automorphism, const Tolerances& tol)
    : point_(std::move(point)), auto_(std::move(automorphism)) {
  if (auto_.dim() != point_.dim()) raise(ErrorCode::Dimension, "semidirect element: dimension mismatch");
  require_OV(auto_, tol, "semidirect element");
}

SemidirectElement SemidirectElement::identity(std::size_t dim) {
  return SemidirectElement(SpherePoint::e0(dim), Operator::identity(dim));
}

Factorization factorize(const Operator& A, const Tolerances& tol) {
  if (!is_orthogonal(A, false, tol)) raise(ErrorCode::Domain, "factorize: operator is not orthogonal");
  const SpherePoint u(A * HVector::e0(A.dim()), tol);
  Operator U = left_translation(u, tol).transpose() * A;
  return {u, std::move(U)};
}

SemidirectElement semidirect_mul(const SemidirectElement& p, const SemidirectElement& q, const Tolerances& tol) {
  if (p.dim() != q.dim()) raise(ErrorCode::Dimension, "semidirect product: dimension mismatch");
  const SpherePoint ay = apply(p.automorphism(), q.point(), tol);
  return SemidirectElement(odot(p.point(), ay, tol),
                           left_inner(p.point(), ay, tol) * p.automorphism() * q.automorphism(), tol);
}

SemidirectElement semidirect_inverse(const SemidirectElement& p, const Tolerances& tol) {
  Factorization f = factorize(to_operator(p, tol).transpose(), tol);
  return SemidirectElement(std::move(f.u), std::move(f.U), tol);
}

Operator to_operator(const SemidirectElement& p, const Tolerances& tol) {
  return left_translation(p.point(), tol) * p.automorphism();
}

double automorphism_defect(const Operator& A, const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lhs = apply(A, odot(x, y, tol), tol);
  const SpherePoint rhs = odot(apply(A, x, tol), apply(A, y, tol), tol);
  return distance(lhs, rhs);
}

double automorphism_residual(const Operator& A, const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  require_OV(A, tol, "automorphism residual");
  return automorphism_defect(A, x, y, tol);
}

double scalar_equivariance_residual(const Operator& A, const SpherePoint& x, double t, const Tolerances& tol) {
  require_OV(A, tol, "scalar equivariance");
  if (!x.is_generic()) raise(ErrorCode::Precondition, "scalar equivariance: x must not be +-e0");
  return distance(power(apply(A, x, tol), t, tol), apply(A, power(x, t, tol), tol));
}

double transversal_gap(const SpherePoint& x, const Tolerances& tol) {
  if (!x.is_generic()) raise(ErrorCode::Precondition, "transversal gap: x must not be +-e0");
  return (left_translation(x, tol) + Operator::identity(x.dim())).max_norm();
}

double transversal_witness_gap(const SpherePoint& x, const Tolerances& tol) {
  if (!x.is_generic()) raise(ErrorCode::Precondition, "transversal gap: x must not be +-e0");
  const std::size_t n = x.dim();
  if (n < 3) raise(ErrorCode::Domain, "transversal witness needs dim >= 3");
  // v in V orthogonal to x_perp.
  const HVector xp = x.vec().perp() * (1.0 / x.vec().perp_norm());
  HVector v(n);
  double best = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    HVector c = HVector::basis(n, i);
    c = c - inner(c, xp) * xp;
    if (c.norm() > best) {
      best = c.norm();
      v = c;
    }
  }
  v = v * (1.0 / v.norm());
  return (left_translation(x, tol) * v + v).norm();
}

}  // namespace sphereloop
