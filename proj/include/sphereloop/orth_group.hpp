#pragma once

// O(H) as the semidirect product S x| O(V): every orthogonal A factors uniquely
// as A = L_u U with u = A e0 and U in O(V), and pairs multiply as
//
//   (x, A)(y, B) = (x odot Ay, L(x, Ay) A B).

#include "sphereloop/sphere_loop.hpp"

namespace sphereloop {

class SemidirectElement {
 public:
  /// `automorphism` must be orthogonal and fix e0 (Domain error otherwise).
  SemidirectElement(SpherePoint point, Operator automorphism, const Tolerances& tol = {});

  static SemidirectElement identity(std::size_t dim);

  const SpherePoint& point() const noexcept { return point_; }
  const Operator& automorphism() const noexcept { return auto_; }
  std::size_t dim() const noexcept { return point_.dim(); }

 private:
  SpherePoint point_;
  Operator auto_;
};

struct Factorization {
  SpherePoint u;
  Operator U;
};

Factorization factorize(const Operator& A, const Tolerances& tol = {});

SemidirectElement semidirect_mul(const SemidirectElement& p, const SemidirectElement& q,
                                 const Tolerances& tol = {});
/// Inverse via the operator image: factorize(to_operator(p)^T).
SemidirectElement semidirect_inverse(const SemidirectElement& p, const Tolerances& tol = {});

/// L_x A.
Operator to_operator(const SemidirectElement& p, const Tolerances& tol = {});

/// |A(x odot y) - Ax odot Ay| for A in O(V).
double automorphism_residual(const Operator& A, const SpherePoint& x, const SpherePoint& y,
                             const Tolerances& tol = {});
/// Same defect without the O(V) precondition; used to search for witnesses
/// that a general orthogonal map is not an automorphism.
double automorphism_defect(const Operator& A, const SpherePoint& x, const SpherePoint& y,
                           const Tolerances& tol = {});

/// |(Ax)^t - A x^t| for A in O(V).
double scalar_equivariance_residual(const Operator& A, const SpherePoint& x, double t, const Tolerances& tol = {});

/// max-norm |L_x + I|, the distance of L_x from L_{-e0} = -I.
double transversal_gap(const SpherePoint& x, const Tolerances& tol = {});
/// |(L_x + I) v| for a unit v in V cap x^perp; equals 2 whenever dim >= 3.
double transversal_witness_gap(const SpherePoint& x, const Tolerances& tol = {});

}  // namespace sphereloop
