#pragma once

// The left loop (S, odot) on the unit sphere S of R^{n+1} with identity e0,
// together with the symmetric-space operation it is compatible with:
//
//   x * y       = 2<x,y> x - y
//   x odot y    = (2 P_{sqrt x} - I) J y      for x != -e0
//   -e0 odot y  = -y
//
// Every result is renormalized to unit length.

#include "sphereloop/hilbert.hpp"

namespace sphereloop {

enum class PoleClass { IdentityPt, Antipode, Generic };

const char* to_string(PoleClass p) noexcept;

class SpherePoint {
 public:
  /// Accepts vectors whose norm is within 1e-6 of one and renormalizes them;
  /// anything further from the sphere is a Domain error.
  explicit SpherePoint(const HVector& v, const Tolerances& tol = {});
  SpherePoint(std::initializer_list<double> coords, const Tolerances& tol = {})
      : SpherePoint(HVector(coords), tol) {}

  static SpherePoint e0(std::size_t dim) { return SpherePoint(HVector::e0(dim)); }
  static SpherePoint minus_e0(std::size_t dim) { return SpherePoint(-HVector::e0(dim)); }

  const HVector& vec() const noexcept { return v_; }
  PoleClass pole() const noexcept { return pole_; }
  std::size_t dim() const noexcept { return v_.dim(); }
  double x0() const noexcept { return v_.x0(); }
  double operator[](std::size_t i) const { return v_[i]; }

  bool is_generic() const noexcept { return pole_ == PoleClass::Generic; }
  bool is_antipode() const noexcept { return pole_ == PoleClass::Antipode; }
  bool is_identity() const noexcept { return pole_ == PoleClass::IdentityPt; }

 private:
  HVector v_;
  PoleClass pole_;
};

/// Euclidean distance |x - y| between the underlying vectors.
double distance(const SpherePoint& x, const SpherePoint& y);

/// Applies an operator and renormalizes onto the sphere.
SpherePoint apply(const Operator& A, const SpherePoint& x, const Tolerances& tol = {});

SpherePoint symm(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// (e0 + x) / |e0 + x|. The antipode has no canonical root (Domain error).
SpherePoint sqrt_point(const SpherePoint& x, const Tolerances& tol = {});

/// x^{-1} = J x.
SpherePoint inverse(const SpherePoint& x, const Tolerances& tol = {});

/// Projector form of the product.
SpherePoint odot(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// Closed form <x,Jy> e0 + ((y0 + <x,Jy>)/(1 + x0)) x_perp + y_perp.
/// Undefined at x = -e0 (Domain error). Serves as an oracle for odot.
SpherePoint odot_alt(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// Real powers along the great circle through e0 and x:
///   x^t = cos(t acos x0) e0 + sin(t acos x0) x_perp / |x_perp|,  e0^t = e0.
/// Throws Domain at x = -e0.
SpherePoint power(const SpherePoint& x, double t, const Tolerances& tol = {});

/// L_x as a matrix; -I at the antipode.
Operator left_translation(const SpherePoint& x, const Tolerances& tol = {});

/// R_y(x) = x odot y.
SpherePoint right_translate(const SpherePoint& y, const SpherePoint& x, const Tolerances& tol = {});

/// L(x,y) = L_{x odot y}^T L_x L_y, an element of O(V).
Operator left_inner(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// |x*y - x odot (x odot y^{-1})|.
double compat_residual(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

}  // namespace sphereloop
