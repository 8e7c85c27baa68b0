#pragma once

// Companion models of the sphere loop:
//  * the Riemann sphere C u {oo} reached by stereographic projection,
//  * the complex 1-sphere |x0|^2 + |x1|^2 = 1 in C^2,
//  * finite Cayley-table magmas for reflection quasigroups and B-loops.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sphereloop/sphere_loop.hpp"

namespace sphereloop {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Riemann sphere

/// A point of C u {oo}. Infinity is a tag, never a large or IEEE-infinite float.
class ExtendedComplex {
 public:
  ExtendedComplex(double re, double im);
  explicit ExtendedComplex(cplx z) : ExtendedComplex(z.real(), z.imag()) {}
  static ExtendedComplex infinity() { return ExtendedComplex(); }

  bool is_infinity() const noexcept { return !z_.has_value(); }
  /// Finite value; throws Domain for infinity.
  cplx value() const;

  friend bool operator==(const ExtendedComplex&, const ExtendedComplex&) = default;

 private:
  ExtendedComplex() = default;
  std::optional<cplx> z_;
};

/// (x + y)/(1 - conj(x) y), with oo odot y = -1/conj(y) and x odot oo = -1/conj(x).
ExtendedComplex riemann_odot(const ExtendedComplex& x, const ExtendedComplex& y);

/// Chart z = (x1 + i x2)/(1 + x0): e0 -> 0, -e0 -> oo. Requires dim = 3.
ExtendedComplex stereo_to_plane(const SpherePoint& x);
SpherePoint stereo_to_sphere(const ExtendedComplex& z, const Tolerances& tol = {});

/// Chordal distance on C u {oo} (Euclidean distance of the sphere images).
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

// ---------------------------------------------------------------------------
// Complex 1-sphere

struct ComplexPair {
  cplx x0;
  cplx x1;

  /// Normalizes a pair within 1e-6 of the unit sphere; Domain error otherwise.
  static ComplexPair make(cplx a, cplx b);
  static ComplexPair identity() { return {1.0, 0.0}; }
  double norm() const { return std::sqrt(std::norm(x0) + std::norm(x1)); }
};

/// Row-major 2x2 complex matrix of the (complex-linear) left translation L_x.
struct C2Matrix {
  cplx a, b, c, d;
  ComplexPair apply(const ComplexPair& v) const;
  C2Matrix operator*(const C2Matrix& o) const;
  C2Matrix adjoint() const;
};

C2Matrix complex1_left_translation(const ComplexPair& x, const Tolerances& tol = {});
ComplexPair complex1_odot(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol = {});
/// Solves x odot y = (1, 0) for y.
ComplexPair complex1_inverse(const ComplexPair& x, const Tolerances& tol = {});
/// L(x,y) = L_{x odot y}^{-1} L_x L_y.
C2Matrix complex1_left_inner(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol = {});

double complex1_distance(const ComplexPair& a, const ComplexPair& b);
/// |x odot (x^{-1} odot y) - y|
double complex1_lip_defect(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol = {});
/// |L(x,y)(u odot v) - L(x,y)u odot L(x,y)v|
double complex1_al_defect(const ComplexPair& x, const ComplexPair& y, const ComplexPair& u, const ComplexPair& v,
                          const Tolerances& tol = {});
/// |(x odot y)^{-1} - x^{-1} odot y^{-1}|
double complex1_aip_defect(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol = {});

ComplexPair random_complex_pair(Rng& rng);

struct AipCounterexample {
  ComplexPair x;
  ComplexPair y;
  double defect;
};

/// Random search for the largest AIP defect among `samples` draws.
AipCounterexample find_aip_counterexample(Rng& rng, int samples, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Finite magmas

class FiniteMagma {
 public:
  /// `table` is row-major n x n with entries in [0, n).
  FiniteMagma(int n, std::vector<int> table, std::optional<int> identity = std::nullopt);

  int size() const noexcept { return n_; }
  int operator()(int x, int y) const { return t_[static_cast<std::size_t>(x * n_ + y)]; }
  std::optional<int> identity() const noexcept { return e_; }
  const std::vector<int>& table() const noexcept { return t_; }

  /// "n= k" followed by k rows of k integers.
  std::string to_text() const;
  static FiniteMagma parse(const std::string& text);

  friend bool operator==(const FiniteMagma& a, const FiniteMagma& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_;
  std::vector<int> t_;
  std::optional<int> e_;
};

struct AxiomResult {
  std::string name;
  bool holds = true;
  std::vector<int> counterexample;  // first failing tuple, empty when the axiom holds
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;
  bool all_hold() const;
  const AxiomResult& get(const std::string& name) const;
};

/// Z_n with x * y = 2x - y mod n (n odd), identity 0.
FiniteMagma zn_reflection(int n);
/// Z_n with x + y mod n, identity 0.
FiniteMagma zn_addition(int n);

/// left keyesian, left distributive, left quasigroup, right quasigroup, idempotent.
AxiomReport check_reflection_axioms(const FiniteMagma& m);

/// Point-reflection axioms (i) involutive, (ii) unique fixed point,
/// (iii) unique midpoint, (iv) a~ b~ a~ = (a*b)~.
AxiomReport check_point_reflection_axioms(const FiniteMagma& m);

/// Unique z with z * e = x for every x.
std::optional<std::vector<int>> unique_square_roots(const FiniteMagma& m, int e);

/// x . y = x^{1/2} * (e * y).
FiniteMagma quasigroup_to_bloop(const FiniteMagma& m, int e);

/// x * y = x^2 . y^{-1}. Input must be a B-loop with a designated or detectable identity.
FiniteMagma bloop_to_quasigroup(const FiniteMagma& m);

/// Two-sided identity, loop (Latin square), Bol, AIP, bijective squaring.
AxiomReport check_bloop_laws(const FiniteMagma& m);

/// All magmas on n elements whose rows are involutive permutations.
std::vector<FiniteMagma> involutive_row_magmas(int n);

}  // namespace sphereloop
