#pragma once

// Ambient linear algebra on R^{n+1} = R e0 (+) V.
//
// Index 0 of every vector is the e0 component; indices 1..dim-1 span V.
// Matrices are dense and row-major. Dimensions are desk scale (2..64).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace sphereloop {

/// Slack parameters threaded through every predicate.
struct Tolerances {
  double eps_unit = 1e-12;  // unit-norm slack
  double eps_pole = 1e-10;  // radius of the +-e0 classification balls
  double eps_op = 1e-10;    // matrix identity slack
  double eps_res = 1e-9;    // identity-residual pass threshold

  /// Throws InvalidArgument unless every field is strictly positive and finite.
  void validate() const;
};

class HVector {
 public:
  /// Zero vector of the given dimension (dim >= 2).
  explicit HVector(std::size_t dim);
  HVector(std::initializer_list<double> coords);
  explicit HVector(std::vector<double> coords);

  static HVector basis(std::size_t dim, std::size_t i);
  static HVector e0(std::size_t dim) { return basis(dim, 0); }

  std::size_t dim() const noexcept { return c_.size(); }
  double x0() const noexcept { return c_[0]; }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> coords() const noexcept { return c_; }

  /// The V component x_perp, embedded (index 0 set to zero).
  HVector perp() const;
  double norm() const;
  double perp_norm() const;

  HVector operator+(const HVector& o) const;
  HVector operator-(const HVector& o) const;
  HVector operator-() const;
  HVector operator*(double s) const;
  friend HVector operator*(double s, const HVector& v) { return v * s; }

 private:
  std::vector<double> c_;
};

class Operator {
 public:
  explicit Operator(std::size_t dim);  // zero matrix
  /// Row-major entries, size dim*dim.
  Operator(std::size_t dim, std::vector<double> row_major);

  static Operator identity(std::size_t dim);
  /// The involution J = diag(1, -1, ..., -1).
  static Operator J(std::size_t dim);
  /// Outer product a b^T.
  static Operator outer(const HVector& a, const HVector& b);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::span<const double> row_major() const noexcept { return a_; }

  Operator transpose() const;
  Operator operator*(const Operator& o) const;
  HVector operator*(const HVector& v) const;
  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator*(double s) const;
  Operator operator-() const { return *this * -1.0; }

  /// Largest absolute entry.
  double max_norm() const;
  double trace() const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

double inner(const HVector& x, const HVector& y);
HVector apply_J(const HVector& x);
/// Orthogonal projector a a^T / |a|^2 onto R a.
Operator projector(const HVector& a);
bool is_orthogonal(const Operator& A, bool fix_e0, const Tolerances& tol = {});
/// Gram determinant |x_perp|^2 |y_perp|^2 - <x_perp, y_perp>^2; zero iff x, y, e0, 0 are coplanar.
double perp_gram_determinant(const HVector& x, const HVector& y);

/// Deterministic Gaussian source: mt19937_64, 53-bit uniforms, Box-Muller.
///
/// std::normal_distribution is implementation defined, so the conversion is
/// spelled out here to keep sampled points identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Independent stream for sample `index` of a campaign seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  double uniform();  // in [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Uniform point on the unit sphere in R^dim. With exclude_pole, resamples
/// until 1 + x0 > 1000 * eps_pole.
HVector random_sphere_point(std::size_t dim, Rng& rng, bool exclude_pole = false,
                            const Tolerances& tol = {});
/// Random element of O(V): fixes e0, Gram-Schmidt-orthonormalized Gaussian block on V.
Operator random_orthogonal_V(std::size_t dim, Rng& rng);
/// Random element of O(H) (Gram-Schmidt on a full Gaussian matrix).
Operator random_orthogonal(std::size_t dim, Rng& rng);

}  // namespace sphereloop
