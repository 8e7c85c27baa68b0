#include "sphereloop/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sphereloop/error.hpp"

namespace sphereloop {

namespace {

void check_finite(std::span<const double> v) {
  for (double d : v)
    if (!std::isfinite(d)) raise(ErrorCode::InvalidArgument, "non-finite coordinate");
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b)
    raise(ErrorCode::Dimension,
          "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Orthonormalizes the columns of the k x k block of `g` starting at (off, off).
// Two Gram-Schmidt passes; a positive-diagonal R makes the result Haar distributed.
void orthonormalize_block(Operator& g, std::size_t off) {
  const std::size_t n = g.dim();
  for (std::size_t c = off; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = off; p < c; ++p) {
        double d = 0.0;
        for (std::size_t r = off; r < n; ++r) d += g(r, p) * g(r, c);
        for (std::size_t r = off; r < n; ++r) g(r, c) -= d * g(r, p);
      }
    }
    double nn = 0.0;
    for (std::size_t r = off; r < n; ++r) nn += g(r, c) * g(r, c);
    nn = std::sqrt(nn);
    if (nn < 1e-300) raise(ErrorCode::Generator, "rank-deficient Gaussian draw");
    for (std::size_t r = off; r < n; ++r) g(r, c) /= nn;
  }
}

}  // namespace

void Tolerances::validate() const {
  for (double e : {eps_unit, eps_pole, eps_op, eps_res})
    if (!(e > 0.0) || !std::isfinite(e))
      raise(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
}

// ---------------------------------------------------------------------------

HVector::HVector(std::size_t dim) : c_(dim, 0.0) {
  if (dim < 2) raise(ErrorCode::Dimension, "HVector needs dim >= 2");
}

HVector::HVector(std::initializer_list<double> coords) : HVector(std::vector<double>(coords)) {}

HVector::HVector(std::vector<double> coords) : c_(std::move(coords)) {
  if (c_.size() < 2) raise(ErrorCode::Dimension, "HVector needs dim >= 2");
  check_finite(c_);
}

HVector HVector::basis(std::size_t dim, std::size_t i) {
  HVector v(dim);
  if (i >= dim) raise(ErrorCode::Dimension, "basis index out of range");
  v.c_[i] = 1.0;
  return v;
}

HVector HVector::perp() const {
  HVector p(*this);
  p.c_[0] = 0.0;
  return p;
}

double HVector::norm() const { return std::sqrt(inner(*this, *this)); }

double HVector::perp_norm() const {
  double s = 0.0;
  for (std::size_t i = 1; i < c_.size(); ++i) s += c_[i] * c_[i];
  return std::sqrt(s);
}

HVector HVector::operator+(const HVector& o) const {
  check_same(dim(), o.dim());
  HVector r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

HVector HVector::operator-(const HVector& o) const {
  check_same(dim(), o.dim());
  HVector r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

HVector HVector::operator-() const { return *this * -1.0; }

HVector HVector::operator*(double s) const {
  HVector r(*this);
  for (double& d : r.c_) d *= s;
  return r;
}

// ---------------------------------------------------------------------------

Operator::Operator(std::size_t dim) : n_(dim), a_(dim * dim, 0.0) {
  if (dim < 2) raise(ErrorCode::Dimension, "Operator needs dim >= 2");
}

Operator::Operator(std::size_t dim, std::vector<double> row_major) : n_(dim), a_(std::move(row_major)) {
  if (dim < 2) raise(ErrorCode::Dimension, "Operator needs dim >= 2");
  if (a_.size() != dim * dim) raise(ErrorCode::Dimension, "Operator entries must be dim*dim");
  check_finite(a_);
}

Operator Operator::identity(std::size_t dim) {
  Operator I(dim);
  for (std::size_t i = 0; i < dim; ++i) I(i, i) = 1.0;
  return I;
}

Operator Operator::J(std::size_t dim) {
  Operator j(dim);
  j(0, 0) = 1.0;
  for (std::size_t i = 1; i < dim; ++i) j(i, i) = -1.0;
  return j;
}

Operator Operator::outer(const HVector& a, const HVector& b) {
  check_same(a.dim(), b.dim());
  Operator m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * b[c];
  return m;
}

Operator Operator::transpose() const {
  Operator t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Operator Operator::operator*(const Operator& o) const {
  check_same(n_, o.n_);
  Operator m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k) {
      const double a = (*this)(r, k);
      if (a == 0.0) continue;
      for (std::size_t c = 0; c < n_; ++c) m(r, c) += a * o(k, c);
    }
  return m;
}

HVector Operator::operator*(const HVector& v) const {
  check_same(n_, v.dim());
  std::vector<double> out(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return HVector(std::move(out));
}

Operator Operator::operator+(const Operator& o) const {
  check_same(n_, o.n_);
  Operator m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Operator Operator::operator-(const Operator& o) const {
  check_same(n_, o.n_);
  Operator m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Operator Operator::operator*(double s) const {
  Operator m(*this);
  for (double& d : m.a_) d *= s;
  return m;
}

double Operator::max_norm() const {
  double m = 0.0;
  for (double d : a_) m = std::max(m, std::abs(d));
  return m;
}

double Operator::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

// ---------------------------------------------------------------------------

double inner(const HVector& x, const HVector& y) {
  check_same(x.dim(), y.dim());
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

HVector apply_J(const HVector& x) { return x.perp() * -1.0 + HVector::e0(x.dim()) * x.x0(); }

Operator projector(const HVector& a) {
  const double nn = inner(a, a);
  if (!(nn > 0.0)) raise(ErrorCode::Degenerate, "projector onto the zero vector");
  return Operator::outer(a, a) * (1.0 / nn);
}

bool is_orthogonal(const Operator& A, bool fix_e0, const Tolerances& tol) {
  const std::size_t n = A.dim();
  if ((A.transpose() * A - Operator::identity(n)).max_norm() > tol.eps_op) return false;
  if (fix_e0) {
    const HVector e0 = HVector::e0(n);
    if ((A * e0 - e0).norm() > tol.eps_op) return false;
  }
  return true;
}

double perp_gram_determinant(const HVector& x, const HVector& y) {
  check_same(x.dim(), y.dim());
  const HVector xp = x.perp();
  const HVector yp = y.perp();
  const double xx = inner(xp, xp), yy = inner(yp, yp), xy = inner(xp, yp);
  return std::max(0.0, xx * yy - xy * xy);
}

// ---------------------------------------------------------------------------

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(state);
  return Rng(splitmix64(state));
}

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

HVector random_sphere_point(std::size_t dim, Rng& rng, bool exclude_pole, const Tolerances& tol) {
  if (dim < 2) raise(ErrorCode::Dimension, "random_sphere_point needs dim >= 2");
  constexpr int kMaxDraws = 1'000'000;
  std::vector<double> c(dim);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    double nn = 0.0;
    for (double& d : c) {
      d = rng.normal();
      nn += d * d;
    }
    if (nn < 1e-200) continue;
    nn = std::sqrt(nn);
    for (double& d : c) d /= nn;
    if (exclude_pole && !(1.0 + c[0] > 1e3 * tol.eps_pole)) continue;
    return HVector(c);
  }
  raise(ErrorCode::Generator, "random_sphere_point: draw budget exhausted");
}

Operator random_orthogonal_V(std::size_t dim, Rng& rng) {
  Operator g(dim);
  g(0, 0) = 1.0;
  for (std::size_t r = 1; r < dim; ++r)
    for (std::size_t c = 1; c < dim; ++c) g(r, c) = rng.normal();
  orthonormalize_block(g, 1);
  return g;
}

Operator random_orthogonal(std::size_t dim, Rng& rng) {
  Operator g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.normal();
  orthonormalize_block(g, 0);
  return g;
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Structural: return "structural";
    case ErrorCode::Generator: return "generator";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace sphereloop
