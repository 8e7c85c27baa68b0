#include "sphereloop/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sphereloop/error.hpp"

namespace sphereloop {

// ---------------------------------------------------------------------------
// Riemann sphere

ExtendedComplex::ExtendedComplex(double re, double im) : z_(cplx(re, im)) {
  if (!std::isfinite(re) || !std::isfinite(im))
    raise(ErrorCode::InvalidArgument, "extended complex: finite values need finite coordinates");
}

cplx ExtendedComplex::value() const {
  if (!z_) raise(ErrorCode::Domain, "extended complex: infinity has no finite value");
  return *z_;
}

namespace {

// -1 / conj(z) with 1/0 = oo and 1/oo = 0.
ExtendedComplex neg_recip_conj(const ExtendedComplex& z) {
  if (z.is_infinity()) return ExtendedComplex(0.0, 0.0);
  const cplx v = z.value();
  if (v == cplx(0.0, 0.0)) return ExtendedComplex::infinity();
  return ExtendedComplex(-1.0 / std::conj(v));
}

}  // namespace

ExtendedComplex riemann_odot(const ExtendedComplex& x, const ExtendedComplex& y) {
  if (x.is_infinity()) return neg_recip_conj(y);
  if (y.is_infinity()) return neg_recip_conj(x);
  const cplx a = x.value(), b = y.value();
  const cplx den = 1.0 - std::conj(a) * b;
  if (den == cplx(0.0, 0.0)) return ExtendedComplex::infinity();
  return ExtendedComplex((a + b) / den);
}

ExtendedComplex stereo_to_plane(const SpherePoint& x) {
  if (x.dim() != 3) raise(ErrorCode::Dimension, "stereographic chart needs dim = 3");
  if (x.is_antipode()) return ExtendedComplex::infinity();
  return ExtendedComplex(cplx(x[1], x[2]) / (1.0 + x.x0()));
}

SpherePoint stereo_to_sphere(const ExtendedComplex& z, const Tolerances& tol) {
  if (z.is_infinity()) return SpherePoint::minus_e0(3);
  const cplx v = z.value();
  const double r = std::norm(v);
  return SpherePoint(HVector{(1.0 - r) / (1.0 + r), 2.0 * v.real() / (1.0 + r), 2.0 * v.imag() / (1.0 + r)}, tol);
}

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const cplx u = a.value(), v = b.value();
  return 2.0 * std::abs(u - v) / std::sqrt((1.0 + std::norm(u)) * (1.0 + std::norm(v)));
}

// ---------------------------------------------------------------------------
// Complex 1-sphere

ComplexPair ComplexPair::make(cplx a, cplx b) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (!(std::abs(n - 1.0) <= 1e-6)) raise(ErrorCode::Domain, "complex pair is not on the unit sphere");
  return {a / n, b / n};
}

ComplexPair C2Matrix::apply(const ComplexPair& v) const {
  return ComplexPair::make(a * v.x0 + b * v.x1, c * v.x0 + d * v.x1);
}

C2Matrix C2Matrix::operator*(const C2Matrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

C2Matrix C2Matrix::adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

C2Matrix complex1_left_translation(const ComplexPair& x, const Tolerances& tol) {
  if (std::abs(x.x0) <= tol.eps_pole) return {0.0, -std::conj(x.x1), x.x1, 0.0};
  const cplx phase = x.x0 / std::conj(x.x0);
  return {x.x0, -phase * std::conj(x.x1), x.x1, x.x0};
}

ComplexPair complex1_odot(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol) {
  return complex1_left_translation(x, tol).apply(y);
}

ComplexPair complex1_inverse(const ComplexPair& x, const Tolerances& tol) {
  const C2Matrix m = complex1_left_translation(x, tol);
  const cplx det = m.a * m.d - m.b * m.c;
  if (std::abs(det) < 1e-12) raise(ErrorCode::Degenerate, "complex left translation is singular");
  return ComplexPair::make(m.d / det, -m.c / det);
}

C2Matrix complex1_left_inner(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol) {
  const C2Matrix lxy = complex1_left_translation(complex1_odot(x, y, tol), tol);
  const C2Matrix prod = complex1_left_translation(x, tol) * complex1_left_translation(y, tol);
  const cplx det = lxy.a * lxy.d - lxy.b * lxy.c;
  const C2Matrix inv{lxy.d / det, -lxy.b / det, -lxy.c / det, lxy.a / det};
  return inv * prod;
}

double complex1_distance(const ComplexPair& a, const ComplexPair& b) {
  return std::sqrt(std::norm(a.x0 - b.x0) + std::norm(a.x1 - b.x1));
}

double complex1_lip_defect(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol) {
  return complex1_distance(complex1_odot(x, complex1_odot(complex1_inverse(x, tol), y, tol), tol), y);
}

double complex1_al_defect(const ComplexPair& x, const ComplexPair& y, const ComplexPair& u, const ComplexPair& v,
                          const Tolerances& tol) {
  const C2Matrix A = complex1_left_inner(x, y, tol);
  return complex1_distance(A.apply(complex1_odot(u, v, tol)), complex1_odot(A.apply(u), A.apply(v), tol));
}

double complex1_aip_defect(const ComplexPair& x, const ComplexPair& y, const Tolerances& tol) {
  return complex1_distance(complex1_inverse(complex1_odot(x, y, tol), tol),
                           complex1_odot(complex1_inverse(x, tol), complex1_inverse(y, tol), tol));
}

ComplexPair random_complex_pair(Rng& rng) {
  const HVector v = random_sphere_point(4, rng);
  return ComplexPair::make(cplx(v[0], v[1]), cplx(v[2], v[3]));
}

AipCounterexample find_aip_counterexample(Rng& rng, int samples, const Tolerances& tol) {
  AipCounterexample best{ComplexPair::identity(), ComplexPair::identity(), 0.0};
  for (int i = 0; i < samples; ++i) {
    const ComplexPair x = random_complex_pair(rng);
    const ComplexPair y = random_complex_pair(rng);
    const double d = complex1_aip_defect(x, y, tol);
    if (d > best.defect) best = {x, y, d};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Finite magmas

FiniteMagma::FiniteMagma(int n, std::vector<int> table, std::optional<int> identity)
    : n_(n), t_(std::move(table)), e_(identity) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "magma order must be positive");
  if (t_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    raise(ErrorCode::InvalidArgument, "magma table must have n*n entries");
  for (int v : t_)
    if (v < 0 || v >= n) raise(ErrorCode::InvalidArgument, "magma table entry out of range");
  if (e_ && (*e_ < 0 || *e_ >= n)) raise(ErrorCode::InvalidArgument, "magma identity out of range");
}

std::string FiniteMagma::to_text() const {
  std::ostringstream os;
  os << "n= " << n_ << '\n';
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) os << (y ? " " : "") << (*this)(x, y);
    os << '\n';
  }
  return os.str();
}

FiniteMagma FiniteMagma::parse(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  if (!(is >> head) || head.rfind("n=", 0) != 0) raise(ErrorCode::Parse, "table must start with \"n= k\"");
  int n = 0;
  const std::string rest = head.substr(2);
  if (!rest.empty()) {
    try {
      std::size_t used = 0;
      n = std::stoi(rest, &used);
      if (used != rest.size()) raise(ErrorCode::Parse, "malformed order in table header");
    } catch (const std::logic_error&) {
      raise(ErrorCode::Parse, "malformed order in table header");
    }
  } else if (!(is >> n)) {
    raise(ErrorCode::Parse, "missing order in table header");
  }
  if (n < 1 || n > 4096) raise(ErrorCode::Parse, "table order out of range");
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int& v : t)
    if (!(is >> v)) raise(ErrorCode::Parse, "table has fewer than n*n integers");
  std::string extra;
  if (is >> extra) raise(ErrorCode::Parse, "trailing data after table");
  for (int v : t)
    if (v < 0 || v >= n) raise(ErrorCode::Parse, "table entry out of range");
  return FiniteMagma(n, std::move(t));
}

bool AxiomReport::all_hold() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.holds; });
}

const AxiomResult& AxiomReport::get(const std::string& name) const {
  for (const AxiomResult& a : axioms)
    if (a.name == name) return a;
  raise(ErrorCode::InvalidArgument, "no axiom named " + name);
}

namespace {

// Records the first counterexample of a law.
struct Law {
  AxiomResult r;
  explicit Law(std::string name) { r.name = std::move(name); }
  void fail(std::vector<int> tuple) {
    if (r.holds) {
      r.holds = false;
      r.counterexample = std::move(tuple);
    }
  }
};

bool row_is_permutation(const FiniteMagma& m, int x) {
  std::vector<char> seen(static_cast<std::size_t>(m.size()), 0);
  for (int y = 0; y < m.size(); ++y) seen[static_cast<std::size_t>(m(x, y))] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool column_is_permutation(const FiniteMagma& m, int y) {
  std::vector<char> seen(static_cast<std::size_t>(m.size()), 0);
  for (int x = 0; x < m.size(); ++x) seen[static_cast<std::size_t>(m(x, y))] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::optional<int> find_identity(const FiniteMagma& m) {
  if (m.identity()) return m.identity();
  for (int e = 0; e < m.size(); ++e) {
    bool ok = true;
    for (int x = 0; x < m.size() && ok; ++x) ok = m(e, x) == x && m(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

FiniteMagma zn_reflection(int n) {
  if (n < 3 || n % 2 == 0) raise(ErrorCode::InvalidArgument, "zn reflection needs odd n >= 3");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = ((2 * x - y) % n + n) % n;
  return FiniteMagma(n, std::move(t), 0);
}

FiniteMagma zn_addition(int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "zn addition needs n >= 1");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = (x + y) % n;
  return FiniteMagma(n, std::move(t), 0);
}

AxiomReport check_reflection_axioms(const FiniteMagma& m) {
  const int n = m.size();
  Law keyes("left_keyesian"), dist("left_distributive"), lq("left_quasigroup"), rq("right_quasigroup"),
      idem("idempotent");
  for (int x = 0; x < n; ++x) {
    if (!row_is_permutation(m, x)) lq.fail({x});
    if (!column_is_permutation(m, x)) rq.fail({x});
    if (m(x, x) != x) idem.fail({x});
    for (int y = 0; y < n; ++y) {
      if (m(x, m(x, y)) != y) keyes.fail({x, y});
      for (int z = 0; z < n; ++z)
        if (m(x, m(y, z)) != m(m(x, y), m(x, z))) dist.fail({x, y, z});
    }
  }
  return {{keyes.r, dist.r, lq.r, rq.r, idem.r}};
}

AxiomReport check_point_reflection_axioms(const FiniteMagma& m) {
  const int n = m.size();
  Law inv("involutive"), fixed("unique_fixed_point"), mid("unique_midpoint"), conj("conjugate_closure"),
      witness("conjugate_witness_a*b");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (m(x, m(x, y)) != y) inv.fail({x, y});
      if (m(x, y) == y && y != x) fixed.fail({x, y});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int count = 0;
      for (int x = 0; x < n; ++x) count += m(x, a) == b ? 1 : 0;
      if (count != 1) mid.fail({a, b});
    }
  auto conjugate_equals = [&](int a, int b, int c) {
    for (int x = 0; x < n; ++x)
      if (m(a, m(b, m(a, x))) != m(c, x)) return false;
    return true;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool any = false;
      for (int c = 0; c < n && !any; ++c) any = conjugate_equals(a, b, c);
      if (!any) conj.fail({a, b});
      if (!conjugate_equals(a, b, m(a, b))) witness.fail({a, b});
    }
  return {{inv.r, fixed.r, mid.r, conj.r, witness.r}};
}

std::optional<std::vector<int>> unique_square_roots(const FiniteMagma& m, int e) {
  const int n = m.size();
  if (e < 0 || e >= n) raise(ErrorCode::InvalidArgument, "distinguished element out of range");
  std::vector<int> root(static_cast<std::size_t>(n), -1);
  for (int z = 0; z < n; ++z) {
    int& slot = root[static_cast<std::size_t>(m(z, e))];
    if (slot != -1) return std::nullopt;
    slot = z;
  }
  if (std::find(root.begin(), root.end(), -1) != root.end()) return std::nullopt;
  return root;
}

FiniteMagma quasigroup_to_bloop(const FiniteMagma& m, int e) {
  const AxiomReport ax = check_reflection_axioms(m);
  for (const AxiomResult& a : ax.axioms)
    if (!a.holds) raise(ErrorCode::Structural, "not a reflection quasigroup: " + a.name + " fails");
  const auto roots = unique_square_roots(m, e);
  if (!roots) raise(ErrorCode::Structural, "square roots z * e = x are not unique");
  const int n = m.size();
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = m((*roots)[static_cast<std::size_t>(x)], m(e, y));
  return FiniteMagma(n, std::move(t), e);
}

AxiomReport check_bloop_laws(const FiniteMagma& m) {
  const int n = m.size();
  Law ident("two_sided_identity"), latin("loop"), bol("bol"), aip("aip"), sq("squaring_bijective");
  const std::optional<int> e = find_identity(m);
  if (!e) ident.fail({});
  for (int x = 0; x < n; ++x) {
    if (!row_is_permutation(m, x)) latin.fail({x});
    if (!column_is_permutation(m, x)) latin.fail({x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xyx = m(x, m(y, x));
      for (int z = 0; z < n; ++z)
        if (m(x, m(y, m(x, z))) != m(xyx, z)) bol.fail({x, y, z});
    }
  if (e && latin.r.holds) {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (m(x, y) == *e) inv[static_cast<std::size_t>(x)] = y;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (inv[static_cast<std::size_t>(m(x, y))] != m(inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)]))
          aip.fail({x, y});
  } else {
    aip.fail({});
  }
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) ++hits[static_cast<std::size_t>(m(x, x))];
  for (int v = 0; v < n; ++v)
    if (hits[static_cast<std::size_t>(v)] != 1) {
      sq.fail({v});
      break;
    }
  return {{ident.r, latin.r, bol.r, aip.r, sq.r}};
}

FiniteMagma bloop_to_quasigroup(const FiniteMagma& m) {
  const AxiomReport laws = check_bloop_laws(m);
  for (const AxiomResult& a : laws.axioms)
    if (!a.holds) raise(ErrorCode::Structural, "not a B-loop: " + a.name + " fails");
  const int e = *find_identity(m);
  const int n = m.size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m(x, y) == e) inv[static_cast<std::size_t>(x)] = y;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = m(m(x, x), inv[static_cast<std::size_t>(y)]);
  return FiniteMagma(n, std::move(t), e);
}

std::vector<FiniteMagma> involutive_row_magmas(int n) {
  if (n < 1 || n > 5) raise(ErrorCode::InvalidArgument, "involutive corpus is limited to n <= 5");
  // Enumerate involutive permutations of {0..n-1}.
  std::vector<std::vector<int>> invols;
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] == i;
    if (ok) invols.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<FiniteMagma> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(n * n));
    for (std::size_t r : pick) t.insert(t.end(), invols[r].begin(), invols[r].end());
    out.emplace_back(n, std::move(t));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == invols.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

}  // namespace sphereloop
