#include <doctest.h>

#include <cmath>
#include <set>

#include "sphereloop/error.hpp"
#include "sphereloop/models.hpp"

using namespace sphereloop;

namespace {

SpherePoint rp(std::size_t dim, Rng& rng) { return SpherePoint(random_sphere_point(dim, rng)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

// Product formula written out directly, generic branch only.
ComplexPair oracle_c1(const ComplexPair& x, const ComplexPair& y) {
  const cplx a = x.x0 / std::conj(x.x0) * (std::conj(x.x0) * y.x0 - std::conj(x.x1) * y.x1);
  const cplx b = x.x0 * y.x1 + x.x1 * y.x0;
  return {a, b};
}

FiniteMagma from_rule(int n, auto rule) {
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = rule(x, y);
  return FiniteMagma(n, t);
}

}  // namespace

TEST_CASE("riemann_odot branches") {
  const ExtendedComplex i(0, 1);
  CHECK(riemann_odot(i, i).is_infinity());
  const ExtendedComplex y(0.3, -0.7);
  CHECK(std::abs(riemann_odot(ExtendedComplex(0, 0), y).value() - y.value()) <= 1e-15);
  const cplx inf_y = riemann_odot(ExtendedComplex::infinity(), y).value();
  CHECK(std::abs(inf_y + 1.0 / std::conj(y.value())) <= 1e-15);
  const cplx x_inf = riemann_odot(y, ExtendedComplex::infinity()).value();
  CHECK(std::abs(x_inf + 1.0 / std::conj(y.value())) <= 1e-15);
  CHECK(riemann_odot(ExtendedComplex::infinity(), ExtendedComplex(0, 0)).is_infinity());
  CHECK_THROWS_AS(ExtendedComplex::infinity().value(), Error);
}

TEST_CASE("stereographic projection") {
  CHECK(stereo_to_plane(SpherePoint::e0(3)) == ExtendedComplex(0, 0));
  CHECK(stereo_to_plane(SpherePoint::minus_e0(3)).is_infinity());
  CHECK(stereo_to_sphere(ExtendedComplex::infinity()).is_antipode());
  CHECK(stereo_to_sphere(ExtendedComplex(0, 0)).is_identity());
  CHECK(code_of([] { stereo_to_plane(SpherePoint::e0(4)); }) == ErrorCode::Dimension);

  Rng rng(400);
  double worst_rt = 0.0, worst_tr = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const SpherePoint x = rp(3, rng), y = rp(3, rng);
    worst_rt = std::max(worst_rt, distance(stereo_to_sphere(stereo_to_plane(x)), x));
    const ExtendedComplex lhs = stereo_to_plane(odot(x, y));
    const ExtendedComplex rhs = riemann_odot(stereo_to_plane(x), stereo_to_plane(y));
    worst_tr = std::max(worst_tr, chordal_distance(lhs, rhs));
  }
  CHECK(worst_rt <= 1e-10);
  CHECK(worst_tr <= 1e-9);
  CHECK(chordal_distance(ExtendedComplex::infinity(), ExtendedComplex::infinity()) == 0.0);
  CHECK(chordal_distance(ExtendedComplex(0, 0), ExtendedComplex::infinity()) == doctest::Approx(2.0));
}

TEST_CASE("complex 1-sphere") {
  const ComplexPair e = ComplexPair::identity();
  Rng rng(401);
  const ComplexPair y = random_complex_pair(rng);
  CHECK(complex1_distance(complex1_odot(e, y), y) <= 1e-15);
  CHECK(complex1_distance(complex1_odot(y, e), y) <= 1e-12);
  const ComplexPair j{0.0, 1.0};
  const ComplexPair jj = complex1_odot(j, j);
  CHECK(std::abs(jj.x0 + 1.0) <= 1e-15);
  CHECK(std::abs(jj.x1) <= 1e-15);
  CHECK(code_of([] { ComplexPair::make(1.0, 1.0); }) == ErrorCode::Domain);

  for (int i = 0; i < 2000; ++i) {
    const ComplexPair a = random_complex_pair(rng), b = random_complex_pair(rng);
    const ComplexPair u = random_complex_pair(rng), v = random_complex_pair(rng);
    const ComplexPair p = complex1_odot(a, b);
    CHECK(std::abs(p.norm() - 1.0) <= 1e-12);
    CHECK(complex1_distance(p, oracle_c1(a, b)) <= 1e-12);
    CHECK(complex1_distance(complex1_odot(a, complex1_inverse(a)), e) <= 1e-9);
    // Observed, not derived: x^{-1} = (conj(x0), -(conj(x0)/x0) x1).
    if (std::abs(a.x0) > 1e-3) {
      const ComplexPair inv = complex1_inverse(a);
      CHECK(std::abs(inv.x0 - std::conj(a.x0)) + std::abs(inv.x1 + std::conj(a.x0) / a.x0 * a.x1) <= 1e-12);
    }
    CHECK(complex1_lip_defect(a, b) <= 1e-9);
    CHECK(complex1_al_defect(a, b, u, v) <= 1e-9);
    // L_x is unitary.
    const C2Matrix L = complex1_left_translation(a);
    const C2Matrix I = L.adjoint() * L;
    CHECK(std::abs(I.a - 1.0) + std::abs(I.b) + std::abs(I.c) + std::abs(I.d - 1.0) <= 1e-12);
  }
  const AipCounterexample ce = find_aip_counterexample(rng, 1000);
  CHECK(ce.defect > 1e-3);
  CHECK(std::abs(complex1_aip_defect(ce.x, ce.y) - ce.defect) <= 1e-12);
}

TEST_CASE("zn_reflection") {
  const FiniteMagma m = zn_reflection(5);
  CHECK(m.size() == 5);
  CHECK(m(1, 2) == 0);
  for (int x = 0; x < 5; ++x) {
    CHECK(m(x, x) == x);
    for (int y = 0; y < 5; ++y) CHECK(m(x, m(x, y)) == y);
  }
  CHECK(m.identity() == 0);
  CHECK(code_of([] { zn_reflection(4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { zn_reflection(1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reflection axioms") {
  CHECK(check_reflection_axioms(zn_reflection(5)).all_hold());
  // Mutation: change one cell.
  std::vector<int> t = zn_reflection(5).table();
  t[1 * 5 + 3] = (t[1 * 5 + 3] + 1) % 5;
  const AxiomReport r = check_reflection_axioms(FiniteMagma(5, t));
  CHECK_FALSE(r.get("left_distributive").holds);
  CHECK(r.get("left_distributive").counterexample.size() == 3);
  const AxiomReport lp = check_reflection_axioms(from_rule(3, [](int, int y) { return y; }));
  CHECK_FALSE(lp.get("right_quasigroup").holds);
  CHECK_THROWS_AS(lp.get("nonsense"), Error);
}

TEST_CASE("point reflection axioms") {
  CHECK(check_point_reflection_axioms(zn_reflection(7)).all_hold());
  CHECK(check_point_reflection_axioms(zn_reflection(9)).all_hold());
  CHECK(check_reflection_axioms(zn_reflection(9)).all_hold());
  const std::vector<FiniteMagma> corpus = involutive_row_magmas(3);
  // Each row is one of the 4 involutions of a 3-set: 4^3 magmas.
  CHECK(corpus.size() == 64);
  int agreeing = 0;
  for (const FiniteMagma& q : corpus) {
    if (check_point_reflection_axioms(q).all_hold() == check_reflection_axioms(q).all_hold()) ++agreeing;
  }
  CHECK(agreeing == 64);
}

TEST_CASE("isotopy") {
  const FiniteMagma b = quasigroup_to_bloop(zn_reflection(5), 0);
  CHECK(b == zn_addition(5));
  CHECK(b.identity() == 0);
  const AxiomReport laws = check_bloop_laws(b);
  CHECK(laws.all_hold());
  CHECK(bloop_to_quasigroup(zn_addition(5)) == zn_reflection(5));
  for (int n = 3; n <= 15; n += 2) {
    for (int e : {0, 1, n - 1}) {
      const FiniteMagma q = zn_reflection(n);
      const FiniteMagma l = quasigroup_to_bloop(q, e);
      CHECK(l.identity() == e);
      CHECK(check_bloop_laws(l).all_hold());
      CHECK(bloop_to_quasigroup(l) == q);
    }
  }
  const FiniteMagma z7 = zn_addition(7);
  CHECK(quasigroup_to_bloop(bloop_to_quasigroup(z7), 0) == z7);
  CHECK(code_of([] { bloop_to_quasigroup(zn_addition(4)); }) == ErrorCode::Structural);
  CHECK(code_of([] { quasigroup_to_bloop(from_rule(3, [](int, int y) { return y; }), 0); }) ==
        ErrorCode::Structural);
  const auto roots = unique_square_roots(zn_reflection(5), 0);
  REQUIRE(roots.has_value());
  for (int x = 0; x < 5; ++x) CHECK((*roots)[static_cast<std::size_t>(x)] == (3 * x) % 5);
}

TEST_CASE("FiniteMagma text format") {
  const FiniteMagma m = zn_reflection(3);
  const std::string text = m.to_text();
  CHECK(text.rfind("n= 3\n", 0) == 0);
  CHECK(FiniteMagma::parse(text) == m);
  CHECK(FiniteMagma::parse("n=2\n0 1\n1 0\n") == FiniteMagma(2, {0, 1, 1, 0}));
  CHECK(code_of([] { FiniteMagma::parse("n= 2\n0 1\n1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { FiniteMagma::parse("n= 2\n0 1\n1 2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { FiniteMagma::parse("m= 2\n0 1\n1 0\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { FiniteMagma::parse("n= 2\n0 1\n1 0\n7\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { FiniteMagma(2, {0, 1, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { FiniteMagma(2, {0, 1, 1, 5}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("involutive row corpus") {
  std::set<std::vector<int>> seen;
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteMagma& m : involutive_row_magmas(n)) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK(m(x, m(x, y)) == y);
      seen.insert(m.table());
    }
  }
  // 1 + 2^2 + 4^3 + 10^4 distinct tables.
  CHECK(seen.size() == 1 + 4 + 64 + 10000);
  CHECK_THROWS_AS(involutive_row_magmas(6), Error);
}
