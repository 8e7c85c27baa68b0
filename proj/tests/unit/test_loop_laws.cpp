#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphereloop/error.hpp"
#include "sphereloop/loop_laws.hpp"

using namespace sphereloop;

namespace {

constexpr double kPi = std::numbers::pi;

SpherePoint rp(std::size_t dim, Rng& rng) { return SpherePoint(random_sphere_point(dim, rng)); }

SpherePoint circle(double a, std::size_t dim = 3) {
  std::vector<double> c(dim, 0.0);
  c[0] = std::cos(a);
  c[1] = std::sin(a);
  return SpherePoint(HVector(c));
}

}  // namespace

TEST_CASE("IdentityReport pass rule") {
  CHECK(make_report("a", 1e-10, true, 1e-9).passes());
  CHECK_FALSE(make_report("a", 2e-9, true, 1e-9).passes());
  CHECK(make_report("b", 1e-7, false, 1e-9).passes());
  CHECK_FALSE(make_report("b", 5e-9, false, 1e-9).passes());
}

TEST_CASE("Kikkawa laws on random samples") {
  Rng rng(100);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
    const SpherePoint x = rp(n, rng), y = rp(n, rng), u = rp(n, rng), v = rp(n, rng);
    CHECK(check_lip(x, y).passes());
    CHECK(check_lip_operator(x).passes());
    CHECK(check_aip(x, y).passes());
    CHECK(check_al(x, y, u, v).passes());
    CHECK(check_left_inner_in_OV(x, y).passes());
    CHECK(check_lip_inner_inverse(x, y).passes());
    CHECK(check_kikkawa_inner_inverse(x, y).passes());
    CHECK(check_bruck_identity(x, y).passes());
    CHECK(check_trans_ident(x, y, u).passes());
    if (!u.is_antipode()) CHECK(check_second_Al(x, y, u, rng.uniform(-2, 2)).passes());
  }
}

TEST_CASE("Kikkawa laws at the poles") {
  Rng rng(101);
  for (std::size_t n = 2; n <= 6; ++n) {
    const SpherePoint a = SpherePoint::minus_e0(n), x = rp(n, rng);
    CHECK(check_lip(a, x).passes());
    CHECK(check_lip(x, a).passes());
    CHECK(check_aip(a, x).passes());
    CHECK(check_aip(x, a).passes());
    CHECK(check_lip_operator(a).passes());
    CHECK(check_left_inner_in_OV(a, x).passes());
    CHECK(check_kikkawa_inner_inverse(x, a).passes());
  }
}

TEST_CASE("power addition and composition") {
  const SpherePoint x = circle(1.0);
  CHECK(check_power_addition(x, 0.3, 0.4).passes());
  CHECK(check_power_addition(x, -1.2, 2.5).passes());
  // a = 1, so s < pi keeps (x^s)^t = x^{st}.
  const IdentityReport in = check_power_composition(x, 2.0, 1.3);
  CHECK(in.predicted_holds);
  CHECK(in.passes());
  const IdentityReport out = check_power_composition(x, 4.0, 0.5);
  CHECK_FALSE(out.predicted_holds);
  CHECK(out.residual > 1e-3);
  CHECK(out.passes());
  // Small negative s stays on the first turn of the circle.
  const IdentityReport neg = check_power_composition(x, -1.0, 0.5);
  CHECK(neg.predicted_holds);
  CHECK(neg.passes());
}

TEST_CASE("left power alternative") {
  Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 6);
    const SpherePoint x(random_sphere_point(n, rng, true));
    const LpaReports r = check_lpa(x, rng.uniform(-3, 3), rng.uniform(-3, 3));
    CHECK(r.product_form.passes());
    CHECK(r.translation.passes());
  }
  // x^{s+t} = -e0 with x^s, x^t generic: the translation form fails in dim >= 3.
  const SpherePoint x({0.0, 0.6, 0.8});
  const LpaReports r = check_lpa(x, 1.0, 1.0);
  CHECK(r.product_form.passes());
  CHECK_FALSE(r.translation.predicted_holds);
  CHECK(r.translation.residual >= 1.0);
  CHECK(r.translation.passes());
  // On the circle it holds there too.
  const LpaReports c = check_lpa(circle(kPi / 2, 2), 1.0, 1.0);
  CHECK(c.translation.predicted_holds);
  CHECK(c.translation.passes());
}

TEST_CASE("left alternative") {
  const IdentityReport a = check_left_alternative(SpherePoint({0.6, 0.8, 0}));
  CHECK(a.predicted_holds);
  CHECK(a.passes());
  const IdentityReport b = check_left_alternative(SpherePoint({0, 1, 0}));
  CHECK_FALSE(b.predicted_holds);
  CHECK(b.residual >= 1.0);
  CHECK(b.passes());
  const IdentityReport c = check_left_alternative(SpherePoint::minus_e0(3));
  CHECK(c.predicted_holds);
  CHECK(c.passes());
  CHECK_THROWS_AS(check_left_alternative(SpherePoint({0, 1})), Error);
}

TEST_CASE("lpa2") {
  Rng rng(103);
  for (std::size_t n = 2; n <= 6; ++n) {
    const SpherePoint x(random_sphere_point(n, rng, true));
    const Lpa2Reports r = check_lpa2(x);
    CHECK(r.commutation.passes());
    CHECK(r.negation.passes());
    CHECK(r.negation.predicted_holds == (n <= 2));
  }
}

TEST_CASE("Bol identity") {
  // Oracle: explicit matrix products.
  Rng rng(104);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
    const SpherePoint x = rp(n, rng), y = rp(n, rng);
    const IdentityReport r = check_bol(x, y);
    CHECK(r.predicted_holds == !in_bol_exception_set(x, y));
    CHECK(r.passes());
    const Operator lhs = left_translation(x) * left_translation(y) * left_translation(x);
    const double d = (lhs - left_translation(odot(x, odot(y, x)))).max_norm();
    CHECK(std::abs(d - r.residual) <= 1e-9);
  }
  const IdentityReport f = check_bol(SpherePoint({0, 1, 0}), SpherePoint::minus_e0(3));
  CHECK_FALSE(f.predicted_holds);
  CHECK(f.residual >= 1.0);
  CHECK(f.passes());
  // In dim 2 the loop is a group.
  CHECK(check_bol(SpherePoint({0, 1}), SpherePoint::minus_e0(2)).predicted_holds);
  CHECK(check_bol(SpherePoint({0, 1}), SpherePoint::minus_e0(2)).passes());
}

TEST_CASE("Bol family witnesses solve y odot x = -x^-1") {
  Rng rng(105);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int i = 0; i < 10; ++i) {
      const SpherePoint x(random_sphere_point(n, rng, true));
      if (x.is_identity() || std::abs(x.x0()) > 0.99) continue;
      for (double ang : {0.3, 1.7, 3.0}) {
        const SpherePoint y = bol_family_witness(x, ang);
        CHECK(distance(odot(y, x), SpherePoint(-inverse(x).vec())) <= 1e-9);
        CHECK(in_bol_exception_set(x, y));
      }
    }
  }
}

TEST_CASE("solution set of x odot a = -a^-1") {
  const SpherePoint a({0, 1, 0});
  CHECK(solution_set_membership(a, SpherePoint({0, 0, 1})));
  CHECK(solution_set_membership(a, SpherePoint({1, 0, 0})));
  CHECK_FALSE(solution_set_membership(a, SpherePoint({0, 1, 0})));
  CHECK_FALSE(solution_set_membership(a, SpherePoint::minus_e0(3)));
  CHECK_THROWS_AS(solution_set_membership(SpherePoint({0, 1}), SpherePoint({1, 0})), Error);
  CHECK_THROWS_AS(solution_set_membership(SpherePoint::e0(3), SpherePoint({1, 0, 0})), Error);

  Rng rng(106);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const SpherePoint b(random_sphere_point(n, rng, true));
      if (b.is_identity()) continue;
      const SolutionDimension s = count_solution_dimension(b);
      CHECK(s.dimension == static_cast<int>(n) - 2);
      CHECK(s.witnesses.size() == (n == 2 ? 1u : 2u));
      for (const SpherePoint& w : s.witnesses) {
        if (n >= 3) CHECK(solution_set_membership(b, w));
        // Oracle: solve directly.
        CHECK(distance(odot(w, b), SpherePoint(-inverse(b).vec())) <= 1e-9);
      }
      if (s.witnesses.size() == 2) CHECK(distance(s.witnesses[0], s.witnesses[1]) > 1e-3);
      if (n == 2) continue;
      const SpherePoint p = solution_set_point(b, random_sphere_point(n, rng));
      if (!p.is_antipode()) CHECK(solution_set_membership(b, p));
    }
  }
}

TEST_CASE("limit operator and discontinuity at -e0") {
  const SpherePoint x({0, 1, 0});
  const Operator lim = limit_right_translation(x);
  // (2 P_{e1} - I) J = diag(-1, -1, 1)
  CHECK(std::abs(lim(0, 0) + 1) <= 1e-15);
  CHECK(std::abs(lim(1, 1) + 1) <= 1e-15);
  CHECK(std::abs(lim(2, 2) - 1) <= 1e-15);
  CHECK_THROWS_AS(limit_right_translation(SpherePoint::e0(3)), Error);

  // L_{x^t} approaches the limit as t -> pi / a.
  const double a = std::acos(x.x0());
  double prev = 1e9;
  for (double d : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double gap = (left_translation(power(x, kPi / a - d)) - lim).max_norm();
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev <= 1e-3);

  const IdentityReport nc = check_discontinuity(x, SpherePoint({0, 0, 1}));
  CHECK_FALSE(nc.predicted_holds);
  CHECK(nc.residual >= 1.0);
  const IdentityReport co = check_discontinuity(x, SpherePoint({0.6, 0.8, 0}));
  CHECK(co.predicted_holds);
  CHECK(co.residual <= 1e-9);
}

TEST_CASE("continuity probe") {
  Rng rng(107);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const SpherePoint x(random_sphere_point(n, rng, true)), y = rp(n, rng);
    const double r = continuity_probe(x, y, 1e-6);
    CHECK(std::isfinite(r));
    CHECK(r * (1.0 + x.x0()) <= 4.0);
    CHECK(std::abs(continuity_probe(x, y, 5e-7) - r) <= 0.1 * r + 1e-6);
  }
}
