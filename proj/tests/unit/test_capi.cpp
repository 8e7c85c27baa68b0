#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphereloop/sphereloop.h"

namespace {

struct Pt {
  sl_point* p = nullptr;
  ~Pt() { sl_point_destroy(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { sl_string_free(s); }
};

std::vector<double> coords(const sl_point* p) {
  std::vector<double> c(sl_point_dim(p));
  REQUIRE(sl_point_coords(p, c.data(), c.size()) == SL_OK);
  return c;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sl_version()) == "1.0.0");
  CHECK(std::string(sl_status_name(SL_OK)) == "ok");
  CHECK(std::string(sl_status_name(SL_ERR_DOMAIN)) == "domain");
  sl_string_free(nullptr);
}

TEST_CASE("points and products") {
  const double xs[] = {0.5, std::sqrt(3.0) / 2.0, 0.0};
  Pt x, xx, id;
  REQUIRE(sl_point_create(nullptr, xs, 3, &x.p) == SL_OK);
  CHECK(sl_point_dim(x.p) == 3);
  REQUIRE(sl_odot(nullptr, x.p, x.p, &xx.p) == SL_OK);
  const std::vector<double> c = coords(xx.p);
  CHECK(std::abs(c[0] + 0.5) <= 1e-12);
  CHECK(std::abs(c[1] - std::sqrt(3.0) / 2.0) <= 1e-12);

  REQUIRE(sl_point_e0(3, &id.p) == SL_OK);
  sl_pole pole;
  REQUIRE(sl_point_pole(id.p, &pole) == SL_OK);
  CHECK(pole == SL_POLE_IDENTITY);

  double d = -1;
  REQUIRE(sl_dist_s(x.p, id.p, &d) == SL_OK);
  CHECK(d == doctest::Approx(std::numbers::pi / 3));

  Pt s, inv, pw, alt, sy;
  CHECK(sl_sqrt(nullptr, x.p, &s.p) == SL_OK);
  CHECK(sl_inverse(nullptr, x.p, &inv.p) == SL_OK);
  CHECK(sl_power(nullptr, x.p, 2.0, &pw.p) == SL_OK);
  CHECK(sl_odot_alt(nullptr, x.p, x.p, &alt.p) == SL_OK);
  CHECK(sl_symm(nullptr, x.p, id.p, &sy.p) == SL_OK);
  const std::vector<double> a = coords(alt.p), p = coords(pw.p);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(a[i] - c[i]) <= 1e-12);
    CHECK(std::abs(p[i] - c[i]) <= 1e-12);
  }
}

TEST_CASE("errors set the last message") {
  const double bad[] = {0.6, 0.9};
  sl_point* p = nullptr;
  CHECK(sl_point_create(nullptr, bad, 2, &p) == SL_ERR_DOMAIN);
  CHECK(p == nullptr);
  CHECK(std::strlen(sl_last_error()) > 0);

  Pt m;
  REQUIRE(sl_point_minus_e0(3, &m.p) == SL_OK);
  CHECK(std::string(sl_last_error()).empty());
  sl_point* r = nullptr;
  CHECK(sl_sqrt(nullptr, m.p, &r) == SL_ERR_DOMAIN);
  CHECK(sl_odot(nullptr, nullptr, m.p, &r) == SL_ERR_INVALID_ARGUMENT);

  Pt two;
  REQUIRE(sl_point_e0(2, &two.p) == SL_OK);
  CHECK(sl_odot(nullptr, m.p, two.p, &r) == SL_ERR_DIMENSION);
  CHECK(r == nullptr);
}

TEST_CASE("contexts") {
  sl_context* ctx = nullptr;
  REQUIRE(sl_context_create(&ctx) == SL_OK);
  double t[4];
  REQUIRE(sl_context_get_tolerances(ctx, t) == SL_OK);
  CHECK(t[0] == 1e-12);
  CHECK(t[3] == 1e-9);
  CHECK(sl_context_set_tolerances(ctx, 1e-12, -1, 1e-10, 1e-9) == SL_ERR_INVALID_ARGUMENT);
  CHECK(sl_context_set_tolerances(ctx, 1e-12, 1e-2, 1e-10, 1e-9) == SL_OK);
  // With a wide pole ball a point near -e0 classifies as the antipode.
  const double near[] = {-std::sqrt(1 - 1e-6), 1e-3, 0};
  Pt p;
  REQUIRE(sl_point_create(ctx, near, 3, &p.p) == SL_OK);
  sl_pole pole;
  sl_point_pole(p.p, &pole);
  CHECK(pole == SL_POLE_ANTIPODE);
  sl_context_destroy(ctx);
}

TEST_CASE("operators and factorization") {
  const double x[] = {0.6, 0.8, 0};
  Pt px;
  REQUIRE(sl_point_create(nullptr, x, 3, &px.p) == SL_OK);
  sl_operator* L = nullptr;
  REQUIRE(sl_left_translation(nullptr, px.p, &L) == SL_OK);
  CHECK(sl_operator_dim(L) == 3);
  Pt u;
  sl_operator* U = nullptr;
  REQUIRE(sl_factorize(nullptr, L, &u.p, &U) == SL_OK);
  const std::vector<double> uc = coords(u.p);
  CHECK(std::abs(uc[0] - 0.6) <= 1e-12);
  double e[9];
  REQUIRE(sl_operator_entries(U, e, 9) == SL_OK);
  for (int i = 0; i < 9; ++i) CHECK(std::abs(e[i] - (i % 4 == 0 ? 1.0 : 0.0)) <= 1e-10);
  CHECK(sl_operator_entries(U, e, 4) == SL_ERR_INVALID_ARGUMENT);
  sl_operator_destroy(U);
  sl_operator_destroy(L);

  const double two[] = {2, 0, 0, 2};
  sl_operator* B = nullptr;
  REQUIRE(sl_operator_create(two, 2, &B) == SL_OK);
  sl_point* bu = nullptr;
  sl_operator* bU = nullptr;
  CHECK(sl_factorize(nullptr, B, &bu, &bU) == SL_ERR_DOMAIN);
  sl_operator_destroy(B);

  Str out;
  double residual = -1;
  REQUIRE(sl_factorize_json(nullptr, "[[1,0,0],[0,-1,0],[0,0,-1]]", &out.s, &residual) == SL_OK);
  CHECK(residual == 0.0);
  CHECK(nlohmann::json::parse(out.s)["u"][0] == 1.0);
  Str junk;
  CHECK(sl_factorize_json(nullptr, "[[1,0", &junk.s, &residual) == SL_ERR_PARSE);
}

TEST_CASE("solutions and curves") {
  const double a[] = {0, 1, 0, 0};
  Pt pa, f, s;
  REQUIRE(sl_point_create(nullptr, a, 4, &pa.p) == SL_OK);
  int dim = -1;
  REQUIRE(sl_solutions(nullptr, pa.p, &dim, &f.p, &s.p) == SL_OK);
  CHECK(dim == 2);
  CHECK(s.p != nullptr);

  Pt x, y, g, eta, nu;
  const double xs[] = {1, 0, 0}, ys[] = {0, 1, 0};
  sl_point_create(nullptr, xs, 3, &x.p);
  sl_point_create(nullptr, ys, 3, &y.p);
  REQUIRE(sl_line_gamma(nullptr, x.p, y.p, 0.5, &g.p) == SL_OK);
  CHECK(coords(g.p)[1] == doctest::Approx(std::sqrt(0.5)));
  Str csv;
  REQUIRE(sl_curve_csv(nullptr, SL_CURVE_LINE, x.p, y.p, 0, 1, 5, &csv.s) == SL_OK);
  CHECK(std::string(csv.s).rfind("t,c0,c1,c2\n", 0) == 0);
  const double ws[] = {0.6, 0, 0.8};
  Pt w;
  sl_point_create(nullptr, ws, 3, &w.p);
  CHECK(sl_equi_eta(nullptr, y.p, w.p, 0.5, &eta.p, &nu.p) == SL_OK);
  Str bad;
  CHECK(sl_curve_csv(nullptr, SL_CURVE_LINE, x.p, y.p, 0, 1, 1, &bad.s) == SL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("magmas") {
  sl_magma* m = nullptr;
  REQUIRE(sl_magma_zn_reflection(5, &m) == SL_OK);
  CHECK(sl_magma_size(m) == 5);
  Str text;
  REQUIRE(sl_magma_to_text(m, &text.s) == SL_OK);
  sl_magma* parsed = nullptr;
  REQUIRE(sl_magma_parse(text.s, &parsed) == SL_OK);
  Str rep;
  int all = 0;
  REQUIRE(sl_magma_reflection_report(parsed, &rep.s, &all) == SL_OK);
  CHECK(all == 1);
  sl_magma* b = nullptr;
  REQUIRE(sl_magma_isotopy(parsed, 0, &b) == SL_OK);
  Str laws;
  REQUIRE(sl_magma_bloop_report(b, &laws.s, &all) == SL_OK);
  CHECK(all == 1);
  Str bt;
  sl_magma_to_text(b, &bt.s);
  CHECK(std::string(bt.s) == "n= 5\n0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\n");
  sl_magma_destroy(b);
  sl_magma_destroy(parsed);
  sl_magma_destroy(m);

  sl_magma* even = nullptr;
  CHECK(sl_magma_zn_reflection(4, &even) == SL_ERR_INVALID_ARGUMENT);
  CHECK(sl_magma_parse("n= 2\n0 1\n", &even) == SL_ERR_PARSE);
}

TEST_CASE("verify through the C API") {
  Str rep;
  int pass = 0;
  REQUIRE(sl_verify(R"({"dims":[2,3],"samples":10,"seed":1,"suites":["kikkawa"]})", &rep.s, &pass) == SL_OK);
  CHECK(pass == 1);
  const nlohmann::json j = nlohmann::json::parse(rep.s);
  CHECK(j["suites"][0]["name"] == "kikkawa");
  Str bad;
  CHECK(sl_verify("{not json", &bad.s, &pass) == SL_ERR_INVALID_ARGUMENT);
  CHECK(sl_verify(R"({"dims":[1]})", &bad.s, &pass) == SL_ERR_INVALID_ARGUMENT);
}
