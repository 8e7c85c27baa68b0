#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sphereloop/campaign.hpp"
#include "sphereloop/error.hpp"
#include "sphereloop/orth_group.hpp"

using namespace sphereloop;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  VerifyConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(VerifyConfig::all_suites().size() == 6);

  VerifyConfig bad = c;
  bad.dims = {};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  bad.dims = {1};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  bad.dims = {65};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  bad = c;
  bad.samples = 0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  bad = c;
  bad.suites = {"kikkawa", "kikkawa"};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);
  bad.suites = {"nope"};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidArgument);

  CHECK(code_of([] { VerifyConfig::from_json(json{{"bogus", 1}}); }) == ErrorCode::InvalidArgument);
  const VerifyConfig p = VerifyConfig::from_json(json{{"dims", {3, 4}}, {"samples", 7}, {"seed", 9}});
  CHECK(p.dims == std::vector<int>{3, 4});
  CHECK(p.samples == 7);
  CHECK(p.seed == 9);
  const VerifyConfig q = VerifyConfig::from_json(p.to_json());
  CHECK(q.to_json() == p.to_json());
}

TEST_CASE("run_verify is deterministic and passes") {
  VerifyConfig c;
  c.dims = {2, 3};
  c.samples = 20;
  c.seed = 7;
  const VerifyResult a = run_verify(c);
  const VerifyResult b = run_verify(c);
  CHECK(a.pass);
  CHECK(dump_report(a.document) == dump_report(b.document));
  CHECK(a.document["version"] == kReportVersion);
  CHECK(a.document["suites"].size() == 6);
  for (const json& s : a.document["suites"]) {
    CHECK(s["pass"].get<bool>());
    CHECK(s.contains("reports"));
    CHECK(s.contains("skipped"));
    CHECK(s.contains("findings"));
    for (const json& r : s["reports"]) {
      CHECK(r["pass"].get<bool>());
      CHECK(r.contains("law"));
      CHECK(r.contains("predicted_holds"));
      CHECK(r["failures"].get<int>() == 0);
    }
  }
  c.seed = 8;
  CHECK(dump_report(run_verify(c).document) != dump_report(a.document));

  c.suites = {"bol"};
  const VerifyResult only = run_verify(c);
  CHECK(only.document["suites"].size() == 1);
  CHECK(only.document["suites"][0]["name"] == "bol");
  const std::string text = dump_report(only.document);
  CHECK(text.back() == '\n');
}

TEST_CASE("linear grid and real formatting") {
  const std::vector<double> g = linear_grid(0, 1, 5);
  REQUIRE(g.size() == 5);
  CHECK(g[2] == 0.5);
  CHECK(g[4] == 1.0);
  CHECK_THROWS_AS(linear_grid(0, 1, 1), Error);
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(parse_real_list("0.6,0.8,0") == std::vector<double>{0.6, 0.8, 0.0});
  CHECK(code_of([] { parse_real_list("0.6,x"); }) == ErrorCode::Parse);
}

TEST_CASE("curve CSV") {
  const std::string csv =
      curve_csv(CurveKind::Line, SpherePoint::e0(3), SpherePoint({0, 1, 0}), linear_grid(0, 1, 5));
  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "t,c0,c1,c2");
  CHECK(lines[3].rfind("0.5,0.7071067811865", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);

  const std::string eq =
      curve_csv(CurveKind::Equidistant, SpherePoint({0.6, 0.8, 0}), SpherePoint({0.6, 0, 0.8}), linear_grid(0, 2, 9));
  const std::vector<std::string> el = split_lines(eq);
  CHECK(el[0] == "t,c0,c1,c2,d_s");
  double first = -1.0;
  for (std::size_t i = 1; i < el.size(); ++i) {
    const double ds = std::stod(el[i].substr(el[i].rfind(',') + 1));
    if (first < 0) first = ds;
    CHECK(std::abs(ds - first) <= 1e-9);
  }
  CHECK(code_of([] {
          curve_csv(CurveKind::Line, SpherePoint({0, 1, 0}), SpherePoint({0, -1, 0}), linear_grid(0, 1, 3));
        }) == ErrorCode::Domain);
}

TEST_CASE("factorize JSON") {
  const json j = factorize_json(Operator::identity(3));
  CHECK(j["u"] == json({1.0, 0.0, 0.0}));
  CHECK(j["residual"].get<double>() == 0.0);
  const Operator L = left_translation(SpherePoint({0.6, 0.8, 0}));
  const json k = factorize_json(L);
  CHECK(k["residual"].get<double>() <= 1e-10);
  const Operator back = operator_from_json(k["U"]);
  CHECK((back - Operator::identity(3)).max_norm() <= 1e-10);
  CHECK(code_of([] { operator_from_json(json::parse("[[1,0],[0]]")); }) == ErrorCode::Parse);
  CHECK(code_of([] { operator_from_json(json::parse("{\"a\":1}")); }) == ErrorCode::Parse);
  CHECK(code_of([] { operator_from_json(json::parse("[[1,\"x\"],[0,1]]")); }) == ErrorCode::Parse);
}

TEST_CASE("axiom report text") {
  const std::string t = axiom_report_text(check_bloop_laws(zn_addition(5)));
  CHECK(t.find("bol: pass") != std::string::npos);
  CHECK(t.find("FAIL") == std::string::npos);
}
