#include "sphereloop/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

#include "sphereloop/error.hpp"
#include "sphereloop/orth_group.hpp"

namespace sphereloop {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json witness_json(const std::vector<WitnessEntry>& w) {
  json out = json::object();
  for (const WitnessEntry& e : w) out[e.label] = e.values;
  return out;
}

struct LawSummary {
  std::string name;
  int dim = 0;
  bool predicted = true;
  double tolerance = 0.0;
  long samples = 0;
  long failures = 0;
  double max_res = 0.0;
  double min_res = kInf;
  double worst_res = 0.0;
  std::vector<WitnessEntry> worst;

  bool pass() const { return failures == 0; }
};

class Collector {
 public:
  void add(const IdentityReport& r, int dim) {
    const auto key = std::make_tuple(r.name, dim, r.predicted_holds);
    auto it = index_.find(key);
    if (it == index_.end()) {
      it = index_.emplace(key, laws_.size()).first;
      LawSummary s;
      s.name = r.name;
      s.dim = dim;
      s.predicted = r.predicted_holds;
      s.tolerance = r.tolerance;
      laws_.push_back(std::move(s));
    }
    LawSummary& s = laws_[it->second];
    const bool first = s.samples == 0;
    ++s.samples;
    if (!r.passes()) ++s.failures;
    s.max_res = std::max(s.max_res, r.residual);
    s.min_res = std::min(s.min_res, r.residual);
    // Worst case: the largest residual of a law that should hold, the
    // smallest residual of a predicted failure.
    const bool worse = s.predicted ? r.residual > s.worst_res : r.residual < s.worst_res;
    if (first || worse) {
      s.worst_res = r.residual;
      s.worst = r.witness;
    }
  }

  // Runs one check; precondition and domain errors count as skipped samples.
  template <class F>
  void attempt(const std::string& label, int dim, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Precondition && e.code() != ErrorCode::Domain) throw;
      ++skipped_[{label, dim}];
    }
  }

  void finding(json f) { findings_.push_back(std::move(f)); }

  bool pass() const {
    return std::all_of(laws_.begin(), laws_.end(), [](const LawSummary& s) { return s.pass(); });
  }

  json reports() const {
    json arr = json::array();
    for (const LawSummary& s : laws_) {
      arr.push_back({{"law", s.name},
                     {"dim", s.dim},
                     {"predicted_holds", s.predicted},
                     {"tolerance", s.tolerance},
                     {"samples", s.samples},
                     {"failures", s.failures},
                     {"pass", s.pass()},
                     {"max_residual", number_or_null(s.max_res)},
                     {"min_residual", number_or_null(s.min_res)},
                     {"worst_residual", number_or_null(s.worst_res)},
                     {"worst_witness", witness_json(s.worst)}});
    }
    return arr;
  }

  json skipped() const {
    json arr = json::array();
    for (const auto& [key, count] : skipped_) arr.push_back({{"check", key.first}, {"dim", key.second}, {"count", count}});
    return arr;
  }

  const json& findings() const { return findings_; }

 private:
  std::vector<LawSummary> laws_;
  std::map<std::tuple<std::string, int, bool>, std::size_t> index_;
  std::map<std::pair<std::string, int>, long> skipped_;
  json findings_ = json::array();
};

std::uint64_t stream_index(int suite, int dim, int sample) {
  return (static_cast<std::uint64_t>(suite) << 56) ^ (static_cast<std::uint64_t>(dim) << 40) ^
         static_cast<std::uint64_t>(sample);
}

SpherePoint random_point(std::size_t dim, Rng& rng, const Tolerances& tol) {
  return SpherePoint(random_sphere_point(dim, rng, false, tol), tol);
}

// A point well away from both poles: 1 - |x0| >= margin.
SpherePoint random_generic(std::size_t dim, Rng& rng, const Tolerances& tol, double margin = 1e-3) {
  while (true) {
    HVector v = random_sphere_point(dim, rng, true, tol);
    if (1.0 - std::abs(v.x0()) >= margin) return SpherePoint(v, tol);
  }
}

HVector unit_perp(const SpherePoint& x) { return x.vec().perp() * (1.0 / x.vec().perp_norm()); }

SpherePoint in_plane(const SpherePoint& x, double angle, const Tolerances& tol) {
  return SpherePoint(std::cos(angle) * HVector::e0(x.dim()) + std::sin(angle) * unit_perp(x), tol);
}

std::vector<WitnessEntry> wit(std::initializer_list<std::pair<const char*, const SpherePoint*>> pts) {
  std::vector<WitnessEntry> out;
  for (const auto& [label, p] : pts) out.push_back(witness_of(label, *p));
  return out;
}

struct SuiteContext {
  const VerifyConfig& cfg;
  int suite_id;
  Collector& col;
  const Tolerances& tol() const { return cfg.tol; }
  Rng rng(int dim, int sample) const { return Rng::stream(cfg.seed, stream_index(suite_id, dim, sample)); }
};

// ---------------------------------------------------------------------------

void suite_kikkawa(const SuiteContext& c, int dim) {
  const Tolerances& tol = c.tol();
  const auto n = static_cast<std::size_t>(dim);
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(dim, i);
    const SpherePoint x = random_point(n, rng, tol), y = random_point(n, rng, tol);
    const SpherePoint u = random_point(n, rng, tol), v = random_point(n, rng, tol);
    const double t = rng.uniform(-3.0, 3.0);
    c.col.add(check_lip(x, y, tol), dim);
    c.col.add(check_lip_operator(x, tol), dim);
    c.col.add(check_aip(x, y, tol), dim);
    c.col.add(check_al(x, y, u, v, tol), dim);
    c.col.add(check_left_inner_in_OV(x, y, tol), dim);
    c.col.add(check_lip_inner_inverse(x, y, tol), dim);
    c.col.add(check_kikkawa_inner_inverse(x, y, tol), dim);
    c.col.add(check_bruck_identity(x, y, tol), dim);
    c.col.add(check_trans_ident(x, y, u, tol), dim);
    c.col.attempt("second A_l", dim, [&] { c.col.add(check_second_Al(x, y, u, t, tol), dim); });
    c.col.attempt("odot = odot_alt", dim, [&] {
      c.col.add(make_report("odot = odot_alt", distance(odot(x, y, tol), odot_alt(x, y, tol)), true, 1e-12,
                            wit({{"x", &x}, {"y", &y}})),
                dim);
    });
    c.col.add(make_report("x*y = x odot (x odot y^-1)", compat_residual(x, y, tol), true, tol.eps_res,
                          wit({{"x", &x}, {"y", &y}})),
              dim);
  }
  // Pole inputs.
  Rng rng = c.rng(dim, -1);
  const SpherePoint x = random_point(n, rng, tol);
  const SpherePoint e = SpherePoint::e0(n), m = SpherePoint::minus_e0(n);
  const std::vector<std::pair<SpherePoint, SpherePoint>> poles{{e, x}, {m, x}, {x, m}, {x, e}, {m, m}, {e, m}, {m, e}};
  for (const auto& [p, q] : poles) {
    c.col.add(make_report("x*y = x odot (x odot y^-1)", compat_residual(p, q, tol), true, tol.eps_res,
                          wit({{"x", &p}, {"y", &q}})),
              dim);
    c.col.add(check_lip(p, q, tol), dim);
    c.col.add(check_aip(p, q, tol), dim);
  }
}

void suite_lpa(const SuiteContext& c, int dim) {
  const Tolerances& tol = c.tol();
  const auto n = static_cast<std::size_t>(dim);
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(dim, i);
    const SpherePoint x = random_generic(n, rng, tol);
    const double a = std::acos(x.x0());
    const double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
    c.col.attempt("x^t odot x^s = x^(t+s)", dim, [&] { c.col.add(check_power_addition(x, t, s, tol), dim); });

    const double s_in = rng.uniform() * kPi / a;
    c.col.attempt("(x^s)^t = x^(st)", dim, [&] { c.col.add(check_power_composition(x, s_in, t, tol), dim); });

    // Outside the guaranteed range: keep samples clear of the k*t boundary and of poles.
    const double s_out = rng.uniform() < 0.5 ? kPi / a * (1.0 + 3.0 * rng.uniform()) : -3.0 * kPi / a * rng.uniform();
    const double k = std::nearbyint(s_out * a / (2.0 * kPi));
    const double frac = std::abs(k * t - std::nearbyint(k * t));
    if (std::abs(std::sin(s_out * a)) >= 1e-3 && !(frac > tol.eps_res && frac < 1e-2))
      c.col.attempt("(x^s)^t = x^(st)", dim,
                    [&] { c.col.add(check_power_composition(x, s_out, t, tol), dim); });

    const double ls = rng.uniform(-2.0, 2.0), lt = rng.uniform(-2.0, 2.0);
    c.col.attempt("left power alternative", dim, [&] {
      const LpaReports r = check_lpa(x, ls, lt, tol);
      c.col.add(r.product_form, dim);
      c.col.add(r.translation, dim);
    });

    const Lpa2Reports r2 = check_lpa2(x, tol);
    c.col.add(r2.commutation, dim);
    c.col.add(r2.negation, dim);

    if (dim >= 3) {
      HVector w = random_sphere_point(n, rng, true, tol);
      while (std::abs(w.x0()) < 0.1) w = random_sphere_point(n, rng, true, tol);
      c.col.add(check_left_alternative(SpherePoint(w, tol), tol), dim);
      const HVector vp = random_sphere_point(n, rng, false, tol).perp();
      c.col.add(check_left_alternative(SpherePoint(vp * (1.0 / vp.norm()), tol), tol), dim);
    }
  }
  // Deterministic witnesses.
  Rng rng = c.rng(dim, -1);
  const SpherePoint x = random_generic(n, rng, tol, 0.05);
  const double a = std::acos(x.x0());
  c.col.add(check_power_composition(x, 1.5 * kPi / a, 0.5, tol), dim);
  const LpaReports r = check_lpa(x, 0.5 * kPi / a, 0.5 * kPi / a, tol);
  c.col.add(r.product_form, dim);
  c.col.add(r.translation, dim);
  if (dim >= 3) c.col.add(check_left_alternative(SpherePoint::minus_e0(n), tol), dim);
}

void suite_bol(const SuiteContext& c, int dim) {
  const Tolerances& tol = c.tol();
  const auto n = static_cast<std::size_t>(dim);
  const double angles[] = {kPi / 2, 2 * kPi / 3, 3 * kPi / 4, 5 * kPi / 6};
  int minus_sq_total = 0, minus_sq_failed = 0;
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(dim, i);
    const SpherePoint x = random_point(n, rng, tol), y = random_point(n, rng, tol);
    if (!in_bol_exception_set(x, y, Tolerances{tol.eps_unit, tol.eps_pole, tol.eps_op, 10 * tol.eps_res}))
      c.col.add(check_bol(x, y, tol), dim);

    const SpherePoint g = random_generic(n, rng, tol);
    if (dim >= 3) {
      c.col.add(check_bol(g, SpherePoint::minus_e0(n), tol), dim);
      IdentityReport best = check_bol(g, bol_family_witness(g, angles[0], tol), tol);
      for (double ang : angles) {
        IdentityReport r = check_bol(g, bol_family_witness(g, ang, tol), tol);
        if (r.residual > best.residual) best = std::move(r);
      }
      best.name = "Bol, y odot x = -x^-1 family";
      c.col.add(best, dim);
      IdentityReport r2 = check_bol(g, SpherePoint(-power(g, -2.0, tol).vec(), tol), tol);
      r2.name = "Bol, y = -x^-2";
      ++minus_sq_total;
      if (r2.residual > 10 * tol.eps_res) ++minus_sq_failed;
      c.col.add(r2, dim);
    }

    // Solution set of x odot a = -a^{-1}.
    const SolutionDimension sd = count_solution_dimension(g, tol);
    double defect = std::abs(sd.dimension - (dim - 2));
    if (dim >= 3) {
      if (sd.witnesses.size() < 2) defect += 1.0;
      for (const SpherePoint& w : sd.witnesses)
        if (!solution_set_membership(g, w, tol)) defect += 1.0;
    } else {
      // The circle is a group: any other point misses the target.
      const SpherePoint target(-inverse(g, tol).vec(), tol);
      const SpherePoint z = random_point(n, rng, tol);
      if (distance(z, sd.witnesses.front()) > 1e-6 && distance(odot(z, g, tol), target) <= tol.eps_res) defect += 1.0;
    }
    c.col.add(make_report("x odot a = -a^-1 solution dimension", defect, true, 0.0, {witness_of("a", g)}), dim);

    // Right translations at -e0.
    if (dim >= 3) {
      const HVector np = unit_perp(g);
      HVector yv = random_sphere_point(n, rng, false, tol);
      while ((yv.perp() - inner(np, yv) * np).norm() < 0.5) yv = random_sphere_point(n, rng, false, tol);
      c.col.add(check_discontinuity(g, SpherePoint(yv, tol), tol), dim);
      c.col.add(check_discontinuity(g, in_plane(g, rng.uniform(0.0, 2 * kPi), tol), tol), dim);
    } else {
      c.col.add(check_discontinuity(g, y, tol), dim);
    }

    const double a = std::acos(g.x0());
    const Operator lim = limit_right_translation(g, tol);
    double prev = kInf, last = 0.0;
    bool monotone = true;
    for (double step : {1e-1, 1e-2, 1e-3}) {
      last = (left_translation(power(g, kPi / a * (1.0 - step), tol), tol) - lim).max_norm();
      monotone = monotone && last < prev;
      prev = last;
    }
    c.col.add(make_report("L_{x^t} -> limit operator", monotone ? last : 1.0, true, 1e-2, {witness_of("x", g)}), dim);

    HVector pv = random_sphere_point(n, rng, true, tol);
    while (1.0 + pv.x0() < 0.05) pv = random_sphere_point(n, rng, true, tol);
    const SpherePoint p(pv, tol);
    const double r1 = continuity_probe(p, y, 1e-5, tol), r2 = continuity_probe(p, y, 5e-6, tol);
    c.col.add(make_report("R_y Lipschitz ratio * (1 + x0)", r1 * (1.0 + p.x0()), true, 4.0,
                          wit({{"x", &p}, {"y", &y}})),
              dim);
    c.col.add(make_report("R_y ratio stable under h/2", std::abs(r1 - r2) / r1, true, 0.1,
                          wit({{"x", &p}, {"y", &y}})),
              dim);
  }
  if (minus_sq_total > 0)
    c.col.finding({{"kind", "Bol fails at y = -x^-2"},
                   {"dim", dim},
                   {"count", minus_sq_failed},
                   {"of", minus_sq_total}});
}

void suite_metric(const SuiteContext& c, int dim) {
  const Tolerances& tol = c.tol();
  const auto n = static_cast<std::size_t>(dim);
  long anti_parallel_strict = 0, anti_parallel_total = 0;
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(dim, i);
    const SpherePoint x = random_point(n, rng, tol), y = random_point(n, rng, tol), z = random_point(n, rng, tol);
    const auto xy = wit({{"x", &x}, {"y", &y}});
    const double dxy = dist_s(x, y);
    c.col.add(make_report("d_s symmetric", std::abs(dxy - dist_s(y, x)), true, 1e-12, xy), dim);
    c.col.add(make_report("d_s = |x odot y^-1|_s", std::abs(dxy - dist_s_loop(x, y, tol)), true, tol.eps_res, xy), dim);
    c.col.add(make_report("d_s triangle inequality", std::max(0.0, dxy - dist_s(x, z) - dist_s(z, y)), true,
                          tol.eps_res, wit({{"x", &x}, {"y", &y}, {"z", &z}})),
              dim);

    const TriangleReport tr = triangle_report(x, y, tol);
    c.col.add(tr.report, dim);
    c.col.add(make_report("triangle equality => coplanar", tr.first_slack <= tol.eps_res ? tr.gram : 0.0, true,
                          10 * tol.eps_res, xy),
              dim);

    const Operator A = random_orthogonal_V(n, rng);
    const SpherePoint ax = apply(A, x, tol), ay = apply(A, y, tol);
    c.col.add(make_report("|Ax|_s = |x|_s", std::abs(norm_s(ax) - norm_s(x)), true, tol.eps_res, xy), dim);
    c.col.add(make_report("d_s(Ax, Ay) = d_s(x, y)", std::abs(dist_s(ax, ay) - dxy), true, tol.eps_res, xy), dim);
    c.col.add(make_report("d_s(z odot x, z odot y) = d_s(x, y)",
                          std::abs(dist_s(odot(z, x, tol), odot(z, y, tol)) - dxy), true, tol.eps_res,
                          wit({{"x", &x}, {"y", &y}, {"z", &z}})),
              dim);

    const SpherePoint g = random_generic(n, rng, tol);
    const double alpha = norm_s(g);
    const double beta = rng.uniform(0.01, kPi - 0.01);
    if (std::abs(alpha + beta - kPi) > 0.05) {
      const SpherePoint par = in_plane(g, beta, tol);
      const TriangleReport tp = triangle_report(g, par, tol);
      c.col.add(make_report("parallel perps => triangle equality", std::abs(tp.first_slack), true, tol.eps_res,
                            wit({{"x", &g}, {"y", &par}})),
                dim);
      const SpherePoint anti = in_plane(g, -beta, tol);
      ++anti_parallel_total;
      if (triangle_report(g, anti, tol).first_slack > tol.eps_res) ++anti_parallel_strict;
    }

    const double t = rng.uniform(-4.0, 4.0);
    const double f = fold_norm(t, alpha);
    if (f > 1e-3 && f < kPi - 1e-3)
      c.col.add(make_report("|x^t|_s = fold(|t| |x|_s)", std::abs(norm_s(power(g, t, tol)) - f), true, tol.eps_res,
                            {witness_of("x", g), witness_of("t", t)}),
                dim);

    const double sn = std::sin(dxy);
    if (sn > 1e-3) {
      c.col.attempt("spherical line", dim, [&] {
        const double tl = rng.uniform();
        double r = std::max(distance(line_gamma(x, y, 0.0, tol), x), distance(line_gamma(x, y, 1.0, tol), y));
        const HVector sl = (std::sin((1.0 - tl) * dxy) / sn) * x.vec() + (std::sin(tl * dxy) / sn) * y.vec();
        r = std::max(r, (line_gamma(x, y, tl, tol).vec() - sl).norm());
        c.col.add(make_report("gamma is the great circle through x, y", r, true, tol.eps_res, xy), dim);
      });
    }

    c.col.attempt("equidistant curve", dim, [&] {
      const double base = norm_s(x);
      double r = distance(equi_eta(x, y, 1.0, tol).eta, y);
      for (int k = 0; k <= 8; ++k) {
        const EquiPoint p = equi_eta(x, y, 0.25 * k, tol);
        r = std::max(r, std::abs(dist_s(p.eta, p.nu) - base));
      }
      c.col.add(make_report("d_s(eta(t), nu(t)) = |x|_s", r, true, tol.eps_res, xy), dim);
    });
  }
  if (anti_parallel_total > 0)
    c.col.finding({{"kind", "coplanar anti-parallel perps with strict first inequality"},
                   {"dim", dim},
                   {"count", anti_parallel_strict},
                   {"of", anti_parallel_total}});
}

void suite_semidirect(const SuiteContext& c, int dim) {
  const Tolerances& tol = c.tol();
  const auto n = static_cast<std::size_t>(dim);
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(dim, i);
    const SpherePoint x = random_point(n, rng, tol), y = random_point(n, rng, tol), z = random_point(n, rng, tol);
    const Operator A = random_orthogonal_V(n, rng), B = random_orthogonal_V(n, rng), C = random_orthogonal_V(n, rng);
    const SemidirectElement p(x, A, tol), q(y, B, tol), r(z, C, tol);
    const auto xyz = wit({{"x", &x}, {"y", &y}, {"z", &z}});

    const SemidirectElement pq = semidirect_mul(p, q, tol);
    c.col.add(make_report("to_operator multiplicative",
                          (to_operator(pq, tol) - to_operator(p, tol) * to_operator(q, tol)).max_norm(), true,
                          tol.eps_res, xyz),
              dim);
    const SemidirectElement l = semidirect_mul(pq, r, tol), rr = semidirect_mul(p, semidirect_mul(q, r, tol), tol);
    c.col.add(make_report("semidirect associativity",
                          std::max(distance(l.point(), rr.point()), (l.automorphism() - rr.automorphism()).max_norm()),
                          true, tol.eps_res, xyz),
              dim);
    const SemidirectElement one = semidirect_mul(p, semidirect_inverse(p, tol), tol);
    c.col.add(make_report("p p^-1 = (e0, I)",
                          std::max(distance(one.point(), SpherePoint::e0(n)),
                                   (one.automorphism() - Operator::identity(n)).max_norm()),
                          true, tol.eps_res, xyz),
              dim);

    const Operator M = random_orthogonal(n, rng);
    const Factorization f = factorize(M, tol);
    const Operator lu = left_translation(f.u, tol);
    c.col.add(make_report("factorize round trip", (lu * f.U - M).max_norm(), true, 1e-10, {witness_of("u", f.u)}),
              dim);
    const double in_ov = std::max((f.U.transpose() * f.U - Operator::identity(n)).max_norm(),
                                  (f.U * HVector::e0(n) - HVector::e0(n)).norm());
    c.col.add(make_report("factor U in O(V)", in_ov, true, tol.eps_op, {witness_of("u", f.u)}), dim);
    const Factorization g = factorize(lu * f.U, tol);
    c.col.add(make_report("factorization unique",
                          std::max(distance(g.u, f.u), (g.U - f.U).max_norm()), true, 10 * tol.eps_res,
                          {witness_of("u", f.u)}),
                dim);

    c.col.add(make_report("O(V) acts by automorphisms", automorphism_residual(A, x, y, tol), true, tol.eps_res,
                          wit({{"x", &x}, {"y", &y}})),
              dim);
    // A map that visibly moves e0, so it is far from O(V).
    Operator W = M;
    while ((W * HVector::e0(n) - HVector::e0(n)).norm() < 0.1) W = random_orthogonal(n, rng);
    double worst = 0.0;
    for (int k = 0; k < 8; ++k)
      worst = std::max(worst, automorphism_defect(W, random_point(n, rng, tol), random_point(n, rng, tol), tol));
    c.col.add(make_report("O(H) \\ O(V) is not an automorphism", worst, false, 1e-4,
                          {witness_of("We0", SpherePoint(W * HVector::e0(n), tol))}),
              dim);

    const double t = rng.uniform(-4.0, 4.0);
    c.col.attempt("(Ax)^t = A x^t", dim, [&] {
      c.col.add(make_report("(Ax)^t = A x^t", scalar_equivariance_residual(A, x, t, tol), true, tol.eps_res,
                            {witness_of("x", x), witness_of("t", t)}),
                dim);
    });

    if (dim >= 3) {
      const SpherePoint gx = random_generic(n, rng, tol);
      c.col.add(make_report("|L_x + I|_max >= 1", std::max(0.0, 1.0 - transversal_gap(gx, tol)), true, tol.eps_res,
                            {witness_of("x", gx)}),
                dim);
      c.col.add(make_report("|(L_x + I) v| = 2 on V cap x^perp", std::abs(transversal_witness_gap(gx, tol) - 2.0),
                            true, tol.eps_res, {witness_of("x", gx)}),
                dim);
    }
  }
}

void suite_models(const SuiteContext& c) {
  const Tolerances& tol = c.tol();
  for (int i = 0; i < c.cfg.samples; ++i) {
    Rng rng = c.rng(0, i);
    const SpherePoint x = random_point(3, rng, tol), y = random_point(3, rng, tol);
    const ExtendedComplex zx = stereo_to_plane(x), zy = stereo_to_plane(y);
    c.col.add(make_report("stereographic transfer (chordal)",
                          chordal_distance(stereo_to_plane(odot(x, y, tol)), riemann_odot(zx, zy)), true, tol.eps_res,
                          wit({{"x", &x}, {"y", &y}})),
              3);
    c.col.add(make_report("stereographic round trip", distance(stereo_to_sphere(zx, tol), x), true, 1e-10,
                          {witness_of("x", x)}),
              3);

    const SpherePoint a = random_point(2, rng, tol), b = random_point(2, rng, tol);
    const cplx prod = cplx(a.x0(), a[1]) * cplx(b.x0(), b[1]);
    const SpherePoint ab = odot(a, b, tol);
    c.col.add(make_report("circle odot = complex product", std::abs(cplx(ab.x0(), ab[1]) - prod), true, 1e-12,
                          wit({{"x", &a}, {"y", &b}})),
              2);

    const ComplexPair p = random_complex_pair(rng), q = random_complex_pair(rng);
    const ComplexPair u = random_complex_pair(rng), v = random_complex_pair(rng);
    const std::vector<WitnessEntry> pw{{"x", {p.x0.real(), p.x0.imag(), p.x1.real(), p.x1.imag()}},
                                       {"y", {q.x0.real(), q.x0.imag(), q.x1.real(), q.x1.imag()}}};
    c.col.add(make_report("complex sphere LIP", complex1_lip_defect(p, q, tol), true, tol.eps_res, pw), 2);
    c.col.add(make_report("complex sphere A_l", complex1_al_defect(p, q, u, v, tol), true, tol.eps_res, pw), 2);
    const double ident = std::max(complex1_distance(complex1_odot(ComplexPair::identity(), q, tol), q),
                                  complex1_distance(complex1_odot(q, ComplexPair::identity(), tol), q));
    c.col.add(make_report("complex sphere identity", ident, true, tol.eps_res, pw), 2);
  }
  {
    Rng rng = c.rng(0, -1);
    const AipCounterexample ce = find_aip_counterexample(rng, std::max(c.cfg.samples, 100), tol);
    c.col.add(make_report("complex sphere AIP", ce.defect, false, 1e-4,
                          {{"x", {ce.x.x0.real(), ce.x.x0.imag(), ce.x.x1.real(), ce.x.x1.imag()}},
                           {"y", {ce.y.x0.real(), ce.y.x0.imag(), ce.y.x1.real(), ce.y.x1.imag()}}}),
              2);
  }
  {
    const double poles = std::max(
        chordal_distance(stereo_to_plane(SpherePoint::e0(3)), ExtendedComplex(0.0, 0.0)),
        std::max(stereo_to_plane(SpherePoint::minus_e0(3)).is_infinity() ? 0.0 : 1.0,
                 distance(stereo_to_sphere(ExtendedComplex::infinity(), tol), SpherePoint::minus_e0(3))));
    c.col.add(make_report("stereographic poles", poles, true, 0.0), 3);
  }

  // Finite models; "dim" carries the magma order.
  auto failures = [](const AxiomReport& r) {
    return static_cast<double>(std::count_if(r.axioms.begin(), r.axioms.end(), [](const AxiomResult& a) { return !a.holds; }));
  };
  for (int n = 3; n <= 15; n += 2) {
    const FiniteMagma q = zn_reflection(n);
    c.col.add(make_report("zn reflection quasigroup axioms", failures(check_reflection_axioms(q)), true, 0.0), n);
    c.col.add(make_report("zn point-reflection axioms", failures(check_point_reflection_axioms(q)), true, 0.0), n);
    const FiniteMagma b = quasigroup_to_bloop(q, 0);
    c.col.add(make_report("B-loop laws of the isotope", failures(check_bloop_laws(b)), true, 0.0), n);
    c.col.add(make_report("isotope is Z_n addition", b == zn_addition(n) ? 0.0 : 1.0, true, 0.0), n);
    c.col.add(make_report("B-loop round trip", bloop_to_quasigroup(b) == q ? 0.0 : 1.0, true, 0.0), n);
  }
  for (int n = 1; n <= 4; ++n) {
    double mismatches = 0.0, point_mismatches = 0.0;
    for (const FiniteMagma& m : involutive_row_magmas(n)) {
      const AxiomReport ax = check_reflection_axioms(m);
      if (n <= 3) {
        const AxiomReport pr = check_point_reflection_axioms(m);
        const bool four = pr.get("involutive").holds && pr.get("unique_fixed_point").holds &&
                          pr.get("unique_midpoint").holds && pr.get("conjugate_closure").holds;
        if (four != ax.all_hold()) point_mismatches += 1.0;
      }
      if (!ax.get("left_distributive").holds) continue;
      const bool rq = ax.get("right_quasigroup").holds;
      for (int e = 0; e < n; ++e)
        if (unique_square_roots(m, e).has_value() != rq) mismatches += 1.0;
    }
    c.col.add(make_report("unique square roots <=> right quasigroup", mismatches, true, 0.0), n);
    if (n <= 3)
      c.col.add(make_report("point-reflection axioms <=> reflection quasigroup", point_mismatches, true, 0.0), n);
  }
}

using DimSuite = void (*)(const SuiteContext&, int);

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& VerifyConfig::all_suites() {
  static const std::vector<std::string> s{"kikkawa", "lpa", "bol", "metric", "semidirect", "models"};
  return s;
}

void VerifyConfig::validate() const {
  if (dims.empty()) raise(ErrorCode::InvalidArgument, "verify: at least one dimension is required");
  for (int d : dims)
    if (d < 2 || d > 64) raise(ErrorCode::InvalidArgument, "verify: dimensions must lie in [2, 64]");
  if (samples < 1) raise(ErrorCode::InvalidArgument, "verify: samples must be >= 1");
  const auto& all = all_suites();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (std::find(all.begin(), all.end(), suites[i]) == all.end())
      raise(ErrorCode::InvalidArgument, "verify: unknown suite '" + suites[i] + "'");
    if (std::find(suites.begin(), suites.begin() + static_cast<std::ptrdiff_t>(i), suites[i]) !=
        suites.begin() + static_cast<std::ptrdiff_t>(i))
      raise(ErrorCode::InvalidArgument, "verify: suite '" + suites[i] + "' listed twice");
  }
  try {
    tol.validate();
  } catch (const Error& e) {
    raise(ErrorCode::InvalidArgument, e.what());
  }
}

VerifyConfig VerifyConfig::from_json(const json& j) {
  VerifyConfig c;
  try {
    if (!j.is_object()) raise(ErrorCode::InvalidArgument, "verify config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "dims") {
        c.dims = value.get<std::vector<int>>();
      } else if (key == "samples") {
        c.samples = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "suites") {
        c.suites = value.get<std::vector<std::string>>();
      } else if (key == "tolerances") {
        for (const auto& [tk, tv] : value.items()) {
          if (tk == "eps_unit") c.tol.eps_unit = tv.get<double>();
          else if (tk == "eps_pole") c.tol.eps_pole = tv.get<double>();
          else if (tk == "eps_op") c.tol.eps_op = tv.get<double>();
          else if (tk == "eps_res") c.tol.eps_res = tv.get<double>();
          else raise(ErrorCode::InvalidArgument, "verify config: unknown tolerance '" + tk + "'");
        }
      } else {
        raise(ErrorCode::InvalidArgument, "verify config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidArgument, std::string("verify config: ") + e.what());
  }
  c.validate();
  return c;
}

json VerifyConfig::to_json() const {
  std::vector<std::string> s = suites;
  if (s.empty()) s = VerifyConfig::all_suites();
  return {{"dims", dims},
          {"samples", samples},
          {"seed", seed},
          {"suites", s},
          {"tolerances",
           {{"eps_unit", tol.eps_unit}, {"eps_pole", tol.eps_pole}, {"eps_op", tol.eps_op}, {"eps_res", tol.eps_res}}}};
}

VerifyResult run_verify(const VerifyConfig& config) {
  config.validate();
  const auto& all = VerifyConfig::all_suites();
  const std::vector<std::pair<std::string, DimSuite>> per_dim{{"kikkawa", suite_kikkawa},
                                                              {"lpa", suite_lpa},
                                                              {"bol", suite_bol},
                                                              {"metric", suite_metric},
                                                              {"semidirect", suite_semidirect}};
  const auto selected = [&](const std::string& s) {
    return config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end();
  };

  VerifyResult out;
  out.pass = true;
  json suites = json::array();
  for (std::size_t id = 0; id < all.size(); ++id) {
    const std::string& name = all[id];
    if (!selected(name)) continue;
    Collector col;
    const SuiteContext ctx{config, static_cast<int>(id) + 1, col};
    if (name == "models") {
      suite_models(ctx);
    } else {
      const DimSuite fn = std::find_if(per_dim.begin(), per_dim.end(), [&](const auto& p) { return p.first == name; })->second;
      for (int d : config.dims) fn(ctx, d);
    }
    const bool pass = col.pass();
    out.pass = out.pass && pass;
    suites.push_back({{"name", name},
                      {"pass", pass},
                      {"reports", col.reports()},
                      {"skipped", col.skipped()},
                      {"findings", col.findings()}});
  }
  out.document = {{"version", kReportVersion},
                  {"library_version", kLibraryVersion},
                  {"config", config.to_json()},
                  {"suites", std::move(suites)},
                  {"pass", out.pass}};
  return out;
}

std::string dump_report(const json& document) { return document.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> linear_grid(double t0, double t1, int steps) {
  if (steps < 2) raise(ErrorCode::InvalidArgument, "curve: steps must be >= 2");
  if (!std::isfinite(t0) || !std::isfinite(t1)) raise(ErrorCode::InvalidArgument, "curve: t-range must be finite");
  std::vector<double> ts(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) ts[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * i / (steps - 1);
  ts.back() = t1;
  return ts;
}

std::string curve_csv(CurveKind kind, const SpherePoint& x, const SpherePoint& y, const std::vector<double>& ts,
                      const Tolerances& tol) {
  if (x.dim() != y.dim()) raise(ErrorCode::Dimension, "curve: points of different dimension");
  const std::size_t n = x.dim();
  std::string out = "t";
  for (std::size_t i = 0; i < n; ++i) out += ",c" + std::to_string(i);
  if (kind == CurveKind::Equidistant) out += ",d_s";
  out += '\n';
  for (double t : ts) {
    out += format_real(t);
    SpherePoint p = x;
    double ds = 0.0;
    if (kind == CurveKind::Equidistant) {
      const EquiPoint e = equi_eta(x, y, t, tol);
      p = e.eta;
      ds = dist_s(e.eta, e.nu);
    } else if (kind == CurveKind::Line) {
      p = line_gamma(x, y, t, tol);
    } else {
      p = equi_eta(x, y, t, tol).nu;
    }
    for (std::size_t i = 0; i < n; ++i) out += "," + format_real(p[i]);
    if (kind == CurveKind::Equidistant) out += "," + format_real(ds);
    out += '\n';
  }
  return out;
}

Operator operator_from_json(const json& j) {
  if (!j.is_array() || j.empty()) raise(ErrorCode::Parse, "matrix must be a non-empty JSON array of rows");
  const std::size_t n = j.size();
  std::vector<double> a;
  a.reserve(n * n);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != n) raise(ErrorCode::Parse, "matrix must be square");
    for (const json& v : row) {
      if (!v.is_number()) raise(ErrorCode::Parse, "matrix entries must be numbers");
      a.push_back(v.get<double>());
    }
  }
  if (n < 2) raise(ErrorCode::Dimension, "matrix dimension must be >= 2");
  return Operator(n, std::move(a));
}

json factorize_json(const Operator& A, const Tolerances& tol) {
  const Factorization f = factorize(A, tol);
  const std::size_t n = A.dim();
  const double residual = (left_translation(f.u, tol) * f.U - A).max_norm();
  std::vector<double> u(f.u.vec().coords().begin(), f.u.vec().coords().end());
  json U = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = f.U(r, c) == 0.0 ? 0.0 : f.U(r, c);
    U.push_back(row);
  }
  for (double& v : u)
    if (v == 0.0) v = 0.0;
  return {{"u", u}, {"U", U}, {"residual", residual}};
}

std::string axiom_report_text(const AxiomReport& report) {
  std::ostringstream os;
  for (const AxiomResult& a : report.axioms) {
    os << a.name << ": " << (a.holds ? "pass" : "FAIL");
    if (!a.holds && !a.counterexample.empty()) {
      os << " (counterexample";
      for (int v : a.counterexample) os << ' ' << v;
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) raise(ErrorCode::Parse, "not a number: '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      raise(ErrorCode::Parse, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) raise(ErrorCode::Parse, "empty coordinate list");
  return out;
}

}  // namespace sphereloop
