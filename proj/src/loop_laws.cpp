#include "sphereloop/loop_laws.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sphereloop/error.hpp"

namespace sphereloop {

namespace {

double vec_residual(const SpherePoint& a, const SpherePoint& b) { return distance(a, b); }

double op_residual(const Operator& a, const Operator& b) { return (a - b).max_norm(); }

void need_dim3(const SpherePoint& x, const char* what) {
  if (x.dim() < 3) raise(ErrorCode::Domain, std::string(what) + " requires dim >= 3");
}

void need_off_poles(const SpherePoint& x, const char* what) {
  if (!x.is_generic()) raise(ErrorCode::Precondition, std::string(what) + ": point must not be +-e0");
}

// Unit vector orthogonal to every vector in `against` (assumed orthonormal),
// built from the standard basis vector with the largest orthogonal remainder.
HVector orthogonal_direction(std::size_t dim, const std::vector<HVector>& against) {
  HVector best(dim);
  double best_norm = -1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    HVector v = HVector::basis(dim, i);
    for (int pass = 0; pass < 2; ++pass)
      for (const HVector& a : against) v = v - inner(a, v) * a;
    const double n = v.norm();
    if (n > best_norm) {
      best_norm = n;
      best = v;
    }
  }
  if (best_norm < 1e-8) raise(ErrorCode::Dimension, "no orthogonal direction left in this dimension");
  return best * (1.0 / best_norm);
}

struct SolutionCircle {
  HVector center;
  double radius;
  HVector normal;  // a^{-1}, unit
};

SolutionCircle solution_circle(const SpherePoint& a, const Tolerances& tol) {
  const SpherePoint ainv = inverse(a, tol);
  return {-a.x0() * ainv.vec(), std::sqrt(std::max(0.0, 1.0 - a.x0() * a.x0())), ainv.vec()};
}

}  // namespace

bool IdentityReport::passes() const {
  if (!std::isfinite(residual)) return false;
  return predicted_holds ? residual <= tolerance : residual > 10.0 * tolerance;
}

IdentityReport make_report(std::string name, double residual, bool predicted_holds, double tolerance,
                           std::vector<WitnessEntry> witness) {
  return IdentityReport{std::move(name), residual, predicted_holds, std::move(witness), tolerance};
}

WitnessEntry witness_of(std::string label, const SpherePoint& p) {
  const auto c = p.vec().coords();
  return {std::move(label), std::vector<double>(c.begin(), c.end())};
}

WitnessEntry witness_of(std::string label, double value) { return {std::move(label), {value}}; }

// ---------------------------------------------------------------------------

IdentityReport check_lip(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lhs = odot(x, odot(inverse(x, tol), y, tol), tol);
  return make_report("LIP", vec_residual(lhs, y), true, tol.eps_res, {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_lip_operator(const SpherePoint& x, const Tolerances& tol) {
  const Operator prod = left_translation(inverse(x, tol), tol) * left_translation(x, tol);
  return make_report("LIP operator", op_residual(prod, Operator::identity(x.dim())), true, tol.eps_op,
                     {witness_of("x", x)});
}

IdentityReport check_aip(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lhs = inverse(odot(x, y, tol), tol);
  const SpherePoint rhs = odot(inverse(x, tol), inverse(y, tol), tol);
  return make_report("AIP", vec_residual(lhs, rhs), true, tol.eps_res, {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_al(const SpherePoint& x, const SpherePoint& y, const SpherePoint& u, const SpherePoint& v,
                        const Tolerances& tol) {
  const Operator A = left_inner(x, y, tol);
  const SpherePoint lhs = apply(A, odot(u, v, tol), tol);
  const SpherePoint rhs = odot(apply(A, u, tol), apply(A, v, tol), tol);
  return make_report("A_l", vec_residual(lhs, rhs), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y), witness_of("u", u), witness_of("v", v)});
}

IdentityReport check_left_inner_in_OV(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const Operator A = left_inner(x, y, tol);
  const std::size_t n = x.dim();
  const HVector e0 = HVector::e0(n);
  const double r = std::max((A.transpose() * A - Operator::identity(n)).max_norm(), (A * e0 - e0).norm());
  return make_report("L(x,y) in O(V)", r, true, tol.eps_op, {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_lip_inner_inverse(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const Operator lhs = left_inner(x, y, tol).transpose();
  const Operator rhs = left_inner(inverse(x, tol), odot(x, y, tol), tol);
  return make_report("L(x,y)^-1 = L(x^-1, xy)", op_residual(lhs, rhs), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_kikkawa_inner_inverse(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const Operator lhs = left_inner(x, y, tol).transpose();
  const Operator rhs = left_inner(y, x, tol);
  return make_report("L(x,y)^-1 = L(y,x)", op_residual(lhs, rhs), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_bruck_identity(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lhs = apply(left_inner(x, y, tol), odot(y, x, tol), tol);
  return make_report("L(x,y)(yx) = xy", vec_residual(lhs, odot(x, y, tol)), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y)});
}

IdentityReport check_trans_ident(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z,
                                 const Tolerances& tol) {
  const SpherePoint lhs = odot(odot(x, y, tol), inverse(odot(x, z, tol), tol), tol);
  const SpherePoint rhs = apply(left_inner(x, y, tol), odot(y, inverse(z, tol), tol), tol);
  return make_report("translation identity", vec_residual(lhs, rhs), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y), witness_of("z", z)});
}

IdentityReport check_second_Al(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z, double t,
                               const Tolerances& tol) {
  if (z.is_antipode()) raise(ErrorCode::Precondition, "second A_l: z must not be -e0");
  const Operator A = left_inner(x, y, tol);
  const SpherePoint az = apply(A, z, tol);
  if (az.is_antipode()) raise(ErrorCode::Precondition, "second A_l: L(x,y)z must not be -e0");
  const SpherePoint lhs = power(az, t, tol);
  const SpherePoint rhs = apply(A, power(z, t, tol), tol);
  return make_report("second A_l", vec_residual(lhs, rhs), true, tol.eps_res,
                     {witness_of("x", x), witness_of("y", y), witness_of("z", z), witness_of("t", t)});
}

// ---------------------------------------------------------------------------

IdentityReport check_power_addition(const SpherePoint& x, double t, double s, const Tolerances& tol) {
  const SpherePoint xt = power(x, t, tol);
  const SpherePoint xs = power(x, s, tol);
  const SpherePoint xts = power(x, t + s, tol);
  if (xt.is_antipode() || xs.is_antipode() || xts.is_antipode())
    raise(ErrorCode::Precondition, "power addition: x^t, x^s and x^(t+s) must avoid -e0");
  return make_report("x^t x^s = x^(t+s)", vec_residual(odot(xt, xs, tol), xts), true, tol.eps_res,
                     {witness_of("x", x), witness_of("t", t), witness_of("s", s)});
}

IdentityReport check_power_composition(const SpherePoint& x, double s, double t, const Tolerances& tol) {
  const SpherePoint xs = power(x, s, tol);
  if (xs.is_antipode()) raise(ErrorCode::Precondition, "power composition: x^s must not be -e0");
  const double a = std::acos(std::clamp(x.x0(), -1.0, 1.0));
  bool predicted = true;
  if (!x.is_identity() && a > 0.0 && !(s >= 0.0 && s < std::numbers::pi / a)) {
    // Outside the guaranteed range x^s lands on the great circle with angle
    // s*a - 2*pi*k, so (x^s)^t = x^{st} exactly when k*t is an integer.
    const double k = std::nearbyint(s * a / (2.0 * std::numbers::pi));
    const double kt = k * t;
    predicted = std::abs(kt - std::nearbyint(kt)) <= tol.eps_res;
  }
  const double r = vec_residual(power(xs, t, tol), power(x, s * t, tol));
  return make_report("(x^s)^t = x^(st)", r, predicted, tol.eps_res,
                     {witness_of("x", x), witness_of("s", s), witness_of("t", t)});
}

// ---------------------------------------------------------------------------

LpaReports check_lpa(const SpherePoint& x, double s, double t, const Tolerances& tol) {
  need_off_poles(x, "left power alternative");
  const SpherePoint xs = power(x, s, tol);
  const SpherePoint xt = power(x, t, tol);
  if (xs.is_antipode() || xt.is_antipode())
    raise(ErrorCode::Precondition, "left power alternative: x^s and x^t must not be -e0");
  const std::size_t n = x.dim();
  const Operator prod = left_translation(xs, tol) * left_translation(xt, tol);
  const Operator form =
      (projector(power(x, 0.5 * (s + t), tol).vec()) * 2.0 - Operator::identity(n)) * Operator::J(n);
  const SpherePoint xst = power(x, s + t, tol);
  std::vector<WitnessEntry> w{witness_of("x", x), witness_of("s", s), witness_of("t", t)};
  return {make_report("L_{x^s}L_{x^t} = (2P_{x^{(s+t)/2}} - I)J", op_residual(prod, form), true, tol.eps_op, w),
          make_report("L_{x^s}L_{x^t} = L_{x^{s+t}}", op_residual(prod, left_translation(xst, tol)),
                      !xst.is_antipode() || n <= 2, tol.eps_op, w)};
}

IdentityReport check_left_alternative(const SpherePoint& x, const Tolerances& tol) {
  need_dim3(x, "left alternative dichotomy");
  const Operator lx = left_translation(x, tol);
  const double r = op_residual(lx * lx, left_translation(odot(x, x, tol), tol));
  return make_report("left alternative", r, std::abs(x.x0()) > tol.eps_pole, tol.eps_op, {witness_of("x", x)});
}

Lpa2Reports check_lpa2(const SpherePoint& x, const Tolerances& tol) {
  need_off_poles(x, "L_{-e0} L_x");
  const std::size_t n = x.dim();
  const Operator lm = left_translation(SpherePoint::minus_e0(n), tol);
  const Operator lx = left_translation(x, tol);
  const Operator lneg = left_translation(SpherePoint(-x.vec(), tol), tol);
  std::vector<WitnessEntry> w{witness_of("x", x)};
  return {make_report("L_{-e0}L_x = L_xL_{-e0}", op_residual(lm * lx, lx * lm), true, tol.eps_op, w),
          make_report("L_xL_{-e0} = L_{-x}", op_residual(lx * lm, lneg), n <= 2, tol.eps_op, w)};
}

// ---------------------------------------------------------------------------

bool in_bol_exception_set(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  if (x.dim() < 3 || !x.is_generic()) return false;
  if (y.is_antipode()) return true;
  // Every y with y odot x = -x^{-1} is an obstruction, including y = -x^{-2}
  // itself: there x odot (y odot x) = -e0 and L_y = -L_x^{-2} fails on V cap x^perp.
  const SpherePoint yx = odot(y, x, tol);
  return (yx.vec() + inverse(x, tol).vec()).norm() <= tol.eps_res;
}

IdentityReport check_bol(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const Operator lx = left_translation(x, tol);
  const Operator lhs = lx * left_translation(y, tol) * lx;
  const Operator rhs = left_translation(odot(x, odot(y, x, tol), tol), tol);
  return make_report("Bol", op_residual(lhs, rhs), !in_bol_exception_set(x, y, tol), tol.eps_res,
                     {witness_of("x", x), witness_of("y", y)});
}

// ---------------------------------------------------------------------------

bool solution_set_membership(const SpherePoint& a, const SpherePoint& x, const Tolerances& tol) {
  need_off_poles(a, "solution set");
  need_dim3(a, "solution set");
  if (x.dim() != a.dim()) raise(ErrorCode::Dimension, "sphere points of different dimension");
  if (x.is_antipode()) return false;
  return std::abs(inner(x.vec(), inverse(a, tol).vec()) + a.x0()) <= tol.eps_res;
}

SpherePoint solution_set_point(const SpherePoint& a, const HVector& direction, const Tolerances& tol) {
  need_off_poles(a, "solution set");
  const SolutionCircle c = solution_circle(a, tol);
  HVector v = direction - inner(direction, c.normal) * c.normal;
  const double n = v.norm();
  if (n < 1e-12) raise(ErrorCode::Degenerate, "direction is parallel to a^{-1}");
  return SpherePoint(c.center + (c.radius / n) * v, tol);
}

SolutionDimension count_solution_dimension(const SpherePoint& a, const Tolerances& tol) {
  need_off_poles(a, "solution dimension");
  const std::size_t n = a.dim();
  const SpherePoint target(-inverse(a, tol).vec(), tol);
  const SpherePoint particular(-power(a, -2.0, tol).vec(), tol);

  SolutionDimension out;
  out.dimension = static_cast<int>(n) - 2;
  out.witnesses.push_back(particular);
  if (n >= 3) {
    const SolutionCircle c = solution_circle(a, tol);
    const HVector p = particular.vec() - c.center;
    const HVector q = orthogonal_direction(n, {c.normal, p * (1.0 / p.norm())});
    out.witnesses.emplace_back(c.center + c.radius * q, tol);
  }
  for (const SpherePoint& w : out.witnesses)
    if (w.is_antipode() || distance(odot(w, a, tol), target) > tol.eps_res)
      raise(ErrorCode::Structural, "solution witness failed verification");
  if (out.witnesses.size() == 2 && distance(out.witnesses[0], out.witnesses[1]) <= tol.eps_res)
    raise(ErrorCode::Structural, "solution witnesses are not distinct");
  return out;
}

SpherePoint bol_family_witness(const SpherePoint& x, double angle, const Tolerances& tol) {
  need_off_poles(x, "Bol witness");
  need_dim3(x, "Bol witness");
  const SolutionCircle c = solution_circle(x, tol);
  HVector p = -power(x, -2.0, tol).vec() - c.center;
  p = p * (1.0 / p.norm());
  const HVector q = orthogonal_direction(x.dim(), {c.normal, p});
  return SpherePoint(c.center + c.radius * (std::cos(angle) * p + std::sin(angle) * q), tol);
}

// ---------------------------------------------------------------------------

Operator limit_right_translation(const SpherePoint& x, const Tolerances& /*tol*/) {
  need_off_poles(x, "limit of L_{x^t}");
  const std::size_t n = x.dim();
  return (projector(x.vec().perp()) * 2.0 - Operator::identity(n)) * Operator::J(n);
}

IdentityReport check_discontinuity(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const SpherePoint lim = apply(limit_right_translation(x, tol), y, tol);
  const double r = (lim.vec() + y.vec()).norm();
  const bool coplanar = perp_gram_determinant(x.vec(), y.vec()) <= tol.eps_res;
  return make_report("lim R_y(x^t) = R_y(-e0)", r, coplanar, tol.eps_res, {witness_of("x", x), witness_of("y", y)});
}

double continuity_probe(const SpherePoint& x, const SpherePoint& y, double h, const Tolerances& tol) {
  if (x.is_antipode()) raise(ErrorCode::Precondition, "continuity probe: x must not be -e0");
  if (!(h > 0.0 && h < 0.1)) raise(ErrorCode::InvalidArgument, "continuity probe: h must lie in (0, 0.1)");
  const std::size_t n = x.dim();
  const SpherePoint base = right_translate(y, x, tol);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    HVector d = HVector::basis(n, i);
    d = d - inner(d, x.vec()) * x.vec();
    const double dn = d.norm();
    if (dn < 1e-6) continue;
    HVector xp = x.vec() + (h / dn) * d;
    xp = xp * (1.0 / xp.norm());
    const SpherePoint moved(xp, tol);
    if (moved.is_antipode()) continue;
    const double step = (xp - x.vec()).norm();
    worst = std::max(worst, distance(right_translate(y, moved, tol), base) / step);
  }
  return worst;
}

}  // namespace sphereloop
