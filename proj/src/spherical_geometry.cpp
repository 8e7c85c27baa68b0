#include "sphereloop/spherical_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphereloop/error.hpp"

namespace sphereloop {

namespace {

constexpr double kPi = std::numbers::pi;

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

double norm_s(const SpherePoint& x) { return clamped_acos(x.x0()); }

double dist_s(const SpherePoint& x, const SpherePoint& y) {
  if (x.dim() != y.dim()) raise(ErrorCode::Dimension, "sphere points of different dimension");
  return clamped_acos(inner(x.vec(), y.vec()));
}

double dist_s_loop(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  return norm_s(odot(x, inverse(y, tol), tol));
}

TriangleReport triangle_report(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const double nx = norm_s(x), ny = norm_s(y);
  const double nxy = norm_s(odot(x, y, tol));
  const double middle = kPi - std::abs(nx + ny - kPi);

  TriangleReport t{make_report("triangle inequality", std::max(0.0, nxy - middle), true, tol.eps_res,
                               {witness_of("x", x), witness_of("y", y)})};
  t.first_slack = middle - nxy;
  t.second_slack = nx + ny - middle;
  t.cos_slack = x.vec().perp_norm() * y.vec().perp_norm() - inner(x.vec().perp(), y.vec().perp());
  t.gram = perp_gram_determinant(x.vec(), y.vec());
  return t;
}

double fold_norm(double t, double theta) {
  const double a = std::abs(t) * theta;
  const double m = std::fmod(a + kPi, 2.0 * kPi);
  return std::abs(m - kPi);
}

SpherePoint line_gamma(const SpherePoint& x, const SpherePoint& y, double t, const Tolerances& tol) {
  if (x.dim() != y.dim()) raise(ErrorCode::Dimension, "sphere points of different dimension");
  if ((x.vec() + y.vec()).norm() <= tol.eps_pole)
    raise(ErrorCode::Domain, "no unique line: x and y are antipodal");
  const SpherePoint step = odot(inverse(x, tol), y, tol);
  if (step.is_antipode()) raise(ErrorCode::Domain, "no unique line: x^{-1} odot y is -e0");
  return odot(x, power(step, t, tol), tol);
}

SpherePoint equi_base(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  if (x.dim() != y.dim()) raise(ErrorCode::Dimension, "sphere points of different dimension");
  if ((x.vec() + apply_J(y.vec())).norm() <= tol.eps_pole)
    raise(ErrorCode::Domain, "equidistant curve: x = -y^{-1}");
  const SpherePoint yx = odot(y, x, tol);
  if ((odot(yx, inverse(y, tol), tol).vec() + y.vec()).norm() <= tol.eps_pole)
    raise(ErrorCode::Domain, "equidistant curve: (y odot x) odot y^{-1} = -y");
  SpherePoint w = odot(y, odot(inverse(yx, tol), y, tol), tol);
  if (!w.is_generic()) raise(ErrorCode::Domain, "equidistant curve: base point w is not generic");
  return w;
}

EquiPoint equi_eta(const SpherePoint& x, const SpherePoint& y, double t, const Tolerances& tol) {
  const SpherePoint nu = power(equi_base(x, y, tol), t, tol);
  return {odot(nu, x, tol), nu};
}

CurveSample sample_curve(CurveKind kind, const SpherePoint& x, const SpherePoint& y, const std::vector<double>& ts,
                         const Tolerances& tol) {
  CurveSample s{kind, x, y, ts, {}};
  s.points.reserve(ts.size());
  for (double t : ts) {
    switch (kind) {
      case CurveKind::Line: s.points.push_back(line_gamma(x, y, t, tol)); break;
      case CurveKind::Equidistant: s.points.push_back(equi_eta(x, y, t, tol).eta); break;
      case CurveKind::BaseLine: s.points.push_back(equi_eta(x, y, t, tol).nu); break;
    }
  }
  return s;
}

}  // namespace sphereloop
