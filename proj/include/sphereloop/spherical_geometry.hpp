#pragma once

#include <vector>

#include "sphereloop/loop_laws.hpp"

namespace sphereloop {

/// |x|_s = acos(x0), in [0, pi].
double norm_s(const SpherePoint& x);

/// d_s(x, y) = acos <x, y>.
double dist_s(const SpherePoint& x, const SpherePoint& y);
/// d_s through the loop: |x odot y^{-1}|_s. Same value, different route.
double dist_s_loop(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

struct TriangleReport {
  IdentityReport report;      // |x odot y|_s <= pi - | |x|_s + |y|_s - pi |
  double first_slack = 0.0;   // (pi - | |x|_s + |y|_s - pi |) - |x odot y|_s
  double second_slack = 0.0;  // |x|_s + |y|_s - (pi - | |x|_s + |y|_s - pi |)
  double cos_slack = 0.0;     // |x_perp||y_perp| - <x_perp, y_perp>, the Cauchy-Schwarz gap
  double gram = 0.0;          // Gram determinant of (x_perp, y_perp)
};

TriangleReport triangle_report(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// Even 2pi-periodic fold of |t| * theta into [0, pi].
double fold_norm(double t, double theta);

/// gamma(t) = x odot (x^{-1} odot y)^t, the great circle with gamma(0) = x, gamma(1) = y.
SpherePoint line_gamma(const SpherePoint& x, const SpherePoint& y, double t, const Tolerances& tol = {});

struct EquiPoint {
  SpherePoint eta;
  SpherePoint nu;
};

/// Base point w = y odot ((y odot x)^{-1} odot y) of the equidistant curve.
SpherePoint equi_base(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// eta(t) = w^t odot x and nu(t) = w^t.
EquiPoint equi_eta(const SpherePoint& x, const SpherePoint& y, double t, const Tolerances& tol = {});

enum class CurveKind { Line, Equidistant, BaseLine };

struct CurveSample {
  CurveKind kind;
  SpherePoint x;
  SpherePoint y;
  std::vector<double> ts;
  std::vector<SpherePoint> points;
};

CurveSample sample_curve(CurveKind kind, const SpherePoint& x, const SpherePoint& y, const std::vector<double>& ts,
                         const Tolerances& tol = {});

}  // namespace sphereloop
