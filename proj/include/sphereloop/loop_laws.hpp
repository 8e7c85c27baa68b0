#pragma once

// Residual checkers for the identities of (S, odot). Every checker returns an
// IdentityReport carrying the measured defect together with the predicted
// outcome for the given inputs, so that callers can assert success *and*
// failure in exactly the places the theory says.

#include <string>
#include <vector>

#include "sphereloop/sphere_loop.hpp"

namespace sphereloop {

struct WitnessEntry {
  std::string label;
  std::vector<double> values;
};

struct IdentityReport {
  std::string name;
  double residual = 0.0;  // max-norm of the defect, >= 0
  bool predicted_holds = true;
  std::vector<WitnessEntry> witness;
  double tolerance = 0.0;

  /// Holds: residual <= tolerance. Fails: residual > 10 * tolerance.
  bool passes() const;
};

IdentityReport make_report(std::string name, double residual, bool predicted_holds, double tolerance,
                           std::vector<WitnessEntry> witness = {});
WitnessEntry witness_of(std::string label, const SpherePoint& p);
WitnessEntry witness_of(std::string label, double value);

// --- Kikkawa laws (hold everywhere) -----------------------------------------

/// x odot (x^{-1} odot y) = y.
IdentityReport check_lip(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// L_{x^{-1}} L_x = I.
IdentityReport check_lip_operator(const SpherePoint& x, const Tolerances& tol = {});
/// (x odot y)^{-1} = x^{-1} odot y^{-1}.
IdentityReport check_aip(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// L(x,y)(u odot v) = L(x,y)u odot L(x,y)v.
IdentityReport check_al(const SpherePoint& x, const SpherePoint& y, const SpherePoint& u,
                        const SpherePoint& v, const Tolerances& tol = {});
/// L(x,y) in O(V).
IdentityReport check_left_inner_in_OV(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// L(x,y)^{-1} = L(x^{-1}, x odot y).
IdentityReport check_lip_inner_inverse(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// L(x,y)^{-1} = L(y,x).
IdentityReport check_kikkawa_inner_inverse(const SpherePoint& x, const SpherePoint& y,
                                           const Tolerances& tol = {});
/// L(x,y)(y odot x) = x odot y.
IdentityReport check_bruck_identity(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// (x odot y) odot (x odot z)^{-1} = L(x,y)(y odot z^{-1}).
IdentityReport check_trans_ident(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z,
                                 const Tolerances& tol = {});
/// (L(x,y) z)^t = L(x,y) z^t.  Requires z and L(x,y)z off the antipode.
IdentityReport check_second_Al(const SpherePoint& x, const SpherePoint& y, const SpherePoint& z, double t,
                               const Tolerances& tol = {});

// --- power laws ---------------------------------------------------------------

/// x^t odot x^s = x^{t+s}; requires x^t, x^s, x^{t+s} off the antipode.
IdentityReport check_power_addition(const SpherePoint& x, double t, double s, const Tolerances& tol = {});
/// (x^s)^t = x^{st}; predicted to hold iff 0 <= s < pi / acos(x0).
IdentityReport check_power_composition(const SpherePoint& x, double s, double t, const Tolerances& tol = {});

// --- left power alternative ---------------------------------------------------

struct LpaReports {
  IdentityReport product_form;  // L_{x^s} L_{x^t} = (2 P_{x^{(s+t)/2}} - I) J
  IdentityReport translation;   // L_{x^s} L_{x^t} = L_{x^{s+t}}, holds iff x^{s+t} != -e0
};

LpaReports check_lpa(const SpherePoint& x, double s, double t, const Tolerances& tol = {});

/// L_x L_x = L_{x odot x}; predicted to hold iff x is not in V. Needs dim >= 3.
IdentityReport check_left_alternative(const SpherePoint& x, const Tolerances& tol = {});

struct Lpa2Reports {
  IdentityReport commutation;  // L_{-e0} L_x = L_x L_{-e0}
  IdentityReport negation;     // L_x L_{-e0} = L_{-x}; fails in dim >= 3
};

Lpa2Reports check_lpa2(const SpherePoint& x, const Tolerances& tol = {});

// --- Bol ----------------------------------------------------------------------

/// True when (x, y) lies in the exception set where the Bol identity fails.
bool in_bol_exception_set(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});
/// L_x L_y L_x = L_{x odot (y odot x)}.
IdentityReport check_bol(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

// --- the equation x odot a = -a^{-1} -------------------------------------------

/// x solves x odot a = -a^{-1}: |<x, a^{-1}> + a0| <= eps_res and x != -e0.
bool solution_set_membership(const SpherePoint& a, const SpherePoint& x, const Tolerances& tol = {});

/// Point of the solution set: center -a0 a^{-1} plus radius sqrt(1 - a0^2)
/// times the unit direction obtained by projecting `direction` onto (a^{-1})^perp.
SpherePoint solution_set_point(const SpherePoint& a, const HVector& direction, const Tolerances& tol = {});

struct SolutionDimension {
  int dimension = 0;                   // dim - 2
  std::vector<SpherePoint> witnesses;  // verified distinct solutions
};

/// Dimension of the solution sphere of x odot a = -a^{-1}, certified by distinct
/// verified solutions (two when dim >= 3, the single -a^{-2} when dim = 2).
SolutionDimension count_solution_dimension(const SpherePoint& a, const Tolerances& tol = {});

/// Member y of the solution set of y odot x = -x^{-1} at angle `angle` from -x^{-2}
/// on the solution circle; a failure witness for the Bol identity. Needs dim >= 3.
SpherePoint bol_family_witness(const SpherePoint& x, double angle, const Tolerances& tol = {});

// --- continuity ---------------------------------------------------------------

/// (2 P_{x_perp} - I) J, the limit of L_{x^t} as x^t runs into -e0.
Operator limit_right_translation(const SpherePoint& x, const Tolerances& tol = {});

/// |lim L_{x^t} y + y|; predicted to vanish iff x, y, e0 are coplanar with 0.
IdentityReport check_discontinuity(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol = {});

/// max_i |R_y(x_i') - R_y(x)| / |x_i' - x| over renormalized coordinate
/// perturbations x_i' = x + h * (tangential part of e_i).
double continuity_probe(const SpherePoint& x, const SpherePoint& y, double h, const Tolerances& tol = {});

}  // namespace sphereloop
