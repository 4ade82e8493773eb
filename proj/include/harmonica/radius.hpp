#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "harmonica/criteria.hpp"

namespace harmonica {

/// The seven parametric radius equations, each a fixed polynomial in r whose
/// coefficients depend on the order alpha.
enum class RadiusEquationId { Eq3_2, Eq3_5, Eq3_6, Eq3_7, Eq4_1, Eq4_2, Eq4_3 };

inline constexpr std::array<RadiusEquationId, 7> kAllRadiusEquations = {
    RadiusEquationId::Eq3_2, RadiusEquationId::Eq3_5, RadiusEquationId::Eq3_6, RadiusEquationId::Eq3_7,
    RadiusEquationId::Eq4_1, RadiusEquationId::Eq4_2, RadiusEquationId::Eq4_3};

std::string to_string(RadiusEquationId id);
RadiusEquationId parse_radius_equation(const std::string& text);

enum class RadiusSource { equation_root, closed_form, empirical_scan };
std::string to_string(RadiusSource s);

struct RadiusResult {
  std::string id;
  double alpha = 0.0;
  double radius = 0.0;
  double residual = 0.0;
  std::array<double, 2> bracket{0.0, 1.0};
  int iterations = 0;
  RadiusSource source = RadiusSource::equation_root;
  /// Optional extra datum, e.g. the binding u of a minimisation.
  double binding = 0.0;

  /// `{"id","alpha","radius","residual","bracket","iterations","source"}`
  std::string to_json() const;
};

/// Value of the equation in its factored form.
double equation_value(RadiusEquationId id, Order alpha, double r);

inline constexpr double kMinSolveTolerance = 1e-14;
inline constexpr int kRootScanPoints = 10000;

/// The unique sign change of fn on (0, 1), located on a 10^4-point grid and
/// bisected to tol. Raises no_root or multiple_roots otherwise, and
/// not_converged when the residual is not below 1e-12.
RadiusResult find_unique_root(const std::function<double(double)>& fn, double tol, const std::string& name);

/// The unique root of the equation in (0, 1). Raises no_root or
/// multiple_roots unless the grid shows exactly one sign change.
RadiusResult solve_radius(RadiusEquationId id, Order alpha, double tol = kMinSolveTolerance);

/// Radius of starlikeness of order alpha for the half-plane map.
RadiusResult half_plane_starlike_radius(Order alpha);
/// Radius of convexity of order alpha for the half-plane map.
RadiusResult half_plane_convex_radius(Order alpha);

/// The cubic-in-u polynomial governing starlikeness of the half-plane map.
double half_plane_starlike_p(double r, double u);
/// Solves half_plane_starlike_p(r, sqrt((5+r^2)/6)) = 0 for r.
RadiusResult half_plane_starlike_radius_alpha0_check();

/// The convexity polynomial of the half-plane map of order alpha.
double half_plane_convex_p(double r, double u, double alpha);
/// Local minimiser of half_plane_convex_p in u (unclamped).
double half_plane_convex_u0(double r, double alpha);

/// The degree-8 convexity polynomial of L*L.
double LL_q(double r, double u);
/// Largest r with min_{u in [-1,1]} LL_q(r, u) >= 0; binding holds the minimising u.
RadiusResult LL_convex_radius();

/// The rational expression that equals alpha at the sharp radius.
double sharpness_value(RadiusEquationId id, double r);

enum class ExtremalId { x31, x35, x42, x46 };
std::string to_string(ExtremalId id);
/// Closed-form Jacobian of the extremal map on the positive real axis.
double jacobian_extremal(ExtremalId id, double r);

/// Coefficient-bound family and property whose sum equation defines the id.
struct PairedFamily {
  BoundFamily family;
  Property property;
};
PairedFamily paired_family(RadiusEquationId id);

/// One row per (equation, alpha), sorted by equation then alpha.
struct TableRow {
  RadiusEquationId id;
  RadiusResult result;
  double sharpness;
};
std::vector<TableRow> radius_table(const std::vector<RadiusEquationId>& ids, std::vector<double> alphas);
/// Header `equation,alpha,radius,residual,sharpness`.
std::string table_csv(const std::vector<TableRow>& rows);

/// Header `id,alpha,radius,residual,bracket_lo,bracket_hi,iterations,source`.
std::string radius_csv(const std::vector<RadiusResult>& results);

}  // namespace harmonica
