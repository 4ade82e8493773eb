#pragma once

#include <optional>
#include <string>

#include "harmonica/criteria.hpp"
#include "harmonica/radius.hpp"

namespace harmonica {

inline constexpr int kDefaultScanSamples = 4096;
inline constexpr int kMinScanSamples = 256;
inline constexpr int kLadderRungs = 32;
/// A minimum within this distance of alpha counts as order alpha (the bound
/// is attained, e.g. by affine maps).
inline constexpr double kOrderSlack = 1e-12;

/// Extremes of the circle quantities on |z| = r.
struct ScanReport {
  double r = 0.0;
  double alpha = 0.0;
  int samples = 0;
  double min_dtheta_arg = 0.0;
  double argmin_dtheta_arg = 0.0;
  double min_dtheta_arg_tangent = 0.0;
  double argmin_dtheta_arg_tangent = 0.0;
  double min_jacobian = 0.0;
  /// Winding of f around 0 and of d/dtheta f around 0, in radians.
  double total_arg_variation = 0.0;
  double total_tangent_variation = 0.0;
  bool refined = false;

  std::string to_json() const;
};

/// Uniform grid of `samples` angles plus trisection refinement around the
/// three smallest grid values of each quantity. Raises degenerate when f or
/// d/dtheta f vanishes on the circle.
ScanReport scan_circle(const HarmonicMap& f, double r, Order alpha, int samples = kDefaultScanSamples);

/// One row per grid angle: `theta,dtheta_arg,dtheta_arg_tangent,jacobian`.
std::string scan_csv(const HarmonicMap& f, double r, int samples = kDefaultScanSamples);

struct Witness {
  double r = 0.0;
  double theta = 0.0;
  double value = 0.0;
  std::string reason;

  std::string to_json() const;
};

struct FullyReport {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// Checks the circles r = rho k / 32, k = 1..32: minimum above alpha - kOrderSlack and
/// winding exactly once.
FullyReport is_fully_starlike(const HarmonicMap& f, double rho, Order alpha, int samples = kDefaultScanSamples);
FullyReport is_fully_convex(const HarmonicMap& f, double rho, Order alpha, int samples = kDefaultScanSamples);
FullyReport is_fully(const HarmonicMap& f, double rho, Order alpha, Property property,
                     int samples = kDefaultScanSamples);

/// Convexity inequality at z in cleared-denominator form. Requires J_f(z) > 0.
bool inequality_23(const HarmonicMap& f, Complex z, Order alpha);
/// Starlikeness inequality at z != 0 in cleared-denominator form. Requires J_f(z) > 0.
bool inequality_27(const HarmonicMap& f, Complex z, Order alpha);

/// Largest r such that the ladder check holds up to r, to 1e-5 (the lower
/// end of the final bracket). Raises holds_to_limit when the property holds
/// at 1 - 1e-3.
RadiusResult empirical_radius(const HarmonicMap& f, Order alpha, Property property,
                              int samples = kDefaultScanSamples);

}  // namespace harmonica
