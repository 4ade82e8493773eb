#pragma once

#include <string>

#include "harmonica/series.hpp"

namespace harmonica {

/// f = h + conj(g) on the unit disk, with h and g stored as truncated series
/// of a common order. When both parts carry a CoefficientFamily the map has a
/// closed form and is evaluated exactly; the stored coefficients remain
/// available as the cross-check path.
class HarmonicMap {
 public:
  HarmonicMap(TruncatedSeries h, TruncatedSeries g, std::string name = {});

  const TruncatedSeries& h() const { return h_; }
  const TruncatedSeries& g() const { return g_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return h_.order(); }
  bool has_closed_form() const { return h_.family().has_value() && g_.family().has_value(); }

  HarmonicMap renamed(std::string name) const { return HarmonicMap(h_, g_, std::move(name)); }
  /// Drops the closed forms so every evaluation goes through the coefficients.
  HarmonicMap series_only() const;

 private:
  TruncatedSeries h_;
  TruncatedSeries g_;
  std::string name_;
};

/// h, h', h'' and g, g', g'' at one point.
struct MapJet {
  Complex z;
  SeriesJet h;
  SeriesJet g;

  Complex value() const { return h.value + std::conj(g.value); }
};

MapJet map_jet(const HarmonicMap& f, Complex z, double tol = kDefaultTailTolerance);
MapJet map_jet_series(const HarmonicMap& f, Complex z, double tol = kDefaultTailTolerance);

Complex eval(const HarmonicMap& f, Complex z, double tol = kDefaultTailTolerance);
Complex eval_series(const HarmonicMap& f, Complex z, double tol = kDefaultTailTolerance);

/// |h'|^2 - |g'|^2
double jacobian(const HarmonicMap& f, Complex z);
double jacobian(const MapJet& j);

/// g'/h'; raises degenerate when h' vanishes.
Complex dilatation(const HarmonicMap& f, Complex z);

/// d/dtheta arg f(r e^{i theta}) = Re[(z h' - conj(z g')) / (h + conj(g))].
double dtheta_arg(const HarmonicMap& f, double r, double theta);
double dtheta_arg(const MapJet& j);

/// d/dtheta arg(d/dtheta f(r e^{i theta}))
///   = Re[(z h' + z^2 h'' + conj(z g' + z^2 g'')) / (z h' - conj(z g'))].
double dtheta_arg_tangent(const HarmonicMap& f, double r, double theta);
double dtheta_arg_tangent(const MapJet& j);

/// h*H + conj(g*G)
HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F);

/// f(rz)/r for 0 < r <= 1.
HarmonicMap scale(const HarmonicMap& f, double r);

/// H + conj(G) with zH' = h and zG' = -g.
HarmonicMap alexander(const HarmonicMap& f);

/// Inverse of alexander: h = zH', g = -zG'.
HarmonicMap alexander_inverse(const HarmonicMap& F);

/// h + eps g for |eps| = 1.
TruncatedSeries analytic_slice(const HarmonicMap& f, Complex eps);

struct SensePreservingReport {
  bool sense_preserving = true;
  Complex witness;
  double min_jacobian = 0.0;
};

/// Samples the closed disk |z| <= r on a polar grid (samples angles per ring)
/// and reports the point with the smallest Jacobian.
SensePreservingReport sense_preserving_on(const HarmonicMap& f, double r, int samples);

}  // namespace harmonica
