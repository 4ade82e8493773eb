#include "harmonica/harmonic_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "harmonica/error.hpp"

namespace harmonica {

HarmonicMap::HarmonicMap(TruncatedSeries h, TruncatedSeries g, std::string name)
    : h_(std::move(h)), g_(std::move(g)), name_(std::move(name)) {
  if (h_.order() != g_.order())
    throw Error(ErrorCode::invalid_argument, "HarmonicMap: h and g must share the truncation order");
}

HarmonicMap HarmonicMap::series_only() const {
  return HarmonicMap(h_.without_family(), g_.without_family(), name_);
}

MapJet map_jet(const HarmonicMap& f, Complex z, double tol) {
  return {z, jet(f.h(), z, tol), jet(f.g(), z, tol)};
}

MapJet map_jet_series(const HarmonicMap& f, Complex z, double tol) {
  return {z, jet_series(f.h(), z, tol), jet_series(f.g(), z, tol)};
}

Complex eval(const HarmonicMap& f, Complex z, double tol) {
  return evaluate(f.h(), z, tol) + std::conj(evaluate(f.g(), z, tol));
}

Complex eval_series(const HarmonicMap& f, Complex z, double tol) {
  return evaluate_series(f.h(), z, tol) + std::conj(evaluate_series(f.g(), z, tol));
}

double jacobian(const MapJet& j) { return std::norm(j.h.d1) - std::norm(j.g.d1); }

double jacobian(const HarmonicMap& f, Complex z) { return jacobian(map_jet(f, z)); }

Complex dilatation(const HarmonicMap& f, Complex z) {
  const MapJet j = map_jet(f, z);
  if (std::abs(j.h.d1) < 1e-300) throw Error(ErrorCode::degenerate, "dilatation: h' vanishes");
  return j.g.d1 / j.h.d1;
}

namespace {

void check_circle(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "circle radius must lie in (0, 1)");
}

}  // namespace

double dtheta_arg(const MapJet& j) {
  const Complex value = j.value();
  const double scale = std::max({std::abs(j.h.value), std::abs(j.g.value), std::abs(j.z)});
  if (!(std::abs(value) > 1e-13 * scale)) throw Error(ErrorCode::degenerate, "f vanishes on the circle");
  const Complex num = j.z * j.h.d1 - std::conj(j.z * j.g.d1);
  return (num / value).real();
}

double dtheta_arg(const HarmonicMap& f, double r, double theta) {
  check_circle(r);
  return dtheta_arg(map_jet(f, std::polar(r, theta)));
}

double dtheta_arg_tangent(const MapJet& j) {
  const Complex zh1 = j.z * j.h.d1;
  const Complex zg1 = j.z * j.g.d1;
  const Complex z2 = j.z * j.z;
  const Complex den = zh1 - std::conj(zg1);
  const double scale = std::max(std::abs(zh1), std::abs(zg1));
  if (!(std::abs(den) > 1e-13 * scale)) throw Error(ErrorCode::degenerate, "d/dtheta f vanishes on the circle");
  const Complex num = zh1 + z2 * j.h.d2 + std::conj(zg1 + z2 * j.g.d2);
  return (num / den).real();
}

double dtheta_arg_tangent(const HarmonicMap& f, double r, double theta) {
  check_circle(r);
  return dtheta_arg_tangent(map_jet(f, std::polar(r, theta)));
}

HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F) {
  std::string name;
  if (!f.name().empty() && !F.name().empty()) name = f.name() + "*" + F.name();
  return HarmonicMap(hadamard(f.h(), F.h()), hadamard(f.g(), F.g()), std::move(name));
}

HarmonicMap scale(const HarmonicMap& f, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::radius_guard, "scale: r must lie in (0, 1]");
  if (r == 1.0) return f;
  return HarmonicMap(dilate(f.h(), r), dilate(f.g(), r), f.name());
}

HarmonicMap alexander(const HarmonicMap& f) {
  return HarmonicMap(alexander_integrate(f.h(), false), alexander_integrate(f.g(), true),
                     f.name().empty() ? std::string{} : "alexander(" + f.name() + ")");
}

HarmonicMap alexander_inverse(const HarmonicMap& F) {
  const TruncatedSeries g = z_derivative(F.g());
  return HarmonicMap(z_derivative(F.h()), linear_combination(-1.0, g, 0.0, g), {});
}

TruncatedSeries analytic_slice(const HarmonicMap& f, Complex eps) {
  if (std::abs(std::abs(eps) - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_argument, "analytic_slice: eps must be unimodular");
  return linear_combination(1.0, f.h(), eps, f.g());
}

SensePreservingReport sense_preserving_on(const HarmonicMap& f, double r, int samples) {
  check_circle(r);
  if (samples < 8) throw Error(ErrorCode::invalid_argument, "sense_preserving_on: need at least 8 samples");
  const int rings = std::max(16, samples / 8);
  SensePreservingReport report;
  report.witness = 0.0;
  report.min_jacobian = jacobian(f, 0.0);
  for (int i = 1; i <= rings; ++i) {
    const double rho = r * i / rings;
    for (int k = 0; k < samples; ++k) {
      const Complex z = std::polar(rho, 2.0 * std::numbers::pi * k / samples);
      const double J = jacobian(f, z);
      if (J < report.min_jacobian) {
        report.min_jacobian = J;
        report.witness = z;
      }
    }
  }
  report.sense_preserving = report.min_jacobian > 0.0;
  return report;
}

}  // namespace harmonica
