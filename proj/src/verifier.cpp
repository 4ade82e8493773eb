#include "harmonica/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVariationTolerance = 1e-6;
constexpr double kRefineChange = 1e-9;

Complex dtheta_f(const MapJet& j) {
  return Complex(0.0, 1.0) * (j.z * j.h.d1 - std::conj(j.z * j.g.d1));
}

struct Refined {
  double value;
  double theta;
  bool converged;
};

// Trisection on [a, b] for a locally unimodal quantity.
Refined trisect(const std::function<double(double)>& q, double a, double b, double best, double best_theta) {
  double previous = best;
  for (int it = 0; it < 200; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    const double q1 = q(m1), q2 = q(m2);
    if (q1 < q2) {
      b = m2;
    } else {
      a = m1;
    }
    const double local = std::min(q1, q2);
    if (local < best) {
      best = local;
      best_theta = q1 < q2 ? m1 : m2;
    }
    if (std::abs(previous - best) < kRefineChange && b - a < 1e-6) return {best, best_theta, true};
    previous = best;
  }
  return {best, best_theta, false};
}

// Minimum of a grid quantity, refined around its three smallest samples.
Refined refine_min(const std::vector<double>& values, double step, const std::function<double(double)>& q) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t keep = std::min<std::size_t>(3, order.size());
  std::partial_sort(order.begin(), order.begin() + keep, order.end(),
                    [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  Refined out{values[order[0]], step * order[0], true};
  for (std::size_t k = 0; k < keep; ++k) {
    const double centre = step * order[k];
    const Refined r = trisect(q, centre - step, centre + step, values[order[k]], centre);
    out.converged = out.converged && r.converged;
    if (r.value < out.value) {
      out.value = r.value;
      out.theta = r.theta;
    }
  }
  out.theta = std::remainder(out.theta, kTwoPi);
  if (out.theta < 0.0) out.theta += kTwoPi;
  return out;
}

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "circle radius must lie in (0, 1)");
}

void check_samples(int samples) {
  if (samples < kMinScanSamples) throw Error(ErrorCode::invalid_argument, "scan needs at least 256 samples");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

}  // namespace

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["alpha"] = alpha;
  j["samples"] = samples;
  j["min_dtheta_arg"] = {{"value", min_dtheta_arg}, {"theta", argmin_dtheta_arg}};
  j["min_dtheta_arg_tangent"] = {{"value", min_dtheta_arg_tangent}, {"theta", argmin_dtheta_arg_tangent}};
  j["min_jacobian_on_circle"] = min_jacobian;
  j["total_arg_variation"] = total_arg_variation;
  j["total_tangent_variation"] = total_tangent_variation;
  j["refined"] = refined;
  return j.dump();
}

std::string Witness::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["theta"] = theta;
  j["value"] = value;
  j["reason"] = reason;
  return j.dump();
}

ScanReport scan_circle(const HarmonicMap& f, double r, Order alpha, int samples) {
  check_radius(r);
  check_samples(samples);
  const double step = kTwoPi / samples;
  std::vector<double> starlike(samples), tangent(samples);
  std::vector<Complex> values(samples), velocities(samples);
  ScanReport report;
  report.r = r;
  report.alpha = alpha.value();
  report.samples = samples;
  report.min_jacobian = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const MapJet j = map_jet(f, std::polar(r, step * k));
    starlike[k] = dtheta_arg(j);
    tangent[k] = dtheta_arg_tangent(j);
    values[k] = j.value();
    velocities[k] = dtheta_f(j);
    report.min_jacobian = std::min(report.min_jacobian, jacobian(j));
  }
  for (int k = 0; k < samples; ++k) {
    const int next = (k + 1) % samples;
    report.total_arg_variation += std::arg(values[next] / values[k]);
    report.total_tangent_variation += std::arg(velocities[next] / velocities[k]);
  }
  const Refined s = refine_min(starlike, step, [&](double t) { return dtheta_arg(map_jet(f, std::polar(r, t))); });
  const Refined c =
      refine_min(tangent, step, [&](double t) { return dtheta_arg_tangent(map_jet(f, std::polar(r, t))); });
  report.min_dtheta_arg = s.value;
  report.argmin_dtheta_arg = s.theta;
  report.min_dtheta_arg_tangent = c.value;
  report.argmin_dtheta_arg_tangent = c.theta;
  report.refined = s.converged && c.converged;
  return report;
}

std::string scan_csv(const HarmonicMap& f, double r, int samples) {
  check_radius(r);
  check_samples(samples);
  std::string out = "theta,dtheta_arg,dtheta_arg_tangent,jacobian\n";
  for (int k = 0; k < samples; ++k) {
    const double theta = kTwoPi * k / samples;
    const MapJet j = map_jet(f, std::polar(r, theta));
    out += format_double(theta) + "," + format_double(dtheta_arg(j)) + "," + format_double(dtheta_arg_tangent(j)) +
           "," + format_double(jacobian(j)) + "\n";
  }
  return out;
}

FullyReport is_fully(const HarmonicMap& f, double rho, Order alpha, Property property, int samples) {
  check_radius(rho);
  check_samples(samples);
  const bool convex = property == Property::convex;
  // The outermost rung first: that is where failures usually show up.
  for (int i = 0; i < kLadderRungs; ++i) {
    const int k = i == 0 ? kLadderRungs : i;
    const double r = rho * k / kLadderRungs;
    ScanReport scan;
    try {
      scan = scan_circle(f, r, alpha, samples);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate) throw;
      return {false, Witness{r, 0.0, 0.0, "degenerate"}};
    }
    const double min = convex ? scan.min_dtheta_arg_tangent : scan.min_dtheta_arg;
    const double theta = convex ? scan.argmin_dtheta_arg_tangent : scan.argmin_dtheta_arg;
    const double variation = convex ? scan.total_tangent_variation : scan.total_arg_variation;
    if (!(min > alpha.value() - kOrderSlack)) return {false, Witness{r, theta, min, "minimum not above alpha"}};
    if (std::abs(variation - kTwoPi) > kVariationTolerance)
      return {false, Witness{r, theta, variation, "winding differs from 2 pi"}};
  }
  return {true, std::nullopt};
}

FullyReport is_fully_starlike(const HarmonicMap& f, double rho, Order alpha, int samples) {
  return is_fully(f, rho, alpha, Property::starlike, samples);
}

FullyReport is_fully_convex(const HarmonicMap& f, double rho, Order alpha, int samples) {
  return is_fully(f, rho, alpha, Property::convex, samples);
}

namespace {

MapJet checked_jet(const HarmonicMap& f, Complex z) {
  const MapJet j = map_jet(f, z);
  if (!(jacobian(j) > 0.0)) throw Error(ErrorCode::invalid_argument, "map is not sense-preserving at z");
  return j;
}

}  // namespace

bool inequality_27(const HarmonicMap& f, Complex z, Order order) {
  if (z == 0.0) throw Error(ErrorCode::invalid_argument, "inequality_27 needs z != 0");
  const MapJet j = checked_jet(f, z);
  const double a = order.value();
  const Complex h = j.h.value, g = j.g.value;
  const double scale = std::max({std::abs(h), std::abs(g), std::abs(z)});
  if (!(std::abs(j.value()) > 1e-13 * scale)) throw Error(ErrorCode::degenerate, "f vanishes at z");
  const Complex zh1 = z * j.h.d1, zg1 = z * j.g.d1;
  const double lhs = (zh1 * std::conj(h)).real() - a * std::norm(h);
  const double rhs = (zg1 * std::conj(g)).real() + a * std::norm(g) + (h * zg1 + 2.0 * a * h * g - zh1 * g).real();
  return lhs > rhs;
}

bool inequality_23(const HarmonicMap& f, Complex z, Order order) {
  const MapJet j = checked_jet(f, z);
  const double a = order.value();
  const Complex zh1 = z * j.h.d1, zg1 = z * j.g.d1;
  const Complex z2h2 = z * z * j.h.d2, z2g2 = z * z * j.g.d2;
  const double scale = std::max(std::abs(zh1), std::abs(zg1));
  if (!(std::abs(zh1 - std::conj(zg1)) > 1e-13 * scale)) throw Error(ErrorCode::degenerate, "d/dtheta f vanishes at z");
  const double lhs = std::norm(zh1) + (std::conj(zh1) * z2h2).real() - a * std::norm(zh1);
  const double rhs = std::norm(zg1) + (std::conj(zg1) * z2g2).real() + a * std::norm(zg1) +
                     (z2h2 * zg1 - zh1 * z2g2 - 2.0 * a * zh1 * zg1).real();
  return lhs > rhs;
}

RadiusResult empirical_radius(const HarmonicMap& f, Order alpha, Property property, int samples) {
  constexpr double kFloor = 1e-3;
  constexpr double kCeiling = 1.0 - 1e-3;
  constexpr double kResolution = 1e-5;
  RadiusResult out;
  out.id = (f.name().empty() ? std::string("map") : f.name()) + ":" + to_string(property);
  out.alpha = alpha.value();
  out.source = RadiusSource::empirical_scan;
  const auto holds = [&](double r) {
    ++out.iterations;
    return is_fully(f, r, alpha, property, samples).holds;
  };
  if (!holds(kFloor)) throw Error(ErrorCode::invalid_argument, "property fails already at r = 1e-3");
  double lo = 0.0, hi = 0.0;
  if (holds(0.5)) {
    lo = 0.5;
    for (;;) {
      double r = 1.0 - 0.5 * (1.0 - lo);
      if (r >= kCeiling) r = kCeiling;
      if (!holds(r)) {
        hi = r;
        break;
      }
      if (r == kCeiling) throw Error(ErrorCode::holds_to_limit, "holds up to 1 - 1e-3");
      lo = r;
    }
  } else {
    hi = 0.5;
    for (;;) {
      double r = 0.5 * hi;
      if (r <= kFloor) {
        lo = kFloor;
        break;
      }
      if (holds(r)) {
        lo = r;
        break;
      }
      hi = r;
    }
  }
  while (hi - lo > kResolution) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
  }
  out.radius = lo;
  out.bracket = {lo, hi};
  out.residual = hi - lo;
  return out;
}

}  // namespace harmonica
