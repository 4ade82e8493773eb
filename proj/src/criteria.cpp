#include "harmonica/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "harmonica/error.hpp"
#include "polynomial.hpp"

namespace harmonica {

Order::Order(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_argument, "order alpha must lie in [0, 1)");
}

std::string to_string(Property p) { return p == Property::starlike ? "starlike" : "convex"; }

Property parse_property(const std::string& text) {
  if (text == "starlike") return Property::starlike;
  if (text == "convex") return Property::convex;
  throw Error(ErrorCode::invalid_argument, "unknown property '" + text + "' (expected starlike or convex)");
}

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["property"] = to_string(property);
  j["alpha"] = alpha;
  j["sum"] = sum;
  j["passed"] = passed;
  j["truncated"] = truncated;
  return j.dump();
}

namespace {

// Weight w(n) = n^power (n - sign*alpha) / (1 - alpha) applied to |c_n|,
// plus the tail contribution.
struct WeightedSum {
  double value = 0.0;
  bool truncated = false;
};

WeightedSum weighted(const TruncatedSeries& s, std::size_t first_index, int power, double sign, double alpha) {
  WeightedSum out;
  for (std::size_t n = first_index; n <= s.order(); ++n) {
    const double m = static_cast<double>(n);
    out.value += std::pow(m, power) * (m + sign * alpha) * std::abs(s.coefficient(n));
  }
  switch (s.tail().kind) {
    case TailModel::Kind::exact: break;
    case TailModel::Kind::unknown: out.truncated = true; break;
    case TailModel::Kind::polynomial: {
      // n^power (n +- alpha) <= n^(power+1) + alpha n^power
      const double tail = s.tail().bound(s.order(), 1.0, power + 1) + alpha * s.tail().bound(s.order(), 1.0, power);
      if (!std::isfinite(tail))
        throw Error(ErrorCode::unbounded_tail, "coefficient tail is not summable at radius 1");
      out.value += tail;
      break;
    }
  }
  return out;
}

Certificate jahangiri(const HarmonicMap& f, Order order, Property property) {
  const double alpha = order.value();
  const int power = property == Property::starlike ? 0 : 1;
  const WeightedSum a = weighted(f.h(), 2, power, -1.0, alpha);
  const WeightedSum b = weighted(f.g(), 1, power, +1.0, alpha);
  Certificate c;
  c.property = property;
  c.alpha = alpha;
  c.sum = (a.value + b.value) / (1.0 - alpha);
  c.passed = c.sum <= 1.0 + kCertificateSlack;
  c.equality = std::abs(c.sum - 1.0) <= kCertificateSlack;
  c.truncated = a.truncated || b.truncated;
  return c;
}

struct FamilyPolys {
  detail::Poly a;
  detail::Poly b;
};

FamilyPolys family_polys(BoundFamily family) {
  switch (family) {
    case BoundFamily::eq12: return {{1.0 / 6.0, 0.5, 1.0 / 3.0}, {1.0 / 6.0, -0.5, 1.0 / 3.0}};
    case BoundFamily::eq14: return {{0.5, 0.5}, {-0.5, 0.5}};
    case BoundFamily::eq42sq: return {{0.25, 0.5, 0.25}, {0.25, -0.5, 0.25}};
    case BoundFamily::eq46: return {{1.0 / 12.0, 4.0 / 12.0, 5.0 / 12.0, 2.0 / 12.0}, {-1.0 / 12.0, 4.0 / 12.0, -5.0 / 12.0, 2.0 / 12.0}};
  }
  throw Error(ErrorCode::invalid_argument, "unknown bound family");
}

}  // namespace

Certificate starlike_sum(const HarmonicMap& f, Order alpha) { return jahangiri(f, alpha, Property::starlike); }

Certificate convex_sum(const HarmonicMap& f, Order alpha) { return jahangiri(f, alpha, Property::convex); }

Certificate certify(const HarmonicMap& f, Property property, Order alpha) { return jahangiri(f, alpha, property); }

std::string to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::eq12: return "eq12";
    case BoundFamily::eq14: return "eq14";
    case BoundFamily::eq42sq: return "eq42sq";
    case BoundFamily::eq46: return "eq46";
  }
  return {};
}

double family_sum(BoundFamily family, Order order, double r, Property property) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "family_sum: r must lie in (0, 1)");
  const double alpha = order.value();
  const auto [A, B] = family_polys(family);
  detail::Poly wa{-alpha, 1.0};
  detail::Poly wb{alpha, 1.0};
  if (property == Property::convex) {
    wa = detail::poly_times_n(wa);
    wb = detail::poly_times_n(wb);
  }
  const detail::Poly T = detail::poly_add(detail::poly_mul(wa, A), detail::poly_mul(wb, B));
  const Complex full = detail::eulerian_sum(T, r, 1.0 / (1.0 - r));
  return (full - detail::poly_eval(T, 1.0)).real() / (1.0 - alpha);
}

AnalyticCheck analytic_order_check(const TruncatedSeries& s, Order order, Property property, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "analytic_order_check: r must lie in (0, 1)");
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "analytic_order_check: samples must be positive");
  AnalyticCheck out;
  out.worst_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const Complex z = std::polar(r, theta);
    const SeriesJet j = jet(s, z);
    double q = 0.0;
    if (property == Property::starlike) {
      if (!(std::abs(j.value) > 1e-300)) throw Error(ErrorCode::degenerate, "s vanishes on the circle");
      q = (z * j.d1 / j.value).real();
    } else {
      if (!(std::abs(j.d1) > 1e-300)) throw Error(ErrorCode::degenerate, "s' vanishes on the circle");
      q = 1.0 + (z * j.d2 / j.d1).real();
    }
    if (q - order.value() < out.worst_value) {
      out.worst_value = q - order.value();
      out.worst_theta = theta;
    }
  }
  out.passed = out.worst_value > 0.0;
  return out;
}

}  // namespace harmonica
