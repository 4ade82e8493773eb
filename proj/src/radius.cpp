#include "harmonica/radius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

// Bisects a sign change of fn on [lo, hi] down to tol.
double bisect(const std::function<double(double)>& fn, double lo, double hi, double tol, int& iterations) {
  double flo = fn(lo);
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = fn(mid);
    ++iterations;
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

// First grid cell on (0, 1) where fn turns negative, starting from a positive value.
std::array<double, 2> first_negative_cell(const std::function<double(double)>& fn, int points) {
  double prev = 1e-9;
  for (int i = 1; i < points; ++i) {
    const double r = static_cast<double>(i) / points;
    if (fn(r) < 0.0) return {prev, r};
    prev = r;
  }
  throw Error(ErrorCode::bracket_failure, "criterion stays non-negative on (0, 1)");
}

double golden_min(const std::function<double(double)>& fn, double a, double b, double& arg) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = fn(d);
    }
  }
  if (b - a > 1e-12) throw Error(ErrorCode::not_converged, "minimisation in u did not converge");
  arg = 0.5 * (a + b);
  return fn(arg);
}

// The root-scan grid cell containing r, used as the bracket of closed forms.
std::array<double, 2> grid_cell(double r) {
  const double i = std::floor(r * kRootScanPoints);
  return {i / kRootScanPoints, (i + 1) / kRootScanPoints};
}

}  // namespace

std::string to_string(RadiusEquationId id) {
  switch (id) {
    case RadiusEquationId::Eq3_2: return "Eq3_2";
    case RadiusEquationId::Eq3_5: return "Eq3_5";
    case RadiusEquationId::Eq3_6: return "Eq3_6";
    case RadiusEquationId::Eq3_7: return "Eq3_7";
    case RadiusEquationId::Eq4_1: return "Eq4_1";
    case RadiusEquationId::Eq4_2: return "Eq4_2";
    case RadiusEquationId::Eq4_3: return "Eq4_3";
  }
  return {};
}

RadiusEquationId parse_radius_equation(const std::string& text) {
  for (auto id : kAllRadiusEquations)
    if (to_string(id) == text) return id;
  throw Error(ErrorCode::invalid_argument, "unknown radius equation '" + text + "'");
}

std::string to_string(RadiusSource s) {
  switch (s) {
    case RadiusSource::equation_root: return "equation_root";
    case RadiusSource::closed_form: return "closed_form";
    case RadiusSource::empirical_scan: return "empirical_scan";
  }
  return {};
}

std::string RadiusResult::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["alpha"] = alpha;
  j["radius"] = radius;
  j["residual"] = residual;
  j["bracket"] = {bracket[0], bracket[1]};
  j["iterations"] = iterations;
  j["source"] = to_string(source);
  return j.dump();
}

double equation_value(RadiusEquationId id, Order order, double r) {
  const double a = order.value();
  const double s = 1.0 - r;
  const double p = 1.0 + r;
  switch (id) {
    case RadiusEquationId::Eq3_2: return 2 * (1 - a) * std::pow(s, 4) + a * s * s - p * p;
    case RadiusEquationId::Eq3_5: return 2 * (1 - a) * std::pow(s, 5) + a * p * s * s - p * (r * r + 6 * r + 1);
    case RadiusEquationId::Eq3_6: return (2 - a) * std::pow(s, 3) + a * r * s * s - 1 - r;
    case RadiusEquationId::Eq3_7: return 2 * (1 - a) * std::pow(s, 4) + a * s * s - (r * r + 4 * r + 1);
    case RadiusEquationId::Eq4_1: return 2 * (1 - a) * std::pow(s, 4) + a * s * s - (r * r + r + 1);
    case RadiusEquationId::Eq4_2: return 2 * (1 - a) * std::pow(s, 5) + a * p * s * s - p * (r * r + 4 * r + 1);
    case RadiusEquationId::Eq4_3: return 12 * (1 - a) * std::pow(s, 5) + a * (r * r + 3 * r + 6) * s * s - 6 * p * p * p;
  }
  return 0.0;
}

RadiusResult find_unique_root(const std::function<double(double)>& fn, double tol, const std::string& name) {
  if (!(tol >= kMinSolveTolerance)) throw Error(ErrorCode::invalid_argument, "root tolerance must be at least 1e-14");
  int changes = 0;
  double lo = 0.0, hi = 1.0;
  double prev = fn(0.0);
  for (int i = 1; i <= kRootScanPoints; ++i) {
    const double r = static_cast<double>(i) / kRootScanPoints;
    const double v = fn(r);
    if ((v > 0.0 && prev < 0.0) || (v < 0.0 && prev > 0.0) || (v == 0.0 && prev != 0.0 && i < kRootScanPoints)) {
      if (++changes == 1) {
        lo = static_cast<double>(i - 1) / kRootScanPoints;
        hi = r;
      }
    }
    if (v != 0.0) prev = v;
  }
  if (changes == 0) throw Error(ErrorCode::no_root, "no root in (0,1) for " + name);
  if (changes > 1) throw Error(ErrorCode::multiple_roots, "multiple roots in (0,1) for " + name);

  RadiusResult out;
  out.id = name;
  out.bracket = {lo, hi};
  out.source = RadiusSource::equation_root;
  out.radius = bisect(fn, lo, hi, tol, out.iterations);
  out.residual = std::abs(fn(out.radius));
  if (!(out.residual < 1e-12))
    throw Error(ErrorCode::not_converged, "residual " + format_double(out.residual) + " exceeds 1e-12");
  return out;
}

RadiusResult solve_radius(RadiusEquationId id, Order alpha, double tol) {
  RadiusResult out = find_unique_root([&](double r) { return equation_value(id, alpha, r); }, tol, to_string(id));
  out.alpha = alpha.value();
  return out;
}

double half_plane_starlike_p(double r, double u) { return 1 + u * (2 * u * u - 5) * r + 3 * r * r - u * r * r * r; }

RadiusResult half_plane_starlike_radius_alpha0_check() {
  const auto fn = [](double r) { return half_plane_starlike_p(r, std::sqrt((5 + r * r) / 6)); };
  RadiusResult out;
  out.id = "half_plane_starlike";
  out.alpha = 0.0;
  out.source = RadiusSource::equation_root;
  out.bracket = first_negative_cell(fn, kRootScanPoints);
  out.radius = bisect(fn, out.bracket[0], out.bracket[1], 1e-15, out.iterations);
  out.residual = std::abs(fn(out.radius));
  return out;
}

RadiusResult half_plane_starlike_radius(Order order) {
  const double a = order.value();
  RadiusResult out;
  out.id = "half_plane_starlike";
  out.alpha = a;
  out.source = RadiusSource::closed_form;
  if (a == 0.0) {
    // The minimiser moves off the negative axis at alpha = 0, so the formula
    // below (whose limit is 1) does not apply.
    out.radius = std::sqrt((7 * std::sqrt(7.0) - 17) / 2);
    out.residual = std::abs(half_plane_starlike_p(out.radius, std::sqrt((5 + out.radius * out.radius) / 6)));
  } else {
    out.radius = (std::sqrt(1 + 8 * a) - (1 + 2 * a)) / (2 * a);
    out.residual = std::abs(a * out.radius * out.radius + (1 + 2 * a) * out.radius + a - 1);
  }
  out.bracket = grid_cell(out.radius);
  return out;
}

double half_plane_convex_p(double r, double u, double a) {
  const double r2 = r * r;
  return 1 - 6 * r2 + r2 * r2 + 12 * r2 * u * u - 4 * r * (1 + r2) * u * u * u -
         a * (1 + (2 * u * u - 3) * (4 * u * (1 + r2) - 6 * r) * r + r2 * r2);
}

double half_plane_convex_u0(double r, double a) {
  const double r2 = r * r;
  return (r * (1 + a) - std::sqrt(a * (1 + 2 * a) * (1 + r2 * r2) + (1 + 4 * a + 5 * a * a) * r2)) /
         ((1 + r2) * (1 + 2 * a));
}

RadiusResult half_plane_convex_radius(Order order) {
  const double a = order.value();
  const auto fn = [a](double r) {
    const double u = std::clamp(half_plane_convex_u0(r, a), -1.0, 1.0);
    return std::min({half_plane_convex_p(r, u, a), half_plane_convex_p(r, -1.0, a), half_plane_convex_p(r, 1.0, a)});
  };
  RadiusResult out;
  out.id = "half_plane_convex";
  out.alpha = a;
  out.source = RadiusSource::closed_form;
  if (a == 0.0) {
    // u0 = 0 and p(r, 0) = 1 - 6r^2 + r^4.
    out.radius = std::sqrt(2.0) - 1;
    out.bracket = grid_cell(out.radius);
  } else {
    out.bracket = first_negative_cell(fn, kRootScanPoints);
    out.radius = bisect(fn, out.bracket[0], out.bracket[1], 1e-15, out.iterations);
  }
  out.residual = std::abs(fn(out.radius));
  return out;
}

double LL_q(double r, double u) {
  const double u2 = u * u, u4 = u2 * u2;
  const double odd1 = 2 * u * (u2 - 2);
  const double even2 = 8 * (1 - 4 * u2 + 2 * u4);
  const double odd3 = 2 * u * (34 - 21 * u2 + 4 * u4);
  const double mid4 = -2 * (41 - 24 * u2 + 8 * u4);
  // Palindromic in r: coefficients of r^k and r^(8-k) agree.
  const double c[9] = {1, odd1, even2, odd3, mid4, odd3, even2, odd1, 1};
  double acc = 0.0;
  for (int k = 8; k >= 0; --k) acc = acc * r + c[k];
  return acc;
}

namespace {

double LL_min_over_u(double r, double& arg) {
  constexpr int kGrid = 2000;
  int best = 0;
  double best_value = LL_q(r, -1.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = LL_q(r, -1.0 + 2.0 * i / kGrid);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = -1.0 + 2.0 * std::max(best - 1, 0) / kGrid;
  const double hi = -1.0 + 2.0 * std::min(best + 1, kGrid) / kGrid;
  double refined_arg = 0.0;
  const double refined = golden_min([r](double u) { return LL_q(r, u); }, lo, hi, refined_arg);
  arg = -1.0 + 2.0 * best / kGrid;
  if (refined < best_value) {
    arg = refined_arg;
    return refined;
  }
  return best_value;
}

}  // namespace

RadiusResult LL_convex_radius() {
  const auto fn = [](double r) {
    double u = 0.0;
    return LL_min_over_u(r, u);
  };
  RadiusResult out;
  out.id = "LL_convex";
  out.alpha = 0.0;
  out.source = RadiusSource::closed_form;
  out.bracket = first_negative_cell(fn, 1000);
  out.radius = bisect(fn, out.bracket[0], out.bracket[1], 1e-14, out.iterations);
  out.residual = std::abs(LL_min_over_u(out.radius, out.binding));
  return out;
}

double sharpness_value(RadiusEquationId id, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "sharpness_value: r must lie in (0, 1)");
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
  const double s2 = (1 - r) * (1 - r);
  double num = 0.0, den = 1.0;
  switch (id) {
    case RadiusEquationId::Eq3_2:
      num = 1 - 10 * r + 11 * r2 - 8 * r3 + 2 * r4;
      den = s2 * (2 * r2 - 4 * r + 1);
      break;
    case RadiusEquationId::Eq3_5:
      num = 1 - 17 * r + 13 * r2 - 21 * r3 + 10 * r4 - 2 * r5;
      den = s2 * (1 - 7 * r + 6 * r2 - 2 * r3);
      break;
    case RadiusEquationId::Eq3_6:
      num = 1 - 7 * r + 6 * r2 - 2 * r3;
      den = s2 * (1 - 2 * r);
      break;
    case RadiusEquationId::Eq3_7:
      num = 1 - 12 * r + 11 * r2 - 8 * r3 + 2 * r4;
      den = s2 * (1 - 4 * r + 2 * r2);
      break;
    case RadiusEquationId::Eq4_1:
      num = 1 - 9 * r + 11 * r2 - 8 * r3 + 2 * r4;
      den = s2 * (2 * r2 - 4 * r + 1);
      break;
    case RadiusEquationId::Eq4_2:
      num = 1 - 15 * r + 15 * r2 - 21 * r3 + 10 * r4 - 2 * r5;
      den = s2 * (1 - 7 * r + 6 * r2 - 2 * r3);
      break;
    case RadiusEquationId::Eq4_3:
      num = 6 * (1 - 13 * r + 17 * r2 - 21 * r3 + 10 * r4 - 2 * r5);
      den = s2 * (6 - 39 * r + 35 * r2 - 12 * r3);
      break;
  }
  if (std::abs(den) < 1e-14) throw Error(ErrorCode::degenerate, "sharpness_value: denominator vanishes");
  return num / den;
}

std::string to_string(ExtremalId id) {
  switch (id) {
    case ExtremalId::x31: return "x31";
    case ExtremalId::x35: return "x35";
    case ExtremalId::x42: return "x42";
    case ExtremalId::x46: return "x46";
  }
  return {};
}

double jacobian_extremal(ExtremalId id, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "jacobian_extremal: r must lie in (0, 1)");
  const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
  const double s = 1 - r;
  const double cubic = 1 - 7 * r + 6 * r2 - 2 * r3;
  switch (id) {
    case ExtremalId::x31: return cubic * (1 - 10 * r + 11 * r2 - 8 * r3 + 2 * r4) / std::pow(s, 7);
    case ExtremalId::x35: return (1 - 4 * r + 2 * r2) * cubic / std::pow(s, 5);
    case ExtremalId::x42: return cubic * (1 - 9 * r + 11 * r2 - 8 * r3 + 2 * r4) / std::pow(s, 7);
    case ExtremalId::x46:
      return (1 - 13 * r + 17 * r2 - 21 * r3 + 10 * r4 - 2 * r5) * (1 - 11 * r + 11 * r2 - 8 * r3 + 2 * r4) /
             std::pow(s, 9);
  }
  return 0.0;
}

PairedFamily paired_family(RadiusEquationId id) {
  switch (id) {
    case RadiusEquationId::Eq3_2: return {BoundFamily::eq12, Property::starlike};
    case RadiusEquationId::Eq3_5: return {BoundFamily::eq12, Property::convex};
    case RadiusEquationId::Eq3_6: return {BoundFamily::eq14, Property::starlike};
    case RadiusEquationId::Eq3_7: return {BoundFamily::eq14, Property::convex};
    case RadiusEquationId::Eq4_1: return {BoundFamily::eq42sq, Property::starlike};
    case RadiusEquationId::Eq4_2: return {BoundFamily::eq42sq, Property::convex};
    case RadiusEquationId::Eq4_3: return {BoundFamily::eq46, Property::starlike};
  }
  throw Error(ErrorCode::invalid_argument, "unknown radius equation");
}

std::vector<TableRow> radius_table(const std::vector<RadiusEquationId>& ids, std::vector<double> alphas) {
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<RadiusEquationId> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
  std::vector<TableRow> rows;
  for (auto id : sorted_ids) {
    for (double a : alphas) {
      const RadiusResult res = solve_radius(id, Order(a));
      rows.push_back({id, res, sharpness_value(id, res.radius)});
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "equation,alpha,radius,residual,sharpness\n";
  for (const auto& row : rows) {
    out += to_string(row.id) + "," + format_double(row.result.alpha) + "," + format_double(row.result.radius) + "," +
           format_double(row.result.residual) + "," + format_double(row.sharpness) + "\n";
  }
  return out;
}

std::string radius_csv(const std::vector<RadiusResult>& results) {
  std::string out = "id,alpha,radius,residual,bracket_lo,bracket_hi,iterations,source\n";
  for (const auto& r : results) {
    out += r.id + "," + format_double(r.alpha) + "," + format_double(r.radius) + "," + format_double(r.residual) + "," +
           format_double(r.bracket[0]) + "," + format_double(r.bracket[1]) + "," + std::to_string(r.iterations) + "," +
           to_string(r.source) + "\n";
  }
  return out;
}

}  // namespace harmonica
