// Acceptance run: one PASS/FAIL line per criterion, details on failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harmonica/error.hpp"
#include "harmonica/gallery.hpp"
#include "harmonica/plot.hpp"
#include "harmonica/radius.hpp"
#include "harmonica/verifier.hpp"
#include "oracles.hpp"

using namespace harmonica;

namespace {

constexpr double kPi = std::numbers::pi;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s: got %.12g, expected %.12g (tol %.1e)", what.c_str(), actual, expected, tol);
      failures_.push_back(buf);
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  std::function<void(Checker&)> body;
};

double empirical_or_limit(const HarmonicMap& f, Order alpha, Property property, bool& at_limit) {
  try {
    at_limit = false;
    return empirical_radius(f, alpha, property).radius;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::holds_to_limit) throw;
    at_limit = true;
    return 1.0;
  }
}

void radius_table_criterion(Checker& c) {
  const std::pair<RadiusEquationId, double> golden[] = {
      {RadiusEquationId::Eq3_2, 0.112903}, {RadiusEquationId::Eq3_5, 0.0614313}, {RadiusEquationId::Eq3_6, 0.164878},
      {RadiusEquationId::Eq3_7, 0.0903331}, {RadiusEquationId::Eq4_1, 0.129831}, {RadiusEquationId::Eq4_2, 0.0712543},
      {RadiusEquationId::Eq4_3, 0.0855165}};
  for (const auto& [id, value] : golden) {
    const auto res = solve_radius(id, Order(0));
    c.near(res.radius, value, 1e-5, to_string(id) + " radius");
    c.expect(res.residual < 1e-12, to_string(id) + " residual below 1e-12");
  }
}

void surd_criterion(Checker& c) {
  const double eq32 = 1 + 1 / (2 * std::sqrt(2.0)) - std::sqrt(std::sqrt(2.0) + 0.125);
  c.near(solve_radius(RadiusEquationId::Eq3_2, Order(0)).radius, eq32, 1e-10, "Eq3_2 surd");
  const double t = -18 + std::sqrt(330.0);
  const double eq36 = 1 + std::cbrt(t) / std::pow(6.0, 2.0 / 3.0) - 1 / std::cbrt(6 * t);
  c.near(solve_radius(RadiusEquationId::Eq3_6, Order(0)).radius, eq36, 1e-10, "Eq3_6 cube-root surd");
}

void half_plane_criterion(Checker& c) {
  const std::pair<double, double> convex[] = {
      {0.0, std::sqrt(2.0) - 1}, {0.25, 0.246499}, {0.5, 0.138701}, {0.75, 0.0605898}};
  for (const auto& [a, value] : convex) c.near(half_plane_convex_radius(Order(a)).radius, value, 1e-5, "r_C");
  c.near(half_plane_starlike_radius(Order(0.5)).radius, std::sqrt(5.0) - 2, 1e-10, "r_S(1/2)");
  const double r0 = std::sqrt((7 * std::sqrt(7.0) - 17) / 2);
  c.near(half_plane_starlike_radius(Order(0)).radius, r0, 1e-6, "r_S(0)");
  c.near(half_plane_starlike_radius_alpha0_check().radius, r0, 1e-6, "r_S(0) from p(r, u)");
}

void empirical_criterion(Checker& c) {
  const auto L = gallery("L");
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    c.near(empirical_radius(L, Order(a), Property::starlike).radius, half_plane_starlike_radius(Order(a)).radius, 2e-3,
           "L starlike empirical, alpha " + std::to_string(a));
    c.near(empirical_radius(L, Order(a), Property::convex).radius, half_plane_convex_radius(Order(a)).radius, 2e-3,
           "L convex empirical, alpha " + std::to_string(a));
  }
  c.near(empirical_radius(gallery("LL"), Order(0), Property::convex).radius, 2 - std::sqrt(3.0), 2e-3,
         "L*L convex empirical");
}

void sharpness_criterion(Checker& c) {
  for (auto id : kAllRadiusEquations) {
    for (int k = 0; k <= 9; ++k) {
      const double a = k / 10.0;
      c.near(sharpness_value(id, solve_radius(id, Order(a)).radius), a, 1e-9,
             "sharpness " + to_string(id) + " alpha " + std::to_string(a));
    }
  }
  const std::pair<ExtremalId, RadiusEquationId> zeros[] = {{ExtremalId::x31, RadiusEquationId::Eq3_2},
                                                           {ExtremalId::x35, RadiusEquationId::Eq3_6},
                                                           {ExtremalId::x42, RadiusEquationId::Eq4_1},
                                                           {ExtremalId::x46, RadiusEquationId::Eq4_3}};
  for (const auto& [x, id] : zeros) {
    c.near(jacobian_extremal(x, solve_radius(id, Order(0)).radius), 0.0, 1e-4, "Jacobian zero " + to_string(x));
    const auto f = gallery(to_string(x)).series_only();
    for (double r : {0.01, 0.02, 0.03, 0.04, 0.05}) {
      const double series = jacobian(f, r);
      c.near(jacobian_extremal(x, r), series, 1e-8 * std::abs(series), "Jacobian " + to_string(x) + " vs series");
    }
  }
}

void convolution_criterion(Checker& c) {
  const std::size_t N = 64;
  const auto K = gallery("K", N), L = gallery("L", N);
  const auto l = gallery("l", N).h(), k = gallery("k", N).h();
  for (const auto* s : {&K.h(), &K.g(), &L.h(), &L.g()}) {
    const auto id = hadamard(l, *s), d = hadamard(k, *s), zd = z_derivative(*s);
    for (std::size_t n = 1; n <= N; ++n) {
      c.expect(id.coefficient(n) == s->coefficient(n), "hadamard with z/(1-z) at n=" + std::to_string(n));
      c.expect(d.coefficient(n) == zd.coefficient(n), "hadamard with z/(1-z)^2 at n=" + std::to_string(n));
    }
  }
  const auto LL = convolve(L, L);
  for (std::size_t n = 1; n <= N; ++n) {
    const double a = (n + 1) / 2.0, b = (n - 1) / 2.0;
    c.expect(LL.h().coefficient(n) == Complex(a * a) && LL.g().coefficient(n) == Complex(b * b),
             "L*L coefficient n=" + std::to_string(n));
  }
  // One ulp: (n+1)(2n+1)/6 is not always representable, so the product of
  // the two rounded factors can land one ulp from the rounded target.
  const auto LK = convolve(L, K);
  for (std::size_t n = 1; n <= N; ++n) {
    const double a = static_cast<double>((n + 1) * (n + 1) * (2 * n + 1)) / 12.0;
    const double b = -static_cast<double>((n - 1) * (n - 1) * (2 * n - 1)) / 12.0;
    const double ha = LK.h().coefficient(n).real(), gb = LK.g().coefficient(n).real();
    c.expect(std::abs(ha - a) <= std::nextafter(a, INFINITY) - a, "L*K a_n at n=" + std::to_string(n));
    c.expect(b == 0 ? gb == 0 : std::abs(gb - b) <= std::nextafter(-b, INFINITY) + b, "L*K b_n at n=" + std::to_string(n));
  }
}

void angular_criterion(Checker& c) {
  std::mt19937 rng(1729);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<std::pair<std::string, double>> maps = {
      {"identity", 0.95}, {"k", 0.9},    {"l", 0.9},          {"K", 0.9},          {"L", 0.9},
      {"LL", 0.9},        {"LK", 0.8},   {"fn:3:0.25", 0.9},  {"Fn:4:0.5", 0.95},  {"affine:1:0.5", 0.95},
      {"x31", 0.1},       {"x35", 0.15}, {"x42", 0.11},       {"x46", 0.08}};
  std::vector<HarmonicMap> built;
  for (const auto& m : maps) built.push_back(gallery(m.first));
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t which = trial % maps.size();
    const auto& f = built[which];
    const double r = maps[which].second * (0.05 + 0.95 * unit(rng)), theta = 2 * kPi * unit(rng);
    const auto F = [&](double t) { return eval(f, std::polar(r, t)); };
    const auto dF = [&](double t) {
      const MapJet j = map_jet(f, std::polar(r, t));
      return Complex(0, 1) * (j.z * j.h.d1 - std::conj(j.z * j.g.d1));
    };
    c.near(dtheta_arg(f, r, theta), oracle::dtheta_arg_fd(F, theta), 1e-6, "dtheta_arg " + maps[which].first);
    c.near(dtheta_arg_tangent(f, r, theta), oracle::dtheta_arg_fd(dF, theta), 1e-6,
           "dtheta_arg_tangent " + maps[which].first);
  }
  const auto L = gallery("L");
  for (double r : {0.1, 0.5, 0.9}) c.near(dtheta_arg(L, r, std::acos(r)), 1.0, 1e-8, "L at cos(theta) = r");
}

void structural_criterion(Checker& c) {
  // Alexander duality on single-term maps.
  for (int n = 2; n <= 5; ++n) {
    const auto f = gallery("fn:" + std::to_string(n) + ":0");
    const auto F = alexander(f);
    for (double a : {0.0, 0.5}) {
      bool lim_s = false, lim_c = false;
      const double rs = empirical_or_limit(f, Order(a), Property::starlike, lim_s);
      const double rc = empirical_or_limit(F, Order(a), Property::convex, lim_c);
      c.expect(lim_s == lim_c, "Alexander duality: both or neither hold to the limit, n=" + std::to_string(n));
      if (!lim_s && !lim_c) c.near(rs, rc, 2e-3, "Alexander duality n=" + std::to_string(n));
    }
  }
  // Fully convex implies fully starlike on the gallery.
  for (const char* name : {"identity", "k", "l", "K", "L", "fn:2:0.5", "fn:4:0", "Fn:3:0.25", "affine:1:0.5", "x31",
                           "x35", "x42", "x46", "LL", "LK"}) {
    const auto f = gallery(name);
    for (double rho : {0.03, 0.1, 0.25, 0.5, 0.8}) {
      for (double a : {0.0, 0.5}) {
        if (is_fully_convex(f, rho, Order(a), 1024))
          c.expect(is_fully_starlike(f, rho, Order(a), 1024).holds,
                   std::string("convex but not starlike: ") + name + " rho " + std::to_string(rho));
      }
    }
  }
  // Coefficient-sum certificate implies scan pass.
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    const auto property = trial % 2 ? Property::convex : Property::starlike;
    const double a = 0.8 * unit(rng);
    const std::size_t N = 2 + static_cast<std::size_t>(7 * unit(rng));
    std::vector<Complex> h(N), g(N);
    h[0] = 1.0;
    for (std::size_t n = 2; n <= N; ++n) h[n - 1] = Complex(normal(rng), normal(rng));
    for (std::size_t n = 1; n <= N; ++n) g[n - 1] = Complex(normal(rng), normal(rng));
    HarmonicMap raw(TruncatedSeries(h, TailModel::exact()), TruncatedSeries(g, TailModel::exact()));
    const double sum = certify(raw, property, Order(a)).sum;
    const double t = (0.3 + 0.699 * unit(rng)) / sum;
    for (std::size_t n = 2; n <= N; ++n) h[n - 1] *= t;
    for (auto& b : g) b *= t;
    HarmonicMap f(TruncatedSeries(h, TailModel::exact()), TruncatedSeries(g, TailModel::exact()));
    c.expect(certify(f, property, Order(a)).passed, "random vector certified");
    const auto report = is_fully(f, 0.99, Order(a), property);
    c.expect(report.holds, "certified vector " + std::to_string(trial) + " fails the scan");
  }
  // L * f_n on r = 0.999.
  for (int n = 2; n <= 4; ++n) {
    const auto Lf = convolve(gallery("L"), gallery("fn:" + std::to_string(n) + ":0"));
    const double min = scan_circle(Lf, 0.999, Order(0)).min_dtheta_arg;
    const double bound = n * (3.0 - n) / (3.0 * n - 1);
    if (n <= 3)
      c.expect(min >= bound - 1e-3, "L*f_" + std::to_string(n) + " above n(3-n)/(3n-1)");
    else
      c.expect(min < 0, "L*f_4 has a negative minimum");
  }
  // Named spot checks of fully starlike/convex radii.
  const auto L = gallery("L"), K = gallery("K");
  c.expect(is_fully_starlike(L, 4 * std::sqrt(2.0) - 5, Order(0)).holds, "L fully starlike at 4 sqrt2 - 5");
  c.expect(is_fully_starlike(K, 3 - std::sqrt(8.0), Order(0)).holds, "K fully starlike at 3 - sqrt8");
  c.expect(is_fully_starlike(K, std::sqrt(2.0) - 1, Order(0)).holds, "K fully starlike at sqrt2 - 1");
  // Sense-preservation is lost inside the disk for the inverse Alexander transform of L(rho z)/rho.
  const double rho = std::sqrt(2.0) - 1;
  const auto counter = alexander_inverse(scale(L, rho));
  c.near(jacobian(counter, -(2 - std::sqrt(3.0)) / rho), 0.0, 1e-10, "Jacobian zero of the counterexample");
}

void figure_criterion(Checker& c) {
  const std::string fig1 = render_svg(gallery("L"), {0.871854, 8, 16});
  const std::string fig2 = render_svg(gallery("LL"), {0.267949, 8, 16});
  std::ofstream("figure1_L.svg") << fig1;
  std::ofstream("figure2_LL.svg") << fig2;
  const double starlike = boundary_monotonicity(boundary_vertices(fig1), Property::starlike);
  const double convex = boundary_monotonicity(boundary_vertices(fig2), Property::convex);
  c.expect(starlike >= -1e-3, "figure 1 boundary starlike, min " + std::to_string(starlike));
  c.expect(convex >= -1e-3, "figure 2 boundary convex, min " + std::to_string(convex));
}

void conjecture_report() {
  std::printf("      sharpness over whole classes is not verified; only the named extremal maps are checked.\n");
  const auto l = gallery("l"), L = gallery("L");
  for (double a : {0.25, 0.5}) {
    const double rs = half_plane_starlike_radius(Order(a)).radius;
    const double rc = half_plane_convex_radius(Order(a)).radius;
    std::printf("      open question, starlike radius of convex maps, alpha %.2f: l starlike at r_S=%.6f: %s; L: %s\n", a, rs,
                is_fully_starlike(l, rs * 0.999, Order(a), 1024).holds ? "holds" : "fails",
                is_fully_starlike(L, rs * 0.999, Order(a), 1024).holds ? "holds" : "fails");
    std::printf("      open question, convex radius of convex maps, alpha %.2f: l convex at r_C=%.6f: %s; L: %s\n", a, rc,
                is_fully_convex(l, rc * 0.999, Order(a), 1024).holds ? "holds" : "fails",
                is_fully_convex(L, rc * 0.999, Order(a), 1024).holds ? "holds" : "fails");
  }
  const double c = 2 - std::sqrt(3.0);
  std::printf("      open question, convolution convex radius: L*L convex below 2-sqrt3: %s; L*l convex below 2-sqrt3: %s\n",
              is_fully_convex(convolve(L, L), c * 0.999, Order(0), 1024).holds ? "holds" : "fails",
              is_fully_convex(convolve(L, gallery("l")), c * 0.999, Order(0), 1024).holds ? "holds" : "fails");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "radius table", radius_table_criterion},
      {2, "exact surd checks", surd_criterion},
      {3, "half-plane map closed-form radii", half_plane_criterion},
      {4, "empirical vs closed-form radii", empirical_criterion},
      {5, "sharpness suite and extremal Jacobians", sharpness_criterion},
      {6, "convolution identities", convolution_criterion},
      {7, "angular derivatives vs finite differences", angular_criterion},
      {8, "structural properties", structural_criterion},
      {9, "figure reproduction", figure_criterion},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Checker checker;
    try {
      crit.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = checker.failures().empty();
    failed += !ok;
    std::printf("%s  [%d] %s\n", ok ? "PASS" : "FAIL", crit.number, crit.title.c_str());
    std::size_t shown = 0;
    for (const auto& f : checker.failures()) {
      if (++shown > 10) {
        std::printf("      ... %zu more\n", checker.failures().size() - 10);
        break;
      }
      std::printf("      %s\n", f.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("N/A   [10] out of scope: class-wide sharpness and open questions (reported, not asserted)\n");
  conjecture_report();
  std::printf("%s\n", failed ? "acceptance: FAILED" : "acceptance: all criteria passed");
  return failed ? 1 : 0;
}
