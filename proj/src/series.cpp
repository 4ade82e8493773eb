#include "harmonica/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>

#include "harmonica/error.hpp"
#include "polynomial.hpp"

namespace harmonica {

std::size_t default_truncation() {
  if (const char* env = std::getenv("HARMONICA_TRUNCATION")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultTruncation;
}

// ---------------------------------------------------------------------------
// Eulerian sums

const std::vector<double>& eulerian_polynomial(int k) {
  static std::mutex mutex;
  static std::vector<std::vector<double>> table{{1.0}};
  if (k < 0) throw Error(ErrorCode::invalid_argument, "eulerian_polynomial: negative degree");
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= k) {
    const int m = static_cast<int>(table.size());
    const auto& prev = table.back();
    // A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1), j = 0..m-1
    std::vector<double> next(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
      const double a = j < static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(j)] : 0.0;
      const double b = (j >= 1 && j - 1 < static_cast<int>(prev.size())) ? prev[static_cast<std::size_t>(j - 1)] : 0.0;
      next[static_cast<std::size_t>(j)] = (j + 1) * a + (m - j) * b;
    }
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(k)];
}

double power_sum(int k, double x) {
  if (x < 0.0 || x >= 1.0) throw Error(ErrorCode::radius_guard, "power_sum: requires 0 <= x < 1");
  const auto& e = eulerian_polynomial(k);
  double poly = 0.0;
  for (auto it = e.rbegin(); it != e.rend(); ++it) poly = poly * x + *it;
  return x * poly / std::pow(1.0 - x, k + 1);
}

double power_tail(int k, double x, std::size_t N) {
  if (x < 0.0 || x >= 1.0) throw Error(ErrorCode::radius_guard, "power_tail: requires 0 <= x < 1");
  if (x == 0.0) return 0.0;
  // sum_{m>=1} (m+N)^k x^(m+N) = x^N sum_j binom(k,j) N^(k-j) sum_m m^j x^m
  const double n = static_cast<double>(N);
  double total = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    total += binom * std::pow(n, k - j) * power_sum(j, x);
    binom = binom * (k - j) / (j + 1);
  }
  return std::pow(x, n) * total;
}

double tail_bound(int degree, double r, std::size_t N) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::radius_guard, "tail_bound: requires 0 <= r < 1");
  if (degree < 0) throw Error(ErrorCode::invalid_argument, "tail_bound: negative degree");
  return power_tail(degree, r, N);
}

double tail_bound(Growth growth, double r, std::size_t N) {
  return tail_bound(static_cast<int>(growth), r, N);
}

std::size_t required_truncation(int degree, double r, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "required_truncation: tolerance must be positive");
  if (tail_bound(degree, r, 1) < tol) return 1;
  std::size_t hi = 2;
  while (tail_bound(degree, r, hi) >= tol) {
    if (hi > (std::size_t{1} << 40)) throw Error(ErrorCode::not_converged, "required_truncation: order overflow");
    hi *= 2;
  }
  std::size_t lo = hi / 2;  // bound(lo) >= tol
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tail_bound(degree, r, mid) < tol) hi = mid; else lo = mid;
  }
  return hi;
}

std::size_t required_truncation(Growth growth, double r, double tol) {
  return required_truncation(static_cast<int>(growth), r, tol);
}

double TailModel::bound(std::size_t N, double radius, int extra_degree) const {
  switch (kind) {
    case Kind::exact: return 0.0;
    case Kind::unknown: return std::numeric_limits<double>::quiet_NaN();
    case Kind::polynomial: break;
  }
  if (constant == 0.0 || ratio == 0.0 || radius == 0.0) return 0.0;
  const double x = ratio * radius;
  if (x >= 1.0) return std::numeric_limits<double>::infinity();
  return constant / ratio * power_tail(degree + extra_degree, x, N);
}

// ---------------------------------------------------------------------------
// Closed-form families

Complex CoefficientFamily::coefficient(std::size_t n) const {
  if (n == 0) return 0.0;
  if (n == 1) return first;
  const double m = static_cast<double>(n);
  const Complex base = detail::poly_eval(poly, m) + harmonic / m;
  return ratio == 1.0 ? base : base * std::pow(ratio, m - 1.0);
}

SeriesJet family_jet(const CoefficientFamily& family, Complex z) {
  if (std::abs(z) >= 1.0) throw Error(ErrorCode::radius_guard, "closed-form evaluation requires |z| < 1");
  const double s = family.ratio;
  if (s == 0.0) return {family.first * z, family.first, 0.0};
  const Complex zeta = s * z;
  const Complex w = 1.0 / (1.0 - zeta);
  const auto& P = family.poly;
  const Complex beta = family.harmonic;
  const Complex lambda = family.first - detail::poly_eval(P, 1.0) - beta;

  const auto nP = detail::poly_times_n(P);
  const auto T = detail::poly_shift_one(detail::poly_times_n(detail::poly_times_n_minus_one(P)));

  SeriesJet out;
  out.value = (lambda * zeta + zeta * detail::eulerian_sum(P, zeta, w)) / s;
  if (beta != 0.0) out.value -= beta * std::log(1.0 - zeta) / s;
  out.d1 = lambda + detail::eulerian_sum(nP, zeta, w) + beta * w;
  out.d2 = s * (detail::eulerian_sum(T, zeta, w) + beta * w * w);
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, TailModel tail,
                                 std::optional<CoefficientFamily> family)
    : coeffs_(std::move(coeffs)), tail_(tail), family_(std::move(family)) {
  if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "TruncatedSeries: truncation order must be positive");
}

TruncatedSeries TruncatedSeries::generate(std::size_t N, const std::function<Complex(std::size_t)>& coefficient,
                                          TailModel tail, std::optional<CoefficientFamily> family) {
  std::vector<Complex> c(N);
  for (std::size_t n = 1; n <= N; ++n) c[n - 1] = coefficient(n);
  return TruncatedSeries(std::move(c), tail, std::move(family));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t n, Complex c, std::size_t N) {
  if (n == 0 || n > N) throw Error(ErrorCode::invalid_argument, "monomial: index outside 1..N");
  std::vector<Complex> coeffs(N, 0.0);
  coeffs[n - 1] = c;
  return TruncatedSeries(std::move(coeffs), TailModel::exact());
}

Complex TruncatedSeries::coefficient(std::size_t n) const {
  if (n == 0 || n > coeffs_.size()) return 0.0;
  return coeffs_[n - 1];
}

TruncatedSeries TruncatedSeries::without_family() const { return TruncatedSeries(coeffs_, tail_); }

TruncatedSeries TruncatedSeries::with_tail(TailModel tail) const { return TruncatedSeries(coeffs_, tail, family_); }

namespace {

void check_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::radius_guard, "series evaluation requires |z| < 1");
}

void guard_tail(const TruncatedSeries& s, double radius, int extra_degree, double tol) {
  if (s.tail().kind != TailModel::Kind::polynomial) return;
  const double bound = s.tail().bound(s.order(), radius, extra_degree);
  if (!(bound <= tol)) {
    std::ostringstream msg;
    msg << "truncation order " << s.order() << " leaves tail bound " << bound << " at |z| = " << radius
        << " (tolerance " << tol << ")";
    throw Error(ErrorCode::tail_bound, msg.str());
  }
}

}  // namespace

Complex evaluate_series(const TruncatedSeries& s, Complex z, double tol) {
  check_disk(z);
  guard_tail(s, std::abs(z), 0, tol);
  const auto c = s.coefficients();
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc * z;
}

Complex evaluate(const TruncatedSeries& s, Complex z, double tol) {
  if (s.family()) return family_jet(*s.family(), z).value;
  return evaluate_series(s, z, tol);
}

SeriesJet jet_series(const TruncatedSeries& s, Complex z, double tol) {
  check_disk(z);
  // sum n^2 |c_n| rho^(n-2) with rho = max(|z|, 1/2) dominates the tails of
  // the value and both derivatives.
  if (s.tail().kind == TailModel::Kind::polynomial) {
    const double rho = std::max(std::abs(z), 0.5);
    const double bound = s.tail().bound(s.order(), rho, 2) / (rho * rho);
    if (!(bound <= tol)) {
      std::ostringstream msg;
      msg << "truncation order " << s.order() << " leaves derivative tail bound " << bound << " at |z| = "
          << std::abs(z) << " (tolerance " << tol << ")";
      throw Error(ErrorCode::tail_bound, msg.str());
    }
  }
  // Horner for p(z) = sum c_n z^(n-1); s = z p, s' = p + z p', s'' = 2p' + z p''.
  const auto c = s.coefficients();
  Complex p = 0.0, dp = 0.0, ddp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {z * p, p + z * dp, 2.0 * dp + z * ddp};
}

SeriesJet jet(const TruncatedSeries& s, Complex z, double tol) {
  if (s.family()) return family_jet(*s.family(), z);
  return jet_series(s, z, tol);
}

DerivativeSeries derivative(const TruncatedSeries& s) {
  const std::size_t N = s.order();
  std::vector<Complex> rest(std::max<std::size_t>(N - 1, 1), 0.0);
  for (std::size_t n = 1; n + 1 <= N; ++n) rest[n - 1] = static_cast<double>(n + 1) * s.coefficient(n + 1);
  TailModel tail = s.tail();
  if (tail.kind == TailModel::Kind::polynomial) {
    tail.constant *= std::pow(2.0, tail.degree + 1) * tail.ratio;
    tail.degree += 1;
  }
  return {s.coefficient(1), TruncatedSeries(std::move(rest), tail)};
}

TruncatedSeries z_derivative(const TruncatedSeries& s) {
  const auto c = s.coefficients();
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = static_cast<double>(i + 1) * c[i];
  TailModel tail = s.tail();
  if (tail.kind == TailModel::Kind::polynomial) tail.degree += 1;
  std::optional<CoefficientFamily> family;
  if (s.family()) {
    CoefficientFamily f = *s.family();
    f.poly = detail::poly_times_n(f.poly);
    if (f.harmonic != 0.0) f.poly = detail::poly_add(f.poly, {f.harmonic});
    f.harmonic = 0.0;
    family = std::move(f);
  }
  return TruncatedSeries(std::move(out), tail, std::move(family));
}

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t) {
  const std::size_t N = std::min(s.order(), t.order());
  std::vector<Complex> out(N);
  for (std::size_t i = 0; i < N; ++i) out[i] = s.coefficients()[i] * t.coefficients()[i];

  using Kind = TailModel::Kind;
  TailModel tail;
  const auto& a = s.tail();
  const auto& b = t.tail();
  if (a.kind == Kind::exact || b.kind == Kind::exact) {
    // A finite factor kills every coefficient beyond its own order; the product
    // is finite only if that order is within N.
    const bool finite = (a.kind == Kind::exact && s.order() <= N) || (b.kind == Kind::exact && t.order() <= N);
    tail = finite ? TailModel::exact() : TailModel::unknown();
  } else if (a.kind == Kind::polynomial && b.kind == Kind::polynomial) {
    tail = TailModel::polynomial(a.degree + b.degree, a.constant * b.constant, a.ratio * b.ratio);
  } else {
    tail = TailModel::unknown();
  }

  std::optional<CoefficientFamily> family;
  if (s.family() && t.family()) {
    const auto& f = *s.family();
    const auto& g = *t.family();
    if (f.harmonic == 0.0 || g.harmonic == 0.0) {
      CoefficientFamily h;
      h.first = f.first * g.first;
      h.ratio = f.ratio * g.ratio;
      h.poly = detail::poly_mul(f.poly, g.poly);
      // (beta/n) Q(n) = beta (Q(n) - Q(0))/n + beta Q(0)/n
      auto absorb = [&](Complex beta, const std::vector<Complex>& Q) {
        if (beta == 0.0) return;
        h.poly = detail::poly_add(h.poly, detail::poly_scale(detail::poly_div_n(Q), beta));
        h.harmonic += beta * (Q.empty() ? Complex(0.0) : Q.front());
      };
      absorb(f.harmonic, g.poly);
      absorb(g.harmonic, f.poly);
      family = std::move(h);
    }
  }
  return TruncatedSeries(std::move(out), tail, std::move(family));
}

TruncatedSeries alexander_integrate(const TruncatedSeries& s, bool negate) {
  const auto c = s.coefficients();
  const double sign = negate ? -1.0 : 1.0;
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = sign * c[i] / static_cast<double>(i + 1);
  TailModel tail = s.tail();
  if (tail.kind == TailModel::Kind::polynomial && tail.degree > 0) tail.degree -= 1;
  std::optional<CoefficientFamily> family;
  if (s.family() && s.family()->harmonic == 0.0) {
    const auto& f = *s.family();
    CoefficientFamily g;
    g.first = sign * f.first;
    g.ratio = f.ratio;
    g.poly = detail::poly_scale(detail::poly_div_n(f.poly), sign);
    g.harmonic = sign * (f.poly.empty() ? Complex(0.0) : f.poly.front());
    family = std::move(g);
  }
  return TruncatedSeries(std::move(out), tail, std::move(family));
}

TruncatedSeries linear_combination(Complex a, const TruncatedSeries& s, Complex b, const TruncatedSeries& t) {
  const std::size_t N = std::min(s.order(), t.order());
  std::vector<Complex> out(N);
  for (std::size_t i = 0; i < N; ++i) out[i] = a * s.coefficients()[i] + b * t.coefficients()[i];

  using Kind = TailModel::Kind;
  const auto& x = s.tail();
  const auto& y = t.tail();
  TailModel tail = TailModel::unknown();
  const bool truncated_exact = (x.kind == Kind::exact && s.order() > N) || (y.kind == Kind::exact && t.order() > N);
  if (x.kind == Kind::unknown || y.kind == Kind::unknown || truncated_exact) {
    tail = TailModel::unknown();
  } else if (x.kind == Kind::exact && y.kind == Kind::exact) {
    tail = TailModel::exact();
  } else {
    const double cx = x.kind == Kind::polynomial ? std::abs(a) * x.constant : 0.0;
    const double cy = y.kind == Kind::polynomial ? std::abs(b) * y.constant : 0.0;
    const int degree = std::max(x.kind == Kind::polynomial ? x.degree : 0, y.kind == Kind::polynomial ? y.degree : 0);
    const double ratio = std::max(x.kind == Kind::polynomial ? x.ratio : 0.0, y.kind == Kind::polynomial ? y.ratio : 0.0);
    tail = TailModel::polynomial(degree, cx + cy, ratio);
  }

  std::optional<CoefficientFamily> family;
  if (s.family() && t.family() && s.family()->ratio == t.family()->ratio) {
    const auto& f = *s.family();
    const auto& g = *t.family();
    CoefficientFamily h;
    h.first = a * f.first + b * g.first;
    h.ratio = f.ratio;
    h.poly = detail::poly_add(detail::poly_scale(f.poly, a), detail::poly_scale(g.poly, b));
    h.harmonic = a * f.harmonic + b * g.harmonic;
    family = std::move(h);
  }
  return TruncatedSeries(std::move(out), tail, std::move(family));
}

TruncatedSeries dilate(const TruncatedSeries& s, double r) {
  const auto c = s.coefficients();
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * std::pow(r, static_cast<double>(i));
  TailModel tail = s.tail();
  if (tail.kind == TailModel::Kind::polynomial) tail.ratio *= r;
  std::optional<CoefficientFamily> family = s.family();
  if (family) family->ratio *= r;
  return TruncatedSeries(std::move(out), tail, std::move(family));
}

// ---------------------------------------------------------------------------
// CSV

std::string to_csv(const TruncatedSeries& s) {
  std::string out = "n,re,im\n";
  char line[96];
  for (std::size_t n = 1; n <= s.order(); ++n) {
    const Complex c = s.coefficient(n);
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", n, c.real() + 0.0, c.imag() + 0.0);
    out += line;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
  const std::string copy(trim(field));
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size())
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": not a number: '" + copy + "'");
  return v;
}

}  // namespace

TruncatedSeries series_from_csv(std::string_view text) {
  std::vector<Complex> coeffs;
  std::size_t line_no = 0;
  bool header = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header) {
      if (line != "n,re,im") throw Error(ErrorCode::parse_error, "expected header 'n,re,im'");
      header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected three fields");
    const double n = parse_double(line.substr(0, c1), line_no);
    if (n != static_cast<double>(coeffs.size() + 1))
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": rows must be n = 1, 2, ... without gaps");
    coeffs.emplace_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                        parse_double(line.substr(c2 + 1), line_no));
  }
  if (!header) throw Error(ErrorCode::parse_error, "empty coefficient file");
  if (coeffs.empty()) throw Error(ErrorCode::parse_error, "no coefficient rows");
  return TruncatedSeries(std::move(coeffs), TailModel::unknown());
}

void write_csv_file(const TruncatedSeries& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  out << to_csv(s);
}

TruncatedSeries read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return series_from_csv(buf.str());
}

}  // namespace harmonica
