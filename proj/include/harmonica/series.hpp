#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace harmonica {

using Complex = std::complex<double>;

/// Absolute tolerance used when a caller does not pass one to a guarded
/// series evaluation.
inline constexpr double kDefaultTailTolerance = 1e-12;

/// Truncation order used by the gallery unless HARMONICA_TRUNCATION overrides it.
inline constexpr std::size_t kDefaultTruncation = 256;

/// Reads HARMONICA_TRUNCATION, falling back to kDefaultTruncation.
std::size_t default_truncation();

/// Polynomial coefficient growth |c_n| <= n^k used for tail control.
enum class Growth { linear = 1, quadratic = 2, cubic = 3 };

/// Coefficients of the Eulerian polynomial E_k, so that
/// sum_{n>=1} n^k x^n = x E_k(x) / (1-x)^(k+1).
const std::vector<double>& eulerian_polynomial(int k);

/// sum_{n>=1} n^k x^n for 0 <= x < 1, in closed form.
double power_sum(int k, double x);

/// sum_{n>N} n^k x^n for 0 <= x < 1, in closed form (binomial shift of power_sum).
double power_tail(int k, double x, std::size_t N);

/// Upper bound on sum_{n>N} C(n) r^n for C(n) = n^k. Rejects r outside [0,1).
double tail_bound(Growth growth, double r, std::size_t N);
double tail_bound(int degree, double r, std::size_t N);

/// Smallest N with tail_bound(growth, r, N) < tol.
std::size_t required_truncation(Growth growth, double r, double tol);
std::size_t required_truncation(int degree, double r, double tol);

/// What is known about the coefficients beyond the stored ones.
///   exact:      c_n = 0 for n > N (polynomial maps)
///   polynomial: |c_n| <= constant * n^degree * ratio^(n-1) for n > N
///   unknown:    nothing (imported data); no guard can be applied
struct TailModel {
  enum class Kind { exact, polynomial, unknown };

  Kind kind = Kind::unknown;
  int degree = 0;
  double constant = 0.0;
  double ratio = 1.0;

  static TailModel exact() { return {Kind::exact, 0, 0.0, 1.0}; }
  static TailModel polynomial(int degree, double constant = 1.0, double ratio = 1.0) {
    return {Kind::polynomial, degree, constant, ratio};
  }
  static TailModel unknown() { return {Kind::unknown, 0, 0.0, 1.0}; }

  /// Bound on sum_{n>N} n^extra_degree |c_n| radius^n. Infinite when the
  /// tail does not converge; zero for exact tails; NaN for unknown tails.
  double bound(std::size_t N, double radius, int extra_degree = 0) const;
};

/// Closed-form description c_1 = first, c_n = (P(n) + harmonic/n) ratio^(n-1)
/// for n >= 2, with P a polynomial in n. Every named mapping in the gallery
/// has this shape, which makes the sum evaluable as a rational function of z
/// (plus a logarithm when harmonic != 0).
struct CoefficientFamily {
  Complex first{1.0, 0.0};
  std::vector<Complex> poly;  // ascending powers of n
  Complex harmonic{0.0, 0.0};
  double ratio = 1.0;

  Complex coefficient(std::size_t n) const;
};

/// Value together with first and second derivative.
struct SeriesJet {
  Complex value;
  Complex d1;
  Complex d2;
};

SeriesJet family_jet(const CoefficientFamily& family, Complex z);

/// sum_{n=1}^{N} c_n z^n. The constant term is structurally absent.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Complex> coeffs,
                           TailModel tail = TailModel::unknown(),
                           std::optional<CoefficientFamily> family = std::nullopt);

  /// c_n = coefficient(n) for n = 1..N.
  static TruncatedSeries generate(std::size_t N, const std::function<Complex(std::size_t)>& coefficient,
                                  TailModel tail, std::optional<CoefficientFamily> family = std::nullopt);

  /// Finite series with a single non-zero term c z^n.
  static TruncatedSeries monomial(std::size_t n, Complex c, std::size_t N);

  std::size_t order() const { return coeffs_.size(); }
  /// 1-based; zero beyond the truncation order.
  Complex coefficient(std::size_t n) const;
  /// Index 0 holds c_1.
  std::span<const Complex> coefficients() const { return coeffs_; }
  const TailModel& tail() const { return tail_; }
  const std::optional<CoefficientFamily>& family() const { return family_; }

  /// Same coefficients, closed form dropped (forces the series path).
  TruncatedSeries without_family() const;
  TruncatedSeries with_tail(TailModel tail) const;

 private:
  std::vector<Complex> coeffs_;
  TailModel tail_;
  std::optional<CoefficientFamily> family_;
};

/// Evaluates s(z), preferring the closed form when one is attached.
Complex evaluate(const TruncatedSeries& s, Complex z, double tol = kDefaultTailTolerance);
/// Horner evaluation of the stored coefficients; raises tail_bound when the
/// truncation error estimate at |z| exceeds tol.
Complex evaluate_series(const TruncatedSeries& s, Complex z, double tol = kDefaultTailTolerance);

SeriesJet jet(const TruncatedSeries& s, Complex z, double tol = kDefaultTailTolerance);
SeriesJet jet_series(const TruncatedSeries& s, Complex z, double tol = kDefaultTailTolerance);

/// d/dz splits into a constant c_1 and the series sum_{n>=1} (n+1) c_{n+1} z^n.
struct DerivativeSeries {
  Complex constant;
  TruncatedSeries rest;
};
DerivativeSeries derivative(const TruncatedSeries& s);

/// z d/dz: c_n -> n c_n.
TruncatedSeries z_derivative(const TruncatedSeries& s);

/// Coefficientwise product; truncation is the smaller of the two.
TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t);

/// c_n -> c_n / n (negated when requested): the H with zH' = s, or G with zG' = -s.
TruncatedSeries alexander_integrate(const TruncatedSeries& s, bool negate);

/// a s + b t, truncated to the smaller order.
TruncatedSeries linear_combination(Complex a, const TruncatedSeries& s, Complex b, const TruncatedSeries& t);

/// c_n -> c_n r^(n-1), i.e. s(rz)/r.
TruncatedSeries dilate(const TruncatedSeries& s, double r);

/// CSV with header `n,re,im`, one row per coefficient.
std::string to_csv(const TruncatedSeries& s);
TruncatedSeries series_from_csv(std::string_view text);
void write_csv_file(const TruncatedSeries& s, const std::string& path);
TruncatedSeries read_csv_file(const std::string& path);

}  // namespace harmonica
