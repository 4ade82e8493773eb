#pragma once

#include <string>

#include "harmonica/harmonic_map.hpp"

namespace harmonica {

/// The order alpha in [0, 1).
class Order {
 public:
  explicit Order(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

enum class Property { starlike, convex };

std::string to_string(Property p);
Property parse_property(const std::string& text);

/// Outcome of a coefficient-sum test. passed <=> sum <= 1 + 1e-12.
struct Certificate {
  Property property = Property::starlike;
  double alpha = 0.0;
  double sum = 0.0;
  bool passed = false;
  bool equality = false;   // |sum - 1| <= 1e-12
  bool truncated = false;  // only the stored coefficients were summed

  /// `{"property", "alpha", "sum", "passed", "truncated"}`
  std::string to_json() const;
};

inline constexpr double kCertificateSlack = 1e-12;

/// sum_{n>=2} (n-alpha)/(1-alpha)|a_n| + sum_{n>=1} (n+alpha)/(1-alpha)|b_n|.
/// A polynomial tail contributes its analytic bound; an unknown tail marks
/// the certificate truncated. Coefficients whose tail does not converge at
/// radius 1 raise unbounded_tail.
Certificate starlike_sum(const HarmonicMap& f, Order alpha);

/// Same with weights n(n-alpha)/(1-alpha) and n(n+alpha)/(1-alpha).
Certificate convex_sum(const HarmonicMap& f, Order alpha);

Certificate certify(const HarmonicMap& f, Property property, Order alpha);

/// Coefficient-bound families |a_n| <= A(n), |b_n| <= B(n).
enum class BoundFamily { eq12, eq14, eq42sq, eq46 };

std::string to_string(BoundFamily f);

/// The weighted sum of a bound family evaluated on f_r = f(rz)/r, i.e.
/// (1/(1-alpha)) sum_{n>=2} [w_a(n) A(n) + w_b(n) B(n)] r^(n-1), in closed form.
double family_sum(BoundFamily family, Order alpha, double r, Property property = Property::starlike);

struct AnalyticCheck {
  bool passed = true;
  double worst_theta = 0.0;
  double worst_value = 0.0;  // min over the circle of Re(...) - alpha
};

/// Samples Re(z s'/s) - alpha (starlike) or Re(1 + z s''/s') - alpha (convex)
/// on |z| = r.
AnalyticCheck analytic_order_check(const TruncatedSeries& s, Order alpha, Property property, double r, int samples);

}  // namespace harmonica
