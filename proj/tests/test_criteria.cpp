#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "harmonica/criteria.hpp"
#include "harmonica/error.hpp"
#include "harmonica/gallery.hpp"

using namespace harmonica;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::io_error;
}

// Term-by-term weighted sum over n = 2..N of the bound family.
double family_sum_direct(BoundFamily family, double alpha, double r, Property property) {
  double total = 0.0;
  for (int n = 2; n < 5000; ++n) {
    double A = 0, B = 0;
    switch (family) {
      case BoundFamily::eq12: A = (n + 1.0) * (2 * n + 1) / 6; B = (n - 1.0) * (2 * n - 1) / 6; break;
      case BoundFamily::eq14: A = (n + 1.0) / 2; B = (n - 1.0) / 2; break;
      case BoundFamily::eq42sq: A = (n + 1.0) * (n + 1) / 4; B = (n - 1.0) * (n - 1) / 4; break;
      case BoundFamily::eq46: A = (n + 1.0) * (n + 1) * (2 * n + 1) / 12; B = (n - 1.0) * (n - 1) * (2 * n - 1) / 12; break;
    }
    const double wa = property == Property::starlike ? n - alpha : n * (n - alpha);
    const double wb = property == Property::starlike ? n + alpha : n * (n + alpha);
    total += (wa * A + wb * B) * std::pow(r, n - 1);
  }
  return total / (1 - alpha);
}

}  // namespace

TEST(Order, Validation) {
  EXPECT_NO_THROW(Order(0.0));
  EXPECT_NO_THROW(Order(0.999));
  EXPECT_EQ(code_of([] { Order(1.0); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Order(-0.1); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Order(std::nan("")); }), ErrorCode::invalid_argument);
}

TEST(Property, Parse) {
  EXPECT_EQ(parse_property("starlike"), Property::starlike);
  EXPECT_EQ(parse_property("convex"), Property::convex);
  EXPECT_EQ(code_of([] { parse_property("round"); }), ErrorCode::invalid_argument);
}

TEST(Certificate, SingleTermMapsAttainEquality) {
  for (int n = 2; n <= 6; ++n) {
    for (double a : {0.0, 0.25, 0.5, 0.9}) {
      const auto fn = gallery("fn:" + std::to_string(n) + ":" + std::to_string(a));
      const auto c = starlike_sum(fn, Order(a));
      EXPECT_NEAR(c.sum, 1.0, 1e-14);
      EXPECT_TRUE(c.passed);
      EXPECT_TRUE(c.equality);
      EXPECT_FALSE(c.truncated);
      const auto Fn = gallery("Fn:" + std::to_string(n) + ":" + std::to_string(a));
      EXPECT_NEAR(convex_sum(Fn, Order(a)).sum, 1.0, 1e-14);
    }
  }
}

TEST(Certificate, IdentityAndAffine) {
  EXPECT_EQ(certify(gallery("identity"), Property::convex, Order(0.7)).sum, 0.0);
  // (1 + alpha)/(1 - alpha) * 1/2 <= 1 exactly when alpha <= 1/3.
  EXPECT_TRUE(starlike_sum(gallery("affine:1:0.5"), Order(0.3)).passed);
  EXPECT_FALSE(starlike_sum(gallery("affine:1:0.5"), Order(0.4)).passed);
}

TEST(Certificate, GrowingCoefficientsHaveNoCertificate) {
  EXPECT_EQ(code_of([] { starlike_sum(gallery("L"), Order(0)); }), ErrorCode::unbounded_tail);
  EXPECT_EQ(code_of([] { convex_sum(gallery("K"), Order(0)); }), ErrorCode::unbounded_tail);
}

TEST(Certificate, ScaledMapIncludesTailBound) {
  const auto f = scale(gallery("L", 64), 0.2);
  for (auto property : {Property::starlike, Property::convex}) {
    const double direct = family_sum_direct(BoundFamily::eq14, 0.1, 0.2, property);
    const auto c = certify(f, property, Order(0.1));
    EXPECT_GE(c.sum, direct - 1e-12);
    EXPECT_LE(c.sum, direct + 1e-12);
  }
}

TEST(Certificate, ImportedCoefficientsAreMarkedTruncated) {
  const auto h = series_from_csv("n,re,im\n1,1,0\n2,0.1,0\n");
  const auto g = series_from_csv("n,re,im\n1,0,0\n2,0.05,0\n");
  const auto c = starlike_sum(HarmonicMap(h, g), Order(0));
  EXPECT_TRUE(c.truncated);
  EXPECT_NEAR(c.sum, 0.3, 1e-15);
}

TEST(Certificate, Json) {
  const auto j = nlohmann::json::parse(starlike_sum(gallery("fn:2:0.5"), Order(0.5)).to_json());
  EXPECT_EQ(j.at("property"), "starlike");
  EXPECT_EQ(j.at("alpha"), 0.5);
  EXPECT_EQ(j.at("sum"), 1.0);
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.at("truncated"), false);
}

TEST(FamilySum, MatchesTermByTermSums) {
  for (auto family : {BoundFamily::eq12, BoundFamily::eq14, BoundFamily::eq42sq, BoundFamily::eq46}) {
    for (auto property : {Property::starlike, Property::convex}) {
      for (double a : {0.0, 0.5, 0.9}) {
        for (double r : {0.01, 0.1, 0.5}) {
          const double direct = family_sum_direct(family, a, r, property);
          EXPECT_NEAR(family_sum(family, Order(a), r, property), direct, 1e-11 * direct)
              << to_string(family) << " " << to_string(property) << " a=" << a << " r=" << r;
        }
      }
    }
  }
}

TEST(FamilySum, EqualsCertificateOfScaledExtremal) {
  const std::pair<const char*, BoundFamily> pairs[] = {
      {"x31", BoundFamily::eq12}, {"x35", BoundFamily::eq14}, {"x42", BoundFamily::eq42sq}, {"x46", BoundFamily::eq46}};
  for (const auto& [name, family] : pairs) {
    const auto f = scale(gallery(name, 128), 0.05);
    EXPECT_NEAR(starlike_sum(f, Order(0.2)).sum, family_sum(family, Order(0.2), 0.05), 1e-12) << name;
  }
}

TEST(FamilySum, Guards) {
  EXPECT_EQ(code_of([] { family_sum(BoundFamily::eq12, Order(0), 1.0); }), ErrorCode::radius_guard);
  EXPECT_EQ(code_of([] { family_sum(BoundFamily::eq12, Order(0), 0.0); }), ErrorCode::radius_guard);
  EXPECT_NEAR(family_sum(BoundFamily::eq46, Order(0), 1e-9), 0.0, 1e-7);
}

TEST(AnalyticCheck, KoebeAndHalfPlane) {
  const auto k = gallery("k").h();
  const auto l = gallery("l").h();
  EXPECT_TRUE(analytic_order_check(k, Order(0), Property::starlike, 0.99, 512).passed);
  // Re((1+z)/(1-z)) >= (1-r)/(1+r) on |z| = r.
  const auto check = analytic_order_check(k, Order(0), Property::starlike, 0.5, 512);
  EXPECT_NEAR(check.worst_value, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(check.worst_theta, std::numbers::pi, 1e-12);
  EXPECT_TRUE(analytic_order_check(l, Order(0.49), Property::starlike, 0.99, 512).passed);
  EXPECT_TRUE(analytic_order_check(l, Order(0), Property::convex, 0.99, 512).passed);
  EXPECT_TRUE(analytic_order_check(k, Order(0), Property::convex, 0.26, 512).passed);
  EXPECT_FALSE(analytic_order_check(k, Order(0), Property::convex, 0.28, 512).passed);
}

TEST(AnalyticCheck, SeriesOnlyNeedsLongTruncation) {
  const double r = 0.99;
  const std::size_t N = required_truncation(Growth::cubic, r, 1e-12 * r * r);
  const auto k = gallery("k", N).h().without_family();
  EXPECT_TRUE(analytic_order_check(k, Order(0), Property::starlike, r, 256).passed);
  EXPECT_EQ(code_of([] { analytic_order_check(gallery("k", 64).h().without_family(), Order(0), Property::starlike, 0.99, 256); }),
            ErrorCode::tail_bound);
}

TEST(AnalyticCheck, Degenerate) {
  // s = z - z^2 has s'(1/2) = 0.
  const TruncatedSeries s({1.0, -1.0}, TailModel::exact());
  EXPECT_EQ(code_of([&] { analytic_order_check(s, Order(0), Property::convex, 0.5, 8); }), ErrorCode::degenerate);
  EXPECT_EQ(code_of([&] { analytic_order_check(s, Order(0), Property::convex, 1.0, 8); }), ErrorCode::radius_guard);
}
