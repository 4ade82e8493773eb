#include "harmonica/gallery.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

using Kind = GalleryId::Kind;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(std::string_view field, std::string_view whole) {
  const std::string copy(field);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size())
    throw Error(ErrorCode::parse_error, "bad number '" + copy + "' in gallery name '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

TruncatedSeries zero_series(std::size_t N) {
  CoefficientFamily zero;
  zero.first = 0.0;
  return TruncatedSeries(std::vector<Complex>(N, 0.0), TailModel::exact(), zero);
}

CoefficientFamily family(Complex first, std::vector<Complex> poly) {
  CoefficientFamily f;
  f.first = first;
  f.poly = std::move(poly);
  return f;
}

TruncatedSeries family_series(std::size_t N, int degree, const CoefficientFamily& fam,
                              const std::function<Complex(std::size_t)>& exact_coefficient) {
  return TruncatedSeries::generate(N, exact_coefficient, TailModel::polynomial(degree), fam);
}

// Coefficient formulas, evaluated with a single rounding where possible.
double koebe_a(std::size_t n) { return static_cast<double>((n + 1) * (2 * n + 1)) / 6.0; }
double koebe_b(std::size_t n) { return static_cast<double>((n - 1) * (2 * n - 1)) / 6.0; }
double half_a(std::size_t n) { return static_cast<double>(n + 1) / 2.0; }
double half_b_abs(std::size_t n) { return static_cast<double>(n - 1) / 2.0; }
double sq_a(std::size_t n) { return static_cast<double>((n + 1) * (n + 1)) / 4.0; }
double sq_b(std::size_t n) { return static_cast<double>((n - 1) * (n - 1)) / 4.0; }
double lk_a(std::size_t n) { return static_cast<double>((n + 1) * (n + 1) * (2 * n + 1)) / 12.0; }
double lk_b(std::size_t n) { return static_cast<double>((n - 1) * (n - 1) * (2 * n - 1)) / 12.0; }

const std::vector<Complex> kKoebeA{1.0 / 6.0, 0.5, 1.0 / 3.0};
const std::vector<Complex> kKoebeB{1.0 / 6.0, -0.5, 1.0 / 3.0};
const std::vector<Complex> kHalfA{0.5, 0.5};
const std::vector<Complex> kHalfB{0.5, -0.5};  // signed (1-n)/2
const std::vector<Complex> kSqA{0.25, 0.5, 0.25};
const std::vector<Complex> kSqB{0.25, -0.5, 0.25};
const std::vector<Complex> kLkA{1.0 / 12.0, 4.0 / 12.0, 5.0 / 12.0, 2.0 / 12.0};
const std::vector<Complex> kLkB{-1.0 / 12.0, 4.0 / 12.0, -5.0 / 12.0, 2.0 / 12.0};

std::vector<Complex> negated(std::vector<Complex> p) {
  for (auto& c : p) c = -c;
  return p;
}

HarmonicMap harmonic_koebe(std::size_t N) {
  return HarmonicMap(family_series(N, 2, family(1.0, kKoebeA), koebe_a),
                     family_series(N, 2, family(0.0, kKoebeB), koebe_b), "K");
}

HarmonicMap harmonic_halfplane(std::size_t N) {
  return HarmonicMap(family_series(N, 1, family(1.0, kHalfA), half_a),
                     family_series(N, 1, family(0.0, kHalfB), [](std::size_t n) { return -half_b_abs(n); }), "L");
}

/// z - sum_{n>=2} A_n z^n + conj(sum_{n>=2} B_n z^n)
HarmonicMap extremal(std::size_t N, int degree, const std::vector<Complex>& A, const std::vector<Complex>& B,
                     double (*a)(std::size_t), double (*b)(std::size_t), std::string name) {
  auto h = family_series(N, degree, family(1.0, negated(A)), [a](std::size_t n) { return n == 1 ? 1.0 : -a(n); });
  auto g = family_series(N, degree, family(0.0, B), [b](std::size_t n) { return b(n); });
  return HarmonicMap(std::move(h), std::move(g), std::move(name));
}

HarmonicMap single_term(Complex a1, std::size_t n, Complex bn, std::string name) {
  const std::size_t N = std::max<std::size_t>(n, 1);
  std::vector<Complex> h(N, 0.0);
  h[0] = a1;
  std::vector<Complex> g(N, 0.0);
  g[n - 1] = bn;
  return HarmonicMap(TruncatedSeries(std::move(h), TailModel::exact()),
                     TruncatedSeries(std::move(g), TailModel::exact()), std::move(name));
}

void check_order(double alpha, std::string_view what) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": alpha must lie in [0, 1)");
}

}  // namespace

std::string GalleryId::name() const {
  switch (kind) {
    case Kind::identity: return "identity";
    case Kind::analytic_koebe: return "k";
    case Kind::analytic_halfplane: return "l";
    case Kind::harmonic_koebe: return "K";
    case Kind::harmonic_halfplane: return "L";
    case Kind::starlike_fn: return "fn:" + std::to_string(n) + ":" + format_number(alpha);
    case Kind::convex_Fn: return "Fn:" + std::to_string(n) + ":" + format_number(alpha);
    case Kind::affine: return "affine:" + format_number(a) + ":" + format_number(b);
    case Kind::extremal_3_1: return "x31";
    case Kind::extremal_3_5: return "x35";
    case Kind::extremal_4_2: return "x42";
    case Kind::extremal_4_6: return "x46";
    case Kind::LL: return "LL";
    case Kind::LK: return "LK";
  }
  return {};
}

GalleryId parse_gallery_id(std::string_view text) {
  GalleryId id;
  static const std::pair<std::string_view, Kind> simple[] = {
      {"identity", Kind::identity}, {"k", Kind::analytic_koebe}, {"l", Kind::analytic_halfplane},
      {"K", Kind::harmonic_koebe},  {"L", Kind::harmonic_halfplane}, {"x31", Kind::extremal_3_1},
      {"x35", Kind::extremal_3_5},  {"x42", Kind::extremal_4_2},     {"x46", Kind::extremal_4_6},
      {"LL", Kind::LL},             {"LK", Kind::LK},
  };
  for (const auto& [name, kind] : simple) {
    if (text == name) {
      id.kind = kind;
      return id;
    }
  }
  const auto parts = split(text, ':');
  if (parts.size() == 3 && (parts[0] == "fn" || parts[0] == "Fn")) {
    id.kind = parts[0] == "fn" ? Kind::starlike_fn : Kind::convex_Fn;
    const double n = parse_number(parts[1], text);
    if (n != std::floor(n) || n < 2 || n > 1e6)
      throw Error(ErrorCode::invalid_argument, "gallery '" + std::string(text) + "': n must be an integer >= 2");
    id.n = static_cast<int>(n);
    id.alpha = parse_number(parts[2], text);
    check_order(id.alpha, text);
    return id;
  }
  if (parts.size() == 3 && parts[0] == "affine") {
    id.kind = Kind::affine;
    id.a = parse_number(parts[1], text);
    id.b = parse_number(parts[2], text);
    if (!(std::abs(id.a) > std::abs(id.b)))
      throw Error(ErrorCode::invalid_argument, "gallery '" + std::string(text) + "': requires |a| > |b|");
    return id;
  }
  throw Error(ErrorCode::invalid_argument, "unknown gallery map '" + std::string(text) + "'");
}

HarmonicMap gallery(const GalleryId& id, std::size_t N) {
  if (N == 0) throw Error(ErrorCode::invalid_argument, "gallery: truncation must be positive");
  switch (id.kind) {
    case Kind::identity: return identity_map(1);
    case Kind::analytic_koebe:
      return HarmonicMap(family_series(N, 1, family(1.0, {0.0, 1.0}),
                                       [](std::size_t n) { return static_cast<double>(n); }),
                         zero_series(N), "k");
    case Kind::analytic_halfplane:
      return HarmonicMap(family_series(N, 0, family(1.0, {1.0}), [](std::size_t) { return 1.0; }),
                         zero_series(N), "l");
    case Kind::harmonic_koebe: return harmonic_koebe(N);
    case Kind::harmonic_halfplane: return harmonic_halfplane(N);
    case Kind::starlike_fn:
      check_order(id.alpha, "fn");
      return single_term(1.0, static_cast<std::size_t>(id.n), (1.0 - id.alpha) / (id.n + id.alpha), id.name());
    case Kind::convex_Fn:
      check_order(id.alpha, "Fn");
      return single_term(1.0, static_cast<std::size_t>(id.n), -(1.0 - id.alpha) / (id.n * (id.n + id.alpha)),
                         id.name());
    case Kind::affine:
      if (!(std::abs(id.a) > std::abs(id.b))) throw Error(ErrorCode::invalid_argument, "affine: requires |a| > |b|");
      return single_term(id.a, 1, id.b, id.name());
    case Kind::extremal_3_1: return extremal(N, 2, kKoebeA, kKoebeB, koebe_a, koebe_b, "x31");
    case Kind::extremal_3_5: return extremal(N, 1, kHalfA, negated(kHalfB), half_a, half_b_abs, "x35");
    case Kind::extremal_4_2: return extremal(N, 2, kSqA, kSqB, sq_a, sq_b, "x42");
    case Kind::extremal_4_6: return extremal(N, 3, kLkA, kLkB, lk_a, lk_b, "x46");
    case Kind::LL: {
      const auto L = harmonic_halfplane(N);
      return convolve(L, L).renamed("LL");
    }
    case Kind::LK: return convolve(harmonic_halfplane(N), harmonic_koebe(N)).renamed("LK");
  }
  throw Error(ErrorCode::invalid_argument, "gallery: unhandled map");
}

HarmonicMap gallery(std::string_view name, std::size_t N) { return gallery(parse_gallery_id(name), N); }

HarmonicMap identity_map(std::size_t N) {
  std::vector<Complex> h(N, 0.0);
  h[0] = 1.0;
  CoefficientFamily id_family;
  CoefficientFamily zero;
  zero.first = 0.0;
  return HarmonicMap(TruncatedSeries(std::move(h), TailModel::exact(), id_family),
                     TruncatedSeries(std::vector<Complex>(N, 0.0), TailModel::exact(), zero), "identity");
}

std::vector<GalleryEntry> gallery_listing() {
  return {
      {"identity", "f(z) = z"},
      {"k", "analytic Koebe function z/(1-z)^2"},
      {"l", "analytic half-plane map z/(1-z)"},
      {"K", "harmonic Koebe function, a_n = (n+1)(2n+1)/6, b_n = (n-1)(2n-1)/6"},
      {"L", "harmonic half-plane map, a_n = (n+1)/2, b_n = (1-n)/2"},
      {"fn:<n>:<alpha>", "z + (1-alpha)/(n+alpha) conj(z)^n"},
      {"Fn:<n>:<alpha>", "z - (1-alpha)/(n(n+alpha)) conj(z)^n"},
      {"affine:<a>:<b>", "a z + b conj(z), |a| > |b|"},
      {"x31", "z - sum (n+1)(2n+1)/6 z^n + conj(sum (n-1)(2n-1)/6 z^n)"},
      {"x35", "2z - L: z - sum (n+1)/2 z^n + conj(sum (n-1)/2 z^n)"},
      {"x42", "z - sum ((n+1)/2)^2 z^n + conj(sum ((n-1)/2)^2 z^n)"},
      {"x46", "z - sum (n+1)^2(2n+1)/12 z^n + conj(sum (n-1)^2(2n-1)/12 z^n)"},
      {"LL", "L * L"},
      {"LK", "L * K"},
  };
}

}  // namespace harmonica
