#pragma once

// Small dense polynomials in n with complex coefficients (ascending powers),
// used to manipulate closed-form coefficient families.

#include <algorithm>
#include <complex>
#include <vector>

#include "harmonica/series.hpp"

namespace harmonica::detail {

using Poly = std::vector<Complex>;

inline Complex poly_eval(const Poly& p, double x) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Poly poly_scale(const Poly& a, Complex s) {
  Poly out(a);
  for (auto& c : out) c *= s;
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// n P(n)
inline Poly poly_times_n(const Poly& p) {
  if (p.empty()) return {};
  Poly out(p.size() + 1, 0.0);
  std::copy(p.begin(), p.end(), out.begin() + 1);
  return out;
}

/// (n - 1) P(n)
inline Poly poly_times_n_minus_one(const Poly& p) {
  return poly_add(poly_times_n(p), poly_scale(p, -1.0));
}

/// (P(n) - P(0)) / n
inline Poly poly_div_n(const Poly& p) {
  if (p.size() <= 1) return {};
  return Poly(p.begin() + 1, p.end());
}

/// P(m + 1) as a polynomial in m.
inline Poly poly_shift_one(const Poly& p) {
  // Horner in (m + 1): acc = acc * (m + 1) + c
  Poly acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = poly_add(poly_times_n(acc), acc);
    acc = poly_add(acc, {*it});
  }
  return acc;
}

/// sum_{m>=1} P(m) zeta^(m-1) = sum_k p_k E_k(zeta) w^(k+1), w = 1/(1-zeta).
inline Complex eulerian_sum(const Poly& p, Complex zeta, Complex w) {
  Complex total = 0.0;
  Complex wpow = w;
  for (std::size_t k = 0; k < p.size(); ++k, wpow *= w) {
    if (p[k] == 0.0) continue;
    const auto& e = eulerian_polynomial(static_cast<int>(k));
    Complex ek = 0.0;
    for (auto it = e.rbegin(); it != e.rend(); ++it) ek = ek * zeta + *it;
    total += p[k] * ek * wpow;
  }
  return total;
}

}  // namespace harmonica::detail
