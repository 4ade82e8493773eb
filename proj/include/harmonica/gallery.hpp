#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "harmonica/harmonic_map.hpp"

namespace harmonica {

/// Named mappings. CLI spellings:
///   k, l, K, L, fn:<n>:<alpha>, Fn:<n>:<alpha>, affine:<a>:<b>,
///   x31, x35, x42, x46, LL, LK, identity
struct GalleryId {
  enum class Kind {
    identity,
    analytic_koebe,      // k = z/(1-z)^2
    analytic_halfplane,  // l = z/(1-z)
    harmonic_koebe,      // K
    harmonic_halfplane,  // L
    starlike_fn,         // z + (1-alpha)/(n+alpha) conj(z)^n
    convex_Fn,           // z - (1-alpha)/(n(n+alpha)) conj(z)^n
    affine,              // a z + b conj(z)
    extremal_3_1,
    extremal_3_5,
    extremal_4_2,
    extremal_4_6,
    LL,
    LK,
  };

  Kind kind = Kind::identity;
  int n = 2;
  double alpha = 0.0;
  double a = 1.0;
  double b = 0.0;

  std::string name() const;
};

GalleryId parse_gallery_id(std::string_view text);

/// Builds the map with `truncation` stored coefficients (ignored for the
/// finite maps, which keep just enough terms to be exact).
HarmonicMap gallery(const GalleryId& id, std::size_t truncation = default_truncation());
HarmonicMap gallery(std::string_view name, std::size_t truncation = default_truncation());

struct GalleryEntry {
  std::string name;
  std::string description;
};
std::vector<GalleryEntry> gallery_listing();

/// The identity map z with N stored coefficients.
HarmonicMap identity_map(std::size_t N = 1);

}  // namespace harmonica
