#pragma once

// Brill-Noether estimates for a general curve of genus g and gonality k.
//
// All quantities are exact 64-bit integers. Intermediate products are of
// order (r+1)(g-d+r), so every routine here is overflow-free for g <= 10^6
// and any (d,r) with |d|, r bounded by a small multiple of g.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "kgonal/error.hpp"

namespace kgonal {

/// Genus and gonality of a general k-gonal curve: 2 <= k <= (g+3)/2.
class CurveClass {
 public:
  CurveClass(integer genus, integer gonality) : g_(genus), k_(gonality) {
    detail::require(g_ >= 0, "genus must be nonnegative (got g=" + std::to_string(g_) + ")");
    detail::require(k_ >= 2 && 2 * k_ <= g_ + 3,
                    "requires 2 <= k <= (g+3)/2 (got g=" + std::to_string(g_) +
                        ", k=" + std::to_string(k_) + ")");
  }

  [[nodiscard]] integer g() const noexcept { return g_; }
  [[nodiscard]] integer k() const noexcept { return k_; }

  /// Largest admissible gonality for genus g, i.e. the gonality of a general curve.
  [[nodiscard]] static constexpr integer max_gonality(integer genus) noexcept {
    return (genus + 3) / 2;
  }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  integer g_;
  integer k_;
};

/// Degree and rank of a linear series g^r_d.
struct SeriesIndex {
  integer d = 0;
  integer r = 0;
  friend bool operator==(const SeriesIndex&, const SeriesIndex&) = default;
};

/// The (a,b) = (r+1, g-d+r) view of a series type.
struct ABCoords {
  integer a = 1;
  integer b = 1;
  friend bool operator==(const ABCoords&, const ABCoords&) = default;
};

/// An estimate together with the ell attaining it (largest on ties).
struct Estimate {
  integer value = 0;
  integer maximizer_ell = 0;
  friend bool operator==(const Estimate&, const Estimate&) = default;
};

[[nodiscard]] constexpr ABCoords to_ab(integer g, SeriesIndex s) noexcept {
  return {s.r + 1, g - s.d + s.r};
}

[[nodiscard]] constexpr SeriesIndex from_ab(integer g, ABCoords ab) noexcept {
  const integer r = ab.a - 1;
  return {g - ab.b + r, r};
}

/// Riemann-Roch dual series type: (d,r) -> (2g-2-d, g-d+r-1).
[[nodiscard]] constexpr SeriesIndex dual(integer g, SeriesIndex s) noexcept {
  return {2 * g - 2 - s.d, g - s.d + s.r - 1};
}

/// The classical Brill-Noether number g - (r+1)(g-d+r).
[[nodiscard]] inline integer rho(integer g, integer d, integer r) {
  detail::require(r >= 0, "rho requires r >= 0 (got r=" + std::to_string(r) + ")");
  return g - (r + 1) * (g - d + r);
}

namespace detail {

inline void require_series(const CurveClass& cc, SeriesIndex s) {
  require(s.r >= 0, "requires r >= 0 (got r=" + std::to_string(s.r) + ")");
  require(cc.g() - s.d + s.r > 0, "requires g-d+r > 0 (got g=" + std::to_string(cc.g()) +
                                      ", d=" + std::to_string(s.d) +
                                      ", r=" + std::to_string(s.r) + ")");
}

inline void require_abk(integer a, integer b, integer k) {
  require(k >= 2, "requires k >= 2 (got k=" + std::to_string(k) + ")");
  require(a >= 1 && b >= 1, "requires a >= 1 and b >= 1 (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
}

// (a-l)(b-l) + k l, the codimension contributed by a choice of l.
constexpr integer codim_at(integer a, integer b, integer k, integer l) noexcept {
  return (a - l) * (b - l) + k * l;
}

}  // namespace detail

/// min(r, g-d+r-1); the upper end of the ell range in both estimates.
[[nodiscard]] inline integer r_prime(const CurveClass& cc, SeriesIndex s) {
  detail::require_series(cc, s);
  return std::min(s.r, cc.g() - s.d + s.r - 1);
}

/// Integer ell in {0,...,min(a,b)-1} minimizing (a-l)(b-l)+kl.
/// The real minimizer is (a+b-k)/2; when a+b-k is odd the two neighbours tie
/// and the larger one is returned.
[[nodiscard]] inline integer ell_star(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  const integer hi = std::min(a, b) - 1;
  return std::clamp(detail::ceil_div(a + b - k, 2), integer{0}, hi);
}

/// delta(a,b,k) as the literal minimum over ell.
[[nodiscard]] inline integer delta_min_form(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  integer best = a * b;
  for (integer l = 1; l < std::min(a, b); ++l) best = std::min(best, detail::codim_at(a, b, k, l));
  return best;
}

/// delta(a,b,k) by the three-case closed form (stated for a <= b).
[[nodiscard]] inline integer delta_closed_form(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  if (a > b) std::swap(a, b);
  if (k <= b - a + 3) return (k - 1) * (a - 1) + b;
  if (k <= a + b + 1) {
    const integer s = a + b - k;
    return a * b - (s * s) / 4;
  }
  return a * b;
}

/// Minimal number of distinct labels in a k-uniform displacement tableau on
/// an a x b rectangle. Evaluates both forms and refuses to answer if they
/// disagree.
[[nodiscard]] inline integer delta(integer a, integer b, integer k) {
  const integer closed = delta_closed_form(a, b, k);
  const integer minimized = delta_min_form(a, b, k);
  if (closed != minimized) {
    throw std::logic_error("delta closed form " + std::to_string(closed) +
                           " disagrees with minimization " + std::to_string(minimized) +
                           " at (a,b,k)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(k) + ")");
  }
  return closed;
}

/// Upper estimate: max over ell in {0..r'} of rho_g(d,r-ell) - ell k.
///
/// In (a,b) coordinates the maximand is g - (a-l)(b-l) - kl, a concave
/// quadratic, so the maximum sits at ell_star and needs no scan.
[[nodiscard]] inline Estimate rho_bar(const CurveClass& cc, SeriesIndex s) {
  detail::require_series(cc, s);
  const auto [a, b] = to_ab(cc.g(), s);
  const integer l = ell_star(a, b, cc.k());
  return {cc.g() - detail::codim_at(a, b, cc.k(), l), l};
}

/// Lower estimate: the same maximum restricted to ell in {0, 1, r'-1, r'}
/// (only ell = 0 when r' = 0).
[[nodiscard]] inline Estimate rho_lower(const CurveClass& cc, SeriesIndex s) {
  const integer rp = r_prime(cc, s);
  const auto [a, b] = to_ab(cc.g(), s);
  Estimate best{cc.g() - detail::codim_at(a, b, cc.k(), 0), 0};
  if (rp == 0) return best;
  const std::array<integer, 3> candidates{1, rp - 1, rp};
  for (integer l : candidates) {
    const integer v = cc.g() - detail::codim_at(a, b, cc.k(), l);
    if (v > best.value || (v == best.value && l > best.maximizer_ell)) best = {v, l};
  }
  return best;
}

/// The region a+b >= 4+k, |a-b| <= k-6 where the two estimates can differ.
[[nodiscard]] inline bool in_gap_region(ABCoords ab, integer k) {
  detail::require(ab.a >= 1 && ab.b >= 1, "gap region requires a >= 1 and b >= 1");
  return ab.a + ab.b >= 4 + k && std::abs(ab.a - ab.b) <= k - 6;
}

/// Whether dim W^r_d equals the classical rho for a general k-gonal curve:
/// r = 0, g-d+r = 1, or g-k <= d-2r. Only meaningful when rho >= 0.
[[nodiscard]] inline bool classify_generic(const CurveClass& cc, SeriesIndex s) {
  detail::require_series(cc, s);
  detail::require(rho(cc.g(), s.d, s.r) >= 0,
                  "generic classification requires rho_g(d,r) >= 0 (got " +
                      std::to_string(rho(cc.g(), s.d, s.r)) + ")");
  return s.r == 0 || cc.g() - s.d + s.r == 1 || cc.g() - cc.k() <= s.d - 2 * s.r;
}

}  // namespace kgonal
