#pragma once

// Admissible triples (p, k, ell): the edge-length choices for which the
// chain of cycles lifts in characteristic p.

#include <numeric>
#include <optional>
#include <string>

#include "kgonal/error.hpp"

namespace kgonal {

[[nodiscard]] constexpr bool is_prime(integer n) noexcept {
  if (n < 2) return false;
  for (integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

inline void require_characteristic(integer p) {
  require(p == 0 || is_prime(p),
          "characteristic must be 0 or a prime (got p=" + std::to_string(p) + ")");
}

// p = 0 divides nothing.
constexpr bool char_divides(integer p, integer n) noexcept { return p != 0 && n % p == 0; }

}  // namespace detail

/// gcd(ell,k) = 1 and, for p prime, p divides neither ell nor k-ell.
[[nodiscard]] inline bool is_admissible(integer p, integer k, integer ell) {
  detail::require_characteristic(p);
  detail::require(k >= 2, "requires k >= 2 (got k=" + std::to_string(k) + ")");
  detail::require(ell >= 1 && ell <= k - 1,
                  "requires 1 <= ell <= k-1 (got ell=" + std::to_string(ell) + ", k=" +
                      std::to_string(k) + ")");
  return std::gcd(ell, k) == 1 && !detail::char_divides(p, ell) && !detail::char_divides(p, k - ell);
}

/// Whether (p,k) is one of the pairs for which no admissible ell exists:
/// p = 2 with k odd, or (p,k) in {(3,4), (3,10), (5,6)}.
[[nodiscard]] constexpr bool is_excluded_pair(integer p, integer k) noexcept {
  return (p == 2 && k % 2 == 1) || (p == 3 && (k == 4 || k == 10)) || (p == 5 && k == 6);
}

/// The canonical admissible witness, or nothing for the excluded pairs.
///
///   k != 1 mod p (including p = 0)  ->  ell = 1
///   k == 1 mod p, k odd             ->  ell = 2
///   k == 1 mod p, k even            ->  ell = k/2 - c, with c from
///
///                     p = 3   p = 5   p > 5
///       k == 0 mod 4    3       1       1
///       k == 2 mod 4    6       4       2
[[nodiscard]] inline std::optional<integer> choose_ell(integer p, integer k) {
  detail::require_characteristic(p);
  detail::require(k >= 2, "requires k >= 2 (got k=" + std::to_string(k) + ")");
  if (is_excluded_pair(p, k)) return std::nullopt;
  if (p == 0 || k % p != 1) return 1;
  if (k % 2 == 1) return 2;
  const bool quarter = k % 4 == 0;
  integer offset = 0;
  if (p == 3) offset = quarter ? 3 : 6;
  else if (p == 5) offset = quarter ? 1 : 4;
  else offset = quarter ? 1 : 2;
  return k / 2 - offset;
}

/// Brute-force existence check over every ell in {1,...,k-1}.
[[nodiscard]] inline bool admissible_ell_exists(integer p, integer k) {
  for (integer ell = 1; ell <= k - 1; ++ell)
    if (is_admissible(p, k, ell)) return true;
  return false;
}

}  // namespace kgonal
