#pragma once

// The chain of g cycles with top arcs of length ell and bottom arcs of length
// k-ell, and its degree-k harmonic map onto a path.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgonal/admissibility.hpp"
#include "kgonal/error.hpp"

namespace kgonal {

enum class Side { top, bottom };

[[nodiscard]] inline const char* to_string(Side s) noexcept { return s == Side::top ? "top" : "bottom"; }

struct ChainEdge {
  integer from = 0;  // vertex w_from
  integer to = 1;    // vertex w_to = w_{from+1}
  Side side = Side::top;
  integer length = 1;
  friend bool operator==(const ChainEdge&, const ChainEdge&) = default;
};

class ChainGraph {
 public:
  ChainGraph(integer g, integer k, integer ell) : g_(g), k_(k), ell_(ell) {
    detail::require(g >= 1, "chain requires g >= 1 (got g=" + std::to_string(g) + ")");
    detail::require(k >= 2, "chain requires k >= 2 (got k=" + std::to_string(k) + ")");
    detail::require(ell >= 1 && ell <= k - 1, "chain requires 0 < ell < k (got ell=" +
                                                 std::to_string(ell) + ", k=" + std::to_string(k) + ")");
    edges_.reserve(static_cast<std::size_t>(2 * g));
    for (integer i = 0; i < g; ++i) {
      edges_.push_back({i, i + 1, Side::top, ell});
      edges_.push_back({i, i + 1, Side::bottom, k - ell});
    }
  }

  [[nodiscard]] integer g() const noexcept { return g_; }
  [[nodiscard]] integer k() const noexcept { return k_; }
  [[nodiscard]] integer ell() const noexcept { return ell_; }
  [[nodiscard]] integer vertex_count() const noexcept { return g_ + 1; }
  [[nodiscard]] const std::vector<ChainEdge>& edges() const noexcept { return edges_; }

  [[nodiscard]] integer betti_number() const noexcept {
    return static_cast<integer>(edges_.size()) - vertex_count() + 1;
  }

  [[nodiscard]] integer total_length() const noexcept {
    integer total = 0;
    for (const auto& e : edges_) total += e.length;
    return total;
  }

  friend bool operator==(const ChainGraph&, const ChainGraph&) = default;

 private:
  integer g_, k_, ell_;
  std::vector<ChainEdge> edges_;
};

[[nodiscard]] inline ChainGraph build_chain(integer g, integer k, integer ell) { return {g, k, ell}; }

/// Torsion orders m_2, ..., m_{g-1}: on cycle i, the order of w_i - w_{i-1},
/// i.e. circumference / gcd(top arc, circumference). Empty for g < 3.
[[nodiscard]] inline std::vector<integer> torsion_profile(const ChainGraph& c) {
  std::vector<integer> profile;
  if (c.g() < 3) return profile;
  for (integer i = 2; i <= c.g() - 1; ++i) {
    integer circumference = 0;
    integer arc = 0;
    for (const auto& e : c.edges()) {
      if (e.to != i) continue;
      circumference += e.length;
      if (e.side == Side::top) arc = e.length;
    }
    profile.push_back(circumference / std::gcd(arc, circumference));
  }
  return profile;
}

/// Piecewise-linear map w_i -> u_i onto a path whose edges have length
/// ell(k-ell). Expansion factors are indexed like the source edges.
struct HarmonicMap {
  ChainGraph source;
  std::vector<integer> target_lengths;  // edge u_i u_{i+1}
  std::vector<integer> vertex_map;      // w_i -> u_{vertex_map[i]}
  std::vector<integer> expansion;       // per source edge
  integer degree = 0;
};

struct HarmonicCheck {
  bool ok = false;
  integer degree = 0;
  std::optional<integer> bad_vertex;
  std::string reason;
};

/// Verifies slope consistency on every edge and that at every source vertex
/// the expansion factors toward each direction of the target sum to the same
/// value (the degree).
[[nodiscard]] inline HarmonicCheck check_harmonic(const HarmonicMap& m) {
  const auto& edges = m.source.edges();
  const auto n_target = static_cast<integer>(m.target_lengths.size()) + 1;
  if (m.expansion.size() != edges.size() ||
      static_cast<integer>(m.vertex_map.size()) != m.source.vertex_count())
    return {false, 0, std::nullopt, "map data does not match source graph"};

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const integer u = m.vertex_map[static_cast<std::size_t>(e.from)];
    const integer v = m.vertex_map[static_cast<std::size_t>(e.to)];
    if (u < 0 || v < 0 || u >= n_target || v >= n_target || std::abs(u - v) != 1)
      return {false, 0, e.from, "edge endpoints do not map to adjacent target vertices"};
    const integer target = m.target_lengths[static_cast<std::size_t>(std::min(u, v))];
    if (m.expansion[i] <= 0 || m.expansion[i] * e.length != target)
      return {false, 0, e.from, "expansion factor times edge length differs from target length"};
  }

  integer degree = -1;
  for (integer w = 0; w < m.source.vertex_count(); ++w) {
    const integer u = m.vertex_map[static_cast<std::size_t>(w)];
    integer left = 0;
    integer right = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.from != w && e.to != w) continue;
      const integer other = m.vertex_map[static_cast<std::size_t>(e.from == w ? e.to : e.from)];
      (other < u ? left : right) += m.expansion[i];
    }
    const bool has_left = u > 0;
    const bool has_right = u < n_target - 1;
    if ((!has_left && left != 0) || (!has_right && right != 0) || (has_left && has_right && left != right))
      return {false, 0, w, "directional expansion sums disagree"};
    const integer here = has_left ? left : right;
    if (degree < 0) degree = here;
    if (here != degree) return {false, 0, w, "local degree differs from other vertices"};
  }
  return {true, degree, std::nullopt, {}};
}

/// Expansion k-ell on top edges and ell on bottom edges; both arcs then
/// stretch onto a target edge of length ell(k-ell), and the map has degree k.
[[nodiscard]] inline HarmonicMap build_harmonic_map(const ChainGraph& c) {
  HarmonicMap m{c, {}, {}, {}, 0};
  m.target_lengths.assign(static_cast<std::size_t>(c.g()), c.ell() * (c.k() - c.ell()));
  m.vertex_map.resize(static_cast<std::size_t>(c.vertex_count()));
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), integer{0});
  for (const auto& e : c.edges()) m.expansion.push_back(e.side == Side::top ? c.k() - c.ell() : c.ell());
  const auto check = check_harmonic(m);
  if (!check.ok)
    throw std::logic_error("harmonic map check failed at vertex w_" + std::to_string(check.bad_vertex.value_or(-1)) +
                           ": " + check.reason);
  m.degree = check.degree;
  return m;
}

/// No expansion factor is divisible by the characteristic.
[[nodiscard]] inline bool is_tame(const HarmonicMap& m, integer p) {
  detail::require_characteristic(p);
  for (integer e : m.expansion)
    if (detail::char_divides(p, e)) return false;
  return true;
}

}  // namespace kgonal
