#pragma once

// Exhaustive branch-and-bound for the fewest distinct labels in a k-uniform
// displacement tableau. Independent of the closed form: nothing here consults
// delta(a,b,k).

#include <cstdint>
#include <string>
#include <vector>

#include "kgonal/error.hpp"
#include "kgonal/tableau.hpp"

namespace kgonal {

/// Largest a*b the exhaustive search accepts.
inline constexpr integer brute_force_max_boxes = 20;

struct SearchResult {
  integer min_distinct = 0;
  Tableau witness;
  std::uint64_t nodes = 0;  // boxes assigned during the search
};

namespace detail {

class LabelSearch {
 public:
  LabelSearch(integer a, integer b, integer k)
      : a_(a), b_(b), k_(k), n_(a * b), grid_(static_cast<std::size_t>(n_), 0),
        residue_(static_cast<std::size_t>(n_ + 1), -1), uses_(static_cast<std::size_t>(n_ + 1), 0),
        best_(n_ + 1), best_grid_(grid_) {}

  SearchResult run() {
    descend(0, 0);
    return {best_, Tableau(a_, b_, k_, best_grid_), nodes_};
  }

 private:
  // Row-major from the bottom-left box. A tableau with m distinct labels can
  // be compressed onto {1..m}, and the chain of boxes from (x,y) up to the
  // top-right corner needs (a-y)+(b-x) further labels, so searching for
  // m < best confines t(x,y) to [lower, best-1-(a-y)-(b-x)].
  void descend(integer cell, integer distinct) {
    if (cell == n_) {
      if (distinct < best_) {
        best_ = distinct;
        best_grid_ = grid_;
      }
      return;
    }
    const integer x = cell % b_ + 1;
    const integer y = cell / b_ + 1;
    integer lower = 1;
    if (x > 1) lower = std::max(lower, grid_[cell - 1] + 1);
    if (y > 1) lower = std::max(lower, grid_[cell - b_] + 1);
    const integer residue = mod(x - y, k_);
    for (integer v = lower; v <= best_ - 1 - (a_ - y) - (b_ - x); ++v) {
      const auto slot = static_cast<std::size_t>(v);
      const bool fresh = uses_[slot] == 0;
      if (!fresh && residue_[slot] != residue) continue;
      if (fresh && distinct + 1 >= best_) continue;
      ++nodes_;
      grid_[cell] = v;
      if (fresh) residue_[slot] = residue;
      ++uses_[slot];
      descend(cell + 1, distinct + (fresh ? 1 : 0));
      --uses_[slot];
      if (fresh) residue_[slot] = -1;
    }
    grid_[cell] = 0;
  }

  integer a_, b_, k_, n_;
  std::vector<integer> grid_;
  std::vector<integer> residue_;
  std::vector<integer> uses_;
  integer best_;
  std::vector<integer> best_grid_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exhaustive minimum together with a tableau attaining it.
[[nodiscard]] inline SearchResult brute_force_search(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  detail::require(a * b <= brute_force_max_boxes,
                  "exhaustive search limited to a*b <= " + std::to_string(brute_force_max_boxes) +
                      " (got " + std::to_string(a * b) + ")");
  return detail::LabelSearch(a, b, k).run();
}

/// cd(a,b,k): the true minimum number of distinct labels, by exhaustive search.
[[nodiscard]] inline integer brute_force_cd(integer a, integer b, integer k) {
  return brute_force_search(a, b, k).min_distinct;
}

}  // namespace kgonal
