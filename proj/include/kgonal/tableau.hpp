#pragma once

// k-uniform displacement tableaux on an a x b rectangle.
//
// Boxes are (x,y) with 1 <= x <= b the column and 1 <= y <= a the row; y = 1
// is the bottom row. Labels must increase strictly to the right and upward,
// and two boxes may share a label only if their diagonal indices x-y agree
// modulo k.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgonal/error.hpp"
#include "kgonal/estimates.hpp"

namespace kgonal {

struct Box {
  integer x = 1;
  integer y = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// `upper` dominates `lower` when it is weakly above and weakly to the right.
[[nodiscard]] constexpr bool dominates(Box upper, Box lower) noexcept {
  return upper.x >= lower.x && upper.y >= lower.y;
}

class Tableau {
 public:
  /// Zero-filled grid; zeros are "unassigned" and fail validation.
  Tableau(integer a, integer b, integer k) : a_(a), b_(b), k_(k) {
    detail::require(a >= 1 && b >= 1, "tableau requires a >= 1 and b >= 1");
    detail::require(k >= 2, "tableau requires k >= 2");
    labels_.assign(static_cast<std::size_t>(a * b), 0);
  }

  /// `labels` are row-major starting from the bottom row (y = 1).
  Tableau(integer a, integer b, integer k, std::vector<integer> labels) : Tableau(a, b, k) {
    detail::require(labels.size() == labels_.size(),
                    "tableau expects " + std::to_string(labels_.size()) + " labels, got " +
                        std::to_string(labels.size()));
    labels_ = std::move(labels);
  }

  [[nodiscard]] integer a() const noexcept { return a_; }
  [[nodiscard]] integer b() const noexcept { return b_; }
  [[nodiscard]] integer k() const noexcept { return k_; }

  [[nodiscard]] integer at(integer x, integer y) const { return labels_[index(x, y)]; }
  integer& at(integer x, integer y) { return labels_[index(x, y)]; }
  [[nodiscard]] integer at(Box box) const { return at(box.x, box.y); }

  [[nodiscard]] std::span<const integer> labels() const noexcept { return labels_; }

  [[nodiscard]] integer max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

  /// Reflection across the diagonal: an a x b tableau becomes b x a.
  [[nodiscard]] Tableau transposed() const {
    Tableau t(b_, a_, k_);
    for (integer y = 1; y <= a_; ++y)
      for (integer x = 1; x <= b_; ++x) t.at(y, x) = at(x, y);
    return t;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  [[nodiscard]] std::size_t index(integer x, integer y) const {
    detail::require(x >= 1 && x <= b_ && y >= 1 && y <= a_,
                    "box (" + std::to_string(x) + "," + std::to_string(y) + ") outside " +
                        std::to_string(a_) + "x" + std::to_string(b_) + " tableau");
    return static_cast<std::size_t>((y - 1) * b_ + (x - 1));
  }

  integer a_;
  integer b_;
  integer k_;
  std::vector<integer> labels_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { nonpositive_label, row_not_increasing, column_not_increasing, congruence };

struct Violation {
  ViolationKind kind;
  Box first;
  Box second;  // equals `first` for nonpositive_label

  [[nodiscard]] std::string message() const {
    auto box = [](Box p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; };
    switch (kind) {
      case ViolationKind::nonpositive_label:
        return "label at " + box(first) + " is not a positive integer";
      case ViolationKind::row_not_increasing:
        return "row not strictly increasing between " + box(first) + " and " + box(second);
      case ViolationKind::column_not_increasing:
        return "column not strictly increasing between " + box(first) + " and " + box(second);
      case ViolationKind::congruence:
        return "boxes " + box(first) + " and " + box(second) +
               " share a label but x-y differs mod k";
    }
    return "unknown violation";
  }
};

struct Validation {
  bool valid = false;
  integer distinct_labels = 0;
  std::optional<Violation> violation;
  explicit operator bool() const noexcept { return valid; }
};

/// Checks both tableau conditions, reporting the first violation found in
/// row-major order (bottom row first).
[[nodiscard]] inline Validation validate(const Tableau& t) {
  const integer k = t.k();
  std::map<integer, Box> first_with_label;
  for (integer y = 1; y <= t.a(); ++y) {
    for (integer x = 1; x <= t.b(); ++x) {
      const integer v = t.at(x, y);
      if (v <= 0) return {false, 0, Violation{ViolationKind::nonpositive_label, {x, y}, {x, y}}};
      if (x > 1 && t.at(x - 1, y) >= v)
        return {false, 0, Violation{ViolationKind::row_not_increasing, {x - 1, y}, {x, y}}};
      if (y > 1 && t.at(x, y - 1) >= v)
        return {false, 0, Violation{ViolationKind::column_not_increasing, {x, y - 1}, {x, y}}};
      // Congruence of x-y is an equivalence, so comparing against the first
      // box carrying the label covers every pair.
      auto [it, inserted] = first_with_label.try_emplace(v, Box{x, y});
      if (!inserted) {
        const Box p = it->second;
        if (detail::mod((x - y) - (p.x - p.y), k) != 0)
          return {false, 0, Violation{ViolationKind::congruence, p, {x, y}}};
      }
    }
  }
  return {true, static_cast<integer>(first_with_label.size()), std::nullopt};
}

inline void require_valid(const Tableau& t) {
  if (auto v = validate(t); !v) throw precondition_error("invalid tableau: " + v.violation->message());
}

/// Order-preserving relabeling onto {1,...,#distinct labels}.
[[nodiscard]] inline Tableau compress_labels(const Tableau& t) {
  require_valid(t);
  std::vector<integer> sorted(t.labels().begin(), t.labels().end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<integer> out;
  out.reserve(t.labels().size());
  for (integer v : t.labels())
    out.push_back(static_cast<integer>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Tableau(t.a(), t.b(), t.k(), std::move(out));
}

// ---------------------------------------------------------------------------
// Construction with delta(a,b,k) labels

namespace detail {

// Strip filling for 2 <= a <= b and k <= a+b-2: columns of height a-l are
// filled bottom to top with consecutive labels, and each band of strips
// starts alongside the (k+l-a+1)-th strip of the band below it.
inline Tableau strip_fill(integer a, integer b, integer k) {
  const integer l = std::min(a - 1, ceil_div(a + b - k, 2));
  const integer height = a - l;
  const integer shift = k + l - a;
  Tableau t(a, b, k);
  for (integer y = 1; y <= a; ++y) {
    const integer q = (y - 1) / height;
    const integer r = y - q * height;
    for (integer x = 1; x <= b; ++x) t.at(x, y) = height * ((x - 1) + q * shift) + r;
  }
  return t;
}

}  // namespace detail

/// A valid tableau using exactly delta(a,b,k) distinct labels.
[[nodiscard]] inline Tableau construct_minimal(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  if (a > b) return construct_minimal(b, a, k).transposed();
  Tableau t(a, b, k);
  if (a == 1) {
    for (integer x = 1; x <= b; ++x) t.at(x, 1) = x;
  } else if (k >= a + b - 1) {
    for (integer y = 1; y <= a; ++y)
      for (integer x = 1; x <= b; ++x) t.at(x, y) = (y - 1) * b + x;
  } else {
    t = detail::strip_fill(a, b, k);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Blocking sets: lower-bound certificates for the number of labels

enum class BlockingCase { all_boxes, band_plus_top_row, diagonal_band };

[[nodiscard]] inline const char* to_string(BlockingCase c) noexcept {
  switch (c) {
    case BlockingCase::all_boxes: return "all-boxes";
    case BlockingCase::band_plus_top_row: return "band-plus-top-row";
    case BlockingCase::diagonal_band: return "diagonal-band";
  }
  return "?";
}

struct BlockingSet {
  integer a = 1;
  integer b = 1;
  integer k = 2;
  std::vector<Box> boxes;  // sorted
  BlockingCase case_tag = BlockingCase::all_boxes;

  [[nodiscard]] bool contains(Box p) const { return std::binary_search(boxes.begin(), boxes.end(), p); }
};

/// Boxes that every k-uniform displacement tableau must label pairwise
/// distinctly, of size delta(a,b,k). Requires a <= b.
[[nodiscard]] inline BlockingSet blocking_set(integer a, integer b, integer k) {
  detail::require_abk(a, b, k);
  detail::require(a <= b, "blocking_set requires a <= b (got a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + "); transpose first");
  BlockingSet s{a, b, k, {}, BlockingCase::all_boxes};
  if (k <= b - a + 2) {
    s.case_tag = BlockingCase::band_plus_top_row;
    for (integer y = 1; y <= a - 1; ++y)
      for (integer x = y; x <= y + k - 1; ++x) s.boxes.push_back({x, y});
    for (integer x = a; x <= b; ++x) s.boxes.push_back({x, a});
  } else if (k >= a + b - 1) {
    for (integer x = 1; x <= b; ++x)
      for (integer y = 1; y <= a; ++y) s.boxes.push_back({x, y});
  } else {
    s.case_tag = BlockingCase::diagonal_band;
    const integer lo = -detail::ceil_div(k - 1 - (b - a), 2);
    const integer hi = detail::floor_div(k - 1 + (b - a), 2);
    for (integer x = 1; x <= b; ++x)
      for (integer y = 1; y <= a; ++y)
        if (x - y >= lo && x - y <= hi) s.boxes.push_back({x, y});
  }
  std::sort(s.boxes.begin(), s.boxes.end());
  return s;
}

/// True when any two boxes of the set with x-y congruent mod k are
/// comparable under domination, so that no tableau can repeat a label on it.
[[nodiscard]] inline bool has_domination_property(const BlockingSet& s) {
  // Within a residue class the boxes form a chain iff, sorted by (x,y),
  // their y coordinates never decrease.
  std::map<integer, std::vector<Box>> classes;
  for (Box p : s.boxes) classes[detail::mod(p.x - p.y, s.k)].push_back(p);
  for (auto& [residue, members] : classes) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i].y < members[i - 1].y) return false;
  }
  return true;
}

}  // namespace kgonal
