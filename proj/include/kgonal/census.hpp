#pragma once

// Sweeps of (d,r) space for a fixed curve class: per-point classification,
// per-gonality census counts, the nonemptiness region in (b,a) coordinates,
// the Coppens-Martens hypothesis check and the sharpness sweep.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kgonal/error.hpp"
#include "kgonal/estimates.hpp"

namespace kgonal {

/// One classified (d,r) point.
struct SurveyRecord {
  integer d = 0, r = 0, a = 0, b = 0;
  integer rho = 0, rho_bar = 0, rho_lower = 0;
  integer maximizer_ell = 0;  // maximizer of rho_bar
  bool in_gap = false;
  bool nonempty_bar = false;         // rho_bar >= 0
  bool emptiness_ambiguous = false;  // rho_bar >= 0 > rho_lower
  bool generic_dim = false;          // rho >= 0 and dim W = rho (false when rho < 0)
  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

/// Inclusive (d,r) window; unset upper ends default to d_max = g-1 and
/// r_max = g, which contains every point with rho_bar >= 0 and d <= g-1.
struct SurveyRange {
  integer r_min = 0;
  std::optional<integer> r_max;
  integer d_min = 0;
  std::optional<integer> d_max;

  [[nodiscard]] integer r_hi(integer g) const { return r_max.value_or(g); }
  [[nodiscard]] integer d_hi(integer g) const { return d_max.value_or(g - 1); }
};

[[nodiscard]] inline SurveyRecord make_record(const CurveClass& cc, SeriesIndex s) {
  const auto bar = rho_bar(cc, s);
  const auto low = rho_lower(cc, s);
  const auto ab = to_ab(cc.g(), s);
  SurveyRecord rec;
  rec.d = s.d;
  rec.r = s.r;
  rec.a = ab.a;
  rec.b = ab.b;
  rec.rho = rho(cc.g(), s.d, s.r);
  rec.rho_bar = bar.value;
  rec.rho_lower = low.value;
  rec.maximizer_ell = bar.maximizer_ell;
  rec.in_gap = in_gap_region(ab, cc.k());
  rec.nonempty_bar = bar.value >= 0;
  rec.emptiness_ambiguous = bar.value >= 0 && low.value < 0;
  rec.generic_dim = rec.rho >= 0 && classify_generic(cc, s);
  return rec;
}

/// One record per (d,r) in the window with g-d+r > 0, ordered by (r,d).
[[nodiscard]] inline std::vector<SurveyRecord> survey(const CurveClass& cc, const SurveyRange& range = {}) {
  detail::require(range.r_min >= 0, "survey requires r_min >= 0");
  std::vector<SurveyRecord> out;
  for (integer r = range.r_min; r <= range.r_hi(cc.g()); ++r)
    for (integer d = range.d_min; d <= range.d_hi(cc.g()); ++d)
      if (cc.g() - d + r > 0) out.push_back(make_record(cc, {d, r}));
  return out;
}

/// Exact ratio with 3-decimal rounding (half up).
struct Proportion {
  integer num = 0;
  integer den = 1;

  [[nodiscard]] double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

  /// Value in thousandths, rounded half up.
  [[nodiscard]] integer thousandths() const { return den == 0 ? 0 : (2000 * num + den) / (2 * den); }

  [[nodiscard]] std::string rounded() const {
    const integer t = thousandths();
    std::string frac = std::to_string(t % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return std::to_string(t / 1000) + "." + frac;
  }

  /// Cross-multiplied comparison, no rounding.
  friend bool operator<(const Proportion& x, const Proportion& y) { return x.num * y.den < y.num * x.den; }
};

struct CensusSummary {
  integer g = 0, k = 0;
  integer pairs_nonneg = 0;     // rho_bar >= 0
  integer gap_pairs = 0;        // ... and rho_lower < rho_bar
  integer ambiguous_empty = 0;  // ... and rho_lower < 0
  [[nodiscard]] Proportion proportion() const { return {gap_pairs, pairs_nonneg}; }
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

/// Census counts over the window. Points with 2r > d have a+b-1 > g, and
/// delta(a,b,k) >= a+b-1, so their rho_bar is negative and they are skipped
/// without evaluation.
[[nodiscard]] inline CensusSummary summarize(const CurveClass& cc, const SurveyRange& range = {}) {
  detail::require(range.r_min >= 0, "census requires r_min >= 0");
  CensusSummary s{cc.g(), cc.k(), 0, 0, 0};
  for (integer d = range.d_min; d <= range.d_hi(cc.g()); ++d) {
    for (integer r = range.r_min; r <= range.r_hi(cc.g()); ++r) {
      if (cc.g() - d + r <= 0) continue;
      if (2 * r > d) break;
      const SeriesIndex idx{d, r};
      const integer bar = rho_bar(cc, idx).value;
      if (bar < 0) continue;
      ++s.pairs_nonneg;
      const integer low = rho_lower(cc, idx).value;
      if (low < bar) {
        ++s.gap_pairs;
        if (low < 0) ++s.ambiguous_empty;
      }
    }
  }
  return s;
}

struct CensusReport {
  integer g = 0;
  std::vector<CensusSummary> per_k;  // k = 2, 3, ..., (g+3)/2
  std::size_t argmax = 0;            // largest proportion; smallest k on ties

  [[nodiscard]] const CensusSummary& best() const { return per_k.at(argmax); }
};

/// Census for every gonality 2 <= k <= (g+3)/2. Work is split across
/// `threads` workers (0 = hardware concurrency); output does not depend on it.
[[nodiscard]] inline CensusReport census_summary(integer g, const SurveyRange& range = {}, unsigned threads = 0) {
  detail::require(g >= 2, "census requires g >= 2 (got g=" + std::to_string(g) + ")");
  const integer k_max = CurveClass::max_gonality(g);
  CensusReport report{g, std::vector<CensusSummary>(static_cast<std::size_t>(k_max - 1)), 0};

  std::atomic<integer> next{2};
  auto worker = [&] {
    for (integer k = next++; k <= k_max; k = next++)
      report.per_k[static_cast<std::size_t>(k - 2)] = summarize(CurveClass(g, k), range);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(report.per_k.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t i = 1; i < report.per_k.size(); ++i)
    if (report.per_k[report.argmax].proportion() < report.per_k[i].proportion()) report.argmax = i;
  return report;
}

/// A point of the (b,a) plane, b = g-d+r horizontal and a = r+1 vertical.
using RegionPoint = std::pair<integer, integer>;

/// All (b,a) with a,b >= 1 and rho_bar >= 0. Only a+b <= g+1 can qualify.
[[nodiscard]] inline std::set<RegionPoint> region_points(const CurveClass& cc) {
  std::set<RegionPoint> pts;
  for (integer a = 1; a <= cc.g(); ++a)
    for (integer b = 1; a + b <= cc.g() + 1; ++b)
      if (rho_bar(cc, from_ab(cc.g(), {a, b})).value >= 0) pts.emplace(b, a);
  return pts;
}

/// All (b,a) with a,b >= 1 and rho_g(d,r) >= 0.
[[nodiscard]] inline std::set<RegionPoint> brill_noether_region(integer g) {
  std::set<RegionPoint> pts;
  for (integer a = 1; a <= g; ++a)
    for (integer b = 1; a * b <= g; ++b) pts.emplace(b, a);
  return pts;
}

// ---------------------------------------------------------------------------
// Coppens-Martens components

struct CmCandidate {
  integer ell = 0;
  integer dim = 0;          // rho_g(d, r-ell) - ell k
  bool rank_bound = false;  // (1) ell >= r - k
  bool divides = false;     // (2) r+1-ell divides r or r+1
  bool dim_bound = false;   // (3) dim >= max(0, rho_g(d,r))
  bool hypotheses_ok = false;
  bool selected = false;    // closest to the real maximizer, largest on ties
};

/// Evaluates the three hypotheses for each ell in {0, 1, r-1, r}.
[[nodiscard]] inline std::vector<CmCandidate> cm_components(const CurveClass& cc, SeriesIndex s) {
  detail::require(s.r >= 1, "cm requires r >= 1 (got r=" + std::to_string(s.r) + ")");
  detail::require(s.d <= cc.g() - 1, "cm requires d <= g-1 (got d=" + std::to_string(s.d) + ")");
  const integer g = cc.g(), k = cc.k(), d = s.d, r = s.r;
  std::vector<integer> ells{0, 1, r - 1, r};
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());

  // Twice the real maximizer: g-d+2r+1-k.
  const integer twice_l0 = g - d + 2 * r + 1 - k;
  const integer base = std::max<integer>(0, rho(g, d, r));
  std::vector<CmCandidate> out;
  std::size_t pick = 0;
  for (integer l : ells) {
    CmCandidate c;
    c.ell = l;
    c.dim = rho(g, d, r - l) - l * k;
    c.rank_bound = l >= r - k;
    c.divides = r % (r + 1 - l) == 0 || (r + 1) % (r + 1 - l) == 0;
    c.dim_bound = c.dim >= base;
    c.hypotheses_ok = c.rank_bound && c.divides && c.dim_bound;
    if (!out.empty() && std::abs(2 * l - twice_l0) <= std::abs(2 * out[pick].ell - twice_l0)) pick = out.size();
    out.push_back(c);
  }
  out[pick].selected = true;
  return out;
}

// ---------------------------------------------------------------------------
// Sharpness sweep

struct SharpnessCase {
  integer k = 0;
  bool hypothesis = false;   // k <= 5 or k >= g/5 + 2
  integer gap_points = 0;    // gap-region points with a, b <= g+1
  integer nonneg_gap_points = 0;
  std::vector<SeriesIndex> counterexamples;  // gap points with rho_bar >= 0 under the hypothesis
};

struct SharpnessReport {
  integer g = 0;
  std::vector<SharpnessCase> cases;
  [[nodiscard]] bool passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.counterexamples.empty(); });
  }
};

/// For every gonality, counts gap-region points with rho_bar >= 0; under the
/// hypothesis k <= 5 or k >= g/5 + 2 each such point is a counterexample.
/// Points with a+b > g+1 always have rho_bar < 0, so the window a,b <= g+1
/// is exhaustive.
[[nodiscard]] inline SharpnessReport verify_sharpness(integer g) {
  detail::require(g >= 2, "verify_sharpness requires g >= 2 (got g=" + std::to_string(g) + ")");
  SharpnessReport report{g, {}};
  for (integer k = 2; k <= CurveClass::max_gonality(g); ++k) {
    const CurveClass cc(g, k);
    SharpnessCase c;
    c.k = k;
    c.hypothesis = k <= 5 || 5 * k >= g + 10;
    for (integer a = 1; a <= g + 1; ++a) {
      for (integer b = 1; b <= g + 1; ++b) {
        if (!in_gap_region({a, b}, k)) continue;
        ++c.gap_points;
        const SeriesIndex s = from_ab(g, {a, b});
        if (rho_bar(cc, s).value < 0) continue;
        ++c.nonneg_gap_points;
        if (c.hypothesis) c.counterexamples.push_back(s);
      }
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace kgonal
