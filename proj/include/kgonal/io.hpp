#pragma once

// Serialization: plain-text and JSON tableaux, JSON views of the other
// domain objects, census CSV, and SVG region panels.
//
// Tableau text format:
//
//   a b k
//   <b labels of row y=a>
//   ...
//   <b labels of row y=1>
//
// i.e. the top row first, as a Young diagram is drawn. Blank lines and lines
// starting with '#' are ignored on input. The JSON form
// {"a":..,"b":..,"k":..,"rows":[[...],...]} uses the same row order.

#include <cctype>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kgonal/census.hpp"
#include "kgonal/chain.hpp"
#include "kgonal/tableau.hpp"

namespace kgonal::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Tableaux

[[nodiscard]] inline std::string to_text(const Tableau& t) {
  std::ostringstream out;
  out << t.a() << ' ' << t.b() << ' ' << t.k() << '\n';
  for (integer y = t.a(); y >= 1; --y) {
    for (integer x = 1; x <= t.b(); ++x) out << (x > 1 ? " " : "") << t.at(x, y);
    out << '\n';
  }
  return out.str();
}

[[nodiscard]] inline json to_json(const Tableau& t) {
  json rows = json::array();
  for (integer y = t.a(); y >= 1; --y) {
    json row = json::array();
    for (integer x = 1; x <= t.b(); ++x) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  return {{"a", t.a()}, {"b", t.b()}, {"k", t.k()}, {"rows", std::move(rows)}};
}

namespace detail {

inline Tableau from_top_rows(integer a, integer b, integer k, const std::vector<std::vector<integer>>& rows) {
  kgonal::detail::require(static_cast<integer>(rows.size()) == a,
                          "expected " + std::to_string(a) + " rows, found " + std::to_string(rows.size()));
  Tableau t(a, b, k);
  for (integer i = 0; i < a; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    kgonal::detail::require(static_cast<integer>(row.size()) == b,
                            "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                " labels, expected " + std::to_string(b));
    for (integer x = 1; x <= b; ++x) t.at(x, a - i) = row[static_cast<std::size_t>(x - 1)];
  }
  return t;
}

}  // namespace detail

[[nodiscard]] inline Tableau tableau_from_json(const json& j) {
  try {
    return detail::from_top_rows(j.at("a").get<integer>(), j.at("b").get<integer>(), j.at("k").get<integer>(),
                                 j.at("rows").get<std::vector<std::vector<integer>>>());
  } catch (const json::exception& e) {
    throw precondition_error(std::string("malformed tableau JSON: ") + e.what());
  }
}

[[nodiscard]] inline Tableau tableau_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto is_blank = [](const std::string& s) {
    const auto pos = s.find_first_not_of(" \t\r");
    return pos == std::string::npos || s[pos] == '#';
  };
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line))
      if (!is_blank(line)) return line;
    throw precondition_error("tableau text ended early");
  };
  auto parse_ints = [](const std::string& s) {
    std::istringstream ls(s);
    std::vector<integer> values;
    integer v = 0;
    while (ls >> v) values.push_back(v);
    ls.clear();
    std::string rest;
    if (ls >> rest) throw precondition_error("non-integer token '" + rest + "' in tableau text");
    return values;
  };

  const auto header = parse_ints(next_line());
  kgonal::detail::require(header.size() == 3, "tableau header must be 'a b k'");
  const integer a = header[0], b = header[1], k = header[2];
  kgonal::detail::require(a >= 1 && b >= 1 && a * b <= 1'000'000, "tableau dimensions out of range");
  std::vector<std::vector<integer>> rows;
  for (integer i = 0; i < a; ++i) rows.push_back(parse_ints(next_line()));
  while (std::getline(in, line))
    kgonal::detail::require(is_blank(line), "unexpected content after last tableau row");
  return detail::from_top_rows(a, b, k, rows);
}

/// Accepts either the text or the JSON form.
[[nodiscard]] inline Tableau parse_tableau(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    json j;
    try {
      j = json::parse(content);
    } catch (const json::exception& e) {
      throw precondition_error(std::string("malformed tableau JSON: ") + e.what());
    }
    return tableau_from_json(j);
  }
  return tableau_from_text(content);
}

[[nodiscard]] inline json to_json(const BlockingSet& s) {
  json boxes = json::array();
  for (Box p : s.boxes) boxes.push_back(json::array({p.x, p.y}));
  return {{"a", s.a}, {"b", s.b}, {"k", s.k}, {"case", to_string(s.case_tag)},
          {"size", s.boxes.size()}, {"boxes", std::move(boxes)}};
}

/// The a x b grid with '#' on blocking boxes, top row first.
[[nodiscard]] inline std::string to_text(const BlockingSet& s) {
  std::string out;
  for (integer y = s.a; y >= 1; --y) {
    for (integer x = 1; x <= s.b; ++x) out += s.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains

[[nodiscard]] inline json to_json(const ChainGraph& c) {
  json vertices = json::array();
  for (integer i = 0; i < c.vertex_count(); ++i) vertices.push_back("w" + std::to_string(i));
  json edges = json::array();
  for (const auto& e : c.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"side", to_string(e.side)}, {"length", e.length}});
  return {{"g", c.g()}, {"k", c.k()}, {"ell", c.ell()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

[[nodiscard]] inline json to_json(const HarmonicMap& m) {
  return {{"degree", m.degree},
          {"target_lengths", m.target_lengths},
          {"vertex_map", m.vertex_map},
          {"expansion", m.expansion}};
}

// ---------------------------------------------------------------------------
// Census

inline constexpr const char* survey_csv_header = "g,k,d,r,a,b,rho,rho_lower,rho_bar,ell,in_gap,nonempty,ambiguous,generic";

inline void write_survey_csv(std::ostream& out, const CurveClass& cc, const std::vector<SurveyRecord>& records) {
  out << survey_csv_header << '\n';
  for (const auto& r : records) {
    out << cc.g() << ',' << cc.k() << ',' << r.d << ',' << r.r << ',' << r.a << ',' << r.b << ',' << r.rho << ','
        << r.rho_lower << ',' << r.rho_bar << ',' << r.maximizer_ell << ',' << int(r.in_gap) << ','
        << int(r.nonempty_bar) << ',' << int(r.emptiness_ambiguous) << ',' << int(r.generic_dim) << '\n';
  }
}

[[nodiscard]] inline json to_json(const SurveyRecord& r) {
  return {{"d", r.d},           {"r", r.r},
          {"a", r.a},           {"b", r.b},
          {"rho", r.rho},       {"rho_lower", r.rho_lower},
          {"rho_bar", r.rho_bar}, {"ell", r.maximizer_ell},
          {"in_gap", r.in_gap}, {"nonempty", r.nonempty_bar},
          {"ambiguous", r.emptiness_ambiguous}, {"generic", r.generic_dim}};
}

inline constexpr const char* census_csv_header = "g,k,pairs_nonneg,gap_pairs,ambiguous_empty,proportion,proportion_3dp";

inline void write_census_csv(std::ostream& out, const CensusReport& report) {
  out << census_csv_header << '\n';
  for (const auto& s : report.per_k) {
    const auto p = s.proportion();
    out << s.g << ',' << s.k << ',' << s.pairs_nonneg << ',' << s.gap_pairs << ',' << s.ambiguous_empty << ','
        << p.num << '/' << p.den << ',' << p.rounded() << '\n';
  }
}

[[nodiscard]] inline json to_json(const CensusSummary& s) {
  const auto p = s.proportion();
  return {{"g", s.g},
          {"k", s.k},
          {"pairs_nonneg", s.pairs_nonneg},
          {"gap_pairs", s.gap_pairs},
          {"ambiguous_empty", s.ambiguous_empty},
          {"proportion", std::to_string(p.num) + "/" + std::to_string(p.den)},
          {"proportion_3dp", p.rounded()}};
}

[[nodiscard]] inline json to_json(const CensusReport& report) {
  json per_k = json::array();
  for (const auto& s : report.per_k) per_k.push_back(to_json(s));
  return {{"g", report.g}, {"max", to_json(report.best())}, {"per_k", std::move(per_k)}};
}

// ---------------------------------------------------------------------------
// SVG region panels

struct RegionPanel {
  integer g = 0;
  integer k = 0;
  std::set<RegionPoint> points;  // (b,a)
};

/// Panels laid out five per row, b to the right and a upward, one filled
/// unit square per region point. Output depends only on the panels.
[[nodiscard]] inline std::string region_svg(const std::vector<RegionPanel>& panels) {
  constexpr integer cell = 10;
  constexpr integer margin = 24;
  constexpr integer per_row = 5;
  integer extent = 1;
  for (const auto& p : panels) extent = std::max(extent, p.g);
  const integer side = extent * cell;
  const integer panel_w = side + 2 * margin;
  const integer panel_h = side + 2 * margin;
  const auto n = static_cast<integer>(panels.size());
  const integer cols = std::max<integer>(1, std::min(n, per_row));
  const integer rows = std::max<integer>(1, (n + per_row - 1) / per_row);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * panel_w << "\" height=\"" << rows * panel_h
      << "\" viewBox=\"0 0 " << cols * panel_w << ' ' << rows * panel_h << "\">\n";
  for (integer i = 0; i < n; ++i) {
    const auto& p = panels[static_cast<std::size_t>(i)];
    const integer ox = (i % per_row) * panel_w + margin;
    const integer oy = (i / per_row) * panel_h + margin;
    out << "<g class=\"panel\" data-g=\"" << p.g << "\" data-k=\"" << p.k << "\" data-count=\"" << p.points.size()
        << "\" transform=\"translate(" << ox << ',' << oy << ")\">\n";
    out << "<text x=\"" << side / 2 << "\" y=\"" << side + margin - 6
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">k=" << p.k << "</text>\n";
    for (const auto& [b, a] : p.points) {
      out << "<rect class=\"pt\" data-b=\"" << b << "\" data-a=\"" << a << "\" x=\"" << (b - 1) * cell << "\" y=\""
          << side - a * cell << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"#888\"/>\n";
    }
    out << "<path d=\"M0,0 L0," << side << " L" << side << ',' << side
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kgonal::io
