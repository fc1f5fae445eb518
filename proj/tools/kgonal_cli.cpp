// kgonal: command-line frontend for the Brill-Noether estimates, displacement
// tableaux, admissibility, chains of cycles and censuses.
//
// Exit status: 0 on success, 1 when parameters violate a precondition,
// 2 on usage errors.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgonal/io.hpp"
#include "kgonal/kgonal.hpp"

namespace {

using kgonal::integer;
using kgonal::io::json;

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw kgonal::precondition_error("cannot open output file '" + path + "'");
    f << content;
  }

  [[nodiscard]] bool styled() const { return path.empty() && std::getenv("NO_COLOR") == nullptr && ::isatty(1); }
};

void add_output(CLI::App* cmd, Output& out, std::vector<std::string> formats) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw kgonal::precondition_error("cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

std::string tableau_summary(const kgonal::Tableau& t, const kgonal::Validation& v) {
  std::ostringstream s;
  s << "# valid=" << bool_str(v.valid) << " distinct_labels=" << v.distinct_labels << " max_label=" << t.max_label()
    << " delta=" << kgonal::delta(t.a(), t.b(), t.k()) << '\n';
  std::vector<integer> present(t.labels().begin(), t.labels().end());
  std::sort(present.begin(), present.end());
  s << "# skipped=";
  bool first = true;
  for (integer v2 = 1; v2 <= t.max_label(); ++v2) {
    if (std::binary_search(present.begin(), present.end(), v2)) continue;
    s << (first ? "" : ",") << v2;
    first = false;
  }
  s << '\n';
  return s.str();
}

json tableau_summary_json(const kgonal::Tableau& t, const kgonal::Validation& v) {
  json j = kgonal::io::to_json(t);
  std::vector<integer> present(t.labels().begin(), t.labels().end());
  std::sort(present.begin(), present.end());
  json skipped = json::array();
  for (integer v2 = 1; v2 <= t.max_label(); ++v2)
    if (!std::binary_search(present.begin(), present.end(), v2)) skipped.push_back(v2);
  j["valid"] = v.valid;
  j["distinct_labels"] = v.distinct_labels;
  j["max_label"] = t.max_label();
  j["delta"] = kgonal::delta(t.a(), t.b(), t.k());
  j["skipped"] = std::move(skipped);
  return j;
}

std::string ascii_region(integer g, const std::set<kgonal::RegionPoint>& pts) {
  // a decreases downward; b increases to the right.
  std::string out;
  for (integer a = g; a >= 1; --a) {
    for (integer b = 1; b <= g; ++b) out += pts.count({b, a}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brill-Noether estimates for general k-gonal curves"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  integer g = 0, k = 0, d = 0, r = 0, a = 0, b = 0, ell = 0, p = 0;
  integer r_min = 0, r_max = 0, d_min = 0, d_max = 0;
  unsigned threads = 0;
  std::string in_path;
  bool compress = false;
  Output out;

  auto need = [](CLI::App* cmd, const char* name, integer& v, const char* what) {
    return cmd->add_option(name, v, what)->required();
  };

  auto* rho_cmd = app.add_subcommand("rho", "Evaluate rho, rho_lower, rho_bar and related quantities at (g,k,d,r)");
  need(rho_cmd, "--g", g, "Genus");
  need(rho_cmd, "--k", k, "Gonality");
  need(rho_cmd, "--d", d, "Degree");
  need(rho_cmd, "--r", r, "Rank");
  add_output(rho_cmd, out, {"text", "json"});

  auto* build_cmd = app.add_subcommand("tableau-build", "Construct a tableau with delta(a,b,k) labels");
  need(build_cmd, "--a", a, "Rows");
  need(build_cmd, "--b", b, "Columns");
  need(build_cmd, "--k", k, "Uniformity modulus");
  add_output(build_cmd, out, {"text", "json"});

  auto* verify_cmd = app.add_subcommand("tableau-verify", "Validate a tableau file and count its labels");
  verify_cmd->add_option("--in", in_path, "Tableau file (text or JSON), '-' for stdin")->required();
  verify_cmd->add_flag("--compress", compress, "Emit the order-preserving relabeling onto 1..n");
  add_output(verify_cmd, out, {"text", "json"});

  auto* search_cmd = app.add_subcommand("tableau-search", "Exhaustive minimum number of labels (a*b <= 20)");
  need(search_cmd, "--a", a, "Rows");
  need(search_cmd, "--b", b, "Columns");
  need(search_cmd, "--k", k, "Uniformity modulus");
  add_output(search_cmd, out, {"text", "json"});

  auto* block_cmd = app.add_subcommand("blocking-set", "Lower-bound certificate of size delta(a,b,k), a <= b");
  need(block_cmd, "--a", a, "Rows");
  need(block_cmd, "--b", b, "Columns");
  need(block_cmd, "--k", k, "Uniformity modulus");
  add_output(block_cmd, out, {"text", "json"});

  auto* adm_cmd = app.add_subcommand("admissible", "Admissibility of (p,k,ell), or a witness ell for (p,k)");
  need(adm_cmd, "--p", p, "Characteristic (0 or prime)");
  need(adm_cmd, "--k", k, "Gonality");
  auto* ell_opt = adm_cmd->add_option("--ell", ell, "Check this ell instead of choosing one");
  add_output(adm_cmd, out, {"text", "json"});

  auto* chain_cmd = app.add_subcommand("chain", "Chain of cycles, torsion profile and harmonic map");
  need(chain_cmd, "--g", g, "Number of cycles");
  need(chain_cmd, "--k", k, "Degree");
  need(chain_cmd, "--ell", ell, "Top edge length");
  auto* chain_p = chain_cmd->add_option("--p", p, "Characteristic for the tameness check");
  add_output(chain_cmd, out, {"text", "json"});

  auto* region_cmd = app.add_subcommand("region", "Points (b,a) with rho_bar >= 0");
  need(region_cmd, "--g", g, "Genus");
  auto* region_k = region_cmd->add_option("--k", k, "Gonality (all gonalities when omitted)");
  add_output(region_cmd, out, {"text", "csv", "json", "svg"});

  auto* census_cmd = app.add_subcommand("census", "Gap census for every gonality at genus g");
  need(census_cmd, "--g", g, "Genus");
  census_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_output(census_cmd, out, {"text", "csv", "json"});

  auto* survey_cmd = app.add_subcommand("survey", "Classify every (d,r) in a window");
  need(survey_cmd, "--g", g, "Genus");
  need(survey_cmd, "--k", k, "Gonality");
  survey_cmd->add_option("--r-min", r_min, "Smallest rank (default 0)");
  auto* r_max_opt = survey_cmd->add_option("--r-max", r_max, "Largest rank (default g)");
  survey_cmd->add_option("--d-min", d_min, "Smallest degree (default 0)");
  auto* d_max_opt = survey_cmd->add_option("--d-max", d_max, "Largest degree (default g-1)");
  add_output(survey_cmd, out, {"text", "csv", "json"});

  auto* cm_cmd = app.add_subcommand("cm", "Coppens-Martens hypotheses for ell in {0,1,r-1,r}");
  need(cm_cmd, "--g", g, "Genus");
  need(cm_cmd, "--k", k, "Gonality");
  need(cm_cmd, "--d", d, "Degree");
  need(cm_cmd, "--r", r, "Rank");
  add_output(cm_cmd, out, {"text", "json"});

  auto* sharp_cmd = app.add_subcommand("verify-sharpness", "Check rho_bar < 0 on the gap region when k <= 5 or k >= g/5+2");
  need(sharp_cmd, "--g", g, "Genus");
  add_output(sharp_cmd, out, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream s;

    if (rho_cmd->parsed()) {
      const kgonal::CurveClass cc(g, k);
      const kgonal::SeriesIndex si{d, r};
      const auto bar = kgonal::rho_bar(cc, si);
      const auto low = kgonal::rho_lower(cc, si);
      const auto ab = kgonal::to_ab(g, si);
      const integer value = kgonal::rho(g, d, r);
      const integer dl = kgonal::delta(ab.a, ab.b, k);
      const bool gap = kgonal::in_gap_region(ab, k);
      if (out.format == "json") {
        json j{{"g", g}, {"k", k}, {"d", d}, {"r", r}, {"a", ab.a}, {"b", ab.b},
               {"r_prime", kgonal::r_prime(cc, si)}, {"rho", value}, {"rho_lower", low.value},
               {"rho_bar", bar.value}, {"ell", bar.maximizer_ell}, {"ell_lower", low.maximizer_ell},
               {"delta", dl}, {"in_gap", gap}};
        j["generic"] = value >= 0 ? json(kgonal::classify_generic(cc, si)) : json(nullptr);
        s << dump(j);
      } else {
        s << "g=" << g << " k=" << k << " d=" << d << " r=" << r << '\n'
          << "a=" << ab.a << " b=" << ab.b << " r_prime=" << kgonal::r_prime(cc, si) << '\n'
          << "rho=" << value << '\n'
          << "rho_lower=" << low.value << '\n'
          << "rho_bar=" << bar.value << '\n'
          << "ell=" << bar.maximizer_ell << '\n'
          << "delta=" << dl << '\n'
          << "in_gap=" << bool_str(gap) << '\n'
          << "generic=" << (value >= 0 ? bool_str(kgonal::classify_generic(cc, si)) : "n/a") << '\n';
      }
    } else if (build_cmd->parsed()) {
      const auto t = kgonal::construct_minimal(a, b, k);
      const auto v = kgonal::validate(t);
      if (out.format == "json") s << dump(tableau_summary_json(t, v));
      else s << kgonal::io::to_text(t) << tableau_summary(t, v);
    } else if (verify_cmd->parsed()) {
      const auto t = kgonal::io::parse_tableau(read_input(in_path));
      const auto v = kgonal::validate(t);
      if (!v) {
        std::cerr << "invalid tableau: " << v.violation->message() << '\n';
        return 1;
      }
      const auto shown = compress ? kgonal::compress_labels(t) : t;
      if (out.format == "json") s << dump(tableau_summary_json(shown, kgonal::validate(shown)));
      else s << (compress ? kgonal::io::to_text(shown) : "") << tableau_summary(shown, kgonal::validate(shown));
    } else if (search_cmd->parsed()) {
      const auto res = kgonal::brute_force_search(a, b, k);
      const integer dl = kgonal::delta(a, b, k);
      if (out.format == "json") {
        s << dump(json{{"a", a}, {"b", b}, {"k", k}, {"cd", res.min_distinct}, {"delta", dl},
                       {"nodes", res.nodes}, {"witness", kgonal::io::to_json(res.witness)}});
      } else {
        s << kgonal::io::to_text(res.witness) << "# cd=" << res.min_distinct << " delta=" << dl
          << " nodes=" << res.nodes << '\n';
      }
    } else if (block_cmd->parsed()) {
      const auto bs = kgonal::blocking_set(a, b, k);
      const bool dom = kgonal::has_domination_property(bs);
      if (out.format == "json") {
        json j = kgonal::io::to_json(bs);
        j["domination"] = dom;
        s << dump(j);
      } else {
        s << kgonal::io::to_text(bs) << "# case=" << kgonal::to_string(bs.case_tag) << " size=" << bs.boxes.size()
          << " domination=" << bool_str(dom) << '\n';
      }
    } else if (adm_cmd->parsed()) {
      if (ell_opt->count() > 0) {
        const bool ok = kgonal::is_admissible(p, k, ell);
        if (out.format == "json") s << dump(json{{"p", p}, {"k", k}, {"ell", ell}, {"admissible", ok}});
        else s << "admissible=" << bool_str(ok) << '\n';
      } else {
        const auto choice = kgonal::choose_ell(p, k);
        if (out.format == "json") {
          s << dump(json{{"p", p}, {"k", k}, {"ell", choice ? json(*choice) : json(nullptr)}});
        } else {
          s << "ell=" << (choice ? std::to_string(*choice) : std::string("none")) << '\n';
        }
      }
    } else if (chain_cmd->parsed()) {
      const auto c = kgonal::build_chain(g, k, ell);
      const auto m = kgonal::build_harmonic_map(c);
      const auto profile = kgonal::torsion_profile(c);
      if (out.format == "json") {
        json j{{"chain", kgonal::io::to_json(c)},
               {"betti_number", c.betti_number()},
               {"total_length", c.total_length()},
               {"torsion_profile", profile},
               {"harmonic_map", kgonal::io::to_json(m)}};
        if (chain_p->count() > 0) j["tame"] = kgonal::is_tame(m, p);
        s << dump(j);
      } else {
        s << "vertices=" << c.vertex_count() << " edges=" << c.edges().size() << " betti=" << c.betti_number()
          << " total_length=" << c.total_length() << '\n';
        for (std::size_t i = 0; i < c.edges().size(); ++i) {
          const auto& e = c.edges()[i];
          s << "edge w" << e.from << "-w" << e.to << ' ' << kgonal::to_string(e.side) << " length=" << e.length
            << " expansion=" << m.expansion[i] << '\n';
        }
        s << "torsion_profile=";
        for (std::size_t i = 0; i < profile.size(); ++i) s << (i ? "," : "") << profile[i];
        s << '\n' << "degree=" << m.degree << '\n';
        if (chain_p->count() > 0) s << "tame=" << bool_str(kgonal::is_tame(m, p)) << '\n';
      }
    } else if (region_cmd->parsed()) {
      std::vector<kgonal::io::RegionPanel> panels;
      if (region_k->count() > 0) {
        panels.push_back({g, k, kgonal::region_points(kgonal::CurveClass(g, k))});
      } else {
        kgonal::detail::require(g >= 1, "region requires g >= 1");
        for (integer kk = 2; kk <= kgonal::CurveClass::max_gonality(g); ++kk)
          panels.push_back({g, kk, kgonal::region_points(kgonal::CurveClass(g, kk))});
      }
      if (out.format == "svg") {
        s << kgonal::io::region_svg(panels);
      } else if (out.format == "csv") {
        s << "g,k,b,a\n";
        for (const auto& panel : panels)
          for (const auto& [pb, pa] : panel.points) s << g << ',' << panel.k << ',' << pb << ',' << pa << '\n';
      } else if (out.format == "json") {
        json arr = json::array();
        for (const auto& panel : panels) {
          json pts = json::array();
          for (const auto& [pb, pa] : panel.points) pts.push_back(json::array({pb, pa}));
          arr.push_back({{"g", g}, {"k", panel.k}, {"count", panel.points.size()}, {"points", std::move(pts)}});
        }
        s << dump(arr);
      } else {
        for (const auto& panel : panels)
          s << "k=" << panel.k << " points=" << panel.points.size() << '\n' << ascii_region(g, panel.points);
      }
    } else if (census_cmd->parsed()) {
      const auto report = kgonal::census_summary(g, {}, threads);
      if (out.format == "csv") {
        kgonal::io::write_census_csv(s, report);
      } else if (out.format == "json") {
        s << dump(kgonal::io::to_json(report));
      } else {
        s << "k pairs_nonneg gap_pairs ambiguous_empty proportion\n";
        for (const auto& row : report.per_k) {
          s << row.k << ' ' << row.pairs_nonneg << ' ' << row.gap_pairs << ' ' << row.ambiguous_empty << ' '
            << row.proportion().rounded() << '\n';
        }
        const auto& best = report.best();
        s << "max proportion " << best.proportion().rounded() << " (" << best.gap_pairs << '/' << best.pairs_nonneg
          << ") at k=" << best.k << '\n';
      }
    } else if (survey_cmd->parsed()) {
      const kgonal::CurveClass cc(g, k);
      kgonal::SurveyRange range{r_min, std::nullopt, d_min, std::nullopt};
      if (r_max_opt->count() > 0) range.r_max = r_max;
      if (d_max_opt->count() > 0) range.d_max = d_max;
      const auto records = kgonal::survey(cc, range);
      if (out.format == "csv") {
        kgonal::io::write_survey_csv(s, cc, records);
      } else if (out.format == "json") {
        json arr = json::array();
        for (const auto& rec : records) arr.push_back(kgonal::io::to_json(rec));
        s << dump(json{{"g", g}, {"k", k}, {"records", std::move(arr)}});
      } else {
        s << "d r a b rho rho_lower rho_bar ell gap ambiguous generic\n";
        for (const auto& rec : records) {
          s << rec.d << ' ' << rec.r << ' ' << rec.a << ' ' << rec.b << ' ' << rec.rho << ' ' << rec.rho_lower << ' '
            << rec.rho_bar << ' ' << rec.maximizer_ell << ' ' << int(rec.in_gap) << ' ' << int(rec.emptiness_ambiguous)
            << ' ' << int(rec.generic_dim) << '\n';
        }
      }
    } else if (cm_cmd->parsed()) {
      const kgonal::CurveClass cc(g, k);
      const auto cands = kgonal::cm_components(cc, {d, r});
      if (out.format == "json") {
        json arr = json::array();
        for (const auto& c : cands) {
          arr.push_back({{"ell", c.ell}, {"dim", c.dim}, {"h1_rank", c.rank_bound}, {"h2_divides", c.divides},
                         {"h3_dim", c.dim_bound}, {"hypotheses_ok", c.hypotheses_ok}, {"selected", c.selected}});
        }
        s << dump(json{{"g", g}, {"k", k}, {"d", d}, {"r", r}, {"candidates", std::move(arr)}});
      } else {
        s << "ell dim h1 h2 h3 ok selected\n";
        for (const auto& c : cands) {
          s << c.ell << ' ' << c.dim << ' ' << int(c.rank_bound) << ' ' << int(c.divides) << ' ' << int(c.dim_bound)
            << ' ' << int(c.hypotheses_ok) << ' ' << (c.selected ? "*" : "-") << '\n';
        }
      }
    } else if (sharp_cmd->parsed()) {
      const auto report = kgonal::verify_sharpness(g);
      if (out.format == "json") {
        json arr = json::array();
        for (const auto& c : report.cases) {
          json ce = json::array();
          for (const auto& si : c.counterexamples) ce.push_back({{"d", si.d}, {"r", si.r}});
          arr.push_back({{"k", c.k}, {"hypothesis", c.hypothesis}, {"gap_points", c.gap_points},
                         {"nonneg_gap_points", c.nonneg_gap_points}, {"counterexamples", std::move(ce)}});
        }
        s << dump(json{{"g", g}, {"passed", report.passed()}, {"cases", std::move(arr)}});
      } else {
        const bool color = out.styled();
        auto tag = [&](bool ok) {
          if (!color) return std::string(ok ? "PASS" : "FAIL");
          return std::string(ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m");
        };
        for (const auto& c : report.cases) {
          s << "k=" << c.k << " gap_points=" << c.gap_points << " nonneg=" << c.nonneg_gap_points << ' ';
          if (c.hypothesis) s << tag(c.counterexamples.empty()) << '\n';
          else s << "(outside hypothesis, reported only)\n";
        }
        s << "overall " << tag(report.passed()) << '\n';
      }
      out.emit(s.str());
      return report.passed() ? 0 : 1;
    }

    out.emit(s.str());
    return 0;
  } catch (const kgonal::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
