// latcon: command-line front-end for the lattice congruence library.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcon/checks.hpp"
#include "latcon/congruence.hpp"
#include "latcon/error.hpp"
#include "latcon/expr.hpp"
#include "latcon/filters.hpp"
#include "latcon/io.hpp"
#include "latcon/isomorphism.hpp"
#include "latcon/partition.hpp"

namespace {

using namespace latcon;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapExceeded = 3;

struct Globals {
  std::size_t con_cap = ConOptions{}.max_elements;
  std::uint64_t seed = 7;
  bool quiet = false;

  ConOptions con() const {
    ConOptions options;
    options.max_elements = con_cap;
    return options;
  }
};

std::string spectrum(const Lattice& lattice, const SubsetFamily& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (i > 0) out += ',';
    out += render_set(lattice, family.members[i].elements);
  }
  return out + "}";
}

int analyze(const Globals& g, const std::string& text, bool as_json) {
  const Lattice l = eval(parse_expr(text));
  nlohmann::json report{{"size", l.size()},
                        {"trivial", l.is_trivial()},
                        {"distributive", l.is_distributive()},
                        {"filters", all_filters(l).size()},
                        {"ideals", all_ideals(l).size()},
                        {"spec_filt", spectrum(l, spec_filt(l))},
                        {"spec_id", spectrum(l, spec_id(l))}};
  int status = kOk;
  try {
    const ConLattice con = all_congruences(l, g.con());
    report["con"] = con.size();
    report["con01"] = con.con01().size();
    report["simple"] = con.is_simple();
    report["si"] = con.monolith().has_value();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeCapExceeded) throw;
    report["con"] = nullptr;
    report["con_skipped"] = e.what();
    status = kCapExceeded;
  }
  if (as_json) {
    std::cout << report.dump(2) << '\n';
    return status;
  }
  auto con_field = [&](const char* key) -> std::string {
    const auto& v = report[key];
    if (v.is_null() || v.is_discarded()) return "skipped (above --con-cap)";
    return v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.dump();
  };
  std::cout << "|L|=" << l.size() << '\n'
            << "|Con|=" << con_field("con") << '\n'
            << "|Con01|=" << (report.contains("con01") ? con_field("con01") : con_field("con"))
            << '\n'
            << "|Filt|=" << report["filters"] << '\n'
            << "|Id|=" << report["ideals"] << '\n'
            << "Spec_Filt=" << report["spec_filt"].get<std::string>() << '\n'
            << "Spec_Id=" << report["spec_id"].get<std::string>() << '\n'
            << "simple=" << (report.contains("simple") ? con_field("simple") : con_field("con"))
            << '\n'
            << "SI=" << (report.contains("si") ? con_field("si") : con_field("con")) << '\n'
            << "distributive=" << (l.is_distributive() ? "true" : "false") << '\n';
  return status;
}

int congruences(const Globals& g, const std::string& text, bool dot) {
  const Lattice l = eval(parse_expr(text));
  const ConLattice con = all_congruences(l, g.con());
  if (dot) {
    std::cout << to_dot(con.as_lattice(), "Con");
    return kOk;
  }
  std::cout << "|Con|=" << con.size() << '\n';
  for (const auto& theta : con.members()) {
    std::string tags;
    if (theta == con[con.delta_index()]) tags += " Δ";
    if (theta == con[con.nabla_index()]) tags += " ∇";
    std::cout << render(l, theta) << tags << '\n';
  }
  return kOk;
}

int family(const std::string& text, bool filters) {
  const Lattice l = eval(parse_expr(text));
  const SubsetFamily f = filters ? all_filters(l) : all_ideals(l);
  std::cout << (filters ? "|Filt|=" : "|Id|=") << f.size() << '\n' << render_family(l, f);
  return kOk;
}

int spectra(const std::string& text) {
  const Lattice l = eval(parse_expr(text));
  std::cout << "Spec_Filt=" << spectrum(l, spec_filt(l)) << '\n'
            << "Spec_Id=" << spectrum(l, spec_id(l)) << '\n';
  return kOk;
}

int iso(const std::string& left, const std::string& right) {
  const Lattice a = eval(parse_expr(left));
  const Lattice b = eval(parse_expr(right));
  const auto map = isomorphic(a, b);
  if (!map) {
    std::cout << "not isomorphic\n";
    return kCheckFailed;
  }
  std::cout << "isomorphic\n" << render_bijection(a, b, *map) << '\n';
  return kOk;
}

int export_lattice(const std::string& text, const std::string& format, const std::string& out) {
  const Lattice l = eval(parse_expr(text));
  const std::string body = format == "dot" ? to_dot(l) : to_json(l).dump(2) + "\n";
  if (out.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream file(out);
  if (!(file << body)) throw Error(ErrorKind::IoError, "cannot write " + out);
  return kOk;
}

int verify(const Globals& g, SuiteConfig config, const std::string& report_path,
           bool failures_only) {
  config.seed = g.seed;
  config.caps.con = g.con();
  const auto reports = run_suite(config);
  if (!g.quiet) std::cout << render_reports(reports, failures_only);
  if (!report_path.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) doc.push_back(to_json(r));
    std::ofstream file(report_path);
    if (!(file << doc.dump(2) << '\n')) throw Error(ErrorKind::IoError, "cannot write " + report_path);
  }
  const bool any_failed =
      std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); });
  return any_failed ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices: congruences, filters, ideals and constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--con-cap", g.con_cap, "Largest lattice whose congruences are computed")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Corpus seed for verify");
  app.add_flag("--quiet", g.quiet, "Only report through the exit code");

  std::string expr;
  std::string expr2;
  bool as_json = false;
  bool as_dot = false;
  std::string format = "json";
  std::string out;
  SuiteConfig config;
  config.suites.clear();
  std::string report_path;
  bool failures_only = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Sizes, counts, spectra, simplicity");
  analyze_cmd->add_option("expr", expr, "Lattice expression")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* con_cmd = app.add_subcommand("congruences", "List Con(L) in block notation");
  con_cmd->add_option("expr", expr, "Lattice expression")->required();
  con_cmd->add_flag("--dot", as_dot, "Emit the Hasse diagram of Con(L)");

  auto* filters_cmd = app.add_subcommand("filters", "List the filters of L");
  filters_cmd->add_option("expr", expr, "Lattice expression")->required();
  auto* ideals_cmd = app.add_subcommand("ideals", "List the ideals of L");
  ideals_cmd->add_option("expr", expr, "Lattice expression")->required();
  auto* spectra_cmd = app.add_subcommand("spectra", "Prime filters and prime ideals");
  spectra_cmd->add_option("expr", expr, "Lattice expression")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Find an isomorphism between two lattices");
  iso_cmd->add_option("left", expr, "Lattice expression")->required();
  iso_cmd->add_option("right", expr2, "Lattice expression")->required();

  auto* export_cmd = app.add_subcommand("export", "Write L as DOT or JSON");
  export_cmd->add_option("expr", expr, "Lattice expression")->required();
  export_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the check suites over a corpus");
  std::string suite_help = "Suite to run (repeatable): all";
  for (auto name : suite_names()) suite_help += ", " + std::string(name);
  verify_cmd->add_option("--suite", config.suites, suite_help);
  verify_cmd->add_option("--count", config.count, "Random corpus entries");
  verify_cmd->add_option("--max-size", config.max_size, "Largest corpus lattice");
  verify_cmd->add_option("--pairs", config.pairs, "Random pairs and families per suite");
  verify_cmd->add_flag("--inject-fault", config.inject_fault,
                       "Also run on a lattice with a corrupted meet table");
  verify_cmd->add_option("--exhaustive", config.exhaustive,
                         "Also check every lattice with up to N elements (N <= 7)");
  verify_cmd->add_option("--report", report_path, "Write all reports as JSON");
  verify_cmd->add_flag("--failures-only", failures_only, "Print failed checks only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (config.suites.empty()) config.suites.push_back("all");

  try {
    if (*analyze_cmd) return analyze(g, expr, as_json);
    if (*con_cmd) return congruences(g, expr, as_dot);
    if (*filters_cmd) return family(expr, true);
    if (*ideals_cmd) return family(expr, false);
    if (*spectra_cmd) return spectra(expr);
    if (*iso_cmd) return iso(expr, expr2);
    if (*export_cmd) return export_lattice(expr, format, out);
    if (*verify_cmd) return verify(g, config, report_path, failures_only);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SizeCapExceeded ? kCapExceeded : kUsage;
  }
  return kUsage;
}
