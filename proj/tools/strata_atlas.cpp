#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "strata/report.hpp"

namespace {

bool parse_level(const std::string& csv, std::set<int>& out) {
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) return false;
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) return false;
      out.insert(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strata-atlas: admissible sets, EKOR/KR strata, closure orders and "
               "Newton invariants for Siegel-type parahoric level structures"};
  app.require_subcommand(1);

  auto* gsp = app.add_subcommand("gsp", "GSp_{2g} computations");
  int g = 2;
  std::string level_csv;
  std::string artifact_str;
  std::string format_str = "md";
  std::string notation_str = "word";
  std::string order_str = "ksigma";
  gsp->add_option("--g", g, "genus (half the symplectic rank)")->required();
  gsp->add_option("--level", level_csv,
                  "comma-separated level indices in 0..g (default: all)");
  gsp->add_option("artifact", artifact_str,
                  "one of: adm ekor kr hasse-ekor hasse-kr newton zip summary selfcheck")
      ->required();
  gsp->add_option("--format", format_str, "md | json | dot")
      ->check(CLI::IsMember({"md", "json", "dot"}));
  gsp->add_option("--notation", notation_str, "word | window")
      ->check(CLI::IsMember({"word", "window"}));
  gsp->add_option("--order", order_str, "ksigma | bruhat (hasse-ekor only)")
      ->check(CLI::IsMember({"ksigma", "bruhat"}));

  auto* schema = app.add_subcommand("schema", "print the versioned JSON schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (schema->parsed()) {
    std::cout << strata::report::json_schema();
    return 0;
  }

  strata::report::ReportRequest req;
  req.group = "gsp";
  req.g = g;
  if (!strata::report::parse_artifact(artifact_str, req.artifact)) {
    std::cerr << "unknown artifact: " << artifact_str << "\n";
    return 2;
  }
  if (level_csv.empty()) {
    for (int i = 0; i <= g; ++i) req.level.insert(i);
  } else if (!parse_level(level_csv, req.level)) {
    std::cerr << "could not parse --level '" << level_csv << "'\n";
    return 2;
  }
  req.format = format_str == "json" ? strata::report::Format::json_fmt
               : format_str == "dot" ? strata::report::Format::dot
                                     : strata::report::Format::md;
  req.notation = notation_str == "window" ? strata::report::Notation::window
                                          : strata::report::Notation::word;
  req.order = order_str == "bruhat" ? strata::report::OrderKind::bruhat
                                    : strata::report::OrderKind::ksigma;
  if (const char* cap = std::getenv("STRATA_ATLAS_CAP")) {
    try {
      req.cap_override = std::stoi(cap);
    } catch (const std::exception&) {
      std::cerr << "STRATA_ATLAS_CAP must be an integer\n";
      return 2;
    }
  }

  try {
    return strata::report::run(req, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
