// Command-line driver: verify suites, decide isomorphisms, re-render reports.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "modrep/errors.hpp"
#include "modrep/suites.hpp"
#include "modrep/supersingular.hpp"

namespace {

struct ParamFlag {
  const char* name;
  const char* help;
};

const ParamFlag kParams[] = {
    {"p", "Odd prime (default 5)"},
    {"k", "Coefficients in F_{p^k} (default 2)"},
    {"r", "Weight n or range lo..hi (default all)"},
    {"lambda", "Hecke eigenvalue or Lambda, as field coefficients c0,c1"},
    {"depth", "Quotient depth n (default 4)"},
    {"slack", "Extra radius R for image columns (default 1)"},
    {"word-len", "Maximal word length L (default 4)"},
    {"alphabet", "Alphabet name (default per suite)"},
    {"window", "Principal-series window M,N (default 1,1)"},
    {"seed", "Random seed (default 1)"},
    {"a", "Unit exponent of the ramified character (default 1)"},
    {"levels", "Ladder levels (default 3)"},
    {"rounds", "Generation closure rounds (default 12)"},
};

modrep::Param parse_param(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw modrep::UsageError("expected r,side such as 1,infty");
  int r;
  try {
    r = std::stoi(text.substr(0, comma));
  } catch (const std::exception&) {
    throw modrep::UsageError("bad weight in '" + text + "'");
  }
  return {r, modrep::parse_side(text.substr(comma + 1))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw modrep::UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for mod p representations of GL2(Q_p) and SL2(Q_p)"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, config_file, out_file;
  bool json = false, reproducible = false;
  std::map<std::string, std::string> values;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--config", config_file, "File of key = value lines, overridden by flags");
  for (const auto& flag : kParams) verify->add_option(std::string("--") + flag.name, values[flag.name], flag.help);
  verify->add_flag("--json", json, "Emit JSON instead of the text table");
  verify->add_flag("--reproducible", reproducible, "Write runtimes and cache hits as 0");
  verify->add_option("--out", out_file, "Also write the JSON report to this file");

  // decide isomorphism
  auto* decide = app.add_subcommand("decide", "Decide a property of parameters");
  auto* iso = decide->add_subcommand("isomorphism", "Are two supersingular SL2 pieces isomorphic?");
  decide->require_subcommand(1);
  unsigned p = 5;
  std::string left, right;
  iso->add_option("--p", p)->required();
  iso->add_option("--left", left, "r,side")->required();
  iso->add_option("--right", right, "s,side")->required();
  bool iso_json = false;
  iso->add_flag("--json", iso_json);

  // report
  auto* report = app.add_subcommand("report", "Render a stored JSON report");
  std::string in_file, format = "text";
  report->add_option("--in", in_file)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      modrep::SuiteConfig cfg;
      if (!config_file.empty()) cfg = modrep::parse_config(read_file(config_file));
      cfg.suite = suite;
      for (const auto& flag : kParams)
        if (verify->count(std::string("--") + flag.name)) modrep::set_param(cfg, flag.name, values[flag.name]);
      auto cache = modrep::Cache::from_env();
      modrep::Report rep = modrep::run_suite(cfg, cache ? &*cache : nullptr);
      std::string js = modrep::to_json(rep, reproducible);
      if (!out_file.empty()) std::ofstream(out_file) << js;
      std::cout << (json ? js : modrep::to_text(rep));
      return rep.overall() == "pass" ? 0 : 1;
    }
    if (*iso) {
      modrep::Param x = parse_param(left), y = parse_param(right);
      modrep::IsoDecision d = modrep::decide_isomorphism(p, x, y);
      if (iso_json)
        std::cout << "{\"criterion\": \"" << d.criterion << "\", \"isomorphic\": " << (d.isomorphic ? "true" : "false")
                  << "}\n";
      else
        std::cout << x.str() << " vs " << y.str() << ": " << (d.isomorphic ? "isomorphic" : "not isomorphic") << " ("
                  << d.criterion << ")\n";
      return 0;
    }
    if (*report) {
      modrep::Report rep = modrep::report_from_json(read_file(in_file));
      std::cout << (format == "json" ? modrep::to_json(rep) : modrep::to_text(rep));
      return rep.overall() == "pass" ? 0 : 1;
    }
  } catch (const modrep::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const modrep::RangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const modrep::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const modrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
