// modal-workbench: run DSL scripts, oracle sweeps and the worked examples.
//
// Exit status: 0 all checks passed, 1 some check failed, 2 parse, validation
// or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modalwb/dsl/executor.hpp"
#include "modalwb/dsl/parser.hpp"
#include "modalwb/error.hpp"
#include "modalwb/examples.hpp"
#include "sweeps.hpp"

namespace {

constexpr int kUsageError = 2;

struct Common {
  bool json = false;
  std::string dot;
  std::uint64_t seed = 0;
  std::size_t budget = 12;
  int max_atoms = modalwb::kMaxPowersetAtoms;

  modalwb::dsl::ExecOptions exec() const { return {seed, budget, max_atoms}; }
};

void add_common(CLI::App* cmd, Common& c, bool with_dot) {
  cmd->add_flag("--json", c.json, "Emit a JSON report");
  cmd->add_option("--seed", c.seed, "Seed for sampled checks")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Search budget")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--max-atoms", c.max_atoms, "Largest powerset carrier accepted")
      ->capture_default_str()
      ->check(CLI::Range(1, modalwb::kMaxPowersetAtoms));
  if (with_dot) cmd->add_option("--dot", c.dot, "Write the DOT graphs produced by cf/cm queries to FILE");
}

int emit(const modalwb::dsl::Report& report, const Common& c) {
  if (!c.dot.empty()) {
    std::ofstream out(c.dot);
    if (!out) {
      std::cerr << "error: cannot write " << c.dot << "\n";
      return kUsageError;
    }
    for (const auto& g : report.dot_graphs) out << g << "\n";
  }
  if (c.json) {
    std::cout << report.to_json(c.exec()).dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.exit_code();
}

int run_source(const std::string& source, const Common& c) {
  modalwb::dsl::Script script = modalwb::dsl::parse(source);
  return emit(modalwb::dsl::execute(script, c.exec()), c);
}

int run_file(const std::string& path, const Common& c) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kUsageError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_source(buf.str(), c);
}

int examples_list(bool json) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& name : modalwb::example_names()) {
    auto bundle = modalwb::example_by_name(name);
    if (json) {
      list.push_back({{"name", name}, {"summary", bundle.summary}, {"assertions", bundle.assertions.size()}});
    } else {
      std::cout << name << "  " << bundle.summary << " (" << bundle.assertions.size() << " assertions)\n";
    }
  }
  if (json) std::cout << nlohmann::json{{"schema", modalwb::dsl::kReportSchema}, {"examples", list}}.dump(2) << "\n";
  return 0;
}

int sweep(const std::string& kind, int n, const Common& c) {
  auto report = modalwb::sweep::run(kind, n, c.seed);
  if (c.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for modal operators on Boolean algebras"};
  app.require_subcommand(1);

  Common common;

  std::string file;
  auto* run = app.add_subcommand("run", "Execute a DSL script");
  run->add_option("FILE", file, "Script path")->required();
  add_common(run, common, true);

  std::string kind;
  int n = 2;
  auto* sw = app.add_subcommand("sweep", "Compare the core against brute-force oracles");
  sw->add_option("KIND", kind, "pc-oracle | proper-oracle | raut-oracle | cover-oracle | axiom-frame")->required();
  sw->add_option("-n", n, "Number of atoms or frame points")->required();
  add_common(sw, common, false);

  auto* ex = app.add_subcommand("examples", "Worked examples");
  ex->require_subcommand(1);
  auto* ex_list = ex->add_subcommand("list", "List example names");
  ex_list->add_flag("--json", common.json, "Emit JSON");
  std::string name;
  bool all = false;
  auto* ex_run = ex->add_subcommand("run", "Run one example, or all of them with --all");
  ex_run->add_option("NAME", name, "Example name");
  ex_run->add_flag("--all", all, "Run every example");
  add_common(ex_run, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*run) return run_file(file, common);
    if (*sw) return sweep(kind, n, common);
    if (*ex_list) return examples_list(common.json);
    if (*ex_run) {
      if (all == !name.empty()) {
        std::cerr << "error: give exactly one of NAME or --all\n";
        return kUsageError;
      }
      return run_source(all ? "examples run --all\n" : "examples run " + name + "\n", common);
    }
  } catch (const modalwb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
