#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fcpi/errors.hpp"
#include "fcpi/fc_model.hpp"
#include "fcpi/gamma.hpp"
#include "fcpi/io.hpp"
#include "fcpi/tietze.hpp"
#include "fcpi/verify.hpp"

namespace {

using namespace fcpi;

struct Options {
  int n = 0;
  std::string in_path;
  std::string out_path;
  std::string mode = "spanning";
  bool simplify = false;
  long long tietze_budget = 10000;
  std::vector<std::string> battery_names;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + opt.out_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Arrangement load_arrangement(const Options& opt) {
  if (!opt.in_path.empty()) return parse_arrangement(read_file(opt.in_path));
  if (opt.n < 1) throw CapacityError("either --n or --in is required");
  return build_fc_arrangement(opt.n);
}

long long hom_budget_from_env() {
  if (const char* v = std::getenv("FCPI_HOM_BUDGET")) {
    try {
      return std::stoll(v);
    } catch (...) {
      throw std::runtime_error("FCPI_HOM_BUDGET is not an integer");
    }
  }
  return kDefaultHomBudget;
}

int run(int argc, char** argv) {
  CLI::App app{"Salvetti 2-complex of the F_C hyperplane arrangement, its sign-flip "
               "quotient, and fundamental group presentations"};
  app.require_subcommand(1);
  Options opt;

  auto add_n = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--n", opt.n, "dimension of the F_C arrangement");
    if (required) o->required();
  };
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--in", opt.in_path, "arrangement file (instead of --n)");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
  };

  auto* cmd_build = app.add_subcommand("build", "emit the F_C arrangement");
  add_n(cmd_build, true);
  cmd_build->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* cmd_chambers = app.add_subcommand("chambers", "enumerate chambers");
  add_n(cmd_chambers, false);
  add_io(cmd_chambers);

  auto* cmd_complex = app.add_subcommand("complex", "build the Salvetti 2-skeleton");
  add_n(cmd_complex, false);
  add_io(cmd_complex);

  auto* cmd_quotient = app.add_subcommand("quotient", "build the sign-flip quotient complex");
  add_n(cmd_quotient, false);
  add_io(cmd_quotient);

  auto* cmd_pres = app.add_subcommand("presentation", "fundamental group presentation");
  add_n(cmd_pres, false);
  add_io(cmd_pres);
  cmd_pres->add_option("--mode", opt.mode, "tree | spanning")
      ->check(CLI::IsMember({"tree", "spanning"}));
  cmd_pres->add_flag("--simplify", opt.simplify, "apply Tietze simplification");
  cmd_pres->add_option("--tietze-budget", opt.tietze_budget, "step limit for simplification");

  auto* cmd_model = app.add_subcommand("model", "the model presentation on G0..Gn");
  add_n(cmd_model, true);
  cmd_model->add_option("--out", opt.out_path, "output file (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  add_n(cmd_verify, true);
  cmd_verify->add_option("--out", opt.out_path, "output file (default stdout)");
  cmd_verify->add_option("--battery", opt.battery_names,
                         "battery groups (C2 C3 S3 D4 A4)");
  cmd_verify->add_option("--tietze-budget", opt.tietze_budget, "step limit for simplification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_build->parsed()) {
      write_output(opt, serialize_arrangement(build_fc_arrangement(opt.n)));
    } else if (cmd_chambers->parsed()) {
      const Arrangement arr = load_arrangement(opt);
      ChambersFile c{arr.dimension, enumerate_chambers(arr)};
      write_output(opt, serialize_chambers(c));
    } else if (cmd_complex->parsed()) {
      write_output(opt, serialize_complex(build_salvetti_2_skeleton(load_arrangement(opt))));
    } else if (cmd_quotient->parsed()) {
      const Arrangement arr = load_arrangement(opt);
      write_output(opt, serialize_quotient(build_quotient(build_salvetti_2_skeleton(arr))));
    } else if (cmd_pres->parsed()) {
      const Arrangement arr = load_arrangement(opt);
      const auto q = build_quotient(build_salvetti_2_skeleton(arr));
      const auto sd = spanning_cells(q);
      const auto mode =
          opt.mode == "tree" ? PresentationMode::Tree : PresentationMode::SpanningComplex;
      GroupPresentation p = presentation_from_complex(q, sd, mode);
      if (opt.simplify) {
        TietzeResult t = tietze_simplify(p, opt.tietze_budget);
        if (t.budget_exhausted) std::cerr << "note: simplification stopped at the step budget\n";
        std::optional<GroupPresentation> renamed;
        if (arr.fc && mode == PresentationMode::SpanningComplex)
          renamed = rename_to_model_generators(q, p, t);
        p = renamed ? std::move(*renamed) : std::move(t.presentation);
      }
      write_output(opt, presentation_to_text(p));
    } else if (cmd_model->parsed()) {
      write_output(opt, presentation_to_text(fc_model_presentation(opt.n)));
    } else if (cmd_verify->parsed()) {
      const auto battery =
          opt.battery_names.empty() ? default_battery() : battery_by_names(opt.battery_names);
      const auto report =
          run_invariant_suite(opt.n, battery, hom_budget_from_env(), opt.tietze_budget);
      write_output(opt, report_to_text(report));
      std::cerr << report_summary(report) << "\n";
      return report.all_pass() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
