#include "corner/corner.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kUsage = 64;

struct RunConfig {
  std::string input;
  std::string theory = "branching";
  std::string filter = "all";
  std::string format = "json";
  int max_dim = -1;
  int dim = 2;
  std::size_t cube = 0;
  bool trace = false;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

using Handle = std::unique_ptr<corner_category, decltype(&corner_category_free)>;

int exit_code(corner_status s) {
  switch (s) {
    case CORNER_OK: return 0;
    case CORNER_E_DIMENSION_CAP:
    case CORNER_E_CLOSURE_BUDGET: return 2;
    default: return 1;
  }
}

int report(corner_status s) {
  std::cerr << "error: " << corner_status_name(s) << ": " << corner_last_error() << "\n";
  return exit_code(s);
}

int emit(char* text) {
  std::fputs(text, stdout);
  corner_string_free(text);
  return 0;
}

corner_format fmt(const RunConfig& cfg) { return cfg.format == "table" ? CORNER_FORMAT_TABLE : CORNER_FORMAT_JSON; }

int validate_file(const RunConfig& cfg) {
  std::ifstream f(cfg.input, std::ios::binary);
  if (!f) {
    std::cerr << "error: IoError: cannot open " << cfg.input << "\n";
    return 1;
  }
  std::stringstream text;
  text << f.rdbuf();
  char* out = nullptr;
  int ok = 0;
  if (corner_status s = corner_validate_text(text.str().c_str(), fmt(cfg), &ok, &out)) return report(s);
  emit(out);
  return ok ? 0 : 1;
}

int run(const std::string& cmd, const RunConfig& cfg) {
  if (cmd == "validate" && cfg.input.rfind("builtin:", 0) != 0) return validate_file(cfg);
  corner_category* raw = nullptr;
  if (corner_status s = corner_category_load(cfg.input.c_str(), &raw)) return report(s);
  Handle h(raw, corner_category_free);
  char* out = nullptr;
  int ok = 1;
  corner_status s = CORNER_OK;
  if (cmd == "validate") {
    s = corner_validate(h.get(), fmt(cfg), &ok, &out);
  } else if (cmd == "homology") {
    s = corner_homology(h.get(), cfg.theory.c_str(), cfg.max_dim, fmt(cfg), &out);
  } else if (cmd == "nerve") {
    std::size_t count = 0;
    s = corner_nerve(h.get(), cfg.dim, cfg.filter.c_str(), &count, cfg.format == "json" ? &out : nullptr);
    if (!s && cfg.format == "table") {
      std::cout << "degree " << cfg.dim << " " << cfg.filter << " cubes " << count << "\n";
      return 0;
    }
  } else if (cmd == "fold") {
    s = corner_fold(h.get(), cfg.dim, cfg.cube, cfg.trace ? 1 : 0, fmt(cfg), &out);
  } else if (cmd == "check-laws") {
    s = corner_check_laws(h.get(), cfg.max_dim, cfg.samples, cfg.seed, fmt(cfg), &ok, &out);
  } else if (cmd == "crosscheck-calcul") {
    s = corner_crosscheck_calcul(h.get(), cfg.max_dim, fmt(cfg), &ok, &out);
  }
  if (s) return report(s);
  emit(out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corner homology of higher dimensional automata"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const int cap = corner_max_dim();

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "precubical set file or builtin:2_p, builtin:G_p, builtin:I_n")
        ->required();
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* validate = app.add_subcommand("validate", "check a precubical set and its free category");
  input(validate);
  format(validate);

  auto* homology = app.add_subcommand("homology", "homology groups of one theory");
  input(homology);
  homology->add_option("--theory", cfg.theory)
      ->check(CLI::IsMember(
          {"branching", "merging", "reduced-branching", "formal", "goubault-minus", "goubault-plus"}));
  homology->add_option("--max-dim", cfg.max_dim, "highest degree computed");
  format(homology);

  auto* nerve = app.add_subcommand("nerve", "singular cubes of one degree");
  input(nerve);
  nerve->add_option("--dim", cfg.dim)->required();
  nerve->add_option("--filter", cfg.filter)->check(CLI::IsMember({"all", "branching", "merging"}));
  format(nerve);

  auto* fold = app.add_subcommand("fold", "fold a branching cube through the move pipeline");
  input(fold);
  fold->add_option("--cube", cfg.cube, "index among the branching cubes of the degree");
  fold->add_option("--dim", cfg.dim, "degree of the cube");
  fold->add_flag("--trace", cfg.trace, "print every move");
  format(fold);

  auto* laws = app.add_subcommand("check-laws", "axiom, commutation and folding harness");
  input(laws);
  laws->add_option("--samples", cfg.samples, "cubes sampled per degree, 0 for all");
  laws->add_option("--seed", cfg.seed);
  laws->add_option("--max-dim", cfg.max_dim);
  format(laws);

  auto* calcul = app.add_subcommand("crosscheck-calcul", "compare with the path category nerve");
  input(calcul);
  calcul->add_option("--max-dim", cfg.max_dim, "highest corner degree");
  format(calcul);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  if (cfg.max_dim < 0) cfg.max_dim = cmd == "homology" ? 2 : std::min(3, cap);
  return run(cmd, cfg);
}
