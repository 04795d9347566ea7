#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "selberg/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ds: Dirichlet-Selberg domains, Busemann-Selberg functions and example checks"};
  app.require_subcommand(1);

  ds::Common common;
  app.add_option("--config", common.config, "JSON file with tolerances {angle, metric, spectral}");
  app.add_option("--angle-tol", common.angle_tol, "Override the angle tolerance");
  app.add_option("--metric-tol", common.metric_tol, "Override the metric tolerance");
  app.add_option("--spectral-tol", common.spectral_tol, "Override the spectral tolerance");

  auto with_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("-i,--input", common.input, what + " (JSON file, '-' for stdin)");
    return sub;
  };
  const std::string gens = "Generator set {center, generators}; defaults to the built-in example";

  auto* build = with_input(app.add_subcommand("build", "Build the Dirichlet-Selberg domain"), gens);
  auto* check = with_input(app.add_subcommand("check-exact", "Check that facet pairings are exact"), gens);
  auto* cyc = with_input(app.add_subcommand("cycles", "List ridge cycles"), gens);

  std::size_t samples = 10;
  auto* angle = with_input(app.add_subcommand("angle-sum", "Angle sums of every ridge cycle"), gens);
  angle->add_option("--samples", samples, "Sample points per cycle")->check(CLI::PositiveNumber);

  int fp_dim = 1;
  std::size_t max_length = 6;
  auto* fixed = with_input(app.add_subcommand("fixed-point", "Fixed points of Satake-face cycles"), gens);
  fixed->add_option("--dim", fp_dim, "Dimension of the Satake faces to treat");
  fixed->add_option("--max-length", max_length, "Longest cycle word searched");

  int trials = 50;
  std::uint64_t seed = 1;
  auto* inv = with_input(app.add_subcommand("invariance", "Busemann invariance on Satake-edge cycles"), gens);
  inv->add_option("--trials", trials, "Random samples per edge");
  inv->add_option("--seed", seed, "Random seed");

  int depth = 2;
  std::string targets;
  auto* expr = with_input(app.add_subcommand("express", "Express generators as pairing words"), gens);
  expr->add_option("--depth", depth, "Maximum word length")->check(CLI::PositiveNumber);
  expr->add_option("--targets", targets, "JSON object {label: matrix}; defaults to the input generators");

  auto* pos = with_input(app.add_subcommand("poset", "Face poset and Satake faces"), gens);

  auto* beval = with_input(app.add_subcommand("busemann-eval", "Evaluate a Busemann-Selberg function"),
                           "{kind, alpha, component?, reference, point}");
  beval->get_option("--input")->required();
  auto* asym = with_input(app.add_subcommand("asymptotic", "Limit along beta + eps Y"), "{spec, beta, Y}");
  asym->get_option("--input")->required();

  bool json = false;
  auto* verify = app.add_subcommand("verify-example", "Run every check on the built-in example");
  verify->add_flag("--json", json, "Machine-readable report");

  std::string suite = "all";
  std::size_t pt_trials = 1000;
  std::uint64_t pt_seed = 1;
  auto* prop = app.add_subcommand("proptest", "Seeded randomized property sweeps");
  prop->add_option("--suite", suite, "lipschitz|contraction|interlacing|asymptotic|decomposition|all");
  prop->add_option("--trials", pt_trials, "Trials")->check(CLI::PositiveNumber);
  prop->add_option("--seed", pt_seed, "Random seed");

  std::vector<double> levels = {0.5, 1, 2};
  double lo = -3;
  double hi = 3;
  std::size_t steps = 101;
  std::string output;
  auto* sl = with_input(app.add_subcommand("slice", "CSV of a Busemann-Selberg function on the diagonal plane"),
                        "Busemann spec; defaults to alpha = e1 e1^T, X = I");
  sl->add_option("--levels", levels, "Contour levels recorded in the header");
  sl->add_option("--min", lo, "Lower bound of s and t");
  sl->add_option("--max", hi, "Upper bound of s and t");
  sl->add_option("--steps", steps, "Grid points per axis");
  sl->add_option("-o,--output", output, "Output file; stdout by default");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return ds::build(common);
    if (*check) return ds::check_exact(common);
    if (*cyc) return ds::cycles(common);
    if (*angle) return ds::angle_sum(common, samples);
    if (*fixed) return ds::fixed_point(common, fp_dim, max_length);
    if (*inv) return ds::invariance(common, trials, seed);
    if (*expr) return ds::express(common, depth, targets);
    if (*pos) return ds::poset(common);
    if (*beval) return ds::busemann_eval(common);
    if (*asym) return ds::asymptotic(common);
    if (*verify) return ds::verify_example(common, json);
    if (*prop) return ds::proptest(suite, pt_trials, pt_seed);
    if (*sl) return ds::slice(common, levels, lo, hi, steps, output);
  } catch (const selberg::Error& e) {
    std::cerr << "ds: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ds: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
