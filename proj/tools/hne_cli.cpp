#include "commands.hpp"

#include "hne/core.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hne::cli;
  const auto positive = CLI::Range(1L, 1000000000L);

  CLI::App app{"Locally linear and hierarchic neighbors embedding"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset as CSV plus a JSON sidecar");
  generate->add_option("--dataset", gen.dataset, "Dataset name")
      ->required()
      ->check(CLI::IsMember({"swiss-roll", "swiss-hole", "3d-cluster", "2-surfaces"}));
  generate->add_option("--n", gen.n,
                       "Point count (points per cluster for 3d-cluster, total for 2-surfaces)")
      ->check(positive);
  generate->add_option("--bridge", gen.bridge, "Bridge points per connection")->check(positive);
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out", gen.out, "Output CSV path")->required();

  EmbedArgs emb;
  auto* embed = app.add_subcommand("embed", "Embed a dataset and write coordinates plus diagnostics");
  embed->add_option("--input", emb.input, "CSV file or directory of netpbm images")->required();
  embed->add_option("--method", emb.method, "Weight scheme")
      ->check(CLI::IsMember({"lle", "ihne", "rhne", "bhne"}));
  embed->add_option("--k", emb.k, "Neighborhood size")->check(positive);
  embed->add_option("--d", emb.d, "Target dimensionality")->check(positive);
  embed->add_option("--gamma", emb.gamma, "Weight of the inner-layer term")->check(CLI::Range(0.0, 1.0));
  embed->add_option("--sigma-reg", emb.sigma_reg, "Relative regularization")->check(CLI::NonNegativeNumber);
  embed->add_option("--rotations", emb.rotations, "BHNE rotations")->check(positive);
  embed->add_option("--seed", emb.seed, "Recorded for provenance");
  embed->add_option("--out", emb.out, "Output CSV path (n rows, d columns)")->required();
  embed->add_flag("--emit-edges", emb.emit_edges, "Also write the neighbor edge list");
  embed->add_option("--dump-g", emb.dump_g, "Write the alignment matrix as row col value lines");
  embed->add_flag("--raw-pixels", emb.raw_pixels, "Do not divide image intensities by 255");

  EvaluateArgs eva;
  auto* evaluate = app.add_subcommand("evaluate", "Average reconstruction error table over methods and k");
  evaluate->add_option("--input", eva.input, "CSV file or directory of netpbm images")->required();
  evaluate->add_option("--methods", eva.methods, "Comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember({"lle", "ihne", "rhne", "bhne"}));
  evaluate->add_option("--k-list", eva.k_list, "Comma-separated neighborhood sizes")
      ->delimiter(',')
      ->check(positive);
  evaluate->add_option("--out", eva.out, "Report JSON path")->required();
  evaluate->add_option("--intrinsic", eva.intrinsic, "CSV of ground-truth coordinates, adds quality columns");
  evaluate->add_option("--d", eva.d, "Embedding dimensionality for quality columns")->check(positive);
  evaluate->add_option("--k-eval", eva.k_eval, "Neighborhood size for quality scores")->check(positive);
  evaluate->add_option("--gamma", eva.gamma, "Weight of the inner-layer term")->check(CLI::Range(0.0, 1.0));
  evaluate->add_option("--sigma-reg", eva.sigma_reg, "Relative regularization")->check(CLI::NonNegativeNumber);
  evaluate->add_option("--rotations", eva.rotations, "BHNE rotations")->check(positive);
  evaluate->add_flag("--raw-pixels", eva.raw_pixels, "Do not divide image intensities by 255");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (embed->parsed()) return run_embed(emb);
    if (evaluate->parsed()) return run_evaluate(eva);
  } catch (const hne::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
