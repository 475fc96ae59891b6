#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hne::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct GenerateArgs {
  std::string dataset;
  long n = -1;  // -1: dataset default
  long bridge = 9;
  std::uint64_t seed = 0;
  std::string out;
};

struct EmbedArgs {
  std::string input;
  std::string method = "lle";
  long k = 5;
  long d = 2;
  double gamma = 1.0;
  double sigma_reg = 1e-3;
  int rotations = 2;
  std::uint64_t seed = 0;
  std::string out;
  bool emit_edges = false;
  std::string dump_g;
  bool raw_pixels = false;
};

struct EvaluateArgs {
  std::string input;
  std::vector<std::string> methods{"lle", "ihne", "rhne", "bhne"};
  std::vector<long> k_list{4, 6, 8, 10, 12};
  std::string out;
  std::string intrinsic;
  long d = 2;
  long k_eval = 10;
  double gamma = 1.0;
  double sigma_reg = 1e-3;
  int rotations = 2;
  bool raw_pixels = false;
};

int run_generate(const GenerateArgs& args);
int run_embed(const EmbedArgs& args);
int run_evaluate(const EvaluateArgs& args);

/// "dir/name.csv" -> "dir/name.<suffix>"
std::string sidecar_path(const std::string& out, const std::string& suffix);

}  // namespace hne::cli
