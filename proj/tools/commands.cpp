#include "commands.hpp"

#include "hne/alignment.hpp"
#include "hne/datasets.hpp"
#include "hne/hne_weights.hpp"
#include "hne/io.hpp"
#include "hne/metrics.hpp"
#include "hne/neighbors.hpp"
#include "hne/pipeline.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace hne::cli {

std::string sidecar_path(const std::string& out, const std::string& suffix) {
  fs::path p(out);
  p.replace_extension();
  return p.string() + "." + suffix;
}

namespace {

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << std::setw(2) << doc << '\n';
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json rows_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

double pixel_scale(bool raw) { return raw ? 1.0 : 255.0; }

}  // namespace

int run_generate(const GenerateArgs& args) {
  json meta{{"dataset", args.dataset}, {"seed", args.seed}, {"version", HNE_VERSION}};
  Eigen::MatrixXd points;

  if (args.dataset == "swiss-roll" || args.dataset == "swiss-hole") {
    const bool hole = args.dataset == "swiss-hole";
    const Index n = args.n > 0 ? args.n : 1000;
    SwissRoll sr = swiss_roll(n, args.seed, hole);
    points = sr.data.points();
    meta["generator"] = {{"n", n},
                         {"hole", hole},
                         {"t_range", {swiss::kTMin, swiss::kTMax}},
                         {"height", swiss::kHeight}};
    if (hole) {
      meta["generator"]["hole_rect"] = {{"t", {swiss::kHoleTMin, swiss::kHoleTMax}},
                                        {"h", {swiss::kHoleHMin, swiss::kHoleHMax}}};
    }
    meta["intrinsic_columns"] = {"t", "h"};
    meta["intrinsic"] = rows_json(sr.intrinsic);
  } else {
    LabeledData ld = [&] {
      if (args.dataset == "3d-cluster") {
        const Index per = args.n > 0 ? args.n : cluster3d::kDefaultPerCluster;
        return cluster_3d(per, args.bridge, args.seed);
      }
      const Index total = args.n > 0 ? args.n : surfaces::kDefaultTotal;
      return two_surfaces(total, args.bridge, args.seed);
    }();
    points = ld.data.points();
    meta["generator"] = {{"n_arg", args.n}, {"bridge", args.bridge}};
    meta["blob_points"] = ld.blob_points;
    meta["bridge_points"] = ld.bridge_points;
    meta["labels"] = ld.labels;
  }
  meta["rows"] = points.rows();
  meta["cols"] = points.cols();

  write_csv(args.out, points);
  write_json(sidecar_path(args.out, "meta.json"), meta);
  return kExitOk;
}

int run_embed(const EmbedArgs& args) {
  const DataMatrix data = load_matrix(args.input, pixel_scale(args.raw_pixels));

  EmbedConfig cfg;
  cfg.k = args.k;
  cfg.d = args.d;
  cfg.method = *parse_method(args.method);
  cfg.gamma = args.gamma;
  cfg.sigma_reg = args.sigma_reg;
  cfg.bhne_rotations = args.rotations;
  cfg.seed = args.seed;

  PipelineOptions options;
  options.keep_alignment = !args.dump_g.empty();
  const EmbedRun run = run_embedding(data, cfg, options);
  const EmbeddingResult& result = run.embedding;

  write_csv(args.out, result.Y.transpose());

  json meta{
      {"version", HNE_VERSION},
      {"input", args.input},
      {"n", data.n()},
      {"D", data.dim()},
      {"parameters",
       {{"method", args.method},
        {"k", cfg.k},
        {"d", cfg.d},
        {"gamma", cfg.gamma},
        {"sigma_reg", cfg.sigma_reg},
        {"rotations", cfg.bhne_rotations},
        {"seed", cfg.seed},
        {"pixel_scale", pixel_scale(args.raw_pixels)}}},
      {"eigenvalues", vector_json(result.eigenvalues)},
      {"null_eigenvalue", result.null_eigenvalue},
      {"null_vector_residual", run.null_vector_residual},
      {"degenerate_spectrum", result.degenerate_spectrum},
      {"residuals",
       {{"inner_mean", result.inner_residual.mean()},
        {"inner_max", result.inner_residual.maxCoeff()},
        {"hier_mean", result.hier_residual.mean()},
        {"hier_max", result.hier_residual.maxCoeff()}}},
      {"constraints",
       {{"inner_sum", run.constraints.inner_sum},
        {"outer_sum", run.constraints.outer_sum},
        {"joint_sum", run.constraints.joint_sum}}},
      {"warnings", result.warnings},
  };
  write_json(sidecar_path(args.out, "meta.json"), meta);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  if (args.emit_edges) {
    std::ofstream edges(sidecar_path(args.out, "edges.csv"));
    if (!edges) throw Error(ErrorCode::IoError, "cannot write edge list");
    const NeighborIndex& idx = run.index;
    for (Index i = 0; i < idx.n(); ++i) {
      for (Index l = 0; l < idx.k(); ++l) edges << i << ',' << idx.inner(i, l) << ",1\n";
      if (cfg.method == Method::Lle) continue;
      for (Index l = 0; l < idx.k(); ++l) {
        for (Index j = 0; j < idx.k(); ++j) edges << i << ',' << idx.outer(i, l, j) << ",2\n";
      }
    }
  }
  if (!args.dump_g.empty()) {
    std::ofstream dump(args.dump_g);
    if (!dump) throw Error(ErrorCode::IoError, "cannot write " + args.dump_g);
    write_coordinate_list(*run.alignment, dump);
  }
  return kExitOk;
}

int run_evaluate(const EvaluateArgs& args) {
  const DataMatrix data = load_matrix(args.input, pixel_scale(args.raw_pixels));
  Eigen::MatrixXd intrinsic;
  const bool with_quality = !args.intrinsic.empty();
  if (with_quality) {
    intrinsic = read_csv(args.intrinsic);
    if (intrinsic.rows() != data.n()) {
      throw Error(ErrorCode::DimensionMismatch, "intrinsic coordinates have " +
                                                    std::to_string(intrinsic.rows()) + " rows, data has " +
                                                    std::to_string(data.n()));
    }
  }

  json results = json::array();
  // method -> k -> column -> formatted cell
  std::map<std::string, std::map<long, std::map<std::string, std::string>>> cells;
  bool failed = false;
  const auto fmt = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
  };

  for (const auto& name : args.methods) {
    const Method method = *parse_method(name);
    for (long k : args.k_list) {
      json row{{"method", name}, {"k", k}};
      try {
        if (with_quality) {
          EmbedConfig cfg;
          cfg.k = k;
          cfg.d = args.d;
          cfg.method = method;
          cfg.gamma = args.gamma;
          cfg.sigma_reg = args.sigma_reg;
          cfg.bhne_rotations = args.rotations;
          const EmbedRun run = run_embedding(data, cfg);
          const double err = avg_reconstruction_error(data, run.index, run.weights);
          const EmbeddingQuality q = embedding_quality(run.embedding, intrinsic, args.k_eval);
          row["value"] = err;
          row["trustworthiness"] = q.trustworthiness;
          row["continuity"] = q.continuity;
          row["knn_preservation"] = q.knn_preservation;
          cells[name][k] = {{"error", fmt(err)}, {"trust", fmt(q.trustworthiness)},
                            {"cont", fmt(q.continuity)}, {"knn", fmt(q.knn_preservation)}};
        } else {
          if (k >= data.n()) throw Error(ErrorCode::KTooLarge, "k must be below n");
          const NeighborIndex idx = build_hierarchic(data, k);
          const WeightSet w = compute_weights(data, idx, method, args.sigma_reg, args.rotations);
          const double err = avg_reconstruction_error(data, idx, w);
          row["value"] = err;
          cells[name][k] = {{"error", fmt(err)}};
        }
      } catch (const Error& e) {
        failed = true;
        row["error"] = e.what();
        cells[name][k] = {{"error", "failed"}, {"trust", "failed"}, {"cont", "failed"}, {"knn", "failed"}};
        std::cerr << "error: " << name << " k=" << k << ": " << e.what() << '\n';
      }
      results.push_back(std::move(row));
    }
  }

  json report{{"version", HNE_VERSION},
              {"input", args.input},
              {"n", data.n()},
              {"D", data.dim()},
              {"metric", "average reconstruction error (mean per-point L2 residual)"},
              {"parameters",
               {{"gamma", args.gamma},
                {"sigma_reg", args.sigma_reg},
                {"rotations", args.rotations},
                {"pixel_scale", pixel_scale(args.raw_pixels)}}},
              {"results", results}};
  if (with_quality) {
    report["parameters"]["d"] = args.d;
    report["parameters"]["k_eval"] = args.k_eval;
  }
  write_json(args.out, report);

  std::vector<std::pair<std::string, std::string>> tables{{"error", "Average reconstruction error"}};
  if (with_quality) {
    tables.emplace_back("trust", "Trustworthiness");
    tables.emplace_back("cont", "Continuity");
    tables.emplace_back("knn", "k-NN preservation");
  }
  for (const auto& [column, title] : tables) {
    std::cout << title << " (n = " << data.n() << ")\n";
    std::cout << std::left << std::setw(8) << "method";
    for (long k : args.k_list) std::cout << std::right << std::setw(10) << ("k=" + std::to_string(k));
    std::cout << '\n';
    for (const auto& name : args.methods) {
      std::cout << std::left << std::setw(8) << name;
      for (long k : args.k_list) std::cout << std::right << std::setw(10) << cells[name][k][column];
      std::cout << '\n';
    }
    std::cout << '\n';
  }
  return failed ? kExitRuntime : kExitOk;
}

}  // namespace hne::cli
