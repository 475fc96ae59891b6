#pragma once

#include "hne/core.hpp"

#include <Eigen/Core>

#include <filesystem>

namespace hne {

enum class MatrixFormat { Csv, ImageDir };

/// Comma-separated numbers, one row per line, no header.
DataMatrix::Matrix read_csv(const std::filesystem::path& path);

void write_csv(const std::filesystem::path& path, const Eigen::Ref<const Eigen::MatrixXd>& rows);

struct Image {
  Index width = 0;
  Index height = 0;
  int channels = 0;  // 1 (gray) or 3 (RGB)
  std::vector<double> samples;  // row-major, channels interleaved, raw intensities
};

/// Binary or ASCII netpbm image (P2, P3, P5, P6).
Image read_netpbm(const std::filesystem::path& path);

/// Every .pgm/.ppm/.pnm file in `dir`, in lexicographic filename order,
/// flattened to one row. Intensities are divided by `pixel_scale`.
DataMatrix read_image_dir(const std::filesystem::path& dir, double pixel_scale = 255.0);

/// Directories load as image stacks, anything else as CSV.
DataMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format,
                       double pixel_scale = 255.0);
DataMatrix load_matrix(const std::filesystem::path& path, double pixel_scale = 255.0);

}  // namespace hne
