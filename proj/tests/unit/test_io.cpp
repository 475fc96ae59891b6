#include "hne/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <random>
#include <string>

using namespace hne;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hne_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_pgm(const fs::path& path, int w, int h, unsigned char fill) {
  std::ofstream out(path, std::ios::binary);
  out << "P5\n# test\n" << w << ' ' << h << "\n255\n";
  for (int p = 0; p < w * h; ++p) out.put(static_cast<char>(fill + p % 7));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("CSV reading") {
  const fs::path dir = scratch("csv");
  {
    std::ofstream(dir / "a.csv") << "0,0\n1,0\n0,1\n";
  }
  const auto m = read_csv(dir / "a.csv");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m(1, 0) == 1.0);
  {
    std::ofstream(dir / "ragged.csv") << "0,0\n1\n";
    std::ofstream(dir / "junk.csv") << "0,x\n";
  }
  CHECK(code_of([&] { read_csv(dir / "ragged.csv"); }) == ErrorCode::InconsistentDimensions);
  CHECK(code_of([&] { read_csv(dir / "junk.csv"); }) == ErrorCode::IoError);
  CHECK(code_of([&] { read_csv(dir / "missing.csv"); }) == ErrorCode::IoError);
}

TEST_CASE("CSV round trip is exact") {
  const fs::path dir = scratch("roundtrip");
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(7, 3);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng) * 1e-3;
  write_csv(dir / "m.csv", m);
  CHECK(Eigen::MatrixXd(read_csv(dir / "m.csv")) == m);
}

TEST_CASE("image directory") {
  const fs::path dir = scratch("images");
  write_pgm(dir / "b.pgm", 4, 3, 20);
  write_pgm(dir / "a.pgm", 4, 3, 10);
  write_pgm(dir / "c.pgm", 4, 3, 30);
  std::ofstream(dir / "notes.txt") << "ignored\n";
  const DataMatrix data = load_matrix(dir);
  CHECK(data.n() == 3);
  CHECK(data.dim() == 12);
  CHECK(data.points()(0, 0) == doctest::Approx(10.0 / 255.0));
  CHECK(data.points()(2, 1) == doctest::Approx(31.0 / 255.0));
  CHECK(read_image_dir(dir, 1.0).points()(1, 0) == 20.0);

  write_pgm(dir / "d.pgm", 5, 3, 0);
  CHECK(code_of([&] { read_image_dir(dir); }) == ErrorCode::InconsistentDimensions);
  CHECK(code_of([&] { read_image_dir(scratch("empty")); }) == ErrorCode::IoError);
}

TEST_CASE("ASCII and color netpbm") {
  const fs::path dir = scratch("ascii");
  std::ofstream(dir / "x.ppm") << "P3\n2 1\n15\n1 2 3  4 5 6\n";
  const Image img = read_netpbm(dir / "x.ppm");
  CHECK(img.width == 2);
  CHECK(img.height == 1);
  CHECK(img.channels == 3);
  CHECK(img.samples == std::vector<double>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("a full face stack") {
  const fs::path dir = scratch("faces");
  for (int i = 0; i < 698; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "img%04d.pgm", i);
    write_pgm(dir / name, 64, 64, static_cast<unsigned char>(i % 200));
  }
  const DataMatrix data = read_image_dir(dir);
  CHECK(data.n() == 698);
  CHECK(data.dim() == 4096);
  fs::remove_all(dir);
}
