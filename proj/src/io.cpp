#include "hne/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace hne {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, const fs::path& path, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::IoError, path.string() + ":" + std::to_string(line) +
                                        ": cannot parse number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

DataMatrix::Matrix read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  std::vector<double> values;
  Index cols = -1;
  Index rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    Index count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      values.push_back(parse_double(text.substr(start, comma - start), path, line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols >= 0 && count != cols) {
      throw Error(ErrorCode::InconsistentDimensions,
                  path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(cols) + " columns, found " + std::to_string(count));
    }
    cols = count;
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::IoError, path.string() + " contains no rows");
  return Eigen::Map<DataMatrix::Matrix>(values.data(), rows, cols);
}

void write_csv(const fs::path& path, const Eigen::Ref<const Eigen::MatrixXd>& rows) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.precision(17);
  for (Index r = 0; r < rows.rows(); ++r) {
    for (Index c = 0; c < rows.cols(); ++c) {
      if (c > 0) out << ',';
      out << rows(r, c);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

namespace {

// Reads the next whitespace-delimited header token, skipping '#' comments.
long read_header_int(std::istream& in, const fs::path& path) {
  while (true) {
    in >> std::ws;
    if (in.peek() == '#') {
      std::string comment;
      std::getline(in, comment);
      continue;
    }
    long v = 0;
    if (!(in >> v) || v <= 0) throw Error(ErrorCode::IoError, "bad netpbm header in " + path.string());
    return v;
  }
}

}  // namespace

Image read_netpbm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string magic(2, '\0');
  in.read(magic.data(), 2);
  if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '3' && magic[1] != '5' && magic[1] != '6')) {
    throw Error(ErrorCode::IoError, path.string() + " is not a P2/P3/P5/P6 netpbm image");
  }
  Image img;
  img.channels = (magic[1] == '3' || magic[1] == '6') ? 3 : 1;
  img.width = read_header_int(in, path);
  img.height = read_header_int(in, path);
  const long maxval = read_header_int(in, path);
  if (maxval > 65535) throw Error(ErrorCode::IoError, "bad maxval in " + path.string());

  const std::size_t count = static_cast<std::size_t>(img.width * img.height * img.channels);
  img.samples.resize(count);
  const bool binary = magic[1] == '5' || magic[1] == '6';
  if (binary) {
    in.get();  // single whitespace byte before the raster
    const int bytes = maxval < 256 ? 1 : 2;
    std::vector<unsigned char> raw(count * static_cast<std::size_t>(bytes));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
      throw Error(ErrorCode::IoError, "truncated raster in " + path.string());
    }
    for (std::size_t s = 0; s < count; ++s) {
      img.samples[s] = bytes == 1 ? raw[s] : static_cast<double>((raw[2 * s] << 8) | raw[2 * s + 1]);
    }
  } else {
    for (std::size_t s = 0; s < count; ++s) {
      long v = 0;
      if (!(in >> v)) throw Error(ErrorCode::IoError, "truncated raster in " + path.string());
      img.samples[s] = static_cast<double>(v);
    }
  }
  return img;
}

DataMatrix read_image_dir(const fs::path& dir, double pixel_scale) {
  if (!(pixel_scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "pixel_scale must be > 0");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::IoError, dir.string() + " is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") files.push_back(entry.path());
  }
  if (files.empty()) throw Error(ErrorCode::IoError, "no .pgm/.ppm/.pnm images in " + dir.string());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  DataMatrix::Matrix rows;
  Image first;
  for (std::size_t r = 0; r < files.size(); ++r) {
    Image img = read_netpbm(files[r]);
    if (r == 0) {
      first = img;
      rows.resize(static_cast<Index>(files.size()), static_cast<Index>(img.samples.size()));
    } else if (img.width != first.width || img.height != first.height || img.channels != first.channels) {
      throw Error(ErrorCode::InconsistentDimensions,
                  files[r].filename().string() + " is " + std::to_string(img.width) + "x" +
                      std::to_string(img.height) + "x" + std::to_string(img.channels) + ", expected " +
                      std::to_string(first.width) + "x" + std::to_string(first.height) + "x" +
                      std::to_string(first.channels));
    }
    for (std::size_t s = 0; s < img.samples.size(); ++s) {
      rows(static_cast<Index>(r), static_cast<Index>(s)) = img.samples[s] / pixel_scale;
    }
  }
  return DataMatrix(std::move(rows));
}

DataMatrix load_matrix(const fs::path& path, MatrixFormat format, double pixel_scale) {
  if (format == MatrixFormat::ImageDir) return read_image_dir(path, pixel_scale);
  return DataMatrix(read_csv(path));
}

DataMatrix load_matrix(const fs::path& path, double pixel_scale) {
  std::error_code ec;
  return load_matrix(path, fs::is_directory(path, ec) ? MatrixFormat::ImageDir : MatrixFormat::Csv,
                     pixel_scale);
}

}  // namespace hne
