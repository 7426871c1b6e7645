#include "mrqa/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mrqa/errors.hpp"

namespace mrqa {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
    --e;
  }
  return s.substr(b, e - b);
}

double parse_double(const std::string& field, const std::string& path,
                    std::size_t line_no) {
  const std::string s = strip(field);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw io_error(path + ":" + std::to_string(line_no) +
                   ": malformed numeric field '" + s + "'");
  }
  if (!std::isfinite(v)) {
    throw io_error(path + ":" + std::to_string(line_no) +
                   ": non-finite value rejected");
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline mangling
  if (!out) {
    throw io_error("cannot open for writing: " + path);
  }
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    throw io_error("write failed: " + path);
  }
}

}  // namespace

IrregularSeries read_series_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open for reading: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw io_error(path + ": empty file");
  }
  {
    std::string header = strip(line);
    std::string lowered(header);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    // Drop a UTF-8 BOM if present.
    if (lowered.rfind("\xef\xbb\xbf", 0) == 0) lowered = lowered.substr(3);
    std::string compact;
    for (char c : lowered) {
      if (c != ' ' && c != '\t') compact.push_back(c);
    }
    if (compact != "time,value") {
      throw io_error(path + ": expected header 'time,value'");
    }
  }
  IrregularSeries series;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = strip(line);
    if (row.empty()) continue;
    const std::size_t comma = row.find(',');
    if (comma == std::string::npos) {
      throw io_error(path + ":" + std::to_string(line_no) +
                     ": expected 'time,value' row");
    }
    series.times.push_back(parse_double(row.substr(0, comma), path, line_no));
    series.values.push_back(
        parse_double(row.substr(comma + 1), path, line_no));
  }
  if (series.size() < 2) {
    throw io_error(path + ": fewer than 2 samples");
  }
  // Rows may arrive unsorted; sort by time, then enforce strict monotony.
  std::vector<std::size_t> order(series.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return series.times[a] < series.times[b];
  });
  IrregularSeries sorted;
  sorted.times.reserve(series.size());
  sorted.values.reserve(series.size());
  for (std::size_t idx : order) {
    sorted.times.push_back(series.times[idx]);
    sorted.values.push_back(series.values[idx]);
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted.times[i] > sorted.times[i - 1])) {
      throw invalid_input_error(path + ": duplicate timestamp " +
                                format_double(sorted.times[i]));
    }
  }
  return sorted;
}

void write_series_csv(const std::string& path, const IrregularSeries& series) {
  std::ofstream out = open_out(path);
  out << "time,value\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_double(series.times[i]) << ','
        << format_double(series.values[i]) << '\n';
  }
  finish(out, path);
}

void write_distance_matrix_csv(const std::string& path,
                               const DistanceMatrix& d) {
  std::ofstream out = open_out(path);
  for (std::size_t j = 0; j < d.width; ++j) {
    if (j > 0) out << ',';
    out << (j < d.start_times.size() ? format_double(d.start_times[j])
                                     : std::to_string(j));
  }
  out << '\n';
  for (std::size_t i = 0; i < d.width; ++i) {
    for (std::size_t j = 0; j < d.width; ++j) {
      if (j > 0) out << ',';
      out << format_double(d.at(i, j));
    }
    out << '\n';
  }
  finish(out, path);
}

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::ifstream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw io_error(path + ": truncated MEDM file");
  }
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ofstream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64_le(std::ifstream& in, const std::string& path) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) {
    throw io_error(path + ": truncated MEDM file");
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  }
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

}  // namespace

void write_distance_matrix_medm(const std::string& path,
                                const DistanceMatrix& d) {
  std::ofstream out = open_out(path);
  out.write("MEDM", 4);
  put_u32(out, 1u);  // version
  put_u32(out, static_cast<std::uint32_t>(d.width));
  for (std::size_t i = 0; i < d.width; ++i) {
    for (std::size_t j = i + 1; j < d.width; ++j) {
      put_f64_le(out, d.at(i, j));
    }
  }
  finish(out, path);
}

DistanceMatrix read_distance_matrix_medm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open for reading: " + path);
  }
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "MEDM", 4) != 0) {
    throw io_error(path + ": not a MEDM file");
  }
  const std::uint32_t version = get_u32(in, path);
  if (version != 1u) {
    throw io_error(path + ": unsupported MEDM version " +
                   std::to_string(version));
  }
  const std::uint32_t width = get_u32(in, path);
  if (width < 2) {
    throw io_error(path + ": MEDM width must be >= 2");
  }
  DistanceMatrix d;
  d.width = width;
  d.data.assign(static_cast<std::size_t>(width) * width, 0.0);
  for (std::size_t i = 0; i < d.width; ++i) {
    for (std::size_t j = i + 1; j < d.width; ++j) {
      const double v = get_f64_le(in, path);
      d.at(i, j) = v;
      d.at(j, i) = v;
    }
  }
  return d;
}

void write_det_csv(const std::string& path, const std::vector<DetPoint>& det) {
  std::ofstream out = open_out(path);
  out << "window_center,det\n";
  for (const DetPoint& p : det) {
    out << format_double(p.window_center) << ',';
    if (p.det.has_value()) out << format_double(*p.det);
    out << '\n';
  }
  finish(out, path);
}

void write_corrected_csv(const std::string& path,
                         const EnsembleDetResult& result) {
  std::ofstream out = open_out(path);
  out << "window_center,det_real,det_q95,ratio\n";
  auto cell = [](const std::optional<double>& v) {
    return v.has_value() ? format_double(*v) : std::string("nan");
  };
  for (std::size_t i = 0; i < result.window_center.size(); ++i) {
    out << format_double(result.window_center[i]) << ','
        << cell(result.det_real[i]) << ',' << cell(result.det_q95[i]) << ','
        << cell(result.ratio[i]) << '\n';
  }
  finish(out, path);
}

void write_rp_sparse_csv(const std::string& path, const RecurrencePlot& rp) {
  std::ofstream out = open_out(path);
  out << "i,j\n";
  for (std::size_t i = 0; i < rp.width; ++i) {
    for (std::size_t j = i + 1; j < rp.width; ++j) {
      if (rp.at(i, j)) {
        out << i << ',' << j << '\n';
      }
    }
  }
  finish(out, path);
}

void write_cost_matrix_csv(const std::string& path, const CostMatrixResult& m) {
  std::ofstream out = open_out(path);
  out << m.mode;
  for (double c : m.col_values) out << ',' << format_double(c);
  out << '\n';
  for (std::size_t r = 0; r < m.row_values.size(); ++r) {
    out << format_double(m.row_values[r]);
    for (std::size_t c = 0; c < m.col_values.size(); ++c) {
      out << ',';
      if (m.at(r, c).has_value()) out << format_double(*m.at(r, c));
    }
    out << '\n';
  }
  finish(out, path);
}

void write_lambda_s_curve_csv(const std::string& path,
                              const LambdaSResult& result) {
  std::ofstream out = open_out(path);
  out << "lambda_s,ks_statistic\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    out << format_double(result.grid[i]) << ','
        << format_double(result.ks[i]) << '\n';
  }
  finish(out, path);
}

}  // namespace mrqa
