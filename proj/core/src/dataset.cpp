#include "mixtran/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mixtran/rng.hpp"

namespace mixtran {

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& file, std::size_t line,
                          const std::string& what) {
  throw std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

double parse_double(const std::string& field, const std::filesystem::path& file,
                    std::size_t line) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail_at(file, line, "cannot parse number '" + field + "'");
  return value;
}

/// Reads all lines, strips a trailing CR from each.
std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string padded_id(char prefix, std::size_t index, std::size_t width) {
  const std::string digits = std::to_string(index);
  std::string out(1, prefix);
  if (digits.size() < width) out.append(width - digits.size(), '0');
  out += digits;
  return out;
}

std::size_t digits_for(std::size_t max_index) {
  std::size_t width = 1;
  while (max_index >= 10) {
    max_index /= 10;
    ++width;
  }
  return width;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& bases_file,
                     const std::filesystem::path& lanes_file, MetricMode mode,
                     const std::filesystem::path& matrix_file, bool enforce_matrix_axioms) {
  Dataset ds;

  // bases
  const std::vector<std::string> base_lines = read_lines(bases_file);
  if (base_lines.empty()) fail_at(bases_file, 1, "missing header");
  const std::string expected_header =
      mode == MetricMode::PlanarEuclidean      ? "base_id,x,y"
      : mode == MetricMode::SphericalHaversine ? "base_id,lat,lon"
                                               : "base_id";
  if (base_lines.front() != expected_header)
    fail_at(bases_file, 1,
            "expected header '" + expected_header + "', got '" + base_lines.front() + "'");

  std::unordered_map<std::string, std::uint32_t> base_index;
  for (std::size_t i = 1; i < base_lines.size(); ++i) {
    if (base_lines[i].empty()) continue;
    const auto fields = split_csv(base_lines[i]);
    const std::size_t expected = mode == MetricMode::ExplicitMatrix ? 1 : 3;
    if (fields.size() != expected)
      fail_at(bases_file, i + 1, "expected " + std::to_string(expected) + " fields, got " +
                                     std::to_string(fields.size()));
    Base b;
    b.id = fields[0];
    if (b.id.empty()) fail_at(bases_file, i + 1, "empty base id");
    if (mode != MetricMode::ExplicitMatrix) {
      b.x = parse_double(fields[1], bases_file, i + 1);
      b.y = parse_double(fields[2], bases_file, i + 1);
    }
    if (!base_index.emplace(b.id, static_cast<std::uint32_t>(ds.bases.size())).second)
      fail_at(bases_file, i + 1, "duplicate base id '" + b.id + "'");
    ds.bases.push_back(std::move(b));
  }

  // metric
  switch (mode) {
    case MetricMode::PlanarEuclidean:
      ds.metric = MetricProvider::planar(ds.bases);
      break;
    case MetricMode::SphericalHaversine:
      ds.metric = MetricProvider::spherical(ds.bases);
      break;
    case MetricMode::ExplicitMatrix: {
      if (matrix_file.empty())
        throw std::runtime_error("explicit-matrix datasets need a matrix file");
      const std::vector<std::string> rows = read_lines(matrix_file);
      const std::size_t n = ds.bases.size();
      std::vector<double> flat;
      flat.reserve(n * n);
      std::size_t parsed_rows = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        const auto fields = split_csv(rows[i]);
        if (fields.size() != n)
          fail_at(matrix_file, i + 1, "expected " + std::to_string(n) + " columns, got " +
                                          std::to_string(fields.size()));
        for (const std::string& f : fields) flat.push_back(parse_double(f, matrix_file, i + 1));
        ++parsed_rows;
      }
      if (parsed_rows != n)
        throw std::runtime_error(matrix_file.string() + ": expected " + std::to_string(n) +
                                 " rows, got " + std::to_string(parsed_rows));
      ds.metric = MetricProvider::matrix(std::move(flat), n, enforce_matrix_axioms);
      break;
    }
  }

  // lanes; distances are recomputed so the cache and the metric can never disagree
  const std::vector<std::string> lane_lines = read_lines(lanes_file);
  if (lane_lines.empty()) fail_at(lanes_file, 1, "missing header");
  {
    const auto header = split_csv(lane_lines.front());
    if (header.size() < 3 || header[0] != "lane_id" || header[1] != "origin_base_id" ||
        header[2] != "dest_base_id")
      fail_at(lanes_file, 1, "expected header 'lane_id,origin_base_id,dest_base_id'");
    if (header.size() > 3)
      std::cerr << lanes_file.string() << ": ignoring extra column(s) after dest_base_id"
                << " (lane distances are always recomputed from the metric)\n";
  }
  std::unordered_map<std::string, std::uint32_t> lane_index;
  for (std::size_t i = 1; i < lane_lines.size(); ++i) {
    if (lane_lines[i].empty()) continue;
    const auto fields = split_csv(lane_lines[i]);
    if (fields.size() < 3)
      fail_at(lanes_file, i + 1, "expected at least 3 fields, got " +
                                     std::to_string(fields.size()));
    Lane lane;
    lane.id = fields[0];
    if (lane.id.empty()) fail_at(lanes_file, i + 1, "empty lane id");
    const auto origin = base_index.find(fields[1]);
    if (origin == base_index.end())
      fail_at(lanes_file, i + 1, "unknown origin base '" + fields[1] + "'");
    const auto dest = base_index.find(fields[2]);
    if (dest == base_index.end())
      fail_at(lanes_file, i + 1, "unknown destination base '" + fields[2] + "'");
    lane.start = origin->second;
    lane.end = dest->second;
    lane.dist = ds.metric(lane.start, lane.end);
    if (lane.start == lane.end || lane.dist == 0.0)
      fail_at(lanes_file, i + 1, "zero-length lane '" + lane.id + "'");
    if (!lane_index.emplace(lane.id, static_cast<std::uint32_t>(ds.lanes.size())).second)
      fail_at(lanes_file, i + 1, "duplicate lane id '" + lane.id + "'");
    ds.lanes.push_back(std::move(lane));
  }

  return ds;
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& bases_file,
                   const std::filesystem::path& lanes_file,
                   const std::filesystem::path& matrix_file) {
  const MetricMode mode = dataset.metric.mode();
  {
    std::ofstream out(bases_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + bases_file.string());
    if (mode == MetricMode::PlanarEuclidean)
      out << "base_id,x,y\n";
    else if (mode == MetricMode::SphericalHaversine)
      out << "base_id,lat,lon\n";
    else
      out << "base_id\n";
    for (const Base& b : dataset.bases) {
      if (mode == MetricMode::ExplicitMatrix)
        out << b.id << "\n";
      else
        out << b.id << "," << format_double(b.x) << "," << format_double(b.y) << "\n";
    }
  }
  {
    std::ofstream out(lanes_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + lanes_file.string());
    out << "lane_id,origin_base_id,dest_base_id\n";
    for (const Lane& lane : dataset.lanes)
      out << lane.id << "," << dataset.bases[lane.start].id << ","
          << dataset.bases[lane.end].id << "\n";
  }
  if (mode == MetricMode::ExplicitMatrix) {
    if (matrix_file.empty())
      throw std::runtime_error("explicit-matrix datasets need a matrix file to write");
    std::ofstream out(matrix_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + matrix_file.string());
    const std::size_t n = dataset.metric.base_count();
    const std::span<const double> m = dataset.metric.matrix_data();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j) out << ",";
        out << format_double(m[i * n + j]);
      }
      out << "\n";
    }
  }
}

Dataset generate_synthetic(std::size_t n_bases, std::size_t n_lanes, std::uint64_t seed,
                           double width_km, double height_km) {
  if (n_bases < 2) throw std::invalid_argument("generate_synthetic: need at least 2 bases");
  if (n_lanes < 1) throw std::invalid_argument("generate_synthetic: need at least 1 lane");
  if (!(width_km > 0.0) || !(height_km > 0.0))
    throw std::invalid_argument("generate_synthetic: region must have positive extent");

  std::mt19937_64 gen(seed);
  Dataset ds;
  ds.bases.reserve(n_bases);
  const std::size_t bw = digits_for(n_bases - 1);
  for (std::size_t i = 0; i < n_bases; ++i) {
    Base b;
    b.id = padded_id('B', i, bw);
    b.x = uniform_unit(gen) * width_km;
    b.y = uniform_unit(gen) * height_km;
    ds.bases.push_back(std::move(b));
  }
  ds.metric = MetricProvider::planar(ds.bases);

  ds.lanes.reserve(n_lanes);
  const std::size_t lw = digits_for(n_lanes - 1);
  for (std::size_t i = 0; i < n_lanes; ++i) {
    Lane lane;
    lane.id = padded_id('L', i, lw);
    for (;;) {
      lane.start = static_cast<std::uint32_t>(uniform_below(gen, n_bases));
      lane.end = static_cast<std::uint32_t>(uniform_below(gen, n_bases));
      if (lane.start == lane.end) continue;
      lane.dist = ds.metric(lane.start, lane.end);
      if (lane.dist > 0.0) break;
    }
    ds.lanes.push_back(std::move(lane));
  }
  return ds;
}

std::string MetricViolation::describe() const {
  char buf[160];
  switch (kind) {
    case Kind::Negative:
      std::snprintf(buf, sizeof(buf), "negative entry d(%u,%u) = %g", a, b, lhs);
      break;
    case Kind::NonzeroDiagonal:
      std::snprintf(buf, sizeof(buf), "nonzero diagonal d(%u,%u) = %g", a, a, lhs);
      break;
    case Kind::Asymmetry:
      std::snprintf(buf, sizeof(buf), "asymmetry d(%u,%u) = %g vs d(%u,%u) = %g", a, b, lhs, b,
                    a, rhs);
      break;
    case Kind::Triangle:
      std::snprintf(buf, sizeof(buf),
                    "triangle violation d(%u,%u) = %g > d(%u,%u) + d(%u,%u) = %g", a, c, lhs, a,
                    b, b, c, rhs);
      break;
  }
  return buf;
}

std::vector<MetricViolation> validate_metric(std::span<const double> matrix,
                                             std::size_t base_count,
                                             std::size_t sample_budget) {
  if (matrix.size() != base_count * base_count)
    throw std::invalid_argument("validate_metric: matrix is not base_count x base_count");

  std::vector<MetricViolation> out;
  const auto at = [&](std::size_t i, std::size_t j) { return matrix[i * base_count + j]; };

  for (std::size_t i = 0; i < base_count; ++i) {
    if (at(i, i) != 0.0)
      out.push_back({MetricViolation::Kind::NonzeroDiagonal, static_cast<std::uint32_t>(i), 0,
                     0, at(i, i), 0.0});
    for (std::size_t j = 0; j < base_count; ++j) {
      if (at(i, j) < 0.0)
        out.push_back({MetricViolation::Kind::Negative, static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j), 0, at(i, j), 0.0});
      if (j > i && at(i, j) != at(j, i))
        out.push_back({MetricViolation::Kind::Asymmetry, static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j), 0, at(i, j), at(j, i)});
    }
  }

  const auto check_triangle = [&](std::size_t a, std::size_t b, std::size_t c) {
    const double lhs = at(a, c);
    const double rhs = at(a, b) + at(b, c);
    if (lhs > rhs)
      out.push_back({MetricViolation::Kind::Triangle, static_cast<std::uint32_t>(a),
                     static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c), lhs, rhs});
  };

  if (base_count >= 3) {
    const std::size_t exhaustive = base_count * base_count * base_count;
    if (exhaustive <= sample_budget) {
      for (std::size_t a = 0; a < base_count; ++a)
        for (std::size_t b = 0; b < base_count; ++b)
          for (std::size_t c = 0; c < base_count; ++c) {
            if (a == b || b == c || a == c) continue;
            check_triangle(a, b, c);
          }
    } else {
      std::mt19937_64 gen(0x9e3779b97f4a7c15ull);  // fixed seed, reproducible audit
      for (std::size_t s = 0; s < sample_budget; ++s) {
        const std::size_t a = uniform_below(gen, base_count);
        const std::size_t b = uniform_below(gen, base_count);
        const std::size_t c = uniform_below(gen, base_count);
        if (a == b || b == c || a == c) continue;
        check_triangle(a, b, c);
      }
    }
  }
  return out;
}

}  // namespace mixtran
