#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "mixtran/dataset.hpp"

using namespace mixtran;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mixtran_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path file(const char* name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const char* kNestedBases = "base_id,x,y\nA,0,0\nB,10,0\nC,1,0\nD,9,0\nE,2,0\nF,8,0\n";
const char* kNestedLanes = "lane_id,origin_base_id,dest_base_id\nL1,A,B\nL2,C,D\nL3,E,F\n";

}  // namespace

TEST_CASE("loading the nested-lane fixture files") {
  TempDir dir;
  const auto bases = dir.file("bases.csv", kNestedBases);
  const auto lanes = dir.file("lanes.csv", kNestedLanes);
  const Dataset ds = load_dataset(bases, lanes, MetricMode::PlanarEuclidean);
  CHECK(ds.bases.size() == 6);
  REQUIRE(ds.lanes.size() == 3);
  CHECK(ds.lanes[0].dist == 10.0);
  CHECK(ds.lanes[1].dist == 8.0);
  CHECK(ds.lanes[2].dist == 6.0);
}

TEST_CASE("load errors carry file and line context") {
  TempDir dir;
  const auto bases = dir.file("bases.csv", kNestedBases);

  SUBCASE("unknown base id") {
    const auto lanes =
        dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\nL1,A,B\nL2,ZZZ,D\n");
    CHECK_THROWS_WITH_AS(load_dataset(bases, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains("ZZZ"), std::runtime_error);
    try {
      load_dataset(bases, lanes, MetricMode::PlanarEuclidean);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
  }
  SUBCASE("zero-length lane") {
    const auto lanes = dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\nL1,A,A\n");
    CHECK_THROWS_WITH_AS(load_dataset(bases, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains("zero-length"), std::runtime_error);
  }
  SUBCASE("duplicate lane id") {
    const auto lanes =
        dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\nL1,A,B\nL1,C,D\n");
    CHECK_THROWS_WITH_AS(load_dataset(bases, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains("duplicate lane id"), std::runtime_error);
  }
  SUBCASE("duplicate base id") {
    const auto dup = dir.file("dup.csv", "base_id,x,y\nA,0,0\nA,1,1\n");
    const auto lanes = dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\n");
    CHECK_THROWS_WITH_AS(load_dataset(dup, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains("duplicate base id"), std::runtime_error);
  }
  SUBCASE("unparseable number") {
    const auto bad = dir.file("bad.csv", "base_id,x,y\nA,zero,0\n");
    const auto lanes = dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\n");
    CHECK_THROWS_WITH_AS(load_dataset(bad, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains(":2:"), std::runtime_error);
  }
  SUBCASE("wrong header") {
    const auto bad = dir.file("bad.csv", "id,x,y\nA,0,0\n");
    const auto lanes = dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\n");
    CHECK_THROWS_WITH_AS(load_dataset(bad, lanes, MetricMode::PlanarEuclidean),
                         doctest::Contains("header"), std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(
        load_dataset(dir.path / "nope.csv", dir.path / "nope2.csv", MetricMode::PlanarEuclidean),
        std::runtime_error);
  }
}

TEST_CASE("an extra lane column is ignored and distances recomputed") {
  TempDir dir;
  const auto bases = dir.file("bases.csv", kNestedBases);
  const auto lanes = dir.file(
      "lanes.csv", "lane_id,origin_base_id,dest_base_id,dist\nL1,A,B,999\nL2,C,D,999\n");
  const Dataset ds = load_dataset(bases, lanes, MetricMode::PlanarEuclidean);
  REQUIRE(ds.lanes.size() == 2);
  CHECK(ds.lanes[0].dist == 10.0);  // not 999
  CHECK(ds.lanes[1].dist == 8.0);
}

TEST_CASE("explicit-matrix datasets") {
  TempDir dir;
  const auto bases = dir.file("bases.csv", "base_id\nA\nB\nC\n");
  const auto lanes = dir.file("lanes.csv", "lane_id,origin_base_id,dest_base_id\nL1,A,C\n");

  SUBCASE("well-formed") {
    const auto matrix = dir.file("matrix.csv", "0,2,5\n2,0,4\n5,4,0\n");
    const Dataset ds = load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix);
    CHECK(ds.lanes[0].dist == 5.0);
    CHECK(ds.metric(1, 2) == 4.0);
  }
  SUBCASE("wrong column count") {
    const auto matrix = dir.file("matrix.csv", "0,2\n2,0\n5,4\n");
    CHECK_THROWS_WITH_AS(load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix),
                         doctest::Contains("columns"), std::runtime_error);
  }
  SUBCASE("wrong row count") {
    const auto matrix = dir.file("matrix.csv", "0,2,5\n2,0,4\n");
    CHECK_THROWS_AS(load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix),
                    std::runtime_error);
  }
  SUBCASE("asymmetric needs the relaxed flag") {
    const auto matrix = dir.file("matrix.csv", "0,2,5\n3,0,4\n5,4,0\n");
    CHECK_THROWS_AS(load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix),
                    std::invalid_argument);
    const Dataset ds = load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix, false);
    CHECK(ds.metric(0, 1) == 2.0);
    CHECK(ds.metric(1, 0) == 3.0);
  }
  SUBCASE("zero matrix distance is a zero-length lane") {
    const auto matrix = dir.file("matrix.csv", "0,2,0\n2,0,4\n0,4,0\n");
    CHECK_THROWS_WITH_AS(load_dataset(bases, lanes, MetricMode::ExplicitMatrix, matrix, false),
                         doctest::Contains("zero-length"), std::runtime_error);
  }
}

TEST_CASE("synthetic generation is deterministic and valid") {
  const Dataset a = generate_synthetic(50, 200, 7, 100.0, 100.0);
  const Dataset b = generate_synthetic(50, 200, 7, 100.0, 100.0);
  REQUIRE(a.bases.size() == 50);
  REQUIRE(a.lanes.size() == 200);
  for (std::size_t i = 0; i < a.bases.size(); ++i) {
    CHECK(a.bases[i].id == b.bases[i].id);
    CHECK(a.bases[i].x == b.bases[i].x);
    CHECK(a.bases[i].y == b.bases[i].y);
    CHECK(a.bases[i].x >= 0.0);
    CHECK(a.bases[i].x < 100.0);
  }
  for (std::size_t i = 0; i < a.lanes.size(); ++i) {
    CHECK(a.lanes[i].id == b.lanes[i].id);
    CHECK(a.lanes[i].start == b.lanes[i].start);
    CHECK(a.lanes[i].end == b.lanes[i].end);
    CHECK(a.lanes[i].dist == b.lanes[i].dist);
    CHECK(a.lanes[i].dist > 0.0);
  }
  const Dataset c = generate_synthetic(50, 200, 8, 100.0, 100.0);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.bases.size(); ++i)
    any_difference = any_difference || a.bases[i].x != c.bases[i].x;
  CHECK(any_difference);
}

TEST_CASE("generation rejects degenerate arguments") {
  CHECK_THROWS_AS(generate_synthetic(1, 10, 1, 100.0, 100.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic(10, 0, 1, 100.0, 100.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic(10, 10, 1, 0.0, 100.0), std::invalid_argument);
}

TEST_CASE("write/load round trip") {
  TempDir dir;
  SUBCASE("planar") {
    const Dataset original = generate_synthetic(37, 91, 3, 250.0, 125.0);
    write_dataset(original, dir.path / "b.csv", dir.path / "l.csv");
    const Dataset loaded =
        load_dataset(dir.path / "b.csv", dir.path / "l.csv", MetricMode::PlanarEuclidean);
    REQUIRE(loaded.bases.size() == original.bases.size());
    REQUIRE(loaded.lanes.size() == original.lanes.size());
    for (std::size_t i = 0; i < original.bases.size(); ++i) {
      CHECK(loaded.bases[i].id == original.bases[i].id);
      CHECK(loaded.bases[i].x == original.bases[i].x);  // bit-exact round trip
      CHECK(loaded.bases[i].y == original.bases[i].y);
    }
    for (std::size_t i = 0; i < original.lanes.size(); ++i) {
      CHECK(loaded.lanes[i].id == original.lanes[i].id);
      CHECK(loaded.lanes[i].start == original.lanes[i].start);
      CHECK(loaded.lanes[i].end == original.lanes[i].end);
      CHECK(loaded.lanes[i].dist == original.lanes[i].dist);
    }
    // writing twice gives identical bytes
    write_dataset(original, dir.path / "b2.csv", dir.path / "l2.csv");
    CHECK(slurp(dir.path / "b.csv") == slurp(dir.path / "b2.csv"));
    CHECK(slurp(dir.path / "l.csv") == slurp(dir.path / "l2.csv"));
  }
  SUBCASE("spherical") {
    Dataset original;
    original.bases = {{"tokyo", 35.6812, 139.7671},
                      {"osaka", 34.7025, 135.4959},
                      {"fukuoka", 33.5902, 130.4017}};
    original.metric = MetricProvider::spherical(original.bases);
    original.lanes = {{"t-o", 0, 1, original.metric(0, 1)},
                      {"o-f", 1, 2, original.metric(1, 2)}};
    write_dataset(original, dir.path / "sb.csv", dir.path / "sl.csv");
    const Dataset loaded =
        load_dataset(dir.path / "sb.csv", dir.path / "sl.csv", MetricMode::SphericalHaversine);
    REQUIRE(loaded.lanes.size() == 2);
    CHECK(loaded.lanes[0].dist == original.lanes[0].dist);
    CHECK(loaded.bases[0].x == original.bases[0].x);
  }
  SUBCASE("matrix") {
    Dataset original;
    original.bases = {{"A", 0, 0}, {"B", 0, 0}, {"C", 0, 0}};
    original.metric = MetricProvider::matrix({0, 2.5, 5, 2.5, 0, 4, 5, 4, 0}, 3);
    original.lanes = {{"L1", 0, 2, 5.0}};
    write_dataset(original, dir.path / "mb.csv", dir.path / "ml.csv", dir.path / "mm.csv");
    const Dataset loaded = load_dataset(dir.path / "mb.csv", dir.path / "ml.csv",
                                        MetricMode::ExplicitMatrix, dir.path / "mm.csv");
    CHECK(loaded.metric(0, 1) == 2.5);
    CHECK(loaded.lanes[0].dist == 5.0);
  }
}

TEST_CASE("metric audit") {
  SUBCASE("planar-derived matrices pass") {
    const Dataset ds = generate_synthetic(8, 5, 21, 80.0, 60.0);
    std::vector<double> m(8 * 8);
    for (std::uint32_t i = 0; i < 8; ++i)
      for (std::uint32_t j = 0; j < 8; ++j) m[i * 8 + j] = ds.metric(i, j);
    CHECK(validate_metric(m, 8, 1000).empty());           // exhaustive (512 <= 1000)
    CHECK(validate_metric(m, 8, 100).empty());            // sampled
  }
  SUBCASE("asymmetry is reported with its pair") {
    const std::vector<double> m{0, 10, 9, 0};
    const auto violations = validate_metric(m, 2, 1000);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == MetricViolation::Kind::Asymmetry);
    CHECK(violations[0].a == 0);
    CHECK(violations[0].b == 1);
    CHECK(violations[0].describe().find("10") != std::string::npos);
  }
  SUBCASE("triangle violations are reported with their triple") {
    // d(a,c) = 100 but d(a,b) = d(b,c) = 10
    const std::vector<double> m{0, 10, 100, 10, 0, 10, 100, 10, 0};
    const auto violations = validate_metric(m, 3, 1000);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const auto& v : violations)
      if (v.kind == MetricViolation::Kind::Triangle && v.a == 0 && v.b == 1 && v.c == 2)
        found = true;
    CHECK(found);
  }
  SUBCASE("negative and diagonal entries") {
    const std::vector<double> m{0, -1, -1, 2};
    const auto violations = validate_metric(m, 2, 1000);
    bool negative = false, diagonal = false;
    for (const auto& v : violations) {
      negative = negative || v.kind == MetricViolation::Kind::Negative;
      diagonal = diagonal || v.kind == MetricViolation::Kind::NonzeroDiagonal;
    }
    CHECK(negative);
    CHECK(diagonal);
  }
  SUBCASE("non-square input") {
    CHECK_THROWS_AS(validate_metric(std::vector<double>{0, 1, 2}, 2, 10),
                    std::invalid_argument);
  }
}
