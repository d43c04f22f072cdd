#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "codim3/report.hpp"

using namespace codim3;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = fs::temp_directory_path() / ("codim3-report-" + std::to_string(rng()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("option echo reproduces the start banner key order", "[report]") {
  SamplerConfig cfg;
  CHECK(option_echo(cfg) ==
        "new OptionTable from {maxTries => 10, degSeq => (0), strictTerms => false, "
        "logging => false, mn => 5, numTerms => 0, highDeg => 8, useN => false, "
        "maxM => 12, maxN => 10, checkIn => 0, fieldChar => 3, lowDeg => 2}");
  cfg.deg_seq = {2, 2, 3};
  cfg.use_n = true;
  CHECK(option_echo(cfg).find("degSeq => (2, 2, 3)") != std::string::npos);
  CHECK(option_echo(cfg).find("useN => true") != std::string::npos);
}

TEST_CASE("main routine with count 0 prints banners and records nothing", "[report]") {
  TempDir tmp;
  SamplerConfig cfg;
  cfg.seed = 1;
  std::ostringstream out;
  auto summary = main_routine<PrimeField>(0, cfg, {tmp.path, 1}, out);
  CHECK(summary.classified == 0);
  CHECK(summary.distinct_classes == 0);
  CHECK(summary.new_classes.empty());
  CHECK(out.str().find("Main Routine started at ") != std::string::npos);
  CHECK(out.str().find("Main Routine finished:") != std::string::npos);
  CHECK(out.str().find("classified 0 ideals,") != std::string::npos);
  CHECK(fs::is_directory(tmp.path / "data"));
}

TEST_CASE("check-in lines fire on multiples of checkIn", "[report]") {
  TempDir tmp;
  SamplerConfig cfg;
  cfg.seed = 2;
  cfg.check_in = 2;
  std::ostringstream out;
  main_routine<PrimeField>(5, cfg, {tmp.path, 1}, out);
  CHECK(out.str().find("Checking in every 2 ideals... done 2 so far") != std::string::npos);
  CHECK(out.str().find("Checking in every 2 ideals... done 4 so far") != std::string::npos);
  CHECK(out.str().find("done 0 so far") == std::string::npos);
  CHECK(out.str().find("done 5 so far") == std::string::npos);
}

TEST_CASE("main routine classifies and records seeded samples", "[report]") {
  TempDir tmp;
  SamplerConfig cfg;
  cfg.seed = 3;
  std::ostringstream out;
  auto summary = main_routine<PrimeField>(20, cfg, {tmp.path, 1}, out);
  CHECK(summary.classified > 0);
  CHECK(summary.distinct_classes > 0);
  CHECK(summary.new_classes.size() <= static_cast<std::size_t>(summary.distinct_classes));
  auto db = ClassDatabase::load(tmp.path);
  long total = 0;
  for (const auto& [_, entry] : db.entries()) total += entry.count;
  CHECK(total == summary.classified);
  // everything default-sampled has mn = 5 minimal generators
  for (const auto& [kb, _] : db.entries()) CHECK(kb.first.m == 5);
}

TEST_CASE("a single seeded iteration lands a known class", "[report]") {
  // seed found by search: this draw produces exactly (z^2, xz, y^2, xy, x^3)
  TempDir tmp;
  SamplerConfig cfg;
  cfg.num_terms = 1;
  cfg.deg_seq = {2, 2, 2, 2, 3};
  cfg.seed = 13;
  std::ostringstream out;
  auto summary = main_routine<PrimeField>(1, cfg, {tmp.path, 1}, out);
  CHECK(summary.classified == 1);
  CHECK(summary.distinct_classes == 1);
  REQUIRE(summary.new_classes.size() == 1);
  CHECK(summary.new_classes[0] == ClassKey{5, 2, 'B', 1, 1, 2});
  auto db = ClassDatabase::load(tmp.path);
  REQUIRE(db.entries().size() == 1);
  const auto& [kb, entry] = *db.entries().begin();
  CHECK(kb.first == ClassKey{5, 2, 'B', 1, 1, 2});
  CHECK(kb.second == 1);  // monomial bucket
  CHECK(entry.machine == "matrix{{z^2,x*z,y^2,x*y,x^3}}");
  CHECK(out.str().find("classified 1 ideals,") != std::string::npos);
  CHECK(out.str().find("discovered 1 new classes") != std::string::npos);
  CHECK(out.str().find("{(5,2,B,1,1,2)}") != std::string::npos);
}

TEST_CASE("logging appends both banners", "[report]") {
  TempDir tmp;
  SamplerConfig cfg;
  cfg.seed = 4;
  cfg.logging = true;
  std::ostringstream out;
  main_routine<PrimeField>(1, cfg, {tmp.path, 1}, out);
  main_routine<PrimeField>(1, cfg, {tmp.path, 1}, out);
  std::ifstream is(tmp.path / "log.txt");
  REQUIRE(is);
  std::stringstream ss;
  ss << is.rdbuf();
  std::string log = ss.str();
  std::size_t starts = 0, ends = 0;
  for (std::size_t p = 0; (p = log.find("Main Routine started", p)) != std::string::npos; ++p)
    ++starts;
  for (std::size_t p = 0; (p = log.find("Main Routine finished", p)) != std::string::npos; ++p)
    ++ends;
  CHECK(starts == 2);
  CHECK(ends == 2);
}

TEST_CASE("classify_file profiles recorded matrices", "[report]") {
  TempDir tmp;
  PrimeField k(3);
  fs::path file = tmp.path / "5-2-B-1-1-2.txt";
  std::ofstream(file) << "matrix{{z^2,y*z,x*z,x*y,x^2-y^2}}\n"
                      << "matrix{{y*z,x*z,y^2+z^2,x*y+z^2,x^2+z^2}}\n";
  std::ostringstream diag;
  auto rows = classify_file(k, file, diag);
  REQUIRE(rows.size() == 2);
  for (const auto& [line, profile] : rows) {
    CHECK(ClassKey::from_profile(profile) == ClassKey{5, 2, 'B', 1, 1, 2});
  }
  CHECK(diag.str().empty());

  fs::path t = tmp.path / "5-4-T-3-0-0.txt";
  std::ofstream(t) << "matrix{{z^3,y^3,x^3,x*y*z^2,x*y^2*z}}\n";
  auto trows = classify_file(k, t, diag);
  REQUIRE(trows.size() == 1);
  CHECK(ClassKey::from_profile(trows[0].second) == ClassKey{5, 4, 'T', 3, 0, 0});

  fs::path empty = tmp.path / "empty.txt";
  std::ofstream(empty) << "";
  CHECK(classify_file(k, empty, diag).empty());

  // parse problems are reported per line, good lines still classify
  fs::path mixed = tmp.path / "mixed.txt";
  std::ofstream(mixed) << "matrix{{x^2+y^3}}\n"
                       << "matrix{{x^2,y^2,z^2}}\n";
  std::ostringstream diag2;
  auto mrows = classify_file(k, mixed, diag2);
  REQUIRE(mrows.size() == 1);
  CHECK(diag2.str().find("mixed.txt:1") != std::string::npos);
}

TEST_CASE("recorded files classify back to their own names", "[report]") {
  TempDir tmp;
  PrimeField k(3);
  SamplerConfig cfg;
  cfg.seed = 6;
  std::ostringstream out;
  main_routine<PrimeField>(30, cfg, {tmp.path, 1}, out);
  int files = 0;
  for (int b = 0; b <= 4; ++b) {
    fs::path dir = tmp.path / "data" / std::to_string(b);
    if (!fs::exists(dir)) continue;
    for (const auto& entry : fs::directory_iterator(dir)) {
      ++files;
      std::ostringstream diag;
      auto rows = classify_file(k, entry.path(), diag);
      CHECK(diag.str().empty());
      std::string stem = entry.path().stem().string();
      for (const auto& [line, profile] : rows) {
        auto name = ClassKey::from_profile(profile).file_name();
        CHECK(name.substr(0, name.size() - 4) == stem);
      }
    }
  }
  CHECK(files > 0);
}

TEST_CASE("grid cell sums equal the box totals", "[report]") {
  TempDir tmp;
  SamplerConfig cfg;
  cfg.seed = 8;
  std::ostringstream out;
  main_routine<PrimeField>(40, cfg, {tmp.path, 1}, out);
  auto db = ClassDatabase::load(tmp.path);
  std::set<std::pair<int, int>> boxes;
  for (const auto& [kb, _] : db.entries()) boxes.insert({kb.first.m, kb.first.n});
  for (auto [m, n] : boxes) {
    long box_total = 0;
    for (const auto& [_, c] : db.box_counts(m, n)) box_total += c;
    auto grid = grid_report(db, m, n);
    long cell_total = 0;
    for (const auto& [_, c] : grid.h_cells) cell_total += c;
    for (const auto& [_, c] : grid.bgt_cells) cell_total += c;
    CHECK(cell_total == box_total);
  }
}

TEST_CASE("grid aggregation", "[report]") {
  TempDir tmp;
  auto db = ClassDatabase::load(tmp.path);
  CHECK(grid_report(db, 5, 2).h_cells.empty());
  CHECK(grid_report(db, 5, 2).bgt_cells.empty());

  db.record({5, 2, 'B', 1, 1, 2}, "matrix{{x^2}}", 0);
  db.record({5, 2, 'B', 1, 1, 2}, "matrix{{x^2}}", 2);
  db.record({5, 2, 'B', 1, 1, 2}, "matrix{{x^2}}", 2);
  db.record({5, 2, 'H', 0, 0, 0}, "matrix{{x^2}}", 2);
  auto grid = grid_report(db, 5, 2);
  REQUIRE(grid.bgt_cells.size() == 1);
  CHECK(grid.bgt_cells.at({1, 2}) == 3);  // counts summed over buckets
  CHECK(grid.h_cells.at({0, 0}) == 1);

  auto csv = csv_report(db, 5, 2);
  CHECK(csv.find("m,n,class,p,q,r,count") == 0);
  CHECK(csv.find("5,2,B,1,1,2,3") != std::string::npos);
  CHECK(csv.find("5,2,H,0,0,0,1") != std::string::npos);
}

TEST_CASE("the (5,3) box of the regression corpus fills the expected cells", "[report]") {
  TempDir tmp;
  auto db = ClassDatabase::load(tmp.path);
  // the five recorded H classes with m=5, n=3
  for (auto [p, q] : {std::pair{0, 0}, {0, 1}, {1, 0}, {2, 1}, {4, 3}})
    db.record({5, 3, 'H', p, q, q}, "matrix{{x^2}}", 0);
  auto grid = grid_report(db, 5, 3);
  CHECK(grid.bgt_cells.empty());
  REQUIRE(grid.h_cells.size() == 5);
  for (auto [p, q] : {std::pair{0, 0}, {0, 1}, {1, 0}, {2, 1}, {4, 3}})
    CHECK(grid.h_cells.at({p, q}) == 1);
}

TEST_CASE("predominance criterion", "[report]") {
  std::map<ClassKey, long> counts;
  counts[{5, 2, 'H', 0, 0, 0}] = 700;
  counts[{5, 2, 'H', 1, 0, 0}] = 99;
  auto res = predominant_classes(counts);
  CHECK(res.predominant);
  CHECK(res.keys == std::vector<ClassKey>{{5, 2, 'H', 0, 0, 0}});

  counts.clear();
  counts[{5, 2, 'B', 1, 1, 2}] = 400;
  counts[{5, 2, 'H', 0, 0, 0}] = 300;
  counts[{5, 2, 'G', 0, 1, 2}] = 10;
  auto shortlist = predominant_classes(counts);
  CHECK_FALSE(shortlist.predominant);
  REQUIRE(shortlist.keys.size() == 2);
  CHECK(shortlist.keys[0] == ClassKey{5, 2, 'B', 1, 1, 2});
  CHECK(shortlist.keys[1] == ClassKey{5, 2, 'H', 0, 0, 0});

  counts.clear();
  counts[{9, 2, 'T', 3, 0, 0}] = 1;
  auto single = predominant_classes(counts);
  CHECK(single.predominant);

  CHECK_THROWS_AS(predominant_classes({}), std::invalid_argument);

  // scale invariance
  counts.clear();
  counts[{5, 2, 'B', 1, 1, 2}] = 13;
  counts[{5, 2, 'H', 0, 0, 0}] = 5;
  auto before = predominant_classes(counts);
  for (auto& [_, c] : counts) c *= 1000;
  auto after = predominant_classes(counts);
  CHECK(before.predominant == after.predominant);
  CHECK(before.keys == after.keys);
}

TEST_CASE("conjectured G bounds", "[report]") {
  CHECK(g_conjecture_permissible(6, 2, 3));   // r = m-3 with empty interval
  CHECK(g_conjecture_permissible(8, 2, 5));   // r = m-3
  CHECK_FALSE(g_conjecture_permissible(6, 3, 3));
  CHECK(g_conjecture_permissible(7, 3, 3));
  CHECK(g_conjecture_permissible(9, 2, 4));   // 2 <= 4 <= 4
  CHECK_FALSE(g_conjecture_permissible(9, 2, 5));
  CHECK(g_conjecture_permissible(9, 2, 6));   // r = m-3
  CHECK_THROWS_AS(g_conjecture_permissible(6, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g_conjecture_permissible(6, 2, 1), std::invalid_argument);
}

TEST_CASE("workers split reproducibly", "[report]") {
  SamplerConfig cfg;
  cfg.seed = 10;
  TempDir a, b;
  std::ostringstream out_a, out_b;
  auto sa = main_routine<PrimeField>(12, cfg, {a.path, 2}, out_a);
  auto sb = main_routine<PrimeField>(12, cfg, {b.path, 2}, out_b);
  CHECK(sa.classified == sb.classified);
  CHECK(sa.distinct_classes == sb.distinct_classes);
  auto da = ClassDatabase::load(a.path);
  auto dbb = ClassDatabase::load(b.path);
  REQUIRE(da.entries().size() == dbb.entries().size());
  auto it1 = da.entries().begin();
  auto it2 = dbb.entries().begin();
  for (; it1 != da.entries().end(); ++it1, ++it2) {
    CHECK(it1->first == it2->first);
    CHECK(it1->second.machine == it2->second.machine);
    CHECK(it1->second.count == it2->second.count);
  }
}
