// Command-line driver: `run` executes the main sampling/classification
// routine against the data/ database, `classify` re-classifies matrix files,
// `report` prints observed-class grids, `predominant` the predominance
// analysis.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "codim3/report.hpp"

namespace {

using namespace codim3;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

template <class Fn>
auto with_field(std::uint32_t field_char, Fn&& fn) {
  if (field_char == 0) return fn(RationalField{});
  return fn(PrimeField{field_char});
}

void add_sampler_flags(CLI::App* cmd, SamplerConfig& cfg, std::string& deg_seq_text) {
  cmd->add_option("--field-char", cfg.field_char, "field characteristic, 0 for the rationals")
      ->capture_default_str();
  cmd->add_option("--check-in", cfg.check_in, "progress line every N iterations")
      ->capture_default_str();
  cmd->add_option("--deg-seq", deg_seq_text,
                  "comma-separated generator degrees; 0 draws mn random degrees per attempt")
      ->capture_default_str();
  cmd->add_option("--low-deg", cfg.low_deg, "smallest random degree")->capture_default_str();
  cmd->add_option("--high-deg", cfg.high_deg, "largest random degree")->capture_default_str();
  cmd->add_option("--num-terms", cfg.num_terms, "terms per random polynomial, 0 for random")
      ->capture_default_str();
  cmd->add_option("--mn", cfg.mn,
                  "target minimal generator count (or quotient type with --use-n)")
      ->capture_default_str();
  cmd->add_flag("--use-n", cfg.use_n, "build ideals with prescribed quotient type");
  cmd->add_option("--max-tries", cfg.max_tries, "retry budget per iteration")
      ->capture_default_str();
  cmd->add_flag("--strict-terms", cfg.strict_terms,
                "reject ideals whose minimal generators do not have exactly numTerms terms");
  cmd->add_option("--max-m", cfg.max_m, "largest admissible minimal generator count")
      ->capture_default_str();
  cmd->add_option("--max-n", cfg.max_n, "largest admissible quotient type")
      ->capture_default_str();
  cmd->add_flag("--logging", cfg.logging, "append banners to log.txt");
}

std::vector<int> parse_deg_seq(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<int>(std::stol(tok)));
  if (out.empty()) throw CLI::ValidationError("--deg-seq", "empty degree sequence");
  return out;
}

int run_command(long count, SamplerConfig cfg, const std::string& deg_seq_text,
                const std::string& dir, int workers) {
  cfg.deg_seq = parse_deg_seq(deg_seq_text);
  cfg.validate();
  RunOptions opts{dir, workers};
  with_field(cfg.field_char, [&](auto field) {
    using F = decltype(field);
    main_routine<F>(count, cfg, opts, std::cout);
    return 0;
  });
  return 0;
}

int classify_command(const std::string& path_text, std::uint32_t field_char) {
  namespace fs = std::filesystem;
  fs::path path(path_text);
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::recursive_directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  if (files.empty()) throw io_error("no .txt files under " + path.string());

  int mismatches = 0;
  with_field(field_char, [&](auto field) {
    using F = decltype(field);
    for (const auto& file : files) {
      auto rows = classify_file<F>(field, file, std::cerr);
      // when the file name encodes a class, flag rows that disagree
      std::string stem = file.stem().string();
      for (const auto& [line, profile] : rows) {
        ClassKey key = ClassKey::from_profile(profile);
        std::string encoded = key.file_name();
        encoded = encoded.substr(0, encoded.size() - 4);
        std::cout << file.string() << ": " << key.tuple_text() << "  " << line << "\n";
        if (stem.find('-') != std::string::npos && stem != encoded) {
          std::cout << file.string() << ": warning: profile " << key.tuple_text()
                    << " does not match file name\n";
          ++mismatches;
        }
      }
    }
    return 0;
  });
  return mismatches == 0 ? 0 : kExitInternal;
}

int report_command(const std::string& dir, std::optional<int> m, std::optional<int> n,
                   bool csv, const std::string& permissible_path) {
  ClassDatabase db = ClassDatabase::load(dir);
  if (csv) {
    std::cout << csv_report(db, m, n);
    return 0;
  }
  std::optional<PermissibilityFile> permissible;
  if (!permissible_path.empty())
    permissible = PermissibilityFile::load(permissible_path);

  std::set<std::pair<int, int>> boxes;
  for (const auto& [key, _] : db.all_counts()) {
    if (m && key.m != *m) continue;
    if (n && key.n != *n) continue;
    boxes.insert({key.m, key.n});
  }
  if (boxes.empty()) {
    std::cout << "no observations" << (m || n ? " for the requested box" : "") << "\n";
    return 0;
  }
  for (auto [bm, bn] : boxes)
    std::cout << render_grid(grid_report(db, bm, bn),
                             permissible ? &*permissible : nullptr);
  return 0;
}

int predominant_command(const std::string& dir, std::optional<int> m, std::optional<int> n,
                        long factor) {
  ClassDatabase db = ClassDatabase::load(dir);
  std::set<std::pair<int, int>> boxes;
  for (const auto& [key, _] : db.all_counts()) {
    if (m && key.m != *m) continue;
    if (n && key.n != *n) continue;
    boxes.insert({key.m, key.n});
  }
  if (boxes.empty()) {
    std::cout << "no observations\n";
    return 0;
  }
  for (auto [bm, bn] : boxes) {
    auto result = predominant_classes(db.box_counts(bm, bn), factor);
    std::cout << "(" << bm << "," << bn << "): ";
    if (result.predominant) {
      std::cout << result.keys.front().display() << "\n";
    } else {
      for (std::size_t i = 0; i < result.keys.size(); ++i)
        std::cout << (i ? ", " : "") << result.keys[i].display();
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random grade-3 perfect ideals and their Tor algebra classes"};
  app.require_subcommand(1);

  // run
  long count = 0;
  SamplerConfig cfg;
  std::string deg_seq_text = "0";
  std::string run_dir = ".";
  int workers = 1;
  auto* run = app.add_subcommand("run", "sample, classify and record ideals");
  run->add_option("count", count, "number of classification attempts")->required();
  run->add_option("--seed", cfg.seed, "RNG seed")->required();
  add_sampler_flags(run, cfg, deg_seq_text);
  run->add_option("--dir", run_dir, "directory holding data/ and log.txt")
      ->capture_default_str();
  run->add_option("--workers", workers, "worker threads")->capture_default_str();

  // classify
  std::string classify_path;
  std::uint32_t classify_char = 3;
  auto* classify = app.add_subcommand("classify", "classify matrix files");
  classify->add_option("path", classify_path, "a matrix file or a directory of them")
      ->required();
  classify->add_option("--field-char", classify_char, "field characteristic")
      ->capture_default_str();

  // report
  std::string report_dir = ".";
  int report_m = -1, report_n = -1;
  bool report_csv = false;
  std::string permissible_path;
  auto* report = app.add_subcommand("report", "observed-class grids");
  report->add_option("--dir", report_dir, "database directory")->capture_default_str();
  report->add_option("--m", report_m, "restrict to one m");
  report->add_option("--n", report_n, "restrict to one n");
  report->add_flag("--csv", report_csv, "emit m,n,class,p,q,r,count rows");
  report->add_option("--permissible", permissible_path,
                     "file of permissible cells: 'class m n a b' per line");

  // predominant
  std::string pred_dir = ".";
  int pred_m = -1, pred_n = -1;
  long factor = 7;
  auto* predominant = app.add_subcommand("predominant", "predominant class per (m,n)-box");
  predominant->add_option("--dir", pred_dir, "database directory")->capture_default_str();
  predominant->add_option("--m", pred_m, "restrict to one m");
  predominant->add_option("--n", pred_n, "restrict to one n");
  predominant->add_option("--factor", factor, "predominance factor")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints the message or help text
    return rc == 0 ? 0 : kExitUsage;
  }

  auto opt = [](int v) { return v < 0 ? std::optional<int>() : std::optional<int>(v); };
  try {
    if (run->parsed()) return run_command(count, cfg, deg_seq_text, run_dir, workers);
    if (classify->parsed()) return classify_command(classify_path, classify_char);
    if (report->parsed())
      return report_command(report_dir, opt(report_m), opt(report_n), report_csv,
                            permissible_path);
    if (predominant->parsed())
      return predominant_command(pred_dir, opt(pred_m), opt(pred_n), factor);
  } catch (const codim3::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const codim3::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const codim3::unclassifiable_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const codim3::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
