// The main routine and the analysis reports: run banners and logging, the
// generate/validate/classify/record loop (optionally across workers), file
// classification, observed-class grids, predominant-class detection, and the
// conjectured bound on r for class G.

#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "codim3/datastore.hpp"
#include "codim3/sampler.hpp"
#include "codim3/text.hpp"
#include "codim3/tor.hpp"

namespace codim3 {

struct RunSummary {
  std::string started_at, finished_at;
  long long elapsed_seconds = 0;
  long classified = 0;
  long distinct_classes = 0;
  std::vector<ClassKey> new_classes;
};

struct RunOptions {
  std::filesystem::path root = ".";
  int workers = 1;
};

// A fully classified ideal: trimmed generators plus its profile.
template <class F>
struct Classified {
  std::vector<Poly<F>> mingens;
  TorProfile profile;
  TorInvariants invariants;
};

// The classification pipeline: reduced basis, artinian quotient, Koszul
// homology, products, invariants, class.  Cross-checks the homology ranks
// against the independent Groebner and socle computations.
template <class F>
Classified<F> classify_ideal(const F& k, const GroebnerBasis<F>& gb) {
  Quotient<F> Q(k, gb);
  std::vector<Poly<F>> mingens = minimal_generators(k, gb);
  int type = socle_dimension(Q);
  TorAlgebra<F> A = tor_algebra(Q);
  TorInvariants inv = compute_invariants(k, A);
  if (inv.m != static_cast<int>(mingens.size()))
    throw internal_error("rank A_1 disagrees with the minimal generator count");
  if (inv.n != type) throw internal_error("rank A_3 disagrees with the socle dimension");
  return {std::move(mingens), classify(inv), inv};
}

template <class F>
Classified<F> classify_ideal(const F& k, const Ideal<F>& I) {
  return classify_ideal(k, reduced_groebner_basis(I));
}

inline std::string format_timestamp(std::chrono::system_clock::time_point tp) {
  std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  localtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%d %H:%M:%S", &tm);
  return buf;
}

// The start-banner option echo; the key order is part of the output format.
inline std::string option_echo(const SamplerConfig& cfg) {
  auto seq = [&]() {
    std::string s = "(";
    for (std::size_t i = 0; i < cfg.deg_seq.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(cfg.deg_seq[i]);
    }
    return s + ")";
  };
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "new OptionTable from {maxTries => " << cfg.max_tries << ", degSeq => " << seq()
     << ", strictTerms => " << b(cfg.strict_terms) << ", logging => " << b(cfg.logging)
     << ", mn => " << cfg.mn << ", numTerms => " << cfg.num_terms << ", highDeg => "
     << cfg.high_deg << ", useN => " << b(cfg.use_n) << ", maxM => " << cfg.max_m
     << ", maxN => " << cfg.max_n << ", checkIn => " << cfg.check_in << ", fieldChar => "
     << cfg.field_char << ", lowDeg => " << cfg.low_deg << "}";
  return os.str();
}

namespace detail {

struct IterationResult {
  bool classified = false;
  ClassKey key;
  std::string matrix_line;
  int bucket = 0;
};

template <class F>
IterationResult run_iteration(const F& k, const SamplerConfig& cfg, std::mt19937_64& rng) {
  AttemptOutcome<F> out = cfg.use_n ? generate_via_inverse_system(k, cfg, rng)
                                    : generate_candidate(k, cfg, rng);
  if (!out.success() || out.ideal.is_zero()) return {};
  Quotient<F> Q(k, *out.gb);
  std::vector<Poly<F>> mingens = minimal_generators(k, *out.gb);
  int type = socle_dimension(Q);
  if (!check_validity(k, mingens, codimension(*out.gb), type, cfg).ok) return {};
  TorAlgebra<F> A = tor_algebra(Q);
  TorInvariants inv = compute_invariants(k, A);
  if (inv.m != static_cast<int>(mingens.size()))
    throw internal_error("rank A_1 disagrees with the minimal generator count");
  if (inv.n != type) throw internal_error("rank A_3 disagrees with the socle dimension");
  TorProfile profile = classify(inv);
  return {true, ClassKey::from_profile(profile), machine_matrix(k, mingens),
          bucket_for(mingens, cfg.num_terms)};
}

inline void append_log(const std::filesystem::path& root, const std::string& text) {
  std::ofstream os(root / "log.txt", std::ios::app);
  if (!os) throw io_error("cannot append to " + (root / "log.txt").string());
  os << text;
  if (!os.flush()) throw io_error("write failed for " + (root / "log.txt").string());
}

}  // namespace detail

// Steps 1.1-1.6: set the ring, load the database, print the start banner, run
// `count` generate/validate/classify/record iterations, print the summary.
// With workers > 1 the iterations are split across threads with derived
// seeds; database updates stay on this thread, folded in worker order.
template <class F>
RunSummary main_routine(long count, const SamplerConfig& cfg, const RunOptions& opts,
                        std::ostream& out) {
  cfg.validate();
  const F k{FieldSpec(cfg.field_char)};
  ClassDatabase db = ClassDatabase::load(opts.root);

  auto start_tp = std::chrono::steady_clock::now();
  RunSummary summary;
  summary.started_at = format_timestamp(std::chrono::system_clock::now());

  std::ostringstream banner;
  banner << "Main Routine started at " << summary.started_at << " with options:\n"
         << option_echo(cfg) << "\n";
  out << banner.str();
  if (cfg.field_char == 2)
    out << "note: characteristic 2 ideals realize fewer classes (no signs)\n";
  if (cfg.logging) detail::append_log(opts.root, banner.str());

  std::vector<detail::IterationResult> results(static_cast<std::size_t>(count));
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    std::mt19937_64 rng(worker_seed(cfg.seed, 0));
    for (long i = 0; i < count; ++i) {
      if (cfg.check_in > 0 && i > 0 && i % cfg.check_in == 0)
        out << "Checking in every " << cfg.check_in << " ideals... done " << i
            << " so far\n";
      results[static_cast<std::size_t>(i)] = detail::run_iteration(k, cfg, rng);
    }
  } else {
    // split count as evenly as possible; worker w handles one contiguous slab
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    long base = count / workers, extra = count % workers;
    long offset = 0;
    for (int w = 0; w < workers; ++w) {
      long mine = base + (w < extra ? 1 : 0);
      long my_offset = offset;
      offset += mine;
      pool.emplace_back([&, w, mine, my_offset]() {
        try {
          std::mt19937_64 rng(worker_seed(cfg.seed, static_cast<unsigned>(w)));
          for (long i = 0; i < mine; ++i)
            results[static_cast<std::size_t>(my_offset + i)] =
                detail::run_iteration(k, cfg, rng);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::set<ClassKey> seen, fresh;
  for (const auto& r : results) {
    if (!r.classified) continue;
    if (!db.contains(r.key) && !fresh.count(r.key)) fresh.insert(r.key);
    db.record(r.key, r.matrix_line, r.bucket);
    seen.insert(r.key);
    ++summary.classified;
  }
  summary.distinct_classes = static_cast<long>(seen.size());
  summary.new_classes.assign(fresh.begin(), fresh.end());

  summary.finished_at = format_timestamp(std::chrono::system_clock::now());
  summary.elapsed_seconds = std::chrono::duration_cast<std::chrono::seconds>(
                                std::chrono::steady_clock::now() - start_tp)
                                .count();

  std::ostringstream tail;
  tail << "Main Routine finished:\n"
       << "at " << summary.finished_at << "\n"
       << "ran for " << summary.elapsed_seconds << " seconds,\n"
       << "classified " << summary.classified << " ideals,\n"
       << "generated " << summary.distinct_classes << " distinct classes,\n"
       << "discovered " << summary.new_classes.size() << " new classes\n";
  if (!summary.new_classes.empty()) {
    tail << "{";
    for (std::size_t i = 0; i < summary.new_classes.size(); ++i) {
      if (i) tail << ", ";
      tail << summary.new_classes[i].tuple_text();
    }
    tail << "}\n";
  }
  out << tail.str();
  if (cfg.logging) detail::append_log(opts.root, tail.str());
  return summary;
}

// Classifies every matrix line of a file; parse or classification problems
// are reported per line and skipped.
template <class F>
std::vector<std::pair<std::string, TorProfile>> classify_file(
    const F& k, const std::filesystem::path& path, std::ostream& diagnostics) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot read " + path.string());
  std::vector<std::pair<std::string, TorProfile>> out;
  std::string line;
  int line_no = 0;
  std::set<std::string> profiles_seen;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Ideal<F> I(k, parse_generators(k, line));
      Classified<F> c = classify_ideal(k, I);
      out.push_back({line, c.profile});
      profiles_seen.insert(ClassKey::from_profile(c.profile).tuple_text());
    } catch (const std::exception& e) {
      diagnostics << path.string() << ":" << line_no << ": " << e.what() << "\n";
    }
  }
  if (profiles_seen.size() > 1)
    diagnostics << path.string() << ": lines classify to " << profiles_seen.size()
                << " different profiles\n";
  return out;
}

// Observation grid for one (m,n)-box: (p,q) cells for class H, (p,r) cells
// for classes B, G, T.
struct BoxGrid {
  int m = 0, n = 0;
  std::map<std::pair<int, int>, long> h_cells;    // (p,q) -> count
  std::map<std::pair<int, int>, long> bgt_cells;  // (p,r) -> count
};

inline BoxGrid grid_report(const ClassDatabase& db, int m, int n) {
  BoxGrid grid{m, n, {}, {}};
  for (const auto& [key, count] : db.box_counts(m, n)) {
    if (key.cls == 'H')
      grid.h_cells[{key.p, key.q}] += count;
    else
      grid.bgt_cells[{key.p, key.r}] += count;
  }
  return grid;
}

// Optional user-supplied permissibility predicate: lines of the form
//   <class-letter> <m> <n> <a> <b>
// listing permissible cells, (a,b) = (p,q) for H and (p,r) for B/G/T.
// Grids mark observed cells that the file does not list.
class PermissibilityFile {
 public:
  static PermissibilityFile load(const std::filesystem::path& path) {
    PermissibilityFile out;
    std::ifstream is(path);
    if (!is) throw io_error("cannot read " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      char cls;
      int m, n, a, b;
      if (!(ss >> cls >> m >> n >> a >> b))
        throw parse_error(path.string() + ":" + std::to_string(line_no) +
                          ": expected 'class m n a b'");
      out.cells_.insert({cls == 'H' ? 'H' : 'X', m, n, a, b});
    }
    return out;
  }

  bool permits(char cls, int m, int n, int a, int b) const {
    return cells_.count({cls == 'H' ? 'H' : 'X', m, n, a, b}) > 0;
  }
  bool empty() const { return cells_.empty(); }

 private:
  std::set<std::tuple<char, int, int, int, int>> cells_;
};

// Text rendering of one box.  Cells observed but outside the permissibility
// predicate (when one is supplied) are flagged with '!'; G cells breaking the
// conjectured bound on r are flagged even without a predicate file.
bool g_conjecture_permissible(int m, int n, int r);

inline std::string render_grid(const BoxGrid& grid, const PermissibilityFile* permissible) {
  std::ostringstream os;
  auto render = [&](const char* title, const std::map<std::pair<int, int>, long>& cells,
                    bool is_h) {
    os << "(" << grid.m << "," << grid.n << ") " << title << "\n";
    if (cells.empty()) {
      os << "  (none observed)\n";
      return;
    }
    int max_a = 0, max_b = 0;
    for (const auto& [ab, _] : cells) {
      max_a = std::max(max_a, ab.first);
      max_b = std::max(max_b, ab.second);
    }
    os << "      ";
    for (int b = 0; b <= max_b; ++b) os << (is_h ? " q=" : " r=") << b << "\t";
    os << "\n";
    for (int a = 0; a <= max_a; ++a) {
      os << "  p=" << a << " ";
      for (int b = 0; b <= max_b; ++b) {
        auto it = cells.find({a, b});
        os << " ";
        if (it == cells.end()) {
          os << ".";
        } else {
          os << it->second;
          bool flagged = false;
          if (permissible && !permissible->empty() &&
              !permissible->permits(is_h ? 'H' : 'X', grid.m, grid.n, a, b))
            flagged = true;
          if (!is_h && a == 0 && b >= 2 && grid.n >= 2 &&
              !g_conjecture_permissible(grid.m, grid.n, b))
            flagged = true;
          if (flagged) os << "!";
        }
        os << "\t";
      }
      os << "\n";
    }
  };
  render("class H, (p,q) cells", grid.h_cells, true);
  render("classes B/G/T, (p,r) cells", grid.bgt_cells, false);
  return os.str();
}

// CSV rows "m,n,class,p,q,r,count" in class.txt order.
inline std::string csv_report(const ClassDatabase& db, std::optional<int> m,
                              std::optional<int> n) {
  std::ostringstream os;
  os << "m,n,class,p,q,r,count\n";
  for (const auto& [key, count] : db.all_counts()) {
    if (m && key.m != *m) continue;
    if (n && key.n != *n) continue;
    os << key.m << ',' << key.n << ',' << key.cls << ',' << key.p << ',' << key.q << ','
       << key.r << ',' << count << "\n";
  }
  return os.str();
}

// Predominance analysis for one (m,n)-box.  A class is predominant when it
// was observed at least `factor` times as often as every other class in the
// box; otherwise every class within a factor of the most common one is
// shortlisted.
struct PredominanceResult {
  bool predominant = false;
  std::vector<ClassKey> keys;  // singleton when predominant
};

inline PredominanceResult predominant_classes(const std::map<ClassKey, long>& counts,
                                              long factor = 7) {
  if (counts.empty())
    throw std::invalid_argument("predominant_classes: no observations");
  long max_count = 0;
  for (const auto& [_, c] : counts) max_count = std::max(max_count, c);
  for (const auto& [key, c] : counts) {
    bool wins = true;
    for (const auto& [other, oc] : counts) {
      if (other == key) continue;
      if (c < factor * oc) {
        wins = false;
        break;
      }
    }
    if (wins) return {true, {key}};
  }
  PredominanceResult out;
  for (const auto& [key, c] : counts)
    if (factor * c >= max_count) out.keys.push_back(key);
  return out;
}

// Conjectured bounds on r for class G: for n=2, 2<=r<=m-5 or r=m-3; for n>=3,
// 2<=r<=m-4.
inline bool g_conjecture_permissible(int m, int n, int r) {
  if (r < 2 || n < 2)
    throw std::invalid_argument("g_conjecture_permissible requires r >= 2 and n >= 2");
  if (n == 2) return (2 <= r && r <= m - 5) || r == m - 3;
  return 2 <= r && r <= m - 4;
}

}  // namespace codim3
