// The on-disk database of observed classes.
//
// Layout, relative to a root working directory:
//   data/classDat.txt            one machine-readable entry per (bucket, class)
//   data/class.txt               the same rows, human readable
//   data/<bucket>/<m-n-C-p-q-r>.txt   history of shortest representatives
// with bucket 0 for numTerms=0 runs and buckets 1-4 by the maximum term count
// of a minimal generator (4 meaning four or more).
//
// classDat.txt and class.txt are rewritten atomically (temp file + rename) on
// every record; per-class files only ever get strictly shorter representatives
// appended, so an interrupted run still loads.

#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "codim3/errors.hpp"
#include "codim3/text.hpp"
#include "codim3/tor.hpp"

namespace codim3 {

struct ClassKey {
  int m = 0, n = 0;
  char cls = 'H';  // one of B, C, G, H, T
  int p = 0, q = 0, r = 0;

  static ClassKey from_profile(const TorProfile& t) {
    return {t.m, t.n, static_cast<char>(t.cls), t.p, t.q, t.r};
  }

  std::string file_name() const {
    std::ostringstream os;
    os << m << '-' << n << '-' << cls << '-' << p << '-' << q << '-' << r << ".txt";
    return os.str();
  }
  std::string tuple_text() const {
    std::ostringstream os;
    os << '(' << m << ',' << n << ',' << cls << ',' << p << ',' << q << ',' << r << ')';
    return os.str();
  }
  // Display form of the class with its parameters: B, C(3), G(r), H(p,q), T.
  std::string display() const {
    switch (cls) {
      case 'G': return "G(" + std::to_string(r) + ")";
      case 'H': return "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case 'C': return "C(3)";
      default: return std::string(1, cls);
    }
  }

  friend bool operator==(const ClassKey& a, const ClassKey& b) {
    return a.m == b.m && a.n == b.n && a.cls == b.cls && a.p == b.p && a.q == b.q &&
           a.r == b.r;
  }
  // class.txt order: by m, then n, then class alphabetically, then p, q, r.
  friend bool operator<(const ClassKey& a, const ClassKey& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    return a.r < b.r;
  }
};

struct ClassEntry {
  std::string machine;  // matrix{{...}} line of the current best generators
  long count = 0;
  int bucket = 0;
};

// Bucket for a freshly classified ideal: 0 when the run used numTerms=0,
// otherwise the maximum term count over minimal generators, clamped to 4.
template <class F>
int bucket_for(const std::vector<Poly<F>>& mingens, int cfg_num_terms) {
  if (cfg_num_terms == 0) return 0;
  int max_terms = 1;
  for (const auto& g : mingens)
    max_terms = std::max(max_terms, static_cast<int>(g.term_count()));
  return std::min(4, max_terms);
}

namespace detail {

inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw io_error("cannot write " + tmp.string());
    os << content;
    if (!os.flush()) throw io_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("cannot rename " + tmp.string() + " to " + path.string());
}

inline long parse_long(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error(context + ": malformed number '" + s + "'");
  }
}

}  // namespace detail

class ClassDatabase {
 public:
  using EntryMap = std::map<std::pair<ClassKey, int>, ClassEntry>;

  explicit ClassDatabase(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path data_dir() const { return root_ / "data"; }
  const EntryMap& entries() const { return entries_; }

  bool contains(const ClassKey& key) const {
    for (const auto& [kb, _] : entries_)
      if (kb.first == key) return true;
    return false;
  }

  // Loads data/ under root, creating it (and nothing else) if absent.
  static ClassDatabase load(const std::filesystem::path& root) {
    ClassDatabase db(root);
    std::filesystem::path data = db.data_dir();
    if (!std::filesystem::exists(data)) {
      std::error_code ec;
      std::filesystem::create_directories(data, ec);
      if (ec) throw io_error("cannot create " + data.string());
      return db;
    }
    std::filesystem::path index = data / "classDat.txt";
    if (!std::filesystem::exists(index)) return db;

    std::ifstream is(index);
    if (!is) throw io_error("cannot read " + index.string());
    std::string line;
    int line_no = 0;
    // rows of one key appear bucket-ascending; match them against the bucket
    // folders that actually hold the per-class file
    std::map<ClassKey, std::vector<std::pair<std::string, long>>> rows;
    std::vector<ClassKey> order;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto [key, machine, count] = parse_class_dat_line(line, index.string(), line_no);
      if (!rows.count(key)) order.push_back(key);
      rows[key].push_back({machine, count});
    }
    for (const ClassKey& key : order) {
      std::vector<int> buckets;
      for (int b = 0; b <= 4; ++b)
        if (std::filesystem::exists(data / std::to_string(b) / key.file_name()))
          buckets.push_back(b);
      const auto& row_list = rows[key];
      if (buckets.size() != row_list.size())
        throw parse_error(index.string() + ": entry " + key.tuple_text() + " has " +
                          std::to_string(row_list.size()) + " rows but " +
                          std::to_string(buckets.size()) + " bucket files");
      for (std::size_t i = 0; i < buckets.size(); ++i)
        db.entries_[{key, buckets[i]}] =
            ClassEntry{row_list[i].first, row_list[i].second, buckets[i]};
    }
    return db;
  }

  // Records one classified ideal.  `machine_matrix` is the matrix{{...}}
  // rendering of its minimal generators.
  void record(const ClassKey& key, const std::string& machine_matrix, int bucket) {
    EntryMap updated = entries_;
    auto it = updated.find({key, bucket});
    bool append_line = false;
    if (it == updated.end()) {
      updated[{key, bucket}] = ClassEntry{machine_matrix, 1, bucket};
      append_line = true;
    } else {
      it->second.count += 1;
      if (human_length(machine_matrix) < human_length(it->second.machine)) {
        it->second.machine = machine_matrix;
        append_line = true;
      }
    }

    std::filesystem::path bucket_dir = data_dir() / std::to_string(bucket);
    if (append_line) {
      std::error_code ec;
      std::filesystem::create_directories(bucket_dir, ec);
      if (ec) throw io_error("cannot create " + bucket_dir.string());
      std::ofstream os(bucket_dir / key.file_name(), std::ios::binary | std::ios::app);
      if (!os) throw io_error("cannot append to " + (bucket_dir / key.file_name()).string());
      os << machine_matrix << '\n';
      if (!os.flush())
        throw io_error("write failed for " + (bucket_dir / key.file_name()).string());
    }
    write_indexes(updated);
    entries_ = std::move(updated);
  }

  // Observation counts per class key for one (m,n) box, summed over buckets.
  std::map<ClassKey, long> box_counts(int m, int n) const {
    std::map<ClassKey, long> out;
    for (const auto& [kb, entry] : entries_)
      if (kb.first.m == m && kb.first.n == n) out[kb.first] += entry.count;
    return out;
  }
  std::map<ClassKey, long> all_counts() const {
    std::map<ClassKey, long> out;
    for (const auto& [kb, entry] : entries_) out[kb.first] += entry.count;
    return out;
  }

  static std::size_t human_length(const std::string& machine_matrix) {
    return human_from_machine_matrix(machine_matrix).size();
  }

 private:
  static std::tuple<ClassKey, std::string, long> parse_class_dat_line(
      const std::string& line, const std::string& file, int line_no) {
    const std::string where = file + ":" + std::to_string(line_no);
    auto fail = [&](const std::string& why) -> std::tuple<ClassKey, std::string, long> {
      throw parse_error(where + ": " + why);
    };
    if (line.size() < 4 || line.substr(0, 2) != "((") return fail("expected '(('");
    std::size_t key_end = line.find("),(");
    if (key_end == std::string::npos) return fail("missing '),(' separator");
    std::string key_part = line.substr(2, key_end - 2);
    std::vector<std::string> fields;
    std::stringstream ss(key_part);
    std::string tok;
    while (std::getline(ss, tok, ',')) fields.push_back(tok);
    if (fields.size() != 6) return fail("class tuple needs 6 fields");
    if (fields[2].size() != 1 || std::string("BCGHT").find(fields[2]) == std::string::npos)
      return fail("unknown class letter '" + fields[2] + "'");
    ClassKey key{static_cast<int>(detail::parse_long(fields[0], where)),
                 static_cast<int>(detail::parse_long(fields[1], where)),
                 fields[2][0],
                 static_cast<int>(detail::parse_long(fields[3], where)),
                 static_cast<int>(detail::parse_long(fields[4], where)),
                 static_cast<int>(detail::parse_long(fields[5], where))};
    if (line.size() < key_end + 5 || line.substr(line.size() - 2) != "))")
      return fail("missing '))' terminator");
    std::string rest = line.substr(key_end + 3, line.size() - key_end - 5);
    std::size_t comma = rest.rfind(',');
    if (comma == std::string::npos) return fail("missing count");
    std::string machine = rest.substr(0, comma);
    long count = detail::parse_long(rest.substr(comma + 1), where);
    if (machine.size() < 10 || machine.substr(0, 8) != "matrix{{" ||
        machine.substr(machine.size() - 2) != "}}")
      return fail("generator matrix must be matrix{{...}}");
    if (count < 1) return fail("count must be positive");
    return {key, machine, count};
  }

  void write_indexes(const EntryMap& entries) const {
    std::string dat, txt;
    for (const auto& [kb, entry] : entries) {
      const ClassKey& key = kb.first;
      dat += "(" + key.tuple_text() + ",(" + entry.machine + "," +
             std::to_string(entry.count) + "))\n";
      txt += "| " + std::to_string(key.m) + " " + std::to_string(key.n) + " " + key.cls +
             " " + std::to_string(key.p) + " " + std::to_string(key.q) + " " +
             std::to_string(key.r) + " " + std::to_string(entry.count) + " | " +
             human_from_machine_matrix(entry.machine) + " |\n";
    }
    detail::write_atomic(data_dir() / "classDat.txt", dat);
    detail::write_atomic(data_dir() / "class.txt", txt);
  }

  std::filesystem::path root_;
  EntryMap entries_;
};

}  // namespace codim3
