#pragma once

// Exhaustive censuses of spherical curves with n crossings.
//
// Two generators that share nothing but the final EmbeddingKey:
//
//  * enumerate_words: restricted-growth double-occurrence words, kept when
//    they are their own canonical key, then every sphere embedding of each
//    word via realize_all. The parity condition prunes branches early.
//  * enumerate_maps: walks the curve crossing by crossing and builds the
//    4-regular rotation system directly (first visit enters dart 0, the
//    second visit picks a chirality). Maps with n + 2 faces are deduplicated
//    by a dart-BFS map code, then converted to signed words.
//
// The two are mutual oracles; tests require identical key sets.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sphcurve/parallel.hpp"
#include "sphcurve/plane_curve.hpp"

namespace sphcurve {

inline constexpr const char* kGeneratorVersion = "sphcurve-census-1";
inline constexpr int kMaxEnumerationCrossings = 10;

struct CensusConvention {
  bool identify_mirror = true;
  bool identify_reversal = true;  // always on; recorded for file headers
  bool reduced_only = false;

  bool operator==(const CensusConvention&) const = default;
};

struct CurveCensus {
  int n = 0;
  CensusConvention convention;
  std::vector<EmbeddingKey> curves;  // sorted, unique

  std::size_t size() const noexcept { return curves.size(); }
  bool contains(const EmbeddingKey& k) const { return std::binary_search(curves.begin(), curves.end(), k); }
};

namespace detail {

// Backtracking over restricted-growth double-occurrence words. A chord's
// interlacement degree is known the moment it closes, which lets the parity
// condition (and, for reduced-only runs, the free-chord test) prune early.
class WordGenerator {
 public:
  WordGenerator(int n, bool reduced_only) : n_(n), reduced_only_(reduced_only) {
    letters_.assign(static_cast<std::size_t>(2 * n), 0);
    first_.assign(static_cast<std::size_t>(n) + 1, -1);
    second_.assign(static_cast<std::size_t>(n) + 1, -1);
  }

  struct State {
    std::vector<Label> letters;
    int length = 0;
  };

  // All prefixes of the given length reachable without pruning.
  std::vector<State> prefixes(int length) {
    std::vector<State> out;
    prefix_limit_ = length;
    collect_ = &out;
    extend(0, 1);
    collect_ = nullptr;
    return out;
  }

  void run_from(const State& s, const std::function<void(std::span<const Label>)>& leaf) {
    std::fill(letters_.begin(), letters_.end(), 0);
    std::fill(first_.begin(), first_.end(), -1);
    std::fill(second_.begin(), second_.end(), -1);
    Label next = 1;
    for (int t = 0; t < s.length; ++t) {
      const Label a = s.letters[static_cast<std::size_t>(t)];
      letters_[static_cast<std::size_t>(t)] = a;
      if (first_[static_cast<std::size_t>(a)] < 0) {
        first_[static_cast<std::size_t>(a)] = t;
        next = a + 1;
      } else {
        second_[static_cast<std::size_t>(a)] = t;
      }
    }
    leaf_ = &leaf;
    prefix_limit_ = -1;
    extend(s.length, next);
    leaf_ = nullptr;
  }

 private:
  int degree_on_close(Label a, int t) const {
    const int f = first_[static_cast<std::size_t>(a)];
    int deg = 0;
    for (int k = f + 1; k < t; ++k) {
      const Label b = letters_[static_cast<std::size_t>(k)];
      const int other = first_[static_cast<std::size_t>(b)] == k ? second_[static_cast<std::size_t>(b)]
                                                                 : first_[static_cast<std::size_t>(b)];
      if (other < 0 || other < f) ++deg;
    }
    return deg;
  }

  void extend(int t, Label next) {
    if (collect_ && t == prefix_limit_) {
      collect_->push_back(State{std::vector<Label>(letters_.begin(), letters_.begin() + t), t});
      return;
    }
    if (t == 2 * n_) {
      (*leaf_)(letters_);
      return;
    }
    int open = 0;
    for (Label a = 1; a < next; ++a) {
      if (second_[static_cast<std::size_t>(a)] < 0) ++open;
    }
    const int remaining = 2 * n_ - t;
    if (next <= n_ && remaining >= open + 2 * (n_ - next + 1)) {
      letters_[static_cast<std::size_t>(t)] = next;
      first_[static_cast<std::size_t>(next)] = t;
      extend(t + 1, next + 1);
      first_[static_cast<std::size_t>(next)] = -1;
    }
    for (Label a = 1; a < next; ++a) {
      if (second_[static_cast<std::size_t>(a)] >= 0) continue;
      const int deg = degree_on_close(a, t);
      if (deg % 2 != 0) continue;
      if (reduced_only_ && deg == 0) continue;
      letters_[static_cast<std::size_t>(t)] = a;
      second_[static_cast<std::size_t>(a)] = t;
      extend(t + 1, next);
      second_[static_cast<std::size_t>(a)] = -1;
    }
    letters_[static_cast<std::size_t>(t)] = 0;
  }

  int n_;
  bool reduced_only_;
  std::vector<Label> letters_;
  std::vector<int> first_, second_;
  int prefix_limit_ = -1;
  std::vector<State>* collect_ = nullptr;
  const std::function<void(std::span<const Label>)>* leaf_ = nullptr;
};

inline void check_n(int n) {
  if (n < 1 || n > kMaxEnumerationCrossings) {
    throw InputError("crossing number must be in 1.." + std::to_string(kMaxEnumerationCrossings) + ", got " +
                     std::to_string(n));
  }
}

}  // namespace detail

// Canonical Gauss words with n crossings that pass the parity condition
// (and, if requested, have no free chord). Not all are realizable.
inline std::vector<GaussWord> candidate_words(int n, bool reduced_only = false, unsigned jobs = 1) {
  detail::check_n(n);
  detail::WordGenerator gen(n, reduced_only);
  const auto shards = gen.prefixes(std::min(2 * n, 6));
  std::vector<std::vector<GaussWord>> per_shard(shards.size());
  parallel_for(shards.size(), jobs, [&](std::size_t i) {
    detail::WordGenerator local(n, reduced_only);
    std::function<void(std::span<const Label>)> leaf = [&](std::span<const Label> letters) {
      auto w = GaussWord::from_letters(letters);
      if (is_canonical(w)) per_shard[i].push_back(std::move(w));
    };
    local.run_from(shards[i], leaf);
  });
  std::vector<GaussWord> out;
  for (auto& s : per_shard)
    for (auto& w : s) out.push_back(std::move(w));
  return out;
}

inline CurveCensus enumerate_words(int n, CensusConvention conv = {}, unsigned jobs = 1) {
  const auto words = candidate_words(n, conv.reduced_only, jobs);
  std::vector<std::vector<EmbeddingKey>> found(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) {
    for (const auto& c : realize_all(words[i], conv.identify_mirror)) {
      if (conv.reduced_only && !is_reduced(c)) continue;
      found[i].push_back(c.key(conv.identify_mirror));
    }
  });
  CurveCensus census{n, conv, {}};
  for (auto& f : found)
    for (auto& k : f) census.curves.push_back(std::move(k));
  std::sort(census.curves.begin(), census.curves.end());
  census.curves.erase(std::unique(census.curves.begin(), census.curves.end()), census.curves.end());
  return census;
}

namespace detail {

// Rotation system built along the curve. Crossing v owns darts 4v..4v+3 in
// counter-clockwise order; a strand passes straight through (dart k to k+2).
struct TraversalMap {
  int n = 0;
  std::vector<int> sigma;  // 4n
  std::vector<int> alpha;  // 4n
};

inline int map_faces(const TraversalMap& m) {
  std::vector<bool> seen(m.sigma.size());
  int faces = 0;
  for (std::size_t d0 = 0; d0 < m.sigma.size(); ++d0) {
    if (seen[d0]) continue;
    ++faces;
    std::size_t d = d0;
    do {
      seen[d] = true;
      d = static_cast<std::size_t>(m.sigma[static_cast<std::size_t>(m.alpha[d])]);
    } while (d != d0);
  }
  return faces;
}

// Least BFS code of the map over all root darts (and the reversed rotation
// when mirrors are identified).
inline std::vector<int> map_code(const TraversalMap& m, bool identify_mirror) {
  const int darts = 4 * m.n;
  std::vector<int> sigma_inv(static_cast<std::size_t>(darts));
  for (int d = 0; d < darts; ++d) sigma_inv[static_cast<std::size_t>(m.sigma[static_cast<std::size_t>(d)])] = d;
  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(darts));
  std::vector<int> order(static_cast<std::size_t>(darts));
  std::vector<int> code;
  for (int flip = 0; flip < (identify_mirror ? 2 : 1); ++flip) {
    const auto& rot = flip ? sigma_inv : m.sigma;
    for (int root = 0; root < darts; ++root) {
      std::fill(label.begin(), label.end(), -1);
      int assigned = 0;
      label[static_cast<std::size_t>(root)] = assigned;
      order[static_cast<std::size_t>(assigned++)] = root;
      code.clear();
      bool worse = false;
      for (int i = 0; i < darts && !worse; ++i) {
        const int d = order[static_cast<std::size_t>(i)];
        for (int img : {rot[static_cast<std::size_t>(d)], m.alpha[static_cast<std::size_t>(d)]}) {
          auto& l = label[static_cast<std::size_t>(img)];
          if (l < 0) {
            l = assigned;
            order[static_cast<std::size_t>(assigned++)] = img;
          }
          code.push_back(l);
          if (!best.empty()) {
            const std::size_t at = code.size() - 1;
            if (code[at] > best[at]) { worse = true; break; }
            if (code[at] < best[at]) { best.clear(); }
          }
        }
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  }
  return best;
}

// Reads the curve off the map: straight-ahead walk from dart 0, sign +1 at a
// crossing iff the second arrival is the counter-clockwise successor of the
// first arrival.
inline EmbeddingKey map_to_signed_word(const TraversalMap& m, bool identify_mirror) {
  std::vector<Label> letters;
  std::vector<int> first_in(static_cast<std::size_t>(m.n), -1), second_in(static_cast<std::size_t>(m.n), -1);
  int entry = 0;
  for (int t = 0; t < 2 * m.n; ++t) {
    const int v = entry / 4;
    letters.push_back(v + 1);
    (first_in[static_cast<std::size_t>(v)] < 0 ? first_in[static_cast<std::size_t>(v)] : second_in[static_cast<std::size_t>(v)]) = entry;
    const int exit = 4 * v + (entry % 4 + 2) % 4;
    entry = m.alpha[static_cast<std::size_t>(exit)];
  }
  if (entry != 0) throw InvariantError("straight-ahead walk did not close");
  auto w = GaussWord::from_letters(letters);
  // from_letters relabels by first appearance, which matches vertex order here.
  std::vector<Sign> signs(static_cast<std::size_t>(m.n));
  for (int v = 0; v < m.n; ++v) {
    const int e1 = first_in[static_cast<std::size_t>(v)];
    signs[static_cast<std::size_t>(v)] = m.sigma[static_cast<std::size_t>(e1)] == second_in[static_cast<std::size_t>(v)] ? Sign{1} : Sign{-1};
  }
  auto c = PlaneCurve::embed(w, signs);
  if (!c) throw InvariantError("planar map converted to a non-planar signed word");
  return c->key(identify_mirror);
}

class MapGenerator {
 public:
  MapGenerator(int n, bool identify_mirror) : n_(n), mirror_(identify_mirror) {
    map_.n = n;
    map_.sigma.resize(static_cast<std::size_t>(4 * n));
    for (int d = 0; d < 4 * n; ++d) map_.sigma[static_cast<std::size_t>(d)] = 4 * (d / 4) + (d % 4 + 1) % 4;
    map_.alpha.assign(static_cast<std::size_t>(4 * n), -1);
    visits_.assign(static_cast<std::size_t>(n), 0);
  }

  std::map<std::vector<int>, TraversalMap> run() {
    found_.clear();
    // Visit 0 enters crossing 0 at dart 0 and leaves at dart 2.
    visits_[0] = 1;
    step(1, 1, 2);
    return std::move(found_);
  }

 private:
  void link(int exit, int entry) {
    map_.alpha[static_cast<std::size_t>(exit)] = entry;
    map_.alpha[static_cast<std::size_t>(entry)] = exit;
  }
  void unlink(int exit, int entry) {
    map_.alpha[static_cast<std::size_t>(exit)] = -1;
    map_.alpha[static_cast<std::size_t>(entry)] = -1;
  }

  // t visits made so far, `created` crossings exist, `exit` is the dart the
  // curve just left through.
  void step(int t, int created, int exit) {
    int open = 0;
    for (int v = 0; v < created; ++v) open += visits_[static_cast<std::size_t>(v)] == 1;
    if (2 * (n_ - created) + open > 2 * n_ - t) return;
    if (t == 2 * n_) {
      if (exit == 0 || map_.alpha[0] >= 0) return;
      link(exit, 0);
      if (map_faces(map_) == n_ + 2) found_.try_emplace(map_code(map_, mirror_), map_);
      unlink(exit, 0);
      return;
    }
    if (created < n_) {
      const int v = created;
      visits_[static_cast<std::size_t>(v)] = 1;
      link(exit, 4 * v);
      step(t + 1, created + 1, 4 * v + 2);
      unlink(exit, 4 * v);
      visits_[static_cast<std::size_t>(v)] = 0;
    }
    for (int v = 0; v < created; ++v) {
      if (visits_[static_cast<std::size_t>(v)] != 1) continue;
      visits_[static_cast<std::size_t>(v)] = 2;
      for (int entry_slot : {1, 3}) {
        const int entry = 4 * v + entry_slot;
        link(exit, entry);
        step(t + 1, created, 4 * v + (entry_slot + 2) % 4);
        unlink(exit, entry);
      }
      visits_[static_cast<std::size_t>(v)] = 1;
    }
  }

  int n_;
  bool mirror_;
  TraversalMap map_;
  std::vector<int> visits_;
  std::map<std::vector<int>, TraversalMap> found_;
};

}  // namespace detail

// Independent census over rotation systems. Practical up to n = 7.
inline CurveCensus enumerate_maps(int n, CensusConvention conv = {}) {
  detail::check_n(n);
  detail::MapGenerator gen(n, conv.identify_mirror);
  CurveCensus census{n, conv, {}};
  for (const auto& [code, m] : gen.run()) {
    auto key = detail::map_to_signed_word(m, conv.identify_mirror);
    if (conv.reduced_only && !is_reduced(PlaneCurve::from_key(key))) continue;
    census.curves.push_back(std::move(key));
  }
  std::sort(census.curves.begin(), census.curves.end());
  census.curves.erase(std::unique(census.curves.begin(), census.curves.end()), census.curves.end());
  return census;
}

// ---- census files ----------------------------------------------------------

inline void write_census(std::ostream& out, const CurveCensus& c) {
  out << "# sphcurve census\n";
  out << "# n=" << c.n << " mirror=" << (c.convention.identify_mirror ? 1 : 0)
      << " reversal=" << (c.convention.identify_reversal ? 1 : 0)
      << " reduced_only=" << (c.convention.reduced_only ? 1 : 0) << " generator=" << kGeneratorVersion
      << " count=" << c.curves.size() << "\n";
  for (const auto& k : c.curves) out << k.str() << "\n";
}

// One "GW1 [signs]" line to a key; the word is not re-canonicalized.
inline EmbeddingKey parse_signed_word(std::string_view line) {
  const auto open = line.find('[');
  if (open == std::string_view::npos) throw MalformedWord("missing sign suffix '[...]'");
  const auto close = line.find(']', open);
  if (close == std::string_view::npos) throw MalformedWord("unterminated sign suffix");
  EmbeddingKey k;
  std::istringstream words{std::string(line.substr(0, open))};
  for (Label l; words >> l;) k.letters.push_back(l);
  const auto w = GaussWord::from_letters(k.letters);
  if (std::vector<Label>(w.letters().begin(), w.letters().end()) != k.letters) {
    throw MalformedWord("signed words must use labels 1..n in order of first appearance");
  }
  for (auto ch : line.substr(open + 1, close - open - 1)) {
    if (ch == '+') k.signs.push_back(1);
    else if (ch == '-') k.signs.push_back(-1);
    else if (ch != ',' && ch != ' ') throw MalformedWord(std::string("bad sign character '") + ch + "'");
  }
  if (static_cast<int>(k.signs.size()) != w.crossings()) throw MalformedWord("sign count does not match crossings");
  return k;
}

inline CurveCensus read_census(std::istream& in) {
  CurveCensus c;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("# n=", 0) == 0) {
      std::istringstream h(line.substr(2));
      std::string field;
      while (h >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const auto name = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (name == "n") c.n = std::stoi(value);
        else if (name == "mirror") c.convention.identify_mirror = value == "1";
        else if (name == "reversal") c.convention.identify_reversal = value == "1";
        else if (name == "reduced_only") c.convention.reduced_only = value == "1";
        else if (name == "generator" && value != kGeneratorVersion) {
          throw InputError("census written by generator '" + value + "', expected '" + kGeneratorVersion + "'");
        }
      }
      header = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    c.curves.push_back(parse_signed_word(line));
  }
  if (!header) throw InputError("census file has no header line");
  std::sort(c.curves.begin(), c.curves.end());
  return c;
}

inline std::string census_file_name(int n, const CensusConvention& conv) {
  const auto h = std::hash<std::string>{}(kGeneratorVersion);
  std::ostringstream name;
  name << "census-n" << n << "-m" << conv.identify_mirror << "-r" << conv.reduced_only << "-" << std::hex
       << (h & 0xffffffffu) << ".gw";
  return name.str();
}

// Loads the census from `cache_dir` when present, otherwise builds it with
// enumerate_words and stores it there. An empty cache_dir disables caching.
inline CurveCensus load_or_build_census(int n, const CensusConvention& conv, const std::filesystem::path& cache_dir,
                                        unsigned jobs = 1) {
  if (!cache_dir.empty()) {
    const auto path = cache_dir / census_file_name(n, conv);
    if (std::ifstream in(path); in) {
      auto c = read_census(in);
      if (c.n == n && c.convention == conv) return c;
    }
  }
  auto c = enumerate_words(n, conv, jobs);
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    const auto path = cache_dir / census_file_name(n, conv);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      write_census(out, c);
    }
    std::filesystem::rename(tmp, path);
  }
  return c;
}

}  // namespace sphcurve
