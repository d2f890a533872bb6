#pragma once

// Reductivity: the least number of I-moves that turn a curve into one with a
// reducible crossing (a word with a free chord).
//
// Level-synchronized BFS over canonical word keys. Every I-move drops one
// crossing, so levels never share keys. The search stops at depth 4; running
// out of depth raises BoundViolation instead of returning 5.
//
// Among minimal witnesses the one whose sequence of canonical keys (level 1
// first) is lexicographically least is returned.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sphcurve/enumeration.hpp"
#include "sphcurve/splice.hpp"

namespace sphcurve {

inline constexpr int kReductivityBound = 4;

struct ReductivityResult {
  int value = 0;
  CanonicalKey start;
  std::vector<SpliceStep> witness;  // value steps, ending at a word with a free chord

  // Replays the witness from `start`: keys chain, crossings strictly drop and
  // the last word has a free chord.
  bool verify() const {
    if (static_cast<int>(witness.size()) != value) return false;
    CanonicalKey at = start;
    for (const auto& step : witness) {
      if (step.kind != SpliceKind::inverse_half_twisted || step.before != at) return false;
      if (!step.replays()) return false;
      if (step.after.letters.size() + 2 != step.before.letters.size()) return false;
      at = step.after;
    }
    return has_free_chord(to_word(at));
  }
};

struct ReductivityOptions {
  bool check_realizable_each_node = false;
};

inline ReductivityResult reductivity(const GaussWord& w, ReductivityOptions opt = {}) {
  if (!realizable(w)) throw NotRealizable("word " + w.str() + " has no sphere embedding");
  ReductivityResult result;
  result.start = canonical_key(w);
  if (has_free_chord(w)) return result;

  // children[d][parent] = (child, label) edges from level d to d + 1
  std::vector<std::set<CanonicalKey>> levels{{result.start}};
  std::vector<std::map<CanonicalKey, std::vector<std::pair<CanonicalKey, Label>>>> children;
  int found_depth = -1;
  for (int depth = 1; depth <= kReductivityBound && found_depth < 0; ++depth) {
    auto& edges = children.emplace_back();
    std::set<CanonicalKey> next;
    for (const auto& key : levels.back()) {
      const auto word = to_word(key);
      if (word.crossings() == 1) continue;
      auto& out = edges[key];
      for (Label p = 1; p <= word.crossings(); ++p) {
        const auto child = apply_I(word, p);
        if (opt.check_realizable_each_node && !realizable(child)) {
          throw InvariantError("I at " + std::to_string(p) + " of " + key.str() + " left the realizable words");
        }
        auto ck = canonical_key(child);
        out.emplace_back(ck, p);
        if (has_free_chord(child)) found_depth = depth;
        next.insert(std::move(ck));
      }
    }
    levels.push_back(std::move(next));
  }
  if (found_depth < 0) {
    throw BoundViolation("no reducible curve within " + std::to_string(kReductivityBound) + " I-moves from " +
                         result.start.str());
  }

  // Keep only nodes that can still reach a reducible word at found_depth.
  std::vector<std::set<CanonicalKey>> alive(static_cast<std::size_t>(found_depth) + 1);
  for (const auto& k : levels[static_cast<std::size_t>(found_depth)]) {
    if (has_free_chord(to_word(k))) alive.back().insert(k);
  }
  for (int d = found_depth - 1; d >= 0; --d) {
    for (const auto& [parent, kids] : children[static_cast<std::size_t>(d)]) {
      for (const auto& [child, label] : kids) {
        if (alive[static_cast<std::size_t>(d) + 1].count(child)) {
          alive[static_cast<std::size_t>(d)].insert(parent);
          break;
        }
      }
    }
  }
  CanonicalKey at = result.start;
  for (int d = 0; d < found_depth; ++d) {
    const auto& kids = children[static_cast<std::size_t>(d)].at(at);
    const std::pair<CanonicalKey, Label>* best = nullptr;
    for (const auto& kid : kids) {
      if (!alive[static_cast<std::size_t>(d) + 1].count(kid.first)) continue;
      if (!best || kid.first < best->first || (kid.first == best->first && kid.second < best->second)) best = &kid;
    }
    SpliceStep step;
    step.kind = SpliceKind::inverse_half_twisted;
    step.at = best->second;
    step.before = at;
    step.after = best->first;
    result.witness.push_back(step);
    at = best->first;
  }
  result.value = found_depth;
  return result;
}

struct SurveyRow {
  int n = 0;
  std::size_t curves = 0;
  std::size_t words = 0;
  std::vector<std::size_t> histogram = std::vector<std::size_t>(kReductivityBound + 1, 0);
  int max = 0;
  std::vector<ReductivityResult> max_four;  // every r = 4 curve, with its witness
  std::vector<EmbeddingKey> max_four_curves;
};

struct SurveyOptions {
  bool identify_mirror = true;
  unsigned jobs = 1;
  std::filesystem::path cache_dir;
};

// Reductivity histogram per crossing number over the full census. The value
// depends only on the word, so it is computed once per distinct word.
inline std::vector<SurveyRow> survey(int n_max, const SurveyOptions& opt = {}) {
  if (n_max < 1) throw InputError("survey needs n_max >= 1");
  std::vector<SurveyRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto census = load_or_build_census(n, {opt.identify_mirror, true, false}, opt.cache_dir, opt.jobs);
    std::map<std::vector<Label>, std::size_t> word_index;
    std::vector<std::vector<Label>> words;
    for (const auto& k : census.curves) {
      if (word_index.try_emplace(k.letters, words.size()).second) words.push_back(k.letters);
    }
    std::vector<ReductivityResult> results(words.size());
    parallel_for(words.size(), opt.jobs, [&](std::size_t i) {
      results[i] = reductivity(GaussWord::from_letters(words[i]));
    });
    SurveyRow row;
    row.n = n;
    row.curves = census.size();
    row.words = words.size();
    for (const auto& k : census.curves) {
      const auto& r = results[word_index.at(k.letters)];
      ++row.histogram[static_cast<std::size_t>(r.value)];
      row.max = std::max(row.max, r.value);
      if (r.value == kReductivityBound) {
        row.max_four.push_back(r);
        row.max_four_curves.push_back(k);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sphcurve
