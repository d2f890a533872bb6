#pragma once

// Independent reference implementations used to check the library. They
// share no code with include/sphcurve beyond plain std containers.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline Word relabel(const Word& w) {
  std::map<int, int> m;
  Word out;
  for (int x : w) {
    auto it = m.find(x);
    if (it == m.end()) it = m.emplace(x, static_cast<int>(m.size()) + 1).first;
    out.push_back(it->second);
  }
  return out;
}

// Alternating endpoints in sorted position order.
inline bool interlaced(const Word& w, int a, int b) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] == a || w[i] == b) ends.emplace_back(i, w[i]);
  return ends.size() == 4 && ends[0].second != ends[1].second && ends[1].second != ends[2].second;
}

inline std::set<int> free_chords(const Word& w) {
  std::set<int> labels(w.begin(), w.end()), out;
  for (int a : labels) {
    bool any = false;
    for (int b : labels) any = any || (a != b && interlaced(w, a, b));
    if (!any) out.insert(a);
  }
  return out;
}

inline Word canonical(const Word& w) {
  const int len = static_cast<int>(w.size());
  Word best;
  for (int s = 0; s < len; ++s) {
    Word fwd, bwd;
    for (int k = 0; k < len; ++k) {
      fwd.push_back(w[(s + k) % len]);
      bwd.push_back(w[((s - k) % len + len) % len]);
    }
    for (const auto& c : {relabel(fwd), relabel(bwd)})
      if (best.empty() || c < best) best = c;
  }
  return best;
}

// p B p A -> reverse(B) A, labels kept.
inline Word apply_I(const Word& w, int p) {
  std::vector<int> pos;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] == p) pos.push_back(i);
  Word rotated(w.begin() + pos[0], w.end());
  rotated.insert(rotated.end(), w.begin(), w.begin() + pos[0]);
  const int gap = pos[1] - pos[0];
  Word b(rotated.begin() + 1, rotated.begin() + gap);
  Word a(rotated.begin() + gap + 1, rotated.end());
  std::reverse(b.begin(), b.end());
  b.insert(b.end(), a.begin(), a.end());
  return b;
}

// Faces of the 4-regular map given by a word and one sign per label.
// Half-edge ends are (position, leaving?) pairs. At a crossing with
// occurrences i < j the counterclockwise order of ends is
//   sign +1: (i,in) (j,in) (i,out) (j,out)
//   sign -1: (i,in) (j,out) (i,out) (j,in)
// A face walk leaves along an end, arrives at the other end of that edge,
// and continues from the next end counterclockwise after the arrival end.
struct FaceInfo {
  int size = 0;
  bool coherent = true;
};

inline std::vector<FaceInfo> faces(const Word& w, const std::map<int, int>& signs) {
  using End = std::pair<int, bool>;  // (position, leaving)
  const int len = static_cast<int>(w.size());
  std::map<End, End> ccw_next;
  std::map<int, std::vector<int>> where;
  for (int i = 0; i < len; ++i) where[w[i]].push_back(i);
  for (const auto& [label, pos] : where) {
    const int i = pos[0], j = pos[1];
    std::array<End, 4> order;
    if (signs.at(label) > 0) order = {End{i, false}, End{j, false}, End{i, true}, End{j, true}};
    else order = {End{i, false}, End{j, true}, End{i, true}, End{j, false}};
    for (int k = 0; k < 4; ++k) ccw_next[order[k]] = order[(k + 1) % 4];
  }
  auto other_end = [&](End e) {
    return e.second ? End{(e.first + 1) % len, false} : End{(e.first - 1 + len) % len, true};
  };
  std::set<End> seen;
  std::vector<FaceInfo> out;
  for (const auto& [start, unused] : ccw_next) {
    if (seen.count(start)) continue;
    FaceInfo f;
    int with = 0, against = 0;
    End e = start;
    while (!seen.count(e)) {
      seen.insert(e);
      ++f.size;
      (e.second ? with : against)++;
      e = ccw_next.at(other_end(e));
    }
    f.coherent = with == 0 || against == 0;
    out.push_back(f);
  }
  return out;
}

inline bool realizable(const Word& w) {
  std::set<int> labels(w.begin(), w.end());
  const int n = static_cast<int>(labels.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::map<int, int> signs;
    int bit = 0;
    for (int a : labels) signs[a] = (mask >> bit++) & 1 ? 1 : -1;
    if (static_cast<int>(faces(w, signs).size()) == n + 2) return true;
  }
  return false;
}

// Least number of I-moves to a word with a free chord, by iterative
// deepening over raw words (no canonical forms, no memo).
inline bool reach(const Word& w, int depth) {
  if (!free_chords(w).empty()) return true;
  if (depth == 0 || w.size() <= 2) return false;
  std::set<int> labels(w.begin(), w.end());
  for (int p : labels)
    if (reach(apply_I(w, p), depth - 1)) return true;
  return false;
}

inline int reductivity(const Word& w, int cap = 4) {
  for (int d = 0; d <= cap; ++d)
    if (reach(w, d)) return d;
  return -1;
}

// Every double-occurrence word on n labels in restricted-growth form.
inline void all_words(int n, Word& cur, std::vector<int>& used, int next, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == 2 * n) {
    out.push_back(cur);
    return;
  }
  for (int a = 1; a < next; ++a) {
    if (used[a] != 1) continue;
    ++used[a];
    cur.push_back(a);
    all_words(n, cur, used, next, out);
    cur.pop_back();
    --used[a];
  }
  if (next <= n) {
    ++used[next];
    cur.push_back(next);
    all_words(n, cur, used, next + 1, out);
    cur.pop_back();
    --used[next];
  }
}

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  Word cur;
  std::vector<int> used(static_cast<std::size_t>(n) + 2, 0);
  all_words(n, cur, used, 1, out);
  return out;
}

inline std::vector<Word> canonical_words(int n) {
  std::set<Word> s;
  for (const auto& w : all_words(n)) s.insert(canonical(w));
  return {s.begin(), s.end()};
}

inline Word random_word(int n, std::mt19937& rng) {
  Word w;
  for (int a = 1; a <= n; ++a) {
    w.push_back(a);
    w.push_back(a);
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace oracle
