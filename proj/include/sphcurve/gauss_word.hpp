#pragma once

// Double-occurrence words (Gauss words) and their chord diagrams.
//
// A word of length 2n lists the chord endpoints of a chord diagram in circle
// order; every crossing label appears exactly twice. Words are cyclic and
// carry no basepoint: the stored rotation is arbitrary and canonical_key()
// is the only identity that is stable across rotations, reversal and
// relabeling.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sphcurve/error.hpp"

namespace sphcurve {

using Label = int;

class GaussWord;

// Lexicographically least relabeled letter sequence over all rotations and
// both traversal directions.
struct CanonicalKey {
  std::vector<Label> letters;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters[i]);
    }
    return out;
  }
};

namespace detail {

// Relabels `letters` read cyclically from `start` in direction `dir` (+1/-1)
// so that labels are 1..n by order of first appearance.
inline std::vector<Label> relabeled(std::span<const Label> letters, std::size_t start, int dir,
                                    int n) {
  const std::size_t len = letters.size();
  std::vector<Label> map(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Label> out(len);
  Label next = 1;
  std::size_t pos = start;
  for (std::size_t k = 0; k < len; ++k) {
    const Label old = letters[pos];
    if (map[old] == 0) map[old] = next++;
    out[k] = map[old];
    pos = dir > 0 ? (pos + 1 == len ? 0 : pos + 1) : (pos == 0 ? len - 1 : pos - 1);
  }
  return out;
}

// Three-way comparison of the relabeled reading against `best` that stops at
// the first differing letter.
inline int compare_relabeled(std::span<const Label> letters, std::size_t start, int dir, int n,
                             std::span<const Label> best, std::vector<Label>& scratch) {
  const std::size_t len = letters.size();
  scratch.assign(static_cast<std::size_t>(n) + 1, 0);
  Label next = 1;
  std::size_t pos = start;
  for (std::size_t k = 0; k < len; ++k) {
    const Label old = letters[pos];
    if (scratch[old] == 0) scratch[old] = next++;
    const Label v = scratch[old];
    if (v != best[k]) return v < best[k] ? -1 : 1;
    pos = dir > 0 ? (pos + 1 == len ? 0 : pos + 1) : (pos == 0 ? len - 1 : pos - 1);
  }
  return 0;
}

}  // namespace detail

class GaussWord {
 public:
  // Validates and normalizes labels to 1..n by order of first appearance.
  // Labels may be any integers; each must occur exactly twice.
  static GaussWord from_letters(std::span<const Label> raw) {
    if (raw.empty()) throw MalformedWord("empty word");
    if (raw.size() % 2 != 0) throw MalformedWord("odd word length " + std::to_string(raw.size()));
    std::map<Label, int> count;
    for (Label l : raw) ++count[l];
    for (auto [l, c] : count) {
      if (c != 2) {
        throw MalformedWord("label " + std::to_string(l) + " occurs " + std::to_string(c) +
                            " time(s), expected 2");
      }
    }
    std::map<Label, Label> rename;
    std::vector<Label> letters;
    letters.reserve(raw.size());
    for (Label l : raw) {
      auto [it, inserted] = rename.try_emplace(l, static_cast<Label>(rename.size()) + 1);
      letters.push_back(it->second);
    }
    return GaussWord(std::move(letters));
  }

  static GaussWord from_letters(std::initializer_list<Label> raw) {
    return from_letters(std::span<const Label>(raw.begin(), raw.size()));
  }

  std::span<const Label> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int crossings() const noexcept { return static_cast<int>(letters_.size() / 2); }
  Label operator[](std::size_t i) const { return letters_[i]; }

  bool has_label(Label a) const noexcept { return a >= 1 && a <= crossings(); }

  // Positions of the two occurrences, ascending.
  std::array<int, 2> positions(Label a) const {
    require_label(a);
    return positions_[static_cast<std::size_t>(a)];
  }

  GaussWord reversed() const {
    std::vector<Label> r(letters_.rbegin(), letters_.rend());
    return from_letters(r);
  }

  GaussWord rotated(std::size_t k) const {
    std::vector<Label> r(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i) r[i] = letters_[(i + k) % letters_.size()];
    return from_letters(r);
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  bool operator==(const GaussWord& o) const { return letters_ == o.letters_; }

  void require_label(Label a) const {
    if (!has_label(a)) throw UnknownLabel("label " + std::to_string(a) + " not in word");
  }

 private:
  explicit GaussWord(std::vector<Label> letters) : letters_(std::move(letters)) {
    positions_.assign(letters_.size() / 2 + 1, {-1, -1});
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      auto& p = positions_[static_cast<std::size_t>(letters_[i])];
      (p[0] < 0 ? p[0] : p[1]) = static_cast<int>(i);
    }
  }

  std::vector<Label> letters_;
  std::vector<std::array<int, 2>> positions_;
};

inline GaussWord parse_word(std::string_view text) {
  std::vector<Label> raw;
  std::map<std::string, Label> ids;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string token(text.substr(i, j - i));
    auto [it, inserted] = ids.try_emplace(token, static_cast<Label>(ids.size()) + 1);
    raw.push_back(it->second);
    i = j;
  }
  if (raw.empty()) throw MalformedWord("empty word");
  return GaussWord::from_letters(raw);
}

// True iff chords a and b cross in the disk: exactly one endpoint of b lies
// strictly between the endpoints of a.
inline bool interlaced(const GaussWord& w, Label a, Label b) {
  w.require_label(a);
  w.require_label(b);
  if (a == b) throw UnknownLabel("interlaced() needs two distinct labels");
  const auto pa = w.positions(a);
  const auto pb = w.positions(b);
  const bool first_inside = pb[0] > pa[0] && pb[0] < pa[1];
  const bool second_inside = pb[1] > pa[0] && pb[1] < pa[1];
  return first_inside != second_inside;
}

class InterlacementGraph {
 public:
  explicit InterlacementGraph(const GaussWord& w) : n_(w.crossings()) {
    adj_.assign(static_cast<std::size_t>(n_) + 1, std::vector<bool>(static_cast<std::size_t>(n_) + 1));
    // Sweep the word once: the chords crossing `a` are exactly the labels
    // seen an odd number of times between a's two occurrences.
    for (Label a = 1; a <= n_; ++a) {
      const auto p = w.positions(a);
      std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
      for (int k = p[0] + 1; k < p[1]; ++k) seen[static_cast<std::size_t>(w[k])] ^= 1;
      for (Label b = 1; b <= n_; ++b) {
        if (seen[static_cast<std::size_t>(b)]) adj_[a][b] = true;
      }
    }
  }

  int size() const noexcept { return n_; }
  bool edge(Label a, Label b) const { return adj_.at(a).at(b); }

  int degree(Label a) const {
    return static_cast<int>(std::count(adj_.at(a).begin(), adj_.at(a).end(), true));
  }

  std::vector<std::pair<Label, Label>> edges() const {
    std::vector<std::pair<Label, Label>> out;
    for (Label a = 1; a <= n_; ++a)
      for (Label b = a + 1; b <= n_; ++b)
        if (adj_[a][b]) out.emplace_back(a, b);
    return out;
  }

  bool connected() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1);
    std::vector<Label> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
      Label a = stack.back();
      stack.pop_back();
      for (Label b = 1; b <= n_; ++b) {
        if (adj_[a][b] && !seen[b]) {
          seen[b] = true;
          ++count;
          stack.push_back(b);
        }
      }
    }
    return count == n_;
  }

 private:
  int n_;
  std::vector<std::vector<bool>> adj_;
};

// Labels whose chord crosses no other chord, ascending. A word has a free
// chord iff its curve has a reducible crossing.
inline std::vector<Label> free_chords(const GaussWord& w) {
  std::vector<Label> out;
  const int n = w.crossings();
  for (Label a = 1; a <= n; ++a) {
    const auto p = w.positions(a);
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    int odd = 0;
    for (int k = p[0] + 1; k < p[1]; ++k) {
      auto& s = seen[static_cast<std::size_t>(w[k])];
      s ^= 1;
      odd += s ? 1 : -1;
    }
    if (odd == 0) out.push_back(a);
  }
  return out;
}

inline bool has_free_chord(const GaussWord& w) {
  const int n = w.crossings();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (Label a = 1; a <= n; ++a) {
    const auto p = w.positions(a);
    std::fill(seen.begin(), seen.end(), 0);
    int odd = 0;
    for (int k = p[0] + 1; k < p[1]; ++k) {
      auto& s = seen[static_cast<std::size_t>(w[k])];
      s ^= 1;
      odd += s ? 1 : -1;
    }
    if (odd == 0) return true;
  }
  return false;
}

// Gauss's parity condition: every chord crosses an even number of chords.
// Necessary for realizability on the sphere, not sufficient.
inline bool even_interlacement(const GaussWord& w) {
  const int n = w.crossings();
  for (Label a = 1; a <= n; ++a) {
    const auto p = w.positions(a);
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    int odd = 0;
    for (int k = p[0] + 1; k < p[1]; ++k) {
      auto& s = seen[static_cast<std::size_t>(w[k])];
      s ^= 1;
      odd += s ? 1 : -1;
    }
    if (odd % 2 != 0) return false;
  }
  return true;
}

inline CanonicalKey canonical_key(const GaussWord& w) {
  const auto letters = w.letters();
  const int n = w.crossings();
  std::vector<Label> best = detail::relabeled(letters, 0, +1, n);
  std::vector<Label> scratch;
  for (std::size_t s = 0; s < letters.size(); ++s) {
    for (int dir : {+1, -1}) {
      if (detail::compare_relabeled(letters, s, dir, n, best, scratch) < 0) {
        best = detail::relabeled(letters, s, dir, n);
      }
    }
  }
  return CanonicalKey{std::move(best)};
}

// True iff the stored letter sequence already equals its canonical key.
inline bool is_canonical(const GaussWord& w) {
  const auto letters = w.letters();
  const int n = w.crossings();
  std::vector<Label> scratch;
  for (std::size_t s = 0; s < letters.size(); ++s) {
    for (int dir : {+1, -1}) {
      if (detail::compare_relabeled(letters, s, dir, n, letters, scratch) < 0) return false;
    }
  }
  return true;
}

inline GaussWord to_word(const CanonicalKey& key) { return GaussWord::from_letters(key.letters); }

}  // namespace sphcurve
