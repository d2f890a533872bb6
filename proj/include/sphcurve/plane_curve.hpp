#pragma once

// Sphere embeddings of Gauss words.
//
// A PlaneCurve is a Gauss word plus one chirality sign per crossing. The sign
// picks which of the two transversal rotation schemes the crossing uses:
//
//   +1 : counter-clockwise order  in1, in2, out1, out2
//   -1 : counter-clockwise order  in1, out2, out1, in2
//
// where in_k/out_k are the arriving/leaving half-edges at the k-th visit of
// the crossing (k = 1 for the lower word position). Together with the curve
// edges this is a combinatorial map; it lies on the sphere iff face tracing
// yields n + 2 faces.
//
// Half-edges ("darts") are numbered 2p (leaving position p) and 2p+1
// (arriving at position p). Faces are the orbits of sigma∘alpha, so the
// orbit element d means "the face walk runs along the edge of d, starting at
// d's crossing". A dart of the form 2p runs with the curve, 2p+1 against it.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphcurve/gauss_word.hpp"

namespace sphcurve {

using Sign = std::int8_t;

struct Face {
  int index = 0;
  int size = 0;
  std::vector<int> darts;        // boundary walk, one dart per edge
  std::vector<Label> crossings;  // crossing at the start of each boundary dart
  bool coherent = true;
};

// Canonical identity of a sphere embedding: least (letters, signs) over all
// rotations, both traversal directions and, when requested, mirroring.
struct EmbeddingKey {
  std::vector<Label> letters;
  std::vector<Sign> signs;  // signs[label - 1]

  auto operator<=>(const EmbeddingKey&) const = default;
  bool operator==(const EmbeddingKey&) const = default;

  int crossings() const noexcept { return static_cast<int>(signs.size()); }

  // "1 2 3 1 2 3 [+,+,+]"
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters[i]);
    }
    out += " [";
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (i) out += ',';
      out += signs[i] > 0 ? '+' : '-';
    }
    out += ']';
    return out;
  }
};

namespace detail {

inline int out_dart(int p) { return 2 * p; }
inline int in_dart(int p) { return 2 * p + 1; }

// Counter-clockwise darts around the crossing with occurrences p1 < p2.
inline std::array<int, 4> rotation(int p1, int p2, Sign s) {
  if (s > 0) return {in_dart(p1), in_dart(p2), out_dart(p1), out_dart(p2)};
  return {in_dart(p1), out_dart(p2), out_dart(p1), in_dart(p2)};
}

inline int alpha(int d, int len) {
  const int p = d / 2;
  if (d % 2 == 0) return in_dart(p + 1 == len ? 0 : p + 1);
  return out_dart(p == 0 ? len - 1 : p - 1);
}

struct MapData {
  std::vector<int> sigma;
  std::vector<int> face_of;
  int face_count = 0;
};

inline MapData trace(const GaussWord& w, std::span<const Sign> signs) {
  const int len = static_cast<int>(w.size());
  MapData m;
  m.sigma.assign(static_cast<std::size_t>(2 * len), -1);
  for (Label a = 1; a <= w.crossings(); ++a) {
    const auto p = w.positions(a);
    const auto rot = rotation(p[0], p[1], signs[static_cast<std::size_t>(a - 1)]);
    for (int k = 0; k < 4; ++k) m.sigma[static_cast<std::size_t>(rot[k])] = rot[(k + 1) % 4];
  }
  m.face_of.assign(m.sigma.size(), -1);
  for (int d0 = 0; d0 < 2 * len; ++d0) {
    if (m.face_of[static_cast<std::size_t>(d0)] >= 0) continue;
    int d = d0;
    do {
      m.face_of[static_cast<std::size_t>(d)] = m.face_count;
      d = m.sigma[static_cast<std::size_t>(alpha(d, len))];
    } while (d != d0);
    ++m.face_count;
  }
  return m;
}

// The same embedding read from position `start` in direction `dir`,
// optionally mirrored. Returns relabeled letters and signs.
inline EmbeddingKey transformed(const GaussWord& w, std::span<const Sign> signs, int start, int dir,
                                bool mirror) {
  const int len = static_cast<int>(w.size());
  const int n = w.crossings();
  auto q = [&](int p) { return dir > 0 ? ((p - start) % len + len) % len : ((start - p) % len + len) % len; };

  EmbeddingKey key;
  key.letters = relabeled(w.letters(), static_cast<std::size_t>(start), dir, n);
  key.signs.assign(static_cast<std::size_t>(n), 0);
  for (Label a = 1; a <= n; ++a) {
    const auto p = w.positions(a);
    auto rot = rotation(p[0], p[1], signs[static_cast<std::size_t>(a - 1)]);
    std::array<int, 4> moved{};
    for (int k = 0; k < 4; ++k) {
      const int d = rot[k];
      const int np = q(d / 2);
      const bool is_out = d % 2 == 0;
      moved[k] = (is_out == (dir > 0)) ? out_dart(np) : in_dart(np);
    }
    if (mirror) std::swap(moved[1], moved[3]);
    const int q1 = std::min(q(p[0]), q(p[1]));
    const int q2 = std::max(q(p[0]), q(p[1]));
    const int at = static_cast<int>(std::find(moved.begin(), moved.end(), in_dart(q1)) - moved.begin());
    const Sign s = moved[(at + 1) % 4] == in_dart(q2) ? Sign{1} : Sign{-1};
    key.signs[static_cast<std::size_t>(key.letters[q1] - 1)] = s;
  }
  return key;
}

}  // namespace detail

class PlaneCurve {
 public:
  // Empty when the signs do not give a sphere embedding.
  static std::optional<PlaneCurve> embed(const GaussWord& w, std::vector<Sign> signs) {
    if (static_cast<int>(signs.size()) != w.crossings()) {
      throw MalformedWord("expected " + std::to_string(w.crossings()) + " signs, got " +
                          std::to_string(signs.size()));
    }
    for (Sign s : signs) {
      if (s != 1 && s != -1) throw MalformedWord("signs must be +1 or -1");
    }
    auto m = detail::trace(w, signs);
    if (m.face_count != w.crossings() + 2) return std::nullopt;
    return PlaneCurve(w, std::move(signs), std::move(m));
  }

  static PlaneCurve from_key(const EmbeddingKey& key) {
    auto c = embed(GaussWord::from_letters(key.letters), key.signs);
    if (!c) throw NotRealizable("signed word " + key.str() + " is not a sphere embedding");
    return std::move(*c);
  }

  const GaussWord& word() const noexcept { return word_; }
  std::span<const Sign> signs() const noexcept { return signs_; }
  int crossings() const noexcept { return word_.crossings(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int i) const { return faces_.at(static_cast<std::size_t>(i)); }
  int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }

  int sigma(int d) const { return sigma_.at(static_cast<std::size_t>(d)); }
  int alpha(int d) const { return detail::alpha(d, static_cast<int>(word_.size())); }
  int face_of(int d) const { return face_of_.at(static_cast<std::size_t>(d)); }
  Label crossing_of(int d) const { return word_[static_cast<std::size_t>(d / 2)]; }
  // True when the face walk along d runs with the curve orientation.
  static bool with_curve(int d) noexcept { return d % 2 == 0; }

  // Number of k-gons for k = 0..max size (index k).
  std::vector<int> census() const {
    int max_size = 0;
    for (const auto& f : faces_) max_size = std::max(max_size, f.size);
    std::vector<int> c(static_cast<std::size_t>(max_size) + 1, 0);
    for (const auto& f : faces_) ++c[static_cast<std::size_t>(f.size)];
    return c;
  }

  int count_gons(int k) const {
    return static_cast<int>(std::count_if(faces_.begin(), faces_.end(), [k](const Face& f) { return f.size == k; }));
  }

  // Faces across each boundary edge of `f`, in boundary order.
  std::vector<int> edge_neighbors(const Face& f) const {
    std::vector<int> out;
    for (int d : f.darts) out.push_back(face_of(alpha(d)));
    return out;
  }

  // Faces diagonally opposite `f` at each of its corners, in boundary order.
  std::vector<int> corner_opposites(const Face& f) const {
    std::vector<int> out;
    for (int d : f.darts) out.push_back(face_of(sigma(sigma(d))));
    return out;
  }

  // Distinct faces meeting at crossing a (3 for a reducible crossing, else 4).
  int regions_at(Label a) const {
    const auto p = word_.positions(a);
    std::array<int, 4> fs{face_of(detail::out_dart(p[0])), face_of(detail::in_dart(p[0])),
                          face_of(detail::out_dart(p[1])), face_of(detail::in_dart(p[1]))};
    std::sort(fs.begin(), fs.end());
    return static_cast<int>(std::unique(fs.begin(), fs.end()) - fs.begin());
  }

  PlaneCurve mirrored() const {
    std::vector<Sign> s(signs_.begin(), signs_.end());
    for (auto& x : s) x = static_cast<Sign>(-x);
    return *embed(word_, std::move(s));
  }

  // Same curve, traversed backwards from the last letter.
  PlaneCurve reversed() const {
    return from_key(detail::transformed(word_, signs_, static_cast<int>(word_.size()) - 1, -1, false));
  }

  EmbeddingKey key(bool identify_mirror) const {
    const auto canon = canonical_key(word_);
    std::optional<EmbeddingKey> best;
    const int len = static_cast<int>(word_.size());
    const int n = word_.crossings();
    std::vector<Label> scratch;
    for (int s = 0; s < len; ++s) {
      for (int dir : {+1, -1}) {
        if (detail::compare_relabeled(word_.letters(), static_cast<std::size_t>(s), dir, n, canon.letters,
                                      scratch) != 0) {
          continue;
        }
        for (bool m : {false, true}) {
          if (m && !identify_mirror) continue;
          auto k = detail::transformed(word_, signs_, s, dir, m);
          if (!best || k < *best) best = std::move(k);
        }
      }
    }
    return *best;
  }

  EmbeddingKey raw_key() const {
    EmbeddingKey k;
    k.letters.assign(word_.letters().begin(), word_.letters().end());
    k.signs = signs_;
    return k;
  }

 private:
  PlaneCurve(GaussWord w, std::vector<Sign> signs, detail::MapData m)
      : word_(std::move(w)), signs_(std::move(signs)), sigma_(std::move(m.sigma)), face_of_(std::move(m.face_of)) {
    faces_.resize(static_cast<std::size_t>(m.face_count));
    for (int i = 0; i < m.face_count; ++i) faces_[static_cast<std::size_t>(i)].index = i;
    std::vector<bool> done(sigma_.size());
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (done[static_cast<std::size_t>(d0)]) continue;
      Face& f = faces_[static_cast<std::size_t>(face_of(d0))];
      int d = d0;
      do {
        done[static_cast<std::size_t>(d)] = true;
        f.darts.push_back(d);
        f.crossings.push_back(crossing_of(d));
        d = sigma(alpha(d));
      } while (d != d0);
      f.size = static_cast<int>(f.darts.size());
      const bool first = with_curve(f.darts.front());
      f.coherent = std::all_of(f.darts.begin(), f.darts.end(), [&](int x) { return with_curve(x) == first; });
    }
  }

  GaussWord word_;
  std::vector<Sign> signs_;
  std::vector<int> sigma_;
  std::vector<int> face_of_;
  std::vector<Face> faces_;
};

inline const std::vector<Face>& faces(const PlaneCurve& c) { return c.faces(); }

inline bool coherence(const PlaneCurve& c, const Face& f) {
  (void)c;
  return f.coherent;
}

// No crossing is surrounded by fewer than four distinct regions.
inline bool is_reduced(const PlaneCurve& c) {
  for (Label a = 1; a <= c.crossings(); ++a) {
    if (c.regions_at(a) < 4) return false;
  }
  return true;
}

inline int face_count(const GaussWord& w, std::span<const Sign> signs) { return detail::trace(w, signs).face_count; }

// Every sphere embedding of w, one per canonical key, sorted by key. Each
// returned curve is stored in its canonical form.
inline std::vector<PlaneCurve> realize_all(const GaussWord& w, bool identify_mirror) {
  const int n = w.crossings();
  std::map<EmbeddingKey, bool> seen;
  std::vector<Sign> signs(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Sign{-1} : Sign{1};
    if (detail::trace(w, signs).face_count != n + 2) continue;
    auto c = PlaneCurve::embed(w, signs);
    seen.emplace(c->key(identify_mirror), true);
  }
  std::vector<PlaneCurve> out;
  out.reserve(seen.size());
  for (const auto& [k, unused] : seen) out.push_back(PlaneCurve::from_key(k));
  return out;
}

// Exhaustive sign search; does not consult the parity condition.
inline bool realizable(const GaussWord& w) {
  const int n = w.crossings();
  std::vector<Sign> signs(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Sign{-1} : Sign{1};
    if (detail::trace(w, signs).face_count == n + 2) return true;
  }
  return false;
}

}  // namespace sphcurve
