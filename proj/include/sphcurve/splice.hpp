#pragma once

// Half-twisted splice, its inverse I, and connected sum as word rewrites.
//
// Writing a word cyclically as  p B p A  (B, A the arcs between the two
// occurrences of p), I at p deletes p and reverses B:  reverse(B) A.
// The forward splice picks a segment B of the word and produces
// p reverse(B) p A for a fresh label p. Reversing A instead of B gives a
// word equal up to rotation and reversal.
//
// At word level the two twist directions of the forward splice coincide up
// to canonical form, so only one variant is modeled.

#include <string>
#include <utility>
#include <vector>

#include "sphcurve/gauss_word.hpp"

namespace sphcurve {

enum class SpliceKind { inverse_half_twisted, half_twisted, connected_sum };

inline const char* to_string(SpliceKind k) {
  switch (k) {
    case SpliceKind::inverse_half_twisted: return "inverse_half_twisted";
    case SpliceKind::half_twisted: return "half_twisted";
    case SpliceKind::connected_sum: return "connected_sum";
  }
  return "?";
}

// The letters of I(w, p) with w's labels kept (not renumbered).
inline std::vector<Label> apply_I_letters(const GaussWord& w, Label p) {
  w.require_label(p);
  if (w.crossings() == 1) throw DegenerateResult("I on a 1-crossing curve leaves no crossings");
  const auto pos = w.positions(p);
  const auto letters = w.letters();
  const std::size_t len = letters.size();
  std::vector<Label> out;
  out.reserve(len - 2);
  for (int k = pos[1] - 1; k > pos[0]; --k) out.push_back(letters[static_cast<std::size_t>(k)]);
  for (std::size_t k = 1; k < len - static_cast<std::size_t>(pos[1] - pos[0]); ++k) {
    out.push_back(letters[(static_cast<std::size_t>(pos[1]) + k) % len]);
  }
  return out;
}

inline GaussWord apply_I(const GaussWord& w, Label p) { return GaussWord::from_letters(apply_I_letters(w, p)); }

// Cut positions are gaps: gap k sits just before letter k (gap 2n is the end).
// Returns the new word; the fresh crossing is the label n + 1 before the
// result is normalized, i.e. label 1 of the returned word.
inline GaussWord half_twisted_splice(const GaussWord& w, int i, int j) {
  const int len = static_cast<int>(w.size());
  if (i < 0 || j > len || i >= j) {
    throw InvalidPosition("cut positions must satisfy 0 <= i < j <= " + std::to_string(len) + ", got " +
                          std::to_string(i) + ", " + std::to_string(j));
  }
  const auto letters = w.letters();
  const Label fresh = w.crossings() + 1;
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(len) + 2);
  out.push_back(fresh);
  for (int k = j - 1; k >= i; --k) out.push_back(letters[static_cast<std::size_t>(k)]);
  out.push_back(fresh);
  for (int k = j; k < len; ++k) out.push_back(letters[static_cast<std::size_t>(k)]);
  for (int k = 0; k < i; ++k) out.push_back(letters[static_cast<std::size_t>(k)]);
  return GaussWord::from_letters(out);
}

// Arc k is the curve segment after letter k. b, read starting just after its
// arc `arc_b`, is inserted into a's arc `arc_a`; b's labels move past a's.
inline GaussWord connected_sum(const GaussWord& a, int arc_a, const GaussWord& b, int arc_b) {
  const int la = static_cast<int>(a.size());
  const int lb = static_cast<int>(b.size());
  if (arc_a < 0 || arc_a >= la) throw InvalidPosition("arc " + std::to_string(arc_a) + " not in first word");
  if (arc_b < 0 || arc_b >= lb) throw InvalidPosition("arc " + std::to_string(arc_b) + " not in second word");
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(la + lb));
  for (int k = 0; k <= arc_a; ++k) out.push_back(a[static_cast<std::size_t>(k)]);
  for (int k = 1; k <= lb; ++k) out.push_back(b[static_cast<std::size_t>((arc_b + k) % lb)] + a.crossings());
  for (int k = arc_a + 1; k < la; ++k) out.push_back(a[static_cast<std::size_t>(k)]);
  return GaussWord::from_letters(out);
}

struct SpliceStep {
  SpliceKind kind = SpliceKind::inverse_half_twisted;
  Label at = 0;                    // crossing label in `before` (I only)
  std::pair<int, int> cuts{0, 0};  // gap pair in `before` (forward splice only)
  CanonicalKey before;
  CanonicalKey after;

  // Re-runs the step on `before` and returns the canonical result.
  CanonicalKey replay() const {
    const auto w = to_word(before);
    switch (kind) {
      case SpliceKind::inverse_half_twisted: return canonical_key(apply_I(w, at));
      case SpliceKind::half_twisted: return canonical_key(half_twisted_splice(w, cuts.first, cuts.second));
      case SpliceKind::connected_sum: break;
    }
    throw InputError("connected-sum steps carry no replay data");
  }

  bool replays() const { return replay() == after; }
};

inline SpliceStep make_I_step(const CanonicalKey& before, Label p) {
  SpliceStep s;
  s.kind = SpliceKind::inverse_half_twisted;
  s.at = p;
  s.before = before;
  s.after = canonical_key(apply_I(to_word(before), p));
  return s;
}

}  // namespace sphcurve
