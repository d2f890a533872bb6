#pragma once

// Derivation of the trigon letter table from behavior over the census.
//
// Each observed trigon signature is scored on reduced curves:
//   * max reductivity of curves carrying it,
//   * whether one I at a crossing of the trigon always yields an incoherent
//     bigon (type A behavior) or a coherent bigon (type B) on the two trigon
//     crossings that survive the move,
//   * whether the trefoil carries it (type C anchor).
// D is what remains. For D the count of occurrences where one I at a trigon
// crossing yields a B trigon is reported, not required: the crossing that
// does so need not lie on the trigon. The derived table must reproduce
// kTrigonCalibration.

#include <map>
#include <string>
#include <vector>

#include "sphcurve/analytics.hpp"
#include "sphcurve/reductivity.hpp"

namespace sphcurve {

struct SignatureStats {
  std::string signature;
  int interlace_count = 0;
  bool coherent = false;
  std::size_t occurrences = 0;      // trigons on reduced curves
  std::size_t curves = 0;           // reduced curves carrying it
  int max_reductivity = 0;
  std::size_t to_incoherent_bigon = 0;  // occurrences where one I at a trigon crossing gives an incoherent bigon
  std::size_t to_coherent_bigon = 0;
  std::size_t to_type_b = 0;            // ... gives a curve with a B trigon (needs B known)
  bool on_trefoil = false;
  TrigonLetter derived = TrigonLetter::unknown;
};

struct CalibrationReport {
  int n_max = 0;
  std::vector<SignatureStats> classes;  // sorted by signature
  bool consistent = false;              // one class per letter, each letter used once
  std::string problem;
};

namespace detail {

// Bigons of some embedding of w, as (coherent, sorted crossing pair).
inline std::vector<std::pair<bool, std::array<Label, 2>>> bigons_of_word(const GaussWord& w) {
  std::vector<std::pair<bool, std::array<Label, 2>>> out;
  for (const auto& c : realize_all(w, true)) {
    // realize_all returns canonical forms; map labels back onto w.
    const auto key = c.word().letters();
    std::vector<Label> to_w(static_cast<std::size_t>(w.crossings()) + 1, 0);
    bool mapped = false;
    const int len = static_cast<int>(w.size());
    for (int s = 0; s < len && !mapped; ++s) {
      for (int dir : {+1, -1}) {
        std::fill(to_w.begin(), to_w.end(), 0);
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) {
          const Label original = w[static_cast<std::size_t>(((s + dir * k) % len + len) % len)];
          auto& slot = to_w[static_cast<std::size_t>(key[static_cast<std::size_t>(k)])];
          if (slot == 0) slot = original;
          ok = slot == original;
        }
        if (ok) { mapped = true; break; }
      }
    }
    if (!mapped) throw InvariantError("canonical word does not match its source");
    for (const auto& b : find_bigons(c)) {
      std::array<Label, 2> pair{to_w[static_cast<std::size_t>(b.crossings[0])], to_w[static_cast<std::size_t>(b.crossings[1])]};
      std::sort(pair.begin(), pair.end());
      out.emplace_back(b.coherent, pair);
    }
  }
  return out;
}

inline bool some_embedding_has_signature(const GaussWord& w, const std::string& sig) {
  for (const auto& c : realize_all(w, true)) {
    for (const auto& t : find_trigons(c)) {
      if (t.signature == sig) return true;
    }
  }
  return false;
}

}  // namespace detail

inline CalibrationReport derive_trigon_calibration(int n_max, unsigned jobs = 1) {
  CalibrationReport report;
  report.n_max = n_max;
  std::map<std::string, SignatureStats> stats;
  std::map<std::vector<Label>, int> r_cache;

  struct Occurrence {
    GaussWord word;
    std::array<Label, 3> crossings;
    std::string signature;
  };
  std::vector<Occurrence> occurrences;

  for (int n = 3; n <= n_max; ++n) {
    const auto census = enumerate_words(n, {true, true, true}, jobs);
    for (const auto& key : census.curves) {
      const auto c = PlaneCurve::from_key(key);
      auto [it, fresh] = r_cache.try_emplace(key.letters, 0);
      if (fresh) it->second = reductivity(c.word()).value;
      std::map<std::string, bool> on_curve;
      for (const auto& t : find_trigons(c)) {
        auto& s = stats[t.signature];
        s.signature = t.signature;
        s.interlace_count = t.interlace_count;
        s.coherent = t.coherent;
        ++s.occurrences;
        s.max_reductivity = std::max(s.max_reductivity, it->second);
        on_curve[t.signature] = true;
        occurrences.push_back({c.word(), t.crossings, t.signature});
      }
      for (const auto& [sig, unused] : on_curve) ++stats[sig].curves;
    }
  }
  const auto trefoil = PlaneCurve::from_key(realize_all(GaussWord::from_letters({1, 2, 3, 1, 2, 3}), true).front().key(true));
  for (const auto& t : find_trigons(trefoil)) stats[t.signature].on_trefoil = true;

  std::vector<std::array<bool, 2>> bigon_after(occurrences.size());
  parallel_for(occurrences.size(), jobs, [&](std::size_t i) {
    const auto& o = occurrences[i];
    // The new bigon must sit on the two trigon crossings that survive.
    for (Label p : o.crossings) {
      const auto raw = apply_I_letters(o.word, p);
      const auto child = GaussWord::from_letters(raw);
      std::vector<Label> renamed(static_cast<std::size_t>(o.word.crossings()) + 1, 0);
      Label next = 1;
      for (Label x : raw)
        if (renamed[static_cast<std::size_t>(x)] == 0) renamed[static_cast<std::size_t>(x)] = next++;
      std::array<Label, 2> rest{};
      int k = 0;
      for (Label q : o.crossings)
        if (q != p) rest[static_cast<std::size_t>(k++)] = renamed[static_cast<std::size_t>(q)];
      std::sort(rest.begin(), rest.end());
      for (const auto& [coherent, pair] : detail::bigons_of_word(child)) {
        if (pair == rest) bigon_after[i][coherent ? 1 : 0] = true;
      }
    }
  });
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    auto& s = stats[occurrences[i].signature];
    s.to_incoherent_bigon += bigon_after[i][0];
    s.to_coherent_bigon += bigon_after[i][1];
  }

  // Letter assignment: C by the trefoil anchor, A / B by universal bigon
  // behavior (A takes precedence), D for the rest.
  for (auto& [sig, s] : stats) {
    if (sig == "degenerate") continue;
    if (s.on_trefoil) s.derived = TrigonLetter::C;
    else if (s.to_incoherent_bigon == s.occurrences) s.derived = TrigonLetter::A;
    else if (s.to_coherent_bigon == s.occurrences) s.derived = TrigonLetter::B;
    else s.derived = TrigonLetter::D;
  }

  // D must turn into B with one I (checked now that B is known).
  std::string b_signature;
  for (const auto& [sig, s] : stats)
    if (s.derived == TrigonLetter::B) b_signature = sig;
  if (!b_signature.empty()) {
    std::vector<char> to_b(occurrences.size());
    parallel_for(occurrences.size(), jobs, [&](std::size_t i) {
      const auto& o = occurrences[i];
      if (stats.at(o.signature).derived != TrigonLetter::D) return;
      for (Label p : o.crossings) {
        if (detail::some_embedding_has_signature(apply_I(o.word, p), b_signature)) {
          to_b[i] = 1;
          return;
        }
      }
    });
    for (std::size_t i = 0; i < occurrences.size(); ++i) stats[occurrences[i].signature].to_type_b += to_b[i];
  }

  std::map<TrigonLetter, int> used;
  for (auto& [sig, s] : stats) {
    report.classes.push_back(s);
    if (s.derived != TrigonLetter::unknown) ++used[s.derived];
  }
  report.consistent = true;
  for (auto l : {TrigonLetter::A, TrigonLetter::B, TrigonLetter::C, TrigonLetter::D}) {
    if (used[l] != 1) {
      report.consistent = false;
      report.problem += std::string("letter ") + to_char(l) + " assigned to " + std::to_string(used[l]) +
                        " classes; ";
    }
  }
  if (report.classes.size() > 4) {
    report.consistent = false;
    report.problem += "more than four trigon classes observed; ";
  }
  return report;
}

}  // namespace sphcurve
