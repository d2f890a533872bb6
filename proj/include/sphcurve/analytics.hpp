#pragma once

// Local face patterns: bigons, trigons, and face-pattern tangle predicates.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphcurve/plane_curve.hpp"

namespace sphcurve {

struct BigonReport {
  int face = 0;
  bool coherent = false;
  std::array<Label, 2> crossings{};  // equal only on the 1-crossing curve
};

inline std::vector<BigonReport> find_bigons(const PlaneCurve& c) {
  std::vector<BigonReport> out;
  for (const auto& f : c.faces()) {
    if (f.size != 2) continue;
    out.push_back({f.index, f.coherent, {f.crossings[0], f.crossings[1]}});
  }
  return out;
}

// ---- trigons ---------------------------------------------------------------

// Trigon type letters. `unknown` marks a signature the calibration table does
// not cover, including degenerate trigons that touch a crossing twice.
enum class TrigonLetter { A, B, C, D, unknown };

inline char to_char(TrigonLetter l) {
  switch (l) {
    case TrigonLetter::A: return 'A';
    case TrigonLetter::B: return 'B';
    case TrigonLetter::C: return 'C';
    case TrigonLetter::D: return 'D';
    case TrigonLetter::unknown: break;
  }
  return '?';
}

inline TrigonLetter letter_from_char(char ch) {
  switch (ch) {
    case 'A': return TrigonLetter::A;
    case 'B': return TrigonLetter::B;
    case 'C': return TrigonLetter::C;
    case 'D': return TrigonLetter::D;
    default: return TrigonLetter::unknown;
  }
}

struct TrigonReport {
  int face = 0;
  std::array<Label, 3> crossings{};
  int interlace_count = 0;  // interlaced pairs among the three chords
  bool coherent = false;
  std::string signature;
  TrigonLetter letter = TrigonLetter::unknown;
};

// Signature of a trigon: the six chord endpoints of its three crossings in
// circle order, grouped into the three trigon edges, each edge tagged '+' if
// the face walk runs with the curve and '-' otherwise. Minimized over
// rotation, reading direction and a global flip of the tags, so it is
// invariant under rotation, reversal and mirroring of the curve.
// Example: "ab+ca+bc+".
inline std::string trigon_signature(const PlaneCurve& c, const Face& f) {
  if (f.size != 3) throw PatternMismatch("trigon_signature needs a 3-gon");
  const int len = static_cast<int>(c.word().size());
  struct End {
    int pos;
    int edge;
  };
  std::vector<End> ends;
  std::array<bool, 3> with{};
  for (int e = 0; e < 3; ++e) {
    const int d = f.darts[static_cast<std::size_t>(e)];
    const int p = d / 2;
    const int q = PlaneCurve::with_curve(d) ? (p + 1) % len : (p - 1 + len) % len;
    ends.push_back({p, e});
    ends.push_back({q, e});
    with[static_cast<std::size_t>(e)] = PlaneCurve::with_curve(d);
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
  for (std::size_t i = 1; i < ends.size(); ++i) {
    if (ends[i].pos == ends[i - 1].pos) return "degenerate";
  }
  std::array<Label, 3> cr{f.crossings[0], f.crossings[1], f.crossings[2]};
  if (cr[0] == cr[1] || cr[1] == cr[2] || cr[0] == cr[2]) return "degenerate";

  std::string best;
  for (int start = 0; start < 6; ++start) {
    for (int dir : {+1, -1}) {
      for (int flip = 0; flip < 2; ++flip) {
        std::array<int, 6> idx{};
        for (int k = 0; k < 6; ++k) idx[static_cast<std::size_t>(k)] = ((start + dir * k) % 6 + 6) % 6;
        // Edges must come as consecutive pairs in this reading.
        bool paired = true;
        for (int k = 0; k < 6; k += 2) {
          if (ends[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])].edge !=
              ends[static_cast<std::size_t>(idx[static_cast<std::size_t>(k + 1)])].edge) {
            paired = false;
          }
        }
        if (!paired) continue;
        std::array<Label, 4> rename{};
        char next = 'a';
        std::string s;
        for (int k = 0; k < 6; ++k) {
          const auto& end = ends[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
          const Label x = c.word()[static_cast<std::size_t>(end.pos)];
          std::size_t slot = 0;
          while (cr[slot] != x) ++slot;
          if (rename[slot] == 0) rename[slot] = next++;
          s += static_cast<char>(rename[slot]);
          if (k % 2 == 1) {
            bool agree = with[static_cast<std::size_t>(end.edge)];
            if (dir < 0) agree = !agree;
            if (flip) agree = !agree;
            s += agree ? '+' : '-';
          }
        }
        if (best.empty() || s < best) best = s;
      }
    }
  }
  return best;
}

// Interlaced pairs among the three chords of a signature.
inline int signature_interlace_count(std::string_view sig) {
  if (sig == "degenerate") return 0;
  std::string letters;
  for (char ch : sig)
    if (std::isalpha(static_cast<unsigned char>(ch))) letters += ch;
  int count = 0;
  for (char a : std::string("abc")) {
    for (char b : std::string("abc")) {
      if (a >= b) continue;
      const auto a0 = letters.find(a), a1 = letters.rfind(a);
      int inside = 0;
      for (auto k = a0 + 1; k < a1; ++k) inside += letters[k] == b;
      count += inside == 1;
    }
  }
  return count;
}

struct TrigonCalibrationEntry {
  std::string_view signature;
  TrigonLetter letter;
};

// Signature -> letter, derived by derive_trigon_calibration() (see
// calibration.hpp and tools/calibrate_trigons.cpp) from the behavior each
// type must show. Regenerate with `calibrate_trigons` if the signature
// encoding changes.
inline constexpr std::array<TrigonCalibrationEntry, 4> kTrigonCalibration{{
    {"ab+ac-bc+", TrigonLetter::A},  // two interlaced pairs
    {"ab+ac-cb-", TrigonLetter::B},  // one interlaced pair
    {"ab+ca+bc+", TrigonLetter::C},  // all three interlaced (trefoil)
    {"ab+bc+ca+", TrigonLetter::D},  // no interlaced pair
}};

inline TrigonLetter lookup_trigon_letter(std::string_view signature) {
  for (const auto& e : kTrigonCalibration) {
    if (e.signature == signature) return e.letter;
  }
  return TrigonLetter::unknown;
}

inline std::vector<TrigonReport> find_trigons(const PlaneCurve& c) {
  std::vector<TrigonReport> out;
  for (const auto& f : c.faces()) {
    if (f.size != 3) continue;
    TrigonReport r;
    r.face = f.index;
    r.crossings = {f.crossings[0], f.crossings[1], f.crossings[2]};
    r.coherent = f.coherent;
    r.signature = trigon_signature(c, f);
    r.interlace_count = signature_interlace_count(r.signature);
    r.letter = lookup_trigon_letter(r.signature);
    out.push_back(std::move(r));
  }
  return out;
}

inline TrigonLetter trigon_letter(const PlaneCurve& c, const Face& f) {
  return lookup_trigon_letter(trigon_signature(c, f));
}

// ---- tangle predicates -----------------------------------------------------

enum class Cmp { lt, le, eq, ne, ge, gt };

struct SizeBound {
  Cmp cmp = Cmp::eq;
  int value = 0;

  bool test(int x) const {
    switch (cmp) {
      case Cmp::lt: return x < value;
      case Cmp::le: return x <= value;
      case Cmp::eq: return x == value;
      case Cmp::ne: return x != value;
      case Cmp::ge: return x >= value;
      case Cmp::gt: return x > value;
    }
    return false;
  }
};

// A face-pattern query. Neighbor conditions:
//   adj       some edge-adjacent face satisfies the bound
//   alladj    every edge-adjacent face satisfies it
//   around    some face among the edge-adjacent and corner-opposite ones
//   allaround every one of those
// Neighbors are taken with multiplicity. All conditions are mirror-invariant.
struct TanglePredicate {
  std::optional<int> size;
  std::optional<bool> coherent;
  std::optional<TrigonLetter> letter;
  bool distinct_crossings = false;
  std::vector<SizeBound> adj_any, adj_all, around_any, around_all;
  std::string text;

  bool matches(const PlaneCurve& c, const Face& f) const {
    if (size && f.size != *size) return false;
    if (coherent && f.coherent != *coherent) return false;
    if (letter) {
      if (f.size != 3 || trigon_letter(c, f) != *letter) return false;
    }
    if (distinct_crossings) {
      auto cr = f.crossings;
      std::sort(cr.begin(), cr.end());
      if (std::adjacent_find(cr.begin(), cr.end()) != cr.end()) return false;
    }
    if (!adj_any.empty() || !adj_all.empty() || !around_any.empty() || !around_all.empty()) {
      std::vector<int> adj;
      for (int g : c.edge_neighbors(f)) adj.push_back(c.face(g).size);
      std::vector<int> around = adj;
      for (int g : c.corner_opposites(f)) around.push_back(c.face(g).size);
      auto any = [](const std::vector<int>& xs, const SizeBound& b) {
        return std::any_of(xs.begin(), xs.end(), [&](int x) { return b.test(x); });
      };
      auto all = [](const std::vector<int>& xs, const SizeBound& b) {
        return std::all_of(xs.begin(), xs.end(), [&](int x) { return b.test(x); });
      };
      for (const auto& b : adj_any)
        if (!any(adj, b)) return false;
      for (const auto& b : adj_all)
        if (!all(adj, b)) return false;
      for (const auto& b : around_any)
        if (!any(around, b)) return false;
      for (const auto& b : around_all)
        if (!all(around, b)) return false;
    }
    return true;
  }
};

using TangleSet = std::vector<TanglePredicate>;

namespace detail {

class PredicateParser {
 public:
  explicit PredicateParser(std::string_view text) : s_(text) {}

  TangleSet parse_set() {
    TangleSet out;
    skip();
    if (at_end()) throw ParseError("empty tangle set", pos_);
    out.push_back(parse_pred());
    skip();
    while (!at_end()) {
      expect('|');
      out.push_back(parse_pred());
      skip();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    skip();
    if (at_end() || s_[pos_] != ch) throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }
  std::string word() {
    skip();
    const auto start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() {
    skip();
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Cmp comparison() {
    skip();
    auto two = s_.substr(pos_, 2);
    if (two == "<=") { pos_ += 2; return Cmp::le; }
    if (two == ">=") { pos_ += 2; return Cmp::ge; }
    if (two == "==") { pos_ += 2; return Cmp::eq; }
    if (two == "!=") { pos_ += 2; return Cmp::ne; }
    if (!at_end()) {
      switch (s_[pos_]) {
        case '<': ++pos_; return Cmp::lt;
        case '>': ++pos_; return Cmp::gt;
        case '=': ++pos_; return Cmp::eq;
      }
    }
    throw ParseError("expected a comparison (<, <=, =, ==, !=, >=, >)", pos_);
  }

  TanglePredicate parse_pred() {
    skip();
    const auto start = pos_;
    TanglePredicate p;
    const auto shape = word();
    if (shape == "monogon") p.size = 1;
    else if (shape == "bigon") p.size = 2;
    else if (shape == "trigon") p.size = 3;
    else if (shape == "face") p.size.reset();
    else if (shape.size() > 3 && shape.ends_with("gon") &&
             std::all_of(shape.begin(), shape.end() - 3, [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      p.size = std::stoi(shape.substr(0, shape.size() - 3));
      if (*p.size < 1) throw ParseError("face size must be positive", start);
    } else {
      throw ParseError("unknown shape '" + shape + "'", start);
    }
    skip();
    if (!at_end() && s_[pos_] == '(') {
      ++pos_;
      parse_cond(p);
      skip();
      while (!at_end() && s_[pos_] == ',') {
        ++pos_;
        parse_cond(p);
        skip();
      }
      expect(')');
    }
    p.text = std::string(s_.substr(start, pos_ - start));
    return p;
  }

  void parse_cond(TanglePredicate& p) {
    skip();
    const auto start = pos_;
    const auto name = word();
    if (name == "coherent") p.coherent = true;
    else if (name == "incoherent") p.coherent = false;
    else if (name == "distinct") p.distinct_crossings = true;
    else if (name.size() == 1 && letter_from_char(name[0]) != TrigonLetter::unknown) {
      if (p.size && *p.size != 3) throw ParseError("type letters apply to trigons only", start);
      p.size = 3;
      p.letter = letter_from_char(name[0]);
    } else if (name == "adj" || name == "alladj" || name == "around" || name == "allaround") {
      const auto cmp = comparison();
      SizeBound b{cmp, integer()};
      if (name == "adj") p.adj_any.push_back(b);
      else if (name == "alladj") p.adj_all.push_back(b);
      else if (name == "around") p.around_any.push_back(b);
      else p.around_all.push_back(b);
    } else {
      throw ParseError("unknown condition '" + name + "'", start);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar:
//   set   := pred ('|' pred)*
//   pred  := shape ['(' cond (',' cond)* ')']
//   shape := monogon | bigon | trigon | face | <k>gon
//   cond  := coherent | incoherent | distinct | A | B | C | D
//          | (adj | alladj | around | allaround) cmp <int>
//   cmp   := < | <= | = | == | != | >= | >
// Example: "bigon | trigon(around<=4)".
inline TangleSet parse_tangle_set(std::string_view text) { return detail::PredicateParser(text).parse_set(); }

struct TangleMatch {
  bool matched = false;
  int predicate = -1;  // index into the set
  int face = -1;       // witness face
};

// The witness is the first face matching the earliest matching predicate.
inline TangleMatch match_tangles(const PlaneCurve& c, const TangleSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& f : c.faces()) {
      if (set[i].matches(c, f)) return {true, static_cast<int>(i), f.index};
    }
  }
  return {};
}

}  // namespace sphcurve
