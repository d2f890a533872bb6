#pragma once

// Charges on faces, discharging rules and unavoidable-set scans.
//
// Every k-gon starts with charge 4 - k; on a reduced curve the total is 8.
// A rule takes charge off each face matching its source pattern and hands it
// to neighboring faces. Arithmetic is exact (boost::rational); there is no
// floating point in this module.

#include <boost/rational.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphcurve/analytics.hpp"
#include "sphcurve/enumeration.hpp"

namespace sphcurve {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::string num(text.substr(0, slash));
    const auto n = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument("trailing characters");
    if (slash == std::string_view::npos) return Rational(n);
    const std::string den(text.substr(slash + 1));
    const auto d = std::stoll(den, &used);
    if (used != den.size() || d == 0) throw std::invalid_argument("bad denominator");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
}

struct ChargeState {
  std::vector<Rational> charges;  // indexed by face

  Rational total() const {
    Rational t = 0;
    for (const auto& c : charges) t += c;
    return t;
  }
};

inline ChargeState initial_charges(const PlaneCurve& c) {
  if (!is_reduced(c)) throw NotReduced("charges are defined on reduced curves; " + c.key(true).str() + " is not");
  ChargeState s;
  for (const auto& f : c.faces()) s.charges.emplace_back(4 - f.size);
  return s;
}

enum class Receivers { edge, corner, around };

inline const char* to_string(Receivers r) {
  switch (r) {
    case Receivers::edge: return "edge";
    case Receivers::corner: return "corner";
    case Receivers::around: return "around";
  }
  return "?";
}

struct Transfer {
  Receivers to = Receivers::around;
  Rational amount;
};

// The charge a source face loses is the sum of what it sends, so every rule
// conserves the total by construction.
struct DischargeRule {
  std::string name;
  TanglePredicate source;
  std::vector<Transfer> transfers;

  // Charge removed from a source face of the given size.
  Rational outflow(int size) const {
    Rational out = 0;
    for (const auto& t : transfers) out += t.amount * (t.to == Receivers::around ? 2 * size : size);
    return out;
  }
};

// Each trigon sends 1/6 to each of the six regions around it: the three
// across its edges and the three across its corners.
inline DischargeRule rule_d1() {
  DischargeRule r;
  r.name = "D1";
  r.source = parse_tangle_set("trigon").front();
  r.transfers.push_back({Receivers::around, Rational(1, 6)});
  return r;
}

// Rule text format, one directive per line, '#' comments:
//
//   rule D1
//   source trigon
//   send around 1/6
//
// `source` takes one tangle predicate; `send` takes edge | corner | around
// and a rational amount given to each receiver slot.
inline DischargeRule parse_rule(std::istream& in) {
  DischargeRule r;
  bool have_source = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    std::string rest;
    std::getline(ls, rest);
    const auto first = rest.find_first_not_of(" \t");
    rest = first == std::string::npos ? "" : rest.substr(first);
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (directive == "rule") {
      r.name = rest;
    } else if (directive == "source") {
      auto set = parse_tangle_set(rest);
      if (set.size() != 1) throw InputError("source takes a single predicate" + where);
      r.source = set.front();
      have_source = true;
    } else if (directive == "send") {
      std::istringstream parts(rest);
      std::string to, amount;
      if (!(parts >> to >> amount)) throw InputError("send needs a receiver selector and an amount" + where);
      Transfer t;
      if (to == "edge") t.to = Receivers::edge;
      else if (to == "corner") t.to = Receivers::corner;
      else if (to == "around") t.to = Receivers::around;
      else throw InputError("unknown receiver selector '" + to + "'" + where);
      t.amount = parse_rational(amount);
      r.transfers.push_back(t);
    } else {
      throw InputError("unknown directive '" + directive + "'" + where);
    }
  }
  if (!have_source) throw InputError("rule has no source line");
  if (r.transfers.empty()) throw InputError("rule has no send line");
  return r;
}

inline DischargeRule parse_rule(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rule(in);
}

// Applies r to every matching face at once, reading pattern matches from the
// curve (not from the evolving charges).
inline ChargeState apply_rule(const PlaneCurve& c, const ChargeState& s, const DischargeRule& r) {
  if (s.charges.size() != c.faces().size()) throw PatternMismatch("charge state does not belong to this curve");
  ChargeState out = s;
  for (const auto& f : c.faces()) {
    if (!r.source.matches(c, f)) continue;
    auto cr = f.crossings;
    std::sort(cr.begin(), cr.end());
    if (std::adjacent_find(cr.begin(), cr.end()) != cr.end()) {
      throw PatternMismatch("face " + std::to_string(f.index) + " meets a crossing twice; receivers are ambiguous");
    }
    const auto edge = c.edge_neighbors(f);
    if (std::find(edge.begin(), edge.end(), f.index) != edge.end()) {
      throw PatternMismatch("face " + std::to_string(f.index) + " borders itself");
    }
    const auto corner = c.corner_opposites(f);
    for (const auto& t : r.transfers) {
      if (t.to != Receivers::corner)
        for (int g : edge) out.charges[static_cast<std::size_t>(g)] += t.amount;
      if (t.to != Receivers::edge)
        for (int g : corner) out.charges[static_cast<std::size_t>(g)] += t.amount;
    }
    out.charges[static_cast<std::size_t>(f.index)] -= r.outflow(f.size);
  }
  return out;
}

// ---- unavoidable-set scans -------------------------------------------------

struct ScanRow {
  int n = 0;
  std::size_t reduced_curves = 0;
  std::size_t avoiding = 0;                     // curves matching no predicate
  std::optional<EmbeddingKey> counterexample;  // least avoiding key
};

struct ScanReport {
  std::string set_text;
  int n_max = 0;
  std::vector<ScanRow> rows;

  bool unavoidable_so_far() const {
    for (const auto& r : rows)
      if (r.counterexample) return false;
    return true;
  }

  std::optional<EmbeddingKey> first_counterexample() const {
    for (const auto& r : rows)
      if (r.counterexample) return r.counterexample;
    return std::nullopt;
  }

  // Evidence only: "no counterexample up to n_max" is not a proof.
  std::string verdict() const {
    if (auto k = first_counterexample()) return "counterexample " + k->str();
    return "no counterexample up to n=" + std::to_string(n_max);
  }
};

struct ScanOptions {
  bool identify_mirror = true;
  unsigned jobs = 1;
  std::filesystem::path cache_dir;
};

inline ScanReport unavoidable_scan(const TangleSet& set, int n_max, const ScanOptions& opt = {},
                                   std::string set_text = {}) {
  ScanReport report;
  report.set_text = std::move(set_text);
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const auto census = load_or_build_census(n, {opt.identify_mirror, true, true}, opt.cache_dir, opt.jobs);
    std::vector<char> avoids(census.size());
    parallel_for(census.size(), opt.jobs, [&](std::size_t i) {
      avoids[i] = !match_tangles(PlaneCurve::from_key(census.curves[i]), set).matched;
    });
    ScanRow row;
    row.n = n;
    row.reduced_curves = census.size();
    for (std::size_t i = 0; i < census.size(); ++i) {
      if (!avoids[i]) continue;
      ++row.avoiding;
      if (!row.counterexample) row.counterexample = census.curves[i];
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sphcurve
