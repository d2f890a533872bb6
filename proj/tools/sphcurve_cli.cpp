#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sphcurve/sphcurve.hpp"

namespace {

using namespace sphcurve;
using Json = nlohmann::ordered_json;

constexpr const char* kTsvVersion = "v1";

struct RunConfig {
  std::vector<std::string> inputs;
  int max_n = 0;
  bool mirror = true;
  std::string format = "text";
  unsigned jobs = 1;
  std::string cache_dir;
  std::string output;
};

struct NamedWord {
  std::string source;
  GaussWord word;
};

// Inline words and GW1 files (one word per line, '#' comments).
std::vector<NamedWord> read_inputs(const std::vector<std::string>& inputs) {
  std::vector<NamedWord> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(in, ec)) {
      std::ifstream f(in);
      std::string line;
      int lineno = 0;
      while (std::getline(f, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          out.push_back({in + ":" + std::to_string(lineno), parse_word(line)});
        } catch (const InputError& e) {
          throw InputError(in + ":" + std::to_string(lineno) + ": " + e.what());
        }
      }
    } else {
      out.push_back({in, parse_word(in)});
    }
  }
  if (out.empty()) throw InputError("no input words");
  return out;
}

void check_max_n(int n) {
  if (n < 1 || n > kMaxEnumerationCrossings) {
    throw InputError("n_max must be in 1.." + std::to_string(kMaxEnumerationCrossings) + ", got " +
                     std::to_string(n));
  }
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw InputError(std::string(cmd) + " supports --format " + list);
}

Json key_json(const EmbeddingKey& k) {
  Json j;
  j["word"] = GaussWord::from_letters(k.letters).str();
  std::string s;
  for (auto x : k.signs) s += x > 0 ? '+' : '-';
  j["signs"] = s;
  j["key"] = k.str();
  return j;
}

Json witness_json(const ReductivityResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.witness) {
    steps.push_back({{"splice", to_string(s.kind)}, {"label", s.at}, {"from", s.before.str()}, {"to", s.after.str()}});
  }
  return steps;
}

void print_witness(std::ostream& out, const ReductivityResult& r, const std::string& indent) {
  out << indent << "0: " << r.start.str() << "\n";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    const auto& s = r.witness[i];
    out << indent << i + 1 << ": " << s.after.str() << "    (I at " << s.at << ")\n";
  }
}

std::string census_text(const PlaneCurve& c) {
  std::string s;
  const auto cs = c.census();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "C" + std::to_string(k) + "=" + std::to_string(cs[k]);
  }
  return s;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "analyze");
  Json all = Json::array();
  for (const auto& in : read_inputs(cfg.inputs)) {
    const auto& w = in.word;
    const auto embeddings = realize_all(w, cfg.mirror);
    if (embeddings.empty()) {
      std::string why = even_interlacement(w) ? "no sign choice closes up on the sphere"
                                              : "some chord crosses an odd number of chords";
      throw NotRealizable("not realizable: " + w.str() + " (" + why + ")");
    }
    const auto r = reductivity(w);
    const bool reduced = !has_free_chord(w);
    if (cfg.format == "text") {
      out << "word: " << w.str() << "\n";
      out << "canonical: " << canonical_key(w).str() << "\n";
      out << "realizable: yes (" << embeddings.size() << (embeddings.size() == 1 ? " embedding" : " embeddings")
          << ")\n";
      out << "reduced: " << (reduced ? "yes" : "no") << "\n";
      if (!reduced) {
        out << "free chords:";
        for (Label a : free_chords(w)) out << ' ' << a;
        out << "\n";
      }
      for (std::size_t e = 0; e < embeddings.size(); ++e) {
        const auto& c = embeddings[e];
        out << "embedding " << e + 1 << ": " << c.key(cfg.mirror).str() << "\n";
        out << "  faces: " << census_text(c) << "\n";
        for (const auto& b : find_bigons(c)) {
          out << "  bigon on " << b.crossings[0] << "," << b.crossings[1] << ": "
              << (b.coherent ? "coherent" : "incoherent") << "\n";
        }
        for (const auto& t : find_trigons(c)) {
          out << "  trigon on " << t.crossings[0] << "," << t.crossings[1] << "," << t.crossings[2] << ": type "
              << to_char(t.letter) << ", " << (t.coherent ? "coherent" : "incoherent") << ", " << t.signature
              << "\n";
        }
      }
      out << "reductivity: " << r.value << "\n";
      if (r.value > 0) {
        out << "witness:\n";
        print_witness(out, r, "  ");
      }
    } else {
      Json j;
      j["input"] = in.source;
      j["word"] = w.str();
      j["canonical"] = canonical_key(w).str();
      j["realizable"] = true;
      j["reduced"] = reduced;
      j["free_chords"] = free_chords(w);
      Json embs = Json::array();
      for (const auto& c : embeddings) {
        Json e = key_json(c.key(cfg.mirror));
        Json census = Json::object();
        const auto cs = c.census();
        for (std::size_t k = 0; k < cs.size(); ++k)
          if (cs[k]) census[std::to_string(k)] = cs[k];
        e["faces"] = census;
        Json bigons = Json::array();
        for (const auto& b : find_bigons(c)) bigons.push_back({{"crossings", b.crossings}, {"coherent", b.coherent}});
        e["bigons"] = bigons;
        Json trigons = Json::array();
        for (const auto& t : find_trigons(c)) {
          trigons.push_back({{"crossings", t.crossings},
                             {"coherent", t.coherent},
                             {"signature", t.signature},
                             {"type", std::string(1, to_char(t.letter))}});
        }
        e["trigons"] = trigons;
        embs.push_back(e);
      }
      j["embeddings"] = embs;
      j["reductivity"] = r.value;
      j["witness"] = witness_json(r);
      all.push_back(j);
    }
  }
  if (cfg.format == "json") out << Json{{"curves", all}}.dump(2) << "\n";
  return 0;
}

// ---- reductivity -----------------------------------------------------------

int cmd_reductivity(const RunConfig& cfg, bool check_each, std::ostream& out) {
  require_format(cfg, {"text", "json", "tsv"}, "reductivity");
  Json all = Json::array();
  if (cfg.format == "tsv") out << "# reductivity tsv " << kTsvVersion << "\nword\treductivity\twitness\n";
  for (const auto& in : read_inputs(cfg.inputs)) {
    const auto r = reductivity(in.word, {check_each});
    if (!r.verify()) throw InvariantError("witness for " + in.word.str() + " does not replay");
    if (cfg.format == "text") {
      out << in.word.str() << "\treductivity " << r.value << "\n";
      print_witness(out, r, "  ");
    } else if (cfg.format == "tsv") {
      std::string labels;
      for (const auto& s : r.witness) labels += (labels.empty() ? "" : ",") + std::to_string(s.at);
      out << in.word.str() << "\t" << r.value << "\t" << (labels.empty() ? "-" : labels) << "\n";
    } else {
      all.push_back({{"input", in.source},
                     {"word", in.word.str()},
                     {"canonical", r.start.str()},
                     {"reductivity", r.value},
                     {"witness", witness_json(r)},
                     {"verified", true}});
    }
  }
  if (cfg.format == "json") out << Json{{"results", all}}.dump(2) << "\n";
  return 0;
}

// ---- survey ----------------------------------------------------------------

int cmd_survey(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "tsv"}, "survey");
  check_max_n(cfg.max_n);
  const auto rows = survey(cfg.max_n, {cfg.mirror, cfg.jobs, cfg.cache_dir});
  for (const auto& row : rows)
    for (const auto& r : row.max_four)
      if (!r.verify()) throw InvariantError("witness for " + r.start.str() + " does not replay");

  if (cfg.format == "tsv") {
    out << "# survey tsv " << kTsvVersion << " mirror=" << cfg.mirror << "\n";
    out << "n\tcurves\twords\tr0\tr1\tr2\tr3\tr4\tmax\n";
    for (const auto& row : rows) {
      out << row.n << "\t" << row.curves << "\t" << row.words;
      for (auto h : row.histogram) out << "\t" << h;
      out << "\t" << row.max << "\n";
    }
  } else if (cfg.format == "text") {
    out << "reductivity survey, mirror images " << (cfg.mirror ? "identified" : "distinct") << "\n";
    out << "   n    curves     r=0   r=1   r=2   r=3   r=4   max\n";
    for (const auto& row : rows) {
      char line[128];
      std::snprintf(line, sizeof line, "%4d %9zu %7zu %5zu %5zu %5zu %5zu %5d\n", row.n, row.curves,
                    row.histogram[0], row.histogram[1], row.histogram[2], row.histogram[3], row.histogram[4],
                    row.max);
      out << line;
    }
    bool any = false;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.max_four.size(); ++i) {
        any = true;
        out << "r=4 curve " << row.max_four_curves[i].str() << " (witness verified)\n";
        print_witness(out, row.max_four[i], "  ");
      }
    }
    if (!any) out << "no curve with reductivity 4 up to n=" << cfg.max_n << "\n";
  } else {
    Json j;
    j["n_max"] = cfg.max_n;
    j["identify_mirror"] = cfg.mirror;
    Json jr = Json::array();
    for (const auto& row : rows) {
      Json four = Json::array();
      for (std::size_t i = 0; i < row.max_four.size(); ++i) {
        four.push_back({{"curve", row.max_four_curves[i].str()},
                        {"witness", witness_json(row.max_four[i])},
                        {"verified", true}});
      }
      jr.push_back({{"n", row.n},
                    {"curves", row.curves},
                    {"words", row.words},
                    {"histogram", row.histogram},
                    {"max", row.max},
                    {"reductivity_four", four}});
    }
    j["rows"] = jr;
    out << j.dump(2) << "\n";
  }
  return 0;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, bool reduced, const std::string& strategy, std::ostream& out) {
  require_format(cfg, {"text", "json"}, "enumerate");
  check_max_n(cfg.max_n);
  const CensusConvention conv{cfg.mirror, true, reduced};
  CurveCensus census;
  if (strategy == "maps") {
    census = enumerate_maps(cfg.max_n, conv);
  } else if (strategy == "words") {
    census = load_or_build_census(cfg.max_n, conv, cfg.cache_dir, cfg.jobs);
  } else {
    throw InputError("unknown strategy '" + strategy + "'");
  }
  if (cfg.format == "text") {
    write_census(out, census);
  } else {
    Json curves = Json::array();
    for (const auto& k : census.curves) curves.push_back(k.str());
    out << Json{{"n", census.n},
                {"identify_mirror", conv.identify_mirror},
                {"identify_reversal", conv.identify_reversal},
                {"reduced_only", conv.reduced_only},
                {"generator", kGeneratorVersion},
                {"count", census.size()},
                {"curves", curves}}
               .dump(2)
        << "\n";
  }
  return 0;
}

// ---- scan ------------------------------------------------------------------

int cmd_scan(const RunConfig& cfg, const std::string& set_text, std::ostream& out) {
  require_format(cfg, {"text", "json", "tsv"}, "scan");
  check_max_n(cfg.max_n);
  const auto set = parse_tangle_set(set_text);
  const auto report = unavoidable_scan(set, cfg.max_n, {cfg.mirror, cfg.jobs, cfg.cache_dir}, set_text);
  if (cfg.format == "tsv") {
    out << "# scan tsv " << kTsvVersion << " set=" << set_text << "\n";
    out << "n\treduced_curves\tavoiding\tcounterexample\n";
    for (const auto& r : report.rows) {
      out << r.n << "\t" << r.reduced_curves << "\t" << r.avoiding << "\t"
          << (r.counterexample ? r.counterexample->str() : "-") << "\n";
    }
  } else if (cfg.format == "text") {
    out << "set: " << set_text << "\n";
    for (const auto& r : report.rows) {
      out << "n=" << r.n << ": " << r.reduced_curves << " reduced, " << r.avoiding << " avoiding\n";
    }
    out << "verdict: " << report.verdict() << "\n";
  } else {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"n", r.n},
                      {"reduced_curves", r.reduced_curves},
                      {"avoiding", r.avoiding},
                      {"counterexample", r.counterexample ? Json(r.counterexample->str()) : Json(nullptr)}});
    }
    const auto first = report.first_counterexample();
    out << Json{{"set", set_text},
                {"n_max", cfg.max_n},
                {"identify_mirror", cfg.mirror},
                {"rows", rows},
                {"unavoidable_up_to_n_max", report.unavoidable_so_far()},
                {"counterexample", first ? Json(first->str()) : Json(nullptr)},
                {"verdict", report.verdict()}}
               .dump(2)
        << "\n";
  }
  return 0;
}

// ---- discharge-audit -------------------------------------------------------

int cmd_discharge(const RunConfig& cfg, const std::string& rule_path, std::ostream& out) {
  require_format(cfg, {"text", "json", "tsv"}, "discharge-audit");
  DischargeRule rule = rule_d1();
  if (!rule_path.empty()) {
    std::ifstream f(rule_path);
    if (!f) throw InputError("cannot read rule file '" + rule_path + "'");
    rule = parse_rule(f);
  }
  const Rational eight(8);

  if (!cfg.inputs.empty()) {
    Json all = Json::array();
    for (const auto& in : read_inputs(cfg.inputs)) {
      const auto embeddings = realize_all(in.word, cfg.mirror);
      if (embeddings.empty()) throw NotRealizable("not realizable: " + in.word.str());
      for (const auto& c : embeddings) {
        const auto before = initial_charges(c);
        const auto after = apply_rule(c, before, rule);
        if (before.total() != eight || after.total() != before.total()) {
          throw InvariantError("charge not conserved on " + c.key(cfg.mirror).str());
        }
        if (cfg.format == "json") {
          Json faces = Json::array();
          for (const auto& f : c.faces()) {
            faces.push_back({{"face", f.index},
                             {"size", f.size},
                             {"before", to_string(before.charges[static_cast<std::size_t>(f.index)])},
                             {"after", to_string(after.charges[static_cast<std::size_t>(f.index)])}});
          }
          all.push_back({{"curve", c.key(cfg.mirror).str()},
                         {"rule", rule.name},
                         {"faces", faces},
                         {"total_before", to_string(before.total())},
                         {"total_after", to_string(after.total())}});
        } else {
          out << "curve " << c.key(cfg.mirror).str() << ", rule " << rule.name << "\n";
          if (cfg.format == "tsv") out << "face\tsize\tbefore\tafter\n";
          for (const auto& f : c.faces()) {
            const auto i = static_cast<std::size_t>(f.index);
            if (cfg.format == "tsv") {
              out << f.index << "\t" << f.size << "\t" << to_string(before.charges[i]) << "\t"
                  << to_string(after.charges[i]) << "\n";
            } else {
              out << "  face " << f.index << " (" << f.size << "-gon): " << to_string(before.charges[i]) << " -> "
                  << to_string(after.charges[i]) << "\n";
            }
          }
          out << "total: " << to_string(before.total()) << " -> " << to_string(after.total()) << "\n";
        }
      }
    }
    if (cfg.format == "json") out << Json{{"curves", all}}.dump(2) << "\n";
    return 0;
  }

  check_max_n(cfg.max_n);
  struct Row {
    int n = 0;
    std::size_t curves = 0, conserved = 0, mismatched = 0, positive_after = 0;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= cfg.max_n; ++n) {
    const auto census = load_or_build_census(n, {cfg.mirror, true, true}, cfg.cache_dir, cfg.jobs);
    std::vector<int> status(census.size());  // 0 conserved, 1 mismatch, 2 drift; +4 if some face stays positive
    parallel_for(census.size(), cfg.jobs, [&](std::size_t i) {
      const auto c = PlaneCurve::from_key(census.curves[i]);
      const auto before = initial_charges(c);
      try {
        const auto after = apply_rule(c, before, rule);
        status[i] = before.total() == Rational(8) && after.total() == before.total() ? 0 : 2;
        for (const auto& x : after.charges)
          if (x > Rational(0)) {
            status[i] += 4;
            break;
          }
      } catch (const PatternMismatch&) {
        status[i] = 1;
      }
    });
    Row row;
    row.n = n;
    row.curves = census.size();
    for (std::size_t i = 0; i < census.size(); ++i) {
      if ((status[i] & 3) == 2) throw InvariantError("charge not conserved on " + census.curves[i].str());
      row.conserved += (status[i] & 3) == 0;
      row.mismatched += (status[i] & 3) == 1;
      row.positive_after += (status[i] & 4) != 0;
    }
    rows.push_back(row);
  }
  if (cfg.format == "tsv") {
    out << "# discharge-audit tsv " << kTsvVersion << " rule=" << rule.name << "\n";
    out << "n\treduced_curves\tconserved\tpattern_mismatch\tpositive_after\n";
    for (const auto& r : rows)
      out << r.n << "\t" << r.curves << "\t" << r.conserved << "\t" << r.mismatched << "\t" << r.positive_after
          << "\n";
  } else if (cfg.format == "text") {
    out << "rule " << rule.name << ": initial total 8 and exact conservation on every reduced curve\n";
    for (const auto& r : rows) {
      out << "n=" << r.n << ": " << r.curves << " reduced, " << r.conserved << " conserved, " << r.mismatched
          << " pattern mismatch, " << r.positive_after << " with a positive face after discharge\n";
    }
  } else {
    Json jr = Json::array();
    for (const auto& r : rows) {
      jr.push_back({{"n", r.n},
                    {"reduced_curves", r.curves},
                    {"conserved", r.conserved},
                    {"pattern_mismatch", r.mismatched},
                    {"positive_after", r.positive_after}});
    }
    out << Json{{"rule", rule.name}, {"n_max", cfg.max_n}, {"identify_mirror", cfg.mirror}, {"rows", jr}}.dump(2)
        << "\n";
  }
  return 0;
}

// ---- render ----------------------------------------------------------------

int cmd_render(const RunConfig& cfg, const std::vector<Label>& trigon, bool positions, std::ostream& out) {
  require_format(cfg, {"text", "svg"}, "render");
  const auto words = read_inputs(cfg.inputs);
  if (words.size() != 1) throw InputError("render takes exactly one word");
  RenderStyle style;
  style.show_positions = positions;
  if (!trigon.empty()) {
    if (trigon.size() != 3) throw InputError("--trigon takes three labels");
    style.trigon = std::array<Label, 3>{trigon[0], trigon[1], trigon[2]};
  }
  out << render_svg(words.front().word, style);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical curves: Gauss words, reductivity, censuses and discharging"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.jobs = 1;

  app.add_flag("--mirror,!--no-mirror", cfg.mirror, "identify mirror images (default) or keep them apart");
  app.add_option("--format", cfg.format, "output format: text | json | tsv | svg")
      ->check(CLI::IsMember({"text", "json", "tsv", "svg"}));
  app.add_option("--jobs,-j", cfg.jobs, "worker threads (0 = hardware concurrency)");
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached census files");
  app.add_option("--output,-o", cfg.output, "write to this file instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "realizability, faces, bigons, trigons and reductivity");
  analyze->add_option("inputs", cfg.inputs, "GW1 words or files")->required();

  bool check_each = false;
  auto* red = app.add_subcommand("reductivity", "reductivity with a witness chain of I-moves");
  red->add_option("inputs", cfg.inputs, "GW1 words or files")->required();
  red->add_flag("--check-realizable", check_each, "check every intermediate word for realizability");

  auto* surv = app.add_subcommand("survey", "reductivity histogram for every curve up to n crossings");
  surv->add_option("n_max,--max-n", cfg.max_n, "largest crossing number")->required();

  bool reduced = false;
  std::string strategy = "words";
  auto* en = app.add_subcommand("enumerate", "census of curves with n crossings");
  en->add_option("n,--max-n", cfg.max_n, "crossing number")->required();
  en->add_flag("--reduced", reduced, "reduced curves only");
  en->add_option("--strategy", strategy, "words | maps")->check(CLI::IsMember({"words", "maps"}));

  std::string set_text;
  auto* scan = app.add_subcommand("scan", "search reduced curves up to n_max for one avoiding a tangle set");
  scan->add_option("set", set_text, "tangle set, e.g. \"bigon|trigon\"")->required();
  scan->add_option("n_max,--max-n", cfg.max_n, "largest crossing number")->required();

  std::string rule_path;
  auto* dis = app.add_subcommand("discharge-audit", "charges and a discharging rule on words or on the census");
  dis->add_option("--max-n", cfg.max_n, "audit every reduced curve up to this crossing number");
  dis->add_option("--rule", rule_path, "rule file (default: D1)");
  dis->add_option("inputs", cfg.inputs, "GW1 words or files (audited face by face)");

  std::vector<Label> trigon;
  bool positions = false;
  auto* render = app.add_subcommand("render", "SVG chord diagram");
  render->add_option("inputs", cfg.inputs, "GW1 word or file")->required();
  render->add_option("--trigon", trigon, "three crossing labels to highlight")->delimiter(',');
  render->add_flag("--positions", positions, "label endpoints with their word positions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cfg.jobs == 0) cfg.jobs = default_jobs();

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot write '" << cfg.output << "'\n";
      return 2;
    }
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*red) return cmd_reductivity(cfg, check_each, out);
    if (*surv) return cmd_survey(cfg, out);
    if (*en) return cmd_enumerate(cfg, reduced, strategy, out);
    if (*scan) {
      try {
        return cmd_scan(cfg, set_text, out);
      } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n  " << set_text << "\n  " << std::string(e.position(), ' ')
                  << "^\n";
        return 2;
      }
    }
    if (*dis) {
      if (cfg.inputs.empty() && cfg.max_n == 0) throw InputError("discharge-audit needs words or --max-n");
      return cmd_discharge(cfg, rule_path, out);
    }
    if (*render) return cmd_render(cfg, trigon, positions, out);
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
