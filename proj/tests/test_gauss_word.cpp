#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sphcurve/gauss_word.hpp"

using namespace sphcurve;

namespace {

std::vector<Label> letters(const GaussWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST(ParseWord, AcceptsInterlacedPair) {
  const auto w = parse_word("1 2 1 2");
  EXPECT_EQ(w.crossings(), 2);
  EXPECT_EQ(w.size(), 4u);
}

TEST(ParseWord, RejectsSingleOccurrence) { EXPECT_THROW(parse_word("1 2 1"), MalformedWord); }

TEST(ParseWord, RejectsTripleOccurrence) { EXPECT_THROW(parse_word("1 1 1 2 2 1"), MalformedWord); }

TEST(ParseWord, RejectsEmpty) {
  EXPECT_THROW(parse_word(""), MalformedWord);
  EXPECT_THROW(parse_word("   "), MalformedWord);
}

TEST(ParseWord, NormalizesByFirstAppearance) {
  EXPECT_EQ(letters(parse_word("2 3 1 2 3 1")), (std::vector<Label>{1, 2, 3, 1, 2, 3}));
  EXPECT_EQ(letters(parse_word("  7\t9 7\n9 ")), (std::vector<Label>{1, 2, 1, 2}));
}

TEST(Interlaced, Examples) {
  EXPECT_TRUE(interlaced(parse_word("1 2 3 1 2 3"), 1, 2));
  EXPECT_FALSE(interlaced(parse_word("1 1 2 2"), 1, 2));
  EXPECT_TRUE(interlaced(parse_word("1 2 1 2"), 1, 2));
}

TEST(Interlaced, Errors) {
  const auto w = parse_word("1 2 1 2");
  EXPECT_THROW(interlaced(w, 1, 3), UnknownLabel);
  EXPECT_THROW(interlaced(w, 0, 1), UnknownLabel);
  EXPECT_THROW(interlaced(w, 1, 1), UnknownLabel);
}

TEST(Interlaced, MatchesOracleAndIsSymmetric) {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 6;
    const auto raw = oracle::random_word(n, rng);
    const auto w = GaussWord::from_letters(raw);
    const auto norm = letters(w);
    for (Label a = 1; a <= n; ++a)
      for (Label b = 1; b <= n; ++b) {
        if (a == b) continue;
        EXPECT_EQ(interlaced(w, a, b), oracle::interlaced(norm, a, b));
        EXPECT_EQ(interlaced(w, a, b), interlaced(w, b, a));
      }
  }
}

TEST(FreeChords, Examples) {
  EXPECT_EQ(free_chords(parse_word("1 1 2 3 2 3")), (std::vector<Label>{1}));
  EXPECT_TRUE(free_chords(parse_word("1 2 3 1 2 3")).empty());
  EXPECT_EQ(free_chords(parse_word("1 2 2 1")), (std::vector<Label>{1, 2}));
}

TEST(FreeChords, AgreesWithGraphDegreeAndOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto w = GaussWord::from_letters(oracle::random_word(1 + t % 7, rng));
    const InterlacementGraph g(w);
    std::vector<Label> zero;
    for (Label a = 1; a <= w.crossings(); ++a)
      if (g.degree(a) == 0) zero.push_back(a);
    EXPECT_EQ(free_chords(w), zero);
    const auto o = oracle::free_chords(letters(w));
    EXPECT_EQ(std::vector<Label>(o.begin(), o.end()), zero);
    EXPECT_EQ(has_free_chord(w), !zero.empty());
  }
}

TEST(InterlacementGraph, SymmetricNoLoops) {
  const InterlacementGraph g(parse_word("1 2 3 1 4 2 3 4"));
  for (Label a = 1; a <= 4; ++a) {
    EXPECT_FALSE(g.edge(a, a));
    for (Label b = 1; b <= 4; ++b) EXPECT_EQ(g.edge(a, b), g.edge(b, a));
  }
}

TEST(CanonicalKey, Examples) {
  EXPECT_EQ(canonical_key(parse_word("2 3 1 2 3 1")), canonical_key(parse_word("1 2 3 1 2 3")));
  EXPECT_EQ(canonical_key(parse_word("2 3 1 2 3 1")).letters, (std::vector<Label>{1, 2, 3, 1, 2, 3}));
  EXPECT_EQ(canonical_key(parse_word("1 1")).letters, (std::vector<Label>{1, 1}));
  const auto w = parse_word("1 2 2 1");
  EXPECT_EQ(canonical_key(w), canonical_key(w.reversed()));
}

TEST(CanonicalKey, MatchesBruteForceOracle) {
  std::mt19937 rng(3);
  for (int t = 0; t < 400; ++t) {
    const auto raw = oracle::random_word(1 + t % 7, rng);
    EXPECT_EQ(canonical_key(GaussWord::from_letters(raw)).letters, oracle::canonical(raw));
  }
}

TEST(CanonicalKey, InvariantUnderRotationReversalRelabel) {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 7;
    const auto w = GaussWord::from_letters(oracle::random_word(n, rng));
    const auto key = canonical_key(w);
    EXPECT_EQ(canonical_key(to_word(key)), key);  // idempotent
    for (std::size_t k = 0; k < w.size(); ++k) {
      EXPECT_EQ(canonical_key(w.rotated(k)), key);
      EXPECT_EQ(canonical_key(w.rotated(k).reversed()), key);
    }
    std::vector<Label> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Label> renamed;
    for (Label a : w.letters()) renamed.push_back(perm[static_cast<std::size_t>(a - 1)] + 100);
    EXPECT_EQ(canonical_key(GaussWord::from_letters(renamed)), key);
  }
}

TEST(CanonicalKey, IsCanonicalAgreesWithKey) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& raw : oracle::all_words(n)) {
      const auto w = GaussWord::from_letters(raw);
      EXPECT_EQ(is_canonical(w), canonical_key(w).letters == raw);
    }
  }
}

TEST(Parity, EvenInterlacementDefinition) {
  EXPECT_TRUE(even_interlacement(parse_word("1 2 3 1 2 3")));
  EXPECT_FALSE(even_interlacement(parse_word("1 2 3 4 1 2 3 4")));
  EXPECT_FALSE(even_interlacement(parse_word("1 2 1 2")));
}
