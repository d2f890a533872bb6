#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "sphcurve/analytics.hpp"
#include "sphcurve/enumeration.hpp"
#include "sphcurve/reductivity.hpp"

using namespace sphcurve;

namespace {

std::vector<Label> letters(const GaussWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST(Reductivity, FreeChordGivesZero) {
  const auto r = reductivity(parse_word("1 1 2 3 4 2 3 4"));
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_TRUE(r.verify());
  EXPECT_EQ(reductivity(parse_word("1 1")).value, 0);
}

TEST(Reductivity, TrefoilIsOne) {
  const auto r = reductivity(parse_word("1 2 3 1 2 3"));
  EXPECT_EQ(r.value, 1);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_TRUE(r.verify());
  EXPECT_TRUE(has_free_chord(to_word(r.witness.back().after)));
}

TEST(Reductivity, RejectsUnrealizable) {
  EXPECT_THROW(reductivity(parse_word("1 2 3 4 1 2 3 4")), NotRealizable);
  EXPECT_THROW(reductivity(parse_word("1 1 2 3 2 3")), NotRealizable);
}

TEST(Reductivity, TamperedWitnessFailsVerify) {
  auto r = reductivity(parse_word("1 2 3 1 2 3"));
  r.value = 2;
  EXPECT_FALSE(r.verify());
  r = reductivity(parse_word("1 2 3 1 2 3"));
  r.witness[0].after = canonical_key(parse_word("1 2 1 2"));
  EXPECT_FALSE(r.verify());
}

TEST(Reductivity, AgreesWithOracleOverCensus) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : enumerate_words(n).curves) {
      const auto w = GaussWord::from_letters(k.letters);
      const auto r = reductivity(w);
      EXPECT_EQ(r.value, oracle::reductivity(letters(w))) << w.str();
      EXPECT_TRUE(r.verify()) << w.str();
    }
  }
}

TEST(Reductivity, RealizableCheckAtEachNodeChangesNothing) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& k : enumerate_words(n, {true, true, true}).curves) {
      const auto w = GaussWord::from_letters(k.letters);
      EXPECT_EQ(reductivity(w).value, reductivity(w, {true}).value);
    }
  }
}

TEST(Reductivity, DropsByAtMostOnePerSplice) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& k : enumerate_words(n).curves) {
      const auto w = GaussWord::from_letters(k.letters);
      const int r = reductivity(w).value;
      int best = kReductivityBound + 1;
      for (Label p = 1; p <= n; ++p) {
        const int child = reductivity(apply_I(w, p)).value;
        EXPECT_GE(child, r - 1);
        best = std::min(best, child);
      }
      if (r > 0) EXPECT_EQ(best, r - 1);
    }
  }
}

TEST(Reductivity, InvariantUnderMirrorAndReversal) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : enumerate_words(n, {false, true, false}).curves) {
      const auto c = PlaneCurve::from_key(k);
      const int r = reductivity(c.word()).value;
      EXPECT_EQ(reductivity(c.mirrored().word()).value, r);
      EXPECT_EQ(reductivity(c.word().reversed()).value, r);
    }
  }
}

TEST(Reductivity, LocalBounds) {
  const std::map<TrigonLetter, int> trigon_bound{
      {TrigonLetter::A, 2}, {TrigonLetter::B, 3}, {TrigonLetter::C, 3}, {TrigonLetter::D, 4}};
  for (int n = 2; n <= 7; ++n) {
    for (const auto& k : enumerate_words(n, {true, true, true}).curves) {
      const auto c = PlaneCurve::from_key(k);
      const int r = reductivity(c.word()).value;
      for (const auto& b : find_bigons(c)) EXPECT_LE(r, b.coherent ? 2 : 1) << k.str();
      for (const auto& t : find_trigons(c)) EXPECT_LE(r, trigon_bound.at(t.letter)) << k.str();
    }
  }
}

TEST(Survey, OneCrossing) {
  const auto rows = survey(1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].curves, 1u);
  EXPECT_EQ(rows[0].histogram[0], 1u);
  EXPECT_EQ(rows[0].max, 0);
}

TEST(Survey, TrefoilLandsInOne) {
  const auto rows = survey(3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].histogram[1], 1u);
  EXPECT_EQ(rows[2].histogram[0] + 1, rows[2].curves);
}

TEST(Survey, BoundHoldsAndHistogramsAddUp) {
  for (bool mirror : {true, false}) {
    for (const auto& row : survey(7, {mirror})) {
      std::size_t total = 0;
      for (auto h : row.histogram) total += h;
      EXPECT_EQ(total, row.curves);
      EXPECT_LE(row.max, kReductivityBound);
      EXPECT_LE(row.words, row.curves);
      for (const auto& r : row.max_four) EXPECT_TRUE(r.verify());
    }
  }
}

TEST(Survey, ParallelRunIsIdentical) {
  const auto a = survey(7, {true, 1});
  const auto b = survey(7, {true, 3});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].histogram, b[i].histogram);
    EXPECT_EQ(a[i].max_four_curves, b[i].max_four_curves);
  }
  EXPECT_THROW(survey(0), InputError);
}
