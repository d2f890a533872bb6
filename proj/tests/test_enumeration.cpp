#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sphcurve/enumeration.hpp"
#include "sphcurve/splice.hpp"

using namespace sphcurve;

namespace {

std::set<std::vector<Label>> words_of(const CurveCensus& c) {
  std::set<std::vector<Label>> s;
  for (const auto& k : c.curves) s.insert(k.letters);
  return s;
}

}  // namespace

TEST(EnumerateWords, OneCrossing) {
  const auto c = enumerate_words(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.curves[0].letters, (std::vector<Label>{1, 1}));
}

TEST(EnumerateWords, TwoCrossingsStrategiesAgree) {
  const auto a = enumerate_words(2);
  const auto b = enumerate_maps(2);
  EXPECT_EQ(a.curves, b.curves);
  EXPECT_LE(a.size(), 3u);
}

TEST(EnumerateWords, ThreeCrossingsContainTrefoil) {
  const auto c = enumerate_words(3);
  EXPECT_TRUE(c.contains(parse_signed_word("1 2 3 1 2 3 [-,+,-]")));
}

TEST(EnumerateMaps, EqualsWordsBothConventions) {
  for (int n = 1; n <= 6; ++n) {
    for (bool mirror : {true, false}) {
      const CensusConvention conv{mirror, true, false};
      EXPECT_EQ(enumerate_words(n, conv).curves, enumerate_maps(n, conv).curves) << "n=" << n << " mirror=" << mirror;
    }
  }
}

TEST(EnumerateMaps, ReducedSubcensusAgrees) {
  for (int n = 1; n <= 6; ++n) {
    const CensusConvention conv{true, true, true};
    EXPECT_EQ(enumerate_words(n, conv).curves, enumerate_maps(n, conv).curves);
  }
}

// Counts of spherical curves up to rotation, reversal and mirror image, as
// tabulated in the literature; the two in-repo generators are the real check.
TEST(EnumerateWords, KnownCountsMirrorIdentified) {
  const std::vector<std::size_t> expected{1, 2, 6, 19, 76, 376, 2194};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_words(n).size(), expected[static_cast<std::size_t>(n - 1)]);
}

TEST(EnumerateWords, WordsMatchOracleRealizableWords) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Label>> expected;
    for (const auto& raw : oracle::canonical_words(n))
      if (oracle::realizable(raw)) expected.insert(raw);
    EXPECT_EQ(words_of(enumerate_words(n)), expected) << "n=" << n;
  }
}

TEST(EnumerateWords, MembersRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    for (bool mirror : {true, false}) {
      const auto census = enumerate_words(n, {mirror, true, false});
      for (const auto& k : census.curves) {
        const auto c = PlaneCurve::from_key(k);
        EXPECT_EQ(c.crossings(), n);
        EXPECT_EQ(c.key(mirror), k);
        bool found = false;
        for (const auto& e : realize_all(c.word(), mirror)) found = found || e.key(mirror) == k;
        EXPECT_TRUE(found) << k.str();
      }
    }
  }
}

TEST(EnumerateWords, MirrorQuotientNeverLarger) {
  for (int n = 1; n <= 7; ++n) EXPECT_LE(enumerate_words(n, {true}).size(), enumerate_words(n, {false}).size());
}

TEST(EnumerateWords, ReducedOnlyIsTheReducedPart) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<EmbeddingKey> filtered;
    for (const auto& k : enumerate_words(n).curves)
      if (is_reduced(PlaneCurve::from_key(k))) filtered.push_back(k);
    EXPECT_EQ(enumerate_words(n, {true, true, true}).curves, filtered);
  }
}

TEST(EnumerateWords, ClosedUnderI) {
  for (int n = 2; n <= 7; ++n) {
    const auto below = words_of(enumerate_words(n - 1));
    for (const auto& k : enumerate_words(n).curves) {
      const auto w = GaussWord::from_letters(k.letters);
      for (Label p = 1; p <= n; ++p) EXPECT_TRUE(below.count(canonical_key(apply_I(w, p)).letters)) << k.str();
    }
  }
}

TEST(EnumerateWords, ParallelRunIsIdentical) {
  for (int n = 5; n <= 7; ++n) {
    EXPECT_EQ(enumerate_words(n, {}, 1).curves, enumerate_words(n, {}, 4).curves);
    EXPECT_EQ(enumerate_words(n, {true, true, true}, 1).curves, enumerate_words(n, {true, true, true}, 3).curves);
  }
}

TEST(EnumerateWords, BoundsChecked) {
  EXPECT_THROW(enumerate_words(0), InputError);
  EXPECT_THROW(enumerate_words(kMaxEnumerationCrossings + 1), InputError);
  EXPECT_THROW(enumerate_maps(0), InputError);
}

TEST(CandidateWords, AllPassParity) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Label>> expected;
    for (const auto& raw : oracle::canonical_words(n))
      if (even_interlacement(GaussWord::from_letters(raw))) expected.insert(raw);
    std::set<std::vector<Label>> got;
    for (const auto& w : candidate_words(n)) got.insert({w.letters().begin(), w.letters().end()});
    EXPECT_EQ(got, expected);
  }
}

TEST(CensusFile, RoundTrip) {
  const auto c = enumerate_words(5, {false, true, false});
  std::stringstream ss;
  write_census(ss, c);
  const auto back = read_census(ss);
  EXPECT_EQ(back.n, 5);
  EXPECT_EQ(back.convention, c.convention);
  EXPECT_EQ(back.curves, c.curves);
}

TEST(CensusFile, RejectsOtherGenerator) {
  std::stringstream ss("# n=1 mirror=1 reversal=1 reduced_only=0 generator=other count=1\n1 1 [+]\n");
  EXPECT_THROW(read_census(ss), InputError);
  std::stringstream none("1 1 [+]\n");
  EXPECT_THROW(read_census(none), InputError);
}

TEST(CensusFile, ParseSignedWordErrors) {
  EXPECT_THROW(parse_signed_word("1 1"), MalformedWord);
  EXPECT_THROW(parse_signed_word("1 1 [+"), MalformedWord);
  EXPECT_THROW(parse_signed_word("1 1 [+,-]"), MalformedWord);
  EXPECT_THROW(parse_signed_word("2 2 [+]"), MalformedWord);
  EXPECT_THROW(parse_signed_word("1 1 [x]"), MalformedWord);
  EXPECT_EQ(parse_signed_word("1 2 3 1 2 3 [-,+,-]").signs, (std::vector<Sign>{-1, 1, -1}));
}

TEST(CensusFile, CacheIsBuiltOnceAndReused) {
  const auto dir = std::filesystem::temp_directory_path() / "sphcurve_cache_test";
  std::filesystem::remove_all(dir);
  const CensusConvention conv{true, true, false};
  const auto first = load_or_build_census(4, conv, dir);
  const auto path = dir / census_file_name(4, conv);
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_NE(census_file_name(4, conv), census_file_name(4, {false, true, false}));
  EXPECT_NE(census_file_name(4, conv), census_file_name(4, {true, true, true}));
  // a cached file is read back, not regenerated
  {
    std::ofstream out(path);
    CurveCensus fake{4, conv, {first.curves.front()}};
    write_census(out, fake);
  }
  EXPECT_EQ(load_or_build_census(4, conv, dir).size(), 1u);
  std::filesystem::remove_all(dir);
}
