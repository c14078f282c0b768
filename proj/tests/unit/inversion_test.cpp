#include <gtest/gtest.h>

#include <random>

#include "lhl/error.hpp"
#include "lhl/inversion.hpp"
#include "lhl/properties.hpp"
#include "lhl/roots.hpp"
#include "oracles.hpp"

namespace lhl {
namespace {

IntPolynomial from_oracle(const oracle::Coeffs& c) { return IntPolynomial(c); }

SSequence random_s(std::mt19937_64& rng, int max_n, int max_entry) {
  std::uniform_int_distribution<int> len(1, max_n);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  std::vector<std::int64_t> s(static_cast<std::size_t>(len(rng)));
  for (auto& x : s) x = entry(rng);
  return SSequence(std::move(s));
}

TEST(SSequence, ParsesAndRejects) {
  EXPECT_EQ(SSequence::parse("2, 3,4").entries(), (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_EQ(SSequence::parse("2,3,4").to_string(), "2,3,4");
  EXPECT_EQ(SSequence::parse("2,3,4").padded(0), 1);
  EXPECT_EQ(SSequence::parse("2,3,4").padded(4), 1);
  EXPECT_THROW(SSequence::parse("2,0"), Error);
  EXPECT_THROW(SSequence::parse("a"), Error);
  EXPECT_THROW(SSequence::parse(""), Error);
  EXPECT_THROW(SSequence(std::vector<std::int64_t>{}), Error);
}

TEST(InversionSequence, RejectsOutOfRangeEntries) {
  const SSequence s({2, 3});
  EXPECT_NO_THROW(InversionSequence({1, 2}, s));
  EXPECT_THROW(InversionSequence({2, 0}, s), Error);
  EXPECT_THROW(InversionSequence({0}, s), Error);
}

TEST(Enumeration, CountsMatchProductOfEntries) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const SSequence s = random_s(rng, 5, 5);
    EXPECT_EQ(BigInt(static_cast<long>(enumerate_all(s).size())), s.product());
  }
}

TEST(Enumeration, GuardrailNamesTheCap) {
  const SSequence s({1000, 1000, 1000});
  try {
    enumerate_all(s, 1000);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
}

TEST(Eulerian, ClassicalBoundGivesEulerianNumbers) {
  for (std::int64_t n = 1; n <= 7; ++n) {
    std::vector<std::int64_t> s;
    for (std::int64_t i = 1; i <= n; ++i) s.push_back(i);
    EXPECT_EQ(s_eulerian(SSequence(s)), from_oracle(oracle::eulerian_closed_form(static_cast<unsigned>(n))))
        << "n=" << n;
  }
}

TEST(Eulerian, AscentAndDescentPolynomialsMatchOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const SSequence s = random_s(rng, 4, 5);
    EXPECT_EQ(s_eulerian(s, Statistic::Ascent), from_oracle(oracle::sequence_poly(s.entries(), false)));
    EXPECT_EQ(s_eulerian(s, Statistic::Descent), from_oracle(oracle::sequence_poly(s.entries(), false, true)));
  }
}

// The involution negates every entry mod s_i, so it swaps the two statistics.
TEST(Involution, IsAnInvolutionSwappingAscentsAndDescents) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SSequence s = random_s(rng, 4, 6);
    for (const auto& e : enumerate_all(s)) {
      const InversionSequence f = complement_involution(e);
      EXPECT_EQ(complement_involution(f), e);
      if (is_restricted(e.entries(), s)) {
        EXPECT_TRUE(is_restricted(f.entries(), s));
        EXPECT_EQ(ascent_count(e.entries(), s), descent_count(f.entries(), s));
      }
    }
  }
}

TEST(Derangement, EnumerationMatchesOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const SSequence s = random_s(rng, 5, 5);
    const IntPolynomial expected = from_oracle(oracle::sequence_poly(s.entries(), true));
    EXPECT_EQ(s_derangement_enum(s), expected) << s.to_string();
    EXPECT_EQ(s_derangement_enum(s, Statistic::Descent), expected) << s.to_string();
    EXPECT_EQ(enumerate_restricted(s).size(),
              static_cast<std::size_t>(s_derangement_enum(s).evaluate(BigInt(1)).get_ui()));
  }
}

TEST(Derangement, RecursionMatchesEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SSequence s = random_s(rng, 6, 6);
    EXPECT_EQ(s_derangement_recursive(s), s_derangement_enum(s)) << s.to_string();
  }
}

TEST(Derangement, AllOnesIsZero) {
  EXPECT_TRUE(s_derangement_recursive(SSequence({1, 1, 1})).is_zero());
  EXPECT_TRUE(s_derangement_enum(SSequence({2, 2})).is_zero());
}

TEST(Derangement, PropertiesHoldOnRandomCorpus) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const SSequence s = random_s(rng, 6, 6);
    const IntPolynomial d = s_derangement_recursive(s);
    const std::size_t deg = s.size() + 1;
    EXPECT_TRUE(is_symmetric(d, deg)) << s.to_string();
    EXPECT_TRUE(is_real_rooted(d)) << s.to_string();
    EXPECT_TRUE(is_unimodal(d));
    EXPECT_TRUE(is_log_concave(d));
    EXPECT_TRUE(gamma_vector(d, deg).is_nonnegative());
  }
}

TEST(Derangement, InterlacingCertificateInterlacesPairwise) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const SSequence s = random_s(rng, 5, 5);
    const auto family = interlacing_certificate(s);
    ASSERT_EQ(family.size(), static_cast<std::size_t>(s(s.size())));
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        EXPECT_TRUE(interlaces(family[i], family[j])) << s.to_string() << " i=" << i << " j=" << j;
      }
    }
  }
}

}  // namespace
}  // namespace lhl
