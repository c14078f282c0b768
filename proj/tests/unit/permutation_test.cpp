#include <gtest/gtest.h>

#include <set>

#include "lhl/error.hpp"
#include "lhl/inversion.hpp"
#include "lhl/permutation.hpp"
#include "lhl/smirnoff.hpp"
#include "oracles.hpp"

namespace lhl {
namespace {

TEST(Permutation, ParsesBothNotations) {
  EXPECT_EQ(Permutation::parse("34521").values(), (std::vector<int>{3, 4, 5, 2, 1}));
  EXPECT_EQ(Permutation::parse("3 4, 5 2 1"), Permutation::parse("34521"));
  EXPECT_EQ(Permutation::parse("10 1 2 3 4 5 6 7 8 9").size(), 10u);
  EXPECT_THROW(Permutation::parse("112"), Error);
  EXPECT_THROW(Permutation::parse("13"), Error);
  EXPECT_EQ(Permutation::parse("34521").to_string(), "34521");
}

TEST(Permutation, CyclesStartAtTheirMinimum) {
  const Permutation p = Permutation::parse("34521");
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}}));
  EXPECT_EQ(excedance_count(p), 3);
  EXPECT_EQ(descent_count(p), 2);
  EXPECT_TRUE(is_derangement(p));
  EXPECT_FALSE(is_derangement(Permutation::parse("21354")));
}

TEST(Permutation, LehmerCodeRoundTrips) {
  for_each_permutation(6, [](const std::vector<int>& v) {
    const Permutation p(v);
    const auto code = p.lehmer_code();
    for (std::size_t i = 0; i < code.size(); ++i) {
      int expected = 0;
      for (std::size_t j = i + 1; j < v.size(); ++j) expected += v[j] < v[i];
      ASSERT_EQ(code[i], expected);
    }
    ASSERT_EQ(Permutation::from_lehmer_code(code), p);
  });
}

TEST(Classical, EulerianAndDerangementPolynomials) {
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_EQ(eulerian_poly(n), IntPolynomial(oracle::eulerian_closed_form(n))) << n;
    const IntPolynomial d = derangement_poly(n);
    EXPECT_EQ(d, IntPolynomial(oracle::derangement_bruteforce(n))) << n;
    EXPECT_EQ(d.evaluate(BigInt(1)), oracle::derangement_count(n)) << n;
  }
  EXPECT_EQ(derangement_poly(4), (IntPolynomial{0, 1, 7, 1}));
}

TEST(Classical, GuardrailOnPermutationSize) {
  EXPECT_THROW(derangement_poly(7, 6), Error);
  EXPECT_NO_THROW(derangement_poly(6, 6));
}

TEST(Bijection, WorkedExample) {
  const InversionSequence e({1, 0, 3, 2}, derangement_bound(5));
  const Permutation p = inversion_to_derangement(e);
  EXPECT_EQ(p.to_string(), "34521");
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}}));
  EXPECT_EQ(derangement_to_inversion(p), e);
}

TEST(Bijection, IsABijectionSendingDescentsToExcedances) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const SSequence s = derangement_bound(n);
    std::set<Permutation> image;
    for (const auto& e : enumerate_restricted(s)) {
      const Permutation p = inversion_to_derangement(e);
      ASSERT_TRUE(is_derangement(p));
      ASSERT_EQ(excedance_count(p), descent_count(e.entries(), s));
      ASSERT_EQ(derangement_to_inversion(p), e);
      image.insert(p);
    }
    EXPECT_EQ(BigInt(static_cast<long>(image.size())), oracle::derangement_count(static_cast<unsigned>(n)));
  }
}

TEST(Bijection, RejectsInvalidInputs) {
  EXPECT_THROW(inversion_to_derangement(InversionSequence({0, 0}, derangement_bound(3))), Error);
  EXPECT_THROW(derangement_to_inversion(Permutation::parse("213")), Error);
  EXPECT_THROW(derangement_bound(1), Error);
}

TEST(Smirnoff, WordsAreCountedByTransferMatrix) {
  for (unsigned m = 0; m <= 7; ++m) {
    for (int r = 1; r <= 4; ++r) {
      const auto words = smirnoff_words(m, r);
      EXPECT_EQ(BigInt(static_cast<long>(words.size())), oracle::smirnoff_count(m, static_cast<unsigned>(r)))
          << "m=" << m << " r=" << r;
      for (const auto& w : words) {
        EXPECT_TRUE(is_smirnoff_word(w.letters, r));
        EXPECT_EQ(w.reversed().descent_count(), w.ascent_count());
      }
    }
  }
  EXPECT_FALSE(is_smirnoff_word({0, 1, 1, 0}, 2));
  EXPECT_FALSE(is_smirnoff_word({0, 2, 0}, 2));
}

TEST(Smirnoff, EdgewiseEqualsConstantDerangement) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const SSequence s(std::vector<std::int64_t>(n, r));
      EXPECT_EQ(smirnoff_descent_poly(n + 1, r), IntPolynomial(oracle::sequence_poly(s.entries(), true)))
          << "n=" << n << " r=" << r;
    }
  }
  EXPECT_TRUE(smirnoff_descent_poly(3, 2).is_zero());
}

}  // namespace
}  // namespace lhl
