#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "lhl/error.hpp"
#include "lhl/inversion.hpp"
#include "lhl/properties.hpp"
#include "lhl/simplex.hpp"
#include "oracles.hpp"

namespace lhl {
namespace {

IntPoint point(std::initializer_list<long> xs) {
  IntPoint p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

SSequence random_s(std::mt19937_64& rng, int max_n, int max_entry) {
  std::uniform_int_distribution<int> len(1, max_n);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  std::vector<std::int64_t> s(static_cast<std::size_t>(len(rng)));
  for (auto& x : s) x = entry(rng);
  return SSequence(std::move(s));
}

BigInt det_volume(const LatticeSimplex& simplex) {
  const auto& v = simplex.vertices();
  std::vector<std::vector<mpz_class>> m;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::vector<mpz_class> row;
    for (std::size_t k = 0; k < v[i].size(); ++k) row.push_back(v[i][k] - v[0][k]);
    m.push_back(row);
  }
  return oracle::abs_det(m);
}

TEST(LatticeSimplex, RejectsDependentVertices) {
  EXPECT_THROW(LatticeSimplex({point({0, 0}), point({1, 1}), point({2, 2})}), Error);
  EXPECT_THROW(LatticeSimplex({point({0, 0}), point({0, 0})}), Error);
  EXPECT_THROW(LatticeSimplex({point({0, 0}), point({1})}), Error);
}

TEST(LatticeSimplex, LectureHallVertices) {
  const LatticeSimplex t = lecture_hall_simplex(SSequence({2, 3, 4}));
  ASSERT_EQ(t.vertices().size(), 4u);
  EXPECT_EQ(t.vertices()[0], point({2, 3, 4}));
  EXPECT_EQ(t.vertices()[1], point({0, 3, 4}));
  EXPECT_EQ(t.vertices()[2], point({0, 0, 4}));
  EXPECT_EQ(t.vertices()[3], point({0, 0, 0}));
}

TEST(LatticeSimplex, NormalizedVolumeMatchesDeterminant) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const SSequence s = random_s(rng, 5, 7);
    const LatticeSimplex t = lecture_hall_simplex(s);
    EXPECT_EQ(t.normalized_volume(), det_volume(t));
    EXPECT_EQ(t.normalized_volume(), s.product());
  }
}

TEST(LatticeSimplex, LowerDimensionalSegment) {
  const LatticeSimplex seg({point({0, 0}), point({2, 4})});
  EXPECT_EQ(seg.dimension(), 1u);
  EXPECT_EQ(seg.normalized_volume(), 2);
  EXPECT_EQ(hstar(seg), (IntPolynomial{1, 1}));
  EXPECT_EQ(local_hstar(seg), (IntPolynomial{0, 1}));
  const auto pts = half_open_points(seg);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].coordinates, point({1, 2, 1}));
  EXPECT_EQ(pts[1].lambda, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Parallelepiped, MethodsAgree) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const SSequence s = random_s(rng, 4, 4);
    const LatticeSimplex t = lecture_hall_simplex(s);
    EnumerationOptions box;
    box.method = EnumerationMethod::BoundingBox;
    EXPECT_EQ(half_open_points(t), half_open_points(t, box)) << s.to_string();
  }
}

TEST(Parallelepiped, PointsReconstructFromLambda) {
  const SSequence s({2, 3, 2});
  const LatticeSimplex t = lecture_hall_simplex(s);
  for (const auto& p : half_open_points(t)) {
    for (std::size_t k = 0; k <= t.ambient_dimension(); ++k) {
      Rational sum = 0;
      for (std::size_t i = 0; i < t.vertices().size(); ++i) {
        const BigInt coord = k < t.ambient_dimension() ? t.vertices()[i][k] : BigInt(1);
        sum += p.lambda[i] * coord;
      }
      EXPECT_EQ(sum, Rational(p.coordinates[k]));
    }
    for (const auto& l : p.lambda) {
      EXPECT_GE(l, 0);
      EXPECT_LT(l, 1);
    }
  }
}

TEST(Parallelepiped, HstarIsEulerianAndLocalIsDerangement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const SSequence s = random_s(rng, 5, 5);
    const LatticeSimplex t = lecture_hall_simplex(s);
    EXPECT_EQ(hstar(t), IntPolynomial(oracle::sequence_poly(s.entries(), false))) << s.to_string();
    EXPECT_EQ(local_hstar(t), IntPolynomial(oracle::sequence_poly(s.entries(), true))) << s.to_string();
    EXPECT_TRUE(is_symmetric(local_hstar(t), s.size() + 1));
  }
}

TEST(Parallelepiped, GuardrailNamesTheCap) {
  EnumerationOptions small;
  small.max_points = 10;
  try {
    hstar(lecture_hall_simplex(SSequence({4, 4})), small);
    FAIL() << "expected VolumeTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VolumeTooLarge);
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
}

TEST(RemMap, IsAHeightPreservingBijection) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const SSequence s = random_s(rng, 4, 5);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& p : half_open_points(lecture_hall_simplex(s))) {
      const InversionSequence e = rem_map(p, s);
      EXPECT_TRUE(seen.insert(e.entries()).second);
      EXPECT_EQ(BigInt(descent_count(e.entries(), s)), p.height());
      EXPECT_EQ(p.is_open(), is_restricted(e.entries(), s));
    }
    EXPECT_EQ(BigInt(static_cast<long>(seen.size())), s.product());
  }
}

TEST(Faces, GcdSequence) {
  const SSequence s({2, 4, 6, 3});
  const std::vector<std::size_t> idx{0, 2, 4};
  EXPECT_EQ(face_mu(s, idx).entries(), (std::vector<std::int64_t>{2, 3}));
  const std::vector<std::size_t> single{1};
  EXPECT_THROW(face_mu(s, single), Error);
}

TEST(Faces, LocalHstarFollowsGcdFormula) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SSequence s = random_s(rng, 4, 6);
    const LatticeSimplex t = lecture_hall_simplex(s);
    const std::size_t n = s.size();
    for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i <= n; ++i) {
        if (mask & (1u << i)) idx.push_back(i);
      }
      std::vector<std::int64_t> mu;
      for (std::size_t j = 1; j < idx.size(); ++j) {
        std::int64_t g = 0;
        for (std::size_t k = idx[j - 1] + 1; k <= idx[j]; ++k) g = std::gcd(g, s(k));
        mu.push_back(g);
      }
      EXPECT_EQ(local_hstar(face(t, idx)), IntPolynomial(oracle::sequence_poly(mu, true)))
          << "s=" << s.to_string() << " mask=" << mask;
    }
  }
}

}  // namespace
}  // namespace lhl
