#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "deltasg/semigroup.hpp"
#include "support.hpp"

using deltasg::DeltaSet;
using deltasg::Errc;
using deltasg::Factorization;
using deltasg::Generators;
using deltasg::Int;
using support::code_of;

TEST(Generators, SortsAndKeepsInputOrder) {
  const auto S = Generators::validate(15, 6, 10);
  EXPECT_EQ(S[0], 6);
  EXPECT_EQ(S[1], 10);
  EXPECT_EQ(S[2], 15);
  EXPECT_EQ(S.input_order()[0], 15);
}

TEST(Generators, RejectsBadTriples) {
  EXPECT_EQ(code_of([] { Generators::validate(4, 6, 8); }), Errc::GcdNotOne);
  EXPECT_EQ(code_of([] { Generators::validate(3, 5, 8); }), Errc::NotMinimal);
  EXPECT_EQ(code_of([] { Generators::validate(3, 6, 7); }), Errc::NotMinimal);
  EXPECT_EQ(code_of([] { Generators::validate(3, 3, 7); }), Errc::NotThreeAtoms);
  EXPECT_EQ(code_of([] { Generators::validate(0, 5, 7); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Generators::validate(-3, 5, 7); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Generators::validate(1, 5, 7); }), Errc::NotMinimal);
}

TEST(Semigroup, MembershipAndFrobeniusAgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(3, 40);
  int checked = 0;
  while (checked < 40) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    std::optional<Generators> S;
    try {
      S = Generators::validate(a, b, c);
    } catch (const deltasg::Error&) {
      continue;
    }
    ++checked;
    const auto n = support::atoms64(*S);
    std::int64_t frob = -1, gaps = 0;
    for (std::int64_t s = 0; s < 2000; ++s) {
      const bool in = !support::naive_factorizations(n, s).empty();
      EXPECT_EQ(deltasg::contains(*S, s), in) << s;
      if (!in) {
        frob = s;
        ++gaps;
      }
    }
    EXPECT_EQ(deltasg::frobenius_number(*S), frob);
    EXPECT_EQ(deltasg::gap_count(*S), gaps);
    EXPECT_EQ(deltasg::is_symmetric(*S), 2 * gaps == frob + 1);
  }
}

TEST(Semigroup, KnownFrobeniusNumbers) {
  EXPECT_EQ(deltasg::frobenius_number(Generators::validate(6, 10, 15)), 29);
  EXPECT_EQ(deltasg::frobenius_number(Generators::validate(6, 8, 11)), 21);
  EXPECT_EQ(deltasg::frobenius_number(Generators::validate(3, 5, 7)), 4);
  EXPECT_TRUE(deltasg::is_symmetric(Generators::validate(6, 10, 15)));
  EXPECT_TRUE(deltasg::is_symmetric(Generators::validate(6, 8, 11)));
  EXPECT_FALSE(deltasg::is_symmetric(Generators::validate(3, 5, 7)));
}

TEST(Semigroup, FactorizationsOfThirty) {
  const auto S = Generators::validate(6, 10, 15);
  const auto zs = deltasg::factorizations(S, 30);
  const std::vector<Factorization> expected{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}};
  EXPECT_EQ(zs, expected);
  EXPECT_EQ(deltasg::length_set(S, 30), (std::vector<Int>{2, 3, 5}));
  EXPECT_EQ(deltasg::delta_of_element(S, 30), (DeltaSet{1, 2}));
}

TEST(Semigroup, SmallElementsOfThreeFiveSeven) {
  const auto S = Generators::validate(3, 5, 7);
  EXPECT_TRUE(deltasg::delta_of_element(S, 10).empty());
  EXPECT_EQ(deltasg::delta_of_element(S, 12), (DeltaSet{2}));
  EXPECT_EQ(deltasg::delta_of_element(S, 14), (DeltaSet{2}));
  EXPECT_EQ(code_of([&] { deltasg::length_set(S, 4); }), Errc::ElementNotInSemigroup);
  EXPECT_TRUE(deltasg::factorizations(S, 4).empty());
  EXPECT_EQ(deltasg::factorizations(S, 0), (std::vector<Factorization>{{0, 0, 0}}));
}

TEST(Semigroup, FactorizationsAgreeWithTripleLoop) {
  std::mt19937_64 rng(5);
  for (const auto& [a, b, c] : {std::array{6, 10, 15}, std::array{6, 8, 11}, std::array{3, 5, 7},
                                std::array{14, 26, 91}, std::array{40, 48, 95}}) {
    const auto S = Generators::validate(a, b, c);
    const auto n = support::atoms64(S);
    std::uniform_int_distribution<std::int64_t> pick(0, 3000);
    for (int i = 0; i < 60; ++i) {
      const std::int64_t s = pick(rng);
      auto naive = support::naive_factorizations(n, s);
      std::vector<std::array<std::int64_t, 3>> got;
      for (const auto& z : deltasg::factorizations(S, s)) {
        got.push_back({z[0].to_int64(), z[1].to_int64(), z[2].to_int64()});
        EXPECT_EQ(z.dot(S.atoms()), s);
      }
      std::sort(naive.begin(), naive.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, naive) << s;
      if (!naive.empty()) {
        EXPECT_EQ(support::to_set(deltasg::delta_of_element(S, s)), support::naive_delta(n, s));
      }
    }
  }
}

TEST(Semigroup, FactorizationOrderIsAscendingInThirdThenSecond) {
  const auto S = Generators::validate(6, 8, 11);
  const auto zs = deltasg::factorizations(S, 300);
  for (std::size_t i = 1; i < zs.size(); ++i) {
    EXPECT_TRUE(std::tie(zs[i - 1][2], zs[i - 1][1]) < std::tie(zs[i][2], zs[i][1]));
  }
}

TEST(KernelVector, PartsAndShift) {
  const deltasg::KernelVector v{1644, -1705, 104};
  EXPECT_EQ(v.positive_part(), (Factorization{1644, 0, 104}));
  EXPECT_EQ(v.negative_part(), (Factorization{0, 1705, 0}));
  EXPECT_EQ(v.length(), 43);
  EXPECT_EQ(v.dot({2015, 7124, 84940}), 0);
  EXPECT_EQ(deltasg::difference(v.positive_part(), v.negative_part()), v);
  EXPECT_FALSE(deltasg::shifted(Factorization{0, 0, 0}, v).has_value());
  EXPECT_EQ(deltasg::shifted(Factorization{0, 1705, 0}, v), (Factorization{1644, 0, 104}));
}

TEST(DeltaSet, Operations) {
  const DeltaSet a{4, 2, 2, 6};
  EXPECT_EQ(a.values(), (std::vector<Int>{2, 4, 6}));
  EXPECT_EQ(a.min(), 2);
  EXPECT_EQ(a.max(), 6);
  EXPECT_TRUE(a.multiples_of_min());
  EXPECT_FALSE((DeltaSet{2, 3}).multiples_of_min());
  EXPECT_TRUE((DeltaSet{2, 6}).is_subset_of(a));
  EXPECT_EQ(a.minus(DeltaSet{4}), (DeltaSet{2, 6}));
  EXPECT_EQ(a.to_string(), "{2,4,6}");
  EXPECT_EQ(deltasg::consecutive_differences(std::vector<Int>{2, 3, 5}), (DeltaSet{1, 2}));
}
