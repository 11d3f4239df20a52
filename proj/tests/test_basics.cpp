#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ptw/errors.hpp"
#include "ptw/positroid.hpp"
#include "ptw/rational.hpp"
#include "ptw/subset.hpp"

using namespace ptw;

namespace {

std::set<Subset> all_but(int n, int k, const Subset& missing) {
  std::set<Subset> out;
  for (const auto& s : k_subsets(n, k)) {
    if (s != missing) out.insert(s);
  }
  return out;
}

// Brute-force a-Gale minimum: the basis whose cyclically sorted form is
// componentwise below every other.
Subset brute_gale_min(const std::set<Subset>& bases, int a, int n) {
  auto key = [&](const Subset& s) {
    std::vector<int> v;
    for (int x : s) v.push_back(((x - a) % n + n) % n);
    std::sort(v.begin(), v.end());
    return v;
  };
  for (const auto& cand : bases) {
    bool below_all = true;
    for (const auto& other : bases) {
      const auto ck = key(cand), ok = key(other);
      for (std::size_t i = 0; i < ck.size(); ++i) below_all = below_all && ck[i] <= ok[i];
    }
    if (below_all) return cand;
  }
  throw std::runtime_error("no minimum");
}

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
}

TEST(Rational, PowerHandlesNegativeExponents) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(Subset, EnumerationAndFormatting) {
  EXPECT_EQ(k_subsets(4, 2).size(), 6u);
  EXPECT_EQ(binomial(18, 9), 48620);
  EXPECT_EQ(format_subset({1, 2, 4}), "1,2,4");
  EXPECT_EQ(parse_subset("4,1,2", 6), (Subset{1, 2, 4}));
  EXPECT_THROW(parse_subset("1,1", 6), InputError);
  EXPECT_THROW(parse_subset("0,2", 6), InputError);
  EXPECT_EQ(mod1(0, 5), 5);
  EXPECT_EQ(mod1(-4, 5), 1);
}

TEST(Gale, MinimaMatchBruteForce) {
  const auto schubert = all_but(6, 3, {1, 2, 3});
  EXPECT_EQ(gale_min(schubert, 1, 6), (Subset{1, 2, 4}));
  EXPECT_EQ(gale_min({{1, 2}}, 2, 2), (Subset{1, 2}));
  std::set<Subset> uniform;
  for (const auto& s : k_subsets(4, 2)) uniform.insert(s);
  EXPECT_EQ(gale_min(uniform, 3, 4), (Subset{3, 4}));
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(gale_min(schubert, a, 6), brute_gale_min(schubert, a, 6));
  EXPECT_THROW(gale_min({}, 1, 3), MathError);
}

TEST(Necklace, SchubertDivisorExample) {
  const auto bases = all_but(6, 3, {1, 2, 3});
  const Necklace nk = necklace_from_bases(bases, 6, Direction::Forward);
  const std::vector<Subset> want{{1, 2, 4}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}};
  EXPECT_EQ(nk.sets, want);
  const AffinePerm pi = perm_from_necklace(nk);
  EXPECT_EQ(pi.values(), (std::vector<int>{3, 5, 6, 7, 8, 10}));
  EXPECT_EQ(positroid_from_necklace(nk).bases, bases);
  EXPECT_EQ(length(pi), 1);
}

TEST(Necklace, UniformAndDegenerate) {
  const AffinePerm uniform(4, {3, 4, 5, 6});
  EXPECT_EQ(necklace_from_perm(uniform).sets, (std::vector<Subset>{{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_EQ(positroid_from_necklace(necklace_from_perm(uniform)).bases.size(), 6u);
  EXPECT_EQ(length(uniform), 0);
  const AffinePerm top(3, {4, 5, 6});
  for (const auto& s : necklace_from_perm(top).sets) EXPECT_EQ(s, (Subset{1, 2, 3}));
  const AffinePerm loops(3, {1, 2, 3});
  for (const auto& s : necklace_from_perm(loops).sets) EXPECT_TRUE(s.empty());
  // single basis {1,3} in [4]: 2 and 4 are loops, 1 and 3 coloops
  const Necklace single = necklace_from_bases({{1, 3}}, 4, Direction::Forward);
  for (const auto& s : single.sets) EXPECT_EQ(s, (Subset{1, 3}));
  EXPECT_EQ(perm_from_necklace(single).values(), (std::vector<int>{5, 2, 7, 4}));
}

TEST(AffinePerm, RejectsInvalidValues) {
  EXPECT_THROW(AffinePerm(3, {1, 1, 3}), InputError);
  EXPECT_THROW(AffinePerm(3, {5, 2, 3}), InputError);   // exceeds a + n
  EXPECT_THROW(AffinePerm(3, {0, 3, 4}), InputError);   // below a
  EXPECT_FALSE(is_bounded_affine_perm(2, {2, 2}));
}

TEST(AffinePerm, ImplicationIsStrict) {
  const AffinePerm pi(6, {3, 5, 6, 7, 8, 10});
  for (int a = 1; a <= 6; ++a) EXPECT_FALSE(pi_implies(pi, a, a));
  // codimension one: exactly one implying pair
  int pairs = 0;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a - 5; b < a; ++b) pairs += pi_implies(pi, a, b);
  }
  EXPECT_EQ(pairs, 1);
}

// Exhaustive round trips over every bounded affine permutation with n <= 6.
TEST(Property, NecklacePermRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    for (const AffinePerm& pi : all_bounded_perms(n)) {
      const Necklace fwd = necklace_from_perm(pi, Direction::Forward);
      const Necklace rev = necklace_from_perm(pi, Direction::Reverse);
      ASSERT_EQ(perm_from_necklace(fwd), pi);
      ASSERT_EQ(perm_from_necklace(rev), pi);
      for (const auto& s : fwd.sets) ASSERT_EQ(static_cast<int>(s.size()), pi.k());
      if (n <= 5) {
        const Positroid m = positroid_from_necklace(fwd);
        ASSERT_EQ(necklace_from_bases(m.bases, n, Direction::Forward), fwd);
        ASSERT_EQ(necklace_from_bases(m.bases, n, Direction::Reverse), rev);
        for (int a = 1; a <= n; ++a) ASSERT_EQ(gale_min(m.bases, a, n), brute_gale_min(m.bases, a, n));
      }
    }
  }
}

TEST(Property, CountsOfBoundedAffinePermutations) {
  // number of decorated permutations of [n]: 1, 2, 5, 16, 65, 326, 1957
  const std::vector<std::size_t> counts{2, 5, 16, 65, 326, 1957};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(all_bounded_perms(n).size(), counts[n - 1]);
}

TEST(Property, ReverseNecklaceEncodesInverse) {
  for (int n = 1; n <= 5; ++n) {
    for (const AffinePerm& pi : all_bounded_perms(n)) {
      const auto inv = inverse_values_from_reverse(necklace_from_perm(pi, Direction::Reverse));
      for (int b = 1; b <= n; ++b) ASSERT_EQ(inv[b - 1], pi.inverse(b));
    }
  }
}
