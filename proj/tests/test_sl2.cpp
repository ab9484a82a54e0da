#include <gtest/gtest.h>

#include <random>

#include "chowkit/sl2.hpp"

using namespace chowkit;

namespace {
const SL2Rep L = SL2Rep::irreducible(1);
SL2Rep S(int i) { return SL2Rep::irreducible(i); }
}  // namespace

TEST(SL2, Dimensions) {
  EXPECT_EQ(S(3).dim(), 4);
  EXPECT_EQ(tensor(L, S(2)), S(3) + S(1));
  EXPECT_EQ(tensor(L, S(2)).dim(), 6);
  EXPECT_EQ((S(2) + S(2)).dim(), 6);
  EXPECT_EQ((L + S(3)).dim(), 6);
  EXPECT_EQ(tensor(S(2), S(2)), S(4) + S(2) + S(0));
}

TEST(SL2, EulerSolve) {
  const SL2Rep W = S(2) + S(2);
  const SL2Rep V = L + S(3);
  EXPECT_EQ(euler_solve({std::nullopt, tensor(L, W), S(3) + L}), 6);
  EXPECT_EQ(euler_solve({SL2Rep::trivial(1), tensor(L, V), S(2) + S(2) + S(4), std::nullopt}), 0);
  EXPECT_EQ(euler_solve({S(5), S(5), std::nullopt}), 0);
  EXPECT_THROW(euler_solve({std::nullopt, std::nullopt, S(1)}), DomainError);
  EXPECT_THROW(euler_solve({S(0), S(1)}), DomainError);
  EXPECT_THROW(euler_solve({std::nullopt, S(0), S(3)}), DomainError);
  EXPECT_THROW(euler_solve({std::nullopt, S(1)}, false), DomainError);
}

TEST(SL2, EulerSolveIsInvariantUnderSplicing) {
  // 0 -> A -> B -> C -> 0 and 0 -> C -> D -> E -> 0 splice to
  // 0 -> A -> B -> D -> E -> 0.
  const SL2Rep A = S(1), B = S(1) + S(3), C = S(3), D = S(3) + S(2), E = S(2);
  EXPECT_EQ(euler_solve({A, B, std::nullopt}), C.dim());
  EXPECT_EQ(euler_solve({A, B, D, std::nullopt}), E.dim());
  EXPECT_EQ(euler_solve({std::nullopt, B, D, E}), A.dim());
}

TEST(SL2, SectionCounts) {
  EXPECT_EQ(monomial_section_count({1, 1, 1, 1}), 16);
  EXPECT_EQ(monomial_section_count({1, 1, 1, 1}, true), 15);
  EXPECT_EQ(monomial_section_count({0, 0, 0, 0}), 1);
  EXPECT_EQ(monomial_section_count({1, 1, 1}), 8);
  EXPECT_THROW(monomial_section_count({-1}), DomainError);
}

TEST(SL2, TensorIsMultiplicativeCommutativeAssociative) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> part(0, 5), count(1, 3);
  auto random_rep = [&] {
    std::vector<int> p;
    for (int i = count(rng); i > 0; --i) p.push_back(part(rng));
    return SL2Rep(p);
  };
  for (int n = 0; n < 200; ++n) {
    SL2Rep a = random_rep(), b = random_rep(), c = random_rep();
    EXPECT_EQ(tensor(a, b).dim(), a.dim() * b.dim());
    EXPECT_EQ(tensor(a, b), tensor(b, a));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  }
}
