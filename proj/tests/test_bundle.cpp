#include <gtest/gtest.h>

#include <random>

#include "chowkit/bundle.hpp"
#include "chowkit/catalog.hpp"

using namespace chowkit;

namespace {

/// Random bundle class of the given rank with small integer Chern classes
/// built from the ring's standard monomials.
BundleClass random_bundle(const ChowRingPtr& R, int rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Poly> c;
  for (int k = 1; k <= std::min(rank, R->dimension()); ++k) {
    Poly p = R->constant(0);
    for (const auto& m : standard_monomials(R->basis(), k)) p += Poly::monomial(R->signature(), m, coef(rng));
    c.push_back(p);
  }
  return {R, rank, c};
}

}  // namespace

TEST(Bundle, TwistOfE1) {
  auto B = catalog("B");
  const Poly h3 = B->var("h_3");
  BundleClass E1(B, 2, {-h3, B->var("a_1")});
  BundleClass T = twist(E1, h3);
  EXPECT_EQ(T.c(1), h3);
  EXPECT_EQ(T.c(2), B->reduce(B->var("a_1")));
}

TEST(Bundle, DualIsAnInvolutionAndZeroTwistIsIdentity) {
  auto B = catalog("B");
  std::mt19937_64 rng(11);
  for (int n = 0; n < 20; ++n) {
    BundleClass E = random_bundle(B, 1 + n % 4, rng);
    EXPECT_EQ(dual(dual(E)), E);
    EXPECT_EQ(twist(E, B->constant(0)), E);
  }
}

TEST(Bundle, QuotientOnG26GivesPerpOverK2) {
  auto G = catalog("G26");
  BundleClass K2(G, 2, {-G->var("h_2"), G->var("c_2")});
  BundleClass W = BundleClass::trivial(G, 6);
  BundleClass Q = whitney_quotient(W, whitney_sum(K2, dual(K2)));
  EXPECT_EQ(Q.rank(), 2);
  EXPECT_TRUE(Q.c(1).is_zero());
  EXPECT_EQ(Q.c(2), G->reduce(G->parse("h_2^2-2*c_2")));
  BundleClass E = twist(dual(Q), G->var("h_2"));
  EXPECT_EQ(E.c(1), G->parse("2*h_2"));
  EXPECT_EQ(E.c(2), G->reduce(G->parse("2*h_2^2-2*c_2")));
}

TEST(Bundle, SegreClassesOfE1) {
  auto B = catalog("B");
  BundleClass E1(B, 2, {-B->var("h_3"), B->var("a_1")});
  EXPECT_EQ(segre(E1, 0), B->constant(1));
  EXPECT_EQ(segre(E1, 2), B->reduce(B->parse("h_3^2-a_1")));
  EXPECT_EQ(B->integrate(segre(E1, 2) * B->parse("h_3^2")), 10);
  EXPECT_EQ(B->integrate(segre(E1, 4)), 1);
  EXPECT_THROW(segre(E1, 5), DomainError);
}

TEST(Bundle, Wedge2OfRankThree) {
  auto G = catalog("Gw36");
  BundleClass Q = tautological_quotient_gw36(G);
  BundleClass W2 = wedge2_rank3(Q);
  EXPECT_EQ(W2, twist(dual(Q), G->var("c'_1")));
  EXPECT_EQ(W2.c(1), G->parse("2*c'_1"));
  EXPECT_EQ(wedge2_rank3(BundleClass::trivial(G, 3)), BundleClass::trivial(G, 3));
  EXPECT_THROW(wedge2_rank3(BundleClass::trivial(G, 2)), DomainError);
}

TEST(Bundle, TangentOfGw36IsSym2Q) {
  auto G = catalog("Gw36");
  BundleClass T = tangent_bundle(G);
  EXPECT_EQ(T.rank(), 6);
  EXPECT_EQ(T.c(1), G->parse("4*c'_1"));
  // Euler characteristic of the top Chern class is the number of Schubert cells.
  EXPECT_EQ(G->integrate(T.c(6)), 8);
}

TEST(Bundle, TangentOfB) {
  auto B = catalog("B");
  BundleClass T = tangent_bundle(B);
  EXPECT_EQ(T.rank(), 4);
  EXPECT_EQ(T.c(1), B->parse("2*h_3"));
  EXPECT_EQ(B->integrate(T.c(4)), 8);
  EXPECT_EQ(hrr_chi(BundleClass::trivial(B, 1)), 1);
  EXPECT_EQ(hrr_chi(BundleClass::line(B, B->var("h_3"))), 12);
}

TEST(Bundle, ChernCharacterBasics) {
  auto P = catalog("P5");
  auto ch = chern_character(BundleClass::trivial(P, 1));
  EXPECT_EQ(ch[0], P->constant(1));
  for (int k = 1; k <= 5; ++k) EXPECT_TRUE(ch[k].is_zero());
  EXPECT_EQ(todd(P)[1], P->parse("3*H"));
  EXPECT_EQ(chern_character(BundleClass::line(P, P->var("H"))), Character::exp(P, P->var("H")));
}

TEST(Bundle, HrrOnProjectiveSpaces) {
  for (int n = 1; n <= 5; ++n) {
    auto P = make_projective_space(n);
    for (int k = 0; k <= 5; ++k)
      EXPECT_EQ(hrr_chi(BundleClass::line(P, Rational(k) * P->var("H"))), binomial(n + k, n)) << n << " " << k;
  }
  auto P5 = catalog("P5");
  EXPECT_EQ(hrr_chi(BundleClass::line(P5, P5->parse("2*H"))), 21);
  EXPECT_THROW(todd(catalog("G26")), DomainError);
}

TEST(Bundle, CharacterRoundTrip) {
  std::mt19937_64 rng(5);
  for (const char* label : {"B", "Gw36", "P1^3"}) {
    auto R = catalog(label);
    for (int n = 0; n < 10; ++n) {
      BundleClass E = random_bundle(R, 1 + n % 4, rng);
      EXPECT_EQ(chern_from_character(chern_character(E)), E) << label;
    }
  }
}

TEST(Bundle, GrrPushforwardOfCurves) {
  auto P = catalog("P5");
  const Poly H = P->var("H");
  Character ch = grr_push_curve(P, 0, Rational(3) * H.pow(4), H.pow(5), 4);
  EXPECT_EQ(ch[4], P->parse("3*H^4"));
  EXPECT_EQ(ch[5], P->parse("-4*H^5"));
  Character point = grr_push_curve(P, 0, H.pow(5), H.pow(5), 7);
  EXPECT_EQ(point.sum(), H.pow(5));
  EXPECT_THROW(grr_push_curve(P, 0, H.pow(3), H.pow(5), 0), DomainError);
}

TEST(Bundle, KInvariantsPipeline) {
  auto P = catalog("P5");
  const Poly H = P->var("H");
  Character ch = Rational(6) * Character::exp(P, P->constant(0)) - Rational(2) * Character::exp(P, -H) -
                 Rational(2) * Character::exp(P, H) + grr_push_curve(P, 0, Rational(3) * H.pow(4), H.pow(5), 4);
  BundleClass K = chern_from_character(ch);
  EXPECT_EQ(K.rank(), 2);
  EXPECT_TRUE(K.c(1).is_zero());
  EXPECT_EQ(K.c(2), P->parse("2*H^2"));
  EXPECT_TRUE(K.c(3).is_zero());
  EXPECT_EQ(K.c(4), P->parse("-15*H^4"));
  EXPECT_EQ(hrr_chi(ch * Character::exp(P, Rational(2) * H)), 13);
  EXPECT_EQ(hrr_chi(ch), -1);
}

TEST(Bundle, WhitneyProductRule) {
  auto R = catalog("Gw36");
  std::mt19937_64 rng(3);
  for (int n = 0; n < 10; ++n) {
    BundleClass E = random_bundle(R, 2, rng), F = random_bundle(R, 3, rng);
    EXPECT_EQ(whitney_sum(E, F), whitney_sum(F, E));
    EXPECT_EQ(whitney_quotient(whitney_sum(E, F), F), E);
  }
}
