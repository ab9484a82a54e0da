#include <gtest/gtest.h>

#include "chowkit/catalog.hpp"
#include "chowkit/constructions.hpp"
#include "oracles.hpp"

using namespace chowkit;

namespace {

Rational I(const ChowRingPtr& R, std::string_view x) { return R->integrate(R->parse(x)); }

bool reduces_to_zero(const ChowRingPtr& R, std::string_view x) { return R->reduce(R->parse(x)).is_zero(); }

std::string idx(int i) { return std::to_string(i); }

}  // namespace

TEST(Catalog, G26AgreesWithPieriOracle) {
  auto R = catalog("G26");
  EXPECT_EQ(I(R, "h_2^8"), 14);
  for (int b = 0; b <= 4; ++b) {
    const int a = 8 - 2 * b;
    Poly x = R->var("h_2").pow(a) * R->var("c_2").pow(b);
    EXPECT_EQ(R->integrate(x), Rational(oracle::SchubertG26::integral(a, b))) << "a=" << a << " b=" << b;
  }
  std::vector<std::int64_t> betti;
  for (long v : oracle::g26_betti()) betti.push_back(v);
  EXPECT_EQ(R->hilbert_function(), betti);
}

TEST(Catalog, Gw36HilbertFunctionMatchesStrictPartitions) {
  auto R = catalog("Gw36");
  std::vector<std::int64_t> betti;
  for (long v : oracle::lg36_betti()) betti.push_back(v);
  EXPECT_EQ(R->hilbert_function(), betti);
  EXPECT_EQ(I(R, "c'_1^6"), 16);
}

TEST(Catalog, TopPieceIsOneDimensional) {
  for (const char* label : {"P1", "P5", "P1^3", "P1^4", "G26", "Gw36", "B", "FB", "I", "Pi", "pt"}) {
    auto R = catalog(label);
    auto hf = R->hilbert_function();
    EXPECT_EQ(hf.back(), 1) << label;
    auto above = chowkit::hilbert_function(R->basis(), R->ambient_dimension() + 3);
    for (int d = R->ambient_dimension() + 1; d <= R->ambient_dimension() + 3; ++d) EXPECT_EQ(above[d], 0) << label;
  }
}

TEST(Catalog, UnknownLabelThrows) {
  EXPECT_THROW(catalog("G27"), DomainError);
  EXPECT_THROW(catalog("Pfoo"), DomainError);
}

TEST(Catalog, CachedInstancesAreShared) { EXPECT_EQ(catalog("B"), catalog("B")); }

TEST(ChowB, DegreeAndHilbertFunction) {
  auto B = catalog("B");
  EXPECT_EQ(I(B, "h_3^4"), 16);
  EXPECT_EQ(B->hilbert_function(), (std::vector<std::int64_t>{1, 1, 4, 1, 1}));
}

TEST(ChowB, PresentationRelations) {
  auto B = catalog("B");
  EXPECT_EQ(B->reduce(B->parse("3*h_3^2")), B->reduce(B->parse("2*(a_1+a_2+a_3+a_4)")));
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "a_" + idx(i);
    const std::string V = "(2*" + a + "-1/2*h_3^2)";
    EXPECT_TRUE(reduces_to_zero(B, "8*h_3*" + a + "-3*h_3^3"));
    EXPECT_TRUE(reduces_to_zero(B, a + "^2-3/16*h_3^4"));
    EXPECT_TRUE(reduces_to_zero(B, V + "^2-1/4*h_3^4"));
    EXPECT_EQ(I(B, V + "^2"), 4);
    EXPECT_EQ(I(B, V + "*h_3^2"), 4);
    EXPECT_EQ(I(B, "(1/2*h_3^2-" + a + ")*h_3^2"), 2);
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      const std::string b = "a_" + idx(j);
      EXPECT_TRUE(reduces_to_zero(B, "8*" + a + "*" + b + "-h_3^4"));
      EXPECT_TRUE(reduces_to_zero(B, V + "*(2*" + b + "-1/2*h_3^2)"));
    }
  }
  EXPECT_EQ(I(B, "a_1*a_2"), 2);
  EXPECT_EQ(I(B, "h_3^3"), 0);
  EXPECT_THROW(I(B, "h_3^4+h_3"), DomainError);
}

TEST(ChowFB, TripleProducts) {
  auto FB = catalog("FB");
  const std::string h2 = "(alpha_1+alpha_2+alpha_3+alpha_4)";
  EXPECT_EQ(I(FB, h2 + "^3"), 24);
  EXPECT_EQ(I(catalog("P1^4"), "alpha_1*alpha_2*alpha_3*alpha_4"), 1);
  for (int i = 1; i <= 4; ++i) {
    const std::string ai = "alpha_" + idx(i);
    for (int y = 1; y <= 4; ++y) EXPECT_EQ(I(FB, ai + "^2*alpha_" + idx(y)), 0);
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      const std::string aj = "alpha_" + idx(j);
      EXPECT_EQ(I(FB, ai + "*" + aj + "*" + h2), 2);
      for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        EXPECT_EQ(I(FB, ai + "*" + aj + "*alpha_" + idx(k)), 1);
        // v_k = h_2 - 2 alpha_k
        EXPECT_EQ(I(FB, "(" + h2 + "-2*alpha_" + idx(k) + ")*" + ai + "*" + aj), 0);
      }
    }
    EXPECT_TRUE(reduces_to_zero(FB, "2*" + h2 + "*(" + h2 + "-" + ai + ")+" + h2 + "*(2*" + ai + "-" + h2 + ")-" +
                                        h2 + "^2"));
  }
}

TEST(ChowI, PullbackOfAiSumsToThreeHalvesH3Squared) {
  auto R = catalog("I");
  const std::string h2 = "(alpha_1+alpha_2+alpha_3+alpha_4)";
  std::string sum = "0";
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "alpha_" + idx(i);
    sum += "+h_3'*(" + h2 + "-" + a + ")+" + h2 + "*(2*" + a + "-" + h2 + ")";
  }
  EXPECT_TRUE(reduces_to_zero(R, sum + "-3/2*h_3'^2"));
  EXPECT_EQ(R->dimension(), 4);
}

TEST(Product, P1TimesB) {
  auto P = product_ring(make_projective_space(1, "sigma"), catalog("B"));
  EXPECT_TRUE(reduces_to_zero(P, "sigma^2"));
  EXPECT_EQ(I(P, "sigma*h_3^4"), 16);
  EXPECT_EQ(P->dimension(), 5);
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "a_" + idx(i);
    EXPECT_TRUE(reduces_to_zero(P, "(" + a + "+h_3*sigma-(2*" + a + "-1/2*h_3^2))*(" + a + "-3*h_3*sigma)"));
  }
}

TEST(Product, PointIsAUnit) {
  auto B = catalog("B");
  auto P = product_ring(B, catalog("pt"));
  EXPECT_EQ(P->hilbert_function(), B->hilbert_function());
  EXPECT_EQ(I(P, "a_1*a_3"), I(B, "a_1*a_3"));
  EXPECT_EQ(I(P, "h_3^4"), 16);
}

TEST(Product, TwoLines) {
  auto P = product_ring(make_projective_space(1, "a"), make_projective_space(1, "b"));
  EXPECT_EQ(I(P, "a*b"), 1);
  EXPECT_EQ(I(P, "a^2"), 0);
  EXPECT_THROW(product_ring(catalog("P1"), catalog("P1")), DomainError);
  // c(T) = (1+2a)(1+2b)
  EXPECT_EQ(P->tangent()->c[2], P->parse("4*a*b"));
}

TEST(ProjectiveBundle, TrivialRankTwoOverPointIsALine) {
  auto pt = catalog("pt");
  auto L = projective_bundle(BundleClass::trivial(pt, 2));
  EXPECT_TRUE(reduces_to_zero(L, "zeta^2"));
  EXPECT_EQ(I(L, "zeta"), 1);
  EXPECT_EQ(relative_canonical(L).rep(), L->parse("-2*zeta"));
  EXPECT_THROW(projective_bundle(BundleClass::trivial(pt, 0)), DomainError);
  EXPECT_THROW(relative_canonical(catalog("B")), DomainError);
}

TEST(ProjectiveBundle, QuadricModel) {
  auto Pi = catalog("Pi");
  EXPECT_EQ(Pi->dimension(), 4);
  EXPECT_EQ(I(Pi, "2*h*sigma*(h+2*sigma)^2"), 2);
  EXPECT_EQ(I(Pi, "2*h*(h+2*sigma)^3"), 16);
}

TEST(ProjectiveBundle, RelativeCanonicalOfIncidence) {
  auto R = catalog("I");
  EXPECT_EQ(relative_canonical(R).rep(), R->reduce(R->parse("2*(alpha_1+alpha_2+alpha_3+alpha_4)-2*h_3'")));
}

TEST(ProjectiveBundle, SegreOfE1AndExceptionalClass) {
  auto B = catalog("B");
  const Poly h3 = B->var("h_3");
  BundleClass E1(B, 2, {-h3, B->var("a_1")});
  BundleClass F = twist(E1, h3);
  auto P = projective_bundle(F, "h");
  EXPECT_EQ(I(P, "h^5"), B->integrate(segre(F, 4)));
  EXPECT_EQ(I(P, "h^5"), 1);
  // R = K_rel + pi^* K_B - r^* K_P5 with K_B = -2 h_3.
  ChowClass R = relative_canonical(P) + P->cls("-2*h_3") - P->cls("-6*h");
  EXPECT_EQ(R, P->cls("4*h-h_3"));
}

TEST(ProjectiveBundle, TangentOfProjectiveLineOverPoint) {
  auto L = projective_bundle(BundleClass::trivial(catalog("pt"), 2));
  ASSERT_TRUE(L->tangent().has_value());
  EXPECT_EQ(L->integrate(L->tangent()->c[1]), 2);
}

namespace {

ChowRingPtr p1_cubed() { return make_p1_power(3, "beta_"); }

Poly curve_class(const ChowRingPtr& base, int a, int b, int c) {
  return base->parse(std::to_string(a) + "*beta_2*beta_3+" + std::to_string(b) + "*beta_1*beta_3+" +
                     std::to_string(c) + "*beta_1*beta_2");
}

}  // namespace

TEST(Blowup, EllipticSexticModelOfFB) {
  auto base = p1_cubed();
  auto X = blowup_threefold_along_curve(base, curve_class(base, 2, 2, 2), 1);
  const std::string h = "(beta_1+beta_2+beta_3)";
  const std::string alpha = "(" + h + "-e)";
  EXPECT_EQ(I(X, "(2*" + h + "-e)^3"), 24);
  EXPECT_EQ(I(X, alpha + "^3"), 0);
  for (const char* D : {"beta_1", "beta_2", "beta_3", "e"}) EXPECT_EQ(I(X, alpha + "^2*" + D), 0) << D;
}

TEST(Blowup, RulingLineHasTrivialTripleSelfIntersection) {
  auto base = p1_cubed();
  auto X = blowup_threefold_along_curve(base, curve_class(base, 0, 0, 1), 0);
  EXPECT_EQ(I(X, "e^3"), 0);
  EXPECT_THROW(blowup_threefold_along_curve(catalog("B"), catalog("B")->parse("a_1"), 0), DomainError);
}

TEST(HyperplaneSection, G26Anchors) {
  auto G = catalog("G26");
  const Poly h = G->var("h_2");
  EXPECT_EQ(integrate_on_hyperplane_section(G, h, G->parse("4*(h_2^2-c_2)^2*h_2^3")), 24);
  EXPECT_EQ(integrate_on_hyperplane_section(G, h, G->parse("h_2*c_2*2*(h_2^2-c_2)*h_2^2")), 6);
  EXPECT_EQ(integrate_on_hyperplane_section(G, h, G->parse("h_2^7")), 14);
  EXPECT_THROW(integrate_on_hyperplane_section(G, h, G->parse("h_2^6")), DomainError);
}

TEST(ChowClass, ArithmeticStaysReduced) {
  auto B = catalog("B");
  ChowClass x = B->cls("h_3^2");
  ChowClass y = B->cls("a_1");
  EXPECT_EQ((x * y).integrate(), I(B, "h_3^2*a_1"));
  EXPECT_EQ(x.pow(2).integrate(), 16);
  EXPECT_THROW(x + catalog("G26")->cls("h_2"), DomainError);
}
