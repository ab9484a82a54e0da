#include <gtest/gtest.h>

#include <random>

#include "chowkit/pencil.hpp"
#include "oracles.hpp"

using namespace chowkit;

namespace {

Matrix<Rational> random_antisymmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-5, 5);
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

std::vector<std::vector<Rational>> rows_of(const Matrix<Rational>& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Poly uv(const std::string& s) { return parse_poly(s, uv_signature()); }

SkewPencil from_pairs(const std::vector<std::tuple<int, int, std::string>>& entries) {
  Matrix<Poly> m(6, 6, Poly(uv_signature()));
  for (const auto& [i, j, s] : entries) {
    m(i, j) = uv(s);
    m(j, i) = -uv(s);
  }
  return SkewPencil(m);
}

}  // namespace

TEST(Pencil, ImplicitProducts) {
  EXPECT_EQ(detail::explicit_products("2uv"), "2*u*v");
  EXPECT_EQ(detail::explicit_products("-u^2"), "-u^2");
  EXPECT_EQ(detail::explicit_products("u^2v"), "u^2*v");
  EXPECT_EQ(detail::explicit_products("3(u+v)"), "3*(u+v)");
}

TEST(Pencil, BetaEntries) {
  const auto b = SkewPencil::beta();
  EXPECT_EQ(b.matrix()(0, 2), uv("2*u*v"));
  EXPECT_EQ(b.matrix()(3, 5), uv("2*u*v"));
  EXPECT_EQ(b.matrix()(5, 3), uv("-2*u*v"));
  EXPECT_EQ(b.matrix()(4, 5), uv("v^2"));
  EXPECT_TRUE(is_antisymmetric_poly(b.matrix()));
}

TEST(Pencil, RejectsBadInput) {
  Matrix<Poly> m(6, 6, Poly(uv_signature()));
  m(0, 1) = uv("u^2");
  EXPECT_THROW(SkewPencil{m}, DomainError);
  m(1, 0) = uv("-u");
  EXPECT_THROW(SkewPencil{m}, DomainError);
  EXPECT_THROW(parse_poly_table("u&v\nu\n", uv_signature()), DomainError);
  EXPECT_THROW(parse_poly_table("w&v\n", uv_signature()), UnknownVariable);
}

TEST(Pencil, PfaffianSquaredIsDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t n = 2 * (1 + trial % 3);
    const auto m = random_antisymmetric(rng, n);
    const Rational pf = pfaffian_rational(m);
    const Rational det = oracle::leibniz_det(rows_of(m));
    EXPECT_EQ(pf * pf, det);
    EXPECT_EQ(determinant(m), det);
  }
  // Standard symplectic form has Pfaffian 1.
  Matrix<Rational> J(4, 4, Rational(0));
  J(0, 1) = 1, J(1, 0) = -1, J(2, 3) = 1, J(3, 2) = -1;
  EXPECT_EQ(pfaffian_rational(J), 1);
}

TEST(Pencil, BetaCertificate) {
  const auto cert = constant_rank_certificate(SkewPencil::beta());
  EXPECT_TRUE(cert.pfaffian_vanishes);
  EXPECT_TRUE(cert.certified);
  EXPECT_EQ(cert.gcd, uv("1"));
  const std::vector<std::string> expected{"0", "0", "u^4", "0", "2*u^3*v", "u^2*v^2", "0", "3*u^2*v^2",
                                          "2*u*v^3", "v^4", "0", "0", "0", "0", "0"};
  ASSERT_EQ(cert.sub_pfaffians.size(), 15u);
  int sign_fixed = 0;
  for (std::size_t k = 0; k < 15; ++k) {
    const Poly e = uv(expected[k]);
    if (e.is_zero()) {
      EXPECT_TRUE(cert.sub_pfaffians[k].is_zero()) << k;
      continue;
    }
    // The sign of each sub-Pfaffian depends on the ordering convention.
    const bool same = cert.sub_pfaffians[k] == e, opposite = cert.sub_pfaffians[k] == -e;
    EXPECT_TRUE(same || opposite) << k << ": " << cert.sub_pfaffians[k].to_string();
    sign_fixed += same ? 1 : 0;
  }
  EXPECT_GT(sign_fixed, 0);
}

TEST(Pencil, ZeroPencilFails) {
  const auto cert = constant_rank_certificate(from_pairs({}));
  EXPECT_FALSE(cert.certified);
  EXPECT_EQ(cert.failed_condition, "gcd");
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(cert.witness->first, 1);
  EXPECT_EQ(cert.witness->second, 0);
}

TEST(Pencil, DegeneratingPencilFails) {
  // u^2 (e12 + e34): rank 4 except at [0:1].
  const auto cert = constant_rank_certificate(from_pairs({{0, 1, "u^2"}, {2, 3, "u^2"}}));
  EXPECT_TRUE(cert.pfaffian_vanishes);
  EXPECT_FALSE(cert.certified);
  EXPECT_EQ(cert.failed_condition, "gcd");
  EXPECT_EQ(cert.gcd, uv("u^4"));
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(cert.witness->first, 0);
  EXPECT_EQ(cert.witness->second, 1);
  // v^2 (e12 + e34) degenerates at [1:0].
  const auto c2 = constant_rank_certificate(from_pairs({{0, 1, "v^2"}, {2, 3, "v^2"}}));
  ASSERT_TRUE(c2.witness);
  EXPECT_EQ(c2.witness->second, 0);
  // (u-2v)(u+v) e12 + u v e34 degenerates at [2:1] and [-1:1]; the gcd has a rational root.
  const auto c3 = constant_rank_certificate(from_pairs({{0, 1, "u^2-u*v-2*v^2"}, {2, 3, "u^2-u*v-2*v^2"}}));
  ASSERT_TRUE(c3.witness);
  const auto M = SkewPencil(from_pairs({{0, 1, "u^2-u*v-2*v^2"}, {2, 3, "u^2-u*v-2*v^2"}})).at(c3.witness->first,
                                                                                             c3.witness->second);
  EXPECT_LT(rank(M), 4u);
}

TEST(Pencil, GenericRankSixFailsPfaffian) {
  const auto cert = constant_rank_certificate(from_pairs({{0, 1, "u^2"}, {2, 3, "v^2"}, {4, 5, "u*v"}}));
  EXPECT_FALSE(cert.pfaffian_vanishes);
  EXPECT_EQ(cert.failed_condition, "pfaffian");
  ASSERT_TRUE(cert.witness);
  const auto M = from_pairs({{0, 1, "u^2"}, {2, 3, "v^2"}, {4, 5, "u*v"}}).at(cert.witness->first, cert.witness->second);
  EXPECT_EQ(rank(M), 6u);
}

TEST(Pencil, CertificateIsSoundAtRandomPoints) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-7, 7);
  const auto beta = SkewPencil::beta();
  for (int k = 0; k < 20; ++k) {
    Rational u = d(rng), v = d(rng);
    if (u == 0 && v == 0) v = 1;
    EXPECT_EQ(rank(beta.at(u, v)), 4u);
  }
  // g^T beta g for invertible g keeps the certificate and the rank.
  for (int k = 0; k < 4; ++k) {
    Matrix<Rational> g(6, 6, Rational(0));
    do {
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) g(i, j) = d(rng);
    } while (determinant(g) == 0);
    const auto gp = g.map([](const Rational& r) { return Poly::constant(uv_signature(), r); });
    const Poly zero(uv_signature());
    const auto conj = multiply(multiply(gp.transpose(), beta.matrix(), zero), gp, zero);
    const SkewPencil c(conj);
    EXPECT_TRUE(constant_rank_certificate(c).certified);
    for (int t = 0; t < 5; ++t) {
      Rational u = d(rng), v = d(rng);
      if (u == 0 && v == 0) u = 1;
      EXPECT_EQ(rank(c.at(u, v)), 4u);
    }
  }
}

TEST(Flattening, RankOracle) {
  EXPECT_EQ(rank(identity_matrix(12)), 12u);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-4, 4);
  for (std::size_t k = 0; k <= 12; ++k) {
    Matrix<Rational> m(12, 12, Rational(0));
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Rational> a(12), b(12);
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) m(i, j) += a[i] * b[j];
    }
    EXPECT_EQ(rank(m), k);
  }
}

TEST(Flattening, PrintedAndDerived) {
  const auto printed = printed_flattening();
  EXPECT_EQ(printed.rows(), 12u);
  EXPECT_TRUE(is_antisymmetric_rational(printed));
  EXPECT_EQ(rank(printed), 6u);
  const auto D = derived_flattening(SkewPencil::beta());
  EXPECT_TRUE(is_antisymmetric_rational(D));
  std::vector<std::size_t> piv;
  EXPECT_EQ(rank(D, &piv), 6u);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1, 2, 3, 5, 11}));
}

TEST(Quasimonad, Maps) {
  const auto q = Quasimonad::build(SkewPencil::beta());
  EXPECT_EQ(q.left.rows(), 6u);
  EXPECT_EQ(q.right.cols(), 6u);
  const auto z = [](const std::string& s) { return parse_poly(s, z_signature()); };
  const Matrix<Poly> expected{{z("-z1"), z("z0"), z("-z5"), z("0"), z("z2"), z("z3")},
                              {z("-z2"), z("0"), z("z0"), z("-z5"), z("z3"), z("z4")}};
  const auto neg = expected.map([](const Poly& p) { return -p; });
  EXPECT_TRUE(q.right == expected || q.right == neg);
  const auto comp = q.composition();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(comp(i, j).is_zero());
  EXPECT_EQ(rank(q.form), 6u);
  EXPECT_EQ(q.right_minors().size(), 15u);
}

TEST(Quasimonad, Report) {
  const auto rep = quasimonad_checks(17);
  EXPECT_EQ(rep.printed_rank, 6u);
  EXPECT_EQ(rep.derived_rank, 6u);
  EXPECT_TRUE(rep.composition_zero);
  EXPECT_EQ(rep.left_rank_e0, 2u);
  EXPECT_TRUE(rep.left_ok());
  EXPECT_EQ(rep.right_generic_rank, 2u);
  EXPECT_EQ(rep.cubic_status, "pass");
  EXPECT_EQ(rep.cubic_hp.dimension, 1);
  EXPECT_EQ(rep.cubic_hp.degree, 3);
  const auto tight = quasimonad_checks(17, 2);
  EXPECT_EQ(tight.cubic_status, "inconclusive");
}

TEST(Isotropy, GraphsOfSymmetricMatrices) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int k = 0; k < 10; ++k) {
    Matrix<Rational> S(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) S(i, j) = S(j, i) = d(rng);
    const auto p = PluckerPoint::graph(S);
    EXPECT_TRUE(p.on_grassmannian());
    EXPECT_TRUE(p.is_isotropic());
    const CoordinateModel cm;
    const auto full = cm.full_point(p.coordinates());
    for (const auto& e : cm.gw_equations()) EXPECT_EQ(e.evaluate(full), 0);
  }
  Matrix<Rational> S{{Rational(1), Rational(2), Rational(0)},
                     {Rational(0), Rational(1), Rational(3)},
                     {Rational(1), Rational(0), Rational(1)}};
  const auto p = PluckerPoint::graph(S);
  EXPECT_TRUE(p.on_grassmannian());
  EXPECT_FALSE(p.is_isotropic());
}

TEST(Congruence, SectionsAndIdentity) {
  const CoordinateModel cm;
  EXPECT_EQ(cm.gw_equations().size(), 21u);
  EXPECT_EQ(cm.zh_equations().size(), 10u);
  const auto rep = congruence_model_check(29);
  ASSERT_EQ(rep.section_in_ideal.size(), 6u);
  for (bool b : rep.section_in_ideal) EXPECT_TRUE(b);
  EXPECT_TRUE(rep.ideal_proper);
  EXPECT_TRUE(rep.compatibility_identity);
  EXPECT_TRUE(rep.points_on_b);
  EXPECT_EQ(rep.rank_off, 2u);
  EXPECT_EQ(rep.rank_on, 1u);
  EXPECT_TRUE(rep.passed());
}
