#pragma once

// Registry of named verification checks. Each check records an exact-value
// transcript; transcripts depend only on the seed.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "chowkit/bott_c3.hpp"
#include "chowkit/bundle.hpp"
#include "chowkit/catalog.hpp"
#include "chowkit/constructions.hpp"
#include "chowkit/pencil.hpp"
#include "chowkit/sl2.hpp"

namespace chowkit {

enum class Runtime { Fast, Slow };

inline const char* runtime_name(Runtime r) { return r == Runtime::Fast ? "fast" : "slow"; }

/// Where an expected value comes from.
enum class Source { Published, Derived, Identity };

inline const char* source_name(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::Derived: return "derived";
    case Source::Identity: return "identity";
  }
  return "?";
}

namespace detail {

template <typename T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_integral_v<T>) {
    return std::to_string(v);
  } else if constexpr (std::is_same_v<T, Rational>) {
    return chowkit::to_string(v);
  } else if constexpr (std::is_same_v<T, Integer>) {
    return v.get_str();
  } else if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else if constexpr (std::is_same_v<T, Poly> || std::is_same_v<T, ChowClass>) {
    return v.to_string();
  } else if constexpr (std::is_convertible_v<T, Rational>) {
    // Unevaluated GMP expressions.
    return chowkit::to_string(Rational(v));
  } else {
    std::string out = "(";
    bool first = true;
    for (const auto& x : v) {
      out += (first ? "" : ", ") + show(x);
      first = false;
    }
    return out + ")";
  }
}

}  // namespace detail

class Transcript {
 public:
  template <typename A, typename B>
  bool expect(const std::string& label, const A& computed, const B& expected, Source src) {
    const bool ok = computed == expected;
    add(label + ": computed " + detail::show(computed) + ", expected " + detail::show(expected) + " (" +
            source_name(src) + ")",
        ok);
    return ok;
  }

  bool expect(const std::string& label, const char* computed, const char* expected, Source src) {
    return expect(label, std::string(computed), std::string(expected), src);
  }

  /// A yes/no property.
  bool require(const std::string& label, bool holds, Source src) {
    add(label + ": " + (holds ? "holds" : "fails") + " (" + source_name(src) + ")", holds);
    return holds;
  }

  void note(const std::string& line) { lines_.push_back(line); }
  void fail(const std::string& line) { add(line, false); }

  bool passed() const noexcept { return ok_; }
  const std::vector<std::string>& lines() const noexcept { return lines_; }

 private:
  void add(std::string line, bool ok) {
    if (!ok) line += "  MISMATCH";
    lines_.push_back(std::move(line));
    ok_ = ok_ && ok;
  }

  std::vector<std::string> lines_;
  bool ok_ = true;
};

struct CheckContext {
  std::uint64_t seed = 1;
};

struct Check {
  std::string name;
  /// "1".."4" for the four parts, "props" for the property suites.
  std::string section;
  std::string ref;
  Runtime runtime = Runtime::Fast;
  std::function<void(Transcript&, const CheckContext&)> body;
};

struct CheckReport {
  std::string name, section, ref;
  Runtime runtime = Runtime::Fast;
  bool passed = false;
  std::vector<std::string> transcript;
  std::int64_t millis = 0;
  std::uint64_t seed = 0;
};

namespace checks {

inline Rational integral(const ChowRingPtr& R, std::string_view x) { return R->integrate(R->parse(x)); }

inline bool vanishes(const ChowRingPtr& R, std::string_view x) { return R->reduce(R->parse(x)).is_zero(); }

inline std::string s(long i) { return std::to_string(i); }

inline const std::string kH2 = "(alpha_1+alpha_2+alpha_3+alpha_4)";

inline Poly center_class(const ChowRingPtr& base, int a, int b, int c) {
  return base->parse(s(a) + "*beta_2*beta_3+" + s(b) + "*beta_1*beta_3+" + s(c) + "*beta_1*beta_2");
}

/// Genus-1 centers (a, b, c) in [0, 6]^3 on (P^1)^3 for which alpha = h - e
/// satisfies alpha^3 = 0 and alpha^2 beta_j = 0 after blowing up.
inline std::vector<std::array<int, 3>> solve_center_tridegree() {
  auto base = make_p1_power(3, "beta_");
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (a + b + c == 0) continue;
        auto X = blowup_threefold_along_curve(base, center_class(base, a, b, c), 1);
        const Poly alpha = X->parse("beta_1+beta_2+beta_3-e");
        bool ok = X->integrate(alpha.pow(3)) == 0;
        for (const char* d : {"beta_1", "beta_2", "beta_3"}) ok = ok && X->integrate(alpha.pow(2) * X->var(d)) == 0;
        if (ok) out.push_back({a, b, c});
      }
  return out;
}

/// F_B as (P^1)^3 blown up along a genus-1 curve of tri-degree (2,2,2), with
/// alpha_1..alpha_3 the factor classes and alpha_4 = h - e.
inline ChowRingPtr blowup_model() {
  auto base = make_p1_power(3, "beta_");
  return blowup_threefold_along_curve(base, center_class(base, 2, 2, 2), 1);
}

inline Poly blowup_alpha(const ChowRingPtr& X, int i) {
  return i <= 3 ? X->var("beta_" + s(i)) : X->parse("beta_1+beta_2+beta_3-e");
}

inline Poly random_class(const ChowRingPtr& R, int degree, std::mt19937_64& rng, long bound = 4) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Poly out(R->signature());
  for (const auto& m : standard_monomials(R->basis(), degree)) out += Poly::monomial(R->signature(), m, Rational(d(rng)));
  return out;
}

inline Poly random_element(const ChowRingPtr& R, std::mt19937_64& rng) {
  Poly out(R->signature());
  for (int k = 0; k <= R->ambient_dimension(); ++k) out += random_class(R, k, rng);
  return out;
}

inline BundleClass random_bundle(const ChowRingPtr& R, int rank, std::mt19937_64& rng) {
  std::vector<Poly> c;
  for (int k = 1; k <= std::min(rank, R->dimension()); ++k) c.push_back(random_class(R, k, rng));
  return BundleClass(R, rank, c);
}

inline constexpr int kPropertyInstances = 200;

// Part 1: homogeneous bundles and representation counts.

inline void bott_six_weights(Transcript& t, const CheckContext&) {
  using K = AcyclicWitness::Kind;
  const std::vector<std::pair<WeightC3, K>> weights{{{0, 0, -1}, K::Zero},    {{0, -1, -1}, K::Zero},
                                                    {{-1, -1, -1}, K::Zero},  {{-1, -1, -2}, K::Collision},
                                                    {{-1, -2, -2}, K::Zero},  {{-2, -2, -2}, K::Zero}};
  for (const auto& [w, kind] : weights) {
    const auto wit = acyclicity_witness(w);
    if (!t.require("acyclic " + w.to_string(), wit.has_value(), Source::Published)) continue;
    t.note("  witness: " + wit->describe());
    t.expect("witness kind " + w.to_string(), std::string(wit->kind == K::Zero ? "zero" : "collision"),
             std::string(kind == K::Zero ? "zero" : "collision"), Source::Published);
  }
  t.expect("w+rho of (-1,-1,-2)", vec_string(WeightC3(-1, -1, -2).shifted()), std::string("(2,1,-1)"),
           Source::Published);
  const std::vector<std::pair<WeightC3, long>> anchors{{{1, 0, 0}, 6}, {{1, 1, 0}, 14}, {{1, 1, 1}, 14}};
  for (const auto& [w, dim] : anchors) {
    const auto c = cohomology(w);
    if (!t.require("regular " + w.to_string(), c.has_value(), Source::Identity)) continue;
    t.expect("cohomology degree " + w.to_string(), c->degree, 0, Source::Identity);
    t.expect("h^0 dimension " + w.to_string(), c->dimension, Integer(dim),
             w == WeightC3(1, 1, 1) ? Source::Derived : Source::Published);
  }
  t.require("(0,0,0) not acyclic", !is_acyclic({0, 0, 0}), Source::Identity);
}

inline void bott_serre_duality(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<long> d(-9, 6);
  int tested = 0, bad = 0;
  std::string first_bad;
  while (tested < kPropertyInstances) {
    std::array<long, 3> a{d(rng), d(rng), d(rng)};
    std::sort(a.begin(), a.end(), std::greater<>());
    const WeightC3 w(a[0], a[1], a[2]);
    const auto c = cohomology(w);
    if (!c) continue;
    ++tested;
    const auto dual = cohomology(w.serre_dual());
    if (!dual || c->degree + dual->degree != kDimLG36 || c->dimension != dual->dimension) {
      if (bad++ == 0) first_bad = w.to_string();
    }
  }
  t.expect("regular weights tested", tested, kPropertyInstances, Source::Identity);
  t.expect("degree(w) + degree(dual) != 6 or dimensions differ", bad, 0, Source::Identity);
  if (bad) t.note("  first counterexample " + first_bad);
}

inline void bott_dominant_weights(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed ^ 0x5bd1e995u);
  std::uniform_int_distribution<long> d(-8, 6);
  int bad = 0, tested = 0;
  for (int n = 0; n < kPropertyInstances; ++n) {
    std::array<long, 3> a{d(rng), d(rng), d(rng)};
    std::sort(a.begin(), a.end(), std::greater<>());
    const WeightC3 w(a[0], a[1], a[2]);
    const auto c = cohomology(w);
    if (is_acyclic(w) == c.has_value()) ++bad;
    if (!c) continue;
    ++tested;
    if ((c->degree == 0) != w.is_dominant()) ++bad;
    if (w.is_dominant() && c->dimension != weyl_dim_c3(w)) ++bad;
  }
  t.note("regular weights among samples: " + s(tested));
  t.expect("violations of: exactly one of acyclic/cohomology; degree 0 iff dominant; Weyl dimension", bad, 0,
           Source::Identity);
  t.expect("weyl_dim (0,0,0)", weyl_dim_c3({0, 0, 0}), Integer(1), Source::Identity);
  t.expect("weyl_dim (1,0,0)", weyl_dim_c3({1, 0, 0}), Integer(6), Source::Published);
  t.expect("weyl_dim (1,1,0)", weyl_dim_c3({1, 1, 0}), Integer(14), Source::Derived);
  t.expect("size of the Weyl group", weyl_group_c3().size(), std::size_t{48}, Source::Identity);
}

inline void dimension_ledger(Transcript& t, const CheckContext&) {
  const SL2Rep L = SL2Rep::irreducible(1);
  const SL2Rep S2 = SL2Rep::irreducible(2), S3 = SL2Rep::irreducible(3), S4 = SL2Rep::irreducible(4);
  const SL2Rep W = S2 + S2;
  const SL2Rep V = L + S3;
  t.expect("dim L(x)W", tensor(L, W).dim(), 12L, Source::Derived);
  t.expect("h^0(E(1)) from 0 -> ? -> L(x)W -> S3L+L -> 0", euler_solve({std::nullopt, tensor(L, W), S3 + L}), 6L,
           Source::Published);
  t.expect("dim L(x)V", tensor(L, V).dim(), 12L, Source::Derived);
  t.expect("Ext^1 from 0 -> Hom -> L(x)V -> S2L+S2L+S4L -> ? -> 0",
           euler_solve({SL2Rep::trivial(1), tensor(L, V), S2 + S2 + S4, std::nullopt}), 0L, Source::Published);
  t.expect("h^0 O(1,1,1,1) on (P^1)^4", monomial_section_count({1, 1, 1, 1}), 16L, Source::Derived);
  t.expect("h^0 O(1,1,1,1) on the divisor", monomial_section_count({1, 1, 1, 1}, true), 15L, Source::Published);
}

inline void sl2_marked_sequences(Transcript& t, const CheckContext&) {
  const SL2Rep L = SL2Rep::irreducible(1), S2 = SL2Rep::irreducible(2), S3 = SL2Rep::irreducible(3);
  t.expect("dim S3L", S3.dim(), 4L, Source::Identity);
  t.expect("L (x) S2L", tensor(L, S2).to_string(), std::string("S_3L+S_1L"), Source::Derived);
  t.expect("dim W = S2L+S2L", (S2 + S2).dim(), 6L, Source::Published);
  t.expect("dim V from 0 -> L -> V -> S3L -> 0", L.dim() + S3.dim(), 6L, Source::Published);
  t.expect("0 -> A -> A -> ? -> 0", euler_solve({S3, S3, std::nullopt}), 0L, Source::Identity);
  t.expect("(1,1,1) on (P^1)^3", monomial_section_count({1, 1, 1}), 8L, Source::Derived);
}

inline void eizi_vanishing(Transcript& t, const CheckContext&) {
  auto P = product_ring(make_projective_space(1, "sigma"), catalog("B"));
  t.require("sigma^2 = 0", vanishes(P, "sigma^2"), Source::Identity);
  t.expect("integral sigma*h_3^4", integral(P, "sigma*h_3^4"), 16, Source::Derived);
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "a_" + s(i);
    const std::string z = "(" + a + "+h_3*sigma-(2*" + a + "-1/2*h_3^2))";
    t.expect("[Z_" + s(i) + "]*(a_" + s(i) + "-3h_3 sigma)", P->reduce(P->parse(z + "*(" + a + "-3*h_3*sigma)")),
             Poly(P->signature()), Source::Published);
  }
}

inline void pi_quadric_degree(Transcript& t, const CheckContext&) {
  auto Pi = catalog("Pi");
  t.expect("dimension", Pi->dimension(), 4, Source::Derived);
  t.expect("integral 2h*sigma*(h+2sigma)^2", integral(Pi, "2*h*sigma*(h+2*sigma)^2"), 2, Source::Published);
  t.expect("integral sigma*h^3", integral(Pi, "sigma*h^3"), 1, Source::Derived);
}

// Part 2: classes on G(2,6) and the threefold F_B.

inline void deg_fb_24(Transcript& t, const CheckContext&) {
  auto G = catalog("G26");
  t.expect("integral over G(2,6) of 4(h2^2-c2)^2 h2^3 * h2",
           integrate_on_hyperplane_section(G, G->var("h_2"), G->parse("4*(h_2^2-c_2)^2*h_2^3")), 24,
           Source::Published);
  t.expect("integral over F_B of h2^3 in (P^1)^4", integral(catalog("FB"), kH2 + "^3"), 24, Source::Published);
}

inline void alphai_deg_6(Transcript& t, const CheckContext&) {
  auto G = catalog("G26");
  t.expect("integral over G(2,6) of 2 h2 c2 (h2^2-c2) h2^2 * h2",
           integrate_on_hyperplane_section(G, G->var("h_2"), G->parse("2*h_2*c_2*(h_2^2-c_2)*h_2^2")), 6,
           Source::Published);
}

inline void g26_degree(Transcript& t, const CheckContext&) {
  auto G = catalog("G26");
  t.expect("integral h2^8", integral(G, "h_2^8"), 14, Source::Derived);
  t.expect("integral h2^6 c2", integral(G, "h_2^6*c_2"), 5, Source::Derived);
  t.expect("integral c2^4", integral(G, "c_2^4"), 1, Source::Derived);
  t.expect("integral over the hyperplane section of h2^7",
           integrate_on_hyperplane_section(G, G->var("h_2"), G->parse("h_2^7")), 14, Source::Derived);
}

inline void g26_hilbert_function(Transcript& t, const CheckContext&) {
  t.expect("Hilbert function of A(G(2,6))", catalog("G26")->hilbert_function(),
           std::vector<std::int64_t>{1, 1, 2, 2, 3, 2, 2, 1, 1}, Source::Derived);
  auto G = catalog("G26");
  auto above = hilbert_function(G->basis(), 10);
  t.expect("pieces of degree 9 and 10", std::vector<std::int64_t>{above[9], above[10]}, std::vector<std::int64_t>{0, 0},
           Source::Identity);
}

inline void fb_triple_products(Transcript& t, const CheckContext&) {
  auto FB = catalog("FB");
  int bad = 0;
  for (int i = 1; i <= 4; ++i) {
    const std::string ai = "alpha_" + s(i);
    for (int y = 1; y <= 4; ++y) bad += integral(FB, ai + "^2*alpha_" + s(y)) != 0;
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      bad += integral(FB, ai + "*alpha_" + s(j) + "*" + kH2) != 2;
      for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        bad += integral(FB, ai + "*alpha_" + s(j) + "*alpha_" + s(k)) != 1;
        bad += integral(FB, "(" + kH2 + "-2*" + ai + ")*alpha_" + s(j) + "*alpha_" + s(k)) != 0;
      }
    }
  }
  t.expect("integral alpha_1 alpha_2 alpha_3", integral(FB, "alpha_1*alpha_2*alpha_3"), 1, Source::Published);
  t.expect("integral alpha_1^2 alpha_2", integral(FB, "alpha_1^2*alpha_2"), 0, Source::Published);
  t.expect("integral alpha_1 alpha_2 h2", integral(FB, "alpha_1*alpha_2*" + kH2), 2, Source::Published);
  t.expect("integral v_1 alpha_2 alpha_3", integral(FB, "(" + kH2 + "-2*alpha_1)*alpha_2*alpha_3"), 0,
           Source::Published);
  t.expect("failures over all index choices", bad, 0, Source::Published);
}

inline void fb_section_counts(Transcript& t, const CheckContext&) {
  t.expect("h^0 O(1,1,1,1) on (P^1)^4", monomial_section_count({1, 1, 1, 1}), 16L, Source::Derived);
  t.expect("h^0 O(1,1,1,1) on F_B", monomial_section_count({1, 1, 1, 1}, true), 15L, Source::Published);
  t.expect("h^0 O(h2) on the isotropic G(2,6) from Bott", cohomology({1, 1, 0})->dimension, Integer(14),
           Source::Published);
  t.expect("h^0 O(0,0,0,0)", monomial_section_count({0, 0, 0, 0}), 1L, Source::Identity);
}

// Part 3: the incidence I, the blow-up model and the ring of B.

inline void chow_b_presentation(Transcript& t, const CheckContext&) {
  auto B = catalog("B");
  t.expect("integral h3^4", integral(B, "h_3^4"), 16, Source::Published);
  t.expect("integral a1 a2", integral(B, "a_1*a_2"), 2, Source::Published);
  int bad = 0;
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "a_" + s(i);
    const std::string V = "(2*" + a + "-1/2*h_3^2)";
    bad += !vanishes(B, "8*h_3*" + a + "-3*h_3^3");
    bad += !vanishes(B, a + "^2-3/16*h_3^4");
    bad += !vanishes(B, V + "^2-1/4*h_3^4");
    bad += integral(B, V + "^2") != 4;
    bad += integral(B, V + "*h_3^2") != 4;
    bad += integral(B, "(1/2*h_3^2-" + a + ")*h_3^2") != 2;
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      bad += !vanishes(B, "8*" + a + "*a_" + s(j) + "-h_3^4");
      bad += !vanishes(B, V + "*(2*a_" + s(j) + "-1/2*h_3^2)");
    }
  }
  t.expect("[V_1]^2 in points", integral(B, "(2*a_1-1/2*h_3^2)^2") / integral(B, "1/2*a_1*a_2"), 4, Source::Published);
  t.expect("[V_1][V_2]", B->reduce(B->parse("(2*a_1-1/2*h_3^2)*(2*a_2-1/2*h_3^2)")), Poly(B->signature()),
           Source::Published);
  t.expect("deg V_1", integral(B, "(2*a_1-1/2*h_3^2)*h_3^2"), 4, Source::Published);
  t.expect("deg Z_{1,p}", integral(B, "(1/2*h_3^2-a_1)*h_3^2"), 2, Source::Published);
  t.expect("relation failures over all indices", bad, 0, Source::Published);
}

inline void gens_a2b_relation(Transcript& t, const CheckContext&) {
  auto B = catalog("B");
  t.require("2(a1+a2+a3+a4) = 3h3^2", vanishes(B, "2*(a_1+a_2+a_3+a_4)-3*h_3^2"), Source::Published);
  t.expect("Hilbert function of A_B", B->hilbert_function(), std::vector<std::int64_t>{1, 1, 4, 1, 1},
           Source::Derived);
  Matrix<Rational> gram(4, 4, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = integral(B, "a_" + s(i + 1) + "*a_" + s(j + 1));
  t.expect("rank of the intersection form on a_1..a_4", rank(gram), std::size_t{4}, Source::Derived);
}

inline void blowup_tridegree(Transcript& t, const CheckContext&) {
  const auto sols = solve_center_tridegree();
  std::vector<std::string> shown;
  for (const auto& v : sols) shown.push_back("(" + s(v[0]) + "," + s(v[1]) + "," + s(v[2]) + ")");
  t.expect("genus-1 centers in [0,6]^3 with alpha^3 = 0 and alpha^2 D = 0", shown,
           std::vector<std::string>{"(2,2,2)"}, Source::Derived);
  auto base = make_p1_power(3, "beta_");
  auto X = blowup_threefold_along_curve(base, center_class(base, 0, 0, 1), 0);
  t.expect("e^3 for a ruling line", integral(X, "e^3"), 0, Source::Derived);
}

inline void blowup_consistency(Transcript& t, const CheckContext&) {
  const auto sols = solve_center_tridegree();
  t.expect("number of admissible centers", sols.size(), std::size_t{1}, Source::Derived);
  if (!sols.empty())
    t.expect("solved tri-degree", std::vector<int>{sols[0][0], sols[0][1], sols[0][2]}, std::vector<int>{2, 2, 2},
             Source::Derived);
  auto X = blowup_model();
  auto FB = catalog("FB");
  Poly h2(X->signature());
  for (int i = 1; i <= 4; ++i) h2 += blowup_alpha(X, i);
  t.expect("integral h2^3", X->integrate(h2.pow(3)), 24, Source::Published);
  int bad = 0;
  const std::vector<Poly> divisors{X->var("beta_1"), X->var("beta_2"), X->var("beta_3"), X->var("e")};
  for (int i = 1; i <= 4; ++i) {
    const Poly ai = blowup_alpha(X, i);
    bad += X->integrate(ai.pow(3)) != 0;
    for (const auto& D : divisors) bad += X->integrate(ai.pow(2) * D) != 0;
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      const Poly aj = blowup_alpha(X, j);
      bad += X->integrate(ai * aj * h2) != 2;
      for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        const Poly ak = blowup_alpha(X, k);
        bad += X->integrate(ai * aj * ak) != 1;
        bad += X->integrate((h2 - Rational(2) * ak) * ai * aj) != 0;
      }
    }
  }
  t.expect("failures of alpha_i^3 = 0, alpha_i^2 D = 0, alpha_i alpha_j alpha_k = 1, alpha_i alpha_j h2 = 2, "
           "v_k alpha_i alpha_j = 0",
           bad, 0, Source::Published);
  int disagree = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 4; ++k) {
        const Rational a = X->integrate(blowup_alpha(X, i) * blowup_alpha(X, j) * blowup_alpha(X, k));
        const Rational b = integral(FB, "alpha_" + s(i) + "*alpha_" + s(j) + "*alpha_" + s(k));
        disagree += a != b;
      }
  t.expect("triple products differing between the blow-up and the divisor model", disagree, 0, Source::Derived);
}

inline void ai_coefficient(Transcript& t, const CheckContext&) {
  auto G = catalog("G26");
  BundleClass K2(G, 2, {-G->var("h_2"), G->var("c_2")});
  BundleClass Q = whitney_quotient(BundleClass::trivial(G, 6), whitney_sum(K2, dual(K2)));
  t.expect("c2(K2^perp/K2)", Q.c(2), G->reduce(G->parse("h_2^2-2*c_2")), Source::Derived);
  BundleClass E = twist(dual(Q), G->var("h_2"));
  t.expect("c1((K2^perp/K2)^v(h2))", E.c(1), G->parse("2*h_2"), Source::Derived);
  t.expect("c2((K2^perp/K2)^v(h2))", E.c(2), G->reduce(G->parse("2*h_2^2-2*c_2")), Source::Published);
  // On F_B, h2^2 = 3 c2: substitute c2 = h2^2/3 in Q[h2].
  auto sig = make_signature({{"h_2", 1}});
  const Poly h = Poly::variable(sig, 0);
  const Poly restricted = substitute(parse_poly("2*h_2^2-2*c_2", G->signature()), {h, Rational(1, 3) * h.pow(2)}, sig);
  t.expect("restriction under h2^2 = 3c2", restricted, Rational(4, 3) * h.pow(2), Source::Published);
  auto I = catalog("I");
  std::string sum = "0";
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "alpha_" + s(i);
    sum += "+h_3'*(" + kH2 + "-" + a + ")+" + kH2 + "*(2*" + a + "-" + kH2 + ")";
  }
  t.expect("sum of p2^* a_i - 3/2 h3'^2 in A_I", I->reduce(I->parse(sum + "-3/2*h_3'^2")), Poly(I->signature()),
           Source::Published);
}

inline void relative_canonical_i(Transcript& t, const CheckContext&) {
  auto I = catalog("I");
  t.expect("relative canonical class of I over F_B", relative_canonical(I).rep(),
           I->reduce(I->parse("2*" + kH2 + "-2*h_3'")), Source::Published);
  auto L = projective_bundle(BundleClass::trivial(catalog("pt"), 2));
  t.expect("relative canonical of P^1 over a point", relative_canonical(L).rep(), L->parse("-2*zeta"),
           Source::Identity);
}

inline void fb_pullback_sanity(Transcript& t, const CheckContext&) {
  auto FB = catalog("FB");
  int bad = 0;
  for (int i = 1; i <= 4; ++i) {
    const std::string ai = "alpha_" + s(i);
    bad += !vanishes(FB, "2*" + kH2 + "*(" + kH2 + "-" + ai + ")+" + kH2 + "*(2*" + ai + "-" + kH2 + ")-" + kH2 + "^2");
  }
  t.expect("nonvanishing 2h2(h2-alpha_i) + h2(2alpha_i-h2) - h2^2", bad, 0, Source::Published);
}

inline void gw36_presentation(Transcript& t, const CheckContext&) {
  auto G = catalog("Gw36");
  t.expect("integral c'_1^6", integral(G, "c'_1^6"), 16, Source::Published);
  t.expect("Hilbert function", G->hilbert_function(), std::vector<std::int64_t>{1, 1, 1, 2, 1, 1, 1}, Source::Derived);
  const BundleClass T = tangent_bundle(G);
  t.expect("c1(T)", T.c(1), G->parse("4*c'_1"), Source::Derived);
  t.expect("topological Euler characteristic", G->integrate(T.c(6)), 8, Source::Derived);
  // B is cut by two hyperplanes: the integral over B of a restricted class x
  // is the integral of x c'_1^2, and c'_1 c'_2 = 4 c'_3 holds after restriction.
  auto B = catalog("B");
  const Poly h = B->var("h_3");
  const std::vector<Poly> images{h, Rational(1, 2) * h.pow(2), Rational(1, 8) * h.pow(3)};
  int bad = 0;
  for (const auto& m : standard_monomials(G->basis(), 4)) {
    const Poly x = Poly::monomial(G->signature(), m);
    bad += B->integrate(substitute(x, images, B->signature())) != G->integrate(x * G->var("c'_1").pow(2));
  }
  for (const auto& r : G->relations()) bad += !B->reduce(substitute(r, images, B->signature())).is_zero();
  t.expect("restriction to B incompatible with integration or relations", bad, 0, Source::Derived);
  t.require("c'_1 c'_2 = 4 c'_3 restricted to B",
            B->reduce(substitute(G->parse("c'_1*c'_2-4*c'_3"), images, B->signature())).is_zero(), Source::Published);
}

inline void b_tangent_anchors(Transcript& t, const CheckContext&) {
  auto B = catalog("B");
  const BundleClass T = tangent_bundle(B);
  t.expect("c1(T_B)", T.c(1), B->parse("2*h_3"), Source::Derived);
  t.expect("topological Euler characteristic of B", B->integrate(T.c(4)), 8, Source::Derived);
  t.expect("chi(O_B)", hrr_chi(BundleClass::trivial(B, 1)), 1, Source::Derived);
  t.expect("chi(O_B(1))", hrr_chi(BundleClass::line(B, B->var("h_3"))), 12, Source::Derived);
}

// Part 4: Segre classes, the net of skew forms and the sheaf K on P^5.

inline void segre_birational(Transcript& t, const CheckContext&) {
  auto B = catalog("B");
  const Poly h3 = B->var("h_3");
  BundleClass E1(B, 2, {-h3, B->var("a_1")});
  t.expect("s2(E1)", segre(E1, 2), B->reduce(B->parse("h_3^2-a_1")), Source::Derived);
  t.expect("integral s2(E1) h3^2", B->integrate(segre(E1, 2) * h3.pow(2)), 10, Source::Derived);
  t.expect("integral s4(E1)", B->integrate(segre(E1, 4)), 1, Source::Published);
  auto P = projective_bundle(twist(E1, h3), "h");
  t.expect("integral h^5 on Proj(E1(h3))", integral(P, "h^5"), 1, Source::Published);
  const ChowClass R = relative_canonical(P) + P->cls("-2*h_3") - P->cls("-6*h");
  t.expect("exceptional class", R.rep(), P->reduce(P->parse("4*h-h_3")), Source::Published);
}

inline void pencil_beta(Transcript& t, const CheckContext&) {
  const auto beta = SkewPencil::beta();
  const auto cert = constant_rank_certificate(beta);
  t.expect("Pf(beta)", cert.pfaffian, Poly(uv_signature()), Source::Published);
  std::vector<std::string> subs;
  for (const auto& p : cert.sub_pfaffians) subs.push_back(p.to_string());
  t.note("4x4 sub-Pfaffians: " + detail::show(subs));
  t.expect("gcd of the sub-Pfaffians", cert.gcd, Poly::constant(uv_signature(), 1), Source::Derived);
  t.require("constant rank 4 certificate", cert.certified, Source::Published);
  t.expect("rank of the printed 12x12 matrix", rank(printed_flattening()), std::size_t{6}, Source::Published);
}

inline void flattening_derived(Transcript& t, const CheckContext&) {
  const auto D = derived_flattening(SkewPencil::beta());
  t.require("derived flattening antisymmetric", is_antisymmetric_rational(D), Source::Identity);
  std::vector<std::size_t> piv;
  t.expect("rank of the derived flattening", rank(D, &piv), std::size_t{6}, Source::Published);
  t.expect("pivot columns", piv, std::vector<std::size_t>{0, 1, 2, 3, 5, 11}, Source::Derived);
  t.require("printed matrix antisymmetric", is_antisymmetric_rational(printed_flattening()), Source::Identity);
}

inline void induced_form(Transcript& t, const CheckContext&) {
  const auto q = Quasimonad::build(SkewPencil::beta());
  t.expect("rank of the induced form on W", rank(q.form), std::size_t{6}, Source::Derived);
  t.expect("Pf of the induced form is nonzero", pfaffian_rational(q.form) != 0, true, Source::Derived);
}

inline void quasimonad_maps(Transcript& t, const CheckContext& ctx) {
  const auto rep = quasimonad_checks(ctx.seed, 6, 8, false);
  t.note("seed " + std::to_string(rep.seed));
  t.require("composition W -> L(1) after L(-1) -> W is zero", rep.composition_zero, Source::Derived);
  t.expect("left map rank at e0", rep.left_rank_e0, std::size_t{2}, Source::Derived);
  for (const auto& [z, r] : rep.left_samples) t.expect("left map rank at " + detail::show(z), r, std::size_t{2}, Source::Published);
  t.expect("right map generic rank", rep.right_generic_rank, std::size_t{2}, Source::Published);
  const auto q = Quasimonad::build(SkewPencil::beta());
  std::vector<std::string> row0, row1;
  for (std::size_t k = 0; k < q.right.cols(); ++k) {
    row0.push_back(q.right(0, k).to_string());
    row1.push_back(q.right(1, k).to_string());
  }
  t.note("right map rows: " + detail::show(row0) + " " + detail::show(row1));
}

inline void k_invariants(Transcript& t, const CheckContext&) {
  auto P = catalog("P5");
  const Poly H = P->var("H");
  const Character curve = grr_push_curve(P, 0, Rational(3) * H.pow(4), H.pow(5), 4);
  t.expect("ch_4 of the pushforward", curve[4], P->parse("3*H^4"), Source::Derived);
  const Character ch = Rational(6) * Character::exp(P, P->constant(0)) - Rational(2) * Character::exp(P, -H) -
                       Rational(2) * Character::exp(P, H) + curve;
  const BundleClass K = chern_from_character(ch);
  t.expect("rank K", K.rank(), 2, Source::Published);
  std::vector<Rational> c;
  for (int k = 1; k <= 4; ++k) c.push_back(P->integrate(K.c(k) * H.pow(5 - k)));
  t.expect("(c1, c2, c3, c4) of K in powers of H", c, std::vector<Rational>{0, 2, 0, -15}, Source::Published);
  t.expect("chi(K(2))", hrr_chi(ch * Character::exp(P, Rational(2) * H)), 13, Source::Published);
  t.note("chi(K) = " + to_string(hrr_chi(ch)) + " (reported only)");
  t.expect("todd_1(P^5)", todd(P)[1], P->parse("3*H"), Source::Derived);
}

inline void hrr_p5_anchors(Transcript& t, const CheckContext&) {
  int bad = 0;
  for (int n = 1; n <= 5; ++n) {
    auto P = make_projective_space(n);
    for (int k = 0; k <= 5; ++k)
      bad += hrr_chi(BundleClass::line(P, Rational(k) * P->var("H"))) != Rational(binomial(n + k, n));
  }
  auto P5 = catalog("P5");
  t.expect("chi(O_P5)", hrr_chi(BundleClass::trivial(P5, 1)), 1, Source::Identity);
  t.expect("chi(O_P5(2))", hrr_chi(BundleClass::line(P5, P5->parse("2*H"))), 21, Source::Derived);
  t.expect("failures of chi(O(k)) = C(n+k, n)", bad, 0, Source::Derived);
}

inline void gw36_wedge2(Transcript& t, const CheckContext&) {
  auto G = catalog("Gw36");
  const BundleClass Q = tautological_quotient_gw36(G);
  const BundleClass W2 = wedge2_rank3(Q);
  t.require("wedge^2 Q = Q^v (x) det Q classwise", W2 == twist(dual(Q), G->var("c'_1")), Source::Identity);
  t.expect("c1(wedge^2 Q)", W2.c(1), G->parse("2*c'_1"), Source::Derived);
  t.require("general wedge2 agrees with the rank 3 formula", wedge2(Q) == W2, Source::Identity);
}

inline void congruence_model(Transcript& t, const CheckContext& ctx) {
  const auto rep = congruence_model_check(ctx.seed);
  t.note("seed " + std::to_string(rep.seed) + ", degree cap " + s(rep.degree_cap) +
         (rep.basis_complete ? ", basis complete" : ", basis truncated above the cap"));
  const char* names[] = {"-a lambda", "-a mu", "lambda y1 - mu y0", "lambda y2 - mu y1", "lambda y3 - mu y2",
                         "lambda y4 - mu y3"};
  for (std::size_t k = 0; k < rep.section_in_ideal.size(); ++k)
    t.require("section " + std::string(names[k]) + " in the ideal of Z_H", rep.section_in_ideal[k], Source::Published);
  t.require("1, lambda, y0 outside the ideal", rep.ideal_proper, Source::Identity);
  t.require("(mu, lambda) M_E = -(s2, s1, s3, s4, s5, s6)", rep.compatibility_identity, Source::Derived);
  t.note("point off the section (a,b,x0..x5,y0..y5): " + detail::show(rep.point_off));
  t.note("point on the section: " + detail::show(rep.point_on));
  t.note("second hyperplane: " + detail::show(rep.second_hyperplane));
  t.require("both points on B", rep.points_on_b, Source::Derived);
  t.expect("rank M_E off the section", rep.rank_off, std::size_t{2}, Source::Published);
  t.expect("rank M_E on the section", rep.rank_on, std::size_t{1}, Source::Published);
}

inline void cubic_locus(Transcript& t, const CheckContext& ctx) {
  const auto rep = quasimonad_checks(ctx.seed, 6, 0, true);
  t.note("degree cap " + s(rep.degree_cap) + ", basis size " + std::to_string(rep.cubic_basis_size));
  if (rep.cubic_status == "inconclusive") {
    t.note("inconclusive: degree cap reached");
    return;
  }
  t.expect("Hilbert polynomial of the rank <= 1 locus", detail::show(rep.cubic_hp.coefficients),
           std::string("(1, 3)"), Source::Published);
  t.expect("dimension", rep.cubic_hp.dimension, 1, Source::Published);
  t.expect("degree", rep.cubic_hp.degree, 3, Source::Published);
}

// Property suites.

inline void props_ring_axioms(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  int bad = 0, n = 0;
  for (const char* label : {"B", "Gw36", "G26", "I"}) {
    auto R = catalog(label);
    for (int k = 0; k < kPropertyInstances / 4; ++k, ++n) {
      const ChowClass x = R->cls(random_element(R, rng)), y = R->cls(random_element(R, rng)),
                      z = R->cls(random_element(R, rng));
      bad += !(x * y == y * x);
      bad += !((x * y) * z == x * (y * z));
      bad += !(x * (y + z) == x * y + x * z);
      bad += !(x * R->cls(R->constant(1)) == x);
      bad += !(x + (-x) == R->cls(R->constant(0)));
      const Poly a = random_class(R, R->ambient_dimension(), rng), b = random_class(R, R->ambient_dimension(), rng);
      bad += R->integrate(Rational(3) * a - b) != 3 * R->integrate(a) - R->integrate(b);
    }
  }
  t.expect("instances", n, kPropertyInstances, Source::Identity);
  t.expect("axiom failures", bad, 0, Source::Identity);
}

inline void props_normal_form(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 1);
  std::uniform_int_distribution<long> d(-5, 5);
  int bad = 0, n = 0;
  for (const char* label : {"B", "G26", "Gw36", "P1^4"}) {
    auto R = catalog(label);
    const auto& vars = R->signature()->variables();
    for (int k = 0; k < kPropertyInstances / 4; ++k, ++n) {
      // Unreduced polynomials: products of random linear combinations of variables.
      Poly p = R->constant(d(rng));
      for (int f = 0; f < 3; ++f) {
        Poly lin = R->constant(d(rng));
        for (std::size_t v = 0; v < vars.size(); ++v) lin += Rational(d(rng)) * Poly::variable(R->signature(), v);
        p *= lin;
      }
      const Poly q = random_element(R, rng);
      const Poly np = R->reduce(p);
      bad += R->reduce(np) != np;
      bad += R->reduce(Rational(2) * p - q) != Rational(2) * np - R->reduce(q);
    }
  }
  t.expect("instances", n, kPropertyInstances, Source::Identity);
  t.expect("failures of NF(NF p) = NF p and linearity", bad, 0, Source::Identity);
}

inline void props_whitney_segre(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 2);
  int bad = 0, n = 0;
  for (const char* label : {"B", "Gw36", "P1^3", "P5"}) {
    auto R = catalog(label);
    for (int k = 0; k < kPropertyInstances / 4; ++k, ++n) {
      const BundleClass E = random_bundle(R, 1 + k % 4, rng), F = random_bundle(R, 1 + (k / 4) % 3, rng);
      const BundleClass S = whitney_sum(E, F);
      for (int m = 1; m <= R->dimension(); ++m) {
        Poly acc(R->signature());
        for (int j = 0; j <= m; ++j) acc += E.c(j) * F.c(m - j);
        bad += R->reduce(acc) != S.c(m);
      }
      bad += !(whitney_quotient(whitney_sum(E, F), F) == E);
      const auto s = segre_total(E);
      for (int m = 1; m <= R->dimension(); ++m) {
        Poly acc(R->signature());
        for (int j = 0; j <= m; ++j) acc += s[j] * E.c(m - j);
        bad += !R->reduce(acc).is_zero();
      }
      bad += !(chern_from_character(chern_character(E)) == E);
    }
  }
  t.expect("instances", n, kPropertyInstances, Source::Identity);
  t.expect("failures of c(E+F) = c(E)c(F), quotient, s*c = 1, ch round trip", bad, 0, Source::Identity);
}

inline void props_clebsch_gordan(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 3);
  std::uniform_int_distribution<int> part(0, 6), count(1, 3);
  auto random_rep = [&] {
    std::vector<int> p(count(rng));
    for (auto& x : p) x = part(rng);
    return SL2Rep(p);
  };
  int bad = 0;
  for (int k = 0; k < kPropertyInstances; ++k) {
    const SL2Rep a = random_rep(), b = random_rep(), c = random_rep();
    bad += tensor(a, b).dim() != a.dim() * b.dim();
    bad += !(tensor(a, b) == tensor(b, a));
    bad += !(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
  t.expect("instances", kPropertyInstances, kPropertyInstances, Source::Identity);
  t.expect("failures of dim multiplicativity, commutativity, associativity", bad, 0, Source::Identity);
}

inline void props_pfaffian(Transcript& t, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 4);
  std::uniform_int_distribution<long> d(-6, 6);
  int bad = 0;
  for (int k = 0; k < kPropertyInstances; ++k) {
    const std::size_t n = 2 * (1 + k % 3);
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = d(rng);
        m(j, i) = -m(i, j);
      }
    const Rational pf = pfaffian_rational(m);
    bad += pf * pf != determinant(m);
  }
  t.expect("instances", kPropertyInstances, kPropertyInstances, Source::Identity);
  t.expect("failures of Pf^2 = det", bad, 0, Source::Identity);
}

}  // namespace checks

inline const std::vector<Check>& registry() {
  using namespace checks;
  static const std::vector<Check> all = [] {
    std::vector<Check> v{
        {"bott-six-weights", "1", "acyclicity of the six partition weights; dimensions 6, 14, 14", Runtime::Fast,
         bott_six_weights},
        {"bott-serre-duality", "1", "cohomology degrees of w and its Serre dual add to 6", Runtime::Fast,
         bott_serre_duality},
        {"bott-dominant-weights", "1", "degree 0 exactly for dominant weights; Weyl dimension", Runtime::Fast,
         bott_dominant_weights},
        {"dimension-ledger", "1", "h^0(E(1)) = 6, Ext^1(E,E) = 0, section counts 16 and 15", Runtime::Fast,
         dimension_ledger},
        {"sl2-marked-sequences", "1", "dimensions of W and V from the equivariant sequences", Runtime::Fast,
         sl2_marked_sequences},
        {"EiZi-vanishing", "1", "(a_i + h_3 sigma - [V_i])(a_i - 3 h_3 sigma) = 0 on P^1 x B", Runtime::Fast,
         eizi_vanishing},
        {"pi-quadric-degree", "1", "relative model over P^1: the quadric surface has degree 2", Runtime::Fast,
         pi_quadric_degree},
        {"deg-FB-24", "2", "the threefold F_B has degree 24", Runtime::Fast, deg_fb_24},
        {"alphai-deg-6", "2", "alpha_i . h_2^2 = 6", Runtime::Fast, alphai_deg_6},
        {"g26-degree-14", "2", "G(2,6) and its isotropic hyperplane section have degree 14", Runtime::Fast,
         g26_degree},
        {"g26-hilbert-function", "2", "Betti numbers of G(2,6) from the presentation", Runtime::Fast,
         g26_hilbert_function},
        {"fb-triple-products", "2", "triple intersections of alpha_1..alpha_4, h_2 and v_i on F_B", Runtime::Fast,
         fb_triple_products},
        {"fb-section-counts", "2", "h^0 of O(1,1,1,1) on (P^1)^4 and on F_B; h^0 O(h_2) = 14", Runtime::Fast,
         fb_section_counts},
        {"chow-B-presentation", "3", "presentation of the Chow ring of B", Runtime::Fast, chow_b_presentation},
        {"gensA2B-relation", "3", "2(a_1+...+a_4) = 3 h_3^2 and a_1..a_4 span A^2(B)", Runtime::Fast,
         gens_a2b_relation},
        {"blowup-tri-degree", "3", "tri-degree of the elliptic sextic solved from alpha^2 = 0", Runtime::Fast,
         blowup_tridegree},
        {"blowup-consistency", "3", "blow-up model of F_B reproduces its intersection numbers", Runtime::Fast,
         blowup_consistency},
        {"AI-coefficient", "3", "coefficient 4/3 in the Chow ring of I and the pullback of the a_i",
         Runtime::Fast, ai_coefficient},
        {"relative-canonical-I", "3", "relative canonical class 2h_2 - 2h_3' of I over F_B", Runtime::Fast,
         relative_canonical_i},
        {"fb-pullback-sanity", "3", "2h_2(h_2 - alpha_i) + h_2(2alpha_i - h_2) = h_2^2 on F_B", Runtime::Fast,
         fb_pullback_sanity},
        {"gw36-presentation", "3", "Chow ring of the Lagrangian Grassmannian LG(3,6)", Runtime::Fast,
         gw36_presentation},
        {"b-tangent-anchors", "3", "tangent bundle of B: c_1 = 2h_3, chi(O_B(1)) = 12", Runtime::Fast,
         b_tangent_anchors},
        {"segre-birational", "4", "s_4(E_1) = 1 and the exceptional class 4h - h_3", Runtime::Fast,
         segre_birational},
        {"pencil-beta", "4", "the net beta has constant rank 4; its 12x12 flattening has rank 6", Runtime::Fast,
         pencil_beta},
        {"flattening-derived", "4", "flattening of beta in wedge^2(L (x) V) with explicit basis", Runtime::Fast,
         flattening_derived},
        {"induced-form-nondegenerate", "4", "the alternating form induced on W is nondegenerate", Runtime::Fast,
         induced_form},
        {"quasimonad-maps", "4", "the quasimonad L(-1) -> W -> L(1) is a complex, injective on the left",
         Runtime::Fast, quasimonad_maps},
        {"K-invariants", "4", "c(K) = (0, 2, 0, -15) and chi(K(2)) = 13", Runtime::Fast, k_invariants},
        {"hrr-p5-anchors", "4", "Hirzebruch-Riemann-Roch on projective spaces", Runtime::Fast, hrr_p5_anchors},
        {"gw36-wedge2-identity", "4", "wedge^2 Q = Q^v (x) det Q on LG(3,6)", Runtime::Fast, gw36_wedge2},
        {"congruence-model", "4", "the congruence is given by the 2x6 matrix M_E", Runtime::Slow,
         congruence_model},
        {"cubic-locus", "4", "degeneracy locus of the right quasimonad map is a twisted cubic", Runtime::Slow,
         cubic_locus},
        {"props-ring-axioms", "props", "commutative ring axioms and linear integration", Runtime::Fast,
         props_ring_axioms},
        {"props-normal-form", "props", "normal forms are idempotent and linear", Runtime::Fast, props_normal_form},
        {"props-whitney-segre", "props", "Whitney product rule, Segre inversion, ch round trip", Runtime::Fast,
         props_whitney_segre},
        {"props-clebsch-gordan", "props", "Clebsch-Gordan products multiply dimensions", Runtime::Fast,
         props_clebsch_gordan},
        {"props-pfaffian-determinant", "props", "Pf(M)^2 = det(M)", Runtime::Fast, props_pfaffian},
    };
    std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return v;
  }();
  return all;
}

inline const Check* find_check(std::string_view name) {
  for (const auto& c : registry())
    if (c.name == name) return &c;
  return nullptr;
}

inline CheckReport run_check(const Check& c, const CheckContext& ctx) {
  CheckReport r{c.name, c.section, c.ref, c.runtime, false, {}, 0, ctx.seed};
  Transcript t;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(t, ctx);
  } catch (const std::exception& e) {
    t.fail(std::string("error: ") + e.what());
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  r.passed = t.passed();
  r.transcript = t.lines();
  return r;
}

/// Runs the checks on up to `workers` threads; reports come back sorted by name.
inline std::vector<CheckReport> run_checks(const std::vector<const Check*>& selected, const CheckContext& ctx,
                                           unsigned workers = 1) {
  std::vector<CheckReport> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) out[i] = run_check(*selected[i], ctx);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace chowkit
