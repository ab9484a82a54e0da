#pragma once

// Products, projective bundles, blow-ups of threefolds along curves, and
// hyperplane-section integration.

#include <string>
#include <vector>

#include "chowkit/bundle.hpp"
#include "chowkit/chow_ring.hpp"

namespace chowkit {

namespace detail {

inline std::vector<Poly> embed_all(const std::vector<Poly>& ps, const SignaturePtr& target) {
  std::vector<Poly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(embed(p, target));
  return out;
}

}  // namespace detail

/// The ring of a point: no variables, integral of 1 is 1.
inline ChowRingPtr point_ring() {
  auto sig = make_signature({});
  ChowRing::Spec spec;
  spec.label = "pt";
  spec.sig = sig;
  spec.dimension = 0;
  spec.top = Poly::constant(sig, 1);
  spec.tangent = ChernData{0, {Poly::constant(sig, 1)}};
  return ChowRing::create(std::move(spec));
}

/// Kunneth product A x B. Variable names must be disjoint.
inline ChowRingPtr product_ring(const ChowRingPtr& A, const ChowRingPtr& B) {
  std::vector<Variable> vars = A->signature()->variables();
  for (const auto& v : B->signature()->variables()) {
    if (A->signature()->find(v.name)) throw DomainError("variable '" + v.name + "' appears in both factors");
    vars.push_back(v);
  }
  auto sig = make_signature(std::move(vars));
  ChowRing::Spec spec;
  spec.label = A->label() + " x " + B->label();
  spec.sig = sig;
  spec.relations = detail::embed_all(A->relations(), sig);
  for (auto& r : detail::embed_all(B->relations(), sig)) spec.relations.push_back(std::move(r));
  spec.dimension = A->dimension() + B->dimension();
  spec.top = embed(A->top_class(), sig) * embed(B->top_class(), sig);
  spec.top_value = A->top_value() * B->top_value();
  if (A->has_cofactor() || B->has_cofactor()) spec.cofactor = embed(A->cofactor(), sig) * embed(B->cofactor(), sig);
  auto ring = ChowRing::create(std::move(spec));
  if (A->tangent() && B->tangent()) {
    BundleClass TA(ring, A->tangent()->rank,
                   detail::embed_all({A->tangent()->c.begin() + 1, A->tangent()->c.end()}, sig));
    BundleClass TB(ring, B->tangent()->rank,
                   detail::embed_all({B->tangent()->c.begin() + 1, B->tangent()->c.end()}, sig));
    BundleClass T = whitney_sum(TA, TB);
    ring = ring->with_tangent({T.rank(), T.total()});
  }
  return ring;
}

/// Grothendieck projective bundle of rank-one quotients of E, with tautological
/// class zeta: sum_i (-1)^i c_i(E) zeta^(r-i) = 0, and the pushforward of
/// zeta^(r-1+k) equal to (-1)^k s_k(E).
inline ChowRingPtr projective_bundle(const BundleClass& E, const std::string& zeta = "zeta") {
  const ChowRingPtr& base = E.ring();
  const int r = E.rank();
  if (r < 1) throw DomainError("projective_bundle needs rank >= 1");
  std::vector<Variable> vars = base->signature()->variables();
  if (base->signature()->find(zeta)) throw DomainError("variable '" + zeta + "' already in the base");
  vars.push_back({zeta, 1});
  auto sig = make_signature(std::move(vars));
  const Poly z = Poly::variable(sig, zeta);

  ChowRing::Spec spec;
  spec.label = "P(" + base->label() + ")";
  spec.sig = sig;
  spec.relations = detail::embed_all(base->relations(), sig);
  Poly rel(sig);
  for (int i = 0; i <= r; ++i) rel += Rational(i % 2 ? -1 : 1) * (embed(E.c(i), sig) * z.pow(r - i));
  spec.relations.push_back(rel);
  spec.dimension = base->dimension() + r - 1;
  spec.top = embed(base->top_class(), sig) * z.pow(r - 1);
  spec.top_value = base->top_value();
  if (base->has_cofactor()) spec.cofactor = embed(base->cofactor(), sig);
  spec.origin = ProjectiveBundleOrigin{base, r, embed(E.c(1), sig), zeta};
  auto ring = ChowRing::create(std::move(spec));

  if (base->tangent()) {
    std::vector<Poly> ec;
    for (int i = 1; i <= r; ++i) ec.push_back(embed(E.c(i), sig));
    BundleClass Eup(ring, r, ec);
    BundleClass Tb(ring, base->tangent()->rank,
                   detail::embed_all({base->tangent()->c.begin() + 1, base->tangent()->c.end()}, sig));
    // 0 -> O -> E^v(zeta) -> T_rel -> 0
    BundleClass T = whitney_sum(Tb, twist(dual(Eup), z));
    ring = ring->with_tangent({T.rank() - 1, T.total()});
  }
  return ring;
}

/// -r zeta + c_1(E) on a ring built by projective_bundle.
inline ChowClass relative_canonical(const ChowRingPtr& pb) {
  if (!pb->origin()) throw DomainError("ring '" + pb->label() + "' was not built by projective_bundle");
  const auto& o = *pb->origin();
  return pb->cls(Rational(-o.rank) * pb->var(o.zeta) + o.c1);
}

/// Blow-up of a threefold along a smooth curve of class C and given genus.
/// Adds the exceptional divisor e with e * A^2 = 0, D e^2 = -(D.C) pt and
/// e^3 = -(-K.C + 2g - 2) pt.
inline ChowRingPtr blowup_threefold_along_curve(const ChowRingPtr& base, const Poly& curve, int genus,
                                                const std::string& e_name = "e") {
  if (base->dimension() != 3) throw DomainError("blow-up needs a threefold");
  if (base->has_cofactor()) throw DomainError("blow-up needs a ring without a cofactor");
  if (!base->tangent()) throw DomainError("blow-up needs tangent data on the base");
  const Poly C = base->reduce(curve);
  if (C.is_zero() || !C.is_homogeneous() || C.degree() != 2) throw DomainError("curve class must have degree 2");
  if (base->signature()->find(e_name)) throw DomainError("variable '" + e_name + "' already in the base");

  const Rational neg_k_dot_c = base->integrate(base->tangent()->c[1] * C);
  const Rational normal_degree = neg_k_dot_c + 2 * genus - 2;

  std::vector<Variable> vars = base->signature()->variables();
  vars.push_back({e_name, 1});
  auto sig = make_signature(std::move(vars));
  const Poly e = Poly::variable(sig, e_name);
  const Poly pt = embed(base->top_class(), sig) * (1 / base->top_value());

  ChowRing::Spec spec;
  spec.label = "Bl(" + base->label() + ")";
  spec.sig = sig;
  spec.relations = detail::embed_all(base->relations(), sig);
  for (const auto& m : standard_monomials(base->basis(), 2))
    spec.relations.push_back(e * embed(Poly::monomial(base->signature(), m), sig));
  for (const auto& m : standard_monomials(base->basis(), 1)) {
    const Poly D = Poly::monomial(base->signature(), m);
    spec.relations.push_back(embed(D, sig) * e.pow(2) + base->integrate(D * C) * pt);
  }
  spec.relations.push_back(e.pow(3) + normal_degree * pt);
  spec.dimension = 3;
  spec.top = embed(base->top_class(), sig);
  spec.top_value = base->top_value();
  return ChowRing::create(std::move(spec));
}

/// Integral over a hyperplane section: the ambient integral of x * H.
inline Rational integrate_on_hyperplane_section(const ChowRingPtr& ambient, const Poly& H, const Poly& x) {
  if (!x.is_homogeneous() || (!x.is_zero() && x.degree() != ambient->dimension() - 1))
    throw DomainError("class must have degree " + std::to_string(ambient->dimension() - 1));
  if (!H.is_homogeneous() || H.degree() != 1) throw DomainError("hyperplane class must be a divisor");
  return ambient->integrate(x * H);
}

}  // namespace chowkit
