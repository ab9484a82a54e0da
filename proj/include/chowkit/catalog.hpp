#pragma once

// Named rings. Every entry is built once and cached.

#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "chowkit/bundle.hpp"
#include "chowkit/chow_ring.hpp"
#include "chowkit/constructions.hpp"

namespace chowkit {

/// P^n with hyperplane class `var`.
inline ChowRingPtr make_projective_space(int n, const std::string& var = "H") {
  if (n < 1) throw DomainError("projective space needs n >= 1");
  auto sig = make_signature({{var, 1}});
  const Poly H = Poly::variable(sig, 0);
  ChowRing::Spec spec;
  spec.label = "P" + std::to_string(n);
  spec.sig = sig;
  spec.relations = {H.pow(n + 1)};
  spec.dimension = n;
  spec.top = H.pow(n);
  std::vector<Poly> c;
  for (int k = 0; k <= n; ++k) c.push_back(binomial(n + 1, k) * H.pow(k));
  spec.tangent = ChernData{n, c};
  return ChowRing::create(std::move(spec));
}

/// (P^1)^k with point classes alpha_1..alpha_k of the factors.
inline ChowRingPtr make_p1_power(int k, const std::string& prefix = "alpha_") {
  if (k < 1) throw DomainError("P1^k needs k >= 1");
  std::vector<Variable> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({prefix + std::to_string(i), 1});
  auto sig = make_signature(vars);
  ChowRing::Spec spec;
  spec.label = "P1^" + std::to_string(k);
  spec.sig = sig;
  spec.dimension = k;
  spec.top = Poly::constant(sig, 1);
  Poly total = Poly::constant(sig, 1);
  for (int i = 0; i < k; ++i) {
    const Poly a = Poly::variable(sig, i);
    spec.relations.push_back(a.pow(2));
    spec.top *= a;
    total *= Poly::constant(sig, 1) + Rational(2) * a;
  }
  std::vector<Poly> c;
  for (int d = 0; d <= k; ++d) c.push_back(total.homogeneous_component(d));
  spec.tangent = ChernData{k, c};
  return ChowRing::create(std::move(spec));
}

inline ChowRingPtr make_g26() {
  auto sig = make_signature({{"h_2", 1}, {"c_2", 2}});
  ChowRing::Spec spec;
  spec.label = "G26";
  spec.sig = sig;
  spec.relations = {parse_poly("h_2^5+3*h_2*c_2^2-4*h_2^3*c_2", sig), parse_poly("-h_2^4*c_2+3*h_2^2*c_2^2-c_2^3", sig)};
  spec.dimension = 8;
  spec.top = parse_poly("h_2^8", sig);
  spec.top_value = 14;
  return ChowRing::create(std::move(spec));
}

/// Rank 3 tautological quotient with classes c'_1, c'_2, c'_3.
inline BundleClass tautological_quotient_gw36(const ChowRingPtr& gw36) {
  return BundleClass(gw36, 3, {gw36->var("c'_1"), gw36->var("c'_2"), gw36->var("c'_3")});
}

inline ChowRingPtr make_gw36() {
  auto sig = make_signature({{"c'_1", 1}, {"c'_2", 2}, {"c'_3", 3}});
  ChowRing::Spec spec;
  spec.label = "Gw36";
  spec.sig = sig;
  spec.relations = {parse_poly("c'_3^2", sig), parse_poly("c'_2^2-2*c'_1*c'_3", sig),
                    parse_poly("c'_1^2-2*c'_2", sig)};
  spec.dimension = 6;
  spec.top = parse_poly("c'_1^6", sig);
  spec.top_value = 16;
  auto ring = ChowRing::create(std::move(spec));
  const BundleClass T = sym2(tautological_quotient_gw36(ring));
  return ring->with_tangent({T.rank(), T.total()});
}

inline ChowRingPtr make_b() {
  auto sig = make_signature({{"h_3", 1}, {"a_1", 2}, {"a_2", 2}, {"a_3", 2}, {"a_4", 2}});
  ChowRing::Spec spec;
  spec.label = "B";
  spec.sig = sig;
  spec.relations.push_back(parse_poly("3*h_3^2-2*(a_1+a_2+a_3+a_4)", sig));
  for (int i = 1; i <= 4; ++i)
    spec.relations.push_back(parse_poly("8*h_3*a_" + std::to_string(i) + "-3*h_3^3", sig));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      spec.relations.push_back(
          parse_poly("8*a_" + std::to_string(i) + "*a_" + std::to_string(j) + "-h_3^4", sig));
  spec.dimension = 4;
  spec.top = parse_poly("h_3^4", sig);
  spec.top_value = 16;
  auto ring = ChowRing::create(std::move(spec));
  // T_B = S^2 Q_3 restricted, minus the normal bundle O(h_3) + O(h_3).
  // Restriction: c'_1 -> h_3, c'_2 -> h_3^2/2, c'_3 -> h_3^3/8.
  const Poly h = ring->var("h_3");
  BundleClass Q(ring, 3, {h, Rational(1, 2) * h.pow(2), Rational(1, 8) * h.pow(3)});
  BundleClass N = whitney_sum(BundleClass::line(ring, h), BundleClass::line(ring, h));
  BundleClass T = whitney_quotient(sym2(Q), N);
  return ring->with_tangent({T.rank(), T.total()});
}

/// F_B inside (P^1)^4 as the divisor of class (1,1,1,1); integration against it.
inline ChowRingPtr make_fb() {
  auto amb = make_p1_power(4);
  ChowRing::Spec spec = amb->spec();
  spec.label = "FB";
  spec.dimension = 3;
  spec.cofactor = amb->parse("alpha_1+alpha_2+alpha_3+alpha_4");
  spec.tangent.reset();
  return ChowRing::create(std::move(spec));
}

/// Rank 2 bundle (K_2^perp/K_2)^v(h_2) on F_B: c_1 = 2 h_2, c_2 = (4/3) h_2^2.
inline BundleClass incidence_bundle_fb(const ChowRingPtr& fb) {
  const Poly h2 = fb->parse("alpha_1+alpha_2+alpha_3+alpha_4");
  return BundleClass(fb, 2, {Rational(2) * h2, Rational(4, 3) * h2.pow(2)});
}

inline ChowRingPtr make_i(const ChowRingPtr& fb) {
  return projective_bundle(incidence_bundle_fb(fb), "h_3'");
}

/// Proj(O(2) + O^3) over P^1 with point class sigma and tautological class h.
inline ChowRingPtr make_pi() {
  auto p1 = make_projective_space(1, "sigma");
  const Poly s = p1->var("sigma");
  return projective_bundle(BundleClass(p1, 4, {Rational(2) * s}), "h");
}

class Catalog {
 public:
  static Catalog& instance() {
    static Catalog c;
    return c;
  }

  /// Labels: P<n>, P1^<k>, G26, Gw36, B, FB, I, Pi, pt.
  ChowRingPtr get(std::string_view label) {
    std::lock_guard lock(mu_);
    const std::string key(label);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    ChowRingPtr ring = build(key);
    cache_.emplace(key, ring);
    return ring;
  }

 private:
  ChowRingPtr build(const std::string& key) {
    if (key == "G26") return make_g26();
    if (key == "Gw36") return make_gw36();
    if (key == "B") return make_b();
    if (key == "FB") return make_fb();
    if (key == "I") {
      auto fb = cache_.count("FB") ? cache_.at("FB") : (cache_["FB"] = make_fb());
      return make_i(fb);
    }
    if (key == "Pi") return make_pi();
    if (key == "pt") return point_ring();
    auto number = [&](std::size_t from) {
      const std::string digits = key.substr(from);
      if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("unknown ring label '" + key + "'");
      return std::stoi(digits);
    };
    if (key.rfind("P1^", 0) == 0) return make_p1_power(number(3));
    if (key.rfind("P", 0) == 0) return make_projective_space(number(1));
    throw DomainError("unknown ring label '" + key + "'");
  }

  std::mutex mu_;
  std::map<std::string, ChowRingPtr> cache_;
};

inline ChowRingPtr catalog(std::string_view label) { return Catalog::instance().get(label); }

}  // namespace chowkit
