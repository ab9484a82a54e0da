#pragma once

// Buchberger completion (sugar selection, product and chain criteria), normal
// forms, and Hilbert functions/polynomials of graded quotients.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/poly.hpp"

namespace chowkit {

struct GroebnerOptions {
  /// S-pairs whose lcm has weighted degree above the cap are skipped; -1 means
  /// no cap. A capped run is exact in every degree up to the cap.
  int degree_cap = -1;
};

struct GroebnerBasis {
  SignaturePtr sig;
  /// Reduced, monic, sorted by ascending leading monomial.
  std::vector<Poly> gens;
  /// False when the degree cap discarded at least one S-pair.
  bool complete = true;
  int degree_cap = -1;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

inline const Poly* find_reducer(const std::vector<Poly>& basis, const Monomial& m) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

/// Fully reduces p (every term) modulo the given list.
inline Poly reduce_full(Poly p, const std::vector<Poly>& basis) {
  Poly rest(p.signature());
  while (!p.is_zero()) {
    const Poly::Term& lt = p.leading_term();
    if (const Poly* g = find_reducer(basis, lt.mono)) {
      const Monomial shift = g->leading_monomial().cofactor_in(lt.mono);
      const Rational c = -lt.coef / g->leading_coefficient();
      p.add_scaled(*g, c, shift);
    } else {
      rest += Poly::monomial(p.signature(), lt.mono, lt.coef);
      p -= Poly::monomial(p.signature(), lt.mono, lt.coef);
    }
  }
  return rest;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly s(f.signature());
  s.add_scaled(f, 1 / f.leading_coefficient(), f.leading_monomial().cofactor_in(l));
  s.add_scaled(g, -1 / g.leading_coefficient(), g.leading_monomial().cofactor_in(l));
  return s;
}

}  // namespace detail

inline GroebnerBasis groebner(const std::vector<Poly>& generators, SignaturePtr sig,
                              GroebnerOptions opts = {}) {
  for (const auto& g : generators)
    if (g.signature() && !same_signature(g.signature(), sig)) throw SignatureMismatch();
  const Signature& s = *sig;

  std::vector<Poly> basis;
  std::vector<int> sugar;

  struct Pair {
    int sugar;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&s](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = compare_monomials(s, a.lcm, b.lcm)) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool complete = true;

  auto add = [&](Poly p, int sug) {
    p = p.monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    sugar.push_back(sug);
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& a = basis[i].leading_monomial();
      const Monomial& b = basis[k].leading_monomial();
      const Monomial l = a.lcm(b);
      const int ps = std::max(sugar[i] + weighted_degree(s, a.cofactor_in(l)),
                              sugar[k] + weighted_degree(s, b.cofactor_in(l)));
      pairs.push_back({ps, l, i, k});
      pending.insert({i, k});
    }
  };

  // Seed with the inter-reduced input so duplicates and zeros vanish early.
  std::vector<Poly> seed;
  for (const auto& g : generators)
    if (!g.is_zero()) seed.push_back(g);
  std::stable_sort(seed.begin(), seed.end(), [&s](const Poly& a, const Poly& b) {
    return compare_monomials(s, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& g : seed) {
    Poly r = detail::reduce_full(g, basis);
    const int d = r.degree();
    if (!r.is_zero()) add(std::move(r), d);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    const Monomial& a = basis[pr.i].leading_monomial();
    const Monomial& b = basis[pr.j].leading_monomial();
    if (a.coprime(b)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t x, std::size_t y) { return std::pair(std::min(x, y), std::max(x, y)); };
      chain = !pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k));
    }
    if (chain) continue;
    if (opts.degree_cap >= 0 && weighted_degree(s, pr.lcm) > opts.degree_cap) {
      complete = false;
      continue;
    }
    Poly r = detail::reduce_full(detail::s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) add(std::move(r), pr.sugar);
  }

  // Minimalize, then tail-reduce each survivor against the others.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&s](const Poly& a, const Poly& b) {
    return compare_monomials(s, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  GroebnerBasis gb{sig, {}, complete, opts.degree_cap};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Poly& g = minimal[i];
    Poly tail = g - Poly::monomial(sig, g.leading_monomial(), g.leading_coefficient());
    Poly r = detail::reduce_full(tail, others) + Poly::monomial(sig, g.leading_monomial(), g.leading_coefficient());
    gb.gens.push_back(r.monic());
  }
  return gb;
}

inline GroebnerBasis groebner(const std::vector<Poly>& generators, GroebnerOptions opts = {}) {
  if (generators.empty()) throw DomainError("groebner needs a signature when the generator list is empty");
  return groebner(generators, generators.front().signature(), opts);
}

inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (p.signature() && !same_signature(p.signature(), gb.sig)) throw SignatureMismatch();
  Poly q = p;
  if (!q.signature()) q = Poly(gb.sig);
  return detail::reduce_full(std::move(q), gb.gens);
}

inline bool contains(const GroebnerBasis& gb, const Poly& p) { return normal_form(p, gb).is_zero(); }

namespace detail {

inline bool is_standard(const std::vector<Monomial>& lms, const Monomial& m) {
  for (const auto& l : lms)
    if (l.divides(m)) return false;
  return true;
}

/// Calls f on every monomial of weighted degree exactly d.
inline void for_each_monomial(const Signature& s, int d, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == s.size()) {
      if (left == 0) f(m);
      return;
    }
    const int w = s.weight(i);
    for (int e = 0; e * w <= left; ++e) {
      m[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e * w);
    }
    m[i] = 0;
  };
  rec(0, d);
}

}  // namespace detail

/// Standard monomials of weighted degree d modulo the leading-term ideal.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int d) {
  const auto lms = gb.leading_monomials();
  std::vector<Monomial> out;
  detail::for_each_monomial(*gb.sig, d, [&](const Monomial& m) {
    if (detail::is_standard(lms, m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return compare_monomials(*gb.sig, a, b) > 0; });
  return out;
}

/// Entry d is the dimension of the degree-d piece of the quotient.
inline std::vector<std::int64_t> hilbert_function(const GroebnerBasis& gb, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  const auto lms = gb.leading_monomials();
  std::vector<std::int64_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::int64_t count = 0;
    detail::for_each_monomial(*gb.sig, d, [&](const Monomial& m) {
      if (detail::is_standard(lms, m)) ++count;
    });
    out.push_back(count);
  }
  return out;
}

/// Univariate polynomial with rational coefficients, index = power of t.
using UniPoly = std::vector<Rational>;

namespace detail {

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline UniPoly series_numerator(const Signature& s, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {Rational(1)};
  const Monomial last = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(last.cofactor_in(last.lcm(g)));
  UniPoly a = series_numerator(s, gens);
  UniPoly b = series_numerator(s, colon);
  const int shift = weighted_degree(s, last);
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t) / prod_i (1 - t^{w_i}).
inline UniPoly hilbert_series_numerator(const GroebnerBasis& gb) {
  return detail::series_numerator(*gb.sig, gb.leading_monomials());
}

struct HilbertPolynomial {
  /// Coefficients in t, lowest first; empty for the zero polynomial.
  UniPoly coefficients;
  /// Dimension of the projective scheme (-1 when empty).
  int dimension = -1;
  /// Degree of the projective scheme.
  Integer degree = 0;

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) v = v * t + coefficients[i];
    return v;
  }
};

/// Hilbert polynomial of a standard-graded quotient (every weight 1).
inline HilbertPolynomial hilbert_polynomial(const GroebnerBasis& gb) {
  const Signature& s = *gb.sig;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.weight(i) != 1) throw DomainError("hilbert_polynomial needs a standard grading");
  if (!gb.complete) throw DomainError("hilbert_polynomial needs a complete basis");
  UniPoly q = hilbert_series_numerator(gb);
  int delta = static_cast<int>(s.size());
  // Divide out (1 - t) while it still divides.
  while (delta > 0 && !q.empty()) {
    Rational at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    UniPoly quo(q.size() - 1);
    Rational carry = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      quo[i] = carry;
    }
    q = std::move(quo);
    detail::trim(q);
    --delta;
  }
  HilbertPolynomial hp;
  if (q.empty() || delta == 0) return hp;
  hp.dimension = delta - 1;
  Rational deg = 0;
  for (const auto& c : q) deg += c;
  hp.degree = deg.get_num();
  // HP(t) = sum_k q_k * binom(t - k + delta - 1, delta - 1).
  UniPoly total(delta, Rational(0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    UniPoly term{Rational(1)};
    for (int j = 1; j < delta; ++j) {
      // multiply by (t - k + j) / j
      UniPoly next(term.size() + 1, Rational(0));
      const Rational c = Rational(j) - Rational(static_cast<long>(k));
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += term[i] * c / j;
        next[i + 1] += term[i] / j;
      }
      term = std::move(next);
    }
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += q[k] * term[i];
  }
  detail::trim(total);
  hp.coefficients = std::move(total);
  return hp;
}

}  // namespace chowkit
