#pragma once

// Sparse multivariate polynomials over the rationals, graded by positive
// integer variable weights and ordered by weighted graded-reverse-lexicographic
// order.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

inline constexpr std::size_t kMaxVariables = 32;

struct Variable {
  std::string name;
  int weight = 1;
  bool operator==(const Variable&) const = default;
};

inline bool is_identifier(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.empty() || !alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_' || c == '\''; });
}

/// Ordered list of named, weighted variables. The order fixes the monomial
/// order: ties in weighted degree are broken reverse-lexicographically from the
/// last variable.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Variable> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVariables)
      throw DomainError("too many variables (" + std::to_string(vars_.size()) + ")");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!is_identifier(vars_[i].name))
        throw DomainError("invalid variable name '" + vars_[i].name + "'");
      if (vars_[i].weight < 1)
        throw DomainError("variable '" + vars_[i].name + "' needs a positive weight");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[j].name == vars_[i].name)
          throw DomainError("duplicate variable '" + vars_[i].name + "'");
    }
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  int weight(std::size_t i) const { return vars_[i].weight; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Variable> vars_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

inline SignaturePtr make_signature(std::vector<Variable> vars) {
  return std::make_shared<const Signature>(std::move(vars));
}

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector. Entries past the owning signature's size stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> e{};

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }
  bool operator==(const Monomial&) const = default;

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  /// Quotient o / *this; requires divides(o).
  Monomial cofactor_in(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e[i] != 0 && o.e[i] != 0) return false;
    return true;
  }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

inline int weighted_degree(const Signature& sig, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < sig.size(); ++i) d += sig.weight(i) * m[i];
  return d;
}

/// Three-way weighted grevlex comparison: positive when a > b.
inline int compare_monomials(const Signature& sig, const Monomial& a, const Monomial& b) {
  const int da = weighted_degree(sig, a);
  const int db = weighted_degree(sig, b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = sig.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

inline std::string monomial_to_string(const Signature& sig, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += sig[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  explicit Poly(SignaturePtr sig) : sig_(std::move(sig)) {}

  static Poly constant(SignaturePtr sig, const Rational& c) {
    Poly p(std::move(sig));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Poly monomial(SignaturePtr sig, const Monomial& m, const Rational& c = 1) {
    Poly p(std::move(sig));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Poly variable(SignaturePtr sig, std::size_t index) {
    Monomial m;
    m[index] = 1;
    return monomial(std::move(sig), m);
  }
  static Poly variable(SignaturePtr sig, std::string_view name) {
    const std::size_t i = sig->index_of(name);
    return variable(std::move(sig), i);
  }

  const SignaturePtr& signature() const noexcept { return sig_; }
  const Signature& sig() const { return *sig_; }

  /// Terms in ascending monomial order; the leading term is last.
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const { return terms_.back(); }
  const Monomial& leading_monomial() const { return terms_.back().mono; }
  const Rational& leading_coefficient() const { return terms_.back().coef; }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return 0;
  }
  Rational constant_term() const { return coefficient(Monomial{}); }

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : weighted_degree(*sig_, terms_.back().mono); }
  int min_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
      const int td = weighted_degree(*sig_, t.mono);
      if (d < 0 || td < d) d = td;
    }
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || min_degree() == degree(); }

  Poly homogeneous_component(int d) const {
    Poly r(sig_);
    for (const auto& t : terms_)
      if (weighted_degree(*sig_, t.mono) == d) r.terms_.push_back(t);
    return r;
  }
  /// Drops every term of weighted degree above max_degree.
  Poly truncated(int max_degree) const {
    Poly r(sig_);
    for (const auto& t : terms_)
      if (weighted_degree(*sig_, t.mono) <= max_degree) r.terms_.push_back(t);
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  Poly& operator+=(const Poly& o) { return add_scaled(o, Rational(1), Monomial{}); }
  Poly& operator-=(const Poly& o) { return add_scaled(o, Rational(-1), Monomial{}); }
  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coef *= c;
    }
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.sig_ ? a.sig_ : b.sig_);
    // Accumulate row by row; each row is already sorted because monomial
    // orders are multiplicative.
    for (const auto& t : b.terms_) r.add_scaled(a, t.coef, t.mono);
    return r;
  }

  Poly pow(unsigned n) const {
    Poly result = constant(sig_, 1);
    Poly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  /// this += c * m * o, merging in one pass.
  Poly& add_scaled(const Poly& o, const Rational& c, const Monomial& m) {
    check_compatible(o);
    if (!sig_) sig_ = o.sig_;
    if (c == 0 || o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    const Signature& s = *sig_;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial shifted = o.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : compare_monomials(s, shifted, terms_[i].mono);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({shifted, c * o.terms_[j++].coef});
      } else {
        Rational sum = terms_[i].coef + c * o.terms_[j].coef;
        if (sum != 0) out.push_back({shifted, std::move(sum)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  /// Makes the leading coefficient 1 (no-op on zero).
  Poly monic() const {
    if (terms_.empty()) return *this;
    Rational inv = 1 / leading_coefficient();
    return *this * inv;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() < sig_->size()) throw DomainError("evaluation point has too few coordinates");
    Rational total = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (std::size_t i = 0; i < sig_->size(); ++i)
        for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
      total += v;
    }
    return total;
  }

  /// Canonical text: descending monomial order, explicit '*'.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const bool negative = it->coef < 0;
      Rational mag = abs(it->coef);
      if (it == terms_.rbegin()) {
        if (negative) out += '-';
      } else {
        out += negative ? '-' : '+';
      }
      if (it->mono.is_one()) {
        out += chowkit::to_string(mag);
      } else if (mag == 1) {
        out += monomial_to_string(*sig_, it->mono);
      } else {
        out += chowkit::to_string(mag) + "*" + monomial_to_string(*sig_, it->mono);
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
  }

  void check_compatible(const Poly& o) const {
    if (sig_ && o.sig_ && !same_signature(sig_, o.sig_)) throw SignatureMismatch();
  }

 private:
  SignaturePtr sig_;
  std::vector<Term> terms_;
};

/// Re-expresses p in another signature that contains all of p's variables
/// by name (used when a ring is extended by new variables).
inline Poly embed(const Poly& p, const SignaturePtr& target) {
  const Signature& src = p.sig();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src[i].name);
  Poly out(target);
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) m[map[i]] = t.mono[i];
    out += Poly::monomial(target, m, t.coef);
  }
  return out;
}

/// Ring homomorphism: replaces variable i of p's signature by images[i].
inline Poly substitute(const Poly& p, const std::vector<Poly>& images, const SignaturePtr& target) {
  if (images.size() != p.sig().size()) throw DomainError("substitution needs one image per variable");
  Poly out(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i]) term *= images[i].pow(t.mono[i]);
    out += term;
  }
  return out;
}

}  // namespace chowkit
