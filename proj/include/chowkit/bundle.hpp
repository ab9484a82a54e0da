#pragma once

// Formal bundle classes: Chern and Segre classes, Chern characters, Todd
// classes, Riemann-Roch.

#include <string>
#include <utility>
#include <vector>

#include "chowkit/chow_ring.hpp"

namespace chowkit {

namespace detail {

inline void require_same_ring(const ChowRingPtr& a, const ChowRingPtr& b) {
  if (a != b) throw DomainError("bundle classes belong to different rings");
}

/// Product of two graded series truncated at degree d, reduced in the ring.
inline std::vector<Poly> series_mul(const ChowRing& R, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  const int d = R.dimension();
  std::vector<Poly> out(d + 1, R.constant(0));
  for (int i = 0; i <= d && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= d && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  for (auto& p : out) p = R.reduce(p);
  return out;
}

/// Inverse of a graded series with constant term 1.
inline std::vector<Poly> series_inverse(const ChowRing& R, const std::vector<Poly>& a) {
  const int d = R.dimension();
  std::vector<Poly> inv(d + 1, R.constant(0));
  inv[0] = R.constant(1);
  for (int k = 1; k <= d; ++k) {
    Poly acc = R.constant(0);
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) acc -= a[i] * inv[k - i];
    inv[k] = R.reduce(acc);
  }
  return inv;
}

/// binom(n, k) for any integer n and k >= 0.
inline Rational general_binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  return (k % 2 ? -1 : 1) * binomial(k - n - 1, k);
}

}  // namespace detail

/// (rank; c_1, ..., c_d) in a ring of dimension d. c()[0] is 1.
class BundleClass {
 public:
  BundleClass(ChowRingPtr ring, int rank, std::vector<Poly> chern) : ring_(std::move(ring)), rank_(rank) {
    const int d = ring_->dimension();
    c_.assign(d + 1, ring_->constant(0));
    c_[0] = ring_->constant(1);
    for (std::size_t k = 1; k <= chern.size(); ++k) {
      Poly p = ring_->reduce(chern[k - 1]);
      if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<int>(k)))
        throw DomainError("c_" + std::to_string(k) + " must be homogeneous of degree " + std::to_string(k));
      if (static_cast<int>(k) <= d) c_[k] = std::move(p);
    }
  }

  static BundleClass trivial(ChowRingPtr ring, int rank) { return {std::move(ring), rank, {}}; }
  static BundleClass line(ChowRingPtr ring, const Poly& c1) { return {std::move(ring), 1, {c1}}; }
  static BundleClass from_total(ChowRingPtr ring, int rank, const std::vector<Poly>& total) {
    return {std::move(ring), rank, std::vector<Poly>(total.begin() + 1, total.end())};
  }

  const ChowRingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  /// Total Chern class as graded pieces 0..d.
  const std::vector<Poly>& total() const noexcept { return c_; }
  Poly c(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ring_->constant(0);
    return c_[k];
  }
  /// True when every c_k with k > rank vanishes.
  bool is_truncation_exact() const {
    for (int k = std::max(rank_ + 1, 1); k < static_cast<int>(c_.size()); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    std::string out = "(" + std::to_string(rank_) + "; ";
    for (std::size_t k = 1; k < c_.size(); ++k) out += (k > 1 ? ", " : "") + c_[k].to_string();
    return out + ")";
  }

 private:
  ChowRingPtr ring_;
  int rank_;
  std::vector<Poly> c_;
};

inline BundleClass dual(const BundleClass& E) {
  std::vector<Poly> c = E.total();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return BundleClass::from_total(E.ring(), E.rank(), c);
}

/// E tensor O(t): c_k = sum_i binom(r - i, k - i) c_i t^(k - i).
inline BundleClass twist(const BundleClass& E, const Poly& t) {
  const ChowRing& R = *E.ring();
  const int d = R.dimension();
  const int r = E.rank();
  std::vector<Poly> out(d + 1, R.constant(0));
  for (int k = 0; k <= d; ++k) {
    Poly acc = R.constant(0);
    for (int i = 0; i <= k; ++i) {
      const Rational b = detail::general_binomial(r - i, k - i);
      if (b != 0 && !E.c(i).is_zero()) acc += b * (E.c(i) * t.pow(k - i));
    }
    out[k] = R.reduce(acc);
  }
  return BundleClass::from_total(E.ring(), r, out);
}

inline BundleClass whitney_sum(const BundleClass& E, const BundleClass& F) {
  detail::require_same_ring(E.ring(), F.ring());
  return BundleClass::from_total(E.ring(), E.rank() + F.rank(), detail::series_mul(*E.ring(), E.total(), F.total()));
}

/// The class G with E = F + G, i.e. c(G) = c(E) / c(F).
inline BundleClass whitney_quotient(const BundleClass& E, const BundleClass& F) {
  detail::require_same_ring(E.ring(), F.ring());
  const ChowRing& R = *E.ring();
  return BundleClass::from_total(E.ring(), E.rank() - F.rank(),
                                 detail::series_mul(R, E.total(), detail::series_inverse(R, F.total())));
}

/// Total Segre class s(E) = c(E)^(-1), graded pieces 0..d.
inline std::vector<Poly> segre_total(const BundleClass& E) { return detail::series_inverse(*E.ring(), E.total()); }

inline Poly segre(const BundleClass& E, int k) {
  if (k < 0 || k > E.ring()->dimension()) throw DomainError("segre index out of range");
  return segre_total(E)[k];
}

/// Chern character as graded pieces ch_0..ch_d.
class Character {
 public:
  Character(ChowRingPtr ring, std::vector<Poly> parts) : ring_(std::move(ring)), parts_(std::move(parts)) {
    parts_.resize(ring_->dimension() + 1, ring_->constant(0));
    for (auto& p : parts_) p = ring_->reduce(p);
  }
  static Character exp(ChowRingPtr ring, const Poly& t) {
    const int d = ring->dimension();
    std::vector<Poly> parts;
    for (int k = 0; k <= d; ++k) parts.push_back(t.pow(k) * (1 / factorial(k)));
    return {std::move(ring), parts};
  }

  const ChowRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Poly>& parts() const noexcept { return parts_; }
  const Poly& operator[](int k) const { return parts_.at(k); }
  Rational rank() const { return parts_[0].constant_term(); }
  Poly sum() const {
    Poly s = ring_->constant(0);
    for (const auto& p : parts_) s += p;
    return s;
  }

  friend Character operator+(const Character& a, const Character& b) {
    detail::require_same_ring(a.ring_, b.ring_);
    std::vector<Poly> out = a.parts_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.parts_[k];
    return {a.ring_, out};
  }
  friend Character operator-(const Character& a, const Character& b) { return a + Rational(-1) * b; }
  friend Character operator*(const Rational& c, const Character& a) {
    std::vector<Poly> out = a.parts_;
    for (auto& p : out) p *= c;
    return {a.ring_, out};
  }
  friend Character operator*(const Character& a, const Character& b) {
    detail::require_same_ring(a.ring_, b.ring_);
    return {a.ring_, detail::series_mul(*a.ring_, a.parts_, b.parts_)};
  }
  /// Adams operation psi^k: scales the degree-j part by k^j.
  Character adams(int k) const {
    std::vector<Poly> out = parts_;
    Rational f = 1;
    for (auto& p : out) {
      p *= f;
      f *= k;
    }
    return {ring_, out};
  }
  friend bool operator==(const Character& a, const Character& b) {
    return a.ring_ == b.ring_ && a.parts_ == b.parts_;
  }

 private:
  ChowRingPtr ring_;
  std::vector<Poly> parts_;
};

/// Newton's identities: power sums p_k from elementary classes c_k.
inline Character chern_character(const BundleClass& E, int up_to = -1) {
  const ChowRing& R = *E.ring();
  const int d = up_to < 0 ? R.dimension() : std::min(up_to, R.dimension());
  std::vector<Poly> p(d + 1, R.constant(0));
  std::vector<Poly> ch(d + 1, R.constant(0));
  ch[0] = R.constant(E.rank());
  for (int k = 1; k <= d; ++k) {
    Poly acc = Rational(k % 2 ? k : -k) * E.c(k);
    for (int i = 1; i < k; ++i) acc += Rational(i % 2 ? 1 : -1) * (E.c(i) * p[k - i]);
    p[k] = R.reduce(acc);
    ch[k] = p[k] * (1 / factorial(k));
  }
  return {E.ring(), ch};
}

/// Inverse of chern_character; the rank is ch_0, which must be an integer.
inline BundleClass chern_from_character(const Character& ch) {
  const ChowRing& R = *ch.ring();
  const int d = R.dimension();
  const Rational r = ch.rank();
  if (!ch[0].is_constant() || !is_integer(r)) throw DomainError("ch_0 must be an integer rank");
  std::vector<Poly> p(d + 1, R.constant(0));
  for (int k = 1; k <= d; ++k) p[k] = ch[k] * factorial(k);
  std::vector<Poly> e(d + 1, R.constant(0));
  e[0] = R.constant(1);
  for (int k = 1; k <= d; ++k) {
    Poly acc = R.constant(0);
    for (int i = 1; i <= k; ++i) acc += Rational(i % 2 ? 1 : -1) * (e[k - i] * p[i]);
    e[k] = R.reduce(acc * Rational(1, k));
  }
  return BundleClass::from_total(ch.ring(), static_cast<int>(r.get_num().get_si()), e);
}

inline BundleClass tensor(const BundleClass& E, const BundleClass& F) {
  return chern_from_character(chern_character(E) * chern_character(F));
}

inline BundleClass wedge2(const BundleClass& E) {
  const Character ch = chern_character(E);
  return chern_from_character(Rational(1, 2) * (ch * ch - ch.adams(2)));
}

inline BundleClass sym2(const BundleClass& E) {
  const Character ch = chern_character(E);
  return chern_from_character(Rational(1, 2) * (ch * ch + ch.adams(2)));
}

inline BundleClass wedge2_rank3(const BundleClass& E) {
  if (E.rank() != 3) throw DomainError("wedge2_rank3 needs a rank 3 class");
  return wedge2(E);
}

namespace detail {

/// Coefficients a_k of log(x / (1 - e^{-x})), k = 0..n.
inline std::vector<Rational> log_todd_coefficients(int n) {
  // f(x) = (1 - e^{-x}) / x = sum (-1)^j x^j / (j+1)!
  std::vector<Rational> f(n + 1);
  for (int j = 0; j <= n; ++j) f[j] = Rational(j % 2 ? -1 : 1) / factorial(j + 1);
  // log(1/f) = -log f; (log f)' = f'/f.
  std::vector<Rational> inv(n + 1);
  inv[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc -= f[i] * inv[k - i];
    inv[k] = acc;
  }
  std::vector<Rational> df(n + 1), q(n + 1), a(n + 1);
  for (int j = 0; j < n; ++j) df[j] = f[j + 1] * (j + 1);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i) q[k] += df[i] * inv[k - i];
  for (int k = 1; k <= n; ++k) a[k] = -q[k - 1] / k;
  return a;
}

}  // namespace detail

inline BundleClass tangent_bundle(const ChowRingPtr& ring) {
  if (!ring->tangent()) throw DomainError("ring '" + ring->label() + "' has no tangent data");
  return BundleClass::from_total(ring, ring->tangent()->rank, ring->tangent()->c);
}

/// Todd class of E as graded pieces 0..d.
inline std::vector<Poly> todd_of(const BundleClass& E) {
  const ChowRing& R = *E.ring();
  const int d = R.dimension();
  const auto a = detail::log_todd_coefficients(d);
  const Character ch = chern_character(E);
  std::vector<Poly> L(d + 1, R.constant(0));
  for (int k = 1; k <= d; ++k) L[k] = ch[k] * (a[k] * factorial(k));
  // exp of a series with zero constant term: T' = L' T.
  std::vector<Poly> T(d + 1, R.constant(0));
  T[0] = R.constant(1);
  for (int k = 1; k <= d; ++k) {
    Poly acc = R.constant(0);
    for (int i = 1; i <= k; ++i) acc += Rational(i) * (L[i] * T[k - i]);
    T[k] = R.reduce(acc * Rational(1, k));
  }
  return T;
}

inline std::vector<Poly> todd(const ChowRingPtr& ring) { return todd_of(tangent_bundle(ring)); }

inline Rational hrr_chi(const Character& ch) {
  const auto td = todd(ch.ring());
  return ch.ring()->integrate_top_part(Character(ch.ring(), detail::series_mul(*ch.ring(), ch.parts(), td)).sum());
}

inline Rational hrr_chi(const BundleClass& E) { return hrr_chi(chern_character(E)); }

/// Chern character of the pushforward of a degree-F line bundle on a smooth
/// curve of the given genus, class `curve` and point class `point`, into an
/// ambient with tangent data (GRR).
inline Character grr_push_curve(const ChowRingPtr& ambient, int genus, const Poly& curve, const Poly& point,
                                const Rational& f_degree) {
  const int n = ambient->dimension();
  const Poly C = ambient->reduce(curve);
  const Poly pt = ambient->reduce(point);
  if (!pt.is_homogeneous() || pt.degree() != n || ambient->integrate(pt) != 1)
    throw DomainError("point class must integrate to 1");
  std::vector<Poly> pushed(n + 1, ambient->constant(0));
  if (!C.is_zero() && C.is_homogeneous() && C.degree() == n) {
    // Degenerate case: a zero-dimensional support pushes forward its class.
    pushed[n] = C;
  } else {
    if (C.is_zero() || !C.is_homogeneous() || C.degree() != n - 1)
      throw DomainError("curve class must have codimension " + std::to_string(n - 1));
    // i_*(ch(L) td(C)) = [C] + (F + 1 - g) [pt]
    pushed[n - 1] = C;
    pushed[n] = (f_degree + 1 - genus) * pt;
  }
  const auto td_inv = detail::series_inverse(*ambient, todd(ambient));
  return {ambient, detail::series_mul(*ambient, pushed, td_inv)};
}

}  // namespace chowkit
