#pragma once

// The skew net beta in S_2 L (x) wedge^2 V, its constant-rank certificate,
// the 12x12 flattening, the quasimonad built from it, and the coordinate model
// of the congruence on the Lagrangian Grassmannian.

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowkit/groebner.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/parse.hpp"
#include "chowkit/poly.hpp"

namespace chowkit {

/// Rows separated by newlines, entries by '&', juxtaposition means product.
inline constexpr std::string_view kBetaText =
    "0&u^2&2uv&v^2&0&0\n"
    "-u^2&0&0&0&0&0\n"
    "-2uv&0&0&0&0&u^2\n"
    "-v^2&0&0&0&0&2uv\n"
    "0&0&0&0&0&v^2\n"
    "0&0&-u^2&-2uv&-v^2&0\n";

inline constexpr std::string_view kFlatteningText =
    "0&0&1&0&0&1&0&0&0&0&0&0\n"
    "0&0&0&0&1&0&0&1&0&0&0&0\n"
    "-1&0&0&0&0&0&0&0&0&0&0&0\n"
    "0&0&0&0&0&0&0&0&0&0&0&0\n"
    "0&-1&0&0&0&0&0&0&0&0&1&0\n"
    "-1&0&0&0&0&0&0&0&0&0&0&0\n"
    "0&0&0&0&0&0&0&0&0&0&0&1\n"
    "0&-1&0&0&0&0&0&0&0&0&1&0\n"
    "0&0&0&0&0&0&0&0&0&0&0&0\n"
    "0&0&0&0&0&0&0&0&0&0&0&1\n"
    "0&0&0&0&-1&0&0&-1&0&0&0&0\n"
    "0&0&0&0&0&0&-1&0&0&-1&0&0\n";

inline SignaturePtr uv_signature() {
  static const SignaturePtr sig = make_signature({{"u", 1}, {"v", 1}});
  return sig;
}

namespace detail {

/// Inserts '*' wherever two factors are juxtaposed ("2uv" -> "2*u*v").
inline std::string explicit_products(std::string_view s) {
  std::string out;
  auto is_factor_end = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == ')' || c == '\''; };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (!out.empty() && (std::isalpha(static_cast<unsigned char>(c)) || c == '(')) {
      // Do not split identifiers: only insert after a digit, ')' or the end
      // of a single-letter variable.
      const char p = out.back();
      if (is_factor_end(p)) out += '*';
    }
    out += c;
  }
  return out;
}

inline std::vector<std::vector<std::string>> split_table(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto amp = line.find('&', start);
      cells.push_back(line.substr(start, amp == std::string::npos ? std::string::npos : amp - start));
      if (amp == std::string::npos) break;
      start = amp + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace detail

/// Parses a '&' table of polynomial entries. Variables must be single letters
/// of the signature when juxtaposed.
inline Matrix<Poly> parse_poly_table(std::string_view text, const SignaturePtr& sig) {
  const auto rows = detail::split_table(text);
  if (rows.empty()) throw DomainError("empty matrix text");
  Matrix<Poly> m(rows.size(), rows[0].size(), Poly(sig));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_poly(detail::explicit_products(rows[i][j]), sig);
  }
  return m;
}

inline Matrix<Rational> parse_rational_table(std::string_view text) {
  const auto rows = detail::split_table(text);
  if (rows.empty()) throw DomainError("empty matrix text");
  Matrix<Rational> m(rows.size(), rows[0].size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

inline bool is_antisymmetric_poly(const Matrix<Poly>& m) {
  return is_antisymmetric<Poly>(m, [](const Poly& p) { return p.is_zero(); });
}

inline bool is_antisymmetric_rational(const Matrix<Rational>& m) {
  return is_antisymmetric<Rational>(m, [](const Rational& r) { return r == 0; });
}

inline Poly pfaffian_poly(const Matrix<Poly>& m, const SignaturePtr& sig) {
  if (!is_antisymmetric_poly(m)) throw DomainError("pfaffian needs an antisymmetric matrix");
  return pfaffian<Poly>(m, Poly(sig), Poly::constant(sig, 1));
}

inline Rational pfaffian_rational(const Matrix<Rational>& m) {
  if (!is_antisymmetric_rational(m)) throw DomainError("pfaffian needs an antisymmetric matrix");
  return pfaffian<Rational>(m, Rational(0), Rational(1));
}

/// 6x6 antisymmetric matrix of binary quadratic forms in (u, v).
class SkewPencil {
 public:
  explicit SkewPencil(Matrix<Poly> m) : m_(std::move(m)) {
    if (m_.rows() != 6 || m_.cols() != 6) throw DomainError("a skew pencil is 6x6");
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const Poly& e = m_(i, j);
        if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 2))
          throw DomainError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not a quadratic form");
      }
    if (!is_antisymmetric_poly(m_)) throw DomainError("pencil is not antisymmetric");
  }

  static SkewPencil beta() { return SkewPencil(parse_poly_table(kBetaText, uv_signature())); }

  const Matrix<Poly>& matrix() const noexcept { return m_; }

  Matrix<Rational> at(const Rational& u, const Rational& v) const {
    const std::vector<Rational> pt{u, v};
    return m_.map([&](const Poly& p) { return p.evaluate(pt); });
  }

 private:
  Matrix<Poly> m_;
};

// Binary forms in (u, v) and their dehomogenizations in t = u/v.

namespace detail {

inline UniPoly dehomogenize(const Poly& f) {
  UniPoly out;
  for (const auto& t : f.terms()) {
    const std::size_t i = t.mono[0];
    if (out.size() <= i) out.resize(i + 1, Rational(0));
    out[i] += t.coef;
  }
  trim(out);
  return out;
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline Rational uni_eval(const UniPoly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// A rational root by the rational root theorem, if one exists.
inline std::optional<Rational> rational_root(UniPoly p) {
  trim(p);
  if (p.size() < 2) return std::nullopt;
  if (p[0] == 0) return Rational(0);
  Integer lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  const Integer a0 = Integer(p.front() * lcm_den);
  const Integer an = Integer(p.back() * lcm_den);
  for (const auto& q : divisors(an))
    for (const auto& r : divisors(a0))
      for (int s : {1, -1}) {
        Rational t(s * r, q);
        t.canonicalize();
        if (uni_eval(p, t) == 0) return t;
      }
  return std::nullopt;
}

}  // namespace detail

/// gcd of binary forms, normalized so its leading coefficient is 1; zero when
/// every input is zero.
inline Poly gcd_binary_forms(const std::vector<Poly>& forms, const SignaturePtr& sig) {
  bool any = false;
  int v_power = 0;
  UniPoly g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw DomainError("gcd_binary_forms needs homogeneous forms");
    UniPoly d = detail::dehomogenize(f);
    const int k = f.degree() - static_cast<int>(d.size() - 1);
    if (!any) {
      g = d;
      v_power = k;
      any = true;
    } else {
      g = detail::uni_gcd(g, d);
      v_power = std::min(v_power, k);
    }
  }
  if (!any) return Poly(sig);
  const int deg = static_cast<int>(g.size()) - 1;
  Poly out(sig);
  for (int i = 0; i <= deg; ++i) {
    Monomial m;
    m[0] = static_cast<std::uint16_t>(i);
    m[1] = static_cast<std::uint16_t>(deg - i + v_power);
    out += Poly::monomial(sig, m, g[i]);
  }
  return out.monic();
}

struct ConstantRankCertificate {
  bool pfaffian_vanishes = false;
  Poly pfaffian;
  /// The fifteen 4x4 principal sub-Pfaffians, kept index sets in lex order.
  std::vector<Poly> sub_pfaffians;
  Poly gcd;
  bool certified = false;
  /// "pfaffian" or "gcd" when the certificate fails.
  std::string failed_condition;
  /// Point [u:v] where the rank is not 4, when one is rational.
  std::optional<std::pair<Rational, Rational>> witness;
};

inline ConstantRankCertificate constant_rank_certificate(const SkewPencil& P) {
  const auto sig = uv_signature();
  const auto& M = P.matrix();
  ConstantRankCertificate cert;
  cert.pfaffian = pfaffian_poly(M, sig);
  cert.pfaffian_vanishes = cert.pfaffian.is_zero();
  // Deleting (4,5), (3,5), (3,4), ..., (0,1) lists the kept sets in lex order.
  for (std::size_t i = 6; i-- > 0;)
    for (std::size_t j = 6; j-- > i + 1;) {
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < 6; ++k)
        if (k != i && k != j) keep.push_back(k);
      cert.sub_pfaffians.push_back(pfaffian_poly(M.select(keep, keep), sig));
    }
  cert.gcd = gcd_binary_forms(cert.sub_pfaffians, sig);
  if (!cert.pfaffian_vanishes) {
    cert.failed_condition = "pfaffian";
    // Rank 6 wherever the Pfaffian does not vanish.
    for (long t = 0;; ++t) {
      if (cert.pfaffian.evaluate(std::vector<Rational>{Rational(t), Rational(1)}) != 0) {
        cert.witness = std::pair(Rational(t), Rational(1));
        break;
      }
    }
    return cert;
  }
  if (cert.gcd.is_zero()) {
    cert.failed_condition = "gcd";
    cert.witness = std::pair(Rational(1), Rational(0));
    return cert;
  }
  if (cert.gcd.degree() > 0) {
    cert.failed_condition = "gcd";
    if (cert.gcd.evaluate(std::vector<Rational>{Rational(1), Rational(0)}) == 0) {
      cert.witness = std::pair(Rational(1), Rational(0));
    } else if (auto r = detail::rational_root(detail::dehomogenize(cert.gcd))) {
      cert.witness = std::pair(*r, Rational(1));
    }
    return cert;
  }
  cert.certified = true;
  return cert;
}

/// The built-in 12x12 matrix as printed.
inline Matrix<Rational> printed_flattening() { return parse_rational_table(kFlatteningText); }

/// beta as an element of wedge^2 (L (x) V): row/column index l * 6 + a with
/// l in {u, v}; entry (l a, m b) is the (l, m) entry of the symmetric 2x2
/// matrix of the quadratic form beta_ab.
inline Matrix<Rational> derived_flattening(const SkewPencil& P) {
  Matrix<Rational> D(12, 12, Rational(0));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const Poly& e = P.matrix()(a, b);
      Monomial uu, uv, vv;
      uu[0] = 2;
      uv[0] = 1;
      uv[1] = 1;
      vv[1] = 2;
      const Rational q[2][2] = {{e.coefficient(uu), e.coefficient(uv) / 2}, {e.coefficient(uv) / 2, e.coefficient(vv)}};
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t m = 0; m < 2; ++m) D(l * 6 + a, m * 6 + b) = q[l][m];
    }
  return D;
}

inline SignaturePtr z_signature() {
  static const SignaturePtr sig =
      make_signature({{"z0", 1}, {"z1", 1}, {"z2", 1}, {"z3", 1}, {"z4", 1}, {"z5", 1}});
  return sig;
}

/// W = image of the flattening with the basis of pivot columns, and the maps
/// of the quasimonad L(-1) -> W -> L(1) in that basis.
struct Quasimonad {
  Matrix<Rational> D;
  std::vector<std::size_t> pivots;
  /// Induced alternating form on W: D restricted to the pivot indices.
  Matrix<Rational> form;
  /// 6x2 left map and 2x6 right map, linear in z0..z5.
  Matrix<Poly> left, right;

  static Quasimonad build(const SkewPencil& P) {
    Quasimonad q;
    q.D = derived_flattening(P);
    rank(q.D, &q.pivots);
    const std::size_t r = q.pivots.size();
    q.form = q.D.select(q.pivots, q.pivots);
    if (chowkit::rank(q.form) != r) throw DomainError("induced form on W is degenerate");
    // D = Wb * C with Wb the pivot columns; antisymmetry gives D[p, :] = form * C.
    Matrix<Rational> C(r, 12, Rational(0));
    for (std::size_t j = 0; j < 12; ++j) {
      std::vector<Rational> rhs(r);
      for (std::size_t k = 0; k < r; ++k) rhs[k] = q.D(q.pivots[k], j);
      const auto x = solve(q.form, rhs);
      for (std::size_t k = 0; k < r; ++k) C(k, j) = x[k];
    }
    const auto sig = z_signature();
    std::vector<Poly> z;
    for (std::size_t a = 0; a < 6; ++a) z.push_back(Poly::variable(sig, a));
    q.left = Matrix<Poly>(r, 2, Poly(sig));
    q.right = Matrix<Poly>(2, r, Poly(sig));
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t a = 0; a < 6; ++a) {
          q.left(k, l) += C(k, l * 6 + a) * z[a];
          q.right(l, k) += q.D(l * 6 + a, q.pivots[k]) * z[a];
        }
    return q;
  }

  Matrix<Poly> composition() const { return multiply(right, left, Poly(z_signature())); }

  static Matrix<Rational> evaluate(const Matrix<Poly>& m, const std::vector<Rational>& z) {
    return m.map([&](const Poly& p) { return p.evaluate(z); });
  }

  std::vector<Poly> right_minors() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < right.cols(); ++i)
      for (std::size_t j = i + 1; j < right.cols(); ++j)
        out.push_back(right(0, i) * right(1, j) - right(0, j) * right(1, i));
    return out;
  }
};

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, long bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Rational> p(n);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : p) {
      x = d(rng);
      nonzero = nonzero || x != 0;
    }
  }
  return p;
}

struct QuasimonadReport {
  std::uint64_t seed = 0;
  std::size_t printed_rank = 0;
  std::size_t derived_rank = 0;
  bool derived_antisymmetric = false;
  std::vector<std::size_t> pivots;
  std::size_t form_rank = 0;
  bool composition_zero = false;
  std::size_t left_rank_e0 = 0;
  std::vector<std::pair<std::vector<Rational>, std::size_t>> left_samples;
  std::size_t right_generic_rank = 0;
  int degree_cap = 0;
  /// "pass", "fail" or "inconclusive".
  std::string cubic_status;
  HilbertPolynomial cubic_hp;
  std::size_t cubic_basis_size = 0;

  bool left_ok() const {
    if (left_rank_e0 != 2) return false;
    for (const auto& s : left_samples)
      if (s.second != 2) return false;
    return true;
  }
};

inline QuasimonadReport quasimonad_checks(std::uint64_t seed, int degree_cap = 6, std::size_t samples = 8,
                                          bool run_cubic = true) {
  QuasimonadReport rep;
  rep.seed = seed;
  rep.degree_cap = degree_cap;
  const SkewPencil beta = SkewPencil::beta();
  rep.printed_rank = rank(printed_flattening());
  const Quasimonad q = Quasimonad::build(beta);
  rep.derived_antisymmetric = is_antisymmetric_rational(q.D);
  rep.derived_rank = q.pivots.size();
  rep.pivots = q.pivots;
  rep.form_rank = rank(q.form);
  rep.composition_zero = true;
  const auto comp = q.composition();
  for (std::size_t i = 0; i < comp.rows(); ++i)
    for (std::size_t j = 0; j < comp.cols(); ++j) rep.composition_zero = rep.composition_zero && comp(i, j).is_zero();
  std::vector<Rational> e0(6, Rational(0));
  e0[0] = 1;
  rep.left_rank_e0 = rank(Quasimonad::evaluate(q.left, e0));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto z = random_point(rng, 6);
    rep.left_samples.emplace_back(z, rank(Quasimonad::evaluate(q.left, z)));
  }
  rep.right_generic_rank = rank(Quasimonad::evaluate(q.right, random_point(rng, 6)));
  if (!run_cubic) {
    rep.cubic_status = "skipped";
    return rep;
  }
  const auto gb = groebner(q.right_minors(), z_signature(), {.degree_cap = degree_cap});
  rep.cubic_basis_size = gb.gens.size();
  if (!gb.complete) {
    rep.cubic_status = "inconclusive";
    return rep;
  }
  rep.cubic_hp = hilbert_polynomial(gb);
  const bool ok = rep.cubic_hp.coefficients.size() == 2 && rep.cubic_hp.coefficients[0] == 1 &&
                  rep.cubic_hp.coefficients[1] == 3;
  rep.cubic_status = ok ? "pass" : "fail";
  return rep;
}

// Coordinate model of the Lagrangian Grassmannian: a point of wedge^3 W is
// (a, X, Y, b) with X: A -> B, Y: B -> A.

/// Adjugate of a 3x3 matrix over any commutative ring.
template <typename T>
Matrix<T> adjugate3(const Matrix<T>& m) {
  Matrix<T> out(3, 3, T(m(0, 0) - m(0, 0)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out(i, j) = T(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0));
    }
  return out;
}

struct PluckerPoint {
  Rational a, b;
  Matrix<Rational> X, Y;

  /// The 3-plane spanned by the graph of S: A -> B.
  static PluckerPoint graph(const Matrix<Rational>& S) {
    PluckerPoint p;
    p.a = 1;
    p.X = S;
    p.Y = adjugate3(S);
    p.b = determinant(S);
    return p;
  }

  /// adj X = a Y, adj Y = b X, Y X = a b I.
  bool on_grassmannian() const {
    const auto adjX = adjugate3(X), adjY = adjugate3(Y);
    const auto YX = multiply(Y, X, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (adjX(i, j) != a * Y(i, j) || adjY(i, j) != b * X(i, j)) return false;
        if (YX(i, j) != (i == j ? a * b : Rational(0))) return false;
      }
    return true;
  }

  bool is_isotropic() const { return X == X.transpose() && Y == Y.transpose(); }

  /// Values of (a, b, x0..x5, y0..y5) for a symmetric point.
  std::vector<Rational> coordinates() const {
    return {a,       b,       X(0, 0), X(0, 1), X(0, 2), X(1, 2), X(2, 2), X(1, 1),
            Y(0, 0), Y(0, 1), Y(0, 2), Y(1, 2), Y(2, 2), Y(1, 1)};
  }
};

class CoordinateModel {
 public:
  CoordinateModel() {
    std::vector<Variable> vars{{"a", 1}, {"b", 1}};
    for (int i = 0; i < 6; ++i) vars.push_back({"x" + std::to_string(i), 1});
    for (int i = 0; i < 6; ++i) vars.push_back({"y" + std::to_string(i), 1});
    vars.push_back({"lambda", 1});
    vars.push_back({"mu", 1});
    sig_ = make_signature(vars);
  }

  const SignaturePtr& signature() const noexcept { return sig_; }
  Poly var(std::string_view n) const { return Poly::variable(sig_, n); }

  Matrix<Poly> X() const { return symmetric("x"); }
  Matrix<Poly> Y() const { return symmetric("y"); }

  /// adj X - a Y, adj Y - b X, Y X - a b I (upper triangles of the symmetric ones).
  std::vector<Poly> gw_equations() const {
    const auto x = X(), y = Y();
    const auto ax = adjugate3(x), ay = adjugate3(y);
    const auto yx = multiply(y, x, Poly(sig_));
    const Poly a = var("a"), b = var("b");
    std::vector<Poly> eqs;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) eqs.push_back(ax(i, j) - a * y(i, j));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) eqs.push_back(ay(i, j) - b * x(i, j));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) eqs.push_back(yx(i, j) - (i == j ? a * b : Poly(sig_)));
    return eqs;
  }

  Poly tangent_hyperplane() const { return var("y5") - var("y2"); }

  /// a, X (l^2, l m, m^2)^T and [[-m, l, 0], [0, -m, l]] Y.
  std::vector<Poly> zh_equations() const {
    const Poly l = var("lambda"), m = var("mu");
    const std::vector<Poly> conic{l * l, l * m, m * m};
    const auto x = X(), y = Y();
    std::vector<Poly> eqs{var("a")};
    for (std::size_t i = 0; i < 3; ++i) {
      Poly e(sig_);
      for (std::size_t j = 0; j < 3; ++j) e += x(i, j) * conic[j];
      eqs.push_back(e);
    }
    for (std::size_t j = 0; j < 3; ++j) {
      eqs.push_back(-(m * y(0, j)) + l * y(1, j));
      eqs.push_back(-(m * y(1, j)) + l * y(2, j));
    }
    return eqs;
  }

  /// The six bilinear sections, named s1..s6.
  std::vector<Poly> sections() const {
    const Poly l = var("lambda"), m = var("mu"), a = var("a");
    auto y = [&](int k) { return var("y" + std::to_string(k)); };
    return {-(a * l), -(a * m), l * y(1) - m * y(0), l * y(2) - m * y(1), l * y(3) - m * y(2), l * y(4) - m * y(3)};
  }

  Matrix<Poly> presentation_matrix() const {
    const Poly a = var("a"), z(sig_);
    auto y = [&](int k) { return var("y" + std::to_string(k)); };
    return Matrix<Poly>{{a, z, y(0), y(1), y(2), y(3)}, {z, a, -y(1), -y(2), -y(3), -y(4)}};
  }

  /// Evaluates at a point given as (a, b, x0..x5, y0..y5); lambda = mu = 0.
  std::vector<Rational> full_point(const std::vector<Rational>& abxy) const {
    std::vector<Rational> p = abxy;
    p.resize(sig_->size(), Rational(0));
    return p;
  }

 private:
  Matrix<Poly> symmetric(const std::string& prefix) const {
    auto v = [&](int k) { return var(prefix + std::to_string(k)); };
    return Matrix<Poly>{{v(0), v(1), v(2)}, {v(1), v(5), v(3)}, {v(2), v(3), v(4)}};
  }

  SignaturePtr sig_;
};

struct CongruenceReport {
  std::uint64_t seed = 0;
  int degree_cap = 0;
  bool basis_complete = false;
  /// 1, lambda and y0 lie outside the ideal, so membership is not vacuous.
  bool ideal_proper = false;
  /// Membership of s1..s6 in the incidence ideal.
  std::vector<bool> section_in_ideal;
  /// (mu, lambda) M_E = -(s2, s1, s3, s4, s5, s6).
  bool compatibility_identity = false;
  /// Points of B: (a, b, x0..x5, y0..y5).
  std::vector<Rational> point_off, point_on;
  std::vector<Rational> second_hyperplane;
  bool points_on_b = false;
  std::size_t rank_off = 0, rank_on = 0;

  bool passed() const {
    for (bool b : section_in_ideal)
      if (!b) return false;
    return section_in_ideal.size() == 6 && ideal_proper && compatibility_identity && points_on_b && rank_off == 2 && rank_on == 1;
  }
};

inline CongruenceReport congruence_model_check(std::uint64_t seed, int degree_cap = 3) {
  CongruenceReport rep;
  rep.seed = seed;
  rep.degree_cap = degree_cap;
  const CoordinateModel cm;
  const auto sig = cm.signature();

  std::vector<Poly> ideal = cm.gw_equations();
  ideal.push_back(cm.tangent_hyperplane());
  for (auto& e : cm.zh_equations()) ideal.push_back(e);
  // Sections have degree 2; a basis truncated above the cap decides membership
  // exactly in degrees up to the cap.
  const auto gb = groebner(ideal, sig, {.degree_cap = degree_cap});
  rep.basis_complete = gb.complete;
  const auto secs = cm.sections();
  for (const auto& s : secs) rep.section_in_ideal.push_back(contains(gb, s));
  rep.ideal_proper = !contains(gb, Poly::constant(sig, 1)) && !contains(gb, cm.var("lambda")) &&
                     !contains(gb, cm.var("y0"));

  const auto ME = cm.presentation_matrix();
  const Poly l = cm.var("lambda"), m = cm.var("mu");
  const std::vector<Poly> expect{-secs[1], -secs[0], -secs[2], -secs[3], -secs[4], -secs[5]};
  rep.compatibility_identity = true;
  for (std::size_t j = 0; j < 6; ++j)
    rep.compatibility_identity = rep.compatibility_identity && (m * ME(0, j) + l * ME(1, j) == expect[j]);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, 9);
  // a = 1: graph of a symmetric S on the tangent hyperplane, which forces
  // s01 * s12 = s00 s22 - s02^2 + s02 s11.
  Matrix<Rational> S(3, 3, Rational(0));
  S(0, 0) = d(rng);
  S(0, 1) = S(1, 0) = d(rng);
  S(0, 2) = S(2, 0) = d(rng);
  S(1, 1) = d(rng);
  S(2, 2) = d(rng);
  S(1, 2) = S(2, 1) = (S(0, 0) * S(2, 2) - S(0, 2) * S(0, 2) + S(0, 2) * S(1, 1)) / S(0, 1);
  const PluckerPoint off = PluckerPoint::graph(S);
  // a = 0: the plane through the conic point (l^2, l m, m^2), Y = v v^T.
  const Rational lam = d(rng), mu = d(rng);
  const std::vector<Rational> vv{lam * lam, lam * mu, mu * mu};
  PluckerPoint on;
  on.a = 0;
  on.b = 0;
  on.X = Matrix<Rational>(3, 3, Rational(0));
  on.Y = Matrix<Rational>(3, 3, Rational(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) on.Y(i, j) = vv[i] * vv[j];
  rep.point_off = off.coordinates();
  rep.point_on = on.coordinates();

  // Second hyperplane: random, then adjusted to pass through both points.
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Rational> h(14);
  for (auto& x : h) x = c(rng);
  auto dot = [&](const std::vector<Rational>& p) {
    Rational s = 0;
    for (std::size_t i = 0; i < 14; ++i) s += h[i] * p[i];
    return s;
  };
  h[8] -= dot(rep.point_on) / rep.point_on[8];  // y0 coefficient; y0 = lambda^4 != 0
  h[0] -= dot(rep.point_off);                    // a coefficient; a = 1 here, 0 on the other
  rep.second_hyperplane = h;

  auto on_b = [&](const PluckerPoint& p, const std::vector<Rational>& coords) {
    const auto full = cm.full_point(coords);
    for (const auto& e : cm.gw_equations())
      if (e.evaluate(full) != 0) return false;
    return p.on_grassmannian() && p.is_isotropic() && cm.tangent_hyperplane().evaluate(full) == 0 && dot(coords) == 0;
  };
  rep.points_on_b = on_b(off, rep.point_off) && on_b(on, rep.point_on);
  rep.rank_off = rank(ME.map([&](const Poly& p) { return p.evaluate(cm.full_point(rep.point_off)); }));
  rep.rank_on = rank(ME.map([&](const Poly& p) { return p.evaluate(cm.full_point(rep.point_on)); }));
  return rep;
}

}  // namespace chowkit
