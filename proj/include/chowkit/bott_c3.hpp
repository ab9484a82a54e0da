#pragma once

// Borel-Weil-Bott on the Lagrangian Grassmannian (type C3). Weights are for
// the Levi GL3; rho = (3, 2, 1).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

using Vec3 = std::array<long, 3>;

inline constexpr Vec3 kRhoC3{3, 2, 1};
inline constexpr int kDimLG36 = 6;

struct WeightC3 {
  Vec3 a{};

  WeightC3() = default;
  WeightC3(long a1, long a2, long a3) : a{a1, a2, a3} {
    if (a1 < a2 || a2 < a3) throw DomainError("weight must be weakly decreasing");
  }
  bool is_dominant() const { return a[2] >= 0; }
  Vec3 shifted() const { return {a[0] + kRhoC3[0], a[1] + kRhoC3[1], a[2] + kRhoC3[2]}; }
  /// Weight of the Serre-dual bundle E^v (x) K with K = O(-4).
  WeightC3 serre_dual() const { return {-a[2] - 4, -a[1] - 4, -a[0] - 4}; }
  std::string to_string() const {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
  }
  bool operator==(const WeightC3&) const = default;
};

inline std::string vec_string(const Vec3& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

struct AcyclicWitness {
  enum class Kind { Zero, Collision };
  Kind kind;
  /// Zero-based coordinates of w + rho: the vanishing one, or the colliding pair.
  int i = 0, j = 0;
  Vec3 shifted{};

  std::string describe() const {
    if (kind == Kind::Zero)
      return "w+rho = " + vec_string(shifted) + " has 0 in position " + std::to_string(i + 1);
    return "w+rho = " + vec_string(shifted) + " has |entry " + std::to_string(i + 1) + "| = |entry " +
           std::to_string(j + 1) + "|";
  }
};

/// Witness of singularity of w + rho, zeros reported before collisions.
inline std::optional<AcyclicWitness> acyclicity_witness(const WeightC3& w) {
  const Vec3 s = w.shifted();
  for (int i = 0; i < 3; ++i)
    if (s[i] == 0) return AcyclicWitness{AcyclicWitness::Kind::Zero, i, i, s};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::labs(s[i]) == std::labs(s[j])) return AcyclicWitness{AcyclicWitness::Kind::Collision, i, j, s};
  return std::nullopt;
}

inline bool is_acyclic(const WeightC3& w) { return acyclicity_witness(w).has_value(); }

/// Signed permutation: (g v)_i = sign[i] * v[perm[i]].
struct SignedPermutation {
  std::array<int, 3> perm;
  std::array<int, 3> sign;

  Vec3 apply(const Vec3& v) const {
    return {sign[0] * v[perm[0]], sign[1] * v[perm[1]], sign[2] * v[perm[2]]};
  }
};

/// The 48 elements of the Weyl group of C3.
inline const std::vector<SignedPermutation>& weyl_group_c3() {
  static const std::vector<SignedPermutation> group = [] {
    std::vector<SignedPermutation> g;
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask)
        g.push_back({p, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1}});
    } while (std::next_permutation(p.begin(), p.end()));
    return g;
  }();
  return group;
}

/// Positive roots e_i - e_j, e_i + e_j (i < j) and 2 e_i.
inline const std::vector<Vec3>& positive_roots_c3() {
  static const std::vector<Vec3> roots = [] {
    std::vector<Vec3> r;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Vec3 a{}, b{};
        a[i] = 1;
        a[j] = -1;
        b[i] = 1;
        b[j] = 1;
        r.push_back(a);
        r.push_back(b);
      }
    for (int i = 0; i < 3; ++i) {
      Vec3 c{};
      c[i] = 2;
      r.push_back(c);
    }
    return r;
  }();
  return roots;
}

inline bool is_positive_root(const Vec3& v) {
  for (long x : v)
    if (x != 0) return x > 0;
  return false;
}

/// Number of positive roots sent to negative roots.
inline int weyl_length(const SignedPermutation& g) {
  int n = 0;
  for (const auto& r : positive_roots_c3())
    if (!is_positive_root(g.apply(r))) ++n;
  return n;
}

inline Integer weyl_dim_c3(const WeightC3& w) {
  if (!w.is_dominant()) throw DomainError("weyl_dim_c3 needs a dominant weight, got " + w.to_string());
  const Vec3 l = w.shifted();
  Rational num = 1, den = 1;
  for (const auto& r : positive_roots_c3()) {
    num *= l[0] * r[0] + l[1] * r[1] + l[2] * r[2];
    den *= kRhoC3[0] * r[0] + kRhoC3[1] * r[1] + kRhoC3[2] * r[2];
  }
  const Rational d = num / den;
  if (!is_integer(d)) throw DomainError("Weyl dimension is not an integer");
  return d.get_num();
}

struct BottCohomology {
  int degree;
  Integer dimension;
  /// Dominant weight whose representation is the cohomology.
  WeightC3 dominant;
};

/// Unique nonvanishing cohomology for regular w + rho; nullopt when acyclic.
inline std::optional<BottCohomology> cohomology(const WeightC3& w) {
  if (is_acyclic(w)) return std::nullopt;
  const Vec3 s = w.shifted();
  for (const auto& g : weyl_group_c3()) {
    const Vec3 v = g.apply(s);
    if (v[0] > v[1] && v[1] > v[2] && v[2] > 0) {
      WeightC3 dom(v[0] - kRhoC3[0], v[1] - kRhoC3[1], v[2] - kRhoC3[2]);
      return BottCohomology{weyl_length(g), weyl_dim_c3(dom), dom};
    }
  }
  throw DomainError("no Weyl group element makes " + vec_string(s) + " dominant");
}

}  // namespace chowkit
