#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Schubert calculus on G(2,6) via Pieri's rule. Classes are maps from
/// partitions (a >= b) inside the 2x4 box to integer coefficients.
struct SchubertG26 {
  using Partition = std::array<int, 2>;
  using Class = std::map<Partition, mpz_class>;

  static Class unit() { return {{{0, 0}, 1}}; }

  /// sigma_1 * sigma_{a,b}: add one box.
  static Class times_sigma1(const Class& x) {
    Class out;
    for (const auto& [p, c] : x) {
      if (p[0] < 4) out[{p[0] + 1, p[1]}] += c;
      if (p[1] < p[0]) out[{p[0], p[1] + 1}] += c;
    }
    return prune(out);
  }

  /// sigma_{1,1} * sigma_{a,b}: add a vertical strip of two boxes.
  static Class times_sigma11(const Class& x) {
    Class out;
    for (const auto& [p, c] : x)
      if (p[0] < 4) out[{p[0] + 1, p[1] + 1}] += c;
    return prune(out);
  }

  static Class prune(Class x) {
    for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
    return x;
  }

  /// Integral of h^a c^b where h = sigma_1 and c = sigma_{1,1}.
  static mpz_class integral(int a, int b) {
    if (a + 2 * b != 8) return 0;
    Class x = unit();
    for (int i = 0; i < a; ++i) x = times_sigma1(x);
    for (int i = 0; i < b; ++i) x = times_sigma11(x);
    auto it = x.find({4, 4});
    return it == x.end() ? mpz_class(0) : it->second;
  }
};

/// Betti numbers of the Lagrangian Grassmannian LG(3,6): strict partitions
/// with parts in {1,2,3}, counted by size.
inline std::vector<long> lg36_betti() {
  std::vector<long> out(7, 0);
  for (int mask = 0; mask < 8; ++mask) {
    int size = 0;
    for (int part = 1; part <= 3; ++part)
      if (mask & (1 << (part - 1))) size += part;
    ++out[size];
  }
  return out;
}

/// Betti numbers of G(2,6): partitions in the 2x4 box, counted by size.
inline std::vector<long> g26_betti() {
  std::vector<long> out(9, 0);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b) ++out[a + b];
  return out;
}

/// Leibniz determinant over all permutations.
template <typename T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  T total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = inversions % 2 ? T(-1) : T(1);
    for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
