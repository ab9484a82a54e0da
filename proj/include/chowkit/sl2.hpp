#pragma once

// SL2 representations as multisets of irreducibles S_i L (dimension i + 1),
// with Clebsch-Gordan products and Euler-characteristic solving.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

class SL2Rep {
 public:
  SL2Rep() = default;
  explicit SL2Rep(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw DomainError("SL2 irreducibles are indexed by nonnegative integers");
    std::sort(parts_.begin(), parts_.end());
  }
  /// S_i L.
  static SL2Rep irreducible(int i) { return SL2Rep({i}); }
  /// k copies of the trivial representation.
  static SL2Rep trivial(int k) { return SL2Rep(std::vector<int>(k, 0)); }

  const std::vector<int>& parts() const noexcept { return parts_; }

  long dim() const {
    long d = 0;
    for (int p : parts_) d += p + 1;
    return d;
  }

  friend SL2Rep operator+(const SL2Rep& a, const SL2Rep& b) {
    std::vector<int> p = a.parts_;
    p.insert(p.end(), b.parts_.begin(), b.parts_.end());
    return SL2Rep(std::move(p));
  }

  /// Clebsch-Gordan: S_a (x) S_b = sum of S_k for k = |a-b|, |a-b|+2, ..., a+b.
  friend SL2Rep tensor(const SL2Rep& a, const SL2Rep& b) {
    std::vector<int> p;
    for (int x : a.parts_)
      for (int y : b.parts_)
        for (int k = std::abs(x - y); k <= x + y; k += 2) p.push_back(k);
    return SL2Rep(std::move(p));
  }

  bool operator==(const SL2Rep&) const = default;

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
      if (!out.empty()) out += "+";
      out += "S_" + std::to_string(*it) + "L";
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

/// A term of an exact sequence; nullopt is the unknown.
using SequenceTerm = std::optional<SL2Rep>;

/// Dimension of the single unknown term forced by exactness (alternating sum
/// zero). The sequence lists the terms between the outer zeros.
inline long euler_solve(const std::vector<SequenceTerm>& seq, bool exact = true) {
  if (!exact) throw DomainError("euler_solve needs an exact sequence");
  long total = 0;
  int unknowns = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i]) {
      ++unknowns;
      where = i;
      continue;
    }
    total += (i % 2 ? -1 : 1) * seq[i]->dim();
  }
  if (unknowns != 1) throw DomainError("euler_solve needs exactly one unknown, got " + std::to_string(unknowns));
  const long value = where % 2 ? total : -total;
  if (value < 0) throw DomainError("exactness forces a negative dimension (" + std::to_string(value) + ")");
  return value;
}

/// h^0 of O(d_1, ..., d_k) on (P^1)^k, or on a divisor of class (1, ..., 1)
/// when on_divisor is set.
inline long monomial_section_count(const std::vector<int>& multidegree, bool on_divisor = false) {
  long all = 1, sub = 1;
  for (int d : multidegree) {
    if (d < 0) throw DomainError("multidegree entries must be nonnegative");
    all *= d + 1;
    sub *= d;
  }
  return on_divisor ? all - sub : all;
}

}  // namespace chowkit
