#pragma once

// Presented Chow rings with an integration functional, and their elements.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/groebner.hpp"
#include "chowkit/parse.hpp"
#include "chowkit/poly.hpp"

namespace chowkit {

class ChowRing;
class ChowClass;
using ChowRingPtr = std::shared_ptr<const ChowRing>;

/// Total Chern class data stored with a ring (tangent bundle). c[0] = 1.
struct ChernData {
  int rank = 0;
  std::vector<Poly> c;
};

/// Recorded by projective_bundle so the relative canonical class can be
/// recovered later.
struct ProjectiveBundleOrigin {
  ChowRingPtr base;
  int rank = 0;
  Poly c1;
  std::string zeta;
};

class ChowRing : public std::enable_shared_from_this<ChowRing> {
 public:
  struct Spec {
    std::string label;
    SignaturePtr sig;
    std::vector<Poly> relations;
    int dimension = 0;
    /// Top class of the ambient presentation, of degree dimension + deg(cofactor).
    Poly top;
    Rational top_value = 1;
    /// Integration is x -> integral of x * cofactor. Empty means 1.
    std::optional<Poly> cofactor;
    std::optional<ChernData> tangent;
    std::optional<ProjectiveBundleOrigin> origin;
  };

  static ChowRingPtr create(Spec spec) {
    auto ring = std::shared_ptr<ChowRing>(new ChowRing(std::move(spec)));
    ring->init();
    return ring;
  }

  const std::string& label() const noexcept { return spec_.label; }
  const SignaturePtr& signature() const noexcept { return spec_.sig; }
  const std::vector<Poly>& relations() const noexcept { return spec_.relations; }
  const GroebnerBasis& basis() const noexcept { return gb_; }
  int dimension() const noexcept { return spec_.dimension; }
  const Poly& top_class() const noexcept { return spec_.top; }
  const Rational& top_value() const noexcept { return spec_.top_value; }
  bool has_cofactor() const noexcept { return spec_.cofactor.has_value(); }
  Poly cofactor() const { return spec_.cofactor ? *spec_.cofactor : Poly::constant(spec_.sig, 1); }
  /// Degree of the top class of the presentation.
  int ambient_dimension() const noexcept { return spec_.top.degree(); }
  const std::optional<ChernData>& tangent() const noexcept { return spec_.tangent; }
  const std::optional<ProjectiveBundleOrigin>& origin() const noexcept { return spec_.origin; }
  const Spec& spec() const noexcept { return spec_; }

  Poly reduce(const Poly& p) const { return normal_form(p, gb_); }
  Poly parse(std::string_view text) const { return parse_poly(text, spec_.sig); }
  Poly var(std::string_view name) const { return Poly::variable(spec_.sig, name); }
  Poly constant(const Rational& c) const { return Poly::constant(spec_.sig, c); }

  ChowClass cls(const Poly& p) const;
  ChowClass cls(std::string_view text) const;

  /// Integral of a homogeneous class; zero off the top degree.
  Rational integrate(const Poly& x) const {
    if (!x.is_homogeneous()) throw DomainError("integrate needs a homogeneous class");
    return integrate_top_part(x);
  }

  /// Integral of the degree-dimension component of an arbitrary class.
  Rational integrate_top_part(const Poly& x) const {
    Poly top = x.homogeneous_component(spec_.dimension);
    if (top.is_zero()) return 0;
    Poly y = reduce(top * cofactor());
    return spec_.top_value * y.coefficient(top_monomial_) / top_coefficient_;
  }

  /// Same ring with tangent data attached; the basis is reused.
  ChowRingPtr with_tangent(ChernData tangent) const {
    auto ring = std::shared_ptr<ChowRing>(new ChowRing(*this));
    ring->spec_.tangent = std::move(tangent);
    return ring;
  }

  std::vector<std::int64_t> hilbert_function() const { return chowkit::hilbert_function(gb_, ambient_dimension()); }

 private:
  explicit ChowRing(Spec spec) : spec_(std::move(spec)) {}
  ChowRing(const ChowRing& other)
      : std::enable_shared_from_this<ChowRing>(),
        spec_(other.spec_),
        gb_(other.gb_),
        top_monomial_(other.top_monomial_),
        top_coefficient_(other.top_coefficient_) {}

  void init() {
    const SignaturePtr& sig = spec_.sig;
    if (!sig) throw DomainError("ring '" + spec_.label + "' has no signature");
    for (auto& r : spec_.relations)
      if (r.signature() && !same_signature(r.signature(), sig)) throw SignatureMismatch();
    if (spec_.top.is_zero() || !spec_.top.is_homogeneous())
      throw DomainError("ring '" + spec_.label + "' needs a nonzero homogeneous top class");
    if (spec_.top_value == 0) throw DomainError("ring '" + spec_.label + "' needs a nonzero normalization");
    const int cof_deg = spec_.cofactor ? spec_.cofactor->degree() : 0;
    if (spec_.cofactor && !spec_.cofactor->is_homogeneous())
      throw DomainError("ring '" + spec_.label + "' cofactor must be homogeneous");
    if (spec_.top.degree() != spec_.dimension + cof_deg)
      throw DomainError("ring '" + spec_.label + "' top class has the wrong degree");
    gb_ = groebner(spec_.relations, sig);
    const int top_deg = ambient_dimension();
    auto std_top = standard_monomials(gb_, top_deg);
    if (std_top.size() != 1)
      throw DomainError("ring '" + spec_.label + "' top graded piece has dimension " + std::to_string(std_top.size()));
    int max_w = 1;
    for (const auto& v : sig->variables()) max_w = std::max(max_w, v.weight);
    for (int d = top_deg + 1; d <= top_deg + max_w; ++d)
      if (!standard_monomials(gb_, d).empty())
        throw DomainError("ring '" + spec_.label + "' has classes above its top degree");
    top_monomial_ = std_top.front();
    Poly t = reduce(spec_.top);
    top_coefficient_ = t.coefficient(top_monomial_);
    if (top_coefficient_ == 0) throw DomainError("ring '" + spec_.label + "' top class reduces to zero");
  }

  Spec spec_;
  GroebnerBasis gb_;
  Monomial top_monomial_;
  Rational top_coefficient_;
};

/// Element of a ChowRing, always stored in normal form.
class ChowClass {
 public:
  ChowClass(ChowRingPtr ring, const Poly& p) : ring_(std::move(ring)), rep_(ring_->reduce(p)) {}

  const ChowRingPtr& ring() const noexcept { return ring_; }
  const Poly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_homogeneous() const { return rep_.is_homogeneous(); }
  int degree() const { return rep_.degree(); }
  Rational integrate() const { return ring_->integrate(rep_); }
  std::string to_string() const { return rep_.to_string(); }

  ChowClass operator-() const { return {ring_, -rep_}; }
  friend ChowClass operator+(const ChowClass& a, const ChowClass& b) { return {same(a, b), a.rep_ + b.rep_}; }
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b) { return {same(a, b), a.rep_ - b.rep_}; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) { return {same(a, b), a.rep_ * b.rep_}; }
  friend ChowClass operator*(const Rational& c, const ChowClass& a) { return {a.ring_, c * a.rep_}; }
  ChowClass pow(unsigned n) const {
    ChowClass r(ring_, ring_->constant(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ring_ == b.ring_ && a.rep_ == b.rep_;
  }

 private:
  static const ChowRingPtr& same(const ChowClass& a, const ChowClass& b) {
    if (a.ring_ != b.ring_) throw DomainError("classes belong to different rings");
    return a.ring_;
  }
  ChowRingPtr ring_;
  Poly rep_;
};

inline ChowClass ChowRing::cls(const Poly& p) const { return ChowClass(shared_from_this(), p); }
inline ChowClass ChowRing::cls(std::string_view text) const { return ChowClass(shared_from_this(), parse(text)); }

}  // namespace chowkit
