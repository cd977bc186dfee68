#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commring/error.hpp"

namespace commring {

using Element = std::uint32_t;

/// Row-major n x n operation table over element indices 0..n-1.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t order) : order_(order), cells_(order * order, 0) {}
  Table(std::size_t order, std::vector<Element> cells);

  std::size_t order() const noexcept { return order_; }
  Element operator()(Element a, Element b) const { return cells_[a * order_ + b]; }
  Element& at(Element a, Element b) { return cells_[a * order_ + b]; }
  const std::vector<Element>& cells() const noexcept { return cells_; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> cells_;
};

/// Checks every ring axiom by exhaustive enumeration. Returns the first
/// violation found, or nullopt when the tables define a ring with identity 0.
std::optional<AxiomViolation> find_axiom_violation(const Table& add, const Table& mul);

/// A finite ring given explicitly by its Cayley tables. The additive
/// identity is always element 0. Immutable once constructed.
class FiniteRing {
 public:
  /// Validates the tables; throws AxiomError on the first violated axiom.
  static FiniteRing validate(Table add, Table mul, std::string label = {});

  std::size_t order() const noexcept { return add_.order(); }
  Element add(Element a, Element b) const { return add_(a, b); }
  Element mul(Element a, Element b) const { return mul_(a, b); }
  Element zero() const noexcept { return 0; }
  bool commute(Element a, Element b) const { return mul_(a, b) == mul_(b, a); }

  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }
  const std::string& label() const noexcept { return label_; }
  FiniteRing with_label(std::string label) const;

  /// Two-sided multiplicative identity, if the ring has one.
  std::optional<Element> identity() const;
  /// Additive inverse of a.
  Element neg(Element a) const;
  bool is_commutative() const;

 private:
  FiniteRing(Table add, Table mul, std::string label)
      : add_(std::move(add)), mul_(std::move(mul)), label_(std::move(label)) {}

  Table add_;
  Table mul_;
  std::string label_;
};

/// Sorted set of distinct element indices of one ring.
struct ElementSet {
  std::vector<Element> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element e) const;
  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;
};

ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string str() const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Finite abelian group type as invariant factors d1 | d2 | ... | dk.
struct AbelianGroupType {
  std::vector<std::uint64_t> invariant_factors;

  std::uint64_t order() const;
  std::string str() const;
  /// Returns p when the type is Z_p x Z_p for a prime p.
  std::optional<std::uint64_t> as_pxp() const;
  bool operator==(const AbelianGroupType&) const = default;
};

ElementSet center(const FiniteRing& ring);
ElementSet centralizer(const FiniteRing& ring, Element r);

/// Closure check for a subset: contains zero, closed under +, negation and *.
bool is_subring(const FiniteRing& ring, const ElementSet& set);
bool is_commutative_subset(const FiniteRing& ring, const ElementSet& set);

struct CentralizerFamily {
  /// Distinct centralizers ordered by their smallest generating element.
  std::vector<ElementSet> centralizers;
  /// Smallest r with C(r) equal to the corresponding entry.
  std::vector<Element> generators;

  std::size_t count() const noexcept { return centralizers.size(); }
};

CentralizerFamily centralizer_family(const FiniteRing& ring);

/// Distinct centralizers of non-central elements (the family minus R itself).
std::vector<ElementSet> proper_centralizers(const FiniteRing& ring);

struct CcWitness {
  Element r;
  Element s;
  Element t;
};

struct CcResult {
  bool is_cc = false;
  std::optional<CcWitness> witness;
};

/// Throws Error(CommutativeRing) on commutative input.
CcResult is_cc_ring(const FiniteRing& ring);

Rational commuting_probability(const FiniteRing& ring);

/// Invariant factors of the additive quotient (R,+)/(Z(R),+).
AbelianGroupType additive_quotient_structure(const FiniteRing& ring);

/// Invariant factors of the quotient of (R,+) by an additive subgroup.
AbelianGroupType additive_quotient_structure(const FiniteRing& ring, const ElementSet& subgroup);

std::uint64_t smallest_prime_divisor(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Returns p when n = p^k for a prime p and k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

/// Component-wise product; the pair (r, a) has index r * |A| + a.
FiniteRing direct_product(const FiniteRing& r, const FiniteRing& a);

}  // namespace commring
