#include "commring/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace commring {

Table::Table(std::size_t order, std::vector<Element> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != order_ * order_) {
    throw Error(ErrorCode::InvalidArgument, "table cell count does not match order squared");
  }
}

namespace {

AxiomViolation violation(Axiom axiom, std::int64_t a = -1, std::int64_t b = -1,
                         std::int64_t c = -1) {
  return AxiomViolation{axiom, {a, b, c}};
}

}  // namespace

std::optional<AxiomViolation> find_axiom_violation(const Table& add, const Table& mul) {
  const std::size_t n = add.order();
  if (n == 0 || mul.order() != n) return violation(Axiom::TableShape);
  const auto N = static_cast<Element>(n);

  for (Element a = 0; a < N; ++a)
    for (Element b = 0; b < N; ++b) {
      if (add(a, b) >= N) return violation(Axiom::AdditiveClosure, a, b);
      if (mul(a, b) >= N) return violation(Axiom::MultiplicativeClosure, a, b);
    }

  for (Element a = 0; a < N; ++a)
    if (add(0, a) != a || add(a, 0) != a) return violation(Axiom::AdditiveIdentity, a);

  for (Element a = 0; a < N; ++a)
    for (Element b = a + 1; b < N; ++b)
      if (add(a, b) != add(b, a)) return violation(Axiom::AdditiveCommutativity, a, b);

  for (Element a = 0; a < N; ++a)
    for (Element b = 0; b < N; ++b) {
      const Element ab = add(a, b);
      for (Element c = 0; c < N; ++c)
        if (add(ab, c) != add(a, add(b, c))) return violation(Axiom::AdditiveAssociativity, a, b, c);
    }

  for (Element a = 0; a < N; ++a) {
    bool found = false;
    for (Element b = 0; b < N && !found; ++b) found = add(a, b) == 0;
    if (!found) return violation(Axiom::AdditiveInverse, a);
  }

  for (Element a = 0; a < N; ++a)
    for (Element b = 0; b < N; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < N; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          return violation(Axiom::MultiplicativeAssociativity, a, b, c);
    }

  for (Element a = 0; a < N; ++a)
    for (Element b = 0; b < N; ++b)
      for (Element c = 0; c < N; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return violation(Axiom::LeftDistributivity, a, b, c);
        if (mul(add(b, c), a) != add(mul(b, a), mul(c, a)))
          return violation(Axiom::RightDistributivity, a, b, c);
      }

  for (Element a = 0; a < N; ++a)
    if (mul(0, a) != 0 || mul(a, 0) != 0) return violation(Axiom::ZeroAnnihilation, a);

  return std::nullopt;
}

FiniteRing FiniteRing::validate(Table add, Table mul, std::string label) {
  if (auto v = find_axiom_violation(add, mul)) throw AxiomError(*v);
  return FiniteRing(std::move(add), std::move(mul), std::move(label));
}

FiniteRing FiniteRing::with_label(std::string label) const {
  return FiniteRing(add_, mul_, std::move(label));
}

std::optional<Element> FiniteRing::identity() const {
  const auto n = static_cast<Element>(order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

Element FiniteRing::neg(Element a) const {
  const auto n = static_cast<Element>(order());
  for (Element b = 0; b < n; ++b)
    if (add(a, b) == 0) return b;
  throw Error(ErrorCode::InvalidArgument, "element has no additive inverse");
}

bool FiniteRing::is_commutative() const {
  const auto n = static_cast<Element>(order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (!commute(a, b)) return false;
  return true;
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  const __int128 lhs_cross = static_cast<__int128>(num_) * rhs.den_;
  const __int128 rhs_cross = static_cast<__int128>(rhs.num_) * den_;
  if (lhs_cross < rhs_cross) return std::strong_ordering::less;
  if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint64_t AbelianGroupType::order() const {
  std::uint64_t o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

std::string AbelianGroupType::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out << ",";
    out << invariant_factors[i];
  }
  out << "]";
  return out.str();
}

std::optional<std::uint64_t> AbelianGroupType::as_pxp() const {
  if (invariant_factors.size() == 2 && invariant_factors[0] == invariant_factors[1] &&
      is_prime(invariant_factors[0]))
    return invariant_factors[0];
  return std::nullopt;
}

ElementSet center(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  ElementSet z;
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element b = 0; b < n && central; ++b) central = ring.commute(a, b);
    if (central) z.members.push_back(a);
  }
  return z;
}

ElementSet centralizer(const FiniteRing& ring, Element r) {
  const auto n = static_cast<Element>(ring.order());
  if (r >= n) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  ElementSet c;
  for (Element s = 0; s < n; ++s)
    if (ring.commute(r, s)) c.members.push_back(s);
  return c;
}

bool is_subring(const FiniteRing& ring, const ElementSet& set) {
  if (!set.contains(ring.zero())) return false;
  for (Element a : set.members) {
    if (!set.contains(ring.neg(a))) return false;
    for (Element b : set.members)
      if (!set.contains(ring.add(a, b)) || !set.contains(ring.mul(a, b))) return false;
  }
  return true;
}

bool is_commutative_subset(const FiniteRing& ring, const ElementSet& set) {
  for (std::size_t i = 0; i < set.members.size(); ++i)
    for (std::size_t j = i + 1; j < set.members.size(); ++j)
      if (!ring.commute(set.members[i], set.members[j])) return false;
  return true;
}

CentralizerFamily centralizer_family(const FiniteRing& ring) {
  CentralizerFamily family;
  std::map<std::vector<Element>, std::size_t> seen;
  const auto n = static_cast<Element>(ring.order());
  for (Element r = 0; r < n; ++r) {
    ElementSet c = centralizer(ring, r);
    if (seen.emplace(c.members, family.centralizers.size()).second) {
      family.centralizers.push_back(std::move(c));
      family.generators.push_back(r);
    }
  }
  return family;
}

std::vector<ElementSet> proper_centralizers(const FiniteRing& ring) {
  auto family = centralizer_family(ring);
  std::vector<ElementSet> out;
  for (auto& c : family.centralizers)
    if (c.size() != ring.order()) out.push_back(std::move(c));
  return out;
}

CcResult is_cc_ring(const FiniteRing& ring) {
  if (ring.is_commutative())
    throw Error(ErrorCode::CommutativeRing, "CC predicate requires a non-commutative ring");
  const auto family = centralizer_family(ring);
  for (std::size_t i = 0; i < family.count(); ++i) {
    const auto& c = family.centralizers[i];
    if (c.size() == ring.order()) continue;
    for (std::size_t a = 0; a < c.members.size(); ++a)
      for (std::size_t b = a + 1; b < c.members.size(); ++b)
        if (!ring.commute(c.members[a], c.members[b]))
          return CcResult{false, CcWitness{family.generators[i], c.members[a], c.members[b]}};
  }
  return CcResult{true, std::nullopt};
}

Rational commuting_probability(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  std::int64_t pairs = 0;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (ring.commute(a, b)) ++pairs;
  return Rational(pairs, static_cast<std::int64_t>(n) * n);
}

AbelianGroupType additive_quotient_structure(const FiniteRing& ring, const ElementSet& subgroup) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<char> in_sub(n, 0);
  for (Element e : subgroup.members) in_sub[e] = 1;

  std::vector<std::uint64_t> factors;  // collected largest first
  for (;;) {
    Element best = 0;
    std::uint64_t best_order = 1;
    for (Element r = 0; r < n; ++r) {
      std::uint64_t k = 1;
      for (Element x = r; !in_sub[x]; x = ring.add(x, r)) ++k;
      if (k > best_order) {
        best_order = k;
        best = r;
      }
    }
    if (best_order == 1) break;
    factors.push_back(best_order);

    // subgroup <- subgroup + <best>
    std::vector<Element> old;
    for (Element e = 0; e < n; ++e)
      if (in_sub[e]) old.push_back(e);
    Element multiple = best;
    for (std::uint64_t j = 1; j < best_order; ++j, multiple = ring.add(multiple, best))
      for (Element h : old) in_sub[ring.add(h, multiple)] = 1;
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianGroupType{std::move(factors)};
}

AbelianGroupType additive_quotient_structure(const FiniteRing& ring) {
  return additive_quotient_structure(ring, center(ring));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  return smallest_prime_divisor(n) == n;
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "smallest prime divisor needs n >= 2");
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const std::uint64_t p = smallest_prime_divisor(n);
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& a) {
  const std::size_t nr = r.order();
  const std::size_t na = a.order();
  const std::size_t n = nr * na;
  Table add(n), mul(n);
  for (Element x = 0; x < nr; ++x)
    for (Element u = 0; u < na; ++u)
      for (Element y = 0; y < nr; ++y)
        for (Element v = 0; v < na; ++v) {
          const auto i = static_cast<Element>(x * na + u);
          const auto j = static_cast<Element>(y * na + v);
          add.at(i, j) = static_cast<Element>(r.add(x, y) * na + a.add(u, v));
          mul.at(i, j) = static_cast<Element>(r.mul(x, y) * na + a.mul(u, v));
        }
  std::string label = r.label() + "_x_" + a.label();
  return FiniteRing::validate(std::move(add), std::move(mul), std::move(label));
}

}  // namespace commring
