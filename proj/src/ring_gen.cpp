#include "commring/ring_gen.hpp"

#include <functional>

namespace commring {

namespace {

using BinaryOp = std::function<Element(Element, Element)>;

FiniteRing build(std::size_t n, const BinaryOp& add, const BinaryOp& mul, std::string label) {
  Table add_table(n), mul_table(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      add_table.at(a, b) = add(a, b);
      mul_table.at(a, b) = mul(a, b);
    }
  return FiniteRing::validate(std::move(add_table), std::move(mul_table), std::move(label));
}

void require_modulus(std::uint32_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
}

}  // namespace

FiniteRing cyclic_ring(std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  return build(
      n, [n](Element a, Element b) { return (a + b) % n; },
      [n](Element a, Element b) { return static_cast<Element>((std::uint64_t{a} * b) % n); },
      "cyclic_" + std::to_string(n));
}

FiniteRing zero_ring(std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  return build(
      n, [n](Element a, Element b) { return (a + b) % n; }, [](Element, Element) { return 0u; },
      "zero_" + std::to_string(n));
}

FiniteRing row_matrix_ring(std::uint32_t m) {
  require_modulus(m);
  // (a,b)(c,d) = (ac, ad)
  return build(
      std::size_t{m} * m,
      [m](Element x, Element y) {
        return ((x / m + y / m) % m) * m + (x % m + y % m) % m;
      },
      [m](Element x, Element y) {
        const Element a = x / m, c = y / m, d = y % m;
        return ((a * c) % m) * m + (a * d) % m;
      },
      "row_matrix_" + std::to_string(m));
}

FiniteRing upper_triangular_ring(std::uint32_t m) {
  require_modulus(m);
  auto split = [m](Element x) { return std::array<Element, 3>{x / (m * m), (x / m) % m, x % m}; };
  auto join = [m](Element a, Element b, Element c) { return ((a % m) * m + b % m) * m + c % m; };
  return build(
      std::size_t{m} * m * m,
      [=](Element x, Element y) {
        auto [a, b, c] = split(x);
        auto [d, e, f] = split(y);
        return join(a + d, b + e, c + f);
      },
      [=](Element x, Element y) {
        // [[a,b],[0,c]] [[d,e],[0,f]] = [[ad, ae + bf],[0, cf]]
        auto [a, b, c] = split(x);
        auto [d, e, f] = split(y);
        return join(a * d, a * e + b * f, c * f);
      },
      "upper_triangular_" + std::to_string(m));
}

FiniteRing full_matrix_ring(std::uint32_t p) {
  if (!is_prime(p) || p > 3)
    throw Error(ErrorCode::InvalidArgument, "full matrix ring needs a prime p <= 3");
  auto split = [p](Element x) {
    return std::array<Element, 4>{x / (p * p * p), (x / (p * p)) % p, (x / p) % p, x % p};
  };
  auto join = [p](Element a, Element b, Element c, Element d) {
    return (((a % p) * p + b % p) * p + c % p) * p + d % p;
  };
  return build(
      std::size_t{p} * p * p * p,
      [=](Element x, Element y) {
        auto [a, b, c, d] = split(x);
        auto [e, f, g, h] = split(y);
        return join(a + e, b + f, c + g, d + h);
      },
      [=](Element x, Element y) {
        auto [a, b, c, d] = split(x);
        auto [e, f, g, h] = split(y);
        return join(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h);
      },
      "full_matrix_" + std::to_string(p));
}

FiniteRing family_ring(const std::string& family, std::uint32_t parameter) {
  if (family == "cyclic") return cyclic_ring(parameter);
  if (family == "zero") return zero_ring(parameter);
  if (family == "row_matrix") return row_matrix_ring(parameter);
  if (family == "upper_triangular") return upper_triangular_ring(parameter);
  if (family == "full_matrix") return full_matrix_ring(parameter);
  throw Error(ErrorCode::InvalidArgument, "unknown ring family '" + family + "'");
}

std::optional<std::array<std::uint32_t, 3>> basis_associativity_witness(
    const StructureConstants& sc) {
  const std::uint32_t k = sc.rank;
  const std::uint32_t p = sc.p;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      for (std::uint32_t l = 0; l < k; ++l)
        for (std::uint32_t s = 0; s < k; ++s) {
          // coefficient of e_s in (e_i e_j) e_l and in e_i (e_j e_l)
          std::uint32_t left = 0, right = 0;
          for (std::uint32_t t = 0; t < k; ++t) {
            left += sc.at(i, j, t) * sc.at(t, l, s);
            right += sc.at(j, l, t) * sc.at(i, t, s);
          }
          if (left % p != right % p) return std::array<std::uint32_t, 3>{i, j, l};
        }
  return std::nullopt;
}

FiniteRing ring_from_structure_constants(const StructureConstants& sc) {
  const std::uint32_t p = sc.p, k = sc.rank;
  if (p < 2 || k < 1 || sc.c.size() != std::size_t{k} * k * k)
    throw Error(ErrorCode::InvalidArgument, "malformed structure constants");
  for (auto v : sc.c)
    if (v >= p) throw Error(ErrorCode::InvalidArgument, "structure constant out of range");
  if (auto w = basis_associativity_witness(sc))
    throw AxiomError(AxiomViolation{Axiom::MultiplicativeAssociativity, {(*w)[0], (*w)[1], (*w)[2]}});

  std::size_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) n *= p;

  auto digits = [p, k](Element x) {
    std::vector<std::uint32_t> v(k);
    for (std::uint32_t i = 0; i < k; ++i, x /= p) v[i] = x % p;
    return v;
  };
  auto index = [p, k](const std::vector<std::uint32_t>& v) {
    Element x = 0;
    for (std::uint32_t i = k; i-- > 0;) x = x * p + v[i] % p;
    return x;
  };

  std::string label = "sc_p" + std::to_string(p) + "_k" + std::to_string(k);
  return build(
      n,
      [&](Element x, Element y) {
        auto u = digits(x), v = digits(y);
        for (std::uint32_t i = 0; i < k; ++i) u[i] += v[i];
        return index(u);
      },
      [&](Element x, Element y) {
        auto u = digits(x), v = digits(y);
        std::vector<std::uint32_t> w(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
          if (!u[i]) continue;
          for (std::uint32_t j = 0; j < k; ++j) {
            if (!v[j]) continue;
            for (std::uint32_t t = 0; t < k; ++t) w[t] = (w[t] + u[i] * v[j] * sc.at(i, j, t)) % p;
          }
        }
        return index(w);
      },
      std::move(label));
}

RingInvariants compute_invariants(const FiniteRing& ring) {
  RingInvariants inv;
  inv.center_size = center(ring).size();
  inv.centralizer_count = centralizer_family(ring).count();
  inv.commuting_probability = commuting_probability(ring);
  inv.quotient = additive_quotient_structure(ring);
  if (inv.center_size != ring.order()) inv.cc_ring = is_cc_ring(ring).is_cc;
  return inv;
}

std::optional<std::uint64_t> tensor_search_space(std::uint32_t p, std::uint32_t rank) {
  if (p < 2 || rank < 1) return std::nullopt;
  const std::uint64_t cells = std::uint64_t{rank} * rank * rank;
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < cells; ++i) {
    total *= p;
    if (total > kMaxSearchSpace) return std::nullopt;
  }
  return total;
}

BilinearRingEnumerator::BilinearRingEnumerator(std::uint32_t p, std::uint32_t rank,
                                               CatalogFilter filter, bool allow_large)
    : p_(p), rank_(rank), filter_(filter) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "enumeration needs a prime p");
  auto total = tensor_search_space(p, rank);
  if (!total || (!allow_large && *total > kDefaultSearchCap))
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "p^(k^3) search space too large for p=" + std::to_string(p) +
                    ", k=" + std::to_string(rank));
  total_ = *total;
  current_.p = p;
  current_.rank = rank;
  current_.c.assign(std::size_t{rank} * rank * rank, 0);
}

// Odometer step: the last flattened entry is least significant.
void BilinearRingEnumerator::advance() {
  for (std::size_t i = current_.c.size(); i-- > 0;) {
    if (++current_.c[i] < p_) return;
    current_.c[i] = 0;
  }
}

std::optional<CatalogEntry> BilinearRingEnumerator::next() {
  while (cursor_ < total_) {
    const std::uint64_t index = cursor_++;
    if (index > 0) advance();
    ++stats_.scanned;
    if (basis_associativity_witness(current_)) continue;
    ++stats_.associative;
    FiniteRing ring = ring_from_structure_constants(current_);
    if (filter_ == CatalogFilter::NonCommutative && ring.is_commutative()) continue;
    ++stats_.kept;
    std::string provenance = "structure_constants(p=" + std::to_string(p_) +
                             ",k=" + std::to_string(rank_) + ",index=" + std::to_string(index) + ")";
    ring = ring.with_label("cat_p" + std::to_string(p_) + "_k" + std::to_string(rank_) + "_" +
                           std::to_string(index));
    RingInvariants inv = compute_invariants(ring);
    return CatalogEntry{std::move(ring), std::move(provenance), index, std::move(inv)};
  }
  return std::nullopt;
}

}  // namespace commring
