#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "commring/ring.hpp"

namespace commring {

/// Z_n with modular multiplication.
FiniteRing cyclic_ring(std::uint32_t n);

/// Z_n additive group with identically zero multiplication.
FiniteRing zero_ring(std::uint32_t n);

/// {[[a,b],[0,0]] : a,b in Z_m}; element (a,b) has index a*m + b.
FiniteRing row_matrix_ring(std::uint32_t m);

/// 2x2 upper-triangular matrices over Z_m; [[a,b],[0,c]] has index (a*m + b)*m + c.
FiniteRing upper_triangular_ring(std::uint32_t m);

/// All 2x2 matrices over Z_p for prime p <= 3; [[a,b],[c,d]] has index ((a*p + b)*p + c)*p + d.
FiniteRing full_matrix_ring(std::uint32_t p);

/// Builds one of the named families above from (family, parameter).
/// Recognised names: cyclic, zero, row_matrix, upper_triangular, full_matrix.
FiniteRing family_ring(const std::string& family, std::uint32_t parameter);

/// Bilinear multiplication on (Z_p)^k given by e_i * e_j = sum_t c[i][j][t] e_t.
struct StructureConstants {
  std::uint32_t p = 2;
  std::uint32_t rank = 1;
  /// Flattened c[i][j][t] at index (i*rank + j)*rank + t.
  std::vector<std::uint32_t> c;

  std::uint32_t at(std::uint32_t i, std::uint32_t j, std::uint32_t t) const {
    return c[(i * rank + j) * rank + t];
  }
};

/// Returns the first basis triple (i,j,l) with (e_i e_j) e_l != e_i (e_j e_l).
std::optional<std::array<std::uint32_t, 3>> basis_associativity_witness(const StructureConstants& sc);

/// Ring on (Z_p)^k. Vector v has index sum v_i p^i. Throws AxiomError with a
/// basis witness when the multiplication is not associative.
FiniteRing ring_from_structure_constants(const StructureConstants& sc);

struct RingInvariants {
  std::size_t center_size = 0;
  std::size_t centralizer_count = 0;
  Rational commuting_probability;
  AbelianGroupType quotient;
  /// Empty for commutative rings, where the CC predicate is undefined.
  std::optional<bool> cc_ring;

  bool operator==(const RingInvariants&) const = default;
};

RingInvariants compute_invariants(const FiniteRing& ring);

struct CatalogEntry {
  FiniteRing ring;
  std::string provenance;
  std::uint64_t tensor_index = 0;
  RingInvariants invariants;
};

enum class CatalogFilter { All, NonCommutative };

struct EnumerationStats {
  std::uint64_t scanned = 0;
  std::uint64_t associative = 0;
  std::uint64_t kept = 0;
};

/// Largest tensor count accepted without the large-search opt-in.
inline constexpr std::uint64_t kDefaultSearchCap = 1ull << 20;
/// Hard ceiling on the search space, p^(k^3) <= 2^30.
inline constexpr std::uint64_t kMaxSearchSpace = 1ull << 30;

/// Lazily walks all p^(k^3) structure-constant tensors in lexicographic
/// order of the flattened tensor (first entry most significant) and yields
/// the associative ones that pass the filter.
class BilinearRingEnumerator {
 public:
  /// allow_large lifts the default cap up to kMaxSearchSpace (needed for p=2, k=3).
  BilinearRingEnumerator(std::uint32_t p, std::uint32_t rank, CatalogFilter filter,
                         bool allow_large = false);

  std::optional<CatalogEntry> next();

  const EnumerationStats& stats() const noexcept { return stats_; }
  std::uint64_t search_space() const noexcept { return total_; }

 private:
  void advance();

  std::uint32_t p_;
  std::uint32_t rank_;
  CatalogFilter filter_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
  StructureConstants current_;
  EnumerationStats stats_;
};

/// p^(k^3), or nullopt when it exceeds kMaxSearchSpace.
std::optional<std::uint64_t> tensor_search_space(std::uint32_t p, std::uint32_t rank);

}  // namespace commring
