#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "commring/polynomial.hpp"
#include "commring/ring.hpp"

namespace commring {

/// Simple undirected graph whose vertices carry ring element labels.
/// Positions 0..n-1 index the adjacency matrix; vertices[i] is the element.
class CommutingGraph {
 public:
  CommutingGraph() = default;

  /// Graph on labelled vertices with edges given by position pairs.
  static CommutingGraph from_edges(std::vector<Element> vertices,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                   std::string label = {});
  /// Disjoint union of complete graphs, vertices labelled 0..sum-1.
  static CommutingGraph clique_union(const std::vector<std::size_t>& sizes);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const;
  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  const std::string& ring_label() const noexcept { return label_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * vertices_.size() + v] != 0; }
  std::vector<std::size_t> neighbours(std::size_t u) const;

  /// Induced subgraph on the given positions (kept in the given order).
  CommutingGraph induced(const std::vector<std::size_t>& positions) const;

 private:
  friend CommutingGraph commuting_graph(const FiniteRing& ring);

  std::string label_;
  std::vector<Element> vertices_;
  std::vector<char> adj_;
};

/// Vertices R \ Z(R) in ascending order; uv is an edge iff uv = vu.
CommutingGraph commuting_graph(const FiniteRing& ring);

/// Components as sorted position lists, ordered by smallest position.
std::vector<std::vector<std::size_t>> connected_components(const CommutingGraph& g);

struct CliqueDecomposition {
  /// Part sizes, sorted ascending.
  std::vector<std::size_t> sizes;

  std::size_t vertex_count() const;
  std::string str() const;
  bool operator==(const CliqueDecomposition&) const = default;
};

/// Induced path u - v - w with uw missing, in ring element labels.
struct NotCliqueUnion {
  std::array<Element, 3> witness;
};

using DecompositionResult = std::variant<CliqueDecomposition, NotCliqueUnion>;

DecompositionResult clique_union_decomposition(const CommutingGraph& g);

struct Eigenvalue {
  long value;
  std::size_t multiplicity;
  bool operator==(const Eigenvalue&) const = default;
};

struct SpectrumResult {
  /// Sorted ascending by value, multiplicities >= 1.
  std::vector<Eigenvalue> eigenvalues;
  /// Unfactored part; the constant 1 when fully integral.
  IntegerPolynomial residual = IntegerPolynomial::from_ints({1});
  bool is_integral = true;

  std::size_t eigenvalue_count() const;
  /// e.g. "{(-1)^7, 1^7}"; a non-trivial residual is appended as "+ roots(...)".
  std::string str() const;
  bool operator==(const SpectrumResult&) const = default;
};

/// Spectrum of a disjoint union of complete graphs, in closed form.
SpectrumResult clique_union_spectrum(const CliqueDecomposition& d);

inline constexpr std::size_t kDefaultCharPolyCap = 256;

/// Exact det(xI - A) of a symmetric 0/1 matrix by Berkowitz's division-free
/// recurrence over the whole matrix.
IntegerPolynomial char_poly_dense(const CommutingGraph& g);

/// Exact characteristic polynomial: product of the component polynomials,
/// each by char_poly_dense. Throws Error(CapExceeded) above the vertex cap.
IntegerPolynomial char_poly(const CommutingGraph& g, std::size_t cap = kDefaultCharPolyCap);

/// Integer roots of a monic polynomial with multiplicity, by divisor testing
/// and repeated deflation.
SpectrumResult integer_spectrum(const IntegerPolynomial& p);

/// Root modulus bound for a monic polynomial: min of the Cauchy and Fujiwara bounds.
mpz_class root_bound(const IntegerPolynomial& p);

std::uint64_t genus_complete(std::uint64_t n);

enum class SurfaceClass { Planar, Toroidal, Higher };
const char* to_string(SurfaceClass c);

struct GenusResult {
  std::uint64_t genus = 0;
  SurfaceClass classification = SurfaceClass::Planar;
  bool operator==(const GenusResult&) const = default;
};

GenusResult genus_from_value(std::uint64_t genus);
GenusResult genus_clique_union(const CliqueDecomposition& d);

/// Throws Error(UnsupportedTopology) unless g is a disjoint union of cliques.
GenusResult genus(const CommutingGraph& g);

}  // namespace commring
