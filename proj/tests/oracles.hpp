#pragma once

// Slow, independently written reference computations. Nothing here calls the
// library's algorithms; the tests compare the two.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "commring/graph.hpp"
#include "commring/ring.hpp"
#include "commring/ring_gen.hpp"

namespace oracle {

using commring::Element;
using commring::FiniteRing;

inline std::vector<Element> center(const FiniteRing& r) {
  std::vector<Element> z;
  for (Element a = 0; a < r.order(); ++a) {
    std::size_t hits = 0;
    for (Element b = 0; b < r.order(); ++b) hits += r.mul(a, b) == r.mul(b, a);
    if (hits == r.order()) z.push_back(a);
  }
  return z;
}

/// Ordered pairs that commute, counted directly.
inline std::uint64_t commuting_pairs(const FiniteRing& r) {
  std::uint64_t n = 0;
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 0; b < r.order(); ++b) n += r.mul(a, b) == r.mul(b, a);
  return n;
}

inline std::size_t distinct_centralizers(const FiniteRing& r) {
  std::set<std::vector<Element>> seen;
  for (Element a = 0; a < r.order(); ++a) {
    std::vector<Element> c;
    for (Element b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.mul(b, a)) c.push_back(b);
    seen.insert(c);
  }
  return seen.size();
}

/// Number of elements x of R with q*x in the subgroup, divided by its size.
/// For an elementary p-group quotient of rank d this equals p^d.
inline std::uint64_t quotient_q_torsion(const FiniteRing& r, const std::vector<Element>& sub,
                                        std::uint32_t q) {
  std::uint64_t count = 0;
  for (Element a = 0; a < r.order(); ++a) {
    Element m = 0;
    for (std::uint32_t i = 0; i < q; ++i) m = r.add(m, a);
    count += std::binary_search(sub.begin(), sub.end(), m);
  }
  return count / sub.size();
}

/// Associativity of a structure-constant tensor checked on whole vectors of
/// (Z_p)^k rather than on basis triples.
inline bool tensor_associative(std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& c) {
  std::uint32_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) n *= p;
  auto digits = [&](std::uint32_t x) {
    std::vector<std::uint32_t> d(k);
    for (auto& v : d) {
      v = x % p;
      x /= p;
    }
    return d;
  };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    const auto a = digits(x), b = digits(y);
    std::vector<std::uint32_t> out(k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        for (std::uint32_t t = 0; t < k; ++t)
          out[t] = (out[t] + a[i] * b[j] * c[(i * k + j) * k + t]) % p;
    std::uint32_t idx = 0;
    for (std::uint32_t i = k; i-- > 0;) idx = idx * p + out[i];
    return idx;
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
  return true;
}

/// Polynomial with long coefficients, ascending.
using Poly = std::vector<long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

/// det(xI - A) by Laplace expansion along the first row. Exponential; use
/// for n <= 7 only.
inline Poly cofactor_char_poly(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly total{0};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    Poly term = poly_mul(m[0][col], cofactor_char_poly(minor));
    if (col % 2)
      for (auto& v : term) v = -v;
    total = poly_add(total, term);
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

inline Poly char_poly(const commring::CommutingGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {1};
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? Poly{0, 1} : Poly{g.adjacent(i, j) ? -1L : 0L};
  return cofactor_char_poly(m);
}

inline commring::CommutingGraph random_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) edges.emplace_back(i, j);
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return commring::CommutingGraph::from_edges(labels, edges);
}

/// Random clique sizes summing to at most max_vertices, then shuffled.
inline std::vector<std::size_t> random_clique_sizes(std::size_t max_vertices, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> total_dist(1, max_vertices);
  std::size_t remaining = total_dist(rng);
  std::vector<std::size_t> sizes;
  while (remaining > 0) {
    std::uniform_int_distribution<std::size_t> part(1, std::min<std::size_t>(remaining, 20));
    sizes.push_back(part(rng));
    remaining -= sizes.back();
  }
  std::shuffle(sizes.begin(), sizes.end(), rng);
  return sizes;
}

/// Disjoint union of cliques with the vertex positions randomly permuted, so
/// components are not contiguous.
inline commring::CommutingGraph scrambled_clique_union(const std::vector<std::size_t>& sizes,
                                                       std::mt19937& rng) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t start = 0;
  for (auto s : sizes) {
    for (std::size_t i = start; i < start + s; ++i)
      for (std::size_t j = i + 1; j < start + s; ++j) edges.emplace_back(perm[i], perm[j]);
    start += s;
  }
  std::vector<Element> labels(n);
  std::iota(labels.begin(), labels.end(), 100);
  return commring::CommutingGraph::from_edges(labels, edges);
}

/// Spectrum of a clique union computed from the multiset of sizes: each K_m
/// contributes m-1 and (-1)^(m-1).
inline std::map<long, std::size_t> clique_spectrum(const std::vector<std::size_t>& sizes) {
  std::map<long, std::size_t> spec;
  for (auto m : sizes) {
    spec[static_cast<long>(m) - 1] += 1;
    if (m > 1) spec[-1] += m - 1;
  }
  return spec;
}

inline std::map<long, std::size_t> as_map(const commring::SpectrumResult& s) {
  std::map<long, std::size_t> out;
  for (const auto& e : s.eigenvalues) out[e.value] += e.multiplicity;
  return out;
}

/// Smallest genus of K_n by the closed formula, computed with a ceiling
/// division written independently.
inline std::uint64_t genus_k(std::uint64_t n) {
  if (n < 3) return 0;
  const std::uint64_t num = (n - 3) * (n - 4);
  return num / 12 + (num % 12 != 0);
}

}  // namespace oracle
