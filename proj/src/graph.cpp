#include "commring/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace commring {

CommutingGraph CommutingGraph::from_edges(
    std::vector<Element> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::string label) {
  CommutingGraph g;
  const std::size_t n = vertices.size();
  g.label_ = std::move(label);
  g.vertices_ = std::move(vertices);
  g.adj_.assign(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range or a loop");
    g.adj_[u * n + v] = g.adj_[v * n + u] = 1;
  }
  return g;
}

CommutingGraph CommutingGraph::clique_union(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<Element> vertices(n);
  std::iota(vertices.begin(), vertices.end(), Element{0});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t base = 0;
  for (std::size_t m : sizes) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(base + i, base + j);
    base += m;
  }
  return from_edges(std::move(vertices), edges, "clique_union");
}

std::size_t CommutingGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<std::size_t> CommutingGraph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (adjacent(u, v)) out.push_back(v);
  return out;
}

CommutingGraph CommutingGraph::induced(const std::vector<std::size_t>& positions) const {
  CommutingGraph g;
  const std::size_t m = positions.size();
  g.label_ = label_;
  g.adj_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    g.vertices_.push_back(vertices_[positions[i]]);
    for (std::size_t j = 0; j < m; ++j) g.adj_[i * m + j] = adjacent(positions[i], positions[j]);
  }
  return g;
}

CommutingGraph commuting_graph(const FiniteRing& ring) {
  CommutingGraph g;
  g.label_ = ring.label();
  const ElementSet z = center(ring);
  const auto n = static_cast<Element>(ring.order());
  for (Element e = 0; e < n; ++e)
    if (!z.contains(e)) g.vertices_.push_back(e);
  const std::size_t m = g.vertices_.size();
  g.adj_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (ring.commute(g.vertices_[i], g.vertices_[j])) g.adj_[i * m + j] = g.adj_[j * m + i] = 1;
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const CommutingGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && g.adjacent(comp[head], v)) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::size_t CliqueDecomposition::vertex_count() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

std::string CliqueDecomposition::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
  out << "}";
  return out.str();
}

DecompositionResult clique_union_decomposition(const CommutingGraph& g) {
  CliqueDecomposition d;
  for (const auto& comp : connected_components(g)) {
    for (std::size_t v : comp) {
      const auto nb = g.neighbours(v);
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
          if (!g.adjacent(nb[a], nb[b]))
            return NotCliqueUnion{{g.vertices()[nb[a]], g.vertices()[v], g.vertices()[nb[b]]}};
    }
    d.sizes.push_back(comp.size());
  }
  std::sort(d.sizes.begin(), d.sizes.end());
  return d;
}

std::size_t SpectrumResult::eigenvalue_count() const {
  std::size_t total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

std::string SpectrumResult::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (i) out << ", ";
    const auto& e = eigenvalues[i];
    if (e.value < 0)
      out << "(" << e.value << ")";
    else
      out << e.value;
    out << "^" << e.multiplicity;
  }
  out << "}";
  if (!is_integral) out << " + roots(" << residual.str() << ")";
  return out.str();
}

namespace {

SpectrumResult from_multiset(const std::map<long, std::size_t>& roots) {
  SpectrumResult s;
  for (auto [value, mult] : roots)
    if (mult > 0) s.eigenvalues.push_back({value, mult});
  return s;
}

}  // namespace

SpectrumResult clique_union_spectrum(const CliqueDecomposition& d) {
  std::map<long, std::size_t> roots;
  const std::size_t total = d.vertex_count();
  roots[-1] += total - d.sizes.size();
  for (std::size_t m : d.sizes) roots[static_cast<long>(m) - 1] += 1;
  return from_multiset(roots);
}

IntegerPolynomial char_poly_dense(const CommutingGraph& g) {
  const std::size_t n = g.vertex_count();
  // Coefficients in descending degree; p_0 = 1.
  std::vector<mpz_class> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C
    std::vector<mpz_class> column(r + 2);
    column[0] = 1;
    column[1] = g.adjacent(r, r) ? -1 : 0;
    std::vector<mpz_class> vec(r), next(r);
    for (std::size_t i = 0; i < r; ++i) vec[i] = g.adjacent(i, r) ? 1 : 0;
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (g.adjacent(r, j)) dot += vec[j];
      column[k + 2] = -dot;
      if (k + 1 == r) break;
      for (std::size_t i = 0; i < r; ++i) {
        next[i] = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (g.adjacent(i, j)) next[i] += vec[j];
      }
      std::swap(vec, next);
    }
    std::vector<mpz_class> product(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) product[i] += column[i - j] * poly[j];
    poly = std::move(product);
  }
  std::reverse(poly.begin(), poly.end());
  return IntegerPolynomial(std::move(poly));
}

IntegerPolynomial char_poly(const CommutingGraph& g, std::size_t cap) {
  if (g.vertex_count() > cap)
    throw Error(ErrorCode::CapExceeded, "graph has " + std::to_string(g.vertex_count()) +
                                            " vertices, characteristic polynomial cap is " +
                                            std::to_string(cap));
  IntegerPolynomial result = IntegerPolynomial::from_ints({1});
  for (const auto& comp : connected_components(g)) result = result * char_poly_dense(g.induced(comp));
  return result;
}

mpz_class root_bound(const IntegerPolynomial& p) {
  const std::size_t n = p.degree();
  if (n == 0) return 0;
  mpz_class cauchy = 0;
  for (std::size_t i = 0; i < n; ++i) cauchy = std::max(cauchy, mpz_class(abs(p.coefficient(i))));
  cauchy += 1;

  // Fujiwara: 2 * max(|a_{n-k}|^{1/k} for k < n, |a_0 / 2|^{1/n}), each root rounded up.
  mpz_class fujiwara = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class a = abs(p.coefficient(n - k));
    if (k == n) a = (a + 1) / 2;
    mpz_class root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), k);
    mpz_class check;
    mpz_pow_ui(check.get_mpz_t(), root.get_mpz_t(), k);
    if (check < a) root += 1;
    fujiwara = std::max(fujiwara, root);
  }
  fujiwara *= 2;
  return std::min(cauchy, fujiwara);
}

SpectrumResult integer_spectrum(const IntegerPolynomial& p) {
  if (!p.is_monic()) throw Error(ErrorCode::InvalidArgument, "integer_spectrum expects a monic polynomial");
  std::map<long, std::size_t> roots;
  IntegerPolynomial rest = p;

  std::size_t zeros = 0;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = rest.deflate(0);
    ++zeros;
  }
  if (zeros) roots[0] = zeros;

  const mpz_class bound = root_bound(rest);
  for (mpz_class d = 1; rest.degree() > 0 && d <= bound; ++d) {
    if (d > abs(rest.coefficient(0))) break;
    if (!mpz_divisible_p(rest.coefficient(0).get_mpz_t(), d.get_mpz_t())) continue;
    for (const mpz_class& candidate : {mpz_class(-d), d}) {
      while (rest.degree() > 0 && rest.evaluate(candidate) == 0) {
        rest = rest.deflate(candidate);
        roots[candidate.get_si()] += 1;
      }
    }
  }

  SpectrumResult s = from_multiset(roots);
  s.residual = rest;
  s.is_integral = rest.degree() == 0;
  return s;
}

std::uint64_t genus_complete(std::uint64_t n) {
  if (n < 3) return 0;
  return ((n - 3) * (n - 4) + 11) / 12;
}

const char* to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Planar: return "planar";
    case SurfaceClass::Toroidal: return "toroidal";
    case SurfaceClass::Higher: return "higher";
  }
  return "unknown";
}

GenusResult genus_from_value(std::uint64_t genus) {
  const SurfaceClass c = genus == 0 ? SurfaceClass::Planar
                         : genus == 1 ? SurfaceClass::Toroidal
                                      : SurfaceClass::Higher;
  return GenusResult{genus, c};
}

GenusResult genus_clique_union(const CliqueDecomposition& d) {
  std::uint64_t total = 0;
  for (std::size_t m : d.sizes) total += genus_complete(m);
  return genus_from_value(total);
}

GenusResult genus(const CommutingGraph& g) {
  auto result = clique_union_decomposition(g);
  if (auto* bad = std::get_if<NotCliqueUnion>(&result)) {
    std::ostringstream msg;
    msg << "genus is only supported for disjoint unions of cliques; induced path " << bad->witness[0]
        << " - " << bad->witness[1] << " - " << bad->witness[2];
    throw Error(ErrorCode::UnsupportedTopology, msg.str());
  }
  return genus_clique_union(std::get<CliqueDecomposition>(result));
}

}  // namespace commring
