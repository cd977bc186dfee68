#include "commring/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "commring/ring_gen.hpp"

namespace commring {

const char* to_string(ClaimId id) {
  switch (id) {
    case ClaimId::CcTheorem: return "CC_THEOREM";
    case ClaimId::CcProductCorollary: return "CC_PRODUCT_COROLLARY";
    case ClaimId::QuotientPxpTheorem: return "QUOTIENT_PXP_THEOREM";
    case ClaimId::PlanarityProp: return "PLANARITY_PROP";
    case ClaimId::OrderP2Prop: return "ORDER_P2_PROP";
    case ClaimId::OrderP3Prop: return "ORDER_P3_PROP";
    case ClaimId::Cent4Prop: return "CENT4_PROP";
    case ClaimId::Cent5Prop: return "CENT5_PROP";
    case ClaimId::CentPPlus2Prop: return "CENT_P_PLUS_2_PROP";
    case ClaimId::PrBoundTheorem: return "PR_BOUND_THEOREM";
    case ClaimId::Pr58Prop: return "PR_5_8_PROP";
    case ClaimId::PrGeneralProp: return "PR_GENERAL_PROP";
  }
  return "UNKNOWN";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
  }
  return "unknown";
}

std::optional<SpectrumResult> RingAnalysis::spectrum() const {
  if (char_poly_spectrum) return char_poly_spectrum;
  return decomposition_spectrum;
}

RingAnalysis analyze_ring(const FiniteRing& ring, const CheckOptions& options) {
  RingAnalysis a(ring);
  a.center = center(ring);
  a.family = centralizer_family(ring);
  for (const auto& c : a.family.centralizers)
    if (c.size() != ring.order()) a.proper_centralizers.push_back(c);
  a.probability = commuting_probability(ring);
  a.quotient = additive_quotient_structure(ring, a.center);
  a.commutative = a.center.size() == ring.order();
  if (!a.commutative) a.cc = is_cc_ring(ring);
  a.graph = commuting_graph(ring);
  a.decomposition = clique_union_decomposition(a.graph);
  if (a.graph.vertex_count() <= options.char_poly_cap)
    a.char_poly_spectrum = integer_spectrum(char_poly(a.graph, options.char_poly_cap));
  if (const auto* d = std::get_if<CliqueDecomposition>(&a.decomposition)) {
    a.decomposition_spectrum = clique_union_spectrum(*d);
    a.genus = genus_clique_union(*d);
  }
  return a;
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string list_str(const std::vector<T>& values) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << "}";
  return out.str();
}

/// Merges (value, multiplicity) pairs into a canonical spectrum, dropping
/// zero multiplicities.
SpectrumResult spectrum_of(const std::vector<std::pair<long, long>>& parts) {
  std::map<long, long> merged;
  for (auto [value, mult] : parts) merged[value] += mult;
  SpectrumResult s;
  for (auto [value, mult] : merged)
    if (mult > 0) s.eigenvalues.push_back({value, static_cast<std::size_t>(mult)});
  return s;
}

void require_noncommutative(const RingAnalysis& a) {
  if (a.commutative) throw Error(ErrorCode::CommutativeRing, "claim requires a non-commutative ring");
}

TheoremReport start(ClaimId id, const RingAnalysis& a) {
  TheoremReport r;
  r.claim = id;
  r.ring_label = a.ring.label();
  return r;
}

TheoremReport& finish(TheoremReport& r) {
  if (!r.hypothesis_satisfied)
    r.verdict = Verdict::Vacuous;
  else
    r.verdict = r.predicted == r.observed ? Verdict::Pass : Verdict::Fail;
  return r;
}

std::string observed_spectrum(const RingAnalysis& a, TheoremReport& r) {
  if (a.char_poly_spectrum) {
    r.notes.push_back("spectral_path=char_poly");
    return a.char_poly_spectrum->str();
  }
  r.notes.push_back("spectral_path=decomposition (char_poly cap exceeded)");
  if (a.decomposition_spectrum) return a.decomposition_spectrum->str();
  return "unavailable";
}

std::string observed_decomposition_spectrum(const RingAnalysis& a) {
  return a.decomposition_spectrum ? a.decomposition_spectrum->str() : "not-clique-union";
}

std::string observed_genus(const RingAnalysis& a) {
  return a.genus ? std::to_string(a.genus->genus) : "unsupported-topology";
}

std::string observed_integral(const RingAnalysis& a) {
  if (a.char_poly_spectrum) return flag(a.char_poly_spectrum->is_integral);
  if (a.decomposition_spectrum) return "true";
  return "unknown";
}

std::string observed_planar(const RingAnalysis& a) {
  return a.genus ? flag(a.genus->genus == 0) : "unknown";
}

std::string observed_toroidal(const RingAnalysis& a) {
  return a.genus ? flag(a.genus->genus == 1) : "unknown";
}

std::vector<std::size_t> proper_sizes(const RingAnalysis& a) {
  std::vector<std::size_t> sizes;
  for (const auto& c : a.proper_centralizers) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string observed_clique_sizes(const RingAnalysis& a) {
  if (const auto* d = std::get_if<CliqueDecomposition>(&a.decomposition)) return d->str();
  return "not-clique-union";
}

/// Fills spectrum, decomposition spectrum and genus for a main2-type prediction.
void predict_quotient_formulas(TheoremReport& r, const RingAnalysis& a, std::uint64_t p) {
  const std::uint64_t z = a.center.size();
  const std::string spectrum = quotient_pxp_spectrum(p, z).str();
  r.predicted["spectrum"] = spectrum;
  r.predicted["spectrum_decomposition"] = spectrum;
  r.predicted["genus"] = std::to_string(quotient_pxp_genus(p, z));
  r.observed["spectrum"] = observed_spectrum(a, r);
  r.observed["spectrum_decomposition"] = observed_decomposition_spectrum(a);
  r.observed["genus"] = observed_genus(a);
}

void note_ring(TheoremReport& r, const RingAnalysis& a) {
  r.notes.push_back("order=" + std::to_string(a.ring.order()));
  r.notes.push_back("center_size=" + std::to_string(a.center.size()));
  r.notes.push_back("quotient=" + a.quotient.str());
  r.notes.push_back("centralizer_count=" + std::to_string(a.family.count()));
  r.notes.push_back("commuting_probability=" + a.probability.str());
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

SpectrumResult quotient_pxp_spectrum(std::uint64_t p, std::uint64_t z) {
  const long P = static_cast<long>(p), Z = static_cast<long>(z);
  return spectrum_of({{-1, (P * P - 1) * Z - P - 1}, {(P - 1) * Z - 1, P + 1}});
}

std::uint64_t quotient_pxp_genus(std::uint64_t p, std::uint64_t z) {
  return (p + 1) * genus_complete((p - 1) * z);
}

TheoremReport check_cc_theorem(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::CcTheorem, a);
  r.hypothesis_satisfied = a.cc && a.cc->is_cc;
  if (!r.hypothesis_satisfied) {
    const auto& w = *a.cc->witness;
    r.notes.push_back("not a CC-ring: elements " + std::to_string(w.s) + " and " +
                      std::to_string(w.t) + " of C(" + std::to_string(w.r) + ") do not commute");
    return finish(r);
  }

  const long z = static_cast<long>(a.center.size());
  const long n = static_cast<long>(a.proper_centralizers.size());
  std::vector<std::pair<long, long>> parts;
  std::vector<std::size_t> cliques;
  long total = 0;
  std::uint64_t genus_sum = 0;
  for (const auto& s : a.proper_centralizers) {
    const long size = static_cast<long>(s.size());
    total += size;
    parts.emplace_back(size - z - 1, 1);
    cliques.push_back(static_cast<std::size_t>(size - z));
    genus_sum += genus_complete(static_cast<std::uint64_t>(size - z));
  }
  parts.emplace_back(-1, total - n * (z + 1));
  std::sort(cliques.begin(), cliques.end());

  // Distinct proper centralizers meet exactly in the center.
  std::string intersections = "Z(R)";
  for (std::size_t i = 0; i < a.proper_centralizers.size() && intersections == "Z(R)"; ++i)
    for (std::size_t j = i + 1; j < a.proper_centralizers.size(); ++j)
      if (set_intersection(a.proper_centralizers[i], a.proper_centralizers[j]) != a.center) {
        intersections = "differs for centralizers " + std::to_string(i) + "," + std::to_string(j);
        break;
      }

  const std::string spectrum = spectrum_of(parts).str();
  r.predicted = {{"pairwise_intersection", "Z(R)"},
                 {"clique_sizes", list_str(cliques)},
                 {"spectrum", spectrum},
                 {"spectrum_decomposition", spectrum},
                 {"genus", std::to_string(genus_sum)}};
  r.observed = {{"pairwise_intersection", intersections},
                {"clique_sizes", observed_clique_sizes(a)},
                {"spectrum", observed_spectrum(a, r)},
                {"spectrum_decomposition", observed_decomposition_spectrum(a)},
                {"genus", observed_genus(a)}};
  r.notes.push_back("proper_centralizer_sizes=" + list_str(proper_sizes(a)));
  return finish(r);
}

TheoremReport check_cc_product_corollary(const RingAnalysis& a, const FiniteRing& commutative,
                                         const CheckOptions& options) {
  require_noncommutative(a);
  if (!commutative.is_commutative())
    throw Error(ErrorCode::NotCommutative, "second factor of the corollary must be commutative");
  if (!a.cc || !a.cc->is_cc) throw Error(ErrorCode::NotCcRing, "first factor must be a CC-ring");

  TheoremReport r = start(ClaimId::CcProductCorollary, a);
  r.hypothesis_satisfied = true;
  const std::size_t na = commutative.order();
  const FiniteRing product = direct_product(a.ring, commutative);
  const RingAnalysis pa = analyze_ring(product, options);

  const long z = static_cast<long>(a.center.size());
  const long A = static_cast<long>(na);
  const long n = static_cast<long>(a.proper_centralizers.size());
  std::vector<std::pair<long, long>> parts;
  std::vector<std::size_t> cliques;
  long total = 0;
  std::uint64_t genus_sum = 0;
  for (const auto& s : a.proper_centralizers) {
    const long clique = A * (static_cast<long>(s.size()) - z);
    total += clique;
    parts.emplace_back(clique - 1, 1);
    cliques.push_back(static_cast<std::size_t>(clique));
    genus_sum += genus_complete(static_cast<std::uint64_t>(clique));
  }
  parts.emplace_back(-1, total - n);
  std::sort(cliques.begin(), cliques.end());

  // S_i x A, in product indexing r * |A| + a
  std::vector<ElementSet> lifted;
  for (const auto& s : a.proper_centralizers) {
    ElementSet l;
    for (Element e : s.members)
      for (std::size_t u = 0; u < na; ++u) l.members.push_back(static_cast<Element>(e * na + u));
    lifted.push_back(std::move(l));
  }
  std::sort(lifted.begin(), lifted.end());
  std::vector<ElementSet> observed_proper = pa.proper_centralizers;
  std::sort(observed_proper.begin(), observed_proper.end());

  const std::string spectrum = spectrum_of(parts).str();
  r.predicted = {{"center_size", std::to_string(a.center.size() * na)},
                 {"cc_ring", "true"},
                 {"proper_centralizers", "S_i x A"},
                 {"clique_sizes", list_str(cliques)},
                 {"spectrum", spectrum},
                 {"spectrum_decomposition", spectrum},
                 {"genus", std::to_string(genus_sum)}};
  r.observed = {{"center_size", std::to_string(pa.center.size())},
                {"cc_ring", flag(pa.cc && pa.cc->is_cc)},
                {"proper_centralizers", observed_proper == lifted ? "S_i x A" : "differs"},
                {"clique_sizes", observed_clique_sizes(pa)},
                {"spectrum", observed_spectrum(pa, r)},
                {"spectrum_decomposition", observed_decomposition_spectrum(pa)},
                {"genus", observed_genus(pa)}};
  r.notes.push_back("commutative_factor=" + commutative.label());
  r.notes.push_back("product_order=" + std::to_string(product.order()));
  return finish(r);
}

TheoremReport check_quotient_pxp_theorem(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::QuotientPxpTheorem, a);
  note_ring(r, a);
  const auto p = a.quotient.as_pxp();
  r.hypothesis_satisfied = p.has_value();
  if (!p) return finish(r);

  const std::uint64_t z = a.center.size();
  predict_quotient_formulas(r, a, *p);
  r.predicted["proper_centralizer_count"] = std::to_string(*p + 1);
  r.predicted["proper_centralizer_sizes"] =
      list_str(std::vector<std::uint64_t>(*p + 1, *p * z));
  r.predicted["cc_ring"] = "true";
  r.observed["proper_centralizer_count"] = std::to_string(a.proper_centralizers.size());
  r.observed["proper_centralizer_sizes"] = list_str(proper_sizes(a));
  r.observed["cc_ring"] = flag(a.cc && a.cc->is_cc);
  return finish(r);
}

TheoremReport check_planarity_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::PlanarityProp, a);
  note_ring(r, a);
  const auto p = a.quotient.as_pxp();
  r.hypothesis_satisfied = p.has_value();
  if (!p) return finish(r);

  const std::uint64_t z = a.center.size();
  const bool planar = (*p == 2 && z <= 4) || (*p == 3 && z <= 2);
  r.predicted = {{"integral", "true"}, {"toroidal", "false"}, {"planar", flag(planar)}};
  r.observed = {{"integral", observed_integral(a)},
                {"toroidal", observed_toroidal(a)},
                {"planar", observed_planar(a)}};
  return finish(r);
}

TheoremReport check_order_p2_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::OrderP2Prop, a);
  note_ring(r, a);
  const std::uint64_t n = a.ring.order();
  const auto base = prime_power_base(n);
  r.hypothesis_satisfied = base && *base * *base == n;
  if (!r.hypothesis_satisfied) return finish(r);

  const long p = static_cast<long>(*base);
  const std::string spectrum = spectrum_of({{-1, p * p - p - 2}, {p - 2, p + 1}}).str();
  r.predicted = {{"center_size", "1"},
                 {"quotient", AbelianGroupType{{*base, *base}}.str()},
                 {"spectrum", spectrum},
                 {"spectrum_decomposition", spectrum},
                 {"genus", std::to_string((p + 1) * genus_complete(p - 1))},
                 {"integral", "true"},
                 {"toroidal", "false"},
                 {"planar", flag(p == 2 || p == 3 || p == 5)}};
  r.observed = {{"center_size", std::to_string(a.center.size())},
                {"quotient", a.quotient.str()},
                {"spectrum", observed_spectrum(a, r)},
                {"spectrum_decomposition", observed_decomposition_spectrum(a)},
                {"genus", observed_genus(a)},
                {"integral", observed_integral(a)},
                {"toroidal", observed_toroidal(a)},
                {"planar", observed_planar(a)}};
  return finish(r);
}

TheoremReport check_order_p3_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::OrderP3Prop, a);
  note_ring(r, a);
  const std::uint64_t n = a.ring.order();
  const auto base = prime_power_base(n);
  r.hypothesis_satisfied = base && ipow(*base, 3) == n;
  if (!r.hypothesis_satisfied) return finish(r);
  // The claim holds for rings with identity; rings without one can have a
  // trivial center and are reported as they fall.
  r.notes.push_back(std::string("multiplicative_identity=") +
                    (a.ring.identity() ? "present" : "absent"));

  const long p = static_cast<long>(*base);
  const std::string spectrum = spectrum_of({{-1, p * p * p - 2 * p - 1}, {p * p - p - 1, p + 1}}).str();
  r.predicted = {{"center_size", std::to_string(p)},
                 {"quotient", AbelianGroupType{{*base, *base}}.str()},
                 {"spectrum", spectrum},
                 {"spectrum_decomposition", spectrum},
                 {"genus", std::to_string((p + 1) * genus_complete(p * p - p))},
                 {"integral", "true"},
                 {"toroidal", "false"},
                 {"planar", flag(p == 2)}};
  r.observed = {{"center_size", std::to_string(a.center.size())},
                {"quotient", a.quotient.str()},
                {"spectrum", observed_spectrum(a, r)},
                {"spectrum_decomposition", observed_decomposition_spectrum(a)},
                {"genus", observed_genus(a)},
                {"integral", observed_integral(a)},
                {"toroidal", observed_toroidal(a)},
                {"planar", observed_planar(a)}};
  return finish(r);
}

namespace {

TheoremReport check_small_centralizer_count(ClaimId id, const RingAnalysis& a, std::size_t count,
                                            std::uint64_t p, std::uint64_t planar_center_max) {
  require_noncommutative(a);
  TheoremReport r = start(id, a);
  note_ring(r, a);
  r.hypothesis_satisfied = a.family.count() == count;
  if (!r.hypothesis_satisfied) return finish(r);

  const std::uint64_t z = a.center.size();
  r.predicted["quotient"] = AbelianGroupType{{p, p}}.str();
  r.observed["quotient"] = a.quotient.str();
  predict_quotient_formulas(r, a, p);
  r.predicted["integral"] = "true";
  r.predicted["toroidal"] = "false";
  r.predicted["planar"] = flag(z <= planar_center_max);
  r.observed["integral"] = observed_integral(a);
  r.observed["toroidal"] = observed_toroidal(a);
  r.observed["planar"] = observed_planar(a);
  return finish(r);
}

}  // namespace

TheoremReport check_cent4_prop(const RingAnalysis& a) {
  return check_small_centralizer_count(ClaimId::Cent4Prop, a, 4, 2, 4);
}

TheoremReport check_cent5_prop(const RingAnalysis& a) {
  return check_small_centralizer_count(ClaimId::Cent5Prop, a, 5, 3, 2);
}

TheoremReport check_cent_p_plus_2_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::CentPPlus2Prop, a);
  note_ring(r, a);
  // A p-ring is taken to be a ring of prime-power order p^k.
  const auto p = prime_power_base(a.ring.order());
  r.hypothesis_satisfied = p && a.family.count() == *p + 2;
  if (!r.hypothesis_satisfied) return finish(r);
  r.notes.push_back("p_ring_assumption=order is a power of p=" + std::to_string(*p));
  predict_quotient_formulas(r, a, *p);
  return finish(r);
}

std::vector<TheoremReport> check_n_centralizer_props(const RingAnalysis& a) {
  return {check_cent4_prop(a), check_cent5_prop(a), check_cent_p_plus_2_prop(a)};
}

TheoremReport check_pr_bound(const RingAnalysis& a) {
  TheoremReport r = start(ClaimId::PrBoundTheorem, a);
  note_ring(r, a);
  r.hypothesis_satisfied = !a.commutative;
  if (!r.hypothesis_satisfied) {
    r.notes.push_back("commutative ring: Pr(R) = 1, bound not applicable");
    return finish(r);
  }
  const std::uint64_t p = smallest_prime_divisor(a.ring.order());
  const auto P = static_cast<std::int64_t>(p);
  const Rational bound(P * P + P - 1, P * P * P);
  const bool quotient_pxp = a.quotient == AbelianGroupType{{p, p}};
  r.notes.push_back("bound=" + bound.str());
  r.predicted = {{"bound_holds", "true"}, {"equality", flag(quotient_pxp)}};
  r.observed = {{"bound_holds", flag(a.probability <= bound)},
                {"equality", flag(a.probability == bound)}};
  return finish(r);
}

TheoremReport check_pr_5_8_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::Pr58Prop, a);
  note_ring(r, a);
  r.hypothesis_satisfied = a.probability == Rational(5, 8);
  if (!r.hypothesis_satisfied) return finish(r);

  const long z = static_cast<long>(a.center.size());
  const std::string spectrum = spectrum_of({{-1, 3 * (z - 1)}, {z - 1, 3}}).str();
  r.predicted = {{"spectrum", spectrum},
                 {"spectrum_decomposition", spectrum},
                 {"genus", std::to_string(3 * genus_complete(static_cast<std::uint64_t>(z)))}};
  r.observed = {{"spectrum", observed_spectrum(a, r)},
                {"spectrum_decomposition", observed_decomposition_spectrum(a)},
                {"genus", observed_genus(a)}};
  return finish(r);
}

TheoremReport check_pr_general_prop(const RingAnalysis& a) {
  require_noncommutative(a);
  TheoremReport r = start(ClaimId::PrGeneralProp, a);
  note_ring(r, a);
  const std::uint64_t p = smallest_prime_divisor(a.ring.order());
  const auto P = static_cast<std::int64_t>(p);
  r.hypothesis_satisfied = a.probability == Rational(P * P + P - 1, P * P * P);
  if (!r.hypothesis_satisfied) return finish(r);
  predict_quotient_formulas(r, a, p);
  return finish(r);
}

std::vector<TheoremReport> check_pr_propositions(const RingAnalysis& a) {
  return {check_pr_5_8_prop(a), check_pr_general_prop(a)};
}

TheoremReport check_cc_theorem(const FiniteRing& ring, const CheckOptions& options) {
  return check_cc_theorem(analyze_ring(ring, options));
}

TheoremReport check_cc_product_corollary(const FiniteRing& ring, const FiniteRing& commutative,
                                         const CheckOptions& options) {
  return check_cc_product_corollary(analyze_ring(ring, options), commutative, options);
}

TheoremReport check_quotient_pxp_theorem(const FiniteRing& ring, const CheckOptions& options) {
  return check_quotient_pxp_theorem(analyze_ring(ring, options));
}

TheoremReport check_planarity_prop(const FiniteRing& ring, const CheckOptions& options) {
  return check_planarity_prop(analyze_ring(ring, options));
}

TheoremReport check_order_p2_prop(const FiniteRing& ring, const CheckOptions& options) {
  return check_order_p2_prop(analyze_ring(ring, options));
}

TheoremReport check_order_p3_prop(const FiniteRing& ring, const CheckOptions& options) {
  return check_order_p3_prop(analyze_ring(ring, options));
}

TheoremReport check_pr_bound(const FiniteRing& ring, const CheckOptions& options) {
  return check_pr_bound(analyze_ring(ring, options));
}

namespace {

template <typename Fn>
void run_guarded(std::vector<TheoremReport>& out, ClaimId id, const RingAnalysis& a, Fn&& fn) {
  try {
    out.push_back(fn());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CommutativeRing && e.code() != ErrorCode::NotCcRing &&
        e.code() != ErrorCode::NotCommutative)
      throw;
    TheoremReport r = start(id, a);
    r.notes.push_back(std::string("vacuous: ") + to_string(e.code()));
    out.push_back(finish(r));
  }
}

}  // namespace

std::vector<TheoremReport> run_all(const RingAnalysis& a, const CheckOptions& options) {
  std::vector<TheoremReport> out;
  run_guarded(out, ClaimId::CcTheorem, a, [&] { return check_cc_theorem(a); });
  run_guarded(out, ClaimId::CcProductCorollary, a,
              [&] { return check_cc_product_corollary(a, cyclic_ring(2), options); });
  run_guarded(out, ClaimId::QuotientPxpTheorem, a, [&] { return check_quotient_pxp_theorem(a); });
  run_guarded(out, ClaimId::PlanarityProp, a, [&] { return check_planarity_prop(a); });
  run_guarded(out, ClaimId::OrderP2Prop, a, [&] { return check_order_p2_prop(a); });
  run_guarded(out, ClaimId::OrderP3Prop, a, [&] { return check_order_p3_prop(a); });
  run_guarded(out, ClaimId::Cent4Prop, a, [&] { return check_cent4_prop(a); });
  run_guarded(out, ClaimId::Cent5Prop, a, [&] { return check_cent5_prop(a); });
  run_guarded(out, ClaimId::CentPPlus2Prop, a, [&] { return check_cent_p_plus_2_prop(a); });
  run_guarded(out, ClaimId::PrBoundTheorem, a, [&] { return check_pr_bound(a); });
  run_guarded(out, ClaimId::Pr58Prop, a, [&] { return check_pr_5_8_prop(a); });
  run_guarded(out, ClaimId::PrGeneralProp, a, [&] { return check_pr_general_prop(a); });
  return out;
}

std::vector<TheoremReport> run_all(const FiniteRing& ring, const CheckOptions& options) {
  return run_all(analyze_ring(ring, options), options);
}

std::size_t count_verdicts(const std::vector<TheoremReport>& reports, Verdict v) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [v](const auto& r) { return r.verdict == v; }));
}

}  // namespace commring
