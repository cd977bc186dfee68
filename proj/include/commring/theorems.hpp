#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commring/graph.hpp"
#include "commring/ring.hpp"

namespace commring {

enum class ClaimId {
  CcTheorem,
  CcProductCorollary,
  QuotientPxpTheorem,
  PlanarityProp,
  OrderP2Prop,
  OrderP3Prop,
  Cent4Prop,
  Cent5Prop,
  CentPPlus2Prop,
  PrBoundTheorem,
  Pr58Prop,
  PrGeneralProp,
};

/// Upper-snake name, e.g. "CC_THEOREM".
const char* to_string(ClaimId id);

enum class Verdict { Pass, Fail, Vacuous };
const char* to_string(Verdict v);

/// Canonical key -> value rendering of a structured prediction or observation.
using ClaimValue = std::map<std::string, std::string>;

struct TheoremReport {
  ClaimId claim = ClaimId::CcTheorem;
  std::string ring_label;
  bool hypothesis_satisfied = false;
  ClaimValue predicted;
  ClaimValue observed;
  Verdict verdict = Verdict::Vacuous;
  std::vector<std::string> notes;

  bool operator==(const TheoremReport&) const = default;
};

struct CheckOptions {
  std::size_t char_poly_cap = kDefaultCharPolyCap;
};

/// Everything the checkers observe about one ring, computed once by brute force.
struct RingAnalysis {
  explicit RingAnalysis(FiniteRing r) : ring(std::move(r)) {}

  FiniteRing ring;
  ElementSet center;
  CentralizerFamily family;
  std::vector<ElementSet> proper_centralizers;
  Rational probability;
  AbelianGroupType quotient;
  bool commutative = false;
  std::optional<CcResult> cc;
  CommutingGraph graph;
  DecompositionResult decomposition;
  /// integer_spectrum(char_poly(graph)); empty above the cap.
  std::optional<SpectrumResult> char_poly_spectrum;
  /// clique_union_spectrum of the decomposition; empty when not a clique union.
  std::optional<SpectrumResult> decomposition_spectrum;
  std::optional<GenusResult> genus;

  /// Char-poly spectrum when available, else the decomposition spectrum.
  std::optional<SpectrumResult> spectrum() const;
};

RingAnalysis analyze_ring(const FiniteRing& ring, const CheckOptions& options = {});

/// Spectrum {(-1)^((p^2-1)z-p-1), ((p-1)z-1)^(p+1)} for R/Z(R) = Z_p x Z_p with |Z(R)| = z.
SpectrumResult quotient_pxp_spectrum(std::uint64_t p, std::uint64_t z);
/// (p+1) * genus(K_{(p-1)z})
std::uint64_t quotient_pxp_genus(std::uint64_t p, std::uint64_t z);

// Each checker throws Error(CommutativeRing) where a non-commutative ring is
// required; run_all turns that into a vacuous report.
TheoremReport check_cc_theorem(const RingAnalysis& a);
TheoremReport check_cc_product_corollary(const RingAnalysis& r, const FiniteRing& commutative,
                                         const CheckOptions& options = {});
TheoremReport check_quotient_pxp_theorem(const RingAnalysis& a);
TheoremReport check_planarity_prop(const RingAnalysis& a);
TheoremReport check_order_p2_prop(const RingAnalysis& a);
TheoremReport check_order_p3_prop(const RingAnalysis& a);
TheoremReport check_cent4_prop(const RingAnalysis& a);
TheoremReport check_cent5_prop(const RingAnalysis& a);
TheoremReport check_cent_p_plus_2_prop(const RingAnalysis& a);
/// The three centralizer-count propositions.
std::vector<TheoremReport> check_n_centralizer_props(const RingAnalysis& a);
TheoremReport check_pr_bound(const RingAnalysis& a);
TheoremReport check_pr_5_8_prop(const RingAnalysis& a);
TheoremReport check_pr_general_prop(const RingAnalysis& a);
/// PR_5_8_PROP and PR_GENERAL_PROP.
std::vector<TheoremReport> check_pr_propositions(const RingAnalysis& a);

/// Convenience overloads that analyse the ring first.
TheoremReport check_cc_theorem(const FiniteRing& ring, const CheckOptions& options = {});
TheoremReport check_cc_product_corollary(const FiniteRing& ring, const FiniteRing& commutative,
                                         const CheckOptions& options = {});
TheoremReport check_quotient_pxp_theorem(const FiniteRing& ring, const CheckOptions& options = {});
TheoremReport check_planarity_prop(const FiniteRing& ring, const CheckOptions& options = {});
TheoremReport check_order_p2_prop(const FiniteRing& ring, const CheckOptions& options = {});
TheoremReport check_order_p3_prop(const FiniteRing& ring, const CheckOptions& options = {});
TheoremReport check_pr_bound(const FiniteRing& ring, const CheckOptions& options = {});

/// Runs every checker without short-circuiting, in ClaimId order. The
/// corollary is exercised with A = Z_2.
std::vector<TheoremReport> run_all(const RingAnalysis& a, const CheckOptions& options = {});
std::vector<TheoremReport> run_all(const FiniteRing& ring, const CheckOptions& options = {});

std::size_t count_verdicts(const std::vector<TheoremReport>& reports, Verdict v);

}  // namespace commring
