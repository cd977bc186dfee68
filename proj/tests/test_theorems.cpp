#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "commring/ring_gen.hpp"
#include "commring/theorems.hpp"

using namespace commring;

namespace {

const TheoremReport& find(const std::vector<TheoremReport>& reports, ClaimId id) {
  for (const auto& r : reports)
    if (r.claim == id) return r;
  throw std::logic_error("claim missing from report list");
}

bool has_note(const TheoremReport& r, const std::string& note) {
  return std::find(r.notes.begin(), r.notes.end(), note) != r.notes.end();
}

/// 1x3 row vectors over Z_2 with (a,b,c)(d,e,f) = (ad, ae, af). Non-unital,
/// order 8, trivial center.
FiniteRing row_vector_ring() {
  StructureConstants sc{2, 3, std::vector<std::uint32_t>(27, 0)};
  for (std::uint32_t j = 0; j < 3; ++j) sc.c[(0 * 3 + j) * 3 + j] = 1;
  return ring_from_structure_constants(sc).with_label("row_vectors_3");
}

}  // namespace

TEST_CASE("CC theorem") {
  const auto m = check_cc_theorem(full_matrix_ring(2));
  CHECK(m.verdict == Verdict::Pass);
  CHECK(m.hypothesis_satisfied);
  CHECK(m.observed.at("clique_sizes") == "{2,2,2,2,2,2,2}");
  CHECK(m.observed.at("spectrum") == "{(-1)^7, 1^7}");
  CHECK(m.observed.at("genus") == "0");
  CHECK(m.observed.at("pairwise_intersection") == "Z(R)");

  const auto u3 = check_cc_theorem(upper_triangular_ring(3));
  CHECK(u3.verdict == Verdict::Pass);
  CHECK(u3.predicted.at("spectrum") == "{(-1)^20, 5^4}");
  CHECK(u3.predicted.at("genus") == "4");
  CHECK(has_note(u3, "proper_centralizer_sizes={9,9,9,9}"));

  CHECK_THROWS_AS((void)check_cc_theorem(cyclic_ring(6)), Error);
}

TEST_CASE("CC product corollary") {
  const auto z2 = check_cc_product_corollary(row_matrix_ring(2), cyclic_ring(2));
  CHECK(z2.verdict == Verdict::Pass);
  CHECK(z2.predicted.at("clique_sizes") == "{2,2,2}");
  CHECK(z2.predicted.at("spectrum") == "{(-1)^3, 1^3}");

  const auto z3 = check_cc_product_corollary(row_matrix_ring(2), cyclic_ring(3));
  CHECK(z3.verdict == Verdict::Pass);
  CHECK(z3.predicted.at("clique_sizes") == "{3,3,3}");
  CHECK(z3.predicted.at("spectrum") == "{(-1)^6, 2^3}");
  CHECK(has_note(z3, "product_order=12"));

  // With the trivial ring as A the corollary collapses onto the theorem.
  const auto u2 = upper_triangular_ring(2);
  const auto reduced = check_cc_product_corollary(u2, zero_ring(1));
  const auto direct = check_cc_theorem(u2);
  CHECK(reduced.verdict == Verdict::Pass);
  for (const char* key : {"clique_sizes", "spectrum", "genus"})
    CHECK(reduced.predicted.at(key) == direct.predicted.at(key));

  CHECK_THROWS_AS((void)check_cc_product_corollary(row_matrix_ring(2), row_matrix_ring(2)), Error);
}

TEST_CASE("quotient Zp x Zp theorem") {
  const auto u2 = check_quotient_pxp_theorem(upper_triangular_ring(2));
  CHECK(u2.verdict == Verdict::Pass);
  CHECK(u2.observed.at("spectrum") == "{(-1)^3, 1^3}");
  CHECK(u2.observed.at("genus") == "0");

  const auto r3 = check_quotient_pxp_theorem(row_matrix_ring(3));
  CHECK(r3.verdict == Verdict::Pass);
  CHECK(r3.predicted.at("spectrum") == "{(-1)^4, 1^4}");

  CHECK(check_quotient_pxp_theorem(full_matrix_ring(2)).verdict == Verdict::Vacuous);

  CHECK(quotient_pxp_spectrum(5, 5).str() == "{(-1)^114, 19^6}");
  CHECK(quotient_pxp_genus(5, 5) == 138);
}

TEST_CASE("planarity proposition") {
  const auto u2 = check_planarity_prop(upper_triangular_ring(2));
  CHECK(u2.verdict == Verdict::Pass);
  CHECK(u2.observed.at("planar") == "true");

  const auto u5 = check_planarity_prop(upper_triangular_ring(5));
  CHECK(u5.verdict == Verdict::Pass);
  CHECK(u5.predicted.at("planar") == "false");

  const auto u3 = check_planarity_prop(upper_triangular_ring(3));
  CHECK(u3.verdict == Verdict::Pass);
  CHECK(u3.observed.at("planar") == "false");
}

TEST_CASE("planarity proposition misses the p=5, |Z|=1 case") {
  // Six disjoint K_4: genus 0, yet the stated case list only admits p = 2, 3.
  const auto a = analyze_ring(row_matrix_ring(5));
  REQUIRE(a.genus);
  CHECK(a.genus->genus == 0);
  const auto r = check_planarity_prop(a);
  CHECK(r.predicted.at("planar") == "false");
  CHECK(r.observed.at("planar") == "true");
  CHECK(r.verdict == Verdict::Fail);
  // The order-p^2 proposition, which does list p = 5, agrees with brute force.
  CHECK(check_order_p2_prop(a).verdict == Verdict::Pass);
}

TEST_CASE("order p^2 and p^3 propositions") {
  const auto r5 = check_order_p2_prop(row_matrix_ring(5));
  CHECK(r5.verdict == Verdict::Pass);
  CHECK(r5.observed.at("spectrum") == "{(-1)^18, 3^6}");
  CHECK(r5.observed.at("planar") == "true");

  const auto r7 = check_order_p2_prop(row_matrix_ring(7));
  CHECK(r7.verdict == Verdict::Pass);
  CHECK(r7.observed.at("genus") == "8");
  CHECK(r7.observed.at("planar") == "false");

  const auto u2 = check_order_p3_prop(upper_triangular_ring(2));
  CHECK(u2.verdict == Verdict::Pass);
  CHECK(u2.observed.at("spectrum") == "{(-1)^3, 1^3}");
  CHECK(has_note(u2, "multiplicative_identity=present"));

  CHECK(check_order_p2_prop(upper_triangular_ring(2)).verdict == Verdict::Vacuous);
}

TEST_CASE("order p^3 proposition fails on a ring without identity") {
  // Counterexample kept on purpose: the statement needs a unit element.
  const auto ring = row_vector_ring();
  const auto a = analyze_ring(ring);
  CHECK(a.center.size() == 1);
  CHECK(a.quotient.str() == "[2,2,2]");
  const auto r = check_order_p3_prop(a);
  CHECK(r.hypothesis_satisfied);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(has_note(r, "multiplicative_identity=absent"));
  CHECK(r.observed.at("spectrum") == "{(-1)^2, 0^4, 2^1}");

  const auto all = run_all(a);
  CHECK(count_verdicts(all, Verdict::Fail) == 1);
}

TEST_CASE("n-centralizer propositions") {
  const auto r2 = check_n_centralizer_props(analyze_ring(row_matrix_ring(2)));
  REQUIRE(r2.size() == 3);
  CHECK(r2[0].claim == ClaimId::Cent4Prop);
  CHECK(r2[0].verdict == Verdict::Pass);
  CHECK(r2[0].observed.at("quotient") == "[2,2]");
  CHECK(r2[0].observed.at("spectrum") == "{0^3}");

  const auto u3 = check_n_centralizer_props(analyze_ring(upper_triangular_ring(3)));
  CHECK(u3[1].claim == ClaimId::Cent5Prop);
  CHECK(u3[1].verdict == Verdict::Pass);
  CHECK(u3[1].observed.at("quotient") == "[3,3]");

  const auto r5 = check_n_centralizer_props(analyze_ring(row_matrix_ring(5)));
  CHECK(r5[2].claim == ClaimId::CentPPlus2Prop);
  CHECK(r5[2].hypothesis_satisfied);
  CHECK(r5[2].verdict == Verdict::Pass);
}

TEST_CASE("commuting probability bound") {
  const auto r2 = check_pr_bound(row_matrix_ring(2));
  CHECK(r2.verdict == Verdict::Pass);
  CHECK(r2.observed.at("equality") == "true");

  const auto m2 = check_pr_bound(full_matrix_ring(2));
  CHECK(m2.verdict == Verdict::Pass);
  CHECK(m2.observed.at("equality") == "false");

  CHECK(check_pr_bound(cyclic_ring(5)).verdict == Verdict::Vacuous);
}

TEST_CASE("commuting probability propositions") {
  const auto u2 = check_pr_propositions(analyze_ring(upper_triangular_ring(2)));
  CHECK(u2[0].verdict == Verdict::Pass);
  CHECK(u2[0].observed.at("spectrum") == "{(-1)^3, 1^3}");
  CHECK(u2[0].observed.at("genus") == "0");

  const auto u3 = check_pr_propositions(analyze_ring(upper_triangular_ring(3)));
  CHECK(u3[0].verdict == Verdict::Vacuous);
  CHECK(u3[1].verdict == Verdict::Pass);

  const auto m2 = check_pr_propositions(analyze_ring(full_matrix_ring(2)));
  CHECK(m2[0].verdict == Verdict::Vacuous);
  CHECK(m2[1].verdict == Verdict::Vacuous);
}

TEST_CASE("run_all") {
  const auto r2 = run_all(row_matrix_ring(2));
  CHECK(r2.size() == 12);
  CHECK(count_verdicts(r2, Verdict::Fail) == 0);
  CHECK(count_verdicts(r2, Verdict::Pass) >= 5);

  const auto z = run_all(cyclic_ring(8));
  CHECK(count_verdicts(z, Verdict::Fail) == 0);
  CHECK(count_verdicts(z, Verdict::Pass) == 0);
  CHECK(has_note(find(z, ClaimId::CcTheorem), "vacuous: commutative-ring"));

  CHECK(count_verdicts(run_all(upper_triangular_ring(3)), Verdict::Fail) == 0);
}

TEST_CASE("checkers are deterministic") {
  const auto ring = upper_triangular_ring(3);
  CHECK(run_all(ring) == run_all(ring));
}

TEST_CASE("char-poly cap switches the spectral path") {
  CheckOptions tight;
  tight.char_poly_cap = 4;
  const auto a = analyze_ring(upper_triangular_ring(3), tight);
  CHECK_FALSE(a.char_poly_spectrum);
  REQUIRE(a.spectrum());
  const auto r = check_quotient_pxp_theorem(a);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(has_note(r, "spectral_path=decomposition (char_poly cap exceeded)"));
}

TEST_CASE("p=2, k=2 catalog: vacuity accounting and cross-checker coherence") {
  std::set<ClaimId> triggered;
  bool equality_branch = false;
  std::size_t rings = 0;
  BilinearRingEnumerator all(2, 2, CatalogFilter::All);
  while (auto e = all.next()) {
    ++rings;
    const auto a = analyze_ring(e->ring);
    const auto reports = run_all(a);
    CAPTURE(e->ring.label());
    CHECK(count_verdicts(reports, Verdict::Fail) == 0);
    for (const auto& r : reports)
      if (r.hypothesis_satisfied) triggered.insert(r.claim);

    const auto& q = find(reports, ClaimId::QuotientPxpTheorem);
    const auto& pr = find(reports, ClaimId::PrBoundTheorem);
    if (pr.hypothesis_satisfied && pr.observed.at("equality") == "true") equality_branch = true;
    if (q.hypothesis_satisfied && a.quotient.as_pxp() == smallest_prime_divisor(e->ring.order())) {
      REQUIRE(pr.hypothesis_satisfied);
      CHECK(pr.observed.at("equality") == "true");
    }
  }
  CHECK(rings == 28);
  CHECK(triggered.count(ClaimId::QuotientPxpTheorem));
  CHECK(triggered.count(ClaimId::Cent4Prop));
  CHECK(triggered.count(ClaimId::PrBoundTheorem));
  CHECK(triggered.count(ClaimId::Pr58Prop));
  CHECK(equality_branch);
}

TEST_CASE("p=2, k=3 catalog: every fail is the documented non-unital order-p^3 case") {
  BilinearRingEnumerator nc(2, 3, CatalogFilter::NonCommutative, true);
  std::size_t checked = 0, unital = 0;
  while (auto e = nc.next()) {
    ++checked;
    unital += e->ring.identity().has_value();
    for (const auto& r : run_all(e->ring)) {
      if (r.verdict != Verdict::Fail) continue;
      CAPTURE(e->ring.label());
      CHECK(r.claim == ClaimId::OrderP3Prop);
      CHECK_FALSE(e->ring.identity());
    }
    CHECK(e->invariants.centralizer_count != 2);
    CHECK(e->invariants.centralizer_count != 3);
  }
  CHECK(checked == 700);
  CHECK(unital == 84);
}
