#include <doctest.h>

#include "gbihom/error.hpp"
#include "test_util.hpp"

using namespace gbihom;
using namespace gbihom::testing;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("hypotheses") {
    CHECK(sigma_multiplicative(pauli_m2(F5)).passed);
    CHECK(maximal_length(pauli_m2(F5)).passed);
    CHECK(sigma_multiplicative(generalized_pauli(FieldSpec::prime(7), 3)).passed);
    CHECK(maximal_length(generalized_pauli(FieldSpec::prime(7), 3)).passed);
    Verdict ml = maximal_length(block_diagonal_pair(F5));
    CHECK_FALSE(ml.passed);
    CHECK(ml.witness.find("(0,1)") != std::string::npos);
    CHECK(maximal_length(diagonal_only(F5)).passed);
    CHECK_FALSE(sigma_multiplicative(corner_with_annihilator(F5)).passed);
  }

  TEST_CASE("criterion verdicts") {
    SimplicityReport p = graded_simple(pauli_m2(F5));
    CHECK(p.graded_simple == Criterion::Yes);
    CHECK(p.resolved == std::optional<bool>(true));
    CHECK(p.resolved_by == "criterion");

    SimplicityReport l = graded_simple(nilpotent_line(F5));
    CHECK(l.graded_simple == Criterion::No);
    CHECK_FALSE(l.centre_zero.passed);

    SimplicityReport np = graded_simple(nilpotent_pair(F5));
    CHECK(np.graded_simple == Criterion::No);
    CHECK_FALSE(np.all_connected.passed);

    SimplicityReport d = graded_simple(diagonal_only(F5));
    CHECK(d.graded_simple == Criterion::No);
    CHECK_FALSE(d.m0_generated.passed);

    SimplicityReport b = graded_simple(block_diagonal_pair(F5));
    CHECK(b.graded_simple == Criterion::CriterionInapplicable);
    CHECK_FALSE(b.resolved.has_value());
    CHECK(to_string(Criterion::CriterionInapplicable) == "CriterionInapplicable");
  }

  TEST_CASE("oracle resolves inapplicable criterion") {
    SimplicityReport c = graded_simple(corner_with_annihilator(F5), {.run_oracle = true});
    CHECK(c.graded_simple == Criterion::CriterionInapplicable);
    REQUIRE(c.oracle.has_value());
    CHECK(c.resolved == std::optional<bool>(false));
    CHECK(c.resolved_by == "oracle");
    bool found = false;
    for (const auto& J : c.oracle->ideals) found = found || J == Subspace::span(F5, 4, {unit(F5, 4, 3, 4)});
    CHECK(found);

    SimplicityReport t = graded_simple(block_diagonal_pair(F5), {.run_oracle = true, .max_candidates = 10});
    CHECK_FALSE(t.oracle.has_value());
    CHECK_FALSE(t.oracle_skipped.empty());
  }

  TEST_CASE("oracle on pauli") {
    OracleResult r = brute_force_graded_ideals(pauli_m2(F5));
    CHECK(r.candidates == 16);
    REQUIRE(r.ideals.size() == 2);
    CHECK(r.ideals[0].is_zero());
    CHECK(r.ideals[1].dim() == 4);
    CHECK(r.only_trivial());
  }

  TEST_CASE("oracle preconditions") {
    CHECK_THROWS_AS(brute_force_graded_ideals(block_diagonal_pair(F5), 3), TooLarge);
    CHECK_NOTHROW(brute_force_graded_ideals(pauli_m2(FieldSpec::prime(13))));  // maximal length, dim M_0 = 1
    CHECK_THROWS_AS(brute_force_graded_ideals(block_diagonal_pair(F5), 10, 1000), TooLarge);
    CHECK_THROWS_AS(brute_force_graded_ideals(block_diagonal_pair(FieldSpec::prime(11))), TooLarge);
  }

  TEST_CASE("subspace counting") {
    std::vector<std::size_t> f5{1, 2, 8, 64, 1120};
    for (std::size_t d = 0; d < f5.size(); ++d) CHECK(subspace_count(F5, d) == f5[d]);
    CHECK(subspace_count(FieldSpec::prime(7), 2) == 10u);
    CHECK(subspace_count(FieldSpec::prime(2), 3) == 16u);
    CHECK_FALSE(subspace_count(FieldSpec::rationals(), 2).has_value());
    const FieldSpec F2 = FieldSpec::prime(2);
    Subspace plane = Subspace::span(F2, 2, {Mat::identity(F2, 2), Mat::unit(F2, 2, 0, 1)});
    CHECK(all_subspaces(plane).size() == 5);
  }

  TEST_CASE("criterion agrees with the oracle on the catalog") {
    for (const auto& entry : catalog()) {
      if (entry.name == "gen_pauli_f5_n4") continue;  // covered by the acceptance run
      SimplicityReport r = graded_simple(entry.build(), {.run_oracle = true});
      REQUIRE_MESSAGE(r.oracle.has_value(), entry.name);
      if (r.graded_simple != Criterion::CriterionInapplicable)
        CHECK_MESSAGE((r.graded_simple == Criterion::Yes) == (r.oracle->only_trivial() && r.product_nonzero.passed),
                      entry.name);
      CHECK_MESSAGE(r.resolved == std::optional<bool>(entry.expected.graded_simple), entry.name);
      CHECK_MESSAGE(r.graded_simple == entry.expected.criterion, entry.name);
    }
  }

  TEST_CASE("oracle ideals are graded and closed") {
    for (const char* name : {"corner_with_annihilator_f5", "upper_triangular_f5", "nilpotent_pair_f5", "pauli_f5"}) {
      auto A = catalog_entry(name).build();
      for (const Subspace& J : brute_force_graded_ideals(A).ideals) {
        CHECK(is_graded_subspace(A, J));
        CHECK(is_graded_ideal(A, J).passed);
      }
    }
  }

  TEST_CASE("empty support counterexample") {
    // span{I} trivially graded: simple by definition, yet M_0 is not an empty sum.
    auto A = make_algebra(F5, 2, {2}, {{el({0}), {Mat::identity(F5, 2)}}});
    SimplicityReport r = graded_simple(A, {.run_oracle = true});
    CHECK(r.graded_simple == Criterion::No);
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle->only_trivial());
  }

  TEST_CASE("central ideals inside the zero component") {
    auto U = upper_triangular(F5);
    CHECK(m0_condition(U).passed);
    CHECK(central_zero_ideal_check(U, Subspace::span(F5, 3, {unit(F5, 3, 1, 3)})).passed);
    CHECK(central_zero_ideal_check(U, Subspace::zero(F5, 3)).passed);
    CHECK_THROWS_AS(central_zero_ideal_check(corner_with_annihilator(F5), Subspace::span(F5, 4, {unit(F5, 4, 3, 4)})),
                    HypothesisUnmet);
    CHECK_THROWS_AS(central_zero_ideal_check(U, Subspace::span(F5, 3, {unit(F5, 3, 1, 2)})), HypothesisUnmet);
  }

  TEST_CASE("simple decomposition") {
    for (const char* name : {"gen_pauli_f7_n3", "pauli_f5", "twisted_pauli_f5"}) {
      auto parts = decompose_simple(catalog_entry(name).build());
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].report.graded_simple == Criterion::Yes);
      CHECK(classes(parts[0].algebra).classes.size() == 1);
    }
    CHECK_THROWS_AS(decompose_simple(block_diagonal_pair(F5)), HypothesisUnmet);
    CHECK_THROWS_AS(decompose_simple(nilpotent_line(F5)), HypothesisUnmet);
  }
}
