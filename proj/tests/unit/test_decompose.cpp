#include <doctest.h>

#include "gbihom/error.hpp"
#include "test_util.hpp"

using namespace gbihom;
using namespace gbihom::testing;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

Subspace block(std::size_t b) {
  std::size_t o = 2 * b;
  return Subspace::span(F5, 4, {unit(F5, 4, o + 1, o + 1), unit(F5, 4, o + 1, o + 2), unit(F5, 4, o + 2, o + 1),
                                unit(F5, 4, o + 2, o + 2)});
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("zero parts") {
    auto A = pauli_m2(F5);
    Subspace id = Subspace::span(F5, 2, {Mat::identity(F5, 2)});
    CHECK(zero_part(A, {el({1, 0}), el({0, 1}), el({1, 1})}) == id);
    CHECK(zero_part(A, {}).is_zero());

    auto B = block_diagonal_pair(F5);
    CHECK(zero_part(B, {el({1, 0})}) == Subspace::span(F5, 4, {unit(F5, 4, 1, 1), unit(F5, 4, 2, 2)}));
    CHECK_THROWS_AS(zero_part(B, {el({1, 1})}), MissingComponent);
  }

  TEST_CASE("ideals") {
    auto A = pauli_m2(F5);
    GradedIdeal I = ideal_for_class(A, {el({0, 1}), el({1, 0}), el({1, 1})});
    CHECK(I.dim() == 4);
    CHECK(I.total == A.underlying());

    auto B = block_diagonal_pair(F5);
    GradedIdeal I1 = ideal_for_class(B, {el({1, 0})});
    CHECK(I1.total == block(0));
    CHECK(is_graded_ideal(B, block(1)).passed);

    auto T = twisted_pauli(F5);
    CHECK(ideal_for_class(T, support(T).sigma).total == T.underlying());
  }

  TEST_CASE("graded ideal verdicts") {
    auto B = block_diagonal_pair(F5);
    Verdict v = is_graded_ideal(B, Subspace::span(F5, 4, {unit(F5, 4, 1, 2)}));
    CHECK_FALSE(v.passed);
    CHECK_FALSE(v.witness.empty());
    CHECK_FALSE(is_graded_ideal(B, Subspace::span(F5, 4, {unit(F5, 4, 1, 3)})).passed);
    CHECK(is_graded_ideal(B, Subspace::zero(F5, 4)).passed);
    CHECK(is_graded_ideal(B, B.underlying()).passed);
  }

  TEST_CASE("centre") {
    CHECK(centre(pauli_m2(F5)).is_zero());
    CHECK(centre(corner_with_annihilator(F5)) == Subspace::span(F5, 4, {unit(F5, 4, 3, 4)}));
    auto L = nilpotent_line(F5);
    CHECK(centre(L) == L.underlying());
  }

  TEST_CASE("corner in M_3 with an idempotent") {
    // The idempotent E33 is not central, yet span{E33} is a graded ideal.
    auto P = pauli_matrices(F5);
    auto emb = [](const Mat& m) {
      Mat r(F5, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, j);
      return r;
    };
    auto A = make_algebra(F5, 3, {2, 2},
                          {{el({0, 0}), {emb(Mat::identity(F5, 2)), unit(F5, 3, 3, 3)}},
                           {el({1, 0}), {emb(P.sigma3)}},
                           {el({0, 1}), {emb(P.sigma1)}},
                           {el({1, 1}), {emb(P.sigma2)}}});
    CHECK(validate(A).all_passed());
    CHECK(centre(A).is_zero());
    CHECK(is_graded_ideal(A, Subspace::span(F5, 3, {unit(F5, 3, 3, 3)})).passed);
    CHECK_FALSE(m0_condition(A).passed);
    DecompositionReport r = decompose(A);
    CHECK(r.complement_U == Subspace::span(F5, 3, {unit(F5, 3, 3, 3)}));
    CHECK_FALSE(r.direct);
    CHECK(r.sum_is_direct);
  }

  TEST_CASE("orthogonality") {
    auto B = block_diagonal_pair(F5);
    auto P = classes(B);
    std::vector<GradedIdeal> ideals;
    for (const auto& c : P.classes) ideals.push_back(ideal_for_class(B, c));
    OrthogonalityResult o = orthogonality(B, ideals);
    CHECK(o.verdict.passed);
    CHECK(o.pairs_checked == 1);
    CHECK(orthogonality(pauli_m2(F5), {ideal_for_class(pauli_m2(F5), support(pauli_m2(F5)).sigma)}).pairs_checked == 0);

    GradedIdeal whole{B.component(el({0, 0})), {}, B.underlying()};
    CHECK_FALSE(orthogonality(B, {ideals[0], whole}).verdict.passed);
  }

  TEST_CASE("m0 condition") {
    CHECK(m0_condition(pauli_m2(F5)).passed);
    CHECK_FALSE(m0_condition(corner_with_annihilator(F5)).passed);
    CHECK(m0_condition(nilpotent_line(F5)).passed);
    CHECK_FALSE(m0_condition(diagonal_only(F5)).passed);
  }

  TEST_CASE("decomposition reports") {
    DecompositionReport p = decompose(pauli_m2(F5));
    CHECK(p.ideals.size() == 1);
    CHECK(p.complement_U.is_zero());
    CHECK(p.direct);

    DecompositionReport b = decompose(block_diagonal_pair(F5));
    REQUIRE(b.ideals.size() == 2);
    CHECK(b.ideals[0].total == block(1));
    CHECK(b.ideals[1].total == block(0));
    CHECK(b.complement_U.is_zero());
    CHECK(b.direct);
    CHECK(b.orthogonal.passed);

    DecompositionReport c = decompose(corner_with_annihilator(F5));
    CHECK(c.ideals.size() == 1);
    CHECK(c.ideals[0].dim() == 4);
    CHECK(c.complement_U == Subspace::span(F5, 4, {unit(F5, 4, 3, 4)}));
    CHECK(c.centre_dim == 1);
    CHECK_FALSE(c.m0.passed);
    CHECK_FALSE(c.direct);
  }

  TEST_CASE("catalog invariants") {
    for (const auto& entry : catalog()) {
      auto A = entry.build();
      DecompositionReport r = decompose(A);
      Subspace total = r.complement_U;
      std::size_t dims = r.complement_U.dim();
      for (std::size_t i = 0; i < r.ideals.size(); ++i) {
        total = sum(total, r.ideals[i].total);
        dims += r.ideals[i].dim();
        CHECK_MESSAGE(is_graded_ideal(A, r.ideals[i].total).passed, entry.name);
        CHECK_MESSAGE(r.zero_part_forms_agree[i], entry.name);
        CHECK(zero_part_alt(A, r.partition.classes[i]) == r.ideals[i].zero_part);
      }
      CHECK_MESSAGE(total == A.underlying(), entry.name);
      CHECK(r.sum_is_direct == (dims == A.underlying().dim()));
      if (r.direct) CHECK_MESSAGE(r.sum_is_direct, entry.name);
      CHECK_MESSAGE(r.orthogonal.passed, entry.name);
      CHECK(A.component(A.group().group().zero()).contains(r.complement_U));
    }
  }
}
