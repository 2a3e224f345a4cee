#include "gbihom/catalog.hpp"

#include <map>

#include "gbihom/error.hpp"

namespace gbihom {

namespace {

using Components = std::map<GroupElem, Subspace>;

GroupElem el(std::initializer_list<std::int64_t> c) { return GroupElem{std::vector<std::int64_t>(c)}; }

Subspace span_of(const FieldSpec& f, std::size_t n, std::initializer_list<Mat> ms) { return Subspace::span(f, n, ms); }

Mat e(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(f, n, i - 1, j - 1); }

BiHomGroup klein(std::vector<std::vector<std::int64_t>> alpha, std::vector<std::vector<std::int64_t>> beta) {
  GroupSpec g({2, 2});
  return BiHomGroup(g, GroupAuto(g, std::move(alpha)), GroupAuto(g, std::move(beta)));
}

const std::vector<std::vector<std::int64_t>> kId{{1, 0}, {0, 1}};
const std::vector<std::vector<std::int64_t>> kSwap{{0, 1}, {1, 0}};

Components pauli_components(const FieldSpec& f) {
  PauliMatrices p = pauli_matrices(f);
  Components c;
  c.emplace(el({0, 0}), span_of(f, 2, {Mat::identity(f, 2)}));
  c.emplace(el({1, 0}), span_of(f, 2, {p.sigma3}));
  c.emplace(el({0, 1}), span_of(f, 2, {p.sigma1}));
  c.emplace(el({1, 1}), span_of(f, 2, {p.sigma2}));
  return c;
}

Mat hadamard_like(const FieldSpec& f) { return Mat::from_ints(f, {{1, 1}, {1, -1}}); }

GradedBiHomAlgebra with_identity_twists(const FieldSpec& f, std::size_t n, BiHomGroup g, Components c) {
  return GradedBiHomAlgebra(f, n, std::move(g), std::move(c), TwistMap::identity(f, n), TwistMap::identity(f, n));
}

}  // namespace

PauliMatrices pauli_matrices(const FieldSpec& f) {
  Scalar i = primitive_root_of_unity(f, 4);
  PauliMatrices p;
  p.sigma1 = Mat::from_ints(f, {{0, 1}, {1, 0}});
  p.sigma3 = Mat::from_ints(f, {{1, 0}, {0, -1}});
  p.sigma2 = Mat(f, 2);
  p.sigma2(0, 1) = i;
  p.sigma2(1, 0) = -i;
  return p;
}

GradedBiHomAlgebra pauli_m2(const FieldSpec& f) {
  return with_identity_twists(f, 2, klein(kId, kId), pauli_components(f));
}

ClockShift clock_shift(const FieldSpec& f, std::size_t n) {
  ClockShift cs{primitive_root_of_unity(f, n), Mat(f, n), Mat(f, n)};
  for (std::size_t r = 0; r < n; ++r) {
    cs.xa(r, r) = cs.epsilon.pow(n - 1 - r);
    cs.xb(r, (r + 1) % n) = Scalar::one(f);
  }
  const Mat id = Mat::identity(f, n);
  if (!(cs.xa * cs.xb == cs.epsilon * (cs.xb * cs.xa))) throw RelationViolation("X_a X_b != e X_b X_a");
  if (!(cs.xa.pow(n) == id)) throw RelationViolation("X_a^n != I");
  if (!(cs.xb.pow(n) == id)) throw RelationViolation("X_b^n != I");
  return cs;
}

GradedBiHomAlgebra generalized_pauli(const FieldSpec& f, std::size_t n) {
  ClockShift cs = clock_shift(f, n);
  GroupSpec g({static_cast<std::int64_t>(n), static_cast<std::int64_t>(n)});
  Components c;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      c.emplace(el({static_cast<std::int64_t>(k), static_cast<std::int64_t>(l)}),
                span_of(f, n, {cs.xa.pow(k) * cs.xb.pow(l)}));
  return with_identity_twists(f, n, BiHomGroup::trivial_twist(g), std::move(c));
}

GradedBiHomAlgebra twisted_pauli(const FieldSpec& f) {
  return GradedBiHomAlgebra(f, 2, klein(kSwap, kId), pauli_components(f), TwistMap::conjugation(hadamard_like(f)),
                            TwistMap::identity(f, 2));
}

GradedBiHomAlgebra phi_twisted_pauli(const FieldSpec& f) {
  return GradedBiHomAlgebra(f, 2, klein(kId, kSwap), pauli_components(f), TwistMap::identity(f, 2),
                            TwistMap::conjugation(hadamard_like(f)));
}

GradedBiHomAlgebra block_diagonal_pair(const FieldSpec& f) {
  Components c;
  c.emplace(el({0, 0}), span_of(f, 4, {e(f, 4, 1, 1), e(f, 4, 2, 2), e(f, 4, 3, 3), e(f, 4, 4, 4)}));
  c.emplace(el({1, 0}), span_of(f, 4, {e(f, 4, 1, 2), e(f, 4, 2, 1)}));
  c.emplace(el({0, 1}), span_of(f, 4, {e(f, 4, 3, 4), e(f, 4, 4, 3)}));
  return with_identity_twists(f, 4, klein(kId, kId), std::move(c));
}

GradedBiHomAlgebra corner_with_annihilator(const FieldSpec& f) {
  PauliMatrices p = pauli_matrices(f);
  auto embed = [&](const Mat& m) {
    Mat out(f, 4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) out(r, s) = m(r, s);
    return out;
  };
  Components c;
  c.emplace(el({0, 0}), span_of(f, 4, {embed(Mat::identity(f, 2)), e(f, 4, 3, 4)}));
  c.emplace(el({1, 0}), span_of(f, 4, {embed(p.sigma3)}));
  c.emplace(el({0, 1}), span_of(f, 4, {embed(p.sigma1)}));
  c.emplace(el({1, 1}), span_of(f, 4, {embed(p.sigma2)}));
  return with_identity_twists(f, 4, klein(kId, kId), std::move(c));
}

GradedBiHomAlgebra upper_triangular(const FieldSpec& f) {
  Components c;
  c.emplace(el({0}), span_of(f, 3, {e(f, 3, 1, 3)}));
  c.emplace(el({1}), span_of(f, 3, {e(f, 3, 1, 2)}));
  c.emplace(el({2}), span_of(f, 3, {e(f, 3, 2, 3)}));
  return with_identity_twists(f, 3, BiHomGroup::trivial_twist(GroupSpec({3})), std::move(c));
}

GradedBiHomAlgebra nilpotent_line(const FieldSpec& f) {
  Components c;
  c.emplace(el({1}), span_of(f, 2, {e(f, 2, 1, 2)}));
  return with_identity_twists(f, 2, BiHomGroup::trivial_twist(GroupSpec({2})), std::move(c));
}

GradedBiHomAlgebra nilpotent_pair(const FieldSpec& f) {
  Components c;
  c.emplace(el({1, 0}), span_of(f, 4, {e(f, 4, 1, 2)}));
  c.emplace(el({0, 1}), span_of(f, 4, {e(f, 4, 3, 4)}));
  return with_identity_twists(f, 4, klein(kId, kId), std::move(c));
}

GradedBiHomAlgebra diagonal_only(const FieldSpec& f) {
  Components c;
  c.emplace(el({0}), span_of(f, 2, {e(f, 2, 1, 1), e(f, 2, 2, 2)}));
  return with_identity_twists(f, 2, BiHomGroup::trivial_twist(GroupSpec({2})), std::move(c));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const FieldSpec f5 = FieldSpec::prime(5), f7 = FieldSpec::prime(7), f13 = FieldSpec::prime(13);
    const std::string pub = "published example", syn = "synthetic";
    using C = Criterion;
    std::vector<CatalogEntry> v;
    v.push_back({"pauli_f5", "Pauli grading of M_2(F_5), i = 2", pub, [=] { return pauli_m2(f5); },
                 {2, 4, 3, 1, C::Yes, true}});
    v.push_back({"pauli_f13", "Pauli grading of M_2(F_13), i = 5", pub, [=] { return pauli_m2(f13); },
                 {2, 4, 3, 1, C::Yes, true}});
    v.push_back({"gen_pauli_f7_n3", "Z_3 x Z_3 clock-shift grading of M_3(F_7)", pub,
                 [=] { return generalized_pauli(f7, 3); }, {3, 9, 8, 1, C::Yes, true}});
    v.push_back({"gen_pauli_f5_n4", "Z_4 x Z_4 clock-shift grading of M_4(F_5)", pub,
                 [=] { return generalized_pauli(f5, 4); }, {4, 16, 15, 1, C::Yes, true}});
    v.push_back({"gen_pauli_f5_n2", "Z_2 x Z_2 clock-shift grading of M_2(F_5)", pub,
                 [=] { return generalized_pauli(f5, 2); }, {2, 4, 3, 1, C::Yes, true}});
    v.push_back({"twisted_pauli_f5", "Pauli components, psi = conjugation by [[1,1],[1,-1]], alpha = swap", syn,
                 [=] { return twisted_pauli(f5); }, {2, 4, 3, 1, C::Yes, true}});
    v.push_back({"phi_twisted_pauli_f5", "Pauli components, phi = conjugation by [[1,1],[1,-1]], beta = swap", syn,
                 [=] { return phi_twisted_pauli(f5); }, {2, 4, 3, 1, C::Yes, true}});
    v.push_back({"block_diagonal_pair_f5", "two M_2 blocks of M_4(F_5) graded apart", syn,
                 [=] { return block_diagonal_pair(f5); }, {4, 8, 2, 2, C::CriterionInapplicable, false}});
    v.push_back({"corner_with_annihilator_f5", "Pauli corner of M_4(F_5) plus the central nilpotent E34", syn,
                 [=] { return corner_with_annihilator(f5); }, {4, 5, 3, 1, C::CriterionInapplicable, false}});
    v.push_back({"upper_triangular_f5", "strictly upper triangular 3x3 over F_5, Z_3-graded", syn,
                 [=] { return upper_triangular(f5); }, {3, 3, 2, 1, C::CriterionInapplicable, false}});
    v.push_back({"nilpotent_line_f5", "span{E12} in M_2(F_5) at degree 1 of Z_2", syn,
                 [=] { return nilpotent_line(f5); }, {2, 1, 1, 1, C::No, false}});
    v.push_back({"nilpotent_pair_f5", "E12 and E34 in M_4(F_5) at (1,0) and (0,1)", syn,
                 [=] { return nilpotent_pair(f5); }, {4, 2, 2, 2, C::No, false}});
    v.push_back({"diagonal_only_f5", "diagonal 2x2 matrices over F_5 in degree 0 of Z_2", syn,
                 [=] { return diagonal_only(f5); }, {2, 2, 0, 0, C::No, false}});
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw InvalidInput("unknown catalog entry '" + name + "'");
}

}  // namespace gbihom
