#include "gbihom/decompose.hpp"

#include <algorithm>

#include "gbihom/error.hpp"

namespace gbihom {

namespace {

const Subspace& require_component(const GradedBiHomAlgebra& A, const GroupElem& d, const GroupElem& from) {
  const Subspace& c = A.component(d);
  if (c.is_zero())
    throw MissingComponent("M" + d.to_string() + " is zero although " + from.to_string() + " is in the support");
  return c;
}

std::string first_outside(const std::vector<Mat>& vs, const Subspace& target) {
  for (const auto& v : vs)
    if (!target.contains(v)) return v.to_string();
  return {};
}

}  // namespace

Subspace zero_part(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& cls) {
  const auto& G = A.group();
  const auto& grp = G.group();
  Subspace acc = Subspace::zero(A.field(), A.n());
  for (const auto& g : cls) {
    const Subspace& left = require_component(A, G.beta_of(g), g);
    const Subspace& right = require_component(A, grp.neg(G.alpha_of(g)), g);
    acc = sum(acc, product_span(left, right, A.star_product()));
  }
  return acc;
}

Subspace zero_part_alt(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& degrees) {
  const auto& G = A.group();
  const auto& grp = G.group();
  Subspace acc = Subspace::zero(A.field(), A.n());
  for (const auto& g : degrees) {
    GroupElem partner = grp.neg(G.beta().apply_inverse(G.alpha_of(g)));
    const Subspace& right = A.component(partner);
    if (right.is_zero()) continue;
    acc = sum(acc, product_span(A.component(g), right, A.star_product()));
  }
  return acc;
}

Verdict is_graded_ideal(const GradedBiHomAlgebra& A, const Subspace& J) {
  if (!A.underlying().contains(J)) return {false, "subspace is not contained in the algebra"};
  const auto jb = J.basis();
  for (const auto& j : jb) {
    if (!J.contains(A.psi().apply(j))) return {false, "psi(" + j.to_string() + ") leaves the subspace"};
    if (!J.contains(A.phi().apply(j))) return {false, "phi(" + j.to_string() + ") leaves the subspace"};
  }
  for (const auto& h : A.homogeneous_basis())
    for (const auto& j : jb) {
      if (!J.contains(A.star_unchecked(j, h.value)))
        return {false, j.to_string() + " * " + h.label() + " leaves the subspace"};
      if (!J.contains(A.star_unchecked(h.value, j)))
        return {false, h.label() + " * " + j.to_string() + " leaves the subspace"};
    }
  if (!is_graded_subspace(A, J)) return {false, "subspace is not the sum of its homogeneous parts"};
  return {};
}

GradedIdeal ideal_for_class(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& cls) {
  GradedIdeal I;
  I.class_support = cls;
  I.zero_part = zero_part(A, cls);
  const GroupElem zero = A.group().group().zero();
  const Subspace& m0 = A.component(zero);
  if (!m0.contains(I.zero_part))
    throw TheoremViolation("degree-zero part is not contained in M" + zero.to_string() + ": " +
                           first_outside(I.zero_part.basis(), m0));
  I.total = I.zero_part;
  std::size_t dims = I.zero_part.dim();
  for (const auto& g : cls) {
    I.total = sum(I.total, A.component(g));
    dims += A.component(g).dim();
  }
  if (dims != I.total.dim())
    throw TheoremViolation("ideal pieces are not independent: " + std::to_string(dims) + " != " +
                           std::to_string(I.total.dim()));
  Verdict v = is_graded_ideal(A, I.total);
  if (!v.passed) throw TheoremViolation("ideal of class starting " + cls.front().to_string() + ": " + v.witness);
  for (const auto& [g, comp] : A.components()) {
    Subspace expected = Subspace::zero(A.field(), A.n());
    if (g == zero) expected = I.zero_part;
    else if (std::find(cls.begin(), cls.end(), g) != cls.end()) expected = comp;
    if (!(intersect(I.total, comp) == expected))
      throw TheoremViolation("ideal meets M" + g.to_string() + " in an unexpected subspace");
  }
  return I;
}

Subspace centre(const GradedBiHomAlgebra& A) {
  std::vector<LinearMap> maps;
  for (const auto& h : A.homogeneous_basis()) {
    const Mat b = h.value;
    maps.push_back([&A, b](const Mat& v) { return A.star_unchecked(v, b); });
    maps.push_back([&A, b](const Mat& v) { return A.star_unchecked(b, v); });
  }
  return annihilator_kernel(A.underlying(), maps);
}

OrthogonalityResult orthogonality(const GradedBiHomAlgebra& A, const std::vector<GradedIdeal>& ideals) {
  auto label = [&](std::size_t k) {
    return ideals[k].class_support.empty() ? "I#" + std::to_string(k)
                                           : "I[" + ideals[k].class_support.front().to_string() + "]";
  };
  OrthogonalityResult r;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      ++r.pairs_checked;
      if (!r.verdict.passed) continue;
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        if (!product_span(ideals[a].total, ideals[b].total, A.star_product()).is_zero()) {
          r.verdict = {false, label(a) + " * " + label(b) + " != 0"};
          break;
        }
      }
    }
  return r;
}

Verdict m0_condition(const GradedBiHomAlgebra& A) {
  Support S = support(A);
  Subspace generated = zero_part_alt(A, S.sigma);
  const Subspace& m0 = A.component(A.group().group().zero());
  if (generated == m0) return {};
  if (!m0.contains(generated)) return {false, "products leave M_0: " + first_outside(generated.basis(), m0)};
  return {false, "M_0 has dim " + std::to_string(m0.dim()) + " but the products span dim " +
                     std::to_string(generated.dim()) + "; not generated: " + first_outside(m0.basis(), generated)};
}

DecompositionReport decompose(const GradedBiHomAlgebra& A) { return decompose(A, classes(A)); }

DecompositionReport decompose(const GradedBiHomAlgebra& A, const ClassPartition& partition) {
  DecompositionReport r;
  r.partition = partition;
  const Subspace& m0 = A.component(A.group().group().zero());
  Subspace zero_parts = Subspace::zero(A.field(), A.n());
  for (const auto& cls : partition.classes) {
    r.ideals.push_back(ideal_for_class(A, cls));
    zero_parts = sum(zero_parts, r.ideals.back().zero_part);
    r.zero_part_forms_agree.push_back(r.ideals.back().zero_part == zero_part_alt(A, cls));
  }
  r.complement_U = complement(zero_parts, m0);

  Subspace total = r.complement_U;
  std::size_t dims = r.complement_U.dim();
  for (const auto& I : r.ideals) {
    total = sum(total, I.total);
    dims += I.dim();
  }
  if (!(total == A.underlying()))
    throw TheoremViolation("U plus the ideals has dim " + std::to_string(total.dim()) + ", algebra has dim " +
                           std::to_string(A.underlying().dim()));
  r.sum_is_direct = dims == A.underlying().dim();

  r.centre = centre(A);
  r.centre_dim = r.centre.dim();
  r.m0 = m0_condition(A);
  for (std::size_t i = 0; i < r.ideals.size() && r.intersections_zero.passed; ++i)
    for (std::size_t j = i + 1; j < r.ideals.size(); ++j) {
      Subspace meet = intersect(r.ideals[i].total, r.ideals[j].total);
      if (!meet.is_zero()) {
        r.intersections_zero = {false, "I[" + r.ideals[i].class_support.front().to_string() + "] and I[" +
                                           r.ideals[j].class_support.front().to_string() + "] meet in dim " +
                                           std::to_string(meet.dim())};
        break;
      }
    }
  r.direct = r.centre.is_zero() && r.m0.passed && r.intersections_zero.passed;
  auto orth = orthogonality(A, r.ideals);
  r.orthogonal = orth.verdict;
  r.orthogonal_pairs_checked = orth.pairs_checked;
  return r;
}

}  // namespace gbihom
