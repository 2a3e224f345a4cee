#include "gbihom/classify.hpp"

#include <algorithm>

#include "gbihom/error.hpp"

namespace gbihom {

Verdict sigma_multiplicative(const GradedBiHomAlgebra& A) {
  Support S = support(A);
  const auto& G = A.group();
  const GroupElem zero = G.group().zero();
  for (const auto& g : S.sigma)
    for (const auto& h : S.sigma) {
      GroupElem t = bihom_sum(G, g, h);
      if (!(t == zero) && !S.contains(t)) continue;
      Subspace p = product_span(A.component(g), A.component(h), A.star_product());
      if (!(p == A.component(t)))
        return {false, "M" + g.to_string() + " * M" + h.to_string() + " has dim " + std::to_string(p.dim()) +
                           " but M" + t.to_string() + " has dim " + std::to_string(A.component(t).dim())};
    }
  return {};
}

Verdict maximal_length(const GradedBiHomAlgebra& A) {
  for (const auto& g : support(A).sigma)
    if (A.component(g).dim() != 1)
      return {false, "M" + g.to_string() + " has dim " + std::to_string(A.component(g).dim())};
  return {};
}

Verdict central_zero_ideal_check(const GradedBiHomAlgebra& A, const Subspace& J) {
  if (auto m0 = m0_condition(A); !m0.passed) throw HypothesisUnmet("m0 condition fails: " + m0.witness);
  if (auto gi = is_graded_ideal(A, J); !gi.passed) throw HypothesisUnmet("not a graded ideal: " + gi.witness);
  if (!A.component(A.group().group().zero()).contains(J)) throw HypothesisUnmet("ideal is not inside M_0");
  Subspace z = centre(A);
  if (!z.contains(J)) return {false, "ideal of dim " + std::to_string(J.dim()) + " is not central"};
  return {};
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::Yes: return "Yes";
    case Criterion::No: return "No";
    case Criterion::CriterionInapplicable: return "CriterionInapplicable";
  }
  return "?";
}

bool OracleResult::only_trivial() const {
  return std::all_of(ideals.begin(), ideals.end(),
                     [&](const Subspace& I) { return I.is_zero() || I.dim() == algebra_dim; });
}

SimplicityReport graded_simple(const GradedBiHomAlgebra& A, const SimplicityOptions& opts) {
  SimplicityReport r;
  r.sigma_multiplicative = sigma_multiplicative(A);
  r.maximal_length = maximal_length(A);
  Subspace z = centre(A);
  if (!z.is_zero()) r.centre_zero = {false, "centre has dim " + std::to_string(z.dim())};
  r.m0_generated = m0_condition(A);
  try {
    ClassPartition p = classes(A);
    if (p.classes.size() > 1)
      r.all_connected = {false, std::to_string(p.classes.size()) + " classes; " + p.classes[0].front().to_string() +
                                    " is not connected to " + p.classes[1].front().to_string()};
  } catch (const AsymmetricSupport& e) {
    r.all_connected = {false, e.what()};
  }
  if (product_span(A.underlying(), A.underlying(), A.star_product()).is_zero())
    r.product_nonzero = {false, "A * A = 0"};

  if (r.sigma_multiplicative.passed && r.maximal_length.passed) {
    bool yes = r.centre_zero.passed && r.m0_generated.passed && r.all_connected.passed && r.product_nonzero.passed;
    r.graded_simple = yes ? Criterion::Yes : Criterion::No;
    r.resolved = yes;
    r.resolved_by = "criterion";
  }
  if (opts.run_oracle) {
    try {
      r.oracle = brute_force_graded_ideals(A, opts.dim_cap, opts.max_candidates);
      if (!r.resolved) {
        r.resolved = r.oracle->only_trivial() && r.product_nonzero.passed;
        r.resolved_by = "oracle";
      }
    } catch (const TooLarge& e) {
      r.oracle_skipped = e.what();
    }
  }
  return r;
}

std::vector<SimpleIdeal> decompose_simple(const GradedBiHomAlgebra& A, const SimplicityOptions& opts) {
  if (auto v = sigma_multiplicative(A); !v.passed) throw HypothesisUnmet("not Sigma-multiplicative: " + v.witness);
  if (auto v = maximal_length(A); !v.passed) throw HypothesisUnmet("not of maximal length: " + v.witness);
  if (Subspace z = centre(A); !z.is_zero()) throw HypothesisUnmet("centre has dim " + std::to_string(z.dim()));
  if (auto v = m0_condition(A); !v.passed) throw HypothesisUnmet("m0 condition fails: " + v.witness);
  DecompositionReport d = decompose(A);
  if (!d.direct) throw TheoremViolation("decomposition is not direct");
  std::vector<SimpleIdeal> out;
  for (const auto& I : d.ideals) {
    GradedBiHomAlgebra sub = restrict_to(A, I.total);
    SimplicityReport rep = graded_simple(sub, opts);
    std::string where = "ideal of class starting " + I.class_support.front().to_string();
    if (rep.graded_simple != Criterion::Yes)
      throw TheoremViolation(where + " is not certified graded simple (" + to_string(rep.graded_simple) + ")");
    if (!(support(sub).sigma == I.class_support)) throw TheoremViolation(where + " has a different support");
    if (classes(sub).classes.size() != 1) throw TheoremViolation(where + " splits into several classes");
    out.push_back({I, std::move(sub), std::move(rep)});
  }
  return out;
}

std::optional<std::size_t> subspace_count(const FieldSpec& field, std::size_t d) {
  if (d <= 1) return d + 1;
  if (!field.is_prime_field()) return std::nullopt;
  // Gaussian binomials via the recurrence [d,k] = [d-1,k-1] + p^k [d-1,k].
  const unsigned __int128 p = field.modulus;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 62;
  std::vector<unsigned __int128> row{1};
  for (std::size_t m = 1; m <= d; ++m) {
    std::vector<unsigned __int128> next(m + 1, 0);
    unsigned __int128 pk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      if (k > 0) next[k] += row[k - 1];
      if (k < m) next[k] += pk * row[k];
      if (next[k] > cap) return std::nullopt;
      if (k < m) {
        pk *= p;
        if (pk > cap) pk = cap;
      }
    }
    row = std::move(next);
  }
  unsigned __int128 total = 0;
  for (auto v : row) total += v;
  if (total > cap) return std::nullopt;
  return static_cast<std::size_t>(total);
}

std::vector<Subspace> all_subspaces(const Subspace& space) {
  const FieldSpec& field = space.field();
  const auto basis = space.basis();
  const std::size_t d = basis.size();
  std::vector<Subspace> out{Subspace::zero(field, space.n())};
  if (d == 0) return out;
  if (d == 1 || !field.is_prime_field()) {
    if (d > 1) throw TooLarge("infinitely many subspaces over Q");
    out.push_back(space);
    return out;
  }
  const std::uint64_t p = field.modulus;
  // Enumerate reduced echelon coefficient matrices: choose pivots, then fill
  // the free entries right of each pivot in non-pivot columns.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < d; ++c)
      if (mask >> c & 1) piv.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    std::vector<std::uint64_t> digits(free.size(), 0);
    while (true) {
      std::vector<Mat> gens;
      for (std::size_t r = 0; r < piv.size(); ++r) {
        Mat v = basis[piv[r]];
        for (std::size_t f = 0; f < free.size(); ++f)
          if (free[f].first == r && digits[f] != 0)
            v += Scalar(field, static_cast<long>(digits[f])) * basis[free[f].second];
        gens.push_back(std::move(v));
      }
      out.push_back(Subspace::span(field, space.n(), gens));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
      if (f == digits.size()) break;
    }
  }
  return out;
}

OracleResult brute_force_graded_ideals(const GradedBiHomAlgebra& A, std::size_t dim_cap,
                                       std::size_t max_candidates) {
  const FieldSpec& field = A.field();
  const std::size_t dim = A.underlying().dim();
  const Subspace& m0 = A.component(A.group().group().zero());
  bool small = field.is_prime_field() && field.modulus <= 7 && dim <= dim_cap;
  bool thin = maximal_length(A).passed && m0.dim() <= 2;
  if (!small && !thin)
    throw TooLarge("algebra of dim " + std::to_string(dim) + " over " + field.name() +
                   " is outside the enumerable range");
  std::size_t count = 1;
  for (const auto& [g, comp] : A.components()) {
    auto c = subspace_count(field, comp.dim());
    if (!c || *c > max_candidates || count > max_candidates / *c)
      throw TooLarge("more than " + std::to_string(max_candidates) + " candidate subspaces");
    count *= *c;
  }

  std::vector<std::vector<Subspace>> choices;
  for (const auto& [g, comp] : A.components()) choices.push_back(all_subspaces(comp));
  OracleResult r;
  r.algebra_dim = dim;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    ++r.candidates;
    Subspace cand = Subspace::zero(field, A.n());
    for (std::size_t c = 0; c < choices.size(); ++c) cand = sum(cand, choices[c][pick[c]]);
    if (is_graded_ideal(A, cand).passed) r.ideals.push_back(std::move(cand));
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  std::sort(r.ideals.begin(), r.ideals.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.rows().size(); ++i)
      for (std::size_t j = 0; j < a.rows()[i].size(); ++j) {
        const auto sa = a.rows()[i][j].to_string(), sb = b.rows()[i][j].to_string();
        if (sa != sb) return sa < sb;
      }
    return false;
  });
  return r;
}

}  // namespace gbihom
