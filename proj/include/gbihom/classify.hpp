#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbihom/decompose.hpp"

namespace gbihom {

/// M_g * M_h = M_{alpha(g)+beta(h)} for all g, h in the support whose sum
/// lies in the support or is zero.
Verdict sigma_multiplicative(const GradedBiHomAlgebra& A);

/// Every support component is one-dimensional.
Verdict maximal_length(const GradedBiHomAlgebra& A);

/// For a graded ideal J inside M_0 of an algebra satisfying the m0
/// condition, checks J lies in the centre. Throws HypothesisUnmet when a
/// hypothesis fails.
Verdict central_zero_ideal_check(const GradedBiHomAlgebra& A, const Subspace& J);

enum class Criterion { Yes, No, CriterionInapplicable };
std::string to_string(Criterion c);

struct OracleResult {
  std::vector<Subspace> ideals;  // sorted by dimension, then basis
  std::size_t candidates = 0;
  std::size_t algebra_dim = 0;
  /// Only 0 and A itself.
  bool only_trivial() const;
};

struct SimplicityReport {
  Verdict sigma_multiplicative;
  Verdict maximal_length;
  Verdict centre_zero;
  Verdict m0_generated;
  Verdict all_connected;
  Verdict product_nonzero;  // A * A != 0
  Criterion graded_simple = Criterion::CriterionInapplicable;
  std::optional<OracleResult> oracle;
  std::string oracle_skipped;  // reason when the oracle was requested but refused
  /// The criterion when applicable, otherwise the oracle when it ran.
  std::optional<bool> resolved;
  std::string resolved_by;  // "criterion", "oracle" or empty
};

struct SimplicityOptions {
  bool run_oracle = false;
  std::size_t dim_cap = 10;
  std::size_t max_candidates = 100000;
};

SimplicityReport graded_simple(const GradedBiHomAlgebra& A, const SimplicityOptions& opts = {});

struct SimpleIdeal {
  GradedIdeal ideal;
  GradedBiHomAlgebra algebra;  // the ideal as an algebra in its own right
  SimplicityReport report;
};

/// Decomposes A under the hypotheses of the direct-sum theorem (each checked,
/// HypothesisUnmet otherwise) and certifies every ideal graded simple with a
/// single connection class; TheoremViolation when that fails.
std::vector<SimpleIdeal> decompose_simple(const GradedBiHomAlgebra& A, const SimplicityOptions& opts = {});

/// Number of subspaces of K^d for K = F_p (nullopt on overflow or over Q with d > 1).
std::optional<std::size_t> subspace_count(const FieldSpec& field, std::size_t d);

/// Every subspace of the span of the given basis, by dimension.
std::vector<Subspace> all_subspaces(const Subspace& space);

/// Every graded ideal of A, by exhaustive enumeration of products of
/// per-component subspaces. Throws TooLarge outside the enumerable range:
/// total dim <= dim_cap over F_p with p <= 7, or maximal length with
/// dim M_0 <= 2; in both cases at most max_candidates candidates.
OracleResult brute_force_graded_ideals(const GradedBiHomAlgebra& A, std::size_t dim_cap = 10,
                                       std::size_t max_candidates = 100000);

}  // namespace gbihom
