#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gbihom/algebra.hpp"
#include "gbihom/connect.hpp"

namespace gbihom {

/// I_[g] = I_{0,[g]} + sum of the class components.
struct GradedIdeal {
  Subspace zero_part;
  std::vector<GroupElem> class_support;
  Subspace total;

  std::size_t dim() const { return total.dim(); }
};

/// Span of M_{beta(g')} * M_{-alpha(g')} over g' in the class. Throws
/// MissingComponent if either factor has no component.
Subspace zero_part(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& cls);

/// Span of M_{g'} * M_{-beta^-1 alpha(g')} over g' in the given degrees.
Subspace zero_part_alt(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& degrees);

struct Verdict {
  bool passed = true;
  std::string witness;  // empty on pass
};

/// Checks the graded-ideal conditions for J inside A: J in A, J * A and
/// A * J in J, psi(J) and phi(J) in J, J the sum of its homogeneous parts.
Verdict is_graded_ideal(const GradedBiHomAlgebra& A, const Subspace& J);

/// Builds I_[g] and verifies it is a graded ideal closed under * whose
/// homogeneous parts are the stored pieces. Throws TheoremViolation otherwise.
GradedIdeal ideal_for_class(const GradedBiHomAlgebra& A, const std::vector<GroupElem>& cls);

/// {v in A : v * A + A * v = 0}.
Subspace centre(const GradedBiHomAlgebra& A);

struct OrthogonalityResult {
  Verdict verdict;
  std::size_t pairs_checked = 0;  // unordered pairs, each checked in both orders
};

/// I * J = 0 for every pair of distinct ideals.
OrthogonalityResult orthogonality(const GradedBiHomAlgebra& A, const std::vector<GradedIdeal>& ideals);

/// M_0 equals the sum over the support of M_g * M_{-beta^-1 alpha(g)}.
Verdict m0_condition(const GradedBiHomAlgebra& A);

struct DecompositionReport {
  ClassPartition partition;
  std::vector<GradedIdeal> ideals;  // one per class, in class order
  Subspace complement_U;
  Subspace centre;
  std::size_t centre_dim = 0;
  Verdict m0;
  Verdict intersections_zero;
  /// centre zero, m0 condition and trivial pairwise intersections.
  bool direct = false;
  /// dim U + sum of ideal dims = dim A.
  bool sum_is_direct = false;
  std::size_t orthogonal_pairs_checked = 0;
  Verdict orthogonal;
  /// Per class: whether the two generator forms of the degree-zero part agree.
  std::vector<bool> zero_part_forms_agree;
};

/// Builds every ideal, the complement U of their degree-zero parts in M_0,
/// and all verdicts. Throws TheoremViolation if U plus the ideals does not
/// reconstruct A.
DecompositionReport decompose(const GradedBiHomAlgebra& A);
DecompositionReport decompose(const GradedBiHomAlgebra& A, const ClassPartition& partition);

}  // namespace gbihom
