#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbihom/algebra.hpp"

namespace gbihom {

/// A connection {g_1, ..., g_k} from g to g' with the data needed to check it:
/// g_1 = alpha^i beta^j (g), partial sums s_2 = alpha(g_1) + beta(g_2),
/// s_{t+1} = alpha(s_t) + beta(g_{t+1}), and the final sum (s_k, or g_1 when
/// k = 1) equal to sign * alpha^m beta^n (g').
struct ConnectionWitness {
  GroupElem from;
  GroupElem to;
  std::vector<GroupElem> chain;
  std::pair<std::uint64_t, std::uint64_t> entry_exponents{0, 0};
  int exit_sign = +1;
  std::pair<std::uint64_t, std::uint64_t> exit_exponents{0, 0};
  std::vector<GroupElem> partial_sums;  // s_2, ..., s_k

  std::size_t length() const { return chain.size(); }
  const GroupElem& final_sum() const { return partial_sums.empty() ? chain.front() : partial_sums.back(); }
};

/// Minimal-length connection from g to g', ties broken lexicographically on
/// the chain; nullopt when none exists. Throws NotInSupport unless g, g' are
/// in the support and AsymmetricSupport unless the support is symmetric.
std::optional<ConnectionWitness> connected(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp);

/// Same search with the start set pinned to a single element of the orbit of g.
/// Throws InvalidInput if entry is not of the form alpha^i beta^j (g).
std::optional<ConnectionWitness> connected_with_entry(const GradedBiHomAlgebra& A, const GroupElem& g,
                                                      const GroupElem& gp, const GroupElem& entry);

struct WitnessViolation {
  std::string condition;  // "chain", "condition1", "condition2", "condition3", "partial_sums"
  std::string detail;
};

/// Replays a witness against the definition using explicit powers. Empty
/// result means the witness is valid.
std::vector<WitnessViolation> verify_witness(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp,
                                             const ConnectionWitness& w);

/// Pairwise connectivity over the support, in support order.
struct ConnectionMatrix {
  std::vector<GroupElem> sigma;
  std::vector<std::vector<std::optional<ConnectionWitness>>> witness;  // [from][to]

  bool related(std::size_t i, std::size_t j) const { return witness[i][j].has_value(); }
};

ConnectionMatrix connection_matrix(const GradedBiHomAlgebra& A);

struct EquivalenceCheck {
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  std::string witness;  // first failing instance

  bool holds() const { return reflexive && symmetric && transitive; }
};

EquivalenceCheck check_equivalence(const ConnectionMatrix& m);

struct ClassPartition {
  /// Each class sorted; classes ordered by their least element.
  std::vector<std::vector<GroupElem>> classes;
  std::map<std::pair<GroupElem, GroupElem>, ConnectionWitness> witness_table;

  std::size_t class_of(const GroupElem& g) const;  // throws NotInSupport
};

/// Union-find over the pairwise relation. Throws TheoremViolation if two
/// elements land in one class without a direct connection between them.
ClassPartition classes(const GradedBiHomAlgebra& A);
ClassPartition classes(const ConnectionMatrix& m);

namespace oracle {

/// Exhaustive enumeration of chains of length <= max_length (default |Sigma|+1)
/// using the closed-form iterated sums. Independent of the search above.
bool brute_force_connected(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp,
                           std::optional<std::size_t> max_length = std::nullopt);

}  // namespace oracle

}  // namespace gbihom
