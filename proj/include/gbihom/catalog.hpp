#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gbihom/classify.hpp"

namespace gbihom {

/// sigma1 = [[0,1],[1,0]], sigma2 = [[0,i],[-i,0]], sigma3 = [[1,0],[0,-1]].
/// Throws NoSuchRoot when the field has no square root of -1.
struct PauliMatrices {
  Mat sigma1, sigma2, sigma3;
};
PauliMatrices pauli_matrices(const FieldSpec& field);

/// Z_2 x Z_2 grading of M_2 by I, sigma3, sigma1, sigma2 at (0,0), (1,0),
/// (0,1), (1,1); identity twists.
GradedBiHomAlgebra pauli_m2(const FieldSpec& field);

/// Clock X_a = diag(e^{n-1}, ..., e, 1) and shift X_b (ones on the
/// superdiagonal and in the bottom-left corner) for the least primitive n-th
/// root e. Throws NoSuchRoot; RelationViolation if X_a X_b != e X_b X_a or
/// X_a^n, X_b^n != I.
struct ClockShift {
  Scalar epsilon;
  Mat xa, xb;
};
ClockShift clock_shift(const FieldSpec& field, std::size_t n);

/// Z_n x Z_n grading with M_(k,l) = K X_a^k X_b^l; identity twists.
GradedBiHomAlgebra generalized_pauli(const FieldSpec& field, std::size_t n);

/// Pauli components with psi = conjugation by S = [[1,1],[1,-1]], alpha = the
/// coordinate swap, phi = Id, beta = Id.
GradedBiHomAlgebra twisted_pauli(const FieldSpec& field);

/// Mirror of twisted_pauli on the right: phi = conjugation by S, beta = swap.
GradedBiHomAlgebra phi_twisted_pauli(const FieldSpec& field);

/// M_4 over Z_2 x Z_2: M_0 = diagonal matrices, M_(1,0) = span{E12, E21},
/// M_(0,1) = span{E34, E43}; identity twists.
GradedBiHomAlgebra block_diagonal_pair(const FieldSpec& field);

/// M_4 over Z_2 x Z_2: Pauli grading of the upper-left 2x2 block with the
/// central nilpotent E34 adjoined to M_0.
GradedBiHomAlgebra corner_with_annihilator(const FieldSpec& field);

/// Strictly upper triangular 3x3 matrices over Z_3: E12 at 1, E23 at 2, E13 at 0.
GradedBiHomAlgebra upper_triangular(const FieldSpec& field);

/// span{E12} in M_2 at degree 1 of Z_2.
GradedBiHomAlgebra nilpotent_line(const FieldSpec& field);

/// E12 at (1,0) and E34 at (0,1) in M_4 over Z_2 x Z_2.
GradedBiHomAlgebra nilpotent_pair(const FieldSpec& field);

/// span{E11, E22} in M_2, all in degree 0 of Z_2.
GradedBiHomAlgebra diagonal_only(const FieldSpec& field);

struct CatalogExpectation {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t sigma_size = 0;
  std::size_t class_count = 0;
  Criterion criterion = Criterion::CriterionInapplicable;
  bool graded_simple = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string origin;  // "published example" or "synthetic"
  std::function<GradedBiHomAlgebra()> build;
  CatalogExpectation expected;
};

const std::vector<CatalogEntry>& catalog();
/// Throws InvalidInput for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace gbihom
