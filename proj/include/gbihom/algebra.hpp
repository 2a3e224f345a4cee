#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbihom/abgroup.hpp"
#include "gbihom/linalg.hpp"

namespace gbihom {

/// A twisting map: either conjugation x -> S x S^-1 (defined on all of M_n)
/// or a linear map given by the images of a list of independent matrices
/// (defined on their span).
class TwistMap {
 public:
  TwistMap() = default;
  static TwistMap identity(FieldSpec field, std::size_t n);
  /// Throws InvalidInput if S is singular.
  static TwistMap conjugation(const Mat& s);
  /// Throws InvalidInput if the domain is dependent or the lists differ in length.
  static TwistMap from_images(FieldSpec field, std::size_t n, std::vector<Mat> domain, std::vector<Mat> images);

  bool is_conjugation() const { return kind_ == Kind::Conjugation; }
  const Mat& conjugator() const { return s_; }
  const std::vector<Mat>& domain() const { return domain_.basis(); }
  const std::vector<Mat>& images() const { return images_; }

  /// Throws NotInAlgebra when x lies outside the domain of an explicit map.
  Mat apply(const Mat& x) const;

 private:
  enum class Kind { Conjugation, Images };
  Kind kind_ = Kind::Conjugation;
  Mat s_;
  Mat s_inv_;
  CoordinateSystem domain_;
  std::vector<Mat> images_;
};

struct HomogeneousElement {
  GroupElem degree;
  std::size_t index = 0;  // position inside the component basis
  Mat value;

  std::string label() const;  // "M(1,0)[0]"
};

/// A graded BiHom-algebra (A, *, psi, phi) with A a subspace of M_n(K),
/// x * y = psi(x) phi(y), graded by a regular BiHom-group.
///
/// The underlying space is the sum of the given components; it need not be
/// all of M_n. Construction only normalizes and checks shapes; the algebraic
/// axioms are checked by validate().
class GradedBiHomAlgebra {
 public:
  GradedBiHomAlgebra() = default;
  /// Drops zero components. Throws InvalidInput for degrees outside the
  /// group, DimensionMismatch / FieldMismatch for inconsistent shapes.
  GradedBiHomAlgebra(FieldSpec field, std::size_t n, BiHomGroup group,
                     std::map<GroupElem, Subspace> components, TwistMap psi, TwistMap phi);

  const FieldSpec& field() const { return field_; }
  std::size_t n() const { return n_; }
  const BiHomGroup& group() const { return group_; }
  const std::map<GroupElem, Subspace>& components() const { return components_; }
  /// The component of degree g (the zero subspace when absent).
  const Subspace& component(const GroupElem& g) const;
  const TwistMap& psi() const { return psi_; }
  const TwistMap& phi() const { return phi_; }

  /// Sum of all components.
  const Subspace& underlying() const { return underlying_; }
  /// Sum of component dimensions (equals underlying().dim() iff the sum is direct).
  std::size_t total_component_dim() const;
  /// Concatenated RREF bases of the components in degree order.
  const std::vector<HomogeneousElement>& homogeneous_basis() const { return basis_; }

  Mat star_unchecked(const Mat& x, const Mat& y) const { return psi_.apply(x) * phi_.apply(y); }
  Product star_product() const;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  BiHomGroup group_;
  std::map<GroupElem, Subspace> components_;
  TwistMap psi_;
  TwistMap phi_;
  Subspace underlying_;
  Subspace zero_;
  std::vector<HomogeneousElement> basis_;
};

/// psi(x) phi(y); throws NotInAlgebra unless x and y lie in the underlying space.
Mat star(const GradedBiHomAlgebra& A, const Mat& x, const Mat& y);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
  const AxiomCheck* first_failure() const;
};

/// Checks every structural axiom on homogeneous basis elements:
/// alpha/beta commute, components independent, A closed under the ordinary
/// product, psi/phi bijective on A and multiplicative, psi phi = phi psi,
/// grading compatibility of psi/phi (inclusion and derived equality),
/// grading closure of *, psi/phi multiplicative for *, and
/// BiHom-associativity on all basis triples.
ValidationReport validate(const GradedBiHomAlgebra& A);

struct Support {
  std::vector<GroupElem> sigma;  // sorted

  bool contains(const GroupElem& g) const;
  std::size_t size() const { return sigma.size(); }
};

/// Nonzero degrees with a nonzero component.
Support support(const GradedBiHomAlgebra& A);
bool is_symmetric(const Support& S, const GroupSpec& group);

/// Unique homogeneous components of x. Throws NotInAlgebra when x is outside
/// the underlying space and InvalidInput when the components are not independent.
std::map<GroupElem, Mat> homogeneous_decompose(const GradedBiHomAlgebra& A, const Mat& x);

/// Views a graded subspace (e.g. an ideal) as a graded BiHom-algebra in its
/// own right: components sub intersected with each M_g, twists restricted by
/// their images. Throws InvalidInput if sub is not graded.
GradedBiHomAlgebra restrict_to(const GradedBiHomAlgebra& A, const Subspace& sub);

/// True iff sub equals the sum of its intersections with the components.
bool is_graded_subspace(const GradedBiHomAlgebra& A, const Subspace& sub);

}  // namespace gbihom
