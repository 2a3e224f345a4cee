#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gbihom {

/// Element of Z_{m_1} x ... x Z_{m_k}, coordinates always reduced.
struct GroupElem {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;

  std::string to_string() const;  // "(1,0)"
};

/// The finite abelian group Z_{m_1} x ... x Z_{m_k}.
///
/// Elements are indexed in mixed radix with the last coordinate fastest, so
/// index order coincides with lexicographic order on coordinates.
class GroupSpec {
 public:
  GroupSpec() = default;
  /// Throws InvalidInput when an order is < 1.
  explicit GroupSpec(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  bool contains(const GroupElem& g) const;
  GroupElem reduce(std::vector<std::int64_t> coords) const;
  GroupElem zero() const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;

  std::size_t index_of(const GroupElem& g) const;
  GroupElem element(std::size_t index) const;
  /// All elements in lexicographic order.
  std::vector<GroupElem> elements() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> orders_;
  std::size_t size_ = 1;
};

/// A group automorphism given by an integer matrix acting on coordinates,
/// g -> (M g) reduced componentwise. Construction verifies that the map is
/// well defined on the presentation and bijective.
class GroupAuto {
 public:
  GroupAuto() = default;
  /// Throws InvalidInput if the matrix is not k x k, not well defined
  /// (M_ij * m_j must vanish mod m_i) or not bijective on G.
  GroupAuto(const GroupSpec& group, std::vector<std::vector<std::int64_t>> matrix);
  static GroupAuto identity(const GroupSpec& group);

  GroupElem apply(const GroupElem& g) const;
  GroupElem apply_inverse(const GroupElem& g) const;
  /// Applies the map e times.
  GroupElem power(const GroupElem& g, std::uint64_t e) const;

  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
  const GroupSpec& group() const { return group_; }
  bool is_identity() const;

  /// Image table by element index.
  const std::vector<std::size_t>& table() const { return image_; }
  const std::vector<std::size_t>& inverse_table() const { return preimage_; }

 private:
  GroupSpec group_;
  std::vector<std::vector<std::int64_t>> matrix_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

struct ElementWitness {
  bool passed = true;
  std::optional<GroupElem> witness;
};

/// (G, +_{(alpha,beta)}, alpha, beta, 0). Commutation of alpha and beta is not
/// enforced at construction; check_commuting reports it.
class BiHomGroup {
 public:
  BiHomGroup() = default;
  BiHomGroup(GroupSpec group, GroupAuto alpha, GroupAuto beta);
  /// alpha = beta = Id.
  static BiHomGroup trivial_twist(const GroupSpec& group);

  const GroupSpec& group() const { return group_; }
  const GroupAuto& alpha() const { return alpha_; }
  const GroupAuto& beta() const { return beta_; }

  GroupElem alpha_of(const GroupElem& g) const { return alpha_.apply(g); }
  GroupElem beta_of(const GroupElem& g) const { return beta_.apply(g); }

 private:
  GroupSpec group_;
  GroupAuto alpha_;
  GroupAuto beta_;
};

/// alpha(g) + beta(h).
GroupElem bihom_sum(const BiHomGroup& G, const GroupElem& g, const GroupElem& h);

/// Element of an orbit together with one exponent pair reaching it:
/// element = sign * alpha^i beta^j (g).
struct OrbitPoint {
  GroupElem element;
  std::uint64_t alpha_exp = 0;
  std::uint64_t beta_exp = 0;
  int sign = +1;
};

/// {alpha^i beta^j (g) : i, j >= 0} computed by worklist to a fixed point; with
/// signed = true, also the negatives. Sorted by element, each element listed
/// once (positive sign preferred, then the first exponents discovered).
std::vector<OrbitPoint> orbit_points(const BiHomGroup& G, const GroupElem& g, bool signed_orbit);

/// Orbit as a sorted element list.
std::vector<GroupElem> orbit(const BiHomGroup& G, const GroupElem& g, bool signed_orbit);

/// Passes iff alpha(beta(g)) == beta(alpha(g)) for every g. The witness is
/// the first failing standard generator, else the first failing element in
/// lexicographic order.
ElementWitness check_commuting(const BiHomGroup& G);

}  // namespace gbihom
