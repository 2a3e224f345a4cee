#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbihom/exactfield.hpp"

namespace gbihom {

using Vec = std::vector<Scalar>;

/// Dense n x n matrix over an exact field.
class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec field, std::size_t n);  // zero matrix

  static Mat identity(FieldSpec field, std::size_t n);
  /// E_ij with 0-based indices.
  static Mat unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j);
  /// Throws DimensionMismatch unless rows is square; FieldMismatch on mixed fields.
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Mat from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows);
  /// Inverse of flatten().
  static Mat unflatten(FieldSpec field, std::size_t n, const Vec& flat);

  std::size_t n() const { return n_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Row-major coordinates, length n^2.
  const Vec& flatten() const { return entries_; }

  bool is_zero() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  Mat operator-() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, Mat a);

  /// Exact Gauss-Jordan inverse; nullopt when singular.
  std::optional<Mat> inverse() const;
  Mat pow(std::uint64_t e) const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

  std::string to_string() const;  // "[[1,0],[0,1]]"

 private:
  void check_compatible(const Mat& o) const;

  FieldSpec field_;
  std::size_t n_ = 0;
  Vec entries_;
};

/// Reduced row-echelon form of a list of equal-length vectors: nonzero rows
/// only, leading ones, pivots on the first nonzero column.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(std::vector<Vec> rows, std::size_t width, const FieldSpec& field);

/// Basis of {x : A x = 0} for the matrix A given by its rows.
std::vector<Vec> null_space(const std::vector<Vec>& rows, std::size_t width, const FieldSpec& field);

/// A linear subspace of M_n(K), stored as the canonical RREF basis of the
/// flattened (row-major, length n^2) vectors. Equal subspaces have identical
/// bases, so equality is list equality.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldSpec field, std::size_t n);
  static Subspace full(FieldSpec field, std::size_t n);
  /// Throws DimensionMismatch / FieldMismatch on inconsistent input.
  static Subspace span(FieldSpec field, std::size_t n, std::span<const Mat> vectors);
  static Subspace span(FieldSpec field, std::size_t n, std::initializer_list<Mat> vectors) {
    return span(field, n, std::span<const Mat>(vectors.begin(), vectors.size()));
  }
  static Subspace from_vectors(FieldSpec field, std::size_t n, std::vector<Vec> vectors);

  const FieldSpec& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Mat> basis() const;

  bool contains(const Mat& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the RREF basis, or nullopt when v is not in the span.
  std::optional<Vec> coordinates(const Mat& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend Subspace sum(const Subspace&, const Subspace&);
  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

void check_same_ambient(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
inline bool contains(const Subspace& u, const Mat& v) { return u.contains(v); }
inline bool equals(const Subspace& u, const Subspace& v) { return u == v; }

using Product = std::function<Mat(const Mat&, const Mat&)>;
using LinearMap = std::function<Mat(const Mat&)>;

/// Span of prod(u, v) over the bases of U and V; equal to the span over any
/// spanning sets because prod is bilinear.
Subspace product_span(const Subspace& u, const Subspace& v, const Product& prod);

/// {v in domain : f(v) = 0 for every f in maps}.
Subspace annihilator_kernel(const Subspace& domain, std::span<const LinearMap> maps);
/// Same, with the domain given as the span of generators.
Subspace annihilator_kernel(FieldSpec field, std::size_t n, std::span<const Mat> generators,
                            std::span<const LinearMap> maps);

/// Deterministic complement of part inside whole: the span of the basis
/// vectors of whole (in RREF order) that enlarge part when added greedily.
/// Throws DimensionMismatch if part is not contained in whole.
Subspace complement(const Subspace& part, const Subspace& whole);

/// Coordinates with respect to an arbitrary (non-canonical) list of linearly
/// independent matrices.
class CoordinateSystem {
 public:
  CoordinateSystem() = default;
  /// Throws InvalidInput if the vectors are linearly dependent.
  CoordinateSystem(FieldSpec field, std::size_t n, std::vector<Mat> basis);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }
  std::optional<Vec> coordinates(const Mat& v) const;
  Mat combine(const Vec& coeffs) const;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Mat> basis_;
  Subspace span_;
  // transform_[r] expresses RREF row r of the span as a combination of basis_.
  std::vector<Vec> transform_;
};

}  // namespace gbihom
