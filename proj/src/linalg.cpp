#include "gbihom/linalg.hpp"

#include <sstream>

#include "gbihom/error.hpp"

namespace gbihom {

Mat::Mat(FieldSpec field, std::size_t n) : field_(field), n_(n), entries_(n * n, Scalar::zero(field)) {}

Mat Mat::identity(FieldSpec field, std::size_t n) {
  Mat m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionMismatch("unit matrix index out of range");
  Mat m(field, n);
  m(i, j) = Scalar::one(field);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0 || rows[0].empty()) throw DimensionMismatch("empty matrix");
  Mat m(rows[0][0].field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionMismatch("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rows[i][j].field() == m.field_)) throw FieldMismatch("matrix entries over different fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat Mat::from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.emplace_back(field, v);
    s.push_back(std::move(row));
  }
  return from_rows(s);
}

Mat Mat::unflatten(FieldSpec field, std::size_t n, const Vec& flat) {
  if (flat.size() != n * n) throw DimensionMismatch("flattened length is not n^2");
  Mat m(field, n);
  m.entries_ = flat;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

void Mat::check_compatible(const Mat& o) const {
  if (n_ != o.n_) throw DimensionMismatch("matrix sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
  if (!(field_ == o.field_)) throw FieldMismatch("matrices over " + field_.name() + " and " + o.field_.name());
}

Mat& Mat::operator+=(const Mat& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  a.check_compatible(b);
  const std::size_t n = a.n_;
  Mat r(a.field_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

Mat operator*(const Scalar& s, Mat a) {
  for (auto& e : a.entries_) e *= s;
  return a;
}

std::optional<Mat> Mat::inverse() const {
  const std::size_t n = n_;
  if (n == 0) return *this;
  std::vector<Vec> aug(n, Vec(2 * n, Scalar::zero(field_)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = (*this)(i, j);
    aug[i][n + i] = Scalar::one(field_);
  }
  Echelon e = rref(std::move(aug), 2 * n, field_);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(field_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

Mat Mat::pow(std::uint64_t e) const {
  Mat r = identity(field_, n_);
  for (std::uint64_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon rref(std::vector<Vec> rows, std::size_t width, const FieldSpec& field) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar inv = rows[r][col].inverse();
    for (std::size_t j = col; j < width; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Scalar f = rows[i][col];
      for (std::size_t j = col; j < width; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  (void)field;
  return out;
}

std::vector<Vec> null_space(const std::vector<Vec>& rows, std::size_t width, const FieldSpec& field) {
  Echelon e = rref(rows, width, field);
  std::vector<bool> is_pivot(width, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vec x(width, Scalar::zero(field));
    x[free] = Scalar::one(field);
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

Subspace Subspace::zero(FieldSpec field, std::size_t n) {
  Subspace s;
  s.field_ = field;
  s.n_ = n;
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t n) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < n * n; ++k) {
    Vec v(n * n, Scalar::zero(field));
    v[k] = Scalar::one(field);
    rows.push_back(std::move(v));
  }
  return from_vectors(field, n, std::move(rows));
}

Subspace Subspace::from_vectors(FieldSpec field, std::size_t n, std::vector<Vec> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != n * n) throw DimensionMismatch("vector length is not n^2");
    for (const auto& e : v)
      if (!(e.field() == field)) throw FieldMismatch("vector over " + e.field().name() + ", expected " + field.name());
  }
  Echelon e = rref(std::move(vectors), n * n, field);
  Subspace s;
  s.field_ = field;
  s.n_ = n;
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(FieldSpec field, std::size_t n, std::span<const Mat> vectors) {
  std::vector<Vec> flat;
  flat.reserve(vectors.size());
  for (const auto& m : vectors) {
    if (m.n() != n) throw DimensionMismatch("matrix of size " + std::to_string(m.n()) + " in span over M_" + std::to_string(n));
    if (!(m.field() == field)) throw FieldMismatch("matrix over " + m.field().name() + ", expected " + field.name());
    flat.push_back(m.flatten());
  }
  return from_vectors(field, n, std::move(flat));
}

std::vector<Mat> Subspace::basis() const {
  std::vector<Mat> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(Mat::unflatten(field_, n_, r));
  return out;
}

std::optional<Vec> Subspace::coordinates(const Mat& v) const {
  if (v.n() != n_) throw DimensionMismatch("matrix size differs from the ambient space");
  if (!(v.field() == field_)) throw FieldMismatch("matrix over " + v.field().name() + ", expected " + field_.name());
  Vec rest = v.flatten();
  Vec coeffs;
  coeffs.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = rest[pivots_[r]];
    coeffs.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[r]; j < rest.size(); ++j)
      if (!rows_[r][j].is_zero()) rest[j] -= c * rows_[r][j];
  }
  for (const auto& e : rest)
    if (!e.is_zero()) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Mat& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other);
  for (const auto& r : other.rows_)
    if (!contains(Mat::unflatten(field_, n_, r))) return false;
  return true;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.n() != b.n()) throw DimensionMismatch("subspaces of M_" + std::to_string(a.n()) + " and M_" + std::to_string(b.n()));
  if (!(a.field() == b.field())) throw FieldMismatch("subspaces over " + a.field().name() + " and " + b.field().name());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  std::vector<Vec> all = u.rows();
  all.insert(all.end(), v.rows().begin(), v.rows().end());
  return Subspace::from_vectors(u.field(), u.n(), std::move(all));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  const std::size_t du = u.dim(), dv = v.dim(), w = u.n() * u.n();
  if (du == 0 || dv == 0) return Subspace::zero(u.field(), u.n());
  // Solve a.U = b.V: kernel of the w x (du + dv) system with columns U_i, -V_j.
  std::vector<Vec> system(w, Vec(du + dv, Scalar::zero(u.field())));
  for (std::size_t k = 0; k < w; ++k) {
    for (std::size_t i = 0; i < du; ++i) system[k][i] = u.rows()[i][k];
    for (std::size_t j = 0; j < dv; ++j) system[k][du + j] = -v.rows()[j][k];
  }
  std::vector<Vec> kernel = null_space(system, du + dv, u.field());
  std::vector<Vec> vectors;
  for (const auto& x : kernel) {
    Vec vec(w, Scalar::zero(u.field()));
    for (std::size_t i = 0; i < du; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < w; ++k) vec[k] += x[i] * u.rows()[i][k];
    }
    vectors.push_back(std::move(vec));
  }
  return Subspace::from_vectors(u.field(), u.n(), std::move(vectors));
}

Subspace product_span(const Subspace& u, const Subspace& v, const Product& prod) {
  check_same_ambient(u, v);
  std::vector<Mat> products;
  const auto ub = u.basis();
  const auto vb = v.basis();
  for (const auto& x : ub)
    for (const auto& y : vb) products.push_back(prod(x, y));
  return Subspace::span(u.field(), u.n(), products);
}

Subspace annihilator_kernel(const Subspace& domain, std::span<const LinearMap> maps) {
  const auto basis = domain.basis();
  const std::size_t d = basis.size(), w = domain.n() * domain.n();
  if (maps.empty() || d == 0) return domain;
  // One equation per (map, coordinate); unknowns are coefficients on the basis.
  std::vector<Vec> system;
  system.reserve(maps.size() * w);
  std::vector<std::vector<Mat>> images(maps.size());
  for (std::size_t m = 0; m < maps.size(); ++m)
    for (const auto& b : basis) images[m].push_back(maps[m](b));
  for (std::size_t m = 0; m < maps.size(); ++m)
    for (std::size_t k = 0; k < w; ++k) {
      Vec row(d, Scalar::zero(domain.field()));
      bool any = false;
      for (std::size_t i = 0; i < d; ++i) {
        row[i] = images[m][i].flatten()[k];
        any = any || !row[i].is_zero();
      }
      if (any) system.push_back(std::move(row));
    }
  std::vector<Vec> kernel = null_space(system, d, domain.field());
  std::vector<Mat> vectors;
  for (const auto& x : kernel) {
    Mat v(domain.field(), domain.n());
    for (std::size_t i = 0; i < d; ++i)
      if (!x[i].is_zero()) v += x[i] * basis[i];
    vectors.push_back(std::move(v));
  }
  return Subspace::span(domain.field(), domain.n(), vectors);
}

Subspace annihilator_kernel(FieldSpec field, std::size_t n, std::span<const Mat> generators,
                            std::span<const LinearMap> maps) {
  return annihilator_kernel(Subspace::span(field, n, generators), maps);
}

Subspace complement(const Subspace& part, const Subspace& whole) {
  check_same_ambient(part, whole);
  if (!whole.contains(part)) throw DimensionMismatch("complement: part is not contained in whole");
  Subspace acc = part;
  std::vector<Vec> chosen;
  for (const auto& r : whole.rows()) {
    if (acc.dim() == whole.dim()) break;
    Mat m = Mat::unflatten(whole.field(), whole.n(), r);
    if (acc.contains(m)) continue;
    chosen.push_back(r);
    acc = sum(acc, Subspace::from_vectors(whole.field(), whole.n(), {r}));
  }
  return Subspace::from_vectors(whole.field(), whole.n(), std::move(chosen));
}

CoordinateSystem::CoordinateSystem(FieldSpec field, std::size_t n, std::vector<Mat> basis)
    : field_(field), n_(n), basis_(std::move(basis)) {
  const std::size_t d = basis_.size(), w = n * n;
  // Row-reduce [B | I]; the right block records each RREF row in terms of B.
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < d; ++i) {
    if (basis_[i].n() != n) throw DimensionMismatch("basis matrix has the wrong size");
    Vec row = basis_[i].flatten();
    row.resize(w + d, Scalar::zero(field));
    row[w + i] = Scalar::one(field);
    aug.push_back(std::move(row));
  }
  Echelon e = rref(std::move(aug), w + d, field);
  std::vector<Vec> left;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] >= w) throw InvalidInput("basis matrices are linearly dependent");
    left.emplace_back(e.rows[r].begin(), e.rows[r].begin() + static_cast<std::ptrdiff_t>(w));
    transform_.emplace_back(e.rows[r].begin() + static_cast<std::ptrdiff_t>(w), e.rows[r].end());
  }
  span_ = Subspace::from_vectors(field, n, std::move(left));
}

std::optional<Vec> CoordinateSystem::coordinates(const Mat& v) const {
  auto rc = span_.coordinates(v);
  if (!rc) return std::nullopt;
  Vec out(basis_.size(), Scalar::zero(field_));
  for (std::size_t r = 0; r < rc->size(); ++r) {
    if ((*rc)[r].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += (*rc)[r] * transform_[r][i];
  }
  return out;
}

Mat CoordinateSystem::combine(const Vec& coeffs) const {
  Mat m(field_, n_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) m += coeffs[i] * basis_[i];
  return m;
}

}  // namespace gbihom
