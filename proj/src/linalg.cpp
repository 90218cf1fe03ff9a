#include "wclie/linalg.hpp"

#include "wclie/error.hpp"

#include <algorithm>
#include <numeric>

namespace wclie {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void axpy(Vector& v, const Rational& a, std::span<const Rational> w) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) v[i] += a * w[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector operator*(const Rational& a, const Vector& v) {
  Vector r(v.size());
  if (a.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = a * v[i];
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Echelon rref(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBuilder b(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "spanning vector has wrong length");
    b.insert(v);
  }
  return b.subspace();
}

Subspace Subspace::row_space(const Matrix& m) {
  auto e = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(e.pivots.size(), m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    std::copy(e.matrix.row(i).begin(), e.matrix.row(i).end(), s.basis_.row(i).begin());
  s.pivots_ = std::move(e.pivots);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (!f.is_zero()) axpy(v, -f, basis_.row(i));
  }
  return v;
}

bool Subspace::contains(std::span<const Rational> v) const {
  return is_zero(reduce(Vector(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different spaces");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  Vector coeffs(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coeffs[i] = v[pivots_[i]];
  Vector rebuilt(ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) axpy(rebuilt, coeffs[i], basis_.row(i));
  for (std::size_t j = 0; j < ambient_; ++j)
    if (rebuilt[j] != v[j]) return std::nullopt;
  return coeffs;
}

EchelonBuilder::EchelonBuilder(std::size_t ambient) : ambient_(ambient), row_of_column_(ambient, -1) {}

EchelonBuilder::EchelonBuilder(const Subspace& start) : EchelonBuilder(start.ambient_dim()) {
  for (std::size_t i = 0; i < start.dim(); ++i) {
    rows_.push_back(start.basis().row_vector(i));
    pivot_of_row_.push_back(start.pivots()[i]);
    row_of_column_[start.pivots()[i]] = static_cast<std::ptrdiff_t>(i);
  }
}

void EchelonBuilder::reduce(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = v[pivot_of_row_[i]];
    if (!f.is_zero()) axpy(v, -f, rows_[i]);
  }
}

bool EchelonBuilder::insert(Vector v) {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Rational inv = Rational(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Rational f = row[p];
    if (!f.is_zero()) axpy(row, -f, v);
  }
  row_of_column_[p] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  pivot_of_row_.push_back(p);
  return true;
}

bool EchelonBuilder::contains(Vector v) const {
  reduce(v);
  return is_zero(v);
}

Subspace EchelonBuilder::subspace() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  std::vector<Vector> sorted;
  sorted.reserve(order.size());
  for (auto i : order) sorted.push_back(rows_[i]);
  // Rows are already fully reduced; row_space re-derives pivots cheaply.
  return Subspace::row_space(Matrix::from_rows(sorted, ambient_));
}

Subspace kernel(const Matrix& m) {
  auto e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "sum of subspaces of different spaces");
  EchelonBuilder builder(a);
  for (std::size_t i = 0; i < b.dim(); ++i) builder.insert(b.basis().row_vector(i));
  return builder.subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "intersection of subspaces of different spaces");
  const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(n);
  // x A = y B  <=>  [A; B]^T (x, -y) = 0
  Matrix stacked(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, da + i) = b.basis()(i, j);
  auto rel = kernel(stacked);
  std::vector<Vector> vecs;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    Vector v(n);
    for (std::size_t i = 0; i < da; ++i) axpy(v, rel.basis()(r, i), a.basis().row(i));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

std::vector<std::size_t> complement_coords(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace wclie
