#ifndef WCLIE_LINALG_HPP
#define WCLIE_LINALG_HPP

#include "wclie/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wclie {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
// v += a * w
void axpy(Vector& v, const Rational& a, std::span<const Rational> w);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& a, const Vector& v);

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Every row must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column_vector(std::size_t j) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// A subspace of Q^n held as an RREF basis without zero rows, so equal
// subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  // Remainder of v after elimination against the basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the RREF basis; nullopt when v is not in the span.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Incremental RREF accumulator; rows are kept fully reduced and normalized.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient);
  explicit EchelonBuilder(const Subspace& start);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  void reduce(Vector& v) const;
  // Adds v to the span; returns true iff the dimension grew.
  bool insert(Vector v);
  bool contains(Vector v) const;

  Subspace subspace() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_column_;
};

Subspace kernel(const Matrix& m);
// Column space of m as a subspace of Q^rows.
Subspace image(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
// Throws Error(AmbientMismatch) when ambient dimensions differ.
Subspace intersect(const Subspace& a, const Subspace& b);
// Non-pivot coordinates; their standard vectors project to a basis of ambient / s.
std::vector<std::size_t> complement_coords(const Subspace& s);

}  // namespace wclie

#endif
