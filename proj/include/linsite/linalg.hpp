#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linsite/bounds.hpp"
#include "linsite/field.hpp"

namespace linsite {

/// Dense coordinate vector over one field.
class Vec {
 public:
  Vec() = default;
  Vec(const Field& f, std::size_t dim) : field_(f), entries_(dim, Scalar::zero(f)) {}
  Vec(const Field& f, std::vector<Scalar> entries)
      : field_(f), entries_(std::move(entries)) {}

  static Vec unit(const Field& f, std::size_t dim, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& s) const;
  void add_scaled(const Vec& o, const Scalar& s);

  bool is_zero() const;
  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /// Concatenation of coordinates (same field).
  Vec concat(const Vec& o) const;
  Vec slice(std::size_t begin, std::size_t len) const;

  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::vector<Scalar> entries_;
};

/// Dense matrix; acts on column vectors from the left.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& x) const;  // M x
  Matrix transposed() const;
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;                    // same shape as input, in reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

/// Unique reduced row-echelon form; the row space is preserved.
RrefResult rref(const Matrix& m);

struct SolveResult {
  bool consistent = false;
  Vec particular;     // one x with A x = b (when consistent)
  Matrix nullspace;   // rows form a basis of ker A
};

/// Exact solution of A x = b.
SolveResult solve(const Matrix& a, const Vec& b);

/// Rows form a basis of ker A.
Matrix nullspace(const Matrix& a);

/// Row-span subspace of an ambient coordinate space, held in reduced
/// row-echelon form so equality and membership are coordinate checks.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient_dim);
  static Subspace full(const Field& f, std::size_t ambient_dim);
  static Subspace span_of(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& rows);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Residual of v after eliminating against the basis; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  /// Coefficients of a member vector in the rref basis; throws if not a member.
  Vec coordinates_of(const Vec& v) const;
  /// Matrix P with P v = reduce(v); linear, so preimages stay linear.
  Matrix residual_map() const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// {x : M x in *this}; M maps a space of dimension src_dim into the ambient space.
  Subspace preimage(const Matrix& m) const;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_dim_;
  Matrix basis_;   // dim() x ambient_dim(), rref, no zero rows
  std::vector<std::size_t> pivots_;
};

/// Coordinates for V/W: the non-pivot positions of W's rref basis.
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace denominator);

  std::size_t ambient_dim() const { return denom_.ambient_dim(); }
  std::size_t dim() const { return coords_.size(); }
  const Subspace& denominator() const { return denom_; }

  Vec project(const Vec& v) const;   // ambient -> quotient coordinates
  Vec section(const Vec& q) const;   // quotient coordinates -> canonical representative

 private:
  Subspace denom_;
  std::vector<std::size_t> coords_;  // non-pivot ambient positions
};

/// All p^dim coordinate vectors, lexicographic in the coefficient digits.
std::vector<Vec> enumerate_vectors(const Field& f, std::size_t dim, const Bounds& bounds);

/// Exactly one rref representative per subspace of k^ambient_dim; prime fields only.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t ambient_dim,
                                          const Bounds& bounds);

}  // namespace linsite
