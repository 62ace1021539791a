#pragma once

// Exact linear algebra over the rationals.
//
// Every other module reduces its questions (cocycles, boundaries, page
// subquotients, polynomial identities) to the operations here.  All results
// are canonical: subspaces are stored as reduced row-echelon bases, and the
// solver always returns the particular solution with free variables zero.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcoh::linalg {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Builds p/q in lowest terms.
Scalar make_scalar(long numerator, long denominator = 1);
Scalar parse_scalar(const std::string &text);
std::string to_string(const Scalar &s);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector &v);
Vector add(const Vector &a, const Vector &b);
Vector subtract(const Vector &a, const Vector &b);
Vector scale(const Scalar &c, const Vector &v);

/// Dense row-major matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector> &columns,
                             std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector &v) const;
  Matrix transpose() const;

  /// Submatrix of the given rows (all columns, in the order given).
  Matrix select_rows(const std::vector<std::size_t> &rows) const;
  Matrix select_columns(const std::vector<std::size_t> &cols) const;

  bool is_zero() const;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct Echelon {
  Matrix form;                      // full-size, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix &m);

/// A subspace of Q^n held as its reduced row-echelon basis.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim,
                       const std::vector<Vector> &vectors);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the coordinate vectors e_i for the given indices.
  static Subspace coordinate(std::size_t ambient_dim,
                             const std::vector<std::size_t> &indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v lies in
  /// the subspace.
  Vector reduce(const Vector &v) const;
  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;
  /// Coefficients of v in terms of basis(), if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector &v) const;

  friend bool operator==(const Subspace &a, const Subspace &b);

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix &m);
/// Column space of m, as a subspace of Q^{rows}.
Subspace image(const Matrix &m);
Subspace row_space(const Matrix &m);

/// Canonical particular solution of m x = b (free variables zero).
std::optional<Vector> solve(const Matrix &m, const Vector &b);

Subspace sum(const Subspace &u, const Subspace &v);
Subspace intersect(const Subspace &u, const Subspace &v);
/// Image of a subspace of the source under m.
Subspace map_subspace(const Matrix &m, const Subspace &s);

/// Representatives in V of a basis of V/W.  Requires W contained in V.
std::vector<Vector> quotient_basis(const Subspace &v, const Subspace &w);

/// A quotient V/W with fixed representatives, able to compute coordinates of
/// elements of V.
class Quotient {
public:
  Quotient() = default;
  Quotient(Subspace numerator, Subspace denominator);

  std::size_t dim() const { return representatives_.size(); }
  const std::vector<Vector> &representatives() const {
    return representatives_;
  }
  const Subspace &numerator() const { return numerator_; }
  const Subspace &denominator() const { return denominator_; }

  /// Coordinates of the class of v; absent when v is not in the numerator.
  std::optional<Vector> coordinates(const Vector &v) const;

private:
  Subspace numerator_;
  Subspace denominator_;
  std::vector<Vector> representatives_;
  Matrix solve_matrix_;
};

} // namespace twistcoh::linalg
