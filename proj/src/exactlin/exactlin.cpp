#include "twistcoh/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace twistcoh::linalg {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Scalar s(numerator, denominator);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(const std::string &text) {
  Scalar s;
  if (s.set_str(text, 10) != 0 || s.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar &s) { return s.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

bool is_zero(const Vector &v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar &s) { return sgn(s) == 0; });
}

Vector add(const Vector &a, const Vector &b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch");
  }
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

Vector subtract(const Vector &a, const Vector &b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch");
  }
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

Vector scale(const Scalar &c, const Vector &v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = c * v[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &columns,
                            std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw DimensionError("column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = columns[c][r];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() +
                    static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

Vector Matrix::apply(const Vector &v) const {
  if (v.size() != cols_) {
    throw DimensionError("matrix-vector dimension mismatch");
  }
  Vector out(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) {
      continue;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar &e = (*this)(r, c);
      if (sgn(e) != 0) {
        out[r] += e * v[c];
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t> &rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) {
      m(i, c) = (*this)(rows[i], c);
    }
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t> &cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      m(r, i) = (*this)(r, cols[i]);
    }
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar &s) { return sgn(s) == 0; });
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix product dimension mismatch");
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a(i, k);
      if (sgn(aik) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar &bkj = b(k, j);
        if (sgn(bkj) != 0) {
          out(i, j) += aik * bkj;
        }
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix sum dimension mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += b.entries_[i];
  }
  return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix difference dimension mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] -= b.entries_[i];
  }
  return out;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon rref(Matrix m) {
  Echelon result;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(pivot, j), m(lead_row, j));
      }
    }
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      m(lead_row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) {
        continue;
      }
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) {
          m(r, j) -= factor * m(lead_row, j);
        }
      }
    }
    result.pivots.push_back(c);
    ++lead_row;
  }
  result.form = std::move(m);
  return result;
}

std::size_t rank(const Matrix &m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<Vector> &vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) {
    return s;
  }
  Echelon e = rref(Matrix::from_rows(vectors, ambient_dim));
  s.pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    s.basis_.push_back(e.form.row(r));
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    all[i] = i;
  }
  return coordinate(ambient_dim, all);
}

Subspace Subspace::coordinate(std::size_t ambient_dim,
                              const std::vector<std::size_t> &indices) {
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(ambient_dim);
  for (std::size_t i : sorted) {
    if (i >= ambient_dim) {
      throw DimensionError("coordinate index out of range");
    }
    Vector v = zero_vector(ambient_dim);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(const Vector &v) const {
  if (v.size() != ambient_) {
    throw DimensionError("vector does not match ambient dimension");
  }
  Vector out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (sgn(c) == 0) {
      continue;
    }
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_[i][j]) != 0) {
        out[j] -= c * basis_[i][j];
      }
    }
  }
  return out;
}

bool Subspace::contains(const Vector &v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_) {
    throw DimensionError("ambient dimension mismatch");
  }
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector &v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates(const Vector &v) const {
  if (!contains(v)) {
    return std::nullopt;
  }
  // In reduced echelon form the coefficient of basis row i is the pivot entry.
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    c[i] = v[pivots_[i]];
  }
  return c;
}

bool operator==(const Subspace &a, const Subspace &b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix &m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> null_vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.form(r, free);
    }
    null_vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), null_vectors);
}

Subspace image(const Matrix &m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cols.push_back(m.column(c));
  }
  return Subspace::span(m.rows(), cols);
}

Subspace row_space(const Matrix &m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
  }
  return Subspace::span(m.cols(), rows);
}

std::optional<Vector> solve(const Matrix &m, const Vector &b) {
  if (b.size() != m.rows()) {
    throw DimensionError("right-hand side does not match matrix rows");
  }
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      augmented(r, c) = m(r, c);
    }
    augmented(r, m.cols()) = b[r];
  }
  Echelon e = rref(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
    return std::nullopt;
  }
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    x[e.pivots[r]] = e.form(r, m.cols());
  }
  return x;
}

Subspace sum(const Subspace &u, const Subspace &v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionError("sum: ambient dimension mismatch");
  }
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), all);
}

Subspace intersect(const Subspace &u, const Subspace &v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionError("intersect: ambient dimension mismatch");
  }
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) {
    return Subspace(n);
  }
  // Solve sum_i a_i u_i - sum_j b_j v_j = 0; the intersection is spanned by
  // the vectors sum_i a_i u_i.
  std::vector<Vector> columns = u.basis();
  for (const Vector &w : v.basis()) {
    columns.push_back(scale(Scalar(-1), w));
  }
  Subspace relations = kernel(Matrix::from_columns(columns, n));
  std::vector<Vector> common;
  for (const Vector &rel : relations.basis()) {
    Vector w = zero_vector(n);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (sgn(rel[i]) != 0) {
        w = add(w, scale(rel[i], u.basis()[i]));
      }
    }
    common.push_back(std::move(w));
  }
  return Subspace::span(n, common);
}

Subspace map_subspace(const Matrix &m, const Subspace &s) {
  if (s.ambient_dim() != m.cols()) {
    throw DimensionError("map_subspace: dimension mismatch");
  }
  std::vector<Vector> images;
  images.reserve(s.dim());
  for (const Vector &b : s.basis()) {
    images.push_back(m.apply(b));
  }
  return Subspace::span(m.rows(), images);
}

std::vector<Vector> quotient_basis(const Subspace &v, const Subspace &w) {
  if (v.ambient_dim() != w.ambient_dim()) {
    throw DimensionError("quotient_basis: ambient dimension mismatch");
  }
  if (!v.contains(w)) {
    throw DimensionError("quotient_basis: W is not contained in V");
  }
  std::vector<Vector> reduced;
  for (const Vector &b : v.basis()) {
    Vector r = w.reduce(b);
    if (!is_zero(r)) {
      reduced.push_back(std::move(r));
    }
  }
  return Subspace::span(v.ambient_dim(), reduced).basis();
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(Subspace numerator, Subspace denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  representatives_ = quotient_basis(numerator_, denominator_);
  std::vector<Vector> columns = representatives_;
  columns.insert(columns.end(), denominator_.basis().begin(),
                 denominator_.basis().end());
  solve_matrix_ = Matrix::from_columns(columns, numerator_.ambient_dim());
}

std::optional<Vector> Quotient::coordinates(const Vector &v) const {
  if (!numerator_.contains(v)) {
    return std::nullopt;
  }
  std::optional<Vector> x = solve(solve_matrix_, v);
  if (!x) {
    return std::nullopt;
  }
  x->resize(representatives_.size());
  return x;
}

} // namespace twistcoh::linalg
