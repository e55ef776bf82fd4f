#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/fields.hpp"

namespace cremona {

/// Dense matrix over an exact field.  All arithmetic goes through the field
/// object, so the same code serves the rationals and GF(p).
template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  Matrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), f.zero()) {
    if (rows < 0 || cols < 0) throw ParameterError("negative matrix dimension");
  }

  static Matrix identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const Field& f, int cols, const std::vector<std::vector<Element>>& rows) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != cols) throw ParameterError("row length mismatch");
      for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    }
    return m;
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Element& at(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
  const Element& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }

  std::vector<Element> row(int r) const {
    std::vector<Element> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
  }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }

  Matrix top_rows(int k) const {
    Matrix m(field_, k, cols_);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.field_.eq(a.a_[i], b.a_[i])) return false;
    return true;
  }

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Element> a_;
};

template <class Field>
struct EchelonForm {
  Matrix<Field> matrix;     // reduced row echelon form, zero rows at the bottom
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

/// Canonical reduced row echelon form by exact Gauss-Jordan elimination.
/// Pivots take the first nonzero entry in column order, leading entries are
/// scaled to one and cleared above and below, so equal row spaces produce
/// identical matrices.
template <class Field>
EchelonForm<Field> reduced_row_echelon(Matrix<Field> m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    const auto lead = m.at(r, c);
    if (!f.eq(lead, f.one())) {
      const auto s = f.inv(lead);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return EchelonForm<Field>{std::move(m), std::move(pivots), r};
}

template <class Field>
int rank_of(const Matrix<Field>& m) {
  return reduced_row_echelon(m).rank;
}

template <class Field>
typename Field::Element determinant(Matrix<Field> m) {
  if (m.rows() != m.cols()) throw ParameterError("determinant of a non-square matrix");
  const Field& f = m.field();
  auto det = f.one();
  for (int c = 0; c < m.cols(); ++c) {
    int pr = -1;
    for (int i = c; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) return f.zero();
    if (pr != c) {
      m.swap_rows(c, pr);
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const auto s = f.inv(m.at(c, c));
    for (int i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      const auto factor = f.mul(m.at(i, c), s);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

/// Row vector times matrix.
template <class Field>
std::vector<typename Field::Element> row_times_matrix(const std::vector<typename Field::Element>& v,
                                                      const Matrix<Field>& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw ParameterError("vector/matrix size mismatch");
  const Field& f = m.field();
  std::vector<typename Field::Element> out(static_cast<std::size_t>(m.cols()), f.zero());
  for (int r = 0; r < m.rows(); ++r) {
    if (f.is_zero(v[static_cast<std::size_t>(r)])) continue;
    for (int c = 0; c < m.cols(); ++c)
      out[static_cast<std::size_t>(c)] =
          f.add(out[static_cast<std::size_t>(c)], f.mul(v[static_cast<std::size_t>(r)], m.at(r, c)));
  }
  return out;
}

/// A linear subspace in canonical form: the RREF basis matrix is unique for
/// the row space, so structural equality is subspace equality.  Projective
/// dimension is vector rank minus one.
template <class Field>
class Subspace {
 public:
  using Element = typename Field::Element;

  Subspace(const Field& f, int ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {
    if (ambient < 0) throw ParameterError("negative ambient dimension");
  }

  static Subspace span(const Field& f, int ambient, const std::vector<std::vector<Element>>& rows) {
    auto ech = reduced_row_echelon(Matrix<Field>::from_rows(f, ambient, rows));
    Subspace s(f, ambient);
    s.basis_ = ech.matrix.top_rows(ech.rank);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static Subspace whole(const Field& f, int ambient) {
    Subspace s(f, ambient);
    s.basis_ = Matrix<Field>::identity(f, ambient);
    s.pivots_.resize(static_cast<std::size_t>(ambient));
    for (int i = 0; i < ambient; ++i) s.pivots_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  const Field& field() const { return field_; }
  int ambient() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  int projective_dim() const { return rank() - 1; }
  const Matrix<Field>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::vector<Element> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw ParameterError("vector dimension mismatch");
    for (int r = 0; r < basis_.rows(); ++r) {
      const int c = pivots_[static_cast<std::size_t>(r)];
      if (field_.is_zero(v[static_cast<std::size_t>(c)])) continue;
      const auto factor = v[static_cast<std::size_t>(c)];
      for (int j = 0; j < ambient_; ++j)
        v[static_cast<std::size_t>(j)] = field_.sub(v[static_cast<std::size_t>(j)], field_.mul(factor, basis_.at(r, j)));
    }
    for (const auto& x : v)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (int r = 0; r < other.rank(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// The annihilator under the standard bilinear form; its rank is the
  /// codimension, and annihilating twice returns the original subspace.
  Subspace annihilator() const {
    std::vector<char> is_pivot(static_cast<std::size_t>(ambient_), 0);
    for (int c : pivots_) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<Element>> rows;
    for (int fcol = 0; fcol < ambient_; ++fcol) {
      if (is_pivot[static_cast<std::size_t>(fcol)]) continue;
      std::vector<Element> x(static_cast<std::size_t>(ambient_), field_.zero());
      x[static_cast<std::size_t>(fcol)] = field_.one();
      for (int r = 0; r < basis_.rows(); ++r)
        x[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])] = field_.neg(basis_.at(r, fcol));
      rows.push_back(std::move(x));
    }
    return span(field_, ambient_, rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  int ambient_;
  Matrix<Field> basis_;
  std::vector<int> pivots_;
};

template <class Field>
Subspace<Field> sum(const Subspace<Field>& a, const Subspace<Field>& b) {
  if (a.ambient() != b.ambient() || !(a.field().spec() == b.field().spec()))
    throw ParameterError("subspace field/ambient mismatch");
  std::vector<std::vector<typename Field::Element>> rows;
  for (int r = 0; r < a.rank(); ++r) rows.push_back(a.basis().row(r));
  for (int r = 0; r < b.rank(); ++r) rows.push_back(b.basis().row(r));
  return Subspace<Field>::span(a.field(), a.ambient(), rows);
}

/// Exact intersection via duality: the intersection is the annihilator of
/// the sum of the annihilators.
template <class Field>
Subspace<Field> intersect(const Subspace<Field>& a, const Subspace<Field>& b) {
  if (a.ambient() != b.ambient() || !(a.field().spec() == b.field().spec()))
    throw ParameterError("subspace field/ambient mismatch");
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

/// Determinant of the s-by-s matrix with zero diagonal and ones elsewhere,
/// computed by generic elimination and cross-checked against the closed form
/// (-1)^(s+1) * (s-1).
template <class Field>
typename Field::Element det_ones_minus_identity(int s, const Field& f) {
  if (s < 1) throw ParameterError("matrix order must be positive");
  Matrix<Field> m(f, s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m.at(i, j) = i == j ? f.zero() : f.one();
  const auto det = determinant(std::move(m));
  auto expected = f.from_int(s - 1);
  if (s % 2 == 0) expected = f.neg(expected);
  if (!f.eq(det, expected)) throw CheckFailed("all-ones-minus-identity determinant mismatch");
  return det;
}

}  // namespace cremona
