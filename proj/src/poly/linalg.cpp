#include "flopkit/poly/linalg.hpp"

#include <algorithm>
#include <utility>

#include "flopkit/core/error.hpp"

namespace flopkit {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw Error("ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  return from_rows(cols).transpose();
}

RatVector RatMatrix::row(int r) const {
  return RatVector(data_.begin() + std::size_t(r) * cols_, data_.begin() + std::size_t(r + 1) * cols_);
}

RatVector RatMatrix::column(int c) const {
  RatVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector shape mismatch");
  RatVector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Rref rref(RatMatrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (sgn(m(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(int(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    const Integer& pivot = a[k][k];
    for (int i = k + 1; i < n; ++i) {
      const bool lead_zero = a[i][k] == 0;
      for (int j = k + 1; j < n; ++j) {
        // a[i][j] = (a[i][j]*pivot - a[i][k]*a[k][j]) / prev, exact by Sylvester's identity.
        Integer& x = a[i][j];
        x *= pivot;
        if (!lead_zero && a[k][j] != 0) x -= a[i][k] * a[k][j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  return sign * a[n - 1][n - 1];
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  const int n = m.rows();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (int r = 0; r < n; ++r) {
    Integer den = 1;
    for (int c = 0; c < n; ++c) den = lcm(den, m(r, c).get_den());
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    scale *= den;
  }
  Rational d(bareiss_determinant(std::move(a)));
  d /= scale;
  return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Rref red = rref(aug);
  if (static_cast<int>(red.pivots.size()) < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Rref red = rref(aug);
  RatVector x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    x[red.pivots[i]] = red.reduced(int(i), m.cols());
  }
  return x;
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return {};
  Rref red = rref(RatMatrix::from_rows(vectors));
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) basis.push_back(red.reduced.row(int(i)));
  return basis;
}

RatMatrix complete_to_basis(const std::vector<RatVector>& vectors, int n) {
  std::vector<RatVector> cols = vectors;
  if (!cols.empty() && rank(RatMatrix::from_rows(cols)) != static_cast<int>(cols.size()))
    throw DegenerateError("complete_to_basis: dependent input vectors");
  for (int i = 0; i < n && static_cast<int>(cols.size()) < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    cols.push_back(e);
    if (rank(RatMatrix::from_rows(cols)) != static_cast<int>(cols.size())) cols.pop_back();
  }
  return RatMatrix::from_columns(cols);
}

RatVector scale(const RatVector& v, const Rational& s) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool proportional(const RatVector& a, const RatVector& b) {
  if (is_zero_vector(a) || is_zero_vector(b)) return false;
  return rank(RatMatrix::from_rows({a, b})) == 1;
}

RatVector cross(const RatVector& a, const RatVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

CVector to_complex(const RatVector& v) {
  CVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q);
  return out;
}

Real max_norm(const CVector& v) {
  Real m = 0;
  for (const auto& z : v) {
    Real a = z.abs();
    if (a > m) m = a;
  }
  return m;
}

CVector normalized_max(const CVector& v) {
  std::size_t best = 0;
  Real m = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Real a = v[i].abs();
    if (a > m) {
      m = a;
      best = i;
    }
  }
  if (m <= 0) return v;
  ComplexMP s = v[best];
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
  return out;
}

namespace {

struct Elimination {
  CMatrix reduced;
  std::vector<int> pivot_cols;
};

Elimination eliminate(CMatrix a, const Real& rel_tol) {
  Elimination out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Real scale = 0;
  for (const auto& r : a) scale = std::max(scale, max_norm(r));
  const Real threshold = scale * rel_tol;
  std::vector<int> col_perm(cols);
  for (int c = 0; c < cols; ++c) col_perm[c] = c;
  int rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    int br = -1, bc = -1;
    Real best = 0;
    for (int r = rank; r < rows; ++r)
      for (int c = rank; c < cols; ++c) {
        Real m = a[r][col_perm[c]].abs();
        if (m > best) {
          best = m;
          br = r;
          bc = c;
        }
      }
    if (br < 0 || best <= threshold) break;
    std::swap(a[rank], a[br]);
    std::swap(col_perm[rank], col_perm[bc]);
    const int pc = col_perm[rank];
    ComplexMP inv = ComplexMP(1) / a[rank][pc];
    for (int c = 0; c < cols; ++c) a[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      ComplexMP f = a[r][pc];
      if (f.is_zero()) continue;
      for (int c = 0; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
  }
  out.pivot_cols.assign(col_perm.begin(), col_perm.begin() + rank);
  out.reduced = std::move(a);
  return out;
}

}  // namespace

std::vector<CVector> numeric_nullspace(const CMatrix& m, const Real& rel_tol) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  Elimination e = eliminate(m, rel_tol);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivot_cols) is_pivot[p] = true;
  std::vector<CVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CVector v(cols);
    v[free] = ComplexMP(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int numeric_rank(const CMatrix& m, const Real& rel_tol) {
  return static_cast<int>(eliminate(m, rel_tol).pivot_cols.size());
}

CVector cross(const CVector& a, const CVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ComplexMP dot(const CVector& a, const CVector& b) {
  ComplexMP s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace flopkit
