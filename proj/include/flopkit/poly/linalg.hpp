#pragma once

#include <optional>
#include <vector>

#include "flopkit/poly/complex_mp.hpp"
#include "flopkit/poly/rational.hpp"

namespace flopkit {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  RatVector row(int r) const;
  RatVector column(int c) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  RatVector operator*(const RatVector& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  RatMatrix reduced;
  std::vector<int> pivots;
};

Rref rref(RatMatrix m);
int rank(const RatMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in rref normal form.
std::vector<RatVector> nullspace(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Fraction-free Bareiss elimination; exact determinant of an integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Reduced-echelon basis of span(vectors); throws DegenerateError when require_independent is set
/// and the vectors are dependent.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors);
/// Square invertible matrix whose leading columns are the given independent vectors.
RatMatrix complete_to_basis(const std::vector<RatVector>& vectors, int n);

RatVector scale(const RatVector& v, const Rational& s);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero_vector(const RatVector& v);
/// True when a and b are nonzero and proportional.
bool proportional(const RatVector& a, const RatVector& b);
RatVector cross(const RatVector& a, const RatVector& b);

using CVector = std::vector<ComplexMP>;
using CMatrix = std::vector<CVector>;

CVector to_complex(const RatVector& v);
Real max_norm(const CVector& v);
CVector normalized_max(const CVector& v);
/// Numeric null space of a complex matrix by fully pivoted elimination; pivots whose magnitude falls
/// below rel_tol times the largest entry are treated as zero.
std::vector<CVector> numeric_nullspace(const CMatrix& m, const Real& rel_tol);
int numeric_rank(const CMatrix& m, const Real& rel_tol);
CVector cross(const CVector& a, const CVector& b);
ComplexMP dot(const CVector& a, const CVector& b);

}  // namespace flopkit
