#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfc {

// Exact arithmetic only. No floating point anywhere in the toolkit.
using Int = mpz_class;
using Rat = mpq_class;

// A point of Z^n. Doubles as a matrix row and as a monomial exponent.
using ExponentVector = std::vector<Int>;

inline ExponentVector vec_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVector vec_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExponentVector vec_neg(const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline ExponentVector vec_scale(const Int& c, const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int vec_dot(const ExponentVector& a, const ExponentVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool vec_is_zero(const ExponentVector& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

// L1 norm; the norm used by every bound in the toolkit.
inline Int vec_norm1(const ExponentVector& a) {
  Int s = 0;
  for (const Int& x : a) s += abs(x);
  return s;
}

inline ExponentVector vec_zero(std::size_t n) { return ExponentVector(n, Int(0)); }

inline ExponentVector vec_unit(std::size_t n, std::size_t i) {
  ExponentVector r(n, Int(0));
  r[i] = 1;
  return r;
}

inline std::string vec_str(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].get_str();
  }
  return s + ")";
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int vec_content(const ExponentVector& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  return g;
}

// Dense integer matrix, row major. Rows are lattice vectors.
struct IntMatrix {
  std::vector<ExponentVector> rows;
  std::size_t cols = 0;

  IntMatrix() = default;
  IntMatrix(std::size_t m, std::size_t n) : rows(m, ExponentVector(n, Int(0))), cols(n) {}
  explicit IntMatrix(std::vector<ExponentVector> r, std::size_t n) : rows(std::move(r)), cols(n) {
    for (const auto& row : rows)
      if (row.size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
  }

  std::size_t nrows() const { return rows.size(); }
  Int& at(std::size_t i, std::size_t j) { return rows[i][j]; }
  const Int& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const { return cols == o.cols && rows == o.rows; }
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.nrows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.nrows(), b.cols);
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

// Row vector times matrix.
inline ExponentVector vec_mat_mul(const ExponentVector& v, const IntMatrix& m) {
  if (v.size() != m.nrows()) throw std::invalid_argument("vec_mat_mul: shape mismatch");
  ExponentVector r(m.cols, Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

inline IntMatrix mat_transpose(const IntMatrix& a) {
  IntMatrix t(a.cols, a.nrows());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

// Exact determinant by expansion on the rational field; square matrices only.
Int mat_det(const IntMatrix& a);

// Inverse of a matrix with det = +-1. Throws std::invalid_argument otherwise.
IntMatrix mat_inverse_unimodular(const IntMatrix& a);

}  // namespace qfc
