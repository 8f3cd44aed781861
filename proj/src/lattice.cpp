#include "qfckit/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace qfc {

namespace {

// Floor quotient; callers keep divisors positive so remainders land in [0, b).
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_sub_scaled(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a != b) std::swap(m.rows[a], m.rows[b]);
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.nrows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void col_sub_scaled(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.nrows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void col_negate(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.nrows(); ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace

Int mat_det(const IntMatrix& a) {
  if (a.nrows() != a.cols) throw std::invalid_argument("mat_det: square matrix required");
  std::size_t n = a.nrows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; all divisions are exact.
  IntMatrix w = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && w.at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      row_swap(w, piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

IntMatrix mat_inverse_unimodular(const IntMatrix& a) {
  Int d = mat_det(a);
  if (d != 1 && d != -1) throw std::invalid_argument("mat_inverse_unimodular: |det| != 1");
  std::size_t n = a.nrows();
  // Gauss-Jordan on the augmented rational system; the result is integral.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (w[piv][k] == 0) ++piv;
    std::swap(w[piv], w[k]);
    Rat inv = 1 / w[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) w[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat& q = w[i][n + j];
      q.canonicalize();
      if (q.get_den() != 1) throw std::logic_error("mat_inverse_unimodular: non-integral inverse");
      r.at(i, j) = q.get_num();
    }
  return r;
}

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.nrows())};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols && pr < h.nrows(); ++col) {
    // Euclidean elimination below the pivot row until one nonzero entry remains.
    for (;;) {
      std::size_t best = h.nrows();
      for (std::size_t i = pr; i < h.nrows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.nrows() || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == h.nrows()) break;  // column is zero below pr
      row_swap(h, best, pr);
      row_swap(u, best, pr);
      if (h.at(pr, col) < 0) {
        row_negate(h, pr);
        row_negate(u, pr);
      }
      bool clean = true;
      for (std::size_t i = pr + 1; i < h.nrows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = fdiv(h.at(i, col), h.at(pr, col));
        row_sub_scaled(h, i, pr, q);
        row_sub_scaled(u, i, pr, q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) {
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pr; ++i) {
          Int q = fdiv(h.at(i, col), h.at(pr, col));
          row_sub_scaled(h, i, pr, q);
          row_sub_scaled(u, i, pr, q);
        }
        ++pr;
        break;
      }
    }
  }
  return res;
}

SmithDecomposition snf(const IntMatrix& m) {
  SmithDecomposition res{IntMatrix::identity(m.nrows()), m, IntMatrix::identity(m.cols),
                         IntMatrix::identity(m.cols), {}};
  IntMatrix& u = res.u;
  IntMatrix& d = res.d;
  IntMatrix& v = res.v;
  IntMatrix& vi = res.v_inv;
  std::size_t mr = m.nrows(), nc = m.cols;
  for (std::size_t t = 0; t < std::min(mr, nc); ++t) {
    for (;;) {
      // Minimal nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t bi = mr, bj = nc;
      for (std::size_t i = t; i < mr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          if (d.at(i, j) == 0) continue;
          if (bi == mr || abs(d.at(i, j)) < abs(d.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == mr) goto done;  // trailing submatrix is zero
      row_swap(d, bi, t);
      row_swap(u, bi, t);
      col_swap(d, bj, t);
      col_swap(v, bj, t);
      row_swap(vi, bj, t);
      if (d.at(t, t) < 0) {
        row_negate(d, t);
        row_negate(u, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < mr; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = fdiv(d.at(i, t), d.at(t, t));
        row_sub_scaled(d, i, t, q);
        row_sub_scaled(u, i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = fdiv(d.at(t, j), d.at(t, t));
        col_sub_scaled(d, j, t, q);
        col_sub_scaled(v, j, t, q);
        // inverse update: row t of v_inv gains q times row j
        for (std::size_t c = 0; c < nc; ++c) vi.at(t, c) += q * vi.at(j, c);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility repair: fold a non-divisible row into the pivot row.
      bool divisible = true;
      for (std::size_t i = t + 1; i < mr && divisible; ++i)
        for (std::size_t j = t + 1; j < nc && divisible; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            for (std::size_t c = 0; c < nc; ++c) d.at(t, c) += d.at(i, c);
            for (std::size_t c = 0; c < mr; ++c) u.at(t, c) += u.at(i, c);
            divisible = false;
          }
      if (divisible) break;
    }
  }
done:
  res.divisors.clear();
  for (std::size_t k = 0; k < std::min(mr, nc); ++k)
    if (d.at(k, k) != 0) res.divisors.push_back(d.at(k, k));
  return res;
}

LatticeSubgroup group_of(const std::vector<ExponentVector>& generators, std::size_t n) {
  if (n == 0) throw std::invalid_argument("group_of: ambient rank must be positive");
  for (const auto& g : generators)
    if (g.size() != n) throw std::invalid_argument("group_of: generator arity mismatch");
  IntMatrix m(generators, n);
  HnfResult r = hnf(m);
  std::vector<ExponentVector> basis;
  for (const auto& row : r.h.rows)
    if (!vec_is_zero(row)) basis.push_back(row);
  return LatticeSubgroup{IntMatrix(std::move(basis), n), n};
}

namespace {

// Pivot column of an HNF basis row (first nonzero entry).
std::size_t pivot_col(const ExponentVector& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  throw std::logic_error("pivot_col: zero basis row");
}

}  // namespace

std::optional<ExponentVector> lattice_solve(const LatticeSubgroup& h, const ExponentVector& v) {
  if (v.size() != h.ambient) throw std::invalid_argument("lattice_solve: arity mismatch");
  ExponentVector w = v;
  ExponentVector y(h.rank(), Int(0));
  for (std::size_t i = 0; i < h.rank(); ++i) {
    std::size_t c = pivot_col(h.basis.rows[i]);
    if (w[c] == 0) continue;
    if (w[c] % h.basis.at(i, c) != 0) return std::nullopt;
    Int q = w[c] / h.basis.at(i, c);
    for (std::size_t j = 0; j < h.ambient; ++j) w[j] -= q * h.basis.at(i, j);
    y[i] = q;
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return y;
}

bool lattice_member(const LatticeSubgroup& h, const ExponentVector& v) {
  return lattice_solve(h, v).has_value();
}

std::optional<ExponentVector> lattice_solve_in_generators(
    const std::vector<ExponentVector>& generators, std::size_t n, const ExponentVector& v) {
  IntMatrix m(generators, n);
  HnfResult r = hnf(m);
  std::vector<ExponentVector> basis;
  for (const auto& row : r.h.rows)
    if (!vec_is_zero(row)) basis.push_back(row);
  LatticeSubgroup h{IntMatrix(basis, n), n};
  auto y = lattice_solve(h, v);
  if (!y) return std::nullopt;
  // Nonzero HNF rows sit on top, so row i of u expresses basis row i in the generators.
  ExponentVector z(generators.size(), Int(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < generators.size(); ++k) z[k] += (*y)[i] * r.u.at(i, k);
  return z;
}

bool is_direct_summand(const LatticeSubgroup& h) {
  if (h.rank() == 0) return true;
  for (const Int& d : snf(h.basis).divisors)
    if (d != 1) return false;
  return true;
}

LatticeSubgroup saturation(const LatticeSubgroup& h) {
  if (h.rank() == 0) return h;
  SmithDecomposition s = snf(h.basis);
  // basis = u^-1 * d * v^-1, so the first rank rows of v_inv span R(h) over Z.
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < h.rank(); ++i) gens.push_back(s.v_inv.rows[i]);
  return group_of(gens, h.ambient);
}

IntMatrix extend_to_basis(const LatticeSubgroup& h) {
  if (!is_direct_summand(h))
    throw NotSaturatedError("extend_to_basis: subgroup is not saturated");
  if (h.rank() == 0) return IntMatrix::identity(h.ambient);
  SmithDecomposition s = snf(h.basis);
  IntMatrix c = s.v_inv;
  // All divisors are 1, so rows 0..rank of v_inv generate exactly h.
  for (std::size_t i = 0; i < h.rank(); ++i)
    if (!lattice_member(h, c.rows[i])) throw std::logic_error("extend_to_basis: basis drift");
  return c;
}

}  // namespace qfc
