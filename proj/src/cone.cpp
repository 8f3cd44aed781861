#include "qfckit/cone.hpp"
#include <functional>

#include <algorithm>
#include <cstdlib>
#include <set>

namespace qfc {

namespace {

constexpr std::size_t kAmbientGuard = 6;
constexpr unsigned long kDefaultEnumBudget = 4000000;
constexpr std::size_t kFmRowCap = 200000;

// Divide a row by its content and return false for the zero row.
bool normalize_row(ExponentVector& row) {
  Int g = vec_content(row);
  if (g == 0) return false;
  if (g > 1)
    for (Int& x : row) x /= g;
  return true;
}

std::vector<ExponentVector> dedup_nonzero(const std::vector<ExponentVector>& gens,
                                          std::size_t n) {
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("cone: generator arity mismatch");
    if (vec_is_zero(g) || seen.count(g)) continue;
    seen.insert(g);
    out.push_back(g);
  }
  return out;
}

// Unique rational solution of lambda * rows = p for linearly independent rows.
// Returns nullopt when p is outside the span of the rows.
std::optional<RationalVector> solve_exact(const std::vector<ExponentVector>& rows,
                                          const ExponentVector& p) {
  std::size_t k = rows.size(), n = p.size();
  // Gaussian elimination on the transposed augmented system.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = Rat(rows[i][j]);
    a[j][k] = Rat(p[j]);
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of_col(k, n);
  for (std::size_t c = 0; c < k && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    Rat inv = 1 / a[rank][c];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == rank || a[r2][c] == 0) continue;
      Rat f = a[r2][c];
      for (std::size_t j = c; j <= k; ++j) a[r2][j] -= f * a[rank][j];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (std::size_t r2 = rank; r2 < n; ++r2)
    if (a[r2][k] != 0) return std::nullopt;  // inconsistent
  RationalVector lam(k, Rat(0));
  for (std::size_t c = 0; c < k; ++c)
    if (pivot_of_col[c] != n) lam[c] = a[pivot_of_col[c]][k];
  return lam;
}

// Rank of a set of integer vectors.
std::size_t rank_of(const std::vector<ExponentVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return group_of(vs, n).rank();
}

}  // namespace

ConeHRep facet_normals(const std::vector<ExponentVector>& generators, std::size_t n) {
  if (n == 0 || n > kAmbientGuard)
    throw DimensionGuardError("facet_normals: ambient rank outside 1..6");
  std::vector<ExponentVector> gens = dedup_nonzero(generators, n);
  ConeHRep cone;
  cone.ambient = n;
  cone.span = saturation(group_of(gens, n));
  std::size_t r = cone.span.rank();
  if (r == 0) return cone;  // cone is the origin
  // Generators in span coordinates; integral because the span is saturated.
  std::vector<ExponentVector> gc;
  for (const auto& g : gens) gc.push_back(*lattice_solve(cone.span, g));
  std::size_t k = gc.size();
  // System over (lambda_1..lambda_k, x_1..x_r), each row meaning <row, vars> >= 0:
  // the equalities x_j = sum_i lambda_i gc_i[j] as two inequalities, lambda >= 0.
  std::set<ExponentVector> rows;
  for (std::size_t j = 0; j < r; ++j) {
    ExponentVector row(k + r, Int(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = gc[i][j];
    row[k + j] = -1;
    ExponentVector neg = vec_neg(row);
    if (normalize_row(row)) rows.insert(row);
    if (normalize_row(neg)) rows.insert(neg);
  }
  for (std::size_t i = 0; i < k; ++i) rows.insert(vec_unit(k + r, i));
  // Eliminate each multiplier variable in turn.
  for (std::size_t var = 0; var < k; ++var) {
    std::vector<ExponentVector> pos, neg, zero;
    for (const auto& row : rows) {
      if (row[var] > 0)
        pos.push_back(row);
      else if (row[var] < 0)
        neg.push_back(row);
      else
        zero.push_back(row);
    }
    std::set<ExponentVector> next(zero.begin(), zero.end());
    for (const auto& pr : pos)
      for (const auto& nr : neg) {
        ExponentVector combined(k + r);
        for (std::size_t j = 0; j < k + r; ++j)
          combined[j] = pr[var] * nr[j] - nr[var] * pr[j];
        if (normalize_row(combined)) next.insert(combined);
        if (next.size() > kFmRowCap)
          throw std::runtime_error("facet_normals: elimination blowup");
      }
    rows = std::move(next);
  }
  // Survivors constrain x only. Keep those supporting a rank r-1 face.
  std::set<ExponentVector> facet_set;
  for (const auto& row : rows) {
    ExponentVector w(row.begin() + k, row.end());
    if (vec_is_zero(w)) continue;
    std::vector<ExponentVector> contact;
    bool valid = true;
    for (const auto& g : gc) {
      Int s = vec_dot(g, w);
      if (s < 0) {
        valid = false;
        break;
      }
      if (s == 0) contact.push_back(g);
    }
    if (valid && rank_of(contact, r) == r - 1) facet_set.insert(w);
  }
  // Lift each span-coordinate normal to a canonical ambient normal: the unique
  // solution inside the row space of the span basis, scaled to coprime integers.
  const IntMatrix& s = cone.span.basis;
  std::vector<ExponentVector> gram_rows(r, ExponentVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_rows[i][j] = vec_dot(s.rows[i], s.rows[j]);
  for (const auto& w : facet_set) {
    auto y = solve_exact(gram_rows, w);
    if (!y) throw std::logic_error("facet_normals: gram solve failed");
    RationalVector v(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += (*y)[i] * Rat(s.rows[i][j]);
    Int lcm_den = 1;
    for (auto& q : v) {
      q.canonicalize();
      lcm_den = lcm(lcm_den, q.get_den());
    }
    ExponentVector vi(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = v[j] * Rat(lcm_den);
      scaled.canonicalize();
      vi[j] = scaled.get_num();
    }
    normalize_row(vi);
    cone.normals.push_back(vi);
  }
  std::sort(cone.normals.begin(), cone.normals.end());
  return cone;
}

ExponentVector interior_vector(const std::vector<ExponentVector>& generators, std::size_t n) {
  std::vector<ExponentVector> gens = dedup_nonzero(generators, n);
  if (gens.empty()) throw ZeroSpanError("interior_vector: all generators are zero");
  std::vector<ExponentVector> basis;
  for (const auto& g : gens) {
    basis.push_back(g);
    if (rank_of(basis, n) < basis.size()) basis.pop_back();
  }
  ExponentVector w = vec_zero(n);
  for (const auto& b : basis) w = vec_add(w, b);
  return w;
}

bool cone_contains(const ConeHRep& cone, const ExponentVector& p) {
  if (p.size() != cone.ambient) throw std::invalid_argument("cone_contains: arity mismatch");
  if (!lattice_member(cone.span, p)) return false;
  for (const auto& v : cone.normals)
    if (vec_dot(p, v) < 0) return false;
  return true;
}

std::vector<ExponentVector> lattice_points_in_box(const ConeHRep& cone,
                                                  const ExponentVector& lo,
                                                  const ExponentVector& hi,
                                                  unsigned long budget) {
  std::size_t n = cone.ambient;
  if (lo.size() != n || hi.size() != n)
    throw std::invalid_argument("lattice_points_in_box: arity mismatch");
  if (budget == 0) {
    budget = kDefaultEnumBudget;
    if (const char* env = std::getenv("QFC_ENUM_BUDGET")) {
      unsigned long parsed = std::strtoul(env, nullptr, 10);
      if (parsed > 0) budget = parsed;
    }
  }
  Int volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (hi[i] < lo[i]) return {};
    volume *= hi[i] - lo[i] + 1;
    if (volume > Int(budget))
      throw BoxTooLargeError("lattice_points_in_box: box volume exceeds budget " +
                             std::to_string(budget));
  }
  std::vector<ExponentVector> out;
  ExponentVector p = lo;
  for (;;) {
    if (cone_contains(cone, p)) out.push_back(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) p[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::optional<RationalVector> nonneg_combination(const std::vector<ExponentVector>& generators,
                                                 std::size_t n, const ExponentVector& p) {
  if (p.size() != n) throw std::invalid_argument("nonneg_combination: arity mismatch");
  std::vector<ExponentVector> gens = dedup_nonzero(generators, n);
  auto assemble = [&](const std::vector<std::size_t>& idx,
                      const RationalVector& lam) -> RationalVector {
    RationalVector full(generators.size(), Rat(0));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      // map back to the first occurrence in the caller's list
      for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == gens[idx[t]]) {
          full[i] = lam[t];
          break;
        }
    }
    return full;
  };
  if (vec_is_zero(p)) return RationalVector(generators.size(), Rat(0));
  std::size_t k = gens.size();
  std::size_t r = rank_of(gens, n);
  // Caratheodory: p lies in the cone iff some linearly independent subset
  // carries it with nonnegative coefficients.
  std::vector<std::size_t> sel;
  std::function<std::optional<RationalVector>(std::size_t)> search =
      [&](std::size_t from) -> std::optional<RationalVector> {
    if (!sel.empty()) {
      std::vector<ExponentVector> sub;
      for (std::size_t i : sel) sub.push_back(gens[i]);
      if (rank_of(sub, n) == sub.size()) {
        auto lam = solve_exact(sub, p);
        if (lam) {
          bool ok = true;
          for (const Rat& q : *lam)
            if (q < 0) {
              ok = false;
              break;
            }
          if (ok) return assemble(sel, *lam);
        }
      } else {
        return std::nullopt;  // dependent subset; no extension can help
      }
    }
    if (sel.size() == r) return std::nullopt;
    for (std::size_t i = from; i < k; ++i) {
      sel.push_back(i);
      auto res = search(i + 1);
      sel.pop_back();
      if (res) return res;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace qfc
