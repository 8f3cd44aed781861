#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qfckit/lattice.hpp"

using namespace qfc;

namespace {

ExponentVector ev(std::initializer_list<long> xs) {
  ExponentVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows, std::size_t n) {
  std::vector<ExponentVector> r;
  for (auto& row : rows) r.push_back(ExponentVector(row.begin(), row.end()));
  return IntMatrix(std::move(r), n);
}

// Oracle: elementary divisors from gcds of k x k minors. d_k = g_k / g_{k-1}.
std::vector<Int> minor_gcd_divisors(const IntMatrix& m) {
  std::size_t r = std::min(m.nrows(), m.cols);
  std::vector<Int> g(r + 1, Int(0));
  g[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int acc = 0;
    // enumerate all k-subsets of rows and columns
    std::vector<std::size_t> rsel(k);
    for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
    for (;;) {
      std::vector<std::size_t> csel(k);
      for (std::size_t i = 0; i < k; ++i) csel[i] = i;
      for (;;) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
        acc = gcd(acc, mat_det(sub));
        // next column subset
        std::size_t p = k;
        while (p > 0 && csel[p - 1] == m.cols - (k - (p - 1))) --p;
        if (p == 0) break;
        ++csel[p - 1];
        for (std::size_t q = p; q < k; ++q) csel[q] = csel[q - 1] + 1;
      }
      std::size_t p = k;
      while (p > 0 && rsel[p - 1] == m.nrows() - (k - (p - 1))) --p;
      if (p == 0) break;
      ++rsel[p - 1];
      for (std::size_t q = p; q < k; ++q) rsel[q] = rsel[q - 1] + 1;
    }
    g[k] = abs(acc);
    if (g[k] == 0) {
      g.resize(k);
      break;
    }
  }
  std::vector<Int> div;
  for (std::size_t k = 1; k < g.size(); ++k) div.push_back(g[k] / g[k - 1]);
  return div;
}

// Oracle: membership in the row lattice of m through the Smith route.
// x*m = v iff y*d = v*v for y over Z, i.e. d_i | (v*V)_i and the tail vanishes.
bool snf_member(const IntMatrix& m, const ExponentVector& v) {
  SmithDecomposition s = snf(m);
  ExponentVector w = vec_mat_mul(v, s.v);
  std::size_t r = s.divisors.size();
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (j < r) {
      if (w[j] % s.divisors[j] != 0) return false;
    } else if (w[j] != 0) {
      return false;
    }
  }
  return true;
}

std::mt19937_64 rng(20260819);

Int rint(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Int(d(rng));
}

IntMatrix random_matrix(std::size_t maxr, std::size_t maxc, long amp) {
  std::uniform_int_distribution<std::size_t> dr(1, maxr), dc(1, maxc);
  std::size_t m = dr(rng), n = dc(rng);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rint(-amp, amp);
  return a;
}

bool hnf_shape_ok(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  bool first = true;
  for (std::size_t i = 0; i < h.nrows(); ++i) {
    std::size_t p = h.cols;
    for (std::size_t j = 0; j < h.cols; ++j)
      if (h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == h.cols) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;                       // nonzero row below a zero row
    if (!first && p <= last_pivot) return false;       // echelon order
    if (h.at(i, p) <= 0) return false;                 // positive pivot
    for (std::size_t k = 0; k < i; ++k)                // above-entries reduced
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of gcd pair") {
  LatticeSubgroup h = group_of({ev({3}), ev({5})}, 1);
  REQUIRE(h.rank() == 1);
  CHECK(h.basis.at(0, 0) == 1);
}

TEST_CASE("hnf of the five plane generators") {
  IntMatrix m = mat({{2, 0}, {0, 2}, {2, 3}, {3, 2}, {3, 3}}, 2);
  HnfResult r = hnf(m);
  CHECK(mat_mul(r.u, m) == r.h);
  CHECK(abs(mat_det(r.u)) == 1);
  CHECK(hnf_shape_ok(r.h));
  CHECK(r.h.rows[0] == ev({1, 0}));
  CHECK(r.h.rows[1] == ev({0, 1}));
  for (std::size_t i = 2; i < 5; ++i) CHECK(vec_is_zero(r.h.rows[i]));
}

TEST_CASE("snf divisors of the three plane generators") {
  IntMatrix m = mat({{2, 0}, {0, 2}, {2, 3}}, 2);
  SmithDecomposition s = snf(m);
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == 1);
  CHECK(s.divisors[1] == 2);
  CHECK(minor_gcd_divisors(m) == s.divisors);
  CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
}

TEST_CASE("group_of canonical basis") {
  LatticeSubgroup h = group_of({ev({2, 0}), ev({0, 2}), ev({2, 3})}, 2);
  REQUIRE(h.rank() == 2);
  CHECK(h.basis.rows[0] == ev({2, 0}));
  CHECK(h.basis.rows[1] == ev({0, 1}));
}

TEST_CASE("direct summand judgments") {
  CHECK(is_direct_summand(group_of({ev({1, 0})}, 2)));
  CHECK_FALSE(is_direct_summand(group_of({ev({2, 0})}, 2)));
  CHECK_FALSE(is_direct_summand(group_of({ev({2, 2})}, 2)));
  CHECK(is_direct_summand(group_of({ev({1, 0}), ev({0, 1})}, 2)));
  CHECK(is_direct_summand(group_of({}, 3)));
}

TEST_CASE("saturation of a doubled diagonal") {
  LatticeSubgroup h = group_of({ev({2, 2})}, 2);
  LatticeSubgroup s = saturation(h);
  REQUIRE(s.rank() == 1);
  CHECK(s.basis.rows[0] == ev({1, 1}));
  CHECK(saturation(s) == s);
}

TEST_CASE("extend_to_basis completes a saturated line") {
  LatticeSubgroup h = group_of({ev({1, 1})}, 2);
  IntMatrix c = extend_to_basis(h);
  CHECK(abs(mat_det(c)) == 1);
  CHECK(c.rows[0] == ev({1, 1}));
  CHECK(group_of({c.rows[0]}, 2) == h);
}

TEST_CASE("extend_to_basis rejects unsaturated input") {
  CHECK_THROWS_AS(extend_to_basis(group_of({ev({2, 0})}, 2)), NotSaturatedError);
}

TEST_CASE("solve in generators reproduces bezout") {
  auto z = lattice_solve_in_generators({ev({3}), ev({5})}, 1, ev({1}));
  REQUIRE(z.has_value());
  CHECK((*z)[0] * 3 + (*z)[1] * 5 == 1);
}

TEST_CASE("unimodular inverse") {
  IntMatrix a = mat({{1, 1}, {0, 1}}, 2);
  IntMatrix inv = mat_inverse_unimodular(a);
  CHECK(mat_mul(a, inv) == IntMatrix::identity(2));
  CHECK_THROWS_AS(mat_inverse_unimodular(mat({{2, 0}, {0, 1}}, 2)), std::invalid_argument);
}

TEST_CASE("hnf properties on random matrices") {
  for (int it = 0; it < 300; ++it) {
    IntMatrix m = random_matrix(5, 4, 9);
    HnfResult r = hnf(m);
    CHECK(mat_mul(r.u, m) == r.h);
    CHECK(abs(mat_det(r.u)) == 1);
    CHECK(hnf_shape_ok(r.h));
    // row lattice preserved, checked through the independent Smith route
    for (const auto& row : m.rows) CHECK(snf_member(r.h, row));
    for (const auto& row : r.h.rows) CHECK(snf_member(m, row));
  }
}

TEST_CASE("snf properties on random matrices") {
  for (int it = 0; it < 300; ++it) {
    IntMatrix m = random_matrix(4, 4, 9);
    SmithDecomposition s = snf(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    CHECK(abs(mat_det(s.u)) == 1);
    CHECK(abs(mat_det(s.v)) == 1);
    CHECK(mat_mul(s.v, s.v_inv) == IntMatrix::identity(m.cols));
    for (std::size_t i = 0; i < m.nrows(); ++i)
      for (std::size_t j = 0; j < m.cols; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k) {
      CHECK(s.divisors[k] > 0);
      CHECK(s.divisors[k + 1] % s.divisors[k] == 0);
    }
    CHECK(minor_gcd_divisors(m) == s.divisors);
  }
}

TEST_CASE("membership and solving on random subgroups") {
  for (int it = 0; it < 300; ++it) {
    IntMatrix m = random_matrix(4, 3, 6);
    LatticeSubgroup h = group_of(m.rows, m.cols);
    // a known member: random integer combination of the generators
    ExponentVector v = vec_zero(m.cols);
    for (const auto& g : m.rows) v = vec_add(v, vec_scale(rint(-4, 4), g));
    auto y = lattice_solve(h, v);
    REQUIRE(y.has_value());
    CHECK(vec_mat_mul(*y, h.basis) == v);
    auto z = lattice_solve_in_generators(m.rows, m.cols, v);
    REQUIRE(z.has_value());
    CHECK(vec_mat_mul(*z, m) == v);
    // random points agree with the Smith-route oracle
    for (int k = 0; k < 10; ++k) {
      ExponentVector p(m.cols);
      for (auto& x : p) x = rint(-12, 12);
      bool want = h.rank() ? snf_member(h.basis, p) : vec_is_zero(p);
      CHECK(lattice_member(h, p) == want);
    }
  }
}

TEST_CASE("summand iff saturation fixed on random subgroups") {
  for (int it = 0; it < 300; ++it) {
    IntMatrix m = random_matrix(4, 3, 5);
    LatticeSubgroup h = group_of(m.rows, m.cols);
    LatticeSubgroup s = saturation(h);
    CHECK(is_direct_summand(h) == (s == h));
    for (const auto& row : h.basis.rows) CHECK(lattice_member(s, row));
    CHECK(saturation(s) == s);
    // every saturation element has a bounded multiple inside h
    Int d = 1;
    if (h.rank()) {
      for (const Int& x : snf(h.basis).divisors) d *= x;
    }
    for (const auto& row : s.basis.rows) CHECK(lattice_member(h, vec_scale(d, row)));
    // completion of the saturated subgroup
    IntMatrix c = extend_to_basis(s);
    CHECK(abs(mat_det(c)) == 1);
    std::vector<ExponentVector> top(c.rows.begin(), c.rows.begin() + s.rank());
    CHECK(group_of(top, s.ambient) == s);
  }
}
