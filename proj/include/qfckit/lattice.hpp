#pragma once

#include <optional>

#include "qfckit/numeric.hpp"

namespace qfc {

// Row-style Hermite normal form: H = U * M with U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows at the bottom.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};

HnfResult hnf(const IntMatrix& m);

// Smith normal form: u * m * v = d with u, v unimodular, d diagonal,
// divisors d1 | d2 | ... all nonnegative. v_inv is tracked alongside v.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;
  std::vector<Int> divisors;  // nonzero diagonal entries, divisibility chain
};

SmithDecomposition snf(const IntMatrix& m);

// Subgroup of Z^n in canonical form: basis rows are the nonzero rows of an HNF.
struct LatticeSubgroup {
  IntMatrix basis;       // rank x n, canonical HNF rows
  std::size_t ambient;   // n

  std::size_t rank() const { return basis.nrows(); }
  bool operator==(const LatticeSubgroup& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

// Subgroup generated by the given vectors (rows). n must be positive.
LatticeSubgroup group_of(const std::vector<ExponentVector>& generators, std::size_t n);

// Membership of v in the subgroup, by pivot reduction against the HNF basis.
bool lattice_member(const LatticeSubgroup& h, const ExponentVector& v);

// Integer coefficients x with x * basis = v, when v is a member.
std::optional<ExponentVector> lattice_solve(const LatticeSubgroup& h, const ExponentVector& v);

// Integer coefficients over the original generating set: x * gens = v.
// The transformation rows of the HNF are replayed, so entries may be negative.
std::optional<ExponentVector> lattice_solve_in_generators(
    const std::vector<ExponentVector>& generators, std::size_t n, const ExponentVector& v);

// True iff Z^n / h is torsion free, i.e. all elementary divisors of the basis are 1.
bool is_direct_summand(const LatticeSubgroup& h);

// Smallest subgroup s with h <= s and Z^n / s torsion free; equals R(h) cap Z^n.
LatticeSubgroup saturation(const LatticeSubgroup& h);

// Unimodular C whose first rank(h) rows are a basis of h and whose n rows are a
// basis of Z^n. Requires h saturated; throws NotSaturatedError otherwise.
struct NotSaturatedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

IntMatrix extend_to_basis(const LatticeSubgroup& h);

}  // namespace qfc
