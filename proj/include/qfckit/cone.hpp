#pragma once

#include "qfckit/lattice.hpp"

namespace qfc {

using RationalVector = std::vector<Rat>;

struct ZeroSpanError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoxTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Halfspace description of the rational cone spanned by integer generators.
// Valid within the linear span only: membership is span membership plus
// nonnegative products against every normal. Normals are irredundant (one per
// facet), have coprime integer entries, evaluate nonnegatively on every
// generator, and are sorted lexicographically.
struct ConeHRep {
  std::size_t ambient = 0;
  LatticeSubgroup span;  // saturated, equals R(generators) cap Z^n
  std::vector<ExponentVector> normals;
};

// Facet derivation by Fourier-Motzkin elimination of the multiplier variables,
// restricted to the span. Ambient rank is guarded at 6.
ConeHRep facet_normals(const std::vector<ExponentVector>& generators, std::size_t n);

// Sum of a greedily chosen linearly independent generator subset. Evaluates
// strictly positively against every facet normal. Throws ZeroSpanError when
// all generators are zero.
ExponentVector interior_vector(const std::vector<ExponentVector>& generators, std::size_t n);

bool cone_contains(const ConeHRep& cone, const ExponentVector& p);

// Integer points of the box [lo, hi] lying in the cone, in lexicographic
// order. budget = 0 reads QFC_ENUM_BUDGET (default 4000000); a larger box
// throws BoxTooLargeError.
std::vector<ExponentVector> lattice_points_in_box(const ConeHRep& cone,
                                                  const ExponentVector& lo,
                                                  const ExponentVector& hi,
                                                  unsigned long budget = 0);

// Exact nonnegative rational combination of the generators equal to p, found
// by solving over linearly independent generator subsets. Returns coefficients
// aligned with the input, or nullopt when p is outside the cone. This is the
// second membership route; it shares no logic with the facet test.
std::optional<RationalVector> nonneg_combination(const std::vector<ExponentVector>& generators,
                                                 std::size_t n, const ExponentVector& p);

}  // namespace qfc
