#pragma once
// Finite field brute force oracle for closure properties of monoid algebras.
// Enumerates all pairs of nonzero polynomials over F_p with support in a box,
// keeps the pairs whose product has support in the monoid, and searches unit
// shifts for the factors. In one variable the shift search is exact via the
// generator gcd and a Frobenius tail; in higher dimension it is radius bounded
// evidence. Also hosts the F_2 machinery for the strong qfc example algebra
// generated by the irreducible polynomials of degree at least two.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfckit/laurent.hpp"
#include "qfckit/monoid.hpp"

namespace qfc {

struct NegativeExponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class FuzzProperty { Fc, Pfc, Qfc };

const char* fuzz_property_str(FuzzProperty p);

struct FuzzConfig {
  long p = 2;                // field size, prime
  Box box;                   // factor support box, one bound pair per variable
  long shift_radius = -1;    // n >= 2 search radius; negative means twice the box width
  std::uint64_t max_pairs = 0;          // 0 means unlimited
  std::size_t max_counterexamples = 16; // recorded in enumeration order; all are counted
  FuzzProperty property = FuzzProperty::Qfc;
  bool force_serial = false; // reference kernel, used by the benchmark
};

// ExactNoShift obstructions are proven for every unit shift; the radius
// bounded kind only certifies the searched window.
enum class ObstructionKind { ExactNoShift, NoShiftWithinRadius };

struct OracleCounterexample {
  LaurentPoly f, g, product;
  ObstructionKind kind;
  std::string obstruction;
};

struct OracleReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t products_in_algebra = 0;
  std::uint64_t counterexamples_found = 0;
  std::vector<OracleCounterexample> counterexamples;
  bool budget_exhausted = false;
  bool exact = false; // every obstruction in this run is proven
};

// Exhaustive pair scan. Every recorded counterexample is re-verified before
// it is returned: the product is recomputed term by term, its support is
// rechecked against the monoid, and the obstruction is rechecked by an
// independent shift enumeration.
OracleReport fuzz_monoid_algebra(const FgMonoid& m, const FuzzConfig& cfg);

// Cross-check of the decision procedures against the oracle. True when a No
// verdict is matched by at least one proven counterexample and a Yes verdict
// by none. In the radius bounded regime a mismatch is reported through the
// warning string instead of failing.
bool agreement_check(const FgMonoid& m, const FuzzConfig& cfg, std::string* warning = nullptr);

// Dense polynomials over F_2 as bitmasks, bit i holding the coefficient of
// x^i. Degree stays below 64 throughout.
using F2Poly = std::uint64_t;

int f2_degree(F2Poly a); // -1 for the zero polynomial
F2Poly f2_mul(F2Poly a, F2Poly b);
LaurentPoly f2_to_laurent(F2Poly a, long shift = 0);

// All monic irreducible polynomials over F_2 of degree 2..max_degree,
// ascending, by trial division against lower degree irreducibles.
std::vector<F2Poly> irreducibles_F2(int max_degree);

// Certificate that x^shift * f lands in the algebra generated by the
// irreducible polynomials of degree at least two: the product
// (x(x+1))^base_power * prod(irreducible_factors) equals x^shift * f.
struct StrongQfcWitness {
  long shift = 0;
  long base_power = 0;
  std::vector<F2Poly> irreducible_factors;
};

// Factors f over F_2 after clearing denominators. Total for nonzero f with
// support within [-16, 16].
StrongQfcWitness strong_qfc_witness_F2(const LaurentPoly& f);

// Whether f(0) = f(1) over F_2. Holds on the whole algebra generated by the
// irreducible polynomials of degree at least two and fails on every monomial
// x^n with n >= 1, so the algebra contains no monomial.
bool no_monomial_invariant_F2(const LaurentPoly& f);

}  // namespace qfc
