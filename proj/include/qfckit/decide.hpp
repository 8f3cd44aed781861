#pragma once

#include <map>

#include "qfckit/laurent.hpp"
#include "qfckit/monoid.hpp"

namespace qfc {

// Gap report whose status does not certify finiteness of the gap set.
struct StatusNotCertified : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The one-variable characterization needs a discovered nonzero monomial.
struct HypothesisUnmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EffortBudget {
  std::size_t max_word_len = 4;  // generator products up to this length
  std::size_t max_basis = 5000;  // cap on distinct support exponents
};

// R-subalgebra of the Laurent polynomial ring in n variables, given by
// polynomial generators over a common coefficient domain.
struct SubalgebraSpec {
  CoefficientDomain domain;
  std::size_t n = 0;
  std::vector<LaurentPoly> generators;
  EffortBudget effort;

  SubalgebraSpec(CoefficientDomain d, std::size_t vars, std::vector<LaurentPoly> gens,
                 EffortBudget e = {});
};

// Exponents a for which a verified combination of generator products equals a
// monic monomial at a. Sound always; complete only up to the effort budget.
struct DiscoveryResult {
  std::vector<ExponentVector> exponents;  // ascending lexicographic
  std::map<ExponentVector, std::string> expressions;
  bool budget_exceeded = false;
};

DiscoveryResult discover_monomials(const SubalgebraSpec& a);

// Exact deciders for the monoid algebra R[M] inside the Laurent ring.
Verdict qfc_monoid(const FgMonoid& m);
Verdict pfc_monoid(const FgMonoid& m);
Verdict fc_monoid(const FgMonoid& m);
Verdict retract_monoid(const FgMonoid& m);

// Semi-decision for a general finitely generated subalgebra: bounded monomial
// discovery, then the localization criterion on the discovered exponents.
Verdict qfc_general(const SubalgebraSpec& a);

// Constructive qfc certificate from a certified-finite gap report. Requires
// gap.status in {Empty, FiniteExact}; throws StatusNotCertified otherwise.
Verdict qfc_from_finite_gap(const FgMonoid& m, const GapReport& gap);

// One-variable pfc for general generators. Throws HypothesisUnmet when no
// nonzero monomial is discovered.
Verdict one_var_pfc_general(const SubalgebraSpec& a);

}  // namespace qfc
