#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qfckit/numeric.hpp"

namespace qfc {

enum class Answer { Yes, No, Unknown };

std::string answer_str(Answer a);

// One membership claim inside a KeyLemmaWitness: the point together with
// either nonnegative coefficients over the monoid generators or a textual
// algebra combination that evaluates to a monic monomial at the point.
struct MembershipEvidence {
  ExponentVector point;
  std::vector<Int> monoid_coeffs;
  std::string expression;
};

// Unimodular C whose leading r rows generate the exponent group. When
// free_count = s >= 0 the matrix additionally claims a standard shape:
// rows 1..s are free monoid directions, rows s+1..r are unit directions.
struct SummandBasis {
  IntMatrix c{{}, 0};
  long r = 0;
  long free_count = -1;
};

// Base point w0 with w0 and each w0 + e_i certified inside the monoid of
// exponents, transported through the unimodular basis extension c.
struct KeyLemmaWitness {
  ExponentVector w0;
  std::vector<MembershipEvidence> memberships;  // w0 first, then w0 + e_i
  IntMatrix c{{}, 0};
  long r = 0;
};

// Integers lambda with sum(lambda_i * a_i) = 1 over the generator list.
struct GcdOne {
  std::vector<Int> combination;
};

using Certificate = std::variant<SummandBasis, KeyLemmaWitness, GcdOne>;

// t outside the group with m*t inside; refutes direct-summand.
struct TorsionElement {
  ExponentVector t;
  Int m;
};

// Product in the subalgebra whose factors admit no unit shift into it.
struct CounterexamplePair {
  std::string f, g;
  std::string obstruction;
};

// a in the group with m*a in M but a outside M.
struct NotNormalPoint {
  ExponentVector a;
  Int m;
};

// Every discovered exponent lies in d * Z^n with d >= 2.
struct GcdTooBig {
  Int d;
};

// Exponent of a Laurent unit that the subalgebra misses.
struct UnitOutsideSubalgebra {
  ExponentVector a;
};

// Generator whose negative is not in the monoid; refutes the group property.
struct NonGroupGenerator {
  ExponentVector g;
};

using Witness = std::variant<TorsionElement, CounterexamplePair, NotNormalPoint,
                             GcdTooBig, UnitOutsideSubalgebra, NonGroupGenerator>;

struct Verdict {
  Answer answer = Answer::Unknown;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  std::vector<std::string> assumptions;
  std::string reason;  // set when answer is Unknown

  static Verdict yes(Certificate c) {
    Verdict v;
    v.answer = Answer::Yes;
    v.certificate = std::move(c);
    return v;
  }
  static Verdict yes_plain() {
    Verdict v;
    v.answer = Answer::Yes;
    return v;
  }
  static Verdict no(Witness w) {
    Verdict v;
    v.answer = Answer::No;
    v.witness = std::move(w);
    return v;
  }
  static Verdict unknown(std::string reason) {
    Verdict v;
    v.answer = Answer::Unknown;
    v.reason = std::move(reason);
    return v;
  }
};

}  // namespace qfc
