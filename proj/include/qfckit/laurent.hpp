#pragma once

#include <map>
#include <optional>

#include "qfckit/numeric.hpp"

namespace qfc {

struct DomainMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SyntaxError : std::invalid_argument {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Coefficient domain of a Laurent polynomial ring: Q, F_p, or Z.
struct CoefficientDomain {
  enum class Kind { Rationals, PrimeField, Integers };
  Kind kind = Kind::Rationals;
  Int p = 0;  // modulus, PrimeField only

  static CoefficientDomain rationals() { return {Kind::Rationals, 0}; }
  static CoefficientDomain integers() { return {Kind::Integers, 0}; }
  static CoefficientDomain prime_field(const Int& p);

  bool is_field() const { return kind != Kind::Integers; }
  bool operator==(const CoefficientDomain& o) const { return kind == o.kind && p == o.p; }
  std::string str() const;
};

// Canonical coefficient: reduced fraction over Q, integer in [0, p) over F_p,
// integer over Z. Throws DomainMismatchError for a fraction over Z.
Rat normalize_coeff(const CoefficientDomain& d, const Rat& c);

bool coeff_is_unit(const CoefficientDomain& d, const Rat& c);

// Multiplicative inverse in a field domain.
Rat coeff_inverse(const CoefficientDomain& d, const Rat& c);

// Sparse Laurent polynomial in n variables: exponent vector -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly(CoefficientDomain d, std::size_t n) : dom_(d), n_(n) {}

  static LaurentPoly zero(CoefficientDomain d, std::size_t n) { return LaurentPoly(d, n); }
  static LaurentPoly constant(CoefficientDomain d, std::size_t n, const Rat& c);
  static LaurentPoly monomial(CoefficientDomain d, std::size_t n, const ExponentVector& e,
                              const Rat& c);

  const CoefficientDomain& domain() const { return dom_; }
  std::size_t vars() const { return n_; }
  const std::map<ExponentVector, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c * x^e and renormalizes; the workhorse for construction.
  void add_term(const ExponentVector& e, const Rat& c);

  Rat coeff(const ExponentVector& e) const;

  std::vector<ExponentVector> supp() const;

  // Largest / smallest exponent of variable i on the support; zero polynomial throws.
  Int deg(std::size_t i) const;
  Int ord(std::size_t i) const;

  // Exponent of a one-term polynomial with unit coefficient, else nullopt.
  std::optional<ExponentVector> monic_monomial_exponent() const;

  bool operator==(const LaurentPoly& o) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rat& c) const;

  // Ring automorphism x^b -> x^(b a) for unimodular a.
  LaurentPoly apply_unimodular(const IntMatrix& a) const;

 private:
  void check_compat(const LaurentPoly& o) const;
  CoefficientDomain dom_;
  std::size_t n_;
  std::map<ExponentVector, Rat> terms_;
};

// Text form. Grammar:
//   polynomial := [sign] term (sign term)*
//   term       := coeff | coeff "*" powerprod | powerprod
//   coeff      := uint | uint "/" uint
//   powerprod  := var ["^" sint] ("*" var ["^" sint])*
//   var        := "x" uint        (1-based variable index)
// n = 0 infers the variable count from the largest index used (at least 1).
LaurentPoly parse_poly(const std::string& text, CoefficientDomain d, std::size_t n = 0);

// Canonical rendering: terms in ascending exponent order; parse(render(f)) == f.
std::string render_poly(const LaurentPoly& f);

}  // namespace qfc
