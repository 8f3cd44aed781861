#include "qfckit/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace qfc {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Representative of a mod p in [0, p).
Int mod_reduce(const Int& a, const Int& p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& p) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainMismatchError("no inverse mod " + p.get_str());
  return inv;
}

}  // namespace

CoefficientDomain CoefficientDomain::prime_field(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_field: " + p.get_str() + " is not prime");
  return {Kind::PrimeField, p};
}

std::string CoefficientDomain::str() const {
  switch (kind) {
    case Kind::Rationals:
      return "Q";
    case Kind::Integers:
      return "Z";
    case Kind::PrimeField:
      return "F" + p.get_str();
  }
  return "?";
}

Rat normalize_coeff(const CoefficientDomain& d, const Rat& c) {
  Rat r = c;
  r.canonicalize();
  switch (d.kind) {
    case CoefficientDomain::Kind::Rationals:
      return r;
    case CoefficientDomain::Kind::Integers:
      if (r.get_den() != 1)
        throw DomainMismatchError("coefficient " + r.get_str() + " is not an integer");
      return r;
    case CoefficientDomain::Kind::PrimeField: {
      Int den = mod_reduce(r.get_den(), d.p);
      Int num = mod_reduce(r.get_num(), d.p);
      if (den == 0) throw DomainMismatchError("denominator vanishes mod " + d.p.get_str());
      if (den != 1) num = mod_reduce(num * mod_inverse(den, d.p), d.p);
      return Rat(num);
    }
  }
  return r;
}

bool coeff_is_unit(const CoefficientDomain& d, const Rat& c) {
  Rat r = normalize_coeff(d, c);
  if (d.kind == CoefficientDomain::Kind::Integers) return r == 1 || r == -1;
  return r != 0;
}

Rat coeff_inverse(const CoefficientDomain& d, const Rat& c) {
  Rat r = normalize_coeff(d, c);
  if (r == 0) throw DomainMismatchError("inverse of zero");
  if (d.kind == CoefficientDomain::Kind::PrimeField)
    return Rat(mod_inverse(r.get_num(), d.p));
  if (d.kind == CoefficientDomain::Kind::Integers && r != 1 && r != -1)
    throw DomainMismatchError("nonunit coefficient over Z");
  return 1 / r;
}

LaurentPoly LaurentPoly::constant(CoefficientDomain d, std::size_t n, const Rat& c) {
  LaurentPoly f(d, n);
  f.add_term(vec_zero(n), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(CoefficientDomain d, std::size_t n, const ExponentVector& e,
                                  const Rat& c) {
  if (e.size() != n) throw std::invalid_argument("monomial: exponent arity mismatch");
  LaurentPoly f(d, n);
  f.add_term(e, c);
  return f;
}

void LaurentPoly::add_term(const ExponentVector& e, const Rat& c) {
  if (e.size() != n_) throw std::invalid_argument("add_term: exponent arity mismatch");
  Rat v = normalize_coeff(dom_, c);
  if (v == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, v);
    return;
  }
  it->second = normalize_coeff(dom_, it->second + v);
  if (it->second == 0) terms_.erase(it);
}

Rat LaurentPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<ExponentVector> LaurentPoly::supp() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Int LaurentPoly::deg(std::size_t i) const {
  if (terms_.empty()) throw std::domain_error("deg of the zero polynomial");
  if (i >= n_) throw std::invalid_argument("deg: variable index out of range");
  Int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

Int LaurentPoly::ord(std::size_t i) const {
  if (terms_.empty()) throw std::domain_error("ord of the zero polynomial");
  if (i >= n_) throw std::invalid_argument("ord: variable index out of range");
  Int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
  return best;
}

std::optional<ExponentVector> LaurentPoly::monic_monomial_exponent() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (!coeff_is_unit(dom_, c)) return std::nullopt;
  return e;
}

void LaurentPoly::check_compat(const LaurentPoly& o) const {
  if (!(dom_ == o.dom_) || n_ != o.n_)
    throw DomainMismatchError("operands live in different rings");
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return dom_ == o.dom_ && n_ == o.n_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compat(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_compat(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(dom_, n_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compat(o);
  LaurentPoly r(dom_, n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(vec_add(e1, e2), c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(dom_, n_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::apply_unimodular(const IntMatrix& a) const {
  if (a.nrows() != n_ || a.cols != n_)
    throw std::invalid_argument("apply_unimodular: matrix shape mismatch");
  Int d = mat_det(a);
  if (d != 1 && d != -1) throw std::invalid_argument("apply_unimodular: |det| != 1");
  LaurentPoly r(dom_, n_);
  for (const auto& [e, c] : terms_) r.add_term(vec_mat_mul(e, a), c);
  return r;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t max_var = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw SyntaxError("expected a number", start);
    return Int(s.substr(start, pos - start));
  }

  Int parse_sint() {
    skip_ws();
    bool neg = eat('-');
    Int v = parse_uint();
    return neg ? -v : v;
  }

  // var ["^" sint], returns (index, exponent)
  std::pair<std::size_t, Int> parse_power() {
    skip_ws();
    if (peek() != 'x') throw SyntaxError("expected a variable", pos);
    ++pos;
    Int idx = parse_uint();
    if (idx < 1) throw SyntaxError("variable index must be at least 1", pos);
    std::size_t i = (std::size_t)idx.get_ui();
    max_var = std::max(max_var, i);
    Int e = 1;
    if (eat('^')) e = parse_sint();
    return {i - 1, e};
  }

  // one term: optional coefficient, optional power product
  std::pair<Rat, std::vector<std::pair<std::size_t, Int>>> parse_term() {
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit((unsigned char)peek())) {
      Int num = parse_uint();
      Int den = 1;
      if (eat('/')) den = parse_uint();
      if (den == 0) throw SyntaxError("zero denominator", pos);
      coeff = Rat(num) / Rat(den);
      have_coeff = true;
    }
    std::vector<std::pair<std::size_t, Int>> powers;
    if (have_coeff) {
      std::size_t save = pos;
      if (eat('*')) {
        if (peek() == 'x') {
          powers.push_back(parse_power());
        } else {
          pos = save;  // '*' belongs to nothing; let the caller fail cleanly
          throw SyntaxError("expected a variable after '*'", pos);
        }
      }
    } else {
      powers.push_back(parse_power());
    }
    while (!powers.empty()) {
      std::size_t save = pos;
      if (!eat('*')) break;
      if (peek() != 'x') {
        pos = save;
        throw SyntaxError("expected a variable after '*'", pos);
      }
      powers.push_back(parse_power());
    }
    return {coeff, powers};
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, CoefficientDomain d, std::size_t n) {
  Parser ps{text};
  struct RawTerm {
    Rat coeff;
    std::vector<std::pair<std::size_t, Int>> powers;
  };
  std::vector<RawTerm> raw;
  bool negate = ps.eat('-');
  for (;;) {
    auto [c, powers] = ps.parse_term();
    raw.push_back({negate ? -c : c, powers});
    ps.skip_ws();
    if (ps.pos == text.size()) break;
    if (ps.eat('+'))
      negate = false;
    else if (ps.eat('-'))
      negate = true;
    else
      throw SyntaxError("expected '+', '-' or end of input", ps.pos);
  }
  std::size_t arity = n ? n : std::max<std::size_t>(ps.max_var, 1);
  if (ps.max_var > arity)
    throw SyntaxError("variable index exceeds ring arity " + std::to_string(arity), 0);
  LaurentPoly f(d, arity);
  for (const auto& t : raw) {
    ExponentVector e = vec_zero(arity);
    for (const auto& [i, k] : t.powers) e[i] += k;
    f.add_term(e, t.coeff);
  }
  return f;
}

std::string render_poly(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] != 1) vars += "^" + e[i].get_str();
    }
    if (vars.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += vars;
    } else {
      out += a.get_str() + "*" + vars;
    }
  }
  return out;
}

}  // namespace qfc
