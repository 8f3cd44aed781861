#include "qfckit/document.hpp"

#include <algorithm>

namespace qfc {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedCertificate(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string need_str(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw MalformedCertificate(std::string("field '") + key + "' must be text");
  return v.get<std::string>();
}

long need_long(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    throw MalformedCertificate(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

ExponentVector need_vec(const Json& j, std::size_t n) {
  ExponentVector v = vector_from_json(j);
  if (v.size() != n) throw MalformedCertificate("vector arity mismatch");
  return v;
}

IntMatrix need_mat(const Json& j, std::size_t n) {
  if (!j.is_array()) throw MalformedCertificate("matrix must be an array of rows");
  std::vector<ExponentVector> rows;
  for (const Json& r : j) rows.push_back(need_vec(r, n));
  return IntMatrix(std::move(rows), n);
}

std::string int_list_str(const std::vector<Int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i].get_str();
  }
  return s + "]";
}

// Evaluator for the discovery expression grammar over subalgebra generators:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := 'g' uint | uint ['/' uint] | '(' expr ')'
// Whitespace is free between tokens.
class ExprEval {
 public:
  ExprEval(const std::string& text, const std::vector<LaurentPoly>& gens, CoefficientDomain dom,
           std::size_t n)
      : s_(text), gens_(gens), dom_(dom), n_(n) {}

  LaurentPoly run() {
    LaurentPoly v = expr();
    skip();
    if (pos_ != s_.size()) throw MalformedCertificate("trailing text in expression");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long uint_lit() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw MalformedCertificate("expected a number in expression");
    return std::stoul(s_.substr(start, pos_ - start));
  }
  LaurentPoly atom() {
    skip();
    if (eat('(')) {
      LaurentPoly v = expr();
      if (!eat(')')) throw MalformedCertificate("unbalanced parenthesis in expression");
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'g') {
      ++pos_;
      unsigned long idx = uint_lit();
      if (idx < 1 || idx > gens_.size())
        throw MalformedCertificate("expression references an absent generator");
      return gens_[idx - 1];
    }
    Rat c(Int(static_cast<long>(uint_lit())));
    if (eat('/')) c /= Int(static_cast<long>(uint_lit()));
    return LaurentPoly::constant(dom_, n_, c);
  }
  LaurentPoly factor() {
    LaurentPoly base = atom();
    if (eat('^')) {
      unsigned long k = uint_lit();
      LaurentPoly acc = LaurentPoly::constant(dom_, n_, Rat(1));
      for (unsigned long i = 0; i < k; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }
  LaurentPoly term() {
    LaurentPoly v = factor();
    while (eat('*')) v = v * factor();
    return v;
  }
  LaurentPoly expr() {
    bool neg = eat('-');
    LaurentPoly v = term();
    if (neg) v = -v;
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  const std::string& s_;
  const std::vector<LaurentPoly>& gens_;
  CoefficientDomain dom_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

// Inputs reconstructed from a document payload. Exactly one of the two
// optionals is engaged.
struct VerifyContext {
  std::optional<FgMonoid> monoid;
  std::optional<SubalgebraSpec> algebra;
  std::size_t n = 0;

  const FgMonoid& m() const {
    if (!monoid) throw MalformedCertificate("claim requires a monoid input");
    return *monoid;
  }
  const SubalgebraSpec& a() const {
    if (!algebra) throw MalformedCertificate("claim requires a subalgebra input");
    return *algebra;
  }
};

CoefficientDomain domain_from_str(const std::string& s) {
  if (s == "Q") return CoefficientDomain::rationals();
  if (s == "Z") return CoefficientDomain::integers();
  if (s.size() >= 2 && s[0] == 'F') {
    try {
      return CoefficientDomain::prime_field(Int(s.substr(1)));
    } catch (const std::invalid_argument&) {
      throw MalformedCertificate("bad prime field '" + s + "'");
    }
  }
  throw MalformedCertificate("unknown coefficient domain '" + s + "'");
}

void context_from(const Json& payload, VerifyContext& ctx) {
  const Json& input = need(payload, "input");
  std::string kind = need_str(input, "kind");
  if (kind == "monoid") {
    long n = need_long(input, "ambient");
    if (n <= 0) throw MalformedCertificate("ambient rank must be positive");
    ctx.n = static_cast<std::size_t>(n);
    const Json& gens = need(input, "generators");
    if (!gens.is_array() || gens.empty())
      throw MalformedCertificate("monoid generators must be a nonempty array");
    std::vector<ExponentVector> rows;
    for (const Json& g : gens) rows.push_back(need_vec(g, ctx.n));
    ctx.monoid.emplace(std::move(rows), ctx.n);
    return;
  }
  if (kind == "subalgebra") {
    long n = need_long(input, "vars");
    if (n <= 0) throw MalformedCertificate("variable count must be positive");
    ctx.n = static_cast<std::size_t>(n);
    CoefficientDomain dom = domain_from_str(need_str(input, "domain"));
    const Json& gens = need(input, "generators");
    if (!gens.is_array() || gens.empty())
      throw MalformedCertificate("subalgebra generators must be a nonempty array");
    std::vector<LaurentPoly> polys;
    for (const Json& g : gens) {
      if (!g.is_string()) throw MalformedCertificate("subalgebra generator must be text");
      try {
        polys.push_back(parse_poly(g.get<std::string>(), dom, ctx.n));
      } catch (const SyntaxError& e) {
        throw MalformedCertificate(std::string("bad generator text: ") + e.what());
      }
    }
    ctx.algebra.emplace(dom, ctx.n, std::move(polys));
    return;
  }
  throw MalformedCertificate("unknown input kind '" + kind + "'");
}

// point = sum coeff_i * gen_i with every coefficient nonnegative
bool coeffs_reach(const FgMonoid& m, const ExponentVector& point, const std::vector<Int>& c) {
  if (c.size() != m.generators().size())
    throw MalformedCertificate("coefficient count does not match the generator count");
  ExponentVector sum = vec_zero(m.ambient());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) return false;
    sum = vec_add(sum, vec_scale(c[i], m.generators()[i]));
  }
  return sum == point;
}

bool check_membership(const Json& mem, const VerifyContext& ctx) {
  ExponentVector point = need_vec(need(mem, "point"), ctx.n);
  std::vector<Int> coeffs;
  if (mem.contains("coeffs"))
    for (const Json& c : mem.at("coeffs")) coeffs.push_back(int_from_json(c));
  std::string expression = mem.contains("expression") ? need_str(mem, "expression") : "";
  if (!coeffs.empty()) return coeffs_reach(ctx.m(), point, coeffs);
  if (!expression.empty()) {
    const SubalgebraSpec& a = ctx.a();
    LaurentPoly v = ExprEval(expression, a.generators, a.domain, a.n).run();
    auto mono = v.monic_monomial_exponent();
    return mono && *mono == point;
  }
  return ctx.m().contains(point).has_value();
}

bool check_summand_basis(const Json& c, const VerifyContext& ctx) {
  const FgMonoid& m = ctx.m();
  const std::size_t n = m.ambient();
  IntMatrix mat = need_mat(need(c, "c"), n);
  if (mat.nrows() != n) throw MalformedCertificate("summand basis must be square");
  long r = need_long(c, "r");
  long free_count = need_long(c, "free_count");
  if (r < 0 || static_cast<std::size_t>(r) > n || free_count < -1 || free_count > r)
    throw MalformedCertificate("summand basis shape out of range");

  Int det = mat_det(mat);
  if (det != 1 && det != -1) return false;
  if (r == 0) {
    if (m.group().rank() != 0) return false;
  } else {
    std::vector<ExponentVector> lead(mat.rows.begin(), mat.rows.begin() + r);
    if (!(group_of(lead, n) == m.group())) return false;
  }
  if (free_count >= 0) {
    for (long i = 0; i < free_count; ++i)
      if (!m.contains(mat.rows[i])) return false;
    for (long i = free_count; i < r; ++i) {
      bool two_sided = m.contains(mat.rows[i]).has_value() &&
                       m.contains(vec_neg(mat.rows[i])).has_value();
      if (!two_sided) return false;
    }
  }
  return true;
}

bool check_key_lemma(const Json& c, const VerifyContext& ctx) {
  const std::size_t n = ctx.n;
  IntMatrix mat = need_mat(need(c, "c"), n);
  if (mat.nrows() != n) throw MalformedCertificate("basis extension must be square");
  long r = need_long(c, "r");
  if (r < 0 || static_cast<std::size_t>(r) > n)
    throw MalformedCertificate("rank claim out of range");
  ExponentVector w0 = need_vec(need(c, "w0"), n);
  const Json& mems = need(c, "memberships");
  if (!mems.is_array() || mems.size() != static_cast<std::size_t>(r) + 1)
    throw MalformedCertificate("membership count must be the rank plus one");

  Int det = mat_det(mat);
  if (det != 1 && det != -1) return false;
  ExponentVector p0 = need_vec(need(mems.at(0), "point"), n);
  if (!(vec_mat_mul(w0, mat) == p0)) return false;
  for (long i = 1; i <= r; ++i) {
    ExponentVector pi = need_vec(need(mems.at(i), "point"), n);
    if (!(pi == vec_add(p0, mat.rows[i - 1]))) return false;
  }
  if (ctx.monoid) {
    if (r == 0) {
      if (ctx.m().group().rank() != 0) return false;
    } else {
      std::vector<ExponentVector> lead(mat.rows.begin(), mat.rows.begin() + r);
      if (!(group_of(lead, n) == ctx.m().group())) return false;
    }
  }
  for (const Json& mem : mems)
    if (!check_membership(mem, ctx)) return false;
  return true;
}

bool check_gcd_one(const Json& c, const VerifyContext& ctx) {
  const FgMonoid& m = ctx.m();
  if (m.ambient() != 1) throw MalformedCertificate("gcd-one certificate needs one variable");
  const Json& comb = need(c, "combination");
  if (!comb.is_array() || comb.size() != m.generators().size())
    throw MalformedCertificate("combination length does not match the generator count");
  Int sum = 0;
  for (std::size_t i = 0; i < m.generators().size(); ++i)
    sum += int_from_json(comb.at(i)) * m.generators()[i][0];
  return sum == 1;
}

bool check_certificate(const Json& c, const VerifyContext& ctx) {
  std::string type = need_str(c, "type");
  if (type == "summand_basis") return check_summand_basis(c, ctx);
  if (type == "key_lemma") return check_key_lemma(c, ctx);
  if (type == "gcd_one") return check_gcd_one(c, ctx);
  throw MalformedCertificate("unknown certificate type '" + type + "'");
}

bool check_witness(const Json& w, const VerifyContext& ctx) {
  std::string type = need_str(w, "type");
  if (type == "torsion_element") {
    const FgMonoid& m = ctx.m();
    ExponentVector t = need_vec(need(w, "t"), ctx.n);
    Int mult = int_from_json(need(w, "m"));
    if (mult < 2) return false;
    if (lattice_member(m.group(), t)) return false;
    return lattice_member(m.group(), vec_scale(mult, t));
  }
  if (type == "not_normal_point") {
    const FgMonoid& m = ctx.m();
    ExponentVector a = need_vec(need(w, "a"), ctx.n);
    Int mult = int_from_json(need(w, "m"));
    if (mult < 2) return false;
    if (!lattice_member(m.group(), a)) return false;
    if (m.contains(a)) return false;
    return m.contains(vec_scale(mult, a)).has_value();
  }
  if (type == "gcd_too_big") {
    Int d = int_from_json(need(w, "d"));
    if (d < 2) return false;
    if (ctx.monoid) {
      for (const auto& g : ctx.m().generators())
        for (const Int& x : g)
          if (x % d != 0) return false;
      return true;
    }
    for (const LaurentPoly& g : ctx.a().generators)
      for (const auto& e : g.supp())
        for (const Int& x : e)
          if (x % d != 0) return false;
    return true;
  }
  if (type == "unit_outside_subalgebra") {
    ExponentVector a = need_vec(need(w, "a"), ctx.n);
    return !ctx.m().contains(a).has_value();
  }
  if (type == "non_group_generator") {
    const FgMonoid& m = ctx.m();
    ExponentVector g = need_vec(need(w, "g"), ctx.n);
    const auto& gens = m.generators();
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) return false;
    return !m.contains(vec_neg(g)).has_value();
  }
  if (type == "counterexample_pair") {
    const FgMonoid& m = ctx.m();
    CoefficientDomain dom = CoefficientDomain::rationals();
    LaurentPoly f(dom, ctx.n), g(dom, ctx.n);
    try {
      f = parse_poly(need_str(w, "f"), dom, ctx.n);
      g = parse_poly(need_str(w, "g"), dom, ctx.n);
    } catch (const SyntaxError& e) {
      throw MalformedCertificate(std::string("bad factor text: ") + e.what());
    }
    LaurentPoly prod = f * g;
    if (prod.is_zero()) return false;
    for (const auto& e : prod.supp())
      if (!m.contains(e)) return false;
    for (const auto& e : f.supp())
      if (!m.contains(e)) return true;
    for (const auto& e : g.supp())
      if (!m.contains(e)) return true;
    return false;
  }
  throw MalformedCertificate("unknown witness type '" + type + "'");
}

std::string certificate_line(const Certificate& c) {
  if (const auto* s = std::get_if<SummandBasis>(&c)) {
    std::string line = "certificate: summand basis of rank " + std::to_string(s->r);
    if (s->free_count >= 0) line += " with " + std::to_string(s->free_count) + " free rows";
    return line;
  }
  if (const auto* k = std::get_if<KeyLemmaWitness>(&c))
    return "certificate: key lemma witness at base point " + vec_str(k->w0) + " with " +
           std::to_string(k->memberships.size()) + " memberships";
  const auto& g = std::get<GcdOne>(c);
  return "certificate: gcd-one combination " + int_list_str(g.combination);
}

std::string witness_line(const Witness& w) {
  if (const auto* t = std::get_if<TorsionElement>(&w))
    return "witness: torsion element " + vec_str(t->t) + " with multiple " + t->m.get_str();
  if (const auto* p = std::get_if<CounterexamplePair>(&w))
    return "witness: product pair f = " + p->f + ", g = " + p->g;
  if (const auto* a = std::get_if<NotNormalPoint>(&w))
    return "witness: non-normal point " + vec_str(a->a) + " with multiplier " + a->m.get_str();
  if (const auto* d = std::get_if<GcdTooBig>(&w))
    return "witness: all exponents share the common divisor " + d->d.get_str();
  if (const auto* u = std::get_if<UnitOutsideSubalgebra>(&w))
    return "witness: unit exponent " + vec_str(u->a) + " lies outside the subalgebra";
  const auto& g = std::get<NonGroupGenerator>(w);
  return "witness: generator " + vec_str(g.g) + " has no inverse in the monoid";
}

std::vector<std::string> verdict_lines(const Verdict& v) {
  std::vector<std::string> lines;
  lines.push_back("verdict: " + answer_str(v.answer));
  if (v.certificate) lines.push_back(certificate_line(*v.certificate));
  if (v.witness) lines.push_back(witness_line(*v.witness));
  if (v.answer == Answer::Unknown && !v.reason.empty()) lines.push_back("reason: " + v.reason);
  for (const std::string& a : v.assumptions) lines.push_back("assumption: " + a);
  return lines;
}

std::string ms_str(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", ms);
  return buf;
}

std::string finish_decide_document(const std::string& property, std::string describe,
                                   Json input, const Verdict& v, double elapsed_ms) {
  std::vector<std::string> lines;
  lines.push_back("decide " + property + ": " + std::move(describe));
  for (std::string& l : verdict_lines(v)) lines.push_back(std::move(l));
  lines.push_back("time: " + ms_str(elapsed_ms) + " ms");

  Json payload = json_of(v);
  payload["schema"] = "qfckit-1";
  payload["command"] = "decide";
  payload["property"] = property;
  payload["input"] = std::move(input);
  payload["elapsed_ms"] = elapsed_ms;
  return render_document(lines, payload);
}

}  // namespace

Json json_of(const Int& v) { return v.get_str(); }

Json json_of(const ExponentVector& v) {
  Json j = Json::array();
  for (const Int& x : v) j.push_back(json_of(x));
  return j;
}

Json json_of(const IntMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m.rows) j.push_back(json_of(row));
  return j;
}

Json json_of(const Certificate& c) {
  if (const auto* s = std::get_if<SummandBasis>(&c))
    return {{"type", "summand_basis"},
            {"c", json_of(s->c)},
            {"r", s->r},
            {"free_count", s->free_count}};
  if (const auto* k = std::get_if<KeyLemmaWitness>(&c)) {
    Json mems = Json::array();
    for (const MembershipEvidence& m : k->memberships) {
      Json coeffs = Json::array();
      for (const Int& x : m.monoid_coeffs) coeffs.push_back(json_of(x));
      mems.push_back(
          {{"point", json_of(m.point)}, {"coeffs", coeffs}, {"expression", m.expression}});
    }
    return {{"type", "key_lemma"},
            {"w0", json_of(k->w0)},
            {"c", json_of(k->c)},
            {"r", k->r},
            {"memberships", mems}};
  }
  const auto& g = std::get<GcdOne>(c);
  Json comb = Json::array();
  for (const Int& x : g.combination) comb.push_back(json_of(x));
  return {{"type", "gcd_one"}, {"combination", comb}};
}

Json json_of(const Witness& w) {
  if (const auto* t = std::get_if<TorsionElement>(&w))
    return {{"type", "torsion_element"}, {"t", json_of(t->t)}, {"m", json_of(t->m)}};
  if (const auto* p = std::get_if<CounterexamplePair>(&w))
    return {{"type", "counterexample_pair"},
            {"f", p->f},
            {"g", p->g},
            {"obstruction", p->obstruction}};
  if (const auto* a = std::get_if<NotNormalPoint>(&w))
    return {{"type", "not_normal_point"}, {"a", json_of(a->a)}, {"m", json_of(a->m)}};
  if (const auto* d = std::get_if<GcdTooBig>(&w))
    return {{"type", "gcd_too_big"}, {"d", json_of(d->d)}};
  if (const auto* u = std::get_if<UnitOutsideSubalgebra>(&w))
    return {{"type", "unit_outside_subalgebra"}, {"a", json_of(u->a)}};
  const auto& g = std::get<NonGroupGenerator>(w);
  return {{"type", "non_group_generator"}, {"g", json_of(g.g)}};
}

Json json_of(const Verdict& v) {
  Json j;
  j["verdict"] = answer_str(v.answer);
  j["assumptions"] = v.assumptions;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.certificate) j["certificate"] = json_of(*v.certificate);
  if (v.witness) j["witness"] = json_of(*v.witness);
  return j;
}

Json json_of(const GapReport& r) {
  Json j;
  j["status"] = gap_status_str(r.status);
  j["box"] = {{"lo", json_of(r.box.lo)}, {"hi", json_of(r.box.hi)}};
  Json elems = Json::array();
  for (const auto& e : r.elements) elems.push_back(json_of(e));
  j["elements"] = elems;
  if (r.evidence)
    j["evidence"] = {{"base", json_of(r.evidence->base)},
                     {"direction", json_of(r.evidence->direction)},
                     {"samples", r.evidence->samples}};
  return j;
}

Json json_of(const OracleReport& r) {
  Json j;
  j["pairs_checked"] = r.pairs_checked;
  j["products_in_algebra"] = r.products_in_algebra;
  j["counterexamples_found"] = r.counterexamples_found;
  j["exact"] = r.exact;
  j["budget_exhausted"] = r.budget_exhausted;
  Json ces = Json::array();
  for (const OracleCounterexample& ce : r.counterexamples)
    ces.push_back({{"f", render_poly(ce.f)},
                   {"g", render_poly(ce.g)},
                   {"product", render_poly(ce.product)},
                   {"kind", ce.kind == ObstructionKind::ExactNoShift ? "exact_no_shift"
                                                                     : "no_shift_within_radius"},
                   {"obstruction", ce.obstruction}});
  j["counterexamples"] = ces;
  return j;
}

Json json_of(const StrongQfcWitness& w) {
  Json factors = Json::array();
  Json masks = Json::array();
  for (F2Poly q : w.irreducible_factors) {
    factors.push_back(render_poly(f2_to_laurent(q)));
    masks.push_back(q);
  }
  return {{"shift", w.shift},
          {"base_power", w.base_power},
          {"irreducible_factors", factors},
          {"factor_masks", masks}};
}

Json monoid_json(const FgMonoid& m) {
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(json_of(g));
  if (gens.empty()) gens.push_back(json_of(vec_zero(m.ambient())));
  return {{"kind", "monoid"}, {"ambient", m.ambient()}, {"generators", gens}};
}

Json subalgebra_json(const SubalgebraSpec& a) {
  Json gens = Json::array();
  for (const LaurentPoly& g : a.generators) gens.push_back(render_poly(g));
  return {{"kind", "subalgebra"},
          {"domain", a.domain.str()},
          {"vars", a.n},
          {"generators", gens},
          {"effort",
           {{"max_word_len", a.effort.max_word_len}, {"max_basis", a.effort.max_basis}}}};
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw MalformedCertificate("bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  throw MalformedCertificate("integer field must be a decimal string or number");
}

ExponentVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedCertificate("vector field must be an array");
  ExponentVector v;
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

std::string render_document(const std::vector<std::string>& human_lines, const Json& payload) {
  std::string out;
  for (const std::string& l : human_lines) out += l + "\n";
  out += "\n```json\n" + payload.dump(2) + "\n```\n";
  return out;
}

Json parse_document(const std::string& text) {
  std::string body = text;
  std::size_t fence = text.find("```json");
  if (fence != std::string::npos) {
    std::size_t start = text.find('\n', fence);
    std::size_t end = start == std::string::npos ? std::string::npos : text.find("\n```", start);
    if (start == std::string::npos || end == std::string::npos)
      throw MalformedCertificate("unterminated machine block");
    body = text.substr(start + 1, end - start - 1);
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw MalformedCertificate(std::string("machine block is not valid JSON: ") + e.what());
  }
}

std::string decide_document(const std::string& property, const FgMonoid& m, const Verdict& v,
                            double elapsed_ms) {
  std::string describe = "monoid generated by ";
  const auto& gens = m.generators();
  if (gens.empty()) describe += vec_str(vec_zero(m.ambient()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) describe += ", ";
    describe += vec_str(gens[i]);
  }
  describe += " in Z^" + std::to_string(m.ambient());
  return finish_decide_document(property, std::move(describe), monoid_json(m), v, elapsed_ms);
}

std::string decide_document(const std::string& property, const SubalgebraSpec& a, const Verdict& v,
                            double elapsed_ms) {
  std::string describe = "subalgebra generated by ";
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (i) describe += ", ";
    describe += "g" + std::to_string(i + 1) + " = " + render_poly(a.generators[i]);
  }
  describe += " over " + a.domain.str() + " in " + std::to_string(a.n) + " variables";
  return finish_decide_document(property, std::move(describe), subalgebra_json(a), v, elapsed_ms);
}

bool verify_certificate(const std::string& document_text) {
  Json payload = parse_document(document_text);
  if (!payload.is_object()) throw MalformedCertificate("document payload is not an object");
  bool has_cert = payload.contains("certificate");
  bool has_wit = payload.contains("witness");
  if (!has_cert && !has_wit) return true;

  std::string verdict = need_str(payload, "verdict");
  if (verdict != "yes" && verdict != "no" && verdict != "unknown")
    throw MalformedCertificate("unknown verdict '" + verdict + "'");
  if (has_cert && verdict != "yes")
    throw MalformedCertificate("certificate attached to a verdict other than yes");
  if (has_wit && verdict != "no")
    throw MalformedCertificate("witness attached to a verdict other than no");

  VerifyContext ctx;
  context_from(payload, ctx);
  if (has_cert) return check_certificate(payload.at("certificate"), ctx);
  return check_witness(payload.at("witness"), ctx);
}

}  // namespace qfc
