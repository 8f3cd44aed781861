#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qfckit/document.hpp"
#include "qfckit/numsgp.hpp"

using namespace qfc;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

// A rejected input value, reported with exit code 65.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string strip_space(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Int int_token(const std::string& tok) {
  try {
    if (tok.empty()) throw std::invalid_argument("empty");
    return Int(tok);
  } catch (const std::invalid_argument&) {
    throw InputError("bad integer '" + tok + "'");
  }
}

// Generator grammar: "(a,b,...)" tuples separated by ';', or a comma
// separated integer list for one variable.
struct MonoidText {
  std::vector<ExponentVector> gens;
  std::size_t n = 0;
};

MonoidText parse_monoid_text(const std::string& raw) {
  std::string text = strip_space(raw);
  if (text.empty()) throw InputError("monoid text is empty");
  MonoidText out;
  if (text.find('(') != std::string::npos) {
    for (const std::string& part : split(text, ';')) {
      if (part.size() < 2 || part.front() != '(' || part.back() != ')')
        throw InputError("expected a parenthesized tuple, got '" + part + "'");
      ExponentVector v;
      for (const std::string& tok : split(part.substr(1, part.size() - 2), ','))
        v.push_back(int_token(tok));
      if (out.n == 0) out.n = v.size();
      if (v.size() != out.n) throw InputError("tuples of mixed arity");
      out.gens.push_back(std::move(v));
    }
  } else {
    out.n = 1;
    for (const std::string& tok : split(text, ','))
      out.gens.push_back(ExponentVector{int_token(tok)});
  }
  if (out.n == 0) throw InputError("tuples must have at least one entry");
  return out;
}

// Box grammar: "K" for [0,K]^n or "lo..hi" for [lo,hi]^n.
Box parse_box_text(const std::string& raw, std::size_t n) {
  std::string text = strip_space(raw);
  std::size_t dots = text.find("..");
  Int lo = 0, hi;
  if (dots == std::string::npos) {
    hi = int_token(text);
  } else {
    lo = int_token(text.substr(0, dots));
    hi = int_token(text.substr(dots + 2));
  }
  if (lo > hi) throw InputError("box lower bound exceeds upper bound");
  Box b;
  for (std::size_t i = 0; i < n; ++i) {
    b.lo.push_back(lo);
    b.hi.push_back(hi);
  }
  return b;
}

CoefficientDomain parse_domain_text(const std::string& raw) {
  std::string text = strip_space(raw);
  if (text == "Q") return CoefficientDomain::rationals();
  if (text == "Z") return CoefficientDomain::integers();
  if (text.size() >= 2 && text[0] == 'F') {
    try {
      return CoefficientDomain::prime_field(int_token(text.substr(1)));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad coefficient domain: ") + e.what());
    }
  }
  throw InputError("unknown coefficient domain '" + text + "' (use Q, Z, or Fp)");
}

// Extended gcd over the generator values; engaged only when the gcd is 1.
std::optional<std::vector<Int>> bezout_combination(const std::vector<ExponentVector>& gens) {
  if (gens.empty()) return std::nullopt;
  std::vector<Int> lambda(gens.size(), Int(0));
  Int g = gens[0][0];
  lambda[0] = 1;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    Int s, t, d;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               gens[i][0].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) lambda[j] *= s;
    lambda[i] = t;
    g = d;
  }
  if (g == 1) return lambda;
  if (g == -1) {
    for (Int& l : lambda) l = -l;
    return lambda;
  }
  return std::nullopt;
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int exit_for(Answer a) {
  if (a == Answer::Yes) return kExitYes;
  if (a == Answer::No) return kExitNo;
  return kExitUnknown;
}

struct DecideArgs {
  std::string property;
  std::string monoid_text;
  std::string subalgebra_text;
  std::string domain_text = "Q";
  std::size_t vars = 0;
  std::size_t word_len = 4;
  std::size_t max_basis = 5000;
};

int run_decide(const DecideArgs& args) {
  auto start = std::chrono::steady_clock::now();
  if (!args.monoid_text.empty()) {
    MonoidText mt = parse_monoid_text(args.monoid_text);
    FgMonoid m(std::move(mt.gens), mt.n);
    Verdict v;
    if (args.property == "qfc") {
      v = qfc_monoid(m);
    } else if (args.property == "pfc") {
      v = pfc_monoid(m);
    } else if (args.property == "fc") {
      v = fc_monoid(m);
    } else if (args.property == "retract") {
      v = retract_monoid(m);
    } else {
      v = is_normal(m);
    }
    // numerical-semigroup presentation: a Bezout combination certifies the
    // full exponent group more directly than the basis matrix
    if (args.property == "qfc" && m.ambient() == 1 && v.answer == Answer::Yes &&
        v.certificate && std::holds_alternative<SummandBasis>(*v.certificate)) {
      if (auto lambda = bezout_combination(m.generators()))
        v.certificate = GcdOne{std::move(*lambda)};
    }
    std::cout << decide_document(args.property, m, v, ms_since(start));
    return exit_for(v.answer);
  }

  CoefficientDomain dom = parse_domain_text(args.domain_text);
  std::vector<std::string> texts = split(args.subalgebra_text, ';');
  std::size_t n = args.vars;
  std::vector<LaurentPoly> gens;
  try {
    if (n == 0)
      for (const std::string& t : texts) n = std::max(n, parse_poly(t, dom, 0).vars());
    for (const std::string& t : texts) gens.push_back(parse_poly(t, dom, n));
  } catch (const SyntaxError& e) {
    throw InputError(std::string("bad polynomial: ") + e.what());
  }
  SubalgebraSpec a(dom, n, std::move(gens), EffortBudget{args.word_len, args.max_basis});
  Verdict v;
  if (args.property == "qfc") {
    v = qfc_general(a);
  } else if (args.property == "pfc" && a.n == 1) {
    try {
      v = one_var_pfc_general(a);
    } catch (const HypothesisUnmet& e) {
      v = Verdict::unknown(e.what());
    }
  } else {
    std::cerr << "decide " << args.property << " supports monoid input only" << std::endl;
    return kExitUsage;
  }
  std::cout << decide_document(args.property, a, v, ms_since(start));
  return exit_for(v.answer);
}

int run_gaps(const std::string& monoid_text, const std::string& box_text) {
  auto start = std::chrono::steady_clock::now();
  MonoidText mt = parse_monoid_text(monoid_text);
  FgMonoid m(std::move(mt.gens), mt.n);
  GapReport gap = gap_set(m, parse_box_text(box_text, mt.n));

  std::vector<std::string> lines;
  lines.push_back("gaps: monoid in Z^" + std::to_string(mt.n) + ", box " +
                  vec_str(gap.box.lo) + " to " + vec_str(gap.box.hi));
  lines.push_back("status: " + gap_status_str(gap.status));
  lines.push_back("gap count within box: " + std::to_string(gap.elements.size()));
  if (gap.evidence)
    lines.push_back("evidence line: base " + vec_str(gap.evidence->base) + ", direction " +
                    vec_str(gap.evidence->direction) + ", " +
                    std::to_string(gap.evidence->samples) + " samples");
  lines.push_back("time: " + std::to_string(ms_since(start)) + " ms");

  Json payload;
  payload["schema"] = "qfckit-1";
  payload["command"] = "gaps";
  payload["input"] = monoid_json(m);
  payload["gap_report"] = json_of(gap);
  payload["elapsed_ms"] = ms_since(start);
  std::cout << render_document(lines, payload);
  return 0;
}

NumericalSemigroup semigroup_from(const std::string& monoid_text) {
  MonoidText mt = parse_monoid_text(monoid_text);
  if (mt.n != 1) throw InputError("numerical semigroup commands need one-variable input");
  std::vector<Int> vals;
  for (const auto& g : mt.gens) vals.push_back(g[0]);
  try {
    return NumericalSemigroup::from_generators(std::move(vals));
  } catch (const NotNumericalError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int run_frobenius(const std::string& monoid_text) {
  NumericalSemigroup s = semigroup_from(monoid_text);
  Json gaps = Json::array();
  for (const Int& g : s.gaps()) gaps.push_back(json_of(g));
  Json payload;
  payload["schema"] = "qfckit-1";
  payload["command"] = "frobenius";
  payload["generators"] = ([&] {
    Json a = Json::array();
    for (const Int& g : s.generators()) a.push_back(json_of(g));
    return a;
  })();
  payload["frobenius"] = json_of(s.frobenius());
  payload["genus"] = json_of(s.genus());
  payload["multiplicity"] = json_of(s.multiplicity());
  payload["gaps"] = gaps;

  std::vector<std::string> lines;
  lines.push_back("frobenius number: " + s.frobenius().get_str());
  lines.push_back("genus: " + s.genus().get_str());
  lines.push_back("multiplicity: " + s.multiplicity().get_str());
  std::cout << render_document(lines, payload);
  return 0;
}

int run_apery(const std::string& monoid_text, const std::string& modulus_text) {
  NumericalSemigroup s = semigroup_from(monoid_text);
  Int m = modulus_text.empty() ? s.multiplicity() : int_token(strip_space(modulus_text));
  std::vector<Int> ap;
  try {
    ap = s.apery_set(m);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json payload;
  payload["schema"] = "qfckit-1";
  payload["command"] = "apery";
  payload["m"] = json_of(m);
  Json xs = Json::array();
  for (const Int& x : ap) xs.push_back(json_of(x));
  payload["apery"] = xs;

  std::string human = "apery set mod " + m.get_str() + ":";
  for (const Int& x : ap) human += " " + x.get_str();
  std::cout << render_document({human}, payload);
  return 0;
}

int run_verify(const std::string& in_path) {
  std::string text;
  if (in_path.empty() || in_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(in_path);
    if (!f) throw InputError("cannot open '" + in_path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  bool ok = verify_certificate(text);
  std::cout << (ok ? "certificate: valid" : "certificate: invalid") << std::endl;
  return ok ? 0 : 1;
}

struct FuzzArgs {
  std::string monoid_text;
  std::string box_text;
  long prime = 2;
  std::string property = "qfc";
  std::uint64_t max_pairs = 0;
  long radius = -1;
  std::size_t max_ces = 16;
  bool serial = false;
};

int run_fuzz(const FuzzArgs& args) {
  auto start = std::chrono::steady_clock::now();
  MonoidText mt = parse_monoid_text(args.monoid_text);
  FgMonoid m(std::move(mt.gens), mt.n);
  FuzzConfig cfg;
  cfg.p = args.prime;
  cfg.box = parse_box_text(args.box_text, mt.n);
  cfg.max_pairs = args.max_pairs;
  cfg.shift_radius = args.radius;
  cfg.max_counterexamples = args.max_ces;
  cfg.force_serial = args.serial;
  if (args.property == "qfc") {
    cfg.property = FuzzProperty::Qfc;
  } else if (args.property == "pfc") {
    cfg.property = FuzzProperty::Pfc;
  } else {
    cfg.property = FuzzProperty::Fc;
  }
  OracleReport rep;
  try {
    rep = fuzz_monoid_algebra(m, cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  std::vector<std::string> lines;
  lines.push_back("oracle fuzz: property " + std::string(fuzz_property_str(cfg.property)) +
                  " over F" + std::to_string(args.prime) + ", box " + vec_str(cfg.box.lo) +
                  " to " + vec_str(cfg.box.hi));
  lines.push_back("pairs checked: " + std::to_string(rep.pairs_checked));
  lines.push_back("products in algebra: " + std::to_string(rep.products_in_algebra));
  lines.push_back("counterexamples: " + std::to_string(rep.counterexamples_found) +
                  (rep.exact ? " (exact refutations)" : " (radius-bounded evidence)"));
  if (rep.budget_exhausted) lines.push_back("budget exhausted: yes");
  if (!rep.counterexamples.empty()) {
    const auto& ce = rep.counterexamples.front();
    lines.push_back("first counterexample: f = " + render_poly(ce.f) +
                    ", g = " + render_poly(ce.g));
  }
  lines.push_back("time: " + std::to_string(ms_since(start)) + " ms");

  Json payload;
  payload["schema"] = "qfckit-1";
  payload["command"] = "oracle_fuzz";
  payload["input"] = monoid_json(m);
  payload["prime"] = args.prime;
  payload["property"] = fuzz_property_str(cfg.property);
  payload["report"] = json_of(rep);
  payload["elapsed_ms"] = ms_since(start);
  std::cout << render_document(lines, payload);
  return 0;
}

int run_witness_f2(const std::string& poly_text) {
  LaurentPoly f(CoefficientDomain::prime_field(2), 1);
  try {
    f = parse_poly(poly_text, CoefficientDomain::prime_field(2), 1);
  } catch (const SyntaxError& e) {
    throw InputError(std::string("bad polynomial: ") + e.what());
  }
  StrongQfcWitness w;
  try {
    w = strong_qfc_witness_F2(f);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  std::vector<std::string> lines;
  lines.push_back("oracle witness-f2: f = " + render_poly(f));
  lines.push_back("shift: " + std::to_string(w.shift));
  lines.push_back("base power: " + std::to_string(w.base_power));
  std::string factors = "irreducible factors:";
  if (w.irreducible_factors.empty()) factors += " none";
  for (F2Poly q : w.irreducible_factors) factors += " [" + render_poly(f2_to_laurent(q)) + "]";
  lines.push_back(factors);

  Json payload;
  payload["schema"] = "qfckit-1";
  payload["command"] = "oracle_witness_f2";
  payload["poly"] = render_poly(f);
  payload["witness"] = json_of(w);
  bool nonneg = true;
  for (const auto& e : f.supp())
    if (e[0] < 0) nonneg = false;
  if (nonneg) {
    bool inv = no_monomial_invariant_F2(f);
    lines.push_back(std::string("no-monomial invariant: ") + (inv ? "holds" : "fails"));
    payload["invariant"] = inv;
  }
  std::cout << render_document(lines, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qfc: exact deciders for factorially closed subalgebras of Laurent polynomial rings.\n"
      "Environment: QFC_MEMBER_BUDGET caps membership search nodes, QFC_ENUM_BUDGET caps\n"
      "cone lattice-point enumeration."};
  app.require_subcommand(1);

  DecideArgs dargs;
  auto* dec = app.add_subcommand("decide", "decide a closure property");
  dec->add_option("property", dargs.property, "one of qfc, pfc, fc, retract, normal")
      ->required()
      ->check(CLI::IsMember({"qfc", "pfc", "fc", "retract", "normal"}));
  auto* dm = dec->add_option("--monoid", dargs.monoid_text,
                             "monoid generators: \"(a,b);(c,d)\" tuples or \"a,b\" integers");
  auto* ds = dec->add_option("--subalgebra", dargs.subalgebra_text,
                             "semicolon separated polynomial generators");
  dec->add_option("--domain", dargs.domain_text, "coefficient domain Q, Z, or Fp (default Q)");
  dec->add_option("--vars", dargs.vars, "variable count (default: inferred)");
  dec->add_option("--word-len", dargs.word_len, "discovery word length cap (default 4)");
  dec->add_option("--max-basis", dargs.max_basis, "discovery support cap (default 5000)");
  dm->excludes(ds);

  std::string gaps_monoid, gaps_box = "9";
  auto* gaps_cmd = app.add_subcommand("gaps", "gap set of a monoid within a box");
  gaps_cmd->add_option("--monoid", gaps_monoid, "monoid generators")->required();
  gaps_cmd->add_option("--box", gaps_box, "box: \"K\" for [0,K]^n or \"lo..hi\"");

  std::string frob_monoid;
  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius number of a numerical semigroup");
  frob_cmd->add_option("--monoid", frob_monoid, "comma separated generators")->required();

  std::string apery_monoid, apery_modulus;
  auto* apery_cmd = app.add_subcommand("apery", "Apery set of a numerical semigroup");
  apery_cmd->add_option("--monoid", apery_monoid, "comma separated generators")->required();
  apery_cmd->add_option("--modulus", apery_modulus, "modulus (default: multiplicity)");

  std::string verify_in;
  auto* cert_cmd = app.add_subcommand("certificate", "certificate operations");
  auto* verify_cmd = cert_cmd->add_subcommand("verify", "re-check a document's claims");
  verify_cmd->add_option("--in", verify_in, "document file ('-' or absent: stdin)");
  cert_cmd->require_subcommand(1);

  FuzzArgs fargs;
  auto* oracle_cmd = app.add_subcommand("oracle", "finite-field brute force oracle");
  oracle_cmd->require_subcommand(1);
  auto* fuzz_cmd = oracle_cmd->add_subcommand("fuzz", "enumerate products against the property");
  fuzz_cmd->add_option("--monoid", fargs.monoid_text, "monoid generators")->required();
  fuzz_cmd->add_option("--box", fargs.box_text, "support box \"lo..hi\"")->required();
  fuzz_cmd->add_option("--prime", fargs.prime, "field characteristic (default 2)");
  fuzz_cmd->add_option("--property", fargs.property, "qfc, pfc, or fc")
      ->check(CLI::IsMember({"qfc", "pfc", "fc"}));
  fuzz_cmd->add_option("--max-pairs", fargs.max_pairs, "pair budget (0 = exhaustive)");
  fuzz_cmd->add_option("--radius", fargs.radius, "shift radius for n >= 2 (default 2*width)");
  fuzz_cmd->add_option("--max-ces", fargs.max_ces, "counterexamples to keep (default 16)");
  fuzz_cmd->add_flag("--serial", fargs.serial, "force the serial kernel");

  std::string witness_poly;
  auto* wit_cmd = oracle_cmd->add_subcommand("witness-f2", "factorization witness over F2");
  wit_cmd->add_option("--poly", witness_poly, "one-variable polynomial over F2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dec->parsed()) {
      if (dargs.monoid_text.empty() == dargs.subalgebra_text.empty()) {
        std::cerr << "decide needs exactly one of --monoid or --subalgebra" << std::endl;
        return kExitUsage;
      }
      return run_decide(dargs);
    }
    if (gaps_cmd->parsed()) return run_gaps(gaps_monoid, gaps_box);
    if (frob_cmd->parsed()) return run_frobenius(frob_monoid);
    if (apery_cmd->parsed()) return run_apery(apery_monoid, apery_modulus);
    if (cert_cmd->parsed()) return run_verify(verify_in);
    if (fuzz_cmd->parsed()) return run_fuzz(fargs);
    if (wit_cmd->parsed()) return run_witness_f2(witness_poly);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitParse;
  } catch (const MalformedCertificate& e) {
    std::cerr << "malformed certificate: " << e.what() << std::endl;
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 70;
  }
  return kExitUsage;
}
