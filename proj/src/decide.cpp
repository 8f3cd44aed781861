#include "qfckit/decide.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qfc {

namespace {

// First saturation generator outside the group, paired with its elementary
// divisor: t is outside, divisor * t is inside, and no smaller multiple works.
std::pair<ExponentVector, Int> torsion_from_snf(const LatticeSubgroup& g) {
  SmithDecomposition sd = snf(g.basis);
  for (std::size_t k = 0; k < sd.divisors.size(); ++k) {
    if (sd.divisors[k] > 1) {
      ExponentVector t = sd.v_inv.rows[k];
      if (lattice_member(g, t)) throw std::logic_error("torsion row lies inside the group");
      return {t, sd.divisors[k]};
    }
  }
  throw std::logic_error("no divisor above 1 in a non-summand lattice");
}

std::string field_assumption(const Int& d) {
  return "coefficient field has >= " + d.get_str() + " elements";
}

// Whether the domain contains a field with at least d elements. The integers
// contain no field, so d-th-root refutations never apply over them.
bool domain_has_field(const CoefficientDomain& dom, const Int& d) {
  if (dom.kind == CoefficientDomain::Kind::Rationals) return true;
  if (dom.kind == CoefficientDomain::Kind::PrimeField) return dom.p >= d;
  return false;
}

SummandBasis basis_certificate(const LatticeSubgroup& g, long free_count) {
  SummandBasis cert;
  cert.c = extend_to_basis(g);
  cert.r = static_cast<long>(g.rank());
  cert.free_count = free_count;
  return cert;
}

// Recognizes M = U + sum_j N p_j with Z-independent quotient images and <M> a
// direct summand. The stacked rows [p_1..p_s; unit basis; completion] are then
// a unimodular matrix mapping M onto N^s x Z^t in coordinates.
std::optional<SummandBasis> standard_shape(const FgMonoid& m) {
  const std::size_t n = m.ambient();
  const LatticeSubgroup& ug = m.unit_group();
  if (!is_direct_summand(ug)) return std::nullopt;
  const std::size_t u = ug.rank();

  std::vector<ExponentVector> nonunits;
  const auto& flags = m.unit_flags();
  for (std::size_t i = 0; i < m.generators().size(); ++i)
    if (!flags[i]) nonunits.push_back(m.generators()[i]);

  if (nonunits.empty()) {
    if (!is_direct_summand(m.group())) return std::nullopt;
    return basis_certificate(m.group(), 0);
  }

  // images of the non-unit generators in the free quotient by the unit span
  IntMatrix c0 = u == 0 ? IntMatrix::identity(n) : extend_to_basis(ug);
  IntMatrix c0inv = mat_inverse_unimodular(c0);
  auto image = [&](const ExponentVector& x) {
    ExponentVector t = vec_mat_mul(x, c0inv);
    return ExponentVector(t.begin() + static_cast<long>(u), t.end());
  };

  std::vector<ExponentVector> imgs;
  std::vector<std::size_t> lift;
  for (std::size_t i = 0; i < nonunits.size(); ++i) {
    ExponentVector q = image(nonunits[i]);
    if (vec_is_zero(q)) throw std::logic_error("non-unit generator inside the unit span");
    if (std::find(imgs.begin(), imgs.end(), q) == imgs.end()) {
      imgs.push_back(std::move(q));
      lift.push_back(i);
    }
  }

  // irreducible images: not an image plus a nonzero element of the quotient
  FgMonoid quot(imgs, n - u);
  std::vector<ExponentVector> irr;
  std::vector<std::size_t> irr_lift;
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < imgs.size() && !reducible; ++j) {
      ExponentVector rest = vec_sub(imgs[i], imgs[j]);
      if (vec_is_zero(rest)) continue;
      if (quot.contains(rest)) reducible = true;
    }
    if (!reducible) {
      irr.push_back(imgs[i]);
      irr_lift.push_back(lift[i]);
    }
  }

  // the quotient monoid is free iff its irreducibles are Z-independent and
  // reach every image
  if (group_of(irr, n - u).rank() != irr.size()) return std::nullopt;
  FgMonoid freeq(irr, n - u);
  for (const auto& q : imgs)
    if (!freeq.contains(q)) return std::nullopt;

  std::vector<ExponentVector> stack;
  for (std::size_t gi : irr_lift) stack.push_back(nonunits[gi]);
  for (const auto& row : ug.basis.rows) stack.push_back(row);
  LatticeSubgroup span = group_of(stack, n);
  if (span.rank() != stack.size() || !(span == m.group()))
    throw std::logic_error("stacked rows fail to form a basis of the group");
  if (!is_direct_summand(span)) return std::nullopt;

  // replace the leading rows of a basis extension with the stacked rows;
  // a change of basis within the subgroup keeps the determinant unimodular
  IntMatrix ext = extend_to_basis(span);
  std::vector<ExponentVector> rows = stack;
  for (std::size_t i = span.rank(); i < n; ++i) rows.push_back(ext.rows[i]);
  IntMatrix c(std::move(rows), n);
  if (abs(mat_det(c)) != 1) throw std::logic_error("assembled basis is not unimodular");

  SummandBasis cert;
  cert.c = std::move(c);
  cert.r = static_cast<long>(stack.size());
  cert.free_count = static_cast<long>(irr.size());
  return cert;
}

}  // namespace

Verdict qfc_monoid(const FgMonoid& m) {
  const LatticeSubgroup& g = m.group();
  if (is_direct_summand(g)) return Verdict::yes(basis_certificate(g, -1));
  auto [t, mult] = torsion_from_snf(g);
  return Verdict::no(TorsionElement{std::move(t), mult});
}

Verdict pfc_monoid(const FgMonoid& m) {
  Verdict nor = is_normal(m);
  if (nor.answer == Answer::No) return Verdict::no(*nor.witness);

  if (m.ambient() == 1) {
    ZClassification cls = classify_Z_submonoid(m);
    switch (cls.kind) {
      case ZKind::Zero:
        return Verdict::yes(SummandBasis{IntMatrix::identity(1), 0, 0});
      case ZKind::DTimesZ:
        if (cls.d == 1) return Verdict::yes(SummandBasis{IntMatrix::identity(1), 1, 0});
        break;
      case ZKind::DTimesN:
      case ZKind::DTimesNegN:
        if (cls.d == 1) {
          if (nor.answer != Answer::Yes)
            return Verdict::unknown("normality undecided within the enumeration budget");
          // normal, gcd 1, one-sided: the monoid is exactly N or -N
          IntMatrix c(1, 1);
          c.at(0, 0) = cls.kind == ZKind::DTimesN ? 1 : -1;
          return Verdict::yes(SummandBasis{std::move(c), 1, 1});
        }
        break;
    }
    Verdict v = Verdict::no(GcdTooBig{cls.d});
    v.assumptions.push_back(field_assumption(cls.d));
    return v;
  }

  try {
    if (auto cert = standard_shape(m)) return Verdict::yes(std::move(*cert));
  } catch (const UndecidedError&) {
    return Verdict::unknown("membership budget exhausted during shape recognition");
  }
  return Verdict::unknown("pfc not characterized for n >= 2 by the paper");
}

Verdict fc_monoid(const FgMonoid& m) {
  const std::size_t n = m.ambient();
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e = vec_unit(n, i);
    if (!m.contains(e)) return Verdict::no(UnitOutsideSubalgebra{std::move(e)});
    ExponentVector f = vec_neg(vec_unit(n, i));
    if (!m.contains(f)) return Verdict::no(UnitOutsideSubalgebra{std::move(f)});
  }
  // all +-e_i lie in M, so M = Z^n and the subalgebra is the whole ring
  return Verdict::yes(SummandBasis{IntMatrix::identity(n), static_cast<long>(n), 0});
}

Verdict retract_monoid(const FgMonoid& m) {
  if (!m.is_group()) {
    const auto& flags = m.unit_flags();
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (!flags[i]) return Verdict::no(NonGroupGenerator{m.generators()[i]});
    throw std::logic_error("non-group monoid with every generator a unit");
  }
  if (!is_direct_summand(m.group())) {
    auto [t, mult] = torsion_from_snf(m.group());
    return Verdict::no(TorsionElement{std::move(t), mult});
  }
  return Verdict::yes(basis_certificate(m.group(), 0));
}

SubalgebraSpec::SubalgebraSpec(CoefficientDomain d, std::size_t vars,
                               std::vector<LaurentPoly> gens, EffortBudget e)
    : domain(d), n(vars), generators(std::move(gens)), effort(e) {
  if (n == 0) throw std::invalid_argument("SubalgebraSpec: ambient dimension must be positive");
  if (effort.max_word_len == 0 || effort.max_basis == 0)
    throw std::invalid_argument("SubalgebraSpec: effort budget must be positive");
  for (const auto& g : generators) {
    if (g.vars() != n) throw std::invalid_argument("SubalgebraSpec: generator arity mismatch");
    if (!(g.domain() == domain))
      throw DomainMismatchError("SubalgebraSpec: generator domain mismatch");
    if (g.is_zero()) throw std::invalid_argument("SubalgebraSpec: zero generator");
  }
}

namespace {

struct Word {
  LaurentPoly poly;
  std::string desc;
};

std::string word_desc(const std::vector<std::size_t>& tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size();) {
    std::size_t j = i;
    while (j < tuple.size() && tuple[j] == tuple[i]) ++j;
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(tuple[i] + 1);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

// Generator products by word-length stratum, in index order within each
// stratum. Stops, flagging, once another word would push the number of
// distinct support exponents or the word count past the cap; the prefix kept
// is identical for every budget, which makes discovery monotone in L.
std::vector<Word> enumerate_words(const SubalgebraSpec& a, bool* exceeded) {
  std::vector<Word> words;
  words.push_back({LaurentPoly::constant(a.domain, a.n, 1), "1"});
  std::set<ExponentVector> exps{vec_zero(a.n)};

  struct Node {
    std::vector<std::size_t> tuple;
    LaurentPoly poly;
  };
  std::vector<Node> stratum;
  for (std::size_t len = 1; len <= a.effort.max_word_len; ++len) {
    std::vector<Node> next;
    if (len == 1) {
      for (std::size_t i = 0; i < a.generators.size(); ++i)
        next.push_back({{i}, a.generators[i]});
    } else {
      for (const Node& nd : stratum)
        for (std::size_t i = nd.tuple.back(); i < a.generators.size(); ++i) {
          std::vector<std::size_t> t = nd.tuple;
          t.push_back(i);
          next.push_back({std::move(t), nd.poly * a.generators[i]});
        }
    }
    for (Node& nd : next) {
      std::set<ExponentVector> grown = exps;
      for (const auto& [e, c] : nd.poly.terms()) grown.insert(e);
      if (grown.size() > a.effort.max_basis || words.size() >= a.effort.max_basis) {
        *exceeded = true;
        return words;
      }
      exps = std::move(grown);
      words.push_back({nd.poly, word_desc(nd.tuple)});
    }
    stratum = std::move(next);
  }
  return words;
}

std::string rat_term(const Rat& coeff, const std::string& desc, bool first) {
  Rat mag = abs(coeff);
  std::string core = mag == 1 ? desc : mag.get_str() + "*" + desc;
  if (first) return coeff < 0 ? "-" + core : core;
  return (coeff < 0 ? " - " : " + ") + core;
}

}  // namespace

DiscoveryResult discover_monomials(const SubalgebraSpec& a) {
  DiscoveryResult result;
  std::vector<Word> words = enumerate_words(a, &result.budget_exceeded);

  // the solving field: rationals stand in for the integers, whose candidate
  // combinations are then filtered for integrality
  CoefficientDomain fld =
      a.domain.kind == CoefficientDomain::Kind::Integers ? CoefficientDomain::rationals() : a.domain;
  auto reduce = [&](const Rat& x) {
    return fld.kind == CoefficientDomain::Kind::PrimeField ? normalize_coeff(fld, x) : x;
  };

  std::map<ExponentVector, std::size_t> row_of;
  for (const Word& w : words)
    for (const auto& [e, c] : w.poly.terms()) row_of.emplace(e, 0);
  std::size_t nr = 0;
  for (auto& [e, idx] : row_of) idx = nr++;
  const std::size_t nc = words.size();

  // row-reduce [columns of word coefficients | identity]; the transform side
  // witnesses which targets lie in the column space and with what combination
  std::vector<std::vector<Rat>> mat(nr, std::vector<Rat>(nc, Rat(0)));
  std::vector<std::vector<Rat>> tr(nr, std::vector<Rat>(nr, Rat(0)));
  for (std::size_t i = 0; i < nr; ++i) tr[i][i] = 1;
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [e, c] : words[j].poly.terms()) mat[row_of[e]][j] = c;

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t cur = 0;
  for (std::size_t col = 0; col < nc && cur < nr; ++col) {
    std::size_t pr = cur;
    while (pr < nr && mat[pr][col] == 0) ++pr;
    if (pr == nr) continue;
    std::swap(mat[pr], mat[cur]);
    std::swap(tr[pr], tr[cur]);
    Rat inv = coeff_inverse(fld, mat[cur][col]);
    for (auto& x : mat[cur]) x = reduce(x * inv);
    for (auto& x : tr[cur]) x = reduce(x * inv);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == cur || mat[r][col] == 0) continue;
      Rat f = mat[r][col];
      for (std::size_t k = 0; k < nc; ++k)
        if (mat[cur][k] != 0) mat[r][k] = reduce(mat[r][k] - f * mat[cur][k]);
      for (std::size_t k = 0; k < nr; ++k)
        if (tr[cur][k] != 0) tr[r][k] = reduce(tr[r][k] - f * tr[cur][k]);
    }
    pivots.emplace_back(cur, col);
    ++cur;
  }
  const std::size_t rank = cur;

  for (const auto& [target, ti] : row_of) {
    bool solvable = true;
    for (std::size_t r = rank; r < nr && solvable; ++r)
      if (tr[r][ti] != 0) solvable = false;
    if (!solvable) continue;

    std::vector<Rat> lambda(nc, Rat(0));
    for (const auto& [prow, pcol] : pivots) lambda[pcol] = tr[prow][ti];
    if (a.domain.kind == CoefficientDomain::Kind::Integers) {
      bool integral = true;
      for (const Rat& l : lambda)
        if (l.get_den() != 1) integral = false;
      if (!integral) continue;
    }

    LaurentPoly acc = LaurentPoly::zero(a.domain, a.n);
    std::string expr;
    bool first = true;
    for (std::size_t j = 0; j < nc; ++j) {
      if (lambda[j] == 0) continue;
      acc = acc + words[j].poly.scaled(lambda[j]);
      expr += rat_term(lambda[j], words[j].desc, first);
      first = false;
    }
    auto mono = acc.monic_monomial_exponent();
    if (!mono || !(*mono == target))
      throw std::logic_error("discovered combination failed verification");
    result.exponents.push_back(target);
    result.expressions.emplace(target, std::move(expr));
  }
  return result;
}

namespace {

// Textual product of parenthesized discovered expressions with multiplicities;
// evaluates to the monic monomial at the summed exponent.
std::string product_expression(const DiscoveryResult& d,
                               const std::map<ExponentVector, Int>& mult) {
  if (mult.empty()) return "1";
  std::string s;
  for (const auto& [e, k] : mult) {
    if (!s.empty()) s += "*";
    s += "(" + d.expressions.at(e) + ")";
    if (k != 1) s += "^" + k.get_str();
  }
  return s;
}

}  // namespace

Verdict qfc_general(const SubalgebraSpec& a) {
  DiscoveryResult d = discover_monomials(a);
  const std::size_t n = a.n;
  LatticeSubgroup g = group_of(d.exponents, n);

  if (g.rank() == n && is_direct_summand(g)) {
    // the exponent group is all of Z^n; a base point w with every w + e_i
    // also discovered certifies qfc through the localization criterion
    std::set<ExponentVector> have(d.exponents.begin(), d.exponents.end());
    std::vector<ExponentVector> cand = d.exponents;
    std::stable_sort(cand.begin(), cand.end(),
                     [](const ExponentVector& x, const ExponentVector& y) {
                       Int nx = vec_norm1(x), ny = vec_norm1(y);
                       if (nx != ny) return nx < ny;
                       return x < y;
                     });
    for (const ExponentVector& w : cand) {
      bool all = true;
      for (std::size_t i = 0; i < n && all; ++i)
        if (!have.count(vec_add(w, vec_unit(n, i)))) all = false;
      if (!all) continue;
      KeyLemmaWitness cert;
      cert.w0 = w;
      cert.c = IntMatrix::identity(n);
      cert.r = static_cast<long>(n);
      cert.memberships.push_back({w, {}, d.expressions.at(w)});
      for (std::size_t i = 0; i < n; ++i) {
        ExponentVector p = vec_add(w, vec_unit(n, i));
        cert.memberships.push_back({p, {}, d.expressions.at(p)});
      }
      return Verdict::yes(std::move(cert));
    }

    // no discovered base point: assemble one from integer combinations, using
    // that sums of discovered exponents stay verified via products
    std::vector<std::map<ExponentVector, Int>> pos(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto z = lattice_solve_in_generators(d.exponents, n, vec_unit(n, i));
      if (!z) throw std::logic_error("unit vector escaped a full exponent group");
      for (std::size_t j = 0; j < z->size(); ++j) {
        if ((*z)[j] > 0) pos[i][d.exponents[j]] += (*z)[j];
        if ((*z)[j] < 0) neg[i][d.exponents[j]] += -(*z)[j];
      }
    }
    std::map<ExponentVector, Int> base;
    ExponentVector w = vec_zero(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [e, k] : neg[i]) {
        base[e] += k;
        w = vec_add(w, vec_scale(k, e));
      }
    KeyLemmaWitness cert;
    cert.w0 = w;
    cert.c = IntMatrix::identity(n);
    cert.r = static_cast<long>(n);
    cert.memberships.push_back({w, {}, product_expression(d, base)});
    for (std::size_t i = 0; i < n; ++i) {
      std::map<ExponentVector, Int> mi = pos[i];
      ExponentVector p = vec_unit(n, i);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        for (const auto& [e, c] : neg[k]) mi[e] += c;
      }
      ExponentVector check = vec_zero(n);
      for (const auto& [e, k] : mi) check = vec_add(check, vec_scale(k, e));
      if (!(check == vec_add(w, p)))
        throw std::logic_error("combination mismatch assembling the base point");
      cert.memberships.push_back({vec_add(w, p), {}, product_expression(d, mi)});
    }
    return Verdict::yes(std::move(cert));
  }

  if (n == 1) {
    Int dd = 0;
    for (const auto& gen : a.generators)
      for (const auto& [e, c] : gen.terms()) dd = gcd(dd, e[0]);
    dd = abs(dd);
    bool nonzero_found = false;
    for (const auto& e : d.exponents)
      if (!vec_is_zero(e)) nonzero_found = true;
    if (dd >= 2 && nonzero_found && domain_has_field(a.domain, dd)) {
      // every generator lives in the subring of x^(+-d), yet monomials exist
      Verdict v = Verdict::no(GcdTooBig{dd});
      v.assumptions.push_back(field_assumption(dd));
      return v;
    }
  }

  std::ostringstream reason;
  reason << "inconclusive: discovered " << d.exponents.size() << " exponents generating a rank-"
         << g.rank() << " subgroup of Z^" << n << " with no base point found";
  if (d.budget_exceeded) reason << "; discovery budget exceeded";
  return Verdict::unknown(reason.str());
}

Verdict qfc_from_finite_gap(const FgMonoid& m, const GapReport& gap) {
  if (gap.status != GapStatus::Empty && gap.status != GapStatus::FiniteExact)
    throw StatusNotCertified("gap status " + gap_status_str(gap.status) +
                             " does not certify a finite gap set");
  const std::size_t n = m.ambient();
  LatticeSubgroup h = saturation(m.group());
  const std::size_t r = h.rank();
  KeyLemmaWitness cert;
  cert.c = r == 0 ? IntMatrix::identity(n) : extend_to_basis(h);
  cert.r = static_cast<long>(r);

  auto evidence = [&](const ExponentVector& p) {
    auto co = m.contains(p);
    if (!co) throw std::logic_error("finite-gap certificate point escaped the monoid");
    return MembershipEvidence{p, std::move(*co), ""};
  };

  if (m.is_group()) {
    // a group with certified gaps is saturated: base point 0 works directly
    cert.w0 = vec_zero(n);
    cert.memberships.push_back(evidence(vec_zero(n)));
    for (std::size_t i = 0; i < r; ++i) cert.memberships.push_back(evidence(cert.c.rows[i]));
    return Verdict::yes(std::move(cert));
  }

  const ConeHRep& cone = m.cone();
  ExponentVector w = interior_vector(m.generators(), n);
  Int content = vec_content(w);
  for (Int& x : w) x /= content;  // primitive interior direction

  // above N1 the shifted points stay in the cone; above N2 their norms clear
  // every recorded gap, so membership follows and contains() re-verifies it
  Rat n1(0);
  for (const ExponentVector& v : cone.normals) {
    Int wd = vec_dot(w, v);
    if (wd <= 0) throw std::logic_error("interior vector not strictly interior");
    for (std::size_t i = 0; i < r; ++i) {
      Int num = abs(vec_dot(cert.c.rows[i], v));
      Rat q = Rat(num) / Rat(wd);
      if (q > n1) n1 = q;
    }
  }
  Int n2 = 0;
  for (const ExponentVector& gpt : gap.elements)
    for (std::size_t i = 0; i < r; ++i) {
      Int t = vec_norm1(gpt) + vec_norm1(cert.c.rows[i]);
      if (t > n2) n2 = t;
    }
  Int nfloor;
  mpz_fdiv_q(nfloor.get_mpz_t(), n1.get_num().get_mpz_t(), n1.get_den().get_mpz_t());
  Int big = std::max(nfloor, n2) + 1;

  ExponentVector nw = vec_scale(big, w);
  cert.memberships.push_back(evidence(nw));
  for (std::size_t i = 0; i < r; ++i)
    cert.memberships.push_back(evidence(vec_add(nw, cert.c.rows[i])));

  cert.w0 = vec_mat_mul(nw, mat_inverse_unimodular(cert.c));
  for (std::size_t i = r; i < n; ++i)
    if (cert.w0[i] != 0) throw std::logic_error("base point outside the subgroup span");
  return Verdict::yes(std::move(cert));
}

Verdict one_var_pfc_general(const SubalgebraSpec& a) {
  if (a.n != 1) throw std::invalid_argument("one_var_pfc_general: n must be 1");
  DiscoveryResult d = discover_monomials(a);
  bool nonzero_found = false;
  for (const auto& e : d.exponents)
    if (!vec_is_zero(e)) nonzero_found = true;
  if (!nonzero_found)
    throw HypothesisUnmet("no nonzero monomial discovered: the one-variable "
                          "characterization assumes M(A) != {0}");

  // monomial generators reduce exactly to the monoid decider
  std::vector<ExponentVector> mono;
  bool all_monic = true;
  for (const auto& g : a.generators) {
    auto e = g.monic_monomial_exponent();
    if (!e) {
      all_monic = false;
      break;
    }
    mono.push_back(std::move(*e));
  }
  if (all_monic) return pfc_monoid(FgMonoid(std::move(mono), 1));

  // structural recognition of the three pfc shapes
  std::set<ExponentVector> have(d.exponents.begin(), d.exponents.end());
  bool has_pos = have.count(ExponentVector{Int(1)}) > 0;
  bool has_neg = have.count(ExponentVector{Int(-1)}) > 0;
  bool all_nonneg = true, all_nonpos = true;
  for (const auto& g : a.generators)
    for (const auto& [e, c] : g.terms()) {
      if (e[0] < 0) all_nonneg = false;
      if (e[0] > 0) all_nonpos = false;
    }
  if (has_pos && has_neg)
    return Verdict::yes(SummandBasis{IntMatrix::identity(1), 1, 0});  // A = B
  if (has_pos && all_nonneg)
    return Verdict::yes(SummandBasis{IntMatrix::identity(1), 1, 1});  // A = R[x]
  if (has_neg && all_nonpos) {
    IntMatrix c(1, 1);
    c.at(0, 0) = -1;
    return Verdict::yes(SummandBasis{std::move(c), 1, 1});  // A = R[x^-1]
  }

  Verdict q = qfc_general(a);
  if (q.answer == Answer::No) {
    // pfc implies qfc, so a qfc refutation carries over
    Verdict v = Verdict::no(*q.witness);
    v.assumptions = q.assumptions;
    return v;
  }
  return Verdict::unknown("one-variable pfc recognition inconclusive for these generators");
}

}  // namespace qfc
