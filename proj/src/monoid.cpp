#include "qfckit/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "qfckit/numsgp.hpp"

namespace qfc {

namespace {

constexpr int kEvidenceSamples = 16;

unsigned long member_budget() {
  if (const char* e = std::getenv("QFC_MEMBER_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(e, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5000000UL;
}

LatticeSubgroup trivial_subgroup(std::size_t n) {
  return LatticeSubgroup{IntMatrix(std::vector<ExponentVector>{}, n), n};
}

Int floor_mod(const Int& a, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

std::string gap_status_str(GapStatus s) {
  switch (s) {
    case GapStatus::Empty:
      return "Empty";
    case GapStatus::FiniteExact:
      return "FiniteExact";
    case GapStatus::FiniteWithinBox:
      return "FiniteWithinBox";
    case GapStatus::InfiniteEvidence:
      return "InfiniteEvidence";
    default:
      return "Unknown";
  }
}

// Quotient by the unit group. In the transformed coordinates y = x * v the
// unit lattice is d_1 e_1, ..., d_u e_u, so a point is determined modulo units
// by u residues and n - u free coordinates. The free parts of the non-unit
// generators span a pointed cone, which bounds the membership search.
struct FgMonoid::Reduction {
  IntMatrix v{{}, 0};
  std::vector<Int> divisors;              // d_1..d_u
  std::size_t u = 0;                      // unit group rank
  std::size_t fdim = 0;                   // n - u
  std::vector<std::size_t> unit_idx;      // into gens_
  std::vector<std::size_t> nonunit_idx;   // into gens_, in search order
  std::vector<ExponentVector> phi;        // free parts, search order
  std::vector<ExponentVector> tau;        // residues, search order
  std::vector<ConeHRep> suffix_cones;     // cone of phi[i..]
  ExponentVector w;                       // strictly positive on every phi
  std::vector<Int> wdot;                  // <phi_i, w>, descending
  std::vector<std::vector<Int>> neg_expr; // -unit_gen as nonneg combo over gens_

  // Failed search states are query-independent; remembered across calls.
  mutable std::mutex dead_mu;
  mutable std::set<std::vector<Int>> dead;

  bool known_dead(const std::vector<Int>& key) const {
    std::lock_guard<std::mutex> lock(dead_mu);
    return dead.count(key) != 0;
  }
  void mark_dead(std::vector<Int> key) const {
    std::lock_guard<std::mutex> lock(dead_mu);
    dead.insert(std::move(key));
  }

  void split(const ExponentVector& x, ExponentVector& t, ExponentVector& f) const {
    ExponentVector y = (u == 0) ? x : vec_mat_mul(x, v);
    t.assign(y.begin(), y.begin() + (long)u);
    for (std::size_t j = 0; j < u; ++j) t[j] = floor_mod(t[j], divisors[j]);
    f.assign(y.begin() + (long)u, y.end());
  }
};

FgMonoid::FgMonoid(std::vector<ExponentVector> generators, std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("ambient rank must be positive");
  if (generators.empty()) throw std::invalid_argument("generator list must be nonempty");
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator arity mismatch");
    if (vec_is_zero(g)) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
}

const LatticeSubgroup& FgMonoid::group() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (group_) return *group_;
  }
  auto fresh = std::make_shared<const LatticeSubgroup>(
      gens_.empty() ? trivial_subgroup(n_) : group_of(gens_, n_));
  std::lock_guard<std::mutex> lock(mu_);
  if (!group_) group_ = fresh;
  return *group_;
}

const ConeHRep& FgMonoid::cone() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (cone_) return *cone_;
  }
  auto fresh = std::make_shared<const ConeHRep>(
      gens_.empty() ? ConeHRep{n_, trivial_subgroup(n_), {}} : facet_normals(gens_, n_));
  std::lock_guard<std::mutex> lock(mu_);
  if (!cone_) cone_ = fresh;
  return *cone_;
}

const std::vector<bool>& FgMonoid::unit_flags() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (unit_flags_) return *unit_flags_;
  }
  // g is a unit iff -g lies in the cone: clearing denominators on the
  // rational combination for -g yields -g = (k-1)g + sum(c_i gen_i) in M.
  const ConeHRep& c = cone();
  std::vector<bool> flags;
  flags.reserve(gens_.size());
  for (const auto& g : gens_) flags.push_back(cone_contains(c, vec_neg(g)));
  auto fresh = std::make_shared<const std::vector<bool>>(std::move(flags));
  std::lock_guard<std::mutex> lock(mu_);
  if (!unit_flags_) unit_flags_ = fresh;
  return *unit_flags_;
}

const LatticeSubgroup& FgMonoid::unit_group() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (units_) return *units_;
  }
  const auto& flags = unit_flags();
  std::vector<ExponentVector> ugens;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (flags[i]) ugens.push_back(gens_[i]);
  auto fresh = std::make_shared<const LatticeSubgroup>(
      ugens.empty() ? trivial_subgroup(n_) : group_of(ugens, n_));
  std::lock_guard<std::mutex> lock(mu_);
  if (!units_) units_ = fresh;
  return *units_;
}

bool FgMonoid::is_group() const {
  const auto& flags = unit_flags();
  return std::find(flags.begin(), flags.end(), false) == flags.end();
}

const FgMonoid::Reduction& FgMonoid::reduction() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (red_) return *red_;
  }
  auto r = std::make_shared<Reduction>();
  const auto& flags = unit_flags();
  for (std::size_t i = 0; i < gens_.size(); ++i)
    (flags[i] ? r->unit_idx : r->nonunit_idx).push_back(i);

  std::vector<ExponentVector> ugens;
  for (auto j : r->unit_idx) ugens.push_back(gens_[j]);
  LatticeSubgroup ulat = ugens.empty() ? trivial_subgroup(n_) : group_of(ugens, n_);
  r->u = ulat.rank();
  if (r->u == 0) {
    r->v = IntMatrix::identity(n_);
  } else {
    auto sd = snf(ulat.basis);
    r->v = sd.v;
    r->divisors = sd.divisors;
  }
  r->fdim = n_ - r->u;

  for (auto j : r->nonunit_idx) {
    ExponentVector t, f;
    r->split(gens_[j], t, f);
    r->tau.push_back(std::move(t));
    r->phi.push_back(std::move(f));
  }
  std::size_t k = r->phi.size();
  if (k > 0) {
    // every non-unit generator leaves the unit span, so phi is nonzero and
    // the quotient cone is pointed: the facet-normal sum separates strictly
    ConeHRep pc = facet_normals(r->phi, r->fdim);
    if (pc.normals.empty()) throw std::logic_error("quotient cone has no facets");
    r->w = vec_zero(r->fdim);
    for (const auto& nrm : pc.normals) r->w = vec_add(r->w, nrm);
    std::vector<Int> wd;
    for (const auto& f : r->phi) {
      Int d = vec_dot(f, r->w);
      if (d <= 0) throw std::logic_error("quotient cone is not pointed");
      wd.push_back(d);
    }
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return wd[a] > wd[b]; });
    auto permute = [&](auto& vec) {
      auto copy = vec;
      for (std::size_t i = 0; i < k; ++i) vec[i] = copy[order[i]];
    };
    permute(r->phi);
    permute(r->tau);
    permute(r->nonunit_idx);
    for (std::size_t i = 0; i < k; ++i) r->wdot.push_back(vec_dot(r->phi[i], r->w));
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<ExponentVector> tail(r->phi.begin() + (long)i, r->phi.end());
      r->suffix_cones.push_back(facet_normals(tail, r->fdim));
    }
  }

  for (auto j : r->unit_idx) {
    auto combo = nonneg_combination(gens_, n_, vec_neg(gens_[j]));
    if (!combo) throw std::logic_error("unit generator without cone combination");
    Int k0(1);
    for (const auto& q : *combo) k0 = lcm(k0, q.get_den());
    std::vector<Int> expr;
    for (const auto& q : *combo) {
      Rat scaled = q * k0;
      expr.push_back(scaled.get_num());
    }
    expr[j] += k0 - 1;
    r->neg_expr.push_back(std::move(expr));
  }

  std::lock_guard<std::mutex> lock(mu_);
  if (!red_) red_ = r;
  return *red_;
}

std::optional<std::vector<Int>> FgMonoid::contains(const ExponentVector& a) const {
  if (a.size() != n_) throw std::invalid_argument("point arity mismatch");
  std::vector<Int> result(gens_.size(), Int(0));
  if (vec_is_zero(a)) return result;
  if (gens_.empty()) return std::nullopt;

  const Reduction& r = reduction();
  ExponentVector ta, fa;
  r.split(a, ta, fa);
  std::size_t k = r.phi.size();

  unsigned long nodes = 0, budget = member_budget();
  std::vector<Int> chosen(k, Int(0));

  std::function<bool(std::size_t, const ExponentVector&, const ExponentVector&)> rec =
      [&](std::size_t idx, const ExponentVector& f, const ExponentVector& t) -> bool {
    if (vec_is_zero(f) && vec_is_zero(t)) {
      for (std::size_t i = idx; i < k; ++i) chosen[i] = 0;
      return true;
    }
    if (idx == k) return false;
    if (++nodes > budget) throw UndecidedError("membership search budget exhausted");
    std::vector<Int> key;
    key.reserve(1 + f.size() + t.size());
    key.push_back(Int((long)idx));
    key.insert(key.end(), f.begin(), f.end());
    key.insert(key.end(), t.begin(), t.end());
    if (r.known_dead(key)) return false;

    Int s = vec_dot(f, r.w);
    bool feasible = s > 0 && cone_contains(r.suffix_cones[idx], f);
    if (feasible) {
      Int cmax = s / r.wdot[idx];
      for (Int c = cmax; c >= 0; --c) {
        ExponentVector f2 = vec_sub(f, vec_scale(c, r.phi[idx]));
        ExponentVector t2(t.size());
        for (std::size_t j = 0; j < t.size(); ++j)
          t2[j] = floor_mod(t[j] - c * r.tau[idx][j], r.divisors[j]);
        if (rec(idx + 1, f2, t2)) {
          chosen[idx] = c;
          return true;
        }
      }
    }
    r.mark_dead(std::move(key));
    return false;
  };

  if (!rec(0, fa, ta)) return std::nullopt;

  for (std::size_t i = 0; i < k; ++i) result[r.nonunit_idx[i]] = chosen[i];
  ExponentVector residual = a;
  for (std::size_t i = 0; i < k; ++i)
    residual = vec_sub(residual, vec_scale(chosen[i], gens_[r.nonunit_idx[i]]));
  if (!vec_is_zero(residual)) {
    std::vector<ExponentVector> ugens;
    for (auto j : r.unit_idx) ugens.push_back(gens_[j]);
    auto z = lattice_solve_in_generators(ugens, n_, residual);
    if (!z) throw std::logic_error("residual escaped the unit group");
    for (std::size_t j = 0; j < z->size(); ++j) {
      if ((*z)[j] >= 0) {
        result[r.unit_idx[j]] += (*z)[j];
      } else {
        Int times = -(*z)[j];
        for (std::size_t i = 0; i < gens_.size(); ++i)
          result[i] += times * r.neg_expr[j][i];
      }
    }
  }

  ExponentVector check = vec_zero(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    check = vec_add(check, vec_scale(result[i], gens_[i]));
  if (check != a) throw std::logic_error("membership certificate failed to reassemble");
  return result;
}

namespace {

// Smallest m >= 2 with m*a in M, for a point of the cone outside M.
Int smallest_multiplier(const FgMonoid& m, const ExponentVector& a) {
  auto combo = nonneg_combination(m.generators(), m.ambient(), a);
  if (!combo) throw std::logic_error("multiplier requested outside the cone");
  Int k0(1);
  for (const auto& q : *combo) k0 = lcm(k0, q.get_den());
  for (Int mm(2); mm <= k0; ++mm)
    if (m.contains(vec_scale(mm, a))) return mm;
  throw std::logic_error("denominator-cleared multiple escaped the monoid");
}

std::vector<ExponentVector> reduced_generators(const FgMonoid& m) {
  std::vector<ExponentVector> red;
  for (const auto& g : m.generators()) {
    auto coords = lattice_solve(m.group(), g);
    red.push_back(*coords);
  }
  return red;
}

}  // namespace

Verdict is_normal(const FgMonoid& m) {
  if (m.generators().empty()) return Verdict::yes_plain();

  // Work in coordinates of the group so the ambient lattice is exactly <M>.
  const LatticeSubgroup& gm = m.group();
  std::size_t k = gm.rank();
  FgMonoid m2(reduced_generators(m), k);
  auto lift = [&](const ExponentVector& x) { return vec_mat_mul(x, gm.basis); };

  LatticeSubgroup ubar = saturation(m2.unit_group());
  for (std::size_t i = 0; i < ubar.rank(); ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      ExponentVector b = sign ? vec_neg(ubar.basis.rows[i]) : ubar.basis.rows[i];
      if (!m2.contains(b))
        return Verdict::no(NotNormalPoint{lift(b), smallest_multiplier(m2, b)});
    }
  }

  const auto& flags = m2.unit_flags();
  std::size_t u = ubar.rank();
  IntMatrix cb = (u == 0) ? IntMatrix::identity(k) : extend_to_basis(ubar);
  IntMatrix cb_inv = mat_inverse_unimodular(cb);

  std::vector<ExponentVector> pgens;
  for (std::size_t i = 0; i < m2.generators().size(); ++i) {
    if (flags[i]) continue;
    ExponentVector y = vec_mat_mul(m2.generators()[i], cb_inv);
    pgens.emplace_back(y.begin() + (long)u, y.end());
  }
  if (pgens.empty()) return Verdict::yes_plain();

  Int bound(0);
  for (const auto& p : pgens) {
    Int c = vec_content(p);
    Int nrm(0);
    for (const auto& e : p) nrm += abs(e) / c;
    bound += nrm;
  }

  std::size_t d = k - u;
  FgMonoid proj(pgens, d);
  ExponentVector lo(d, -bound), hi(d, bound);
  std::vector<ExponentVector> candidates;
  try {
    candidates = lattice_points_in_box(proj.cone(), lo, hi);
  } catch (const BoxTooLargeError&) {
    return Verdict::unknown("candidate box [-" + bound.get_str() + "," + bound.get_str() +
                            "]^" + std::to_string(d) + " exceeds the enumeration budget");
  }
  for (const auto& z : candidates) {
    if (vec_norm1(z) > bound) continue;
    if (proj.contains(z)) continue;
    ExponentVector y(k, Int(0));
    for (std::size_t j = 0; j < d; ++j) y[u + j] = z[j];
    ExponentVector x = vec_mat_mul(y, cb);
    return Verdict::no(NotNormalPoint{lift(x), smallest_multiplier(m2, x)});
  }
  return Verdict::yes_plain();
}

namespace {

bool line_holds(const FgMonoid& m, const ExponentVector& base, const ExponentVector& dir) {
  for (int s = 1; s <= kEvidenceSamples; ++s) {
    ExponentVector p = vec_add(base, vec_scale(Int(s), dir));
    if (!cone_contains(m.cone(), p)) return false;
    if (m.contains(p)) return false;
  }
  return true;
}

GapReport one_var_gap(const FgMonoid& m, const Box& box) {
  GapReport rep;
  rep.box = box;
  ZClassification cls = classify_Z_submonoid(m);
  Int d = cls.d;
  if (d == 1 && (cls.kind == ZKind::DTimesN || cls.kind == ZKind::DTimesNegN)) {
    bool neg = cls.kind == ZKind::DTimesNegN;
    std::vector<Int> flat;
    for (const auto& g : m.generators()) flat.push_back(neg ? -g[0] : g[0]);
    auto sgp = NumericalSemigroup::from_generators(flat);
    rep.status = GapStatus::FiniteExact;
    for (const auto& g : sgp.gaps()) rep.elements.push_back({neg ? -g : g});
    if (neg) std::reverse(rep.elements.begin(), rep.elements.end());
    // the complete list is independent of the requested box; record the
    // region the table actually covered
    Int top = sgp.frobenius();
    if (top < 0) top = 0;
    rep.box = neg ? Box{{-top}, {Int(0)}} : Box{{Int(0)}, {top}};
    return rep;
  }
  // gcd d >= 2: everything congruent to 1 mod d stays off M, so the gap is
  // infinite along an arithmetic progression
  ExponentVector base{Int(1)}, dir{d};
  if (cls.kind == ZKind::DTimesNegN) {
    base[0] = -1;
    dir[0] = -d;
  }
  if (!line_holds(m, base, dir)) throw std::logic_error("residue line failed verification");
  rep.status = GapStatus::InfiniteEvidence;
  rep.evidence = WitnessLine{base, dir, kEvidenceSamples};
  for (const auto& p : lattice_points_in_box(m.cone(), box.lo, box.hi))
    if (!m.contains(p)) rep.elements.push_back(p);
  return rep;
}

}  // namespace

GapReport gap_set(const FgMonoid& m, const Box& box) {
  if (box.lo.size() != m.ambient() || box.hi.size() != m.ambient())
    throw std::invalid_argument("box arity mismatch");
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (box.lo[i] > box.hi[i]) throw std::invalid_argument("box bounds inverted");

  GapReport rep;
  rep.box = box;
  if (m.generators().empty()) {
    rep.status = GapStatus::Empty;
    return rep;
  }
  if (m.is_group() && is_direct_summand(m.group())) {
    rep.status = GapStatus::Empty;
    return rep;
  }
  if (m.ambient() == 1) return one_var_gap(m, box);

  for (const auto& p : lattice_points_in_box(m.cone(), box.lo, box.hi))
    if (!m.contains(p)) rep.elements.push_back(p);

  bool pointed = m.unit_group().rank() == 0;
  if (rep.elements.empty()) {
    // a normal monoid with saturated group exhausts its cone's lattice points
    if (is_direct_summand(m.group()) && is_normal(m).answer == Answer::Yes) {
      rep.status = GapStatus::Empty;
      return rep;
    }
    rep.status = pointed ? GapStatus::FiniteWithinBox : GapStatus::Unknown;
    return rep;
  }

  std::vector<ExponentVector> dirs;
  auto add_dir = [&](ExponentVector v) {
    if (!vec_is_zero(v) && std::find(dirs.begin(), dirs.end(), v) == dirs.end())
      dirs.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < m.ambient(); ++i) add_dir(vec_unit(m.ambient(), i));
  for (std::size_t i = 0; i < m.ambient(); ++i) add_dir(vec_neg(vec_unit(m.ambient(), i)));
  for (const auto& g : m.generators()) {
    ExponentVector prim = g;
    Int c = vec_content(prim);
    for (auto& e : prim) e /= c;
    add_dir(prim);
  }
  for (const auto& g : rep.elements)
    for (const auto& dir : dirs)
      if (line_holds(m, g, dir)) {
        rep.status = GapStatus::InfiniteEvidence;
        rep.evidence = WitnessLine{g, dir, kEvidenceSamples};
        return rep;
      }

  bool shell_clean = true;
  for (const auto& g : rep.elements)
    for (std::size_t i = 0; i < g.size() && shell_clean; ++i)
      if (g[i] == box.lo[i] || g[i] == box.hi[i]) shell_clean = false;
  rep.status = (shell_clean && pointed) ? GapStatus::FiniteWithinBox : GapStatus::Unknown;
  return rep;
}

ZClassification classify_Z_submonoid(const FgMonoid& m) {
  if (m.ambient() != 1) throw std::invalid_argument("classification requires n = 1");
  ZClassification out;
  if (m.generators().empty()) {
    out.kind = ZKind::Zero;
    out.d = 0;
    return out;
  }
  bool has_pos = false, has_neg = false;
  Int d(0);
  for (const auto& g : m.generators()) {
    (g[0] > 0 ? has_pos : has_neg) = true;
    d = gcd(d, g[0]);
  }
  out.d = d;
  out.kind = has_pos && has_neg ? ZKind::DTimesZ : (has_pos ? ZKind::DTimesN : ZKind::DTimesNegN);
  return out;
}

}  // namespace qfc
