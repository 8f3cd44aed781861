#include "qfckit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qfckit/decide.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qfc {
namespace {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::invalid_argument("oracle: value out of range");
  return v.get_si();
}

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Exact one variable shift rules. Members of M lie in dZ, so a support can
// only be shifted into M when its exponents share a residue class modulo d;
// one sided monoids add a sign window, checked against the membership table.
struct LineRules {
  ZKind kind = ZKind::Zero;
  long d = 0;
  long wide_lo = 0;
  long wide_hi = -1;
  std::vector<char> member; // membership over [wide_lo, wide_hi]

  bool is_member(long e) const {
    // the scan only probes inside the table; the window bounds guarantee it
    if (e < wide_lo || e > wide_hi) return false;
    return member[static_cast<std::size_t>(e - wide_lo)] != 0;
  }
};

LineRules line_rules(const FgMonoid& m, long lo, long hi) {
  LineRules r;
  ZClassification cls = classify_Z_submonoid(m);
  r.kind = cls.kind;
  r.d = to_long(cls.d);
  long w = std::max(std::labs(lo), std::labs(hi));
  r.wide_lo = std::min(2 * lo, lo - w);
  r.wide_hi = std::max(2 * hi, hi + w);
  for (long e = r.wide_lo; e <= r.wide_hi; ++e)
    r.member.push_back(m.contains(ExponentVector{Int(e)}).has_value() ? 1 : 0);
  return r;
}

// Whether some unit shift places the support inside M. Congruent exponents
// always admit a shift: dZ directly, one sided monoids through the Frobenius
// tail of the gcd 1 quotient semigroup.
bool line_qfc_shiftable(const LineRules& r, const std::vector<long>& supp) {
  if (r.kind == ZKind::Zero) return supp.size() == 1;
  long ref = supp.front();
  for (long e : supp)
    if ((e - ref) % r.d != 0) return false;
  return true;
}

// Whether one shift s places Supp(f)+s and Supp(g)-s inside M together. The
// residue constraints pin s modulo d; for one sided monoids the sign bounds
// leave a finite window which is scanned exactly.
bool line_pfc_shiftable(const LineRules& r, const std::vector<long>& sf,
                        const std::vector<long>& sg) {
  if (r.kind == ZKind::Zero)
    return sf.size() == 1 && sg.size() == 1 && sf.front() + sg.front() == 0;
  long d = r.d;
  long rf = sf.front(), rg = sg.front();
  for (long e : sf)
    if ((e - rf) % d != 0) return false;
  for (long e : sg)
    if ((e - rg) % d != 0) return false;
  if ((rf + rg) % d != 0) return false;
  if (r.kind == ZKind::DTimesZ) return true;
  long s_lo, s_hi;
  if (r.kind == ZKind::DTimesN) {
    s_lo = -*std::min_element(sf.begin(), sf.end());
    s_hi = *std::min_element(sg.begin(), sg.end());
  } else {
    s_lo = *std::max_element(sg.begin(), sg.end());
    s_hi = -*std::max_element(sf.begin(), sf.end());
  }
  long rem = ((-rf - s_lo) % d + d) % d;
  for (long s = s_lo + rem; s <= s_hi; s += d) {
    bool ok = true;
    for (long e : sf) ok = ok && r.is_member(e + s);
    for (long e : sg) ok = ok && r.is_member(e - s);
    if (ok) return true;
  }
  return false;
}

// Dense membership table over a coordinate box, for the n >= 2 evidence
// regime. Probes outside the stored range report non-membership; the scan
// ranges are sized so that never happens.
struct BoxTable {
  std::size_t n = 0;
  std::vector<long> lo, hi;
  std::vector<std::size_t> stride;
  std::vector<char> mem;

  bool member(const std::vector<long>& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
      idx += stride[i] * static_cast<std::size_t>(p[i] - lo[i]);
    }
    return mem[idx] != 0;
  }
};

BoxTable box_table(const FgMonoid& m, const std::vector<long>& lo, const std::vector<long>& hi) {
  BoxTable t;
  t.n = lo.size();
  t.lo = lo;
  t.hi = hi;
  t.stride.assign(t.n, 1);
  std::size_t total = 1;
  for (std::size_t i = t.n; i-- > 0;) {
    t.stride[i] = total;
    total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (total > (1u << 22)) throw std::invalid_argument("oracle: membership table too large");
  }
  t.mem.assign(total, 0);
  std::vector<long> pt = lo;
  for (std::size_t idx = 0; idx < total; ++idx) {
    ExponentVector e(t.n);
    for (std::size_t i = 0; i < t.n; ++i) e[i] = pt[i];
    t.mem[idx] = m.contains(e).has_value() ? 1 : 0;
    for (std::size_t i = t.n; i-- > 0;) {
      if (pt[i] < hi[i]) {
        ++pt[i];
        for (std::size_t k = i + 1; k < t.n; ++k) pt[k] = lo[k];
        break;
      }
      pt[i] = lo[i];
    }
  }
  return t;
}

bool next_shift(std::vector<long>& s, long radius) {
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s[k] < radius) {
      ++s[k];
      std::fill(s.begin() + static_cast<long>(k) + 1, s.end(), -radius);
      return true;
    }
  }
  return false;
}

bool shifted_in_table(const BoxTable& t, const std::vector<std::vector<long>>& pts,
                      const std::vector<long>& s, int sign) {
  std::vector<long> q(t.n);
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < t.n; ++i) q[i] = p[i] + sign * s[i];
    if (!t.member(q)) return false;
  }
  return true;
}

bool box_qfc_shiftable(const BoxTable& t, const std::vector<std::vector<long>>& pts, long radius) {
  std::vector<long> s(t.n, -radius);
  do {
    if (shifted_in_table(t, pts, s, +1)) return true;
  } while (next_shift(s, radius));
  return false;
}

bool box_pfc_shiftable(const BoxTable& t, const std::vector<std::vector<long>>& f,
                       const std::vector<std::vector<long>>& g, long radius) {
  std::vector<long> s(t.n, -radius);
  do {
    if (shifted_in_table(t, f, s, +1) && shifted_in_table(t, g, s, -1)) return true;
  } while (next_shift(s, radius));
  return false;
}

// Carryless multiplication: the product bitmask of two F_2 polynomials.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t bb = b;
  while (a) {
    acc ^= bb << __builtin_ctz(a);
    a &= a - 1;
  }
  return acc;
}

// Coefficient vectors compare lexicographically from the lowest box point.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) == 0;
}

struct RawCe {
  std::uint32_t i, j;
};

struct ScanTotals {
  std::uint64_t pairs = 0;
  std::uint64_t in_algebra = 0;
  std::uint64_t found = 0;
  bool budget_hit = false;
  std::vector<RawCe> kept;
};

struct FastCtx {
  std::vector<std::uint32_t> polys;          // sorted coefficient masks
  std::vector<std::vector<long>> supp;       // exponents per poly, ascending
  std::vector<std::uint8_t> factor_ok;       // fc: support in M; qfc: shiftable
  std::uint64_t member_prod = 0;             // bit k = member(2*lo + k)
  LineRules rules;
  FuzzProperty prop = FuzzProperty::Qfc;
};

bool fast_pair_ce(const FastCtx& c, std::size_t i, std::size_t j, bool& in_alg) {
  std::uint64_t prod = clmul(c.polys[i], c.polys[j]);
  if (prod & ~c.member_prod) {
    in_alg = false;
    return false;
  }
  in_alg = true;
  if (c.prop == FuzzProperty::Pfc) return !line_pfc_shiftable(c.rules, c.supp[i], c.supp[j]);
  return !(c.factor_ok[i] && c.factor_ok[j]);
}

ScanTotals fast_scan_serial(const FastCtx& c, std::uint64_t max_pairs, std::size_t cap) {
  ScanTotals t;
  const std::size_t count = c.polys.size();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t kept_i = 0;
    for (std::size_t j = i; j < count; ++j) {
      if (max_pairs && t.pairs == max_pairs) {
        t.budget_hit = true;
        return t;
      }
      ++t.pairs;
      bool in_alg = false;
      if (fast_pair_ce(c, i, j, in_alg)) {
        ++t.found;
        if (t.kept.size() < cap && kept_i < cap)
          t.kept.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        ++kept_i;
      }
      if (in_alg) ++t.in_algebra;
    }
  }
  return t;
}

ScanTotals fast_scan_parallel(const FastCtx& c, std::size_t cap) {
#ifndef _OPENMP
  return fast_scan_serial(c, 0, cap);
#else
  ScanTotals t;
  const long count = static_cast<long>(c.polys.size());
  unsigned long long in_alg_total = 0, found_total = 0;
  std::vector<std::vector<RawCe>> local(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel reduction(+ : in_alg_total, found_total)
  {
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
      std::size_t kept_i = 0;
      for (long j = i; j < count; ++j) {
        bool in_alg = false;
        if (fast_pair_ce(c, static_cast<std::size_t>(i), static_cast<std::size_t>(j), in_alg)) {
          ++found_total;
          if (kept_i < cap) {
            mine.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
            ++kept_i;
          }
        }
        if (in_alg) ++in_alg_total;
      }
    }
  }
  t.pairs = static_cast<std::uint64_t>(count) * (static_cast<std::uint64_t>(count) + 1) / 2;
  t.in_algebra = in_alg_total;
  t.found = found_total;
  for (auto& v : local) t.kept.insert(t.kept.end(), v.begin(), v.end());
  std::sort(t.kept.begin(), t.kept.end(),
            [](const RawCe& a, const RawCe& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  if (t.kept.size() > cap) t.kept.resize(cap);
  return t;
#endif
}

// General path: any prime p, any dimension, serial. Polynomials are base p
// digit vectors over the box points.
struct GenPoly {
  std::vector<std::vector<long>> pts; // support points
  std::vector<long> coef;             // matching nonzero coefficients
};

struct GenCtx {
  std::vector<GenPoly> polys;
  std::vector<std::uint8_t> factor_ok;
  long p = 2;
  std::size_t n = 1;
  long radius = 0;
  LineRules rules;  // n = 1
  BoxTable table;   // n >= 2
  FuzzProperty prop = FuzzProperty::Qfc;
};

std::vector<long> line_support(const GenPoly& f) {
  std::vector<long> s;
  for (const auto& p : f.pts) s.push_back(p[0]);
  return s;
}

bool gen_product_in_algebra(const GenCtx& c, const GenPoly& f, const GenPoly& g) {
  std::map<std::vector<long>, long> prod;
  std::vector<long> key(c.n);
  for (std::size_t a = 0; a < f.pts.size(); ++a)
    for (std::size_t b = 0; b < g.pts.size(); ++b) {
      for (std::size_t i = 0; i < c.n; ++i) key[i] = f.pts[a][i] + g.pts[b][i];
      prod[key] = (prod[key] + f.coef[a] * g.coef[b]) % c.p;
    }
  for (const auto& [pt, v] : prod) {
    if (v == 0) continue;
    bool in = c.n == 1 ? c.rules.is_member(pt[0]) : c.table.member(pt);
    if (!in) return false;
  }
  return true;
}

bool gen_pair_ce(GenCtx& c, std::map<std::vector<std::vector<long>>, bool>& qfc_memo,
                 std::size_t i, std::size_t j, bool& in_alg) {
  in_alg = gen_product_in_algebra(c, c.polys[i], c.polys[j]);
  if (!in_alg) return false;
  if (c.prop == FuzzProperty::Pfc) {
    if (c.n == 1)
      return !line_pfc_shiftable(c.rules, line_support(c.polys[i]), line_support(c.polys[j]));
    return !box_pfc_shiftable(c.table, c.polys[i].pts, c.polys[j].pts, c.radius);
  }
  if (c.prop == FuzzProperty::Fc || c.n == 1) return !(c.factor_ok[i] && c.factor_ok[j]);
  auto shiftable = [&](std::size_t k) {
    auto it = qfc_memo.find(c.polys[k].pts);
    if (it != qfc_memo.end()) return it->second;
    bool ok = box_qfc_shiftable(c.table, c.polys[k].pts, c.radius);
    qfc_memo.emplace(c.polys[k].pts, ok);
    return ok;
  };
  return !(shiftable(i) && shiftable(j));
}

// Counterexample assembly with full re-verification: the product is
// recomputed with exact polynomial arithmetic, its support rechecked against
// the monoid, and the obstruction rechecked by direct shift enumeration.
OracleCounterexample assemble_ce(const FgMonoid& m, const LaurentPoly& f, const LaurentPoly& g,
                                 FuzzProperty prop, bool exact, long recheck_radius,
                                 const std::string& detail) {
  OracleCounterexample ce{f, g, f * g, ObstructionKind::NoShiftWithinRadius, detail};
  if (ce.product.is_zero()) throw std::logic_error("oracle: zero product recorded");
  for (const auto& e : ce.product.supp())
    if (!m.contains(e).has_value())
      throw std::logic_error("oracle: recorded product leaves the algebra");

  const std::size_t n = m.ambient();
  auto supp_of = [](const LaurentPoly& h) { return h.supp(); };
  auto shift_embeds = [&](const LaurentPoly& h, const std::vector<long>& s, int sign) {
    for (const auto& e : supp_of(h)) {
      ExponentVector q = e;
      for (std::size_t i = 0; i < n; ++i) q[i] += sign * s[i];
      if (!m.contains(q).has_value()) return false;
    }
    return true;
  };
  auto some_shift = [&](const LaurentPoly& h) {
    std::vector<long> s(n, -recheck_radius);
    do {
      if (shift_embeds(h, s, +1)) return true;
    } while (next_shift(s, recheck_radius));
    return false;
  };

  bool refuted = false;
  if (prop == FuzzProperty::Fc) {
    std::vector<long> zero(n, 0);
    refuted = !(shift_embeds(f, zero, +1) && shift_embeds(g, zero, +1));
  } else if (prop == FuzzProperty::Qfc) {
    refuted = !(some_shift(f) && some_shift(g));
  } else {
    std::vector<long> s(n, -recheck_radius);
    refuted = true;
    do {
      if (shift_embeds(f, s, +1) && shift_embeds(g, s, -1)) {
        refuted = false;
        break;
      }
    } while (next_shift(s, recheck_radius));
  }
  if (!refuted) throw std::logic_error("oracle: recorded counterexample admits a shift");
  ce.kind = exact ? ObstructionKind::ExactNoShift : ObstructionKind::NoShiftWithinRadius;
  return ce;
}

std::string line_obstruction(const LineRules& r, FuzzProperty prop) {
  std::ostringstream os;
  if (prop == FuzzProperty::Fc) {
    os << "a factor support leaves the monoid and fc permits no unit shift";
  } else if (r.kind == ZKind::Zero) {
    os << "the monoid is trivial, so only single monomials admit a unit shift";
  } else if (prop == FuzzProperty::Qfc) {
    os << "some factor has support exponents in distinct residue classes modulo " << r.d
       << ", and every member of the monoid is a multiple of " << r.d;
  } else {
    os << "residue classes modulo " << r.d
       << " pin the joint shift to a finite sign window, and the window is exhausted";
  }
  return os.str();
}

std::string box_obstruction(FuzzProperty prop, long radius) {
  std::ostringstream os;
  if (prop == FuzzProperty::Fc)
    os << "a factor support leaves the monoid and fc permits no unit shift";
  else
    os << "no unit shift within radius " << radius << " embeds the factor supports";
  return os.str();
}

}  // namespace

const char* fuzz_property_str(FuzzProperty p) {
  switch (p) {
    case FuzzProperty::Fc: return "fc";
    case FuzzProperty::Pfc: return "pfc";
    case FuzzProperty::Qfc: return "qfc";
  }
  return "?";
}

OracleReport fuzz_monoid_algebra(const FgMonoid& m, const FuzzConfig& cfg) {
  const std::size_t n = m.ambient();
  if (!is_prime_long(cfg.p)) throw std::invalid_argument("oracle: p must be prime");
  if (cfg.box.lo.size() != n || cfg.box.hi.size() != n)
    throw std::invalid_argument("oracle: box arity mismatch");
  std::vector<long> lo(n), hi(n);
  std::size_t box_points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = to_long(cfg.box.lo[i]);
    hi[i] = to_long(cfg.box.hi[i]);
    if (lo[i] > hi[i]) throw std::invalid_argument("oracle: empty box");
    box_points *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (box_points > 64) throw std::invalid_argument("oracle: box too large");
  }
  double log_polys = static_cast<double>(box_points) * std::log2(static_cast<double>(cfg.p));
  if (log_polys > 22.0)
    throw std::invalid_argument("oracle: p^(box points) exceeds the enumeration cap");
  std::uint64_t poly_count = 1;
  for (std::size_t k = 0; k < box_points; ++k) poly_count *= static_cast<std::uint64_t>(cfg.p);

  OracleReport rep;
  rep.exact = n == 1 || cfg.property == FuzzProperty::Fc;
  long radius = cfg.shift_radius;
  if (radius < 0) {
    long wmax = 0;
    for (std::size_t i = 0; i < n; ++i) wmax = std::max(wmax, hi[i] - lo[i]);
    radius = 2 * wmax;
  }
  const CoefficientDomain dom = CoefficientDomain::prime_field(cfg.p);

  ScanTotals totals;
  std::vector<std::pair<LaurentPoly, LaurentPoly>> kept_pairs;
  LineRules rules;
  long line_recheck = 0;

  if (n == 1) {
    rules = line_rules(m, lo[0], hi[0]);
    line_recheck = (hi[0] - lo[0]) + std::max(std::labs(lo[0]), std::labs(hi[0])) + rules.d + 4;
  }

  if (cfg.p == 2 && n == 1) {
    FastCtx ctx;
    ctx.prop = cfg.property;
    ctx.rules = rules;
    for (std::uint32_t mask = 1; mask < poly_count; ++mask) ctx.polys.push_back(mask);
    std::sort(ctx.polys.begin(), ctx.polys.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      if (pa != pb) return pa < pb;
      return mask_lex_less(a, b);
    });
    ctx.supp.resize(ctx.polys.size());
    ctx.factor_ok.assign(ctx.polys.size(), 1);
    for (std::size_t k = 0; k < ctx.polys.size(); ++k) {
      for (std::uint32_t v = ctx.polys[k]; v; v &= v - 1)
        ctx.supp[k].push_back(lo[0] + __builtin_ctz(v));
      if (cfg.property == FuzzProperty::Fc) {
        bool in = true;
        for (long e : ctx.supp[k]) in = in && rules.is_member(e);
        ctx.factor_ok[k] = in ? 1 : 0;
      } else if (cfg.property == FuzzProperty::Qfc) {
        ctx.factor_ok[k] = line_qfc_shiftable(rules, ctx.supp[k]) ? 1 : 0;
      }
    }
    for (long k = 0; k < 2 * (hi[0] - lo[0]) + 1; ++k)
      if (rules.is_member(2 * lo[0] + k)) ctx.member_prod |= std::uint64_t(1) << k;

    bool serial = cfg.force_serial || cfg.max_pairs > 0;
    totals = serial ? fast_scan_serial(ctx, cfg.max_pairs, cfg.max_counterexamples)
                    : fast_scan_parallel(ctx, cfg.max_counterexamples);
    auto to_poly = [&](std::uint32_t mask) {
      LaurentPoly h = LaurentPoly::zero(dom, 1);
      for (std::uint32_t v = mask; v; v &= v - 1)
        h = h + LaurentPoly::monomial(dom, 1, ExponentVector{Int(lo[0] + __builtin_ctz(v))}, Rat(1));
      return h;
    };
    for (const RawCe& rc : totals.kept)
      kept_pairs.emplace_back(to_poly(ctx.polys[rc.i]), to_poly(ctx.polys[rc.j]));
  } else {
    GenCtx ctx;
    ctx.p = cfg.p;
    ctx.n = n;
    ctx.radius = radius;
    ctx.prop = cfg.property;
    if (n == 1) {
      ctx.rules = rules;
    } else {
      std::vector<long> tlo(n), thi(n);
      for (std::size_t i = 0; i < n; ++i) {
        tlo[i] = std::min(2 * lo[i], lo[i] - radius);
        thi[i] = std::max(2 * hi[i], hi[i] + radius);
      }
      ctx.table = box_table(m, tlo, thi);
    }

    std::vector<std::vector<long>> points;
    {
      std::vector<long> pt = lo;
      for (std::size_t idx = 0; idx < box_points; ++idx) {
        points.push_back(pt);
        for (std::size_t i = n; i-- > 0;) {
          if (pt[i] < hi[i]) {
            ++pt[i];
            for (std::size_t k = i + 1; k < n; ++k) pt[k] = lo[k];
            break;
          }
          pt[i] = lo[i];
        }
      }
    }
    std::vector<std::uint64_t> order(poly_count - 1);
    for (std::uint64_t idx = 1; idx < poly_count; ++idx) order[idx - 1] = idx;
    auto digit = [&](std::uint64_t idx, std::size_t k) {
      for (std::size_t t = 0; t < k; ++t) idx /= static_cast<std::uint64_t>(cfg.p);
      return static_cast<long>(idx % static_cast<std::uint64_t>(cfg.p));
    };
    auto supp_size = [&](std::uint64_t idx) {
      int c = 0;
      for (std::size_t k = 0; k < box_points; ++k) c += digit(idx, k) != 0;
      return c;
    };
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
      int sa = supp_size(a), sb = supp_size(b);
      if (sa != sb) return sa < sb;
      for (std::size_t k = 0; k < box_points; ++k) {
        long da = digit(a, k), db = digit(b, k);
        if (da != db) return da < db;
      }
      return false;
    });
    for (std::uint64_t idx : order) {
      GenPoly f;
      for (std::size_t k = 0; k < box_points; ++k) {
        long c = digit(idx, k);
        if (c != 0) {
          f.pts.push_back(points[k]);
          f.coef.push_back(c);
        }
      }
      ctx.polys.push_back(std::move(f));
    }
    ctx.factor_ok.assign(ctx.polys.size(), 1);
    std::map<std::vector<std::vector<long>>, bool> qfc_memo;
    for (std::size_t k = 0; k < ctx.polys.size(); ++k) {
      if (cfg.property == FuzzProperty::Fc) {
        bool in = true;
        for (const auto& p : ctx.polys[k].pts)
          in = in && (n == 1 ? rules.is_member(p[0]) : ctx.table.member(p));
        ctx.factor_ok[k] = in ? 1 : 0;
      } else if (cfg.property == FuzzProperty::Qfc && n == 1) {
        ctx.factor_ok[k] = line_qfc_shiftable(rules, line_support(ctx.polys[k])) ? 1 : 0;
      }
    }

    const std::size_t count = ctx.polys.size();
    for (std::size_t i = 0; i < count && !totals.budget_hit; ++i) {
      std::size_t kept_i = 0;
      for (std::size_t j = i; j < count; ++j) {
        if (cfg.max_pairs && totals.pairs == cfg.max_pairs) {
          totals.budget_hit = true;
          break;
        }
        ++totals.pairs;
        bool in_alg = false;
        if (gen_pair_ce(ctx, qfc_memo, i, j, in_alg)) {
          ++totals.found;
          if (totals.kept.size() < cfg.max_counterexamples && kept_i < cfg.max_counterexamples) {
            totals.kept.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
            ++kept_i;
          }
        }
        if (in_alg) ++totals.in_algebra;
      }
    }
    auto to_poly = [&](const GenPoly& f) {
      LaurentPoly h = LaurentPoly::zero(dom, n);
      for (std::size_t k = 0; k < f.pts.size(); ++k) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = f.pts[k][i];
        h = h + LaurentPoly::monomial(dom, n, e, Rat(f.coef[k]));
      }
      return h;
    };
    for (const RawCe& rc : totals.kept)
      kept_pairs.emplace_back(to_poly(ctx.polys[rc.i]), to_poly(ctx.polys[rc.j]));
  }

  rep.pairs_checked = totals.pairs;
  rep.products_in_algebra = totals.in_algebra;
  rep.counterexamples_found = totals.found;
  rep.budget_exhausted = totals.budget_hit;
  long recheck = n == 1 ? line_recheck : radius;
  std::string detail =
      n == 1 ? line_obstruction(rules, cfg.property) : box_obstruction(cfg.property, radius);
  for (const auto& [f, g] : kept_pairs)
    rep.counterexamples.push_back(assemble_ce(m, f, g, cfg.property, rep.exact, recheck, detail));
  return rep;
}

bool agreement_check(const FgMonoid& m, const FuzzConfig& cfg, std::string* warning) {
  auto warn = [&](const std::string& s) {
    if (warning) *warning = warning->empty() ? s : *warning + "; " + s;
  };
  Verdict v = cfg.property == FuzzProperty::Qfc   ? qfc_monoid(m)
              : cfg.property == FuzzProperty::Pfc ? pfc_monoid(m)
                                                  : fc_monoid(m);
  OracleReport rep = fuzz_monoid_algebra(m, cfg);
  if (rep.budget_exhausted) warn("oracle scan stopped at the pair budget");
  if (v.answer == Answer::Unknown) {
    warn("decide verdict is unknown; nothing to cross check");
    return true;
  }
  if (v.answer == Answer::Yes) {
    if (rep.counterexamples_found == 0) return true;
    if (!rep.exact) {
      warn("radius bounded counterexamples disagree with a yes verdict");
      return true;
    }
    return false;
  }
  if (rep.counterexamples_found > 0) {
    if (!rep.exact) warn("refutation supported only by radius bounded obstructions");
    return true;
  }
  if (!rep.exact) {
    warn("no counterexample found within the box and radius");
    return true;
  }
  return false;
}

int f2_degree(F2Poly a) {
  if (a == 0) return -1;
  return 63 - __builtin_clzll(a);
}

F2Poly f2_mul(F2Poly a, F2Poly b) {
  if (a == 0 || b == 0) return 0;
  if (f2_degree(a) + f2_degree(b) > 62) throw std::overflow_error("f2_mul: degree overflow");
  F2Poly acc = 0;
  while (a) {
    acc ^= b << __builtin_ctzll(a);
    a &= a - 1;
  }
  return acc;
}

namespace {

std::pair<F2Poly, F2Poly> f2_divmod(F2Poly a, F2Poly b) {
  if (b == 0) throw std::invalid_argument("f2_divmod: division by zero");
  const int db = f2_degree(b);
  F2Poly q = 0;
  int da;
  while ((da = f2_degree(a)) >= db) {
    const int k = da - db;
    q ^= F2Poly(1) << k;
    a ^= b << k;
  }
  return {q, a};
}

}  // namespace

LaurentPoly f2_to_laurent(F2Poly a, long shift) {
  const CoefficientDomain dom = CoefficientDomain::prime_field(2);
  LaurentPoly h = LaurentPoly::zero(dom, 1);
  while (a) {
    long e = __builtin_ctzll(a);
    h = h + LaurentPoly::monomial(dom, 1, ExponentVector{Int(e + shift)}, Rat(1));
    a &= a - 1;
  }
  return h;
}

std::vector<F2Poly> irreducibles_F2(int max_degree) {
  if (max_degree > 16) throw std::invalid_argument("irreducibles_F2: max_degree above 16");
  std::vector<F2Poly> out;
  std::vector<F2Poly> trial = {0b10, 0b11}; // x and x + 1
  for (int d = 2; d <= max_degree; ++d) {
    std::size_t first_new = out.size();
    // constant term 1, otherwise x divides
    for (F2Poly cand = (F2Poly(1) << d) | 1; cand < (F2Poly(2) << d); cand += 2) {
      bool irred = true;
      for (F2Poly q : trial) {
        if (2 * f2_degree(q) > d) break;
        if (f2_divmod(cand, q).second == 0) {
          irred = false;
          break;
        }
      }
      if (irred) out.push_back(cand);
    }
    trial.insert(trial.end(), out.begin() + static_cast<long>(first_new), out.end());
  }
  return out;
}

StrongQfcWitness strong_qfc_witness_F2(const LaurentPoly& f) {
  if (f.vars() != 1) throw std::invalid_argument("strong_qfc_witness_F2: one variable only");
  if (!(f.domain() == CoefficientDomain::prime_field(2)))
    throw std::invalid_argument("strong_qfc_witness_F2: F_2 coefficients required");
  if (f.is_zero()) throw std::invalid_argument("strong_qfc_witness_F2: zero polynomial");
  const long ord = to_long(f.ord(0));
  const long deg = to_long(f.deg(0));
  if (ord < -16 || deg > 16)
    throw std::invalid_argument("strong_qfc_witness_F2: support outside [-16, 16]");

  const long clear = std::max(0L, -ord);
  F2Poly mask = 0;
  for (const auto& e : f.supp()) mask |= F2Poly(1) << (to_long(e[0]) + clear);

  const int a = __builtin_ctzll(mask);
  F2Poly h = mask >> a;
  long b = 0;
  while (__builtin_popcountll(h) % 2 == 0) { // h(1) = 0, so x + 1 divides
    h = f2_divmod(h, 0b11).first;
    ++b;
  }

  static const std::vector<F2Poly> table = irreducibles_F2(16);
  StrongQfcWitness w;
  w.shift = clear - a + b;
  w.base_power = b;
  while (h != 1) {
    F2Poly divisor = 0;
    for (F2Poly q : table) {
      if (2 * f2_degree(q) > f2_degree(h)) break;
      if (f2_divmod(h, q).second == 0) {
        divisor = q;
        break;
      }
    }
    if (divisor == 0) { // no factor up to half the degree, hence irreducible
      w.irreducible_factors.push_back(h);
      break;
    }
    w.irreducible_factors.push_back(divisor);
    h = f2_divmod(h, divisor).first;
  }

  F2Poly check = 1;
  for (long k = 0; k < b; ++k) check = f2_mul(check, 0b110);
  for (F2Poly q : w.irreducible_factors) check = f2_mul(check, q);
  if (check != (mask >> a) << b)
    throw std::logic_error("strong_qfc_witness_F2: factorization failed to re-multiply");
  return w;
}

bool no_monomial_invariant_F2(const LaurentPoly& f) {
  if (f.vars() != 1) throw std::invalid_argument("no_monomial_invariant_F2: one variable only");
  if (!(f.domain() == CoefficientDomain::prime_field(2)))
    throw std::invalid_argument("no_monomial_invariant_F2: F_2 coefficients required");
  bool eps0 = false;
  std::size_t terms = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0) throw NegativeExponent("no_monomial_invariant_F2: negative exponent");
    (void)c;
    ++terms;
    if (e[0] == 0) eps0 = true;
  }
  return eps0 == (terms % 2 == 1);
}

}  // namespace qfc
