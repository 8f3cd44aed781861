#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "qfckit/monoid.hpp"
#include "qfckit/numsgp.hpp"

using namespace qfc;

namespace {

ExponentVector ev(std::initializer_list<long> xs) {
  ExponentVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

FgMonoid mk(std::initializer_list<std::initializer_list<long>> gens, std::size_t n) {
  std::vector<ExponentVector> g;
  for (auto& row : gens) g.push_back(ExponentVector(row.begin(), row.end()));
  return FgMonoid(std::move(g), n);
}

// Oracle for nonnegative generators: every partial sum of a representation of
// a stays in [0, a], so memoized descent is exact.
bool dp_member(const std::vector<ExponentVector>& gens, const ExponentVector& a,
               std::map<ExponentVector, int>& memo) {
  if (vec_is_zero(a)) return true;
  for (const auto& x : a)
    if (x < 0) return false;
  auto it = memo.find(a);
  if (it != memo.end()) return it->second != 0;
  memo[a] = 0;
  bool ok = false;
  for (const auto& g : gens)
    if (dp_member(gens, vec_sub(a, g), memo)) {
      ok = true;
      break;
    }
  memo[a] = ok ? 1 : 0;
  return ok;
}

// One-sided oracle for arbitrary generators: reachable-from-zero within the
// box. Every point it finds is a member; points it misses are undetermined.
std::set<ExponentVector> closure_in_box(const std::vector<ExponentVector>& gens,
                                        const ExponentVector& lo, const ExponentVector& hi) {
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> queue;
  ExponentVector zero = vec_zero(lo.size());
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    ExponentVector p = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      ExponentVector q = vec_add(p, g);
      bool inside = true;
      for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] < lo[i] || q[i] > hi[i]) inside = false;
      if (inside && seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen;
}

long rnd(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::vector<ExponentVector> random_gens(std::mt19937& rng, std::size_t n, std::size_t count,
                                        long lo, long hi) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    ExponentVector g(n);
    for (auto& e : g) e = rnd(rng, lo, hi);
    gens.push_back(std::move(g));
  }
  return gens;
}

void check_coeffs(const FgMonoid& m, const ExponentVector& a, const std::vector<Int>& c) {
  REQUIRE(c.size() == m.generators().size());
  ExponentVector sum = vec_zero(m.ambient());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i] >= 0);
    sum = vec_add(sum, vec_scale(c[i], m.generators()[i]));
  }
  CHECK(sum == a);
}

IntMatrix random_unimodular2(std::mt19937& rng) {
  IntMatrix a = IntMatrix::identity(2);
  for (int step = 0; step < 6; ++step) {
    switch (rnd(rng, 0, 3)) {
      case 0:
        for (int j = 0; j < 2; ++j) a.at(0, j) += a.at(1, j);
        break;
      case 1:
        for (int j = 0; j < 2; ++j) a.at(1, j) -= a.at(0, j);
        break;
      case 2:
        std::swap(a.rows[0], a.rows[1]);
        break;
      default:
        for (int j = 0; j < 2; ++j) a.at(0, j) = -a.at(0, j);
        break;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("constructor cleans the generator list") {
  FgMonoid m = mk({{3}, {0}, {5}, {3}}, 1);
  CHECK(m.generators().size() == 2);
  CHECK(m.generators()[0] == ev({3}));
  CHECK(m.generators()[1] == ev({5}));
  CHECK(m.ambient() == 1);
  CHECK_THROWS_AS(mk({{1, 2}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(FgMonoid({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(mk({{1}}, 0), std::invalid_argument);
  FgMonoid zero = mk({{0, 0}}, 2);
  CHECK(zero.generators().empty());
  CHECK(zero.contains(ev({0, 0})).has_value());
  CHECK_FALSE(zero.contains(ev({1, 0})).has_value());
}

TEST_CASE("membership in a numerical monoid with certificates") {
  FgMonoid m = mk({{3}, {5}}, 1);
  auto c8 = m.contains(ev({8}));
  REQUIRE(c8.has_value());
  CHECK(*c8 == std::vector<Int>{Int(1), Int(1)});
  CHECK_FALSE(m.contains(ev({7})).has_value());
  CHECK_FALSE(m.contains(ev({-3})).has_value());
  auto c0 = m.contains(ev({0}));
  REQUIRE(c0.has_value());
  CHECK(*c0 == std::vector<Int>{Int(0), Int(0)});

  std::map<ExponentVector, int> memo;
  for (long k = -5; k <= 40; ++k) {
    auto got = m.contains(ev({k}));
    bool expect = dp_member(m.generators(), ev({k}), memo);
    CHECK(got.has_value() == expect);
    if (got) check_coeffs(m, ev({k}), *got);
  }
  CHECK_THROWS_AS(m.contains(ev({1, 2})), std::invalid_argument);
}

TEST_CASE("membership with a unit direction") {
  FgMonoid m = mk({{1, 0}, {-1, 0}, {0, 1}}, 2);
  const auto& flags = m.unit_flags();
  REQUIRE(flags.size() == 3);
  CHECK(flags[0]);
  CHECK(flags[1]);
  CHECK_FALSE(flags[2]);
  CHECK(m.unit_group().rank() == 1);
  CHECK_FALSE(m.is_group());

  auto c = m.contains(ev({-5, 3}));
  REQUIRE(c.has_value());
  check_coeffs(m, ev({-5, 3}), *c);
  // exact shape: members are precisely the points with y >= 0
  for (long x = -6; x <= 6; ++x)
    for (long y = -3; y <= 6; ++y) {
      auto got = m.contains(ev({x, y}));
      CHECK(got.has_value() == (y >= 0));
      if (got) check_coeffs(m, ev({x, y}), *got);
    }
}

TEST_CASE("membership with a torsion quotient") {
  // units Z(2,2); members are exactly the (a,b) with a >= b and b even
  FgMonoid m = mk({{2, 2}, {-2, -2}, {1, 0}}, 2);
  CHECK(m.unit_group().rank() == 1);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      auto got = m.contains(ev({a, b}));
      bool expect = a >= b && b % 2 == 0;
      CHECK(got.has_value() == expect);
      if (got) check_coeffs(m, ev({a, b}), *got);
    }
  Verdict v = is_normal(m);
  CHECK(v.answer == Answer::Yes);
}

TEST_CASE("unit flags match the membership definition") {
  std::mt19937 rng(411);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t n = (std::size_t)rnd(rng, 1, 3);
    FgMonoid m(random_gens(rng, n, (std::size_t)rnd(rng, 1, 4), -3, 3), n);
    const auto& flags = m.unit_flags();
    for (std::size_t i = 0; i < m.generators().size(); ++i) {
      bool direct = m.contains(vec_neg(m.generators()[i])).has_value();
      CHECK(flags[i] == direct);
    }
    bool all = true;
    for (bool f : flags) all = all && f;
    CHECK(m.is_group() == all);
  }
}

TEST_CASE("two variable example monoid membership") {
  FgMonoid m = mk({{2, 0}, {0, 2}, {2, 3}, {3, 2}, {3, 3}}, 2);
  CHECK_FALSE(m.contains(ev({1, 1})).has_value());
  CHECK(m.contains(ev({2, 3})).has_value());
  CHECK(m.contains(ev({7, 7})).has_value());
  std::map<ExponentVector, int> memo;
  for (long x = 0; x <= 12; ++x)
    for (long y = 0; y <= 12; ++y) {
      auto got = m.contains(ev({x, y}));
      CHECK(got.has_value() == dp_member(m.generators(), ev({x, y}), memo));
      if (got) check_coeffs(m, ev({x, y}), *got);
    }
}

TEST_CASE("random nonnegative monoids agree with the descent oracle") {
  std::mt19937 rng(7321);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = (std::size_t)rnd(rng, 1, 2);
    FgMonoid m(random_gens(rng, n, (std::size_t)rnd(rng, 2, 4), 0, 4), n);
    if (m.generators().empty()) continue;
    std::map<ExponentVector, int> memo;
    ExponentVector p(n);
    for (long trial = 0; trial < 60; ++trial) {
      for (auto& e : p) e = rnd(rng, 0, 8);
      auto got = m.contains(p);
      CHECK(got.has_value() == dp_member(m.generators(), p, memo));
      if (got) check_coeffs(m, p, *got);
    }
  }
}

TEST_CASE("membership is closed under addition") {
  std::mt19937 rng(99182);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t n = (std::size_t)rnd(rng, 1, 3);
    FgMonoid m(random_gens(rng, n, (std::size_t)rnd(rng, 2, 4), -3, 3), n);
    const auto& gens = m.generators();
    if (gens.empty()) continue;
    for (int trial = 0; trial < 8; ++trial) {
      ExponentVector a = vec_zero(n), b = vec_zero(n);
      for (const auto& g : gens) {
        a = vec_add(a, vec_scale(Int(rnd(rng, 0, 3)), g));
        b = vec_add(b, vec_scale(Int(rnd(rng, 0, 3)), g));
      }
      auto ca = m.contains(a);
      auto cb = m.contains(b);
      auto cab = m.contains(vec_add(a, b));
      REQUIRE(ca.has_value());
      REQUIRE(cb.has_value());
      REQUIRE(cab.has_value());
      check_coeffs(m, vec_add(a, b), *cab);
    }
  }
}

TEST_CASE("every point reached by box closure is a member") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 15; ++iter) {
    std::size_t n = (std::size_t)rnd(rng, 1, 2);
    FgMonoid m(random_gens(rng, n, (std::size_t)rnd(rng, 1, 3), -3, 3), n);
    if (m.generators().empty()) continue;
    ExponentVector lo(n, Int(-8)), hi(n, Int(8));
    for (const auto& p : closure_in_box(m.generators(), lo, hi)) {
      auto got = m.contains(p);
      REQUIRE(got.has_value());
      check_coeffs(m, p, *got);
    }
  }
}

TEST_CASE("normality of one variable monoids") {
  Verdict v = is_normal(mk({{2}, {3}}, 1));
  CHECK(v.answer == Answer::No);
  REQUIRE(v.witness.has_value());
  auto& w = std::get<NotNormalPoint>(*v.witness);
  CHECK(w.a == ev({1}));
  CHECK(w.m == 2);

  CHECK(is_normal(mk({{1}}, 1)).answer == Answer::Yes);
  CHECK(is_normal(mk({{2}}, 1)).answer == Answer::Yes);
  CHECK(is_normal(mk({{2}, {-2}}, 1)).answer == Answer::Yes);
  CHECK(is_normal(mk({{0}}, 1)).answer == Answer::Yes);

  Verdict v35 = is_normal(mk({{3}, {5}}, 1));
  CHECK(v35.answer == Answer::No);
  auto& w35 = std::get<NotNormalPoint>(*v35.witness);
  CHECK(w35.a == ev({1}));
  CHECK(w35.m == 3);
}

TEST_CASE("normality of two variable monoids") {
  CHECK(is_normal(mk({{1, 0}, {0, 1}}, 2)).answer == Answer::Yes);
  CHECK(is_normal(mk({{1, 0}, {1, 1}, {1, 2}}, 2)).answer == Answer::Yes);
  CHECK(is_normal(mk({{2, 2}}, 2)).answer == Answer::Yes);
  CHECK(is_normal(mk({{1, 1}, {-1, -1}, {0, 1}}, 2)).answer == Answer::Yes);

  Verdict v = is_normal(mk({{2, 0}, {0, 2}, {2, 3}, {3, 2}, {3, 3}}, 2));
  CHECK(v.answer == Answer::No);
  REQUIRE(v.witness.has_value());
  auto& w = std::get<NotNormalPoint>(*v.witness);
  CHECK(w.a == ev({0, 1}));
  CHECK(w.m == 2);
}

TEST_CASE("normality verdicts validate on random monoids") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = (std::size_t)rnd(rng, 1, 2);
    FgMonoid m(random_gens(rng, n, (std::size_t)rnd(rng, 1, 4), -3, 3), n);
    Verdict v = is_normal(m);
    if (v.answer == Answer::Yes) {
      // every group point of the cone within a small box must be a member
      ExponentVector lo(n, Int(-5)), hi(n, Int(5));
      if (m.generators().empty()) continue;
      for (const auto& p : lattice_points_in_box(m.cone(), lo, hi)) {
        if (!lattice_member(m.group(), p)) continue;
        bool inside = m.contains(p).has_value();
        CHECK(inside);
      }
    } else if (v.answer == Answer::No) {
      REQUIRE(v.witness.has_value());
      auto& w = std::get<NotNormalPoint>(*v.witness);
      CHECK(lattice_member(m.group(), w.a));
      CHECK_FALSE(m.contains(w.a).has_value());
      CHECK(w.m >= 2);
      bool multiple_in = m.contains(vec_scale(w.m, w.a)).has_value();
      CHECK(multiple_in);
      for (Int t(2); t < w.m; ++t) {
        bool smaller_in = m.contains(vec_scale(t, w.a)).has_value();
        CHECK_FALSE(smaller_in);
      }
    } else {
      CHECK_FALSE(v.reason.empty());
    }
  }
}

TEST_CASE("gap report for numerical monoids is exact") {
  FgMonoid m = mk({{3}, {5}}, 1);
  GapReport r = gap_set(m, Box{ev({0}), ev({20})});
  CHECK(r.status == GapStatus::FiniteExact);
  REQUIRE(r.elements.size() == 4);
  CHECK(r.elements[0] == ev({1}));
  CHECK(r.elements[1] == ev({2}));
  CHECK(r.elements[2] == ev({4}));
  CHECK(r.elements[3] == ev({7}));
  CHECK(r.box.lo == ev({0}));
  CHECK(r.box.hi == ev({7}));
  CHECK_FALSE(r.evidence.has_value());

  GapReport r23 = gap_set(mk({{2}, {3}}, 1), Box{ev({0}), ev({9})});
  CHECK(r23.status == GapStatus::FiniteExact);
  REQUIRE(r23.elements.size() == 1);
  CHECK(r23.elements[0] == ev({1}));

  GapReport rn = gap_set(mk({{1}}, 1), Box{ev({0}), ev({9})});
  CHECK(rn.status == GapStatus::FiniteExact);
  CHECK(rn.elements.empty());

  GapReport rneg = gap_set(mk({{-3}, {-5}}, 1), Box{ev({-9}), ev({0})});
  CHECK(rneg.status == GapStatus::FiniteExact);
  REQUIRE(rneg.elements.size() == 4);
  CHECK(rneg.elements[0] == ev({-7}));
  CHECK(rneg.elements[3] == ev({-1}));
}

TEST_CASE("gap report for even and mixed one variable monoids") {
  GapReport r2 = gap_set(mk({{2}}, 1), Box{ev({0}), ev({9})});
  CHECK(r2.status == GapStatus::InfiniteEvidence);
  REQUIRE(r2.evidence.has_value());
  CHECK(r2.evidence->base == ev({1}));
  CHECK(r2.evidence->direction == ev({2}));
  REQUIRE(r2.elements.size() == 5);
  CHECK(r2.elements[0] == ev({1}));
  CHECK(r2.elements[4] == ev({9}));

  GapReport rz = gap_set(mk({{2}, {-2}}, 1), Box{ev({-5}), ev({5})});
  CHECK(rz.status == GapStatus::InfiniteEvidence);
  REQUIRE(rz.evidence.has_value());
  CHECK(rz.evidence->base == ev({1}));
  CHECK(rz.evidence->direction == ev({2}));
  CHECK(rz.elements.size() == 6);

  GapReport rall = gap_set(mk({{1}, {-1}}, 1), Box{ev({-5}), ev({5})});
  CHECK(rall.status == GapStatus::Empty);
  CHECK(rall.elements.empty());
}

TEST_CASE("gap report for the two variable example monoid") {
  FgMonoid m = mk({{2, 0}, {0, 2}, {2, 3}, {3, 2}, {3, 3}}, 2);
  GapReport r = gap_set(m, Box{ev({0, 0}), ev({9, 9})});
  CHECK(r.status == GapStatus::InfiniteEvidence);
  REQUIRE(r.evidence.has_value());
  CHECK(r.evidence->base == ev({0, 1}));
  CHECK(r.evidence->direction == ev({1, 0}));
  CHECK(r.evidence->samples == 16);

  // independent enumeration: the full gap list in the box has 27 points
  std::map<ExponentVector, int> memo;
  std::vector<ExponentVector> expect;
  for (long x = 0; x <= 9; ++x)
    for (long y = 0; y <= 9; ++y)
      if (!dp_member(m.generators(), ev({x, y}), memo)) expect.push_back(ev({x, y}));
  CHECK(expect.size() == 27);
  CHECK(r.elements == expect);

  std::set<ExponentVector> got(r.elements.begin(), r.elements.end());
  CHECK(got.count(ev({3, 0})));
  CHECK(got.count(ev({5, 0})));
  CHECK(got.count(ev({0, 3})));
  CHECK(got.count(ev({1, 1})));
  CHECK(got.count(ev({1, 2})));
  CHECK(got.count(ev({1, 0})));
  CHECK(got.count(ev({0, 1})));
  CHECK_FALSE(got.count(ev({2, 3})));

  for (const auto& g : r.elements) {
    CHECK(cone_contains(m.cone(), g));
    bool inside = m.contains(g).has_value();
    CHECK_FALSE(inside);
  }
}

TEST_CASE("gap report statuses on structured two variable monoids") {
  // group Z^2: provably empty
  GapReport rg = gap_set(mk({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2), Box{ev({-4, -4}), ev({4, 4})});
  CHECK(rg.status == GapStatus::Empty);

  // halfplane Z(1,1) + N(0,1): empty via normality plus summand group
  GapReport rh = gap_set(mk({{1, 1}, {-1, -1}, {0, 1}}, 2), Box{ev({-4, -4}), ev({4, 4})});
  CHECK(rh.status == GapStatus::Empty);
  CHECK(rh.elements.empty());

  // checkerboard: gaps are the odd coordinate sums, line found along (1,1)
  FgMonoid cb = mk({{2, 0}, {1, 1}, {0, 2}}, 2);
  GapReport rc = gap_set(cb, Box{ev({0, 0}), ev({6, 6})});
  CHECK(rc.status == GapStatus::InfiniteEvidence);
  REQUIRE(rc.evidence.has_value());
  CHECK(rc.evidence->base == ev({0, 1}));
  CHECK(rc.evidence->direction == ev({1, 1}));
  CHECK(rc.elements.size() == 24);

  // all of N^2 except (1,0) and (0,1): finite gap, visible once the box
  // shell clears the axes
  FgMonoid nearly =
      mk({{2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}, 2);
  GapReport tight = gap_set(nearly, Box{ev({0, 0}), ev({9, 9})});
  CHECK(tight.status == GapStatus::Unknown);
  GapReport padded = gap_set(nearly, Box{ev({-1, -1}), ev({9, 9})});
  CHECK(padded.status == GapStatus::FiniteWithinBox);
  REQUIRE(padded.elements.size() == 2);
  CHECK(padded.elements[0] == ev({0, 1}));
  CHECK(padded.elements[1] == ev({1, 0}));

  // torsion quotient monoid: gaps fill the odd rows of its halfplane cone
  GapReport rt = gap_set(mk({{2, 2}, {-2, -2}, {1, 0}}, 2), Box{ev({-4, -4}), ev({4, 4})});
  CHECK(rt.status == GapStatus::InfiniteEvidence);
  REQUIRE(rt.evidence.has_value());
  CHECK(rt.evidence->base == ev({-3, -3}));
  CHECK(rt.evidence->direction == ev({1, 0}));
}

TEST_CASE("gap report rejects malformed boxes") {
  FgMonoid m = mk({{1, 0}, {0, 1}}, 2);
  CHECK_THROWS_AS(gap_set(m, Box{ev({0}), ev({9, 9})}), std::invalid_argument);
  CHECK_THROWS_AS(gap_set(m, Box{ev({3, 0}), ev({2, 9})}), std::invalid_argument);
}

TEST_CASE("gap images under a unimodular map are the mapped gaps") {
  FgMonoid m = mk({{2, 0}, {0, 2}, {2, 3}, {3, 2}, {3, 3}}, 2);
  GapReport r = gap_set(m, Box{ev({0, 0}), ev({9, 9})});
  std::set<ExponentVector> gaps(r.elements.begin(), r.elements.end());

  std::mt19937 rng(60601);
  for (int iter = 0; iter < 12; ++iter) {
    IntMatrix a = random_unimodular2(rng);
    std::vector<ExponentVector> image_gens;
    for (const auto& g : m.generators()) image_gens.push_back(vec_mat_mul(g, a));
    FgMonoid im(image_gens, 2);
    std::size_t mapped_gaps = 0;
    for (long x = 0; x <= 9; ++x)
      for (long y = 0; y <= 9; ++y) {
        ExponentVector p = ev({x, y});
        ExponentVector q = vec_mat_mul(p, a);
        bool p_gap = gaps.count(p) != 0;
        bool q_gap = cone_contains(im.cone(), q) && !im.contains(q).has_value();
        CHECK(p_gap == q_gap);
        if (q_gap) ++mapped_gaps;
      }
    CHECK(mapped_gaps == gaps.size());
  }
}

TEST_CASE("classification of submonoids of Z") {
  auto cls = [](std::initializer_list<long> gens) {
    std::vector<ExponentVector> g;
    for (long x : gens) g.push_back(ev({x}));
    return classify_Z_submonoid(FgMonoid(std::move(g), 1));
  };
  CHECK(cls({3, 5}).kind == ZKind::DTimesN);
  CHECK(cls({3, 5}).d == 1);
  CHECK(cls({2}).kind == ZKind::DTimesN);
  CHECK(cls({2}).d == 2);
  CHECK(cls({-3}).kind == ZKind::DTimesNegN);
  CHECK(cls({-3}).d == 3);
  CHECK(cls({2, -2}).kind == ZKind::DTimesZ);
  CHECK(cls({2, -2}).d == 2);
  CHECK(cls({4, -6}).kind == ZKind::DTimesZ);
  CHECK(cls({4, -6}).d == 2);
  CHECK(cls({0}).kind == ZKind::Zero);
  CHECK(cls({0}).d == 0);
  CHECK_THROWS_AS(classify_Z_submonoid(mk({{1, 0}}, 2)), std::invalid_argument);

  // mixed signs collapse to exactly dZ
  std::mt19937 rng(8899);
  for (int iter = 0; iter < 20; ++iter) {
    long a = rnd(rng, 1, 9), b = rnd(rng, 1, 9);
    FgMonoid m = FgMonoid({ev({a}), ev({-b})}, 1);
    ZClassification c = classify_Z_submonoid(m);
    REQUIRE(c.kind == ZKind::DTimesZ);
    for (long k = -12; k <= 12; ++k) {
      bool inside = m.contains(ev({k})).has_value();
      CHECK(inside == (Int(k) % c.d == 0));
    }
  }
}

TEST_CASE("membership budget escape hatch") {
  setenv("QFC_MEMBER_BUDGET", "1", 1);
  FgMonoid tight = mk({{3}, {5}}, 1);
  CHECK_THROWS_AS(tight.contains(ev({8})), UndecidedError);
  unsetenv("QFC_MEMBER_BUDGET");
  FgMonoid fine = mk({{3}, {5}}, 1);
  CHECK(fine.contains(ev({8})).has_value());
}

TEST_CASE("gap status names") {
  CHECK(gap_status_str(GapStatus::Empty) == "Empty");
  CHECK(gap_status_str(GapStatus::FiniteExact) == "FiniteExact");
  CHECK(gap_status_str(GapStatus::FiniteWithinBox) == "FiniteWithinBox");
  CHECK(gap_status_str(GapStatus::InfiniteEvidence) == "InfiniteEvidence");
  CHECK(gap_status_str(GapStatus::Unknown) == "Unknown");
}
