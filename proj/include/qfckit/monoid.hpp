#pragma once

#include <memory>
#include <mutex>

#include "qfckit/cone.hpp"
#include "qfckit/lattice.hpp"
#include "qfckit/verdict.hpp"

namespace qfc {

// Membership search ran out of nodes before certifying either way.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Box {
  ExponentVector lo, hi;
};

enum class GapStatus { Empty, FiniteExact, FiniteWithinBox, InfiniteEvidence, Unknown };

std::string gap_status_str(GapStatus s);

// Line of sampled gap points: base + k * direction for k = 1..samples.
struct WitnessLine {
  ExponentVector base, direction;
  int samples = 0;
};

struct GapReport {
  GapStatus status = GapStatus::Unknown;
  std::vector<ExponentVector> elements;  // each in the cone and outside M
  Box box;
  std::optional<WitnessLine> evidence;
};

enum class ZKind { Zero, DTimesN, DTimesNegN, DTimesZ };

// Sign pattern and gcd of a submonoid of Z. Mixed signs force M = dZ exactly;
// one-sided generators give a numerical-type submonoid of dN or -dN.
struct ZClassification {
  ZKind kind = ZKind::Zero;
  Int d;
};

// Finitely generated submonoid of Z^n. Generators are stored with zeros
// removed and exact duplicates dropped, in first-occurrence order. Caches are
// lazy; every cached value equals its recomputation from the generators.
class FgMonoid {
 public:
  FgMonoid(std::vector<ExponentVector> generators, std::size_t n);

  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t ambient() const { return n_; }

  const LatticeSubgroup& group() const;
  const ConeHRep& cone() const;
  const LatticeSubgroup& unit_group() const;
  // Flag per stored generator: true when its negative also lies in M.
  const std::vector<bool>& unit_flags() const;
  bool is_group() const;

  // Exact membership. Returns nonnegative coefficients over generators() with
  // sum(c_i * gen_i) = a, or nullopt. Decided by splitting off the unit group
  // and bounded search in the pointed quotient; throws UndecidedError only
  // when the node budget (QFC_MEMBER_BUDGET) is exhausted.
  std::optional<std::vector<Int>> contains(const ExponentVector& a) const;

 private:
  struct Reduction;
  const Reduction& reduction() const;

  std::vector<ExponentVector> gens_;
  std::size_t n_;

  mutable std::mutex mu_;
  mutable std::shared_ptr<const LatticeSubgroup> group_, units_;
  mutable std::shared_ptr<const ConeHRep> cone_;
  mutable std::shared_ptr<const std::vector<bool>> unit_flags_;
  mutable std::shared_ptr<const Reduction> red_;
};

// Decides Cone(M) meet <M> = M. Conclusive in both directions whenever the
// candidate enumeration fits the budget: every element of the normalization
// is a lattice point of norm at most the sum of the primitive generator norms
// (split off the unit directions first), so a clean sweep certifies Yes.
Verdict is_normal(const FgMonoid& m);

// Gap = (Cone(M) meet Z^n) minus M, reported with an honest status.
GapReport gap_set(const FgMonoid& m, const Box& box);

// n = 1 only.
ZClassification classify_Z_submonoid(const FgMonoid& m);

}  // namespace qfc
