#pragma once

#include <stdexcept>
#include <vector>

#include "qfckit/numeric.hpp"

namespace qfc {

// Generators with gcd d != 1 span d*N up to finitely many gaps, never a
// numerical semigroup; d = 0 marks the degenerate all-zero case.
struct NotNumericalError : std::runtime_error {
  Int d;
  explicit NotNumericalError(Int d_)
      : std::runtime_error("generators have gcd " + d_.get_str() +
                           ", complement of the span is infinite"),
        d(std::move(d_)) {}
};

// Additive submonoid of N with finite complement, presented by generators.
// Membership is tabulated once up to min(gens)*max(gens), which bounds the
// Frobenius number, so every query is exact.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<Int> gens);

  bool contains(const Int& m) const;
  // Largest integer outside the semigroup, -1 when there is none.
  Int frobenius() const;
  std::vector<Int> gaps() const;
  Int genus() const { return Int((long)gaps().size()); }
  // Smallest nonzero element.
  Int multiplicity() const;
  // Apery set of m: entry r is the least element congruent to r mod m.
  // Requires m a nonzero element of the semigroup.
  std::vector<Int> apery_set(const Int& m) const;
  // Generators that are not sums of the remaining elements.
  std::vector<Int> minimal_generators() const;

  const std::vector<Int>& generators() const { return gens_; }

 private:
  NumericalSemigroup() = default;
  std::vector<Int> gens_;       // sorted, deduplicated, positive
  std::vector<bool> table_;     // membership for 0..bound_
  long bound_ = 0;              // exceeds the Frobenius number
};

}  // namespace qfc
