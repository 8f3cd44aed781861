#include "qfckit/numsgp.hpp"

#include <algorithm>

namespace qfc {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
  std::vector<Int> cleaned;
  for (const auto& g : gens) {
    if (g < 0) throw std::invalid_argument("generators must be nonnegative");
    if (g > 0) cleaned.push_back(g);
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  if (cleaned.empty()) throw NotNumericalError(Int(0));
  Int d(0);
  for (const auto& g : cleaned) d = gcd(d, g);
  if (d != 1) throw NotNumericalError(d);

  NumericalSemigroup s;
  s.gens_ = std::move(cleaned);
  // min*max majorizes the Frobenius number for coprime generators.
  Int bound = s.gens_.front() * s.gens_.back() + 1;
  if (!bound.fits_slong_p() || bound.get_si() > (1L << 28))
    throw std::length_error("membership table too large");
  s.bound_ = bound.get_si();
  s.table_.assign((std::size_t)s.bound_ + 1, false);
  s.table_[0] = true;
  for (long i = 1; i <= s.bound_; ++i)
    for (const auto& g : s.gens_) {
      long gl = g.get_si();
      if (gl <= i && s.table_[(std::size_t)(i - gl)]) {
        s.table_[(std::size_t)i] = true;
        break;
      }
    }
  return s;
}

bool NumericalSemigroup::contains(const Int& m) const {
  if (m < 0) return false;
  if (m > bound_) return true;
  return table_[(std::size_t)m.get_si()];
}

Int NumericalSemigroup::frobenius() const {
  for (long i = bound_; i >= 0; --i)
    if (!table_[(std::size_t)i]) return Int(i);
  return Int(-1);
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (long i = 1; i <= bound_; ++i)
    if (!table_[(std::size_t)i]) out.push_back(Int(i));
  return out;
}

Int NumericalSemigroup::multiplicity() const { return gens_.front(); }

std::vector<Int> NumericalSemigroup::apery_set(const Int& m) const {
  if (m <= 0 || !contains(m)) throw std::invalid_argument("m must be a nonzero element");
  long ml = m.get_si();
  std::vector<Int> out((std::size_t)ml);
  for (long r = 0; r < ml; ++r) {
    long k = r;
    while (!contains(Int(k))) k += ml;
    out[(std::size_t)r] = Int(k);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  // g is redundant when g - g' stays in the semigroup for some other
  // generator g' <= g; equivalently g is a sum of two nonzero elements.
  std::vector<Int> out;
  for (const auto& g : gens_) {
    bool redundant = false;
    for (long a = gens_.front().get_si(); a * 2 <= g.get_si(); ++a)
      if (contains(Int(a)) && contains(g - a)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace qfc
