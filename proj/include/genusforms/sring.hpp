#ifndef GENUSFORMS_SRING_HPP
#define GENUSFORMS_SRING_HPP

#include <vector>

#include "genusforms/ints.hpp"

namespace genusforms {

/// A finite set S of rational primes, defining the ring of S-integers of Q:
/// rationals whose denominator is divisible only by primes of S. S empty
/// gives the plain integers.
class SRing {
 public:
  SRing() = default;
  /// Validates: entries prime, strictly increasing.
  explicit SRing(std::vector<Int> primes);

  const std::vector<Int>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  bool contains(const Int& p) const;

  /// |n| with every S-prime factor divided out; requires n != 0.
  Int prime_to_s_part(const Int& n) const;

  /// Is n a unit of the S-integers, i.e. n = +-(product of S-primes)?
  bool is_s_unit(const Int& n) const;

  /// Is x an S-integer (denominator an S-unit)?
  bool is_s_integral(const Rat& x) const;

  /// Square-free representatives of the S-unit square classes:
  /// { +-(product over T) : T subset of S }, 2^(|S|+1) entries, deterministic
  /// order starting with 1, -1.
  std::vector<Int> s_unit_square_classes() const;

 private:
  std::vector<Int> primes_;
};

}  // namespace genusforms

#endif
