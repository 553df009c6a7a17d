#include "genusforms/sring.hpp"

#include <algorithm>

namespace genusforms {

SRing::SRing(std::vector<Int> primes) : primes_(std::move(primes)) {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) raise("BadModulus", "S must contain primes only");
    if (i > 0 && !(primes_[i - 1] < primes_[i]))
      raise("BadModulus", "S must be strictly increasing");
  }
}

bool SRing::contains(const Int& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

Int SRing::prime_to_s_part(const Int& n) const {
  if (n == 0) raise("ZeroDisc", "prime-to-S part of zero is undefined");
  Int m = abs(n);
  for (const auto& p : primes_) {
    while (m % p == 0) m /= p;
  }
  return m;
}

bool SRing::is_s_unit(const Int& n) const { return n != 0 && prime_to_s_part(n) == 1; }

bool SRing::is_s_integral(const Rat& x) const { return is_s_unit(den(x)); }

std::vector<Int> SRing::s_unit_square_classes() const {
  std::vector<Int> out;
  out.reserve(std::size_t(2) << primes_.size());
  for (std::size_t mask = 0; mask < (std::size_t(1) << primes_.size()); ++mask) {
    Int prod = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (mask & (std::size_t(1) << i)) prod *= primes_[i];
    }
    out.push_back(prod);
    out.push_back(-prod);
  }
  return out;
}

}  // namespace genusforms
