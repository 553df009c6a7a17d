#ifndef GENUSFORMS_INTS_HPP
#define GENUSFORMS_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "genusforms/errors.hpp"

namespace genusforms {

/// Exact arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational; always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }
inline bool is_integer(const Rat& x) { return den(x) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Representative of a mod m in [0, m). Requires m > 0.
Int mod_pos(const Int& a, const Int& m);

struct ExtGcd {
  Int g;   // gcd(a, b) > 0
  Int r1;  // a*r1 + b*r2 == g
  Int r2;
};

/// Extended Euclid. Errors with DegenerateGcd when both inputs are zero.
ExtGcd ext_gcd(const Int& a, const Int& b);

struct Congruence {
  Int residue;
  Int modulus;
};

/// Chinese remainder lift of simultaneous congruences with pairwise coprime
/// moduli. Modulus-1 entries act as the identity class; an empty list gives
/// (0, 1). Errors with NonCoprimeModuli / BadModulus.
Congruence crt(const std::vector<Congruence>& classes);

/// Jacobi symbol (a/n) for odd n >= 3; equals the Legendre symbol for prime n.
/// Errors with BadModulus otherwise.
int jacobi(const Int& a, const Int& n);

/// Floor of the square root; requires n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

/// Inverse of a modulo m (m >= 1). Errors with NotCoprime when gcd(a,m) != 1.
Int inv_mod(const Int& a, const Int& m);

Int pow_mod(const Int& base, const Int& exp, const Int& m);

/// Deterministic Miller-Rabin below 2^64, fixed extra bases above; intended
/// for the desk-scale primes this library meets.
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// Trial division of |n| by primes <= limit. Returns (prime, exponent) pairs
/// in increasing order; any remaining cofactor > 1 is stored in *cofactor.
std::vector<std::pair<Int, int>> trial_factor(Int n, const Int& limit, Int* cofactor);

}  // namespace genusforms

#endif
