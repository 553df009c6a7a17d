#include "genusforms/ints.hpp"

#include <array>

namespace genusforms {

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) raise("DegenerateGcd", "gcd(0, 0) is undefined");
  // Invariants: old_r = a*old_s + b*old_t, r = a*s + b*t.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Congruence crt(const std::vector<Congruence>& classes) {
  Int r = 0, m = 1;
  for (const auto& c : classes) {
    if (c.modulus <= 0) raise("BadModulus", "crt modulus must be positive");
    if (c.modulus == 1) continue;
    Int g = gcd(m, c.modulus);
    if (g != 1) raise("NonCoprimeModuli", "crt moduli must be pairwise coprime");
    // x = r + m*k with k chosen so x == c.residue (mod c.modulus).
    Int k = mod_pos((c.residue - r) * inv_mod(m, c.modulus), c.modulus);
    r += m * k;
    m *= c.modulus;
  }
  return {mod_pos(r, m), m};
}

int jacobi(const Int& a_in, const Int& n_in) {
  if (n_in < 3 || n_in % 2 == 0) raise("BadModulus", "jacobi requires odd n >= 3");
  Int a = mod_pos(a_in, n_in);
  Int n = n_in;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a = a % n;
  }
  return n == 1 ? t : 0;
}

Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Int inv_mod(const Int& a, const Int& m) {
  ExtGcd e = ext_gcd(mod_pos(a, m), m);
  if (e.g != 1) raise("NotCoprime", "element not invertible modulo m");
  return mod_pos(e.r1, m);
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  return boost::multiprecision::powm(mod_pos(base, m), exp, m);
}

namespace {

bool miller_rabin(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<int, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic on the 64-bit range with these bases.
  for (int p : small) {
    if (!miller_rabin(n, p)) return false;
  }
  return true;
}

Int next_prime(const Int& n) {
  Int c = n < 2 ? Int(2) : n + 1;
  if (c > 2 && c % 2 == 0) ++c;
  while (!is_prime(c)) c += (c == 2 ? 1 : 2);
  return c;
}

std::vector<std::pair<Int, int>> trial_factor(Int n, const Int& limit, Int* cofactor) {
  std::vector<std::pair<Int, int>> out;
  n = abs(n);
  if (n <= 1) {
    if (cofactor) *cofactor = 1;
    return out;
  }
  for (Int p = 2; p <= limit && p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1 && n <= limit * limit) {
    out.emplace_back(n, 1);  // remaining cofactor below limit^2 is prime
    n = 1;
  }
  if (cofactor) *cofactor = n;
  return out;
}

}  // namespace genusforms
