#include "genusforms/poly.hpp"

#include <algorithm>

namespace genusforms {

PolyQ to_rational(const PolyZ& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return PolyQ(std::move(c));
}

PolyZ clear_denominators(const PolyQ& p, Int* denominator_out) {
  Int d = 1;
  for (const auto& x : p.coeffs()) d = lcm(d, den(x));
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    Rat y = x * Rat(d);
    c.push_back(num(y));
  }
  if (denominator_out) *denominator_out = d;
  return PolyZ(std::move(c));
}

bool is_integral(const PolyQ& p) {
  for (const auto& x : p.coeffs()) {
    if (!is_integer(x)) return false;
  }
  return true;
}

Rat evaluate_at(const PolyQ& p, const Rat& x) { return p.evaluate(x); }
Int evaluate_at(const PolyZ& p, const Int& x) { return p.evaluate(x); }

std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) raise("DegenerateGcd", "polynomial division by zero");
  PolyQ q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat c = r.lc() / b.lc();
    std::size_t d = static_cast<std::size_t>(r.degree() - b.degree());
    PolyQ t = PolyQ::monomial(c, d);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

bool divides(const PolyQ& d, const PolyQ& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).second.is_zero();
}

PolyQ monic(const PolyQ& p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.lc();
  return p * inv;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) raise("DegenerateGcd", "gcd(0, 0) is undefined");
  PolyQ x = a, y = b;
  while (!y.is_zero()) {
    PolyQ r = divrem(x, y).second;
    x = y;
    y = r;
  }
  return monic(x);
}

PolyExtGcd poly_ext_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) raise("DegenerateGcd", "gcd(0, 0) is undefined");
  PolyQ old_r = a, r = b;
  PolyQ old_s = PolyQ(1), s;
  PolyQ old_t, t = PolyQ(1);
  while (!r.is_zero()) {
    auto [q, rem] = divrem(old_r, r);
    old_r = r;
    r = rem;
    PolyQ ns = old_s - q * s;
    old_s = s;
    s = ns;
    PolyQ nt = old_t - q * t;
    old_t = t;
    t = nt;
  }
  Rat inv = Rat(1) / old_r.lc();
  return {old_r * inv, old_s * inv, old_t * inv};
}

// ---- arithmetic modulo a prime p ------------------------------------------

PolyZ poly_mod(const PolyZ& f, const Int& p) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(mod_pos(x, p));
  return PolyZ(std::move(c));
}

Int evaluate_mod(const PolyZ& f, const Int& x, const Int& p) {
  Int acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = (acc * x + f.coeffs()[i]) % p;
  return mod_pos(acc, p);
}

namespace {

// Remainder of a by b modulo p; b nonzero mod p.
PolyZ rem_mod(PolyZ a, const PolyZ& b, const Int& p) {
  a = poly_mod(a, p);
  Int binv = inv_mod(b.lc(), p);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Int c = mod_pos(a.lc() * binv, p);
    std::size_t d = static_cast<std::size_t>(a.degree() - b.degree());
    a = poly_mod(a - PolyZ::monomial(c, d) * b, p);
  }
  return a;
}

PolyZ mul_mod(const PolyZ& a, const PolyZ& b, const PolyZ& m, const Int& p) {
  return rem_mod(a * b, m, p);
}

PolyZ monic_mod(const PolyZ& a, const Int& p) {
  if (a.is_zero()) return a;
  Int inv = inv_mod(a.lc(), p);
  return poly_mod(a * inv, p);
}

}  // namespace

PolyZ poly_gcd_mod(PolyZ a, PolyZ b, const Int& p) {
  a = poly_mod(a, p);
  b = poly_mod(b, p);
  while (!b.is_zero()) {
    PolyZ r = rem_mod(a, b, p);
    a = b;
    b = r;
  }
  return monic_mod(a, p);
}

PolyZ pow_x_mod(const Int& e, const PolyZ& f, const Int& p) {
  PolyZ base = rem_mod(PolyZ::variable(), f, p);
  PolyZ acc = PolyZ(1);
  Int k = e;
  while (k > 0) {
    if (k % 2 == 1) acc = mul_mod(acc, base, f, p);
    base = mul_mod(base, base, f, p);
    k /= 2;
  }
  return acc;
}

bool squarefree_mod(const PolyZ& f, const Int& p) {
  PolyZ fp = poly_mod(f, p);
  if (fp.is_zero()) return false;
  PolyZ d = poly_mod(f.derivative(), p);
  if (d.is_zero()) return false;
  return poly_gcd_mod(fp, d, p).degree() == 0;
}

namespace {

// Collects roots of g (a product of distinct monic linear factors mod p) by
// repeated splitting with (X + delta)^((p-1)/2) - 1. Deterministic: delta
// walks 0, 1, 2, ...
void split_linear_factors(const PolyZ& g, const Int& p, std::vector<Int>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    // X + c  ->  root -c
    out.push_back(mod_pos(-g.coeff(0), p));
    return;
  }
  for (Int delta = 0;; ++delta) {
    // h = (X + delta)^((p-1)/2) - 1 mod g
    PolyZ shifted = PolyZ(std::vector<Int>{mod_pos(delta, p), 1});
    PolyZ base = rem_mod(shifted, g, p);
    PolyZ acc = PolyZ(1);
    Int k = (p - 1) / 2;
    while (k > 0) {
      if (k % 2 == 1) acc = mul_mod(acc, base, g, p);
      base = mul_mod(base, base, g, p);
      k /= 2;
    }
    PolyZ h = poly_mod(acc - PolyZ(1), p);
    PolyZ d = poly_gcd_mod(g, h, p);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear_factors(d, p, out);
      // exact division g / d mod p
      PolyZ rem = g;
      Int dinv = inv_mod(d.lc(), p);
      std::vector<Int> qc(static_cast<std::size_t>(g.degree() - d.degree()) + 1, 0);
      while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Int c = mod_pos(rem.lc() * dinv, p);
        std::size_t dd = static_cast<std::size_t>(rem.degree() - d.degree());
        qc[dd] = c;
        rem = poly_mod(rem - PolyZ::monomial(c, dd) * d, p);
      }
      split_linear_factors(PolyZ(std::move(qc)), p, out);
      return;
    }
  }
}

}  // namespace

std::vector<Int> roots_mod_p(const PolyZ& f, const Int& p) {
  PolyZ fp = poly_mod(f, p);
  if (fp.is_zero()) raise("ZeroReduction", "polynomial vanishes identically mod p");
  std::vector<Int> roots;
  if (p < 10000) {
    for (Int r = 0; r < p; ++r) {
      if (evaluate_mod(fp, r, p) == 0) roots.push_back(r);
    }
    return roots;
  }
  // gcd(X^p - X, f) isolates the distinct linear factors.
  PolyZ xp = pow_x_mod(p, fp, p);
  PolyZ g = poly_gcd_mod(poly_mod(xp - PolyZ::variable(), p), fp, p);
  if (g.degree() >= 1 && evaluate_mod(g, 0, p) == 0) {
    roots.push_back(0);
    // strip the factor X
    std::vector<Int> c(g.coeffs().begin() + 1, g.coeffs().end());
    g = PolyZ(std::move(c));
  }
  split_linear_factors(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace genusforms
