#include "genusforms/forms.hpp"

namespace genusforms {

Int parity_of_disc(const Int& disc) { return mod_pos(disc, 2); }

QuadFormZ principal_form(const Int& disc, const Int& parity) {
  Int t = disc - parity * parity;
  if (mod_pos(t, 4) != 0) raise("BadParity", "disc is not parity^2 mod 4");
  return {Int(1), parity, -t / 4};
}

QuadFormZ principal_form_z(const Int& disc) { return principal_form(disc, parity_of_disc(disc)); }

QuadFormP principal_form_poly(const PolyQ& f) {
  return {PolyQ(1), PolyQ(0), PolyQ(0) - f};
}

bool is_primitive(const QuadFormZ& q, const SRing* s) {
  Int g = gcd(gcd(q.a, q.b), q.c);
  if (g == 0) return false;
  if (s) return s->prime_to_s_part(g) == 1;
  return g == 1;
}

bool is_primitive(const QuadFormP& q) {
  if (q.a.is_zero() && q.b.is_zero() && q.c.is_zero()) return false;
  PolyQ g = q.a;
  if (g.is_zero()) g = q.b;
  else if (!q.b.is_zero()) g = poly_gcd(g, q.b);
  if (g.is_zero()) g = q.c;
  else if (!q.c.is_zero()) g = poly_gcd(g, q.c);
  return g.degree() == 0;
}

namespace {

// Completes a coprime column (x0, y0) to a determinant-1 matrix and applies it.
CoprimeRep<Int> apply_column(const QuadFormZ& q, const Int& x0, const Int& y0) {
  ExtGcd e = ext_gcd(x0, y0);  // x0*r1 + y0*r2 == 1
  Mat2Z m{x0, -e.r2, y0, e.r1};
  return {act(m, q), m};
}

}  // namespace

CoprimeRep<Int> coprime_representative(const QuadFormZ& q, const Int& h) {
  if (h == 0) raise("DegenerateGcd", "coprime representative needs h != 0");
  Int ha = abs(h);
  auto good = [&](const Int& v) { return v != 0 && gcd(v, ha) == 1; };
  if (good(q.a)) return {q, Mat2Z::identity()};
  if (good(q.c)) {
    Mat2Z m{Int(0), Int(-1), Int(1), Int(0)};  // [a,b,c] -> [c,-b,a]
    return {act(m, q), m};
  }
  // Spiral over coprime substitution columns (x, y), |x| + |y| ascending.
  constexpr int kCap = 600;
  for (int s = 1; s <= kCap; ++s) {
    for (int xa = 0; xa <= s; ++xa) {
      int ya = s - xa;
      for (int sx = 0; sx < (xa == 0 ? 1 : 2); ++sx) {
        for (int sy = 0; sy < (ya == 0 ? 1 : 2); ++sy) {
          Int x = sx ? -xa : xa;
          Int y = sy ? -ya : ya;
          if (gcd(x, y) != 1) continue;
          if (good(evaluate(q, x, y))) return apply_column(q, x, y);
        }
      }
    }
  }
  raise("SearchExhausted", "no coprime representative found within the search cap");
}

CoprimeRep<PolyQ> coprime_representative(const QuadFormP& q, const PolyQ& h) {
  if (h.is_zero()) raise("DegenerateGcd", "coprime representative needs h != 0");
  auto good = [&](const PolyQ& v) {
    return !v.is_zero() && poly_gcd(v, h).degree() == 0;
  };
  if (good(q.a)) return {q, Mat2P::identity()};
  // x = alpha, y = 1 for alpha = 0, 1, -1, 2, -2, ...; at most 2*deg(h)
  // constants can fail, so the cap is never the binding constraint.
  long cap = 2 * static_cast<long>(h.degree()) + 16;
  for (long k = 0; k <= cap; ++k) {
    for (int sign = 0; sign < (k == 0 ? 1 : 2); ++sign) {
      PolyQ alpha = PolyQ(Rat(sign ? -k : k));
      PolyQ v = evaluate(q, alpha, PolyQ(1));
      if (!good(v)) continue;
      Mat2P m{alpha, PolyQ(-1), PolyQ(1), PolyQ(0)};  // det == 1
      return {act(m, q), m};
    }
  }
  raise("SearchExhausted", "no coprime representative found within the search cap");
}

}  // namespace genusforms
