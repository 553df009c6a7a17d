#include "genusforms/jacobian.hpp"

#include <algorithm>

namespace genusforms {

Curve::Curve(PolyZ f) : f_(std::move(f)) {
  int d = f_.degree();
  if (d < 3 || d % 2 == 0) raise("BadParity", "curve polynomial must have odd degree >= 3");
  if (f_.lc() != 1) raise("BadParity", "curve polynomial must be monic");
  fq_ = to_rational(f_);
  if (poly_gcd(fq_, fq_.derivative()).degree() != 0)
    raise("DegenerateDisc", "curve polynomial must be square-free");
  genus_ = (d - 1) / 2;
}

std::vector<Int> Curve::integer_roots() const {
  // Monic with integer coefficients: |root| <= 1 + max |coeff|.
  Int bound = 1;
  for (const auto& c : f_.coeffs()) bound = std::max(bound, abs(c) + 1);
  if (bound > 20000000) raise("SearchExhausted", "integer root scan bound too large");
  std::vector<Int> roots;
  for (Int n = -bound; n <= bound; ++n) {
    if (evaluate_at(f_, n) == 0) roots.push_back(n);
  }
  return roots;
}

MumfordDiv mumford_identity() { return {PolyQ(1), PolyQ(0)}; }

MumfordDiv make_mumford(const PolyQ& u_in, const PolyQ& v_in, const Curve& curve) {
  if (u_in.is_zero()) raise("NotOnCurve", "Mumford u polynomial must be nonzero");
  PolyQ u = monic(u_in);
  PolyQ v = u.degree() == 0 ? PolyQ(0) : divrem(v_in, u).second;
  if (!divides(u, v * v - curve.fq())) raise("NotOnCurve", "u must divide v^2 - f");
  return {u, v};
}

MumfordDiv mumford_point(const Rat& x, const Rat& y, const Curve& curve) {
  if (evaluate_at(curve.fq(), x) != y * y) raise("NotOnCurve", "y^2 != f(x)");
  PolyQ u = PolyQ::variable() - PolyQ(x);
  return {u, PolyQ(y)};
}

QuadFormP principal_form(const Curve& curve) { return principal_form_poly(curve.fq()); }

MumfordDiv form_to_mumford(const QuadFormP& q, const Curve& curve) {
  if (q.a.is_zero()) raise("ZeroLead", "form has zero leading coefficient");
  if (!(discriminant(q) == PolyQ(4) * curve.fq()))
    raise("DiscMismatch", "form discriminant is not 4f");
  PolyQ half_b = q.b * Rat(1, 2);
  return make_mumford(q.a, half_b, curve);
}

QuadFormP mumford_to_form(const MumfordDiv& d, const Curve& curve) {
  PolyQ t = d.v * d.v - curve.fq();
  auto [quot, rem] = divrem(t, d.u);
  if (!rem.is_zero()) raise("NotOnCurve", "u must divide v^2 - f");
  return {d.u, PolyQ(2) * d.v, quot};
}

QuadFormP reduce_poly_form(QuadFormP q, const Curve& curve) {
  int g = curve.genus();
  const Mat2P swap{PolyQ(0), PolyQ(1), PolyQ(-1), PolyQ(0)};
  for (int guard = 0; guard < 1 << 12; ++guard) {
    if (q.a.is_zero()) raise("ZeroLead", "form has zero leading coefficient");
    // Translate so deg b < deg a (b is even: b = 2B, translate by -quo(B, a)).
    PolyQ half_b = q.b * Rat(1, 2);
    PolyQ k = PolyQ(0) - divrem(half_b, q.a).first;
    if (!k.is_zero()) q = act(Mat2P{PolyQ(1), k, PolyQ(0), PolyQ(1)}, q);
    if (q.a.degree() <= g) break;
    q = act(swap, q);
  }
  return q;
}

MumfordDiv cantor_add(const MumfordDiv& d1, const MumfordDiv& d2, const Curve& curve) {
  if (d1.u.degree() == 0) return d2;
  if (d2.u.degree() == 0) return d1;
  QuadFormP q = compose(mumford_to_form(d1, curve), mumford_to_form(d2, curve));
  return form_to_mumford(reduce_poly_form(q, curve), curve);
}

MumfordDiv cantor_neg(const MumfordDiv& d, const Curve& curve) {
  return make_mumford(d.u, PolyQ(0) - d.v, curve);
}

MumfordDiv cantor_mul(const MumfordDiv& d, const Int& k, const Curve& curve) {
  if (k == 0) return mumford_identity();
  if (k < 0) return cantor_mul(cantor_neg(d, curve), -k, curve);
  MumfordDiv base = d;
  MumfordDiv acc = mumford_identity();
  Int e = k;
  while (e > 0) {
    if (e % 2 == 1) acc = cantor_add(acc, base, curve);
    e /= 2;
    if (e > 0) base = cantor_add(base, base, curve);
  }
  return acc;
}

DescentValue lambda_descent(const MumfordDiv& d, const Curve& curve) {
  PolyQ a = d.u;
  if (a.degree() == 0) return {PolyQ(1), Rat(1)};
  if (poly_gcd(a, curve.fq()).degree() != 0) {
    // Move to a representative with leading polynomial coprime to f.
    QuadFormP q = mumford_to_form(d, curve);
    a = coprime_representative(q, curve.fq()).form.a;
    if (a.is_zero() || poly_gcd(a, curve.fq()).degree() != 0)
      raise("NotCoprime", "no representative coprime to f was found");
  }
  Rat sign_norm = Rat(a.degree() % 2 == 0 ? 1 : -1) / a.lc();
  PolyQ rep = divrem(a * PolyQ(sign_norm), curve.fq()).second;
  return {rep, sign_norm};
}

std::vector<std::pair<Int, int>> lambda_mod_p_character(const DescentValue& val,
                                                        const Curve& curve, const Int& p) {
  if (p < 3 || !is_prime(p)) raise("BadPrime", "character primes must be odd primes");
  if (!squarefree_mod(curve.f(), p)) raise("BadPrime", "f is not square-free mod p");
  Int den_rep = 1;
  PolyZ rep_int = clear_denominators(val.rep, &den_rep);
  if (den_rep % p == 0) raise("BadPrime", "p divides a denominator of the descent value");
  Int den_inv = inv_mod(den_rep, p);
  std::vector<std::pair<Int, int>> out;
  for (const Int& r : roots_mod_p(curve.f(), p)) {
    Int value = mod_pos(evaluate_mod(rep_int, r, p) * den_inv, p);
    out.emplace_back(r, jacobi(value, p));
  }
  return out;
}

}  // namespace genusforms
