#ifndef GENUSFORMS_FORMS_HPP
#define GENUSFORMS_FORMS_HPP

#include <optional>
#include <utility>

#include "genusforms/errors.hpp"
#include "genusforms/ints.hpp"
#include "genusforms/poly.hpp"
#include "genusforms/sring.hpp"

namespace genusforms {

/// Binary quadratic form a*x^2 + b*xy + c*y^2, written [a,b,c].
/// Over Q[X] the middle coefficient is kept even: forms are [A, 2B, C].
template <typename R>
struct QuadForm {
  R a, b, c;
  friend bool operator==(const QuadForm& p, const QuadForm& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }
  friend bool operator!=(const QuadForm& p, const QuadForm& q) { return !(p == q); }
};

template <typename R>
struct Mat2 {
  R m00, m01, m10, m11;

  R det() const { return m00 * m11 - m01 * m10; }
  static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }
};

using QuadFormZ = QuadForm<Int>;
using QuadFormP = QuadForm<PolyQ>;
using Mat2Z = Mat2<Int>;
using Mat2P = Mat2<PolyQ>;

// ---- ring helpers shared by the two coefficient rings ----------------------

namespace detail {

inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(const PolyQ& x) { return x.is_zero(); }

inline bool ring_is_unit(const Int& x) { return x == 1 || x == -1; }
inline bool ring_is_unit(const PolyQ& x) { return x.degree() == 0; }

inline bool ring_is_coprime(const Int& a, const Int& b) { return gcd(a, b) == 1; }
inline bool ring_is_coprime(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) return false;
  return poly_gcd(a, b).degree() == 0;
}

inline Int ring_div_exact(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) raise("DiscMismatch", "non-exact division in form arithmetic");
  return a / b;
}
inline PolyQ ring_div_exact(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) raise("DiscMismatch", "non-exact division in form arithmetic");
  return q;
}

struct BezoutZ {
  Int g, r1, r2;
};
struct BezoutP {
  PolyQ g, r1, r2;
};
inline BezoutZ ring_bezout(const Int& a, const Int& b) {
  ExtGcd e = ext_gcd(a, b);
  return {e.g, e.r1, e.r2};
}
inline BezoutP ring_bezout(const PolyQ& a, const PolyQ& b) {
  PolyExtGcd e = poly_ext_gcd(a, b);
  return {e.g, e.r1, e.r2};
}

}  // namespace detail

// ---- basic operations -------------------------------------------------------

template <typename R>
R discriminant(const QuadForm<R>& q) {
  return q.b * q.b - R(4) * q.a * q.c;
}

template <typename R>
R evaluate(const QuadForm<R>& q, const R& x, const R& y) {
  return q.a * x * x + q.b * x * y + q.c * y * y;
}

/// Twisted action M . q = (1/det M)(q o M). Requires det(M) to be a unit.
template <typename R>
QuadForm<R> act(const Mat2<R>& m, const QuadForm<R>& q) {
  R d = m.det();
  if (!detail::ring_is_unit(d)) raise("NonUnitDet", "matrix determinant is not a unit");
  R a2 = evaluate(q, m.m00, m.m10);
  R c2 = evaluate(q, m.m01, m.m11);
  R b2 = q.b * (m.m00 * m.m11 + m.m01 * m.m10) + R(2) * (q.a * m.m00 * m.m01 + q.c * m.m10 * m.m11);
  return {detail::ring_div_exact(a2, d), detail::ring_div_exact(b2, d),
          detail::ring_div_exact(c2, d)};
}

/// Inverse of a unit-determinant matrix.
template <typename R>
Mat2<R> inverse_unimodular(const Mat2<R>& m) {
  R d = m.det();
  if (!detail::ring_is_unit(d)) raise("NonUnitDet", "matrix determinant is not a unit");
  Mat2<R> adj{m.m11, R(0) - m.m01, R(0) - m.m10, m.m00};
  return {detail::ring_div_exact(adj.m00, d), detail::ring_div_exact(adj.m01, d),
          detail::ring_div_exact(adj.m10, d), detail::ring_div_exact(adj.m11, d)};
}

/// The representative [1, parity, -(disc - parity^2)/4] of the principal class.
/// Errors with BadParity when disc is not congruent to parity^2 mod 4.
QuadFormZ principal_form(const Int& disc, const Int& parity);

/// Principal form over the integers with the parity determined by disc.
QuadFormZ principal_form_z(const Int& disc);

/// Principal form [1, 0, -f] of discriminant 4f over Q[X].
QuadFormP principal_form_poly(const PolyQ& f);

/// Primitivity over Z, or over the S-integers when S is given (the
/// prime-to-S part of the content must be 1).
bool is_primitive(const QuadFormZ& q, const SRing* s = nullptr);

/// Primitivity over Q[X]: the coefficient gcd is a nonzero constant.
bool is_primitive(const QuadFormP& q);

template <typename R>
struct CoprimeRep {
  QuadForm<R> form;  // act(m, input) == form; det(m) == 1
  Mat2<R> m;
};

/// A representative of the class of q whose first coefficient is nonzero and
/// coprime to h (h nonzero, q primitive). Searches small substitution vectors;
/// errors with SearchExhausted if the cap is hit.
CoprimeRep<Int> coprime_representative(const QuadFormZ& q, const Int& h);

/// Over Q[X] the search runs over constant substitutions x = alpha, y = 1,
/// alpha = 0, 1, -1, 2, -2, ...
CoprimeRep<PolyQ> coprime_representative(const QuadFormP& q, const PolyQ& h);

/// Composition of primitive classes with equal discriminant. Internally
/// renormalizes so the leading coefficients are coprime to each other and to
/// the discriminant, then applies the Bezout composition formula
/// [a1*a2, B, -(disc - B^2)/(4*a1*a2)] with B = a1*r1*b2 + a2*r2*b1.
template <typename R>
QuadForm<R> compose(const QuadForm<R>& q1, const QuadForm<R>& q2) {
  R d1 = discriminant(q1), d2 = discriminant(q2);
  if (!(d1 == d2)) raise("DiscMismatch", "composition requires equal discriminants");
  if (detail::ring_is_zero(d1)) {
    // The class group of discriminant 0 is trivial.
    return {R(1), R(0), R(0)};
  }
  QuadForm<R> f1 = q1;
  if (detail::ring_is_zero(f1.a) || !detail::ring_is_coprime(f1.a, d1))
    f1 = coprime_representative(q1, d1).form;
  R h2 = f1.a * d1;
  QuadForm<R> f2 = q2;
  if (detail::ring_is_zero(f2.a) || !detail::ring_is_coprime(f2.a, h2))
    f2 = coprime_representative(q2, h2).form;
  auto bez = detail::ring_bezout(f1.a, f2.a);
  if (!detail::ring_is_unit(bez.g) && !(bez.g == R(1)))
    raise("SearchExhausted", "failed to reach coprime leading coefficients");
  // Normalize the Bezout relation to a1*r1 + a2*r2 == 1.
  R r1 = detail::ring_div_exact(bez.r1, bez.g);
  R r2 = detail::ring_div_exact(bez.r2, bez.g);
  R a = f1.a * f2.a;
  R b = f1.a * r1 * f2.b + f2.a * r2 * f1.b;
  R c = detail::ring_div_exact(b * b - d1, R(4) * a);
  return {a, b, c};
}

/// Class inverse: [a, -b, c].
template <typename R>
QuadForm<R> inverse(const QuadForm<R>& q) {
  return {q.a, R(0) - q.b, q.c};
}

Int parity_of_disc(const Int& disc);

namespace detail {
inline QuadFormZ principal_of_same_disc(const QuadFormZ& q) {
  return principal_form_z(discriminant(q));
}
inline QuadFormP principal_of_same_disc(const QuadFormP& q) {
  PolyQ d = discriminant(q);
  return {PolyQ(1), PolyQ(0), ring_div_exact(PolyQ(0) - d, PolyQ(4))};
}
}  // namespace detail

/// k-fold composition by square-and-multiply; k < 0 goes through the inverse.
/// Representatives are not reduced between steps.
template <typename R>
QuadForm<R> power(const QuadForm<R>& q, const Int& k) {
  if (k == 0) return detail::principal_of_same_disc(q);
  if (k < 0) return power(inverse(q), -k);
  QuadForm<R> base = q;
  std::optional<QuadForm<R>> acc;
  Int e = k;
  while (e > 0) {
    if (e % 2 == 1) acc = acc ? compose(*acc, base) : base;
    e /= 2;
    if (e > 0) base = compose(base, base);
  }
  return *acc;
}

}  // namespace genusforms

#endif
