#ifndef GENUSFORMS_JACOBIAN_HPP
#define GENUSFORMS_JACOBIAN_HPP

#include <utility>
#include <vector>

#include "genusforms/forms.hpp"

namespace genusforms {

/// Hyperelliptic curve Y^2 = f(X) with f monic, square-free, of odd degree
/// 2g+1 >= 3, with integer coefficients. Classes of forms [A, 2B, C] of
/// discriminant 4f correspond to points of the Jacobian over Q.
class Curve {
 public:
  explicit Curve(PolyZ f);

  const PolyZ& f() const { return f_; }
  const PolyQ& fq() const { return fq_; }
  int genus() const { return genus_; }

  /// All integer roots of f (|root| <= 1 + max |coeff| for monic f).
  std::vector<Int> integer_roots() const;

 private:
  PolyZ f_;
  PolyQ fq_;
  int genus_;
};

/// Mumford pair (u, v): u monic, deg v < deg u (identity is (1, 0)), and
/// u | v^2 - f. Encodes the ideal class <u, Y - v>. Reduced when deg u <= g.
struct MumfordDiv {
  PolyQ u, v;
  friend bool operator==(const MumfordDiv& a, const MumfordDiv& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const MumfordDiv& a, const MumfordDiv& b) { return !(a == b); }
};

/// Validating constructor: normalizes u monic and v mod u, checks u | v^2 - f
/// (errors with NotOnCurve).
MumfordDiv make_mumford(const PolyQ& u, const PolyQ& v, const Curve& curve);

MumfordDiv mumford_identity();

/// A point (x, y) with y^2 = f(x) as the degree-1 pair (X - x, y).
MumfordDiv mumford_point(const Rat& x, const Rat& y, const Curve& curve);

QuadFormP principal_form(const Curve& curve);

/// [A, 2B, C] of discriminant 4f  ->  (A made monic, B mod u).
/// Errors: ZeroLead when A == 0, DiscMismatch when disc != 4f.
MumfordDiv form_to_mumford(const QuadFormP& q, const Curve& curve);

/// (u, v)  ->  [u, 2v, (v^2 - f)/u]. Errors with NotOnCurve when u does not
/// divide v^2 - f.
QuadFormP mumford_to_form(const MumfordDiv& d, const Curve& curve);

/// Cantor reduction realized through form moves ([a,b,c] -> [c,-b,a] plus
/// translations) until deg a <= g.
QuadFormP reduce_poly_form(QuadFormP q, const Curve& curve);

/// Group law on reduced Mumford pairs: composition of the associated forms
/// followed by reduction; returns the unique reduced representative.
MumfordDiv cantor_add(const MumfordDiv& d1, const MumfordDiv& d2, const Curve& curve);

MumfordDiv cantor_neg(const MumfordDiv& d, const Curve& curve);

/// k-fold sum (k < 0 through the negation).
MumfordDiv cantor_mul(const MumfordDiv& d, const Int& k, const Curve& curve);

/// Class of the 2-descent value in L = Q[X]/(f): rep is the representative
/// ((-1)^deg(a) / lc(a)) * a reduced mod f, for a representative [a, 2b, c]
/// of the class with gcd(a, f) = 1; sign_norm records the constant factor.
struct DescentValue {
  PolyQ rep;
  Rat sign_norm;
};

/// Errors with NotCoprime when no coprime representative is reached.
DescentValue lambda_descent(const MumfordDiv& d, const Curve& curve);

/// Finite shadow of the descent value at a prime p: for each root r of
/// f mod p, the Jacobi character of rep(r) mod p. Requires f square-free
/// mod p and p odd, coprime to the denominators of rep (errors: BadPrime).
std::vector<std::pair<Int, int>> lambda_mod_p_character(const DescentValue& val,
                                                        const Curve& curve, const Int& p);

}  // namespace genusforms

#endif
