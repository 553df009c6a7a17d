#ifndef GENUSFORMS_POLY_HPP
#define GENUSFORMS_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "genusforms/errors.hpp"
#include "genusforms/ints.hpp"

namespace genusforms {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial is the empty coefficient list (degree -1).
template <typename C>
class Poly {
 public:
  Poly() = default;
  Poly(const C& constant) {  // NOLINT: implicit by design
    if (!(constant == C(0))) c_.push_back(constant);
  }
  Poly(int constant) : Poly(C(constant)) {}
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(C(1), 1); }
  static Poly monomial(const C& coeff, std::size_t deg) {
    Poly p;
    if (!(coeff == C(0))) {
      p.c_.assign(deg + 1, C(0));
      p.c_[deg] = coeff;
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& lc() const { return c_.back(); }  // requires nonzero

  C evaluate(const C& x) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    Poly d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * C(static_cast<int>(i)));
    return d.trim_ref();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    return r.trim_ref();
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    return r.trim_ref();
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r.trim_ref();
  }
  friend Poly operator*(const Poly& a, const C& s) { return a * Poly(s); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  Poly& trim_ref() {
    trim();
    return *this;
  }
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
  std::vector<C> c_;
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

PolyQ to_rational(const PolyZ& p);

/// Smallest d > 0 with d*p integral, together with the integer polynomial d*p.
PolyZ clear_denominators(const PolyQ& p, Int* denominator_out = nullptr);

/// Is every coefficient an integer?
bool is_integral(const PolyQ& p);

Rat evaluate_at(const PolyQ& p, const Rat& x);
Int evaluate_at(const PolyZ& p, const Int& x);

/// Euclidean division over the rationals; b nonzero.
std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b);

bool divides(const PolyQ& d, const PolyQ& a);

PolyQ monic(const PolyQ& p);

/// Monic gcd over the rationals. Errors with DegenerateGcd when both zero.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

struct PolyExtGcd {
  PolyQ g;   // monic gcd
  PolyQ r1;  // a*r1 + b*r2 == g
  PolyQ r2;
};

PolyExtGcd poly_ext_gcd(const PolyQ& a, const PolyQ& b);

// ---- arithmetic modulo a prime p ------------------------------------------

/// Coefficient-wise reduction into [0, p).
PolyZ poly_mod(const PolyZ& f, const Int& p);

Int evaluate_mod(const PolyZ& f, const Int& x, const Int& p);

/// Monic gcd of a and b modulo p (zero polynomial when both reduce to zero).
PolyZ poly_gcd_mod(PolyZ a, PolyZ b, const Int& p);

/// X^e modulo (f, p); f must have degree >= 1 mod p.
PolyZ pow_x_mod(const Int& e, const PolyZ& f, const Int& p);

bool squarefree_mod(const PolyZ& f, const Int& p);

/// All roots of f modulo the prime p, ascending. Errors with ZeroReduction
/// when f vanishes identically mod p. Linear scan below 10^4, gcd splitting
/// with X^p - X above.
std::vector<Int> roots_mod_p(const PolyZ& f, const Int& p);

}  // namespace genusforms

#endif
