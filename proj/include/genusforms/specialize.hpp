#ifndef GENUSFORMS_SPECIALIZE_HPP
#define GENUSFORMS_SPECIALIZE_HPP

#include <map>
#include <optional>
#include <vector>

#include "genusforms/genus.hpp"
#include "genusforms/jacobian.hpp"
#include "genusforms/reduction.hpp"

namespace genusforms {

enum class CellClass { Trivial, NonTrivial, DegenerateSquare, RootOfF };
enum class CellMethod { ExactReduction, GenusCertificate, Unknown };

struct SieveCell {
  Int n;
  Int f_of_n;
  CellClass cls;  // undetermined when method == Unknown
  CellMethod method;
  std::optional<Mat2Z> witness;  // for Trivial cells: maps the specialized
                                 // form to [1, 0, -f(n)]
};

/// Evaluation of a polynomial form at X = n: [A(n), 2B(n), C(n)], of
/// discriminant 4f(n). Values must be S-integers (error NotSIntegral);
/// S-integral non-integer values are moved to an integer representative by
/// unit diagonal moves where possible. Errors with ImprimitiveSpecialization
/// when the result is not primitive over the S-integers.
QuadFormZ eval_form(const QuadFormP& q, const Int& n, const SRing& s);

/// Classification of the specialization at n:
///  - RootOfF when f(n) == 0;
///  - DegenerateSquare when f(n) is an S-unit times a nonzero square;
///  - otherwise, for S empty, Trivial/NonTrivial decided exactly by
///    reduction (with an equivalence witness on Trivial cells);
///  - for S nonempty, NonTrivial when the genus certificate applies,
///    Unknown otherwise (sound but incomplete).
SieveCell classify_specialization(const QuadFormP& q, const Int& n, const SRing& s);

/// One cell per n in [lo, hi], ascending. Parallel over n; the worker count
/// is capped by the GENUSFORMS_THREADS environment variable.
std::vector<SieveCell> sieve(const QuadFormP& q, const Int& lo, const Int& hi, const SRing& s);

struct CongruenceClass {
  Int residue;
  Int modulus;  // product of the distinct witness primes
  PsiCertificate witnesses;
};

struct CriterionResult {
  std::vector<CongruenceClass> classes;
  std::vector<Int> excluded_roots;  // integer roots of f inside the classes
};

/// Modular criterion: congruence classes of n along which the specialization
/// is certified non-trivial, from the prime witnesses of the polynomial
/// genus certificate. Returns nullopt (NotFound) when some square class has
/// no witness below the bound — in particular for classes in the principal
/// genus, where the method cannot certify anything.
std::optional<CriterionResult> find_criterion(const QuadFormP& q, const Curve& curve,
                                              const SRing& s, const Int& prime_bound,
                                              const Int& prime_min = 3);

struct DensityReport {
  Int n_max;
  bool symmetric = false;
  std::map<CellClass, Int> counts;
  Int unknown = 0;
  Rat trivial_fraction;
  std::vector<std::pair<Int, Rat>> prefix;  // (N', trivial fraction on the box of size N')
  bool monotone_nonincreasing = true;
};

/// Box-counting estimate of the density of trivial specializations on
/// [1, N] (plus [-N, -1] when symmetric). Exact rational fractions; the
/// prefix series is reported at N/10 steps.
DensityReport empirical_density(const QuadFormP& q, const Int& n_max, const SRing& s,
                                bool symmetric = false);

const char* to_string(CellClass c);
const char* to_string(CellMethod m);

}  // namespace genusforms

#endif
