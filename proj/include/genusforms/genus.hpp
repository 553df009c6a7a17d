#ifndef GENUSFORMS_GENUS_HPP
#define GENUSFORMS_GENUS_HPP

#include <optional>
#include <vector>

#include "genusforms/forms.hpp"
#include "genusforms/jacobian.hpp"
#include "genusforms/sring.hpp"

namespace genusforms {

/// A coset a^{-1} H0 of the value subgroup H0 inside the units modulo m,
/// where m is the prime-to-S part of the discriminant. H0 is stored
/// explicitly as a sorted list. Modulus 1 is the trivial (uninformative)
/// group, stored as h0 = {0}, rep = 0.
struct GenusCoset {
  Int modulus;
  std::vector<Int> h0;
  Int rep;
};

/// Value subgroup of the principal class: H0 = (image of the S-units) *
/// { q0(x, y) mod m coprime to m }, by exhaustive enumeration per prime-power
/// factor of m, recombined with the Chinese Remainder Theorem.
/// Errors: ZeroDisc for disc == 0, BadParity when no principal form exists,
/// ModulusTooLarge beyond the enumeration caps.
GenusCoset value_subgroup_H0(const Int& disc, const SRing& s);

/// Genus map: rep = a'^{-1} mod m for a representative [a',b',c'] of the
/// class of q with gcd(a', m) = 1.
GenusCoset psi(const QuadFormZ& q, const SRing& s);

/// Membership of the value u (coprime to the modulus) in H0.
bool h0_contains(const GenusCoset& coset, const Int& u);

/// Do two cosets of the same H0 coincide?
bool same_coset(const GenusCoset& a, const GenusCoset& b);

/// Is the class of q in the kernel of the genus map?
bool in_principal_genus(const QuadFormZ& q, const SRing& s);

struct PsiWitness {
  Int eps;  // S-unit square class representative
  Int p;    // odd prime not in S
  Int r;    // root of f mod p with jacobi(eps * A(r), p) == -1
};

struct PsiCertificate {
  std::vector<PsiWitness> witnesses;  // one entry per square class
};

struct CertificateResult {
  std::optional<PsiCertificate> certificate;  // nullopt: NotFound
  std::vector<Int> unserved;                  // square classes with no witness in range
};

/// One-sided non-square certificate for the polynomial genus map: for every
/// S-unit square class eps, a prime witness (p, r) with f(r) == 0 mod p and
/// jacobi(eps * A(r), p) == -1, where [A, 2B, C] is a representative of q
/// with A coprime to f. Primes are scanned ascending in [prime_min,
/// prime_bound]; a single prime serving every class is preferred, otherwise
/// one prime per class (classes may share a prime only with the same root).
/// Errors with NotCoprime when no coprime representative is reached.
CertificateResult psi_poly_certificate(const QuadFormP& q, const Curve& curve, const SRing& s,
                                       const Int& prime_bound, const Int& prime_min = 3);

}  // namespace genusforms

#endif
