#ifndef GENUSFORMS_REDUCTION_HPP
#define GENUSFORMS_REDUCTION_HPP

#include <optional>
#include <vector>

#include "genusforms/forms.hpp"

namespace genusforms {

enum class DiscTag { NegDef, PosNonsquare, PerfectSquare, Zero };

struct DiscClass {
  DiscTag tag;
  Int sqrt;  // set for PerfectSquare only
};

DiscClass classify_disc(const Int& disc);

struct ReducedForm {
  QuadFormZ form;
  Mat2Z witness;  // act(witness, input) == form; det is +-1 (-1 when the
                  // negative definite mirror [-a,b,-c] was taken first)
};

/// Unique Gauss-reduced positive definite representative (|b| <= a <= c,
/// b >= 0 when |b| == a or a == c) of the twisted class of q. Negative
/// definite input is mirrored to [-a,b,-c] first. Errors with WrongDiscSign
/// unless disc < 0.
ReducedForm reduce_posdef(const QuadFormZ& q);

/// Reduction to a reduced form of positive nonsquare discriminant
/// (|sqrt(disc) - 2|a|| < b < sqrt(disc), decided with exact integer
/// square roots). Errors with WrongDiscSign otherwise.
ReducedForm reduce_indef(const QuadFormZ& q);

/// The full rho-cycle of reduced forms containing the reduction of q.
/// Applying rho to the last member yields the first.
std::vector<QuadFormZ> reduce_indef_cycle(const QuadFormZ& q);

/// One step of the reduction operator rho on a form of positive nonsquare
/// discriminant, with its SL2 step matrix.
ReducedForm rho_step(const QuadFormZ& q);

bool is_reduced_indef(const QuadFormZ& q);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Mat2Z> witness;  // act(*witness, q) == target, when equivalent
};

/// Twisted equivalence of primitive forms of equal nonzero, nonsquare
/// discriminant; the twisted class is the union of the SL2 classes of q and
/// [-a,b,-c]. Errors with DegenerateDisc for square or zero discriminants.
EquivalenceResult equivalent_forms(const QuadFormZ& q, const QuadFormZ& target,
                                   bool want_witness = true);

/// Equivalence with the principal form [1, parity, -(disc-parity^2)/4].
EquivalenceResult is_equivalent_to_principal(const QuadFormZ& q, bool want_witness = true);

/// Canonical representative of the twisted class: the reduced positive
/// definite form for disc < 0, the lexicographically least member of the two
/// SL2 cycles for disc > 0 nonsquare.
QuadFormZ canonical_form(const QuadFormZ& q);

/// All Gauss-reduced primitive positive definite forms of discriminant
/// disc < 0, sorted lexicographically; one per twisted class.
std::vector<QuadFormZ> reduced_posdef_forms(const Int& disc);

}  // namespace genusforms

#endif
