#ifndef HOPFQ_STRUCTURES_HPP
#define HOPFQ_STRUCTURES_HPP

#include "hopfq/mat.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

// A unital magma (A, eta, mu): eta is dim x 1, mu is dim x dim^2.
struct UnitalMagma {
    long dim = 0;
    Mat eta;
    Mat mu;
};

// A comonoid (D, eps, delta): eps is 1 x dim, delta is dim^2 x dim.
struct Comonoid {
    long dim = 0;
    Mat eps;
    Mat delta;
};

// Unital magma + comonoid on the same object, with an antipode candidate.
// Construction only pins shapes; the axiom content is what check_whq and
// friends report, so broken inputs are representable and diagnosable.
struct WeakHopfQuasigroup {
    long dim = 0;
    Mat eta;    // dim x 1
    Mat mu;     // dim x dim^2
    Mat eps;    // 1 x dim
    Mat delta;  // dim^2 x dim
    Mat lambda; // dim x dim

    UnitalMagma magma() const { return {dim, eta, mu}; }
    Comonoid comonoid() const { return {dim, eps, delta}; }
};

void validate_shapes(const UnitalMagma& a);
void validate_shapes(const Comonoid& d);
void validate_shapes(const WeakHopfQuasigroup& h);

// Convolution product f * g = mu_A . (f (x) g) . delta_D of parallel
// morphisms D -> A.
Mat convolution(const Mat& f, const Mat& g, const Comonoid& d, const UnitalMagma& a);

// The four projections. pi_left/pi_right use the unit/counit composites of
// the axiom system; their agreement with id * lambda and lambda * id is a
// reported axiom, not an assumption.
Mat pi_left(const WeakHopfQuasigroup& h);
Mat pi_right(const WeakHopfQuasigroup& h);
Mat pi_bar_left(const WeakHopfQuasigroup& h);
Mat pi_bar_right(const WeakHopfQuasigroup& h);

// Full weak Hopf quasigroup suite: magma/comonoid laws, (a1)-(a3), the
// antipode axioms (a4-1)-(a4-7), and the antipode unit/counit sanity lines.
AxiomReport check_whq(const WeakHopfQuasigroup& h);

// Hopf quasigroup specialization: counit/coproduct multiplicativity plus the
// left/right division axioms.
AxiomReport check_hopf_quasigroup(const WeakHopfQuasigroup& h);

// Twelve projection identities: three mixed-associativity laws for each of
// the four projections.
AxiomReport lemma_projection_identities(const WeakHopfQuasigroup& h);

// Derived-identity suite: projection idempotency, convolution
// characterizations, antipode anti(co)multiplicativity, the target-object
// equalizer cross-check, and the cocommutative collapse when it applies.
AxiomReport structure_identities(const WeakHopfQuasigroup& h);

// Image of the target projection with its induced monoid and comonoid.
struct TargetSubmonoid {
    SplitIdempotent split; // of pi_left
    UnitalMagma monoid;
    Comonoid comonoid;
};

// Splits pi_left and equips the image with the induced structure. Verifies
// associativity of the induced product and the equalizer description of the
// image against the kernel oracle; violations are hard errors because they
// contradict an already-passing axiom suite.
TargetSubmonoid target_submonoid(const WeakHopfQuasigroup& h);

// Structure classification used for the corollary labels.
bool is_associative(const WeakHopfQuasigroup& h);
bool is_counit_coproduct_multiplicative(const WeakHopfQuasigroup& h);
bool is_cocommutative(const WeakHopfQuasigroup& h);

} // namespace hopfq

#endif
