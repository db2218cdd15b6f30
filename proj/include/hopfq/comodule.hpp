#ifndef HOPFQ_COMODULE_HPP
#define HOPFQ_COMODULE_HPP

#include "hopfq/structures.hpp"

namespace hopfq {

// Unital magma B with a right coaction rho: B -> B (x) H over a fixed weak
// Hopf quasigroup. Plain data; the axiom content lives in the suites.
struct ComoduleMagma {
    long dim = 0;
    Mat eta; // dim x 1
    Mat mu;  // dim x dim^2
    Mat rho; // dim*dimH x dim
};

void validate_shapes(const WeakHopfQuasigroup& h, const ComoduleMagma& b);
void validate_anchor_shapes(const WeakHopfQuasigroup& h, const ComoduleMagma& b, const Mat& anchor);

// Comodule and magma laws, the coaction/product compatibility, and the six
// weak unit conditions (b1)-(b6). The conditions are checked independently
// and a consistency line flags any structure satisfying some but not all of
// them.
AxiomReport check_comodule_magma(const WeakHopfQuasigroup& h, const ComoduleMagma& b);

// h is a comodule morphism H -> B with h.eta_H = eta_B.
AxiomReport check_total_integral(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b,
                                 const Mat& anchor);

// Total integral + multiplicativity + (c1)(c2), followed by the derived
// identities each as its own line.
AxiomReport check_anchor(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b, const Mat& anchor);

// q_B = mu_B.(B (x) (h.lambda)).rho_B. Verifies the two coaction identities
// and idempotency; failure throws (the input was not a valid total integral
// over a valid comodule magma).
Mat coinv_idempotent(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b, const Mat& anchor);

// Coinvariants of B: the split of q_B together with the induced unit and
// product on the image.
struct Coinvariants {
    SplitIdempotent split; // of q_B; split.i = i_B, split.p = p_B
    Mat eta_co;            // rank x 1
    Mat mu_co;             // rank x rank^2
};

// Splits q_B, cross-checks both equalizer descriptions of the image against
// the kernel oracle (mismatch is a hard error), and builds the induced
// submagma structure.
Coinvariants coinvariants(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b, const Mat& anchor);

// The two mixed associativity conditions tying B to its coinvariants, plus
// associativity of the induced product when the first one holds.
AxiomReport check_strong_eqs(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b,
                             const Mat& anchor);

// Derived identities for a (B, h) pair: coaction identities of q_B,
// the coinvariant unit/product factorizations, and the kernel-oracle
// subspace agreement.
AxiomReport comodule_identities(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b,
                                const Mat& anchor);

// (H, delta_H) as a right comodule magma over itself, with anchor id_H.
ComoduleMagma regular_comodule(const WeakHopfQuasigroup& h);

} // namespace hopfq

#endif
