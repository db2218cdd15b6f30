#ifndef HOPFQ_HOPFMOD_HPP
#define HOPFQ_HOPFMOD_HPP

#include "hopfq/comodule.hpp"

namespace hopfq {

// An analyzed (H, B, h) triple: the projections, the coinvariant idempotent
// and its split, and the two mixed associativity flags, computed once and
// shared by every module-level operation.
struct System {
    WeakHopfQuasigroup H;
    ComoduleMagma B;
    Mat h;      // anchor
    Mat piL, piR, piBarR;
    Mat qB;
    Coinvariants bco;
    bool strong1 = false;
    bool strong2 = false;
};

// Computes the derived data. Throws CheckError when q_B is not a valid
// idempotent or the coinvariants disagree with the kernel oracle; run the
// axiom suites first to get per-line diagnostics instead.
System analyze_system(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b, const Mat& anchor);

// Action phi: M (x) B -> M together with coaction rho: M -> M (x) H.
struct StrongHopfModule {
    long dim = 0;
    Mat phi; // dim x dim*dimB
    Mat rho; // dim*dimH x dim
};

void validate_shapes(const System& sys, const StrongHopfModule& m);

// Comodule laws (d1) plus the five action axioms (d2-1)-(d2-5), followed by
// their standard consequences, one line each. The final line doubles as the
// redundancy certificate for the older axiomatization ("(d2-7)" makes the
// extra identity of the historic definition superfluous).
AxiomReport check_strong_hopf_module(const System& sys, const StrongHopfModule& m);

// q_M = phi.(M (x) (h.lambda)).rho. Verifies the coaction identities and
// idempotency, throwing on failure.
Mat module_idempotent(const System& sys, const StrongHopfModule& m);

struct ModuleCoinvariants {
    SplitIdempotent split; // of q_M
    Mat phi_co;            // rank x rank*rankB action of B^co on M^co
};

// Splits q_M, cross-checks both equalizer descriptions against the kernel
// oracle, and builds the induced action of the coinvariants of B; verifies
// the module laws of the result. Mismatches are hard errors.
ModuleCoinvariants module_coinvariants(const System& sys, const StrongHopfModule& m);

// The q_M identities, the seven mixed identities relating q_M, q_B and the
// split maps, and the existence condition for the induced action.
AxiomReport check_module_identities(const System& sys, const StrongHopfModule& m);

// M^co (x)_{B^co} B presented by the coequalizer surjection n and the
// induced action/coaction.
struct TensorOverCoinv {
    Mat n; // dim x rank(M^co)*dimB, surjective
    long dim = 0;
    Mat phi_t;
    Mat rho_t;
};

// Coequalizer of phi_co (x) B against M^co (x) (mu.(i_B (x) B)), with the
// action and coaction factored through it. Factorization failures are hard
// errors (they would contradict the well-definedness argument).
TensorOverCoinv tensor_over_coinv(const System& sys, const ModuleCoinvariants& mco,
                                  const StrongHopfModule& m);

struct OmegaPair {
    Mat omega;       // tensor module -> M
    Mat omega_prime; // M -> tensor module, the explicit inverse
};

// omega is the factorization of phi.(i_M (x) B) through n; omega' is
// n.(p_M (x) h).rho. Verifies the two inverse laws and H-colinearity,
// throwing on failure.
OmegaPair omega_iso(const System& sys, const ModuleCoinvariants& mco, const TensorOverCoinv& t,
                    const StrongHopfModule& m);

// The deformed action phi^omega = phi.(q_M (x) (mu_B.(h (x) B))).(rho (x) B).
Mat deformed_action(const System& sys, const StrongHopfModule& m);

// Deformation identities: q unchanged, idempotency of the deformation,
// agreement on the coinvariant part, and the deformed triple being a strong
// module again.
AxiomReport check_deformation(const System& sys, const StrongHopfModule& m);

// Colinearity and quasilinearity (with respect to the deformed actions) of
// f: M -> N.
AxiomReport check_morphism(const System& sys, const StrongHopfModule& m, const StrongHopfModule& n,
                           const Mat& f);

// Full certification that M is isomorphic to M^co (x)_{B^co} B via omega:
// invertibility, colinearity, quasilinearity and the dimension count.
AxiomReport fundamental_theorem(const System& sys, const StrongHopfModule& m);

// The regular module (B, mu_B, rho_B); a strong module whenever strong-1
// holds.
StrongHopfModule regular_module(const System& sys);

} // namespace hopfq

#endif
