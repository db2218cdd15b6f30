#ifndef HOPFQ_FUNCTORS_HPP
#define HOPFQ_FUNCTORS_HPP

#include "hopfq/hopfmod.hpp"

namespace hopfq {

// Right module over the coinvariants of B: psi is dim x dim*rank(B^co).
struct RightModule {
    long dim = 0;
    Mat psi;
};

void validate_shapes(const System& sys, const RightModule& n);

AxiomReport check_right_module(const System& sys, const RightModule& n);

// The regular module (B^co, mu_co).
RightModule regular_coinv_module(const System& sys);

// F(N) = N (x)_{B^co} B with its coequalizer surjection.
struct InducedModule {
    StrongHopfModule mod;
    Mat n; // surjection N (x) B -> F(N)
};

// Induction: coequalizes psi (x) B against N (x) (mu.(i_B (x) B)) and factors
// the action/coaction through. Requires strong-1 and strong-2.
InducedModule functor_F(const System& sys, const RightModule& n);

// F on morphisms: the unique map with F(f).n_N = n_P.(f (x) B). Throws when f
// is not a module morphism (factorization inconsistency).
Mat functor_F_mor(const System& sys, const Mat& f, const InducedModule& fn, const InducedModule& fp);

// G on objects is module_coinvariants; this wraps the result as a module.
RightModule functor_G(const System& sys, const ModuleCoinvariants& mco);

// G on morphisms: g^co = p_Q.g.i_M, verified to satisfy i_Q.g^co = g.i_M and
// g^co.p_M = p_Q.g.
Mat functor_G_mor(const System& sys, const Mat& g, const ModuleCoinvariants& mco_m,
                  const ModuleCoinvariants& mco_q);

// Unit of the adjunction: the factorization of n_N.(N (x) eta_B) through the
// coinvariants of F(N), together with its explicit inverse x_N.
struct UnitPair {
    Mat alpha;   // N -> (F(N))^co
    Mat inverse; // x_N = m_N . i_{F(N)}
};
UnitPair unit_alpha(const System& sys, const RightModule& n, const InducedModule& fn,
                    const ModuleCoinvariants& mco_fn);

// Counit beta_M = omega_M; see omega_iso.

// Corollary labels: (i) Hopf algebra over a comodule monoid, (ii) weak Hopf
// algebra over a comodule monoid, (iii) Hopf quasigroup, (iv) general weak
// Hopf quasigroup.
std::string corollary_class(const System& sys);

struct EquivalenceOutcome {
    std::string corollary;
    std::vector<std::pair<std::string, long>> object_dims;
    AxiomReport report;
};

// Certifies the adjoint equivalence on a list of modules: both triangular
// identities, invertibility of unit and counit, functoriality and naturality
// on sampled morphisms.
EquivalenceOutcome equivalence_report(const System& sys,
                                      const std::vector<StrongHopfModule>& modules);

} // namespace hopfq

#endif
