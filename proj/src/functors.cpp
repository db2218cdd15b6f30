#include "hopfq/functors.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/expr.hpp"

namespace hopfq {

void validate_shapes(const System& sys, const RightModule& n) {
    const long r = sys.bco.split.rank;
    if (n.psi.rows() != n.dim || n.psi.cols() != n.dim * r)
        throw DimensionError("psi must be " + std::to_string(n.dim) + "x" +
                             std::to_string(n.dim * r) + ", got " + n.psi.shape_str());
}

AxiomReport check_right_module(const System& sys, const RightModule& n) {
    validate_shapes(sys, n);
    const long r = sys.bco.split.rank;
    CheckList list;
    list.eq("module-unit", [&] {
        return std::pair{(E(n.psi) * ten(eye(n.dim), E(sys.bco.eta_co))).eval(),
                         Mat::identity(n.dim)};
    }, "psi.(N x eta_co) = id");
    list.eq("module-assoc", [&, r] {
        return std::pair{(E(n.psi) * ten(E(n.psi), eye(r))).eval(),
                         (E(n.psi) * ten(eye(n.dim), E(sys.bco.mu_co))).eval()};
    }, "psi.(psi x B^co) = psi.(N x mu_co)");
    return list.run("right-module", {{"N", n.dim}, {"B^co", r}});
}

RightModule regular_coinv_module(const System& sys) {
    return RightModule{sys.bco.split.rank, sys.bco.mu_co};
}

InducedModule functor_F(const System& sys, const RightModule& n) {
    validate_shapes(sys, n);
    if (!sys.strong1 || !sys.strong2)
        throw CheckError("induction functor requires both mixed associativity conditions");
    const long dB = sys.B.dim, dH = sys.H.dim, dN = n.dim;
    const Mat& iB = sys.bco.split.i;

    Mat t1 = kron(n.psi, Mat::identity(dB));
    Mat t2 = (ten(eye(dN), E(sys.B.mu) * ten(E(iB), eye(dB)))).eval();
    InducedModule out;
    out.n = cokernel(t1 - t2);
    out.mod.dim = out.n.rows();
    out.mod.phi = factor_through_epi(kron(out.n, Mat::identity(dB)),
                                     (E(out.n) * ten(eye(dN), E(sys.B.mu))).eval());
    out.mod.rho = factor_through_epi(out.n, (ten(E(out.n), eye(dH)) * ten(eye(dN), E(sys.B.rho))).eval());
    return out;
}

Mat functor_F_mor(const System& sys, const Mat& f, const InducedModule& fn, const InducedModule& fp) {
    return factor_through_epi(fn.n, fp.n * kron(f, Mat::identity(sys.B.dim)));
}

RightModule functor_G(const System& sys, const ModuleCoinvariants& mco) {
    (void)sys;
    return RightModule{mco.split.rank, mco.phi_co};
}

Mat functor_G_mor(const System& sys, const Mat& g, const ModuleCoinvariants& mco_m,
                  const ModuleCoinvariants& mco_q) {
    (void)sys;
    Mat gco = mco_q.split.p * g * mco_m.split.i;
    if (mco_q.split.i * gco != g * mco_m.split.i)
        throw CheckError("coinvariants of a morphism do not factor through the injections");
    if (gco * mco_m.split.p != mco_q.split.p * g)
        throw CheckError("coinvariants of a morphism do not intertwine the projections");
    return gco;
}

UnitPair unit_alpha(const System& sys, const RightModule& n, const InducedModule& fn,
                    const ModuleCoinvariants& mco_fn) {
    const long dN = n.dim;
    Mat t = fn.n * kron(Mat::identity(dN), sys.B.eta);
    UnitPair out;
    out.alpha = mco_fn.split.p * t;
    if (mco_fn.split.i * out.alpha != t)
        throw CheckError("unit of the adjunction does not land in the coinvariants");
    Mat m_n = factor_through_epi(fn.n, (E(n.psi) * ten(eye(dN), E(sys.bco.split.p))).eval());
    out.inverse = m_n * mco_fn.split.i;
    if (out.inverse * out.alpha != Mat::identity(dN))
        throw CheckError("x_N.alpha_N = id_N fails");
    if (out.alpha * out.inverse != Mat::identity(mco_fn.split.rank))
        throw CheckError("alpha_N.x_N = id fails");
    return out;
}

std::string corollary_class(const System& sys) {
    const bool h_assoc = is_associative(sys.H);
    const bool h_mult = is_counit_coproduct_multiplicative(sys.H);
    const long dB = sys.B.dim;
    const bool b_assoc = (E(sys.B.mu) * ten(E(sys.B.mu), eye(dB))).eval() ==
                         (E(sys.B.mu) * ten(eye(dB), E(sys.B.mu))).eval();
    if (h_mult && h_assoc && b_assoc) return "(i)";
    if (!h_mult && h_assoc && b_assoc) return "(ii)";
    if (h_mult) return "(iii)";
    return "(iv)";
}

namespace {
struct AnalyzedModule {
    StrongHopfModule mod;
    ModuleCoinvariants mco;
    TensorOverCoinv tensor;
    OmegaPair omega;
};

AnalyzedModule analyze_module(const System& sys, const StrongHopfModule& m) {
    AnalyzedModule out;
    out.mod = m;
    out.mco = module_coinvariants(sys, m);
    out.tensor = tensor_over_coinv(sys, out.mco, m);
    out.omega = omega_iso(sys, out.mco, out.tensor, m);
    return out;
}

StrongHopfModule tensor_as_module(const TensorOverCoinv& t) {
    return StrongHopfModule{t.dim, t.phi_t, t.rho_t};
}
} // namespace

EquivalenceOutcome equivalence_report(const System& sys,
                                      const std::vector<StrongHopfModule>& modules) {
    EquivalenceOutcome out;
    out.corollary = corollary_class(sys);
    AxiomReport& rep = out.report;
    rep.suite = "equivalence";
    rep.dims = {{"H", sys.H.dim}, {"B", sys.B.dim}, {"B^co", sys.bco.split.rank}};

    CheckList pre;
    pre.pred("(strong-1)", [&] { return sys.strong1; });
    pre.pred("(strong-2)", [&] { return sys.strong2; });
    rep.append(pre.run("equivalence", {}));

    // Right-module side: the regular module plus the coinvariants of every
    // supplied Hopf module.
    std::vector<std::pair<std::string, RightModule>> sides;
    sides.emplace_back("B^co", regular_coinv_module(sys));

    std::vector<AnalyzedModule> analyzed;
    for (size_t k = 0; k < modules.size(); ++k) {
        const std::string tag = "M" + std::to_string(k);
        analyzed.push_back(analyze_module(sys, modules[k]));
        const AnalyzedModule& am = analyzed.back();
        out.object_dims.emplace_back(tag, am.mod.dim);
        out.object_dims.emplace_back(tag + "^co", am.mco.split.rank);
        sides.emplace_back("G(" + tag + ")", functor_G(sys, am.mco));

        CheckList list;
        list.pred("module-suite[" + tag + "]", [&sys, &am] {
            return check_strong_hopf_module(sys, am.mod).all_pass();
        });
        list.pred("beta-invertible[" + tag + "]", [&am] {
            auto inv = inverse(am.omega.omega);
            return inv && *inv == am.omega.omega_prime;
        });
        // Triangle 2: G(beta_M).alpha_{G(M)} = id_{G(M)}.
        list.pred("triangle-2[" + tag + "]", [&sys, &am] {
            ModuleCoinvariants mco_t = module_coinvariants(sys, tensor_as_module(am.tensor));
            Mat beta_co = functor_G_mor(sys, am.omega.omega, mco_t, am.mco);
            InducedModule fgm{tensor_as_module(am.tensor), am.tensor.n};
            UnitPair unit = unit_alpha(sys, functor_G(sys, am.mco), fgm, mco_t);
            return beta_co * unit.alpha == Mat::identity(am.mco.split.rank);
        });
        // Naturality of beta on g = omega_M : T(M) -> M.
        list.pred("beta-natural[omega," + tag + "]", [&sys, &am] {
            AnalyzedModule at = analyze_module(sys, tensor_as_module(am.tensor));
            ModuleCoinvariants mco_t = at.mco;
            Mat gco = functor_G_mor(sys, am.omega.omega, mco_t, am.mco);
            InducedModule f_src{tensor_as_module(at.tensor), at.tensor.n};
            InducedModule f_dst{tensor_as_module(am.tensor), am.tensor.n};
            Mat fg = functor_F_mor(sys, gco, f_src, f_dst);
            return am.omega.omega * fg == am.omega.omega * at.omega.omega;
        });
        rep.append(list.run("equivalence", {}));
    }

    for (const auto& [tag, nmod] : sides) {
        CheckList list;
        list.pred("right-module[" + tag + "]", [&sys, &nmod] {
            return check_right_module(sys, nmod).all_pass();
        });
        InducedModule fn = functor_F(sys, nmod);
        out.object_dims.emplace_back("F(" + tag + ")", fn.mod.dim);
        list.pred("F-strong[" + tag + "]", [&sys, &fn] {
            return check_strong_hopf_module(sys, fn.mod).all_pass();
        });
        list.pred("F-deformation-invariant[" + tag + "]", [&sys, &fn] {
            return deformed_action(sys, fn.mod) == fn.mod.phi;
        });
        ModuleCoinvariants mco_fn = module_coinvariants(sys, fn.mod);
        UnitPair unit = unit_alpha(sys, nmod, fn, mco_fn);
        list.pred("alpha-invertible[" + tag + "]", [&unit, &nmod] {
            return unit.inverse * unit.alpha == Mat::identity(nmod.dim);
        });
        list.pred("alpha-module-morphism[" + tag + "]", [&sys, &unit, &nmod, &mco_fn] {
            const long r = sys.bco.split.rank;
            Mat lhs = (E(mco_fn.phi_co) * ten(E(unit.alpha), eye(r))).eval();
            return lhs == unit.alpha * nmod.psi;
        });
        // Triangle 1: beta_{F(N)}.F(alpha_N) = id_{F(N)}.
        list.pred("triangle-1[" + tag + "]", [&sys, &fn, &mco_fn, &unit, &nmod] {
            TensorOverCoinv t = tensor_over_coinv(sys, mco_fn, fn.mod);
            OmegaPair beta = omega_iso(sys, mco_fn, t, fn.mod);
            InducedModule fgfn{tensor_as_module(t), t.n};
            Mat falpha = functor_F_mor(sys, unit.alpha, fn, fgfn);
            return beta.omega * falpha == Mat::identity(fn.mod.dim);
        });
        rep.append(list.run("equivalence", {}));
    }

    // Naturality of alpha and functoriality of F on sampled module maps:
    // scalar multiples of the identity always, and for the regular module the
    // left multiplications by coinvariant basis elements.
    {
        const RightModule reg = regular_coinv_module(sys);
        const long r = reg.dim;
        InducedModule freg = functor_F(sys, reg);
        ModuleCoinvariants mco_freg = module_coinvariants(sys, freg.mod);
        UnitPair unit = unit_alpha(sys, reg, freg, mco_freg);
        std::vector<std::pair<std::string, Mat>> maps;
        maps.emplace_back("2id", Mat::identity(r).scaled(2));
        for (long c = 0; c < r; ++c) {
            Mat basis(r, 1);
            basis.set(c, 0, 1);
            maps.emplace_back("L" + std::to_string(c),
                              (E(reg.psi) * ten(E(basis), eye(r))).eval());
        }
        CheckList list;
        for (const auto& [name, f] : maps) {
            list.pred("alpha-natural[" + name + "]", [&sys, &reg, &freg, &mco_freg, &unit, f] {
                Mat ff = functor_F_mor(sys, f, freg, freg);
                Mat ffco = functor_G_mor(sys, ff, mco_freg, mco_freg);
                return ffco * unit.alpha == unit.alpha * f;
            });
        }
        list.pred("F-functorial", [&sys, &freg, &maps] {
            const auto& f = maps.front().second; // 2id
            const auto& g = maps.back().second;
            Mat ff = functor_F_mor(sys, f, freg, freg);
            Mat fg = functor_F_mor(sys, g, freg, freg);
            Mat fgf = functor_F_mor(sys, g * f, freg, freg);
            return fg * ff == fgf &&
                   functor_F_mor(sys, Mat::identity(freg.n.cols() / sys.B.dim), freg, freg) ==
                       Mat::identity(freg.mod.dim);
        });
        rep.append(list.run("equivalence", {}));
    }

    return out;
}

} // namespace hopfq
