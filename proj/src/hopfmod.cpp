#include "hopfq/hopfmod.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/expr.hpp"

namespace hopfq {

System analyze_system(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b, const Mat& anchor) {
    validate_anchor_shapes(h_whq, b, anchor);
    System sys;
    sys.H = h_whq;
    sys.B = b;
    sys.h = anchor;
    sys.piL = pi_left(h_whq);
    sys.piR = pi_right(h_whq);
    sys.piBarR = pi_bar_right(h_whq);
    sys.qB = coinv_idempotent(h_whq, b, anchor);
    sys.bco = coinvariants(h_whq, b, anchor);
    const long dB = b.dim;
    const Mat& i = sys.bco.split.i;
    sys.strong1 = (E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(i)), eye(dB))).eval() ==
                  (E(b.mu) * ten(eye(dB), E(b.mu) * ten(E(i), eye(dB)))).eval();
    sys.strong2 = (E(b.mu) * ten(E(i), E(b.mu))).eval() ==
                  (E(b.mu) * ten(E(b.mu) * ten(E(i), eye(dB)), eye(dB))).eval();
    return sys;
}

void validate_shapes(const System& sys, const StrongHopfModule& m) {
    if (m.phi.rows() != m.dim || m.phi.cols() != m.dim * sys.B.dim)
        throw DimensionError("phi_M must be " + std::to_string(m.dim) + "x" +
                             std::to_string(m.dim * sys.B.dim) + ", got " + m.phi.shape_str());
    if (m.rho.rows() != m.dim * sys.H.dim || m.rho.cols() != m.dim)
        throw DimensionError("rho_M must be " + std::to_string(m.dim * sys.H.dim) + "x" +
                             std::to_string(m.dim) + ", got " + m.rho.shape_str());
}

namespace {
Mat q_of(const System& sys, const StrongHopfModule& m) {
    return (E(m.phi) * ten(eye(m.dim), E(sys.h * sys.H.lambda)) * E(m.rho)).eval();
}
} // namespace

AxiomReport check_strong_hopf_module(const System& sys, const StrongHopfModule& m) {
    validate_shapes(sys, m);
    const long dM = m.dim, dB = sys.B.dim, dH = sys.H.dim;
    const Mat& h = sys.h;
    const Mat h_lambda = h * sys.H.lambda;
    const Mat& iB = sys.bco.split.i;
    CheckList list;

    list.eq("(d1-counit)", [&, dM] {
        return std::pair{(ten(eye(dM), E(sys.H.eps)) * E(m.rho)).eval(), Mat::identity(dM)};
    }, "(M x eps).rho = id");
    list.eq("(d1-coassoc)", [&, dM, dH] {
        return std::pair{(ten(E(m.rho), eye(dH)) * E(m.rho)).eval(),
                         (ten(eye(dM), E(sys.H.delta)) * E(m.rho)).eval()};
    }, "(rho x H).rho = (M x delta).rho");
    list.eq("(d2-1)", [&, dM] {
        return std::pair{(E(m.phi) * ten(eye(dM), E(sys.B.eta))).eval(), Mat::identity(dM)};
    }, "phi.(M x eta_B) = id");
    list.eq("(d2-2)", [&, dM, dB] {
        return std::pair{(E(m.phi) * ten(E(m.phi) * ten(eye(dM), E(iB)), eye(dB))).eval(),
                         (E(m.phi) * ten(eye(dM), E(sys.B.mu) * ten(E(iB), eye(dB)))).eval()};
    }, "phi.((phi.(M x i_B)) x B) = phi.(M x (mu.(i_B x B)))");
    list.eq("(d2-3)", [&, dM, dH] {
        return std::pair{(E(m.rho) * E(m.phi)).eval(),
                         (ten(E(m.phi), E(sys.H.mu)) * ten(eye(dM), E(swap_map(dH, dB)), eye(dH)) *
                          ten(E(m.rho), E(sys.B.rho)))
                             .eval()};
    }, "rho.phi = (phi x mu).(M x c x H).(rho x rho_B)");
    list.eq("(d2-4)", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(m.phi) * ten(eye(dM), E(h)), E(h_lambda)) *
                          ten(eye(dM), E(sys.H.delta)))
                             .eval(),
                         (E(m.phi) * ten(eye(dM), E(h * sys.piL))).eval()};
    }, "phi.((phi.(M x h)) x (h.lambda)).(M x delta) = phi.(M x (h.PiL))");
    list.eq("(d2-5)", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(m.phi) * ten(eye(dM), E(h_lambda)), E(h)) *
                          ten(eye(dM), E(sys.H.delta)))
                             .eval(),
                         (E(m.phi) * ten(eye(dM), E(h * sys.piR))).eval()};
    }, "phi.((phi.(M x (h.lambda))) x h).(M x delta) = phi.(M x (h.PiR))");

    // Consequences of (d1)-(d2).
    list.eq("coaction-bar-action", [&, dM] {
        return std::pair{(ten(eye(dM), E(sys.piBarR)) * E(m.rho) * E(m.phi)).eval(),
                         (ten(E(m.phi), E(sys.piBarR)) * ten(eye(dM), E(sys.B.rho))).eval()};
    }, "(M x PiR-bar).rho.phi = (phi x PiR-bar).(M x rho_B)");
    list.eq("action-retraction", [&, dM] {
        return std::pair{(E(m.phi) * ten(eye(dM), E(h * sys.piR)) * E(m.rho)).eval(),
                         Mat::identity(dM)};
    }, "phi.(M x (h.PiR)).rho = id");
    list.eq("action-absorption", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(m.phi), E(h * sys.piR)) * ten(eye(dM), E(sys.B.rho))).eval(),
                         m.phi};
    }, "phi.(phi x (h.PiR)).(M x rho_B) = phi");
    list.eq("target-absorption", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(m.phi) * ten(eye(dM), E(h * sys.piL)), E(h)) *
                          ten(eye(dM), E(sys.H.delta)))
                             .eval(),
                         (E(m.phi) * ten(eye(dM), E(h))).eval()};
    }, "phi.((phi.(M x (h.PiL))) x h).(M x delta) = phi.(M x h); "
       "renders the extra identity of the older strong-module definition superfluous");
    list.eq("q-absorption", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(m.phi) * ten(eye(dM), E(sys.qB)), E(h)) *
                          ten(eye(dM), E(sys.B.rho * h)))
                             .eval(),
                         (E(m.phi) * ten(eye(dM), E(h))).eval()};
    }, "phi.((phi.(M x q_B)) x h).(M x rho_B.h) = phi.(M x h)");

    return list.run("module", {{"H", dH}, {"B", dB}, {"M", dM}});
}

Mat module_idempotent(const System& sys, const StrongHopfModule& m) {
    validate_shapes(sys, m);
    const long dM = m.dim;
    Mat q = q_of(sys, m);
    Mat rho_q = m.rho * q;
    if ((ten(eye(dM), E(sys.piL)) * E(rho_q)).eval() != rho_q)
        throw CheckError("q_M failed its target-coaction identity");
    if ((ten(eye(dM), E(sys.piBarR)) * E(rho_q)).eval() != rho_q)
        throw CheckError("q_M failed its source-coaction identity");
    if (q * q != q) throw CheckError("q_M is not idempotent");
    return q;
}

ModuleCoinvariants module_coinvariants(const System& sys, const StrongHopfModule& m) {
    const long dM = m.dim;
    Mat q = module_idempotent(sys, m);
    ModuleCoinvariants out;
    out.split = split_idempotent(q);
    const Mat& iM = out.split.i;
    const Mat& pM = out.split.p;

    for (const Mat* pi : {&sys.piL, &sys.piBarR}) {
        Mat k = kernel_basis(m.rho - (ten(eye(dM), E(*pi)) * E(m.rho)).eval());
        if (!subspace_eq(iM, k))
            throw CheckError("module coinvariants disagree with the kernel oracle for the equalizer");
    }

    out.phi_co = (E(pM) * E(m.phi) * ten(E(iM), E(sys.bco.split.i))).eval();
    // Existence condition: the action of coinvariants stays inside the image.
    if ((E(m.phi) * ten(E(iM), E(sys.bco.split.i))).eval() != (E(iM) * E(out.phi_co)).eval())
        throw CheckError("action of B^co does not restrict to the module coinvariants");
    const long r = out.split.rank;
    if ((E(out.phi_co) * ten(eye(r), E(sys.bco.eta_co))).eval() != Mat::identity(r))
        throw CheckError("induced action fails the unit law");
    if (sys.strong1) {
        Mat assoc_l = (E(out.phi_co) * ten(E(out.phi_co), eye(sys.bco.split.rank))).eval();
        Mat assoc_r = (E(out.phi_co) * ten(eye(r), E(sys.bco.mu_co))).eval();
        if (assoc_l != assoc_r) throw CheckError("induced action fails associativity over B^co");
    }
    return out;
}

AxiomReport check_module_identities(const System& sys, const StrongHopfModule& m) {
    validate_shapes(sys, m);
    const long dM = m.dim, dB = sys.B.dim, dH = sys.H.dim;
    const Mat q = q_of(sys, m);
    const Mat rho_q = m.rho * q;
    const SplitIdempotent split = split_idempotent(q);
    const Mat& iM = split.i;
    const Mat& pM = split.p;
    const Mat& iB = sys.bco.split.i;
    CheckList list;

    list.eq("q-idempotent", [q] { return std::pair{q * q, q}; }, "q_M.q_M = q_M");
    list.eq("q-coaction-target", [&, dM] {
        return std::pair{(ten(eye(dM), E(sys.piL)) * E(rho_q)).eval(), rho_q};
    }, "rho.q = (M x PiL).rho.q");
    list.eq("q-coaction-source-bar", [&, dM] {
        return std::pair{(ten(eye(dM), E(sys.piBarR)) * E(rho_q)).eval(), rho_q};
    }, "rho.q = (M x PiR-bar).rho.q");

    list.eq("restricted-colinearity", [&, dM, dH] {
        return std::pair{(E(m.rho) * E(m.phi) * ten(E(iM), eye(dB))).eval(),
                         (ten(E(m.phi), eye(dH)) * ten(E(iM), E(sys.B.rho))).eval()};
    }, "rho.phi.(i_M x B) = (phi x H).(i_M x rho_B)");
    list.eq("restricted-q-compat", [&, dM] {
        return std::pair{(E(q) * E(m.phi) * ten(E(iM), eye(dB))).eval(),
                         (E(m.phi) * ten(E(iM), E(sys.qB))).eval()};
    }, "q_M.phi.(i_M x B) = phi.(i_M x q_B)");
    list.eq("restricted-q-colinearity", [&, dM, dH] {
        return std::pair{(ten(E(q), eye(dH)) * E(m.rho) * E(m.phi) * ten(E(iM), eye(dB))).eval(),
                         (ten(E(m.phi) * ten(eye(dM), E(sys.qB)), eye(dH)) * ten(E(iM), E(sys.B.rho)))
                             .eval()};
    }, "(q_M x H).rho.phi.(i_M x B) = ((phi.(M x q_B)) x H).(i_M x rho_B)");
    list.eq("restricted-p-colinearity", [&, dM, dH] {
        return std::pair{(ten(E(pM), eye(dH)) * E(m.rho) * E(m.phi) * ten(E(iM), eye(dB))).eval(),
                         (ten(E(pM) * E(m.phi) * ten(eye(dM), E(sys.qB)), eye(dH)) *
                          ten(E(iM), E(sys.B.rho)))
                             .eval()};
    }, "(p_M x H).rho.phi.(i_M x B) = ((p_M.phi.(M x q_B)) x H).(i_M x rho_B)");
    list.eq("coinv-action-fixed", [&] {
        return std::pair{(E(q) * E(m.phi) * ten(E(iM), E(iB))).eval(),
                         (E(m.phi) * ten(E(iM), E(iB))).eval()};
    }, "q_M.phi.(i_M x i_B) = phi.(i_M x i_B)");
    list.eq("projected-action-q", [&, dM] {
        return std::pair{(E(pM) * E(m.phi) * ten(E(iM), eye(dB))).eval(),
                         (E(pM) * E(m.phi) * ten(E(iM), E(sys.qB))).eval()};
    }, "p_M.phi.(i_M x B) = p_M.phi.(i_M x q_B)");
    list.eq("q-section", [&, dM] {
        return std::pair{(E(m.phi) * ten(E(q), E(sys.h)) * E(m.rho)).eval(), Mat::identity(dM)};
    }, "phi.(q_M x h).rho = id");
    list.eq("coinv-action-exists", [&, dM, dH] {
        Mat both = (E(m.rho) * E(m.phi) * ten(E(iM), E(iB))).eval();
        return std::pair{both, (ten(eye(dM), E(sys.piL)) * E(both)).eval()};
    }, "rho.phi.(i_M x i_B) = (M x PiL).rho.phi.(i_M x i_B)");

    return list.run("module-identities", {{"H", dH}, {"B", dB}, {"M", dM}});
}

TensorOverCoinv tensor_over_coinv(const System& sys, const ModuleCoinvariants& mco,
                                  const StrongHopfModule& m) {
    validate_shapes(sys, m);
    const long dB = sys.B.dim, dH = sys.H.dim;
    const long rM = mco.split.rank;
    const Mat& iB = sys.bco.split.i;

    Mat t1 = kron(mco.phi_co, Mat::identity(dB));
    Mat t2 = (ten(eye(rM), E(sys.B.mu) * ten(E(iB), eye(dB)))).eval();
    TensorOverCoinv out;
    out.n = cokernel(t1 - t2);
    out.dim = out.n.rows();
    out.phi_t = factor_through_epi(kron(out.n, Mat::identity(dB)),
                                   (E(out.n) * ten(eye(rM), E(sys.B.mu))).eval());
    out.rho_t = factor_through_epi(out.n, (ten(E(out.n), eye(dH)) * ten(eye(rM), E(sys.B.rho))).eval());
    return out;
}

OmegaPair omega_iso(const System& sys, const ModuleCoinvariants& mco, const TensorOverCoinv& t,
                    const StrongHopfModule& m) {
    const long dB = sys.B.dim, dH = sys.H.dim, dM = m.dim;
    OmegaPair out;
    out.omega = factor_through_epi(t.n, (E(m.phi) * ten(E(mco.split.i), eye(dB))).eval());
    out.omega_prime = (E(t.n) * ten(E(mco.split.p), E(sys.h)) * E(m.rho)).eval();
    if (out.omega * out.omega_prime != Mat::identity(dM))
        throw CheckError("omega.omega' = id_M fails");
    if (out.omega_prime * out.omega != Mat::identity(t.dim))
        throw CheckError("omega'.omega = id fails on the tensor module");
    if ((ten(E(out.omega), eye(dH)) * E(t.rho_t)).eval() != m.rho * out.omega)
        throw CheckError("omega is not H-colinear");
    return out;
}

Mat deformed_action(const System& sys, const StrongHopfModule& m) {
    validate_shapes(sys, m);
    const long dB = sys.B.dim;
    Mat q = q_of(sys, m);
    return (E(m.phi) * ten(E(q), E(sys.B.mu) * ten(E(sys.h), eye(dB))) * ten(E(m.rho), eye(dB)))
        .eval();
}

AxiomReport check_deformation(const System& sys, const StrongHopfModule& m) {
    const long dM = m.dim, dB = sys.B.dim;
    const Mat q = q_of(sys, m);
    const Mat phi_w = deformed_action(sys, m);
    const StrongHopfModule deformed{dM, phi_w, m.rho};
    CheckList list;
    list.eq("q-deformation-fixed", [&, dM] {
        return std::pair{(E(phi_w) * ten(eye(dM), E(sys.h * sys.H.lambda)) * E(m.rho)).eval(), q};
    }, "q computed from the deformed action equals q_M");
    list.eq("deformation-idempotent", [&] {
        return std::pair{deformed_action(sys, deformed), phi_w};
    }, "(phi^w)^w = phi^w");
    list.eq("deformation-coinv-agree", [&, dB] {
        Mat iM = split_idempotent(q).i;
        return std::pair{(E(phi_w) * ten(E(iM), eye(dB))).eval(),
                         (E(m.phi) * ten(E(iM), eye(dB))).eval()};
    }, "phi^w.(i_M x B) = phi.(i_M x B)");
    AxiomReport report = list.run("deformation", {{"M", dM}});
    report.append(check_strong_hopf_module(sys, deformed), "deformed:");
    return report;
}

AxiomReport check_morphism(const System& sys, const StrongHopfModule& m, const StrongHopfModule& n,
                           const Mat& f) {
    validate_shapes(sys, m);
    validate_shapes(sys, n);
    if (f.rows() != n.dim || f.cols() != m.dim)
        throw DimensionError("morphism must be " + std::to_string(n.dim) + "x" +
                             std::to_string(m.dim) + ", got " + f.shape_str());
    const long dB = sys.B.dim, dH = sys.H.dim;
    CheckList list;
    list.eq("colinear", [&, dH] {
        return std::pair{(ten(E(f), eye(dH)) * E(m.rho)).eval(), n.rho * f};
    }, "(f x H).rho_M = rho_N.f");
    list.eq("quasilinear", [&, dB] {
        return std::pair{(E(deformed_action(sys, n)) * ten(E(f), eye(dB))).eval(),
                         f * deformed_action(sys, m)};
    }, "phi_N^w.(f x B) = f.phi_M^w");
    return list.run("morphism", {{"M", m.dim}, {"N", n.dim}});
}

AxiomReport fundamental_theorem(const System& sys, const StrongHopfModule& m) {
    AxiomReport report;
    report.suite = "fundamental";
    report.dims = {{"H", sys.H.dim}, {"B", sys.B.dim}, {"M", m.dim}};
    ModuleCoinvariants mco = module_coinvariants(sys, m);
    TensorOverCoinv t = tensor_over_coinv(sys, mco, m);
    report.dims.emplace_back("M^co", mco.split.rank);
    report.dims.emplace_back("M^co(x)B", t.dim);

    const StrongHopfModule tensor_module{t.dim, t.phi_t, t.rho_t};
    report.append(check_strong_hopf_module(sys, tensor_module), "tensor:");

    OmegaPair w = omega_iso(sys, mco, t, m);
    CheckList list;
    list.pred("omega-invertible", [&] {
        auto inv = inverse(w.omega);
        return inv && *inv == w.omega_prime && rank(w.omega) == m.dim;
    }, "matrix-inverse oracle agrees with the explicit inverse");
    list.pred("dim-count", [&] { return t.dim == m.dim; },
              "dim(M^co (x)_{B^co} B) = dim M");
    report.append(list.run("fundamental", {}));
    report.append(check_morphism(sys, tensor_module, m, w.omega), "omega:");
    return report;
}

StrongHopfModule regular_module(const System& sys) {
    return StrongHopfModule{sys.B.dim, sys.B.mu, sys.B.rho};
}

} // namespace hopfq
