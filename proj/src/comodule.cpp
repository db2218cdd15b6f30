#include "hopfq/comodule.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/expr.hpp"

namespace hopfq {

void validate_shapes(const WeakHopfQuasigroup& h, const ComoduleMagma& b) {
    validate_shapes(h);
    if (b.eta.rows() != b.dim || b.eta.cols() != 1)
        throw DimensionError("eta_B must be " + std::to_string(b.dim) + "x1, got " + b.eta.shape_str());
    if (b.mu.rows() != b.dim || b.mu.cols() != b.dim * b.dim)
        throw DimensionError("mu_B must be " + std::to_string(b.dim) + "x" +
                             std::to_string(b.dim * b.dim) + ", got " + b.mu.shape_str());
    if (b.rho.rows() != b.dim * h.dim || b.rho.cols() != b.dim)
        throw DimensionError("rho_B must be " + std::to_string(b.dim * h.dim) + "x" +
                             std::to_string(b.dim) + ", got " + b.rho.shape_str());
}

void validate_anchor_shapes(const WeakHopfQuasigroup& h, const ComoduleMagma& b, const Mat& anchor) {
    validate_shapes(h, b);
    if (anchor.rows() != b.dim || anchor.cols() != h.dim)
        throw DimensionError("anchor must be " + std::to_string(b.dim) + "x" +
                             std::to_string(h.dim) + ", got " + anchor.shape_str());
}

AxiomReport check_comodule_magma(const WeakHopfQuasigroup& h, const ComoduleMagma& b) {
    validate_shapes(h, b);
    const long dB = b.dim, dH = h.dim;
    CheckList list;

    list.eq("unit-left", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.eta), eye(dB))).eval(), Mat::identity(dB)};
    }, "mu_B.(eta_B x B) = id");
    list.eq("unit-right", [&, dB] {
        return std::pair{(E(b.mu) * ten(eye(dB), E(b.eta))).eval(), Mat::identity(dB)};
    }, "mu_B.(B x eta_B) = id");
    list.eq("comodule-counit", [&, dB] {
        return std::pair{(ten(eye(dB), E(h.eps)) * E(b.rho)).eval(), Mat::identity(dB)};
    }, "(B x eps).rho = id");
    list.eq("comodule-coassoc", [&, dB] {
        return std::pair{(ten(E(b.rho), eye(dH)) * E(b.rho)).eval(),
                         (ten(eye(dB), E(h.delta)) * E(b.rho)).eval()};
    }, "(rho x H).rho = (B x delta).rho");
    list.eq("coaction-mult", [&, dB, dH] {
        return std::pair{(ten(E(b.mu), E(h.mu)) * ten(eye(dB), E(swap_map(dH, dB)), eye(dH)) *
                          ten(E(b.rho), E(b.rho)))
                             .eval(),
                         (E(b.rho) * E(b.mu)).eval()};
    }, "mu_BxH.(rho x rho) = rho.mu_B");

    // The six weak unit conditions; the model takes c^{-1} = c.
    const Mat rho_eta = b.rho * b.eta;         // dB*dH x 1
    const Mat delta_eta = h.delta * h.eta;     // dH^2 x 1
    const Mat piL = pi_left(h);
    const Mat piRb = pi_bar_right(h);
    Mat lhs12 = (ten(E(b.rho), eye(dH)) * E(rho_eta)).eval();
    Mat b1_rhs = (ten(eye(dB), E(h.mu) * E(swap_map(dH, dH)), eye(dH)) * ten(E(rho_eta), E(delta_eta))).eval();
    Mat b2_rhs = (ten(eye(dB), E(h.mu), eye(dH)) * ten(E(rho_eta), E(delta_eta))).eval();
    Mat b3_lhs = (ten(eye(dB), E(piRb)) * E(b.rho)).eval();
    Mat b3_rhs = (ten(E(b.mu), eye(dH)) * ten(eye(dB), E(rho_eta))).eval();
    Mat b4_lhs = (ten(eye(dB), E(piL)) * E(b.rho)).eval();
    Mat b4_rhs = (ten(E(b.mu) * E(swap_map(dB, dB)), eye(dH)) * ten(eye(dB), E(rho_eta))).eval();
    Mat b5_lhs = (ten(eye(dB), E(piRb)) * E(rho_eta)).eval();
    Mat b6_lhs = (ten(eye(dB), E(piL)) * E(rho_eta)).eval();

    const std::pair<Mat, Mat> conditions[] = {
        {lhs12, b1_rhs}, {lhs12, b2_rhs},    {b3_lhs, b3_rhs},
        {b4_lhs, b4_rhs}, {b5_lhs, rho_eta}, {b6_lhs, rho_eta}};
    const char* notes[] = {
        "(rho x H).rho.eta_B = (B x (mu.c) x H).(rho.eta_B x delta.eta)",
        "(rho x H).rho.eta_B = (B x mu x H).(rho.eta_B x delta.eta)",
        "(B x PiR-bar).rho = (mu_B x H).(B x rho.eta_B)",
        "(B x PiL).rho = ((mu_B.c) x H).(B x rho.eta_B)",
        "(B x PiR-bar).rho.eta_B = rho.eta_B",
        "(B x PiL).rho.eta_B = rho.eta_B"};
    int hold = 0;
    for (int i = 0; i < 6; ++i) {
        auto pair = conditions[i];
        if (pair.first == pair.second) ++hold;
        list.eq("(b" + std::to_string(i + 1) + ")", [pair] { return pair; }, notes[i]);
    }
    list.pred("(b)-consistency", [hold] { return hold == 0 || hold == 6; },
              "conditions (b1)-(b6) hold all together or not at all");

    return list.run("comodule-magma", {{"H", dH}, {"B", dB}});
}

AxiomReport check_total_integral(const WeakHopfQuasigroup& h_whq, const ComoduleMagma& b,
                                 const Mat& anchor) {
    validate_anchor_shapes(h_whq, b, anchor);
    CheckList list;
    list.eq("comodule-morphism", [&, dH = h_whq.dim] {
        return std::pair{(ten(E(anchor), eye(dH)) * E(h_whq.delta)).eval(), b.rho * anchor};
    }, "(h x H).delta = rho.h");
    list.eq("total", [&] { return std::pair{anchor * h_whq.eta, b.eta}; }, "h.eta_H = eta_B");
    return list.run("total-integral", {{"H", h_whq.dim}, {"B", b.dim}});
}

AxiomReport check_anchor(const WeakHopfQuasigroup& hq, const ComoduleMagma& b, const Mat& h) {
    validate_anchor_shapes(hq, b, h);
    const long dB = b.dim, dH = hq.dim;
    const Mat piL = pi_left(hq), piR = pi_right(hq), piRb = pi_bar_right(hq);
    const Mat h_lambda = h * hq.lambda;
    const Mat q = (E(b.mu) * ten(eye(dB), E(h_lambda)) * E(b.rho)).eval();

    CheckList list;
    list.eq("comodule-morphism", [&, dH] {
        return std::pair{(ten(E(h), eye(dH)) * E(hq.delta)).eval(), b.rho * h};
    }, "(h x H).delta = rho.h");
    list.eq("total", [&] { return std::pair{h * hq.eta, b.eta}; }, "h.eta_H = eta_B");
    list.eq("multiplicative", [&] {
        return std::pair{(E(b.mu) * ten(E(h), E(h))).eval(), h * hq.mu};
    }, "mu_B.(h x h) = h.mu_H");

    list.eq("(c1)", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(h)), E(h_lambda)) *
                          ten(eye(dB), E(hq.delta)))
                             .eval(),
                         (E(b.mu) * ten(eye(dB), E(h * piL))).eval()};
    }, "mu.((mu.(B x h)) x (h.lambda)).(B x delta) = mu.(B x (h.PiL))");
    list.eq("(c2)", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(h_lambda)), E(h)) *
                          ten(eye(dB), E(hq.delta)))
                             .eval(),
                         (E(b.mu) * ten(eye(dB), E(h * piR))).eval()};
    }, "mu.((mu.(B x (h.lambda))) x h).(B x delta) = mu.(B x (h.PiR))");

    // Derived identities, one line each.
    list.eq("(c1)-comodule-form", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu), E(h_lambda)) * ten(eye(dB), E(b.rho * h))).eval(),
                         (E(b.mu) * ten(eye(dB), E(h * piL))).eval()};
    }, "mu.(mu x (h.lambda)).(B x rho.h) = mu.(B x (h.PiL))");
    list.eq("integral-source-formula", [&, dH] {
        return std::pair{h * piR,
                         (ten(eye(dB), E(hq.eps * hq.mu)) * ten(E(swap_map(dH, dB)), eye(dH)) *
                          ten(eye(dH), E(b.rho * b.eta)))
                             .eval()};
    }, "h.PiR = (B x eps.mu).(c x H).(H x rho.eta_B)");
    list.eq("integral-retraction", [&, dB] {
        return std::pair{(E(b.mu) * ten(eye(dB), E(h * piR)) * E(b.rho)).eval(), Mat::identity(dB)};
    }, "mu.(B x (h.PiR)).rho = id");
    list.eq("coaction-bar-product", [&, dB] {
        return std::pair{(ten(eye(dB), E(piRb)) * E(b.rho) * E(b.mu)).eval(),
                         (ten(E(b.mu), E(piRb)) * ten(eye(dB), E(b.rho))).eval()};
    }, "(B x PiR-bar).rho.mu = (mu x PiR-bar).(B x rho)");
    list.eq("product-absorption", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu), E(h * piR)) * ten(eye(dB), E(b.rho))).eval(), b.mu};
    }, "mu.(mu x (h.PiR)).(B x rho) = mu");
    list.eq("integral-target-compat", [&] { return std::pair{h * piL, q * h}; },
            "h.PiL = q_B.h");
    list.eq("target-absorption", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(h * piL)), E(h)) *
                          ten(eye(dB), E(hq.delta)))
                             .eval(),
                         (E(b.mu) * ten(eye(dB), E(h))).eval()};
    }, "mu.((mu.(B x (h.PiL))) x h).(B x delta) = mu.(B x h)");
    list.eq("q-absorption", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(q)), E(h)) *
                          ten(eye(dB), E(b.rho * h)))
                             .eval(),
                         (E(b.mu) * ten(eye(dB), E(h))).eval()};
    }, "mu.((mu.(B x q)) x h).(B x rho.h) = mu.(B x h)");
    list.eq("q-section", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(q), E(h)) * E(b.rho)).eval(), Mat::identity(dB)};
    }, "mu.(q x h).rho = id");

    return list.run("anchor", {{"H", dH}, {"B", dB}});
}

Mat coinv_idempotent(const WeakHopfQuasigroup& hq, const ComoduleMagma& b, const Mat& h) {
    validate_anchor_shapes(hq, b, h);
    const long dB = b.dim;
    Mat q = (E(b.mu) * ten(eye(dB), E(h * hq.lambda)) * E(b.rho)).eval();
    Mat rho_q = b.rho * q;
    if ((ten(eye(dB), E(pi_left(hq))) * E(rho_q)).eval() != rho_q)
        throw CheckError("q_B failed its target-coaction identity; h is not a valid total integral");
    if ((ten(eye(dB), E(pi_bar_right(hq))) * E(rho_q)).eval() != rho_q)
        throw CheckError("q_B failed its source-coaction identity; h is not a valid total integral");
    if (q * q != q) throw CheckError("q_B is not idempotent; h is not a valid total integral");
    return q;
}

Coinvariants coinvariants(const WeakHopfQuasigroup& hq, const ComoduleMagma& b, const Mat& h) {
    const long dB = b.dim;
    Mat q = coinv_idempotent(hq, b, h);
    Coinvariants out;
    out.split = split_idempotent(q);
    const Mat& i = out.split.i;
    const Mat& p = out.split.p;

    for (const Mat& pi : {pi_left(hq), pi_bar_right(hq)}) {
        Mat k = kernel_basis(b.rho - (ten(eye(dB), E(pi)) * E(b.rho)).eval());
        if (!subspace_eq(i, k))
            throw CheckError("coinvariants of B disagree with the kernel oracle for the equalizer");
    }

    out.eta_co = p * b.eta;
    out.mu_co = (E(p) * E(b.mu) * ten(E(i), E(i))).eval();
    if (i * out.eta_co != b.eta)
        throw CheckError("unit of B does not factor through the coinvariants");
    if ((E(b.mu) * ten(E(i), E(i))).eval() != (E(i) * E(out.mu_co)).eval())
        throw CheckError("product of B does not restrict to the coinvariants");
    return out;
}

AxiomReport check_strong_eqs(const WeakHopfQuasigroup& hq, const ComoduleMagma& b, const Mat& h) {
    Coinvariants co = coinvariants(hq, b, h);
    const Mat& i = co.split.i;
    const long dB = b.dim;
    CheckList list;
    Mat s1_lhs = (E(b.mu) * ten(E(b.mu) * ten(eye(dB), E(i)), eye(dB))).eval();
    Mat s1_rhs = (E(b.mu) * ten(eye(dB), E(b.mu) * ten(E(i), eye(dB)))).eval();
    const bool strong1 = s1_lhs == s1_rhs;
    list.eq("(strong-1)", [s1_lhs, s1_rhs] { return std::pair{s1_lhs, s1_rhs}; },
            "mu.((mu.(B x i)) x B) = mu.(B x (mu.(i x B)))");
    list.eq("(strong-2)", [&, dB] {
        return std::pair{(E(b.mu) * ten(E(i), E(b.mu))).eval(),
                         (E(b.mu) * ten(E(b.mu) * ten(E(i), eye(dB)), eye(dB))).eval()};
    }, "mu.(i x mu) = mu.((mu.(i x B)) x B)");
    if (strong1)
        list.eq("coinv-assoc", [co, r = co.split.rank] {
            return std::pair{(E(co.mu_co) * ten(E(co.mu_co), eye(r))).eval(),
                             (E(co.mu_co) * ten(eye(r), E(co.mu_co))).eval()};
        }, "induced product on the coinvariants is associative");
    return list.run("strong-eqs", {{"H", hq.dim}, {"B", dB}, {"B^co", co.split.rank}});
}

AxiomReport comodule_identities(const WeakHopfQuasigroup& hq, const ComoduleMagma& b, const Mat& h) {
    validate_anchor_shapes(hq, b, h);
    const long dB = b.dim;
    const Mat q = (E(b.mu) * ten(eye(dB), E(h * hq.lambda)) * E(b.rho)).eval();
    const Mat rho_q = b.rho * q;
    CheckList list;
    list.eq("q-idempotent", [q] { return std::pair{q * q, q}; }, "q_B.q_B = q_B");
    list.eq("q-coaction-target", [&, rho_q, dB] {
        return std::pair{(ten(eye(dB), E(pi_left(hq))) * E(rho_q)).eval(), rho_q};
    }, "rho.q = (B x PiL).rho.q");
    list.eq("q-coaction-source-bar", [&, rho_q, dB] {
        return std::pair{(ten(eye(dB), E(pi_bar_right(hq))) * E(rho_q)).eval(), rho_q};
    }, "rho.q = (B x PiR-bar).rho.q");
    list.pred("coinv-kernel-oracle", [&, q, dB] {
        Mat i = split_idempotent(q).i;
        for (const Mat& pi : {pi_left(hq), pi_bar_right(hq)}) {
            Mat k = kernel_basis(b.rho - (ten(eye(dB), E(pi)) * E(b.rho)).eval());
            if (!subspace_eq(i, k)) return false;
        }
        return true;
    }, "image(q_B) = ker(rho - (B x Pi).rho) for both projections");
    list.eq("coinv-unit", [&, q] {
        SplitIdempotent s = split_idempotent(q);
        return std::pair{s.i * (s.p * b.eta), b.eta};
    }, "i_B.eta_co = eta_B");
    list.eq("coinv-product", [&, q] {
        SplitIdempotent s = split_idempotent(q);
        Mat mu_co = (E(s.p) * E(b.mu) * ten(E(s.i), E(s.i))).eval();
        return std::pair{(E(b.mu) * ten(E(s.i), E(s.i))).eval(), (E(s.i) * E(mu_co)).eval()};
    }, "mu_B.(i_B x i_B) = i_B.mu_co");
    return list.run("comodule-identities", {{"H", hq.dim}, {"B", dB}});
}

ComoduleMagma regular_comodule(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    return ComoduleMagma{h.dim, h.eta, h.mu, h.delta};
}

} // namespace hopfq
