#include "hopfq/structures.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/expr.hpp"

namespace hopfq {

namespace {
void expect_shape(const Mat& m, long rows, long cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionError(std::string(name) + " must be " + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", got " + m.shape_str());
}
} // namespace

void validate_shapes(const UnitalMagma& a) {
    expect_shape(a.eta, a.dim, 1, "eta");
    expect_shape(a.mu, a.dim, a.dim * a.dim, "mu");
}

void validate_shapes(const Comonoid& d) {
    expect_shape(d.eps, 1, d.dim, "eps");
    expect_shape(d.delta, d.dim * d.dim, d.dim, "delta");
}

void validate_shapes(const WeakHopfQuasigroup& h) {
    validate_shapes(h.magma());
    validate_shapes(h.comonoid());
    expect_shape(h.lambda, h.dim, h.dim, "lambda");
}

Mat convolution(const Mat& f, const Mat& g, const Comonoid& d, const UnitalMagma& a) {
    if (f.cols() != d.dim || g.cols() != d.dim || f.rows() != a.dim || g.rows() != a.dim)
        throw DimensionError("convolution operands must be parallel morphisms " +
                             std::to_string(d.dim) + " -> " + std::to_string(a.dim) +
                             ", got " + f.shape_str() + " and " + g.shape_str());
    return (E(a.mu) * ten(E(f), E(g)) * E(d.delta)).eval();
}

Mat pi_left(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    Mat eps_mu = h.eps * h.mu;           // 1 x d^2
    Mat delta_eta = h.delta * h.eta;     // d^2 x 1
    return (ten(E(eps_mu), eye(d)) * ten(eye(d), E(swap_map(d, d))) * ten(E(delta_eta), eye(d)))
        .eval();
}

Mat pi_right(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    Mat eps_mu = h.eps * h.mu;
    Mat delta_eta = h.delta * h.eta;
    return (ten(eye(d), E(eps_mu)) * ten(E(swap_map(d, d)), eye(d)) * ten(eye(d), E(delta_eta)))
        .eval();
}

Mat pi_bar_left(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    return (ten(eye(d), E(h.eps * h.mu)) * ten(E(h.delta * h.eta), eye(d))).eval();
}

Mat pi_bar_right(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    return (ten(E(h.eps * h.mu), eye(d)) * ten(eye(d), E(h.delta * h.eta))).eval();
}

namespace {
void magma_comonoid_lines(CheckList& list, const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    list.eq("unit-left", [&h, d] {
        return std::pair{(E(h.mu) * ten(E(h.eta), eye(d))).eval(), Mat::identity(d)};
    }, "mu.(eta x H) = id");
    list.eq("unit-right", [&h, d] {
        return std::pair{(E(h.mu) * ten(eye(d), E(h.eta))).eval(), Mat::identity(d)};
    }, "mu.(H x eta) = id");
    list.eq("counit-left", [&h, d] {
        return std::pair{(ten(E(h.eps), eye(d)) * E(h.delta)).eval(), Mat::identity(d)};
    }, "(eps x H).delta = id");
    list.eq("counit-right", [&h, d] {
        return std::pair{(ten(eye(d), E(h.eps)) * E(h.delta)).eval(), Mat::identity(d)};
    }, "(H x eps).delta = id");
    list.eq("coassoc", [&h, d] {
        return std::pair{(ten(E(h.delta), eye(d)) * E(h.delta)).eval(),
                         (ten(eye(d), E(h.delta)) * E(h.delta)).eval()};
    }, "(delta x H).delta = (H x delta).delta");
}

// delta_{H (x) H} = (H x c x H).(delta x delta)
Expr delta_hh(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    return ten(eye(d), E(swap_map(d, d)), eye(d)) * ten(E(h.delta), E(h.delta));
}

// mu_{H (x) H} = (mu x mu).(H x c x H)
Expr mu_hh(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    return ten(E(h.mu), E(h.mu)) * ten(eye(d), E(swap_map(d, d)), eye(d));
}
} // namespace

AxiomReport check_whq(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    const long d = h.dim;
    CheckList list;
    magma_comonoid_lines(list, h);

    list.eq("(a1)", [&h] {
        return std::pair{(E(h.delta) * E(h.mu)).eval(), (ten(E(h.mu), E(h.mu)) * delta_hh(h)).eval()};
    }, "delta.mu = (mu x mu).delta_HxH");

    Mat eps_mu = h.eps * h.mu;
    list.eq("(a2-1)", [&h, eps_mu, d] {
        return std::pair{(E(eps_mu) * ten(E(h.mu), eye(d))).eval(),
                         (E(eps_mu) * ten(eye(d), E(h.mu))).eval()};
    }, "eps.mu.(mu x H) = eps.mu.(H x mu)");
    list.eq("(a2-2)", [&h, eps_mu, d] {
        return std::pair{(E(eps_mu) * ten(E(h.mu), eye(d))).eval(),
                         (ten(E(eps_mu), E(eps_mu)) * ten(eye(d), E(h.delta), eye(d))).eval()};
    }, "eps.mu.(mu x H) = (eps.mu x eps.mu).(H x delta x H)");
    list.eq("(a2-3)", [&h, eps_mu, d] {
        // c^{-1} = c in the symmetric model
        return std::pair{(E(eps_mu) * ten(E(h.mu), eye(d))).eval(),
                         (ten(E(eps_mu), E(eps_mu)) *
                          ten(eye(d), E(swap_map(d, d)) * E(h.delta), eye(d)))
                             .eval()};
    }, "eps.mu.(mu x H) = (eps.mu x eps.mu).(H x (c.delta) x H)");

    Mat delta_eta = h.delta * h.eta;
    list.eq("(a3-1)", [&h, delta_eta, d] {
        return std::pair{(ten(E(h.delta), eye(d)) * E(delta_eta)).eval(),
                         (ten(eye(d), E(h.mu), eye(d)) * ten(E(delta_eta), E(delta_eta))).eval()};
    }, "(delta x H).delta.eta = (H x mu x H).(delta.eta x delta.eta)");
    list.eq("(a3-2)", [&h, delta_eta, d] {
        return std::pair{(ten(E(h.delta), eye(d)) * E(delta_eta)).eval(),
                         (ten(eye(d), E(h.mu) * E(swap_map(d, d)), eye(d)) *
                          ten(E(delta_eta), E(delta_eta)))
                             .eval()};
    }, "(delta x H).delta.eta = (H x (mu.c) x H).(delta.eta x delta.eta)");

    Mat piL = pi_left(h);
    Mat piR = pi_right(h);
    list.eq("(a4-1)", [&h, piL] {
        return std::pair{piL, convolution(Mat::identity(h.dim), h.lambda, h.comonoid(), h.magma())};
    }, "target projection formula = id * lambda");
    list.eq("(a4-2)", [&h, piR] {
        return std::pair{piR, convolution(h.lambda, Mat::identity(h.dim), h.comonoid(), h.magma())};
    }, "source projection formula = lambda * id");
    list.eq("(a4-3L)", [&h, piL] {
        return std::pair{convolution(h.lambda, piL, h.comonoid(), h.magma()), h.lambda};
    }, "lambda * PiL = lambda");
    list.eq("(a4-3R)", [&h, piR] {
        return std::pair{convolution(piR, h.lambda, h.comonoid(), h.magma()), h.lambda};
    }, "PiR * lambda = lambda");
    list.eq("(a4-4)", [&h, piR, d] {
        return std::pair{(E(h.mu) * ten(E(h.lambda), E(h.mu)) * ten(E(h.delta), eye(d))).eval(),
                         (E(h.mu) * ten(E(piR), eye(d))).eval()};
    }, "mu.(lambda x mu).(delta x H) = mu.(PiR x H)");
    list.eq("(a4-5)", [&h, piL, d] {
        return std::pair{(E(h.mu) * ten(eye(d), E(h.mu)) * ten(eye(d), E(h.lambda), eye(d)) *
                          ten(E(h.delta), eye(d)))
                             .eval(),
                         (E(h.mu) * ten(E(piL), eye(d))).eval()};
    }, "mu.(H x mu).(H x lambda x H).(delta x H) = mu.(PiL x H)");
    list.eq("(a4-6)", [&h, piL, d] {
        return std::pair{(E(h.mu) * ten(E(h.mu), E(h.lambda)) * ten(eye(d), E(h.delta))).eval(),
                         (E(h.mu) * ten(eye(d), E(piL))).eval()};
    }, "mu.(mu x lambda).(H x delta) = mu.(H x PiL)");
    list.eq("(a4-7)", [&h, piR, d] {
        return std::pair{(E(h.mu) * ten(E(h.mu), eye(d)) * ten(eye(d), E(h.lambda), eye(d)) *
                          ten(eye(d), E(h.delta)))
                             .eval(),
                         (E(h.mu) * ten(eye(d), E(piR))).eval()};
    }, "mu.(mu x H).(H x lambda x H).(H x delta) = mu.(H x PiR)");

    list.eq("antipode-unit", [&h] { return std::pair{h.lambda * h.eta, h.eta}; },
            "lambda.eta = eta");
    list.eq("antipode-counit", [&h] { return std::pair{h.eps * h.lambda, h.eps}; },
            "eps.lambda = eps");

    return list.run("whq", {{"H", d}});
}

AxiomReport check_hopf_quasigroup(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    const long d = h.dim;
    CheckList list;
    magma_comonoid_lines(list, h);

    list.eq("counit-unit", [&h] { return std::pair{h.eps * h.eta, Mat::identity(1)}; },
            "eps.eta = 1");
    list.eq("eps-mult", [&h] { return std::pair{h.eps * h.mu, kron(h.eps, h.eps)}; },
            "eps.mu = eps x eps");
    list.eq("delta-unit", [&h] { return std::pair{h.delta * h.eta, kron(h.eta, h.eta)}; },
            "delta.eta = eta x eta");
    list.eq("delta-mult", [&h] {
        return std::pair{(E(h.delta) * E(h.mu)).eval(), (mu_hh(h) * ten(E(h.delta), E(h.delta))).eval()};
    }, "delta.mu = mu_HxH.(delta x delta)");

    list.eq("left-div-1", [&h, d] {
        return std::pair{(E(h.mu) * ten(E(h.lambda), E(h.mu)) * ten(E(h.delta), eye(d))).eval(),
                         kron(h.eps, Mat::identity(d))};
    }, "mu.(lambda x mu).(delta x H) = eps x H");
    list.eq("left-div-2", [&h, d] {
        return std::pair{(E(h.mu) * ten(eye(d), E(h.mu)) * ten(eye(d), E(h.lambda), eye(d)) *
                          ten(E(h.delta), eye(d)))
                             .eval(),
                         kron(h.eps, Mat::identity(d))};
    }, "mu.(H x mu).(H x lambda x H).(delta x H) = eps x H");
    list.eq("right-div-1", [&h, d] {
        return std::pair{(E(h.mu) * ten(E(h.mu), eye(d)) * ten(eye(d), E(h.lambda), eye(d)) *
                          ten(eye(d), E(h.delta)))
                             .eval(),
                         kron(Mat::identity(d), h.eps)};
    }, "mu.(mu x H).(H x lambda x H).(H x delta) = H x eps");
    list.eq("right-div-2", [&h, d] {
        return std::pair{(E(h.mu) * ten(E(h.mu), E(h.lambda)) * ten(eye(d), E(h.delta))).eval(),
                         kron(Mat::identity(d), h.eps)};
    }, "mu.(mu x lambda).(H x delta) = H x eps");

    return list.run("hopf-quasigroup", {{"H", d}});
}

AxiomReport lemma_projection_identities(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    const long d = h.dim;
    const std::pair<const char*, Mat> projections[] = {
        {"PiL", pi_left(h)},
        {"PiR", pi_right(h)},
        {"PiL-bar", pi_bar_left(h)},
        {"PiR-bar", pi_bar_right(h)},
    };
    CheckList list;
    for (const auto& [name, pi] : projections) {
        list.eq(std::string("mixed-assoc-1[") + name + "]", [&h, pi, d] {
            return std::pair{
                (E(h.mu) * ten(E(h.mu) * ten(E(pi), eye(d)), eye(d))).eval(),
                (E(h.mu) * ten(E(pi), E(h.mu))).eval()};
        }, "mu.((mu.(Pi x H)) x H) = mu.(Pi x mu)");
        list.eq(std::string("mixed-assoc-2[") + name + "]", [&h, pi, d] {
            return std::pair{
                (E(h.mu) * ten(eye(d), E(h.mu) * ten(E(pi), eye(d)))).eval(),
                (E(h.mu) * ten(E(h.mu) * ten(eye(d), E(pi)), eye(d))).eval()};
        }, "mu.(H x (mu.(Pi x H))) = mu.((mu.(H x Pi)) x H)");
        list.eq(std::string("mixed-assoc-3[") + name + "]", [&h, pi, d] {
            return std::pair{
                (E(h.mu) * ten(eye(d), E(h.mu) * ten(eye(d), E(pi)))).eval(),
                (E(h.mu) * ten(E(h.mu), E(pi))).eval()};
        }, "mu.(H x (mu.(H x Pi))) = mu.(mu x Pi)");
    }
    return list.run("lemma22", {{"H", d}});
}

AxiomReport structure_identities(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    const long d = h.dim;
    const Mat piL = pi_left(h), piR = pi_right(h);
    const Mat piLb = pi_bar_left(h), piRb = pi_bar_right(h);
    CheckList list;

    const std::pair<const char*, const Mat*> projections[] = {
        {"PiL", &piL}, {"PiR", &piR}, {"PiL-bar", &piLb}, {"PiR-bar", &piRb}};
    for (const auto& [name, pi] : projections)
        list.eq(std::string("idempotent[") + name + "]",
                [pi] { return std::pair{*pi * *pi, *pi}; }, "Pi.Pi = Pi");

    list.eq("target-convolution", [&h, piL] {
        return std::pair{piL, convolution(Mat::identity(h.dim), h.lambda, h.comonoid(), h.magma())};
    }, "PiL = id * lambda");
    list.eq("source-convolution", [&h, piR] {
        return std::pair{piR, convolution(h.lambda, Mat::identity(h.dim), h.comonoid(), h.magma())};
    }, "PiR = lambda * id");
    list.eq("antipode-unit", [&h] { return std::pair{h.lambda * h.eta, h.eta}; });
    list.eq("antipode-counit", [&h] { return std::pair{h.eps * h.lambda, h.eps}; });
    list.eq("antimultiplicative", [&h, d] {
        return std::pair{h.lambda * h.mu,
                         (E(h.mu) * ten(E(h.lambda), E(h.lambda)) * E(swap_map(d, d))).eval()};
    }, "lambda.mu = mu.(lambda x lambda).c");
    list.eq("anticomultiplicative", [&h, d] {
        return std::pair{h.delta * h.lambda,
                         (E(swap_map(d, d)) * ten(E(h.lambda), E(h.lambda)) * E(h.delta)).eval()};
    }, "delta.lambda = c.(lambda x lambda).delta");

    list.pred("target-equalizer", [&h, piL, d] {
        Mat i = split_idempotent(piL).i;
        Mat k = kernel_basis(h.delta - (ten(eye(d), E(piL)) * E(h.delta)).eval());
        return subspace_eq(i, k);
    }, "image(PiL) = ker(delta - (H x PiL).delta)");

    if (is_cocommutative(h))
        list.eq("cocommutative-collapse", [piL, piLb] { return std::pair{piL, piLb}; },
                "PiL = PiL-bar (cocommutative case)");

    return list.run("identities", {{"H", d}});
}

TargetSubmonoid target_submonoid(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    const long d = h.dim;
    TargetSubmonoid out;
    out.split = split_idempotent(pi_left(h));
    const Mat& i = out.split.i;
    const Mat& p = out.split.p;

    out.monoid.dim = out.split.rank;
    out.monoid.eta = p * h.eta;
    out.monoid.mu = (E(p) * E(h.mu) * ten(E(i), E(i))).eval();
    out.comonoid.dim = out.split.rank;
    out.comonoid.eps = h.eps * i;
    out.comonoid.delta = (ten(E(p), E(p)) * E(h.delta) * E(i)).eval();

    const long r = out.split.rank;
    Mat assoc_l = (E(out.monoid.mu) * ten(E(out.monoid.mu), eye(r))).eval();
    Mat assoc_r = (E(out.monoid.mu) * ten(eye(r), E(out.monoid.mu))).eval();
    if (assoc_l != assoc_r)
        throw CheckError("induced product on the target object is not associative");

    Mat k = kernel_basis(h.delta - (ten(eye(d), E(pi_left(h))) * E(h.delta)).eval());
    if (!subspace_eq(i, k))
        throw CheckError("target object disagrees with the kernel oracle for its equalizer");
    return out;
}

bool is_associative(const WeakHopfQuasigroup& h) {
    const long d = h.dim;
    return (E(h.mu) * ten(E(h.mu), eye(d))).eval() == (E(h.mu) * ten(eye(d), E(h.mu))).eval();
}

bool is_counit_coproduct_multiplicative(const WeakHopfQuasigroup& h) {
    if (h.eps * h.mu != kron(h.eps, h.eps)) return false;
    if (h.delta * h.eta != kron(h.eta, h.eta)) return false;
    if (h.eps * h.eta != Mat::identity(1)) return false;
    return (E(h.delta) * E(h.mu)).eval() ==
           (ten(E(h.mu), E(h.mu)) * ten(eye(h.dim), E(swap_map(h.dim, h.dim)), eye(h.dim)) *
            ten(E(h.delta), E(h.delta)))
               .eval();
}

bool is_cocommutative(const WeakHopfQuasigroup& h) {
    return swap_map(h.dim, h.dim) * h.delta == h.delta;
}

} // namespace hopfq
