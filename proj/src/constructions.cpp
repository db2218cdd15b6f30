#include "hopfq/constructions.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/expr.hpp"

#include <bit>

namespace hopfq {

namespace {
bool valid_table(const MulTable& t, std::string* why) {
    if (t.order <= 0 || static_cast<long>(t.table.size()) != t.order) {
        if (why) *why = "table size does not match order";
        return false;
    }
    for (const auto& row : t.table) {
        if (static_cast<long>(row.size()) != t.order) {
            if (why) *why = "ragged table";
            return false;
        }
        for (int v : row)
            if (v < 0 || v >= t.order) {
                if (why) *why = "entry out of range";
                return false;
            }
    }
    if (t.identity < 0 || t.identity >= t.order) {
        if (why) *why = "identity index out of range";
        return false;
    }
    for (int x = 0; x < t.order; ++x)
        if (t.table[static_cast<size_t>(t.identity)][static_cast<size_t>(x)] != x ||
            t.table[static_cast<size_t>(x)][static_cast<size_t>(t.identity)] != x) {
            if (why) *why = "element " + std::to_string(x) + " breaks the identity law";
            return false;
        }
    return true;
}
} // namespace

bool is_latin(const MulTable& t, std::string* why) {
    if (!valid_table(t, why)) return false;
    for (int x = 0; x < t.order; ++x) {
        std::vector<bool> row_seen(static_cast<size_t>(t.order)), col_seen(static_cast<size_t>(t.order));
        for (int y = 0; y < t.order; ++y) {
            int r = t.table[static_cast<size_t>(x)][static_cast<size_t>(y)];
            int c = t.table[static_cast<size_t>(y)][static_cast<size_t>(x)];
            if (row_seen[static_cast<size_t>(r)] || col_seen[static_cast<size_t>(c)]) {
                if (why) *why = "row or column " + std::to_string(x) + " is not a permutation";
                return false;
            }
            row_seen[static_cast<size_t>(r)] = col_seen[static_cast<size_t>(c)] = true;
        }
    }
    return true;
}

std::vector<int> two_sided_inverses(const MulTable& t) {
    std::vector<int> inv(static_cast<size_t>(t.order), -1);
    for (int x = 0; x < t.order; ++x) {
        for (int y = 0; y < t.order; ++y)
            if (t.table[static_cast<size_t>(x)][static_cast<size_t>(y)] == t.identity &&
                t.table[static_cast<size_t>(y)][static_cast<size_t>(x)] == t.identity) {
                inv[static_cast<size_t>(x)] = y;
                break;
            }
        if (inv[static_cast<size_t>(x)] < 0)
            throw CheckError("element " + std::to_string(x) + " has no two-sided inverse");
    }
    return inv;
}

bool is_group(const MulTable& t, std::string* why) {
    if (!valid_table(t, why)) return false;
    for (int x = 0; x < t.order; ++x)
        for (int y = 0; y < t.order; ++y)
            for (int z = 0; z < t.order; ++z) {
                int xy = t.table[static_cast<size_t>(x)][static_cast<size_t>(y)];
                int yz = t.table[static_cast<size_t>(y)][static_cast<size_t>(z)];
                if (t.table[static_cast<size_t>(xy)][static_cast<size_t>(z)] !=
                    t.table[static_cast<size_t>(x)][static_cast<size_t>(yz)]) {
                    if (why)
                        *why = "associativity fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + "," + std::to_string(z) + ")";
                    return false;
                }
            }
    try {
        two_sided_inverses(t);
    } catch (const CheckError& e) {
        if (why) *why = e.what();
        return false;
    }
    return true;
}

bool is_ip_loop(const MulTable& t, std::string* why) {
    if (!is_latin(t, why)) return false;
    std::vector<int> inv;
    try {
        inv = two_sided_inverses(t);
    } catch (const CheckError& e) {
        if (why) *why = e.what();
        return false;
    }
    for (int x = 0; x < t.order; ++x)
        for (int y = 0; y < t.order; ++y) {
            int xi = inv[static_cast<size_t>(x)];
            int xy = t.table[static_cast<size_t>(x)][static_cast<size_t>(y)];
            int yx = t.table[static_cast<size_t>(y)][static_cast<size_t>(x)];
            if (t.table[static_cast<size_t>(xi)][static_cast<size_t>(xy)] != y) {
                if (why)
                    *why = "left inverse property fails at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")";
                return false;
            }
            if (t.table[static_cast<size_t>(yx)][static_cast<size_t>(xi)] != y) {
                if (why)
                    *why = "right inverse property fails at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")";
                return false;
            }
        }
    return true;
}

MulTable trivial_group() { return cyclic_group(1); }

MulTable cyclic_group(int n) {
    MulTable t;
    t.order = n;
    t.identity = 0;
    t.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.table[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
    return t;
}

MulTable direct_product(const MulTable& a, const MulTable& b) {
    MulTable t;
    t.order = a.order * b.order;
    t.identity = a.identity * static_cast<int>(b.order) + b.identity;
    t.table.assign(static_cast<size_t>(t.order), std::vector<int>(static_cast<size_t>(t.order)));
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int x2 = 0; x2 < b.order; ++x2)
            for (int y1 = 0; y1 < a.order; ++y1)
                for (int y2 = 0; y2 < b.order; ++y2) {
                    int x = x1 * static_cast<int>(b.order) + x2;
                    int y = y1 * static_cast<int>(b.order) + y2;
                    t.table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                        a.table[static_cast<size_t>(x1)][static_cast<size_t>(y1)] * static_cast<int>(b.order) +
                        b.table[static_cast<size_t>(x2)][static_cast<size_t>(y2)];
                }
    return t;
}

MulTable elementary_abelian_2(int k) {
    MulTable t = trivial_group();
    for (int i = 0; i < k; ++i) t = direct_product(t, cyclic_group(2));
    return t;
}

namespace {
// Grouplike carrier shared by group, loop and groupoid algebras.
WeakHopfQuasigroup grouplike_shell(long dim) {
    WeakHopfQuasigroup h;
    h.dim = dim;
    h.eta = Mat(dim, 1);
    h.mu = Mat(dim, dim * dim);
    h.eps = Mat(1, dim);
    h.delta = Mat(dim * dim, dim);
    h.lambda = Mat(dim, dim);
    for (long x = 0; x < dim; ++x) {
        h.eps.set(0, x, 1);
        h.delta.set(x * dim + x, x, 1);
    }
    return h;
}

WeakHopfQuasigroup table_algebra(const MulTable& t, const std::vector<int>& inv) {
    WeakHopfQuasigroup h = grouplike_shell(t.order);
    h.eta.set(t.identity, 0, 1);
    for (int x = 0; x < t.order; ++x) {
        h.lambda.set(inv[static_cast<size_t>(x)], x, 1);
        for (int y = 0; y < t.order; ++y)
            h.mu.set(t.table[static_cast<size_t>(x)][static_cast<size_t>(y)],
                     static_cast<long>(x) * t.order + y, 1);
    }
    return h;
}
} // namespace

WeakHopfQuasigroup group_algebra(const MulTable& g) {
    std::string why;
    if (!is_group(g, &why)) throw CheckError("not a group table: " + why);
    return table_algebra(g, two_sided_inverses(g));
}

WeakHopfQuasigroup loop_algebra(const MulTable& l) {
    std::string why;
    if (!is_ip_loop(l, &why)) throw CheckError("not an IP loop table: " + why);
    return table_algebra(l, two_sided_inverses(l));
}

UnitalMagma cochain_algebra(const Cochain2& c) {
    const long n = c.group.order;
    std::string why;
    if (!valid_table(c.group, &why)) throw CheckError("bad cochain group table: " + why);
    if (static_cast<long>(c.values.size()) != n)
        throw CheckError("cochain value table has wrong size");
    for (long a = 0; a < n; ++a) {
        if (static_cast<long>(c.values[static_cast<size_t>(a)].size()) != n)
            throw CheckError("cochain value table is ragged");
        for (long b = 0; b < n; ++b)
            if (c.values[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0)
                throw CheckError("cochain values must be nonzero");
    }
    const size_t e = static_cast<size_t>(c.group.identity);
    for (long a = 0; a < n; ++a)
        if (c.values[e][static_cast<size_t>(a)] != 1 || c.values[static_cast<size_t>(a)][e] != 1)
            throw CheckError("cochain is not normalized at the identity");

    UnitalMagma m;
    m.dim = n;
    m.eta = Mat(n, 1);
    m.eta.set(c.group.identity, 0, 1);
    m.mu = Mat(n, n * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            m.mu.set(c.group.table[static_cast<size_t>(a)][static_cast<size_t>(b)], a * n + b,
                     c.values[static_cast<size_t>(a)][static_cast<size_t>(b)]);
    return m;
}

bool norm_multiplicative_on_basis(const Cochain2& c) {
    for (const auto& row : c.values)
        for (const Scalar& v : row)
            if (v * v != 1) return false;
    return true;
}

std::vector<Scalar> cayley_dickson_product(const std::vector<Scalar>& x,
                                           const std::vector<Scalar>& y) {
    const size_t n = x.size();
    if (n != y.size() || n == 0 || (n & (n - 1)) != 0)
        throw DimensionError("cayley_dickson_product needs two vectors of equal power-of-two length");
    if (n == 1) return {x[0] * y[0]};
    const size_t half = n / 2;
    auto lo = [half](const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.begin(), v.begin() + static_cast<long>(half));
    };
    auto hi = [half](const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.begin() + static_cast<long>(half), v.end());
    };
    auto conj = [](std::vector<Scalar> v) {
        for (size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
        return v;
    };
    auto add = [](std::vector<Scalar> u, const std::vector<Scalar>& v, int sign) {
        for (size_t i = 0; i < u.size(); ++i) sign > 0 ? u[i] += v[i] : u[i] -= v[i];
        return u;
    };
    // (a,b)(c,d) = (ac - d*b, da + bc*) with * the conjugation.
    std::vector<Scalar> a = lo(x), b = hi(x), c = lo(y), d = hi(y);
    std::vector<Scalar> first = add(cayley_dickson_product(a, c),
                                    cayley_dickson_product(conj(d), b), -1);
    std::vector<Scalar> second = add(cayley_dickson_product(d, a),
                                     cayley_dickson_product(b, conj(c)), +1);
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

Cochain2 cayley_dickson_cochain(int k) {
    const long n = 1L << k;
    Cochain2 c;
    c.group = elementary_abelian_2(k);
    c.values.assign(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n)));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            std::vector<Scalar> ea(static_cast<size_t>(n)), eb(static_cast<size_t>(n));
            ea[static_cast<size_t>(a)] = 1;
            eb[static_cast<size_t>(b)] = 1;
            std::vector<Scalar> prod = cayley_dickson_product(ea, eb);
            for (long i = 0; i < n; ++i)
                if (prod[static_cast<size_t>(i)] != 0) {
                    if (i != (a ^ b))
                        throw CheckError("doubling product left the expected graded basis");
                    c.values[static_cast<size_t>(a)][static_cast<size_t>(b)] = prod[static_cast<size_t>(i)];
                }
        }
    return c;
}

namespace {
// elementary_abelian_2(k) built from direct products indexes Z_2^k tuples in
// the same bit order as plain integers, so xor is the group operation.
int xor_index(int a, int b) { return a ^ b; }
} // namespace

MulTable cd_unit_loop(int k) {
    const int n = 1 << k;
    Cochain2 c = cayley_dickson_cochain(k);
    MulTable t;
    t.order = 2L * n;
    t.identity = 0;
    t.table.assign(static_cast<size_t>(t.order), std::vector<int>(static_cast<size_t>(t.order)));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int a = 0; a < n; ++a)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int b = 0; b < n; ++b) {
                    int sign = s1 ^ s2 ^ (c.values[static_cast<size_t>(a)][static_cast<size_t>(b)] < 0 ? 1 : 0);
                    t.table[static_cast<size_t>(s1 * n + a)][static_cast<size_t>(s2 * n + b)] =
                        sign * n + xor_index(a, b);
                }
    return t;
}

void validate_groupoid(const GroupoidTable& g) {
    const size_t n = g.arrows.size();
    if (g.objects <= 0) throw CheckError("groupoid needs at least one object");
    if (g.comp.size() != n || g.inverse.size() != n ||
        g.object_identity.size() != static_cast<size_t>(g.objects))
        throw CheckError("groupoid table sizes disagree");
    for (const auto& [s, t] : g.arrows)
        if (s < 0 || s >= g.objects || t < 0 || t >= g.objects)
            throw CheckError("arrow endpoint out of range");
    for (int x = 0; x < g.objects; ++x) {
        int id = g.object_identity[static_cast<size_t>(x)];
        if (id < 0 || id >= static_cast<int>(n) || g.arrows[static_cast<size_t>(id)] != std::pair{x, x})
            throw CheckError("object " + std::to_string(x) + " has no identity arrow");
    }
    for (size_t f = 0; f < n; ++f) {
        if (g.comp[f].size() != n) throw CheckError("groupoid composition table is ragged");
        for (size_t gg = 0; gg < n; ++gg) {
            int fg = g.comp[f][gg];
            const bool composable = g.arrows[f].first == g.arrows[gg].second;
            if (composable != (fg >= 0))
                throw CheckError("composability does not match source/target data");
            if (fg >= 0 && (g.arrows[static_cast<size_t>(fg)].first != g.arrows[gg].first ||
                            g.arrows[static_cast<size_t>(fg)].second != g.arrows[f].second))
                throw CheckError("composite arrow has wrong endpoints");
        }
        int fi = g.inverse[f];
        if (fi < 0 || fi >= static_cast<int>(n)) throw CheckError("missing arrow inverse");
        if (g.comp[f][static_cast<size_t>(fi)] != g.object_identity[static_cast<size_t>(g.arrows[f].second)] ||
            g.comp[static_cast<size_t>(fi)][f] != g.object_identity[static_cast<size_t>(g.arrows[f].first)])
            throw CheckError("inverse laws fail for arrow " + std::to_string(f));
    }
    for (size_t f = 0; f < n; ++f)
        for (size_t gg = 0; gg < n; ++gg)
            for (size_t h = 0; h < n; ++h) {
                int gh = g.comp[gg][h];
                int fg = g.comp[f][gg];
                if (gh >= 0 && fg >= 0 &&
                    g.comp[f][static_cast<size_t>(gh)] != g.comp[static_cast<size_t>(fg)][h])
                    throw CheckError("groupoid composition is not associative");
            }
}

GroupoidTable pair_groupoid(int objects) {
    GroupoidTable g;
    g.objects = objects;
    auto idx = [objects](int tgt, int src) { return tgt * objects + src; };
    for (int t = 0; t < objects; ++t)
        for (int s = 0; s < objects; ++s) g.arrows.emplace_back(s, t);
    const size_t n = g.arrows.size();
    g.comp.assign(n, std::vector<int>(n, -1));
    g.inverse.resize(n);
    g.object_identity.resize(static_cast<size_t>(objects));
    for (int t = 0; t < objects; ++t)
        for (int s = 0; s < objects; ++s) {
            g.inverse[static_cast<size_t>(idx(t, s))] = idx(s, t);
            if (t == s) g.object_identity[static_cast<size_t>(t)] = idx(t, s);
            for (int u = 0; u < objects; ++u)
                g.comp[static_cast<size_t>(idx(t, s))][static_cast<size_t>(idx(s, u))] = idx(t, u);
        }
    validate_groupoid(g);
    return g;
}

GroupoidTable group_bundle(int copies, const MulTable& grp) {
    std::string why;
    if (!is_group(grp, &why)) throw CheckError("group_bundle needs a group table: " + why);
    std::vector<int> inv = two_sided_inverses(grp);
    GroupoidTable g;
    g.objects = copies;
    const int n = static_cast<int>(grp.order);
    auto idx = [n](int c, int x) { return c * n + x; };
    g.comp.assign(static_cast<size_t>(copies) * n, std::vector<int>(static_cast<size_t>(copies) * n, -1));
    g.inverse.resize(static_cast<size_t>(copies) * n);
    g.object_identity.resize(static_cast<size_t>(copies));
    for (int c = 0; c < copies; ++c) {
        g.object_identity[static_cast<size_t>(c)] = idx(c, grp.identity);
        for (int x = 0; x < n; ++x) {
            g.arrows.emplace_back(c, c);
            g.inverse[static_cast<size_t>(idx(c, x))] = idx(c, inv[static_cast<size_t>(x)]);
            for (int y = 0; y < n; ++y)
                g.comp[static_cast<size_t>(idx(c, x))][static_cast<size_t>(idx(c, y))] =
                    idx(c, grp.table[static_cast<size_t>(x)][static_cast<size_t>(y)]);
        }
    }
    validate_groupoid(g);
    return g;
}

WeakHopfQuasigroup groupoid_algebra(const GroupoidTable& g) {
    validate_groupoid(g);
    const long dim = static_cast<long>(g.arrows.size());
    WeakHopfQuasigroup h = grouplike_shell(dim);
    for (int x = 0; x < g.objects; ++x) h.eta.set(g.object_identity[static_cast<size_t>(x)], 0, 1);
    for (long f = 0; f < dim; ++f) {
        h.lambda.set(g.inverse[static_cast<size_t>(f)], f, 1);
        for (long k = 0; k < dim; ++k) {
            int fk = g.comp[static_cast<size_t>(f)][static_cast<size_t>(k)];
            if (fk >= 0) h.mu.set(fk, f * dim + k, 1);
        }
    }
    return h;
}

ComoduleWithAnchor smash_product(const UnitalMagma& a, const WeakHopfQuasigroup& h, const Mat& phi_a) {
    validate_shapes(a);
    validate_shapes(h);
    if (!is_counit_coproduct_multiplicative(h))
        throw CheckError("smash product requires a Hopf quasigroup (multiplicative eps and delta)");
    if (phi_a.rows() != a.dim || phi_a.cols() != h.dim * a.dim)
        throw DimensionError("phi_a must be " + std::to_string(a.dim) + "x" +
                             std::to_string(h.dim * a.dim) + ", got " + phi_a.shape_str());
    const long dA = a.dim, dH = h.dim;
    if ((E(phi_a) * ten(E(h.eta), eye(dA))).eval() != Mat::identity(dA))
        throw CheckError("phi_a.(eta_H x A) = id fails");
    if ((E(phi_a) * ten(eye(dH), E(a.eta))).eval() != kron(h.eps, a.eta))
        throw CheckError("phi_a.(H x eta_A) = eps_H x eta_A fails");

    // psi: H (x) A -> A (x) H
    Expr psi = ten(E(phi_a), eye(dH)) * ten(eye(dH), E(swap_map(dH, dA))) * ten(E(h.delta), eye(dA));
    ComoduleWithAnchor out;
    out.b.dim = dA * dH;
    out.b.eta = kron(a.eta, h.eta);
    out.b.mu = (ten(E(a.mu), E(h.mu)) * ten(eye(dA), psi, eye(dH))).eval();
    out.b.rho = kron(Mat::identity(dA), h.delta);
    out.anchor = kron(a.eta, Mat::identity(dH));
    return out;
}

bool smash_strong_hypothesis(const UnitalMagma& a, const WeakHopfQuasigroup& h, const Mat& phi_a) {
    const long dA = a.dim, dH = h.dim;
    if ((E(a.mu) * ten(E(a.mu), eye(dA))).eval() != (E(a.mu) * ten(eye(dA), E(a.mu))).eval())
        return false;
    Mat lhs = (E(a.mu) * ten(E(phi_a), E(phi_a)) * ten(eye(dH), E(swap_map(dH, dA)), eye(dA)) *
               ten(E(h.delta), eye(dA), eye(dA)))
                  .eval();
    Mat rhs = (E(phi_a) * ten(eye(dH), E(a.mu))).eval();
    return lhs == rhs;
}

ComoduleWithAnchor opposite_comodule_magma(const WeakHopfQuasigroup& h) {
    validate_shapes(h);
    if (!is_cocommutative(h))
        throw CheckError("opposite comodule magma requires a cocommutative structure");
    if (h.lambda * h.lambda != Mat::identity(h.dim))
        throw CheckError("opposite comodule magma requires an involutive antipode");
    ComoduleWithAnchor out;
    out.b.dim = h.dim;
    out.b.eta = h.eta;
    out.b.mu = h.mu * swap_map(h.dim, h.dim);
    out.b.rho = (ten(eye(h.dim), E(h.lambda)) * E(h.delta)).eval();
    out.anchor = h.lambda;
    return out;
}

ComoduleWithAnchor projection_comodule(const WeakHopfQuasigroup& hq, const WeakHopfQuasigroup& b,
                                       const Mat& g, const Mat& f) {
    validate_shapes(hq);
    validate_shapes(b);
    const long dB = b.dim, dH = hq.dim;
    if (g.rows() != dH || g.cols() != dB || f.rows() != dB || f.cols() != dH)
        throw DimensionError("projection pair must be g: B -> H and f: H -> B");
    if (g * f != Mat::identity(dH)) throw CheckError("g.f = id_H fails");
    auto magma_comonoid_morphism = [&](const Mat& m, const WeakHopfQuasigroup& src,
                                       const WeakHopfQuasigroup& dst) {
        return m * src.eta == dst.eta && (E(dst.mu) * ten(E(m), E(m))).eval() == m * src.mu &&
               dst.eps * m == src.eps && (ten(E(m), E(m)) * E(src.delta)).eval() == dst.delta * m;
    };
    if (!magma_comonoid_morphism(f, hq, b))
        throw CheckError("f is not a morphism of Hopf quasigroups");
    if (!magma_comonoid_morphism(g, b, hq))
        throw CheckError("g is not a morphism of Hopf quasigroups");
    if (b.lambda * f != f * hq.lambda)
        throw CheckError("antipode compatibility lambda_B.f = f.lambda_H fails");

    ComoduleWithAnchor out;
    out.b.dim = dB;
    out.b.eta = b.eta;
    out.b.mu = b.mu;
    out.b.rho = (ten(eye(dB), E(g)) * E(b.delta)).eval();
    out.anchor = f;
    return out;
}

WeakHopfQuasigroup whq_tensor(const WeakHopfQuasigroup& h1, const WeakHopfQuasigroup& h2) {
    validate_shapes(h1);
    validate_shapes(h2);
    const long d1 = h1.dim, d2 = h2.dim;
    WeakHopfQuasigroup h;
    h.dim = d1 * d2;
    h.eta = kron(h1.eta, h2.eta);
    h.eps = kron(h1.eps, h2.eps);
    h.mu = (ten(E(h1.mu), E(h2.mu)) * ten(eye(d1), E(swap_map(d2, d1)), eye(d2))).eval();
    h.delta = (ten(eye(d1), E(swap_map(d1, d2)), eye(d2)) * ten(E(h1.delta), E(h2.delta))).eval();
    h.lambda = kron(h1.lambda, h2.lambda);
    return h;
}

Mat sign_dot_action(int k) {
    const long n = 1L << k;
    const long loop = 2 * n;
    Mat phi(n, loop * n);
    for (long s = 0; s < 2; ++s)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                int dot = std::popcount(static_cast<unsigned long>(a & b)) & 1;
                phi.set(b, (s * n + a) * n + b, dot ? -1 : 1);
            }
    return phi;
}

} // namespace hopfq
