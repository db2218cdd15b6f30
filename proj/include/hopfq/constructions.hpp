#ifndef HOPFQ_CONSTRUCTIONS_HPP
#define HOPFQ_CONSTRUCTIONS_HPP

#include "hopfq/comodule.hpp"
#include "hopfq/structures.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfq {

// Finite multiplication table; encodes groups and loops alike.
struct MulTable {
    long order = 0;
    std::vector<std::vector<int>> table; // table[x][y] = x*y
    int identity = 0;
};

// Diagnostics carry a first offending witness, e.g. the triple breaking
// associativity or the inverse property.
bool is_group(const MulTable& t, std::string* why = nullptr);
bool is_latin(const MulTable& t, std::string* why = nullptr);
// Latin square with two-sided identity and two-sided inverses satisfying
// x^{-1}(xy) = y = (yx)x^{-1}.
bool is_ip_loop(const MulTable& t, std::string* why = nullptr);
std::vector<int> two_sided_inverses(const MulTable& t); // throws CheckError when absent

MulTable trivial_group();
MulTable cyclic_group(int n);
MulTable direct_product(const MulTable& a, const MulTable& b);
MulTable elementary_abelian_2(int k); // Z_2^k

// Group algebra on a grouplike basis: mu(e_g (x) e_h) = e_{gh},
// delta(e_g) = e_g (x) e_g, eps = 1, lambda(e_g) = e_{g^{-1}}.
WeakHopfQuasigroup group_algebra(const MulTable& g);

// Loop algebra of an IP loop; same grouplike shape, antipode by loop
// inverses. Rejects non-IP tables with a witness.
WeakHopfQuasigroup loop_algebra(const MulTable& l);

// A 2-cochain on a finite (expected elementary abelian) group.
struct Cochain2 {
    MulTable group;
    std::vector<std::vector<Scalar>> values; // values[a][b] = F(a,b), nonzero
};

// Twisted group magma: e_a e_b = F(a,b) e_{a+b}. Checks the normalization
// F(0,a) = F(a,0) = 1.
UnitalMagma cochain_algebra(const Cochain2& c);

// Euclidean-norm multiplicativity on basis products: q(e_a e_b) = q(e_a)q(e_b),
// i.e. F(a,b)^2 = 1 everywhere.
bool norm_multiplicative_on_basis(const Cochain2& c);

// Cayley-Dickson doubling over the rationals; x and y have length 2^k.
std::vector<Scalar> cayley_dickson_product(const std::vector<Scalar>& x,
                                           const std::vector<Scalar>& y);

// Sign cochain of the dimension-2^k Cayley-Dickson algebra on Z_2^k
// (k = 2 quaternions, k = 3 octonions).
Cochain2 cayley_dickson_cochain(int k);

// The unit loop {+-e_a} of the Cayley-Dickson algebra: order 2^{k+1},
// element s*2^k + a is (-1)^s e_a.
MulTable cd_unit_loop(int k);
inline MulTable quaternion_loop() { return cd_unit_loop(2); }
inline MulTable octonion_loop() { return cd_unit_loop(3); }

// Finite groupoid presented by explicit arrows.
struct GroupoidTable {
    int objects = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target)
    std::vector<std::vector<int>> comp;      // comp[f][g] = f after g, or -1
    std::vector<int> inverse;
    std::vector<int> object_identity;
};

void validate_groupoid(const GroupoidTable& g); // throws CheckError with a reason

GroupoidTable pair_groupoid(int objects);
GroupoidTable group_bundle(int copies, const MulTable& g);

// Groupoid algebra: basis the arrows, product composition-or-zero, unit the
// sum of object identities, grouplike coproduct, antipode by arrow inverse.
WeakHopfQuasigroup groupoid_algebra(const GroupoidTable& g);

// A comodule magma together with its distinguished anchor morphism.
struct ComoduleWithAnchor {
    ComoduleMagma b;
    Mat anchor;
};

// Smash product B = A # H of a unital magma A and a Hopf quasigroup H along
// an action phi_a: H (x) A -> A. Validates the two unit conditions on phi_a.
ComoduleWithAnchor smash_product(const UnitalMagma& a, const WeakHopfQuasigroup& h, const Mat& phi_a);

// mu_A associative and the action distributes over mu_A; together these give
// the mixed associativity hypotheses for the smash product.
bool smash_strong_hypothesis(const UnitalMagma& a, const WeakHopfQuasigroup& h, const Mat& phi_a);

// Opposite comodule magma of a cocommutative H: product mu.c, coaction
// (H (x) lambda).delta, anchor lambda. Requires lambda^2 = id.
ComoduleWithAnchor opposite_comodule_magma(const WeakHopfQuasigroup& h);

// B as a comodule magma over H via rho = (B (x) g).delta_B for a split pair
// g.f = id_H of Hopf-quasigroup morphisms; the section f is the anchor.
ComoduleWithAnchor projection_comodule(const WeakHopfQuasigroup& h, const WeakHopfQuasigroup& b,
                                       const Mat& g, const Mat& f);

// Componentwise tensor product of two weak Hopf quasigroups in the symmetric
// model; the output is validated by the axiom suite in the tests, not here.
WeakHopfQuasigroup whq_tensor(const WeakHopfQuasigroup& h1, const WeakHopfQuasigroup& h2);

// The sign action of a Cayley-Dickson unit loop element +-e_a on the group
// algebra of Z_2^k: e_b -> (-1)^{a.b} e_b.
Mat sign_dot_action(int k);

} // namespace hopfq

#endif
