// Regenerates the frozen structure files under data/. Every file is written
// with explicit matrices so the bundles are self-contained and stable.

#include "hopfq/constructions.hpp"
#include "hopfq/structfile.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace hopfq;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
    std::ofstream out(dir / name);
    out << text << "\n";
    std::cout << "wrote " << (dir / name).string() << "\n";
}

// H together with its regular comodule magma, the identity anchor and the
// regular module (H, mu, delta).
DocumentWriter self_system(const WeakHopfQuasigroup& h) {
    DocumentWriter w;
    w.add_whq("H", h);
    w.add_comodule_magma("B", regular_comodule(h), "H");
    w.add_anchor("h", Mat::identity(h.dim), "H", "B");
    w.add_module("M", StrongHopfModule{h.dim, h.mu, h.delta}, "H", "B", "h");
    w.set_role("whq", "H");
    w.set_role("comodule_magma", "B");
    w.set_role("anchor", "h");
    w.set_role("module", "M");
    return w;
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);

    write(dir, "kz2.struct", self_system(group_algebra(cyclic_group(2))).str());
    write(dir, "kz2sq.struct", self_system(group_algebra(elementary_abelian_2(2))).str());
    write(dir, "octonion.struct", self_system(loop_algebra(octonion_loop())).str());
    write(dir, "pair_groupoid.struct", self_system(groupoid_algebra(pair_groupoid(2))).str());

    {
        // Opposite comodule magma of the octonion loop algebra, anchored by
        // the antipode; the module is the regular one on B.
        WeakHopfQuasigroup h = loop_algebra(octonion_loop());
        ComoduleWithAnchor op = opposite_comodule_magma(h);
        DocumentWriter w;
        w.add_whq("H", h);
        w.add_comodule_magma("B", op.b, "H");
        w.add_anchor("h", op.anchor, "H", "B");
        w.add_module("M", StrongHopfModule{op.b.dim, op.b.mu, op.b.rho}, "H", "B", "h");
        w.set_role("whq", "H");
        w.set_role("comodule_magma", "B");
        w.set_role("anchor", "h");
        w.set_role("module", "M");
        write(dir, "octonion_opposite.struct", w.str());
    }

    {
        // Smash product of the rank-2 elementary abelian group algebra with
        // the unit quaternion loop algebra along the dot-product sign action.
        const int k = 2;
        UnitalMagma a = group_algebra(elementary_abelian_2(k)).magma();
        WeakHopfQuasigroup h = loop_algebra(cd_unit_loop(k));
        ComoduleWithAnchor smash = smash_product(a, h, sign_dot_action(k));
        DocumentWriter w;
        w.add_whq("H", h);
        w.add_magma("A", a);
        w.add_comodule_magma("B", smash.b, "H");
        w.add_anchor("h", smash.anchor, "H", "B");
        w.add_module("M", StrongHopfModule{smash.b.dim, smash.b.mu, smash.b.rho}, "H", "B", "h");
        w.set_role("whq", "H");
        w.set_role("comodule_magma", "B");
        w.set_role("anchor", "h");
        w.set_role("module", "M");
        write(dir, "quaternion_smash.struct", w.str());
    }

    {
        // Split projection pair of group algebras: Z2 embedded in Z2 x Z2.
        WeakHopfQuasigroup h = group_algebra(cyclic_group(2));
        WeakHopfQuasigroup b = group_algebra(elementary_abelian_2(2));
        // Basis of Z2^2 is indexed bitwise; the section sends a to (a,0),
        // i.e. basis index 2a, and the retraction reads the high bit.
        Mat f(4, 2), g(2, 4);
        f.set(0, 0, 1);
        f.set(2, 1, 1);
        for (int a = 0; a < 2; ++a)
            for (int bbit = 0; bbit < 2; ++bbit) g.set(a, 2 * a + bbit, 1);
        ComoduleWithAnchor proj = projection_comodule(h, b, g, f);
        DocumentWriter w;
        w.add_whq("H", h);
        w.add_whq("Bwhq", b);
        w.add_comodule_magma("B", proj.b, "H");
        w.add_anchor("h", proj.anchor, "H", "B");
        w.add_module("M", StrongHopfModule{proj.b.dim, proj.b.mu, proj.b.rho}, "H", "B", "h");
        w.set_role("whq", "H");
        w.set_role("comodule_magma", "B");
        w.set_role("anchor", "h");
        w.set_role("module", "M");
        write(dir, "projection.struct", w.str());
    }

    {
        // Tensor product of the pair-groupoid algebra with the octonion loop
        // algebra: associativity and counit multiplicativity both fail, the
        // genuinely weak nonassociative corner of the classification. Shipped
        // in builder form; frozen matrices would weigh ~16 MB at dimension 64.
        const char* doc = R"({
 "format": "hopfq.struct/v1",
 "objects": {
  "G": {"kind": "builder", "builder": "pair_groupoid", "objects": 2},
  "H1": {"kind": "builder", "builder": "groupoid_algebra", "of": "G"},
  "L": {"kind": "builder", "builder": "octonion_loop"},
  "H2": {"kind": "builder", "builder": "loop_algebra", "of": "L"},
  "H": {"kind": "builder", "builder": "whq_tensor", "left": "H1", "right": "H2"},
  "B": {"kind": "builder", "builder": "regular_comodule", "whq": "H"},
  "M": {"kind": "builder", "builder": "regular_module", "comodule_magma": "B", "anchor": "B.h"}
 },
 "roles": {"whq": "H", "comodule_magma": "B", "anchor": "B.h", "module": "M"}
})";
        write(dir, "weak_tensor.struct", parse_document(doc).raw);
    }

    return 0;
}
