#ifndef HOPFQ_STRUCTFILE_HPP
#define HOPFQ_STRUCTFILE_HPP

#include "hopfq/constructions.hpp"
#include "hopfq/hopfmod.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfq {

// A parsed structure file. `raw` is the canonical JSON form (rationals in
// lowest terms, object keys sorted); serialize() reproduces it verbatim, so
// parse . serialize is the identity on parsed documents.
struct Document {
    std::string raw;

    struct ComodEntry {
        ComoduleMagma b;
        std::string over; // whq name
    };
    struct AnchorEntry {
        Mat h;
        std::string whq;
        std::string target; // comodule magma name
    };
    struct ModuleEntry {
        StrongHopfModule m;
        std::string whq;
        std::string comodule_magma;
        std::string anchor;
    };

    std::map<std::string, WeakHopfQuasigroup> whqs;
    std::map<std::string, UnitalMagma> magmas;
    std::map<std::string, ComodEntry> comodule_magmas;
    std::map<std::string, AnchorEntry> anchors;
    std::map<std::string, ModuleEntry> modules;
    std::map<std::string, MulTable> group_tables;
    std::map<std::string, MulTable> loop_tables;
    std::map<std::string, GroupoidTable> groupoids;
    std::map<std::string, Cochain2> cochains;

    std::optional<std::string> role_whq, role_comodule_magma, role_anchor, role_module;
    std::vector<std::string> role_modules;

    bool operator==(const Document& other) const { return raw == other.raw; }

    // Role resolution with unique-object fallback; throws ParseError when the
    // request cannot be satisfied.
    const WeakHopfQuasigroup& whq() const;
    const ComodEntry& comodule_magma() const;
    const AnchorEntry& anchor() const;
    const ModuleEntry& module_entry() const;
    std::vector<const ModuleEntry*> module_list() const;
    bool has_comodule_magma() const;
    bool has_anchor() const;
    bool has_module() const;
};

// Parses and resolves a structure file. Builder entries are expanded; all
// references and dimensions are checked. max_dim > 0 rejects any object of
// larger dimension. Syntax problems throw ParseError (with line/column from
// the JSON parser), shape problems DimensionError.
Document parse_document(const std::string& text, long max_dim = 0);
Document load_document(const std::string& path, long max_dim = 0);
std::string serialize(const Document& doc);

// Writes structure files programmatically, with matrices frozen as explicit
// "p/q" arrays.
class DocumentWriter {
public:
    DocumentWriter();
    ~DocumentWriter();
    DocumentWriter(DocumentWriter&&) noexcept;
    DocumentWriter& operator=(DocumentWriter&&) noexcept;

    void add_whq(const std::string& name, const WeakHopfQuasigroup& h);
    void add_magma(const std::string& name, const UnitalMagma& a);
    void add_comodule_magma(const std::string& name, const ComoduleMagma& b, const std::string& over);
    void add_anchor(const std::string& name, const Mat& h, const std::string& whq,
                    const std::string& target);
    void add_module(const std::string& name, const StrongHopfModule& m, const std::string& whq,
                    const std::string& comodule_magma, const std::string& anchor);
    void set_role(const std::string& role, const std::string& name);
    void set_modules_role(const std::vector<std::string>& names);

    std::string str() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace hopfq

#endif
