#include "hopfq/structfile.hpp"

#include "hopfq/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hopfq {

using nlohmann::json;

namespace {

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(scalar_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": matrix must be a 2-D array");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& jrow : j) {
        if (!jrow.is_array()) throw ParseError(where + ": matrix rows must be arrays");
        std::vector<Scalar> row;
        for (const auto& cell : jrow) {
            if (cell.is_string())
                row.push_back(parse_scalar(cell.get<std::string>()));
            else if (cell.is_number_integer())
                row.push_back(Scalar(cell.get<long>()));
            else
                throw ParseError(where + ": matrix entries must be \"p/q\" strings or integers");
        }
        rows.push_back(std::move(row));
    }
    try {
        return Mat::from_scalars(std::move(rows));
    } catch (const DimensionError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Mat shaped(const json& obj, const char* field, long rows, long cols, const std::string& where) {
    if (!obj.contains(field)) throw ParseError(where + ": missing field \"" + field + "\"");
    Mat m = mat_from_json(obj.at(field), where + "." + field);
    if (m.rows() != rows || m.cols() != cols)
        throw DimensionError(where + "." + field + " must be " + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", got " + m.shape_str());
    return m;
}

long dim_of(const json& obj, const std::string& where, long max_dim) {
    if (!obj.contains("dim") || !obj.at("dim").is_number_integer())
        throw ParseError(where + ": missing integer field \"dim\"");
    long d = obj.at("dim").get<long>();
    if (d < 0) throw DimensionError(where + ": negative dim");
    if (max_dim > 0 && d > max_dim)
        throw DimensionError(where + ": dimension " + std::to_string(d) +
                             " exceeds the --max-dim cap " + std::to_string(max_dim));
    return d;
}

MulTable table_from_json(const json& obj, const std::string& where) {
    MulTable t;
    if (!obj.contains("order") || !obj.contains("table"))
        throw ParseError(where + ": tables need \"order\" and \"table\"");
    t.order = obj.at("order").get<long>();
    t.identity = obj.value("identity", 0);
    for (const auto& jrow : obj.at("table")) {
        std::vector<int> row;
        for (const auto& cell : jrow) row.push_back(cell.get<int>());
        t.table.push_back(std::move(row));
    }
    return t;
}

GroupoidTable groupoid_from_json(const json& obj, const std::string& where) {
    GroupoidTable g;
    for (const char* f : {"objects", "arrows", "comp", "inverse", "object_identity"})
        if (!obj.contains(f)) throw ParseError(where + ": groupoid needs \"" + f + "\"");
    g.objects = obj.at("objects").get<int>();
    for (const auto& a : obj.at("arrows")) {
        if (!a.is_array() || a.size() != 2) throw ParseError(where + ": arrows are [source,target]");
        g.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    for (const auto& row : obj.at("comp")) {
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(cell.get<int>());
        g.comp.push_back(std::move(r));
    }
    g.inverse = obj.at("inverse").get<std::vector<int>>();
    g.object_identity = obj.at("object_identity").get<std::vector<int>>();
    return g;
}

struct Resolver {
    const json& objects;
    long max_dim;
    Document& doc;
    std::set<std::string> done;

    bool known(const std::string& name) const { return done.count(name) > 0; }

    const json& spec(const std::string& name, const std::string& where) const {
        auto it = objects.find(name);
        if (it == objects.end())
            throw ParseError(where + ": reference to undeclared object \"" + name + "\"");
        return *it;
    }

    // Returns false when a dependency has not been resolved yet.
    bool try_resolve(const std::string& name, const json& obj);
    void run();
};

bool Resolver::try_resolve(const std::string& name, const json& obj) {
    const std::string where = "objects." + name;
    if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string())
        throw ParseError(where + ": every object needs a string \"kind\"");
    const std::string kind = obj.at("kind").get<std::string>();

    auto need = [&](const char* field) -> std::string {
        if (!obj.contains(field) || !obj.at(field).is_string())
            throw ParseError(where + ": missing string field \"" + field + "\"");
        return obj.at(field).get<std::string>();
    };

    if (kind == "whq") {
        long d = dim_of(obj, where, max_dim);
        doc.whqs[name] = WeakHopfQuasigroup{d,
                                            shaped(obj, "eta", d, 1, where),
                                            shaped(obj, "mu", d, d * d, where),
                                            shaped(obj, "eps", 1, d, where),
                                            shaped(obj, "delta", d * d, d, where),
                                            shaped(obj, "lambda", d, d, where)};
    } else if (kind == "magma") {
        long d = dim_of(obj, where, max_dim);
        doc.magmas[name] =
            UnitalMagma{d, shaped(obj, "eta", d, 1, where), shaped(obj, "mu", d, d * d, where)};
    } else if (kind == "comodule_magma") {
        std::string over = need("whq");
        if (!known(over)) return false;
        auto hit = doc.whqs.find(over);
        if (hit == doc.whqs.end()) throw ParseError(where + ": \"" + over + "\" is not a whq");
        long d = dim_of(obj, where, max_dim);
        doc.comodule_magmas[name] = {ComoduleMagma{d, shaped(obj, "eta", d, 1, where),
                                                   shaped(obj, "mu", d, d * d, where),
                                                   shaped(obj, "rho", d * hit->second.dim, d, where)},
                                     over};
    } else if (kind == "anchor") {
        std::string over = need("whq"), target = need("target");
        if (!known(over) || !known(target)) return false;
        auto hit = doc.whqs.find(over);
        auto bit = doc.comodule_magmas.find(target);
        if (hit == doc.whqs.end()) throw ParseError(where + ": \"" + over + "\" is not a whq");
        if (bit == doc.comodule_magmas.end())
            throw ParseError(where + ": \"" + target + "\" is not a comodule magma");
        doc.anchors[name] = {shaped(obj, "mat", bit->second.b.dim, hit->second.dim, where), over,
                             target};
    } else if (kind == "module") {
        std::string over = need("whq"), bname = need("comodule_magma"), aname = need("anchor");
        if (!known(over) || !known(bname) || !known(aname)) return false;
        auto hit = doc.whqs.find(over);
        auto bit = doc.comodule_magmas.find(bname);
        auto ait = doc.anchors.find(aname);
        if (hit == doc.whqs.end() || bit == doc.comodule_magmas.end() || ait == doc.anchors.end())
            throw ParseError(where + ": module references have the wrong kinds");
        long d = dim_of(obj, where, max_dim);
        doc.modules[name] = {StrongHopfModule{d, shaped(obj, "phi", d, d * bit->second.b.dim, where),
                                              shaped(obj, "rho", d * hit->second.dim, d, where)},
                             over, bname, aname};
    } else if (kind == "group_table") {
        doc.group_tables[name] = table_from_json(obj, where);
    } else if (kind == "loop_table") {
        doc.loop_tables[name] = table_from_json(obj, where);
    } else if (kind == "groupoid") {
        doc.groupoids[name] = groupoid_from_json(obj, where);
    } else if (kind == "cochain") {
        std::string gname = need("group");
        if (!known(gname)) return false;
        auto git = doc.group_tables.find(gname);
        if (git == doc.group_tables.end())
            throw ParseError(where + ": \"" + gname + "\" is not a group table");
        Cochain2 c;
        c.group = git->second;
        if (!obj.contains("values")) throw ParseError(where + ": cochain needs \"values\"");
        Mat v = mat_from_json(obj.at("values"), where + ".values");
        if (v.rows() != c.group.order || v.cols() != c.group.order)
            throw DimensionError(where + ": cochain values must be order x order");
        c.values.assign(static_cast<size_t>(v.rows()),
                        std::vector<Scalar>(static_cast<size_t>(v.cols())));
        for (long a = 0; a < v.rows(); ++a)
            for (long b = 0; b < v.cols(); ++b)
                c.values[static_cast<size_t>(a)][static_cast<size_t>(b)] = v.at(a, b);
        doc.cochains[name] = std::move(c);
    } else if (kind == "smash") {
        std::string aname = need("magma"), hname = need("whq");
        if (!known(aname) || !known(hname)) return false;
        auto hit = doc.whqs.find(hname);
        if (hit == doc.whqs.end()) throw ParseError(where + ": \"" + hname + "\" is not a whq");
        // The left factor may be a plain magma or the magma part of a whq.
        UnitalMagma a;
        if (auto ait = doc.magmas.find(aname); ait != doc.magmas.end())
            a = ait->second;
        else if (auto wit = doc.whqs.find(aname); wit != doc.whqs.end())
            a = wit->second.magma();
        else
            throw ParseError(where + ": \"" + aname + "\" is not a magma");
        const WeakHopfQuasigroup& h = hit->second;
        Mat phi_a = shaped(obj, "phi_a", a.dim, h.dim * a.dim, where);
        ComoduleWithAnchor built = smash_product(a, h, phi_a);
        doc.comodule_magmas[name] = {built.b, hname};
        doc.anchors[name + ".h"] = {built.anchor, hname, name};
        done.insert(name + ".h");
    } else if (kind == "builder") {
        const std::string builder = need("builder");
        if (builder == "group_algebra" || builder == "loop_algebra") {
            std::string of = need("of");
            if (!known(of)) return false;
            const auto& pool = builder == "group_algebra" ? doc.group_tables : doc.loop_tables;
            auto it = pool.find(of);
            if (it == pool.end())
                throw ParseError(where + ": \"" + of + "\" is not a " +
                                 (builder == "group_algebra" ? "group" : "loop") + " table");
            doc.whqs[name] =
                builder == "group_algebra" ? group_algebra(it->second) : loop_algebra(it->second);
        } else if (builder == "groupoid_algebra") {
            std::string of = need("of");
            if (!known(of)) return false;
            auto it = doc.groupoids.find(of);
            if (it == doc.groupoids.end())
                throw ParseError(where + ": \"" + of + "\" is not a groupoid");
            doc.whqs[name] = groupoid_algebra(it->second);
        } else if (builder == "cochain_algebra") {
            std::string of = need("of");
            if (!known(of)) return false;
            auto it = doc.cochains.find(of);
            if (it == doc.cochains.end())
                throw ParseError(where + ": \"" + of + "\" is not a cochain");
            doc.magmas[name] = cochain_algebra(it->second);
        } else if (builder == "octonion_loop") {
            doc.loop_tables[name] = octonion_loop();
        } else if (builder == "cd_unit_loop") {
            doc.loop_tables[name] = cd_unit_loop(obj.value("k", 3));
        } else if (builder == "cyclic_group") {
            doc.group_tables[name] = cyclic_group(obj.value("n", 2));
        } else if (builder == "elementary_abelian_2") {
            doc.group_tables[name] = elementary_abelian_2(obj.value("k", 1));
        } else if (builder == "pair_groupoid") {
            doc.groupoids[name] = pair_groupoid(obj.value("objects", 2));
        } else if (builder == "regular_comodule") {
            std::string hname = need("whq");
            if (!known(hname)) return false;
            auto hit = doc.whqs.find(hname);
            if (hit == doc.whqs.end()) throw ParseError(where + ": \"" + hname + "\" is not a whq");
            doc.comodule_magmas[name] = {regular_comodule(hit->second), hname};
            doc.anchors[name + ".h"] = {Mat::identity(hit->second.dim), hname, name};
            done.insert(name + ".h");
        } else if (builder == "opposite") {
            std::string hname = need("whq");
            if (!known(hname)) return false;
            auto hit = doc.whqs.find(hname);
            if (hit == doc.whqs.end()) throw ParseError(where + ": \"" + hname + "\" is not a whq");
            ComoduleWithAnchor built = opposite_comodule_magma(hit->second);
            doc.comodule_magmas[name] = {built.b, hname};
            doc.anchors[name + ".h"] = {built.anchor, hname, name};
            done.insert(name + ".h");
        } else if (builder == "projection") {
            std::string hname = need("whq"), bname = need("base");
            if (!known(hname) || !known(bname)) return false;
            auto hit = doc.whqs.find(hname);
            auto bit = doc.whqs.find(bname);
            if (hit == doc.whqs.end() || bit == doc.whqs.end())
                throw ParseError(where + ": projection needs two whq references");
            Mat g = shaped(obj, "g", hit->second.dim, bit->second.dim, where);
            Mat f = shaped(obj, "f", bit->second.dim, hit->second.dim, where);
            ComoduleWithAnchor built = projection_comodule(hit->second, bit->second, g, f);
            doc.comodule_magmas[name] = {built.b, hname};
            doc.anchors[name + ".h"] = {built.anchor, hname, name};
            done.insert(name + ".h");
        } else if (builder == "whq_tensor") {
            std::string l = need("left"), r = need("right");
            if (!known(l) || !known(r)) return false;
            auto lit = doc.whqs.find(l), rit = doc.whqs.find(r);
            if (lit == doc.whqs.end() || rit == doc.whqs.end())
                throw ParseError(where + ": whq_tensor needs two whq references");
            doc.whqs[name] = whq_tensor(lit->second, rit->second);
        } else if (builder == "regular_module") {
            std::string bname = need("comodule_magma");
            if (!known(bname)) return false;
            auto bit = doc.comodule_magmas.find(bname);
            if (bit == doc.comodule_magmas.end())
                throw ParseError(where + ": \"" + bname + "\" is not a comodule magma");
            std::string aname = need("anchor");
            if (!known(aname)) return false;
            if (!doc.anchors.count(aname))
                throw ParseError(where + ": \"" + aname + "\" is not an anchor");
            doc.modules[name] = {StrongHopfModule{bit->second.b.dim, bit->second.b.mu,
                                                  bit->second.b.rho},
                                 bit->second.over, bname, aname};
        } else {
            throw ParseError(where + ": unknown builder \"" + builder + "\"");
        }
        // Builders expanding to whqs/tables respect the dimension cap too.
        if (max_dim > 0) {
            auto wit = doc.whqs.find(name);
            if (wit != doc.whqs.end() && wit->second.dim > max_dim)
                throw DimensionError(where + ": built dimension exceeds the --max-dim cap");
        }
    } else {
        throw ParseError(where + ": unknown kind \"" + kind + "\"");
    }
    done.insert(name);
    return true;
}

void Resolver::run() {
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = objects.begin(); it != objects.end(); ++it) {
            if (known(it.key())) continue;
            if (try_resolve(it.key(), it.value())) progress = true;
        }
    }
    for (auto it = objects.begin(); it != objects.end(); ++it)
        if (!known(it.key()))
            throw ParseError("objects." + it.key() +
                             ": unresolved (missing or circular references)");
}

json roles_to_json(const Document& doc) {
    json roles = json::object();
    if (doc.role_whq) roles["whq"] = *doc.role_whq;
    if (doc.role_comodule_magma) roles["comodule_magma"] = *doc.role_comodule_magma;
    if (doc.role_anchor) roles["anchor"] = *doc.role_anchor;
    if (doc.role_module) roles["module"] = *doc.role_module;
    if (!doc.role_modules.empty()) roles["modules"] = doc.role_modules;
    return roles;
}

} // namespace

Document parse_document(const std::string& text, long max_dim) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what()); // carries line/column information
    }
    if (!root.is_object() || !root.contains("objects") || !root.at("objects").is_object())
        throw ParseError("structure file must be a JSON object with an \"objects\" map");
    if (root.value("format", "hopfq.struct/v1") != "hopfq.struct/v1")
        throw ParseError("unsupported format tag (expected hopfq.struct/v1)");

    Document doc;
    Resolver resolver{root.at("objects"), max_dim, doc, {}};
    resolver.run();

    if (root.contains("roles")) {
        const json& roles = root.at("roles");
        auto take = [&](const char* key) -> std::optional<std::string> {
            if (!roles.contains(key)) return std::nullopt;
            return roles.at(key).get<std::string>();
        };
        doc.role_whq = take("whq");
        doc.role_comodule_magma = take("comodule_magma");
        doc.role_anchor = take("anchor");
        doc.role_module = take("module");
        if (roles.contains("modules")) doc.role_modules = roles.at("modules").get<std::vector<std::string>>();
        auto check_role = [&](const std::optional<std::string>& role, const auto& pool,
                              const char* what) {
            if (role && !pool.count(*role))
                throw ParseError(std::string("roles.") + what + ": \"" + *role +
                                 "\" does not name an object of that kind");
        };
        check_role(doc.role_whq, doc.whqs, "whq");
        check_role(doc.role_comodule_magma, doc.comodule_magmas, "comodule_magma");
        check_role(doc.role_anchor, doc.anchors, "anchor");
        check_role(doc.role_module, doc.modules, "module");
        for (const auto& m : doc.role_modules)
            if (!doc.modules.count(m))
                throw ParseError("roles.modules: \"" + m + "\" does not name a module");
    }

    // Canonical serialized form: original object specs with rationals
    // re-rendered in lowest terms.
    json canonical{{"format", "hopfq.struct/v1"}, {"objects", json::object()}};
    for (auto it = root.at("objects").begin(); it != root.at("objects").end(); ++it) {
        json obj = it.value();
        for (auto& [key, value] : obj.items()) {
            if (value.is_array() && !value.empty() && value.front().is_array() &&
                (key == "eta" || key == "mu" || key == "eps" || key == "delta" ||
                 key == "lambda" || key == "rho" || key == "phi" || key == "mat" ||
                 key == "phi_a" || key == "values" || key == "g" || key == "f"))
                value = mat_to_json(mat_from_json(value, "objects." + it.key() + "." + key));
        }
        canonical["objects"][it.key()] = std::move(obj);
    }
    if (root.contains("roles")) canonical["roles"] = roles_to_json(doc);
    doc.raw = canonical.dump(1);
    return doc;
}

Document load_document(const std::string& path, long max_dim) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), max_dim);
}

std::string serialize(const Document& doc) { return doc.raw; }

namespace {
template <typename MapT>
const typename MapT::mapped_type& pick_role(const MapT& pool,
                                            const std::optional<std::string>& role,
                                            const char* what) {
    if (role) return pool.at(*role);
    if (pool.size() == 1) return pool.begin()->second;
    throw ParseError(pool.empty()
                         ? std::string("file declares no ") + what
                         : std::string("file declares several ") + what +
                               "s; add a \"roles\" entry to pick one");
}
} // namespace

const WeakHopfQuasigroup& Document::whq() const { return pick_role(whqs, role_whq, "whq"); }
const Document::ComodEntry& Document::comodule_magma() const {
    return pick_role(comodule_magmas, role_comodule_magma, "comodule magma");
}
const Document::AnchorEntry& Document::anchor() const {
    return pick_role(anchors, role_anchor, "anchor");
}
const Document::ModuleEntry& Document::module_entry() const {
    return pick_role(modules, role_module, "module");
}

std::vector<const Document::ModuleEntry*> Document::module_list() const {
    std::vector<const ModuleEntry*> out;
    if (!role_modules.empty()) {
        for (const auto& name : role_modules) out.push_back(&modules.at(name));
        return out;
    }
    if (role_module) {
        out.push_back(&modules.at(*role_module));
        return out;
    }
    for (const auto& [name, entry] : modules) out.push_back(&entry);
    return out;
}

bool Document::has_comodule_magma() const {
    return role_comodule_magma.has_value() || comodule_magmas.size() == 1;
}
bool Document::has_anchor() const { return role_anchor.has_value() || anchors.size() == 1; }
bool Document::has_module() const { return role_module.has_value() || !modules.empty(); }

struct DocumentWriter::Impl {
    json objects = json::object();
    json roles = json::object();
};

DocumentWriter::DocumentWriter() : impl_(std::make_unique<Impl>()) {}
DocumentWriter::~DocumentWriter() = default;
DocumentWriter::DocumentWriter(DocumentWriter&&) noexcept = default;
DocumentWriter& DocumentWriter::operator=(DocumentWriter&&) noexcept = default;

void DocumentWriter::add_whq(const std::string& name, const WeakHopfQuasigroup& h) {
    impl_->objects[name] = json{{"kind", "whq"},
                                {"dim", h.dim},
                                {"eta", mat_to_json(h.eta)},
                                {"mu", mat_to_json(h.mu)},
                                {"eps", mat_to_json(h.eps)},
                                {"delta", mat_to_json(h.delta)},
                                {"lambda", mat_to_json(h.lambda)}};
}

void DocumentWriter::add_magma(const std::string& name, const UnitalMagma& a) {
    impl_->objects[name] = json{{"kind", "magma"},
                                {"dim", a.dim},
                                {"eta", mat_to_json(a.eta)},
                                {"mu", mat_to_json(a.mu)}};
}

void DocumentWriter::add_comodule_magma(const std::string& name, const ComoduleMagma& b,
                                        const std::string& over) {
    impl_->objects[name] = json{{"kind", "comodule_magma"}, {"whq", over},
                                {"dim", b.dim},             {"eta", mat_to_json(b.eta)},
                                {"mu", mat_to_json(b.mu)},  {"rho", mat_to_json(b.rho)}};
}

void DocumentWriter::add_anchor(const std::string& name, const Mat& h, const std::string& whq,
                                const std::string& target) {
    impl_->objects[name] =
        json{{"kind", "anchor"}, {"whq", whq}, {"target", target}, {"mat", mat_to_json(h)}};
}

void DocumentWriter::add_module(const std::string& name, const StrongHopfModule& m,
                                const std::string& whq, const std::string& comodule_magma,
                                const std::string& anchor) {
    impl_->objects[name] = json{{"kind", "module"},
                                {"whq", whq},
                                {"comodule_magma", comodule_magma},
                                {"anchor", anchor},
                                {"dim", m.dim},
                                {"phi", mat_to_json(m.phi)},
                                {"rho", mat_to_json(m.rho)}};
}

void DocumentWriter::set_role(const std::string& role, const std::string& name) {
    impl_->roles[role] = name;
}

void DocumentWriter::set_modules_role(const std::vector<std::string>& names) {
    impl_->roles["modules"] = names;
}

std::string DocumentWriter::str() const {
    json root{{"format", "hopfq.struct/v1"}, {"objects", impl_->objects}};
    if (!impl_->roles.empty()) root["roles"] = impl_->roles;
    return root.dump(1);
}

} // namespace hopfq
