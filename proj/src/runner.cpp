#include "hopfq/runner.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/functors.hpp"

#include <json.hpp>

namespace hopfq {

using nlohmann::json;

namespace {

json report_to_json(const AxiomReport& report) {
    json checks = json::array();
    for (const auto& line : report.lines) {
        json entry{{"label", line.label}, {"pass", line.pass}};
        entry["witness"] =
            line.witness ? json{{"col", line.witness->col}, {"row", line.witness->row}} : json();
        if (!line.note.empty()) entry["note"] = line.note;
        checks.push_back(std::move(entry));
    }
    json dims = json::object();
    for (const auto& [name, dim] : report.dims) dims[name] = dim;
    return json{{"schema", kReportSchema}, {"suite", report.suite},   {"dims", dims},
                {"passed", report.all_pass()}, {"checks", checks},    {"wall_ms", report.wall_ms}};
}

RunResult finish(const std::string& command, const AxiomReport& report, json extra = json::object()) {
    RunResult out;
    out.passed = report.all_pass();
    out.exit_code = out.passed ? 0 : 1;
    json j = report_to_json(report);
    j["command"] = command;
    for (auto& [key, value] : extra.items()) j[key] = value;
    out.json = j.dump(1);
    std::string text = report.to_text();
    for (auto& [key, value] : extra.items())
        text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    out.text = std::move(text);
    return out;
}

CheckLine error_line(const std::string& label, const std::string& message) {
    CheckLine line;
    line.label = label;
    line.pass = false;
    line.note = message;
    return line;
}

struct SystemRefs {
    const WeakHopfQuasigroup* H;
    const Document::ComodEntry* B;
    const Document::AnchorEntry* h;
};

// A (H, B, h) triple consistent with the document roles. For module-level
// suites the module's own references win.
SystemRefs triple_for(const Document& doc, const Document::ModuleEntry* m) {
    SystemRefs refs{};
    if (m) {
        refs.H = &doc.whqs.at(m->whq);
        refs.B = &doc.comodule_magmas.at(m->comodule_magma);
        refs.h = &doc.anchors.at(m->anchor);
        return refs;
    }
    refs.B = &doc.comodule_magma();
    refs.h = &doc.anchor();
    refs.H = &doc.whqs.at(refs.B->over);
    if (doc.anchor().whq != refs.B->over)
        throw ParseError("anchor and comodule magma live over different structures");
    return refs;
}

AxiomReport fundamental_pipeline(const Document& doc, const Document::ModuleEntry& entry) {
    const SystemRefs refs = triple_for(doc, &entry);
    AxiomReport report;
    report.suite = "fundamental";

    AxiomReport stage = check_whq(*refs.H);
    report.dims = stage.dims;
    report.append(stage, "whq:");
    if (!stage.all_pass()) return report;

    stage = check_comodule_magma(*refs.H, refs.B->b);
    report.append(stage, "comodule-magma:");
    if (!stage.all_pass()) return report;

    stage = check_anchor(*refs.H, refs.B->b, refs.h->h);
    report.append(stage, "anchor:");
    if (!stage.all_pass()) return report;

    stage = check_strong_eqs(*refs.H, refs.B->b, refs.h->h);
    report.append(stage, "strong:");
    if (!stage.all_pass()) return report;

    System sys = analyze_system(*refs.H, refs.B->b, refs.h->h);
    stage = check_strong_hopf_module(sys, entry.m);
    report.append(stage);
    if (!stage.all_pass()) return report;

    AxiomReport ft = fundamental_theorem(sys, entry.m);
    report.dims = ft.dims;
    report.append(ft);
    return report;
}

} // namespace

RunResult run_verify(const Document& doc, const std::string& suite) {
    AxiomReport report;
    try {
        if (suite == "whq") {
            report = check_whq(doc.whq());
        } else if (suite == "hopf-quasigroup") {
            report = check_hopf_quasigroup(doc.whq());
        } else if (suite == "lemma22") {
            report = lemma_projection_identities(doc.whq());
        } else if (suite == "comodule-magma") {
            const auto& entry = doc.comodule_magma();
            report = check_comodule_magma(doc.whqs.at(entry.over), entry.b);
        } else if (suite == "anchor") {
            const SystemRefs refs = triple_for(doc, nullptr);
            report = check_anchor(*refs.H, refs.B->b, refs.h->h);
        } else if (suite == "module") {
            const auto& entry = doc.module_entry();
            const SystemRefs refs = triple_for(doc, &entry);
            report.suite = "module";
            try {
                System sys = analyze_system(*refs.H, refs.B->b, refs.h->h);
                report = check_strong_hopf_module(sys, entry.m);
            } catch (const CheckError& e) {
                report.lines.push_back(error_line("system-analysis", e.what()));
            }
        } else if (suite == "identities") {
            report = structure_identities(doc.whq());
            report.suite = "identities";
            if (doc.has_comodule_magma() && doc.has_anchor()) {
                const SystemRefs refs = triple_for(doc, nullptr);
                report.append(comodule_identities(*refs.H, refs.B->b, refs.h->h), "B:");
                if (doc.has_module()) {
                    const auto& entry = doc.module_entry();
                    try {
                        System sys = analyze_system(*refs.H, refs.B->b, refs.h->h);
                        report.append(check_module_identities(sys, entry.m), "M:");
                        report.append(check_deformation(sys, entry.m), "M:");
                    } catch (const CheckError& e) {
                        report.lines.push_back(error_line("M:system-analysis", e.what()));
                    }
                }
            }
        } else {
            throw ParseError("unknown suite \"" + suite + "\"");
        }
    } catch (const CheckError& e) {
        report.lines.push_back(error_line("hard-error", e.what()));
    }
    return finish("verify", report);
}

RunResult run_fundamental(const Document& doc) {
    AxiomReport report;
    json extra = json::object();
    try {
        const auto& entry = doc.module_entry();
        report = fundamental_pipeline(doc, entry);
    } catch (const CheckError& e) {
        report.suite = "fundamental";
        report.lines.push_back(error_line("hard-error", e.what()));
    }
    for (const auto& [name, value] : report.dims)
        if (name == "M^co" || name == "M^co(x)B") extra["dim(" + name + ")"] = value;
    if (const CheckLine* inv = report.find("omega-invertible"))
        extra["omega_invertible"] = inv->pass;
    return finish("fundamental", report, extra);
}

RunResult run_equivalence(const Document& doc) {
    AxiomReport report;
    json extra = json::object();
    try {
        const SystemRefs refs = triple_for(doc, nullptr);
        report.suite = "equivalence";

        AxiomReport stage = check_whq(*refs.H);
        report.append(stage, "whq:");
        if (!stage.all_pass()) return finish("equivalence", report, extra);
        stage = check_comodule_magma(*refs.H, refs.B->b);
        report.append(stage, "comodule-magma:");
        if (!stage.all_pass()) return finish("equivalence", report, extra);
        stage = check_anchor(*refs.H, refs.B->b, refs.h->h);
        report.append(stage, "anchor:");
        if (!stage.all_pass()) return finish("equivalence", report, extra);

        System sys = analyze_system(*refs.H, refs.B->b, refs.h->h);
        std::vector<StrongHopfModule> modules;
        for (const auto* entry : doc.module_list()) {
            if (&doc.whqs.at(entry->whq) != refs.H || &doc.comodule_magmas.at(entry->comodule_magma) != refs.B)
                throw ParseError("module \"" + entry->whq + "\" is declared over a different system");
            AxiomReport msuite = check_strong_hopf_module(sys, entry->m);
            report.append(msuite, "module:");
            if (!msuite.all_pass()) return finish("equivalence", report, extra);
            modules.push_back(entry->m);
        }
        if (modules.empty()) modules.push_back(regular_module(sys));

        EquivalenceOutcome outcome = equivalence_report(sys, modules);
        report.append(outcome.report);
        report.dims = outcome.report.dims;
        extra["corollary_class"] = outcome.corollary;
        json od = json::object();
        for (const auto& [name, dim] : outcome.object_dims) od[name] = dim;
        extra["object_dims"] = od;
    } catch (const CheckError& e) {
        report.lines.push_back(error_line("hard-error", e.what()));
    }
    return finish("equivalence", report, extra);
}

} // namespace hopfq
