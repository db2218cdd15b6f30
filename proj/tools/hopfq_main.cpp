// hopfq command line front end. Talks to the library exclusively through the
// C API so it doubles as a smoke test for external consumers.

#include "hopfq/hopfq.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

struct SessionDeleter {
    void operator()(hopfq_session* s) const { hopfq_session_destroy(s); }
};
struct ReportDeleter {
    void operator()(hopfq_report* r) const { hopfq_report_destroy(r); }
};

int emit(hopfq_status status, hopfq_session* session, hopfq_report* raw, bool as_json) {
    std::unique_ptr<hopfq_report, ReportDeleter> report(raw);
    switch (status) {
    case HOPFQ_OK:
    case HOPFQ_CHECK_FAILED:
        std::fputs(as_json ? hopfq_report_json(report.get()) : hopfq_report_text(report.get()),
                   stdout);
        std::fputc('\n', stdout);
        return status == HOPFQ_OK ? 0 : 1;
    case HOPFQ_ERR_INPUT:
        std::fprintf(stderr, "input error: %s\n", hopfq_last_error(session));
        return 2;
    default:
        std::fprintf(stderr, "error: %s\n", hopfq_last_error(session));
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for weak Hopf quasigroups, comodule magmas, "
                 "Hopf modules and their categorical equivalences"};
    app.require_subcommand(1);

    std::string path, suite = "whq";
    bool as_json = false;
    long max_dim = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "structure file (JSON)")->required();
        cmd->add_flag("--json", as_json, "machine-readable report");
        cmd->add_option("--max-dim", max_dim, "reject objects above this dimension");
    };

    CLI::App* verify = app.add_subcommand("verify", "run one axiom suite");
    add_common(verify);
    verify->add_option("--suite", suite,
                       "whq | hopf-quasigroup | comodule-magma | anchor | module | lemma22 | identities");

    CLI::App* fundamental =
        app.add_subcommand("fundamental", "certify M = M^co (x)_{B^co} B via the canonical isomorphism");
    add_common(fundamental);

    CLI::App* equivalence =
        app.add_subcommand("equivalence", "certify the adjoint equivalence on the file's modules");
    add_common(equivalence);

    CLI11_PARSE(app, argc, argv);

    std::unique_ptr<hopfq_session, SessionDeleter> session(hopfq_session_create());
    if (hopfq_load_file(session.get(), path.c_str(), max_dim) != HOPFQ_OK) {
        std::fprintf(stderr, "input error: %s\n", hopfq_last_error(session.get()));
        return 2;
    }

    hopfq_report* report = nullptr;
    hopfq_status status;
    if (verify->parsed())
        status = hopfq_run_verify(session.get(), suite.c_str(), &report);
    else if (fundamental->parsed())
        status = hopfq_run_fundamental(session.get(), &report);
    else
        status = hopfq_run_equivalence(session.get(), &report);
    return emit(status, session.get(), report, as_json);
}
