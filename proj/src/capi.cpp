#include "hopfq/hopfq.h"

#include "hopfq/errors.hpp"
#include "hopfq/runner.hpp"

#include <memory>
#include <string>

struct hopfq_session {
    std::unique_ptr<hopfq::Document> doc;
    std::string last_error;
};

struct hopfq_report {
    hopfq::RunResult result;
};

namespace {

hopfq_status classify(hopfq_session* session, const std::exception& e) {
    session->last_error = e.what();
    if (dynamic_cast<const hopfq::ParseError*>(&e) || dynamic_cast<const hopfq::DimensionError*>(&e))
        return HOPFQ_ERR_INPUT;
    return HOPFQ_ERR_INTERNAL;
}

template <typename Fn>
hopfq_status run_command(hopfq_session* session, hopfq_report** out, Fn&& fn) {
    if (!session || !out) return HOPFQ_ERR_USAGE;
    *out = nullptr;
    if (!session->doc) {
        session->last_error = "no structure file loaded";
        return HOPFQ_ERR_USAGE;
    }
    try {
        hopfq::RunResult result = fn(*session->doc);
        *out = new hopfq_report{std::move(result)};
        return (*out)->result.passed ? HOPFQ_OK : HOPFQ_CHECK_FAILED;
    } catch (const std::exception& e) {
        return classify(session, e);
    }
}

} // namespace

extern "C" {

const char* hopfq_version(void) { return "hopfq 1.0.0"; }

hopfq_session* hopfq_session_create(void) { return new hopfq_session; }

void hopfq_session_destroy(hopfq_session* session) { delete session; }

hopfq_status hopfq_load_file(hopfq_session* session, const char* path, long max_dim) {
    if (!session || !path) return HOPFQ_ERR_USAGE;
    try {
        session->doc = std::make_unique<hopfq::Document>(hopfq::load_document(path, max_dim));
        return HOPFQ_OK;
    } catch (const std::exception& e) {
        return classify(session, e);
    }
}

hopfq_status hopfq_load_string(hopfq_session* session, const char* text, long max_dim) {
    if (!session || !text) return HOPFQ_ERR_USAGE;
    try {
        session->doc = std::make_unique<hopfq::Document>(hopfq::parse_document(text, max_dim));
        return HOPFQ_OK;
    } catch (const std::exception& e) {
        return classify(session, e);
    }
}

const char* hopfq_last_error(const hopfq_session* session) {
    return session ? session->last_error.c_str() : "null session";
}

hopfq_status hopfq_run_verify(hopfq_session* session, const char* suite, hopfq_report** out) {
    if (!suite) return HOPFQ_ERR_USAGE;
    return run_command(session, out, [suite](const hopfq::Document& doc) {
        return hopfq::run_verify(doc, suite);
    });
}

hopfq_status hopfq_run_fundamental(hopfq_session* session, hopfq_report** out) {
    return run_command(session, out,
                       [](const hopfq::Document& doc) { return hopfq::run_fundamental(doc); });
}

hopfq_status hopfq_run_equivalence(hopfq_session* session, hopfq_report** out) {
    return run_command(session, out,
                       [](const hopfq::Document& doc) { return hopfq::run_equivalence(doc); });
}

int hopfq_report_passed(const hopfq_report* report) {
    return report && report->result.passed ? 1 : 0;
}

const char* hopfq_report_text(const hopfq_report* report) {
    return report ? report->result.text.c_str() : "";
}

const char* hopfq_report_json(const hopfq_report* report) {
    return report ? report->result.json.c_str() : "";
}

void hopfq_report_destroy(hopfq_report* report) { delete report; }

} // extern "C"
