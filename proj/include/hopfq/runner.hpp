#ifndef HOPFQ_RUNNER_HPP
#define HOPFQ_RUNNER_HPP

#include "hopfq/structfile.hpp"

#include <string>

namespace hopfq {

// Exit-code contract: 0 all checks passed, 1 at least one check failed,
// 2 input error (parse or dimension problems).
struct RunResult {
    int exit_code = 0;
    bool passed = false;
    std::string text;
    std::string json; // schema hopfq.report/v1
};

inline constexpr const char* kReportSchema = "hopfq.report/v1";

// Suites: whq | hopf-quasigroup | comodule-magma | anchor | module |
// lemma22 | identities.
RunResult run_verify(const Document& doc, const std::string& suite);

// Full certification of the coinvariants isomorphism for the module the
// file designates.
RunResult run_fundamental(const Document& doc);

// Adjoint-equivalence certification over the file's module list.
RunResult run_equivalence(const Document& doc);

} // namespace hopfq

#endif
