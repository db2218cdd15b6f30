#ifndef HOPFQ_REPORT_HPP
#define HOPFQ_REPORT_HPP

#include "hopfq/mat.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfq {

// Failing basis-vector position: first column where two composites differ,
// plus the row inside that column.
struct Witness {
    long col = -1;
    long row = -1;
};

struct CheckLine {
    std::string label;
    bool pass = false;
    std::optional<Witness> witness; // present iff the line carries a position
    std::string note;
};

struct AxiomReport {
    std::string suite;
    std::vector<std::pair<std::string, long>> dims;
    std::vector<CheckLine> lines;
    double wall_ms = 0;

    bool all_pass() const;
    const CheckLine* find(std::string_view label) const;
    void append(const AxiomReport& other, const std::string& prefix = "");
    std::string to_text() const;
};

// Deferred check collection. Lines are evaluated by run(), possibly in
// parallel under HOPFQ_THREADS; report order always matches insertion order.
class CheckList {
public:
    // Passes iff the two composites are equal; witness is the first
    // differing column on failure.
    void eq(std::string label, std::function<std::pair<Mat, Mat>()> make, std::string note = "");
    // Passes iff the two composites differ somewhere; the witness records
    // where (a nonidentity certificate, e.g. a nonassociativity witness).
    void differs(std::string label, std::function<std::pair<Mat, Mat>()> make, std::string note = "");
    void pred(std::string label, std::function<bool()> f, std::string note = "");

    AxiomReport run(std::string suite, std::vector<std::pair<std::string, long>> dims) const;

private:
    struct Item {
        enum class Kind { Eq, Differs, Pred } kind;
        std::string label;
        std::string note;
        std::function<std::pair<Mat, Mat>()> make;
        std::function<bool()> pred;
    };
    std::vector<Item> items_;
};

} // namespace hopfq

#endif
