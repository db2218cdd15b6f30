#include "hopfq/report.hpp"

#include "hopfq/parallel.hpp"

#include <chrono>
#include <sstream>

namespace hopfq {

bool AxiomReport::all_pass() const {
    for (const auto& line : lines)
        if (!line.pass) return false;
    return true;
}

const CheckLine* AxiomReport::find(std::string_view label) const {
    for (const auto& line : lines)
        if (line.label == label) return &line;
    return nullptr;
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
    for (const auto& line : other.lines) {
        lines.push_back(line);
        if (!prefix.empty()) lines.back().label = prefix + line.label;
    }
    wall_ms += other.wall_ms;
}

std::string AxiomReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite;
    for (const auto& [name, dim] : dims) os << "  dim(" << name << ")=" << dim;
    os << "\n";
    long failed = 0;
    for (const auto& line : lines) {
        os << (line.pass ? "  [pass] " : "  [FAIL] ") << line.label;
        if (!line.note.empty()) os << "  " << line.note;
        if (line.witness)
            os << "  witness: basis column " << line.witness->col << ", row " << line.witness->row;
        os << "\n";
        if (!line.pass) ++failed;
    }
    os << (failed == 0 ? "  all checks passed" : "  " + std::to_string(failed) + " check(s) FAILED")
       << " (" << lines.size() << " lines, " << wall_ms << " ms)\n";
    return os.str();
}

void CheckList::eq(std::string label, std::function<std::pair<Mat, Mat>()> make, std::string note) {
    items_.push_back({Item::Kind::Eq, std::move(label), std::move(note), std::move(make), {}});
}

void CheckList::differs(std::string label, std::function<std::pair<Mat, Mat>()> make,
                        std::string note) {
    items_.push_back({Item::Kind::Differs, std::move(label), std::move(note), std::move(make), {}});
}

void CheckList::pred(std::string label, std::function<bool()> f, std::string note) {
    items_.push_back({Item::Kind::Pred, std::move(label), std::move(note), {}, std::move(f)});
}

AxiomReport CheckList::run(std::string suite, std::vector<std::pair<std::string, long>> dims) const {
    const auto start = std::chrono::steady_clock::now();
    AxiomReport report;
    report.suite = std::move(suite);
    report.dims = std::move(dims);
    report.lines.resize(items_.size());
    parallel_for(static_cast<long>(items_.size()), [&](long idx) {
        const Item& item = items_[static_cast<size_t>(idx)];
        CheckLine line;
        line.label = item.label;
        line.note = item.note;
        switch (item.kind) {
        case Item::Kind::Pred:
            line.pass = item.pred();
            break;
        case Item::Kind::Eq:
        case Item::Kind::Differs: {
            auto [lhs, rhs] = item.make();
            FirstDiff diff = first_difference(lhs, rhs);
            if (item.kind == Item::Kind::Eq) {
                line.pass = !diff.differ;
                if (diff.differ) line.witness = Witness{diff.col, diff.row};
            } else {
                line.pass = diff.differ;
                if (diff.differ) line.witness = Witness{diff.col, diff.row};
            }
            break;
        }
        }
        report.lines[static_cast<size_t>(idx)] = std::move(line);
    });
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace hopfq
