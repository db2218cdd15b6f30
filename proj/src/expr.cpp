#include "hopfq/expr.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/parallel.hpp"

#include <utility>

namespace hopfq {

namespace {
using Entry = std::pair<long, Scalar>; // (flat index, value)

// Column-major view of a stage, built once per evaluation so factor columns
// are O(1) to fetch.
struct PreparedFactor {
    bool is_identity = false;
    long rows = 0;
    long cols = 0;
    std::vector<std::vector<Entry>> columns; // empty for identities
};

struct PreparedStage {
    std::vector<PreparedFactor> factors;
};

PreparedFactor prepare(const Expr::Factor& f) {
    PreparedFactor out;
    out.rows = f.rows();
    out.cols = f.cols();
    if (!f.mat) {
        out.is_identity = true;
        return out;
    }
    out.columns.resize(static_cast<size_t>(out.cols));
    for (long r = 0; r < f.mat->rows(); ++r)
        for (const auto& [c, v] : f.mat->row(r)) out.columns[static_cast<size_t>(c)].emplace_back(r, v);
    return out;
}

// Applies one tensor-product stage to a sparse vector. Each input index is
// decomposed factor by factor (left factor major), every factor contributes
// its column at that sub-index, and the Kronecker combination is accumulated.
std::vector<Entry> apply_stage(const PreparedStage& stage, const std::vector<Entry>& in) {
    std::map<long, Scalar> acc;
    std::vector<long> sub(stage.factors.size());
    std::vector<Entry> combo, next;
    for (const auto& [index, value] : in) {
        long rest = index;
        for (size_t f = stage.factors.size(); f-- > 0;) {
            const long c = stage.factors[f].cols;
            sub[f] = rest % c;
            rest /= c;
        }
        combo.assign(1, Entry{0, value});
        for (size_t f = 0; f < stage.factors.size() && !combo.empty(); ++f) {
            const PreparedFactor& factor = stage.factors[f];
            if (factor.is_identity) {
                for (auto& [idx, v] : combo) idx = idx * factor.rows + sub[f];
                continue;
            }
            next.clear();
            for (const auto& [r, x] : factor.columns[static_cast<size_t>(sub[f])])
                for (const auto& [idx, v] : combo) next.emplace_back(idx * factor.rows + r, v * x);
            combo.swap(next);
        }
        for (auto& [idx, v] : combo) {
            auto [it, inserted] = acc.try_emplace(idx, std::move(v));
            if (!inserted) {
                it->second += v;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    return {acc.begin(), acc.end()};
}
} // namespace

long Expr::Stage::rows() const {
    long r = 1;
    for (const auto& f : factors) r *= f.rows();
    return r;
}

long Expr::Stage::cols() const {
    long c = 1;
    for (const auto& f : factors) c *= f.cols();
    return c;
}

Expr::Expr(Mat m) {
    Stage s;
    s.factors.push_back(Factor{std::make_shared<Mat>(std::move(m)), 0});
    stages_.push_back(std::move(s));
}

Expr::Expr(std::vector<Stage> stages) : stages_(std::move(stages)) {
    if (stages_.empty()) throw DimensionError("empty morphism expression");
    for (size_t i = 0; i + 1 < stages_.size(); ++i)
        if (stages_[i].cols() != stages_[i + 1].rows())
            throw DimensionError("stage mismatch inside morphism expression: " +
                                 std::to_string(stages_[i].cols()) + " vs " +
                                 std::to_string(stages_[i + 1].rows()));
}

Expr Expr::identity(long dim) {
    Stage s;
    s.factors.push_back(Factor{nullptr, dim});
    return Expr(std::vector<Stage>{std::move(s)});
}

long Expr::rows() const { return stages_.front().rows(); }
long Expr::cols() const { return stages_.back().cols(); }

Mat Expr::eval() const {
    std::vector<PreparedStage> prepared(stages_.size());
    for (size_t s = 0; s < stages_.size(); ++s)
        for (const auto& f : stages_[s].factors) prepared[s].factors.push_back(prepare(f));

    const long domain = cols();
    std::vector<std::vector<Entry>> columns(static_cast<size_t>(domain));
    parallel_for(domain, [&](long j) {
        std::vector<Entry> v{{j, Scalar(1)}};
        for (size_t s = prepared.size(); s-- > 0 && !v.empty();) v = apply_stage(prepared[s], v);
        columns[static_cast<size_t>(j)] = std::move(v);
    });
    Mat out(rows(), domain);
    for (long j = 0; j < domain; ++j)
        for (auto& [idx, value] : columns[static_cast<size_t>(j)]) out.set(idx, j, std::move(value));
    return out;
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.cols() != b.rows())
        throw DimensionError("composition mismatch: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " . " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    std::vector<Expr::Stage> stages = a.stages_;
    stages.insert(stages.end(), b.stages_.begin(), b.stages_.end());
    return Expr(std::move(stages));
}

Expr ten(const Expr& a, const Expr& b) {
    // Pad the shorter chain with identity stages at the domain end; by the
    // interchange law (f1.f2) (x) g = (f1 (x) g) . (f2 (x) id).
    std::vector<Expr::Stage> sa = a.stages_;
    std::vector<Expr::Stage> sb = b.stages_;
    auto pad = [](std::vector<Expr::Stage>& chain, size_t target) {
        Expr::Stage id_stage;
        id_stage.factors.push_back(Expr::Factor{nullptr, chain.back().cols()});
        while (chain.size() < target) chain.push_back(id_stage);
    };
    pad(sa, sb.size());
    pad(sb, sa.size());
    std::vector<Expr::Stage> stages;
    stages.reserve(sa.size());
    for (size_t i = 0; i < sa.size(); ++i) {
        Expr::Stage s = sa[i];
        s.factors.insert(s.factors.end(), sb[i].factors.begin(), sb[i].factors.end());
        stages.push_back(std::move(s));
    }
    return Expr(std::move(stages));
}

} // namespace hopfq
