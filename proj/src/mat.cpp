#include "hopfq/mat.hpp"

#include "hopfq/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hopfq {

namespace {
const Scalar kZero = 0;

void check_index(const Mat& m, long r, long c) {
    if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols())
        throw DimensionError("index (" + std::to_string(r) + "," + std::to_string(c) +
                             ") out of range for " + m.shape_str());
}
} // namespace

Mat::Mat(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    data_.resize(static_cast<size_t>(rows));
}

Mat Mat::identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.data_[static_cast<size_t>(i)].emplace(i, 1);
    return m;
}

Mat Mat::from_rows(std::vector<std::vector<long>> entries) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(entries.size());
    for (auto& row : entries) rows.emplace_back(row.begin(), row.end());
    return from_scalars(std::move(rows));
}

Mat Mat::from_scalars(std::vector<std::vector<Scalar>> entries) {
    const long r = static_cast<long>(entries.size());
    const long c = r == 0 ? 0 : static_cast<long>(entries.front().size());
    Mat m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(entries[static_cast<size_t>(i)].size()) != c)
            throw DimensionError("ragged matrix literal");
        for (long j = 0; j < c; ++j) {
            Scalar& v = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v != 0) m.data_[static_cast<size_t>(i)].emplace(j, std::move(v));
        }
    }
    return m;
}

bool Mat::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

long Mat::nnz() const {
    long n = 0;
    for (const auto& row : data_) n += static_cast<long>(row.size());
    return n;
}

const Scalar& Mat::at(long r, long c) const {
    check_index(*this, r, c);
    const auto& row = data_[static_cast<size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? kZero : it->second;
}

void Mat::set(long r, long c, Scalar v) {
    check_index(*this, r, c);
    auto& row = data_[static_cast<size_t>(r)];
    if (v == 0)
        row.erase(c);
    else
        row.insert_or_assign(c, std::move(v));
}

void Mat::add_at(long r, long c, const Scalar& v) {
    if (v == 0) return;
    check_index(*this, r, c);
    auto& row = data_[static_cast<size_t>(r)];
    auto [it, inserted] = row.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            t.data_[static_cast<size_t>(c)].emplace(r, v);
    return t;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out(rows_, cols_);
    if (s == 0) return out;
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            out.data_[static_cast<size_t>(r)].emplace(c, v * s);
    return out;
}

Mat Mat::column(long c) const {
    Mat out(rows_, 1);
    for (long r = 0; r < rows_; ++r) {
        auto it = data_[static_cast<size_t>(r)].find(c);
        if (it != data_[static_cast<size_t>(r)].end()) out.data_[static_cast<size_t>(r)].emplace(0, it->second);
    }
    return out;
}

std::string Mat::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::string Mat::to_text() const {
    std::ostringstream os;
    for (long r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (long c = 0; c < cols_; ++c) os << (c ? " " : "[") << scalar_str(at(r, c));
        os << "]" << (r + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

Mat operator*(const Mat& f, const Mat& g) {
    if (f.cols_ != g.rows_)
        throw DimensionError("composition mismatch: " + f.shape_str() + " . " + g.shape_str());
    Mat out(f.rows_, g.cols_);
    for (long r = 0; r < f.rows_; ++r) {
        auto& orow = out.data_[static_cast<size_t>(r)];
        for (const auto& [k, a] : f.data_[static_cast<size_t>(r)]) {
            for (const auto& [c, b] : g.data_[static_cast<size_t>(k)]) {
                auto [it, inserted] = orow.try_emplace(c, a * b);
                if (!inserted) it->second += a * b;
            }
        }
        std::erase_if(orow, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("sum mismatch: " + a.shape_str() + " vs " + b.shape_str());
    Mat out = a;
    for (long r = 0; r < b.rows_; ++r)
        for (const auto& [c, v] : b.data_[static_cast<size_t>(r)]) out.add_at(r, c, v);
    return out;
}

Mat operator-(const Mat& a, const Mat& b) { return a + b.scaled(-1); }

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat kron(const Mat& f, const Mat& g) {
    Mat out(f.rows() * g.rows(), f.cols() * g.cols());
    for (long r1 = 0; r1 < f.rows(); ++r1)
        for (const auto& [c1, a] : f.row(r1))
            for (long r2 = 0; r2 < g.rows(); ++r2)
                for (const auto& [c2, b] : g.row(r2))
                    out.set(r1 * g.rows() + r2, c1 * g.cols() + c2, a * b);
    return out;
}

Mat swap_map(long m, long n) {
    Mat out(m * n, m * n);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j) out.set(j * m + i, i * n + j, 1);
    return out;
}

RrefResult rref(const Mat& a) {
    // Row maps are mutated in place; pivoting takes the first nonzero entry
    // in scan order, which keeps results deterministic.
    std::vector<std::map<long, Scalar>> rows;
    rows.reserve(static_cast<size_t>(a.rows()));
    for (long r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));

    std::vector<long> pivots;
    long next_row = 0;
    for (long col = 0; col < a.cols() && next_row < a.rows(); ++col) {
        long pivot = -1;
        for (long r = next_row; r < a.rows(); ++r) {
            auto it = rows[static_cast<size_t>(r)].begin();
            if (it != rows[static_cast<size_t>(r)].end() && it->first == col) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(next_row)]);
        auto& prow = rows[static_cast<size_t>(next_row)];
        Scalar inv = 1 / prow.begin()->second;
        if (inv != 1)
            for (auto& [c, v] : prow) v *= inv;
        for (long r = 0; r < a.rows(); ++r) {
            if (r == next_row) continue;
            auto& row = rows[static_cast<size_t>(r)];
            auto it = row.find(col);
            if (it == row.end()) continue;
            Scalar factor = it->second;
            row.erase(it);
            for (auto pit = std::next(prow.begin()); pit != prow.end(); ++pit) {
                auto [rit, inserted] = row.try_emplace(pit->first, -factor * pit->second);
                if (!inserted) {
                    rit->second -= factor * pit->second;
                    if (rit->second == 0) row.erase(rit);
                }
            }
        }
        pivots.push_back(col);
        ++next_row;
    }

    RrefResult out;
    out.reduced = Mat(a.rows(), a.cols());
    for (long r = 0; r < a.rows(); ++r)
        for (auto& [c, v] : rows[static_cast<size_t>(r)]) out.reduced.set(r, c, std::move(v));
    out.pivot_cols = std::move(pivots);
    out.rank = static_cast<long>(out.pivot_cols.size());
    return out;
}

long rank(const Mat& a) { return rref(a).rank; }

Mat kernel_basis(const Mat& f) {
    RrefResult r = rref(f);
    std::vector<long> free_cols;
    {
        size_t p = 0;
        for (long c = 0; c < f.cols(); ++c) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Mat k(f.cols(), static_cast<long>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        k.set(free_cols[j], static_cast<long>(j), 1);
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
            const Scalar& v = r.reduced.at(static_cast<long>(i), free_cols[j]);
            if (v != 0) k.set(r.pivot_cols[i], static_cast<long>(j), -v);
        }
    }
    return k;
}

Mat cokernel(const Mat& f) { return kernel_basis(f.transpose()).transpose(); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve mismatch: " + a.shape_str() + " vs " + b.shape_str());
    // Eliminate on the augmented matrix [a | b].
    Mat aug(a.rows(), a.cols() + b.cols());
    for (long r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
        for (const auto& [c, v] : b.row(r)) aug.set(r, a.cols() + c, v);
    }
    RrefResult rr = rref(aug);
    Mat x(a.cols(), b.cols());
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        if (rr.pivot_cols[i] >= a.cols()) return std::nullopt; // pivot in the b block
        for (const auto& [c, v] : rr.reduced.row(static_cast<long>(i)))
            if (c >= a.cols()) x.set(rr.pivot_cols[i], c - a.cols(), v);
    }
    return x;
}

Mat factor_through_epi(const Mat& n, const Mat& g) {
    if (n.cols() != g.cols())
        throw DimensionError("factorization mismatch: " + n.shape_str() + " vs " + g.shape_str());
    auto xt = solve(n.transpose(), g.transpose());
    if (!xt) throw CheckError("factorization through epi is inconsistent (no g' with g'.n = g)");
    Mat gp = xt->transpose();
    if (gp * n != g) throw CheckError("factorization through epi failed the consistency re-check");
    return gp;
}

std::optional<Mat> inverse(const Mat& a) {
    if (!a.is_square()) return std::nullopt;
    auto x = solve(a, Mat::identity(a.rows()));
    if (!x) return std::nullopt;
    if (a * *x != Mat::identity(a.rows()) || *x * a != Mat::identity(a.rows())) return std::nullopt;
    return x;
}

bool subspace_eq(const Mat& u, const Mat& v) {
    if (u.rows() != v.rows()) return false;
    if (rank(u) != rank(v)) return false;
    return solve(u, v).has_value() && solve(v, u).has_value();
}

SplitIdempotent split_idempotent(const Mat& nabla) {
    if (!nabla.is_square())
        throw CheckError("split requires a square matrix, got " + nabla.shape_str());
    FirstDiff d = first_difference(nabla * nabla, nabla);
    if (d.differ)
        throw CheckError("split requires an idempotent; nabla^2 differs from nabla at (" +
                         std::to_string(d.row) + "," + std::to_string(d.col) + ")");
    RrefResult rr = rref(nabla);
    SplitIdempotent out;
    out.nabla = nabla;
    out.rank = rr.rank;
    out.i = Mat(nabla.rows(), rr.rank);
    for (size_t j = 0; j < rr.pivot_cols.size(); ++j)
        for (long r = 0; r < nabla.rows(); ++r) {
            const Scalar& v = nabla.at(r, rr.pivot_cols[j]);
            if (v != 0) out.i.set(r, static_cast<long>(j), v);
        }
    auto p = solve(out.i, nabla);
    if (!p || out.i * *p != nabla || *p * out.i != Mat::identity(rr.rank))
        throw CheckError("idempotent split postcondition failed"); // unreachable for true idempotents
    out.p = std::move(*p);
    return out;
}

FirstDiff first_difference(const Mat& a, const Mat& b) {
    FirstDiff best;
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("comparison mismatch: " + a.shape_str() + " vs " + b.shape_str());
    auto consider = [&best](long r, long c) {
        if (!best.differ || c < best.col || (c == best.col && r < best.row)) {
            best.differ = true;
            best.col = c;
            best.row = r;
        }
    };
    for (long r = 0; r < a.rows(); ++r) {
        const auto& ra = a.row(r);
        const auto& rb = b.row(r);
        auto ia = ra.begin();
        auto ib = rb.begin();
        while (ia != ra.end() || ib != rb.end()) {
            if (ib == rb.end() || (ia != ra.end() && ia->first < ib->first)) {
                consider(r, ia->first);
                ++ia;
            } else if (ia == ra.end() || ib->first < ia->first) {
                consider(r, ib->first);
                ++ib;
            } else {
                if (ia->second != ib->second) consider(r, ia->first);
                ++ia;
                ++ib;
            }
        }
    }
    return best;
}

} // namespace hopfq
