#include "oracles.hpp"

#include <algorithm>
#include <array>

namespace hopfq::oracle {

Dense to_dense(const Mat& m) {
    Dense d(static_cast<size_t>(m.rows()), std::vector<Scalar>(static_cast<size_t>(m.cols()), 0));
    for (long r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) d[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    return d;
}

Mat from_dense(const Dense& d) { return Mat::from_scalars(d); }

Dense dense_mul(const Dense& a, const Dense& b) {
    const size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense out(n, std::vector<Scalar>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Dense dense_kron(const Dense& a, const Dense& b) {
    const size_t ar = a.size(), ac = ar ? a[0].size() : 0;
    const size_t br = b.size(), bc = br ? b[0].size() : 0;
    Dense out(ar * br, std::vector<Scalar>(ac * bc, 0));
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j)
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

long dense_rank(Dense a) {
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Scalar f = a[r][col] / a[row][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Mat random_mat(std::mt19937_64& rng, long rows, long cols, int density_percent) {
    std::uniform_int_distribution<int> num(-2, 2), den(1, 3), keep(0, 99);
    Mat m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) {
            if (keep(rng) >= density_percent) continue;
            Scalar v(num(rng), den(rng));
            v.canonicalize();
            m.set(r, c, v);
        }
    return m;
}

namespace {

// Backtracking over Latin squares with a fixed inverse involution. Every
// assignment t[x][y] = v closes under the two inverse-property rewrites
// x^{-1}(xy) = y and (xy)y^{-1} = x, which prunes the tree hard enough to
// exhaust order 7 quickly.
struct IpSearch {
    int n;
    std::vector<int> inv;
    std::vector<std::vector<int>> t;
    std::vector<unsigned> row_used, col_used;

    bool assign(int x0, int y0, int v0) {
        std::vector<std::array<int, 3>> queue{{x0, y0, v0}};
        while (!queue.empty()) {
            auto [x, y, v] = queue.back();
            queue.pop_back();
            int cur = t[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (cur == v) continue;
            if (cur != -1) return false;
            if ((row_used[static_cast<size_t>(x)] >> v & 1u) ||
                (col_used[static_cast<size_t>(y)] >> v & 1u))
                return false;
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
            row_used[static_cast<size_t>(x)] |= 1u << v;
            col_used[static_cast<size_t>(y)] |= 1u << v;
            queue.push_back({inv[static_cast<size_t>(x)], v, y});
            queue.push_back({v, inv[static_cast<size_t>(y)], x});
        }
        return true;
    }

    bool fill(std::optional<MulTable>& out) {
        int x = -1, y = -1;
        for (int i = 0; i < n * n; ++i)
            if (t[static_cast<size_t>(i / n)][static_cast<size_t>(i % n)] < 0) {
                x = i / n;
                y = i % n;
                break;
            }
        if (x < 0) {
            MulTable table{n, t, 0};
            std::string why;
            if (!is_ip_loop(table, &why)) return false;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                             [static_cast<size_t>(c)] !=
                            t[static_cast<size_t>(a)]
                             [static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)])]) {
                            out = table;
                            return true;
                        }
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if ((row_used[static_cast<size_t>(x)] >> v & 1u) ||
                (col_used[static_cast<size_t>(y)] >> v & 1u))
                continue;
            auto saved_t = t;
            auto saved_r = row_used;
            auto saved_c = col_used;
            if (assign(x, y, v) && fill(out)) return true;
            t = std::move(saved_t);
            row_used = std::move(saved_r);
            col_used = std::move(saved_c);
        }
        return false;
    }
};

bool search_with_involution(int n, std::vector<int>& inv, int next,
                            std::optional<MulTable>& out) {
    if (next == n) {
        IpSearch search;
        search.n = n;
        search.inv = inv;
        search.t.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        search.row_used.assign(static_cast<size_t>(n), 0);
        search.col_used.assign(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (!search.assign(0, i, i) || !search.assign(i, 0, i)) return false;
        return search.fill(out);
    }
    if (inv[static_cast<size_t>(next)] >= 0)
        return search_with_involution(n, inv, next + 1, out);
    for (int partner = next; partner < n; ++partner) {
        if (inv[static_cast<size_t>(partner)] >= 0) continue;
        inv[static_cast<size_t>(next)] = partner;
        inv[static_cast<size_t>(partner)] = next;
        if (search_with_involution(n, inv, next + 1, out)) return true;
        inv[static_cast<size_t>(next)] = -1;
        if (partner != next) inv[static_cast<size_t>(partner)] = -1;
    }
    return false;
}

} // namespace

std::optional<MulTable> smallest_nonassociative_ip_loop(int from, int to) {
    for (int n = from; n <= to; ++n) {
        std::vector<int> inv(static_cast<size_t>(n), -1);
        inv[0] = 0;
        std::optional<MulTable> out;
        if (search_with_involution(n, inv, 1, out)) return out;
    }
    return std::nullopt;
}

} // namespace hopfq::oracle
