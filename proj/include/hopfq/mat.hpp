#ifndef HOPFQ_MAT_HPP
#define HOPFQ_MAT_HPP

#include "hopfq/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfq {

// Exact rational matrix, the carrier for every morphism between based
// finite-dimensional spaces. Logically dense (rows x cols entries, row-major
// basis ordering), stored sparsely: explicit entries are always nonzero.
// 0 x n and n x 0 matrices are legal.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(long rows, long cols);

    static Mat identity(long n);
    static Mat zero(long rows, long cols) { return Mat(rows, cols); }
    // Small dense literals for tests and builders, row-major.
    static Mat from_rows(std::vector<std::vector<long>> entries);
    static Mat from_scalars(std::vector<std::vector<Scalar>> entries);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    long nnz() const;

    const Scalar& at(long r, long c) const;
    void set(long r, long c, Scalar v);
    void add_at(long r, long c, const Scalar& v);
    const std::map<long, Scalar>& row(long r) const { return data_[static_cast<size_t>(r)]; }

    Mat transpose() const;
    Mat scaled(const Scalar& s) const;
    Mat column(long c) const;

    friend Mat operator*(const Mat& f, const Mat& g); // composition f.g
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string shape_str() const;
    // Dense textual dump, for witnesses and debugging only.
    std::string to_text() const;

private:
    long rows_, cols_;
    std::vector<std::map<long, Scalar>> data_; // data_[r][c] = nonzero entry
};

// Kronecker product realizing the tensor product of morphisms; the left
// factor carries the major index: e_i (x) e_j of V (x) W sits at flat index
// i*dim(W)+j.
Mat kron(const Mat& f, const Mat& g);

// The symmetry c_{V,W}: V (x) W -> W (x) V with dim V = m, dim W = n;
// permutation matrix of size mn sending flat index i*n+j to j*m+i.
Mat swap_map(long m, long n);

struct RrefResult {
    Mat reduced;
    std::vector<long> pivot_cols;
    long rank = 0;
};

// Reduced row echelon form; pivots are chosen as the first nonzero entry in
// scan order so results are deterministic.
RrefResult rref(const Mat& a);

long rank(const Mat& a);

// Injective matrix k with f.k = 0 and cols(k) = cols(f) - rank(f); columns
// form the reduced-echelon free-variable basis of the null space.
Mat kernel_basis(const Mat& f);

// Surjective matrix n with n.f = 0 and rows(n) = rows(f) - rank(f). Any g
// with g.f = 0 factors uniquely through n (see factor_through_epi).
Mat cokernel(const Mat& f);

// Particular solution X of a.X = b, or nullopt when the system is
// inconsistent. Free variables are set to zero.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Unique g' with g'.n = g, where n is surjective. Throws CheckError when the
// system is inconsistent (g does not coequalize what n coequalizes).
Mat factor_through_epi(const Mat& n, const Mat& g);

// Two-sided inverse, or nullopt when a is not invertible.
std::optional<Mat> inverse(const Mat& a);

// Column spans are equal: equal rank plus two-way containment, decided by
// solving the containment systems exactly.
bool subspace_eq(const Mat& u, const Mat& v);

// A split of an idempotent: nabla = i.p with p.i = id_rank.
struct SplitIdempotent {
    Mat nabla;
    Mat i; // injection, cols = rank
    Mat p; // projection, rows = rank
    long rank = 0;
};

// Splits an idempotent through its image: i's columns are the pivot columns
// of nabla under reduced row echelon and p is the unique solution of
// i.p = nabla. Throws CheckError on non-square or non-idempotent input,
// reporting a witness entry of nabla^2 - nabla.
SplitIdempotent split_idempotent(const Mat& nabla);

struct FirstDiff {
    bool differ = false;
    long col = -1;
    long row = -1;
};

// First column (then row within it) where two matrices differ.
FirstDiff first_difference(const Mat& a, const Mat& b);

} // namespace hopfq

#endif
