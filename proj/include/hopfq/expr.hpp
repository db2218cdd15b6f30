#ifndef HOPFQ_EXPR_HPP
#define HOPFQ_EXPR_HPP

#include "hopfq/mat.hpp"

#include <memory>
#include <vector>

namespace hopfq {

// Morphism expressions: compositions of tensor-product stages. Evaluation
// walks each domain basis vector through the stage pipeline, so a stage like
// M (x) c_{H,B} (x) H is applied index-wise and its (often astronomically
// sized) matrix is never materialized.
//
//   E(m)        lifts a matrix
//   eye(d)      identity on a d-dimensional object
//   a * b       composition a.b
//   ten(a, b)   tensor product, padded via the interchange law when the
//               chains have different lengths
class Expr {
public:
    struct Factor {
        std::shared_ptr<const Mat> mat; // null means identity
        long id_dim = 0;
        long rows() const { return mat ? mat->rows() : id_dim; }
        long cols() const { return mat ? mat->cols() : id_dim; }
    };
    struct Stage {
        std::vector<Factor> factors;
        long rows() const;
        long cols() const;
    };

    explicit Expr(Mat m);
    explicit Expr(std::vector<Stage> stages);

    long rows() const;
    long cols() const;

    Mat eval() const;

    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr ten(const Expr& a, const Expr& b);

    static Expr identity(long dim);

private:
    std::vector<Stage> stages_; // composition, outermost (last applied) first
};

inline Expr E(Mat m) { return Expr(std::move(m)); }
inline Expr eye(long dim) { return Expr::identity(dim); }

Expr ten(const Expr& a, const Expr& b);
inline Expr ten(const Expr& a, const Expr& b, const Expr& c) { return ten(ten(a, b), c); }
inline Expr ten(const Expr& a, const Expr& b, const Expr& c, const Expr& d) {
    return ten(ten(ten(a, b), c), d);
}

} // namespace hopfq

#endif
