#include "hopfq/expr.hpp"

#include "hopfq/errors.hpp"
#include "hopfq/parallel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hopfq;

TEST_CASE("pipelines agree with direct matrix algebra") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        Mat a = oracle::random_mat(rng, 3, 4);
        Mat b = oracle::random_mat(rng, 4, 2);
        Mat c = oracle::random_mat(rng, 2, 3);
        CHECK((E(a) * E(b) * E(c)).eval() == a * b * c);
        CHECK(ten(E(a), E(b)).eval() == kron(a, b));
        CHECK(ten(E(a), eye(3)).eval() == kron(a, Mat::identity(3)));
        CHECK(ten(eye(2), E(c), eye(2)).eval() == kron(kron(Mat::identity(2), c), Mat::identity(2)));
        // Interchange-law padding: tensor of composite chains.
        CHECK(ten(E(a) * E(b), E(c)).eval() == kron(a * b, c));
        CHECK(ten(E(c), E(a) * E(b)).eval() == kron(c, a * b));
    }
}

TEST_CASE("pipeline shape errors") {
    Mat a = Mat::identity(2), b = Mat::identity(3);
    CHECK_THROWS_AS(E(a) * E(b), DimensionError);
    CHECK((E(a) * E(a)).rows() == 2);
    CHECK(ten(E(a), E(b)).cols() == 6);
}

TEST_CASE("evaluation is independent of the thread budget") {
    std::mt19937_64 rng(103);
    Mat a = oracle::random_mat(rng, 4, 5), b = oracle::random_mat(rng, 5, 4);
    Expr pipeline = ten(E(a), E(b)) * ten(E(b), E(a)) * ten(eye(5), E(swap_map(2, 2)));
    Mat sequential = pipeline.eval();
    setenv("HOPFQ_THREADS", "4", 1);
    CHECK(thread_budget() == 4);
    Mat parallel = pipeline.eval();
    unsetenv("HOPFQ_THREADS");
    CHECK(thread_budget() == 1);
    CHECK(sequential == parallel);
}
