// Test-only oracles, deliberately independent of the library's sparse
// matrix kernels: plain dense rational elimination, a brute-force loop
// search, and helpers for random inputs.
#ifndef HOPFQ_TESTS_ORACLES_HPP
#define HOPFQ_TESTS_ORACLES_HPP

#include "hopfq/constructions.hpp"
#include "hopfq/mat.hpp"

#include <optional>
#include <random>
#include <vector>

namespace hopfq::oracle {

using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const Mat& m);
Mat from_dense(const Dense& d);

Dense dense_mul(const Dense& a, const Dense& b);
Dense dense_kron(const Dense& a, const Dense& b);
long dense_rank(Dense a);

// Uniform small random matrix with entries in {-2..2}/{1,2,3}.
Mat random_mat(std::mt19937_64& rng, long rows, long cols, int density_percent = 60);

// Exhaustive search for the smallest nonassociative IP loop with order in
// [from, to]; returns the first table found in lexicographic fill order.
std::optional<MulTable> smallest_nonassociative_ip_loop(int from, int to);

} // namespace hopfq::oracle

#endif
