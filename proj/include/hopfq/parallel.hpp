#ifndef HOPFQ_PARALLEL_HPP
#define HOPFQ_PARALLEL_HPP

#include <functional>

namespace hopfq {

// Worker cap from HOPFQ_THREADS (default 1, i.e. sequential). Values below
// 1 are clamped.
int thread_budget();

// Runs fn(0..n-1). With a budget above 1 the indices are processed on a
// small thread pool; nested calls always run sequentially so suites that
// parallelize per check do not oversubscribe inside matrix pipelines.
// Ordering of side effects per index is up to the caller; the helper only
// guarantees completion of all indices on return and rethrows the first
// exception by index order.
void parallel_for(long n, const std::function<void(long)>& fn);

} // namespace hopfq

#endif
