#ifndef SPFKIT_PARALLEL_HPP
#define SPFKIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace spfkit
{

/// Worker count: SPFKIT_THREADS if set and positive, else hardware threads.
std::size_t thread_limit();

///
/// Runs body(i) for i in [0, count) on up to thread_limit() threads.
/// Work is split into contiguous blocks; callers write results into
/// per-index slots so the outcome does not depend on scheduling.
///
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace spfkit

#endif
