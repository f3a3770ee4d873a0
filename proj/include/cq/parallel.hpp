#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace cq {

/// Worker count: CQ_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs fn(0..n-1) on up to thread_count() threads. Rethrows the first
/// exception after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Deterministic child seed for a sub-task.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> tags);

}  // namespace cq
