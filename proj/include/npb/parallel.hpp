#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace npb {

/// Worker count for exhaustive scans, read once from NPB_WORKERS (default 1).
/// Affects speed only; every scan below returns the same answer for any count.
std::size_t worker_count();

/// Smallest i in [0, n) with pred(i), or nullopt. Splits the range into
/// contiguous chunks across workers and keeps the least hit.
std::optional<std::size_t> parallel_find_first(std::size_t n,
                                               const std::function<bool(std::size_t)>& pred);

/// Runs body(i) for every i in [0, n) across workers. body must only write
/// to slots owned by i. The first exception (by index) is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace npb
