// Sharded work over an index range. Results merge in shard order, so output
// never depends on scheduling.

#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace reesyl {

inline unsigned resolve_jobs(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("REE_SYL_JOBS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Runs fn(shard, begin, end) on `jobs` threads over [0, n), one contiguous
// range per shard. The caller indexes per-shard output by shard id.
template <class Fn>
void for_shards(std::uint64_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        fn(0u, std::uint64_t{0}, n);
        return;
    }
    if (jobs > n) jobs = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    const std::uint64_t chunk = (n + jobs - 1) / jobs;
    for (unsigned s = 0; s < jobs; ++s) {
        const std::uint64_t begin = s * chunk;
        const std::uint64_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        threads.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
    }
    for (auto& t : threads) t.join();
}

} // namespace reesyl
