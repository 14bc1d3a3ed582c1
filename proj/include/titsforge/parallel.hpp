#ifndef TITSFORGE_PARALLEL_HPP
#define TITSFORGE_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace titsforge {

/// Worker count: explicit value, else TITS_FORGE_THREADS, else hardware.
int resolve_workers(int requested);

/// Splits [0, total) into contiguous chunks and reduces chunk results in
/// ascending chunk order, so the outcome never depends on the worker count
/// or on scheduling. work(begin, end) must derive everything it needs from
/// the indices alone.
template <class Partial, class Work, class Merge>
Partial parallel_reduce(std::int64_t total, int workers, Work&& work, Merge&& merge) {
    workers = resolve_workers(workers);
    const std::int64_t min_chunk = 1024;
    std::int64_t chunks = workers;
    if (total < min_chunk * chunks) chunks = (total + min_chunk - 1) / min_chunk;
    if (chunks <= 1) return work(static_cast<std::int64_t>(0), total);

    std::vector<Partial> partials;
    partials.reserve(static_cast<std::size_t>(chunks));
    for (std::int64_t c = 0; c < chunks; ++c)
        partials.emplace_back();
    const std::int64_t step = (total + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t b = c * step;
        const std::int64_t e = std::min(total, b + step);
        pool.emplace_back([&, c, b, e] { partials[static_cast<std::size_t>(c)] = work(b, e); });
    }
    for (auto& t : pool) t.join();

    Partial acc = std::move(partials[0]);
    for (std::size_t c = 1; c < partials.size(); ++c) merge(acc, std::move(partials[c]));
    return acc;
}

} // namespace titsforge

#endif
