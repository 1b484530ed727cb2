#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pspchain {

/// Default ceiling on the half-width of enumeration-backed operations
/// (2^25 configurations); callers may raise it explicitly.
inline constexpr int kDefaultEnumerationCap = 12;

struct EnumerationOptions {
    int cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

/// Thrown when an exact enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int n, int cap)
        : std::runtime_error("half-width " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(cap)),
          n_(n), cap_(cap) {}
    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

inline void require_within_cap(int n, const EnumerationOptions& options) {
    if (n < 0) throw std::invalid_argument("half-width must be >= 0");
    if (n > options.cap) throw CapExceeded(n, options.cap);
    if (2 * n + 1 > 62) throw std::invalid_argument("half-width too large for 64-bit enumeration");
}

namespace detail {
inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 16;
}

/// Deterministic chunked map-reduce over the index range [0, total).
/// The range is cut into fixed 2^16-wide chunks; `map_chunk(lo, hi)` is
/// evaluated per chunk (possibly on several threads) and the chunk results
/// are folded strictly left to right, so the result is bitwise identical
/// for every thread count.
template <class Result, class MapChunk, class Reduce>
Result chunked_reduce(std::uint64_t total, Result init, MapChunk map_chunk, Reduce reduce,
                      unsigned threads = 1) {
    const std::uint64_t n_chunks = (total + detail::kChunkSize - 1) / detail::kChunkSize;
    Result acc = std::move(init);
    if (threads <= 1 || n_chunks <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            const std::uint64_t lo = c * detail::kChunkSize;
            const std::uint64_t hi = std::min(total, lo + detail::kChunkSize);
            acc = reduce(std::move(acc), map_chunk(lo, hi));
        }
        return acc;
    }
    std::vector<Result> results(n_chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks) break;
            const std::uint64_t lo = c * detail::kChunkSize;
            const std::uint64_t hi = std::min(total, lo + detail::kChunkSize);
            results[c] = map_chunk(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n_workers = std::min<std::uint64_t>(threads, n_chunks);
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::uint64_t c = 0; c < n_chunks; ++c) acc = reduce(std::move(acc), std::move(results[c]));
    return acc;
}

}  // namespace pspchain
