#pragma once

#include <cstdint>

namespace spsl {

namespace detail {
// SplitMix64 finalizer; full-avalanche mixing of a 64-bit value.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based random stream: draw i of stream (seed, id) is a pure function
// of (seed, id, i), so identical draws come out regardless of thread schedule.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : base_(detail::mix64(seed ^ detail::mix64(stream_id))) {}

    std::uint64_t next_u64() { return at(counter_++); }

    // Uniform double in [0, 1), 53 random bits.
    double next_uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_uniform() < p; }

    // Random access without disturbing the running counter.
    std::uint64_t at(std::uint64_t i) const {
        return detail::mix64(base_ + 0x9e3779b97f4a7c15ULL * (i + 1));
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Combine indices (grid point, message, trial, ...) into a stream id.
inline std::uint64_t stream_id(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    return detail::mix64(a ^ detail::mix64(b ^ detail::mix64(c)));
}

}  // namespace spsl
