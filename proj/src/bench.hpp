#pragma once

#include <cstdint>

namespace spsl {

struct BenchReport {
    double packed_ns_per_query = 0.0;
    double naive_ns_per_query = 0.0;
    double speedup = 0.0;
    double packed_total_ms = 0.0;
    long queries = 0;
    std::uint32_t codewords = 0;
    std::uint32_t frames = 0;
};

// Random-codebook decode benchmark. Verifies packed == naive on the sampled
// queries before timing anything; throws on mismatch. The naive engine is
// timed on min(queries, naive_sample) queries and extrapolated per-query.
BenchReport bench_mdd(std::uint32_t frames, std::uint32_t codewords, long queries,
                      long naive_sample, std::uint64_t seed, int threads);

}  // namespace spsl
