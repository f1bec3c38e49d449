#include "bench.hpp"

#include <chrono>
#include <set>

#include "decode.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace spsl {

namespace {

BitVec random_bits(std::size_t nbits, RngStream& rng) {
    BitVec v(nbits);
    for (std::size_t i = 0; i < nbits; ++i) v.set(i, rng.next_u64() & 1);
    return v;
}

}  // namespace

BenchReport bench_mdd(std::uint32_t frames, std::uint32_t codewords, long queries,
                      long naive_sample, std::uint64_t seed, int threads) {
    require(frames > 0 && codewords > 0 && queries > 0, ErrorKind::invalid_argument,
            "bench_mdd: non-positive dimensions");

    Codebook book;
    book.strategy = Strategy::bch;  // tag only; the table is random
    book.columns = codewords;
    book.frames = frames;
    {
        RngStream rng(seed, stream_id(0xb00c));
        std::set<std::string> seen;
        while (book.table.size() < codewords) {
            BitVec cw = random_bits(frames, rng);
            if (seen.insert(cw.to_string()).second) book.table.push_back(std::move(cw));
        }
    }
    const PackedCodebook packed(book);

    std::vector<BitVec> qs;
    qs.reserve(std::size_t(queries));
    {
        RngStream rng(seed, stream_id(0x9e5));
        for (long i = 0; i < queries; ++i) qs.push_back(random_bits(frames, rng));
    }

    const long sample = std::min<long>(queries, std::max<long>(1, naive_sample));
    const std::span<const BitVec> sample_span(qs.data(), std::size_t(sample));

    // Correctness gate before any timing.
    const DecodeResult a = mdd_decode_batch(sample_span, packed);
    const DecodeResult b = naive_mdd(sample_span, book);
    require(a == b, ErrorKind::invalid_argument,
            "bench_mdd: packed and naive decoders disagree");

    using clock = std::chrono::steady_clock;
    BenchReport rep;
    rep.queries = queries;
    rep.codewords = codewords;
    rep.frames = frames;

    const auto t0 = clock::now();
    std::vector<std::uint32_t> sink(static_cast<std::size_t>(queries), 0);
    const int nthreads = resolve_threads(threads);
    const std::size_t chunk =
        std::max<std::size_t>(1, (std::size_t(queries) + std::size_t(nthreads) - 1) /
                                     std::size_t(nthreads));
    const std::size_t nchunks = (std::size_t(queries) + chunk - 1) / chunk;
    parallel_for(nchunks, nthreads, [&](std::size_t ci) {
        const std::size_t lo = ci * chunk;
        const std::size_t hi = std::min(std::size_t(queries), lo + chunk);
        const DecodeResult r =
            mdd_decode_batch(std::span<const BitVec>(qs.data() + lo, hi - lo), packed);
        for (std::size_t i = lo; i < hi; ++i) sink[i] = r.column[i - lo];
    });
    const auto t1 = clock::now();
    naive_mdd(sample_span, book);
    const auto t2 = clock::now();

    const double packed_ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    const double naive_ns = std::chrono::duration<double, std::nano>(t2 - t1).count();
    rep.packed_total_ms = packed_ns * 1e-6;
    rep.packed_ns_per_query = packed_ns / double(queries);
    rep.naive_ns_per_query = naive_ns / double(sample);
    rep.speedup = rep.naive_ns_per_query / rep.packed_ns_per_query;
    return rep;
}

}  // namespace spsl
