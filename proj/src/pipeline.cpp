#include "pipeline.hpp"

#include <map>

#include "errors.hpp"
#include "parallel.hpp"

namespace spsl {

std::vector<std::uint32_t> decode_stack(const BinaryFrameStack& stack,
                                        const ColumnDecoder& decoder, int threads) {
    const std::size_t npix = std::size_t(stack.width) * std::size_t(stack.height);
    std::vector<std::uint32_t> out(npix, kDecodeFailure);
    // Chunked so each worker decodes a contiguous batch; results are
    // positional, hence schedule-independent.
    const int nthreads = resolve_threads(threads);
    const std::size_t chunk = std::max<std::size_t>(1, (npix + std::size_t(nthreads) - 1) /
                                                           std::size_t(nthreads));
    const std::size_t nchunks = (npix + chunk - 1) / chunk;
    parallel_for(nchunks, nthreads, [&](std::size_t ci) {
        const std::size_t lo = ci * chunk;
        const std::size_t hi = std::min(npix, lo + chunk);
        std::vector<BitVec> queries;
        queries.reserve(hi - lo);
        for (std::size_t p = lo; p < hi; ++p)
            queries.push_back(stack.pixel_sequence(int(p % std::size_t(stack.width)),
                                                   int(p / std::size_t(stack.width))));
        const DecodeResult res = decoder.decode_batch(queries);
        for (std::size_t p = lo; p < hi; ++p) out[p] = res.column[p - lo];
    });
    return out;
}

PipelineResult run_pipeline(const SceneSpec& scene, const Codebook& book,
                            const ColumnDecoder& decoder, const FluxCondition& cond,
                            double defocus_sigma, std::uint64_t seed, int threads) {
    const BinaryFrameStack stack =
        render_frames(scene, book, cond, defocus_sigma, seed, threads);
    PipelineResult result;
    result.correspondence = decode_stack(stack, decoder, threads);
    result.depth = reconstruct_depth(result.correspondence, scene);
    result.metrics = evaluate(result.depth, scene);
    result.mismatches = 0;
    for (std::size_t p = 0; p < result.correspondence.size(); ++p)
        if (result.correspondence[p] != scene.gt_column[p]) ++result.mismatches;
    return result;
}

std::vector<std::vector<std::uint32_t>> sliding_window_decode(const BinaryFrameStack& stack,
                                                              const Codebook& book,
                                                              std::uint32_t stride,
                                                              int threads) {
    const std::uint32_t T = book.frames;
    require(stride > 0 && stride < T, ErrorKind::invalid_argument,
            "sliding_window_decode: stride must be in (0, T)");
    require(stack.frames >= T, ErrorKind::invalid_argument,
            "sliding_window_decode: stack shorter than one pattern period");

    const PackedCodebook packed(book);
    std::map<std::uint32_t, PackedCodebook> by_phase;

    std::vector<std::vector<std::uint32_t>> maps;
    const std::size_t npix = std::size_t(stack.width) * std::size_t(stack.height);
    for (std::uint32_t offset = 0; offset + T <= stack.frames; offset += stride) {
        const std::uint32_t phase = offset % T;
        auto it = by_phase.find(phase);
        if (it == by_phase.end())
            it = by_phase.emplace(phase, packed.rotated(phase)).first;
        const PackedCodebook& rotated = it->second;

        std::vector<std::uint32_t> decoded(npix);
        const int nthreads = resolve_threads(threads);
        const std::size_t chunk =
            std::max<std::size_t>(1, (npix + std::size_t(nthreads) - 1) / std::size_t(nthreads));
        const std::size_t nchunks = (npix + chunk - 1) / chunk;
        parallel_for(nchunks, nthreads, [&](std::size_t ci) {
            const std::size_t lo = ci * chunk;
            const std::size_t hi = std::min(npix, lo + chunk);
            std::vector<BitVec> queries;
            queries.reserve(hi - lo);
            for (std::size_t p = lo; p < hi; ++p) {
                BitVec q(T);
                for (std::uint32_t t = 0; t < T; ++t)
                    q.set(t, stack.planes[offset + t].get(p));
                queries.push_back(std::move(q));
            }
            const DecodeResult res = mdd_decode_batch(queries, rotated);
            for (std::size_t p = lo; p < hi; ++p) decoded[p] = res.column[p - lo];
        });
        maps.push_back(std::move(decoded));
    }
    return maps;
}

double sliding_window_rate(double capture_hz, std::uint32_t frames, std::uint32_t stride) {
    require(frames > 0 && stride > 0, ErrorKind::invalid_argument,
            "sliding_window_rate: zero frames or stride");
    (void)frames;
    return capture_hz / double(stride);
}

}  // namespace spsl
