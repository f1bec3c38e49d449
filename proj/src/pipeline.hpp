#pragma once

#include <cstdint>
#include <vector>

#include "channel.hpp"
#include "codebook.hpp"
#include "decode.hpp"
#include "scene.hpp"

namespace spsl {

struct PipelineResult {
    std::vector<std::uint32_t> correspondence;  // decoded projector column per pixel
    DepthMap depth;
    DepthMetrics metrics;
    std::size_t mismatches = 0;  // decoded column != ground-truth column
};

// Render -> decode -> triangulate -> evaluate. Deterministic in (inputs, seed).
PipelineResult run_pipeline(const SceneSpec& scene, const Codebook& book,
                            const ColumnDecoder& decoder, const FluxCondition& cond,
                            double defocus_sigma, std::uint64_t seed, int threads = 1);

// Decode the already-rendered stack with the book's standard decoder.
std::vector<std::uint32_t> decode_stack(const BinaryFrameStack& stack,
                                        const ColumnDecoder& decoder, int threads = 1);

// Pipelined decoding: windows of T frames starting at offsets 0, s, 2s, ...
// while they fit in the stack. A window whose offset has phase p = offset mod T
// sees the pattern schedule rotated by p, so it is matched against the packed
// codebook rotated by the same amount (plain MDD for every strategy).
std::vector<std::vector<std::uint32_t>> sliding_window_decode(const BinaryFrameStack& stack,
                                                              const Codebook& book,
                                                              std::uint32_t stride,
                                                              int threads = 1);

// Output frame rate of the strided scheme: windows per second at a given
// capture rate. Plain burst decoding is the stride = T case.
double sliding_window_rate(double capture_hz, std::uint32_t frames, std::uint32_t stride);

}  // namespace spsl
