#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitvec.hpp"
#include "codebook.hpp"
#include "photon_stats.hpp"
#include "rng.hpp"
#include "scene.hpp"

namespace spsl {

// Time-ordered binary SPAD captures of one pattern sequence.
struct BinaryFrameStack {
    int width = 0, height = 0;
    std::uint32_t frames = 0;
    std::uint64_t seed = 0;
    std::vector<BitVec> planes;  // frames entries of width*height bits, row-major
    std::vector<std::uint32_t> gt_column;  // optional, empty if unknown

    bool bit(std::uint32_t t, int x, int y) const {
        return planes[t].get(std::size_t(y) * std::size_t(width) + std::size_t(x));
    }
    // Temporal sequence of one pixel, length = frames.
    BitVec pixel_sequence(int x, int y) const;
};

// Flip each transmitted bit independently: 1 -> 0 with p_bright, 0 -> 1 with
// p_dark. Consumes exactly codeword.size() draws from the stream, so streams
// stay aligned regardless of the word's content.
BitVec corrupt_codeword(const BitVec& codeword, const FlipProbs& probs, RngStream& rng);

// Render the full capture: per frame, the projector row is warped through the
// scene correspondence, blurred along x by a normalized Gaussian of width
// defocus_sigma (camera pixels), and sampled per pixel as
//   P[B = 0] = exp(-(phi_a + I * phi_p * albedo + r_q) t_exp).
// Per-(pixel, frame) counter-based streams make the result independent of
// the parallel schedule. threads <= 0 selects hardware concurrency.
BinaryFrameStack render_frames(const SceneSpec& scene, const Codebook& book,
                               const FluxCondition& cond, double defocus_sigma,
                               std::uint64_t seed, int threads = 1);

// PBM (P4) export: one image per frame plus a "stack.manifest" line
// "width height T seed". Import restores an identical stack (without gt).
void export_frames_pbm(const BinaryFrameStack& stack, const std::string& directory);
BinaryFrameStack import_frames_pbm(const std::string& directory);

}  // namespace spsl
