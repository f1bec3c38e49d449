#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bitvec.hpp"
#include "codebook.hpp"

namespace spsl {

inline constexpr std::uint32_t kDecodeFailure = 0xffffffffu;

// Codebook flattened into contiguous words for the batched XOR+popcount loop.
class PackedCodebook {
public:
    explicit PackedCodebook(const Codebook& book);

    std::uint32_t columns() const { return columns_; }
    std::uint32_t frames() const { return frames_; }
    std::size_t words_per_codeword() const { return wpc_; }
    const std::uint64_t* codeword(std::uint32_t c) const { return words_.data() + c * wpc_; }

    // Inverse of packing; must reproduce the source table exactly.
    std::vector<BitVec> unpack() const;

    // Packed codebook with every codeword rotated left by `offset` bits
    // (bit t of the rotated word = bit (t + offset) mod T of the original).
    PackedCodebook rotated(std::uint32_t offset) const;

private:
    PackedCodebook() = default;
    std::uint32_t columns_ = 0, frames_ = 0;
    std::size_t wpc_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DecodeResult {
    std::vector<std::uint32_t> column;    // kDecodeFailure where undecodable
    std::vector<std::uint32_t> distance;  // Hamming distance to the chosen codeword

    bool operator==(const DecodeResult&) const = default;
};

// Nearest codeword by Hamming distance for every query; ties break to the
// lowest column index. Queries must be packed to the same word count.
DecodeResult mdd_decode_batch(std::span<const BitVec> queries, const PackedCodebook& book);

// Same contract as mdd_decode_batch via unoptimized per-bit comparison.
// Kept as the correctness oracle and the benchmark baseline.
DecodeResult naive_mdd(std::span<const BitVec> queries, const Codebook& book);

// Phase of a binary-shift sequence: argmax over the 2^l_shift valid shifts of
// the +-1 score over the template's ON window; ties break to the smallest v.
std::uint32_t matched_filter_decode(const BitVec& sequence, int l_shift);

// Per-position majority vote over r repeated blocks of length l.
// Bit j of the result is 1 iff ones at position j across blocks >= ceil(r/2),
// so an even-r tie resolves to 1.
BitVec majority_vote_decode(const BitVec& sequence, int message_bits, int repetitions);

struct HybridLayout {
    int total_bits;
    int bch_bits;
    int shift_bits;
    std::uint32_t bch_frames;  // transmitted BCH segment length
};

// MSB group via MDD on the BCH segment, LSB phase via the matched filter;
// column = group * 2^L_shift + phase.
DecodeResult hybrid_decode_batch(std::span<const BitVec> queries, const HybridLayout& layout,
                                 const PackedCodebook& bch_segment_book);

// Column decoder for a codebook, strategy-appropriate:
//   gray/longrun-gray  direct message lookup
//   repetition         majority vote, then base message lookup
//   bch                packed MDD over the full table
//   binary-shift       matched filter (phase only)
//   hybrid             split decoding as above
// MDD can also be forced for any book (used by sliding-window decoding).
class ColumnDecoder {
public:
    virtual ~ColumnDecoder() = default;
    virtual DecodeResult decode_batch(std::span<const BitVec> queries) const = 0;
    std::uint32_t decode_one(const BitVec& query) const;
};

std::unique_ptr<ColumnDecoder> make_decoder(const Codebook& book);
std::unique_ptr<ColumnDecoder> make_mdd_decoder(const Codebook& book);

}  // namespace spsl
