#pragma once

#include <cstdint>
#include <vector>

#include "bitvec.hpp"

namespace spsl {

// Message convention everywhere: bit 0 of a message BitVec is the most
// significant bit of the encoded value (and the first projected frame).

inline std::uint32_t gray_value(std::uint32_t i) { return i ^ (i >> 1); }

inline std::uint32_t gray_rank(std::uint32_t g) {
    std::uint32_t v = 0;
    for (; g; g >>= 1) v ^= g;
    return v;
}

BitVec message_from_value(std::uint32_t value, int bits);
std::uint32_t value_from_message(const BitVec& message);

// Standard reflected Gray sequence: entry i encodes gray_value(i) on L bits.
std::vector<BitVec> gray_messages(int bits);

// Bundled long-run Gray sequences: Gray cycles whose per-bit runs are as long
// as the offline search could make them. Supported L and achieved minimum
// cyclic run lengths are listed in long_run_supported().
bool long_run_supported(int bits);
const std::vector<std::uint16_t>& long_run_sequence(int bits);
std::vector<BitVec> long_run_gray_messages(int bits);

// Minimum cyclic run length over all bit positions of a value sequence.
int min_cyclic_run(const std::vector<std::uint16_t>& seq, int bits);

// True iff seq is a cyclic Gray code over all 2^bits values.
bool is_gray_cycle(const std::vector<std::uint16_t>& seq, int bits);

}  // namespace spsl
