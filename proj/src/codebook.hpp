#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bch.hpp"
#include "bitvec.hpp"

namespace spsl {

enum class Strategy { gray, long_run_gray, repetition, bch, binary_shift, hybrid };

std::string_view strategy_name(Strategy s);
Strategy strategy_from_name(std::string_view name);

// The per-column pattern LUT: column c is projected as table[c] over T frames;
// pattern row t (one projected frame) is bit t of every column.
//
// Codewords are distinct for every strategy except binary_shift, which is
// periodic in the column index by construction (phase v = c mod 2^L_shift)
// and only disambiguates columns locally.
struct Codebook {
    Strategy strategy = Strategy::gray;
    std::uint32_t columns = 0;  // C
    std::uint32_t frames = 0;   // T
    std::vector<BitVec> table;        // C codewords of T bits
    std::vector<BitVec> message_map;  // column -> message bits
    std::map<std::string, std::string> metadata;

    int meta_int(const std::string& key) const;
    bool pattern_bit(std::uint32_t frame, std::uint32_t column) const {
        return table[column].get(frame);
    }
};

struct HybridParams {
    int total_bits = 10;   // L
    int bch_bits = 7;      // L_BCH, most significant
    int shift_bits = 3;    // L_shift, least significant
    BchCode bch;
};

// BCH code for the hybrid MSB group on codewords of length n = 2^m - 1:
// the standard code with the largest design distance whose k >= bch_bits,
// shortened to exactly bch_bits message bits.
HybridParams make_hybrid_params(int total_bits, int bch_bits, int shift_bits, int codeword_length);

Codebook gray_codebook(int bits);
Codebook long_run_gray_codebook(int bits);

// Pattern sequence replayed r times; T grows r-fold, stripes are unchanged.
Codebook repetition_codebook(const Codebook& base, int repetitions);

// Column i = systematic shortened encoding of messages[i]. Message bit-length
// must equal code.k - code.shorten_by.
Codebook bch_codebook(const std::vector<BitVec>& messages, const BchCode& code,
                      Strategy base_tag = Strategy::gray);

// Temporal burst of 2^L_shift ones in a period of 2^(L_shift+1), circularly
// shifted by v(c) = c mod 2^L_shift; the phase encodes the message.
Codebook binary_shift_codebook(int shift_bits, std::uint32_t columns);

// BCH-encoded Gray code of the column's high-order bits, concatenated with the
// binary-shift codeword of its low-order bits.
Codebook hybrid_codebook(const HybridParams& params, std::uint32_t columns);

// Minimum stripe width over all pattern rows: the smallest gap between two
// consecutive transitions within a row. Runs clipped by the image border are
// not measured; a row with fewer than two transitions contributes the full
// row width C.
int stripe_width(const Codebook& book);

// Text LUT format, bit-exact round trip:
//   line 1: SPSL-LUT 1 <strategy> <T> <C>
//   line 2: key=value pairs, comma separated (may be empty)
//   then T lines of C characters in {0,1}; line t is pattern frame t.
void serialize_lut(const Codebook& book, const std::string& path);
Codebook deserialize_lut(const std::string& path);

}  // namespace spsl
