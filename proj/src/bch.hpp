#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bitvec.hpp"
#include "gf2.hpp"

namespace spsl {

// Primitive narrow-sense BCH code over GF(2). Immutable after construction.
//
// Bit-order convention, fixed project-wide: transmitted bit 0 is the first
// projected frame and corresponds to the highest polynomial degree. A full
// codeword c[0..n-1] maps index j to the coefficient of x^(n-1-j); messages
// occupy indices 0..k-1 (message bit 0 = most significant), parity the rest.
// Shortening fixes the first shorten_by message bits to zero and does not
// transmit them.
struct BchCode {
    BinaryField field;
    int n = 0;  // codeword length, 2^m - 1
    int k = 0;  // message dimension
    int d = 0;  // design distance
    Gf2Poly generator;
    int shorten_by = 0;

    int transmitted_length() const { return n - shorten_by; }
    int message_length() const { return k - shorten_by; }
    int parity_length() const { return n - k; }
    int correctable() const { return (d - 1) / 2; }
};

// Narrow-sense BCH with design distance d: g = lcm of the minimal polynomials
// of alpha^1 .. alpha^(d-1). Fails if the resulting dimension would be <= 0
// or smaller than the requested shortening.
BchCode build_bch(const BinaryField& field, int design_distance, int shorten_by = 0);

// The standard code used for a message payload of `message_bits`: the largest
// design distance whose dimension still satisfies k >= message_bits, shortened
// down to exactly message_bits.
BchCode build_bch_for_message_bits(const BinaryField& field, int message_bits);

// Systematic shortened encoding: transmitted = message bits followed by
// parity(x) = m(x) x^(n-k) mod g(x).
BitVec encode_systematic(const BchCode& code, const BitVec& message);

// Syndrome + Berlekamp-Massey + Chien search decoder. Corrects up to
// floor((d-1)/2) flips; beyond that it returns nullopt or (rarely) a wrong
// message, matching classical bounded-distance behaviour. Never throws for
// in-contract received words.
std::optional<BitVec> bounded_distance_decode(const BchCode& code, const BitVec& received);

// (ones, zeros) weight pairs of every codeword of a set of messages; feeds the
// closed-form bounded-distance error. Messages are enumerated as integers
// 0 .. 2^(k - shorten_by) - 1 if none are supplied.
std::vector<std::pair<int, int>> codeword_weights(const BchCode& code,
                                                  const std::vector<BitVec>& messages);

}  // namespace spsl
