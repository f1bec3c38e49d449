#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spsl {

// Fixed-length bit sequence packed into 64-bit words, LSB-first within a word.
// This is the common currency for codewords, received frames and queries.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') v.set(i, true);
            else if (s[i] != '0') throw std::invalid_argument("BitVec: expected '0'/'1'");
        }
        return v;
    }

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto w : words_) n += std::size_t(std::popcount(w));
        return n;
    }

    BitVec operator^(const BitVec& o) const {
        BitVec r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
        return r;
    }

    bool operator==(const BitVec&) const = default;

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hamming(const BitVec& a, const BitVec& b) {
    std::size_t n = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) n += std::size_t(std::popcount(wa[i] ^ wb[i]));
    return n;
}

}  // namespace spsl
