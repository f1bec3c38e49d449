#include "gray.hpp"

#include <bit>
#include <string>

#include "errors.hpp"

namespace spsl {

BitVec message_from_value(std::uint32_t value, int bits) {
    BitVec m{std::size_t(bits)};
    for (int i = 0; i < bits; ++i)
        m.set(std::size_t(i), (value >> (bits - 1 - i)) & 1u);
    return m;
}

std::uint32_t value_from_message(const BitVec& message) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < message.size(); ++i)
        v = (v << 1) | std::uint32_t(message.get(i));
    return v;
}

std::vector<BitVec> gray_messages(int bits) {
    require(bits >= 1 && bits <= 16, ErrorKind::invalid_argument,
            "gray_messages: L outside [1,16]");
    std::vector<BitVec> out;
    out.reserve(std::size_t(1) << bits);
    for (std::uint32_t i = 0; i < (std::uint32_t(1) << bits); ++i)
        out.push_back(message_from_value(gray_value(i), bits));
    return out;
}

std::vector<BitVec> long_run_gray_messages(int bits) {
    const auto& seq = long_run_sequence(bits);  // raises for unsupported L
    std::vector<BitVec> out;
    out.reserve(seq.size());
    for (auto v : seq) out.push_back(message_from_value(v, bits));
    return out;
}

int min_cyclic_run(const std::vector<std::uint16_t>& seq, int bits) {
    const int n = int(seq.size());
    int best = n;
    for (int b = 0; b < bits; ++b) {
        std::vector<int> transitions;
        for (int i = 0; i < n; ++i)
            if (((seq[std::size_t(i)] ^ seq[std::size_t((i + 1) % n)]) >> b) & 1)
                transitions.push_back(i);
        if (transitions.empty()) continue;
        for (std::size_t k = 0; k < transitions.size(); ++k) {
            int gap = (transitions[(k + 1) % transitions.size()] - transitions[k] + n) % n;
            if (gap == 0) gap = n;
            best = std::min(best, gap);
        }
    }
    return best;
}

bool is_gray_cycle(const std::vector<std::uint16_t>& seq, int bits) {
    const std::size_t n = std::size_t(1) << bits;
    if (seq.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seq[i] >= n || seen[seq[i]]) return false;
        seen[seq[i]] = true;
        if (std::popcount(std::uint32_t(seq[i] ^ seq[(i + 1) % n])) != 1) return false;
    }
    return true;
}

}  // namespace spsl
