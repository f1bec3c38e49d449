#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately dumb: direct simulation and brute-force enumeration, no shared
// code paths with the library implementations they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "bitvec.hpp"
#include "photon_stats.hpp"
#include "rng.hpp"

namespace spsl::test {

// Empirical majority-vote message error. Each trial draws a uniform message,
// flips every copy of every bit through the asymmetric channel and votes.
// A tie (even r) counts as a bit error, matching the closed form's stated
// convention.
inline double mc_repetition_error(const FlipProbs& probs, int bits, int reps, long trials,
                                  std::uint64_t seed) {
    long failures = 0;
    RngStream rng(seed, 0x4e9);
    for (long t = 0; t < trials; ++t) {
        bool message_wrong = false;
        for (int j = 0; j < bits; ++j) {
            const bool bit = rng.bernoulli(0.5);
            const double p_flip = bit ? probs.p_bright : probs.p_dark;
            int flips = 0;
            for (int k = 0; k < reps; ++k) flips += rng.bernoulli(p_flip);
            if (flips >= (reps + 1) / 2) message_wrong = true;
        }
        failures += message_wrong;
    }
    return double(failures) / double(trials);
}

// Exact P[#flips > radius] for a single codeword by enumerating all flip
// patterns; usable for lengths <= ~20.
inline double brute_force_tail(int ones, int zeros, double p_bright, double p_dark,
                               int radius) {
    const int n = ones + zeros;
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int flips = 0;
        double prob = 1.0;
        for (int i = 0; i < n; ++i) {
            const bool is_one = i < ones;
            const double pf = is_one ? p_bright : p_dark;
            if (mask >> i & 1) {
                prob *= pf;
                ++flips;
            } else {
                prob *= 1.0 - pf;
            }
        }
        if (flips > radius) total += prob;
    }
    return total;
}

// Schoolbook polynomial long division over GF(2); poly[i] = coefficient of
// x^i. Returns the remainder.
inline std::vector<int> gf2_long_division_remainder(std::vector<int> dividend,
                                                    const std::vector<int>& divisor) {
    auto degree = [](const std::vector<int>& p) {
        for (int i = int(p.size()) - 1; i >= 0; --i)
            if (p[std::size_t(i)]) return i;
        return -1;
    };
    const int dd = degree(divisor);
    while (degree(dividend) >= dd) {
        const int shift = degree(dividend) - dd;
        for (int i = 0; i <= dd; ++i)
            dividend[std::size_t(i + shift)] ^= divisor[std::size_t(i)];
    }
    dividend.resize(std::size_t(dd) > 0 ? std::size_t(dd) : 1);
    return dividend;
}

// Exhaustive search over all cyclic Gray codes on `bits` bits (fixed start 0):
// the maximum achievable minimum cyclic run length. Feasible for bits <= 4.
inline int exhaustive_best_min_run(int bits) {
    const int n = 1 << bits;
    std::vector<std::uint16_t> seq{0};
    std::vector<bool> used(std::size_t(n), false);
    used[0] = true;
    int best = 0;

    auto min_run_of = [bits](const std::vector<std::uint16_t>& s) {
        const int len = int(s.size());
        int mr = len;
        for (int b = 0; b < bits; ++b) {
            std::vector<int> pos;
            for (int i = 0; i < len; ++i)
                if (((s[std::size_t(i)] ^ s[std::size_t((i + 1) % len)]) >> b) & 1)
                    pos.push_back(i);
            if (pos.empty()) continue;
            for (std::size_t k = 0; k < pos.size(); ++k) {
                int gap = (pos[(k + 1) % pos.size()] - pos[std::size_t(k)] + len) % len;
                if (!gap) gap = len;
                mr = std::min(mr, gap);
            }
        }
        return mr;
    };

    // Plain DFS over all Hamiltonian cycles of the hypercube.
    auto dfs = [&](auto&& self) -> void {
        if (int(seq.size()) == n) {
            if (std::popcount(std::uint32_t(seq.back() ^ seq.front())) == 1)
                best = std::max(best, min_run_of(seq));
            return;
        }
        for (int b = 0; b < bits; ++b) {
            const std::uint16_t next = seq.back() ^ std::uint16_t(1 << b);
            if (used[next]) continue;
            used[next] = true;
            seq.push_back(next);
            self(self);
            seq.pop_back();
            used[next] = false;
        }
    };
    dfs(dfs);
    return best;
}

}  // namespace spsl::test
