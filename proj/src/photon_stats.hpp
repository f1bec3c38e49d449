#pragma once

#include <utility>
#include <vector>

namespace spsl {

// Physical operating point of one capture: photo-electron rates plus exposure.
// Quantum efficiency is folded into the rates (100% assumed), so phi_* are
// already photo-electron rates, not raw photon rates.
struct FluxCondition {
    double phi_a = 0.0;   // ambient rate, photons/s
    double phi_p = 0.0;   // projector rate at full brightness, photons/s
    double t_exp = 1e-4;  // exposure, s
    double r_q = 0.0;     // dark count rate, counts/s

    void validate() const;
};

// Per-bit channel: a lit pixel reads 0 with p_bright, an unlit one reads 1
// with p_dark. The asymmetry is the defining feature of the channel.
struct FlipProbs {
    double p_bright = 0.0;
    double p_dark = 0.0;

    void validate() const;
};

// p_bright = exp(-(phi_a + phi_p + r_q) t_exp), p_dark = 1 - exp(-(phi_a + r_q) t_exp)
FlipProbs flip_probabilities(const FluxCondition& cond);

// Probability that at least one of L bits flips, averaged over uniform messages.
double gray_error(const FlipProbs& probs, int code_length);

// Post-majority-vote flip probability of a single bit repeated r times:
// P[Bin(r, p) >= ceil(r/2)]. For even r the r/2-vs-r/2 tie is counted as a
// flip for either polarity, which is pessimistic for a decoder that resolves
// ties to a fixed value; it is the convention the Monte-Carlo oracles follow.
double majority_vote_flip(double p, int repetitions);

// Gray-code error after r-fold repetition with per-bit majority vote.
// repetition_error(probs, L, 1) == gray_error(probs, L) exactly.
double repetition_error(const FlipProbs& probs, int code_length, int repetitions);

// Error probability of a bounded-distance decoder that corrects up to
// floor((d-1)/2) flips: P[#flips > floor((d-1)/2)] with flips on ones
// ~ Bin(ones, p_bright) and flips on zeros ~ Bin(zeros, p_dark), convolved
// exactly and averaged uniformly over the supplied codeword weights.
double bch_bounded_error(const FlipProbs& probs, int design_distance,
                         const std::vector<std::pair<int, int>>& codeword_weights);

// Union bound on the expected absolute decoding error (in pixels) of the
// matched-filter decoder for binary-shift patterns of period 2^(L_shift+1):
// sum over r of 2r * P[X_r >= Y_r], X_r ~ Bin(r, p_dark), Y_r ~ Bin(r, 1-p_bright).
double binary_shift_error_bound(const FlipProbs& probs, int l_shift);

// Exact binomial pmf as long doubles; index k = P[X = k].
std::vector<long double> binomial_pmf(int n, double p);

}  // namespace spsl
