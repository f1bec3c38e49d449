#include "photon_stats.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace spsl {

void FluxCondition::validate() const {
    require(std::isfinite(phi_a) && std::isfinite(phi_p) && std::isfinite(t_exp) &&
                std::isfinite(r_q),
            ErrorKind::invalid_argument, "FluxCondition: non-finite field");
    require(phi_a >= 0.0, ErrorKind::invalid_argument, "FluxCondition: phi_a < 0");
    require(phi_p >= 0.0, ErrorKind::invalid_argument, "FluxCondition: phi_p < 0");
    require(t_exp > 0.0, ErrorKind::invalid_argument, "FluxCondition: t_exp <= 0");
    require(r_q >= 0.0, ErrorKind::invalid_argument, "FluxCondition: r_q < 0");
}

void FlipProbs::validate() const {
    require(std::isfinite(p_bright) && std::isfinite(p_dark), ErrorKind::invalid_argument,
            "FlipProbs: non-finite probability");
    require(p_bright >= 0.0 && p_bright <= 1.0, ErrorKind::invalid_argument,
            "FlipProbs: p_bright outside [0,1]");
    require(p_dark >= 0.0 && p_dark <= 1.0, ErrorKind::invalid_argument,
            "FlipProbs: p_dark outside [0,1]");
}

FlipProbs flip_probabilities(const FluxCondition& cond) {
    cond.validate();
    FlipProbs p;
    p.p_bright = std::exp(-(cond.phi_a + cond.phi_p + cond.r_q) * cond.t_exp);
    p.p_dark = 1.0 - std::exp(-(cond.phi_a + cond.r_q) * cond.t_exp);
    return p;
}

double gray_error(const FlipProbs& probs, int code_length) {
    probs.validate();
    require(code_length >= 1, ErrorKind::invalid_argument, "gray_error: L < 1");
    const double p = 0.5 * (probs.p_bright + probs.p_dark);
    return 1.0 - std::pow(1.0 - p, double(code_length));
}

std::vector<long double> binomial_pmf(int n, double p) {
    require(n >= 0, ErrorKind::invalid_argument, "binomial_pmf: n < 0");
    std::vector<long double> pmf(std::size_t(n) + 1, 0.0L);
    if (p <= 0.0) { pmf[0] = 1.0L; return pmf; }
    if (p >= 1.0) { pmf[std::size_t(n)] = 1.0L; return pmf; }
    const long double q = 1.0L - (long double)p;
    const long double ratio = (long double)p / q;
    pmf[0] = std::pow(q, (long double)n);
    for (int k = 0; k < n; ++k)
        pmf[std::size_t(k) + 1] = pmf[std::size_t(k)] * ratio * (long double)(n - k) / (long double)(k + 1);
    return pmf;
}

double majority_vote_flip(double p, int repetitions) {
    require(repetitions >= 1, ErrorKind::invalid_argument, "majority_vote_flip: r < 1");
    const int threshold = (repetitions + 1) / 2;  // ceil(r/2)
    auto pmf = binomial_pmf(repetitions, p);
    long double tail = 0.0L;
    for (int k = threshold; k <= repetitions; ++k) tail += pmf[std::size_t(k)];
    return double(tail);
}

double repetition_error(const FlipProbs& probs, int code_length, int repetitions) {
    probs.validate();
    require(code_length >= 1, ErrorKind::invalid_argument, "repetition_error: L < 1");
    require(repetitions >= 1, ErrorKind::invalid_argument, "repetition_error: r < 1");
    FlipProbs voted;
    voted.p_bright = majority_vote_flip(probs.p_bright, repetitions);
    voted.p_dark = majority_vote_flip(probs.p_dark, repetitions);
    return gray_error(voted, code_length);
}

double bch_bounded_error(const FlipProbs& probs, int design_distance,
                         const std::vector<std::pair<int, int>>& codeword_weights) {
    probs.validate();
    require(design_distance >= 1, ErrorKind::invalid_argument, "bch_bounded_error: d < 1");
    require(!codeword_weights.empty(), ErrorKind::invalid_argument,
            "bch_bounded_error: empty weight list");
    const int radius = (design_distance - 1) / 2;
    long double acc = 0.0L;
    for (auto [ones, zeros] : codeword_weights) {
        require(ones >= 0 && zeros >= 0, ErrorKind::invalid_argument,
                "bch_bounded_error: negative weight");
        auto pb = binomial_pmf(ones, probs.p_bright);
        auto pd = binomial_pmf(zeros, probs.p_dark);
        // P[total flips > radius] via exact convolution of the two binomials.
        long double within = 0.0L;
        for (int i = 0; i <= ones && i <= radius; ++i) {
            long double dark_cdf = 0.0L;
            for (int j = 0; j <= zeros && i + j <= radius; ++j) dark_cdf += pd[std::size_t(j)];
            within += pb[std::size_t(i)] * dark_cdf;
        }
        acc += 1.0L - within;
    }
    return double(acc / (long double)codeword_weights.size());
}

double binary_shift_error_bound(const FlipProbs& probs, int l_shift) {
    probs.validate();
    require(l_shift >= 1, ErrorKind::invalid_argument, "binary_shift_error_bound: L_shift < 1");
    const int period = 1 << (l_shift + 1);
    long double bound = 0.0L;
    for (int r = 1; r < period; ++r) {
        auto px = binomial_pmf(r, probs.p_dark);         // detections in r OFF slots
        auto py = binomial_pmf(r, 1.0 - probs.p_bright); // detections in r ON slots
        long double p_ge = 0.0L;
        for (int x = 0; x <= r; ++x) {
            long double cy = 0.0L;
            for (int y = 0; y <= x; ++y) cy += py[std::size_t(y)];
            p_ge += px[std::size_t(x)] * cy;
        }
        bound += 2.0L * r * p_ge;
    }
    return double(bound);
}

}  // namespace spsl
