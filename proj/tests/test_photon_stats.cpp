#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "photon_stats.hpp"
#include "support/oracles.hpp"

using namespace spsl;

namespace {
// Fig-level reference operating points (flip probabilities as published).
const FlipProbs kDarkRoom{0.22, 0.021};
const FlipProbs kIndoorLamp{0.19, 0.23};
const FlipProbs kSpotLamp{0.06, 0.75};
}  // namespace

TEST_CASE("flip probabilities: closed form and edge cases") {
    const FlipProbs zero = flip_probabilities({0.0, 0.0, 1e-4, 0.0});
    CHECK(zero.p_bright == doctest::Approx(1.0));
    CHECK(zero.p_dark == doctest::Approx(0.0));

    const FlipProbs unit = flip_probabilities({0.0, 1e4, 1e-4, 0.0});
    CHECK(unit.p_bright == doctest::Approx(std::exp(-1.0)));
    CHECK(unit.p_dark == doctest::Approx(0.0));

    // Inverting p_dark = 0.021 at t_exp = 1e-4 lands near 212.2 photons/s.
    const double phi_a = -std::log(1.0 - 0.021) / 1e-4;
    CHECK(phi_a == doctest::Approx(212.2).epsilon(1e-3));
    const FlipProbs probs = flip_probabilities({phi_a, 0.0, 1e-4, 0.0});
    CHECK(probs.p_dark == doctest::Approx(0.021));
}

TEST_CASE("flip probabilities: validation") {
    CHECK_THROWS_AS(flip_probabilities({-1.0, 0.0, 1e-4, 0.0}), Error);
    CHECK_THROWS_AS(flip_probabilities({0.0, 0.0, 0.0, 0.0}), Error);
    CHECK_THROWS_AS(flip_probabilities({0.0, std::nan(""), 1e-4, 0.0}), Error);
}

TEST_CASE("flip probabilities: monotone in flux over a grid") {
    double prev_bright = 1.1;
    for (double phi_p : {0.0, 1e3, 1e4, 3e4, 1e5}) {
        const FlipProbs p = flip_probabilities({100.0, phi_p, 1e-4, 0.0});
        CHECK(p.p_bright < prev_bright);
        prev_bright = p.p_bright;
    }
    double prev_dark = -0.1;
    for (double phi_a : {0.0, 1e2, 1e3, 1e4, 1e5}) {
        const FlipProbs p = flip_probabilities({phi_a, 1e4, 1e-4, 0.0});
        CHECK(p.p_dark > prev_dark);
        prev_dark = p.p_dark;
    }
}

TEST_CASE("complement identity: p_bright(phi_p=0) + p_dark = 1 when r_q = 0") {
    for (double phi_a : {10.0, 212.2, 5e3}) {
        const FlipProbs p = flip_probabilities({phi_a, 0.0, 1e-4, 0.0});
        CHECK(p.p_bright + p.p_dark == doctest::Approx(1.0));
    }
}

TEST_CASE("gray error: published operating points") {
    CHECK(gray_error(kDarkRoom, 10) == doctest::Approx(0.72).epsilon(0.015));
    CHECK(gray_error(kIndoorLamp, 10) == doctest::Approx(0.90).epsilon(0.012));
    CHECK(gray_error(kSpotLamp, 10) == doctest::Approx(0.99).epsilon(0.011));
    CHECK(gray_error({0.0, 0.0}, 10) == 0.0);
}

TEST_CASE("gray error: strictly increasing in L") {
    double prev = -1.0;
    for (int L = 1; L <= 16; ++L) {
        const double e = gray_error(kDarkRoom, L);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("repetition error: r=1 equals gray bit-for-bit") {
    for (const auto& probs : {kDarkRoom, kIndoorLamp, kSpotLamp, FlipProbs{0.5, 0.5}}) {
        CHECK(repetition_error(probs, 10, 1) == gray_error(probs, 10));
    }
}

TEST_CASE("repetition error: more repetitions help below 1/2") {
    const FlipProbs p{0.2, 0.2};
    CHECK(repetition_error(p, 10, 7) < repetition_error(p, 10, 3));
    CHECK(repetition_error(p, 10, 3) < repetition_error(p, 10, 1));
}

TEST_CASE("repetition error: agrees with a majority-vote simulation") {
    const long trials = 100000;
    const double closed = repetition_error(kDarkRoom, 10, 5);
    const double mc = test::mc_repetition_error(kDarkRoom, 10, 5, trials, 42);
    const double sigma = std::sqrt(closed * (1.0 - closed) / double(trials));
    CHECK(std::abs(mc - closed) <= 4.0 * sigma);
}

TEST_CASE("bounded-distance error: hand-enumerated case") {
    // d=3 corrects one flip; a codeword with two ones and one zero under
    // p_bright = 1/2, p_dark = 0 fails exactly when both ones flip.
    const double v = bch_bounded_error({0.5, 0.0}, 3, {{2, 1}});
    CHECK(v == doctest::Approx(0.25));
    CHECK(bch_bounded_error({0.0, 0.0}, 27, {{30, 33}}) == 0.0);
}

TEST_CASE("bounded-distance error: matches brute-force enumeration (n <= 15)") {
    for (const auto& probs : {kDarkRoom, FlipProbs{0.3, 0.1}}) {
        for (int d : {3, 5, 7}) {
            const int radius = (d - 1) / 2;
            const double exact = test::brute_force_tail(6, 9, probs.p_bright, probs.p_dark,
                                                        radius);
            const double conv = bch_bounded_error(probs, d, {{6, 9}});
            CHECK(conv == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("bounded-distance error: repetition code weight profile cross-check") {
    // Single-message repetition code: r copies of a single 1. With d = r the
    // bounded decoder is the majority vote of that bit.
    for (int r : {3, 5, 7}) {
        const double via_bch = bch_bounded_error({0.2, 0.0}, r, {{r, 0}});
        const double via_vote = majority_vote_flip(0.2, r);
        CHECK(via_bch == doctest::Approx(via_vote).epsilon(1e-12));
    }
}

TEST_CASE("binary shift bound: exact value of the union-bound sum") {
    // The published 1.2 px figure is not reproducible from the published
    // probabilities: the stated sum evaluates to 0.9056 at the dark-room
    // point. Pin the exact value so regressions are visible.
    const double bound = binary_shift_error_bound(kDarkRoom, 3);
    CHECK(bound == doctest::Approx(0.905563).epsilon(1e-5));
    CHECK(binary_shift_error_bound({0.0, 0.0}, 3) == 0.0);
}

TEST_CASE("binomial pmf: sums to one, handles degenerate p") {
    for (double p : {0.0, 0.25, 1.0}) {
        const auto pmf = binomial_pmf(12, p);
        long double sum = 0.0L;
        for (auto v : pmf) sum += v;
        CHECK(double(sum) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(double(binomial_pmf(5, 0.0)[0]) == 1.0);
    CHECK(double(binomial_pmf(5, 1.0)[5]) == 1.0);
}
