#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "decode.hpp"
#include "photon_stats.hpp"

namespace spsl {

enum class McMetric { exact_mismatch, rmse };

std::string_view metric_name(McMetric m);
McMetric metric_from_name(std::string_view name);

struct McConfig {
    long n_iter = 100;
    std::uint64_t seed = 1;
    McMetric metric = McMetric::exact_mismatch;
    int threads = 1;
};

// One full pass of the nested Monte-Carlo loops: every message, n_iter
// corrupted transmissions each, decoded and scored, averaged per message and
// then over messages. Streams are indexed by (message, trial), so the result
// is a pure function of (book, probs, cfg) for any thread count.
double run_mc(const Codebook& book, const ColumnDecoder& decoder, const FlipProbs& probs,
              const McConfig& cfg);

// A codebook+decoder pair addressable by a sweep token:
//   gray | longrun | rep<r> | longrun-rep<r> | bch<n> | hybrid<n>
// built for L message bits (hybrid uses L_shift=3, L_BCH=L-3).
struct StrategyInstance {
    std::string name;
    Codebook book;
    std::unique_ptr<ColumnDecoder> decoder;
};

StrategyInstance make_strategy(const std::string& token, int message_bits);

struct SweepRow {
    double phi_a = 0.0, phi_p = 0.0;
    std::string strategy;
    std::string metric;
    double value = 0.0;
    long n_iter = 0;
    std::uint64_t seed = 0;
};

struct SweepTable {
    std::vector<SweepRow> rows;

    void to_csv(std::ostream& out) const;
    void to_csv(const std::string& path) const;
};

// Full Cartesian sweep: rows ordered by (phi_a, phi_p, strategy list order).
// Each grid point evaluates run_mc with a stream derived from (seed, point,
// strategy), so the table is bit-identical across runs and thread counts.
SweepTable sweep_grid(const std::vector<std::string>& strategy_tokens, int message_bits,
                      const std::vector<double>& phi_a_values,
                      const std::vector<double>& phi_p_values, const FluxCondition& base,
                      const McConfig& cfg);

}  // namespace spsl
