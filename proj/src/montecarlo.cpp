#include "montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "channel.hpp"
#include "errors.hpp"
#include "gray.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace spsl {

std::string_view metric_name(McMetric m) {
    return m == McMetric::exact_mismatch ? "exact" : "rmse";
}

McMetric metric_from_name(std::string_view name) {
    if (name == "exact") return McMetric::exact_mismatch;
    if (name == "rmse") return McMetric::rmse;
    raise(ErrorKind::invalid_argument, "unknown metric '" + std::string(name) + "'");
}

double run_mc(const Codebook& book, const ColumnDecoder& decoder, const FlipProbs& probs,
              const McConfig& cfg) {
    probs.validate();
    require(cfg.n_iter >= 1, ErrorKind::invalid_argument, "run_mc: n_iter < 1");
    const std::size_t n_msg = book.table.size();
    std::vector<double> per_message(n_msg, 0.0);

    parallel_for(n_msg, cfg.threads, [&](std::size_t c) {
        std::vector<BitVec> corrupted;
        corrupted.reserve(std::size_t(cfg.n_iter));
        for (long i = 0; i < cfg.n_iter; ++i) {
            RngStream rng(cfg.seed, stream_id(c, std::uint64_t(i)));
            corrupted.push_back(corrupt_codeword(book.table[c], probs, rng));
        }
        const DecodeResult res = decoder.decode_batch(corrupted);
        double acc = 0.0;
        for (long i = 0; i < cfg.n_iter; ++i) {
            const std::uint32_t got = res.column[std::size_t(i)];
            if (cfg.metric == McMetric::exact_mismatch) {
                acc += (got != c) ? 1.0 : 0.0;
            } else {
                const double diff = (got == kDecodeFailure)
                                        ? double(book.columns)
                                        : double(got) - double(c);
                acc += diff * diff;
            }
        }
        per_message[c] = acc / double(cfg.n_iter);
    });

    double total = 0.0;
    for (double v : per_message) total += v;
    total /= double(n_msg);
    return cfg.metric == McMetric::rmse ? std::sqrt(total) : total;
}

StrategyInstance make_strategy(const std::string& token, int message_bits) {
    StrategyInstance inst;
    inst.name = token;

    auto suffix_int = [&](std::string_view prefix) -> int {
        const std::string num(token.substr(prefix.size()));
        require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
                ErrorKind::invalid_argument, "strategy '" + token + "': bad numeric suffix");
        return std::stoi(num);
    };

    if (token == "gray") {
        inst.book = gray_codebook(message_bits);
    } else if (token == "longrun") {
        inst.book = long_run_gray_codebook(message_bits);
    } else if (token.rfind("longrun-rep", 0) == 0) {
        inst.book = repetition_codebook(long_run_gray_codebook(message_bits),
                                        suffix_int("longrun-rep"));
    } else if (token.rfind("rep", 0) == 0) {
        inst.book = repetition_codebook(gray_codebook(message_bits), suffix_int("rep"));
    } else if (token.rfind("bch", 0) == 0) {
        const int n = suffix_int("bch");
        int m = 0;
        while ((1 << m) - 1 < n) ++m;
        require((1 << m) - 1 == n, ErrorKind::invalid_argument,
                "strategy '" + token + "': n must be 2^m - 1");
        BinaryField field(m);
        const BchCode code = build_bch_for_message_bits(field, message_bits);
        inst.book = bch_codebook(gray_messages(message_bits), code);
    } else if (token.rfind("hybrid", 0) == 0) {
        const int n = suffix_int("hybrid");
        const int shift_bits = 3;
        require(message_bits > shift_bits, ErrorKind::invalid_argument,
                "strategy '" + token + "': L too small for the hybrid split");
        const HybridParams params =
            make_hybrid_params(message_bits, message_bits - shift_bits, shift_bits, n);
        inst.book = hybrid_codebook(params, std::uint32_t(1) << message_bits);
    } else {
        raise(ErrorKind::invalid_argument, "unknown strategy '" + token + "'");
    }
    inst.decoder = make_decoder(inst.book);
    return inst;
}

void SweepTable::to_csv(std::ostream& out) const {
    out << "phi_a,phi_p,strategy,metric,value,n_iter,seed\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%s,%.17g,%ld,%llu\n", r.phi_a, r.phi_p,
                      r.strategy.c_str(), r.metric.c_str(), r.value, r.n_iter,
                      (unsigned long long)r.seed);
        out << buf;
    }
}

void SweepTable::to_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::io, "SweepTable: cannot open '" + path + "'");
    to_csv(out);
    require(out.good(), ErrorKind::io, "SweepTable: write failed for '" + path + "'");
}

SweepTable sweep_grid(const std::vector<std::string>& strategy_tokens, int message_bits,
                      const std::vector<double>& phi_a_values,
                      const std::vector<double>& phi_p_values, const FluxCondition& base,
                      const McConfig& cfg) {
    require(!strategy_tokens.empty(), ErrorKind::invalid_argument, "sweep_grid: no strategies");
    require(!phi_a_values.empty() && !phi_p_values.empty(), ErrorKind::invalid_argument,
            "sweep_grid: empty grid");

    std::vector<StrategyInstance> strategies;
    strategies.reserve(strategy_tokens.size());
    for (const auto& tok : strategy_tokens) strategies.push_back(make_strategy(tok, message_bits));

    SweepTable table;
    std::size_t point = 0;
    for (double phi_a : phi_a_values) {
        for (double phi_p : phi_p_values) {
            FluxCondition cond = base;
            cond.phi_a = phi_a;
            cond.phi_p = phi_p;
            const FlipProbs probs = flip_probabilities(cond);
            for (std::size_t si = 0; si < strategies.size(); ++si) {
                McConfig local = cfg;
                local.seed = stream_id(cfg.seed, point, si);
                const double value =
                    run_mc(strategies[si].book, *strategies[si].decoder, probs, local);
                table.rows.push_back({phi_a, phi_p, strategies[si].name,
                                      std::string(metric_name(cfg.metric)), value, cfg.n_iter,
                                      cfg.seed});
            }
            ++point;
        }
    }
    return table;
}

}  // namespace spsl
