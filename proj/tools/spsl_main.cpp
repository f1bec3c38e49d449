// spsl command line tool. Links the C API only.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spsl.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(spsl_status st, const std::string& what) {
    if (st != SPSL_OK)
        fail(kExitData, what + ": " + spsl_status_name(st) + ": " + spsl_last_error());
}

// Exposure accepts a plain value in seconds or an explicit us/ms/s suffix.
double parse_exposure(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail(kExitUsage, "bad exposure '" + text + "'");
    }
    const std::string suffix = text.substr(pos);
    if (suffix.empty() || suffix == "s") return v;
    if (suffix == "us") return v * 1e-6;
    if (suffix == "ms") return v * 1e-3;
    fail(kExitUsage, "bad exposure suffix '" + suffix + "' (use s, ms or us)");
}

// Grid values: either a comma list "10,100,1000" or a log range "lo:hi:count".
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo = 0, hi = 0;
        int count = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1 ||
            lo <= 0 || hi <= 0)
            fail(kExitUsage, "bad grid range '" + text + "' (want lo:hi:count, positive)");
        for (int i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : double(i) / double(count - 1);
            out.push_back(lo * std::pow(hi / lo, f));
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        try {
            out.push_back(std::stod(text.substr(pos, end - pos)));
        } catch (const std::exception&) {
            fail(kExitUsage, "bad grid value in '" + text + "'");
        }
        pos = end + 1;
    }
    if (out.empty()) fail(kExitUsage, "empty grid '" + text + "'");
    return out;
}

std::string default_out_dir() {
    const char* env = std::getenv("SPSL_OUT_DIR");
    return env && *env ? env : ".";
}

fs::path resolve_out(const std::string& name) {
    fs::path p(name);
    if (p.is_absolute() || p.has_parent_path()) return p;
    return fs::path(default_out_dir()) / p;
}

void write_manifest(const fs::path& path, const std::vector<std::string>& argv,
                    const json& params, uint64_t seed,
                    const std::vector<std::string>& outputs) {
    json m;
    m["command"] = argv.empty() ? "" : argv[0];
    m["argv"] = argv;
    m["parameters"] = params;
    m["seed"] = seed;
    m["tool_version"] = spsl_version();
    m["outputs"] = outputs;
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) fail(kExitData, "cannot write manifest " + path.string());
    out << m.dump(2) << '\n';
}

std::vector<std::string> collect_argv(int argc, char** argv) {
    std::vector<std::string> v;
    for (int i = 0; i < argc; ++i) v.emplace_back(argv[i]);
    return v;
}

struct CodebookHandle {
    spsl_codebook* ptr = nullptr;
    ~CodebookHandle() { spsl_codebook_free(ptr); }
};

struct DecoderHandle {
    spsl_decoder* ptr = nullptr;
    ~DecoderHandle() { spsl_decoder_free(ptr); }
};

struct SceneHandle {
    spsl_scene* ptr = nullptr;
    ~SceneHandle() { spsl_scene_free(ptr); }
};

// Build the codebook for `spsl lut` from explicit strategy + parameters.
void build_lut_codebook(const std::string& strategy, int L, int r, int n, int l_bch,
                        int l_shift, uint32_t columns, bool longrun_base,
                        CodebookHandle& book) {
    if (strategy == "gray") {
        check(spsl_codebook_gray(L, &book.ptr), "gray codebook");
    } else if (strategy == "longrun") {
        check(spsl_codebook_long_run_gray(L, &book.ptr), "long-run codebook");
    } else if (strategy == "repetition") {
        if (r < 1) fail(kExitUsage, "repetition needs --r >= 1");
        CodebookHandle base;
        if (longrun_base)
            check(spsl_codebook_long_run_gray(L, &base.ptr), "long-run base");
        else
            check(spsl_codebook_gray(L, &base.ptr), "gray base");
        check(spsl_codebook_repetition(base.ptr, r, &book.ptr), "repetition codebook");
    } else if (strategy == "bch") {
        if (n < 3) fail(kExitUsage, "bch needs --n (codeword length 2^m - 1)");
        check(spsl_codebook_bch(L, n, longrun_base ? 1 : 0, &book.ptr), "bch codebook");
    } else if (strategy == "shift") {
        if (l_shift < 1) fail(kExitUsage, "shift needs --Lshift >= 1");
        check(spsl_codebook_binary_shift(l_shift, columns, &book.ptr), "shift codebook");
    } else if (strategy == "hybrid") {
        if (n < 3) fail(kExitUsage, "hybrid needs --n (BCH codeword length)");
        check(spsl_codebook_hybrid(L, l_bch, l_shift, n, columns, &book.ptr),
              "hybrid codebook");
    } else {
        fail(kExitUsage, "unknown strategy '" + strategy + "'");
    }
}

int cmd_lut(const std::vector<std::string>& argv, const std::string& strategy, int L, int r,
            int n, int l_bch, int l_shift, uint32_t columns, bool longrun_base,
            const std::string& out_name) {
    CodebookHandle book;
    build_lut_codebook(strategy, L, r, n, l_bch, l_shift, columns, longrun_base, book);
    const fs::path out = resolve_out(out_name);
    check(spsl_codebook_save(book.ptr, out.string().c_str()), "save LUT");
    int stripe = 0;
    check(spsl_codebook_stripe_width(book.ptr, &stripe), "stripe width");
    std::printf("strategy=%s T=%u C=%u stripe_width=%d file=%s\n",
                spsl_codebook_strategy(book.ptr), spsl_codebook_frames(book.ptr),
                spsl_codebook_columns(book.ptr), stripe, out.string().c_str());
    json params = {{"strategy", strategy}, {"L", L},          {"r", r},
                   {"n", n},               {"Lbch", l_bch},   {"Lshift", l_shift},
                   {"columns", columns},   {"longrun_base", longrun_base}};
    write_manifest(out.string() + ".manifest.json", argv, params, 0, {out.string()});
    return kExitOk;
}

int cmd_sweep(const std::vector<std::string>& argv, const std::string& strategies, int L,
              const std::string& phi_a_text, const std::string& phi_p_text,
              const std::string& t_exp_text, double r_q, long n_iter, uint64_t seed,
              const std::string& metric, int threads, const std::string& out_name) {
    if (strategies.empty()) fail(kExitUsage, "empty strategy list");
    const auto phi_a = parse_grid(phi_a_text);
    const auto phi_p = parse_grid(phi_p_text);
    const double t_exp = parse_exposure(t_exp_text);
    int metric_id = 0;
    if (metric == "exact") metric_id = 0;
    else if (metric == "rmse") metric_id = 1;
    else fail(kExitUsage, "metric must be exact or rmse");

    const fs::path out = resolve_out(out_name);
    spsl_mc_config cfg{n_iter, seed, metric_id, threads};
    check(spsl_sweep_csv(strategies.c_str(), L, phi_a.data(), phi_a.size(), phi_p.data(),
                         phi_p.size(), t_exp, r_q, &cfg, out.string().c_str()),
          "sweep");
    std::printf("sweep: %zu x %zu grid, strategies=%s, n_iter=%ld -> %s\n", phi_a.size(),
                phi_p.size(), strategies.c_str(), n_iter, out.string().c_str());
    json params = {{"strategies", strategies}, {"L", L},        {"phi_a", phi_a},
                   {"phi_p", phi_p},           {"t_exp", t_exp}, {"r_q", r_q},
                   {"n_iter", n_iter},         {"metric", metric}, {"threads", threads}};
    write_manifest(out.string() + ".manifest.json", argv, params, seed, {out.string()});
    return kExitOk;
}

// Sweep-style strategy tokens for scene/decode commands.
void build_strategy_codebook(const std::string& token, int L, CodebookHandle& book) {
    auto suffix = [&](const char* prefix) {
        return std::atoi(token.c_str() + std::strlen(prefix));
    };
    if (token == "gray") check(spsl_codebook_gray(L, &book.ptr), "codebook");
    else if (token == "longrun") check(spsl_codebook_long_run_gray(L, &book.ptr), "codebook");
    else if (token.rfind("longrun-rep", 0) == 0) {
        CodebookHandle base;
        check(spsl_codebook_long_run_gray(L, &base.ptr), "codebook");
        check(spsl_codebook_repetition(base.ptr, suffix("longrun-rep"), &book.ptr), "codebook");
    } else if (token.rfind("rep", 0) == 0) {
        CodebookHandle base;
        check(spsl_codebook_gray(L, &base.ptr), "codebook");
        check(spsl_codebook_repetition(base.ptr, suffix("rep"), &book.ptr), "codebook");
    } else if (token.rfind("bch", 0) == 0) {
        check(spsl_codebook_bch(L, suffix("bch"), 0, &book.ptr), "codebook");
    } else if (token.rfind("hybrid", 0) == 0) {
        check(spsl_codebook_hybrid(L, L - 3, 3, suffix("hybrid"), uint32_t(1) << L, &book.ptr),
              "codebook");
    } else {
        fail(kExitUsage, "unknown strategy token '" + token + "'");
    }
}

int cmd_scene(const std::vector<std::string>& argv, const std::string& kind,
              const std::string& strategy, int L, double phi_a, double phi_p,
              const std::string& t_exp_text, double r_q, double defocus, uint64_t seed,
              int width, int height, int upsample, uint32_t columns, double focal,
              double baseline, double z_near, double z_far, double radius, double albedo,
              int threads, bool export_frames, const std::string& out_name) {
    const double t_exp = parse_exposure(t_exp_text);
    const fs::path out_dir = resolve_out(out_name);

    spsl_scene_params sp{width,  height, focal,  baseline, upsample,
                         columns, z_near, z_far,  radius,   albedo};
    SceneHandle scene;
    check(spsl_scene_create(kind.c_str(), &sp, &scene.ptr), "scene");

    CodebookHandle book;
    build_strategy_codebook(strategy, L, book);
    DecoderHandle decoder;
    check(spsl_decoder_create(book.ptr, &decoder.ptr), "decoder");

    spsl_flux flux{phi_a, phi_p, t_exp, r_q};
    spsl_depth_metrics metrics{};
    check(spsl_pipeline_run(scene.ptr, book.ptr, decoder.ptr, &flux, defocus, seed, threads,
                            out_dir.string().c_str(), &metrics),
          "pipeline");
    if (export_frames)
        check(spsl_scene_render_frames(scene.ptr, book.ptr, &flux, defocus, seed, threads,
                                       (out_dir / "frames").string().c_str()),
              "render frames");

    std::printf("scene=%s strategy=%s T=%u rmse_all=%.3fmm inliers=%.4f rmse_inliers=%.3fmm "
                "valid=%.4f mismatches=%ld\n",
                kind.c_str(), strategy.c_str(), spsl_codebook_frames(book.ptr),
                metrics.rmse_all_mm, metrics.inlier_fraction, metrics.rmse_inliers_mm,
                metrics.valid_fraction, metrics.mismatches);

    json params = {{"kind", kind},       {"strategy", strategy}, {"L", L},
                   {"phi_a", phi_a},     {"phi_p", phi_p},       {"t_exp", t_exp},
                   {"r_q", r_q},         {"defocus", defocus},   {"width", width},
                   {"height", height},   {"upsample", upsample}, {"columns", columns},
                   {"focal", focal},     {"baseline", baseline}, {"z_near", z_near},
                   {"z_far", z_far},     {"radius", radius},     {"albedo", albedo},
                   {"threads", threads}, {"export_frames", export_frames}};
    std::vector<std::string> outputs = {(out_dir / "correspondence.pgm").string(),
                                        (out_dir / "depth.txt").string(),
                                        (out_dir / "metrics.csv").string()};
    if (export_frames) outputs.push_back((out_dir / "frames").string());
    write_manifest(out_dir / "manifest.json", argv, params, seed, outputs);
    return kExitOk;
}

int cmd_bench(const std::vector<std::string>& argv, uint32_t frames, uint32_t codewords,
              long queries, long naive_sample, uint64_t seed, int threads,
              const std::string& out_name) {
    spsl_bench_report rep{};
    const spsl_status st =
        spsl_bench_mdd(frames, codewords, queries, naive_sample, seed, threads, &rep);
    if (st != SPSL_OK)
        fail(kExitData, std::string("bench aborted: ") + spsl_status_name(st) + ": " +
                            spsl_last_error());
    const fs::path out = resolve_out(out_name);
    {
        std::ofstream csv(out, std::ios::binary);
        if (!csv.good()) fail(kExitData, "cannot write " + out.string());
        csv << "frames,codewords,queries,packed_ns_per_query,naive_ns_per_query,speedup,"
               "packed_total_ms\n";
        char buf[256];
        std::snprintf(buf, sizeof buf, "%u,%u,%ld,%.1f,%.1f,%.2f,%.3f\n", rep.frames,
                      rep.codewords, rep.queries, rep.packed_ns_per_query,
                      rep.naive_ns_per_query, rep.speedup, rep.packed_total_ms);
        csv << buf;
    }
    std::printf("bench: %ld queries x %u codewords x %u bits: packed %.1f ns/query, naive "
                "%.1f ns/query, speedup %.2fx, total %.3f ms -> %s\n",
                rep.queries, rep.codewords, rep.frames, rep.packed_ns_per_query,
                rep.naive_ns_per_query, rep.speedup, rep.packed_total_ms,
                out.string().c_str());
    json params = {{"frames", frames},
                   {"codewords", codewords},
                   {"queries", queries},
                   {"naive_sample", naive_sample},
                   {"threads", threads}};
    write_manifest(out.string() + ".manifest.json", argv, params, seed, {out.string()});
    return kExitOk;
}

int cmd_decode(const std::vector<std::string>& argv, const std::string& frames_dir,
               const std::string& lut_path, bool force_mdd, int threads,
               const std::string& out_name) {
    CodebookHandle book;
    check(spsl_codebook_load(lut_path.c_str(), &book.ptr), "load LUT");
    DecoderHandle decoder;
    if (force_mdd)
        check(spsl_decoder_create_mdd(book.ptr, &decoder.ptr), "decoder");
    else
        check(spsl_decoder_create(book.ptr, &decoder.ptr), "decoder");
    const fs::path out = resolve_out(out_name);
    check(spsl_decode_frames(decoder.ptr, frames_dir.c_str(), threads,
                             out.string().c_str()),
          "decode frames");
    std::printf("decoded %s with %s -> %s\n", frames_dir.c_str(),
                spsl_codebook_strategy(book.ptr), out.string().c_str());
    json params = {{"frames", frames_dir}, {"lut", lut_path}, {"mdd", force_mdd}};
    write_manifest(out.string() + ".manifest.json", argv, params, 0, {out.string()});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-Photon Structured Light toolkit"};
    app.require_subcommand(1);
    const auto argv_vec = collect_argv(argc, argv);

    int threads = 0;  // 0 = hardware concurrency
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    // lut
    auto* lut = app.add_subcommand("lut", "generate a pattern look-up table");
    std::string lut_strategy = "gray", lut_out = "lut.txt";
    int lut_L = 10, lut_r = 0, lut_n = 0, lut_lbch = 7, lut_lshift = 3;
    uint32_t lut_columns = 1024;
    bool lut_longrun_base = false;
    lut->add_option("--strategy", lut_strategy,
                    "gray|longrun|repetition|bch|shift|hybrid")->required();
    lut->add_option("--L", lut_L, "message bits");
    lut->add_option("--r", lut_r, "repetition factor");
    lut->add_option("--n", lut_n, "BCH codeword length (2^m - 1)");
    lut->add_option("--Lbch", lut_lbch, "hybrid MSB bits");
    lut->add_option("--Lshift", lut_lshift, "hybrid/shift LSB bits");
    lut->add_option("--C", lut_columns, "columns (shift/hybrid)");
    lut->add_flag("--longrun-base", lut_longrun_base,
                  "use long-run Gray messages (repetition/bch)");
    lut->add_option("-o,--out", lut_out, "output file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo error sweep over a flux grid");
    std::string sweep_strategies, sweep_phia = "10:10000:8", sweep_phip = "1000:100000:8";
    std::string sweep_texp = "1e-4", sweep_metric = "exact", sweep_out = "sweep.csv";
    int sweep_L = 10;
    long sweep_iter = 100;
    double sweep_rq = 0.0;
    uint64_t sweep_seed = 1;
    sweep->add_option("--strategies", sweep_strategies,
                      "comma list: gray|longrun|rep<r>|longrun-rep<r>|bch<n>|hybrid<n>")
        ->required();
    sweep->add_option("--L", sweep_L, "message bits");
    sweep->add_option("--phi-a", sweep_phia, "ambient flux grid (list or lo:hi:count)");
    sweep->add_option("--phi-p", sweep_phip, "projector flux grid (list or lo:hi:count)");
    sweep->add_option("--t-exp", sweep_texp, "exposure (s, or with us/ms suffix)");
    sweep->add_option("--r-q", sweep_rq, "dark count rate (counts/s)");
    sweep->add_option("--n-iter", sweep_iter, "Monte-Carlo iterations per message");
    sweep->add_option("--seed", sweep_seed, "random seed");
    sweep->add_option("--metric", sweep_metric, "exact|rmse");
    sweep->add_option("-o,--out", sweep_out, "output CSV");

    // scene
    auto* scene = app.add_subcommand("scene", "synthetic scene pipeline");
    std::string scene_kind = "vgroove", scene_strategy = "hybrid63", scene_texp = "1e-4";
    std::string scene_out = "scene-out";
    int scene_L = 10, scene_w = 512, scene_h = 64, scene_up = 1;
    uint32_t scene_cols = 1024;
    double scene_phia = 212.2, scene_phip = 14929.0, scene_rq = 0.0, scene_defocus = 0.0;
    double scene_focal = 1600.0, scene_baseline = 0.104;
    double scene_znear = 0.45, scene_zfar = 0.60, scene_radius = 0.08, scene_albedo = 1.0;
    uint64_t scene_seed = 1;
    bool scene_export = false;
    scene->add_option("--kind", scene_kind, "plane|sphere|vgroove")->required();
    scene->add_option("--strategy", scene_strategy, "strategy token (see sweep)")->required();
    scene->add_option("--L", scene_L, "message bits");
    scene->add_option("--phi-a", scene_phia, "ambient flux (photons/s)");
    scene->add_option("--phi-p", scene_phip, "projector flux (photons/s)");
    scene->add_option("--t-exp", scene_texp, "exposure (s, or with us/ms suffix)");
    scene->add_option("--r-q", scene_rq, "dark count rate");
    scene->add_option("--defocus", scene_defocus, "Gaussian defocus sigma (pixels)");
    scene->add_option("--seed", scene_seed, "random seed");
    scene->add_option("--width", scene_w, "camera width");
    scene->add_option("--height", scene_h, "camera height");
    scene->add_option("--upsample", scene_up, "camera pixels per projector column");
    scene->add_option("--columns", scene_cols, "projector columns");
    scene->add_option("--focal", scene_focal, "focal length (pixels)");
    scene->add_option("--baseline", scene_baseline, "baseline (meters)");
    scene->add_option("--z-near", scene_znear, "near depth (m)");
    scene->add_option("--z-far", scene_zfar, "far depth (m)");
    scene->add_option("--radius", scene_radius, "sphere radius (m)");
    scene->add_option("--albedo", scene_albedo, "albedo (0,1]");
    scene->add_flag("--export-frames", scene_export, "also dump the PBM frame stack");
    scene->add_option("-o,--out", scene_out, "output directory");

    // bench
    auto* bench = app.add_subcommand("bench", "decoder throughput benchmark");
    uint32_t bench_T = 255, bench_C = 1024;
    long bench_q = 131072, bench_naive = 8192;
    uint64_t bench_seed = 1;
    std::string bench_out = "bench.csv";
    bench->add_option("--T", bench_T, "codeword bits");
    bench->add_option("--C", bench_C, "codewords");
    bench->add_option("--queries", bench_q, "query count");
    bench->add_option("--naive-sample", bench_naive, "queries timed with the naive engine");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("-o,--out", bench_out, "output CSV");

    // decode
    auto* decode = app.add_subcommand("decode", "decode an exported PBM frame stack");
    std::string dec_frames, dec_lut, dec_out = "correspondence.pgm";
    bool dec_mdd = false;
    decode->add_option("--frames", dec_frames, "frame directory")->required();
    decode->add_option("--lut", dec_lut, "LUT file")->required();
    decode->add_flag("--mdd", dec_mdd, "force minimum-distance decoding");
    decode->add_option("-o,--out", dec_out, "output PGM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (lut->parsed())
            return cmd_lut(argv_vec, lut_strategy, lut_L, lut_r, lut_n, lut_lbch, lut_lshift,
                           lut_columns, lut_longrun_base, lut_out);
        if (sweep->parsed())
            return cmd_sweep(argv_vec, sweep_strategies, sweep_L, sweep_phia, sweep_phip,
                             sweep_texp, sweep_rq, sweep_iter, sweep_seed, sweep_metric,
                             threads, sweep_out);
        if (scene->parsed())
            return cmd_scene(argv_vec, scene_kind, scene_strategy, scene_L, scene_phia,
                             scene_phip, scene_texp, scene_rq, scene_defocus, scene_seed,
                             scene_w, scene_h, scene_up, scene_cols, scene_focal,
                             scene_baseline, scene_znear, scene_zfar, scene_radius,
                             scene_albedo, threads, scene_export, scene_out);
        if (bench->parsed())
            return cmd_bench(argv_vec, bench_T, bench_C, bench_q, bench_naive, bench_seed,
                             threads, bench_out);
        if (decode->parsed())
            return cmd_decode(argv_vec, dec_frames, dec_lut, dec_mdd, threads, dec_out);
    } catch (const CliError& e) {
        std::fprintf(stderr, "spsl: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "spsl: %s\n", e.what());
        return kExitData;
    }
    return kExitUsage;
}
