#include "spsl.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "bch.hpp"
#include "bench.hpp"
#include "codebook.hpp"
#include "decode.hpp"
#include "errors.hpp"
#include "gray.hpp"
#include "montecarlo.hpp"
#include "photon_stats.hpp"
#include "pipeline.hpp"
#include "scene.hpp"

struct spsl_codebook {
    spsl::Codebook book;
};

struct spsl_decoder {
    std::unique_ptr<spsl::ColumnDecoder> impl;
    std::uint32_t frames;
};

struct spsl_scene {
    spsl::SceneSpec scene;
};

namespace {

thread_local std::string g_last_error;

spsl_status status_of(const spsl::Error& e) {
    switch (e.kind()) {
        case spsl::ErrorKind::invalid_argument: return SPSL_ERR_INVALID_ARGUMENT;
        case spsl::ErrorKind::construction: return SPSL_ERR_CONSTRUCTION;
        case spsl::ErrorKind::io: return SPSL_ERR_IO;
        case spsl::ErrorKind::parse: return SPSL_ERR_PARSE;
    }
    return SPSL_ERR_INTERNAL;
}

template <typename Fn>
spsl_status guarded(Fn&& fn) {
    try {
        fn();
        return SPSL_OK;
    } catch (const spsl::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SPSL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SPSL_ERR_INTERNAL;
    }
}

spsl::FluxCondition to_cpp(const spsl_flux& f) { return {f.phi_a, f.phi_p, f.t_exp, f.r_q}; }
spsl::FlipProbs to_cpp(const spsl_flip_probs& p) { return {p.p_bright, p.p_dark}; }

void require_arg(bool ok, const char* msg) {
    spsl::require(ok, spsl::ErrorKind::invalid_argument, msg);
}

}  // namespace

extern "C" {

const char* spsl_status_name(spsl_status status) {
    switch (status) {
        case SPSL_OK: return "ok";
        case SPSL_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case SPSL_ERR_CONSTRUCTION: return "construction";
        case SPSL_ERR_IO: return "io";
        case SPSL_ERR_PARSE: return "parse";
        case SPSL_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* spsl_last_error(void) { return g_last_error.c_str(); }

const char* spsl_version(void) { return "0.1.0"; }

spsl_status spsl_flip_probabilities(const spsl_flux* flux, spsl_flip_probs* out) {
    return guarded([&] {
        require_arg(flux && out, "null argument");
        const auto p = spsl::flip_probabilities(to_cpp(*flux));
        out->p_bright = p.p_bright;
        out->p_dark = p.p_dark;
    });
}

spsl_status spsl_gray_error(const spsl_flip_probs* probs, int code_length, double* out) {
    return guarded([&] {
        require_arg(probs && out, "null argument");
        *out = spsl::gray_error(to_cpp(*probs), code_length);
    });
}

spsl_status spsl_repetition_error(const spsl_flip_probs* probs, int code_length,
                                  int repetitions, double* out) {
    return guarded([&] {
        require_arg(probs && out, "null argument");
        *out = spsl::repetition_error(to_cpp(*probs), code_length, repetitions);
    });
}

spsl_status spsl_binary_shift_error_bound(const spsl_flip_probs* probs, int l_shift,
                                          double* out) {
    return guarded([&] {
        require_arg(probs && out, "null argument");
        *out = spsl::binary_shift_error_bound(to_cpp(*probs), l_shift);
    });
}

spsl_status spsl_codebook_gray(int bits, spsl_codebook** out) {
    return guarded([&] {
        require_arg(out, "null out");
        *out = new spsl_codebook{spsl::gray_codebook(bits)};
    });
}

spsl_status spsl_codebook_long_run_gray(int bits, spsl_codebook** out) {
    return guarded([&] {
        require_arg(out, "null out");
        *out = new spsl_codebook{spsl::long_run_gray_codebook(bits)};
    });
}

spsl_status spsl_codebook_repetition(const spsl_codebook* base, int repetitions,
                                     spsl_codebook** out) {
    return guarded([&] {
        require_arg(base && out, "null argument");
        *out = new spsl_codebook{spsl::repetition_codebook(base->book, repetitions)};
    });
}

spsl_status spsl_codebook_bch(int bits, int codeword_length, int long_run,
                              spsl_codebook** out) {
    return guarded([&] {
        require_arg(out, "null out");
        int m = 0;
        while ((1 << m) - 1 < codeword_length) ++m;
        require_arg((1 << m) - 1 == codeword_length, "codeword length must be 2^m - 1");
        spsl::BinaryField field(m);
        const spsl::BchCode code = spsl::build_bch_for_message_bits(field, bits);
        const auto messages =
            long_run ? spsl::long_run_gray_messages(bits) : spsl::gray_messages(bits);
        *out = new spsl_codebook{spsl::bch_codebook(
            messages, code,
            long_run ? spsl::Strategy::long_run_gray : spsl::Strategy::gray)};
    });
}

spsl_status spsl_codebook_binary_shift(int shift_bits, uint32_t columns,
                                       spsl_codebook** out) {
    return guarded([&] {
        require_arg(out, "null out");
        *out = new spsl_codebook{spsl::binary_shift_codebook(shift_bits, columns)};
    });
}

spsl_status spsl_codebook_hybrid(int bits, int bch_bits, int shift_bits, int codeword_length,
                                 uint32_t columns, spsl_codebook** out) {
    return guarded([&] {
        require_arg(out, "null out");
        const auto params =
            spsl::make_hybrid_params(bits, bch_bits, shift_bits, codeword_length);
        *out = new spsl_codebook{spsl::hybrid_codebook(params, columns)};
    });
}

void spsl_codebook_free(spsl_codebook* book) { delete book; }

uint32_t spsl_codebook_columns(const spsl_codebook* book) {
    return book ? book->book.columns : 0;
}

uint32_t spsl_codebook_frames(const spsl_codebook* book) {
    return book ? book->book.frames : 0;
}

const char* spsl_codebook_strategy(const spsl_codebook* book) {
    return book ? spsl::strategy_name(book->book.strategy).data() : "?";
}

spsl_status spsl_codebook_stripe_width(const spsl_codebook* book, int* out) {
    return guarded([&] {
        require_arg(book && out, "null argument");
        *out = spsl::stripe_width(book->book);
    });
}

int spsl_codebook_pattern_bit(const spsl_codebook* book, uint32_t frame, uint32_t column) {
    if (!book || frame >= book->book.frames || column >= book->book.columns) return -1;
    return book->book.pattern_bit(frame, column) ? 1 : 0;
}

spsl_status spsl_codebook_save(const spsl_codebook* book, const char* path) {
    return guarded([&] {
        require_arg(book && path, "null argument");
        spsl::serialize_lut(book->book, path);
    });
}

spsl_status spsl_codebook_load(const char* path, spsl_codebook** out) {
    return guarded([&] {
        require_arg(path && out, "null argument");
        *out = new spsl_codebook{spsl::deserialize_lut(path)};
    });
}

spsl_status spsl_bch_bounded_error(const spsl_flip_probs* probs, const spsl_codebook* book,
                                   double* out) {
    return guarded([&] {
        require_arg(probs && book && out, "null argument");
        require_arg(book->book.strategy == spsl::Strategy::bch, "codebook is not bch");
        std::vector<std::pair<int, int>> weights;
        weights.reserve(book->book.table.size());
        for (const auto& cw : book->book.table) {
            const int ones = int(cw.popcount());
            weights.emplace_back(ones, int(cw.size()) - ones);
        }
        *out = spsl::bch_bounded_error(to_cpp(*probs), book->book.meta_int("d"), weights);
    });
}

spsl_status spsl_decoder_create(const spsl_codebook* book, spsl_decoder** out) {
    return guarded([&] {
        require_arg(book && out, "null argument");
        *out = new spsl_decoder{spsl::make_decoder(book->book), book->book.frames};
    });
}

spsl_status spsl_decoder_create_mdd(const spsl_codebook* book, spsl_decoder** out) {
    return guarded([&] {
        require_arg(book && out, "null argument");
        *out = new spsl_decoder{spsl::make_mdd_decoder(book->book), book->book.frames};
    });
}

void spsl_decoder_free(spsl_decoder* decoder) { delete decoder; }

spsl_status spsl_decode_batch(const spsl_decoder* decoder, const uint8_t* queries,
                              size_t count, uint32_t frames, uint32_t* columns_out,
                              uint32_t* distances_out) {
    return guarded([&] {
        require_arg(decoder && queries && columns_out, "null argument");
        require_arg(frames == decoder->frames, "frames mismatch with the decoder's codebook");
        std::vector<spsl::BitVec> qs;
        qs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            spsl::BitVec q(frames);
            for (uint32_t t = 0; t < frames; ++t)
                q.set(t, queries[i * frames + t] != 0);
            qs.push_back(std::move(q));
        }
        const spsl::DecodeResult res = decoder->impl->decode_batch(qs);
        for (size_t i = 0; i < count; ++i) {
            columns_out[i] = res.column[i];
            if (distances_out) distances_out[i] = res.distance[i];
        }
    });
}

spsl_status spsl_mc_run(const spsl_codebook* book, const spsl_decoder* decoder,
                        const spsl_flip_probs* probs, const spsl_mc_config* cfg,
                        double* out) {
    return guarded([&] {
        require_arg(book && decoder && probs && cfg && out, "null argument");
        spsl::McConfig c{cfg->n_iter, cfg->seed,
                         cfg->metric ? spsl::McMetric::rmse : spsl::McMetric::exact_mismatch,
                         cfg->threads};
        *out = spsl::run_mc(book->book, *decoder->impl, to_cpp(*probs), c);
    });
}

spsl_status spsl_sweep_csv(const char* strategies, int bits, const double* phi_a,
                           size_t phi_a_count, const double* phi_p, size_t phi_p_count,
                           double t_exp, double r_q, const spsl_mc_config* cfg,
                           const char* out_csv_path) {
    return guarded([&] {
        require_arg(strategies && phi_a && phi_p && cfg && out_csv_path, "null argument");
        std::vector<std::string> tokens;
        std::string s(strategies);
        for (size_t pos = 0; pos < s.size();) {
            const size_t comma = s.find(',', pos);
            const size_t end = comma == std::string::npos ? s.size() : comma;
            if (end > pos) tokens.push_back(s.substr(pos, end - pos));
            pos = end + 1;
        }
        spsl::McConfig c{cfg->n_iter, cfg->seed,
                         cfg->metric ? spsl::McMetric::rmse : spsl::McMetric::exact_mismatch,
                         cfg->threads};
        spsl::FluxCondition base;
        base.t_exp = t_exp;
        base.r_q = r_q;
        const auto table = spsl::sweep_grid(
            tokens, bits, std::vector<double>(phi_a, phi_a + phi_a_count),
            std::vector<double>(phi_p, phi_p + phi_p_count), base, c);
        table.to_csv(std::string(out_csv_path));
    });
}

spsl_status spsl_scene_create(const char* kind, const spsl_scene_params* params,
                              spsl_scene** out) {
    return guarded([&] {
        require_arg(kind && params && out, "null argument");
        spsl::SceneParams p;
        p.width = params->width;
        p.height = params->height;
        p.focal_px = params->focal_px;
        p.baseline_m = params->baseline_m;
        p.upsample = params->upsample;
        p.columns = params->columns;
        p.z_near = params->z_near;
        p.z_far = params->z_far;
        p.radius = params->radius;
        p.albedo = params->albedo;
        *out = new spsl_scene{spsl::make_scene(spsl::scene_kind_from_name(kind), p)};
    });
}

void spsl_scene_free(spsl_scene* scene) { delete scene; }

spsl_status spsl_pipeline_run(const spsl_scene* scene, const spsl_codebook* book,
                              const spsl_decoder* decoder, const spsl_flux* flux,
                              double defocus_sigma, uint64_t seed, int threads,
                              const char* out_dir, spsl_depth_metrics* out) {
    return guarded([&] {
        require_arg(scene && book && decoder && flux && out, "null argument");
        const spsl::PipelineResult r =
            spsl::run_pipeline(scene->scene, book->book, *decoder->impl, to_cpp(*flux),
                               defocus_sigma, seed, threads);
        out->rmse_all_mm = r.metrics.rmse_all_mm;
        out->inlier_fraction = r.metrics.inlier_fraction;
        out->rmse_inliers_mm = r.metrics.rmse_inliers_mm;
        out->valid_fraction = r.metrics.valid_fraction;
        out->mismatches = long(r.mismatches);
        out->inliers_empty = r.metrics.inliers_empty ? 1 : 0;
        if (out_dir) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            spsl::write_correspondence_pgm(r.correspondence, scene->scene.width,
                                           scene->scene.height,
                                           (fs::path(out_dir) / "correspondence.pgm").string());
            spsl::write_depth_mm(r.depth, (fs::path(out_dir) / "depth.txt").string());
            std::ofstream csv(fs::path(out_dir) / "metrics.csv");
            spsl::require(csv.good(), spsl::ErrorKind::io, "cannot write metrics.csv");
            csv << "rmse_all_mm,inlier_fraction,rmse_inliers_mm,valid_fraction,mismatches\n";
            char buf[160];
            std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.6g,%zu\n", r.metrics.rmse_all_mm,
                          r.metrics.inlier_fraction, r.metrics.rmse_inliers_mm,
                          r.metrics.valid_fraction, r.mismatches);
            csv << buf;
        }
    });
}

spsl_status spsl_scene_render_frames(const spsl_scene* scene, const spsl_codebook* book,
                                     const spsl_flux* flux, double defocus_sigma,
                                     uint64_t seed, int threads, const char* out_dir) {
    return guarded([&] {
        require_arg(scene && book && flux && out_dir, "null argument");
        const spsl::BinaryFrameStack stack = spsl::render_frames(
            scene->scene, book->book, to_cpp(*flux), defocus_sigma, seed, threads);
        spsl::export_frames_pbm(stack, out_dir);
    });
}

spsl_status spsl_decode_frames(const spsl_decoder* decoder, const char* frames_dir,
                               int threads, const char* out_pgm_path) {
    return guarded([&] {
        require_arg(decoder && frames_dir && out_pgm_path, "null argument");
        const spsl::BinaryFrameStack stack = spsl::import_frames_pbm(frames_dir);
        require_arg(stack.frames == decoder->frames,
                    "frame count mismatch with the decoder's codebook");
        const auto columns = spsl::decode_stack(stack, *decoder->impl, threads);
        spsl::write_correspondence_pgm(columns, stack.width, stack.height, out_pgm_path);
    });
}

spsl_status spsl_bench_mdd(uint32_t frames, uint32_t codewords, long queries,
                           long naive_sample, uint64_t seed, int threads,
                           spsl_bench_report* out) {
    return guarded([&] {
        require_arg(out, "null out");
        const spsl::BenchReport r =
            spsl::bench_mdd(frames, codewords, queries, naive_sample, seed, threads);
        out->packed_ns_per_query = r.packed_ns_per_query;
        out->naive_ns_per_query = r.naive_ns_per_query;
        out->speedup = r.speedup;
        out->packed_total_ms = r.packed_total_ms;
        out->queries = r.queries;
        out->codewords = r.codewords;
        out->frames = r.frames;
    });
}

}  // extern "C"
