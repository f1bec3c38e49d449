/* spsl - Single-Photon Structured Light toolkit.
 *
 * C API over the C++ core: opaque handles plus status codes. Every function
 * returns SPSL_OK on success; on failure spsl_last_error() carries a
 * thread-local message describing what went wrong.
 */
#ifndef SPSL_H
#define SPSL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spsl_status {
    SPSL_OK = 0,
    SPSL_ERR_INVALID_ARGUMENT = 1,
    SPSL_ERR_CONSTRUCTION = 2,
    SPSL_ERR_IO = 3,
    SPSL_ERR_PARSE = 4,
    SPSL_ERR_INTERNAL = 5
} spsl_status;

const char* spsl_status_name(spsl_status status);
const char* spsl_last_error(void);
const char* spsl_version(void);

/* ---- photon statistics ------------------------------------------------- */

typedef struct spsl_flux {
    double phi_a;  /* ambient photo-electron rate, photons/s */
    double phi_p;  /* projector rate at full brightness, photons/s */
    double t_exp;  /* exposure, s */
    double r_q;    /* dark count rate, counts/s */
} spsl_flux;

typedef struct spsl_flip_probs {
    double p_bright;  /* lit pixel reads 0 */
    double p_dark;    /* unlit pixel reads 1 */
} spsl_flip_probs;

spsl_status spsl_flip_probabilities(const spsl_flux* flux, spsl_flip_probs* out);
spsl_status spsl_gray_error(const spsl_flip_probs* probs, int code_length, double* out);
spsl_status spsl_repetition_error(const spsl_flip_probs* probs, int code_length,
                                  int repetitions, double* out);
spsl_status spsl_binary_shift_error_bound(const spsl_flip_probs* probs, int l_shift,
                                          double* out);

/* ---- codebooks ---------------------------------------------------------- */

typedef struct spsl_codebook spsl_codebook;

spsl_status spsl_codebook_gray(int bits, spsl_codebook** out);
spsl_status spsl_codebook_long_run_gray(int bits, spsl_codebook** out);
spsl_status spsl_codebook_repetition(const spsl_codebook* base, int repetitions,
                                     spsl_codebook** out);
/* BCH over Gray messages of `bits` bits; n = 2^m - 1 picks the field, the code
 * is the standard one with the largest distance whose k >= bits, shortened to
 * bits. long_run != 0 uses the long-run Gray message order instead. */
spsl_status spsl_codebook_bch(int bits, int codeword_length, int long_run,
                              spsl_codebook** out);
spsl_status spsl_codebook_binary_shift(int shift_bits, uint32_t columns,
                                       spsl_codebook** out);
spsl_status spsl_codebook_hybrid(int bits, int bch_bits, int shift_bits, int codeword_length,
                                 uint32_t columns, spsl_codebook** out);
void spsl_codebook_free(spsl_codebook* book);

uint32_t spsl_codebook_columns(const spsl_codebook* book);
uint32_t spsl_codebook_frames(const spsl_codebook* book);
const char* spsl_codebook_strategy(const spsl_codebook* book);
spsl_status spsl_codebook_stripe_width(const spsl_codebook* book, int* out);
/* Pattern bit of frame t, column c (0/1), or -1 on range error. */
int spsl_codebook_pattern_bit(const spsl_codebook* book, uint32_t frame, uint32_t column);

spsl_status spsl_codebook_save(const spsl_codebook* book, const char* path);
spsl_status spsl_codebook_load(const char* path, spsl_codebook** out);

/* ---- bounded-distance closed form (needs the codebook's weights) -------- */

/* Closed-form bounded-distance decoding error for a bch codebook. */
spsl_status spsl_bch_bounded_error(const spsl_flip_probs* probs, const spsl_codebook* book,
                                   double* out);

/* ---- decoding ----------------------------------------------------------- */

typedef struct spsl_decoder spsl_decoder;

/* Strategy-appropriate decoder for the book (MDD for bch, split decoding for
 * hybrid, majority vote for repetition, ...). */
spsl_status spsl_decoder_create(const spsl_codebook* book, spsl_decoder** out);
/* Force plain minimum-distance decoding over the full table. */
spsl_status spsl_decoder_create_mdd(const spsl_codebook* book, spsl_decoder** out);
void spsl_decoder_free(spsl_decoder* decoder);

/* Decode `count` queries of T bits each; queries[i*frames + t] is bit t
 * (0/1 bytes). columns_out[i] receives the decoded column (UINT32_MAX for
 * failure); distances_out may be NULL. */
spsl_status spsl_decode_batch(const spsl_decoder* decoder, const uint8_t* queries,
                              size_t count, uint32_t frames, uint32_t* columns_out,
                              uint32_t* distances_out);

/* ---- Monte-Carlo sweeps -------------------------------------------------- */

typedef struct spsl_mc_config {
    long n_iter;
    uint64_t seed;
    int metric;   /* 0 = exact mismatch, 1 = RMSE in correspondence */
    int threads;  /* <= 0 selects hardware concurrency */
} spsl_mc_config;

spsl_status spsl_mc_run(const spsl_codebook* book, const spsl_decoder* decoder,
                        const spsl_flip_probs* probs, const spsl_mc_config* cfg,
                        double* out);

/* Full Cartesian sweep over flux grids for comma-separated strategy tokens
 * (gray | longrun | rep<r> | longrun-rep<r> | bch<n> | hybrid<n>), written as
 * CSV with header phi_a,phi_p,strategy,metric,value,n_iter,seed. */
spsl_status spsl_sweep_csv(const char* strategies, int bits, const double* phi_a,
                           size_t phi_a_count, const double* phi_p, size_t phi_p_count,
                           double t_exp, double r_q, const spsl_mc_config* cfg,
                           const char* out_csv_path);

/* ---- scenes and the end-to-end pipeline ---------------------------------- */

typedef struct spsl_scene spsl_scene;

typedef struct spsl_scene_params {
    int width, height;
    double focal_px;
    double baseline_m;
    int upsample;       /* camera pixels per projector column */
    uint32_t columns;   /* projector columns */
    double z_near, z_far, radius;  /* meters; meaning depends on the kind */
    double albedo;      /* (0,1] */
} spsl_scene_params;

/* kind: "plane" | "sphere" | "vgroove" */
spsl_status spsl_scene_create(const char* kind, const spsl_scene_params* params,
                              spsl_scene** out);
void spsl_scene_free(spsl_scene* scene);

typedef struct spsl_depth_metrics {
    double rmse_all_mm;
    double inlier_fraction;
    double rmse_inliers_mm;
    double valid_fraction;
    long mismatches;     /* decoded column != ground truth */
    int inliers_empty;   /* 1 if no inliers existed */
} spsl_depth_metrics;

/* Render -> decode -> triangulate -> evaluate. If out_dir is non-NULL, writes
 * correspondence.pgm (16-bit, 65535 = invalid), depth.txt ("depth-mm w h"
 * header) and metrics.csv into it. */
spsl_status spsl_pipeline_run(const spsl_scene* scene, const spsl_codebook* book,
                              const spsl_decoder* decoder, const spsl_flux* flux,
                              double defocus_sigma, uint64_t seed, int threads,
                              const char* out_dir, spsl_depth_metrics* out);

/* Render the scene's SPAD capture and export it as PBM frames plus a
 * "stack.manifest" line ("width height T seed") into out_dir. */
spsl_status spsl_scene_render_frames(const spsl_scene* scene, const spsl_codebook* book,
                                     const spsl_flux* flux, double defocus_sigma,
                                     uint64_t seed, int threads, const char* out_dir);

/* Import a PBM frame directory, decode every pixel sequence, and write the
 * correspondence map as 16-bit PGM. */
spsl_status spsl_decode_frames(const spsl_decoder* decoder, const char* frames_dir,
                               int threads, const char* out_pgm_path);

/* ---- benchmarking -------------------------------------------------------- */

typedef struct spsl_bench_report {
    double packed_ns_per_query;
    double naive_ns_per_query;
    double speedup;          /* naive / packed */
    double packed_total_ms;  /* wall time for all queries, packed engine */
    long queries;
    uint32_t codewords;
    uint32_t frames;
} spsl_bench_report;

/* Cross-checks packed == naive on a sample before timing; fails with
 * SPSL_ERR_INTERNAL if they disagree. naive timing is measured on
 * min(queries, naive_sample) queries and scaled. */
spsl_status spsl_bench_mdd(uint32_t frames, uint32_t codewords, long queries,
                           long naive_sample, uint64_t seed, int threads,
                           spsl_bench_report* out);

#ifdef __cplusplus
}
#endif

#endif /* SPSL_H */
