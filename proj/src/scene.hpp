#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spsl {

// Synthetic test scene under rectified 1-D epipolar geometry: camera and
// projector rows are aligned, so correspondence is a per-pixel column shift
// c_fine(x) = x + f*b / z(x), in camera-pixel ("fine") units. One projector
// column covers `upsample` fine units.
struct SceneSpec {
    int width = 0, height = 0;
    double focal_px = 0.0;    // f
    double baseline_m = 0.0;  // b
    int upsample = 1;         // camera pixels per projector column
    std::uint32_t columns = 0;  // projector columns available

    std::vector<double> depth;           // z(x,y) meters, row-major
    std::vector<double> albedo;          // rho(x,y) in (0,1]
    std::vector<double> corr_fine;       // x + f*b/z, fine units
    std::vector<std::uint32_t> gt_column;  // nearest projector column index

    double fb() const { return focal_px * baseline_m; }
    std::size_t npix() const { return std::size_t(width) * std::size_t(height); }
};

enum class SceneKind { plane, sphere_on_plane, v_groove };

SceneKind scene_kind_from_name(const std::string& name);
std::string scene_kind_name(SceneKind kind);

struct SceneParams {
    int width = 512, height = 64;
    double focal_px = 1600.0;
    double baseline_m = 0.104;  // fb ~ 166 px*m: one fine pixel ~ 1.5 mm at 0.5 m
    int upsample = 1;
    std::uint32_t columns = 1024;
    double z_near = 0.45;  // meters; role depends on the scene kind
    double z_far = 0.60;
    double radius = 0.08;  // sphere radius, meters
    double albedo = 1.0;
};

// Analytic depth and correspondence:
//   plane            fronto-parallel at z_near
//   v_groove         two slanted walls meeting at the centre column, apex at
//                    z_far (the deepest point), edges at z_near
//   sphere_on_plane  sphere (front at z_near) over a backdrop plane at z_far,
//                    depths from exact ray-sphere intersection
// Raises a construction error if any pixel maps outside the projector.
SceneSpec make_scene(SceneKind kind, const SceneParams& params);

// z = f*b / (c_fine - x); pixels with non-positive disparity are invalid.
// decoded_column is in projector-column units; it is mapped to fine units at
// the column centre before triangulation. Invalid pixels get depth 0 and
// valid=false.
struct DepthMap {
    int width = 0, height = 0;
    std::vector<double> z;        // meters; 0 where invalid
    std::vector<bool> valid;
};
DepthMap reconstruct_depth(const std::vector<std::uint32_t>& decoded_column,
                           const SceneSpec& scene);

struct DepthMetrics {
    double rmse_all_mm = 0.0;
    double inlier_fraction = 0.0;   // |error| < 5 mm among valid pixels
    double rmse_inliers_mm = 0.0;
    double valid_fraction = 0.0;
    bool inliers_empty = false;
};

// Metrics over valid pixels; invalid pixels count as non-inliers and are
// excluded from the RMSEs. The 5 mm inlier threshold is fixed.
DepthMetrics evaluate(const DepthMap& depth, const SceneSpec& scene);

inline constexpr double kInlierThresholdMm = 5.0;

// Correspondence maps: 16-bit PGM, big-endian samples, 65535 = invalid.
inline constexpr std::uint32_t kInvalidColumn16 = 65535;
void write_correspondence_pgm(const std::vector<std::uint32_t>& column, int width, int height,
                              const std::string& path);
std::vector<std::uint32_t> read_correspondence_pgm(const std::string& path, int& width,
                                                   int& height);

// Depth maps: text matrix, header "depth-mm <w> <h>", then h rows of w values.
void write_depth_mm(const DepthMap& depth, const std::string& path);

}  // namespace spsl
