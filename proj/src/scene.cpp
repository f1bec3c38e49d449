#include "scene.hpp"

#include <cmath>
#include <fstream>

#include "errors.hpp"

namespace spsl {

SceneKind scene_kind_from_name(const std::string& name) {
    if (name == "plane") return SceneKind::plane;
    if (name == "sphere") return SceneKind::sphere_on_plane;
    if (name == "vgroove") return SceneKind::v_groove;
    raise(ErrorKind::invalid_argument, "unknown scene kind '" + name + "'");
}

std::string scene_kind_name(SceneKind kind) {
    switch (kind) {
        case SceneKind::plane: return "plane";
        case SceneKind::sphere_on_plane: return "sphere";
        case SceneKind::v_groove: return "vgroove";
    }
    return "?";
}

SceneSpec make_scene(SceneKind kind, const SceneParams& p) {
    require(p.width > 0 && p.height > 0, ErrorKind::invalid_argument,
            "make_scene: non-positive dimensions");
    require(p.z_near > 0 && p.z_far > 0, ErrorKind::invalid_argument,
            "make_scene: non-positive depth");
    require(p.albedo > 0.0 && p.albedo <= 1.0, ErrorKind::invalid_argument,
            "make_scene: albedo outside (0,1]");
    require(p.upsample >= 1, ErrorKind::invalid_argument, "make_scene: upsample < 1");

    SceneSpec s;
    s.width = p.width;
    s.height = p.height;
    s.focal_px = p.focal_px;
    s.baseline_m = p.baseline_m;
    s.upsample = p.upsample;
    s.columns = p.columns;
    s.depth.resize(s.npix());
    s.albedo.assign(s.npix(), p.albedo);
    s.corr_fine.resize(s.npix());
    s.gt_column.resize(s.npix());

    const double cx = 0.5 * (p.width - 1);
    const double cy = 0.5 * (p.height - 1);

    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            const std::size_t idx = std::size_t(y) * std::size_t(p.width) + std::size_t(x);
            double z = 0.0;
            switch (kind) {
                case SceneKind::plane:
                    z = p.z_near;
                    break;
                case SceneKind::v_groove: {
                    // Walls from the side edges (z_near) to the apex column
                    // at the centre (z_far, the deepest point).
                    const double frac = 1.0 - std::abs(x - cx) / cx;  // 0 at edges, 1 at apex
                    z = p.z_near + (p.z_far - p.z_near) * frac;
                    break;
                }
                case SceneKind::sphere_on_plane: {
                    // Pinhole ray through (x, y) intersected with a sphere in
                    // front of a backdrop plane at z_far. Sphere centre sits on
                    // the optical axis with its front pole at z_near.
                    const double dx = (x - cx) / p.focal_px;
                    const double dy = (y - cy) / p.focal_px;
                    const double zc = p.z_near + p.radius;
                    const double a = dx * dx + dy * dy + 1.0;
                    const double b = -2.0 * zc;  // dot(d, C) with C = (0,0,zc)
                    const double c = zc * zc - p.radius * p.radius;
                    const double disc = b * b - 4 * a * c;
                    if (disc >= 0.0) {
                        const double t = (-b - std::sqrt(disc)) / (2 * a);
                        z = t;  // d_z = 1, so depth equals the ray parameter
                    } else {
                        z = p.z_far;
                    }
                    break;
                }
            }
            s.depth[idx] = z;
            const double fine = x + s.fb() / z;
            s.corr_fine[idx] = fine;
            const long long nearest = llround(fine);
            require(nearest >= 0, ErrorKind::construction,
                    "make_scene: negative projector coordinate");
            const std::uint32_t col = std::uint32_t(nearest) / std::uint32_t(p.upsample);
            require(col < p.columns, ErrorKind::construction,
                    "make_scene: pixel maps to column " + std::to_string(col) +
                        " outside the projector (" + std::to_string(p.columns) + ")");
            s.gt_column[idx] = col;
        }
    }
    return s;
}

DepthMap reconstruct_depth(const std::vector<std::uint32_t>& decoded_column,
                           const SceneSpec& scene) {
    require(decoded_column.size() == scene.npix(), ErrorKind::invalid_argument,
            "reconstruct_depth: size mismatch");
    DepthMap dm;
    dm.width = scene.width;
    dm.height = scene.height;
    dm.z.assign(scene.npix(), 0.0);
    dm.valid.assign(scene.npix(), false);
    for (int y = 0; y < scene.height; ++y) {
        for (int x = 0; x < scene.width; ++x) {
            const std::size_t idx = std::size_t(y) * std::size_t(scene.width) + std::size_t(x);
            const std::uint32_t col = decoded_column[idx];
            if (col == 0xffffffffu || col >= scene.columns) continue;
            // Column centre in fine units.
            const double fine = double(col) * scene.upsample + 0.5 * (scene.upsample - 1);
            const double disparity = fine - double(x);
            if (disparity <= 0.0) continue;
            dm.z[idx] = scene.fb() / disparity;
            dm.valid[idx] = true;
        }
    }
    return dm;
}

DepthMetrics evaluate(const DepthMap& depth, const SceneSpec& scene) {
    require(depth.width == scene.width && depth.height == scene.height,
            ErrorKind::invalid_argument, "evaluate: shape mismatch");
    DepthMetrics m;
    double sq_all = 0.0, sq_in = 0.0;
    std::size_t n_valid = 0, n_inlier = 0;
    for (std::size_t idx = 0; idx < scene.npix(); ++idx) {
        if (!depth.valid[idx]) continue;
        ++n_valid;
        const double err_mm = (depth.z[idx] - scene.depth[idx]) * 1000.0;
        sq_all += err_mm * err_mm;
        if (std::abs(err_mm) < kInlierThresholdMm) {
            ++n_inlier;
            sq_in += err_mm * err_mm;
        }
    }
    m.valid_fraction = scene.npix() ? double(n_valid) / double(scene.npix()) : 0.0;
    // Invalid pixels count as non-inliers.
    m.inlier_fraction = scene.npix() ? double(n_inlier) / double(scene.npix()) : 0.0;
    m.rmse_all_mm = n_valid ? std::sqrt(sq_all / double(n_valid)) : 0.0;
    if (n_inlier) {
        m.rmse_inliers_mm = std::sqrt(sq_in / double(n_inlier));
    } else {
        m.rmse_inliers_mm = 0.0;
        m.inliers_empty = true;
    }
    return m;
}

void write_correspondence_pgm(const std::vector<std::uint32_t>& column, int width, int height,
                              const std::string& path) {
    require(column.size() == std::size_t(width) * std::size_t(height),
            ErrorKind::invalid_argument, "write_correspondence_pgm: size mismatch");
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::io, "write_correspondence_pgm: cannot open '" + path + "'");
    out << "P5\n" << width << ' ' << height << "\n65535\n";
    for (std::uint32_t v : column) {
        const std::uint32_t s = v > kInvalidColumn16 ? kInvalidColumn16 : v;
        out.put(char((s >> 8) & 0xff));
        out.put(char(s & 0xff));
    }
    require(out.good(), ErrorKind::io, "write_correspondence_pgm: write failed");
}

std::vector<std::uint32_t> read_correspondence_pgm(const std::string& path, int& width,
                                                   int& height) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::io, "read_correspondence_pgm: cannot open '" + path + "'");
    std::string magic;
    int maxval = 0;
    in >> magic >> width >> height >> maxval;
    require(magic == "P5" && maxval == 65535 && width > 0 && height > 0, ErrorKind::parse,
            "read_correspondence_pgm: unsupported header in '" + path + "'");
    in.get();
    std::vector<std::uint32_t> column(std::size_t(width) * std::size_t(height));
    for (auto& v : column) {
        const int hi = in.get(), lo = in.get();
        require(hi >= 0 && lo >= 0, ErrorKind::parse,
                "read_correspondence_pgm: truncated '" + path + "'");
        v = std::uint32_t((hi << 8) | lo);
    }
    return column;
}

void write_depth_mm(const DepthMap& depth, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::io, "write_depth_mm: cannot open '" + path + "'");
    out << "depth-mm " << depth.width << ' ' << depth.height << '\n';
    for (int y = 0; y < depth.height; ++y) {
        for (int x = 0; x < depth.width; ++x) {
            const std::size_t idx = std::size_t(y) * std::size_t(depth.width) + std::size_t(x);
            if (x) out << ' ';
            if (depth.valid[idx]) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", depth.z[idx] * 1000.0);
                out << buf;
            } else {
                out << "nan";
            }
        }
        out << '\n';
    }
    require(out.good(), ErrorKind::io, "write_depth_mm: write failed");
}

}  // namespace spsl
