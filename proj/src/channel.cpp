#include "channel.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace fs = std::filesystem;

namespace spsl {

BitVec BinaryFrameStack::pixel_sequence(int x, int y) const {
    BitVec seq(frames);
    const std::size_t idx = std::size_t(y) * std::size_t(width) + std::size_t(x);
    for (std::uint32_t t = 0; t < frames; ++t) seq.set(t, planes[t].get(idx));
    return seq;
}

BitVec corrupt_codeword(const BitVec& codeword, const FlipProbs& probs, RngStream& rng) {
    probs.validate();
    BitVec out = codeword;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double u = rng.next_uniform();
        if (codeword.get(i)) {
            if (u < probs.p_bright) out.set(i, false);
        } else {
            if (u < probs.p_dark) out.set(i, true);
        }
    }
    return out;
}

namespace {

std::vector<double> gaussian_kernel(double sigma) {
    if (sigma <= 0.0) return {1.0};
    const int radius = int(std::ceil(3.0 * sigma));
    std::vector<double> k(std::size_t(2 * radius) + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (i / sigma) * (i / sigma));
        k[std::size_t(i + radius)] = v;
        sum += v;
    }
    for (auto& v : k) v /= sum;  // blur conserves a constant pattern
    return k;
}

}  // namespace

BinaryFrameStack render_frames(const SceneSpec& scene, const Codebook& book,
                               const FluxCondition& cond, double defocus_sigma,
                               std::uint64_t seed, int threads) {
    cond.validate();
    require(defocus_sigma >= 0.0, ErrorKind::invalid_argument,
            "render_frames: defocus_sigma < 0");
    require(!scene.gt_column.empty(), ErrorKind::invalid_argument,
            "render_frames: scene has no correspondence map");
    for (auto c : scene.gt_column)
        require(c < book.columns, ErrorKind::invalid_argument,
                "render_frames: scene correspondence exceeds codebook columns");

    BinaryFrameStack stack;
    stack.width = scene.width;
    stack.height = scene.height;
    stack.frames = book.frames;
    stack.seed = seed;
    stack.gt_column = scene.gt_column;
    stack.planes.assign(book.frames, BitVec(scene.npix()));

    const auto kernel = gaussian_kernel(defocus_sigma);
    const int radius = int(kernel.size() / 2);
    const std::size_t npix = scene.npix();

    std::vector<std::vector<double>> intensity(book.frames,
                                               std::vector<double>(npix, 0.0));
    parallel_for(book.frames, threads, [&](std::size_t t) {
        auto& img = intensity[t];
        // Ideal warped pattern, then 1-D blur along the column axis.
        std::vector<double> ideal(npix);
        for (std::size_t p = 0; p < npix; ++p)
            ideal[p] = book.pattern_bit(std::uint32_t(t), scene.gt_column[p]) ? 1.0 : 0.0;
        if (radius == 0) {
            img = ideal;
            return;
        }
        for (int y = 0; y < scene.height; ++y) {
            const std::size_t row = std::size_t(y) * std::size_t(scene.width);
            for (int x = 0; x < scene.width; ++x) {
                double acc = 0.0;
                for (int dx = -radius; dx <= radius; ++dx) {
                    int xx = x + dx;
                    if (xx < 0) xx = 0;
                    if (xx >= scene.width) xx = scene.width - 1;
                    acc += kernel[std::size_t(dx + radius)] * ideal[row + std::size_t(xx)];
                }
                img[row + std::size_t(x)] = acc;
            }
        }
    });

    parallel_for(npix, threads, [&](std::size_t p) {
        for (std::uint32_t t = 0; t < book.frames; ++t) {
            const double flux =
                cond.phi_a + intensity[t][p] * cond.phi_p * scene.albedo[p] + cond.r_q;
            const double p_zero = std::exp(-flux * cond.t_exp);
            RngStream rng(seed, stream_id(p, t));
            if (rng.next_uniform() >= p_zero) stack.planes[t].set(p, true);
        }
    });
    return stack;
}

void export_frames_pbm(const BinaryFrameStack& stack, const std::string& directory) {
    fs::create_directories(directory);
    for (std::uint32_t t = 0; t < stack.frames; ++t) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04u.pbm", t);
        std::ofstream out(fs::path(directory) / name, std::ios::binary);
        require(out.good(), ErrorKind::io, "export_frames_pbm: cannot open frame file");
        out << "P4\n" << stack.width << ' ' << stack.height << '\n';
        const int stride = (stack.width + 7) / 8;
        std::vector<unsigned char> row(static_cast<std::size_t>(stride), 0);
        for (int y = 0; y < stack.height; ++y) {
            std::fill(row.begin(), row.end(), 0);
            for (int x = 0; x < stack.width; ++x)
                if (stack.bit(t, x, y)) row[std::size_t(x >> 3)] |= (unsigned char)(0x80u >> (x & 7));
            out.write(reinterpret_cast<const char*>(row.data()), stride);
        }
        require(out.good(), ErrorKind::io, "export_frames_pbm: write failed");
    }
    std::ofstream man(fs::path(directory) / "stack.manifest");
    man << stack.width << ' ' << stack.height << ' ' << stack.frames << ' ' << stack.seed
        << '\n';
    require(man.good(), ErrorKind::io, "export_frames_pbm: manifest write failed");
}

BinaryFrameStack import_frames_pbm(const std::string& directory) {
    std::ifstream man(fs::path(directory) / "stack.manifest");
    require(man.good(), ErrorKind::io, "import_frames_pbm: missing stack.manifest");
    BinaryFrameStack stack;
    man >> stack.width >> stack.height >> stack.frames >> stack.seed;
    require(!man.fail() && stack.width > 0 && stack.height > 0 && stack.frames > 0,
            ErrorKind::parse, "import_frames_pbm: malformed manifest");

    stack.planes.assign(stack.frames, BitVec(std::size_t(stack.width) * std::size_t(stack.height)));
    for (std::uint32_t t = 0; t < stack.frames; ++t) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04u.pbm", t);
        const fs::path p = fs::path(directory) / name;
        std::ifstream in(p, std::ios::binary);
        require(in.good(), ErrorKind::io, "import_frames_pbm: missing " + p.string());
        std::string magic;
        int w = 0, h = 0;
        in >> magic >> w >> h;
        require(magic == "P4" && w == stack.width && h == stack.height, ErrorKind::parse,
                "import_frames_pbm: bad PBM header in " + p.string());
        in.get();  // single whitespace after the header
        const int stride = (w + 7) / 8;
        std::vector<char> row(static_cast<std::size_t>(stride), 0);
        for (int y = 0; y < h; ++y) {
            in.read(row.data(), stride);
            require(in.good(), ErrorKind::parse, "import_frames_pbm: truncated " + p.string());
            for (int x = 0; x < w; ++x)
                if ((row[std::size_t(x >> 3)] >> (7 - (x & 7))) & 1)
                    stack.planes[t].set(std::size_t(y) * std::size_t(w) + std::size_t(x), true);
        }
    }
    return stack;
}

}  // namespace spsl
