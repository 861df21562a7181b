// SPDX-License-Identifier: Apache-2.0

#include "maskbench/secretshare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace maskbench::secretshare {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTamperTolerance = 1e-6;

double population_difference(const DensityMatrix& marginal) {
    return (marginal.matrix()(0, 0) - marginal.matrix()(1, 1)).real();
}

BlochVector assemble_coordinates(double wx, double wy, double wz, std::size_t x, std::size_t y,
                                 std::vector<TamperedPixel>* tampered) {
    const double norm = std::sqrt(wx * wx + wy * wy + wz * wz);
    if (norm > 1.0 + kTamperTolerance) {
        if (tampered == nullptr)
            throw TamperDetected("reconstruction of a non-physical state");
        tampered->push_back({x, y, norm});
        // render the clamped direction so the output stays inspectable
        return BlochVector(wx / norm, wy / norm, wz / norm);
    }
    const double clip = norm > 1.0 ? 1.0 / norm : 1.0;
    return BlochVector(wx * clip, wy * clip, wz * clip);
}

double channel(const ColorRGB& c, std::size_t i) { return i == 0 ? c.r : (i == 1 ? c.g : c.b); }

}  // namespace

const maskers::Masker& share_axis_masker(ShareAxis axis) {
    static const maskers::Masker x = maskers::qubit_masker(kPi / 2.0, 0.0);
    static const maskers::Masker y = maskers::qubit_masker(kPi / 2.0, kPi / 2.0);
    static const maskers::Masker z = maskers::qubit_masker(0.0, 0.0);
    switch (axis) {
        case ShareAxis::X: return x;
        case ShareAxis::Y: return y;
        default: return z;
    }
}

ColorHSL bloch_to_hsl(const BlochVector& v) {
    if (v.norm() > 1.0 + 1e-10) throw Error("Bloch vector outside the unit ball");

    const double r2 = v.x * v.x + v.y * v.y;
    const double planar = 1.0 - v.z * v.z;

    ColorHSL c;
    if (r2 <= 1e-30) {
        c.h = 0.0;  // hue undefined on the z axis
    } else {
        c.h = 0.5 + std::atan2(v.y, v.x) / (2.0 * kPi);
        if (c.h >= 1.0) c.h -= 1.0;
    }
    c.s = planar <= 1e-30 ? 0.0 : std::clamp(r2 / planar, 0.0, 1.0);
    c.l = std::clamp((1.0 + v.z) / 2.0, 0.0, 1.0);
    return c;
}

BlochVector hsl_to_bloch(const ColorHSL& c) {
    const double z = 2.0 * std::clamp(c.l, 0.0, 1.0) - 1.0;
    const double radius = std::sqrt(std::max(std::clamp(c.s, 0.0, 1.0) * (1.0 - z * z), 0.0));
    const double angle = 2.0 * kPi * (c.h - 0.5);
    return BlochVector(radius * std::cos(angle), radius * std::sin(angle), z);
}

ColorRGB hsl_to_rgb(const ColorHSL& c) {
    const auto f = [&](double n) {
        const double k = std::fmod(n + 12.0 * c.h, 12.0);
        const double a = c.s * std::min(c.l, 1.0 - c.l);
        return std::clamp(c.l - a * std::max(-1.0, std::min({k - 3.0, 9.0 - k, 1.0})), 0.0, 1.0);
    };
    return ColorRGB{f(0.0), f(8.0), f(4.0)};
}

ColorHSL rgb_to_hsl(const ColorRGB& c) {
    const double mx = std::max({c.r, c.g, c.b});
    const double mn = std::min({c.r, c.g, c.b});
    ColorHSL out;
    out.l = (mx + mn) / 2.0;
    const double chroma = mx - mn;
    if (chroma <= 0.0) return out;  // gray: h = s = 0

    out.s = std::clamp(chroma / (1.0 - std::abs(2.0 * out.l - 1.0)), 0.0, 1.0);
    double sector;
    if (mx == c.r) {
        sector = std::fmod((c.g - c.b) / chroma, 6.0);
        if (sector < 0.0) sector += 6.0;
    } else if (mx == c.g) {
        sector = (c.b - c.r) / chroma + 2.0;
    } else {
        sector = (c.r - c.g) / chroma + 4.0;
    }
    out.h = sector / 6.0;
    if (out.h >= 1.0) out.h -= 1.0;
    return out;
}

std::array<PixelShare, 3> share_pixel(const BlochVector& v) {
    const DensityMatrix rho = qcore::bloch_to_density(v);
    const auto make = [&](ShareAxis axis) {
        const DensityMatrix masked = maskers::mask(share_axis_masker(axis), rho);
        return PixelShare{axis, qcore::partial_trace(masked, 2, 2, qcore::Subsystem::B)};
    };
    return {make(ShareAxis::X), make(ShareAxis::Y), make(ShareAxis::Z)};
}

BlochVector reconstruct_pixel(const PixelShare& s1, const PixelShare& s2, const PixelShare& s3) {
    const std::array<const PixelShare*, 3> shares{&s1, &s2, &s3};
    std::array<bool, 3> seen{false, false, false};
    std::array<double, 3> w{0.0, 0.0, 0.0};
    for (const PixelShare* s : shares) {
        const auto i = static_cast<std::size_t>(s->axis);
        if (seen[i]) throw std::invalid_argument("reconstruct_pixel: duplicate masker identity");
        seen[i] = true;
        w[i] = population_difference(s->marginal);
    }
    return assemble_coordinates(w[0], w[1], w[2], 0, 0, nullptr);
}

std::array<ShareGrid, 3> share_image(const Image& img) {
    if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
        throw std::invalid_argument("share_image: empty or inconsistent image");

    std::array<ShareGrid, 3> grids;
    for (std::size_t i = 0; i < 3; ++i) {
        grids[i].axis = static_cast<ShareAxis>(i);
        grids[i].width = img.width;
        grids[i].height = img.height;
        grids[i].w.resize(img.pixels.size());
    }
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const BlochVector v = hsl_to_bloch(rgb_to_hsl(img.pixels[i]));
        const auto shares = share_pixel(v);
        for (std::size_t k = 0; k < 3; ++k) grids[k].w[i] = population_difference(shares[k].marginal);
    }
    return grids;
}

ReconstructionResult reconstruct_image(const ShareGrid& sx, const ShareGrid& sy,
                                       const ShareGrid& sz, const Image* original) {
    const std::array<const ShareGrid*, 3> grids{&sx, &sy, &sz};
    std::array<bool, 3> seen{false, false, false};
    for (const ShareGrid* g : grids) {
        if (g->width != sx.width || g->height != sx.height || g->w.size() != g->width * g->height)
            throw std::invalid_argument("reconstruct_image: share dimensions mismatch");
        const auto i = static_cast<std::size_t>(g->axis);
        if (i > 2 || seen[i]) throw std::invalid_argument("reconstruct_image: duplicate masker identity");
        seen[i] = true;
    }
    std::array<const ShareGrid*, 3> by_axis{nullptr, nullptr, nullptr};
    for (const ShareGrid* g : grids) by_axis[static_cast<std::size_t>(g->axis)] = g;

    if (original &&
        (original->width != sx.width || original->height != sx.height))
        throw std::invalid_argument("reconstruct_image: original image dimensions mismatch");

    ReconstructionResult result;
    result.image.width = sx.width;
    result.image.height = sx.height;
    result.image.pixels.resize(sx.width * sx.height);

    for (std::size_t y = 0; y < sx.height; ++y)
        for (std::size_t x = 0; x < sx.width; ++x) {
            const std::size_t i = y * sx.width + x;
            const BlochVector v =
                assemble_coordinates(by_axis[0]->w[i], by_axis[1]->w[i], by_axis[2]->w[i], x, y,
                                     &result.tampered);
            result.image.pixels[i] = hsl_to_rgb(bloch_to_hsl(v));
        }

    if (original) {
        static const char* names[3] = {"r", "g", "b"};
        double sum = 0.0;
        for (std::size_t ch = 0; ch < 3; ++ch) {
            const std::size_t n = original->pixels.size();
            double mean_a = 0.0;
            double mean_b = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                mean_a += channel(original->pixels[i], ch);
                mean_b += channel(result.image.pixels[i], ch);
            }
            mean_a /= static_cast<double>(n);
            mean_b /= static_cast<double>(n);
            double cov = 0.0;
            double var_a = 0.0;
            double var_b = 0.0;
            double max_err = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double da = channel(original->pixels[i], ch) - mean_a;
                const double db = channel(result.image.pixels[i], ch) - mean_b;
                cov += da * db;
                var_a += da * da;
                var_b += db * db;
                max_err = std::max(max_err, std::abs(channel(original->pixels[i], ch) -
                                                     channel(result.image.pixels[i], ch)));
            }
            result.max_channel_error = std::max(result.max_channel_error, max_err);
            // summation noise on a constant channel leaves ~1e-33; genuine
            // 8-bit variation contributes at least ~1e-6
            const double variance_floor = 1e-18 * static_cast<double>(n);
            double corr;
            if (var_a <= variance_floor) {
                corr = 1.0;  // degenerate statistics: constant original channel
                result.constant_channels.push_back(names[ch]);
            } else if (var_b <= variance_floor) {
                corr = 0.0;
                result.constant_channels.push_back(names[ch]);
            } else {
                corr = std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
            }
            result.channel_correlation[ch] = corr;
            sum += corr;
        }
        result.correlation = sum / 3.0;
    }
    return result;
}

std::uint8_t quantize8(double v) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(clamped * 255.0));
}

}  // namespace maskbench::secretshare
