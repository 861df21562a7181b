// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskbench/maskers.hpp"
#include "maskbench/qcore.hpp"

namespace maskbench::secretshare {

using qcore::BlochVector;
using qcore::DensityMatrix;

// Reconstruction of a share triple whose coordinates land outside the Bloch
// ball: either a forged share or a forged masker identity.
class TamperDetected : public Error {
  public:
    using Error::Error;
};

struct ColorHSL {
    double h = 0.0;  // hue in turns, [0, 1)
    double s = 0.0;  // [0, 1]
    double l = 0.0;  // [0, 1]
};

struct ColorRGB {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

// The three maskers of the sharing protocol; each grants its holder exactly
// one Bloch coordinate of the secret.
enum class ShareAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };

const maskers::Masker& share_axis_masker(ShareAxis axis);

struct PixelShare {
    ShareAxis axis;
    DensityMatrix marginal;  // Bob's qubit marginal, diag((1+w)/2, (1−w)/2)
};

// Bloch ball ↔ hue/saturation/luminosity codec. h is fixed to 0 on the
// z axis and s to 0 at the poles; both choices are invisible after the RGB
// conversion.
ColorHSL bloch_to_hsl(const BlochVector& v);
BlochVector hsl_to_bloch(const ColorHSL& c);

// Standard HSL to RGB (k = (n + 12h) mod 12) and its inverse.
ColorRGB hsl_to_rgb(const ColorHSL& c);
ColorHSL rgb_to_hsl(const ColorRGB& c);

// Masks the pixel state with the X, Y and Z maskers; each share's marginal
// exposes exactly one coordinate.
std::array<PixelShare, 3> share_pixel(const BlochVector& v);

// Intersects the three orthogonal reconstruction disks. Throws
// TamperDetected when the intersection lies outside the ball.
BlochVector reconstruct_pixel(const PixelShare& s1, const PixelShare& s2, const PixelShare& s3);

struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<ColorRGB> pixels;  // row-major

    const ColorRGB& at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
    ColorRGB& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
};

// One recipient's view of a shared image: the per-pixel population
// difference w of their marginal.
struct ShareGrid {
    ShareAxis axis = ShareAxis::X;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> w;  // row-major
};

std::array<ShareGrid, 3> share_image(const Image& img);

struct TamperedPixel {
    std::size_t x = 0;
    std::size_t y = 0;
    double norm = 0.0;
};

struct ReconstructionResult {
    Image image;
    std::vector<TamperedPixel> tampered;
    // Pearson correlation per channel and averaged, present when the
    // original is supplied. Channels with zero variance in the original
    // count as 1 and are flagged.
    std::optional<double> correlation;
    std::array<double, 3> channel_correlation{1.0, 1.0, 1.0};
    std::vector<std::string> constant_channels;
    double max_channel_error = 0.0;
};

ReconstructionResult reconstruct_image(const ShareGrid& sx, const ShareGrid& sy,
                                       const ShareGrid& sz, const Image* original = nullptr);

std::uint8_t quantize8(double v);

}  // namespace maskbench::secretshare
