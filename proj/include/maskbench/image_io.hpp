// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "maskbench/secretshare.hpp"

namespace maskbench::secretshare {

// Binary portable pixmap, 8 bit, maxval 255. Pixels quantize on write and
// map back to [0, 1] on read.
Image read_ppm(const std::filesystem::path& path);
void write_ppm(const Image& img, const std::filesystem::path& path);

// Share files: little-endian binary {magic, version, axis, width, height,
// w float64 array, FNV-1a checksum}.
ShareGrid read_share_file(const std::filesystem::path& path);
void write_share_file(const ShareGrid& grid, const std::filesystem::path& path);

}  // namespace maskbench::secretshare
