// SPDX-License-Identifier: Apache-2.0

#include "maskbench/image_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <string>

namespace maskbench::secretshare {

namespace {

constexpr char kShareMagic[4] = {'Q', 'I', 'M', 'S'};
constexpr std::uint16_t kShareVersion = 1;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
  public:
    explicit Reader(std::string bytes) : bytes_(std::move(bytes)) {}

    std::uint16_t u16() { return static_cast<std::uint16_t>(u(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(u(4)); }
    std::uint64_t u64() { return u(8); }
    double f64() { return std::bit_cast<double>(u64()); }
    std::uint8_t u8() { return static_cast<std::uint8_t>(u(1)); }

    std::size_t position() const { return pos_; }
    std::size_t size() const { return bytes_.size(); }
    const std::string& bytes() const { return bytes_; }

  private:
    std::uint64_t u(int n) {
        if (pos_ + static_cast<std::size_t>(n) > bytes_.size())
            throw Error("share file truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }

    std::string bytes_;
    std::size_t pos_ = 0;
};

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_all(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed: " + path.string());
}

// Skips PPM whitespace and '#' comment lines, then parses one decimal token.
std::size_t next_token(const std::string& bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        const char c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
        throw Error("malformed PPM header");
    std::size_t value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
        ++pos;
    }
    return value;
}

}  // namespace

Image read_ppm(const std::filesystem::path& path) {
    const std::string bytes = read_all(path);
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
        throw Error("not a binary PPM (P6) file: " + path.string());
    std::size_t pos = 2;
    const std::size_t width = next_token(bytes, pos);
    const std::size_t height = next_token(bytes, pos);
    const std::size_t maxval = next_token(bytes, pos);
    if (maxval != 255) throw Error("PPM maxval must be 255");
    if (pos >= bytes.size()) throw Error("malformed PPM header");
    ++pos;  // single whitespace after maxval

    if (width == 0 || height == 0) throw Error("PPM has zero dimension");
    const std::size_t need = width * height * 3;
    if (bytes.size() - pos < need) throw Error("PPM pixel data truncated");

    Image img;
    img.width = width;
    img.height = height;
    img.pixels.resize(width * height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const auto r = static_cast<unsigned char>(bytes[pos + 3 * i]);
        const auto g = static_cast<unsigned char>(bytes[pos + 3 * i + 1]);
        const auto b = static_cast<unsigned char>(bytes[pos + 3 * i + 2]);
        img.pixels[i] = ColorRGB{r / 255.0, g / 255.0, b / 255.0};
    }
    return img;
}

void write_ppm(const Image& img, const std::filesystem::path& path) {
    if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
        throw std::invalid_argument("write_ppm: empty or inconsistent image");
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                      "\n255\n";
    out.reserve(out.size() + img.pixels.size() * 3);
    for (const auto& p : img.pixels) {
        out.push_back(static_cast<char>(quantize8(p.r)));
        out.push_back(static_cast<char>(quantize8(p.g)));
        out.push_back(static_cast<char>(quantize8(p.b)));
    }
    write_all(path, out);
}

ShareGrid read_share_file(const std::filesystem::path& path) {
    Reader in(read_all(path));
    if (in.size() < 4) throw Error("share file truncated");
    for (char m : kShareMagic)
        if (static_cast<char>(in.u8()) != m) throw Error("not a share file: " + path.string());
    if (in.u16() != kShareVersion) throw Error("unsupported share file version");

    ShareGrid grid;
    const std::uint8_t axis = in.u8();
    if (axis > 2) throw Error("share file has invalid masker identity");
    grid.axis = static_cast<ShareAxis>(axis);
    in.u8();  // reserved
    grid.width = in.u32();
    grid.height = in.u32();
    if (grid.width == 0 || grid.height == 0 || grid.width * grid.height > (1u << 26))
        throw Error("share file has invalid dimensions");
    grid.w.resize(grid.width * grid.height);
    for (auto& v : grid.w) v = in.f64();

    const std::string payload = in.bytes().substr(0, in.position());
    const std::uint64_t checksum = in.u64();
    if (checksum != fnv1a(payload)) throw Error("share file checksum mismatch");
    return grid;
}

void write_share_file(const ShareGrid& grid, const std::filesystem::path& path) {
    if (grid.width == 0 || grid.height == 0 || grid.w.size() != grid.width * grid.height)
        throw std::invalid_argument("write_share_file: empty or inconsistent grid");
    std::string out(kShareMagic, sizeof(kShareMagic));
    put_u16(out, kShareVersion);
    out.push_back(static_cast<char>(static_cast<std::uint8_t>(grid.axis)));
    out.push_back('\0');  // reserved
    put_u32(out, static_cast<std::uint32_t>(grid.width));
    put_u32(out, static_cast<std::uint32_t>(grid.height));
    for (double v : grid.w) put_f64(out, v);
    put_u64(out, fnv1a(out));
    write_all(path, out);
}

}  // namespace maskbench::secretshare
