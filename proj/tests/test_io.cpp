// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "maskbench/image_io.hpp"
#include "maskbench/json_io.hpp"
#include "maskbench/random_states.hpp"

using namespace maskbench;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("maskbench_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("density matrix JSON round trip is bit exact") {
    TempDir tmp;
    std::mt19937_64 rng(151);
    for (std::size_t dim : {2u, 3u, 4u}) {
        const qcore::DensityMatrix rho = qcore::ginibre_mixed_state(dim, rng);
        const fs::path file = tmp.path / "state.json";
        io::save_state(rho, file);
        const qcore::DensityMatrix back = io::load_state(file);
        REQUIRE(back.dim() == dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                CHECK(back.matrix()(r, c).real() == rho.matrix()(r, c).real());
                CHECK(back.matrix()(r, c).imag() == rho.matrix()(r, c).imag());
            }
    }
}

TEST_CASE("bloch-form state files auto-convert") {
    TempDir tmp;
    const fs::path file = tmp.path / "bloch.json";
    io::save_json(io::json{{"x", 1.0}, {"y", 0.0}, {"z", 0.0}}, file);
    const qcore::DensityMatrix rho = io::load_state(file);
    CHECK(rho.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("invalid state files name the problem") {
    TempDir tmp;
    SUBCASE("non-PSD matrix") {
        const fs::path file = tmp.path / "bad.json";
        io::save_json(io::json{{"dim", 2},
                               {"re", {{1.2, 0.0}, {0.0, -0.2}}},
                               {"im", {{0.0, 0.0}, {0.0, 0.0}}}},
                      file);
        CHECK_THROWS_WITH_AS(io::load_state(file), "not positive semidefinite", Error);
    }
    SUBCASE("malformed JSON") {
        const fs::path file = tmp.path / "broken.json";
        std::ofstream(file) << "{ not json";
        CHECK_THROWS_AS(io::load_state(file), Error);
    }
    SUBCASE("wrong row length is reported with the field") {
        const fs::path file = tmp.path / "short.json";
        io::save_json(io::json{{"dim", 2}, {"re", {{1.0}, {0.0, 0.0}}},
                               {"im", {{0.0, 0.0}, {0.0, 0.0}}}},
                      file);
        CHECK_THROWS_AS(io::load_state(file), Error);
    }
}

TEST_CASE("masker JSON carries the label and columns") {
    const maskers::Masker m = maskers::qubit_masker(0.7, 1.9);
    const io::json j = io::to_json(m);
    const maskers::Masker back = io::masker_from_json(j);
    CHECK(back.columns().max_abs_diff(m.columns()) == 0.0);
    const auto& label = std::get<maskers::QubitLabel>(back.label());
    CHECK(label.alpha == 0.7);
    CHECK(label.theta == 1.9);

    const maskers::Masker v = maskers::vandermonde_masker(3);
    const maskers::Masker vback = io::masker_from_json(io::to_json(v));
    CHECK(vback.columns().max_abs_diff(v.columns()) == 0.0);
    CHECK(std::get<maskers::VandermondeLabel>(vback.label()).dim == 3);

    const maskers::HighDimFamily fam(4, {0.5, 0.5}, {0.1, -0.2}, {0.3, 1.2}, {0.0, 2.0});
    const maskers::Masker h = maskers::highdim_masker(fam);
    const maskers::Masker hback = io::masker_from_json(io::to_json(h));
    CHECK(hback.columns().max_abs_diff(h.columns()) == 0.0);
    CHECK(std::get<maskers::HighDimLabel>(hback.label()).alpha == fam.alpha);
}

TEST_CASE("disk JSON is canonicalized") {
    const maskers::Disk d = maskers::disk_through(0.0, 0.0, qcore::BlochVector(0.0, 0.0, -0.25));
    const io::json j = io::to_json(d);
    CHECK(j.at("c").get<double>() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(j.at("alpha").get<double>() == doctest::Approx(3.14159265358979323846).epsilon(1e-12));
}

TEST_CASE("PPM round trip") {
    TempDir tmp;
    secretshare::Image img;
    img.width = 3;
    img.height = 2;
    img.pixels = {
        secretshare::ColorRGB{1.0, 0.0, 0.0}, secretshare::ColorRGB{0.0, 1.0, 0.0},
        secretshare::ColorRGB{0.0, 0.0, 1.0}, secretshare::ColorRGB{1.0, 1.0, 1.0},
        secretshare::ColorRGB{0.0, 0.0, 0.0}, secretshare::ColorRGB{0.5, 0.25, 0.75},
    };
    const fs::path file = tmp.path / "img.ppm";
    secretshare::write_ppm(img, file);
    const secretshare::Image back = secretshare::read_ppm(file);
    REQUIRE(back.width == 3);
    REQUIRE(back.height == 2);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        CHECK(secretshare::quantize8(back.pixels[i].r) == secretshare::quantize8(img.pixels[i].r));
        CHECK(secretshare::quantize8(back.pixels[i].g) == secretshare::quantize8(img.pixels[i].g));
        CHECK(secretshare::quantize8(back.pixels[i].b) == secretshare::quantize8(img.pixels[i].b));
    }
}

TEST_CASE("PPM parser handles comments and rejects bad headers") {
    TempDir tmp;
    SUBCASE("comments in the header") {
        const fs::path file = tmp.path / "comment.ppm";
        std::ofstream out(file, std::ios::binary);
        out << "P6\n# a comment\n2 1\n# another\n255\n";
        out.write("\x10\x20\x30\x40\x50\x60", 6);
        out.close();
        const secretshare::Image img = secretshare::read_ppm(file);
        CHECK(img.width == 2);
        CHECK(secretshare::quantize8(img.pixels[0].r) == 0x10);
    }
    SUBCASE("wrong maxval") {
        const fs::path file = tmp.path / "maxval.ppm";
        std::ofstream(file, std::ios::binary) << "P6\n1 1\n65535\n" << "abcdef";
        CHECK_THROWS_AS(secretshare::read_ppm(file), Error);
    }
    SUBCASE("not P6") {
        const fs::path file = tmp.path / "ascii.ppm";
        std::ofstream(file) << "P3\n1 1\n255\n1 2 3\n";
        CHECK_THROWS_AS(secretshare::read_ppm(file), Error);
    }
}

TEST_CASE("share file round trip and checksum") {
    TempDir tmp;
    secretshare::ShareGrid grid;
    grid.axis = secretshare::ShareAxis::Y;
    grid.width = 4;
    grid.height = 3;
    grid.w = {0.0, 0.5, -0.5, 1.0, -1.0, 0.25, 0.125, -0.75, 0.3, 0.9, -0.2, 0.0};
    const fs::path file = tmp.path / "share.bin";
    secretshare::write_share_file(grid, file);

    const secretshare::ShareGrid back = secretshare::read_share_file(file);
    CHECK(back.axis == secretshare::ShareAxis::Y);
    REQUIRE(back.w.size() == grid.w.size());
    for (std::size_t i = 0; i < grid.w.size(); ++i) CHECK(back.w[i] == grid.w[i]);

    SUBCASE("bit corruption is detected") {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(20);
        char byte;
        f.seekg(20);
        f.get(byte);
        f.seekp(20);
        byte = static_cast<char>(byte ^ 0x01);
        f.put(byte);
        f.close();
        CHECK_THROWS_AS(secretshare::read_share_file(file), Error);
    }
}
