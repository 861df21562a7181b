// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maskbench/experiments.hpp"
#include "maskbench/random_states.hpp"

using namespace maskbench;
using namespace maskbench::experiments;
using qcore::DensityMatrix;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

std::vector<double> degree_grid(double lo, double hi, double step) {
    std::vector<double> out;
    for (double d = lo; d <= hi + 1e-9; d += step) out.push_back(d * kDeg);
    return out;
}

}  // namespace

TEST_CASE("disk demo reproduces the ideal masking figures") {
    const DemoReport report = run_disk_demo();
    REQUIRE(report.states.size() == 5);
    CHECK(report.disk_offset == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    const double hi = (1.0 + 1.0 / std::sqrt(3.0)) / 2.0;
    for (const auto& s : report.states) {
        CHECK(s.roundtrip_fidelity >= 1.0 - 1e-12);
        CHECK(s.marginal_alice.matrix()(0, 0).real() == doctest::Approx(hi).epsilon(1e-12));
        CHECK(s.marginal_bob.matrix()(0, 0).real() == doctest::Approx(hi).epsilon(1e-12));
    }
    CHECK(report.max_pairwise_marginal_distance_alice < 1e-12);
    CHECK(report.max_pairwise_marginal_distance_bob < 1e-12);

    REQUIRE(report.bipartite_examples.size() == 2);
    // self-consistency: the second example is the masked diagonal state
    const DensityMatrix expected = maskers::mask(
        maskers::qubit_masker(std::atan(std::sqrt(2.0)), kPi / 4.0),
        qcore::bloch_to_density(qcore::BlochVector(1.0, 0.0, 0.0)));
    CHECK(qcore::trace_distance(report.bipartite_examples[1], expected) < 1e-13);
}

TEST_CASE("meridian sweep matches the closed form") {
    SweepConfig cfg;
    cfg.phi_list = {0.0, 30.0 * kDeg, 60.0 * kDeg};
    cfg.shift_list = degree_grid(-40.0, 40.0, 2.0);
    cfg.direction = ShiftDirection::Meridian;

    const auto records = run_sweep(cfg);
    REQUIRE(records.size() == 3 * 41);
    for (const auto& r : records) {
        const double expected = meridian_trace_distance(r.phi, r.shift);
        CHECK(std::abs(r.trace_distance - expected) < 1e-10);
        CHECK_FALSE(r.std_error.has_value());
    }
}

TEST_CASE("single meridian point: phi = 0, shift = 30 degrees") {
    SweepConfig cfg;
    cfg.phi_list = {0.0};
    cfg.shift_list = {30.0 * kDeg};
    cfg.direction = ShiftDirection::Meridian;
    const auto records = run_sweep(cfg);
    REQUIRE(records.size() == 1);
    const double expected = std::sin(15.0 * kDeg) * std::sin(15.0 * kDeg);  // 0.066987...
    CHECK(records[0].trace_distance == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.066987298107780677).epsilon(1e-12));
}

TEST_CASE("parallel sweep is identically zero") {
    SweepConfig cfg;
    cfg.phi_list = {0.0, 30.0 * kDeg, 60.0 * kDeg};
    cfg.shift_list = degree_grid(-40.0, 40.0, 2.0);
    cfg.direction = ShiftDirection::Parallel;
    for (const auto& r : run_sweep(cfg)) CHECK(r.trace_distance < 1e-12);
}

TEST_CASE("zero shift gives zero distance") {
    SweepConfig cfg;
    cfg.phi_list = {30.0 * kDeg};
    cfg.shift_list = {0.0};
    cfg.direction = ShiftDirection::Meridian;
    CHECK(run_sweep(cfg)[0].trace_distance < 1e-14);
}

TEST_CASE("sampled sweep stays within three standard errors") {
    SweepConfig cfg;
    cfg.phi_list = {0.0, 30.0 * kDeg, 60.0 * kDeg};
    cfg.shift_list = degree_grid(-40.0, 40.0, 2.0);
    cfg.direction = ShiftDirection::Meridian;
    cfg.shots = 100000;
    cfg.seed = 0;

    const auto records = run_sweep(cfg);
    std::size_t within = 0;
    for (const auto& r : records) {
        REQUIRE(r.std_error.has_value());
        const double expected = meridian_trace_distance(r.phi, r.shift);
        if (std::abs(r.trace_distance - expected) <= 3.0 * *r.std_error + 1e-15) ++within;
    }
    CHECK(static_cast<double>(within) >= 0.99 * static_cast<double>(records.size()));
}

TEST_CASE("sweep validation") {
    SweepConfig cfg;
    cfg.phi_list = {0.0};
    cfg.shift_list = {kPi};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg.shift_list = {0.1};
    cfg.shots = 10;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("sample_counts") {
    std::mt19937_64 rng(103);
    SUBCASE("fair coin on the maximally mixed state") {
        const auto [plus, minus] = sample_counts(DensityMatrix::maximally_mixed(2), PauliAxis::Z,
                                                 10000, 42);
        CHECK(plus + minus == 10000);
        const double ratio = static_cast<double>(plus) / 10000.0;
        CHECK(ratio > 0.48);
        CHECK(ratio < 0.52);
    }
    SUBCASE("a pole state is deterministic") {
        const DensityMatrix zero = qcore::bloch_to_density(qcore::BlochVector(0.0, 0.0, 1.0));
        const auto [plus, minus] = sample_counts(zero, PauliAxis::Z, 777, 9);
        CHECK(plus == 777);
        CHECK(minus == 0);
    }
    SUBCASE("x and y axes see the equator") {
        const DensityMatrix d = qcore::bloch_to_density(qcore::BlochVector(1.0, 0.0, 0.0));
        const auto [plus, minus] = sample_counts(d, PauliAxis::X, 500, 5);
        CHECK(plus == 500);
        (void)minus;
    }
    SUBCASE("fixed seed reproduces counts exactly") {
        const DensityMatrix rho = qcore::ginibre_mixed_state(2, rng);
        const auto a = sample_counts(rho, PauliAxis::Y, 5000, 1234);
        const auto b = sample_counts(rho, PauliAxis::Y, 5000, 1234);
        CHECK(a == b);
    }
}

TEST_CASE("channel protection") {
    SUBCASE("diagonal state, quarter-turn error") {
        const DensityMatrix d = qcore::bloch_to_density(qcore::BlochVector(1.0, 0.0, 0.0));
        const ChannelReport r = run_channel_protection(d, kPi / 4.0);
        CHECK(r.recovered_fidelity >= 1.0 - 1e-12);
        CHECK(r.unprotected_fidelity == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("no error, nothing to protect against") {
        std::mt19937_64 rng(107);
        const ChannelReport r = run_channel_protection(qcore::ginibre_mixed_state(2, rng), 0.0);
        CHECK(r.recovered_fidelity >= 1.0 - 1e-12);
        CHECK(r.unprotected_fidelity >= 1.0 - 1e-12);
    }
    SUBCASE("phase eigenstates pass unharmed either way") {
        const DensityMatrix zero = qcore::bloch_to_density(qcore::BlochVector(0.0, 0.0, 1.0));
        const ChannelReport r = run_channel_protection(zero, 1.3);
        CHECK(r.recovered_fidelity >= 1.0 - 1e-12);
        CHECK(r.unprotected_fidelity >= 1.0 - 1e-12);
    }
    SUBCASE("recovery is exact for random states and phases") {
        std::mt19937_64 rng(109);
        std::uniform_real_distribution<double> ut(-kPi, kPi);
        for (int rep = 0; rep < 100; ++rep) {
            const DensityMatrix rho = rep % 2 == 0
                                          ? qcore::ginibre_mixed_state(2, rng)
                                          : DensityMatrix::from_pure(qcore::haar_pure_state(2, rng));
            const ChannelReport r = run_channel_protection(rho, ut(rng));
            CHECK(r.recovered_fidelity >= 1.0 - 1e-12);
        }
    }
}
