// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maskbench/maskers.hpp"
#include "maskbench/qcore.hpp"

namespace maskbench::experiments {

using qcore::BlochVector;
using qcore::DensityMatrix;

enum class ShiftDirection { Parallel, Meridian };
enum class PauliAxis { X, Y, Z };

// Grid for the zero-measure sweep: reference latitudes phi, displacement
// magnitudes, and an optional shot count for sampled statistics.
struct SweepConfig {
    std::vector<double> phi_list;      // radians
    std::vector<double> shift_list;    // radians, within (−π, π)
    ShiftDirection direction = ShiftDirection::Meridian;
    std::optional<std::uint64_t> shots;  // ≥ 100 when present
    std::uint64_t seed = 0;
};

struct SweepRecord {
    double phi = 0.0;
    double shift = 0.0;
    ShiftDirection direction = ShiftDirection::Meridian;
    double trace_distance = 0.0;
    std::optional<double> std_error;
};

// Reference state sin(phi/2)|H⟩ + cos(phi/2)|V⟩ shifted along a parallel
// (phase rotation) or a meridian (latitude change), masked with the α=θ=0
// masker; records T(ρ^B, ρ0^B). With shots set, Bob's population is
// estimated by binomial sampling and std_error carries the analytic
// binomial standard error of the estimate.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

// Closed form of the meridian sweep: (1/2)|cos(phi) − cos(phi+shift)|.
// The parallel sweep is identically zero.
double meridian_trace_distance(double phi, double shift);

struct DemoStateReport {
    BlochVector input;
    double roundtrip_fidelity = 0.0;
    DensityMatrix marginal_alice;
    DensityMatrix marginal_bob;
};

// Masking of five states on one oblique disk (the plane x+y+z = 1): per
// state, the round-trip fidelity and both marginals; the largest pairwise
// marginal trace distance on each side; and the bipartite states of the
// first two inputs.
struct MarginalDistance {
    std::size_t i = 0;
    std::size_t j = 0;
    double alice = 0.0;
    double bob = 0.0;
};

struct DemoReport {
    double masker_alpha = 0.0;
    double masker_theta = 0.0;
    double disk_offset = 0.0;
    std::vector<DemoStateReport> states;
    std::vector<MarginalDistance> pairwise_marginal_distances;
    double max_pairwise_marginal_distance_alice = 0.0;
    double max_pairwise_marginal_distance_bob = 0.0;
    std::vector<DensityMatrix> bipartite_examples;
};

DemoReport run_disk_demo();

// Binomial measurement counts on one Pauli axis: success probability is
// Tr(rho Π₊). Deterministic for a fixed seed.
std::pair<std::uint64_t, std::uint64_t> sample_counts(const DensityMatrix& rho, PauliAxis basis,
                                                      std::uint64_t shots, std::uint64_t seed);

struct ChannelReport {
    double t = 0.0;
    double recovered_fidelity = 0.0;
    double unprotected_fidelity = 0.0;
};

// Echo-style protection of a qubit against the common-mode phase error
// e^{−i σz t}: mask, flip the auxiliary qubit, send both halves through the
// channel, flip back, unmask. Recovery is exact for every t; the report
// also carries the fidelity of the bare, unprotected transmission.
ChannelReport run_channel_protection(const DensityMatrix& rho, double t);

}  // namespace maskbench::experiments
