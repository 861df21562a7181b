// SPDX-License-Identifier: Apache-2.0

#include "maskbench/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "maskbench/random_states.hpp"

namespace maskbench::experiments {

namespace {

constexpr double kPi = std::numbers::pi;

qcore::PureState latitude_state(double phi, double phase) {
    return qcore::PureState::normalized(
        {Complex{std::sin(phi / 2.0), 0.0},
         std::exp(Complex{0.0, phase}) * std::cos(phi / 2.0)});
}

DensityMatrix bob_marginal(const maskers::Masker& m, const qcore::PureState& psi) {
    const DensityMatrix masked = maskers::mask(m, DensityMatrix::from_pure(psi));
    return qcore::partial_trace(masked, 2, 2, qcore::Subsystem::B);
}

ComplexMatrix pauli(PauliAxis axis) {
    ComplexMatrix m(2, 2);
    switch (axis) {
        case PauliAxis::X:
            m(0, 1) = m(1, 0) = Complex{1.0, 0.0};
            break;
        case PauliAxis::Y:
            m(0, 1) = Complex{0.0, -1.0};
            m(1, 0) = Complex{0.0, 1.0};
            break;
        case PauliAxis::Z:
            m(0, 0) = Complex{1.0, 0.0};
            m(1, 1) = Complex{-1.0, 0.0};
            break;
    }
    return m;
}

}  // namespace

double meridian_trace_distance(double phi, double shift) {
    return 0.5 * std::abs(std::cos(phi) - std::cos(phi + shift));
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    for (double s : cfg.shift_list)
        if (!(s > -kPi && s < kPi))
            throw std::invalid_argument("sweep: shifts must lie within (-pi, pi)");
    if (cfg.shots && *cfg.shots < 100)
        throw std::invalid_argument("sweep: at least 100 shots required");

    const maskers::Masker m = maskers::qubit_masker(0.0, 0.0);

    std::vector<SweepRecord> records;
    records.reserve(cfg.phi_list.size() * cfg.shift_list.size());
    for (std::size_t i = 0; i < cfg.phi_list.size(); ++i) {
        const double phi = cfg.phi_list[i];
        const DensityMatrix reference = bob_marginal(m, latitude_state(phi, 0.0));
        const double q0 = reference.matrix()(0, 0).real();

        for (std::size_t j = 0; j < cfg.shift_list.size(); ++j) {
            const double shift = cfg.shift_list[j];
            const qcore::PureState shifted = cfg.direction == ShiftDirection::Parallel
                                                 ? latitude_state(phi, shift)
                                                 : latitude_state(phi + shift, 0.0);
            const DensityMatrix rho_b = bob_marginal(m, shifted);

            SweepRecord rec;
            rec.phi = phi;
            rec.shift = shift;
            rec.direction = cfg.direction;
            if (cfg.shots) {
                const std::uint64_t shots = *cfg.shots;
                const auto [plus, minus] = sample_counts(
                    rho_b, PauliAxis::Z, shots, qcore::mix_seed(cfg.seed, i * 7919 + j));
                (void)minus;
                const double q_hat =
                    static_cast<double>(plus) / static_cast<double>(shots);
                const double q_true = rho_b.matrix()(0, 0).real();
                rec.trace_distance = std::abs(q_hat - q0);
                rec.std_error = std::sqrt(q_true * (1.0 - q_true) / static_cast<double>(shots));
            } else {
                rec.trace_distance = qcore::trace_distance(rho_b, reference);
            }
            records.push_back(rec);
        }
    }
    return records;
}

DemoReport run_disk_demo() {
    const double alpha = std::atan(std::sqrt(2.0));
    const double theta = kPi / 4.0;
    const maskers::Masker m = maskers::qubit_masker(alpha, theta);

    const std::vector<BlochVector> inputs = {
        BlochVector(0.0, 0.0, 1.0),
        BlochVector(1.0, 0.0, 0.0),
        BlochVector(0.0, 1.0, 0.0),
        BlochVector(2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0),
        BlochVector(0.5, 0.5, 0.0),
    };

    DemoReport report;
    report.masker_alpha = alpha;
    report.masker_theta = theta;
    report.disk_offset = maskers::disk_through(alpha, theta, inputs.front()).c;

    std::vector<DensityMatrix> masked;
    for (const auto& v : inputs) {
        const DensityMatrix rho = qcore::bloch_to_density(v);
        const DensityMatrix rho_ab = maskers::mask(m, rho);
        const auto [rho_a, rho_b] = maskers::marginals(rho_ab, 2, 2);
        const DensityMatrix back = maskers::unmask(m, rho_ab);

        DemoStateReport s{v, qcore::fidelity(rho, back), rho_a, rho_b};
        report.states.push_back(std::move(s));
        masked.push_back(rho_ab);
    }

    for (std::size_t i = 0; i < report.states.size(); ++i)
        for (std::size_t j = i + 1; j < report.states.size(); ++j) {
            MarginalDistance entry;
            entry.i = i;
            entry.j = j;
            entry.alice = qcore::trace_distance(report.states[i].marginal_alice,
                                                report.states[j].marginal_alice);
            entry.bob = qcore::trace_distance(report.states[i].marginal_bob,
                                              report.states[j].marginal_bob);
            report.max_pairwise_marginal_distance_alice =
                std::max(report.max_pairwise_marginal_distance_alice, entry.alice);
            report.max_pairwise_marginal_distance_bob =
                std::max(report.max_pairwise_marginal_distance_bob, entry.bob);
            report.pairwise_marginal_distances.push_back(entry);
        }

    report.bipartite_examples.push_back(masked[0]);
    report.bipartite_examples.push_back(masked[1]);
    return report;
}

std::pair<std::uint64_t, std::uint64_t> sample_counts(const DensityMatrix& rho, PauliAxis basis,
                                                      std::uint64_t shots, std::uint64_t seed) {
    if (rho.dim() != 2) throw std::invalid_argument("sample_counts: state must be a qubit");
    if (shots < 1) throw std::invalid_argument("sample_counts: need at least one shot");

    // Π₊ = (I + σ)/2
    const ComplexMatrix projector =
        Complex{0.5, 0.0} * (ComplexMatrix::identity(2) + pauli(basis));
    double prob = (rho.matrix() * projector).trace().real();
    prob = std::clamp(prob, 0.0, 1.0);

    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::uint64_t> binom(shots, prob);
    const std::uint64_t plus = binom(rng);
    return {plus, shots - plus};
}

ChannelReport run_channel_protection(const DensityMatrix& rho, double t) {
    if (rho.dim() != 2) throw std::invalid_argument("channel protection: state must be a qubit");

    const maskers::Masker m = maskers::qubit_masker(0.0, 0.0);

    ComplexMatrix rz(2, 2);
    rz(0, 0) = std::exp(Complex{0.0, -t});
    rz(1, 1) = std::exp(Complex{0.0, t});
    const ComplexMatrix flip_b = kron(ComplexMatrix::identity(2), pauli(PauliAxis::X));
    const ComplexMatrix channel = kron(rz, rz);

    DensityMatrix state = maskers::mask(m, rho);
    state = qcore::apply_unitary(state, flip_b);
    state = qcore::apply_unitary(state, channel);
    state = qcore::apply_unitary(state, flip_b);
    const DensityMatrix recovered = maskers::unmask(m, state);

    const DensityMatrix bare = qcore::apply_unitary(rho, rz);

    ChannelReport report;
    report.t = t;
    report.recovered_fidelity = qcore::fidelity(rho, recovered);
    report.unprotected_fidelity = qcore::fidelity(rho, bare);
    return report;
}

}  // namespace maskbench::experiments
