// SPDX-License-Identifier: Apache-2.0

#include "maskbench/random_states.hpp"

#include <cmath>

namespace maskbench::qcore {

PureState haar_pure_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(dim);
    for (auto& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex{re, im};
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix ginibre_mixed_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = Complex{re, im};
        }
    ComplexMatrix gg = g * g.adjoint();
    const double tr = gg.trace().real();
    return DensityMatrix((Complex{1.0 / tr, 0.0}) * gg);
}

BlochVector random_bloch_in_ball(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    while (true) {
        const double x = uni(rng);
        const double y = uni(rng);
        const double z = uni(rng);
        if (x * x + y * y + z * z <= 1.0) return BlochVector(x, y, z);
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace maskbench::qcore
