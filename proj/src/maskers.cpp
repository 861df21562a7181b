// SPDX-License-Identifier: Apache-2.0

#include "maskbench/maskers.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

namespace maskbench::maskers {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 3> angles_to_normal(double alpha, double theta) {
    return {std::sin(alpha) * std::cos(theta), std::sin(alpha) * std::sin(theta), std::cos(alpha)};
}

}  // namespace

Disk::Disk(double alpha_in, double theta_in, double c_in) : alpha(alpha_in), theta(theta_in), c(c_in) {
    if (!(alpha >= 0.0 && alpha <= kPi)) throw std::invalid_argument("disk: alpha must lie in [0, pi]");
    if (std::abs(c) > 1.0 + 1e-12) throw std::invalid_argument("disk: |c| > 1 misses the Bloch ball");

    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0.0) theta += 2.0 * kPi;

    // Canonical representative: flip (normal, c) so that c ≥ 0; at c = 0
    // keep α ∈ [0, π/2], and at α = π/2 keep θ ∈ [0, π).
    const auto flip = [&] {
        alpha = kPi - alpha;
        theta = std::fmod(theta + kPi, 2.0 * kPi);
        c = -c;
    };
    if (c < -1e-15) {
        flip();
    } else if (std::abs(c) <= 1e-15) {
        c = 0.0;
        if (alpha > kPi / 2.0 + 1e-15)
            flip();
        else if (std::abs(alpha - kPi / 2.0) <= 1e-15 && theta >= kPi)
            flip();
    }
    if (alpha <= 1e-15 || alpha >= kPi - 1e-15) theta = 0.0;  // polar normals: θ is irrelevant
}

std::array<double, 3> Disk::normal() const { return angles_to_normal(alpha, theta); }

bool Disk::contains(const BlochVector& v, double tol) const {
    if (tol < 0.0) throw std::invalid_argument("disk_contains: tolerance must be non-negative");
    const auto n = normal();
    const double dot = n[0] * v.x + n[1] * v.y + n[2] * v.z;
    return std::abs(dot - c) <= tol && v.norm() <= 1.0 + tol;
}

Disk disk_through(double alpha, double theta, const BlochVector& rho0) {
    if (!(alpha >= 0.0 && alpha <= kPi)) throw std::invalid_argument("disk_through: alpha must lie in [0, pi]");
    const auto n = angles_to_normal(alpha, theta);
    const double c = n[0] * rho0.x + n[1] * rho0.y + n[2] * rho0.z;
    assert(std::abs(c) <= 1.0 + 1e-12);  // guaranteed for rho0 inside the ball
    return Disk(alpha, theta, c);
}

bool disk_contains(const Disk& d, const BlochVector& v, double tol) { return d.contains(v, tol); }

Masker::Masker(ComplexMatrix columns, MaskerLabel label)
    : columns_(std::move(columns)), label_(std::move(label)) {
    if (columns_.rows() == 0 || columns_.cols() == 0)
        throw std::invalid_argument("masker: empty column matrix");
    if (columns_.rows() > qcore::kMaxDimension)
        throw std::invalid_argument("masker: output dimension exceeds 64");
    const ComplexMatrix gram = columns_.adjoint() * columns_;
    if (gram.max_abs_diff(ComplexMatrix::identity(columns_.cols())) > qcore::kStateTolerance)
        throw Error("masker columns are not an isometry");
}

Masker qubit_masker(double alpha, double theta) {
    if (!(alpha >= 0.0 && alpha <= kPi))
        throw std::invalid_argument("qubit_masker: alpha must lie in [0, pi]");
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0.0) theta += 2.0 * kPi;
    if (std::abs(alpha) <= 1e-15) theta = 0.0;

    const double ch = std::cos(alpha / 2.0);
    const double sh = std::sin(alpha / 2.0);
    const Complex ph = std::exp(Complex{0.0, -theta});

    ComplexMatrix v(4, 2);
    v(0, 0) = Complex{ch, 0.0};   // |00⟩
    v(3, 0) = Complex{sh, 0.0};   // |11⟩
    v(0, 1) = ph * sh;
    v(3, 1) = -ph * ch;
    return Masker(std::move(v), QubitLabel{alpha, theta});
}

Masker vandermonde_masker(std::size_t d) {
    if (d < 2) throw std::invalid_argument("vandermonde_masker: dimension must be at least 2");
    if (d * d > qcore::kMaxDimension)
        throw std::invalid_argument("vandermonde_masker: output dimension d^2 exceeds 64");

    ComplexMatrix v(d * d, d);
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const double ang = 2.0 * kPi * static_cast<double>(k * l % d) / static_cast<double>(d);
            v(l * d + l, k) = inv * Complex{std::cos(ang), std::sin(ang)};
        }
    return Masker(std::move(v), VandermondeLabel{d});
}

HighDimFamily::HighDimFamily(std::size_t dim_in, std::vector<double> p_in, std::vector<double> c_in,
                             std::vector<double> alpha_in, std::vector<double> theta_in)
    : dim(dim_in), p(std::move(p_in)), c(std::move(c_in)), alpha(std::move(alpha_in)),
      theta(std::move(theta_in)) {
    if (dim < 2 || dim % 2 != 0)
        throw std::invalid_argument("highdim family: dimension must be even and at least 2");
    const std::size_t n = dim / 2;
    if (p.size() != n || c.size() != n || alpha.size() != n || theta.size() != n)
        throw std::invalid_argument("highdim family: parameter vectors must have d/2 entries");
    double sum = 0.0;
    for (double w : p) {
        if (w < -1e-12) throw std::invalid_argument("highdim family: weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("highdim family: weights must sum to 1");
    for (double ci : c)
        if (std::abs(ci) > 1.0 + 1e-12)
            throw std::invalid_argument("highdim family: |c_i| must not exceed 1");
}

Masker highdim_masker(const HighDimFamily& fam) {
    const std::size_t d = fam.dim;
    if (d * d > qcore::kMaxDimension)
        throw std::invalid_argument("highdim_masker: output dimension d^2 exceeds 64");

    ComplexMatrix v(d * d, d);
    for (std::size_t i = 0; i < fam.blocks(); ++i) {
        const std::size_t a = 2 * i;      // block basis indices a, a+1
        const double ch = std::cos(fam.alpha[i] / 2.0);
        const double sh = std::sin(fam.alpha[i] / 2.0);
        const Complex ph = std::exp(Complex{0.0, -fam.theta[i]});
        v(a * d + a, a) = Complex{ch, 0.0};
        v((a + 1) * d + (a + 1), a) = Complex{sh, 0.0};
        v(a * d + a, a + 1) = ph * sh;
        v((a + 1) * d + (a + 1), a + 1) = -ph * ch;
    }
    return Masker(std::move(v), HighDimLabel{d, fam.alpha, fam.theta});
}

DensityMatrix highdim_maskable_state(const HighDimFamily& fam,
                                     const std::vector<BlochVector>& bloch_per_block,
                                     const std::vector<ComplexMatrix>& offdiag) {
    const std::size_t n = fam.blocks();
    if (bloch_per_block.size() != n)
        throw std::invalid_argument("highdim_maskable_state: need one Bloch vector per block");
    if (offdiag.size() != n * (n - 1) / 2)
        throw std::invalid_argument("highdim_maskable_state: need n(n-1)/2 off-diagonal blocks");

    for (std::size_t i = 0; i < n; ++i) {
        const auto nrm = angles_to_normal(fam.alpha[i], fam.theta[i]);
        const BlochVector& b = bloch_per_block[i];
        if (std::abs(nrm[0] * b.x + nrm[1] * b.y + nrm[2] * b.z - fam.c[i]) > 1e-10)
            throw Error("block off its disk");
    }

    ComplexMatrix m(fam.dim, fam.dim);
    for (std::size_t i = 0; i < n; ++i) {
        const BlochVector& b = bloch_per_block[i];
        const double w = fam.p[i];
        const std::size_t a = 2 * i;
        m(a, a) = Complex{w * (1.0 + b.z) / 2.0, 0.0};
        m(a, a + 1) = Complex{w * b.x / 2.0, -w * b.y / 2.0};
        m(a + 1, a) = std::conj(m(a, a + 1));
        m(a + 1, a + 1) = Complex{w * (1.0 - b.z) / 2.0, 0.0};
    }
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k, ++idx) {
            const ComplexMatrix& f = offdiag[idx];
            if (f.rows() != 2 || f.cols() != 2)
                throw std::invalid_argument("highdim_maskable_state: off-diagonal blocks must be 2x2");
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) {
                    m(2 * j + r, 2 * k + c) = f(r, c);
                    m(2 * k + c, 2 * j + r) = std::conj(f(r, c));
                }
        }

    const HermitianEigen eig = eigen_hermitian(m);
    if (eig.values.front() < -qcore::kStateTolerance) throw Error("invalid F choice");
    return DensityMatrix(std::move(m));
}

DensityMatrix mask(const Masker& m, const DensityMatrix& rho) {
    if (rho.dim() != m.in_dim())
        throw std::invalid_argument("mask: state dimension does not match the masker input");
    return DensityMatrix(m.columns() * rho.matrix() * m.columns().adjoint());
}

DensityMatrix unmask(const Masker& m, const DensityMatrix& rho_ab) {
    if (rho_ab.dim() != m.out_dim())
        throw std::invalid_argument("unmask: state dimension does not match the masker output");
    ComplexMatrix r = m.columns().adjoint() * rho_ab.matrix() * m.columns();
    const double tr = r.trace().real();
    if (tr < 1e-12) throw Error("not in masker range");
    return DensityMatrix((Complex{1.0 / tr, 0.0}) * r);
}

std::pair<DensityMatrix, DensityMatrix> marginals(const DensityMatrix& rho_ab, std::size_t d_a,
                                                  std::size_t d_b) {
    return {qcore::partial_trace(rho_ab, d_a, d_b, qcore::Subsystem::A),
            qcore::partial_trace(rho_ab, d_a, d_b, qcore::Subsystem::B)};
}

}  // namespace maskbench::maskers
