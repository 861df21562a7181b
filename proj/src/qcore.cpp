// SPDX-License-Identifier: Apache-2.0

#include "maskbench/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maskbench::qcore {

namespace {

void check_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("density matrix not square");
    if (mat.rows() == 0 || mat.rows() > kMaxDimension)
        throw std::invalid_argument("density matrix dimension out of range [1, 64]");
    if (!mat.is_finite()) throw std::invalid_argument("density matrix has non-finite entries");

    const ComplexMatrix herm = mat.hermitian_part();
    if (mat.max_abs_diff(herm) > kStateTolerance) throw Error("not Hermitian");
    const Complex tr = herm.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kStateTolerance) throw Error("trace is not 1");
    const HermitianEigen eig = eigen_hermitian(herm);
    if (eig.values.front() < -kStateTolerance) throw Error("not positive semidefinite");

    dim_ = herm.rows();
    mat_ = herm;
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("maximally_mixed: dimension must be positive");
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0 / static_cast<double>(dim), 0.0};
    return DensityMatrix(std::move(m));
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw std::invalid_argument("pure state must have positive dimension");
    double n2 = 0.0;
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("pure state has non-finite amplitudes");
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > kStateTolerance) throw Error("pure state is not normalized");
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (n2 < 1e-28) throw std::invalid_argument("cannot normalize a zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= inv;
    return PureState(std::move(amplitudes));
}

PureState PureState::basis_state(std::size_t dim, std::size_t k) {
    if (k >= dim) throw std::invalid_argument("basis_state: index out of range");
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[k] = Complex{1.0, 0.0};
    return PureState(std::move(amps));
}

BlochVector::BlochVector(double x, double y, double z) : x(x), y(y), z(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw std::invalid_argument("Bloch vector has non-finite components");
    if (x * x + y * y + z * z > 1.0 + kStateTolerance)
        throw Error("Bloch vector outside the unit ball");
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() * b.dim() > kMaxDimension)
        throw Error("tensor: product dimension exceeds the configured maximum of 64");
    return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t d_a, std::size_t d_b,
                            Subsystem keep) {
    if (rho.dim() != d_a * d_b)
        throw std::invalid_argument("partial_trace: dims do not factor the state dimension");
    const ComplexMatrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        ComplexMatrix out(d_a, d_a);
        for (std::size_t i = 0; i < d_a; ++i)
            for (std::size_t j = 0; j < d_a; ++j)
                for (std::size_t k = 0; k < d_b; ++k) out(i, j) += m(i * d_b + k, j * d_b + k);
        return DensityMatrix(std::move(out));
    }
    ComplexMatrix out(d_b, d_b);
    for (std::size_t i = 0; i < d_b; ++i)
        for (std::size_t j = 0; j < d_b; ++j)
            for (std::size_t k = 0; k < d_a; ++k) out(i, j) += m(k * d_b + i, k * d_b + j);
    return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    check_same_dim(a, b, "trace_distance");
    const HermitianEigen eig = eigen_hermitian(a.matrix() - b.matrix());
    double s = 0.0;
    for (double v : eig.values) s += std::abs(v);
    return std::clamp(0.5 * s, 0.0, 1.0);
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    check_same_dim(a, b, "fidelity");
    const std::size_t d = a.dim();

    // Eigenvalues below this are solver noise on zero modes; the square
    // root would amplify them from 1e-16 to 1e-8.
    constexpr double kEigenvalueFloor = 1e-13;

    const HermitianEigen ea = eigen_hermitian(a.matrix());
    ComplexMatrix sqrt_a(d, d);
    {
        // sqrt(a) = V diag(sqrt(λ)) V†
        ComplexMatrix scaled = ea.vectors;
        for (std::size_t c = 0; c < d; ++c) {
            const double root = ea.values[c] > kEigenvalueFloor ? std::sqrt(ea.values[c]) : 0.0;
            for (std::size_t r = 0; r < d; ++r) scaled(r, c) *= root;
        }
        sqrt_a = scaled * ea.vectors.adjoint();
    }

    const ComplexMatrix inner = sqrt_a * b.matrix() * sqrt_a;
    const HermitianEigen ei = eigen_hermitian(inner);
    double s = 0.0;
    for (double v : ei.values)
        if (v > kEigenvalueFloor) s += std::sqrt(v);
    return std::clamp(s * s, 0.0, 1.0);
}

DensityMatrix bloch_to_density(const BlochVector& v) {
    if (v.x * v.x + v.y * v.y + v.z * v.z > 1.0 + kStateTolerance)
        throw Error("Bloch vector outside the unit ball");
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex{(1.0 + v.z) / 2.0, 0.0};
    m(0, 1) = Complex{v.x / 2.0, -v.y / 2.0};
    m(1, 0) = Complex{v.x / 2.0, v.y / 2.0};
    m(1, 1) = Complex{(1.0 - v.z) / 2.0, 0.0};
    return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("density_to_bloch: state must be a qubit");
    const ComplexMatrix& m = rho.matrix();
    const double x = 2.0 * m(1, 0).real();
    const double y = 2.0 * m(1, 0).imag();
    const double z = (m(0, 0) - m(1, 1)).real();
    return BlochVector(x, y, z);
}

GellMannBasis gellmann(std::size_t d) {
    if (d < 2) throw std::invalid_argument("gellmann: dimension must be at least 2");
    if (d > kMaxDimension) throw std::invalid_argument("gellmann: dimension exceeds 64");

    GellMannBasis basis;
    basis.dim = d;
    basis.generators.reserve(d * d - 1);

    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = Complex{1.0, 0.0};
            m(k, j) = Complex{1.0, 0.0};
            basis.generators.push_back(std::move(m));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = Complex{0.0, -1.0};
            m(k, j) = Complex{0.0, 1.0};
            basis.generators.push_back(std::move(m));
        }
    for (std::size_t l = 1; l < d; ++l) {
        const double f = std::sqrt(2.0 / (static_cast<double>(l) * (static_cast<double>(l) + 1.0)));
        ComplexMatrix m(d, d);
        for (std::size_t i = 0; i < l; ++i) m(i, i) = Complex{f, 0.0};
        m(l, l) = Complex{-f * static_cast<double>(l), 0.0};
        basis.generators.push_back(std::move(m));
    }
    return basis;
}

std::vector<double> qudit_coords(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    if (d < 2) throw std::invalid_argument("qudit_coords: dimension must be at least 2");
    const GellMannBasis basis = gellmann(d);

    std::vector<double> coords;
    coords.reserve(basis.generators.size());
    double norm2 = 0.0;
    for (const auto& g : basis.generators) {
        const double x = (rho.matrix() * g).trace().real();
        coords.push_back(x);
        norm2 += x * x;
    }
    const double bound = 2.0 * (static_cast<double>(d) - 1.0) / static_cast<double>(d);
    if (norm2 > bound + kStateTolerance)
        throw Error("coordinate norm exceeds the pure-state bound");
    return coords;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (u.rows() != u.cols() || u.rows() != rho.dim())
        throw std::invalid_argument("apply_unitary: shape mismatch");
    if ((u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.rows())) > kStateTolerance)
        throw std::invalid_argument("apply_unitary: matrix is not unitary");
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace maskbench::qcore
