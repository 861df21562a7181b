// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used to pin expected values. These
// deliberately avoid the library code paths they check: plain loops, a
// separate occupation-number algebra, and a normal-equations SVD.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "maskbench/complex_matrix.hpp"
#include "maskbench/maskers.hpp"
#include "maskbench/qcore.hpp"

namespace oracles {

using maskbench::Complex;
using maskbench::ComplexMatrix;

// Kronecker product by definition, independent of maskbench::kron.
inline ComplexMatrix kron_by_hand(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return out;
}

// Partial trace by explicit index bookkeeping.
inline ComplexMatrix trace_out_by_hand(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b,
                                       bool keep_a) {
    const std::size_t keep = keep_a ? d_a : d_b;
    ComplexMatrix out(keep, keep);
    for (std::size_t ia = 0; ia < d_a; ++ia)
        for (std::size_t ja = 0; ja < d_a; ++ja)
            for (std::size_t ib = 0; ib < d_b; ++ib)
                for (std::size_t jb = 0; jb < d_b; ++jb) {
                    const Complex v = m(ia * d_b + ib, ja * d_b + jb);
                    if (keep_a) {
                        if (ib == jb) out(ia, ja) += v;
                    } else {
                        if (ia == ja) out(ib, jb) += v;
                    }
                }
    return out;
}

// Trace distance of two diagonal states: half the absolute eigenvalue sum.
inline double diagonal_trace_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return 0.5 * s;
}

// ---------------------------------------------------------------------------
// Minimal second-quantization algebra over the four single-pair modes
// (H_A, V_A, H_B, V_B), written from scratch for cross-checking the
// photonics module. Occupations are dense 4-tuples.
// ---------------------------------------------------------------------------

using Occ4 = std::array<int, 4>;  // counts for H_A, V_A, H_B, V_B
using Poly4 = std::map<Occ4, Complex>;

inline constexpr int kHA = 0;
inline constexpr int kVA = 1;
inline constexpr int kHB = 2;
inline constexpr int kVB = 3;

inline Poly4 vac4() { return Poly4{{Occ4{0, 0, 0, 0}, Complex{1.0, 0.0}}}; }

inline Poly4 create4(const Poly4& s, int mode) {
    Poly4 out;
    for (const auto& [occ, amp] : s) {
        Occ4 next = occ;
        next[mode] += 1;
        out[next] += amp * std::sqrt(static_cast<double>(next[mode]));
    }
    return out;
}

inline Poly4 add4(const Poly4& a, const Poly4& b) {
    Poly4 out = a;
    for (const auto& [occ, amp] : b) out[occ] += amp;
    return out;
}

inline Poly4 scale4(const Poly4& a, Complex s) {
    Poly4 out;
    for (const auto& [occ, amp] : a) out[occ] = s * amp;
    return out;
}

// Fusion-gate relabeling: V_A <-> V_B with a factor i per vertical photon.
inline Poly4 pbs4(const Poly4& s) {
    Poly4 out;
    for (const auto& [occ, amp] : s) {
        Occ4 next = occ;
        std::swap(next[kVA], next[kVB]);
        const int v = occ[kVA] + occ[kVB];
        Complex phase{1.0, 0.0};
        for (int k = 0; k < v % 4; ++k) phase *= Complex{0.0, 1.0};
        out[next] += amp * phase;
    }
    return out;
}

// Coincidence projection onto one photon per site; basis |pol_A pol_B⟩,
// index pol_A*2 + pol_B. The vector is NOT normalized.
inline std::array<Complex, 4> coincidence4(const Poly4& s) {
    std::array<Complex, 4> kept{};
    for (const auto& [occ, amp] : s) {
        const int at_a = occ[kHA] + occ[kVA];
        const int at_b = occ[kHB] + occ[kVB];
        if (at_a != 1 || at_b != 1) continue;
        const int pa = occ[kVA] == 1 ? 1 : 0;
        const int pb = occ[kVB] == 1 ? 1 : 0;
        kept[static_cast<std::size_t>(pa * 2 + pb)] += amp;
    }
    return kept;
}

// Coherent-source fusion with the coherent expansion carried to
// `order` photons (3 bounds the truncation error of the 2-photon
// implementation). Returns the unnormalized post-selected 4-vector.
inline std::array<Complex, 4> coherent_fusion_oracle(Complex beta, Complex gamma, double p,
                                                     Complex amp, int order) {
    const Poly4 vac = vac4();
    Poly4 carrier = scale4(vac, Complex{std::sqrt(1.0 - p), 0.0});
    carrier = add4(carrier, scale4(add4(scale4(create4(vac, kHA), beta),
                                        scale4(create4(vac, kVA), gamma)),
                                   Complex{std::sqrt(p), 0.0}));

    const auto apply_diag = [](const Poly4& s) {
        return scale4(add4(create4(s, kHB), create4(s, kVB)), Complex{1.0 / std::sqrt(2.0), 0.0});
    };
    Poly4 joint = carrier;  // k = 0
    Poly4 powered = carrier;
    Complex coeff{1.0, 0.0};
    for (int k = 1; k <= order; ++k) {
        powered = apply_diag(powered);
        coeff *= amp / static_cast<double>(k);
        joint = add4(joint, scale4(powered, coeff));
    }
    return coincidence4(pbs4(joint));
}

// ---------------------------------------------------------------------------
// Rank of the marginal-pair map's finite-difference Jacobian at a maskable
// point, via singular values from the normal equations.
// ---------------------------------------------------------------------------

// Singular values (descending) of a real m x n matrix stored row-major,
// computed from the eigenvalues of JᵀJ.
inline std::vector<double> singular_values(const std::vector<std::vector<double>>& j) {
    const std::size_t n = j.empty() ? 0 : j.front().size();
    ComplexMatrix jtj(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            double s = 0.0;
            for (const auto& row : j) s += row[a] * row[b];
            jtj(a, b) = Complex{s, 0.0};
        }
    const maskbench::HermitianEigen eig = maskbench::eigen_hermitian(jtj);
    std::vector<double> sv;
    sv.reserve(n);
    for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
        sv.push_back(std::sqrt(std::max(*it, 0.0)));
    return sv;
}

// Flattens the (Tr_B, Tr_A) pair of the masked state into a real vector.
inline std::vector<double> marginal_pair_flat(const maskbench::maskers::Masker& m,
                                              const maskbench::qcore::DensityMatrix& rho) {
    namespace q = maskbench::qcore;
    const q::DensityMatrix masked = maskbench::maskers::mask(m, rho);
    const auto pair = maskbench::maskers::marginals(masked, rho.dim(), rho.dim());
    std::vector<double> flat;
    flat.reserve(4 * rho.dim() * rho.dim());
    for (const q::DensityMatrix* side : {&pair.first, &pair.second})
        for (std::size_t r = 0; r < side->dim(); ++r)
            for (std::size_t c = 0; c < side->dim(); ++c) {
                flat.push_back(side->matrix()(r, c).real());
                flat.push_back(side->matrix()(r, c).imag());
            }
    return flat;
}

// Central finite-difference Jacobian of the marginal-pair map with respect
// to the d²−1 generalized Gell-Mann coordinates at rho_star.
inline std::vector<std::vector<double>> marginal_jacobian(const maskbench::maskers::Masker& m,
                                                          const maskbench::qcore::DensityMatrix& rho_star,
                                                          double eps) {
    namespace q = maskbench::qcore;
    const std::size_t d = rho_star.dim();
    const q::GellMannBasis basis = q::gellmann(d);
    const std::vector<double> x0 = q::qudit_coords(rho_star);

    const auto state_at = [&](const std::vector<double>& x) {
        ComplexMatrix mat(d, d);
        for (std::size_t i = 0; i < d; ++i) mat(i, i) = Complex{1.0 / static_cast<double>(d), 0.0};
        for (std::size_t k = 0; k < basis.generators.size(); ++k)
            mat = mat + Complex{x[k] / 2.0, 0.0} * basis.generators[k];
        return q::DensityMatrix(mat);
    };

    const std::size_t params = basis.generators.size();
    std::vector<std::vector<double>> jacobian;  // rows = outputs, cols = params
    for (std::size_t k = 0; k < params; ++k) {
        std::vector<double> xp = x0;
        std::vector<double> xm = x0;
        xp[k] += eps;
        xm[k] -= eps;
        const std::vector<double> fp = marginal_pair_flat(m, state_at(xp));
        const std::vector<double> fm = marginal_pair_flat(m, state_at(xm));
        if (jacobian.empty()) jacobian.assign(fp.size(), std::vector<double>(params, 0.0));
        for (std::size_t r = 0; r < fp.size(); ++r)
            jacobian[r][k] = (fp[r] - fm[r]) / (2.0 * eps);
    }
    return jacobian;
}

}  // namespace oracles
