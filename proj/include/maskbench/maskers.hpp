// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "maskbench/qcore.hpp"

namespace maskbench::maskers {

using qcore::BlochVector;
using qcore::DensityMatrix;

// A disk in the Bloch ball: the states whose coordinates satisfy
// x sinα cosθ + y sinα sinθ + z cosα = c. Stored canonicalized, with c ≥ 0
// (sign flips apply to the whole (normal, c) pair) and, when c = 0, the
// α ∈ [0, π/2] representative.
struct Disk {
    double alpha = 0.0;
    double theta = 0.0;
    double c = 0.0;

    Disk(double alpha, double theta, double c);

    std::array<double, 3> normal() const;
    bool contains(const BlochVector& v, double tol) const;
};

// The disk with normal (α, θ) passing through the reference point rho0.
Disk disk_through(double alpha, double theta, const BlochVector& rho0);

bool disk_contains(const Disk& d, const BlochVector& v, double tol);

struct QubitLabel {
    double alpha = 0.0;
    double theta = 0.0;
};
struct VandermondeLabel {
    std::size_t dim = 0;
};
struct HighDimLabel {
    std::size_t dim = 0;
    std::vector<double> alpha;
    std::vector<double> theta;
};
using MaskerLabel = std::variant<QubitLabel, VandermondeLabel, HighDimLabel>;

// A masking isometry, stored as its column matrix V (out_dim x in_dim):
// the action on states is rho -> V rho V†, with the blank ancilla already
// absorbed. The free columns of any unitary dilation are not represented.
class Masker {
  public:
    Masker(ComplexMatrix columns, MaskerLabel label);

    std::size_t in_dim() const { return columns_.cols(); }
    std::size_t out_dim() const { return columns_.rows(); }
    const ComplexMatrix& columns() const { return columns_; }
    const MaskerLabel& label() const { return label_; }

  private:
    ComplexMatrix columns_;
    MaskerLabel label_;
};

// The 4x2 qubit masker: |0⟩ -> cos(α/2)|00⟩ + sin(α/2)|11⟩ and
// |1⟩ -> e^{-iθ}(sin(α/2)|00⟩ − cos(α/2)|11⟩). Masks the disk D_α^θ.
// θ is canonicalized to 0 when α = 0 (it is physically irrelevant there).
Masker qubit_masker(double alpha, double theta);

// The d²xd isometry |k⟩ -> (1/√d) Σ_l ω^{kl} |l⟩|l⟩ with ω = e^{2πi/d}.
// Masks every diagonal mixture (and more) to marginals I/d.
Masker vandermonde_masker(std::size_t d);

// Even-dimensional family acting pairwise on basis pairs (2i, 2i+1) with
// per-block angles (α_i, θ_i); the masked set is d²−d dimensional.
struct HighDimFamily {
    std::size_t dim = 0;            // even, d = 2n
    std::vector<double> p;          // block weights, p_i ≥ 0, Σ p_i = 1
    std::vector<double> c;          // per-block disk offsets, |c_i| ≤ 1
    std::vector<double> alpha;      // n block angles
    std::vector<double> theta;

    HighDimFamily(std::size_t dim, std::vector<double> p, std::vector<double> c,
                  std::vector<double> alpha, std::vector<double> theta);

    std::size_t blocks() const { return dim / 2; }
};

Masker highdim_masker(const HighDimFamily& fam);

// Assembles the block-form state with diagonal blocks p_i D_i (D_i the qubit
// state of bloch_per_block[i], constrained to the i-th disk) and free
// off-diagonal 2x2 blocks F_jk listed row-major for j < k.
DensityMatrix highdim_maskable_state(const HighDimFamily& fam,
                                     const std::vector<BlochVector>& bloch_per_block,
                                     const std::vector<ComplexMatrix>& offdiag);

// V rho V†.
DensityMatrix mask(const Masker& m, const DensityMatrix& rho);

// V† rho_ab V, renormalized; throws if rho_ab has no overlap with the
// masker's range.
DensityMatrix unmask(const Masker& m, const DensityMatrix& rho_ab);

// (Tr_B, Tr_A) of a bipartite state.
std::pair<DensityMatrix, DensityMatrix> marginals(const DensityMatrix& rho_ab, std::size_t d_a,
                                                  std::size_t d_b);

}  // namespace maskbench::maskers
