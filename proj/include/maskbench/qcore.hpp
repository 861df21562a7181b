// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "maskbench/complex_matrix.hpp"
#include "maskbench/error.hpp"

namespace maskbench::qcore {

// Largest state dimension the simulator accepts. Anything bigger is out of
// scope for dense, exact simulation.
inline constexpr std::size_t kMaxDimension = 64;

// Tolerance for the physicality checks (Hermiticity, unit trace, positive
// semidefiniteness, unit norm).
inline constexpr double kStateTolerance = 1e-10;

class PureState;

// d x d complex Hermitian, PSD, unit-trace matrix. The constructor enforces
// all three within kStateTolerance and stores the exactly-Hermitian part.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix mat);

    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const ComplexMatrix& matrix() const { return mat_; }

  private:
    std::size_t dim_ = 0;
    ComplexMatrix mat_;
};

// Unit-norm complex amplitude vector.
class PureState {
  public:
    explicit PureState(std::vector<Complex> amplitudes);

    // Normalizes exactly before constructing; rejects (near-)zero vectors.
    static PureState normalized(std::vector<Complex> amplitudes);

    static PureState basis_state(std::size_t dim, std::size_t k);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  private:
    std::vector<Complex> amplitudes_;
};

// Point in the closed unit ball; the SU(2) coordinates of a qubit state.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    BlochVector() = default;
    BlochVector(double x, double y, double z);

    double norm() const;
};

// The d²−1 generalized Gell-Mann generators of SU(d), canonical order:
// symmetric pairs, antisymmetric pairs, then diagonal. Tr(Λi Λj) = 2δij.
struct GellMannBasis {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> generators;
};

enum class Subsystem { A, B };

// Tensor product; basis ordering is A-major (index = i_A * d_b + i_B).
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state of one party of a bipartite rho with dims (d_a, d_b).
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t d_a, std::size_t d_b,
                            Subsystem keep);

// T(a,b) = (1/2)‖a−b‖₁, computed from the eigenvalues of the Hermitian
// difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))²; |⟨ψa|ψb⟩|² for pure inputs.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// rho = (I + xσx + yσy + zσz)/2 and its inverse.
DensityMatrix bloch_to_density(const BlochVector& v);
BlochVector density_to_bloch(const DensityMatrix& rho);

GellMannBasis gellmann(std::size_t d);

// x_i = Tr(rho Λ_i); the squared norm never exceeds 2(d−1)/d for a
// physical state.
std::vector<double> qudit_coords(const DensityMatrix& rho);

// U rho U† for a unitary U (unitarity checked within kStateTolerance).
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

}  // namespace maskbench::qcore
