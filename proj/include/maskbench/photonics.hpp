// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "maskbench/qcore.hpp"

namespace maskbench::photonics {

using qcore::DensityMatrix;
using qcore::PureState;

enum class Polarization : std::uint8_t { H = 0, V = 1 };
enum class Site : std::uint8_t { A = 0, B = 1 };

// A photonic mode label: polarization x output site x photon-pair slot.
// Ordering (pair, site, polarization) fixes the canonical term layout.
struct Mode {
    std::uint32_t pair = 0;
    Site site = Site::A;
    Polarization pol = Polarization::H;

    auto operator<=>(const Mode&) const = default;
};

// Sparse occupation-number vector; only occupied modes are listed, sorted by
// mode, counts >= 1.
using Occupation = std::vector<std::pair<Mode, std::uint32_t>>;

// A complex-weighted superposition of occupation-number basis states over
// the labeled modes, with standard Fock normalization: states reached by
// repeated apply_creation carry the usual sqrt(n!) factors, so inner
// products are the orthonormal-basis ones. Terms below 1e-14 in magnitude
// are pruned.
class ModeState {
  public:
    static ModeState vacuum();

    // A single occupation term; entries may arrive unsorted, counts must be
    // at least 1 and modes distinct.
    static ModeState single_term(Occupation occ, Complex amp);

    // a†_mode applied to every term (amplitude gains sqrt(n+1)).
    ModeState applied_creation(Mode m) const;

    ModeState scaled(Complex s) const;
    friend ModeState operator+(const ModeState& a, const ModeState& b);

    double norm_squared() const;
    ModeState normalized() const;

    const std::map<Occupation, Complex>& terms() const { return terms_; }

    friend Complex inner_product(const ModeState& a, const ModeState& b);
    friend ModeState pbs_convert(const ModeState& s);

  private:
    static constexpr double kPruneTolerance = 1e-14;
    void prune();

    std::map<Occupation, Complex> terms_;
};

// Mode relabeling of the polarizing-beam-splitter fusion gate, applied to
// every pair slot: H modes pass, V modes swap site and pick up a factor i
// per photon. Unitary on the mode algebra.
ModeState pbs_convert(const ModeState& s);

// Result of coincidence post-selection. `state` holds the normalized
// post-selected state, pure when the input path preserves purity.
struct FusionOutcome {
    std::variant<DensityMatrix, PureState> state;
    double success_probability = 0.0;
    std::optional<double> noise_coefficient;

    const PureState& pure() const;
    // The post-selected state as a density matrix (converts pure outcomes).
    DensityMatrix density() const;
};

// Keeps only the terms with exactly one photon at site A and one at site B
// for every photon-pair slot occurring in the state, and maps the result to
// the two-qudit polarization space (pair 0 carries the most significant
// bit). success_probability is the squared norm of the kept part. The
// reported pure state is phase-fixed: largest-magnitude amplitude made real
// positive.
FusionOutcome coincidence_postselect(const ModeState& s);

// Fusion of a (possibly mixed) polarization qubit with a |D⟩ ancilla;
// equals masking with the α=0, θ=0 qubit masker, success probability 1/2.
FusionOutcome fuse_qubit(const DensityMatrix& psi);

// Digit-wise fusion of a qudit encoded on num_pairs photons (dim ≤ 2^n).
// Output amplitudes pick up the parity sign (−1)^{popcount(k)} on |k⟩|k⟩;
// success probability 2^{−n}.
FusionOutcome fuse_qudit(const PureState& psi, std::size_t num_pairs);

// Fusion of a single-photon qubit (source efficiency p) with a weak
// coherent state of amplitude amp, truncated at two photons per pulse.
// The multi-photon tail feeds one spurious cross-polarized term whose
// relative weight — the reported noise coefficient — is
// sqrt((1−p)/(2p))·|amp|.
FusionOutcome fuse_coherent(const PureState& psi, double p, Complex amp);

}  // namespace maskbench::photonics
