// SPDX-License-Identifier: Apache-2.0

#include "maskbench/photonics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>

namespace maskbench::photonics {

namespace {

Complex i_power(std::uint32_t n) {
    switch (n % 4) {
        case 0: return Complex{1.0, 0.0};
        case 1: return Complex{0.0, 1.0};
        case 2: return Complex{-1.0, 0.0};
        default: return Complex{0.0, -1.0};
    }
}

}  // namespace

ModeState ModeState::vacuum() {
    ModeState s;
    s.terms_[Occupation{}] = Complex{1.0, 0.0};
    return s;
}

ModeState ModeState::single_term(Occupation occ, Complex amp) {
    std::sort(occ.begin(), occ.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (occ[i].second == 0) throw std::invalid_argument("single_term: zero occupation count");
        if (i > 0 && occ[i].first == occ[i - 1].first)
            throw std::invalid_argument("single_term: duplicate mode");
    }
    ModeState s;
    s.terms_[std::move(occ)] = amp;
    s.prune();
    return s;
}

ModeState ModeState::applied_creation(Mode m) const {
    ModeState out;
    for (const auto& [occ, amp] : terms_) {
        Occupation next = occ;
        auto it = std::lower_bound(next.begin(), next.end(), m,
                                   [](const auto& entry, const Mode& mode) { return entry.first < mode; });
        std::uint32_t n = 0;
        if (it != next.end() && it->first == m) {
            n = it->second;
            it->second = n + 1;
        } else {
            next.insert(it, {m, 1});
        }
        out.terms_[next] += amp * std::sqrt(static_cast<double>(n) + 1.0);
    }
    out.prune();
    return out;
}

ModeState ModeState::scaled(Complex s) const {
    ModeState out;
    for (const auto& [occ, amp] : terms_) out.terms_[occ] = s * amp;
    out.prune();
    return out;
}

ModeState operator+(const ModeState& a, const ModeState& b) {
    ModeState out = a;
    for (const auto& [occ, amp] : b.terms_) out.terms_[occ] += amp;
    out.prune();
    return out;
}

double ModeState::norm_squared() const {
    double s = 0.0;
    for (const auto& [occ, amp] : terms_) s += std::norm(amp);
    return s;
}

ModeState ModeState::normalized() const {
    const double n2 = norm_squared();
    if (n2 < 1e-28) throw Error("cannot normalize a zero mode state");
    return scaled(Complex{1.0 / std::sqrt(n2), 0.0});
}

Complex inner_product(const ModeState& a, const ModeState& b) {
    // Iterate over the smaller term map.
    const ModeState& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const ModeState& large = a.terms_.size() <= b.terms_.size() ? b : a;
    const bool swapped = &small != &a;
    Complex s{0.0, 0.0};
    for (const auto& [occ, amp] : small.terms_) {
        auto it = large.terms_.find(occ);
        if (it == large.terms_.end()) continue;
        s += swapped ? std::conj(it->second) * amp : std::conj(amp) * it->second;
    }
    return s;
}

void ModeState::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneTolerance)
            it = terms_.erase(it);
        else
            ++it;
    }
}

ModeState pbs_convert(const ModeState& s) {
    ModeState out;
    for (const auto& [occ, amp] : s.terms()) {
        Occupation next;
        next.reserve(occ.size());
        std::uint32_t v_photons = 0;
        for (const auto& [mode, count] : occ) {
            Mode m = mode;
            if (m.pol == Polarization::V) {
                m.site = (m.site == Site::A) ? Site::B : Site::A;
                v_photons += count;
            }
            next.push_back({m, count});
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // The V relabeling is a mode permutation, so Fock factors carry over.
        out.terms_[std::move(next)] += amp * i_power(v_photons);
    }
    out.prune();
    return out;
}

namespace {

struct RawPostselection {
    std::vector<Complex> kept;   // dim 4^n, index k_a * 2^n + k_b
    double kept_norm2 = 0.0;
    std::size_t num_pairs = 0;
};

// Collects the coincidence terms (exactly one photon at each site of every
// pair slot) into the two-qudit polarization basis.
RawPostselection postselect_raw(const ModeState& s) {
    std::set<std::uint32_t> pair_set;
    for (const auto& [occ, amp] : s.terms())
        for (const auto& [mode, count] : occ) pair_set.insert(mode.pair);
    if (pair_set.empty()) throw Error("post-selection empty");

    std::vector<std::uint32_t> pairs(pair_set.begin(), pair_set.end());
    const std::size_t n = pairs.size();
    if (n > 5) throw std::invalid_argument("post-selection: more than 5 photon pairs unsupported");

    const std::size_t side = std::size_t{1} << n;
    RawPostselection out;
    out.num_pairs = n;
    out.kept.assign(side * side, Complex{0.0, 0.0});

    for (const auto& [occ, amp] : s.terms()) {
        // per pair and site: photon count and the polarization seen there
        bool keep = true;
        std::size_t ka = 0;
        std::size_t kb = 0;
        for (std::size_t j = 0; j < n && keep; ++j) {
            const std::uint32_t pair = pairs[j];
            std::uint32_t count_a = 0;
            std::uint32_t count_b = 0;
            Polarization pol_a = Polarization::H;
            Polarization pol_b = Polarization::H;
            for (const auto& [mode, count] : occ) {
                if (mode.pair != pair) continue;
                if (mode.site == Site::A) {
                    count_a += count;
                    pol_a = mode.pol;
                } else {
                    count_b += count;
                    pol_b = mode.pol;
                }
            }
            if (count_a != 1 || count_b != 1) {
                keep = false;
                break;
            }
            const std::size_t bit = std::size_t{1} << (n - 1 - j);  // pair 0 = most significant
            if (pol_a == Polarization::V) ka |= bit;
            if (pol_b == Polarization::V) kb |= bit;
        }
        if (!keep) continue;
        out.kept[ka * side + kb] += amp;
        out.kept_norm2 += std::norm(amp);
    }

    // recompute the norm from the accumulated vector (terms may interfere)
    out.kept_norm2 = 0.0;
    for (const auto& z : out.kept) out.kept_norm2 += std::norm(z);
    if (out.kept_norm2 < 1e-14) throw Error("post-selection empty");
    return out;
}

// Deterministic representative: divide out the phase of the largest
// amplitude (first index on near-ties).
void strip_global_phase(std::vector<Complex>& amps) {
    double best = 0.0;
    for (const auto& a : amps) best = std::max(best, std::abs(a));
    for (const auto& a : amps) {
        if (std::abs(a) >= best - 1e-12 && std::abs(a) > 0.0) {
            const Complex phase = a / std::abs(a);
            for (auto& b : amps) b /= phase;
            return;
        }
    }
}

PureState normalized_pure(std::vector<Complex> amps, double norm2) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    strip_global_phase(amps);
    return PureState::normalized(std::move(amps));
}

}  // namespace

const PureState& FusionOutcome::pure() const {
    if (const auto* p = std::get_if<PureState>(&state)) return *p;
    throw std::invalid_argument("fusion outcome is not pure");
}

DensityMatrix FusionOutcome::density() const {
    if (const auto* p = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*p);
    return std::get<DensityMatrix>(state);
}

FusionOutcome coincidence_postselect(const ModeState& s) {
    RawPostselection raw = postselect_raw(s);
    const double success = std::clamp(raw.kept_norm2, 0.0, 1.0);
    return FusionOutcome{normalized_pure(std::move(raw.kept), raw.kept_norm2), success,
                         std::nullopt};
}

FusionOutcome fuse_qubit(const DensityMatrix& psi) {
    if (psi.dim() != 2) throw std::invalid_argument("fuse_qubit: state must be a qubit");

    const Mode ha{0, Site::A, Polarization::H};
    const Mode va{0, Site::A, Polarization::V};
    const Mode hb{0, Site::B, Polarization::H};
    const Mode vb{0, Site::B, Polarization::V};

    // Send each eigenvector of psi through the gate and recombine.
    const HermitianEigen eig = eigen_hermitian(psi.matrix());
    ComplexMatrix accum(4, 4);
    double success = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        const double w = std::max(eig.values[k], 0.0);
        if (w < 1e-15) continue;
        const ModeState vac = ModeState::vacuum();
        const ModeState carrier = vac.applied_creation(ha).scaled(eig.vectors(0, k)) +
                                  vac.applied_creation(va).scaled(eig.vectors(1, k));
        const ModeState ancilla_applied =
            (carrier.applied_creation(hb) + carrier.applied_creation(vb))
                .scaled(Complex{1.0 / std::sqrt(2.0), 0.0});
        RawPostselection raw = postselect_raw(pbs_convert(ancilla_applied));
        success += w * raw.kept_norm2;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                accum(r, c) += Complex{w, 0.0} * raw.kept[r] * std::conj(raw.kept[c]);
    }
    if (success < 1e-14) throw Error("post-selection empty");

    return FusionOutcome{DensityMatrix((Complex{1.0 / success, 0.0}) * accum),
                         std::clamp(success, 0.0, 1.0), std::nullopt};
}

FusionOutcome fuse_qudit(const PureState& psi, std::size_t num_pairs) {
    const std::size_t d = psi.dim();
    if (num_pairs == 0 || num_pairs > 5)
        throw std::invalid_argument("fuse_qudit: photon-pair count must be in [1, 5]");
    if (d > (std::size_t{1} << num_pairs))
        throw std::invalid_argument("fuse_qudit: qudit dimension exceeds 2^n");

    // Carrier: each basis ket |k⟩ becomes n polarization creations at site A,
    // pair 0 carrying the most significant bit of k.
    ModeState carrier;
    for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(psi[k]) == 0.0) continue;
        ModeState term = ModeState::vacuum();
        for (std::size_t j = 0; j < num_pairs; ++j) {
            const bool one = (k >> (num_pairs - 1 - j)) & 1;
            term = term.applied_creation(
                Mode{static_cast<std::uint32_t>(j), Site::A, one ? Polarization::V : Polarization::H});
        }
        carrier = carrier + term.scaled(psi[k]);
    }

    // Ancillas: |D⟩ per pair at site B.
    ModeState joint = carrier;
    for (std::size_t j = 0; j < num_pairs; ++j) {
        const Mode hb{static_cast<std::uint32_t>(j), Site::B, Polarization::H};
        const Mode vb{static_cast<std::uint32_t>(j), Site::B, Polarization::V};
        joint = (joint.applied_creation(hb) + joint.applied_creation(vb))
                    .scaled(Complex{1.0 / std::sqrt(2.0), 0.0});
    }

    return coincidence_postselect(pbs_convert(joint));
}

FusionOutcome fuse_coherent(const PureState& psi, double p, Complex amp) {
    if (psi.dim() != 2) throw std::invalid_argument("fuse_coherent: carrier must be a qubit");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("fuse_coherent: p must lie in (0, 1]");
    if (std::abs(amp) > 0.3)
        std::cerr << "warning: fuse_coherent called with |amp| > 0.3; the two-photon truncation "
                     "degrades\n";

    const Mode ha{0, Site::A, Polarization::H};
    const Mode va{0, Site::A, Polarization::V};
    const Mode hb{0, Site::B, Polarization::H};
    const Mode vb{0, Site::B, Polarization::V};

    if (std::abs(amp) == 0.0) {
        // Limit of vanishing coherent amplitude: the ideal masked state with
        // vanishing success probability.
        ModeState carrier = ModeState::vacuum().applied_creation(ha).scaled(psi[0]) +
                            ModeState::vacuum().applied_creation(va).scaled(psi[1]);
        ModeState joint = (carrier.applied_creation(hb) + carrier.applied_creation(vb))
                              .scaled(Complex{1.0 / std::sqrt(2.0), 0.0});
        FusionOutcome out = coincidence_postselect(pbs_convert(joint));
        out.success_probability = 0.0;
        out.noise_coefficient = 0.0;
        return out;
    }

    // Carrier side: vacuum with weight sqrt(1-p), photon with weight sqrt(p).
    const ModeState vac = ModeState::vacuum();
    const ModeState carrier =
        vac.scaled(Complex{std::sqrt(1.0 - p), 0.0}) +
        (vac.applied_creation(ha).scaled(psi[0]) + vac.applied_creation(va).scaled(psi[1]))
            .scaled(Complex{std::sqrt(p), 0.0});

    // Coherent side: Maclaurin expansion of |amp⟩ in the diagonal mode up to
    // two photons, (amp a_D†)^k / k!.
    const auto apply_diag = [&](const ModeState& s) {
        return (s.applied_creation(hb) + s.applied_creation(vb))
            .scaled(Complex{1.0 / std::sqrt(2.0), 0.0});
    };
    ModeState joint = carrier;                                    // k = 0
    const ModeState once = apply_diag(carrier);
    const ModeState twice = apply_diag(once);
    joint = joint + once.scaled(amp) + twice.scaled(amp * amp * 0.5);
    joint = joint.normalized();

    RawPostselection raw = postselect_raw(pbs_convert(joint));

    // Basis: index 0 = |H_A H_B⟩, 3 = |V_A V_B⟩ carry the masked state; the
    // cross-polarized terms are the coherent-source noise.
    const double ideal2 = std::norm(raw.kept[0]) + std::norm(raw.kept[3]);
    const double noise2 = std::norm(raw.kept[1]) + std::norm(raw.kept[2]);
    if (ideal2 < 1e-28) throw Error("post-selection empty");

    const double success = std::clamp(raw.kept_norm2, 0.0, 1.0);
    return FusionOutcome{normalized_pure(std::move(raw.kept), raw.kept_norm2), success,
                         std::sqrt(noise2 / ideal2)};
}

}  // namespace maskbench::photonics
