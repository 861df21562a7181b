// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "maskbench/experiments.hpp"
#include "maskbench/image_io.hpp"
#include "maskbench/json_io.hpp"
#include "maskbench/maskers.hpp"
#include "maskbench/photonics.hpp"
#include "maskbench/qcore.hpp"
#include "maskbench/secretshare.hpp"

namespace {

namespace fs = std::filesystem;
using namespace maskbench;

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("MASKBENCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error("MASKBENCH_SEED must be an unsigned integer");
        }
    }
    return 0;
}

void emit(const io::json& j, const std::optional<std::string>& out_path) {
    if (out_path) {
        io::save_json(j, *out_path);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

// ---------------------------------------------------------------------------

struct MaskerChoice {
    double alpha_deg = 0.0;
    double theta_deg = 0.0;
    std::size_t vandermonde = 0;  // 0 = qubit masker

    maskers::Masker build() const {
        if (vandermonde > 0) return maskers::vandermonde_masker(vandermonde);
        return maskers::qubit_masker(alpha_deg * kDegToRad, theta_deg * kDegToRad);
    }
};

void add_masker_flags(CLI::App* cmd, MaskerChoice& choice) {
    cmd->add_option("--alpha", choice.alpha_deg, "masker polar angle, degrees");
    cmd->add_option("--theta", choice.theta_deg, "masker azimuthal angle, degrees");
    cmd->add_option("--vandermonde", choice.vandermonde,
                    "use the Vandermonde masker of this dimension instead");
}

int run_mask(const std::string& in, const std::string& out, const MaskerChoice& choice) {
    const qcore::DensityMatrix rho = io::load_state(in);
    io::save_state(maskers::mask(choice.build(), rho), out);
    return 0;
}

int run_unmask(const std::string& in, const std::string& out, const MaskerChoice& choice) {
    const qcore::DensityMatrix rho_ab = io::load_state(in);
    io::save_state(maskers::unmask(choice.build(), rho_ab), out);
    return 0;
}

int run_disk(double alpha_deg, double theta_deg, const std::string& state_path,
             const std::optional<std::string>& contains_path, double tol,
             const std::optional<std::string>& out) {
    const qcore::BlochVector v = qcore::density_to_bloch(io::load_state(state_path));
    const maskers::Disk disk =
        maskers::disk_through(alpha_deg * kDegToRad, theta_deg * kDegToRad, v);
    io::json j = io::to_json(disk);
    if (contains_path) {
        const qcore::BlochVector probe = qcore::density_to_bloch(io::load_state(*contains_path));
        j["contains"] = maskers::disk_contains(disk, probe, tol);
    }
    emit(j, out);
    return 0;
}

qcore::PureState pure_from_state(const qcore::DensityMatrix& rho) {
    const HermitianEigen eig = eigen_hermitian(rho.matrix());
    if (eig.values.back() < 1.0 - 1e-8) throw Error("fusion input state must be pure");
    std::vector<Complex> amps(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) amps[i] = eig.vectors(i, rho.dim() - 1);
    return qcore::PureState::normalized(std::move(amps));
}

int run_fusion(const std::string& in, const std::optional<std::string>& out, std::size_t pairs,
               bool coherent, double p, double amp_re, double amp_im) {
    const qcore::DensityMatrix rho = io::load_state(in);
    photonics::FusionOutcome outcome = [&] {
        if (coherent) return photonics::fuse_coherent(pure_from_state(rho), p, Complex{amp_re, amp_im});
        if (pairs > 0) return photonics::fuse_qudit(pure_from_state(rho), pairs);
        return photonics::fuse_qubit(rho);
    }();
    emit(io::to_json(outcome), out);
    return 0;
}

int run_sweep(const std::vector<double>& phi_deg, double shift_max_deg, double step_deg,
              const std::string& direction, std::optional<std::uint64_t> shots,
              const std::string& out, const std::optional<std::string>& report_path) {
    if (step_deg <= 0.0) throw Error("--step must be positive");
    if (shift_max_deg < 0.0) throw Error("--shift-max must be non-negative");

    experiments::SweepConfig cfg;
    cfg.direction = direction == "parallel" ? experiments::ShiftDirection::Parallel
                                            : experiments::ShiftDirection::Meridian;
    for (double p : phi_deg) cfg.phi_list.push_back(p * kDegToRad);
    for (double d = -shift_max_deg; d <= shift_max_deg + 1e-9; d += step_deg)
        cfg.shift_list.push_back(d * kDegToRad);
    cfg.shots = shots;
    cfg.seed = seed_from_env();

    const auto records = experiments::run_sweep(cfg);

    std::ofstream csv(out, std::ios::trunc);
    if (!csv) throw Error("cannot open file for writing: " + out);
    csv << "# phi_deg,shift_deg,direction,trace_distance,std_error"
           " (angles in degrees; distances dimensionless)\n";
    char line[256];
    std::snprintf(line, sizeof line,
                  "# grid: %zu latitudes, shift in [%.12g, %.12g] deg, step %.12g deg, "
                  "direction=%s, shots=%llu, seed=%llu\n",
                  cfg.phi_list.size(), -shift_max_deg, shift_max_deg, step_deg, direction.c_str(),
                  static_cast<unsigned long long>(shots.value_or(0)),
                  static_cast<unsigned long long>(cfg.seed));
    csv << line;
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%s,%.12g,", r.phi / kDegToRad,
                      r.shift / kDegToRad, direction.c_str(), r.trace_distance);
        csv << line;
        if (r.std_error) {
            std::snprintf(line, sizeof line, "%.12g", *r.std_error);
            csv << line;
        }
        csv << '\n';
    }

    if (report_path) {
        io::json j;
        j["grid"] = {{"phi_deg", phi_deg},
                     {"shift_max_deg", shift_max_deg},
                     {"step_deg", step_deg},
                     {"direction", direction},
                     {"seed", cfg.seed}};
        if (shots) j["grid"]["shots"] = *shots;
        j["records"] = io::to_json(records);
        io::save_json(j, *report_path);
    }
    return 0;
}

int run_demo(const std::optional<std::string>& out) {
    emit(io::to_json(experiments::run_disk_demo()), out);
    return 0;
}

int run_channel(const std::string& in, double t_deg, const std::optional<std::string>& out) {
    const qcore::DensityMatrix rho = io::load_state(in);
    emit(io::to_json(experiments::run_channel_protection(rho, t_deg * kDegToRad)), out);
    return 0;
}

int run_share(const std::string& in, const std::string& prefix) {
    const secretshare::Image img = secretshare::read_ppm(in);
    const auto grids = secretshare::share_image(img);
    for (std::size_t i = 0; i < 3; ++i)
        secretshare::write_share_file(grids[i], prefix + "share" + std::to_string(i + 1) + ".bin");
    return 0;
}

int run_reconstruct(const std::vector<std::string>& share_paths, const std::string& out,
                    const std::optional<std::string>& compare,
                    const std::optional<std::string>& report_path) {
    if (share_paths.size() != 3) throw Error("--shares expects exactly three files");
    std::array<secretshare::ShareGrid, 3> grids;
    for (std::size_t i = 0; i < 3; ++i) grids[i] = secretshare::read_share_file(share_paths[i]);

    std::optional<secretshare::Image> original;
    if (compare) original = secretshare::read_ppm(*compare);

    const secretshare::ReconstructionResult result = secretshare::reconstruct_image(
        grids[0], grids[1], grids[2], original ? &*original : nullptr);
    secretshare::write_ppm(result.image, out);

    io::json report;
    report["width"] = result.image.width;
    report["height"] = result.image.height;
    if (result.correlation) {
        report["correlation"] = *result.correlation;
        report["channel_correlation"] = {{"r", result.channel_correlation[0]},
                                         {"g", result.channel_correlation[1]},
                                         {"b", result.channel_correlation[2]}};
        report["correlation_metric"] = "pearson per channel, averaged over r,g,b";
        report["max_channel_error"] = result.max_channel_error;
        report["constant_channels"] = result.constant_channels;
    }
    io::json tampered = io::json::array();
    for (const auto& t : result.tampered)
        tampered.push_back({{"x", t.x}, {"y", t.y}, {"norm", t.norm}});
    report["tampered"] = tampered;
    emit(report, report_path);

    if (!result.tampered.empty()) throw secretshare::TamperDetected(
        "reconstruction of a non-physical state at " + std::to_string(result.tampered.size()) +
        " pixel(s)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum information masking simulator"};
    app.require_subcommand(1);

    // mask
    auto* mask_cmd = app.add_subcommand("mask", "apply a masking isometry to a state file");
    std::string mask_in, mask_out;
    MaskerChoice mask_choice;
    mask_cmd->add_option("--in", mask_in, "input state JSON")->required();
    mask_cmd->add_option("--out", mask_out, "output bipartite state JSON")->required();
    add_masker_flags(mask_cmd, mask_choice);

    // unmask
    auto* unmask_cmd = app.add_subcommand("unmask", "invert a masking isometry");
    std::string unmask_in, unmask_out;
    MaskerChoice unmask_choice;
    unmask_cmd->add_option("--in", unmask_in, "input bipartite state JSON")->required();
    unmask_cmd->add_option("--out", unmask_out, "output state JSON")->required();
    add_masker_flags(unmask_cmd, unmask_choice);

    // disk
    auto* disk_cmd = app.add_subcommand("disk", "compute the maskable disk through a state");
    double disk_alpha = 0.0, disk_theta = 0.0, disk_tol = 1e-9;
    std::string disk_state;
    std::optional<std::string> disk_contains, disk_out;
    disk_cmd->add_option("--alpha", disk_alpha, "disk normal polar angle, degrees")->required();
    disk_cmd->add_option("--theta", disk_theta, "disk normal azimuthal angle, degrees");
    disk_cmd->add_option("--state", disk_state, "reference state JSON")->required();
    disk_cmd->add_option("--contains", disk_contains, "test whether this state lies on the disk");
    disk_cmd->add_option("--tol", disk_tol, "membership tolerance");
    disk_cmd->add_option("--out", disk_out, "write the JSON report here instead of stdout");

    // fusion
    auto* fusion_cmd = app.add_subcommand("fusion", "run the photonic fusion gate");
    std::string fusion_in;
    std::optional<std::string> fusion_out;
    std::size_t fusion_pairs = 0;
    bool fusion_coherent = false;
    double fusion_p = 1.0, fusion_amp = 0.0, fusion_amp_im = 0.0;
    fusion_cmd->add_option("--in", fusion_in, "input state JSON")->required();
    fusion_cmd->add_option("--out", fusion_out, "output outcome JSON (stdout if omitted)");
    fusion_cmd->add_option("--pairs", fusion_pairs, "digit-wise qudit fusion over this many pairs");
    fusion_cmd->add_flag("--coherent", fusion_coherent, "use a weak coherent ancilla");
    fusion_cmd->add_option("--p", fusion_p, "single-photon source efficiency");
    fusion_cmd->add_option("--amp", fusion_amp, "coherent amplitude, real part");
    fusion_cmd->add_option("--amp-im", fusion_amp_im, "coherent amplitude, imaginary part");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "zero-measure displacement sweep");
    std::vector<double> sweep_phi{0.0, 30.0, 60.0};
    double sweep_max = 40.0, sweep_step = 2.0;
    std::string sweep_direction = "meridian", sweep_out;
    std::optional<std::uint64_t> sweep_shots;
    sweep_cmd->add_option("--phi", sweep_phi, "reference latitudes, degrees")->delimiter(',');
    sweep_cmd->add_option("--shift-max", sweep_max, "largest displacement, degrees");
    sweep_cmd->add_option("--step", sweep_step, "grid step, degrees");
    sweep_cmd->add_option("--direction", sweep_direction, "meridian or parallel")
        ->check(CLI::IsMember({"meridian", "parallel"}));
    sweep_cmd->add_option("--shots", sweep_shots, "sample counts instead of exact values");
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
    std::optional<std::string> sweep_report;
    sweep_cmd->add_option("--report", sweep_report, "also write the records as JSON here");

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "mask five states on one oblique disk");
    std::optional<std::string> demo_out;
    demo_cmd->add_option("--out", demo_out, "output report JSON (stdout if omitted)");

    // channel
    auto* channel_cmd = app.add_subcommand("channel", "phase-noise protection round trip");
    std::string channel_in;
    double channel_t = 45.0;
    std::optional<std::string> channel_out;
    channel_cmd->add_option("--in", channel_in, "input state JSON")->required();
    channel_cmd->add_option("--t", channel_t, "channel phase angle, degrees")->required();
    channel_cmd->add_option("--out", channel_out, "output report JSON (stdout if omitted)");

    // share
    auto* share_cmd = app.add_subcommand("share", "split an image into three share files");
    std::string share_in, share_prefix;
    share_cmd->add_option("--in", share_in, "input PPM image")->required();
    share_cmd->add_option("--out-prefix", share_prefix, "prefix for share1..3.bin")->required();

    // reconstruct
    auto* rec_cmd = app.add_subcommand("reconstruct", "rebuild an image from three shares");
    std::vector<std::string> rec_shares;
    std::string rec_out;
    std::optional<std::string> rec_compare, rec_report;
    rec_cmd->add_option("--shares", rec_shares, "three share files")->expected(3)->required();
    rec_cmd->add_option("--out", rec_out, "output PPM image")->required();
    rec_cmd->add_option("--compare", rec_compare, "original image for the correlation report");
    rec_cmd->add_option("--report", rec_report, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(mask_cmd)) return run_mask(mask_in, mask_out, mask_choice);
        if (app.got_subcommand(unmask_cmd)) return run_unmask(unmask_in, unmask_out, unmask_choice);
        if (app.got_subcommand(disk_cmd))
            return run_disk(disk_alpha, disk_theta, disk_state, disk_contains, disk_tol, disk_out);
        if (app.got_subcommand(fusion_cmd))
            return run_fusion(fusion_in, fusion_out, fusion_pairs, fusion_coherent, fusion_p,
                              fusion_amp, fusion_amp_im);
        if (app.got_subcommand(sweep_cmd))
            return run_sweep(sweep_phi, sweep_max, sweep_step, sweep_direction, sweep_shots,
                             sweep_out, sweep_report);
        if (app.got_subcommand(demo_cmd)) return run_demo(demo_out);
        if (app.got_subcommand(channel_cmd)) return run_channel(channel_in, channel_t, channel_out);
        if (app.got_subcommand(share_cmd)) return run_share(share_in, share_prefix);
        if (app.got_subcommand(rec_cmd))
            return run_reconstruct(rec_shares, rec_out, rec_compare, rec_report);
    } catch (const std::exception& e) {
        const io::json err{{"error", {{"type", "domain"}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return 2;
    }
    return 1;
}
