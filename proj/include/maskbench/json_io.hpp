// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include <json.hpp>

#include "maskbench/experiments.hpp"
#include "maskbench/maskers.hpp"
#include "maskbench/photonics.hpp"
#include "maskbench/qcore.hpp"

namespace maskbench::io {

using nlohmann::json;

// Density matrices travel as {dim, re: [[...]], im: [[...]]}; Bloch vectors
// as {x, y, z}. Doubles keep their exact value through a round trip.
json to_json(const qcore::DensityMatrix& rho);
qcore::DensityMatrix density_from_json(const json& j);

json to_json(const qcore::BlochVector& v);
qcore::BlochVector bloch_from_json(const json& j);

json to_json(const maskers::Disk& d);

json to_json(const maskers::Masker& m);
maskers::Masker masker_from_json(const json& j);

json to_json(const photonics::FusionOutcome& outcome);

json to_json(const experiments::DemoReport& report);
json to_json(const experiments::ChannelReport& report);
json to_json(const std::vector<experiments::SweepRecord>& records);

// A state file holds either a density matrix or a Bloch vector (converted
// to its 2x2 state on load).
qcore::DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const qcore::DensityMatrix& rho, const std::filesystem::path& path);

void save_json(const json& j, const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

}  // namespace maskbench::io
