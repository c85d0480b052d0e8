// Report formats: JSON and CSV renderings of kernels, enumerators, GPB/PB
// tables and scaling results, plus the run manifest embedded in every
// emitted artifact. Field order and float formatting are fixed so that
// identical inputs always serialize to identical bytes.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cvpk/gpb.hpp"
#include "cvpk/kernels.hpp"
#include "cvpk/pb.hpp"
#include "cvpk/scaling.hpp"
#include "cvpk/subspaces.hpp"
#include "cvpk/weight_enum.hpp"

namespace cvpk {

using nlohmann::json;

// x rounded to the given number of significant decimal digits, so JSON
// number output is stable across platforms.
double round_sig(double x, int digits = 6);
std::string format_fixed(double x, int decimals);

std::uint64_t fnv1a64(std::string_view payload);
std::string digest_hex(std::string_view payload);

struct RunManifest {
    std::string command;
    json params;
    std::string version;
    double duration_ms = 0.0;  // diagnostic only; never serialized into artifacts
    std::string digest;
};

// Deterministic manifest fields (command, params, version, digest). The
// wall-clock duration goes to the diagnostic stream instead, keeping
// artifact bytes identical across runs.
json manifest_json(const RunManifest& m);

std::string kernel_text(const Kernel& k);
json kernel_json(const Kernel& k);

json subspace_json(const Subspace3& s);
json weight_enum_json(const WeightEnum& p);

json gpb_json(const Gpb& g);
json pb_json(const Pb& p);
std::string pb_csv(const Pb& p);

json scaling_json(const Pb& pb, const ScalingConfig& cfg, const ScalingResult& res);

std::string profile_text(const PartialDistanceProfile& profile);
std::string profile_csv(const PartialDistanceProfile& profile);

}  // namespace cvpk
