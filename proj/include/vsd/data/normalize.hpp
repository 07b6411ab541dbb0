#pragma once

#include "vsd/core/io.hpp"

namespace vsd::data {

// Affine speed <-> target map: 30 km/h -> -1, 100 km/h -> +1.
struct NormalizationSpec {
    double v_min_mps = 30.0 / 3.6;
    double v_max_mps = 100.0 / 3.6;

    void validate() const; // v_min < v_max

    json to_json() const;
    static NormalizationSpec from_json(const json& j);
};

// Pure affine map; bijective, so round trips are exact to float precision.
// Speeds outside [v_min, v_max] are mapped as-is and flagged through
// out_of_range (clamping is the caller's policy decision).
double normalize_speed(double v_mps, const NormalizationSpec& spec, bool* out_of_range = nullptr);
double denormalize_speed(double y, const NormalizationSpec& spec);

} // namespace vsd::data
