#pragma once

#include "vsd/data/manifest.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace vsd::data {

struct SplitRatios {
    double train = 0.6;
    double val = 0.2;
    double test = 0.2;
};

// Seeded shuffle of episode ids into train/val/test. Sizes follow the floor
// rule: |train| = floor(r_train * n), |val| = floor(r_val * n), test takes
// the remainder (610 -> 366/122/122).
struct SplitAssignment {
    uint64_t seed = 0;
    SplitRatios ratios;
    std::vector<int64_t> train;
    std::vector<int64_t> val;
    std::vector<int64_t> test;

    void validate_against(const DatasetManifest& manifest) const; // partition check

    json to_json() const;
    static SplitAssignment from_json(const json& j);
    void save(const std::filesystem::path& path) const;
    static SplitAssignment load(const std::filesystem::path& path);
};

SplitAssignment split_dataset(const DatasetManifest& manifest, const SplitRatios& ratios, uint64_t seed);

} // namespace vsd::data
