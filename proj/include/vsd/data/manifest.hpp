#pragma once

#include "vsd/core/io.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vsd::data {

struct ManifestEntry {
    int64_t episode_id = 0;
    double speed_mps = 0.0;
    double uniform_draw = 0.0;
    std::string vehicle_name;
    std::string vehicle_category;
    std::string environment_label;
    double fps = 80.0;
    int width_px = 0;
    int height_px = 0;
    double segment_length_m = 20.0;
    uint64_t rng_seed = 0;
    int n_frames = 0;

    json to_json() const;
    static ManifestEntry from_json(const json& j);
};

// Episode catalog plus the dataset-level header. Immutable after load.
struct DatasetManifest {
    std::filesystem::path root;
    int format_version = 1;
    double fps = 80.0;
    int width_px = 0;
    int height_px = 0;
    double segment_length_m = 20.0;
    uint64_t master_seed = 0;
    std::vector<ManifestEntry> episodes;

    void validate() const; // unique ids, n_frames >= 1

    // Episodes whose labeled speed falls outside the sampler's
    // [8.33, 27.77] m/s range (possible only for ingested data).
    std::vector<int64_t> out_of_range_speeds() const;

    const ManifestEntry& find(int64_t episode_id) const;
    std::filesystem::path episode_dir(int64_t episode_id) const;
    std::filesystem::path frame_path(int64_t episode_id, int frame_index) const;

    void save() const; // writes <root>/manifest.json
    static DatasetManifest load(const std::filesystem::path& root);

    json to_json() const;
    static DatasetManifest from_json(const json& j, const std::filesystem::path& root);
};

std::string episode_dir_name(int64_t episode_id);
std::string frame_file_name(int frame_index);

} // namespace vsd::data
