#pragma once

#include "vsd/data/manifest.hpp"
#include "vsd/scene/episode.hpp"
#include "vsd/scene/renderer.hpp"

#include <filesystem>
#include <functional>

namespace vsd::scene {

// Draws the per-episode randomness (speed, vehicle, environment, render
// seed) for episode `index` from the master seed. Independent per episode,
// so generation can fan out across workers.
EpisodeSpec draw_episode_spec(int64_t index, uint64_t master_seed, double segment_length_m = 20.0,
                              bool record_to_horizon = false);

// Renders a whole episode in memory. Intended for small rigs and tests;
// full-HD episodes are better streamed with write_episode.
Episode generate_episode(const EpisodeSpec& spec, const CameraRig& rig);

// Renders an episode frame-by-frame straight to <dir>/frames/ and writes
// <dir>/meta.json. Returns the manifest entry for the episode.
data::ManifestEntry write_episode(const EpisodeSpec& spec, const CameraRig& rig,
                                  const std::filesystem::path& dir);

struct DatasetGenConfig {
    int n_episodes = 610;
    uint64_t master_seed = 0;
    CameraRig rig;
    double segment_length_m = 20.0;
    bool record_to_horizon = false;
    int jobs = 1;          // worker threads; episodes are independent
    bool overwrite = false; // refuse non-empty output unless set
};

// Generates the full dataset under output_root (layout: manifest.json +
// episodes/ep_XXXXX/{meta.json,frames/*.png}). Fully determined by
// (config, master_seed). On failure the partial output is removed.
data::DatasetManifest generate_dataset(const DatasetGenConfig& config,
                                       const std::filesystem::path& output_root,
                                       const std::function<void(int64_t)>& progress = {});

} // namespace vsd::scene
