#pragma once

#include "vsd/core/image.hpp"
#include "vsd/data/manifest.hpp"
#include "vsd/data/normalize.hpp"
#include "vsd/nn/tensor.hpp"

#include <optional>
#include <vector>

namespace vsd::data {

// Frame indices for a fixed-length clip spread evenly over the sampling
// horizon: idx_k = round(k * (horizon - 1) / (N - 1)), each clamped to the
// episode's last frame. Indices are non-decreasing and start at 0.
std::vector<int> clip_indices(int n_frames, int n_steps, int horizon_frames);

struct ClipConfig {
    int n_steps = 16;        // N: frames fed to the model
    int horizon_frames = 192;
    // Resize applied per frame before stacking; empty = native resolution.
    std::optional<std::pair<int, int>> resize_hw;
};

// One model sample: N frames in a (N, H, W, 3) float stack scaled to [0,1],
// plus the normalized speed target.
struct ClipSample {
    int64_t episode_id = 0;
    nn::Tensor frames;       // (N, H, W, 3)
    double target = 0.0;     // normalized speed, clamped to [-1, 1]
    bool target_clamped = false;
    double true_speed_mps = 0.0;
    int horizon_frames = 0;
    std::vector<int> indices; // the frame indices that were gathered
};

// Loads the frames of one episode and assembles its clip. Missing frame
// files raise an error naming the file.
ClipSample sample_clip(const DatasetManifest& manifest, int64_t episode_id, const ClipConfig& config,
                       const NormalizationSpec& norm);

// Horizon derived from a manifest's segment length and FPS (192 at the
// 20 m / 80 FPS defaults).
int default_horizon(const DatasetManifest& manifest);

// Bilinear resize of an RGB8 image into a (H, W, 3) float tensor in [0,1].
nn::Tensor frame_to_tensor(const Image& img, std::optional<std::pair<int, int>> resize_hw);

} // namespace vsd::data
