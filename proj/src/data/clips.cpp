#include "vsd/data/clips.hpp"

#include "vsd/core/image.hpp"
#include "vsd/scene/episode.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace vsd::data {

std::vector<int> clip_indices(int n_frames, int n_steps, int horizon_frames) {
    if (n_frames < 1) throw std::invalid_argument("clip_indices: n_frames must be >= 1");
    if (n_steps < 2) throw std::invalid_argument("clip_indices: N must be >= 2");
    if (horizon_frames < n_steps) throw std::invalid_argument("clip_indices: horizon must be >= N");
    std::vector<int> idx(static_cast<size_t>(n_steps));
    for (int k = 0; k < n_steps; ++k) {
        // round-half-up of the even spacing over [0, horizon-1]
        const int raw = int(std::floor(double(k) * (horizon_frames - 1) / (n_steps - 1) + 0.5));
        idx[size_t(k)] = std::min(raw, n_frames - 1);
    }
    return idx;
}

int default_horizon(const DatasetManifest& manifest) {
    return scene::sampling_horizon_frames(manifest.segment_length_m, manifest.fps);
}

nn::Tensor frame_to_tensor(const Image& img, std::optional<std::pair<int, int>> resize_hw) {
    const int sw = img.width(), sh = img.height();
    const int dh = resize_hw ? resize_hw->first : sh;
    const int dw = resize_hw ? resize_hw->second : sw;
    nn::Tensor out({dh, dw, 3});
    float* dst = out.data();
    if (dh == sh && dw == sw) {
        const uint8_t* src = img.data().data();
        const int64_t n = out.numel();
        for (int64_t i = 0; i < n; ++i) dst[i] = src[i] * (1.0f / 255.0f);
        return out;
    }
    const double sx = double(sw) / dw;
    const double sy = double(sh) / dh;
    for (int y = 0; y < dh; ++y) {
        const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, double(sh - 1));
        const int y0 = int(fy);
        const int y1 = std::min(y0 + 1, sh - 1);
        const double ty = fy - y0;
        for (int x = 0; x < dw; ++x) {
            const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, double(sw - 1));
            const int x0 = int(fx);
            const int x1 = std::min(x0 + 1, sw - 1);
            const double tx = fx - x0;
            const uint8_t* p00 = img.px(x0, y0);
            const uint8_t* p10 = img.px(x1, y0);
            const uint8_t* p01 = img.px(x0, y1);
            const uint8_t* p11 = img.px(x1, y1);
            for (int c = 0; c < 3; ++c) {
                const double top = p00[c] * (1 - tx) + p10[c] * tx;
                const double bot = p01[c] * (1 - tx) + p11[c] * tx;
                *dst++ = float((top * (1 - ty) + bot * ty) / 255.0);
            }
        }
    }
    return out;
}

ClipSample sample_clip(const DatasetManifest& manifest, int64_t episode_id, const ClipConfig& config,
                       const NormalizationSpec& norm) {
    const ManifestEntry& entry = manifest.find(episode_id);
    const std::vector<int> idx = clip_indices(entry.n_frames, config.n_steps, config.horizon_frames);

    ClipSample clip;
    clip.episode_id = episode_id;
    clip.horizon_frames = config.horizon_frames;
    clip.indices = idx;
    clip.true_speed_mps = entry.speed_mps;
    bool oob = false;
    double y = normalize_speed(entry.speed_mps, norm, &oob);
    if (oob) {
        y = std::clamp(y, -1.0, 1.0);
        clip.target_clamped = true;
    }
    clip.target = y;

    // Consecutive clip indices often repeat (clamped tail); decode each
    // distinct frame once.
    nn::Tensor prev;
    int prev_idx = -1;
    for (int k = 0; k < config.n_steps; ++k) {
        if (idx[size_t(k)] != prev_idx) {
            const auto path = manifest.frame_path(episode_id, idx[size_t(k)]);
            if (!std::filesystem::exists(path)) {
                throw std::runtime_error("sample_clip: missing frame file " + path.string());
            }
            prev = frame_to_tensor(read_png(path), config.resize_hw);
            prev_idx = idx[size_t(k)];
        }
        if (k == 0) {
            clip.frames = nn::Tensor({config.n_steps, prev.dim(0), prev.dim(1), 3});
        }
        std::memcpy(clip.frames.data() + size_t(k) * prev.numel(), prev.data(),
                    size_t(prev.numel()) * sizeof(float));
    }
    return clip;
}

} // namespace vsd::data
