#pragma once

#include "vsd/core/image.hpp"
#include "vsd/core/rng.hpp"
#include "vsd/scene/camera.hpp"
#include "vsd/scene/environment.hpp"
#include "vsd/scene/vehicles.hpp"

#include <cstdint>
#include <vector>

namespace vsd::scene {

// Speed sampling bounds in m/s: 8.33 + X * 19.44 with X uniform in [0, 1].
inline constexpr double kSpeedBase = 8.33;
inline constexpr double kSpeedSpan = 19.44;
inline constexpr double kSpeedMax = kSpeedBase + kSpeedSpan;

struct SpeedDraw {
    double uniform_draw; // the X that produced the speed, kept for reproducibility
    double speed_mps;
};

// speed = 8.33 + X * 19.44, X ~ U[0,1).
SpeedDraw sample_speed(Rng& rng);
double speed_from_draw(double x);

// Generation recipe for one episode.
struct EpisodeSpec {
    int64_t episode_index = 0;
    double uniform_draw = 0.0;
    double speed_mps = kSpeedBase;
    VehicleSpec vehicle;
    EnvironmentCondition environment;
    uint64_t rng_seed = 0;
    double segment_length_m = 20.0;
    bool record_to_horizon = false;

    void validate() const;
};

// Number of frames recorded while the vehicle traverses the segment.
int frame_count(double segment_length_m, double speed_mps, double fps);

// Frame budget of the fixed sampling horizon: the slowest nominal vehicle
// (30 km/h) exactly traverses the segment within it. 192 frames at the
// 20 m / 80 FPS defaults.
int sampling_horizon_frames(double segment_length_m, double fps);

// Constant-velocity ground truth. Positions are computed from (start, step),
// never integrated, so the per-frame displacement is exactly step_m.
struct GroundTruthTrack {
    double start_x_m = 0.0;   // world X at frame 0
    double step_m = 0.0;      // displacement per frame = speed / fps
    double lateral_y_m = 0.0; // constant lane-center offset
    int n_frames = 0;

    double x(int frame) const { return start_x_m + step_m * frame; }
    Vec3 position(int frame) const { return {x(frame), lateral_y_m, 0.0}; }
};

// Vehicle path for a spec/rig pair: the segment is centered on the camera's
// optical-axis ground intersection and traversed in +X.
GroundTruthTrack make_track(const EpisodeSpec& spec, const CameraRig& rig);

struct Frame {
    Image pixels;
    int frame_index = 0;
    double timestamp_s = 0.0; // frame_index / fps
};

struct Episode {
    EpisodeSpec spec;
    CameraRig rig;
    std::vector<Frame> frames;
    GroundTruthTrack ground_truth;
};

} // namespace vsd::scene
