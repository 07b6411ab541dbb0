#include "vsd/scene/episode.hpp"

#include <cmath>
#include <stdexcept>

namespace vsd::scene {

double speed_from_draw(double x) {
    return kSpeedBase + x * kSpeedSpan;
}

SpeedDraw sample_speed(Rng& rng) {
    const double x = rng.uniform();
    return {x, speed_from_draw(x)};
}

void EpisodeSpec::validate() const {
    if (episode_index < 0) throw std::invalid_argument("EpisodeSpec: episode_index must be >= 0");
    if (uniform_draw < 0.0 || uniform_draw > 1.0)
        throw std::invalid_argument("EpisodeSpec: uniform_draw must be in [0, 1]");
    if (speed_mps < kSpeedBase - 1e-9 || speed_mps > kSpeedMax + 1e-9)
        throw std::invalid_argument("EpisodeSpec: speed_mps outside [8.33, 27.77]");
    if (!(segment_length_m > 0)) throw std::invalid_argument("EpisodeSpec: segment_length_m must be > 0");
    vehicle.validate();
    environment.validate();
}

int frame_count(double segment_length_m, double speed_mps, double fps) {
    if (!(segment_length_m > 0)) throw std::invalid_argument("frame_count: segment_length_m must be > 0");
    if (!(speed_mps > 0)) throw std::invalid_argument("frame_count: speed_mps must be > 0");
    return int(std::ceil(segment_length_m / speed_mps * fps));
}

int sampling_horizon_frames(double segment_length_m, double fps) {
    const double v_floor = 30.0 / 3.6; // 30 km/h
    // The exact value is an integer at the defaults (20 m, 80 FPS -> 192);
    // nudge before ceil so float rounding cannot push it to 193.
    return int(std::ceil(segment_length_m / v_floor * fps - 1e-9));
}

GroundTruthTrack make_track(const EpisodeSpec& spec, const CameraRig& rig) {
    GroundTruthTrack track;
    track.start_x_m = rig.axis_ground_distance() - spec.segment_length_m / 2.0;
    track.step_m = spec.speed_mps / rig.fps;
    track.lateral_y_m = 0.0;
    int n = frame_count(spec.segment_length_m, spec.speed_mps, rig.fps);
    if (spec.record_to_horizon) {
        n = std::max(n, sampling_horizon_frames(spec.segment_length_m, rig.fps));
    }
    track.n_frames = n;
    return track;
}

} // namespace vsd::scene
