#pragma once

#include "vsd/core/image.hpp"
#include "vsd/scene/camera.hpp"
#include "vsd/scene/episode.hpp"

namespace vsd::scene {

// Layer toggles, mostly for tests and debugging renders.
struct RenderOptions {
    bool draw_vehicle = true;
    bool draw_shadow = true;
    bool draw_rain = true;
    bool draw_deposits = true;
};

// Renders the scene at time t (seconds since episode start): ground plane
// with road and lane markings, the vehicle as a lit cuboid at
// x(t) = x0 + speed * t, plus the episode's lighting/weather effects.
// Deterministic: identical (spec, rig, t) give bit-identical images.
// Throws std::invalid_argument for negative t.
Image render_frame(const EpisodeSpec& spec, const CameraRig& rig, double t,
                   const RenderOptions& opts = {});

// The eight corners of the vehicle cuboid when its center is at world x.
std::array<Vec3, 8> vehicle_corners(const VehicleSpec& vehicle, double center_x, double lateral_y);

} // namespace vsd::scene
