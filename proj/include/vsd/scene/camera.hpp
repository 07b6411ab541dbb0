#pragma once

#include <Eigen/Core>

#include <optional>

namespace vsd::scene {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

// Fixed roadside camera: mounted at height_m above the ground, yawed along
// the direction of travel (+X), pitched down by pitch_deg. World frame:
// X along travel, Y lateral (left of travel), Z up; ground is z = 0.
struct CameraRig {
    double height_m = 3.0;
    double pitch_deg = 45.0;
    double fps = 80.0;
    int width_px = 1920;
    int height_px = 1080;
    double hfov_deg = 90.0;
    double lateral_offset_m = 0.0;

    void validate() const; // throws std::invalid_argument on bad values

    // Ground point the optical axis passes through, ahead of the camera's
    // ground footprint.
    double axis_ground_distance() const;
};

// Pinhole projection with extrinsics derived from the rig. Camera frame is
// the usual CV convention: x right, y down, z forward (optical axis).
class Projection {
public:
    explicit Projection(const CameraRig& rig);

    // World point -> pixel. Empty when the point is behind the image plane
    // or projects outside the frame. Throws if the point coincides with the
    // camera center.
    std::optional<Vec2> project(const Vec3& world) const;

    // World -> camera coordinates (no projection, no visibility test).
    Vec3 to_camera(const Vec3& world) const;

    // Pixel + camera depth -> projection without the in-frame test; used by
    // the rasterizer after explicit near-plane clipping.
    Vec2 project_camera_point(const Vec3& cam) const;

    // Direction (world frame, unnormalized) of the viewing ray through a
    // pixel. (u, v) may be fractional; pixel centers are at half-integers.
    Vec3 pixel_ray(double u, double v) const;

    Vec3 camera_position() const { return position_; }
    double focal_px() const { return focal_px_; }

    int width() const { return width_; }
    int height() const { return height_; }

private:
    Eigen::Matrix3d rot_;      // world -> camera rotation (rows = camera axes)
    Vec3 position_;            // camera center in world coordinates
    double focal_px_ = 0.0;
    double cx_ = 0.0, cy_ = 0.0;
    int width_ = 0, height_ = 0;
};

} // namespace vsd::scene
