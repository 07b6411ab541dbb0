#include "vsd/scene/camera.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>
#include <string>

namespace vsd::scene {

void CameraRig::validate() const {
    if (!(height_m > 0)) throw std::invalid_argument("CameraRig: height_m must be > 0");
    if (!(pitch_deg > 0 && pitch_deg < 90))
        throw std::invalid_argument("CameraRig: pitch_deg must be in (0, 90)");
    if (!(fps > 0)) throw std::invalid_argument("CameraRig: fps must be > 0");
    if (width_px < 16 || height_px < 16)
        throw std::invalid_argument("CameraRig: resolution must be at least 16x16");
    if (!(hfov_deg > 0 && hfov_deg < 180))
        throw std::invalid_argument("CameraRig: hfov_deg must be in (0, 180)");
}

double CameraRig::axis_ground_distance() const {
    return height_m / std::tan(pitch_deg * M_PI / 180.0);
}

Projection::Projection(const CameraRig& rig) {
    rig.validate();
    const double p = rig.pitch_deg * M_PI / 180.0;

    // Camera basis in world coordinates. Forward is +X pitched down by p;
    // right/down complete a right-handed CV frame (x right, y down, z fwd).
    const Vec3 forward(std::cos(p), 0.0, -std::sin(p));
    const Vec3 right(0.0, -1.0, 0.0);
    const Vec3 down = forward.cross(right);

    rot_.row(0) = right;
    rot_.row(1) = down;
    rot_.row(2) = forward;

    position_ = Vec3(0.0, rig.lateral_offset_m, rig.height_m);

    width_ = rig.width_px;
    height_ = rig.height_px;
    focal_px_ = (rig.width_px / 2.0) / std::tan(rig.hfov_deg * M_PI / 360.0);
    cx_ = rig.width_px / 2.0;
    cy_ = rig.height_px / 2.0;
}

Vec3 Projection::to_camera(const Vec3& world) const {
    return rot_ * (world - position_);
}

Vec2 Projection::project_camera_point(const Vec3& cam) const {
    return {cx_ + focal_px_ * cam.x() / cam.z(), cy_ + focal_px_ * cam.y() / cam.z()};
}

std::optional<Vec2> Projection::project(const Vec3& world) const {
    const Vec3 cam = to_camera(world);
    if (cam.norm() < 1e-12) {
        throw std::invalid_argument("project: point coincides with the camera center");
    }
    if (cam.z() <= 1e-9) return std::nullopt; // behind the image plane
    const Vec2 px = project_camera_point(cam);
    if (px.x() < 0.0 || px.x() > width_ || px.y() < 0.0 || px.y() > height_) {
        return std::nullopt;
    }
    return px;
}

Vec3 Projection::pixel_ray(double u, double v) const {
    const Vec3 cam((u - cx_) / focal_px_, (v - cy_) / focal_px_, 1.0);
    return rot_.transpose() * cam;
}

} // namespace vsd::scene
