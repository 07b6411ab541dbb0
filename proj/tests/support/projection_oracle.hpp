#pragma once

// Independent projection oracle used to cross-check the production camera
// code. Deliberately built a different way: a brute-force homogeneous
// 4x4 matrix chain (axis permutation * elementary pitch rotation *
// translation), multiplied out and divided at the end. Keep this file free
// of any include from vsd/scene/ other than the plain rig struct.

#include "vsd/scene/camera.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>

namespace vsd::testing {

class ProjectionOracle {
public:
    explicit ProjectionOracle(const scene::CameraRig& rig) {
        const double p = rig.pitch_deg * M_PI / 180.0;

        // World (X fwd, Y left, Z up) -> zero-pitch CV camera axes
        // (x right, y down, z forward).
        Eigen::Matrix4d axes = Eigen::Matrix4d::Identity();
        axes.block<3, 3>(0, 0) << 0, -1, 0,
                                  0, 0, -1,
                                  1, 0, 0;

        // Pitch down by p about the camera x axis.
        Eigen::Matrix4d pitch = Eigen::Matrix4d::Identity();
        pitch.block<3, 3>(0, 0) << 1, 0, 0,
                                   0, std::cos(p), -std::sin(p),
                                   0, std::sin(p), std::cos(p);

        Eigen::Matrix4d trans = Eigen::Matrix4d::Identity();
        trans(0, 3) = 0.0;
        trans(1, 3) = -rig.lateral_offset_m;
        trans(2, 3) = -rig.height_m;

        const double f = (rig.width_px / 2.0) / std::tan(rig.hfov_deg * M_PI / 360.0);
        Eigen::Matrix<double, 3, 4> intrinsics;
        intrinsics << f, 0, rig.width_px / 2.0, 0,
                      0, f, rig.height_px / 2.0, 0,
                      0, 0, 1, 0;

        proj_ = intrinsics * pitch * axes * trans;
        width_ = rig.width_px;
        height_ = rig.height_px;
    }

    // Pixel coordinates, or nullopt when behind the camera / out of frame.
    std::optional<Eigen::Vector2d> project(const Eigen::Vector3d& world) const {
        Eigen::Vector4d h(world.x(), world.y(), world.z(), 1.0);
        Eigen::Vector3d q = proj_ * h;
        if (q.z() <= 1e-9) return std::nullopt;
        Eigen::Vector2d px(q.x() / q.z(), q.y() / q.z());
        if (px.x() < 0 || px.x() > width_ || px.y() < 0 || px.y() > height_) return std::nullopt;
        return px;
    }

private:
    Eigen::Matrix<double, 3, 4> proj_;
    int width_ = 0;
    int height_ = 0;
};

} // namespace vsd::testing
