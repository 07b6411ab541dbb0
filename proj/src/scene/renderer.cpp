#include "vsd/scene/renderer.hpp"

#include "vsd/core/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vsd::scene {

namespace {

struct Shade {
    double r = 0, g = 0, b = 0;

    Shade operator*(double k) const { return {r * k, g * k, b * k}; }
    Shade operator+(const Shade& o) const { return {r + o.r, g + o.g, b + o.b}; }
};

Shade mix(const Shade& a, const Shade& b, double t) {
    return a * (1.0 - t) + b * t;
}

// Road layout: the observed lane is centered on y = 0; a second lane sits to
// its left. All extents in meters.
constexpr double kLaneWidth = 3.5;
constexpr double kRoadYMin = -kLaneWidth / 2.0;
constexpr double kRoadYMax = 1.5 * kLaneWidth;
constexpr double kCenterLineY = kLaneWidth / 2.0;
constexpr double kLineHalfWidth = 0.07;
constexpr double kDashPeriod = 6.0; // 3 m dash + 3 m gap

// Lighting per environment: global brightness and tint follow the solar
// elevation, shadows lengthen as the sun drops.
struct LightModel {
    Vec3 to_sun;        // unit vector toward the sun
    double brightness;  // global multiplier
    Shade tint;
    Vec2 shadow_dir;    // ground direction shadows extend (unit)
    double shadow_k;    // shadow length per meter of height = cot(elevation)
    bool sunset;
};

LightModel make_light(const EnvironmentCondition& env) {
    LightModel light;
    const double elev = sun_elevation_deg(env.sun) * M_PI / 180.0;
    const double azim = 110.0 * M_PI / 180.0; // fixed sun azimuth in the world frame
    light.to_sun = Vec3(std::cos(elev) * std::cos(azim), std::cos(elev) * std::sin(azim), std::sin(elev));
    light.brightness = 0.25 + 0.75 * std::sin(elev);
    light.sunset = env.sun == SunPosition::Sunset;
    light.tint = light.sunset ? Shade{1.10, 0.88, 0.72} : Shade{1.0, 1.0, 1.0};
    light.shadow_k = 1.0 / std::tan(elev);
    light.shadow_dir = Vec2(-std::cos(azim), -std::sin(azim));
    // Rain dims the scene a little on top of the sun factor.
    light.brightness *= 1.0 - 0.15 * env.precipitation_pct / 100.0;
    return light;
}

// Value noise on a 2D lattice, bilinear interpolation of per-cell hashes.
double value_noise(uint64_t seed, double x, double y) {
    const double fx = std::floor(x), fy = std::floor(y);
    const int64_t ix = int64_t(fx), iy = int64_t(fy);
    const double tx = x - fx, ty = y - fy;
    auto corner = [&](int64_t cx, int64_t cy) {
        return hash_unit(hash_combine(hash_combine(seed, uint64_t(cx)), uint64_t(cy)));
    };
    const double v00 = corner(ix, iy), v10 = corner(ix + 1, iy);
    const double v01 = corner(ix, iy + 1), v11 = corner(ix + 1, iy + 1);
    const double sx = tx * tx * (3 - 2 * tx), sy = ty * ty * (3 - 2 * ty);
    return (v00 * (1 - sx) + v10 * sx) * (1 - sy) + (v01 * (1 - sx) + v11 * sx) * sy;
}

Shade shade_sky(const Vec3& dir, const LightModel& light) {
    // dir need not be normalized; only the elevation ratio matters.
    const double up = std::clamp(dir.z() / dir.norm(), 0.0, 1.0);
    const Shade zenith = light.sunset ? Shade{0.36, 0.32, 0.48} : Shade{0.32, 0.52, 0.85};
    const Shade horizon = light.sunset ? Shade{0.95, 0.62, 0.38} : Shade{0.70, 0.79, 0.88};
    return mix(horizon, zenith, std::sqrt(up));
}

// Convex hull (monotone chain) of ground points, for the vehicle shadow.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
    };
    std::vector<Vec2> hull(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 0 ? k - 1 : 0);
    return hull;
}

bool point_in_convex(const std::vector<Vec2>& hull, const Vec2& p) {
    if (hull.size() < 3) return false;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Vec2& a = hull[i];
        const Vec2& b = hull[(i + 1) % hull.size()];
        const double c = (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
        if (c < 0) return false; // hull is counter-clockwise
    }
    return true;
}

struct GroundShader {
    const EpisodeSpec* spec;
    const LightModel* light;
    const RenderOptions* opts;
    std::vector<Vec2> shadow_hull;

    Shade operator()(double x, double y) const {
        Shade c;
        const bool on_road = y >= kRoadYMin && y <= kRoadYMax;
        if (on_road) {
            const double n = value_noise(spec->rng_seed ^ 0xA5FAu, x * 2.0, y * 2.0);
            const double a = 0.30 + 0.06 * n;
            c = {a, a, a * 1.04};
            const bool center_dash = std::abs(y - kCenterLineY) < kLineHalfWidth &&
                                     std::fmod(std::fmod(x, kDashPeriod) + kDashPeriod, kDashPeriod) < 3.0;
            const bool edge_line = std::abs(y - (kRoadYMin + 0.20)) < kLineHalfWidth ||
                                   std::abs(y - (kRoadYMax - 0.20)) < kLineHalfWidth;
            if (center_dash || edge_line) c = {0.85, 0.85, 0.82};
            if (opts->draw_deposits && spec->environment.deposit_pct > 0) {
                // Standing water: world-anchored patches that mirror the sky.
                const double wet = value_noise(spec->rng_seed ^ 0xD07u, x / 1.5, y / 1.5);
                const double coverage = 0.45 * spec->environment.deposit_pct / 100.0;
                if (wet > 1.0 - coverage) {
                    const Shade reflect = shade_sky(Vec3(0.3, 0.0, 1.0), *light);
                    c = mix(c, reflect, 0.65);
                }
            }
        } else {
            const double n = value_noise(spec->rng_seed ^ 0x6EEDu, x * 1.3, y * 1.3);
            c = {0.14 + 0.05 * n, 0.33 + 0.08 * n, 0.11 + 0.04 * n};
        }
        if (!shadow_hull.empty() && point_in_convex(shadow_hull, {x, y})) {
            c = c * 0.55;
        }
        return c;
    }
};

// Near-plane clip of a polygon in camera space (Sutherland-Hodgman).
std::vector<Vec3> clip_near(const std::vector<Vec3>& poly, double z_near) {
    std::vector<Vec3> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec3& a = poly[i];
        const Vec3& b = poly[(i + 1) % n];
        const bool ia = a.z() >= z_near, ib = b.z() >= z_near;
        if (ia) out.push_back(a);
        if (ia != ib) {
            const double t = (z_near - a.z()) / (b.z() - a.z());
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

void fill_polygon(Image& img, const std::vector<Vec2>& poly, const Shade& shade) {
    if (poly.size() < 3) return;
    double ymin = poly[0].y(), ymax = poly[0].y();
    for (const auto& p : poly) {
        ymin = std::min(ymin, p.y());
        ymax = std::max(ymax, p.y());
    }
    const int y0 = std::max(0, int(std::ceil(ymin - 0.5)));
    const int y1 = std::min(img.height() - 1, int(std::floor(ymax - 0.5)));
    const uint8_t r8 = uint8_t(std::lround(255.0 * std::clamp(shade.r, 0.0, 1.0)));
    const uint8_t g8 = uint8_t(std::lround(255.0 * std::clamp(shade.g, 0.0, 1.0)));
    const uint8_t b8 = uint8_t(std::lround(255.0 * std::clamp(shade.b, 0.0, 1.0)));
    for (int y = y0; y <= y1; ++y) {
        const double yc = y + 0.5;
        double xl = 1e30, xr = -1e30;
        for (size_t i = 0; i < poly.size(); ++i) {
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % poly.size()];
            if ((a.y() <= yc && b.y() > yc) || (b.y() <= yc && a.y() > yc)) {
                const double x = a.x() + (yc - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
                xl = std::min(xl, x);
                xr = std::max(xr, x);
            }
        }
        if (xl > xr) continue;
        const int x0 = std::max(0, int(std::ceil(xl - 0.5)));
        const int x1 = std::min(img.width() - 1, int(std::floor(xr - 0.5)));
        for (int x = x0; x <= x1; ++x) {
            uint8_t* px = img.px(x, y);
            px[0] = r8;
            px[1] = g8;
            px[2] = b8;
        }
    }
}

void apply_light(Shade& c, const LightModel& light) {
    c.r = std::clamp(c.r * light.brightness * light.tint.r, 0.0, 1.0);
    c.g = std::clamp(c.g * light.brightness * light.tint.g, 0.0, 1.0);
    c.b = std::clamp(c.b * light.brightness * light.tint.b, 0.0, 1.0);
}

void draw_rain(Image& img, const EpisodeSpec& spec, double t, const LightModel& light) {
    const int w = img.width(), h = img.height();
    const int count = int(std::lround(spec.environment.precipitation_pct / 100.0 * double(w) * h / 160.0));
    const double len = std::max(2.0, 0.05 * h);
    const double slant = 0.18;
    Shade streak{0.78, 0.80, 0.84};
    apply_light(streak, light);
    for (int k = 0; k < count; ++k) {
        const uint64_t key = hash_combine(spec.rng_seed ^ 0x9A17u, uint64_t(k));
        const double x0 = hash_unit(hash_combine(key, 1)) * w;
        const double phase = hash_unit(hash_combine(key, 2)) * (h + len);
        const double fall = h * (1.4 + 0.8 * hash_unit(hash_combine(key, 3))); // px/s
        const double head = std::fmod(phase + t * fall, double(h) + len);
        for (double s = 0.0; s < len; s += 1.0) {
            const double y = head - s;
            const double x = x0 + slant * s;
            const int xi = int(x), yi = int(y);
            if (xi < 0 || xi >= w || yi < 0 || yi >= h) continue;
            uint8_t* px = img.px(xi, yi);
            px[0] = uint8_t(px[0] + std::lround((255.0 * streak.r - px[0]) * 0.40));
            px[1] = uint8_t(px[1] + std::lround((255.0 * streak.g - px[1]) * 0.40));
            px[2] = uint8_t(px[2] + std::lround((255.0 * streak.b - px[2]) * 0.40));
        }
    }
}

} // namespace

std::array<Vec3, 8> vehicle_corners(const VehicleSpec& vehicle, double center_x, double lateral_y) {
    const double hl = vehicle.length_m / 2.0, hw = vehicle.width_m / 2.0, hh = vehicle.height_m / 2.0;
    std::array<Vec3, 8> out;
    int i = 0;
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0})
            for (double sz : {-1.0, 1.0})
                out[i++] = Vec3(center_x + sx * hl, lateral_y + sy * hw, hh + sz * hh);
    return out;
}

Image render_frame(const EpisodeSpec& spec, const CameraRig& rig, double t, const RenderOptions& opts) {
    if (t < 0.0) throw std::invalid_argument("render_frame: t must be >= 0");
    spec.validate();
    rig.validate();

    const Projection proj(rig);
    const LightModel light = make_light(spec.environment);
    const GroundTruthTrack track = make_track(spec, rig);
    const double vx = track.start_x_m + spec.speed_mps * t;

    GroundShader ground{&spec, &light, &opts, {}};
    if (opts.draw_vehicle && opts.draw_shadow) {
        std::vector<Vec2> pts;
        for (const Vec3& c : vehicle_corners(spec.vehicle, vx, track.lateral_y_m)) {
            pts.emplace_back(c.x() + c.z() * light.shadow_k * light.shadow_dir.x(),
                             c.y() + c.z() * light.shadow_k * light.shadow_dir.y());
        }
        ground.shadow_hull = convex_hull(std::move(pts));
    }

    Image img(rig.width_px, rig.height_px);
    const Vec3 cam_pos = proj.camera_position();
    for (int y = 0; y < rig.height_px; ++y) {
        uint8_t* row = img.row(y);
        for (int x = 0; x < rig.width_px; ++x) {
            const Vec3 ray = proj.pixel_ray(x + 0.5, y + 0.5);
            Shade c;
            if (ray.z() < -1e-9) {
                const double s = cam_pos.z() / -ray.z();
                c = ground(cam_pos.x() + s * ray.x(), cam_pos.y() + s * ray.y());
            } else {
                c = shade_sky(ray, light);
            }
            apply_light(c, light);
            row[x * 3 + 0] = uint8_t(std::lround(255.0 * c.r));
            row[x * 3 + 1] = uint8_t(std::lround(255.0 * c.g));
            row[x * 3 + 2] = uint8_t(std::lround(255.0 * c.b));
        }
    }

    if (opts.draw_vehicle) {
        const auto corners = vehicle_corners(spec.vehicle, vx, track.lateral_y_m);
        // Quad faces of the cuboid, outward normals. Corner index bits: x|y|z.
        static const int faces[6][4] = {
            {0, 1, 3, 2}, {4, 6, 7, 5}, // -X, +X
            {0, 4, 5, 1}, {2, 3, 7, 6}, // -Y, +Y
            {0, 2, 6, 4}, {1, 5, 7, 3}, // -Z, +Z
        };
        static const Vec3 normals[6] = {
            {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}};
        const Shade base{spec.vehicle.color_rgb[0] / 255.0, spec.vehicle.color_rgb[1] / 255.0,
                         spec.vehicle.color_rgb[2] / 255.0};
        for (int f = 0; f < 6; ++f) {
            Vec3 center = Vec3::Zero();
            for (int k = 0; k < 4; ++k) center += corners[faces[f][k]];
            center /= 4.0;
            if (normals[f].dot(center - cam_pos) >= 0.0) continue; // back face
            std::vector<Vec3> cam_poly;
            for (int k = 0; k < 4; ++k) cam_poly.push_back(proj.to_camera(corners[faces[f][k]]));
            cam_poly = clip_near(cam_poly, 0.05);
            if (cam_poly.size() < 3) continue;
            std::vector<Vec2> px_poly;
            for (const Vec3& p : cam_poly) px_poly.push_back(proj.project_camera_point(p));
            const double lambert = 0.35 + 0.65 * std::max(0.0, normals[f].dot(light.to_sun));
            Shade c = base * lambert;
            apply_light(c, light);
            fill_polygon(img, px_poly, c);
        }
    }

    if (opts.draw_rain && spec.environment.precipitation_pct > 0) {
        draw_rain(img, spec, t, light);
    }
    return img;
}

} // namespace vsd::scene
