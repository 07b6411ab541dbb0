#pragma once

#include <array>
#include <string>
#include <vector>

namespace vsd::scene {

enum class SunPosition { Noon, Sunset };

// Solar elevation in degrees for each discrete sun position.
double sun_elevation_deg(SunPosition sun);

// Discrete lighting/weather grid: 2 sun positions x 4 precipitation levels
// x 3 deposit levels = 24 conditions.
struct EnvironmentCondition {
    SunPosition sun = SunPosition::Noon;
    int precipitation_pct = 0; // one of {0, 15, 30, 60}
    int deposit_pct = 0;       // one of {0, 50, 100}

    void validate() const;

    // Canonical label, e.g. "Sunset_30_50".
    std::string label() const;

    // Parses a canonical label. "Midday" is accepted as an alias for "Noon".
    static EnvironmentCondition from_label(const std::string& label);

    bool operator==(const EnvironmentCondition&) const = default;
};

inline constexpr std::array<int, 4> kPrecipitationLevels{0, 15, 30, 60};
inline constexpr std::array<int, 3> kDepositLevels{0, 50, 100};

// All 24 conditions in a fixed order (sun-major, then precipitation, then
// deposit); index k selects one cell of the grid.
std::vector<EnvironmentCondition> environment_grid();
EnvironmentCondition environment_from_grid_index(size_t k);

} // namespace vsd::scene
