#include "vsd/scene/environment.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsd::scene {

double sun_elevation_deg(SunPosition sun) {
    return sun == SunPosition::Noon ? 75.0 : 15.0;
}

void EnvironmentCondition::validate() const {
    if (std::find(kPrecipitationLevels.begin(), kPrecipitationLevels.end(), precipitation_pct) ==
        kPrecipitationLevels.end()) {
        throw std::invalid_argument("EnvironmentCondition: precipitation_pct must be one of {0,15,30,60}, got " +
                                    std::to_string(precipitation_pct));
    }
    if (std::find(kDepositLevels.begin(), kDepositLevels.end(), deposit_pct) == kDepositLevels.end()) {
        throw std::invalid_argument("EnvironmentCondition: deposit_pct must be one of {0,50,100}, got " +
                                    std::to_string(deposit_pct));
    }
}

std::string EnvironmentCondition::label() const {
    std::string s = sun == SunPosition::Noon ? "Noon" : "Sunset";
    return s + "_" + std::to_string(precipitation_pct) + "_" + std::to_string(deposit_pct);
}

EnvironmentCondition EnvironmentCondition::from_label(const std::string& label) {
    const auto p1 = label.find('_');
    const auto p2 = label.find('_', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        throw std::invalid_argument("bad environment label: " + label);
    }
    const std::string sun_s = label.substr(0, p1);
    EnvironmentCondition env;
    if (sun_s == "Noon" || sun_s == "Midday") {
        env.sun = SunPosition::Noon;
    } else if (sun_s == "Sunset") {
        env.sun = SunPosition::Sunset;
    } else {
        throw std::invalid_argument("bad environment label (sun): " + label);
    }
    try {
        env.precipitation_pct = std::stoi(label.substr(p1 + 1, p2 - p1 - 1));
        env.deposit_pct = std::stoi(label.substr(p2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad environment label (numbers): " + label);
    }
    env.validate();
    return env;
}

std::vector<EnvironmentCondition> environment_grid() {
    std::vector<EnvironmentCondition> grid;
    grid.reserve(24);
    for (SunPosition sun : {SunPosition::Noon, SunPosition::Sunset}) {
        for (int precip : kPrecipitationLevels) {
            for (int dep : kDepositLevels) {
                grid.push_back({sun, precip, dep});
            }
        }
    }
    return grid;
}

EnvironmentCondition environment_from_grid_index(size_t k) {
    if (k >= 24) throw std::out_of_range("environment grid index out of range");
    const size_t sun = k / 12;
    const size_t precip = (k % 12) / 3;
    const size_t dep = k % 3;
    return {sun == 0 ? SunPosition::Noon : SunPosition::Sunset, kPrecipitationLevels[precip],
            kDepositLevels[dep]};
}

} // namespace vsd::scene
