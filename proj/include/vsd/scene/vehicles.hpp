#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vsd::scene {

enum class VehicleCategory { car, truck, motorbike, bike };

std::string to_string(VehicleCategory c);
VehicleCategory vehicle_category_from_string(const std::string& s);

struct VehicleSpec {
    std::string name;
    VehicleCategory category = VehicleCategory::car;
    double length_m = 4.5;
    double width_m = 1.8;
    double height_m = 1.5;
    std::array<uint8_t, 3> color_rgb{200, 30, 30};

    void validate() const;
};

// Catalog of the 27 vehicles available to the generator. Entries are fixed
// (names, sizes, colors); index into it with a seeded uniform draw.
const std::vector<VehicleSpec>& vehicle_catalog();

// Looks a vehicle up by name; throws if unknown.
const VehicleSpec& vehicle_by_name(const std::string& name);

} // namespace vsd::scene
