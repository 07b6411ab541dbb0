#include "vsd/scene/vehicles.hpp"

#include <stdexcept>

namespace vsd::scene {

std::string to_string(VehicleCategory c) {
    switch (c) {
        case VehicleCategory::car: return "car";
        case VehicleCategory::truck: return "truck";
        case VehicleCategory::motorbike: return "motorbike";
        case VehicleCategory::bike: return "bike";
    }
    throw std::logic_error("unreachable vehicle category");
}

VehicleCategory vehicle_category_from_string(const std::string& s) {
    if (s == "car") return VehicleCategory::car;
    if (s == "truck") return VehicleCategory::truck;
    if (s == "motorbike") return VehicleCategory::motorbike;
    if (s == "bike") return VehicleCategory::bike;
    throw std::invalid_argument("unknown vehicle category: " + s);
}

void VehicleSpec::validate() const {
    if (name.empty()) throw std::invalid_argument("VehicleSpec: empty name");
    if (!(length_m > 0 && width_m > 0 && height_m > 0)) {
        throw std::invalid_argument("VehicleSpec: dimensions must be positive (" + name + ")");
    }
}

const std::vector<VehicleSpec>& vehicle_catalog() {
    using C = VehicleCategory;
    // 27 vehicles: 18 cars, 2 trucks, 4 motorbikes, 3 bikes. Two-wheelers are
    // kept well under car widths so the small-vehicle analyses have a real
    // size gap to work with.
    static const std::vector<VehicleSpec> catalog = {
        {"audi.etron", C::car, 4.90, 1.94, 1.62, {40, 60, 160}},
        {"audi.a2", C::car, 3.83, 1.67, 1.55, {180, 180, 190}},
        {"audi.tt", C::car, 4.18, 1.83, 1.35, {230, 200, 40}},
        {"bmw.grandtourer", C::car, 4.57, 1.80, 1.61, {30, 30, 35}},
        {"chevrolet.impala", C::car, 5.09, 1.85, 1.47, {120, 20, 20}},
        {"citroen.c3", C::car, 3.99, 1.75, 1.47, {220, 60, 30}},
        {"dodge.charger", C::car, 5.01, 1.92, 1.48, {20, 110, 40}},
        {"jeep.wrangler_rubicon", C::car, 4.24, 1.87, 1.84, {200, 120, 30}},
        {"lincoln.mkz2017", C::car, 4.92, 1.86, 1.48, {90, 90, 100}},
        {"mercedes.coupe", C::car, 4.69, 1.81, 1.40, {210, 210, 215}},
        {"mini.cooperst", C::car, 3.82, 1.73, 1.41, {180, 30, 40}},
        {"ford.mustang", C::car, 4.79, 1.92, 1.38, {240, 220, 50}},
        {"nissan.micra", C::car, 3.99, 1.74, 1.46, {60, 160, 210}},
        {"nissan.patrol", C::car, 5.17, 1.98, 1.94, {50, 70, 50}},
        {"seat.leon", C::car, 4.28, 1.80, 1.46, {200, 40, 150}},
        {"tesla.model3", C::car, 4.69, 1.85, 1.44, {235, 235, 240}},
        {"toyota.prius", C::car, 4.57, 1.76, 1.47, {70, 130, 180}},
        {"volkswagen.t2", C::car, 4.50, 1.72, 1.94, {90, 170, 170}},
        {"carlamotors.carlacola", C::truck, 6.20, 2.30, 3.00, {200, 160, 60}},
        {"tesla.cybertruck", C::truck, 5.89, 2.03, 1.90, {170, 175, 180}},
        {"kawasaki.ninja", C::motorbike, 2.05, 0.79, 1.20, {30, 170, 60}},
        {"yamaha.yzf", C::motorbike, 2.06, 0.72, 1.15, {40, 70, 200}},
        {"harley-davidson.low_rider", C::motorbike, 2.35, 0.92, 1.15, {80, 40, 20}},
        {"vespa.zx125", C::motorbike, 1.87, 0.70, 1.10, {220, 200, 180}},
        {"bh.crossbike", C::bike, 1.80, 0.60, 1.45, {160, 40, 40}},
        {"diamondback.century", C::bike, 1.75, 0.58, 1.40, {40, 140, 160}},
        {"gazelle.omafiets", C::bike, 1.83, 0.62, 1.50, {40, 40, 120}},
    };
    return catalog;
}

const VehicleSpec& vehicle_by_name(const std::string& name) {
    for (const auto& v : vehicle_catalog()) {
        if (v.name == name) return v;
    }
    throw std::invalid_argument("unknown vehicle: " + name);
}

} // namespace vsd::scene
