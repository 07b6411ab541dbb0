#include "vsd/data/normalize.hpp"

#include <stdexcept>

namespace vsd::data {

void NormalizationSpec::validate() const {
    if (!(v_min_mps < v_max_mps)) {
        throw std::invalid_argument("NormalizationSpec: v_min must be < v_max");
    }
}

json NormalizationSpec::to_json() const {
    return json{{"v_min_mps", v_min_mps}, {"v_max_mps", v_max_mps}};
}

NormalizationSpec NormalizationSpec::from_json(const json& j) {
    NormalizationSpec s;
    s.v_min_mps = j.at("v_min_mps").get<double>();
    s.v_max_mps = j.at("v_max_mps").get<double>();
    s.validate();
    return s;
}

double normalize_speed(double v_mps, const NormalizationSpec& spec, bool* out_of_range) {
    spec.validate();
    if (out_of_range) *out_of_range = v_mps < spec.v_min_mps || v_mps > spec.v_max_mps;
    return 2.0 * (v_mps - spec.v_min_mps) / (spec.v_max_mps - spec.v_min_mps) - 1.0;
}

double denormalize_speed(double y, const NormalizationSpec& spec) {
    spec.validate();
    return spec.v_min_mps + (y + 1.0) * (spec.v_max_mps - spec.v_min_mps) / 2.0;
}

} // namespace vsd::data
