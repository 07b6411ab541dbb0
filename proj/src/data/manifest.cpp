#include "vsd/data/manifest.hpp"

#include "vsd/scene/episode.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

namespace vsd::data {

json ManifestEntry::to_json() const {
    return json{{"episode_index", episode_id},
                {"speed_mps", speed_mps},
                {"uniform_draw", uniform_draw},
                {"vehicle_name", vehicle_name},
                {"vehicle_category", vehicle_category},
                {"environment_label", environment_label},
                {"fps", fps},
                {"resolution", {width_px, height_px}},
                {"segment_length_m", segment_length_m},
                {"rng_seed", rng_seed},
                {"n_frames", n_frames}};
}

ManifestEntry ManifestEntry::from_json(const json& j) {
    ManifestEntry e;
    e.episode_id = j.at("episode_index").get<int64_t>();
    e.speed_mps = j.at("speed_mps").get<double>();
    e.uniform_draw = j.at("uniform_draw").get<double>();
    e.vehicle_name = j.at("vehicle_name").get<std::string>();
    e.vehicle_category = j.at("vehicle_category").get<std::string>();
    e.environment_label = j.at("environment_label").get<std::string>();
    e.fps = j.at("fps").get<double>();
    e.width_px = j.at("resolution").at(0).get<int>();
    e.height_px = j.at("resolution").at(1).get<int>();
    e.segment_length_m = j.at("segment_length_m").get<double>();
    e.rng_seed = j.at("rng_seed").get<uint64_t>();
    e.n_frames = j.at("n_frames").get<int>();
    return e;
}

void DatasetManifest::validate() const {
    std::set<int64_t> ids;
    for (const auto& e : episodes) {
        if (!ids.insert(e.episode_id).second) {
            throw std::runtime_error("manifest: duplicate episode_id " + std::to_string(e.episode_id));
        }
        if (e.n_frames < 1) {
            throw std::runtime_error("manifest: episode " + std::to_string(e.episode_id) + " has n_frames < 1");
        }
    }
}

std::vector<int64_t> DatasetManifest::out_of_range_speeds() const {
    // Generated datasets always sample inside [8.33, 27.77]; ingested
    // external recordings may not, and are flagged rather than rejected.
    std::vector<int64_t> ids;
    for (const auto& e : episodes) {
        if (e.speed_mps < scene::kSpeedBase - 1e-9 || e.speed_mps > scene::kSpeedMax + 1e-9) {
            ids.push_back(e.episode_id);
        }
    }
    return ids;
}

const ManifestEntry& DatasetManifest::find(int64_t episode_id) const {
    for (const auto& e : episodes) {
        if (e.episode_id == episode_id) return e;
    }
    throw std::out_of_range("manifest: no episode with id " + std::to_string(episode_id));
}

std::string episode_dir_name(int64_t episode_id) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "ep_%05lld", static_cast<long long>(episode_id));
    return buf;
}

std::string frame_file_name(int frame_index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%06d.png", frame_index);
    return buf;
}

std::filesystem::path DatasetManifest::episode_dir(int64_t episode_id) const {
    return root / "episodes" / episode_dir_name(episode_id);
}

std::filesystem::path DatasetManifest::frame_path(int64_t episode_id, int frame_index) const {
    return episode_dir(episode_id) / "frames" / frame_file_name(frame_index);
}

json DatasetManifest::to_json() const {
    json eps = json::array();
    for (const auto& e : episodes) eps.push_back(e.to_json());
    return json{{"format_version", format_version},
                {"fps", fps},
                {"resolution", {width_px, height_px}},
                {"segment_length_m", segment_length_m},
                {"master_seed", master_seed},
                {"episodes", std::move(eps)}};
}

DatasetManifest DatasetManifest::from_json(const json& j, const std::filesystem::path& root) {
    DatasetManifest m;
    m.root = root;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != 1) {
        throw std::runtime_error("manifest: unsupported format_version " + std::to_string(m.format_version));
    }
    m.fps = j.at("fps").get<double>();
    m.width_px = j.at("resolution").at(0).get<int>();
    m.height_px = j.at("resolution").at(1).get<int>();
    m.segment_length_m = j.at("segment_length_m").get<double>();
    m.master_seed = j.at("master_seed").get<uint64_t>();
    for (const auto& e : j.at("episodes")) m.episodes.push_back(ManifestEntry::from_json(e));
    m.validate();
    return m;
}

void DatasetManifest::save() const {
    write_json_file(root / "manifest.json", to_json());
}

DatasetManifest DatasetManifest::load(const std::filesystem::path& root) {
    return from_json(read_json_file(root / "manifest.json"), root);
}

} // namespace vsd::data
