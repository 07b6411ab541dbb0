#include "vsd/data/ingest.hpp"

#include "vsd/scene/environment.hpp"
#include "vsd/scene/vehicles.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsd::data {

namespace fs = std::filesystem;

DatasetManifest ingest_external(const fs::path& root) {
    const fs::path episodes_dir = root / "episodes";
    if (!fs::is_directory(episodes_dir)) {
        throw std::runtime_error("ingest: no episodes/ directory under " + root.string());
    }

    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(episodes_dir)) {
        if (entry.is_directory()) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end());
    if (dirs.empty()) throw std::runtime_error("ingest: no episodes found under " + episodes_dir.string());

    DatasetManifest manifest;
    manifest.root = root;
    for (const auto& dir : dirs) {
        const fs::path meta_path = dir / "meta.json";
        if (!fs::exists(meta_path)) {
            throw std::runtime_error("ingest: episode " + dir.filename().string() + " has no meta.json");
        }
        ManifestEntry entry;
        try {
            entry = ManifestEntry::from_json(read_json_file(meta_path));
        } catch (const std::exception& e) {
            throw std::runtime_error("ingest: episode " + dir.filename().string() + " has invalid meta.json: " +
                                     e.what());
        }
        // Canonicalize the environment label ("Midday" -> "Noon") and reject
        // labels outside the discretized grid.
        try {
            entry.environment_label = scene::EnvironmentCondition::from_label(entry.environment_label).label();
            scene::vehicle_category_from_string(entry.vehicle_category);
        } catch (const std::exception& e) {
            throw std::runtime_error("ingest: episode " + dir.filename().string() + ": " + e.what());
        }

        int on_disk = 0;
        const fs::path frames_dir = dir / "frames";
        if (fs::is_directory(frames_dir)) {
            for (const auto& f : fs::directory_iterator(frames_dir)) {
                if (f.path().extension() == ".png") ++on_disk;
            }
        }
        if (on_disk != entry.n_frames) {
            throw std::runtime_error("ingest: episode " + dir.filename().string() + " declares " +
                                     std::to_string(entry.n_frames) + " frames but " + std::to_string(on_disk) +
                                     " files are present");
        }
        manifest.episodes.push_back(std::move(entry));
    }

    std::sort(manifest.episodes.begin(), manifest.episodes.end(),
              [](const ManifestEntry& a, const ManifestEntry& b) { return a.episode_id < b.episode_id; });

    // Header: prefer an existing manifest.json, else adopt the episode metadata.
    const fs::path manifest_path = root / "manifest.json";
    if (fs::exists(manifest_path)) {
        const json header = read_json_file(manifest_path);
        manifest.format_version = header.value("format_version", 1);
        manifest.fps = header.value("fps", manifest.episodes.front().fps);
        if (header.contains("resolution")) {
            manifest.width_px = header.at("resolution").at(0).get<int>();
            manifest.height_px = header.at("resolution").at(1).get<int>();
        }
        manifest.segment_length_m = header.value("segment_length_m", manifest.episodes.front().segment_length_m);
        manifest.master_seed = header.value("master_seed", uint64_t(0));
    } else {
        const ManifestEntry& first = manifest.episodes.front();
        manifest.fps = first.fps;
        manifest.width_px = first.width_px;
        manifest.height_px = first.height_px;
        manifest.segment_length_m = first.segment_length_m;
    }
    manifest.validate();
    return manifest;
}

} // namespace vsd::data
