#include "vsd/scene/generate.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace vsd::scene {

namespace fs = std::filesystem;

EpisodeSpec draw_episode_spec(int64_t index, uint64_t master_seed, double segment_length_m,
                              bool record_to_horizon) {
    if (index < 0) throw std::invalid_argument("draw_episode_spec: index must be >= 0");
    const uint64_t episode_seed = hash_combine(master_seed, uint64_t(index));
    Rng rng(episode_seed);

    EpisodeSpec spec;
    spec.episode_index = index;
    const SpeedDraw draw = sample_speed(rng);
    spec.uniform_draw = draw.uniform_draw;
    spec.speed_mps = draw.speed_mps;
    const auto& catalog = vehicle_catalog();
    spec.vehicle = catalog[rng.uniform_int(catalog.size())];
    spec.environment = environment_from_grid_index(rng.uniform_int(24));
    spec.rng_seed = hash_combine(episode_seed, 0xF00Du);
    spec.segment_length_m = segment_length_m;
    spec.record_to_horizon = record_to_horizon;
    return spec;
}

Episode generate_episode(const EpisodeSpec& spec, const CameraRig& rig) {
    spec.validate();
    rig.validate();
    Episode ep;
    ep.spec = spec;
    ep.rig = rig;
    ep.ground_truth = make_track(spec, rig);
    ep.frames.reserve(ep.ground_truth.n_frames);
    for (int k = 0; k < ep.ground_truth.n_frames; ++k) {
        const double t = k / rig.fps;
        ep.frames.push_back({render_frame(spec, rig, t), k, t});
    }
    return ep;
}

namespace {

data::ManifestEntry entry_for(const EpisodeSpec& spec, const CameraRig& rig, int n_frames) {
    data::ManifestEntry e;
    e.episode_id = spec.episode_index;
    e.speed_mps = spec.speed_mps;
    e.uniform_draw = spec.uniform_draw;
    e.vehicle_name = spec.vehicle.name;
    e.vehicle_category = to_string(spec.vehicle.category);
    e.environment_label = spec.environment.label();
    e.fps = rig.fps;
    e.width_px = rig.width_px;
    e.height_px = rig.height_px;
    e.segment_length_m = spec.segment_length_m;
    e.rng_seed = spec.rng_seed;
    e.n_frames = n_frames;
    return e;
}

} // namespace

data::ManifestEntry write_episode(const EpisodeSpec& spec, const CameraRig& rig, const fs::path& dir) {
    spec.validate();
    rig.validate();
    const GroundTruthTrack track = make_track(spec, rig);
    fs::create_directories(dir / "frames");
    for (int k = 0; k < track.n_frames; ++k) {
        const double t = k / rig.fps;
        write_png(render_frame(spec, rig, t), dir / "frames" / data::frame_file_name(k));
    }
    const data::ManifestEntry entry = entry_for(spec, rig, track.n_frames);
    write_json_file(dir / "meta.json", entry.to_json());
    return entry;
}

data::DatasetManifest generate_dataset(const DatasetGenConfig& config, const fs::path& output_root,
                                       const std::function<void(int64_t)>& progress) {
    if (config.n_episodes < 1) throw std::invalid_argument("generate_dataset: n_episodes must be >= 1");
    config.rig.validate();

    if (fs::exists(output_root) && !fs::is_empty(output_root)) {
        if (!config.overwrite) {
            throw std::runtime_error("generate_dataset: output directory not empty: " + output_root.string() +
                                     " (pass overwrite to regenerate)");
        }
        fs::remove_all(output_root / "episodes");
        fs::remove(output_root / "manifest.json");
    }
    fs::create_directories(output_root / "episodes");

    data::DatasetManifest manifest;
    manifest.root = output_root;
    manifest.fps = config.rig.fps;
    manifest.width_px = config.rig.width_px;
    manifest.height_px = config.rig.height_px;
    manifest.segment_length_m = config.segment_length_m;
    manifest.master_seed = config.master_seed;
    manifest.episodes.resize(config.n_episodes);

    const int jobs = std::max(1, config.jobs);
    std::atomic<int64_t> next{0};
    std::mutex mu;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const int64_t i = next.fetch_add(1);
            if (i >= config.n_episodes) return;
            try {
                const EpisodeSpec spec = draw_episode_spec(i, config.master_seed, config.segment_length_m,
                                                           config.record_to_horizon);
                const fs::path dir = output_root / "episodes" / data::episode_dir_name(i);
                manifest.episodes[size_t(i)] = write_episode(spec, config.rig, dir);
                if (progress) {
                    std::lock_guard<std::mutex> lock(mu);
                    progress(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
                next.store(config.n_episodes); // stop the other workers
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (first_error) {
        // Do not leave a half-written dataset behind.
        std::error_code ec;
        fs::remove_all(output_root / "episodes", ec);
        fs::remove(output_root / "manifest.json", ec);
        std::rethrow_exception(first_error);
    }

    manifest.validate();
    manifest.save();
    return manifest;
}

} // namespace vsd::scene
