#include "vsd/data/splits.hpp"

#include "vsd/core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace vsd::data {

SplitAssignment split_dataset(const DatasetManifest& manifest, const SplitRatios& ratios, uint64_t seed) {
    if (manifest.episodes.empty()) throw std::invalid_argument("split_dataset: empty manifest");
    const double sum = ratios.train + ratios.val + ratios.test;
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("split_dataset: ratios must sum to 1");
    if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0) {
        throw std::invalid_argument("split_dataset: ratios must be non-negative");
    }

    std::vector<int64_t> ids;
    ids.reserve(manifest.episodes.size());
    for (const auto& e : manifest.episodes) ids.push_back(e.episode_id);
    std::sort(ids.begin(), ids.end()); // canonical order before the seeded shuffle

    Rng rng(seed);
    rng.shuffle(ids);

    const size_t n = ids.size();
    const size_t n_train = size_t(std::floor(ratios.train * double(n)));
    const size_t n_val = size_t(std::floor(ratios.val * double(n)));

    SplitAssignment split;
    split.seed = seed;
    split.ratios = ratios;
    split.train.assign(ids.begin(), ids.begin() + n_train);
    split.val.assign(ids.begin() + n_train, ids.begin() + n_train + n_val);
    split.test.assign(ids.begin() + n_train + n_val, ids.end());
    // Stored sorted: membership is what matters, and sorted lists keep the
    // serialized file byte-stable.
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.val.begin(), split.val.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

void SplitAssignment::validate_against(const DatasetManifest& manifest) const {
    std::set<int64_t> seen;
    for (const auto* part : {&train, &val, &test}) {
        for (int64_t id : *part) {
            if (!seen.insert(id).second) {
                throw std::runtime_error("splits: episode " + std::to_string(id) + " appears twice");
            }
        }
    }
    if (seen.size() != manifest.episodes.size()) {
        throw std::runtime_error("splits: id count does not match manifest");
    }
    for (const auto& e : manifest.episodes) {
        if (!seen.count(e.episode_id)) {
            throw std::runtime_error("splits: manifest episode " + std::to_string(e.episode_id) + " missing");
        }
    }
}

json SplitAssignment::to_json() const {
    return json{{"seed", seed},
                {"ratios", {ratios.train, ratios.val, ratios.test}},
                {"train", train},
                {"val", val},
                {"test", test}};
}

SplitAssignment SplitAssignment::from_json(const json& j) {
    SplitAssignment s;
    s.seed = j.at("seed").get<uint64_t>();
    s.ratios.train = j.at("ratios").at(0).get<double>();
    s.ratios.val = j.at("ratios").at(1).get<double>();
    s.ratios.test = j.at("ratios").at(2).get<double>();
    s.train = j.at("train").get<std::vector<int64_t>>();
    s.val = j.at("val").get<std::vector<int64_t>>();
    s.test = j.at("test").get<std::vector<int64_t>>();
    return s;
}

void SplitAssignment::save(const std::filesystem::path& path) const {
    write_json_file(path, to_json());
}

SplitAssignment SplitAssignment::load(const std::filesystem::path& path) {
    return from_json(read_json_file(path));
}

} // namespace vsd::data
