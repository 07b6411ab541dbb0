#pragma once

#include "vsd/data/manifest.hpp"

namespace vsd::data {

// Builds a manifest from an externally recorded dataset that follows the
// episodes/ep_XXXXX/{meta.json,frames/*.png} layout (e.g. simulator dumps).
// Validates each episode's schema, canonicalizes "Midday" environment
// labels to "Noon", and checks that n_frames matches the files on disk.
// Header fields come from <root>/manifest.json when present, otherwise from
// the first episode's meta. Episodes that violate the schema abort the
// ingest with an error naming them.
DatasetManifest ingest_external(const std::filesystem::path& root);

} // namespace vsd::data
