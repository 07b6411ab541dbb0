#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

namespace vsd {

using json = nlohmann::json;

// Reads an entire file; throws on failure, naming the file.
std::string read_text_file(const std::filesystem::path& path);

// Atomic write: write to <path>.tmp, then rename over <path>.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

json read_json_file(const std::filesystem::path& path);

// Serializes with 2-space indent and alphabetically ordered keys so repeated
// runs produce byte-identical files.
void write_json_file(const std::filesystem::path& path, const json& j);

// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

} // namespace vsd
