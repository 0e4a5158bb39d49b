#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vlcsim/scene.hpp"

namespace vlcsim {

/// Serializes a scene as a JSON document (two-space indent, trailing newline).
/// Numbers use the shortest representation that round-trips.
std::string save_scene(const Scene& scene);

/// Parses a scene document against the schema only. Unknown members, missing
/// members, wrong types and non-finite numbers raise SceneFormatError; syntax
/// errors report line and column.
Scene parse_scene(std::string_view document);

/// parse_scene followed by validate(); throws SceneInvalidError when any
/// error-level violation is present.
Scene load_scene(std::string_view document);

/// Reads a whole file. Throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes a whole file. Throws std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace vlcsim
