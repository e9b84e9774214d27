#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctk {

inline constexpr std::string_view kVersion = "0.1.0";

// Thrown for malformed or inconsistent user input (files, flags, configs).
// The CLI maps it to exit code 2; everything else is an internal error (1).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a over raw bytes; used as the content digest in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

// Shortest-width "%.17g" rendering; round-trips any finite double.
std::string format_double(double x);

// ISO 8601 UTC, seconds resolution, e.g. "2026-08-10T12:00:00Z".
std::string utc_timestamp();

// Whole-file read; throws input_error when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Write via temp file + rename so readers never observe partial output.
void atomic_write(const std::filesystem::path& path, std::string_view contents);

}  // namespace ctk
