#pragma once

#include <filesystem>
#include <string>

namespace skig::util {

std::string read_file(const std::filesystem::path& path);
// Writes via a temp file in the same directory + rename, so readers never see
// a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
// Durable single-line append; the trailing newline is the commit marker.
void append_line(const std::filesystem::path& path, const std::string& line);
void ensure_dir(const std::filesystem::path& dir);

}  // namespace skig::util
