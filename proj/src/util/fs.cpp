#include "skig/util/fs.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skig/common.hpp"

namespace skig::util {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) ensure_dir(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(Errc::io, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fail(Errc::io, "rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
}

void append_line(const fs::path& path, const std::string& line) {
  if (path.has_parent_path()) ensure_dir(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) fail(Errc::io, "cannot append to " + path.string());
  out << line << '\n';
  out.flush();
  if (!out) fail(Errc::io, "short append to " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::io, "mkdir " + dir.string() + ": " + ec.message());
}

}  // namespace skig::util
