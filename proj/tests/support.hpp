#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "godp/expander.hpp"
#include "godp/parser.hpp"

namespace godp::testing {

inline std::filesystem::path corpus() { return CORPUS_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Every `.gdol` file below `dir`, sorted.
inline std::vector<std::filesystem::path> gdol_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".gdol") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Library of the whole shipped corpus.
inline Library corpus_library(const std::filesystem::path& dir = corpus()) {
  Library lib;
  for (const auto& p : gdol_files(dir)) lib.add(load_document(p.string()));
  return lib;
}

// Library of the corpus plus one extra in-memory document.
inline Library corpus_library_with(const std::string& text) {
  Library lib = corpus_library();
  lib.add(parse_document(text, "<test>"));
  return lib;
}

// A fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("godp_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace godp::testing
