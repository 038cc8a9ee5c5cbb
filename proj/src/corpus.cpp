#include "pi2/corpus.hpp"

#include <filesystem>

namespace pi2 {

std::optional<std::string> corpus_file(std::string const& name) {
  std::string key = name;
  if (key.size() > 5 && key.substr(key.size() - 5) == ".json") {
    key = key.substr(0, key.size() - 5);
  }
  auto const& files = corpus_files();
  auto it = files.find(key);
  if (it == files.end()) {
    return std::nullopt;
  }
  return it->second;
}

Presentation load_presentation_any(std::string const& path_or_name) {
  std::error_code ec;
  if (std::filesystem::exists(path_or_name, ec)) {
    return load_presentation_file(path_or_name);
  }
  if (auto text = corpus_file(path_or_name)) {
    return parse_presentation_text(*text);
  }
  throw error("presentation not found: " + path_or_name +
              " (not a file, and not a bundled corpus name)");
}

}  // namespace pi2
