#ifndef PI2_CORPUS_HPP_
#define PI2_CORPUS_HPP_

#include <map>
#include <optional>
#include <string>

#include "pi2/presentation.hpp"

namespace pi2 {

// Bundled presentation documents, keyed by name (no extension).
std::map<std::string, std::string> const& corpus_files();

std::optional<std::string> corpus_file(std::string const& name);

// Loads from a filesystem path when one exists, otherwise falls back to the
// bundled corpus (with or without a .json suffix).
Presentation load_presentation_any(std::string const& path_or_name);

}  // namespace pi2

#endif  // PI2_CORPUS_HPP_
