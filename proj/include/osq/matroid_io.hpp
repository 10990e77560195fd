#pragma once

#include <string>

#include "osq/matroid.hpp"

namespace osq {

/// Loads {"n": int, "circuits": [[1-based labels]]} or
/// {"matrix": [["p/q",...],...]} (columns = ground elements).
/// Rejects files specifying both. Throws std::invalid_argument / json errors.
Matroid load_matroid_file(const std::string& path);

Matroid load_matroid_text(const std::string& json_text);

}  // namespace osq
