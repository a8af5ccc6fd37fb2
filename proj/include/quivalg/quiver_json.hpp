#pragma once

#include "quivalg/quiver.hpp"

#include <string>

namespace quivalg {

/* Quiver file format:
     {"vertices": ["1", "2"], "arrows": [{"name": "e", "source": "1",
      "range": "2"}]}
   Strict: unknown keys, duplicate names, dangling endpoints and wrong types
   are all rejected with QuiverError. */
QuiverPtr quiver_from_json_text(const std::string& text);
QuiverPtr quiver_from_json_file(const std::string& path);
std::string quiver_to_json_text(const Quiver& E);

} // namespace quivalg
