#include "quivalg/quiver_json.hpp"

#include "quivalg/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace quivalg {

namespace {

using nlohmann::json;

void require_exact_keys(const json& obj, std::initializer_list<const char*> keys,
                        const std::string& what) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known) throw QuiverError(what + ": unknown key \"" + item.key() + "\"");
  }
  for (const char* k : keys)
    if (!obj.contains(k))
      throw QuiverError(what + ": missing key \"" + std::string(k) + "\"");
}

std::string string_field(const json& obj, const char* key, const std::string& what) {
  if (!obj[key].is_string())
    throw QuiverError(what + ": \"" + key + "\" must be a string");
  return obj[key].get<std::string>();
}

} // namespace

QuiverPtr quiver_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw QuiverError("quiver file: top level must be an object");
  require_exact_keys(doc, {"vertices", "arrows"}, "quiver file");
  if (!doc["vertices"].is_array())
    throw QuiverError("quiver file: \"vertices\" must be an array");
  if (!doc["arrows"].is_array())
    throw QuiverError("quiver file: \"arrows\" must be an array");

  std::vector<VertexId> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_string())
      throw QuiverError("quiver file: vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows;
  for (const json& a : doc["arrows"]) {
    if (!a.is_object())
      throw QuiverError("quiver file: each arrow must be an object");
    require_exact_keys(a, {"name", "source", "range"}, "arrow entry");
    arrows.emplace_back(string_field(a, "name", "arrow entry"),
                        string_field(a, "source", "arrow entry"),
                        string_field(a, "range", "arrow entry"));
  }
  return build_quiver(std::move(vertices), std::move(arrows));
}

QuiverPtr quiver_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return quiver_from_json_text(buf.str());
}

std::string quiver_to_json_text(const Quiver& E) {
  json vs = json::array();
  for (uint32_t v = 0; v < E.num_vertices(); ++v) vs.push_back(E.vertex_name(v));
  json as = json::array();
  for (uint32_t a = 0; a < E.num_arrows(); ++a)
    as.push_back({{"name", E.arrow_name(a)},
                  {"source", E.vertex_name(E.source(a))},
                  {"range", E.vertex_name(E.range(a))}});
  return json{{"vertices", vs}, {"arrows", as}}.dump(2) + "\n";
}

} // namespace quivalg
