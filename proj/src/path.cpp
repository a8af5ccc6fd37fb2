#include "quivalg/path.hpp"

#include "quivalg/errors.hpp"

namespace quivalg {

Path trivial_path(const Quiver& E, uint32_t v) {
  if (v >= E.num_vertices()) throw ContextViolation("vertex index out of range");
  return Path{v, {}};
}

Path arrow_path(const Quiver& E, uint32_t a) {
  if (a >= E.num_arrows()) throw ContextViolation("arrow index out of range");
  return Path{E.source(a), {a}};
}

Path make_path(const Quiver& E, const std::vector<uint32_t>& arrows) {
  if (arrows.empty()) throw ContextViolation("make_path needs at least one arrow");
  for (size_t i = 0; i + 1 < arrows.size(); ++i)
    if (E.range(arrows[i]) != E.source(arrows[i + 1]))
      throw ContextViolation("arrow sequence does not compose");
  return Path{E.source(arrows[0]), arrows};
}

uint32_t path_source(const Quiver& E, const Path& p) {
  (void)E;
  return p.base_vertex;
}

uint32_t path_range(const Quiver& E, const Path& p) {
  if (p.trivial()) return p.base_vertex;
  return E.range(p.arrows.back());
}

std::optional<Path> path_concat(const Quiver& E, const Path& p, const Path& q) {
  if (path_range(E, p) != path_source(E, q)) return std::nullopt;
  if (p.trivial()) return q;
  if (q.trivial()) return p;
  Path out = p;
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

bool PathOrder::operator()(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial())
    return E->vertex_name(a.base_vertex) < E->vertex_name(b.base_vertex);
  for (size_t i = 0; i < a.arrows.size(); ++i) {
    if (a.arrows[i] == b.arrows[i]) continue;
    return E->arrow_name(a.arrows[i]) < E->arrow_name(b.arrows[i]);
  }
  return false;
}

std::string path_to_string(const Quiver& E, const Path& p) {
  if (p.trivial()) return "p_" + E.vertex_name(p.base_vertex);
  std::string out;
  size_t i = 0;
  while (i < p.arrows.size()) {
    size_t run = 1;
    while (i + run < p.arrows.size() && p.arrows[i + run] == p.arrows[i]) ++run;
    if (!out.empty()) out += "*";
    out += E.arrow_name(p.arrows[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

} // namespace quivalg
