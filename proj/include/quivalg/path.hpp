#pragma once

#include "quivalg/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quivalg {

/* A path in a quiver: either the trivial path at base_vertex (arrows empty)
   or a composable arrow sequence, left to right. For nonempty paths
   base_vertex duplicates the source of the first arrow. */
struct Path {
  uint32_t base_vertex = 0;
  std::vector<uint32_t> arrows;

  size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  bool operator==(const Path& other) const {
    return base_vertex == other.base_vertex && arrows == other.arrows;
  }
};

Path trivial_path(const Quiver& E, uint32_t v);
Path arrow_path(const Quiver& E, uint32_t a);
/* Throws ContextViolation if the arrow sequence does not compose. */
Path make_path(const Quiver& E, const std::vector<uint32_t>& arrows);

uint32_t path_source(const Quiver& E, const Path& p);
uint32_t path_range(const Quiver& E, const Path& p);

/* Concatenation p then q; nullopt when r(p) != s(q). */
std::optional<Path> path_concat(const Quiver& E, const Path& p, const Path& q);

/* Canonical term order: by length, then trivial paths by vertex name,
   nonempty paths lexicographically by arrow names. */
struct PathOrder {
  const Quiver* E = nullptr;
  bool operator()(const Path& a, const Path& b) const;
};

/* "p_v" for trivial paths, arrow names joined by '*' with runs of a repeated
   arrow compressed to '^k'. */
std::string path_to_string(const Quiver& E, const Path& p);

} // namespace quivalg
