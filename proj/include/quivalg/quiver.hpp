#pragma once

#include "quivalg/errors.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace quivalg {

using VertexId = std::string;
using ArrowId = std::string;

struct Arrow {
  ArrowId name;
  uint32_t source = 0;
  uint32_t range = 0;
};

/* A finite quiver. Vertices and arrows are interned to dense indices in
   declaration order; names stay the external identity. Immutable after
   construction. */
class Quiver {
public:
  Quiver(std::vector<VertexId> vertices,
         std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_arrows() const { return arrows_.size(); }

  const VertexId& vertex_name(uint32_t v) const { return vertices_[v]; }
  const Arrow& arrow(uint32_t a) const { return arrows_[a]; }
  const ArrowId& arrow_name(uint32_t a) const { return arrows_[a].name; }
  uint32_t source(uint32_t a) const { return arrows_[a].source; }
  uint32_t range(uint32_t a) const { return arrows_[a].range; }

  std::optional<uint32_t> vertex_index(const VertexId& name) const;
  std::optional<uint32_t> arrow_index(const ArrowId& name) const;

  /* r^{-1}(v), in declaration order. */
  const std::vector<uint32_t>& incoming(uint32_t v) const { return incoming_[v]; }
  bool is_receiving(uint32_t v) const { return !incoming_[v].empty(); }

  /* The distinguished arrow into a receiving vertex: first incoming arrow in
     declaration order. Used by the bar-relation rewriting. */
  uint32_t distinguished_arrow(uint32_t v) const;

  bool operator==(const Quiver& other) const;

private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::map<VertexId, uint32_t> vertex_by_name_;
  std::map<ArrowId, uint32_t> arrow_by_name_;
  std::vector<std::vector<uint32_t>> incoming_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr build_quiver(std::vector<VertexId> vertices,
                       std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows);

/* Same vertices, every arrow reversed (name kept; bar-ness is contextual). */
QuiverPtr inverse_quiver(const Quiver& E);

std::vector<uint32_t> receiving_vertices(const Quiver& E);

/* A pair of maps E -> F given by vertex/arrow indices into F. */
struct GraphHom {
  std::vector<uint32_t> vertex_map; // size E.num_vertices()
  std::vector<uint32_t> arrow_map;  // size E.num_arrows()
};

/* Complete graph homomorphism: injective on vertices and arrows, commutes
   with source/range, and restricts to a bijection r_E^{-1}(v) ->
   r_F^{-1}(f(v)) at every receiving vertex of E. `why` (optional) receives
   the first violated condition. */
bool check_complete_hom(const Quiver& E, const Quiver& F, const GraphHom& f,
                        std::string* why = nullptr);

/* The complete subquiver in which exactly the seed vertices keep all their
   incoming arrows; sources of those arrows join as boundary vertices with no
   incoming arrows of their own. The inclusion into E is a complete hom. */
QuiverPtr complete_subquiver_containing(const Quiver& E,
                                        const std::vector<VertexId>& seed);

/* Inclusion hom of a subquiver produced by complete_subquiver_containing. */
GraphHom inclusion_hom(const Quiver& sub, const Quiver& E);

/* Standard small quivers used throughout the tests and docs. */
QuiverPtr quiver_loop();           // one vertex v, one loop e
QuiverPtr quiver_rose(size_t n);   // one vertex v, loops a1..an (n=2: a,b)
QuiverPtr quiver_a2();             // vertices 1,2, arrow e:1->2

} // namespace quivalg
