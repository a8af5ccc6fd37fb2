#include "quivalg/quiver.hpp"

#include <algorithm>
#include <set>

namespace quivalg {

Quiver::Quiver(std::vector<VertexId> vertices,
               std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows) {
  if (vertices.empty()) throw QuiverError("a quiver needs at least one vertex");
  vertices_ = std::move(vertices);
  for (uint32_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw QuiverError("empty vertex name");
    if (!vertex_by_name_.emplace(vertices_[i], i).second)
      throw QuiverError("duplicate vertex name: " + vertices_[i]);
  }
  incoming_.resize(vertices_.size());
  for (auto& [name, src, rng] : arrows) {
    if (name.empty()) throw QuiverError("empty arrow name");
    auto s = vertex_by_name_.find(src);
    auto r = vertex_by_name_.find(rng);
    if (s == vertex_by_name_.end())
      throw QuiverError("arrow " + name + " has unknown source: " + src);
    if (r == vertex_by_name_.end())
      throw QuiverError("arrow " + name + " has unknown range: " + rng);
    uint32_t idx = static_cast<uint32_t>(arrows_.size());
    if (!arrow_by_name_.emplace(name, idx).second)
      throw QuiverError("duplicate arrow name: " + name);
    if (vertex_by_name_.count(name))
      throw QuiverError("arrow name collides with a vertex name: " + name);
    arrows_.push_back(Arrow{name, s->second, r->second});
    incoming_[r->second].push_back(idx);
  }
}

std::optional<uint32_t> Quiver::vertex_index(const VertexId& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<uint32_t> Quiver::arrow_index(const ArrowId& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) return std::nullopt;
  return it->second;
}

uint32_t Quiver::distinguished_arrow(uint32_t v) const {
  if (incoming_[v].empty())
    throw QuiverError("vertex " + vertices_[v] + " receives no arrows");
  return incoming_[v][0];
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertices_ != other.vertices_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    const Arrow& b = other.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.range != b.range) return false;
  }
  return true;
}

QuiverPtr build_quiver(std::vector<VertexId> vertices,
                       std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows) {
  return std::make_shared<Quiver>(std::move(vertices), std::move(arrows));
}

QuiverPtr inverse_quiver(const Quiver& E) {
  std::vector<VertexId> verts;
  verts.reserve(E.num_vertices());
  for (uint32_t v = 0; v < E.num_vertices(); ++v) verts.push_back(E.vertex_name(v));
  std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows;
  for (uint32_t a = 0; a < E.num_arrows(); ++a)
    arrows.emplace_back(E.arrow_name(a), E.vertex_name(E.range(a)),
                        E.vertex_name(E.source(a)));
  return build_quiver(std::move(verts), std::move(arrows));
}

std::vector<uint32_t> receiving_vertices(const Quiver& E) {
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < E.num_vertices(); ++v)
    if (E.is_receiving(v)) out.push_back(v);
  return out;
}

bool check_complete_hom(const Quiver& E, const Quiver& F, const GraphHom& f,
                        std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.vertex_map.size() != E.num_vertices() || f.arrow_map.size() != E.num_arrows())
    return fail("map sizes do not match the domain");
  for (uint32_t v : f.vertex_map)
    if (v >= F.num_vertices()) return fail("vertex image out of range");
  for (uint32_t a : f.arrow_map)
    if (a >= F.num_arrows()) return fail("arrow image out of range");

  std::set<uint32_t> v_images(f.vertex_map.begin(), f.vertex_map.end());
  if (v_images.size() != E.num_vertices()) return fail("vertex map not injective");
  std::set<uint32_t> a_images(f.arrow_map.begin(), f.arrow_map.end());
  if (a_images.size() != E.num_arrows()) return fail("arrow map not injective");

  for (uint32_t a = 0; a < E.num_arrows(); ++a) {
    uint32_t fa = f.arrow_map[a];
    if (F.source(fa) != f.vertex_map[E.source(a)])
      return fail("arrow " + E.arrow_name(a) + " does not commute with source");
    if (F.range(fa) != f.vertex_map[E.range(a)])
      return fail("arrow " + E.arrow_name(a) + " does not commute with range");
  }

  for (uint32_t v = 0; v < E.num_vertices(); ++v) {
    if (!E.is_receiving(v)) continue;
    /* injective + same count = bijection between the incoming sets */
    const auto& target = F.incoming(f.vertex_map[v]);
    if (E.incoming(v).size() != target.size())
      return fail("incoming arrows at " + E.vertex_name(v) +
                  " do not biject with the image vertex");
  }
  return true;
}

QuiverPtr complete_subquiver_containing(const Quiver& E,
                                        const std::vector<VertexId>& seed) {
  std::set<uint32_t> seed_idx;
  for (const auto& name : seed) {
    auto v = E.vertex_index(name);
    if (!v) throw QuiverError("seed vertex not in quiver: " + name);
    seed_idx.insert(*v);
  }
  if (seed_idx.empty()) throw QuiverError("empty seed");

  /* Saturate exactly the seed vertices; sources of their incoming arrows
     come along as boundary. Declaration order of E is preserved so that
     distinguished arrows agree with the ambient quiver. */
  std::set<uint32_t> verts = seed_idx;
  std::vector<uint32_t> arrows;
  for (uint32_t a = 0; a < E.num_arrows(); ++a) {
    if (seed_idx.count(E.range(a))) {
      arrows.push_back(a);
      verts.insert(E.source(a));
    }
  }

  std::vector<VertexId> vnames;
  for (uint32_t v = 0; v < E.num_vertices(); ++v)
    if (verts.count(v)) vnames.push_back(E.vertex_name(v));
  std::vector<std::tuple<ArrowId, VertexId, VertexId>> atriples;
  for (uint32_t a : arrows)
    atriples.emplace_back(E.arrow_name(a), E.vertex_name(E.source(a)),
                          E.vertex_name(E.range(a)));
  return build_quiver(std::move(vnames), std::move(atriples));
}

GraphHom inclusion_hom(const Quiver& sub, const Quiver& E) {
  GraphHom f;
  for (uint32_t v = 0; v < sub.num_vertices(); ++v) {
    auto idx = E.vertex_index(sub.vertex_name(v));
    if (!idx) throw QuiverError("subquiver vertex missing in ambient quiver");
    f.vertex_map.push_back(*idx);
  }
  for (uint32_t a = 0; a < sub.num_arrows(); ++a) {
    auto idx = E.arrow_index(sub.arrow_name(a));
    if (!idx) throw QuiverError("subquiver arrow missing in ambient quiver");
    f.arrow_map.push_back(*idx);
  }
  return f;
}

QuiverPtr quiver_loop() {
  return build_quiver({"v"}, {{"e", "v", "v"}});
}

QuiverPtr quiver_rose(size_t n) {
  std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows;
  for (size_t i = 0; i < n; ++i) {
    ArrowId name = i < 26 ? std::string(1, char('a' + i))
                          : "a" + std::to_string(i + 1);
    arrows.emplace_back(std::move(name), "v", "v");
  }
  return build_quiver({"v"}, std::move(arrows));
}

QuiverPtr quiver_a2() {
  return build_quiver({"1", "2"}, {{"e", "1", "2"}});
}

} // namespace quivalg
