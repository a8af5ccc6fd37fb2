#include "quivalg/monoid.hpp"

#include <algorithm>
#include <set>

namespace quivalg {

namespace {

MonoidElem source_sum(const Quiver& E, uint32_t v) {
  MonoidElem s;
  for (uint32_t e : E.incoming(v)) s[E.vertex_name(E.source(e))] += 1;
  return s;
}

uint32_t require_vertex(const Quiver& E, const VertexId& name) {
  auto v = E.vertex_index(name);
  if (!v) throw QuiverError("unknown vertex: " + name);
  return *v;
}

} // namespace

MonoidElem monoid_zero() { return {}; }

MonoidElem monoid_vertex(const VertexId& v, uint64_t k) {
  MonoidElem out;
  if (k > 0) out[v] = k;
  return out;
}

MonoidElem monoid_add(const MonoidElem& a, const MonoidElem& b) {
  MonoidElem out = a;
  for (const auto& [v, k] : b) out[v] += k;
  return out;
}

std::optional<MonoidElem> monoid_sub(const MonoidElem& a, const MonoidElem& b) {
  MonoidElem out = a;
  for (const auto& [v, k] : b) {
    auto it = out.find(v);
    if (it == out.end() || it->second < k) return std::nullopt;
    it->second -= k;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

std::string monoid_to_string(const MonoidElem& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [v, k] : a) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += v;
  }
  return out;
}

std::vector<std::pair<MonoidElem, MonoidElem>> relation_pairs(const Quiver& E) {
  std::vector<std::pair<MonoidElem, MonoidElem>> out;
  for (uint32_t v : receiving_vertices(E))
    out.emplace_back(monoid_vertex(E.vertex_name(v)), source_sum(E, v));
  return out;
}

std::optional<MonoidElem> basic_transformation(const Quiver& E, const MonoidElem& x,
                                               const RewriteStep& step) {
  uint32_t v = require_vertex(E, step.vertex);
  if (!E.is_receiving(v)) return std::nullopt;
  MonoidElem lhs = monoid_vertex(step.vertex);
  MonoidElem rhs = source_sum(E, v);
  const MonoidElem& take = step.forward ? lhs : rhs;
  const MonoidElem& give = step.forward ? rhs : lhs;
  auto rem = monoid_sub(x, take);
  if (!rem) return std::nullopt;
  return monoid_add(*rem, give);
}

MonoidElem replay_certificate(const Quiver& E, MonoidElem x,
                              const std::vector<RewriteStep>& cert) {
  for (const auto& step : cert) {
    auto next = basic_transformation(E, x, step);
    if (!next)
      throw ContextViolation("certificate step does not apply at " + step.vertex);
    x = std::move(*next);
  }
  return x;
}

namespace {

struct SearchSide {
  std::map<MonoidElem, std::vector<RewriteStep>> visited;
  std::vector<MonoidElem> frontier;
  bool saturated = false;
};

std::vector<std::pair<RewriteStep, MonoidElem>> neighbors(const Quiver& E,
                                                          const MonoidElem& x) {
  std::vector<std::pair<RewriteStep, MonoidElem>> out;
  for (uint32_t v : receiving_vertices(E)) {
    for (bool forward : {true, false}) {
      RewriteStep step{forward, E.vertex_name(v)};
      auto next = basic_transformation(E, x, step);
      if (next) out.emplace_back(step, std::move(*next));
    }
  }
  return out;
}

void expand(const Quiver& E, SearchSide& side) {
  std::vector<MonoidElem> next;
  for (const auto& state : side.frontier) {
    const auto& path = side.visited.at(state);
    for (auto& [step, nb] : neighbors(E, state)) {
      if (side.visited.count(nb)) continue;
      auto np = path;
      np.push_back(step);
      side.visited.emplace(nb, std::move(np));
      next.push_back(std::move(nb));
    }
  }
  side.frontier = std::move(next);
  if (side.frontier.empty()) side.saturated = true;
}

std::vector<RewriteStep> flip_reverse(const std::vector<RewriteStep>& path) {
  std::vector<RewriteStep> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    out.push_back(RewriteStep{!it->forward, it->vertex});
  return out;
}

std::optional<std::vector<RewriteStep>> meet(const SearchSide& from_x,
                                             const SearchSide& from_y) {
  for (const auto& [state, path_x] : from_x.visited) {
    auto it = from_y.visited.find(state);
    if (it == from_y.visited.end()) continue;
    std::vector<RewriteStep> cert = path_x;
    auto back = flip_reverse(it->second);
    cert.insert(cert.end(), back.begin(), back.end());
    return cert;
  }
  return std::nullopt;
}

} // namespace

EquivalenceResult equivalent(const Quiver& E, const MonoidElem& x,
                             const MonoidElem& y, size_t max_depth) {
  SearchSide sx, sy;
  sx.visited.emplace(x, std::vector<RewriteStep>{});
  sx.frontier.push_back(x);
  sy.visited.emplace(y, std::vector<RewriteStep>{});
  sy.frontier.push_back(y);

  size_t depth = 0;
  for (;;) {
    if (auto cert = meet(sx, sy))
      return EquivalenceResult{true, false, std::move(*cert)};
    if (sx.saturated && sy.saturated)
      return EquivalenceResult{false, true, {}};
    if (depth >= max_depth)
      return EquivalenceResult{false, false, {}};
    SearchSide& side =
        sy.saturated || (!sx.saturated && sx.frontier.size() <= sy.frontier.size())
            ? sx
            : sy;
    expand(E, side);
    ++depth;
  }
}

RefinementResult refinement_search(const Quiver& E, const MonoidElem& x1,
                                   const MonoidElem& x2, const MonoidElem& y1,
                                   const MonoidElem& y2, size_t depth) {
  auto pre = equivalent(E, monoid_add(x1, x2), monoid_add(y1, y2), depth);
  if (!pre.equivalent)
    throw NotEquivalent("refinement_search: x1+x2 and y1+y2 not equivalent within depth");

  auto ball = [&](const MonoidElem& z) {
    std::set<MonoidElem> seen{z};
    std::vector<MonoidElem> frontier{z};
    for (size_t r = 0; r < depth && !frontier.empty(); ++r) {
      std::vector<MonoidElem> next;
      for (const auto& state : frontier)
        for (auto& [step, nb] : neighbors(E, state))
          if (seen.insert(nb).second) next.push_back(std::move(nb));
      frontier = std::move(next);
    }
    return std::vector<MonoidElem>(seen.begin(), seen.end());
  };

  auto bx1 = ball(x1), bx2 = ball(x2), by1 = ball(y1), by2 = ball(y2);

  std::map<MonoidElem, std::pair<MonoidElem, MonoidElem>> sums_y;
  for (const auto& a : by1)
    for (const auto& b : by2) sums_y.emplace(monoid_add(a, b), std::make_pair(a, b));

  for (const auto& a : bx1)
    for (const auto& b : bx2) {
      auto it = sums_y.find(monoid_add(a, b));
      if (it == sums_y.end()) continue;
      const auto& [c, dd] = it->second;
      /* Per-vertex transportation split of row sums (a, b) against column
         sums (c, dd). */
      RefinementResult out;
      out.found = true;
      MonoidElem z11, z12, z21, z22;
      std::set<VertexId> verts;
      for (const auto& [v, k] : a) verts.insert(v);
      for (const auto& [v, k] : b) verts.insert(v);
      auto get = [](const MonoidElem& m, const VertexId& v) -> uint64_t {
        auto jt = m.find(v);
        return jt == m.end() ? 0 : jt->second;
      };
      for (const auto& v : verts) {
        uint64_t av = get(a, v), cv = get(c, v), dv = get(dd, v);
        uint64_t t11 = std::min(av, cv);
        if (av - t11 > dv) t11 = av - dv;
        uint64_t t12 = av - t11;
        uint64_t t21 = cv - t11;
        uint64_t t22 = dv - t12;
        if (t11) z11[v] = t11;
        if (t12) z12[v] = t12;
        if (t21) z21[v] = t21;
        if (t22) z22[v] = t22;
      }
      out.z[0][0] = z11;
      out.z[0][1] = z12;
      out.z[1][0] = z21;
      out.z[1][1] = z22;
      return out;
    }
  return RefinementResult{};
}

ColumnFiniteHandle handle_of_quiver(QuiverPtr E) {
  ColumnFiniteHandle h;
  h.incoming = [E](const VertexId& name)
      -> std::optional<std::vector<std::pair<ArrowId, VertexId>>> {
    uint32_t v = require_vertex(*E, name);
    std::vector<std::pair<ArrowId, VertexId>> out;
    for (uint32_t e : E->incoming(v))
      out.emplace_back(E->arrow_name(e), E->vertex_name(E->source(e)));
    return out;
  };
  return h;
}

EquivalenceResult equivalent_in_limit(const ColumnFiniteHandle& E, const MonoidElem& x,
                                      const MonoidElem& y, size_t max_depth) {
  std::vector<VertexId> order;
  std::set<VertexId> known;
  auto note = [&](const VertexId& v) {
    if (known.insert(v).second) order.push_back(v);
  };
  for (const auto& [v, k] : x) note(v);
  for (const auto& [v, k] : y) note(v);

  std::map<VertexId, std::vector<std::pair<ArrowId, VertexId>>> fetched;
  for (size_t round = 0; round < max_depth; ++round) {
    std::vector<VertexId> todo;
    for (const auto& v : order)
      if (!fetched.count(v)) todo.push_back(v);
    if (todo.empty()) break;
    for (const auto& v : todo) {
      auto list = E.incoming(v);
      if (!list)
        throw NonColumnFinite("vertex " + v + " has infinitely many incoming arrows");
      for (const auto& [arrow, src] : *list) note(src);
      fetched.emplace(v, std::move(*list));
    }
  }

  std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows;
  for (const auto& v : order) {
    auto it = fetched.find(v);
    if (it == fetched.end()) continue; // boundary vertex, keeps no arrows
    for (const auto& [arrow, src] : it->second) arrows.emplace_back(arrow, src, v);
  }
  QuiverPtr window = build_quiver(order, arrows);
  return equivalent(*window, x, y, max_depth);
}

} // namespace quivalg
