#pragma once

#include "quivalg/quiver.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quivalg {

/* An element of the free abelian monoid on vertices: vertex name ->
   multiplicity, zeros never stored. */
using MonoidElem = std::map<VertexId, uint64_t>;

MonoidElem monoid_zero();
MonoidElem monoid_vertex(const VertexId& v, uint64_t k = 1);
MonoidElem monoid_add(const MonoidElem& a, const MonoidElem& b);
/* Componentwise difference; nullopt if b does not embed in a. */
std::optional<MonoidElem> monoid_sub(const MonoidElem& a, const MonoidElem& b);
std::string monoid_to_string(const MonoidElem& a);

/* The defining relation instances (v, s(v)) = (v, multiset of sources of
   incoming arrows), one per receiving vertex. */
std::vector<std::pair<MonoidElem, MonoidElem>> relation_pairs(const Quiver& E);

struct RewriteStep {
  bool forward = true; // forward: replace one v by s(v); backward: reverse
  VertexId vertex;
};

/* One relation application at the given receiving vertex; nullopt when the
   step does not apply (missing v, missing s(v), or v not receiving). */
std::optional<MonoidElem> basic_transformation(const Quiver& E, const MonoidElem& x,
                                               const RewriteStep& step);

/* Replays a certificate; throws ContextViolation if some step fails. */
MonoidElem replay_certificate(const Quiver& E, MonoidElem x,
                              const std::vector<RewriteStep>& cert);

struct EquivalenceResult {
  bool equivalent = false;
  bool exhausted = false; // search space fully explored within depth
  std::vector<RewriteStep> certificate; // x -> y when equivalent
};

/* Word problem for the quiver monoid, decided by bidirectional breadth-first
   search over relation applications; certificate length <= max_depth. A
   negative verdict with exhausted = false only means "not within depth". */
EquivalenceResult equivalent(const Quiver& E, const MonoidElem& x,
                             const MonoidElem& y, size_t max_depth);

struct RefinementResult {
  bool found = false;
  /* z[i][j] with x_i ~ z_i0 + z_i1 and y_j ~ z_0j + z_1j. */
  MonoidElem z[2][2];
};

/* Searches for a 2x2 refinement of x1 + x2 ~ y1 + y2 by enumerating
   decompositions of representatives within the BFS balls of radius depth. */
RefinementResult refinement_search(const Quiver& E, const MonoidElem& x1,
                                   const MonoidElem& x2, const MonoidElem& y1,
                                   const MonoidElem& y2, size_t depth);

/* Access to a column-finite quiver too big to materialize: incoming(v)
   returns the full list of (arrow name, source vertex) into v, or nullopt
   when that list is infinite (not column-finite). */
struct ColumnFiniteHandle {
  std::function<std::optional<std::vector<std::pair<ArrowId, VertexId>>>(const VertexId&)>
      incoming;
};

ColumnFiniteHandle handle_of_quiver(QuiverPtr E);

/* Decides x ~ y inside the direct limit: grows a finite complete window
   around supp(x) and supp(y) by max_depth saturation rounds, then runs the
   finite decision procedure in the window. Throws NonColumnFinite when a
   vertex reports infinitely many incoming arrows. */
EquivalenceResult equivalent_in_limit(const ColumnFiniteHandle& E, const MonoidElem& x,
                                      const MonoidElem& y, size_t max_depth);

} // namespace quivalg
