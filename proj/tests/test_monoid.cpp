#include <doctest.h>

#include "quivalg/leavitt.hpp"
#include "quivalg/monoid.hpp"

#include "oracles.hpp"

#include <random>
#include <string>

using namespace quivalg;

namespace {

uint64_t total_degree(const MonoidElem& x) {
  uint64_t sum = 0;
  for (const auto& [v, k] : x) sum += k;
  return sum;
}

MonoidElem sources_of_incoming(const Quiver& E, uint32_t v) {
  MonoidElem out;
  for (uint32_t a : E.incoming(v)) out[E.vertex_name(E.source(a))] += 1;
  return out;
}

} // namespace

TEST_CASE("relation_pairs lists one pair per receiving vertex") {
  QuiverPtr rose3 = quiver_rose(3);
  auto rels = relation_pairs(*rose3);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].first == monoid_vertex("v"));
  CHECK(rels[0].second == monoid_vertex("v", 3));

  QuiverPtr a2 = quiver_a2();
  auto rels2 = relation_pairs(*a2);
  REQUIRE(rels2.size() == 1);
  CHECK(rels2[0].first == monoid_vertex("2"));
  CHECK(rels2[0].second == monoid_vertex("1"));

  QuiverPtr bare = build_quiver({"x", "y"}, {});
  CHECK(relation_pairs(*bare).empty());
}

TEST_CASE("basic_transformation applies one relation instance") {
  QuiverPtr a2 = quiver_a2();
  auto step = basic_transformation(*a2, monoid_vertex("2"), {true, "2"});
  REQUIRE(step.has_value());
  CHECK(*step == monoid_vertex("1"));

  QuiverPtr rose = quiver_rose(2);
  auto doubled = basic_transformation(*rose, monoid_vertex("v"), {true, "v"});
  REQUIRE(doubled.has_value());
  CHECK(*doubled == monoid_vertex("v", 2));

  CHECK_FALSE(basic_transformation(*a2, monoid_vertex("2"), {true, "1"}).has_value());
  CHECK_FALSE(basic_transformation(*a2, monoid_zero(), {true, "2"}).has_value());
}

TEST_CASE("equivalent finds short relation chains") {
  QuiverPtr rose3 = quiver_rose(3);
  MonoidElem v = monoid_vertex("v");

  EquivalenceResult r = equivalent(*rose3, v, monoid_vertex("v", 3), 1);
  CHECK(r.equivalent);
  CHECK(replay_certificate(*rose3, v, r.certificate) == monoid_vertex("v", 3));

  EquivalenceResult zero = equivalent(*rose3, monoid_zero(), monoid_zero(), 2);
  CHECK(zero.equivalent);
  CHECK(zero.certificate.empty());

  EquivalenceResult no = equivalent(*rose3, v, monoid_vertex("v", 2), 8);
  CHECK_FALSE(no.equivalent);
}

TEST_CASE("total degree mod petal count less one is invariant") {
  QuiverPtr rose3 = quiver_rose(3);
  std::mt19937_64 rng(7601);
  MonoidElem x = monoid_vertex("v", 1 + rng() % 5);
  for (int round = 0; round < 30; ++round) {
    bool forward = rng() % 2 == 0;
    auto next = basic_transformation(*rose3, x, {forward, "v"});
    if (!next) continue;
    CHECK((total_degree(*next) % 2) == (total_degree(x) % 2));
    x = *next;
  }
}

TEST_CASE("equivalence is reflexive, symmetric, and composable") {
  std::mt19937_64 rng(7602);
  QuiverPtr a2 = quiver_a2();
  QuiverPtr rose2 = quiver_rose(2);
  for (QuiverPtr E : {a2, rose2}) {
    for (int round = 0; round < 15; ++round) {
      MonoidElem x;
      for (uint32_t v = 0; v < E->num_vertices(); ++v)
        if (rng() % 2) x[E->vertex_name(v)] = 1 + rng() % 3;

      CHECK(equivalent(*E, x, x, 2).equivalent);

      /* walk x a few random steps to get a guaranteed-equivalent y */
      MonoidElem y = x;
      std::vector<uint32_t> recv = receiving_vertices(*E);
      for (int s = 0; s < 3 && !recv.empty(); ++s) {
        RewriteStep step{rng() % 2 == 0, E->vertex_name(recv[rng() % recv.size()])};
        if (auto next = basic_transformation(*E, y, step)) y = *next;
      }
      EquivalenceResult forward = equivalent(*E, x, y, 6);
      EquivalenceResult backward = equivalent(*E, y, x, 6);
      REQUIRE(forward.equivalent);
      REQUIRE(backward.equivalent);
      CHECK(replay_certificate(*E, x, forward.certificate) == y);
      CHECK(replay_certificate(*E, y, backward.certificate) == x);
    }
  }
}

TEST_CASE("roses collapse degrees modulo petal count less one") {
  for (size_t n : {size_t(2), size_t(3), size_t(4)}) {
    QuiverPtr rose = quiver_rose(n);
    for (uint64_t k = 1; k <= 3; ++k) {
      MonoidElem target = monoid_vertex("v", k * (n - 1) + 1);
      EquivalenceResult r = equivalent(*rose, monoid_vertex("v"), target, 2 * k + 2);
      CHECK(r.equivalent);
      CHECK(replay_certificate(*rose, monoid_vertex("v"), r.certificate) == target);
    }
  }
}

TEST_CASE("single relation steps match the algebra witnesses") {
  std::mt19937_64 rng(7603);
  for (int round = 0; round < 10; ++round) {
    QuiverPtr E = oracle::random_quiver(rng, 3, 5);
    for (uint32_t v : receiving_vertices(*E)) {
      MonoidElem lhs = monoid_vertex(E->vertex_name(v));
      MonoidElem rhs = sources_of_incoming(*E, v);
      EquivalenceResult r = equivalent(*E, lhs, rhs, 1);
      REQUIRE(r.equivalent);
      REQUIRE(r.certificate.size() <= 1);

      WitnessPair w = witness_basic_transformation(E, v);
      CHECK(w.row.size() == total_degree(rhs));
      LElement sum = l_zero(E);
      for (size_t j = 0; j < w.row.size(); ++j)
        sum = sum + w.column[j] * w.row[j];
      CHECK(sum == l_vertex(E, v));
    }
  }
}

TEST_CASE("refinement_search fills the exchange square") {
  QuiverPtr rose2 = quiver_rose(2);
  MonoidElem v = monoid_vertex("v");
  RefinementResult diag = refinement_search(*rose2, v, v, v, v, 3);
  REQUIRE(diag.found);
  for (int i = 0; i < 2; ++i) {
    CHECK(equivalent(*rose2, monoid_add(diag.z[i][0], diag.z[i][1]), v, 6).equivalent);
    CHECK(equivalent(*rose2, monoid_add(diag.z[0][i], diag.z[1][i]), v, 6).equivalent);
  }

  QuiverPtr a2 = quiver_a2();
  MonoidElem one = monoid_vertex("1"), two = monoid_vertex("2");
  RefinementResult cross = refinement_search(*a2, one, two, two, one, 3);
  REQUIRE(cross.found);
  CHECK(equivalent(*a2, monoid_add(cross.z[0][0], cross.z[0][1]), one, 6).equivalent);
  CHECK(equivalent(*a2, monoid_add(cross.z[1][0], cross.z[1][1]), two, 6).equivalent);
  CHECK(equivalent(*a2, monoid_add(cross.z[0][0], cross.z[1][0]), two, 6).equivalent);
  CHECK(equivalent(*a2, monoid_add(cross.z[0][1], cross.z[1][1]), one, 6).equivalent);

  QuiverPtr rose3 = quiver_rose(3);
  CHECK_THROWS_AS(refinement_search(*rose3, monoid_vertex("v"), monoid_zero(),
                                    monoid_vertex("v", 2), monoid_zero(), 4),
                  NotEquivalent);
}

TEST_CASE("equivalent_in_limit works through a window handle") {
  /* infinite chain ... -> 2 -> 1 -> 0, one arrow into each vertex */
  ColumnFiniteHandle chain;
  chain.incoming = [](const VertexId& v)
      -> std::optional<std::vector<std::pair<ArrowId, VertexId>>> {
    uint64_t k = std::stoull(v);
    return std::vector<std::pair<ArrowId, VertexId>>{
        {"f" + std::to_string(k + 1), std::to_string(k + 1)}};
  };

  EquivalenceResult r =
      equivalent_in_limit(chain, monoid_vertex("0"), monoid_vertex("1"), 3);
  CHECK(r.equivalent);

  EquivalenceResult same =
      equivalent_in_limit(chain, monoid_vertex("5"), monoid_vertex("5"), 0);
  CHECK(same.equivalent);

  QuiverPtr rose3 = quiver_rose(3);
  ColumnFiniteHandle finite = handle_of_quiver(rose3);
  CHECK(equivalent_in_limit(finite, monoid_vertex("v"), monoid_vertex("v", 3), 3)
            .equivalent);
  CHECK_FALSE(
      equivalent_in_limit(finite, monoid_vertex("v"), monoid_vertex("v", 2), 6)
          .equivalent);

  ColumnFiniteHandle broken;
  broken.incoming = [](const VertexId&)
      -> std::optional<std::vector<std::pair<ArrowId, VertexId>>> {
    return std::nullopt;
  };
  CHECK_THROWS_AS(
      equivalent_in_limit(broken, monoid_vertex("x"), monoid_vertex("y"), 2),
      NonColumnFinite);
}

TEST_CASE("monoid element text forms") {
  CHECK(monoid_to_string(monoid_zero()) == "0");
  MonoidElem m = monoid_add(monoid_vertex("v", 2), monoid_vertex("w"));
  CHECK(monoid_to_string(m) == "2*v + w");
  CHECK_FALSE(monoid_sub(monoid_vertex("v"), monoid_vertex("w")).has_value());
  CHECK(*monoid_sub(m, monoid_vertex("v")) ==
        monoid_add(monoid_vertex("v"), monoid_vertex("w")));
}
