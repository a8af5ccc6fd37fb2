#include <doctest.h>

#include "quivalg/regalg.hpp"

#include "oracles.hpp"

#include <random>

using namespace quivalg;

namespace {

PolyElement arr(QuiverPtr E, const char* name) {
  return poly_arrow(E, *E->arrow_index(name));
}

RatRep loop_geo(QuiverPtr loop) {
  return rr_invert(rr_from_poly(poly_one(loop) - arr(loop, "e")));
}

bool same_form(const SElement& x, const SElement& y) {
  return s_sub(x, y).is_zero();
}

} // namespace

TEST_CASE("an arrow annihilates onto its source idempotent") {
  QuiverPtr loop = quiver_loop();
  uint32_t ie = *loop->arrow_index("e");
  SElement prod = s_mul(s_from_poly(arr(loop, "e")), s_bar_arrow(loop, ie));
  CHECK(same_form(prod, s_one(loop)));
}

TEST_CASE("coefficients commute past bars by the transduction rule") {
  QuiverPtr loop = quiver_loop();
  uint32_t ie = *loop->arrow_index("e");
  RatRep geo = loop_geo(loop);

  SElement lhs = s_mul(s_from_rat(geo), s_bar_arrow(loop, ie));
  SElement rhs = s_add(s_bar_arrow(loop, ie), s_from_rat(geo));
  CHECK(same_form(lhs, rhs));

  SElement already = s_mul(s_bar_arrow(loop, ie), s_from_rat(geo));
  REQUIRE(already.terms().size() == 1);
  const auto& [gamma, coeff] = *already.terms().begin();
  CHECK(gamma == arrow_path(*loop, ie));
  CHECK(rr_equals(coeff, geo));
}

TEST_CASE("the commutation rule holds for random rationals") {
  std::mt19937_64 rng(7501);
  for (QuiverPtr E : {quiver_loop(), quiver_a2(), quiver_rose(2)}) {
    for (int round = 0; round < 12; ++round) {
      RatRep r = oracle::random_rat(E, rng, 2);
      for (uint32_t e = 0; e < E->num_arrows(); ++e) {
        SElement lhs = s_mul(s_from_rat(r), s_bar_arrow(E, e));
        SElement rhs = s_add(
            s_mul(s_bar_arrow(E, e),
                  s_from_rat(rr_from_poly(poly_from_vv(rr_tau(r, e))))),
            s_from_rat(rr_delta(r, e)));
        CHECK(same_form(lhs, rhs));
      }
    }
  }
}

TEST_CASE("s_mul is associative on capped random elements") {
  std::mt19937_64 rng(7502);
  for (QuiverPtr E : {quiver_loop(), quiver_a2()}) {
    for (int round = 0; round < 8; ++round) {
      SElement x = oracle::random_s(E, rng, 2, 2, 1);
      SElement y = oracle::random_s(E, rng, 2, 2, 1);
      SElement z = oracle::random_s(E, rng, 2, 2, 1);
      CHECK(same_form(s_mul(s_mul(x, y), z), s_mul(x, s_mul(y, z))));
      CHECK(same_form(s_mul(x, s_add(y, z)), s_add(s_mul(x, y), s_mul(x, z))));
    }
  }
}

TEST_CASE("q_idempotent builds the vertex defect") {
  QuiverPtr loop = quiver_loop();
  SElement q = q_idempotent(loop, 0);
  CHECK(q.terms().size() == 2);
  CHECK(same_form(s_mul(q, q), q));

  QuiverPtr a2 = quiver_a2();
  uint32_t v2 = *a2->vertex_index("2");
  SElement q2 = q_idempotent(a2, v2);
  SElement expect = s_sub(s_from_poly(poly_vertex(a2, v2)),
                          s_mul(s_bar_arrow(a2, 0), s_from_poly(arr(a2, "e"))));
  CHECK(same_form(q2, expect));
  CHECK(same_form(s_mul(q2, q2), q2));

  CHECK_THROWS_AS(q_idempotent(a2, *a2->vertex_index("1")), QuiverError);
}

TEST_CASE("rationals collapse onto scalar multiples of q") {
  QuiverPtr loop = quiver_loop();
  SElement q = q_idempotent(loop, 0);

  CHECK(s_mul(s_from_rat(rr_from_poly(arr(loop, "e"))), q).is_zero());
  CHECK(same_form(r_times_q(rr_one(loop), 0), q));

  RatRep two_plus_e =
      rr_add(rr_scale(Scalar(2), rr_one(loop)), rr_from_poly(arr(loop, "e")));
  CHECK(same_form(s_mul(s_from_rat(two_plus_e), q), s_scale(Scalar(2), q)));
  CHECK(same_form(r_times_q(two_plus_e, 0), s_scale(Scalar(2), q)));

  QuiverPtr a2 = quiver_a2();
  CHECK_THROWS_AS(r_times_q(rr_one(a2), *a2->vertex_index("1")), QuiverError);
}

TEST_CASE("r_times_q matches the product for random rationals") {
  std::mt19937_64 rng(7503);
  for (QuiverPtr E : {quiver_loop(), quiver_a2()}) {
    std::vector<uint32_t> recv = receiving_vertices(*E);
    for (int round = 0; round < 12; ++round) {
      RatRep r = oracle::random_rat(E, rng, 2);
      for (uint32_t v : recv)
        CHECK(same_form(s_mul(s_from_rat(r), q_idempotent(E, v)),
                        r_times_q(r, v)));
    }
  }
}

TEST_CASE("frontier_expand pushes terms to the requested bar depth") {
  QuiverPtr loop = quiver_loop();
  uint32_t ie = *loop->arrow_index("e");

  SElement expanded = frontier_expand(s_one(loop), 1);
  SElement expect(loop);
  expect.add_term(arrow_path(*loop, ie), rr_from_poly(arr(loop, "e")));
  CHECK(same_form(expanded, expect));

  std::mt19937_64 rng(7504);
  SElement x = oracle::random_s(loop, rng, 2, 2, 1);
  CHECK(same_form(frontier_expand(x, 0), x));

  QuiverPtr a2 = quiver_a2();
  SElement p1 = s_from_poly(poly_vertex(a2, *a2->vertex_index("1")));
  CHECK(same_form(frontier_expand(p1, 5), p1));
}

TEST_CASE("frontier_expand is idempotent and monotone") {
  std::mt19937_64 rng(7505);
  for (QuiverPtr E : {quiver_loop(), quiver_a2()}) {
    for (int round = 0; round < 8; ++round) {
      SElement x = oracle::random_s(E, rng, 2, 2, 1);
      SElement once = frontier_expand(x, 2);
      CHECK(same_form(frontier_expand(once, 2), once));
      CHECK(same_form(frontier_expand(once, 3), frontier_expand(x, 3)));
    }
  }
}

TEST_CASE("q_equal decides equality modulo the defect ideal") {
  QuiverPtr loop = quiver_loop();
  QEqualResult r1 = q_equal(q_idempotent(loop, 0), s_zero(loop));
  CHECK(r1.equal);

  QuiverPtr a2 = quiver_a2();
  uint32_t v2 = *a2->vertex_index("2");
  SElement p2 = s_from_poly(poly_vertex(a2, v2));
  SElement barred = s_mul(s_bar_arrow(a2, 0), s_from_poly(arr(a2, "e")));
  QEqualResult r2 = q_equal(p2, barred, 1);
  CHECK(r2.equal);
  CHECK(r2.depth_used == 1);
  CHECK(q_equal(p2, barred).equal);

  CHECK_FALSE(q_equal(s_one(loop), s_zero(loop)).equal);
  CHECK_FALSE(q_equal(s_one(loop), s_zero(loop), 4).equal);
}

TEST_CASE("nonzero rationals stay nonzero in the quotient") {
  std::mt19937_64 rng(7506);
  QuiverPtr loop = quiver_loop();
  for (int round = 0; round < 20; ++round) {
    Scalar c = oracle::random_scalar(rng, true);
    SElement x = s_from_rat(rr_scale(c, rr_one(loop)));
    CHECK_FALSE(q_equal(x, s_zero(loop), 4).equal);
  }
}

TEST_CASE("q_equal is a right congruence") {
  std::mt19937_64 rng(7507);
  for (QuiverPtr E : {quiver_loop(), quiver_a2()}) {
    std::vector<uint32_t> recv = receiving_vertices(*E);
    for (int round = 0; round < 8; ++round) {
      SElement x = oracle::random_s(E, rng, 1, 2, 1);
      uint32_t v = recv[rng() % recv.size()];
      SElement noise = s_mul(q_idempotent(E, v),
                             s_from_rat(oracle::random_rat(E, rng, 1)));
      SElement y = s_add(x, noise);
      REQUIRE(q_equal(x, y, 3).equal);

      SElement w = oracle::random_s(E, rng, 1, 1, 1);
      CHECK(q_equal(s_mul(x, w), s_mul(y, w), 4).equal);
    }
  }
}

TEST_CASE("the bar algebra embeds modulo the defect ideal") {
  std::mt19937_64 rng(7508);
  for (QuiverPtr E : {quiver_loop(), quiver_a2()}) {
    for (int round = 0; round < 10; ++round) {
      LElement x = oracle::random_leavitt(E, rng, 2, 2);
      LElement y = oracle::random_leavitt(E, rng, 2, 2);
      SElement lhs = s_from_leavitt(l_mul(x, y));
      SElement rhs = s_mul(s_from_leavitt(x), s_from_leavitt(y));
      CHECK(q_equal(lhs, rhs).equal);
    }
  }
}

TEST_CASE("q_relation_suite verifies the corner structure") {
  QuiverPtr loop = quiver_loop();
  QRelationReport rep = q_relation_suite(loop, 100, 90210);
  CHECK(rep.samples == 100);
  CHECK(rep.ok());

  QuiverPtr bare = build_quiver({"x", "y"}, {});
  CHECK(q_relation_suite(bare, 100, 90210).ok());

  QuiverPtr a2 = quiver_a2();
  CHECK(q_relation_suite(a2, 100, 31337).ok());
}
