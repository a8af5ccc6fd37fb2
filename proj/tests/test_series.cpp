#include <doctest.h>

#include "quivalg/series.hpp"

#include "oracles.hpp"

#include <random>

using namespace quivalg;

namespace {

PolyElement arr(QuiverPtr E, const char* name) {
  return poly_arrow(E, *E->arrow_index(name));
}

/* Random series with invertible augmentation: recenter the degree-zero part
   at nonzero scalars, vertex by vertex. */
TruncSeries random_invertible(QuiverPtr E, std::mt19937_64& rng, int order) {
  PolyElement p = oracle::random_poly(E, rng, 3, 4);
  p = p - poly_from_vv(augmentation(p));
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    p.add_term(trivial_path(*E, v), oracle::random_scalar(rng, true));
  return trunc_of_poly(p, order);
}

} // namespace

TEST_CASE("trunc_of_poly drops long terms") {
  QuiverPtr rose = quiver_rose(2);
  PolyElement a = arr(rose, "a");
  TruncSeries t = trunc_of_poly(poly_one(rose) + a * a * a, 2);
  CHECK(ts_eq(t, ts_one(rose, 2)));

  CHECK(trunc_of_poly(poly_zero(rose), 5).is_zero());

  QuiverPtr a2 = quiver_a2();
  PolyElement x = poly_vertex(a2, 0) + arr(a2, "e");
  TruncSeries kept = trunc_of_poly(x, 1);
  CHECK(kept.terms().size() == 2);
  CHECK(kept.coefficient(trivial_path(*a2, 0)) == 1);
  CHECK(kept.coefficient(arrow_path(*a2, 0)) == 1);
}

TEST_CASE("ts_mul truncates the product") {
  QuiverPtr loop = quiver_loop();
  PolyElement one = poly_one(loop), e = arr(loop, "e");

  TruncSeries prod = ts_mul(trunc_of_poly(one + e, 2), trunc_of_poly(one - e, 2));
  CHECK(ts_eq(prod, trunc_of_poly(one - e * e, 2)));

  std::mt19937_64 rng(7201);
  TruncSeries x = random_invertible(loop, rng, 4);
  CHECK(ts_eq(ts_mul(x, ts_one(loop, 4)), x));

  TruncSeries ee = ts_mul(trunc_of_poly(e, 1), trunc_of_poly(e, 1));
  CHECK(ee.is_zero());
}

TEST_CASE("ts_invert computes the geometric series") {
  QuiverPtr loop = quiver_loop();
  PolyElement one = poly_one(loop), e = arr(loop, "e");

  TruncSeries inv = ts_invert(trunc_of_poly(one - e, 3));
  CHECK(ts_eq(inv, trunc_of_poly(one + e + e * e + e * e * e, 3)));
  CHECK(ts_to_string(inv) == "p_v + e + e^2 + e^3 + O(len>3)");

  CHECK(ts_eq(ts_invert(ts_one(loop, 5)), ts_one(loop, 5)));

  QuiverPtr rose = quiver_rose(2);
  PolyElement a = arr(rose, "a"), b = arr(rose, "b"), r1 = poly_one(rose);
  TruncSeries inv2 = ts_invert(trunc_of_poly(r1 - a - b, 2));
  PolyElement expect = r1 + a + b + a * a + a * b + b * a + b * b;
  CHECK(ts_eq(inv2, trunc_of_poly(expect, 2)));
}

TEST_CASE("ts_invert needs an invertible augmentation") {
  QuiverPtr a2 = quiver_a2();
  TruncSeries only_p1 = trunc_of_poly(poly_vertex(a2, 0), 3);
  CHECK_THROWS_AS(ts_invert(only_p1), NotInvertible);
}

TEST_CASE("ts_invert is a two-sided inverse on random input") {
  std::mt19937_64 rng(7202);
  for (QuiverPtr E : {quiver_loop(), quiver_rose(2), quiver_a2()}) {
    for (int round = 0; round < 25; ++round) {
      TruncSeries x = random_invertible(E, rng, 5);
      TruncSeries y = ts_invert(x);
      CHECK(ts_eq(ts_mul(x, y), ts_one(E, 5)));
      CHECK(ts_eq(ts_mul(y, x), ts_one(E, 5)));
    }
  }
}

TEST_CASE("truncation commutes with multiplication") {
  std::mt19937_64 rng(7203);
  QuiverPtr rose = quiver_rose(2);
  for (int round = 0; round < 40; ++round) {
    PolyElement x = oracle::random_poly(rose, rng, 3, 4);
    PolyElement y = oracle::random_poly(rose, rng, 3, 4);
    TruncSeries whole = trunc_of_poly(x * y, 4);
    TruncSeries split = ts_mul(trunc_of_poly(x, 4), trunc_of_poly(y, 4));
    CHECK(ts_eq(whole, split));
  }
}

TEST_CASE("series arithmetic matches the word oracle") {
  std::mt19937_64 rng(7204);
  QuiverPtr rose = quiver_rose(2);
  for (int round = 0; round < 25; ++round) {
    PolyElement x = oracle::random_poly(rose, rng, 3, 4);
    PolyElement y = oracle::random_poly(rose, rng, 3, 4);
    oracle::WordSeries wx = oracle::ws_of_poly(x);
    oracle::WordSeries wy = oracle::ws_of_poly(y);

    CHECK(oracle::ws_of_ts(ts_mul(trunc_of_poly(x, 4), trunc_of_poly(y, 4))) ==
          oracle::ws_mul(wx, wy, 4));
    CHECK(oracle::ws_of_ts(ts_add(trunc_of_poly(x, 4), trunc_of_poly(y, 4))) ==
          oracle::ws_truncate(oracle::ws_add(wx, wy), 4));
  }
}

TEST_CASE("series inversion matches the word oracle") {
  std::mt19937_64 rng(7205);
  QuiverPtr rose = quiver_rose(2);
  for (int round = 0; round < 20; ++round) {
    TruncSeries x = random_invertible(rose, rng, 5);
    oracle::WordSeries wx = oracle::ws_of_ts(x);
    CHECK(oracle::ws_of_ts(ts_invert(x)) == oracle::ws_invert(wx, 5));
  }
}

TEST_CASE("series transductions consume one order") {
  QuiverPtr loop = quiver_loop();
  uint32_t ie = *loop->arrow_index("e");
  PolyElement one = poly_one(loop), e = arr(loop, "e");

  TruncSeries geo = ts_invert(trunc_of_poly(one - e, 4));
  TruncSeries d = ts_delta(geo, ie);
  CHECK(d.trunc_order() == 3);
  CHECK(ts_eq(d, trunc_of_poly(one + e + e * e + e * e * e, 3)));

  std::mt19937_64 rng(7206);
  QuiverPtr rose = quiver_rose(2);
  for (int round = 0; round < 20; ++round) {
    PolyElement x = oracle::random_poly(rose, rng, 3, 4);
    TruncSeries t = trunc_of_poly(x, 4);
    for (uint32_t a = 0; a < rose->num_arrows(); ++a) {
      CHECK(oracle::ws_of_ts(ts_delta(t, a)) ==
            oracle::ws_truncate(oracle::ws_delta(oracle::ws_of_poly(x), a), 3));
      CHECK(oracle::ws_of_ts(ts_delta_tilde(t, a)) ==
            oracle::ws_truncate(oracle::ws_delta_tilde(oracle::ws_of_poly(x), a), 3));
    }
  }
}

TEST_CASE("ts_matrix_invert inverts unitriangular and diagonal shapes") {
  QuiverPtr loop = quiver_loop();
  PolyElement e = arr(loop, "e");

  SeriesMatrix m = ts_matrix_identity(loop, 2, 4);
  m.at(0, 1) = trunc_of_poly(e, 4);
  SeriesMatrix inv = ts_matrix_invert(m);
  CHECK(ts_eq(inv.at(0, 0), ts_one(loop, 4)));
  CHECK(ts_eq(inv.at(0, 1), trunc_of_poly(poly_neg(e), 4)));
  CHECK(ts_eq(inv.at(1, 0), ts_zero(loop, 4)));
  CHECK(ts_eq(inv.at(1, 1), ts_one(loop, 4)));

  SeriesMatrix id = ts_matrix_identity(loop, 3, 4);
  SeriesMatrix idinv = ts_matrix_invert(id);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(ts_eq(idinv.at(i, j), id.at(i, j)));

  QuiverPtr rose = quiver_rose(2);
  PolyElement a = arr(rose, "a"), one = poly_one(rose);
  SeriesMatrix d = ts_matrix_identity(rose, 2, 2);
  d.at(0, 0) = trunc_of_poly(one - a, 2);
  SeriesMatrix dinv = ts_matrix_invert(d);
  CHECK(ts_eq(dinv.at(0, 0), trunc_of_poly(one + a + a * a, 2)));
  CHECK(ts_eq(dinv.at(1, 1), ts_one(rose, 2)));
}

TEST_CASE("ts_matrix_invert reduces to ts_invert at size one") {
  std::mt19937_64 rng(7207);
  QuiverPtr rose = quiver_rose(2);
  for (int round = 0; round < 20; ++round) {
    TruncSeries x = random_invertible(rose, rng, 4);
    SeriesMatrix m(1, 1, x);
    CHECK(ts_eq(ts_matrix_invert(m).at(0, 0), ts_invert(x)));
  }
}

TEST_CASE("ts_matrix_invert is two-sided on random matrices") {
  std::mt19937_64 rng(7208);
  QuiverPtr loop = quiver_loop();
  for (int round = 0; round < 15; ++round) {
    SeriesMatrix m = ts_matrix_identity(loop, 2, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        m.at(i, j) = ts_add(m.at(i, j),
                            trunc_of_poly(oracle::random_poly(loop, rng, 2, 2) *
                                              arr(loop, "e"),
                                          4));
    SeriesMatrix inv = ts_matrix_invert(m);
    SeriesMatrix left = mat_mul(inv, m);
    SeriesMatrix right = mat_mul(m, inv);
    SeriesMatrix id = ts_matrix_identity(loop, 2, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        CHECK(ts_eq(left.at(i, j), id.at(i, j)));
        CHECK(ts_eq(right.at(i, j), id.at(i, j)));
      }
  }
}
