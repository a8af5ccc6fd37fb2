#include "quivalg/series.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>

namespace quivalg {

namespace {

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* op) {
  if (a.get() == b.get()) return;
  if (a && b && *a == *b) return;
  throw ContextViolation(std::string(op) + ": elements over different quivers");
}

} // namespace

TruncSeries::TruncSeries(QuiverPtr E, int trunc_order)
    : E_(std::move(E)), trunc_order_(trunc_order), terms_(PathOrder{E_.get()}) {
  if (trunc_order_ < -1)
    throw ContextViolation("truncation order below -1");
}

Scalar TruncSeries::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? scalar_zero() : it->second;
}

void TruncSeries::add_term(const Path& p, const Scalar& c) {
  if (scalar_is_zero(c)) return;
  if (trunc_order_ < 0 || p.length() > static_cast<size_t>(trunc_order_)) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }
}

TruncSeries trunc_of_poly(const PolyElement& x, int order) {
  TruncSeries out(x.quiver(), order);
  for (const auto& [p, c] : x.terms()) out.add_term(p, c);
  return out;
}

TruncSeries ts_zero(QuiverPtr E, int order) { return TruncSeries(std::move(E), order); }

TruncSeries ts_one(QuiverPtr E, int order) {
  return trunc_of_poly(poly_one(E), order);
}

TruncSeries ts_add(const TruncSeries& x, const TruncSeries& y) {
  require_same_quiver(x.quiver(), y.quiver(), "ts_add");
  TruncSeries out(x.quiver(), std::min(x.trunc_order(), y.trunc_order()));
  for (const auto& [p, c] : x.terms()) out.add_term(p, c);
  for (const auto& [p, c] : y.terms()) out.add_term(p, c);
  return out;
}

TruncSeries ts_sub(const TruncSeries& x, const TruncSeries& y) {
  return ts_add(x, ts_neg(y));
}

TruncSeries ts_neg(const TruncSeries& x) {
  TruncSeries out(x.quiver(), x.trunc_order());
  for (const auto& [p, c] : x.terms()) out.add_term(p, -c);
  return out;
}

TruncSeries ts_scale(const Scalar& c, const TruncSeries& x) {
  TruncSeries out(x.quiver(), x.trunc_order());
  if (scalar_is_zero(c)) return out;
  for (const auto& [p, coeff] : x.terms()) out.add_term(p, c * coeff);
  return out;
}

TruncSeries ts_mul(const TruncSeries& x, const TruncSeries& y) {
  require_same_quiver(x.quiver(), y.quiver(), "ts_mul");
  const Quiver& E = *x.quiver();
  TruncSeries out(x.quiver(), std::min(x.trunc_order(), y.trunc_order()));
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) {
      if (out.trunc_order() >= 0 &&
          p.length() + q.length() > static_cast<size_t>(out.trunc_order()))
        continue;
      auto pq = path_concat(E, p, q);
      if (pq) out.add_term(*pq, cp * cq);
    }
  return out;
}

TruncSeries ts_retrunc(const TruncSeries& x, int order) {
  if (order > x.trunc_order())
    throw ContextViolation("ts_retrunc cannot raise the reliability order");
  TruncSeries out(x.quiver(), order);
  for (const auto& [p, c] : x.terms()) out.add_term(p, c);
  return out;
}

VertexVector ts_augmentation(const TruncSeries& x) {
  VertexVector out(x.quiver());
  if (x.trunc_order() < 0)
    throw ContextViolation("augmentation of an order -1 truncation is unknown");
  for (const auto& [p, c] : x.terms()) {
    if (!p.trivial()) break;
    out.set(p.base_vertex, c);
  }
  return out;
}

TruncSeries ts_invert(const TruncSeries& x) {
  VertexVector e0 = ts_augmentation(x);
  if (!vv_invertible(e0))
    throw NotInvertible("series augmentation not invertible in K^d");
  VertexVector e0inv = vv_invert(e0);
  int N = x.trunc_order();
  TruncSeries einv = trunc_of_poly(poly_from_vv(e0inv), N);
  /* x = eps(x) - D with o(D) >= 1; inverse = eps^-1 sum_k (D eps^-1)^k */
  TruncSeries D = ts_sub(trunc_of_poly(poly_from_vv(e0), N), x);
  TruncSeries f = ts_mul(D, einv);
  TruncSeries geom = ts_one(x.quiver(), N);
  TruncSeries fk = f;
  for (int k = 1; k <= N; ++k) {
    geom = ts_add(geom, fk);
    if (k < N) fk = ts_mul(fk, f);
  }
  return ts_mul(einv, geom);
}

bool ts_eq(const TruncSeries& x, const TruncSeries& y) {
  require_same_quiver(x.quiver(), y.quiver(), "ts_eq");
  int common = std::min(x.trunc_order(), y.trunc_order());
  TruncSeries a = ts_retrunc(x, common);
  TruncSeries b = ts_retrunc(y, common);
  if (a.terms().size() != b.terms().size()) return false;
  auto it = a.terms().begin();
  auto jt = b.terms().begin();
  for (; it != a.terms().end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

TruncSeries ts_delta(const TruncSeries& x, uint32_t arrow) {
  const Quiver& E = *x.quiver();
  TruncSeries out(x.quiver(), x.trunc_order() < 0 ? -1 : x.trunc_order() - 1);
  for (const auto& [p, c] : x.terms()) {
    if (p.trivial() || p.arrows.back() != arrow) continue;
    Path head{p.base_vertex, {p.arrows.begin(), p.arrows.end() - 1}};
    if (head.arrows.empty()) head = trivial_path(E, E.source(arrow));
    out.add_term(head, c);
  }
  return out;
}

TruncSeries ts_delta_tilde(const TruncSeries& x, uint32_t arrow) {
  const Quiver& E = *x.quiver();
  TruncSeries out(x.quiver(), x.trunc_order() < 0 ? -1 : x.trunc_order() - 1);
  for (const auto& [p, c] : x.terms()) {
    if (p.trivial() || p.arrows.front() != arrow) continue;
    Path tail{E.range(arrow), {p.arrows.begin() + 1, p.arrows.end()}};
    out.add_term(tail, c);
  }
  return out;
}

VertexVector ts_tau(const TruncSeries& x, uint32_t arrow) {
  return vv_tau(ts_augmentation(x), arrow);
}

std::string ts_to_string(const TruncSeries& x) {
  PolyElement p(x.quiver());
  for (const auto& [path, c] : x.terms()) p.add_term(path, c);
  std::string body = poly_to_string(p);
  std::string tail = " + O(len>" + std::to_string(x.trunc_order()) + ")";
  if (body == "0") return "0" + tail;
  return body + tail;
}

SeriesMatrix trunc_of_poly_matrix(const PolyMatrix& M, int order) {
  return mat_map(M, [order](const PolyElement& x) { return trunc_of_poly(x, order); });
}

SeriesMatrix ts_matrix_identity(QuiverPtr E, size_t n, int order) {
  SeriesMatrix out(n, n, ts_zero(E, order));
  for (size_t i = 0; i < n; ++i) out.at(i, i) = ts_one(E, order);
  return out;
}

SeriesMatrix ts_matrix_invert(const SeriesMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw NotInvertible("ts_matrix_invert needs a nonempty square matrix");
  const QuiverPtr& E = M.at(0, 0).quiver();
  size_t n = M.rows();
  int N = M.at(0, 0).trunc_order();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) N = std::min(N, M.at(i, j).trunc_order());

  KdMatrix e0 = mat_map(M, [](const TruncSeries& x) { return ts_augmentation(x); });
  auto e0inv = kd_invert(e0);
  if (!e0inv) throw NotInvertible("matrix augmentation not invertible in M_n(K^d)");

  SeriesMatrix Einv = trunc_of_poly_matrix(embed_kd(*e0inv), N);
  SeriesMatrix D = mat_sub(trunc_of_poly_matrix(embed_kd(e0), N),
                           mat_map(M, [N](const TruncSeries& x) { return ts_retrunc(x, N); }));
  SeriesMatrix F = mat_mul(D, Einv);
  SeriesMatrix geom = ts_matrix_identity(E, n, N);
  SeriesMatrix Fk = F;
  for (int k = 1; k <= N; ++k) {
    geom = mat_add(geom, Fk);
    if (k < N) Fk = mat_mul(Fk, F);
  }
  return mat_mul(Einv, geom);
}

} // namespace quivalg
