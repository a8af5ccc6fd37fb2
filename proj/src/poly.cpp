#include "quivalg/poly.hpp"

#include "quivalg/errors.hpp"
#include "quivalg/linalg.hpp"

#include <algorithm>

namespace quivalg {

namespace {

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* op) {
  if (a.get() == b.get()) return;
  if (a && b && *a == *b) return;
  throw ContextViolation(std::string(op) + ": elements over different quivers");
}

} // namespace

/* ---- VertexVector ---- */

VertexVector::VertexVector(QuiverPtr E)
    : E_(std::move(E)), coeff_(E_->num_vertices(), scalar_zero()) {}

bool VertexVector::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Scalar& c) { return scalar_is_zero(c); });
}

bool VertexVector::operator==(const VertexVector& other) const {
  require_same_quiver(E_, other.E_, "vv compare");
  return coeff_ == other.coeff_;
}

VertexVector vv_zero(QuiverPtr E) { return VertexVector(std::move(E)); }

VertexVector vv_one(QuiverPtr E) {
  VertexVector w(std::move(E));
  for (uint32_t v = 0; v < w.size(); ++v) w.set(v, scalar_one());
  return w;
}

VertexVector vv_unit(QuiverPtr E, uint32_t v) {
  VertexVector w(std::move(E));
  w.set(v, scalar_one());
  return w;
}

VertexVector vv_add(const VertexVector& a, const VertexVector& b) {
  require_same_quiver(a.quiver(), b.quiver(), "vv_add");
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, a.at(v) + b.at(v));
  return out;
}

VertexVector vv_sub(const VertexVector& a, const VertexVector& b) {
  require_same_quiver(a.quiver(), b.quiver(), "vv_sub");
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, a.at(v) - b.at(v));
  return out;
}

VertexVector vv_mul(const VertexVector& a, const VertexVector& b) {
  require_same_quiver(a.quiver(), b.quiver(), "vv_mul");
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, a.at(v) * b.at(v));
  return out;
}

VertexVector vv_neg(const VertexVector& a) {
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, -a.at(v));
  return out;
}

VertexVector vv_scale(const Scalar& c, const VertexVector& a) {
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, c * a.at(v));
  return out;
}

bool vv_invertible(const VertexVector& a) {
  for (uint32_t v = 0; v < a.size(); ++v)
    if (scalar_is_zero(a.at(v))) return false;
  return true;
}

VertexVector vv_invert(const VertexVector& a) {
  if (!vv_invertible(a))
    throw NotInvertible("augmentation vanishes at some vertex");
  VertexVector out(a.quiver());
  for (uint32_t v = 0; v < a.size(); ++v) out.set(v, 1 / a.at(v));
  return out;
}

VertexVector vv_tau(const VertexVector& a, uint32_t arrow) {
  const Quiver& E = *a.quiver();
  VertexVector out = a;
  uint32_t s = E.source(arrow), r = E.range(arrow);
  if (s != r) {
    Scalar tmp = out.at(s);
    out.set(s, out.at(r));
    out.set(r, tmp);
  }
  return out;
}

/* ---- PolyElement ---- */

PolyElement::PolyElement(QuiverPtr E)
    : E_(std::move(E)), terms_(PathOrder{E_.get()}) {}

Scalar PolyElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? scalar_zero() : it->second;
}

void PolyElement::add_term(const Path& p, const Scalar& c) {
  if (scalar_is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }
}

bool PolyElement::operator==(const PolyElement& other) const {
  require_same_quiver(E_, other.E_, "poly compare");
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

PolyElement poly_zero(QuiverPtr E) { return PolyElement(std::move(E)); }

PolyElement poly_one(QuiverPtr E) {
  PolyElement x(E);
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    x.add_term(trivial_path(*E, v), scalar_one());
  return x;
}

PolyElement poly_vertex(QuiverPtr E, uint32_t v) {
  PolyElement x(E);
  x.add_term(trivial_path(*E, v), scalar_one());
  return x;
}

PolyElement poly_arrow(QuiverPtr E, uint32_t a) {
  PolyElement x(E);
  x.add_term(arrow_path(*E, a), scalar_one());
  return x;
}

PolyElement poly_path(QuiverPtr E, const Path& p) {
  PolyElement x(std::move(E));
  x.add_term(p, scalar_one());
  return x;
}

PolyElement poly_scalar(QuiverPtr E, const Scalar& c) {
  PolyElement x(E);
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    x.add_term(trivial_path(*E, v), c);
  return x;
}

PolyElement poly_from_vv(const VertexVector& w) {
  PolyElement x(w.quiver());
  for (uint32_t v = 0; v < w.size(); ++v)
    x.add_term(trivial_path(*w.quiver(), v), w.at(v));
  return x;
}

PolyElement poly_add(const PolyElement& x, const PolyElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "poly_add");
  PolyElement out = x;
  for (const auto& [p, c] : y.terms()) out.add_term(p, c);
  return out;
}

PolyElement poly_sub(const PolyElement& x, const PolyElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "poly_sub");
  PolyElement out = x;
  for (const auto& [p, c] : y.terms()) out.add_term(p, -c);
  return out;
}

PolyElement poly_neg(const PolyElement& x) {
  PolyElement out(x.quiver());
  for (const auto& [p, c] : x.terms()) out.add_term(p, -c);
  return out;
}

PolyElement poly_scale(const Scalar& c, const PolyElement& x) {
  PolyElement out(x.quiver());
  if (scalar_is_zero(c)) return out;
  for (const auto& [p, coeff] : x.terms()) out.add_term(p, c * coeff);
  return out;
}

PolyElement poly_mul(const PolyElement& x, const PolyElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "poly_mul");
  const Quiver& E = *x.quiver();
  PolyElement out(x.quiver());
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) {
      auto pq = path_concat(E, p, q);
      if (pq) out.add_term(*pq, cp * cq);
    }
  return out;
}

VertexVector augmentation(const PolyElement& x) {
  VertexVector out(x.quiver());
  for (const auto& [p, c] : x.terms()) {
    if (!p.trivial()) break; // canonical order puts length 0 first
    out.set(p.base_vertex, c);
  }
  return out;
}

std::optional<size_t> order(const PolyElement& x) {
  if (x.is_zero()) return std::nullopt;
  return x.terms().begin()->first.length();
}

size_t max_path_length(const PolyElement& x) {
  if (x.is_zero()) return 0;
  return x.terms().rbegin()->first.length();
}

bool is_homogeneous(const PolyElement& x, size_t len) {
  for (const auto& [p, c] : x.terms())
    if (p.length() != len) return false;
  return true;
}

PolyElement delta(const PolyElement& x, uint32_t arrow) {
  const Quiver& E = *x.quiver();
  PolyElement out(x.quiver());
  for (const auto& [p, c] : x.terms()) {
    if (p.trivial() || p.arrows.back() != arrow) continue;
    Path head{p.base_vertex, {p.arrows.begin(), p.arrows.end() - 1}};
    if (head.arrows.empty()) head = trivial_path(E, E.source(arrow));
    out.add_term(head, c);
  }
  return out;
}

PolyElement delta_tilde(const PolyElement& x, uint32_t arrow) {
  const Quiver& E = *x.quiver();
  PolyElement out(x.quiver());
  for (const auto& [p, c] : x.terms()) {
    if (p.trivial() || p.arrows.front() != arrow) continue;
    Path tail{E.range(arrow), {p.arrows.begin() + 1, p.arrows.end()}};
    out.add_term(tail, c);
  }
  return out;
}

VertexVector tau(const PolyElement& x, uint32_t arrow) {
  return vv_tau(augmentation(x), arrow);
}

std::string poly_to_string(const PolyElement& x) {
  if (x.is_zero()) return "0";
  const Quiver& E = *x.quiver();
  std::string out;
  for (const auto& [p, c] : x.terms()) {
    Scalar a = c;
    if (out.empty()) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    if (a != 1)
      out += scalar_to_string(a) + "*" + path_to_string(E, p);
    else
      out += path_to_string(E, p);
  }
  return out;
}

/* ---- matrices ---- */

PolyMatrix poly_matrix_zero(QuiverPtr E, size_t rows, size_t cols) {
  return PolyMatrix(rows, cols, poly_zero(std::move(E)));
}

PolyMatrix poly_matrix_identity(QuiverPtr E, size_t n) {
  PolyMatrix out(n, n, poly_zero(E));
  for (size_t i = 0; i < n; ++i) out.at(i, i) = poly_one(E);
  return out;
}

KdMatrix kd_zero(QuiverPtr E, size_t rows, size_t cols) {
  return KdMatrix(rows, cols, vv_zero(std::move(E)));
}

KdMatrix kd_identity(QuiverPtr E, size_t n) {
  KdMatrix out(n, n, vv_zero(E));
  for (size_t i = 0; i < n; ++i) out.at(i, i) = vv_one(E);
  return out;
}

KdMatrix eps_matrix(const PolyMatrix& M) {
  return mat_map(M, [](const PolyElement& x) { return augmentation(x); });
}

PolyMatrix embed_kd(const KdMatrix& M) {
  return mat_map(M, [](const VertexVector& w) { return poly_from_vv(w); });
}

PolyMatrix delta_matrix(const PolyMatrix& M, uint32_t arrow) {
  return mat_map(M, [arrow](const PolyElement& x) { return delta(x, arrow); });
}

PolyMatrix delta_tilde_matrix(const PolyMatrix& M, uint32_t arrow) {
  return mat_map(M, [arrow](const PolyElement& x) { return delta_tilde(x, arrow); });
}

KdMatrix tau_matrix(const PolyMatrix& M, uint32_t arrow) {
  return mat_map(M, [arrow](const PolyElement& x) { return tau(x, arrow); });
}

size_t max_path_length(const PolyMatrix& M) {
  size_t len = 0;
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      len = std::max(len, max_path_length(M.at(i, j)));
  return len;
}

bool poly_matrix_is_zero(const PolyMatrix& M) {
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) return false;
  return true;
}

Matrix<Scalar> vertex_slice(const KdMatrix& M, uint32_t v) {
  Matrix<Scalar> out(M.rows(), M.cols(), scalar_zero());
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(i, j).at(v);
  return out;
}

void set_vertex_slice(KdMatrix& M, uint32_t v, const Matrix<Scalar>& S) {
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j) M.at(i, j).set(v, S.at(i, j));
}

std::optional<KdMatrix> kd_invert(const KdMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0) return std::nullopt;
  const QuiverPtr& E = M.at(0, 0).quiver();
  KdMatrix out = kd_zero(E, M.rows(), M.cols());
  for (uint32_t v = 0; v < E->num_vertices(); ++v) {
    auto inv = q_invert(vertex_slice(M, v));
    if (!inv) return std::nullopt;
    set_vertex_slice(out, v, *inv);
  }
  return out;
}

std::vector<size_t> projective_rank(const PolyMatrix& P) {
  if (P.rows() != P.cols() || P.rows() == 0)
    throw NotIdempotent("projective_rank needs a nonempty square matrix");
  PolyMatrix sq = mat_mul(P, P);
  if (!(sq == P)) throw NotIdempotent("matrix is not idempotent");
  KdMatrix e = eps_matrix(P);
  const QuiverPtr& E = P.at(0, 0).quiver();
  std::vector<size_t> ranks;
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    ranks.push_back(q_rank(vertex_slice(e, v)));
  return ranks;
}

} // namespace quivalg
