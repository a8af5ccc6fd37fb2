#include "quivalg/ratseries.hpp"

#include "quivalg/errors.hpp"
#include "quivalg/linalg.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace quivalg {

namespace {

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* op) {
  if (a.get() == b.get()) return;
  if (a && b && *a == *b) return;
  throw ContextViolation(std::string(op) + ": elements over different quivers");
}

PolyMatrix row_concat_h(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows(), a.cols() + b.cols(), a.at(0, 0));
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

PolyMatrix col_concat_v(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() + b.rows(), a.cols(), a.at(0, 0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

/* [[a, top],[0, d]] with square diagonal blocks. */
PolyMatrix upper_block(const PolyMatrix& a, const PolyMatrix& top, const PolyMatrix& d,
                       const QuiverPtr& E) {
  PolyMatrix out = mat_block_diag(a, d, poly_zero(E));
  for (size_t i = 0; i < top.rows(); ++i)
    for (size_t j = 0; j < top.cols(); ++j) out.at(i, a.cols() + j) = top.at(i, j);
  return out;
}

size_t monomial_weight(const PolyMatrix& M) {
  size_t w = 0;
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      for (const auto& [p, c] : M.at(i, j).terms()) w += p.length();
  return w;
}

/* Unit-length automaton of a representation: states refine (core index,
   current vertex) plus one chain state per arrow occurrence; per-arrow
   scalar transition matrices; entry weights from b, exit weights from
   eps(A)^{-1} c. Length >= 1 coefficients of the series are iota T_{e1}
   ... T_{ek} phi; the length-0 part is the augmentation. */
struct LinearForm {
  size_t states = 0;
  std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> trans; // per arrow
  std::vector<std::pair<size_t, Scalar>> iota;
  std::vector<std::pair<size_t, Scalar>> phi;
};

LinearForm linearize(const RatRep& x) {
  const Quiver& E = *x.quiver();
  size_t d = E.num_vertices();
  size_t n = x.dim();

  KdMatrix e0 = eps_matrix(x.A());
  KdMatrix e0inv = *kd_invert(e0);
  PolyMatrix N = mat_mul(embed_kd(e0inv), mat_sub(embed_kd(e0), x.A()));
  PolyMatrix ctil = mat_mul(embed_kd(e0inv), x.c());

  LinearForm out;
  out.trans.assign(E.num_arrows(), {});
  out.states = n * d;
  auto core = [d](size_t i, uint32_t v) { return i * d + v; };
  auto fresh = [&out]() { return out.states++; };

  /* Chain from `from`, reading p, ending at `to`; weight on the first step. */
  auto chain = [&](size_t from, const Path& p, size_t to, const Scalar& w) {
    size_t cur = from;
    for (size_t k = 0; k < p.length(); ++k) {
      size_t nxt = k + 1 == p.length() ? to : fresh();
      out.trans[p.arrows[k]].emplace_back(cur, nxt, k == 0 ? w : scalar_one());
      cur = nxt;
    }
  };

  for (size_t i = 0; i < n; ++i)
    for (const auto& [p, w] : x.b().at(0, i).terms()) {
      if (p.trivial()) {
        out.iota.emplace_back(core(i, p.base_vertex), w);
      } else {
        size_t head = fresh();
        out.iota.emplace_back(head, w);
        chain(head, p, core(i, path_range(E, p)), scalar_one());
      }
    }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [p, w] : N.at(i, j).terms())
        chain(core(i, path_source(E, p)), p, core(j, path_range(E, p)), w);

  for (size_t j = 0; j < n; ++j)
    for (const auto& [p, w] : ctil.at(j, 0).terms()) {
      if (p.trivial()) {
        out.phi.emplace_back(core(j, p.base_vertex), w);
      } else {
        size_t tail = fresh();
        chain(core(j, path_source(E, p)), p, tail, w);
        out.phi.emplace_back(tail, scalar_one());
      }
    }
  return out;
}

std::vector<Scalar> apply_trans(const LinearForm& lf, const std::vector<Scalar>& row,
                                uint32_t arrow) {
  std::vector<Scalar> out(lf.states, scalar_zero());
  for (const auto& [i, j, w] : lf.trans[arrow]) out[j] += row[i] * w;
  return out;
}

} // namespace

RatRep::RatRep(PolyMatrix b, PolyMatrix A, PolyMatrix c)
    : b_(std::move(b)), A_(std::move(A)), c_(std::move(c)) {
  size_t n = A_.rows();
  if (n == 0 || A_.cols() != n || b_.rows() != 1 || b_.cols() != n ||
      c_.rows() != n || c_.cols() != 1)
    throw ContextViolation("rational representation has inconsistent shape");
  if (!kd_invert(eps_matrix(A_)))
    throw NotInvertible("representation core has singular augmentation");
}

const QuiverPtr& RatRep::quiver() const { return A_.at(0, 0).quiver(); }

RatRep rr_from_poly(const PolyElement& x) {
  const QuiverPtr& E = x.quiver();
  PolyMatrix b(1, 1, x);
  PolyMatrix A(1, 1, poly_one(E));
  PolyMatrix c(1, 1, poly_one(E));
  return RatRep(std::move(b), std::move(A), std::move(c));
}

RatRep rr_zero(QuiverPtr E) { return rr_from_poly(poly_zero(E)); }
RatRep rr_one(QuiverPtr E) { return rr_from_poly(poly_one(std::move(E))); }

RatRep rr_add(const RatRep& x, const RatRep& y) {
  require_same_quiver(x.quiver(), y.quiver(), "rr_add");
  const QuiverPtr& E = x.quiver();
  PolyElement z = poly_zero(E);
  return RatRep(row_concat_h(x.b(), y.b()),
                mat_block_diag(x.A(), y.A(), z),
                col_concat_v(x.c(), y.c()));
}

RatRep rr_neg(const RatRep& x) {
  return rr_scale(Scalar(-1), x);
}

RatRep rr_sub(const RatRep& x, const RatRep& y) { return rr_add(x, rr_neg(y)); }

RatRep rr_scale(const Scalar& c, const RatRep& x) {
  PolyMatrix b = mat_map(x.b(), [&c](const PolyElement& e) { return poly_scale(c, e); });
  return RatRep(std::move(b), x.A(), x.c());
}

RatRep rr_mul(const RatRep& x, const RatRep& y) {
  require_same_quiver(x.quiver(), y.quiver(), "rr_mul");
  const QuiverPtr& E = x.quiver();
  size_t n1 = x.dim(), n2 = y.dim();
  PolyMatrix top = mat_mul(x.c(), y.b());
  top = mat_map(top, [](const PolyElement& e) { return poly_neg(e); });
  PolyMatrix A = upper_block(x.A(), top, y.A(), E);
  PolyMatrix b(1, n1 + n2, poly_zero(E));
  for (size_t j = 0; j < n1; ++j) b.at(0, j) = x.b().at(0, j);
  PolyMatrix c(n1 + n2, 1, poly_zero(E));
  for (size_t i = 0; i < n2; ++i) c.at(n1 + i, 0) = y.c().at(i, 0);
  return RatRep(std::move(b), std::move(A), std::move(c));
}

RatRep rr_scale_left_vv(const VertexVector& w, const RatRep& x) {
  PolyElement pw = poly_from_vv(w);
  PolyMatrix b = mat_map(x.b(), [&pw](const PolyElement& e) { return poly_mul(pw, e); });
  return RatRep(std::move(b), x.A(), x.c());
}

RatRep rr_scale_right_vv(const RatRep& x, const VertexVector& w) {
  PolyElement pw = poly_from_vv(w);
  PolyMatrix c = mat_map(x.c(), [&pw](const PolyElement& e) { return poly_mul(e, pw); });
  return RatRep(x.b(), x.A(), std::move(c));
}

TruncSeries rr_truncate(const RatRep& x, int order) {
  if (order < 0) return TruncSeries(x.quiver(), -1);
  SeriesMatrix Sb = trunc_of_poly_matrix(x.b(), order);
  SeriesMatrix Ainv = ts_matrix_invert(trunc_of_poly_matrix(x.A(), order));
  SeriesMatrix Sc = trunc_of_poly_matrix(x.c(), order);
  return mat_mul(mat_mul(Sb, Ainv), Sc).at(0, 0);
}

VertexVector rr_augmentation(const RatRep& x) {
  KdMatrix eb = eps_matrix(x.b());
  auto eAinv = kd_invert(eps_matrix(x.A()));
  KdMatrix ec = eps_matrix(x.c());
  return mat_mul(mat_mul(eb, *eAinv), ec).at(0, 0);
}

RatRep rr_invert(const RatRep& x) {
  if (!vv_invertible(rr_augmentation(x)))
    throw NotInvertible("series value has non invertible augmentation");
  const QuiverPtr& E = x.quiver();
  size_t n = x.dim();
  /* Border [[A, c],[b, 0]]; the (n+1, n+1) entry of its inverse is -value^{-1}. */
  PolyMatrix M(n + 1, n + 1, poly_zero(E));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M.at(i, j) = x.A().at(i, j);
  for (size_t i = 0; i < n; ++i) M.at(i, n) = x.c().at(i, 0);
  for (size_t j = 0; j < n; ++j) M.at(n, j) = x.b().at(0, j);
  PolyMatrix b(1, n + 1, poly_zero(E));
  b.at(0, n) = poly_neg(poly_one(E));
  PolyMatrix c(n + 1, 1, poly_zero(E));
  c.at(n, 0) = poly_one(E);
  return RatRep(std::move(b), std::move(M), std::move(c));
}

RatRep rr_delta(const RatRep& x, uint32_t arrow) {
  const QuiverPtr& E = x.quiver();
  PolyMatrix Ad = delta_matrix(x.A(), arrow);
  PolyMatrix At = embed_kd(tau_matrix(x.A(), arrow));
  PolyMatrix B = upper_block(x.A(), Ad, At, E);
  PolyMatrix b = row_concat_h(x.b(), delta_matrix(x.b(), arrow));
  PolyMatrix c = col_concat_v(delta_matrix(x.c(), arrow),
                              embed_kd(tau_matrix(x.c(), arrow)));
  return RatRep(std::move(b), std::move(B), std::move(c));
}

RatRep rr_delta_tilde(const RatRep& x, uint32_t arrow) {
  const QuiverPtr& E = x.quiver();
  PolyMatrix Adt = delta_tilde_matrix(x.A(), arrow);
  PolyMatrix At = embed_kd(tau_matrix(x.A(), arrow));
  PolyMatrix B = upper_block(At, Adt, x.A(), E);
  PolyMatrix b = row_concat_h(embed_kd(tau_matrix(x.b(), arrow)),
                              delta_tilde_matrix(x.b(), arrow));
  PolyMatrix c = col_concat_v(delta_tilde_matrix(x.c(), arrow), x.c());
  return RatRep(std::move(b), std::move(B), std::move(c));
}

VertexVector rr_tau(const RatRep& x, uint32_t arrow) {
  return vv_tau(rr_augmentation(x), arrow);
}

size_t rr_linear_dim(const RatRep& x) {
  return x.dim() * x.quiver()->num_vertices() + 1 + monomial_weight(x.b()) +
         monomial_weight(x.A()) + monomial_weight(x.c());
}

bool rr_is_zero(const RatRep& x) {
  if (!rr_augmentation(x).is_zero()) return false;
  LinearForm lf = linearize(x);
  std::vector<Scalar> phi(lf.states, scalar_zero());
  for (const auto& [s, w] : lf.phi) phi[s] += w;
  std::vector<Scalar> iota(lf.states, scalar_zero());
  for (const auto& [s, w] : lf.iota) iota[s] += w;

  /* Rows reachable from iota by at least one arrow; the empty word is the
     augmentation, already checked. */
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::vector<Scalar>> queue;
  for (uint32_t e = 0; e < x.quiver()->num_arrows(); ++e)
    queue.push_back(apply_trans(lf, iota, e));
  while (!queue.empty()) {
    std::vector<Scalar> row = std::move(queue.back());
    queue.pop_back();
    if (in_span(basis, row)) continue;
    for (uint32_t e = 0; e < x.quiver()->num_arrows(); ++e)
      queue.push_back(apply_trans(lf, row, e));
    basis.push_back(std::move(row));
  }
  for (const auto& row : basis) {
    Scalar dot = scalar_zero();
    for (size_t s = 0; s < lf.states; ++s) dot += row[s] * phi[s];
    if (!scalar_is_zero(dot)) return false;
  }
  return true;
}

bool rr_equals(const RatRep& x, const RatRep& y) {
  require_same_quiver(x.quiver(), y.quiver(), "rr_equals");
  return rr_is_zero(rr_sub(x, y));
}

RatMatrix rat_matrix_from_poly(const PolyMatrix& M) {
  return mat_map(M, [](const PolyElement& e) { return rr_from_poly(e); });
}

RatMatrix rat_matrix_identity(QuiverPtr E, size_t n) {
  RatMatrix out(n, n, rr_zero(E));
  for (size_t i = 0; i < n; ++i) out.at(i, i) = rr_one(E);
  return out;
}

bool rat_matrix_equals(const RatMatrix& X, const RatMatrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) return false;
  for (size_t i = 0; i < X.rows(); ++i)
    for (size_t j = 0; j < X.cols(); ++j)
      if (!rr_equals(X.at(i, j), Y.at(i, j))) return false;
  return true;
}

RatMatrix rr_matrix_invert(const RatMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw NotInvertible("rr_matrix_invert needs a nonempty square matrix");
  size_t k = M.rows();
  const QuiverPtr& E = M.at(0, 0).quiver();

  KdMatrix value_eps = kd_zero(E, k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) value_eps.at(i, j) = rr_augmentation(M.at(i, j));
  if (!kd_invert(value_eps))
    throw NotInvertible("matrix value has singular augmentation");

  /* One bordered system [[A_tot, C],[B, 0]]: A_tot stacks every entry core,
     row i of B carries the entry rows b_ij, column j of C the columns c_ij. */
  size_t n_tot = 0;
  std::vector<std::vector<size_t>> offset(k, std::vector<size_t>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      offset[i][j] = n_tot;
      n_tot += M.at(i, j).dim();
    }

  size_t N = n_tot + k;
  PolyMatrix big = poly_matrix_zero(E, N, N);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      const RatRep& r = M.at(i, j);
      size_t off = offset[i][j];
      for (size_t a = 0; a < r.dim(); ++a) {
        for (size_t bcol = 0; bcol < r.dim(); ++bcol)
          big.at(off + a, off + bcol) = r.A().at(a, bcol);
        big.at(off + a, n_tot + j) = r.c().at(a, 0);
        big.at(n_tot + i, off + a) = r.b().at(0, a);
      }
    }

  RatMatrix out(k, k, rr_zero(E));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      PolyMatrix b(1, N, poly_zero(E));
      b.at(0, n_tot + i) = poly_neg(poly_one(E));
      PolyMatrix c(N, 1, poly_zero(E));
      c.at(n_tot + j, 0) = poly_one(E);
      out.at(i, j) = RatRep(std::move(b), big, std::move(c));
    }
  return out;
}

} // namespace quivalg
