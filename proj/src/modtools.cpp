#include "quivalg/modtools.hpp"

#include "quivalg/errors.hpp"
#include "quivalg/linalg.hpp"

#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace quivalg {

namespace {

/* Position of the longest term anywhere in M with path length >= 2, row
   major. Term order puts longest paths last inside each entry. */
struct SplitSite {
  size_t i = 0, j = 0;
  Path path;
  Scalar coeff;
};

std::optional<SplitSite> find_split(const PolyMatrix& M) {
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j) {
      const auto& terms = M.at(i, j).terms();
      if (terms.empty()) continue;
      auto last = std::prev(terms.end());
      if (last->first.length() >= 2)
        return SplitSite{i, j, last->first, last->second};
    }
  return std::nullopt;
}

PolyMatrix elementary(QuiverPtr E, size_t n, size_t i, size_t j,
                      const PolyElement& x) {
  PolyMatrix F = poly_matrix_identity(std::move(E), n);
  F.at(i, j) = poly_add(F.at(i, j), x);
  return F;
}

} // namespace

LinearizationResult higman_linearize(const PolyMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0)
    throw ContextViolation("higman_linearize: empty matrix");
  QuiverPtr E = M.at(0, 0).quiver();
  const PolyMatrix id1 = poly_matrix_identity(E, 1);
  const PolyElement zero = poly_zero(E);

  LinearizationResult out{M,
                          poly_matrix_identity(E, M.rows()),
                          poly_matrix_identity(E, M.rows()),
                          poly_matrix_identity(E, M.cols()),
                          poly_matrix_identity(E, M.cols()),
                          0};

  while (auto site = find_split(out.L)) {
    uint32_t e = site->path.arrows[0];
    Path tail{E->range(e), {site->path.arrows.begin() + 1, site->path.arrows.end()}};
    PolyElement x = poly_arrow(E, e);
    PolyElement y = poly_scale(site->coeff, poly_path(E, tail));

    size_t n = out.L.rows(), m = out.L.cols();
    out.L = mat_block_diag(out.L, id1, zero);

    /* Column j gains column m times y, putting y into the fresh row. */
    out.L = mat_mul(out.L, elementary(E, m + 1, m, site->j, y));
    out.Q = mat_mul(mat_block_diag(out.Q, id1, zero),
                    elementary(E, m + 1, m, site->j, y));
    out.Q_inv = mat_mul(elementary(E, m + 1, m, site->j, poly_neg(y)),
                        mat_block_diag(out.Q_inv, id1, zero));

    /* Row i loses x times the fresh row, cancelling the split term. */
    out.L = mat_mul(elementary(E, n + 1, site->i, n, poly_neg(x)), out.L);
    out.P = mat_mul(elementary(E, n + 1, site->i, n, poly_neg(x)),
                    mat_block_diag(out.P, id1, zero));
    out.P_inv = mat_mul(mat_block_diag(out.P_inv, id1, zero),
                        elementary(E, n + 1, site->i, n, x));

    ++out.ell;
  }
  return out;
}

namespace {

std::vector<Scalar> slice_column(const KdMatrix& C, size_t j, uint32_t v) {
  std::vector<Scalar> col(C.rows());
  for (size_t i = 0; i < C.rows(); ++i) col[i] = C.at(i, j).at(v);
  return col;
}

bool column_is_zero(const std::vector<Scalar>& col) {
  for (const auto& c : col)
    if (c != 0) return false;
  return true;
}

std::vector<Scalar> qmatrix_column(const QMatrix& M, size_t j) {
  std::vector<Scalar> col(M.rows());
  for (size_t i = 0; i < M.rows(); ++i) col[i] = M.at(i, j);
  return col;
}

} // namespace

RegularizationResult vnreg_regularize(const KdMatrix& p, const PolyMatrix& D) {
  if (p.rows() == 0 || p.rows() != p.cols())
    throw NotIdempotent("vnreg_regularize: p must be square and nonempty");
  if (D.rows() != p.rows() || D.cols() != p.cols())
    throw ContextViolation("vnreg_regularize: shape mismatch between p and D");
  if (!(mat_mul(p, p) == p)) throw NotIdempotent("p is not idempotent");
  for (size_t i = 0; i < D.rows(); ++i)
    for (size_t j = 0; j < D.cols(); ++j)
      if (!is_homogeneous(D.at(i, j), 1))
        throw NotHomogeneous("an entry of D is not homogeneous of degree 1");

  QuiverPtr E = p.at(0, 0).quiver();
  size_t n = p.rows();
  size_t d = E->num_vertices();

  RegularizationResult out{{}, kd_zero(E, n, n), poly_matrix_zero(E, n, n),
                           RatMatrix()};
  PolyMatrix u = mat_sub(embed_kd(p), D);
  KdMatrix pending = mat_sub(kd_identity(E, n), p);

  while (true) {
    PolyMatrix X = mat_mul(u, embed_kd(pending));
    if (poly_matrix_is_zero(X)) break;

    /* Coefficient vectors of each arrow in X, gathered per vertex. */
    std::vector<std::vector<std::vector<Scalar>>> pool(d);
    for (uint32_t a = 0; a < E->num_arrows(); ++a) {
      KdMatrix C = eps_matrix(delta_matrix(X, a));
      if (!(mat_mul(p, C) == C))
        throw RegularityViolated("extracted coefficients leave the column space of p");
      uint32_t v = E->source(a);
      for (size_t j = 0; j < C.cols(); ++j) {
        auto col = slice_column(C, j, v);
        if (!column_is_zero(col)) pool[v].push_back(std::move(col));
      }
    }

    KdMatrix r = mat_sub(p, out.q);
    KdMatrix qk = kd_zero(E, n, n);
    for (uint32_t v = 0; v < d; ++v) {
      if (pool[v].empty()) continue;
      auto fresh = column_space_basis(pool[v]);
      QMatrix rv = vertex_slice(r, v);
      std::vector<std::vector<Scalar>> rcols;
      for (size_t j = 0; j < n; ++j) rcols.push_back(qmatrix_column(rv, j));
      auto extension = extend_basis(fresh, rcols);
      auto kernel = null_space_basis(rv);

      QMatrix T = q_zero(n, n);
      size_t t = 0;
      for (const auto& col : fresh) {
        for (size_t i = 0; i < n; ++i) T.at(i, t) = col[i];
        ++t;
      }
      for (const auto& col : extension) {
        for (size_t i = 0; i < n; ++i) T.at(i, t) = col[i];
        ++t;
      }
      for (const auto& col : kernel) {
        for (size_t i = 0; i < n; ++i) T.at(i, t) = col[i];
        ++t;
      }
      auto Tinv = q_invert(T);
      if (t != n || !Tinv)
        throw RegularityViolated("extracted space does not split the range of p");

      QMatrix J = q_zero(n, n);
      for (size_t i = 0; i < fresh.size(); ++i) J.at(i, i) = 1;
      set_vertex_slice(qk, v, mat_mul(mat_mul(T, J), *Tinv));
    }

    out.q_list.push_back(qk);
    out.q = mat_add(out.q, qk);
    u = mat_mul(embed_kd(mat_sub(kd_identity(E, n), qk)), u);
    pending = qk;
  }

  out.u = mat_add(embed_kd(out.q), u);
  KdMatrix pq = mat_sub(p, out.q);
  PolyMatrix W = mat_mul(mat_mul(embed_kd(pq), D), embed_kd(pq));
  RatMatrix inner =
      rr_matrix_invert(rat_matrix_from_poly(mat_sub(poly_matrix_identity(E, n), W)));
  RatMatrix ratp = rat_matrix_from_poly(embed_kd(p));
  out.v = mat_mul(mat_mul(ratp, inner), ratp);
  return out;
}

KdMatrix unit_regular_normalize(const KdMatrix& A) {
  if (A.rows() == 0 || A.rows() != A.cols())
    throw ContextViolation("unit_regular_normalize: matrix must be square and nonempty");
  QuiverPtr E = A.at(0, 0).quiver();
  KdMatrix x = kd_zero(E, A.rows(), A.rows());
  for (uint32_t v = 0; v < E->num_vertices(); ++v) {
    auto dec = paq_decompose(vertex_slice(A, v));
    set_vertex_slice(x, v, mat_mul(dec.Q, dec.P));
  }
  return x;
}

} // namespace quivalg
