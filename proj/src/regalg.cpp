#include "quivalg/regalg.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>
#include <random>

namespace quivalg {

namespace {

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* op) {
  if (a.get() == b.get()) return;
  if (a && b && *a == *b) return;
  throw ContextViolation(std::string(op) + ": elements over different quivers");
}

bool structurally_zero(const RatRep& a) {
  for (size_t j = 0; j < a.b().cols(); ++j)
    if (!a.b().at(0, j).is_zero()) return false;
  return true;
}

size_t max_bar_length(const SElement& x) {
  size_t m = 0;
  for (const auto& [gamma, a] : x.terms()) m = std::max(m, gamma.length());
  return m;
}

} // namespace

SElement::SElement(QuiverPtr E) : E_(std::move(E)), terms_(PathOrder{E_.get()}) {}

void SElement::add_term(const Path& gamma, const RatRep& coeff) {
  require_same_quiver(E_, coeff.quiver(), "SElement::add_term");
  RatRep supported =
      rr_scale_left_vv(vv_unit(E_, path_source(*E_, gamma)), coeff);
  if (structurally_zero(supported)) return;
  auto it = terms_.find(gamma);
  if (it == terms_.end())
    terms_.emplace(gamma, std::move(supported));
  else
    it->second = rr_add(it->second, supported);
}

bool SElement::is_zero() const {
  for (const auto& [gamma, a] : terms_)
    if (!rr_is_zero(a)) return false;
  return true;
}

SElement s_zero(QuiverPtr E) { return SElement(std::move(E)); }

SElement s_one(QuiverPtr E) { return s_from_rat(rr_one(E)); }

SElement s_from_rat(const RatRep& x) {
  const QuiverPtr& E = x.quiver();
  SElement out(E);
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    out.add_term(trivial_path(*E, v), x);
  return out;
}

SElement s_from_poly(const PolyElement& x) { return s_from_rat(rr_from_poly(x)); }

SElement s_bar_arrow(QuiverPtr E, uint32_t a) {
  return s_bar_path(E, arrow_path(*E, a));
}

SElement s_bar_path(QuiverPtr E, const Path& gamma) {
  SElement out(E);
  out.add_term(gamma, rr_from_poly(poly_vertex(E, path_source(*E, gamma))));
  return out;
}

SElement s_add(const SElement& x, const SElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "s_add");
  SElement out = x;
  for (const auto& [gamma, a] : y.terms()) out.add_term(gamma, a);
  return out;
}

SElement s_sub(const SElement& x, const SElement& y) { return s_add(x, s_neg(y)); }

SElement s_neg(const SElement& x) { return s_scale(Scalar(-1), x); }

SElement s_scale(const Scalar& c, const SElement& x) {
  SElement out(x.quiver());
  if (scalar_is_zero(c)) return out;
  for (const auto& [gamma, a] : x.terms()) out.add_term(gamma, rr_scale(c, a));
  return out;
}

SElement s_mul(const SElement& x, const SElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "s_mul");
  const Quiver& E = *x.quiver();
  SElement out(x.quiver());
  for (const auto& [gamma, a] : x.terms())
    for (const auto& [mu, b] : y.terms()) {
      size_t m = mu.length();
      /* a bar(mu) = sum_j bar(mu_<=j) c_j with c_j the deltas past position
         j then taus down to the front; only the all-delta term keeps a
         general rational coefficient. */
      RatRep cur = a;
      std::vector<RatRep> after_deltas; // index j: deltas applied at m..j+1
      after_deltas.resize(m + 1, cur);
      after_deltas[m] = cur;
      for (size_t k = m; k-- > 0;) {
        cur = rr_delta(cur, mu.arrows[k]);
        after_deltas[k] = cur;
      }
      for (size_t j = 0; j <= m; ++j) {
        if (j == 0) {
          out.add_term(gamma, rr_mul(after_deltas[0], b));
          continue;
        }
        VertexVector w = rr_tau(after_deltas[j], mu.arrows[j - 1]);
        for (size_t k = j - 1; k-- > 0;) w = vv_tau(w, mu.arrows[k]);
        Path prefix{mu.base_vertex, {mu.arrows.begin(), mu.arrows.begin() + j}};
        auto key = path_concat(E, prefix, gamma);
        if (!key) continue;
        out.add_term(*key, rr_scale_left_vv(w, b));
      }
    }
  return out;
}

SElement q_idempotent(QuiverPtr E, uint32_t v) {
  if (!E->is_receiving(v))
    throw QuiverError("q_idempotent: vertex receives no arrows");
  SElement out(E);
  out.add_term(trivial_path(*E, v), rr_from_poly(poly_vertex(E, v)));
  for (uint32_t e : E->incoming(v))
    out.add_term(arrow_path(*E, e),
                 rr_from_poly(poly_neg(poly_arrow(E, e))));
  return out;
}

SElement r_times_q(const RatRep& r, uint32_t v) {
  const QuiverPtr& E = r.quiver();
  if (!E->is_receiving(v))
    throw QuiverError("r_times_q: vertex receives no arrows");
  return s_scale(rr_augmentation(r).at(v), q_idempotent(E, v));
}

SElement frontier_expand(const SElement& x, size_t depth) {
  const QuiverPtr& Ep = x.quiver();
  const Quiver& E = *Ep;
  SElement cur = x;
  for (;;) {
    bool expandable = false;
    for (const auto& [gamma, a] : cur.terms())
      if (gamma.length() < depth && E.is_receiving(path_source(E, gamma))) {
        expandable = true;
        break;
      }
    if (!expandable) return cur;
    SElement next(Ep);
    for (const auto& [gamma, a] : cur.terms()) {
      uint32_t v = path_source(E, gamma);
      if (gamma.length() >= depth || !E.is_receiving(v)) {
        next.add_term(gamma, a);
        continue;
      }
      for (uint32_t e : E.incoming(v)) {
        Path key = gamma;
        key.arrows.insert(key.arrows.begin(), e);
        key.base_vertex = E.source(e);
        next.add_term(key, rr_mul(rr_from_poly(poly_arrow(Ep, e)), a));
      }
    }
    cur = std::move(next);
  }
}

QEqualResult q_equal(const SElement& x, const SElement& y,
                     std::optional<size_t> depth) {
  require_same_quiver(x.quiver(), y.quiver(), "q_equal");
  SElement diff = s_sub(x, y);
  size_t d = depth.value_or(1 + max_bar_length(diff));
  SElement expanded = frontier_expand(diff, d);
  return QEqualResult{expanded.is_zero(), d};
}

SElement s_from_leavitt(const LElement& x) {
  const QuiverPtr& E = x.quiver();
  SElement out(E);
  for (const auto& [m, c] : x.terms())
    out.add_term(m.gamma,
                 rr_from_poly(poly_scale(c, poly_path(E, m.nu))));
  return out;
}

namespace {

/* Exact componentwise equality of two S normal forms. */
bool s_same_form(const SElement& x, const SElement& y) {
  return s_sub(x, y).is_zero();
}

RatRep random_rat(QuiverPtr E, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  PolyElement p = poly_zero(E);
  for (uint32_t v = 0; v < E->num_vertices(); ++v)
    p = poly_add(p, poly_scale(Scalar(coeff(rng)), poly_vertex(E, v)));
  for (uint32_t a = 0; a < E->num_arrows(); ++a)
    if (pick(rng) != 0)
      p = poly_add(p, poly_scale(Scalar(coeff(rng)), poly_arrow(E, a)));
  RatRep r = rr_from_poly(p);
  if (pick(rng) == 0) {
    PolyElement shift = poly_add(poly_one(E), p);
    if (vv_invertible(augmentation(shift)))
      r = rr_invert(rr_from_poly(shift));
  }
  return r;
}

SElement random_s(QuiverPtr E, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> len(0, 2);
  std::uniform_int_distribution<uint32_t> vtx(0, static_cast<uint32_t>(E->num_vertices() - 1));
  std::uniform_int_distribution<uint32_t> arw(0, static_cast<uint32_t>(std::max<size_t>(E->num_arrows(), 1) - 1));
  SElement out(E);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    int l = E->num_arrows() == 0 ? 0 : len(rng);
    Path gamma = trivial_path(*E, vtx(rng));
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      uint32_t e = arw(rng);
      Path ext{E->source(e), {e}};
      auto glued = path_concat(*E, ext, gamma);
      if (!glued) {
        ok = false;
        break;
      }
      gamma = *glued;
    }
    if (!ok) continue;
    out.add_term(gamma, random_rat(E, rng));
  }
  return out;
}

} // namespace

QRelationReport q_relation_suite(QuiverPtr E, size_t samples, uint64_t seed) {
  QRelationReport report;
  std::vector<uint32_t> recv = receiving_vertices(*E);
  std::mt19937_64 rng(seed);

  for (uint32_t i : recv) {
    SElement qi = q_idempotent(E, i);
    if (!s_same_form(s_mul(qi, qi), qi)) report.idempotent_failures++;
    for (uint32_t j : recv) {
      if (i == j) continue;
      if (!s_mul(qi, q_idempotent(E, j)).is_zero()) report.orthogonality_failures++;
    }
  }

  for (size_t n = 0; n < samples; ++n) {
    SElement s = random_s(E, rng);
    report.samples++;
    for (uint32_t i : recv)
      for (uint32_t j : recv) {
        SElement qi = q_idempotent(E, i);
        SElement qj = q_idempotent(E, j);
        SElement z = s_mul(s_mul(qi, s), qj);
        if (i != j) {
          if (!z.is_zero()) report.corner_failures++;
          continue;
        }
        /* z must be lambda q_i; lambda shows up as the augmentation of the
           coefficient at the trivial key. */
        Scalar lambda = scalar_zero();
        auto it = z.terms().find(trivial_path(*E, i));
        if (it != z.terms().end()) lambda = rr_augmentation(it->second).at(i);
        if (!s_same_form(z, s_scale(lambda, qi))) report.corner_failures++;
      }
  }
  return report;
}

std::string s_to_string(const SElement& x, int trunc_order) {
  const Quiver& E = *x.quiver();
  std::string out;
  for (const auto& [gamma, a] : x.terms()) {
    if (rr_is_zero(a)) continue;
    std::string bar;
    for (auto it = gamma.arrows.rbegin(); it != gamma.arrows.rend(); ++it) {
      if (!bar.empty()) bar += "*";
      bar += E.arrow_name(*it) + "~";
    }
    TruncSeries t = rr_truncate(a, trunc_order);
    PolyElement probe(x.quiver());
    for (const auto& [p, c] : t.terms()) probe.add_term(p, c);
    std::string coeff;
    if (rr_equals(a, rr_from_poly(probe)))
      coeff = "(" + poly_to_string(probe) + ")";
    else
      coeff = "(" + ts_to_string(t) + ")";
    if (!out.empty()) out += " + ";
    out += bar.empty() ? coeff : bar + "*" + coeff;
  }
  return out.empty() ? "0" : out;
}

} // namespace quivalg
