#include "quivalg/leavitt.hpp"

#include "quivalg/errors.hpp"

#include <algorithm>

namespace quivalg {

namespace {

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* op) {
  if (a.get() == b.get()) return;
  if (a && b && *a == *b) return;
  throw ContextViolation(std::string(op) + ": elements over different quivers");
}

bool is_redex(const Quiver& E, const Path& gamma, const Path& nu) {
  if (gamma.trivial() || nu.trivial()) return false;
  uint32_t f = gamma.arrows.front();
  if (nu.arrows.front() != f) return false;
  return E.distinguished_arrow(E.range(f)) == f;
}

/* mu a suffix of nu (as a path, base vertex included)? */
bool path_suffix(const Quiver& E, const Path& mu, const Path& nu) {
  if (mu.length() > nu.length()) return false;
  size_t off = nu.length() - mu.length();
  for (size_t i = 0; i < mu.length(); ++i)
    if (mu.arrows[i] != nu.arrows[off + i]) return false;
  if (mu.trivial()) return mu.base_vertex == path_range(E, nu);
  return true;
}

Path path_drop_suffix(const Quiver& E, const Path& nu, size_t k) {
  Path out{nu.base_vertex, {nu.arrows.begin(), nu.arrows.end() - k}};
  (void)E;
  return out;
}

Path path_drop_first(const Quiver& E, const Path& p) {
  return Path{E.range(p.arrows.front()), {p.arrows.begin() + 1, p.arrows.end()}};
}

Path path_prepend(const Quiver& E, uint32_t arrow, const Path& p) {
  Path out{E.source(arrow), {}};
  out.arrows.reserve(p.arrows.size() + 1);
  out.arrows.push_back(arrow);
  out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [body, coeff] : parts) {
    Scalar a = coeff;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1)
      out += scalar_to_string(a) + "*";
    out += body;
    first = false;
  }
  return out;
}

} // namespace

bool LMonomialOrder::operator()(const LMonomial& a, const LMonomial& b) const {
  PathOrder po{E};
  if (po(a.gamma, b.gamma)) return true;
  if (po(b.gamma, a.gamma)) return false;
  return po(a.nu, b.nu);
}

LElement::LElement(QuiverPtr E) : E_(std::move(E)), terms_(LMonomialOrder{E_.get()}) {}

void LElement::add_term(const LMonomial& m, const Scalar& c) {
  if (scalar_is_zero(c)) return;
  if (path_source(*E_, m.gamma) != path_source(*E_, m.nu))
    throw ContextViolation("bar monomial components must share a source vertex");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }
}

bool LElement::operator==(const LElement& other) const {
  require_same_quiver(E_, other.E_, "LElement equality");
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

LElement l_zero(QuiverPtr E) { return LElement(std::move(E)); }

LElement l_one(QuiverPtr E) {
  LElement out(E);
  for (uint32_t v = 0; v < E->num_vertices(); ++v) {
    Path t = trivial_path(*E, v);
    out.add_term(LMonomial{t, t}, scalar_one());
  }
  return out;
}

LElement l_vertex(QuiverPtr E, uint32_t v) {
  LElement out(E);
  Path t = trivial_path(*E, v);
  out.add_term(LMonomial{t, t}, scalar_one());
  return out;
}

LElement l_arrow(QuiverPtr E, uint32_t a) {
  LElement out(E);
  Path p = arrow_path(*E, a);
  out.add_term(LMonomial{trivial_path(*E, E->source(a)), p}, scalar_one());
  return out;
}

LElement l_bar_arrow(QuiverPtr E, uint32_t a) {
  LElement out(E);
  Path p = arrow_path(*E, a);
  out.add_term(LMonomial{p, trivial_path(*E, E->source(a))}, scalar_one());
  return out;
}

LElement l_monomial(QuiverPtr E, const Path& gamma, const Path& nu, const Scalar& c) {
  return l_normal_form(std::move(E), {LRawTerm{gamma, nu, c}});
}

LElement l_from_poly(const PolyElement& x) {
  LElement out(x.quiver());
  const Quiver& E = *x.quiver();
  for (const auto& [p, c] : x.terms())
    out.add_term(LMonomial{trivial_path(E, p.base_vertex), p}, c);
  return out;
}

LElement l_add(const LElement& x, const LElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "l_add");
  LElement out = x;
  for (const auto& [m, c] : y.terms()) out.add_term(m, c);
  return out;
}

LElement l_sub(const LElement& x, const LElement& y) { return l_add(x, l_neg(y)); }

LElement l_neg(const LElement& x) { return l_scale(Scalar(-1), x); }

LElement l_scale(const Scalar& c, const LElement& x) {
  LElement out(x.quiver());
  if (scalar_is_zero(c)) return out;
  for (const auto& [m, coeff] : x.terms()) out.add_term(m, c * coeff);
  return out;
}

LElement l_normal_form(QuiverPtr E, const std::vector<LRawTerm>& raw,
                       const std::function<size_t(size_t)>& pick) {
  const Quiver& Q = *E;
  std::map<LMonomial, Scalar, LMonomialOrder> work{LMonomialOrder{&Q}};
  auto put = [&](const LMonomial& m, const Scalar& c) {
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = work.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (scalar_is_zero(it->second)) work.erase(it);
    }
  };
  for (const auto& t : raw) {
    if (path_source(Q, t.gamma) != path_source(Q, t.nu))
      throw ContextViolation("bar monomial components must share a source vertex");
    put(LMonomial{t.gamma, t.nu}, t.coeff);
  }

  for (;;) {
    std::vector<LMonomial> redexes;
    for (const auto& [m, c] : work)
      if (is_redex(Q, m.gamma, m.nu)) redexes.push_back(m);
    if (redexes.empty()) break;
    size_t i = pick ? pick(redexes.size()) % redexes.size() : 0;
    LMonomial m = redexes[i];
    Scalar c = work.at(m);
    work.erase(m);
    uint32_t hat = m.gamma.arrows.front();
    Path gp = path_drop_first(Q, m.gamma);
    Path np = path_drop_first(Q, m.nu);
    put(LMonomial{gp, np}, c);
    for (uint32_t e : Q.incoming(Q.range(hat))) {
      if (e == hat) continue;
      put(LMonomial{path_prepend(Q, e, gp), path_prepend(Q, e, np)}, -c);
    }
  }

  LElement out(std::move(E));
  for (const auto& [m, c] : work) out.add_term(m, c);
  return out;
}

LElement l_mul(const LElement& x, const LElement& y) {
  require_same_quiver(x.quiver(), y.quiver(), "l_mul");
  const Quiver& E = *x.quiver();
  std::vector<LRawTerm> raw;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [ym, yc] : y.terms()) {
      const Path& nu = xm.nu;
      const Path& mu = ym.gamma;
      if (path_range(E, nu) != path_range(E, mu)) continue;
      if (path_suffix(E, mu, nu)) {
        Path nu0 = path_drop_suffix(E, nu, mu.length());
        auto tail = path_concat(E, nu0, ym.nu);
        if (tail) raw.push_back(LRawTerm{xm.gamma, *tail, xc * yc});
      } else if (path_suffix(E, nu, mu)) {
        Path mu0 = path_drop_suffix(E, mu, nu.length());
        auto head = path_concat(E, mu0, xm.gamma);
        if (head) raw.push_back(LRawTerm{*head, ym.nu, xc * yc});
      }
    }
  return l_normal_form(x.quiver(), raw);
}

std::vector<LMonomial> l_basis_up_to(const Quiver& E, size_t max_len) {
  std::vector<std::vector<Path>> by_len(max_len + 1);
  for (uint32_t v = 0; v < E.num_vertices(); ++v)
    by_len[0].push_back(trivial_path(E, v));
  for (size_t len = 1; len <= max_len; ++len)
    for (const Path& p : by_len[len - 1])
      for (uint32_t a = 0; a < E.num_arrows(); ++a) {
        if (E.source(a) != path_range(E, p)) continue;
        Path q = p;
        q.arrows.push_back(a);
        by_len[len].push_back(q);
      }

  std::vector<Path> all;
  for (const auto& bucket : by_len) all.insert(all.end(), bucket.begin(), bucket.end());

  std::vector<LMonomial> out;
  for (const Path& g : all)
    for (const Path& n : all) {
      if (path_source(E, g) != path_source(E, n)) continue;
      if (is_redex(E, g, n)) continue;
      out.push_back(LMonomial{g, n});
    }
  std::sort(out.begin(), out.end(), LMonomialOrder{&E});
  return out;
}

WitnessPair witness_basic_transformation(QuiverPtr E, uint32_t v) {
  if (!E->is_receiving(v))
    throw QuiverError("witness requested at a non receiving vertex");
  WitnessPair out;
  for (uint32_t e : E->incoming(v)) {
    out.row.push_back(l_arrow(E, e));
    out.column.push_back(l_bar_arrow(E, e));
  }
  return out;
}

LElement induced_hom(const Quiver& E, QuiverPtr F, const GraphHom& f,
                     const LElement& x) {
  if (!(*x.quiver() == E))
    throw ContextViolation("induced_hom: element not over the stated source quiver");
  auto map_path = [&](const Path& p) {
    Path q{f.vertex_map[p.base_vertex], {}};
    q.arrows.reserve(p.arrows.size());
    for (uint32_t a : p.arrows) q.arrows.push_back(f.arrow_map[a]);
    return q;
  };
  std::vector<LRawTerm> raw;
  for (const auto& [m, c] : x.terms())
    raw.push_back(LRawTerm{map_path(m.gamma), map_path(m.nu), c});
  return l_normal_form(std::move(F), raw);
}

std::string l_to_string(const LElement& x) {
  const Quiver& E = *x.quiver();
  std::vector<std::pair<std::string, Scalar>> parts;
  for (const auto& [m, c] : x.terms()) {
    std::string body;
    if (m.gamma.trivial() && m.nu.trivial()) {
      body = "p_" + E.vertex_name(m.gamma.base_vertex);
    } else {
      for (auto it = m.gamma.arrows.rbegin(); it != m.gamma.arrows.rend(); ++it) {
        if (!body.empty()) body += "*";
        body += E.arrow_name(*it) + "~";
      }
      if (!m.nu.trivial()) {
        if (!body.empty()) body += "*";
        body += path_to_string(E, m.nu);
      }
    }
    parts.emplace_back(body, c);
  }
  return format_terms(parts);
}

} // namespace quivalg
