#include "quivalg/eval.hpp"
#include "quivalg/modtools.hpp"
#include "quivalg/quiver_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace quivalg;
using nlohmann::json;

namespace {

/* Collects both human lines and the machine document; exactly one of the two
   is emitted per invocation. */
struct Output {
  bool json_mode = false;
  json doc = json::object();
  std::vector<std::string> lines;

  void field(const std::string& key, const json& value) { doc[key] = value; }
  void line(const std::string& text) { lines.push_back(text); }
  void emit() const {
    if (json_mode) {
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

EvalValue eval_text(const EvalContext& ctx, const std::string& text) {
  return eval_expr(ctx, *parse_expr(text));
}

PolyElement eval_poly(QuiverPtr E, const std::string& text) {
  EvalContext ctx{EvalMode::Poly, std::move(E), 0};
  return std::get<PolyElement>(eval_text(ctx, text));
}

/* Matrix syntax: entries separated by commas, rows by semicolons; optional
   square brackets are ignored. */
PolyMatrix parse_poly_matrix(const QuiverPtr& E, std::string text) {
  std::erase_if(text, [](char c) { return c == '[' || c == ']'; });
  std::vector<std::vector<PolyElement>> rows;
  size_t start = 0;
  while (start <= text.size()) {
    size_t stop = text.find(';', start);
    std::string row = text.substr(start, stop == std::string::npos ? stop : stop - start);
    std::vector<PolyElement> entries;
    size_t estart = 0;
    while (estart <= row.size()) {
      size_t estop = row.find(',', estart);
      entries.push_back(eval_poly(
          E, row.substr(estart, estop == std::string::npos ? estop : estop - estart)));
      if (estop == std::string::npos) break;
      estart = estop + 1;
    }
    rows.push_back(std::move(entries));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (rows.empty()) throw ParseError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ParseError("ragged matrix rows");
  PolyMatrix M(rows.size(), rows[0].size(), poly_zero(E));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = rows[i][j];
  return M;
}

KdMatrix to_kd_matrix(const PolyMatrix& M) {
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      if (max_path_length(M.at(i, j)) > 0)
        throw ContextViolation("matrix entry has positive degree where a scalar matrix is required");
  return eps_matrix(M);
}

std::string poly_matrix_to_text(const PolyMatrix& M) {
  std::string out = "[";
  for (size_t i = 0; i < M.rows(); ++i) {
    out += i ? "; " : "";
    for (size_t j = 0; j < M.cols(); ++j)
      out += (j ? ", " : "") + poly_to_string(M.at(i, j));
  }
  return out + "]";
}

std::string rat_matrix_to_text(const RatMatrix& M, int trunc) {
  std::string out = "[";
  for (size_t i = 0; i < M.rows(); ++i) {
    out += i ? "; " : "";
    for (size_t j = 0; j < M.cols(); ++j)
      out += (j ? ", " : "") + ts_to_string(rr_truncate(M.at(i, j), trunc));
  }
  return out + "]";
}

json poly_matrix_to_json(const PolyMatrix& M) {
  json rows = json::array();
  for (size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < M.cols(); ++j) row.push_back(poly_to_string(M.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

MonoidElem parse_monoid_arg(const Quiver& E, const std::string& text) {
  MonoidElem m = parse_monoid_elem(text);
  for (const auto& [name, mult] : m)
    if (!E.vertex_index(name)) throw ParseError("unknown vertex: " + name);
  return m;
}

json certificate_to_json(const std::vector<RewriteStep>& cert) {
  json steps = json::array();
  for (const auto& s : cert)
    steps.push_back({{"forward", s.forward}, {"vertex", s.vertex}});
  return steps;
}

std::string certificate_to_text(const std::vector<RewriteStep>& cert) {
  if (cert.empty()) return "(empty)";
  std::string out;
  for (const auto& s : cert) {
    if (!out.empty()) out += ", ";
    out += (s.forward ? "expand " : "collapse ") + s.vertex;
  }
  return out;
}

size_t monoid_degree(const MonoidElem& m) {
  size_t total = 0;
  for (const auto& [name, mult] : m) total += mult;
  return total;
}

int run_check(Output& out, const QuiverPtr& E, size_t samples) {
  bool all_ok = true;
  json vertices = json::array();
  for (uint32_t v : receiving_vertices(*E)) {
    WitnessPair w = witness_basic_transformation(E, v);
    LElement sum = l_zero(E);
    for (size_t j = 0; j < w.column.size(); ++j)
      sum = l_add(sum, l_mul(w.column[j], w.row[j]));
    bool ok = sum == l_vertex(E, v);
    for (size_t i = 0; i < w.row.size() && ok; ++i)
      for (size_t j = 0; j < w.column.size() && ok; ++j) {
        LElement prod = l_mul(w.row[i], w.column[j]);
        LElement expect = i == j ? l_vertex(E, E->source(E->incoming(v)[i]))
                                 : l_zero(E);
        ok = prod == expect;
      }
    all_ok = all_ok && ok;
    out.line("witness relations at " + E->vertex_name(v) + ": " +
             (ok ? "ok" : "FAILED"));
    vertices.push_back({{"vertex", E->vertex_name(v)}, {"ok", ok}});
  }
  QRelationReport rep = q_relation_suite(E, samples, 12345);
  all_ok = all_ok && rep.ok();
  out.line("q relations (" + std::to_string(rep.samples) + " samples): " +
           (rep.ok() ? "ok" : "FAILED"));
  out.field("command", "check");
  out.field("witness", vertices);
  out.field("q_relations",
            json{{"samples", rep.samples},
                 {"idempotent_failures", rep.idempotent_failures},
                 {"orthogonality_failures", rep.orthogonality_failures},
                 {"corner_failures", rep.corner_failures}});
  out.field("ok", all_ok);
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for quiver path algebras, their power"
               " series and Leavitt-style localizations"};
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON document instead of text");

  std::string quiver_path;
  std::string ctx_name = "poly";
  int trunc = 8;
  int depth_arg = -1;
  size_t samples = 20;
  std::string expr_a, expr_b, expr_c, expr_d;
  std::vector<std::string> names;

  auto add_quiver = [&](CLI::App* sub) {
    sub->add_option("--quiver", quiver_path, "quiver JSON file")->required();
  };

  CLI::App* check = app.add_subcommand("check", "verify the defining relation suites");
  check->add_option("quiver", quiver_path, "quiver JSON file")->required();
  check->add_option("--samples", samples, "random samples for the q relation suite");

  CLI::App* nf = app.add_subcommand("nf", "canonical form of an expression");
  add_quiver(nf);
  nf->add_option("--ctx", ctx_name, "poly | series | rat | leavitt | salg");
  nf->add_option("--trunc", trunc, "series truncation / display order (default 8)");
  nf->add_option("expr", expr_a, "expression")->required();

  CLI::App* mul = app.add_subcommand("mul", "product of two expressions");
  add_quiver(mul);
  mul->add_option("--ctx", ctx_name, "poly | series | rat | leavitt | salg");
  mul->add_option("--trunc", trunc, "series truncation / display order (default 8)");
  mul->add_option("lhs", expr_a, "left factor")->required();
  mul->add_option("rhs", expr_b, "right factor")->required();

  CLI::App* st = app.add_subcommand("series-trunc", "truncated series expansion");
  add_quiver(st);
  st->add_option("--trunc", trunc, "truncation order (default 8)");
  st->add_option("expr", expr_a, "expression")->required();

  CLI::App* rat_eq = app.add_subcommand("rat-eq", "exact equality of rational series");
  add_quiver(rat_eq);
  rat_eq->add_option("lhs", expr_a, "left side")->required();
  rat_eq->add_option("rhs", expr_b, "right side")->required();

  CLI::App* qeq = app.add_subcommand("qeq", "equality in the regular algebra");
  add_quiver(qeq);
  qeq->add_option("--depth", depth_arg, "frontier depth (default: auto)");
  qeq->add_option("lhs", expr_a, "left side")->required();
  qeq->add_option("rhs", expr_b, "right side")->required();

  CLI::App* meq = app.add_subcommand("monoid-eq", "word problem in the quiver monoid");
  add_quiver(meq);
  meq->add_option("--depth", depth_arg,
                  "search depth (default: 8 plus the sizes of both sides)");
  meq->add_option("lhs", expr_a, "monoid element, e.g. \"v + 2*w\"")->required();
  meq->add_option("rhs", expr_b, "monoid element")->required();

  CLI::App* mref = app.add_subcommand("monoid-refine", "2x2 refinement of a monoid equality");
  add_quiver(mref);
  mref->add_option("--depth", depth_arg,
                   "search depth (default: 8 plus the sizes of all sides)");
  mref->add_option("x1", expr_a, "monoid element")->required();
  mref->add_option("x2", expr_b, "monoid element")->required();
  mref->add_option("y1", expr_c, "monoid element")->required();
  mref->add_option("y2", expr_d, "monoid element")->required();

  CLI::App* wit = app.add_subcommand("witness", "algebra witnesses of one basic transformation");
  add_quiver(wit);
  wit->add_option("vertex", expr_a, "receiving vertex name")->required();

  CLI::App* hig = app.add_subcommand("higman", "linearize a matrix over the path algebra");
  add_quiver(hig);
  hig->add_option("matrix", expr_a, "entries by comma, rows by semicolon")->required();

  CLI::App* reg = app.add_subcommand("regularize", "regularize p - D");
  add_quiver(reg);
  reg->add_option("--trunc", trunc, "display order for rational entries (default 8)");
  reg->add_option("p", expr_a, "idempotent scalar matrix")->required();
  reg->add_option("D", expr_b, "homogeneous degree-1 matrix")->required();

  CLI::App* subq = app.add_subcommand("subquiver", "complete subquiver containing the seed");
  add_quiver(subq);
  subq->add_option("seed", names, "seed vertex names")->required();

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.json_mode = json_mode;
  std::optional<size_t> depth;
  if (depth_arg >= 0) depth = static_cast<size_t>(depth_arg);
  int rc = 0;

  try {
    QuiverPtr E = quiver_from_json_file(quiver_path);

    if (check->parsed()) {
      rc = run_check(out, E, samples);
    } else if (nf->parsed() || mul->parsed() || st->parsed()) {
      EvalContext ctx{st->parsed() ? EvalMode::Series : eval_mode_from_string(ctx_name),
                      E, trunc};
      EvalValue v = nf->parsed() || st->parsed()
                        ? eval_text(ctx, expr_a)
                        : eval_expr(ctx, *expr_mul(parse_expr(expr_a),
                                                   parse_expr(expr_b)));
      std::string text = eval_value_to_string(v, trunc);
      out.line(text);
      out.field("command", nf->parsed() ? "nf" : (mul->parsed() ? "mul" : "series-trunc"));
      out.field("result", text);
      out.field("ok", true);
    } else if (rat_eq->parsed()) {
      EvalContext ctx{EvalMode::Rat, E, trunc};
      bool eq = rr_equals(std::get<RatRep>(eval_text(ctx, expr_a)),
                          std::get<RatRep>(eval_text(ctx, expr_b)));
      out.line(eq ? "equal" : "not equal");
      out.field("command", "rat-eq");
      out.field("equal", eq);
      out.field("ok", true);
      rc = eq ? 0 : 1;
    } else if (qeq->parsed()) {
      EvalContext ctx{EvalMode::Salg, E, trunc};
      QEqualResult r = q_equal(std::get<SElement>(eval_text(ctx, expr_a)),
                               std::get<SElement>(eval_text(ctx, expr_b)), depth);
      out.line((r.equal ? "equal at depth " : "not equal at depth ") +
               std::to_string(r.depth_used));
      out.field("command", "qeq");
      out.field("equal", r.equal);
      out.field("depth_used", r.depth_used);
      out.field("ok", true);
      rc = r.equal ? 0 : 1;
    } else if (meq->parsed()) {
      MonoidElem x = parse_monoid_arg(*E, expr_a);
      MonoidElem y = parse_monoid_arg(*E, expr_b);
      size_t d = depth.value_or(8 + monoid_degree(x) + monoid_degree(y));
      EquivalenceResult r = equivalent(*E, x, y, d);
      out.field("command", "monoid-eq");
      out.field("equivalent", r.equivalent);
      out.field("exhausted", r.exhausted);
      out.field("depth", d);
      out.field("ok", true);
      if (r.equivalent) {
        replay_certificate(*E, x, r.certificate);
        out.line("equivalent, certificate: " + certificate_to_text(r.certificate));
        out.field("certificate", certificate_to_json(r.certificate));
      } else {
        out.line(r.exhausted ? "not equivalent (search exhausted)"
                             : "not found within depth " + std::to_string(d));
        rc = 1;
      }
    } else if (mref->parsed()) {
      MonoidElem x1 = parse_monoid_arg(*E, expr_a);
      MonoidElem x2 = parse_monoid_arg(*E, expr_b);
      MonoidElem y1 = parse_monoid_arg(*E, expr_c);
      MonoidElem y2 = parse_monoid_arg(*E, expr_d);
      size_t d = depth.value_or(8 + monoid_degree(x1) + monoid_degree(x2) +
                                monoid_degree(y1) + monoid_degree(y2));
      RefinementResult r = refinement_search(*E, x1, x2, y1, y2, d);
      out.field("command", "monoid-refine");
      out.field("found", r.found);
      out.field("depth", d);
      out.field("ok", true);
      if (r.found) {
        json z = json::array();
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            out.line("z" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                     monoid_to_string(r.z[i][j]));
            z.push_back(monoid_to_string(r.z[i][j]));
          }
        out.field("z", z);
      } else {
        out.line("no refinement found within depth " + std::to_string(d));
        rc = 1;
      }
    } else if (wit->parsed()) {
      auto v = E->vertex_index(expr_a);
      if (!v) throw ParseError("unknown vertex: " + expr_a);
      WitnessPair w = witness_basic_transformation(E, *v);
      std::string row, col;
      for (size_t j = 0; j < w.row.size(); ++j) {
        row += (j ? ", " : "") + l_to_string(w.row[j]);
        col += (j ? ", " : "") + l_to_string(w.column[j]);
      }
      LElement sum = l_zero(E);
      for (size_t j = 0; j < w.row.size(); ++j)
        sum = l_add(sum, l_mul(w.column[j], w.row[j]));
      out.line("row: " + row);
      out.line("column: " + col);
      out.line("column * row = " + l_to_string(sum));
      out.field("command", "witness");
      out.field("row", row);
      out.field("column", col);
      out.field("column_times_row", l_to_string(sum));
      out.field("ok", true);
    } else if (hig->parsed()) {
      PolyMatrix M = parse_poly_matrix(E, expr_a);
      LinearizationResult r = higman_linearize(M);
      PolyMatrix bordered = M;
      for (size_t k = 0; k < r.ell; ++k)
        bordered = mat_block_diag(bordered, poly_matrix_identity(E, 1), poly_zero(E));
      bool ok = mat_mul(mat_mul(r.P, bordered), r.Q) == r.L &&
                max_path_length(r.L) <= 1;
      out.line("ell = " + std::to_string(r.ell));
      out.line("L = " + poly_matrix_to_text(r.L));
      out.line("P = " + poly_matrix_to_text(r.P));
      out.line("Q = " + poly_matrix_to_text(r.Q));
      out.line(std::string("identity P(M+I)Q = L: ") + (ok ? "ok" : "FAILED"));
      out.field("command", "higman");
      out.field("ell", r.ell);
      out.field("L", poly_matrix_to_json(r.L));
      out.field("P", poly_matrix_to_json(r.P));
      out.field("Q", poly_matrix_to_json(r.Q));
      out.field("identity_ok", ok);
      out.field("ok", ok);
      rc = ok ? 0 : 1;
    } else if (reg->parsed()) {
      KdMatrix p = to_kd_matrix(parse_poly_matrix(E, expr_a));
      PolyMatrix D = parse_poly_matrix(E, expr_b);
      RegularizationResult r = vnreg_regularize(p, D);
      bool vu_ok = rat_matrix_equals(mat_mul(r.v, rat_matrix_from_poly(r.u)),
                                     rat_matrix_from_poly(embed_kd(p)));
      out.line("stages = " + std::to_string(r.q_list.size()));
      out.line("q = " + poly_matrix_to_text(embed_kd(r.q)));
      out.line("u = " + poly_matrix_to_text(r.u));
      out.line("v = " + rat_matrix_to_text(r.v, trunc));
      out.line(std::string("v u = p: ") + (vu_ok ? "ok" : "FAILED"));
      out.field("command", "regularize");
      out.field("stages", r.q_list.size());
      out.field("q", poly_matrix_to_json(embed_kd(r.q)));
      out.field("u", poly_matrix_to_json(r.u));
      out.field("vu_ok", vu_ok);
      out.field("ok", vu_ok);
      rc = vu_ok ? 0 : 1;
    } else if (subq->parsed()) {
      QuiverPtr sub = complete_subquiver_containing(*E, names);
      std::string text = quiver_to_json_text(*sub);
      while (!text.empty() && text.back() == '\n') text.pop_back();
      out.line(text);
      out.field("command", "subquiver");
      out.field("quiver", json::parse(text));
      out.field("ok", true);
    }
  } catch (const Error& e) {
    if (json_mode) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    if (json_mode) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

  out.emit();
  return rc;
}
