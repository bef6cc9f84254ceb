// Command-line front end. Talks to the library only through cliff.h.

#include "cliff/cliff.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class Failure : public std::runtime_error {
public:
  Failure(int code, const std::string &what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

int exit_code_for(cliff_status s) {
  switch (s) {
  case CLIFF_E_PARSE:
  case CLIFF_E_INVALID_ARGUMENT:
  case CLIFF_E_DIMENSION_MISMATCH:
  case CLIFF_E_DIMENSION_CAP:
  case CLIFF_E_SIGNATURE_MISMATCH:
    return kExitUsage;
  default:
    return kExitDomain;
  }
}

void check(cliff_status s) {
  if (s != CLIFF_OK)
    throw Failure(exit_code_for(s), std::string(cliff_status_name(s)) + ": " + cliff_last_error());
}

template <class T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};

using Algebra = std::unique_ptr<cliff_algebra, Deleter<cliff_algebra, cliff_algebra_free>>;
using Mv = std::unique_ptr<cliff_mv, Deleter<cliff_mv, cliff_mv_free>>;
using MvList = std::unique_ptr<cliff_mv_list, Deleter<cliff_mv_list, cliff_mv_list_free>>;
using Matrix = std::unique_ptr<cliff_matrix, Deleter<cliff_matrix, cliff_matrix_free>>;
using Ideal = std::unique_ptr<cliff_ideal, Deleter<cliff_ideal, cliff_ideal_free>>;

std::string take(char *s) {
  std::string out = s ? s : "";
  cliff_string_free(s);
  return out;
}

struct Options {
  bool json = false;
  bool approx = false;
  int cap = 0;
  std::string sig;
  std::string expr;
  std::string matrix;
  std::string vector;
  bool faithful = false;
  bool minimal = false;
  int i = 1;
  int j = 2;
};

struct Report {
  std::string command;
  std::optional<std::string> signature;
  json result = json::object();
  json checks = json::object();
  // Replaces the generic text rendering when set.
  std::optional<std::string> text;
};

// ---- library wrappers -----------------------------------------------------

Algebra open_algebra(const Options &o) {
  if (o.sig.empty())
    throw Failure(kExitUsage, "--sig is required");
  cliff_algebra *alg = nullptr;
  check(cliff_algebra_parse(o.sig.c_str(), o.cap, &alg));
  return Algebra(alg);
}

std::string signature_text(const cliff_algebra *alg) {
  int p, q, s;
  cliff_algebra_signature(alg, &p, &q, &s);
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s);
}

Mv parse_mv(const cliff_algebra *alg, const std::string &text) {
  cliff_mv *x = nullptr;
  check(cliff_mv_parse(alg, text.c_str(), &x));
  return Mv(x);
}

Matrix parse_matrix(const std::string &text) {
  cliff_matrix *m = nullptr;
  check(cliff_matrix_parse(text.c_str(), &m));
  return Matrix(m);
}

Matrix standard_form(const cliff_algebra *alg) {
  cliff_matrix *m = nullptr;
  check(cliff_standard_form(alg, &m));
  return Matrix(m);
}

Matrix identity(std::size_t n) {
  cliff_matrix *m = nullptr;
  check(cliff_matrix_identity(n, &m));
  return Matrix(m);
}

Matrix transpose(const cliff_matrix *m) {
  cliff_matrix *t = nullptr;
  check(cliff_matrix_transpose(m, &t));
  return Matrix(t);
}

Matrix mul(const cliff_matrix *a, const cliff_matrix *b) {
  cliff_matrix *m = nullptr;
  check(cliff_matrix_mul(a, b, &m));
  return Matrix(m);
}

Mv mul(const cliff_mv *a, const cliff_mv *b) {
  cliff_mv *m = nullptr;
  check(cliff_mv_mul(a, b, &m));
  return Mv(m);
}

std::string entry(const cliff_matrix *m, std::size_t r, std::size_t c) {
  char *s = nullptr;
  check(cliff_matrix_entry(m, r, c, &s));
  return take(s);
}

std::string mv_text(const cliff_mv *x) {
  char *s = nullptr;
  check(cliff_mv_to_string(x, &s));
  return take(s);
}

std::string mv_approx(const cliff_mv *x) {
  char *s = nullptr;
  check(cliff_mv_to_approx_string(x, 6, &s));
  return take(s);
}

json matrix_json(const cliff_matrix *m) {
  json rows = json::array();
  for (std::size_t r = 0; r < cliff_matrix_rows(m); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cliff_matrix_cols(m); ++c)
      row.push_back(entry(m, r, c));
    rows.push_back(row);
  }
  return rows;
}

json row_json(const cliff_matrix *m, std::size_t r) {
  json row = json::array();
  for (std::size_t c = 0; c < cliff_matrix_cols(m); ++c)
    row.push_back(entry(m, r, c));
  return row;
}

json list_json(const cliff_mv_list *list) {
  json out = json::array();
  for (std::size_t i = 0; i < cliff_mv_list_size(list); ++i)
    out.push_back(mv_text(cliff_mv_list_at(list, i)));
  return out;
}

std::string vector_argument(const Options &o) {
  std::string v = !o.vector.empty() ? o.vector : o.expr;
  if (v.empty())
    throw Failure(kExitUsage, "a vector is required (--vector \"v1,...,vn\")");
  return v;
}

std::string matrix_argument(const Options &o) {
  std::string m = !o.matrix.empty() ? o.matrix : o.expr;
  if (m.empty())
    throw Failure(kExitUsage, "a matrix is required (--matrix \"a,b;c,d\")");
  return m;
}

std::string expr_argument(const Options &o) {
  if (o.expr.empty())
    throw Failure(kExitUsage, "an expression argument is required");
  return o.expr;
}

// ---- commands -------------------------------------------------------------

void cmd_table(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  int p, q, s;
  cliff_algebra_signature(alg.get(), &p, &q, &s);
  const int n = cliff_algebra_dimension(alg.get());
  const std::uint32_t count = std::uint32_t{1} << n;

  std::vector<std::string> names(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    char *name = nullptr;
    check(cliff_blade_name(alg.get(), m, &name));
    names[m] = take(name);
  }

  bool closed = true;
  std::vector<std::vector<std::string>> cells(count, std::vector<std::string>(count));
  std::vector<std::vector<std::pair<int, std::uint32_t>>> raw(count, std::vector<std::pair<int, std::uint32_t>>(count));
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      int coef = 0;
      std::uint32_t out = 0;
      check(cliff_blade_mul(alg.get(), a, b, &coef, &out));
      raw[a][b] = {coef, out};
      closed = closed && coef >= -1 && coef <= 1 && out < count;
      cells[a][b] = coef == 0 ? "0" : (coef < 0 ? "-" : "") + names[out < count ? out : 0];
    }

  bool anticommute = true, squares = true;
  for (int j = 0; j < n; ++j) {
    const std::uint32_t ej = std::uint32_t{1} << j;
    const int metric = j < p ? 1 : (j < p + q ? -1 : 0);
    squares = squares && raw[ej][ej].first == metric && (metric == 0 || raw[ej][ej].second == 0);
    for (int k = 0; k < n; ++k) {
      if (j == k)
        continue;
      const std::uint32_t ek = std::uint32_t{1} << k;
      anticommute = anticommute && raw[ej][ek].second == raw[ek][ej].second && raw[ej][ek].first == -raw[ek][ej].first;
    }
  }

  rep.result["blades"] = names;
  rep.result["products"] = cells;
  rep.checks["closed"] = closed;
  rep.checks["anticommute"] = anticommute;
  rep.checks["generator_squares"] = squares;

  std::size_t width = 1;
  for (const auto &row : cells)
    for (const auto &c : row)
      width = std::max(width, c.size());
  for (const auto &nm : names)
    width = std::max(width, nm.size());
  auto pad = [&](const std::string &s) { return std::string(width - s.size() + 1, ' ') + s; };
  std::string text = std::string(width + 1, ' ') + " |";
  for (const auto &nm : names)
    text += pad(nm);
  text += "\n" + std::string((width + 1) * (count + 1) + 2, '-') + "\n";
  for (std::uint32_t a = 0; a < count; ++a) {
    text += pad(names[a]) + " |";
    for (std::uint32_t b = 0; b < count; ++b)
      text += pad(cells[a][b]);
    text += "\n";
  }
  text += std::string("closed: ") + (closed ? "pass" : "FAIL") + "  anticommute: " + (anticommute ? "pass" : "FAIL") +
          "  generator_squares: " + (squares ? "pass" : "FAIL") + "\n";
  rep.text = text;
}

void cmd_eval(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Mv x = parse_mv(alg.get(), expr_argument(o));
  const std::string value = mv_text(x.get());
  rep.result["value"] = value;
  std::string text = value + "\n";
  if (o.approx) {
    rep.result["approx"] = mv_approx(x.get());
    text += "~ " + rep.result["approx"].get<std::string>() + "\n";
  }
  rep.text = text;
}

void cmd_classify(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Matrix form = standard_form(alg.get());
  Matrix v = parse_matrix(vector_argument(o));
  char *phi = nullptr;
  check(cliff_quadratic_value(form.get(), v.get(), &phi));
  cliff_vector_kind kind;
  check(cliff_classify_vector(form.get(), v.get(), &kind));
  static const char *names[] = {"lightlike", "timelike", "spacelike"};
  rep.result["kind"] = names[kind];
  rep.result["phi"] = take(phi);
}

void cmd_diagonalize(const Options &o, Report &rep) {
  Matrix form;
  if (!o.matrix.empty() || o.sig.empty()) {
    form = parse_matrix(matrix_argument(o));
  } else {
    Algebra alg = open_algebra(o);
    rep.signature = signature_text(alg.get());
    form = standard_form(alg.get());
  }
  cliff_matrix *basis = nullptr, *diag = nullptr;
  int p, q, s;
  check(cliff_diagonalize(form.get(), &basis, &diag, &p, &q, &s));
  Matrix b(basis), d(diag);

  // P^T B P must equal diag(d) exactly.
  Matrix congruent = mul(transpose(b.get()).get(), mul(form.get(), b.get()).get());
  bool diagonal_ok = true;
  const std::size_t n = cliff_matrix_rows(congruent.get());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      diagonal_ok = diagonal_ok && entry(congruent.get(), r, c) == (r == c ? entry(d.get(), 0, r) : "0");

  rep.result["basis"] = matrix_json(b.get());
  rep.result["diagonal"] = row_json(d.get(), 0);
  rep.result["signature"] = std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s);
  rep.result["degenerate"] = s > 0;
  rep.checks["congruence"] = diagonal_ok;
}

void cmd_reflect(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Matrix form = standard_form(alg.get());
  Matrix v = parse_matrix(vector_argument(o));
  cliff_matrix *refl = nullptr;
  check(cliff_reflection(form.get(), v.get(), &refl));
  Matrix m(refl);
  char *phi = nullptr;
  check(cliff_quadratic_value(form.get(), v.get(), &phi));
  int iso = 0, det = 0;
  check(cliff_is_isometry(form.get(), m.get(), &iso, &det));
  Matrix sq = mul(m.get(), m.get());
  Matrix id = identity(cliff_matrix_rows(m.get()));

  rep.result["matrix"] = matrix_json(m.get());
  rep.result["phi"] = take(phi);
  rep.checks["isometry"] = iso != 0;
  rep.checks["det_minus_one"] = det == -1;
  rep.checks["involutive"] = cliff_matrix_equal(sq.get(), id.get()) != 0;
}

void cmd_factor(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Matrix form = standard_form(alg.get());
  Matrix m = parse_matrix(matrix_argument(o));
  cliff_matrix *vecs = nullptr;
  std::size_t count = 0;
  check(cliff_factor(form.get(), m.get(), &vecs, &count));
  Matrix vectors(vecs);
  const auto n = static_cast<std::size_t>(cliff_algebra_dimension(alg.get()));

  json list = json::array();
  for (std::size_t r = 0; r < count; ++r)
    list.push_back(row_json(vectors.get(), r));
  cliff_matrix *back = nullptr;
  check(cliff_compose_reflections(form.get(), vectors.get(), &back));
  Matrix recomposed(back);

  rep.result["vectors"] = list;
  rep.result["count"] = count;
  rep.result["within_n"] = count <= n;
  rep.checks["recomposes"] = cliff_matrix_equal(recomposed.get(), m.get()) != 0;
  rep.checks["count_at_most_2n"] = count <= 2 * n;
}

bool is_even(const cliff_mv *x) {
  cliff_mv *g = nullptr;
  check(cliff_mv_involution(x, CLIFF_INVOLUTION_GRADE, &g));
  Mv gi(g);
  return cliff_mv_equal(gi.get(), x) != 0;
}

void cmd_lift(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Matrix m = parse_matrix(matrix_argument(o));
  cliff_mv *element = nullptr;
  char *n_value = nullptr, *approx = nullptr;
  cliff_lift_info info{};
  check(cliff_lift(alg.get(), m.get(), &element, &n_value, &approx, &info));
  Mv x(element);
  std::string n_text = take(n_value);
  std::string approx_text = take(approx);

  cliff_matrix *rho = nullptr;
  check(cliff_twisted_adjoint_matrix(x.get(), &rho));
  Matrix r(rho);
  Matrix form = standard_form(alg.get());
  int iso = 0, det = 0;
  check(cliff_is_isometry(form.get(), m.get(), &iso, &det));

  rep.result["element"] = mv_text(x.get());
  rep.result["n_value"] = n_text;
  rep.result["reflection_count"] = info.reflection_count;
  rep.result["within_n"] = info.within_n != 0;
  rep.result["needs_normalization"] = info.needs_normalization != 0;
  rep.result["det"] = det;
  if (info.needs_normalization)
    rep.result["approx_normalized"] = approx_text;
  else if (o.approx)
    rep.result["approx"] = mv_approx(x.get());
  rep.checks["rho_matches"] = cliff_matrix_equal(r.get(), m.get()) != 0;
  rep.checks["parity_matches"] = det != 1 || is_even(x.get());
}

void cmd_check(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Mv x = parse_mv(alg.get(), expr_argument(o));
  cliff_group_report g{};
  check(cliff_group_check(x.get(), &g));
  cliff_mv *nx = nullptr;
  check(cliff_mv_norm(x.get(), &nx));
  Mv norm(nx);

  rep.result["value"] = mv_text(x.get());
  rep.result["invertible"] = g.invertible != 0;
  rep.result["in_clifford_group"] = g.in_clifford_group != 0;
  rep.result["norm"] = mv_text(norm.get());
  if (o.approx)
    rep.result["norm_approx"] = mv_approx(norm.get());
  rep.result["norm_is_scalar"] = g.norm_is_scalar != 0;
  rep.result["in_pin"] = g.in_pin != 0;
  rep.result["in_spin"] = g.in_spin != 0;
  if (g.in_clifford_group) {
    cliff_matrix *rho = nullptr;
    check(cliff_twisted_adjoint_matrix(x.get(), &rho));
    Matrix r(rho);
    Matrix id = identity(cliff_matrix_rows(r.get()));
    rep.result["rho"] = matrix_json(r.get());
    rep.result["rho_is_identity"] = cliff_matrix_equal(r.get(), id.get()) != 0;
  } else {
    rep.result["rho"] = nullptr;
  }
  rep.checks["spin_implies_pin"] = !g.in_spin || g.in_pin;
  rep.checks["pin_implies_group"] = !g.in_pin || g.in_clifford_group;
}

void cmd_idempotents(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  int k = 0;
  check(cliff_idempotent_exponent(alg.get(), &k));
  cliff_mv_list *idems = nullptr, *blades = nullptr;
  cliff_idempotent_report r{};
  check(cliff_idempotents(alg.get(), &idems, &blades, &r));
  MvList fi(idems), bl(blades);

  rep.result["k"] = k;
  rep.result["count"] = cliff_mv_list_size(fi.get());
  rep.result["blades"] = list_json(bl.get());
  rep.result["idempotents"] = list_json(fi.get());
  rep.checks["idempotent"] = r.idempotent != 0;
  rep.checks["orthogonal"] = r.orthogonal != 0;
  rep.checks["sums_to_one"] = r.sums_to_one != 0;
  rep.checks["count_is_2_to_k"] = cliff_mv_list_size(fi.get()) == (std::size_t{1} << k);
}

json division_ring_json(const cliff_algebra *alg) {
  cliff_mv_list *idems = nullptr;
  cliff_idempotent_report r{};
  check(cliff_idempotents(alg, &idems, nullptr, &r));
  MvList fi(idems);
  std::size_t dim = 0;
  const char *kind = nullptr;
  cliff_mv_list *basis = nullptr;
  check(cliff_division_ring(cliff_mv_list_at(fi.get(), 0), &dim, &kind, &basis));
  MvList b(basis);
  json out = json::object();
  out["kind"] = kind;
  out["dim"] = dim;
  out["basis"] = list_json(b.get());
  return out;
}

Ideal open_ideal(const cliff_algebra *alg, bool faithful) {
  cliff_ideal *ideal = nullptr;
  check(faithful ? cliff_ideal_faithful(alg, &ideal) : cliff_ideal_minimal(alg, &ideal));
  return Ideal(ideal);
}

void cmd_ideal(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Ideal ideal = open_ideal(alg.get(), o.faithful);
  cliff_mv *gen = nullptr;
  check(cliff_ideal_generator(ideal.get(), &gen));
  Mv g(gen);
  cliff_mv_list *basis = nullptr;
  check(cliff_ideal_basis(ideal.get(), &basis));
  MvList b(basis);
  int faithful = 0;
  check(cliff_ideal_is_faithful(ideal.get(), &faithful));

  rep.result["ideal"] = o.faithful ? "faithful" : "minimal";
  rep.result["generator"] = mv_text(g.get());
  rep.result["dim"] = cliff_ideal_dim(ideal.get());
  rep.result["basis"] = list_json(b.get());
  rep.result["faithful"] = faithful != 0;
  rep.result["division_ring"] = division_ring_json(alg.get());
  if (o.faithful)
    rep.checks["faithful"] = faithful != 0;
}

void cmd_rep(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  Mv x = parse_mv(alg.get(), expr_argument(o));
  Ideal ideal = open_ideal(alg.get(), !o.minimal);
  cliff_matrix *m = nullptr;
  check(cliff_rep_matrix(ideal.get(), x.get(), &m));
  Matrix r(m);
  int faithful = 0;
  check(cliff_ideal_is_faithful(ideal.get(), &faithful));

  rep.result["value"] = mv_text(x.get());
  rep.result["ideal"] = o.minimal ? "minimal" : "faithful";
  rep.result["ideal_dim"] = cliff_ideal_dim(ideal.get());
  rep.result["faithful"] = faithful != 0;
  rep.result["matrix"] = matrix_json(r.get());
}

void cmd_center(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  cliff_mv_list *basis = nullptr;
  int simple = 0;
  check(cliff_center(alg.get(), &basis, &simple));
  MvList b(basis);
  rep.result["basis"] = list_json(b.get());
  rep.result["dim"] = cliff_mv_list_size(b.get());
  rep.result["simple"] = simple != 0;
}

void cmd_intertwine(const Options &o, Report &rep) {
  Algebra alg = open_algebra(o);
  rep.signature = signature_text(alg.get());
  cliff_mv_list *idems = nullptr;
  cliff_idempotent_report r{};
  check(cliff_idempotents(alg.get(), &idems, nullptr, &r));
  MvList f(idems);
  const auto count = static_cast<int>(cliff_mv_list_size(f.get()));
  if (o.i < 1 || o.i > count || o.j < 1 || o.j > count)
    throw Failure(kExitUsage, "idempotent indices must lie in 1.." + std::to_string(count));
  const cliff_mv *fi = cliff_mv_list_at(f.get(), static_cast<std::size_t>(o.i - 1));
  const cliff_mv *fj = cliff_mv_list_at(f.get(), static_cast<std::size_t>(o.j - 1));

  cliff_mv *eij = nullptr, *eji = nullptr;
  check(cliff_interbasis(fi, fj, &eij, &eji));
  Mv e_ij(eij), e_ji(eji);
  cliff_matrix *fw = nullptr, *bw = nullptr;
  check(cliff_intertwiner(fi, fj, &fw, &bw));
  Matrix forward(fw), backward(bw);

  Mv left = mul(e_ij.get(), e_ji.get());
  Mv right = mul(e_ji.get(), e_ij.get());
  Matrix round = mul(backward.get(), forward.get());
  Matrix id = identity(cliff_matrix_rows(round.get()));

  rep.result["f_i"] = mv_text(fi);
  rep.result["f_j"] = mv_text(fj);
  rep.result["e_ij"] = mv_text(e_ij.get());
  rep.result["e_ji"] = mv_text(e_ji.get());
  rep.result["forward"] = matrix_json(forward.get());
  rep.result["backward"] = matrix_json(backward.get());
  rep.checks["e_ij_e_ji_is_f_i"] = cliff_mv_equal(left.get(), fi) != 0;
  rep.checks["e_ji_e_ij_is_f_j"] = cliff_mv_equal(right.get(), fj) != 0;
  rep.checks["inverse_pair"] = cliff_matrix_equal(round.get(), id.get()) != 0;
}

// ---- rendering ------------------------------------------------------------

std::string scalar_text(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "none";
  return v.dump();
}

bool is_matrix(const json &v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json &r) { return r.is_array(); });
}

void render_value(std::string &out, const std::string &indent, const std::string &key, const json &v) {
  if (is_matrix(v)) {
    out += indent + key + ":\n";
    std::size_t width = 1;
    for (const auto &row : v)
      for (const auto &c : row)
        width = std::max(width, scalar_text(c).size());
    for (const auto &row : v) {
      out += indent + "  [";
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string s = scalar_text(row[c]);
        out += (c ? ", " : "") + std::string(width - s.size(), ' ') + s;
      }
      out += "]\n";
    }
  } else if (v.is_array()) {
    out += indent + key + ":" + (v.empty() ? " (none)" : "") + "\n";
    for (const auto &item : v)
      out += indent + "  " + scalar_text(item) + "\n";
  } else if (v.is_object()) {
    out += indent + key + ":\n";
    for (const auto &[k, sub] : v.items())
      render_value(out, indent + "  ", k, sub);
  } else {
    out += indent + key + ": " + scalar_text(v) + "\n";
  }
}

std::string render_text(const Report &rep) {
  if (rep.text)
    return *rep.text;
  std::string out;
  for (const auto &[k, v] : rep.result.items())
    render_value(out, "", k, v);
  if (!rep.checks.empty()) {
    out += "checks:\n";
    for (const auto &[k, v] : rep.checks.items())
      out += "  " + k + ": " + (v.get<bool>() ? "pass" : "FAIL") + "\n";
  }
  return out;
}

bool all_checks_pass(const Report &rep) {
  for (const auto &[k, v] : rep.checks.items())
    if (!v.get<bool>())
      return false;
  return true;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in real Clifford algebras Cl(p,q,s)", "cliff"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit one JSON object instead of text");
  app.add_flag("--approx", o.approx, "Add decimal renderings (display only)");
  app.add_option("--cap", o.cap, "Dimension cap for the algebra (default 10, at most 16)")->check(CLI::Range(0, 16));

  using Handler = void (*)(const Options &, Report &);
  struct Command {
    const char *name;
    const char *help;
    Handler run;
  };
  const Command commands[] = {
      {"table", "Blade multiplication table", cmd_table},
      {"eval", "Evaluate an expression to canonical form", cmd_eval},
      {"classify", "Classify a vector as lightlike, timelike or spacelike", cmd_classify},
      {"diagonalize", "Orthogonal basis and signature of a symmetric form", cmd_diagonalize},
      {"reflect", "Hyperplane reflection matrix of an anisotropic vector", cmd_reflect},
      {"factor", "Write an isometry as a product of reflections", cmd_factor},
      {"lift", "Lift an isometry to the Clifford group", cmd_lift},
      {"check", "Clifford group, Pin and Spin membership", cmd_check},
      {"idempotents", "Complete set of primitive orthogonal idempotents", cmd_idempotents},
      {"ideal", "Minimal (or faithful) left ideal", cmd_ideal},
      {"rep", "Left regular representation matrix on an ideal", cmd_rep},
      {"center", "Center of the algebra and simplicity", cmd_center},
      {"intertwine", "Interbasis elements and intertwiner between two idempotents", cmd_intertwine},
  };

  Handler chosen = nullptr;
  std::string chosen_name;
  for (const auto &c : commands) {
    CLI::App *sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--sig", o.sig, "Signature p,q or p,q,s");
    const std::string name = c.name;
    if (name == "eval" || name == "check" || name == "rep")
      sub->add_option("expr", o.expr, "Multivector expression")->required();
    if (name == "classify" || name == "reflect")
      sub->add_option("coords", o.expr, "Vector v1,...,vn");
    if (name == "classify" || name == "reflect")
      sub->add_option("--vector", o.vector, "Vector v1,...,vn");
    if (name == "diagonalize" || name == "factor" || name == "lift")
      sub->add_option("--matrix", o.matrix, "Matrix a,b;c,d");
    if (name == "ideal")
      sub->add_flag("--faithful", o.faithful, "Faithful ideal instead of a minimal one");
    if (name == "rep")
      sub->add_flag("--minimal", o.minimal, "Use a minimal ideal instead of the faithful one");
    if (name == "intertwine") {
      sub->add_option("--i", o.i, "First idempotent (1-based)");
      sub->add_option("--j", o.j, "Second idempotent (1-based)");
    }
    sub->callback([&chosen, &chosen_name, c] {
      chosen = c.run;
      chosen_name = c.name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report rep;
  rep.command = chosen_name;
  try {
    chosen(o, rep);
  } catch (const Failure &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  }

  if (o.json) {
    json out = json::object();
    out["command"] = rep.command;
    out["signature"] = rep.signature ? json(*rep.signature) : json(nullptr);
    out["result"] = rep.result;
    out["checks"] = rep.checks;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  if (!all_checks_pass(rep)) {
    std::cerr << "error: a self-check failed\n";
    return kExitDomain;
  }
  return 0;
}
