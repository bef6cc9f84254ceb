#include "cliff/cliff.h"

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "cliff/expr.hpp"
#include "cliff/groups.hpp"
#include "cliff/quadratic_space.hpp"
#include "cliff/spinors.hpp"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <memory>
#include <new>
#include <sstream>
#include <string>

struct cliff_algebra {
  cliff::Signature sig;
  int cap;
};

struct cliff_mv {
  cliff::Multivector value;
};

struct cliff_mv_list {
  std::vector<cliff_mv> items;
};

struct cliff_matrix {
  cliff::RationalMatrix value;
};

struct cliff_ideal {
  cliff::IdealBasis value;
};

namespace {

thread_local std::string last_error;

cliff_status status_for(cliff::ErrorCode code) {
  using cliff::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidArgument: return CLIFF_E_INVALID_ARGUMENT;
  case ErrorCode::Parse: return CLIFF_E_PARSE;
  case ErrorCode::SignatureMismatch: return CLIFF_E_SIGNATURE_MISMATCH;
  case ErrorCode::DimensionCap: return CLIFF_E_DIMENSION_CAP;
  case ErrorCode::DimensionMismatch: return CLIFF_E_DIMENSION_MISMATCH;
  case ErrorCode::NotInvertible: return CLIFF_E_NOT_INVERTIBLE;
  case ErrorCode::NotAVector: return CLIFF_E_NOT_A_VECTOR;
  case ErrorCode::NotStable: return CLIFF_E_NOT_STABLE;
  case ErrorCode::NotInGroup: return CLIFF_E_NOT_IN_GROUP;
  case ErrorCode::DegenerateForm: return CLIFF_E_DEGENERATE_FORM;
  case ErrorCode::NotAnIsometry: return CLIFF_E_NOT_AN_ISOMETRY;
  case ErrorCode::IsotropicVector: return CLIFF_E_ISOTROPIC_VECTOR;
  case ErrorCode::ZeroVector: return CLIFF_E_ZERO_VECTOR;
  case ErrorCode::NotIdempotent: return CLIFF_E_NOT_IDEMPOTENT;
  case ErrorCode::NotSimple: return CLIFF_E_NOT_SIMPLE;
  case ErrorCode::NoSolution: return CLIFF_E_NO_SOLUTION;
  case ErrorCode::SearchFailed: return CLIFF_E_SEARCH_FAILED;
  case ErrorCode::UnexpectedDimension: return CLIFF_E_UNEXPECTED_DIMENSION;
  case ErrorCode::Internal: return CLIFF_E_INTERNAL;
  }
  return CLIFF_E_INTERNAL;
}

cliff_status set_error(cliff_status status, const std::string &message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
cliff_status guarded(Body &&body) {
  try {
    body();
    return CLIFF_OK;
  } catch (const cliff::Error &e) {
    return set_error(status_for(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(CLIFF_E_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(CLIFF_E_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void *p, const char *what) {
  if (!p)
    cliff::fail(cliff::ErrorCode::InvalidArgument, std::string("null ") + what);
}

cliff_mv *wrap(cliff::Multivector x) { return new cliff_mv{std::move(x)}; }
cliff_matrix *wrap(cliff::RationalMatrix m) { return new cliff_matrix{std::move(m)}; }

cliff_mv_list *wrap_list(const std::vector<cliff::Multivector> &xs) {
  auto list = std::make_unique<cliff_mv_list>();
  for (const auto &x : xs)
    list->items.push_back(cliff_mv{x});
  return list.release();
}

cliff::Vector as_vector(const cliff_matrix *m) {
  require(m, "vector");
  if (m->value.rows() == 1)
    return m->value.row(0);
  if (m->value.cols() == 1)
    return m->value.column(0);
  cliff::fail(cliff::ErrorCode::DimensionMismatch, "expected a single row or column");
}

cliff::RationalMatrix row_matrix(const cliff::Vector &v) { return cliff::RationalMatrix::from_rows({v}); }

cliff::BilinearForm as_form(const cliff_matrix *m) {
  require(m, "form");
  return cliff::BilinearForm(m->value);
}

cliff::RationalMatrix rows_of(const std::vector<cliff::Vector> &vs, std::size_t n) {
  if (vs.empty())
    return cliff::RationalMatrix(0, n);
  return cliff::RationalMatrix::from_rows(vs);
}

} // namespace

extern "C" {

const char *cliff_status_name(cliff_status status) {
  switch (status) {
  case CLIFF_OK: return "OK";
  case CLIFF_E_INVALID_ARGUMENT: return "InvalidArgument";
  case CLIFF_E_PARSE: return "ParseError";
  case CLIFF_E_SIGNATURE_MISMATCH: return "SignatureMismatch";
  case CLIFF_E_DIMENSION_CAP: return "DimensionCapExceeded";
  case CLIFF_E_DIMENSION_MISMATCH: return "DimensionMismatch";
  case CLIFF_E_NOT_INVERTIBLE: return "NotInvertible";
  case CLIFF_E_NOT_A_VECTOR: return "NotAVector";
  case CLIFF_E_NOT_STABLE: return "NotStable";
  case CLIFF_E_NOT_IN_GROUP: return "NotInGroup";
  case CLIFF_E_DEGENERATE_FORM: return "DegenerateForm";
  case CLIFF_E_NOT_AN_ISOMETRY: return "NotAnIsometry";
  case CLIFF_E_ISOTROPIC_VECTOR: return "IsotropicVector";
  case CLIFF_E_ZERO_VECTOR: return "ZeroVector";
  case CLIFF_E_NOT_IDEMPOTENT: return "NotIdempotent";
  case CLIFF_E_NOT_SIMPLE: return "NotSimple";
  case CLIFF_E_NO_SOLUTION: return "NoSolution";
  case CLIFF_E_SEARCH_FAILED: return "SearchFailed";
  case CLIFF_E_UNEXPECTED_DIMENSION: return "UnexpectedDimension";
  case CLIFF_E_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char *cliff_last_error(void) { return last_error.c_str(); }

void cliff_string_free(char *s) { std::free(s); }

const char *cliff_version(void) { return "0.1.0"; }

// ---- algebra --------------------------------------------------------------

cliff_status cliff_algebra_create(int p, int q, int s, int cap, cliff_algebra **out) {
  return guarded([&] {
    require(out, "output");
    if (cap == 0)
      cap = cliff::kDefaultDimensionCap;
    if (cap < 0 || cap > cliff::kMaxGenerators)
      cliff::fail(cliff::ErrorCode::InvalidArgument, "dimension cap must be in 1..16");
    cliff::Signature sig(p, q, s);
    if (sig.n() > cap)
      cliff::fail(cliff::ErrorCode::DimensionCap,
                  "dimension " + std::to_string(sig.n()) + " exceeds cap " + std::to_string(cap));
    *out = new cliff_algebra{sig, cap};
  });
}

cliff_status cliff_algebra_parse(const char *text, int cap, cliff_algebra **out) {
  return guarded([&] {
    require(text, "signature text");
    require(out, "output");
    std::vector<int> counts;
    std::string_view rest(text);
    for (;;) {
      auto comma = rest.find(',');
      std::string_view part = rest.substr(0, comma);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos || part.size() > 3)
        throw cliff::ParseError(0, "malformed signature '" + std::string(text) + "', expected p,q or p,q,s");
      counts.push_back(std::stoi(std::string(part)));
      if (comma == std::string_view::npos)
        break;
      rest.remove_prefix(comma + 1);
    }
    if (counts.size() != 2 && counts.size() != 3)
      throw cliff::ParseError(0, "malformed signature '" + std::string(text) + "', expected p,q or p,q,s");
    cliff_status st = cliff_algebra_create(counts[0], counts[1], counts.size() == 3 ? counts[2] : 0, cap, out);
    if (st != CLIFF_OK)
      throw cliff::Error(st == CLIFF_E_DIMENSION_CAP ? cliff::ErrorCode::DimensionCap : cliff::ErrorCode::InvalidArgument,
                         last_error);
  });
}

void cliff_algebra_free(cliff_algebra *alg) { delete alg; }

void cliff_algebra_signature(const cliff_algebra *alg, int *p, int *q, int *s) {
  if (!alg)
    return;
  if (p) *p = alg->sig.p;
  if (q) *q = alg->sig.q;
  if (s) *s = alg->sig.s;
}

int cliff_algebra_dimension(const cliff_algebra *alg) { return alg ? alg->sig.n() : 0; }

cliff_status cliff_blade_mul(const cliff_algebra *alg, uint32_t a, uint32_t b, int *coef, uint32_t *out) {
  return guarded([&] {
    require(alg, "algebra");
    if (a >= alg->sig.blade_count() || b >= alg->sig.blade_count())
      cliff::fail(cliff::ErrorCode::InvalidArgument, "blade mask outside the algebra");
    auto prod = cliff::blade_mul(cliff::Blade{a}, cliff::Blade{b}, alg->sig);
    if (coef) *coef = prod.coef;
    if (out) *out = prod.out.mask;
  });
}

cliff_status cliff_blade_name(const cliff_algebra *alg, uint32_t mask, char **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output");
    if (mask >= alg->sig.blade_count())
      cliff::fail(cliff::ErrorCode::InvalidArgument, "blade mask outside the algebra");
    *out = dup_string(cliff::expr::blade_name(cliff::Blade{mask}, alg->sig));
  });
}

// ---- multivectors ---------------------------------------------------------

cliff_status cliff_mv_parse(const cliff_algebra *alg, const char *text, cliff_mv **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(text, "expression");
    require(out, "output");
    *out = wrap(cliff::expr::evaluate(text, alg->sig));
  });
}

cliff_status cliff_mv_from_vector(const cliff_algebra *alg, const cliff_matrix *coords, cliff_mv **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output");
    *out = wrap(cliff::embed_vector(as_vector(coords), alg->sig));
  });
}

cliff_status cliff_mv_clone(const cliff_mv *x, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = wrap(x->value);
  });
}

void cliff_mv_free(cliff_mv *x) { delete x; }

cliff_status cliff_mv_to_string(const cliff_mv *x, char **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = dup_string(cliff::expr::pretty_print(x->value));
  });
}

cliff_status cliff_mv_to_approx_string(const cliff_mv *x, int digits, char **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = dup_string(cliff::expr::pretty_print_approx(x->value, digits > 0 ? digits : 6));
  });
}

int cliff_mv_equal(const cliff_mv *x, const cliff_mv *y) { return x && y && x->value == y->value; }

size_t cliff_mv_term_count(const cliff_mv *x) { return x ? x->value.term_count() : 0; }

cliff_status cliff_mv_term(const cliff_mv *x, size_t i, uint32_t *mask, char **coef) {
  return guarded([&] {
    require(x, "multivector");
    if (i >= x->value.term_count())
      cliff::fail(cliff::ErrorCode::InvalidArgument, "term index out of range");
    auto it = x->value.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(i));
    if (mask) *mask = it->first.mask;
    if (coef) *coef = dup_string(it->second.to_string());
  });
}

cliff_status cliff_mv_add(const cliff_mv *x, const cliff_mv *y, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(y, "multivector");
    require(out, "output");
    *out = wrap(cliff::add(x->value, y->value));
  });
}

cliff_status cliff_mv_mul(const cliff_mv *x, const cliff_mv *y, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(y, "multivector");
    require(out, "output");
    *out = wrap(cliff::geometric_product(x->value, y->value));
  });
}

cliff_status cliff_mv_scale(const cliff_mv *x, const char *rational, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(rational, "rational");
    require(out, "output");
    *out = wrap(cliff::scalar_mul(cliff::Rational::parse(rational), x->value));
  });
}

cliff_status cliff_mv_involution(const cliff_mv *x, cliff_involution kind, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    cliff::Involution k;
    switch (kind) {
    case CLIFF_INVOLUTION_GRADE: k = cliff::Involution::Grade; break;
    case CLIFF_INVOLUTION_REVERSE: k = cliff::Involution::Reverse; break;
    case CLIFF_INVOLUTION_CONJUGATE: k = cliff::Involution::Conjugate; break;
    default: cliff::fail(cliff::ErrorCode::InvalidArgument, "unknown involution");
    }
    *out = wrap(cliff::involution(x->value, k));
  });
}

cliff_status cliff_mv_grade(const cliff_mv *x, int k, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = wrap(cliff::grade_projection(x->value, k));
  });
}

cliff_status cliff_mv_norm(const cliff_mv *x, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = wrap(cliff::norm(x->value));
  });
}

cliff_status cliff_mv_inverse(const cliff_mv *x, cliff_mv **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    auto inv = cliff::inverse(x->value);
    if (!inv)
      cliff::fail(cliff::ErrorCode::NotInvertible, "element is not invertible");
    *out = wrap(*inv);
  });
}

// ---- lists ----------------------------------------------------------------

size_t cliff_mv_list_size(const cliff_mv_list *list) { return list ? list->items.size() : 0; }

const cliff_mv *cliff_mv_list_at(const cliff_mv_list *list, size_t i) {
  if (!list || i >= list->items.size())
    return nullptr;
  return &list->items[i];
}

void cliff_mv_list_free(cliff_mv_list *list) { delete list; }

// ---- matrices -------------------------------------------------------------

cliff_status cliff_matrix_parse(const char *text, cliff_matrix **out) {
  return guarded([&] {
    require(text, "matrix text");
    require(out, "output");
    *out = wrap(cliff::parse_matrix(text));
  });
}

void cliff_matrix_free(cliff_matrix *m) { delete m; }

size_t cliff_matrix_rows(const cliff_matrix *m) { return m ? m->value.rows() : 0; }
size_t cliff_matrix_cols(const cliff_matrix *m) { return m ? m->value.cols() : 0; }

cliff_status cliff_matrix_entry(const cliff_matrix *m, size_t r, size_t c, char **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "output");
    if (r >= m->value.rows() || c >= m->value.cols())
      cliff::fail(cliff::ErrorCode::InvalidArgument, "matrix index out of range");
    *out = dup_string(m->value(r, c).to_string());
  });
}

cliff_status cliff_matrix_to_string(const cliff_matrix *m, char **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "output");
    *out = dup_string(cliff::format_matrix(m->value));
  });
}

int cliff_matrix_equal(const cliff_matrix *a, const cliff_matrix *b) { return a && b && a->value == b->value; }

cliff_status cliff_matrix_mul(const cliff_matrix *a, const cliff_matrix *b, cliff_matrix **out) {
  return guarded([&] {
    require(a, "matrix");
    require(b, "matrix");
    require(out, "output");
    *out = wrap(a->value * b->value);
  });
}

cliff_status cliff_matrix_row(const cliff_matrix *m, size_t r, cliff_matrix **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "output");
    if (r >= m->value.rows())
      cliff::fail(cliff::ErrorCode::InvalidArgument, "row index out of range");
    *out = wrap(row_matrix(m->value.row(r)));
  });
}

cliff_status cliff_matrix_transpose(const cliff_matrix *m, cliff_matrix **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "output");
    *out = wrap(m->value.transpose());
  });
}

cliff_status cliff_matrix_identity(size_t n, cliff_matrix **out) {
  return guarded([&] {
    require(out, "output");
    *out = wrap(cliff::RationalMatrix::identity(n));
  });
}

// ---- quadratic spaces -----------------------------------------------------

cliff_status cliff_standard_form(const cliff_algebra *alg, cliff_matrix **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output");
    *out = wrap(cliff::BilinearForm::standard(alg->sig).matrix());
  });
}

cliff_status cliff_quadratic_value(const cliff_matrix *form, const cliff_matrix *v, char **out) {
  return guarded([&] {
    require(out, "output");
    *out = dup_string(cliff::quadratic_value(as_form(form), as_vector(v)).to_string());
  });
}

cliff_status cliff_classify_vector(const cliff_matrix *form, const cliff_matrix *v, cliff_vector_kind *out) {
  return guarded([&] {
    require(out, "output");
    switch (cliff::classify_vector(as_form(form), as_vector(v))) {
    case cliff::VectorKind::Lightlike: *out = CLIFF_LIGHTLIKE; break;
    case cliff::VectorKind::Timelike: *out = CLIFF_TIMELIKE; break;
    case cliff::VectorKind::Spacelike: *out = CLIFF_SPACELIKE; break;
    }
  });
}

cliff_status cliff_diagonalize(const cliff_matrix *form, cliff_matrix **basis, cliff_matrix **diag, int *p, int *q,
                               int *s) {
  return guarded([&] {
    auto result = cliff::orthogonal_diagonalize(as_form(form));
    if (basis) *basis = wrap(result.basis);
    if (diag) *diag = wrap(row_matrix(result.diag));
    if (p) *p = result.signature.p;
    if (q) *q = result.signature.q;
    if (s) *s = result.signature.s;
  });
}

cliff_status cliff_reflection(const cliff_matrix *form, const cliff_matrix *v, cliff_matrix **out) {
  return guarded([&] {
    require(out, "output");
    *out = wrap(cliff::reflection_matrix(as_form(form), as_vector(v)).matrix());
  });
}

cliff_status cliff_is_isometry(const cliff_matrix *form, const cliff_matrix *m, int *is_isometry, int *det_sign) {
  return guarded([&] {
    require(m, "matrix");
    const auto b = as_form(form);
    if (is_isometry) *is_isometry = cliff::is_isometry(b, m->value) ? 1 : 0;
    if (det_sign) *det_sign = m->value.square() ? m->value.determinant().sign() : 0;
  });
}

cliff_status cliff_factor(const cliff_matrix *form, const cliff_matrix *m, cliff_matrix **vectors, size_t *count) {
  return guarded([&] {
    require(m, "matrix");
    const auto b = as_form(form);
    auto result = cliff::cartan_dieudonne_factor(b, m->value);
    if (vectors) *vectors = wrap(rows_of(result.vectors, b.dimension()));
    if (count) *count = result.vectors.size();
  });
}

cliff_status cliff_compose_reflections(const cliff_matrix *form, const cliff_matrix *vectors, cliff_matrix **out) {
  return guarded([&] {
    require(vectors, "vectors");
    require(out, "output");
    const auto b = as_form(form);
    std::vector<cliff::Vector> ws;
    for (std::size_t r = 0; r < vectors->value.rows(); ++r)
      ws.push_back(vectors->value.row(r));
    *out = wrap(cliff::compose_reflections(b, ws));
  });
}

// ---- groups ---------------------------------------------------------------

cliff_status cliff_group_check(const cliff_mv *x, cliff_group_report *out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    cliff_group_report r{};
    r.invertible = cliff::inverse(x->value).has_value();
    r.in_clifford_group = cliff::in_clifford_group(x->value);
    cliff::Multivector n = cliff::norm(x->value);
    r.norm_is_scalar = n.is_scalar();
    r.in_pin = cliff::in_pin(x->value);
    r.in_spin = cliff::in_spin(x->value);
    *out = r;
  });
}

cliff_status cliff_twisted_adjoint_apply(const cliff_mv *x, const cliff_matrix *v, cliff_matrix **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = wrap(row_matrix(cliff::twisted_adjoint_apply(x->value, as_vector(v))));
  });
}

cliff_status cliff_twisted_adjoint_matrix(const cliff_mv *x, cliff_matrix **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = wrap(cliff::twisted_adjoint_matrix(x->value).matrix());
  });
}

cliff_status cliff_norm_scalar(const cliff_mv *x, char **out) {
  return guarded([&] {
    require(x, "multivector");
    require(out, "output");
    *out = dup_string(cliff::norm_scalar(x->value).to_string());
  });
}

cliff_status cliff_lift(const cliff_algebra *alg, const cliff_matrix *m, cliff_mv **element, char **n_value,
                        char **approx, cliff_lift_info *info) {
  return guarded([&] {
    require(alg, "algebra");
    require(m, "matrix");
    auto result = cliff::lift_isometry(alg->sig, m->value);
    if (approx) {
      *approx = nullptr;
      if (result.needs_normalization) {
        std::ostringstream os;
        bool first = true;
        for (const auto &[b, c] : result.approx_normalized) {
          const bool negative = c < 0;
          os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
          first = false;
          os << std::setprecision(6) << (negative ? -c : c);
          if (!b.is_scalar())
            os << '*' << cliff::expr::blade_name(b, alg->sig);
        }
        *approx = dup_string(first ? "0" : os.str());
      }
    }
    if (n_value) *n_value = dup_string(result.n_value.to_string());
    if (info) {
      info->reflection_count = result.reflection_count;
      info->within_n = result.within_n;
      info->needs_normalization = result.needs_normalization;
    }
    if (element) *element = wrap(result.element);
  });
}

// ---- spinors --------------------------------------------------------------

int cliff_radon_hurwitz(int j) { return cliff::radon_hurwitz(j); }

cliff_status cliff_idempotent_exponent(const cliff_algebra *alg, int *k) {
  return guarded([&] {
    require(alg, "algebra");
    require(k, "output");
    *k = cliff::idempotent_count_exponent(alg->sig);
  });
}

cliff_status cliff_idempotents(const cliff_algebra *alg, cliff_mv_list **idems, cliff_mv_list **blades,
                               cliff_idempotent_report *report) {
  return guarded([&] {
    require(alg, "algebra");
    auto set = cliff::primitive_idempotents(alg->sig);
    if (report) {
      auto checks = cliff::verify_idempotent_set(set.idems, alg->sig);
      report->idempotent = checks.idempotent;
      report->orthogonal = checks.orthogonal;
      report->sums_to_one = checks.sums_to_one;
    }
    if (blades) {
      std::vector<cliff::Multivector> bs;
      for (auto b : set.generating_blades.blades)
        bs.push_back(cliff::Multivector::blade(alg->sig, b));
      *blades = wrap_list(bs);
    }
    if (idems) *idems = wrap_list(set.idems);
  });
}

cliff_status cliff_ideal_minimal(const cliff_algebra *alg, cliff_ideal **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output");
    *out = new cliff_ideal{cliff::minimal_ideal(alg->sig)};
  });
}

cliff_status cliff_ideal_faithful(const cliff_algebra *alg, cliff_ideal **out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output");
    *out = new cliff_ideal{cliff::faithful_ideal(alg->sig)};
  });
}

cliff_status cliff_ideal_from_idempotent(const cliff_mv *f, cliff_ideal **out) {
  return guarded([&] {
    require(f, "idempotent");
    require(out, "output");
    *out = new cliff_ideal{cliff::left_ideal_basis(f->value)};
  });
}

void cliff_ideal_free(cliff_ideal *ideal) { delete ideal; }

size_t cliff_ideal_dim(const cliff_ideal *ideal) { return ideal ? ideal->value.dim() : 0; }

cliff_status cliff_ideal_generator(const cliff_ideal *ideal, cliff_mv **out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = wrap(ideal->value.generator());
  });
}

cliff_status cliff_ideal_basis(const cliff_ideal *ideal, cliff_mv_list **out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = wrap_list(ideal->value.basis());
  });
}

cliff_status cliff_ideal_is_faithful(const cliff_ideal *ideal, int *out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "output");
    *out = cliff::is_faithful(ideal->value);
  });
}

cliff_status cliff_division_ring(const cliff_mv *f, size_t *dim, const char **kind, cliff_mv_list **basis) {
  return guarded([&] {
    require(f, "idempotent");
    auto info = cliff::division_ring_info(f->value);
    if (dim) *dim = info.dim;
    if (kind) *kind = cliff::to_string(info.kind);
    if (basis) *basis = wrap_list(info.basis);
  });
}

cliff_status cliff_rep_matrix(const cliff_ideal *ideal, const cliff_mv *x, cliff_matrix **out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(x, "multivector");
    require(out, "output");
    *out = wrap(cliff::regular_rep_matrix(x->value, ideal->value));
  });
}

cliff_status cliff_center(const cliff_algebra *alg, cliff_mv_list **basis, int *is_simple) {
  return guarded([&] {
    require(alg, "algebra");
    auto center = cliff::algebra_center(alg->sig);
    if (is_simple) *is_simple = cliff::is_simple(alg->sig);
    if (basis) *basis = wrap_list(center);
  });
}

cliff_status cliff_interbasis(const cliff_mv *fi, const cliff_mv *fj, cliff_mv **e_ij, cliff_mv **e_ji) {
  return guarded([&] {
    require(fi, "idempotent");
    require(fj, "idempotent");
    auto pair = cliff::interbasis_element(fi->value, fj->value);
    if (e_ij) *e_ij = wrap(pair.e_ij);
    if (e_ji) *e_ji = wrap(pair.e_ji);
  });
}

cliff_status cliff_intertwiner(const cliff_mv *fi, const cliff_mv *fj, cliff_matrix **forward,
                               cliff_matrix **backward) {
  return guarded([&] {
    require(fi, "idempotent");
    require(fj, "idempotent");
    auto tw = cliff::representation_intertwiner(fi->value, fj->value);
    if (forward) *forward = wrap(tw.forward);
    if (backward) *backward = wrap(tw.backward);
  });
}

} // extern "C"
