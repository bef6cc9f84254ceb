#include "cliff/groups.hpp"

#include "cliff/error.hpp"

#include <cmath>

namespace cliff {

namespace {

Multivector require_inverse(const Multivector &x) {
  auto inv = inverse(x);
  if (!inv)
    fail(ErrorCode::NotInvertible, "element is not invertible");
  return *inv;
}

Vector apply_with_inverse(const Multivector &x, const Multivector &x_inv, const Vector &v) {
  Multivector image = grade_involution(x) * embed_vector(v, x.signature()) * x_inv;
  if (image.max_grade() > 1 || !image.scalar_part().is_zero())
    fail(ErrorCode::NotStable, "twisted adjoint image leaves the vector space");
  return extract_vector(image);
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

RationalMatrix adjoint_columns(const Multivector &x, const Multivector &x_inv) {
  const auto n = static_cast<std::size_t>(x.signature().n());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set_column(i, apply_with_inverse(x, x_inv, unit_vector(n, i)));
  return m;
}

} // namespace

Vector twisted_adjoint_apply(const Multivector &x, const Vector &v) {
  return apply_with_inverse(x, require_inverse(x), v);
}

IsometryMatrix twisted_adjoint_matrix(const Multivector &x) {
  const Multivector x_inv = require_inverse(x);
  return IsometryMatrix(BilinearForm::standard(x.signature()), adjoint_columns(x, x_inv));
}

bool in_clifford_group(const Multivector &x) {
  auto inv = inverse(x);
  if (!inv)
    return false;
  const auto n = static_cast<std::size_t>(x.signature().n());
  try {
    for (std::size_t i = 0; i < n; ++i)
      apply_with_inverse(x, *inv, unit_vector(n, i));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::NotStable)
      return false;
    throw;
  }
  return true;
}

Rational norm_scalar(const Multivector &x) {
  if (!in_clifford_group(x))
    fail(ErrorCode::NotInGroup, "element is not in the Clifford group");
  Multivector n = norm(x);
  if (!n.is_scalar() || n.is_zero())
    fail(ErrorCode::NotInGroup, "norm is not a nonzero scalar");
  return n.scalar_part();
}

bool in_pin(const Multivector &x) {
  if (!in_clifford_group(x))
    return false;
  Multivector n = norm(x);
  if (!n.is_scalar())
    return false;
  Rational v = n.scalar_part();
  return v == Rational(1) || v == Rational(-1);
}

bool in_spin(const Multivector &x) { return in_pin(x) && x.is_even(); }

GroupElement::GroupElement(Multivector x) : x_(std::move(x)), inv_(x_.signature()) {
  n_value_ = norm_scalar(x_);
  inv_ = require_inverse(x_);
}

LiftResult lift_isometry(const Signature &sig, const RationalMatrix &m) {
  if (!sig.regular())
    fail(ErrorCode::DegenerateForm, "lifting requires a regular signature");
  const BilinearForm form = BilinearForm::standard(sig);
  const ReflectionFactorization factors = cartan_dieudonne_factor(form, m);

  Multivector element = Multivector::scalar(sig, Rational(1));
  for (const auto &w : factors.vectors)
    element = element * embed_vector(w, sig);

  LiftResult result{element, Rational(1), factors.vectors.size(), factors.within_n, false, {}};
  // N(w) = -Phi(w) for each factor and N is multiplicative on the group.
  Rational n_value(1);
  for (const auto &w : factors.vectors)
    n_value *= -quadratic_value(form, w);

  if (auto root = n_value.abs().exact_sqrt()) {
    result.element = (Rational(1) / *root) * element;
    result.n_value = Rational(n_value.sign());
  } else {
    result.n_value = n_value;
    result.needs_normalization = true;
    const double scale = 1.0 / std::sqrt(std::fabs(n_value.to_double()));
    for (const auto &[b, c] : element.terms())
      result.approx_normalized.emplace_back(b, c.to_double() * scale);
  }

  if (!(norm(result.element) == Multivector::scalar(sig, result.n_value)))
    fail(ErrorCode::Internal, "lift norm disagrees with the reflection product");
  if (!(twisted_adjoint_matrix(result.element).matrix() == m))
    fail(ErrorCode::Internal, "lift does not reproduce the isometry");
  return result;
}

} // namespace cliff
