#pragma once

#include "cliff/algebra.hpp"
#include "cliff/quadratic_space.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cliff {

// rho_x(v) = grade_involution(x) * v * x^{-1}.
// Throws Error(NotInvertible) when x has no inverse and Error(NotStable)
// when the image leaves the grade-1 subspace.
Vector twisted_adjoint_apply(const Multivector &x, const Vector &v);

// Columns are rho_x(e_i); certified against the standard form of x's signature.
IsometryMatrix twisted_adjoint_matrix(const Multivector &x);

bool in_clifford_group(const Multivector &x);

// The scalar lambda with N(x) = lambda * 1. Throws Error(NotInGroup) when
// x is outside the Clifford group or N(x) is not a nonzero scalar.
Rational norm_scalar(const Multivector &x);

bool in_pin(const Multivector &x);
bool in_spin(const Multivector &x);

// Element of the Clifford group with its inverse and norm cached at
// construction.
class GroupElement {
public:
  // Throws Error(NotInGroup).
  explicit GroupElement(Multivector x);

  const Multivector &value() const { return x_; }
  const Multivector &inverse() const { return inv_; }
  const Rational &norm_value() const { return n_value_; }

  friend GroupElement operator*(const GroupElement &a, const GroupElement &b) {
    return GroupElement(a.x_ * b.x_);
  }

private:
  Multivector x_;
  Multivector inv_;
  Rational n_value_;
};

struct LiftResult {
  Multivector element;          // w_1 ... w_k, rescaled when possible
  Rational n_value;             // N(element)
  std::size_t reflection_count = 0;
  bool within_n = false;        // reflection_count <= n
  // True when |N| of the raw product is not a rational square, so the
  // element could not be scaled into Pin exactly.
  bool needs_normalization = false;
  // Floating rendering of element / sqrt|N|; set only when
  // needs_normalization, display use only.
  std::vector<std::pair<Blade, double>> approx_normalized;
};

// Lifts an isometry of the standard form of `sig` to the Clifford group.
// Throws Error(DegenerateForm) for s > 0 and Error(NotAnIsometry).
LiftResult lift_isometry(const Signature &sig, const RationalMatrix &m);

} // namespace cliff
