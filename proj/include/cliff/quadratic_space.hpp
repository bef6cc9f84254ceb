#pragma once

#include "cliff/algebra.hpp"
#include "cliff/linalg.hpp"

#include <vector>

namespace cliff {

// Symmetric bilinear form phi on Q^n, stored as its Gram matrix.
class BilinearForm {
public:
  explicit BilinearForm(RationalMatrix mat);

  // diag(+1 x p, -1 x q, 0 x s), the form whose Clifford algebra is Cl(p,q,s).
  static BilinearForm standard(const Signature &sig);

  std::size_t dimension() const { return mat_.rows(); }
  const RationalMatrix &matrix() const { return mat_; }

private:
  RationalMatrix mat_;
};

// Matrix certified to preserve a form: M^T B M = B with M invertible.
class IsometryMatrix {
public:
  // Throws Error(NotAnIsometry) when the certificate fails.
  IsometryMatrix(BilinearForm form, RationalMatrix mat);

  const BilinearForm &form() const { return form_; }
  const RationalMatrix &matrix() const { return mat_; }

private:
  BilinearForm form_;
  RationalMatrix mat_;
};

struct SignatureCounts {
  int p = 0;
  int q = 0;
  int s = 0;
  friend bool operator==(const SignatureCounts &, const SignatureCounts &) = default;
};

struct DiagonalizationResult {
  RationalMatrix basis; // columns are the new orthogonal basis
  Vector diag;          // phi of each basis column; not normalized to +-1
  SignatureCounts signature;
};

enum class VectorKind { Lightlike, Timelike, Spacelike };
const char *to_string(VectorKind kind);

Rational evaluate_form(const BilinearForm &b, const Vector &u, const Vector &v);
Rational quadratic_value(const BilinearForm &b, const Vector &u);

// Timelike when Phi(v) > 0, spacelike when Phi(v) < 0, lightlike when zero.
// Throws Error(ZeroVector) for v = 0.
VectorKind classify_vector(const BilinearForm &b, const Vector &v);

DiagonalizationResult orthogonal_diagonalize(const BilinearForm &b);
SignatureCounts signature_of(const BilinearForm &b);
bool is_degenerate(const BilinearForm &b);

// s_x(u) = u - (2 phi(u,x) / Phi(x)) x. Throws Error(IsotropicVector) when Phi(x) = 0.
IsometryMatrix reflection_matrix(const BilinearForm &b, const Vector &x);

bool is_isometry(const BilinearForm &b, const RationalMatrix &m);
// Sign of det(M); throws Error(NotInvertible) on a singular matrix.
int det_sign(const RationalMatrix &m);

struct ReflectionFactorization {
  std::vector<Vector> vectors; // s_{w1} o ... o s_{wk} = M
  bool within_n = false;       // k <= n was achieved
};

// Writes M as a composition of hyperplane reflections, k <= 2n.
// Throws Error(DegenerateForm) or Error(NotAnIsometry).
ReflectionFactorization cartan_dieudonne_factor(const BilinearForm &b, const RationalMatrix &m);
ReflectionFactorization cartan_dieudonne_factor(const IsometryMatrix &m);

// s_{w1} o ... o s_{wk}; identity for an empty list.
RationalMatrix compose_reflections(const BilinearForm &b, const std::vector<Vector> &vectors);

} // namespace cliff
