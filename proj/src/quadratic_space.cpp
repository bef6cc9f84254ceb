#include "cliff/quadratic_space.hpp"

#include "cliff/error.hpp"

namespace cliff {

BilinearForm::BilinearForm(RationalMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_symmetric())
    fail(ErrorCode::InvalidArgument, "bilinear form matrix must be square and symmetric");
}

BilinearForm BilinearForm::standard(const Signature &sig) {
  Vector d(static_cast<std::size_t>(sig.n()));
  for (int i = 0; i < sig.n(); ++i)
    d[static_cast<std::size_t>(i)] = sig.metric(i);
  return BilinearForm(RationalMatrix::diagonal(d));
}

IsometryMatrix::IsometryMatrix(BilinearForm form, RationalMatrix mat)
    : form_(std::move(form)), mat_(std::move(mat)) {
  if (!is_isometry(form_, mat_))
    fail(ErrorCode::NotAnIsometry, "matrix does not preserve the bilinear form");
}

const char *to_string(VectorKind kind) {
  switch (kind) {
  case VectorKind::Lightlike: return "lightlike";
  case VectorKind::Timelike: return "timelike";
  case VectorKind::Spacelike: return "spacelike";
  }
  return "unknown";
}

namespace {

void require_length(const BilinearForm &b, const Vector &v) {
  if (v.size() != b.dimension())
    fail(ErrorCode::DimensionMismatch, "vector has " + std::to_string(v.size()) + " entries, form has dimension " +
                                           std::to_string(b.dimension()));
}

// Basis change v_dst <- v_dst + c v_src applied to the basis and, by
// congruence, to the Gram matrix.
void add_multiple(RationalMatrix &gram, RationalMatrix &basis, std::size_t src, std::size_t dst, const Rational &c) {
  const std::size_t n = gram.rows();
  for (std::size_t r = 0; r < n; ++r)
    basis(r, dst) += c * basis(r, src);
  for (std::size_t k = 0; k < n; ++k)
    gram(dst, k) += c * gram(src, k);
  for (std::size_t k = 0; k < n; ++k)
    gram(k, dst) += c * gram(k, src);
}

} // namespace

Rational evaluate_form(const BilinearForm &b, const Vector &u, const Vector &v) {
  require_length(b, u);
  require_length(b, v);
  return dot(u, b.matrix() * v);
}

Rational quadratic_value(const BilinearForm &b, const Vector &u) { return evaluate_form(b, u, u); }

VectorKind classify_vector(const BilinearForm &b, const Vector &v) {
  require_length(b, v);
  if (is_zero_vector(v))
    fail(ErrorCode::ZeroVector, "cannot classify the zero vector");
  int s = quadratic_value(b, v).sign();
  if (s > 0) return VectorKind::Timelike;
  if (s < 0) return VectorKind::Spacelike;
  return VectorKind::Lightlike;
}

DiagonalizationResult orthogonal_diagonalize(const BilinearForm &b) {
  const std::size_t n = b.dimension();
  RationalMatrix gram = b.matrix();
  RationalMatrix basis = RationalMatrix::identity(n);

  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && gram(i, j).is_zero())
        ++j;
      if (j == n)
        continue; // v_i is orthogonal to everything that remains
      // v_i <- v_i + v_j gives phi = 2 phi(v_i, v_j) + Phi(v_j); fall back to
      // v_i - v_j in the one case where that cancels.
      add_multiple(gram, basis, j, i, Rational(1));
      if (gram(i, i).is_zero())
        add_multiple(gram, basis, j, i, Rational(-2));
    }
    const Rational pivot = gram(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      if (!gram(i, k).is_zero())
        add_multiple(gram, basis, i, k, -(gram(i, k) / pivot));
  }

  if (!gram.is_diagonal())
    fail(ErrorCode::Internal, "congruence elimination left off-diagonal entries");

  DiagonalizationResult result{basis, Vector(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    result.diag[i] = gram(i, i);
    switch (gram(i, i).sign()) {
    case 1: ++result.signature.p; break;
    case -1: ++result.signature.q; break;
    default: ++result.signature.s; break;
    }
  }
  return result;
}

SignatureCounts signature_of(const BilinearForm &b) { return orthogonal_diagonalize(b).signature; }

bool is_degenerate(const BilinearForm &b) { return signature_of(b).s > 0; }

IsometryMatrix reflection_matrix(const BilinearForm &b, const Vector &x) {
  require_length(b, x);
  const Rational phi_x = quadratic_value(b, x);
  if (phi_x.is_zero())
    fail(ErrorCode::IsotropicVector, "reflection through an isotropic vector is undefined");
  // s_x = I - (2 / Phi(x)) x x^T B
  const std::size_t n = b.dimension();
  const Vector bx = b.matrix() * x;
  const Rational scale = Rational(2) / phi_x;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (x[r].is_zero())
      continue;
    for (std::size_t c = 0; c < n; ++c)
      if (!bx[c].is_zero())
        m(r, c) -= scale * x[r] * bx[c];
  }
  return IsometryMatrix(b, std::move(m));
}

bool is_isometry(const BilinearForm &b, const RationalMatrix &m) {
  if (!m.square() || m.rows() != b.dimension())
    return false;
  if (m.determinant().is_zero())
    return false;
  return m.transpose() * b.matrix() * m == b.matrix();
}

int det_sign(const RationalMatrix &m) {
  int s = m.determinant().sign();
  if (s == 0)
    fail(ErrorCode::NotInvertible, "singular matrix has no determinant sign");
  return s;
}

RationalMatrix compose_reflections(const BilinearForm &b, const std::vector<Vector> &vectors) {
  RationalMatrix out = RationalMatrix::identity(b.dimension());
  for (const auto &w : vectors)
    out = out * reflection_matrix(b, w).matrix();
  return out;
}

ReflectionFactorization cartan_dieudonne_factor(const BilinearForm &b, const RationalMatrix &m) {
  if (m.rows() != b.dimension() || !m.square())
    fail(ErrorCode::DimensionMismatch, "matrix size does not match the form");
  const DiagonalizationResult diag = orthogonal_diagonalize(b);
  if (diag.signature.s > 0)
    fail(ErrorCode::DegenerateForm, "reflection factorization needs a non-degenerate form");
  if (!is_isometry(b, m))
    fail(ErrorCode::NotAnIsometry, "matrix does not preserve the bilinear form");

  // Walk an orthogonal basis u_1..u_n. Once the running product fixes
  // u_1..u_{i-1} it preserves span(u_i..u_n), so every reflection chosen in
  // that span keeps the earlier vectors fixed.
  const std::size_t n = b.dimension();
  ReflectionFactorization result;
  RationalMatrix current = m;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = diag.basis.column(i);
    const Vector y = current * x;
    if (y == x)
      continue;
    Vector diff(n), sum(n);
    for (std::size_t k = 0; k < n; ++k) {
      diff[k] = y[k] - x[k];
      sum[k] = y[k] + x[k];
    }
    if (!quadratic_value(b, diff).is_zero()) {
      // s_{y-x} sends y to x.
      current = reflection_matrix(b, diff).matrix() * current;
      result.vectors.push_back(diff);
    } else {
      // Phi(y+x) = 4 Phi(x) != 0: s_{y+x} sends y to -x, then s_x restores x.
      current = reflection_matrix(b, x).matrix() * reflection_matrix(b, sum).matrix() * current;
      result.vectors.push_back(sum);
      result.vectors.push_back(x);
    }
  }
  if (!current.is_identity())
    fail(ErrorCode::Internal, "reflection peeling did not reach the identity");
  result.within_n = result.vectors.size() <= n;
  return result;
}

ReflectionFactorization cartan_dieudonne_factor(const IsometryMatrix &m) {
  return cartan_dieudonne_factor(m.form(), m.matrix());
}

} // namespace cliff
