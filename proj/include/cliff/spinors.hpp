#pragma once

#include "cliff/algebra.hpp"
#include "cliff/linalg.hpp"

#include <vector>

namespace cliff {

// r_0..r_7 = 0,1,2,2,3,3,3,3 and r_{j+8} = r_j + 4 for every integer j.
int radon_hurwitz(int j);

// k = q - r_{q-p}: a complete set of primitive orthogonal idempotents of
// Cl(p,q) has 2^k members. Throws Error(DegenerateForm) for s > 0.
int idempotent_count_exponent(const Signature &sig);

// k commuting blades, each squaring to +1, whose masks are independent over
// GF(2) so that no nonempty sub-product is +-1.
struct CommutingBladeSet {
  Signature sig;
  std::vector<Blade> blades;
};

bool is_valid_commuting_set(const Signature &sig, const std::vector<Blade> &blades);

// Lexicographically first valid set of size idempotent_count_exponent(sig),
// by backtracking over blades in mask order.
CommutingBladeSet find_commuting_blades(const Signature &sig);

struct IdempotentSet {
  std::vector<Multivector> idems; // 2^k products (1/2)(1 +- e_I1)...(1/2)(1 +- e_Ik)
  CommutingBladeSet generating_blades;
};

struct IdempotentChecks {
  bool idempotent = false; // f^2 = f for every member
  bool orthogonal = false; // f g = 0 for distinct members
  bool sums_to_one = false;
  bool all() const { return idempotent && orthogonal && sums_to_one; }
};

// Sign choices are enumerated with bit j of the member index selecting the
// minus sign on blade j.
IdempotentSet build_idempotent_set(const CommutingBladeSet &blades);
IdempotentChecks verify_idempotent_set(const std::vector<Multivector> &idems, const Signature &sig);
// find_commuting_blades followed by build_idempotent_set.
IdempotentSet primitive_idempotents(const Signature &sig);

bool is_idempotent(const Multivector &f);

// Basis of the left ideal Cl * generator, kept in reduced echelon form over
// the blade coordinates.
class IdealBasis {
public:
  IdealBasis(Multivector generator, SpanBuilder span);

  const Multivector &generator() const { return generator_; }
  const std::vector<Multivector> &basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const Signature &signature() const { return generator_.signature(); }

  bool contains(const Multivector &x) const;
  // Throws Error(InvalidArgument) when x lies outside the ideal.
  Vector coordinates(const Multivector &x) const;

private:
  Multivector generator_;
  SpanBuilder span_;
  std::vector<Multivector> basis_;
};

// Throws Error(NotIdempotent).
IdealBasis left_ideal_basis(const Multivector &f);

enum class DivisionRingKind { Real, Complex, Quaternion };
const char *to_string(DivisionRingKind kind);

struct DivisionRingInfo {
  std::vector<Multivector> basis; // first element is f itself
  std::size_t dim = 0;
  DivisionRingKind kind = DivisionRingKind::Real;
  // Pairwise anticommuting units whose squares are negative multiples of f
  // (one for C, three for H).
  std::vector<Multivector> imaginary_units;
};

// f A f for a primitive idempotent f. Throws Error(NotIdempotent) or
// Error(UnexpectedDimension) when f A f is not R, C or H.
DivisionRingInfo division_ring_info(const Multivector &f);

// Basis of the center, from the null space of x -> [x, e_i] over all
// generators. Throws Error(DegenerateForm).
std::vector<Multivector> algebra_center(const Signature &sig);
// Simple unless the center splits as R + R. For odd n the center is always
// two-dimensional; it is a field (C) when the pseudoscalar squares to -1.
bool is_simple(const Signature &sig);

// Central idempotents (1/2)(1 +- z) of a double algebra, z central with z^2 = 1.
// Throws Error(NotSimple) when the algebra is simple.
std::pair<Multivector, Multivector> central_idempotents(const Signature &sig);

// Left ideal of the first primitive idempotent.
IdealBasis minimal_ideal(const Signature &sig);
// Minimal ideal when simple; otherwise Cl (f + g) with f and g primitive
// idempotents in the two central components.
IdealBasis faithful_ideal(const Signature &sig);

// Matrix of y -> x y on the ideal basis. Throws Error(DimensionMismatch) when
// x belongs to another algebra.
RationalMatrix regular_rep_matrix(const Multivector &x, const IdealBasis &ideal);

// Rank of {rep(e_b)} over all blades b; equals 2^n exactly when faithful.
std::size_t representation_rank(const IdealBasis &ideal);
bool is_faithful(const IdealBasis &ideal);

struct InterbasisPair {
  Multivector e_ij; // in f_i A f_j
  Multivector e_ji; // in f_j A f_i
};

// E_ij E_ji = f_i and E_ji E_ij = f_j. Throws Error(NotSimple) when
// f_i A f_j = 0 and Error(NoSolution) when no partial inverse exists.
InterbasisPair interbasis_element(const Multivector &fi, const Multivector &fj);

struct Intertwiner {
  IdealBasis source; // A f_i
  IdealBasis target; // A f_j
  RationalMatrix forward;  // psi -> psi E_ij
  RationalMatrix backward; // phi -> phi E_ji
};

Intertwiner representation_intertwiner(const Multivector &fi, const Multivector &fj);

} // namespace cliff
