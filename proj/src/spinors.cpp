#include "cliff/spinors.hpp"

#include "cliff/error.hpp"

#include <array>
#include <optional>

namespace cliff {

namespace {

// Not every caller holds a regular signature; the idempotent theory is only
// stated for s = 0.
void require_regular(const Signature &sig) {
  if (!sig.regular())
    fail(ErrorCode::DegenerateForm, "spinor constructions need a regular signature, got (" + sig.to_string() + ")");
}

SparseVector to_sparse(const Multivector &x) {
  SparseVector v;
  for (const auto &[b, c] : x.terms())
    v.emplace(b.mask, c);
  return v;
}

Multivector from_sparse(const Signature &sig, const SparseVector &v) {
  Multivector::Terms terms;
  for (const auto &[mask, c] : v)
    terms.emplace(Blade{mask}, c);
  return Multivector(sig, std::move(terms));
}

Multivector one(const Signature &sig) { return Multivector::scalar(sig, Rational(1)); }

bool commutes(Blade a, Blade b, const Signature &sig) {
  return blade_mul(a, b, sig).coef == blade_mul(b, a, sig).coef;
}

// Insert `mask` into a GF(2) elimination basis indexed by leading bit;
// false when it is already in the span.
bool insert_gf2(std::array<std::uint32_t, 32> &basis, std::uint32_t mask) {
  for (int bit = 31; bit >= 0 && mask; --bit) {
    if (!(mask >> bit & 1u))
      continue;
    if (!basis[static_cast<std::size_t>(bit)]) {
      basis[static_cast<std::size_t>(bit)] = mask;
      return true;
    }
    mask ^= basis[static_cast<std::size_t>(bit)];
  }
  return false;
}

bool search(const Signature &sig, const std::vector<Blade> &candidates, std::size_t start, std::size_t needed,
            std::vector<Blade> &chosen, std::array<std::uint32_t, 32> gf2) {
  if (chosen.size() == needed)
    return true;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (candidates.size() - i < needed - chosen.size())
      return false;
    const Blade b = candidates[i];
    bool ok = true;
    for (Blade c : chosen)
      if (!commutes(b, c, sig)) {
        ok = false;
        break;
      }
    if (!ok)
      continue;
    auto next = gf2;
    if (!insert_gf2(next, b.mask))
      continue;
    chosen.push_back(b);
    if (search(sig, candidates, i + 1, needed, chosen, next))
      return true;
    chosen.pop_back();
  }
  return false;
}

SpanBuilder span_of(const std::vector<Multivector> &elements) {
  SpanBuilder span;
  for (const auto &x : elements)
    span.insert(to_sparse(x));
  return span;
}

std::vector<Multivector> basis_of(const Signature &sig, const SpanBuilder &span) {
  std::vector<Multivector> out;
  for (const auto &row : span.basis())
    out.push_back(from_sparse(sig, row));
  return out;
}

// Elements f b g over every standard blade b.
std::vector<Multivector> sandwich_products(const Multivector &f, const Multivector &g) {
  const Signature &sig = f.signature();
  std::vector<Multivector> out;
  out.reserve(sig.blade_count());
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
    out.push_back(f * Multivector::blade(sig, Blade{m}) * g);
  return out;
}

Multivector pure_part(const Multivector &x, const Multivector &f, const std::vector<Multivector> &basis,
                      const SpanBuilder &span) {
  // For a real division algebra D of dimension d with unit f, the trace of
  // y -> x y is d * Re(x).
  Rational trace;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto coords = span.coordinates(to_sparse(x * basis[j]));
    if (!coords)
      fail(ErrorCode::Internal, "f A f not closed under products");
    trace += (*coords)[j];
  }
  Rational re = trace / Rational(static_cast<long>(basis.size()));
  return x - re * f;
}

// Real scalar lambda with x = lambda f, or nullopt.
std::optional<Rational> multiple_of(const Multivector &x, const Multivector &f) {
  if (x.is_zero())
    return Rational(0);
  const auto &[b, c] = *f.terms().begin();
  Rational lambda = x.coefficient(b) / c;
  if (!(lambda * f == x))
    return std::nullopt;
  return lambda;
}

} // namespace

int radon_hurwitz(int j) {
  static constexpr std::array<int, 8> base = {0, 1, 2, 2, 3, 3, 3, 3};
  // floor division so that negative j follows r_j = r_{j+8} - 4.
  int period = j >= 0 ? j / 8 : -((-j + 7) / 8);
  int rem = j - 8 * period;
  return base[static_cast<std::size_t>(rem)] + 4 * period;
}

int idempotent_count_exponent(const Signature &sig) {
  require_regular(sig);
  int k = sig.q - radon_hurwitz(sig.q - sig.p);
  if (k < 0)
    fail(ErrorCode::Internal, "negative idempotent exponent");
  return k;
}

bool is_valid_commuting_set(const Signature &sig, const std::vector<Blade> &blades) {
  std::array<std::uint32_t, 32> gf2{};
  for (std::size_t i = 0; i < blades.size(); ++i) {
    const Blade b = blades[i];
    if (b.is_scalar() || b.mask >= sig.blade_count())
      return false;
    if (blade_mul(b, b, sig).coef != 1)
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(b, blades[j], sig))
        return false;
    if (!insert_gf2(gf2, b.mask))
      return false;
  }
  return true;
}

CommutingBladeSet find_commuting_blades(const Signature &sig) {
  const int k = idempotent_count_exponent(sig);
  std::vector<Blade> candidates;
  for (std::uint32_t m = 1; m < sig.blade_count(); ++m)
    if (blade_mul(Blade{m}, Blade{m}, sig).coef == 1)
      candidates.push_back(Blade{m});
  std::vector<Blade> chosen;
  if (!search(sig, candidates, 0, static_cast<std::size_t>(k), chosen, {}))
    fail(ErrorCode::SearchFailed, "no commuting blade set of size " + std::to_string(k) + " in (" +
                                      sig.to_string() + ")");
  return {sig, chosen};
}

IdempotentSet build_idempotent_set(const CommutingBladeSet &set) {
  const Signature &sig = set.sig;
  if (!is_valid_commuting_set(sig, set.blades))
    fail(ErrorCode::InvalidArgument, "blades do not form a valid commuting set");
  const std::size_t k = set.blades.size();
  const Rational half(1, 2);
  IdempotentSet out{{}, set};
  out.idems.reserve(std::size_t{1} << k);
  for (std::size_t choice = 0; choice < (std::size_t{1} << k); ++choice) {
    Multivector f = one(sig);
    for (std::size_t j = 0; j < k; ++j) {
      Rational sign = (choice >> j & 1u) ? Rational(-1) : Rational(1);
      Multivector factor = half * (one(sig) + Multivector::blade(sig, set.blades[j], sign));
      f = f * factor;
    }
    out.idems.push_back(std::move(f));
  }
  if (!verify_idempotent_set(out.idems, sig).all())
    fail(ErrorCode::Internal, "constructed idempotents fail verification");
  return out;
}

IdempotentChecks verify_idempotent_set(const std::vector<Multivector> &idems, const Signature &sig) {
  IdempotentChecks checks{true, true, true};
  Multivector total(sig);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    if (!is_idempotent(idems[i]))
      checks.idempotent = false;
    for (std::size_t j = 0; j < idems.size(); ++j)
      if (i != j && !(idems[i] * idems[j]).is_zero())
        checks.orthogonal = false;
    total += idems[i];
  }
  checks.sums_to_one = total == one(sig);
  return checks;
}

IdempotentSet primitive_idempotents(const Signature &sig) {
  return build_idempotent_set(find_commuting_blades(sig));
}

bool is_idempotent(const Multivector &f) { return f * f == f; }

// --- ideals ----------------------------------------------------------------

IdealBasis::IdealBasis(Multivector generator, SpanBuilder span)
    : generator_(std::move(generator)), span_(std::move(span)) {
  basis_ = basis_of(generator_.signature(), span_);
}

bool IdealBasis::contains(const Multivector &x) const {
  return x.signature() == signature() && span_.contains(to_sparse(x));
}

Vector IdealBasis::coordinates(const Multivector &x) const {
  if (!(x.signature() == signature()))
    fail(ErrorCode::DimensionMismatch, "element belongs to another algebra");
  auto coords = span_.coordinates(to_sparse(x));
  if (!coords)
    fail(ErrorCode::InvalidArgument, "element is not in the ideal");
  return *coords;
}

IdealBasis left_ideal_basis(const Multivector &f) {
  if (!is_idempotent(f))
    fail(ErrorCode::NotIdempotent, "generator is not idempotent");
  const Signature &sig = f.signature();
  SpanBuilder span;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
    span.insert(to_sparse(Multivector::blade(sig, Blade{m}) * f));
  return IdealBasis(f, std::move(span));
}

const char *to_string(DivisionRingKind kind) {
  switch (kind) {
  case DivisionRingKind::Real: return "R";
  case DivisionRingKind::Complex: return "C";
  case DivisionRingKind::Quaternion: return "H";
  }
  return "?";
}

DivisionRingInfo division_ring_info(const Multivector &f) {
  if (f.is_zero() || !is_idempotent(f))
    fail(ErrorCode::NotIdempotent, "generator is not a nonzero idempotent");
  SpanBuilder span;
  span.insert(to_sparse(f));
  for (const auto &x : sandwich_products(f, f))
    span.insert(to_sparse(x));
  const Signature &sig = f.signature();
  std::vector<Multivector> raw = basis_of(sig, span);

  DivisionRingInfo info;
  info.dim = raw.size();
  if (info.dim != 1 && info.dim != 2 && info.dim != 4)
    fail(ErrorCode::UnexpectedDimension, "f A f has dimension " + std::to_string(info.dim));

  // Pure parts, orthogonalized for <a,b> = -(ab + ba)/2.
  std::vector<Multivector> units;
  for (const auto &x : raw) {
    Multivector u = pure_part(x, f, raw, span);
    if (u.is_zero())
      continue;
    for (const auto &v : units) {
      auto uv = multiple_of(u * v + v * u, f);
      auto vv = multiple_of(v * v, f);
      if (!uv || !vv)
        fail(ErrorCode::UnexpectedDimension, "f A f is not a division algebra");
      u -= (*uv / (Rational(2) * *vv)) * v;
    }
    if (!u.is_zero())
      units.push_back(u);
  }
  if (units.size() + 1 != info.dim)
    fail(ErrorCode::UnexpectedDimension, "pure part has unexpected dimension");
  for (std::size_t i = 0; i < units.size(); ++i) {
    auto sq = multiple_of(units[i] * units[i], f);
    if (!sq || sq->sign() >= 0)
      fail(ErrorCode::UnexpectedDimension, "imaginary unit does not square to a negative multiple of f");
    for (std::size_t j = 0; j < i; ++j)
      if (!(units[i] * units[j] + units[j] * units[i]).is_zero())
        fail(ErrorCode::UnexpectedDimension, "imaginary units do not anticommute");
  }

  info.basis.push_back(f);
  for (const auto &u : units)
    info.basis.push_back(u);
  info.kind = info.dim == 1 ? DivisionRingKind::Real
                            : (info.dim == 2 ? DivisionRingKind::Complex : DivisionRingKind::Quaternion);
  info.imaginary_units = std::move(units);
  return info;
}

std::vector<Multivector> algebra_center(const Signature &sig) {
  require_regular(sig);
  const std::uint32_t dim = sig.blade_count();
  // Row (i, out) collects the coefficient of blade `out` in [x, e_i]; each
  // blade contributes to exactly one output blade per generator.
  std::map<std::pair<int, std::uint32_t>, SparseVector> rows;
  for (int i = 1; i <= sig.n(); ++i) {
    const Blade g = Blade::generator(i);
    for (std::uint32_t m = 0; m < dim; ++m) {
      BladeProduct right = blade_mul(Blade{m}, g, sig);
      BladeProduct left = blade_mul(g, Blade{m}, sig);
      int c = right.coef - left.coef;
      if (c != 0)
        rows[{i, right.out.mask}][m] += Rational(c);
    }
  }
  SpanBuilder constraints;
  for (const auto &[key, row] : rows)
    constraints.insert(row);
  std::vector<Multivector> center;
  for (const auto &v : constraints.null_space(dim))
    center.push_back(from_sparse(sig, v));
  return center;
}

namespace {

// Non-scalar central element of an odd-dimensional algebra, rescaled so its
// square is +1 when that is possible over the rationals. nullopt when the
// center is trivial or the central element squares negatively (center = C).
std::optional<Multivector> central_unit(const Signature &sig) {
  const auto center = algebra_center(sig);
  if (center.size() == 1)
    return std::nullopt;
  if (center.size() != 2)
    fail(ErrorCode::Internal, "center of dimension " + std::to_string(center.size()));
  Multivector z(sig);
  for (const auto &c : center)
    if (!c.is_scalar())
      z = c - Multivector::scalar(sig, c.scalar_part());
  Multivector z2 = z * z;
  if (z.is_zero() || !z2.is_scalar())
    fail(ErrorCode::Internal, "central element does not square to a scalar");
  if (z2.scalar_part().sign() < 0)
    return std::nullopt;
  auto root = z2.scalar_part().exact_sqrt();
  if (!root || root->is_zero())
    fail(ErrorCode::Internal, "central element square is not a positive rational square");
  return (Rational(1) / *root) * z;
}

} // namespace

bool is_simple(const Signature &sig) { return !central_unit(sig).has_value(); }

std::pair<Multivector, Multivector> central_idempotents(const Signature &sig) {
  const auto unit = central_unit(sig);
  if (!unit)
    fail(ErrorCode::NotSimple, "center has no nontrivial idempotent");
  const Rational half(1, 2);
  return {half * (one(sig) + *unit), half * (one(sig) - *unit)};
}

IdealBasis minimal_ideal(const Signature &sig) {
  return left_ideal_basis(primitive_idempotents(sig).idems.front());
}

IdealBasis faithful_ideal(const Signature &sig) {
  const IdempotentSet set = primitive_idempotents(sig);
  if (is_simple(sig))
    return left_ideal_basis(set.idems.front());

  const auto [plus, minus] = central_idempotents(sig);
  const Multivector *f = nullptr;
  const Multivector *g = nullptr;
  for (const auto &idem : set.idems) {
    if (!f && plus * idem == idem)
      f = &idem;
    if (!g && minus * idem == idem)
      g = &idem;
  }
  if (!f || !g)
    fail(ErrorCode::Internal, "primitive idempotents do not split across central components");
  IdealBasis ideal = left_ideal_basis(*f + *g);
  if (!is_faithful(ideal))
    fail(ErrorCode::Internal, "combined ideal does not carry a faithful representation");
  return ideal;
}

RationalMatrix regular_rep_matrix(const Multivector &x, const IdealBasis &ideal) {
  if (!(x.signature() == ideal.signature()))
    fail(ErrorCode::DimensionMismatch, "element and ideal belong to different algebras");
  const std::size_t d = ideal.dim();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    m.set_column(j, ideal.coordinates(x * ideal.basis()[j]));
  return m;
}

std::size_t representation_rank(const IdealBasis &ideal) {
  const Signature &sig = ideal.signature();
  SpanBuilder span;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    RationalMatrix rep = regular_rep_matrix(Multivector::blade(sig, Blade{m}), ideal);
    SparseVector flat;
    for (std::size_t r = 0; r < rep.rows(); ++r)
      for (std::size_t c = 0; c < rep.cols(); ++c)
        if (!rep(r, c).is_zero())
          flat.emplace(static_cast<std::uint32_t>(r * rep.cols() + c), rep(r, c));
    span.insert(flat);
  }
  return span.dimension();
}

bool is_faithful(const IdealBasis &ideal) {
  return representation_rank(ideal) == ideal.signature().blade_count();
}

InterbasisPair interbasis_element(const Multivector &fi, const Multivector &fj) {
  require_same_signature(fi, fj);
  if (!is_idempotent(fi) || !is_idempotent(fj))
    fail(ErrorCode::NotIdempotent, "interbasis elements need idempotent inputs");
  if (fi == fj)
    return {fi, fi};
  const Signature &sig = fi.signature();

  const std::vector<Multivector> forward = basis_of(sig, span_of(sandwich_products(fi, fj)));
  const std::vector<Multivector> backward = basis_of(sig, span_of(sandwich_products(fj, fi)));
  if (forward.empty() || backward.empty())
    fail(ErrorCode::NotSimple, "f_i A f_j = 0: the idempotents lie in different simple components");

  // Solve u * (sum_t c_t v_t) = f_i for the coefficients c_t.
  const Multivector &u = forward.front();
  const std::uint32_t dim = sig.blade_count();
  RationalMatrix system(dim, backward.size());
  for (std::size_t t = 0; t < backward.size(); ++t) {
    const Multivector product = u * backward[t];
    for (const auto &[b, c] : product.terms())
      system(b.mask, t) = c;
  }
  Vector rhs(dim);
  for (const auto &[b, c] : fi.terms())
    rhs[b.mask] = c;
  auto solution = system.solve(rhs);
  if (!solution)
    fail(ErrorCode::NoSolution, "no partial inverse in f_j A f_i");
  Multivector v(sig);
  for (std::size_t t = 0; t < backward.size(); ++t)
    v += (*solution)[t] * backward[t];
  if (!(u * v == fi) || !(v * u == fj))
    fail(ErrorCode::NoSolution, "interbasis products do not recover the idempotents");
  return {u, v};
}

Intertwiner representation_intertwiner(const Multivector &fi, const Multivector &fj) {
  const InterbasisPair pair = interbasis_element(fi, fj);
  IdealBasis source = left_ideal_basis(fi);
  IdealBasis target = left_ideal_basis(fj);
  if (source.dim() != target.dim())
    fail(ErrorCode::NotSimple, "ideals have different dimensions");
  const std::size_t d = source.dim();
  RationalMatrix forward(d, d), backward(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    forward.set_column(c, target.coordinates(source.basis()[c] * pair.e_ij));
    backward.set_column(c, source.coordinates(target.basis()[c] * pair.e_ji));
  }
  if (!(forward * backward).is_identity() || !(backward * forward).is_identity())
    fail(ErrorCode::Internal, "intertwiner is not invertible");
  return {std::move(source), std::move(target), std::move(forward), std::move(backward)};
}

} // namespace cliff
