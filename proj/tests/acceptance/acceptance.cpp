// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "cliff/expr.hpp"
#include "cliff/groups.hpp"
#include "cliff/quadratic_space.hpp"
#include "cliff/spinors.hpp"

#include "../oracles.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace cliff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5)
        problems.push_back(what);
    }
  }
};

Multivector one(const Signature &sig) { return Multivector::scalar(sig, 1); }

// ---- 1 -------------------------------------------------------------------

using Image = std::vector<Rational>;
using ImageProduct = std::function<Image(const Image &, const Image &)>;

// The table of sig must agree with the product of the target algebra under
// the given images of the basis blades, and the images must be a basis.
void check_isomorphism(Outcome &o, const char *label, const Signature &sig, const std::vector<Image> &images,
                       const ImageProduct &product) {
  const auto table = multiplication_table(sig);
  const std::size_t count = images.size();
  bool ok = table.entries.size() == count;
  for (std::size_t a = 0; ok && a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const auto &e = table.entries[a][b];
      Image expected(images[0].size(), Rational(0));
      for (std::size_t i = 0; i < expected.size(); ++i)
        expected[i] = Rational(e.coef) * images[e.out.mask][i];
      ok = ok && product(images[a], images[b]) == expected;
    }
  RationalMatrix m = RationalMatrix::from_columns(images);
  ok = ok && m.rank() == count;
  o.require(ok, std::string(label) + " table does not match");
}

Outcome criterion_1() {
  Outcome o;
  auto complex = [](const Image &x, const Image &y) {
    return Image{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
  };
  check_isomorphism(o, "Cl(0,1) -> C", Signature(0, 1), {{1, 0}, {0, 1}}, complex);

  auto split = [](const Image &x, const Image &y) { return Image{x[0] * y[0], x[1] * y[1]}; };
  check_isomorphism(o, "Cl(1,0) -> R+R", Signature(1, 0), {{1, 1}, {1, -1}}, split);

  // Hamilton product on (1, i, j, k) coordinates.
  auto hamilton = [](const Image &x, const Image &y) {
    return Image{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                 x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                 x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                 x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
  };
  // blade order 1, e1, e2, e12
  check_isomorphism(o, "Cl(0,2) -> H", Signature(0, 2), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                    hamilton);

  // 2x2 matrices stored row-major (a, b, c, d).
  auto matmul = [](const Image &x, const Image &y) {
    return Image{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                 x[2] * y[1] + x[3] * y[3]};
  };
  check_isomorphism(o, "Cl(2,0) -> M2(R)", Signature(2, 0),
                    {{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, -1}, {0, -1, 1, 0}}, matmul);
  o.detail = "Cl(0,1)=C, Cl(1,0)=R+R, Cl(0,2)=H, Cl(2,0)=M2(R) on all basis pairs";
  return o;
}

// ---- 2 -------------------------------------------------------------------

Outcome criterion_2() {
  Outcome o;
  std::size_t sigs = 0, pairs = 0;
  for (const auto &sig : oracle::signatures_up_to(8, true)) {
    ++sigs;
    const auto table = multiplication_table(sig);
    const std::uint32_t count = sig.blade_count();
    o.require(table.entries.size() == (std::size_t{1} << sig.n()), "blade count for " + sig.to_string());
    // left multiplication by the scalar lists every blade exactly once
    std::vector<bool> seen(count, false);
    for (std::uint32_t b = 0; b < count; ++b)
      seen[table.entries[0][b].out.mask] = true;
    o.require(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }), "basis for " + sig.to_string());

    const bool compare_oracle = sig.n() <= 6;
    for (std::uint32_t a = 0; a < count; ++a)
      for (std::uint32_t b = 0; b < count; ++b) {
        const auto &e = table.entries[a][b];
        ++pairs;
        if (e.coef < -1 || e.coef > 1 || e.out.mask >= count) {
          o.require(false, "product leaves the blade set in " + sig.to_string());
          continue;
        }
        if (compare_oracle) {
          const auto ref = oracle::blade_product(Blade{a}, Blade{b}, sig);
          o.require(ref.coef == e.coef && (ref.coef == 0 || ref.out == e.out), "oracle mismatch in " + sig.to_string());
        }
      }
    for (int j = 1; j <= sig.n(); ++j) {
      const auto ej = Blade::generator(j);
      const auto sq = table.entries[ej.mask][ej.mask];
      o.require(sq.coef == oracle::generator_square(sig, j) && sq.out.is_scalar(), "e_j^2 in " + sig.to_string());
      for (int k = 1; k <= sig.n(); ++k) {
        if (j == k)
          continue;
        const auto ek = Blade::generator(k);
        const auto jk = table.entries[ej.mask][ek.mask], kj = table.entries[ek.mask][ej.mask];
        o.require(jk.out == kj.out && jk.coef == -kj.coef && jk.coef != 0, "anticommutation in " + sig.to_string());
      }
    }
  }
  o.detail = std::to_string(sigs) + " signatures, " + std::to_string(pairs) +
             " blade products closed; rewriting oracle agrees for n <= 6";
  return o;
}

// ---- 3 -------------------------------------------------------------------

void involution_identities(Outcome &o, const Multivector &x, const Multivector &y) {
  const std::string sig = x.signature().to_string();
  o.require(grade_involution(grade_involution(x)) == x, "alpha^2 in " + sig);
  o.require(reverse(reverse(x)) == x, "t^2 in " + sig);
  o.require(reverse(x * y) == reverse(y) * reverse(x), "t(xy) in " + sig);
  o.require(grade_involution(x * y) == grade_involution(x) * grade_involution(y), "alpha(xy) in " + sig);
  o.require(conjugate(x) == grade_involution(reverse(x)), "conj = alpha t in " + sig);
  o.require(conjugate(x) == reverse(grade_involution(x)), "conj = t alpha in " + sig);
}

Outcome criterion_3() {
  Outcome o;
  std::size_t blade_pairs = 0;
  for (const auto &sig : oracle::signatures_up_to(5, true)) {
    const std::uint32_t count = sig.blade_count();
    for (std::uint32_t a = 0; a < count; ++a) {
      const auto x = Multivector::blade(sig, Blade{a});
      o.require(reverse(x) == Rational(oracle::reversal_sign(Blade{a})) * x, "reversal sign oracle");
      for (std::uint32_t b = 0; b < count; ++b) {
        involution_identities(o, x, Multivector::blade(sig, Blade{b}));
        ++blade_pairs;
      }
    }
  }
  oracle::Random rng(301);
  const auto sigs = oracle::signatures_up_to(5, true);
  for (int trial = 0; trial < 200; ++trial) {
    const auto &sig = sigs[static_cast<std::size_t>(rng.integer(0, static_cast<int>(sigs.size()) - 1))];
    // x and y are themselves products, so t(xy) is checked on products of products
    auto x = rng.multivector(sig) * rng.multivector(sig);
    auto y = rng.multivector(sig) * rng.multivector(sig);
    involution_identities(o, x, y);
    involution_identities(o, x * y, y);
  }
  o.detail = std::to_string(blade_pairs) + " blade pairs over n <= 5 plus 200 random products";
  return o;
}

// ---- shared corpus ---------------------------------------------------------

const std::vector<Signature> kCorpusSignatures = {Signature(2, 0), Signature(0, 2), Signature(1, 1), Signature(3, 0),
                                                  Signature(1, 3)};

Vector random_anisotropic(oracle::Random &rng, const BilinearForm &b, bool fractional) {
  for (;;) {
    Vector v(b.dimension());
    for (auto &c : v)
      c = fractional ? Rational(rng.integer(-4, 4), rng.integer(1, 3)) : Rational(rng.integer(-3, 3));
    if (!quadratic_value(b, v).is_zero())
      return v;
  }
}

struct IsometrySample {
  Signature sig;
  RationalMatrix m;
  std::size_t generating_reflections = 0;
};

std::vector<IsometrySample> isometry_corpus() {
  static std::vector<IsometrySample> corpus = [] {
    std::vector<IsometrySample> out;
    oracle::Random rng(601);
    for (const auto &sig : kCorpusSignatures) {
      const auto b = BilinearForm::standard(sig);
      for (int trial = 0; trial < 100; ++trial) {
        const int k = rng.integer(0, sig.n());
        std::vector<Vector> ws;
        for (int i = 0; i < k; ++i)
          ws.push_back(random_anisotropic(rng, b, false));
        out.push_back({sig, compose_reflections(b, ws), ws.size()});
      }
    }
    return out;
  }();
  return corpus;
}

// ---- 4 -------------------------------------------------------------------

Outcome criterion_4() {
  Outcome o;
  oracle::Random rng(401);
  int tested = 0;
  for (const auto &sig : kCorpusSignatures) {
    const auto b = BilinearForm::standard(sig);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector v = random_anisotropic(rng, b, true);
      const auto rho = twisted_adjoint_matrix(embed_vector(v, sig)).matrix();
      o.require(rho == reflection_matrix(b, v).matrix(), "rho_v != s_v in " + sig.to_string());
      ++tested;
    }
  }
  o.detail = std::to_string(tested) + " random anisotropic vectors over 5 signatures";
  return o;
}

// ---- 5 -------------------------------------------------------------------

Outcome criterion_5() {
  Outcome o;
  oracle::Random rng(501);
  int tested = 0;
  for (const auto &sig : kCorpusSignatures) {
    const auto b = BilinearForm::standard(sig);
    for (int trial = 0; trial < 20; ++trial) {
      Multivector x = one(sig);
      const int factors = rng.integer(1, 4);
      for (int i = 0; i < factors; ++i)
        x = x * embed_vector(random_anisotropic(rng, b, true), sig);
      static const Rational scales[] = {Rational(1), Rational(-1), Rational(2), Rational(-1, 3)};
      x = scales[rng.integer(0, 3)] * x;
      o.require(twisted_adjoint_matrix(x).matrix() == twisted_adjoint_matrix(-x).matrix(), "rho_x != rho_-x");
      ++tested;
    }
  }
  const Signature null2(0, 0, 2);
  const Multivector x = expr::evaluate("1 + e12", null2);
  const auto inv = inverse(x);
  o.require(inv.has_value() && *inv == expr::evaluate("1 - e12", null2), "1+e12 inverse");
  o.require(!x.is_scalar(), "1+e12 is scalar");
  bool identity = true;
  for (int i = 0; i < 2; ++i) {
    Vector e(2, Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    identity = identity && twisted_adjoint_apply(x, e) == e;
  }
  o.require(identity && in_clifford_group(x), "rho_{1+e12} is not the identity");
  o.detail = std::to_string(tested) + " random Clifford-group elements; Cl(0,0,2) 1+e12 acts trivially";
  return o;
}

// ---- 6 -------------------------------------------------------------------

Outcome criterion_6() {
  Outcome o;
  std::size_t within = 0, total = 0, max_factor = 0;
  std::map<std::string, std::pair<int, int>> per_sig;
  for (const auto &sample : isometry_corpus()) {
    const auto b = BilinearForm::standard(sample.sig);
    const auto f = cartan_dieudonne_factor(b, sample.m);
    const auto n = static_cast<std::size_t>(sample.sig.n());
    o.require(compose_reflections(b, f.vectors) == sample.m, "recomposition in " + sample.sig.to_string());
    o.require(f.vectors.size() <= 2 * n, "more than 2n reflections");
    for (const auto &w : f.vectors)
      o.require(!quadratic_value(b, w).is_zero(), "isotropic factor");
    ++total;
    max_factor = std::max(max_factor, f.vectors.size());
    auto &entry = per_sig[sample.sig.to_string()];
    ++entry.second;
    if (f.vectors.size() <= n) {
      ++within;
      ++entry.first;
    }
  }
  std::ostringstream os;
  os << total << " isometries recomposed exactly; " << within << "/" << total << " used <= n reflections (";
  bool first = true;
  for (const auto &[sig, counts] : per_sig) {
    os << (first ? "" : ", ") << sig << ": " << counts.first << "/" << counts.second;
    first = false;
  }
  os << ")";
  o.detail = os.str();
  return o;
}

// ---- 7 -------------------------------------------------------------------

int element_order(const Multivector &x) {
  Multivector p = x;
  for (int k = 1; k <= 16; ++k) {
    if (p == one(x.signature()))
      return k;
    p = p * x;
  }
  return -1;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t lifted = 0, normalized = 0;
  for (const auto &sample : isometry_corpus()) {
    const auto lift = lift_isometry(sample.sig, sample.m);
    o.require(twisted_adjoint_matrix(lift.element).matrix() == sample.m, "rho(lift) != M in " + sample.sig.to_string());
    if (det_sign(sample.m) == 1)
      o.require(lift.element.is_even(), "det +1 lift is not even");
    if (!lift.needs_normalization) {
      ++normalized;
      o.require(in_pin(lift.element), "normalized lift outside Pin");
    }
    ++lifted;
  }

  const Signature c(0, 1);
  const std::vector<Multivector> pin1 = {one(c), -one(c), expr::evaluate("e1", c), expr::evaluate("-e1", c)};
  std::map<int, int> profile;
  for (const auto &x : pin1) {
    o.require(in_pin(x), "Pin(1) membership");
    ++profile[element_order(x)];
    for (const auto &y : pin1) {
      const auto xy = x * y;
      o.require(std::find(pin1.begin(), pin1.end(), xy) != pin1.end(), "Pin(1) not closed");
    }
  }
  o.require(profile == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}}, "Pin(1) order profile");

  const Signature q(0, 2);
  const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}, {-3, 4, 5}, {12, -5, 13}};
  for (const auto &t : triples) {
    const Rational a(t[0], t[2]), b(t[1], t[2]);
    const Multivector x = Multivector::scalar(q, a) + Multivector::blade(q, Blade{0b11}, b);
    o.require(in_spin(x), "Spin(2) membership");
    RationalMatrix expected(2, 2);
    expected(0, 0) = a * a - b * b;
    expected(0, 1) = Rational(-2) * a * b;
    expected(1, 0) = Rational(2) * a * b;
    expected(1, 1) = a * a - b * b;
    const auto rho = twisted_adjoint_matrix(x).matrix();
    o.require(rho == expected, "Spin(2) doubled angle");
    const auto back = lift_isometry(q, rho);
    o.require(back.element == x || back.element == -x, "Spin(2) lift");
  }
  o.require(twisted_adjoint_matrix(expr::evaluate("3/5 + 4/5*e12", q)).matrix() ==
                parse_matrix("-7/25,-24/25;24/25,-7/25"),
            "(3/5,4/5) example");
  o.detail = std::to_string(lifted) + " lifts reproduce M (" + std::to_string(normalized) + " normalized exactly, " +
             std::to_string(lifted - normalized) + " flagged for irrational normalization); Pin(1) = Z4; " +
             "7 Pythagorean Spin(2) points";
  return o;
}

// ---- 8 -------------------------------------------------------------------

int rh_table(int j) {
  static const int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  int shift = 0;
  while (j < 0) {
    j += 8;
    shift -= 4;
  }
  while (j >= 8) {
    j -= 8;
    shift += 4;
  }
  return base[j] + shift;
}

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

Outcome criterion_8() {
  Outcome o;
  int sigs = 0, doubles = 0;
  for (const auto &sig : oracle::signatures_up_to(8, false)) {
    ++sigs;
    const std::string name = sig.to_string();
    const int k = sig.q - rh_table(sig.q - sig.p);
    o.require(idempotent_count_exponent(sig) == k, "k for " + name);
    const auto set = primitive_idempotents(sig);
    o.require(set.idems.size() == (std::size_t{1} << k), "set size for " + name);
    o.require(verify_idempotent_set(set.idems, sig).all(), "idempotent checks for " + name);

    std::size_t ring_dim = 0;
    for (const auto &f : set.idems) {
      o.require(left_ideal_basis(f).dim() == (std::size_t{1} << (sig.n() - k)), "ideal dim for " + name);
      const auto ring = division_ring_info(f);
      o.require(ring.dim == 1 || ring.dim == 2 || ring.dim == 4, "division ring dim for " + name);
      if (ring_dim == 0)
        ring_dim = ring.dim;
      o.require(ring.dim == ring_dim, "division ring not uniform for " + name);
    }

    const auto center = algebra_center(sig);
    o.require(center.size() == 1 || center.size() == 2, "center dim for " + name);
    // the pseudoscalar is central exactly for odd n
    o.require(center.size() == (sig.n() % 2 == 1 ? 2u : 1u), "center dim parity for " + name);
    // double algebra: odd n with the pseudoscalar squaring to +1
    const bool expect_double = sig.n() % 2 == 1 && positive_mod(sig.p - sig.q, 4) == 1;
    bool splits = false;
    if (center.size() == 2) {
      for (const auto &z : center)
        if (!z.is_scalar()) {
          const auto z0 = z - Multivector::scalar(sig, z.scalar_part());
          splits = (z0 * z0).scalar_part().sign() > 0;
        }
    }
    o.require(splits == expect_double, "center splitting for " + name);
    o.require(is_simple(sig) == !expect_double, "simplicity for " + name);
    doubles += expect_double ? 1 : 0;
  }
  o.require(!is_simple(Signature(0, 3)) && algebra_center(Signature(0, 3)).size() == 2, "Cl(0,3) = H+H");
  o.require(!is_simple(Signature(1, 0)) && algebra_center(Signature(1, 0)).size() == 2, "Cl(1,0) = R+R");
  o.detail = std::to_string(sigs) + " signatures with p+q <= 8; " + std::to_string(doubles) +
             " double algebras, each with center R+R; odd-n simple algebras have center C";
  return o;
}

// ---- 9 -------------------------------------------------------------------

Outcome criterion_9() {
  Outcome o;
  oracle::Random rng(901);
  int pairs = 0;
  for (const auto &sig : oracle::signatures_up_to(4, false)) {
    const auto ideal = faithful_ideal(sig);
    o.require(regular_rep_matrix(one(sig), ideal).is_identity(), "rep(1) != I for " + sig.to_string());
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = rng.multivector(sig), y = rng.multivector(sig);
      o.require(regular_rep_matrix(x * y, ideal) == regular_rep_matrix(x, ideal) * regular_rep_matrix(y, ideal),
                "rep(xy) in " + sig.to_string());
      ++pairs;
    }
  }

  const Signature mink(1, 3);
  const auto ideal = faithful_ideal(mink);
  std::vector<RationalMatrix> gamma;
  for (int i = 1; i <= 4; ++i)
    gamma.push_back(regular_rep_matrix(Multivector::generator(mink, i), ideal));
  const auto id8 = RationalMatrix::identity(8);
  o.require(gamma[0].rows() == 8, "gamma matrices are not 8x8");
  o.require(gamma[0] * gamma[0] == id8, "rep(e1)^2 != I");
  for (int i = 1; i < 4; ++i)
    o.require(gamma[static_cast<std::size_t>(i)] * gamma[static_cast<std::size_t>(i)] == Rational(-1) * id8,
              "rep(e_j)^2 != -I");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      o.require((gamma[i] * gamma[j] + gamma[j] * gamma[i]) == RationalMatrix(8, 8), "gammas do not anticommute");

  int intertwined = 0;
  for (const auto &sig : {Signature(2, 0), Signature(3, 0)}) {
    const auto set = primitive_idempotents(sig);
    for (const auto &fi : set.idems)
      for (const auto &fj : set.idems) {
        const auto tw = representation_intertwiner(fi, fj);
        const auto d = tw.forward.rows();
        o.require((tw.forward * tw.backward).is_identity() && (tw.backward * tw.forward).is_identity() &&
                      tw.backward.rows() == d,
                  "intertwiner not invertible");
        for (int trial = 0; trial < 20; ++trial) {
          const auto a = rng.multivector(sig);
          o.require(regular_rep_matrix(a, tw.target) * tw.forward == tw.forward * regular_rep_matrix(a, tw.source),
                    "intertwiner does not commute with the action");
        }
        ++intertwined;
      }
  }

  // Cl(0,3) is H+H: equivalent to itself, the two minimal ideals are not equivalent.
  const Signature q3(0, 3);
  const auto set3 = primitive_idempotents(q3);
  for (const auto &f : set3.idems) {
    const auto tw = representation_intertwiner(f, f);
    o.require(tw.forward.is_identity(), "Cl(0,3) self intertwiner");
  }
  bool not_simple = false;
  try {
    interbasis_element(set3.idems[0], set3.idems[1]);
  } catch (const Error &e) {
    not_simple = e.code() == ErrorCode::NotSimple;
  }
  o.require(not_simple, "Cl(0,3) cross intertwiner should not exist");
  const auto pseudo = expr::evaluate("e123", q3);
  const auto rep_plus = regular_rep_matrix(pseudo, left_ideal_basis(set3.idems[0]));
  const auto rep_minus = regular_rep_matrix(pseudo, left_ideal_basis(set3.idems[1]));
  const auto id4 = RationalMatrix::identity(4);
  o.require(rep_plus == id4 && rep_minus == Rational(-1) * id4, "e123 separates the Cl(0,3) ideals");

  int kernels = 0;
  for (const auto &sig : oracle::signatures_up_to(5, false)) {
    if (is_simple(sig))
      continue;
    const auto minimal = minimal_ideal(sig);
    const auto faithful = faithful_ideal(sig);
    o.require(representation_rank(minimal) < sig.blade_count(), "minimal ideal is faithful in " + sig.to_string());
    o.require(representation_rank(faithful) == sig.blade_count(), "faithful ideal has a kernel in " + sig.to_string());
    const auto [cp, cm] = central_idempotents(sig);
    const auto rp = regular_rep_matrix(cp, minimal), rm = regular_rep_matrix(cm, minimal);
    const auto zero = RationalMatrix(minimal.dim(), minimal.dim());
    o.require(rp == zero || rm == zero, "no explicit kernel element in " + sig.to_string());
    ++kernels;
  }
  o.detail = std::to_string(pairs) + " homomorphism pairs; Cl(1,3) 8x8 gammas; " + std::to_string(intertwined) +
             " intertwiners for Cl(2,0), Cl(3,0); Cl(0,3) ideals inequivalent; " + std::to_string(kernels) +
             " non-simple kernels";
  return o;
}

// ---- 10 ------------------------------------------------------------------

RationalMatrix random_invertible(oracle::Random &rng, std::size_t n) {
  for (;;) {
    RationalMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) = Rational(rng.integer(-2, 2), rng.integer(1, 2));
    if (!p.determinant().is_zero())
      return p;
  }
}

Outcome criterion_10() {
  Outcome o;
  oracle::Random rng(1001);
  int zero_diagonals = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    RationalMatrix a(n, n);
    const bool hollow = trial % 4 == 0; // zero diagonal forces the rescue step
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        a(i, j) = a(j, i) = (hollow && i == j) || rng.integer(0, 3) == 0 ? Rational(0) : rng.rational(4, 3);
    zero_diagonals += hollow ? 1 : 0;
    const BilinearForm b(a);
    const auto d = orthogonal_diagonalize(b);
    o.require(!d.basis.determinant().is_zero(), "basis is singular");
    o.require(d.basis.transpose() * a * d.basis == RationalMatrix::diagonal(d.diag), "not a diagonal congruence");
    int p = 0, q = 0, s = 0;
    for (const auto &x : d.diag)
      (x.sign() > 0 ? p : x.sign() < 0 ? q : s) += 1;
    o.require(d.signature == SignatureCounts{p, q, s}, "signature does not match the diagonal");
    for (int c = 0; c < 10; ++c) {
      const auto r = random_invertible(rng, n);
      o.require(signature_of(BilinearForm(r.transpose() * a * r)) == d.signature, "Sylvester invariance");
    }
  }
  o.detail = "200 random symmetric forms (" + std::to_string(zero_diagonals) +
             " with zero diagonal), 10 congruences each";
  return o;
}

// ---- 11 ------------------------------------------------------------------

std::string word_text(const std::vector<int> &word) {
  if (word.empty())
    return "1";
  std::string s = "e{";
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? "," : "") + std::to_string(word[i]);
  return s + "}";
}

Multivector reduced_value(const std::vector<int> &word, const Signature &sig, int coef = 1) {
  const auto r = oracle::reduce_word(word, sig);
  if (r.coef * coef == 0)
    return Multivector(sig);
  return Multivector::blade(sig, Blade{oracle::word_to_mask(r.indices)}, r.coef * coef);
}

Outcome criterion_11() {
  Outcome o;
  oracle::Random rng(1101);
  int sigs = 0;
  for (const auto &sig : oracle::signatures_up_to(6, true)) {
    ++sigs;
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = rng.multivector(sig, trial % 2 ? 0.5 : 0.15);
      o.require(expr::evaluate(expr::pretty_print(x), sig) == x, "round trip in " + sig.to_string());
    }
  }

  std::size_t words = 0, rewrites = 0;
  for (const auto &sig : oracle::signatures_up_to(3, true)) {
    const int n = sig.n();
    std::vector<std::vector<int>> frontier = {{}};
    for (int len = 0; len <= 5; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto &w : frontier) {
        const auto value = expr::evaluate(word_text(w), sig);
        o.require(value == reduced_value(w, sig), "word " + word_text(w) + " in " + sig.to_string());
        ++words;
        // every single presentation rewrite of w evaluates to the same element
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          std::vector<int> r = w;
          int coef = 1;
          if (w[i] == w[i + 1]) {
            coef = oracle::generator_square(sig, w[i]);
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          } else {
            std::swap(r[i], r[i + 1]);
            coef = -1;
          }
          o.require(value == Rational(coef) * expr::evaluate(word_text(r), sig), "rewrite of " + word_text(w));
          ++rewrites;
        }
        if (len < 5 && n > 0)
          for (int g = 1; g <= n; ++g) {
            auto longer = w;
            longer.push_back(g);
            next.push_back(longer);
          }
      }
      frontier = std::move(next);
    }
  }
  o.detail = "100 round trips in each of " + std::to_string(sigs) + " signatures with n <= 6; " +
             std::to_string(words) + " words and " + std::to_string(rewrites) + " rewrites for n <= 3";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "worked-example isomorphisms", criterion_1},
      {2, "standard basis theorem", criterion_2},
      {3, "involution suite", criterion_3},
      {4, "twisted adjoint of a vector is its reflection", criterion_4},
      {5, "kernel facts", criterion_5},
      {6, "Cartan-Dieudonne factorization", criterion_6},
      {7, "Pin/Spin lifting", criterion_7},
      {8, "Radon-Hurwitz idempotents, ideals, center", criterion_8},
      {9, "representation suite", criterion_9},
      {10, "orthogonal diagonalization and Sylvester", criterion_10},
      {11, "parser round trip and quotient soundness", criterion_11},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out.pass = false;
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s -- %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs);
    for (const auto &p : out.problems)
      std::printf("       %s\n", p.c_str());
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
