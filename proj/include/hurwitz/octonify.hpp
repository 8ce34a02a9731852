#pragma once

// Octonionic products on G(p,q), p+q=3.
//
// Writing x = (x+, x-) for the even/odd split, the two products are
//
//   x * y  = (x+ y+ + ~y- x-,  y- x+ + x- ~y+)
//   x *- y = (x+ y+ - ~y- x-,  y- x+ + x- ~y+)
//
// where juxtaposition is the geometric product and ~ Clifford conjugation.
// Both are unital and composition for the norm N; which of O / Os results is
// decided by the signs of N on the basis.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hurwitz/canonical_algebras.hpp"
#include "hurwitz/ga_core.hpp"
#include "hurwitz/random.hpp"

namespace hurwitz {

enum class BulletVariant { plus, minus };

inline constexpr std::array<BulletVariant, 2> kBulletVariants = {BulletVariant::plus, BulletVariant::minus};

// "+" or "-".
std::string_view to_string(BulletVariant v);
// Accepts "+", "-", "plus", "minus".
std::optional<BulletVariant> parse_bullet_variant(std::string_view text);

Multivector bullet_product(const Multivector& x, const Multivector& y, BulletVariant v = BulletVariant::plus);

// The same products written with reversion:
//   plus:  x+y+ - y-^dag x- + y- x+ + x- y+^dag
//   minus: x+y+ + y-^dag x- + y- x+ + x- y+^dag
// Independent route used to cross-check bullet_product.
Multivector bullet_product_reversion_form(const Multivector& x, const Multivector& y, BulletVariant v);

// x* = (~x+, -x-); coincides with full_grade_inversion.
Multivector octonion_conjugate(const Multivector& x);

// Signs of N on x0..x7 (coefficient order 1, e12, e23, e13, e1, e2, e3, e123).
struct NormDiagonal {
  std::array<int, 8> signs{};

  bool positive_definite() const;
  friend bool operator==(const NormDiagonal&, const NormDiagonal&) = default;
};

std::string to_string(const NormDiagonal& d);

// plus:  (1, l1l2, l2l3, l1l3, l1, l2, l3, l1l2l3)
// minus: the odd half negated.
NormDiagonal norm_diagonal(const Signature& sig, BulletVariant v);

// sum_i signs_i x_i^2.
Rational diagonal_norm(const Multivector& x, BulletVariant v);

// plus: <x x^dag>_0, checked against the scalar x * x*.
// minus: the diagonal formula, checked against the scalar x *- x*.
// Throws ConsistencyError if x * x* is not a scalar or the routes disagree.
Rational octonion_norm(const Multivector& x, BulletVariant v = BulletVariant::plus);

// O when the norm diagonal is positive definite, Os otherwise.
HurwitzClass classify(const Signature& sig, BulletVariant v);

struct ParityNorms {
  Rational even;  // N(x+)
  Rational odd;   // N(x-)
};

ParityNorms parity_norm_decomposition(const Multivector& x);

struct CompositionVerdict {
  bool holds = true;
  std::size_t basis_pairs = 0;
  std::size_t random_pairs = 0;
  std::optional<std::pair<Multivector, Multivector>> counterexample;
};

// Exact N(x*y) == N(x)N(y) on all 64 basis pairs and `trials` random pairs.
CompositionVerdict check_composition(const Signature& sig, BulletVariant v, std::size_t trials,
                                     std::uint64_t seed = kDefaultSeed);

struct AlternativityVerdict {
  bool holds = true;
  std::size_t basis_pairs = 0;
  std::size_t random_pairs = 0;
  std::optional<std::pair<Multivector, Multivector>> counterexample;
};

// x*(x*y) == (x*x)*y and (y*x)*x == y*(x*x) on all basis pairs and `trials`
// random pairs.
AlternativityVerdict check_alternativity(const Signature& sig, BulletVariant v, std::size_t trials,
                                         std::uint64_t seed = kDefaultSeed);

struct AssociatorWitness {
  Blade x;
  Blade y;
  Blade z;
  Multivector left;   // (x*y)*z
  Multivector right;  // x*(y*z)
};

// First basis triple in basis order with a nonzero associator. Throws
// ConsistencyError when every triple associates.
AssociatorWitness nonassociativity_witness(const Signature& sig, BulletVariant v);

// The product on the blade basis (basis order) as a signed-monomial table,
// named "bullet:<tag>:<+|->". Throws ConsistencyError if some blade product is
// not a single signed blade.
AlgebraTable cayley_table_bullet(const Signature& sig, BulletVariant v);

}  // namespace hurwitz
