#pragma once

// Exact multivector arithmetic for the 3D geometric algebras G(p,q), p+q=3.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Diagonal metric Q = diag(l1, l2, l3), each entry +1 or -1.
class Signature {
 public:
  Signature(int l1, int l2, int l3);

  // The explicit metric triples used for G(p,q):
  //   G(3,0) = (1,1,1), G(2,1) = (1,1,-1), G(1,2) = (-1,-1,1), G(0,3) = (-1,-1,-1).
  // Throws std::invalid_argument unless p,q >= 0 and p + q == 3.
  static Signature from_pq(int p, int q);

  // Metric sign of generator e_{i+1}, i in 0..2.
  int lambda(int i) const { return lambdas_.at(static_cast<std::size_t>(i)); }
  const std::array<int, 3>& lambdas() const { return lambdas_; }
  int p() const;
  int q() const;

  // "G(p,q)", plus the triple when it is not the standard one for (p,q).
  std::string name() const;
  // "p,q" for the standard triple of (p,q), otherwise "l1,l2,l3".
  std::string tag() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::array<int, 3> lambdas_;
};

// G(3,0), G(2,1), G(1,2), G(0,3).
const std::array<Signature, 4>& standard_signatures();

// Basis blade, bit i of the mask set iff e_{i+1} is a factor.
struct Blade {
  std::uint8_t mask = 0;

  constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask)); }
  // One of 1, e1, e2, e3, e12, e23, e13, e123.
  std::string_view label() const;

  friend constexpr bool operator==(Blade, Blade) = default;
};

inline constexpr int kBladeCount = 8;

// Basis (and text/table) order: 1, e1, e2, e3, e12, e23, e13, e123.
inline constexpr std::array<Blade, 8> kBasisOrder = {
    Blade{0}, Blade{1}, Blade{2}, Blade{4}, Blade{3}, Blade{6}, Blade{5}, Blade{7}};

// Coefficient order x0..x7: the even part 1, e12, e23, e13 followed by the
// odd part e1, e2, e3, e123. Norm formulas are indexed in this order.
inline constexpr std::array<Blade, 8> kCoefficientOrder = {
    Blade{0}, Blade{3}, Blade{6}, Blade{5}, Blade{1}, Blade{2}, Blade{4}, Blade{7}};

int basis_position(Blade b);
int coefficient_position(Blade b);

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// a*b = sign * (a XOR b). The sign is the parity of the transpositions needed to
// sort the concatenated generator list, times lambda_i for every generator that
// appears in both factors.
SignedBlade blade_product(Blade a, Blade b, const Signature& sig);

class Multivector {
 public:
  using Coeffs = std::array<Rational, 8>;

  explicit Multivector(const Signature& sig) : sig_(sig) {}
  // Coefficients indexed by blade mask.
  Multivector(const Signature& sig, Coeffs by_mask) : sig_(sig), c_(std::move(by_mask)) {}

  static Multivector scalar(const Signature& sig, const Rational& value);
  static Multivector basis(const Signature& sig, Blade b, const Rational& coeff = 1);
  // From x0..x7 (see kCoefficientOrder).
  static Multivector from_coefficients(const Signature& sig, const Coeffs& x);

  const Signature& signature() const { return sig_; }
  const Rational& operator[](Blade b) const { return c_[b.mask]; }
  const Coeffs& by_mask() const { return c_; }
  // x0..x7.
  Coeffs coefficients() const;
  bool is_zero() const;

  friend bool operator==(const Multivector&, const Multivector&) = default;

  friend Multivector operator+(const Multivector& x, const Multivector& y);
  friend Multivector operator-(const Multivector& x, const Multivector& y);
  friend Multivector operator-(const Multivector& x);
  friend Multivector operator*(const Rational& s, const Multivector& x);
  friend Multivector operator*(const Multivector& x, const Rational& s) { return s * x; }
  // Geometric product.
  friend Multivector operator*(const Multivector& x, const Multivector& y);

 private:
  Signature sig_;
  Coeffs c_;
};

// Throws std::invalid_argument when the signatures differ.
void require_same_signature(const Multivector& x, const Multivector& y);

Multivector geometric_product(const Multivector& x, const Multivector& y);

// Throws std::invalid_argument when k is outside 0..3.
Multivector grade_select(const Multivector& x, int k);
const Rational& scalar_part(const Multivector& x);

struct GradedParts {
  Multivector even;  // grades 0, 2
  Multivector odd;   // grades 1, 3
};

GradedParts parity_split(const Multivector& x);

// (xy + yx)/2 and (xy - yx)/2.
Multivector inner(const Multivector& x, const Multivector& y);
Multivector wedge(const Multivector& x, const Multivector& y);

// Grade signs for grades 0..3:
//   reversion            + + - -
//   inversion            + - + -
//   clifford conjugation + - - +
//   full grade inversion + - - -
Multivector reversion(const Multivector& x);
Multivector inversion(const Multivector& x);
Multivector clifford_conjugation(const Multivector& x);
Multivector full_grade_inversion(const Multivector& x);

// Text form "a0 + a1*e1 + ... + a7*e123", terms in basis order, zero terms
// omitted, unit coefficients written as the bare label.
std::string to_string(const Multivector& x);

// Parses the text form. Blade labels may list generators in any order
// (e31 is read as -e13); a repeated generator is an error. Repeated blades
// accumulate. Throws std::invalid_argument on malformed input.
Multivector parse_multivector(std::string_view text, const Signature& sig);

}  // namespace hurwitz
