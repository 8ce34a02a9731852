#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/ga_core.hpp"

using namespace hurwitz;
using namespace testing_support;

namespace {

constexpr Blade S{0}, E1{1}, E2{2}, E3{4}, E12{3}, E23{6}, E13{5}, E123{7};

}  // namespace

TEST_CASE("signature") {
  CHECK(g30().lambdas() == std::array<int, 3>{1, 1, 1});
  CHECK(g21().lambdas() == std::array<int, 3>{1, 1, -1});
  CHECK(g12().lambdas() == std::array<int, 3>{-1, -1, 1});
  CHECK(g03().lambdas() == std::array<int, 3>{-1, -1, -1});
  for (const auto& s : all_metrics()) CHECK(s.p() + s.q() == 3);
  CHECK(g21().p() == 2);
  CHECK(g21().q() == 1);
  CHECK(g30().name() == "G(3,0)");
  CHECK(Signature(-1, 1, 1).name() == "G(2,1)[-1,1,1]");
  CHECK(g12().tag() == "1,2");
  CHECK_THROWS_AS(Signature(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Signature(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Signature::from_pq(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Signature::from_pq(-1, 4), std::invalid_argument);
}

TEST_CASE("blades and orders") {
  CHECK(E123.grade() == 3);
  CHECK(E13.grade() == 2);
  CHECK(S.grade() == 0);
  std::vector<std::string> labels;
  for (Blade b : kBasisOrder) labels.emplace_back(b.label());
  CHECK(labels == std::vector<std::string>{"1", "e1", "e2", "e3", "e12", "e23", "e13", "e123"});
  std::vector<std::string> coeff;
  for (Blade b : kCoefficientOrder) coeff.emplace_back(b.label());
  CHECK(coeff == std::vector<std::string>{"1", "e12", "e23", "e13", "e1", "e2", "e3", "e123"});
  for (int i = 0; i < 8; ++i) {
    CHECK(basis_position(kBasisOrder[static_cast<std::size_t>(i)]) == i);
    CHECK(coefficient_position(kCoefficientOrder[static_cast<std::size_t>(i)]) == i);
  }
}

TEST_CASE("blade_product examples") {
  CHECK(blade_product(E1, E1, g30()) == SignedBlade{1, S});
  for (const auto& s : all_metrics()) {
    CHECK(blade_product(E1, E2, s) == SignedBlade{1, E12});
    CHECK(blade_product(E2, E1, s) == SignedBlade{-1, E12});
  }
  CHECK(blade_product(E12, E23, g30()) == SignedBlade{1, E13});
}

TEST_CASE("blade_product agrees with the generator-sorting oracle on every metric") {
  for (const auto& s : all_metrics()) {
    for (std::uint8_t a = 0; a < 8; ++a) {
      for (std::uint8_t b = 0; b < 8; ++b) {
        const auto w = oracle::multiply_words(oracle::gens_of(a), oracle::gens_of(b), lambdas(s));
        const SignedBlade got = blade_product(Blade{a}, Blade{b}, s);
        CHECK(got.sign == w.sign);
        CHECK(got.blade.mask == oracle::mask_of(w.gens));
        CHECK(got.blade.mask == (a ^ b));
      }
    }
  }
}

TEST_CASE("(e1e2)(e2e3) = l2 e1e3 for every metric") {
  for (const auto& s : all_metrics()) CHECK(blade_product(E12, E23, s) == SignedBlade{s.lambda(1), E13});
}

TEST_CASE("geometric_product examples") {
  const auto s = g30();
  const Multivector x = mv("3 - 1/2*e1 + 2*e23 + e123", s);
  CHECK(Multivector::scalar(s, 1) * x == x);
  CHECK(x * Multivector::scalar(s, 1) == x);
  const Multivector ps = Multivector::basis(s, E123);
  CHECK(ps * ps == Multivector::scalar(s, -1));
  CHECK(mv("e1 + e2", s) * mv("e1 - e2", s) == mv("-2*e12", s));
}

TEST_CASE("geometric_product agrees with the oracle on random pairs") {
  oracle::Gen gen(11);
  for (const auto& s : all_metrics()) {
    for (int t = 0; t < 200; ++t) {
      const oracle::Mv x = gen.mv();
      const oracle::Mv y = gen.mv();
      CHECK(to_oracle(to_library(x, s) * to_library(y, s)) == oracle::geometric(x, y, lambdas(s)));
    }
  }
}

TEST_CASE("geometric_product rejects mixed signatures") {
  CHECK_THROWS_AS(Multivector::scalar(g30(), 1) * Multivector::scalar(g03(), 1), std::invalid_argument);
  CHECK_THROWS_AS(Multivector::scalar(g30(), 1) + Multivector::scalar(g21(), 1), std::invalid_argument);
  CHECK_THROWS_AS(inner(Multivector(g12()), Multivector(g03())), std::invalid_argument);
}

TEST_CASE("zero is valid everywhere") {
  for (const auto& s : standard_signatures()) {
    const Multivector z(s);
    const Multivector x = mv("1 + e1 + e12 + e123", s);
    CHECK(z.is_zero());
    CHECK((z * x).is_zero());
    CHECK((x * z).is_zero());
    CHECK(reversion(z).is_zero());
    CHECK(parity_split(z).even.is_zero());
    CHECK(parity_split(z).odd.is_zero());
    CHECK(to_string(z) == "0");
  }
}

TEST_CASE("grade_select") {
  const auto s = g21();
  CHECK(grade_select(mv("3 + 2*e1", s), 0) == Multivector::scalar(s, 3));
  CHECK(grade_select(Multivector::basis(s, E123), 3) == Multivector::basis(s, E123));
  CHECK_THROWS_AS(grade_select(Multivector(s), 4), std::invalid_argument);
  CHECK_THROWS_AS(grade_select(Multivector(s), -1), std::invalid_argument);
  oracle::Gen gen(12);
  for (int t = 0; t < 100; ++t) {
    const Multivector x = to_library(gen.mv(), s);
    CHECK(grade_select(x, 0) + grade_select(x, 1) + grade_select(x, 2) + grade_select(x, 3) == x);
  }
}

TEST_CASE("parity_split") {
  const auto s = g12();
  auto [e1, o1] = parity_split(mv("1 + e1", s));
  CHECK(e1 == Multivector::scalar(s, 1));
  CHECK(o1 == Multivector::basis(s, E1));
  auto [e2, o2] = parity_split(mv("e12 + e123", s));
  CHECK(e2 == Multivector::basis(s, E12));
  CHECK(o2 == Multivector::basis(s, E123));
  oracle::Gen gen(13);
  for (int t = 0; t < 100; ++t) {
    const Multivector x = to_library(gen.mv(), s);
    const auto [even, odd] = parity_split(x);
    CHECK(even + odd == x);
    for (Blade b : kBasisOrder) {
      if (b.grade() % 2 == 0) CHECK(sgn(odd[b]) == 0);
      if (b.grade() % 2 == 1) CHECK(sgn(even[b]) == 0);
    }
  }
}

TEST_CASE("inner and wedge") {
  const auto s = g03();
  const Multivector e1 = Multivector::basis(s, E1);
  const Multivector e2 = Multivector::basis(s, E2);
  CHECK(wedge(e1, e1).is_zero());
  CHECK(inner(e1, e2).is_zero());
  CHECK(wedge(e1, e2) == Multivector::basis(s, E12));
  CHECK(inner(e1, e1) == Multivector::scalar(s, -1));
  oracle::Gen gen(14);
  for (int t = 0; t < 100; ++t) {
    const Multivector x = to_library(gen.mv(), s);
    const Multivector y = to_library(gen.mv(), s);
    CHECK(inner(x, y) + wedge(x, y) == x * y);
  }
}

TEST_CASE("fundamental relation for vectors") {
  oracle::Gen gen(15);
  for (const auto& s : standard_signatures()) {
    for (int t = 0; t < 200; ++t) {
      const Multivector x = grade_select(to_library(gen.mv(), s), 1);
      const Multivector y = grade_select(to_library(gen.mv(), s), 1);
      const Multivector sym = x * y + y * x;
      CHECK(sym == grade_select(sym, 0));
      CHECK(sym == Rational(2) * inner(x, y));
      // 2<x,y> = 2 sum_i l_i x_i y_i
      Rational dot;
      for (int i = 0; i < 3; ++i) {
        const Blade b{static_cast<std::uint8_t>(1u << i)};
        dot += s.lambda(i) * x[b] * y[b];
      }
      CHECK(scalar_part(sym) == 2 * dot);
    }
  }
}

TEST_CASE("involution examples") {
  const auto s = g30();
  const auto b = [&](Blade x) { return Multivector::basis(s, x); };
  CHECK(reversion(b(E12)) == -b(E12));
  CHECK(reversion(b(E1)) == b(E1));
  CHECK(reversion(b(E123)) == -b(E123));
  CHECK(inversion(b(E1)) == -b(E1));
  CHECK(inversion(b(E12)) == b(E12));
  CHECK(inversion(b(S)) == b(S));
  CHECK(clifford_conjugation(b(E12)) == -b(E12));
  CHECK(clifford_conjugation(b(E123)) == b(E123));
  CHECK(clifford_conjugation(b(S)) == b(S));
  CHECK(full_grade_inversion(Multivector::scalar(s, 5)) == Multivector::scalar(s, 5));
  CHECK(full_grade_inversion(b(E12)) == -b(E12));
  CHECK(full_grade_inversion(mv("1 + e1 + e12 + e123", s)) == mv("1 - e1 - e12 - e123", s));
}

TEST_CASE("reversion matches factor reversal on blades") {
  for (const auto& s : all_metrics()) {
    for (Blade b : kBasisOrder) {
      oracle::Mv x;
      x[b.mask] = 1;
      CHECK(to_oracle(reversion(to_library(x, s))) == oracle::reverse_factors(x, lambdas(s)));
    }
  }
}

TEST_CASE("involution identities") {
  oracle::Gen gen(16);
  for (const auto& s : standard_signatures()) {
    for (int t = 0; t < 200; ++t) {
      const Multivector x = to_library(gen.mv(), s);
      const Multivector y = to_library(gen.mv(), s);
      CHECK(reversion(x * y) == reversion(y) * reversion(x));
      CHECK(inversion(x * y) == inversion(x) * inversion(y));
      CHECK(clifford_conjugation(x * y) == clifford_conjugation(y) * clifford_conjugation(x));
      CHECK(clifford_conjugation(x) == inversion(reversion(x)));
      CHECK(clifford_conjugation(x) == reversion(inversion(x)));
      CHECK(reversion(reversion(x)) == x);
      CHECK(inversion(inversion(x)) == x);
      CHECK(clifford_conjugation(clifford_conjugation(x)) == x);
      const auto [even, odd] = parity_split(x);
      CHECK(inversion(x) == even - odd);
      CHECK(full_grade_inversion(x) == Multivector::scalar(s, 2 * scalar_part(x)) - x);
    }
  }
}

TEST_CASE("pseudoscalar is central and squared relations hold on every metric") {
  for (const auto& s : all_metrics()) {
    const Multivector ps = Multivector::basis(s, E123);
    for (Blade b : kBasisOrder) {
      const Multivector e = Multivector::basis(s, b);
      CHECK(ps * e == e * ps);
    }
    const std::array<Blade, 3> v = {E1, E2, E3};
    for (int i = 0; i < 3; ++i) {
      const Multivector ei = Multivector::basis(s, v[static_cast<std::size_t>(i)]);
      CHECK(ei * ei == Multivector::scalar(s, s.lambda(i)));
      for (int j = i + 1; j < 3; ++j) {
        const Multivector b = ei * Multivector::basis(s, v[static_cast<std::size_t>(j)]);
        CHECK(b * b == Multivector::scalar(s, -s.lambda(i) * s.lambda(j)));
      }
    }
    CHECK(ps * ps == Multivector::scalar(s, -s.lambda(0) * s.lambda(1) * s.lambda(2)));
  }
}

TEST_CASE("associativity on random triples") {
  oracle::Gen gen(17);
  for (const auto& s : standard_signatures()) {
    for (int t = 0; t < 300; ++t) {
      const Multivector x = to_library(gen.mv(), s);
      const Multivector y = to_library(gen.mv(), s);
      const Multivector z = to_library(gen.mv(), s);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("x x^dag has support in grades 0 and 1 and matching even parts") {
  oracle::Gen gen(18);
  for (const auto& s : standard_signatures()) {
    for (int t = 0; t < 200; ++t) {
      const Multivector x = to_library(gen.mv(), s);
      const Multivector a = x * reversion(x);
      const Multivector b = reversion(x) * x;
      CHECK(a == grade_select(a, 0) + grade_select(a, 1));
      CHECK(parity_split(a).even == parity_split(b).even);
    }
  }
}

TEST_CASE("coefficient order round trip") {
  const auto s = g21();
  Multivector::Coeffs x;
  for (int i = 0; i < 8; ++i) x[static_cast<std::size_t>(i)] = i + 1;
  const Multivector m = Multivector::from_coefficients(s, x);
  CHECK(m[E12] == 2);
  CHECK(m[E1] == 5);
  CHECK(m[E123] == 8);
  CHECK(m.coefficients() == x);
}

TEST_CASE("text form") {
  const auto s = g30();
  const Multivector x = mv("3 + 2*e1 - 1/2*e12", s);
  CHECK(to_string(x) == "3 + 2*e1 - 1/2*e12");
  CHECK(to_string(mv("-e123 + e2", s)) == "e2 - e123");
  CHECK(to_string(mv("e31", s)) == "-e13");
  CHECK(mv("e21", s) == -Multivector::basis(s, E12));
  CHECK(mv("e321", s) == -Multivector::basis(s, E123));
  CHECK(mv("e231", s) == Multivector::basis(s, E123));
  CHECK(mv("2*1", s) == Multivector::scalar(s, 2));
  CHECK(mv("e1 + e1", s) == Rational(2) * Multivector::basis(s, E1));
  CHECK(mv("  -4/6*e2 ", s)[E2] == Rational(-2, 3));
  for (const char* bad : {"", "e4", "e11", "3 e1", "1/0", "e", "*e1", "2**e1", "e1 +", "x"}) {
    CHECK_THROWS_AS(mv(bad, s), std::invalid_argument);
  }
  oracle::Gen gen(19);
  for (int t = 0; t < 100; ++t) {
    const Multivector r = to_library(gen.mv(), s);
    CHECK(mv(to_string(r), s) == r);
  }
}
