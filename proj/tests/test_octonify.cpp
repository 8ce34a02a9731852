#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/octonify.hpp"

using namespace hurwitz;
using namespace testing_support;

namespace {

constexpr Blade E1{1}, E2{2}, E3{4}, E123{7};

bool is_plus(BulletVariant v) { return v == BulletVariant::plus; }

// Norm signs on coefficient order, read from the oracle product.
std::array<int, 8> oracle_diagonal(const Signature& s, BulletVariant v) {
  std::array<int, 8> d{};
  for (std::size_t i = 0; i < 8; ++i) {
    oracle::Mv x;
    x[static_cast<std::size_t>(kCoefficientOrder[i].mask)] = 1;
    d[i] = sgn(oracle::bullet_norm(x, is_plus(v), lambdas(s)));
  }
  return d;
}

}  // namespace

TEST_CASE("variant names") {
  CHECK(to_string(BulletVariant::plus) == "+");
  CHECK(to_string(BulletVariant::minus) == "-");
  CHECK(parse_bullet_variant("minus") == BulletVariant::minus);
  CHECK(parse_bullet_variant("+") == BulletVariant::plus);
  CHECK_FALSE(parse_bullet_variant("*").has_value());
}

TEST_CASE("bullet examples") {
  const Signature s = g30();
  CHECK(bullet_product(mv("e1", s), mv("e1", s)) == mv("-1", s));
  CHECK(bullet_product(mv("e1", s), mv("e2", s)) == mv("e12", s));
  CHECK(bullet_product(mv("1", s), mv("e123", s)) == mv("e123", s));
  CHECK(octonion_norm(mv("e1 + e123", s)) == 2);
  CHECK(octonion_conjugate(mv("1 + e1 + e12 + e123", s)) == mv("1 - e1 - e12 - e123", s));
  CHECK_THROWS_AS(bullet_product(mv("e1", g30()), mv("e1", g03())), std::invalid_argument);
}

TEST_CASE("bullet agrees with the blade-by-blade oracle") {
  oracle::Gen gen(31);
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
          oracle::Mv x, y;
          x[static_cast<std::size_t>(a)] = 1;
          y[static_cast<std::size_t>(b)] = 1;
          CHECK(to_oracle(bullet_product(to_library(x, s), to_library(y, s), v)) ==
                oracle::bullet(x, y, is_plus(v), lambdas(s)));
        }
      }
      for (int t = 0; t < 60; ++t) {
        const oracle::Mv x = gen.mv();
        const oracle::Mv y = gen.mv();
        const Multivector lx = to_library(x, s);
        const Multivector ly = to_library(y, s);
        CHECK(to_oracle(bullet_product(lx, ly, v)) == oracle::bullet(x, y, is_plus(v), lambdas(s)));
        CHECK(bullet_product_reversion_form(lx, ly, v) == bullet_product(lx, ly, v));
      }
    }
  }
}

TEST_CASE("unit and conjugate") {
  oracle::Gen gen(32);
  for (const Signature& s : all_metrics()) {
    const Multivector one = Multivector::scalar(s, 1);
    for (int t = 0; t < 30; ++t) {
      const Multivector x = to_library(gen.mv(), s);
      CHECK(octonion_conjugate(x) == full_grade_inversion(x));
      CHECK(octonion_conjugate(x) == to_library(oracle::grade_signs(to_oracle(x), {1, -1, -1, -1}), s));
      for (BulletVariant v : kBulletVariants) {
        CHECK(bullet_product(one, x, v) == x);
        CHECK(bullet_product(x, one, v) == x);
      }
    }
  }
}

TEST_CASE("norm diagonals") {
  CHECK(norm_diagonal(g30(), BulletVariant::plus).signs == std::array<int, 8>{1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(norm_diagonal(g30(), BulletVariant::minus).signs == std::array<int, 8>{1, 1, 1, 1, -1, -1, -1, -1});
  CHECK(norm_diagonal(g03(), BulletVariant::minus).signs == std::array<int, 8>{1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(norm_diagonal(g21(), BulletVariant::plus).signs == std::array<int, 8>{1, 1, -1, -1, 1, 1, -1, -1});
  CHECK(to_string(norm_diagonal(g30(), BulletVariant::minus)) == "(+,+,+,+,-,-,-,-)");
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      const NormDiagonal d = norm_diagonal(s, v);
      CHECK(d.signs == oracle_diagonal(s, v));
      bool all_positive = true;
      for (int x : d.signs) all_positive = all_positive && x > 0;
      CHECK(d.positive_definite() == all_positive);
    }
  }
}

TEST_CASE("norm agrees with the oracle and the diagonal") {
  oracle::Gen gen(33);
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      for (int t = 0; t < 40; ++t) {
        const oracle::Mv x = gen.mv();
        const Multivector lx = to_library(x, s);
        const Rational n = octonion_norm(lx, v);
        CHECK(n == oracle::bullet_norm(x, is_plus(v), lambdas(s)));
        CHECK(n == diagonal_norm(lx, v));
        if (v == BulletVariant::plus) {
          CHECK(n == oracle::geometric(x, oracle::reverse_factors(x, lambdas(s)), lambdas(s))[0]);
        }
      }
    }
  }
}

TEST_CASE("composition against the oracle norm") {
  oracle::Gen gen(34);
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      for (int t = 0; t < 60; ++t) {
        const oracle::Mv x = gen.mv();
        const oracle::Mv y = gen.mv();
        const oracle::Mv xy = oracle::bullet(x, y, is_plus(v), lambdas(s));
        const auto nx = oracle::bullet_norm(x, is_plus(v), lambdas(s));
        const auto ny = oracle::bullet_norm(y, is_plus(v), lambdas(s));
        CHECK(oracle::bullet_norm(xy, is_plus(v), lambdas(s)) == nx * ny);
        CHECK(octonion_norm(bullet_product(to_library(x, s), to_library(y, s), v), v) == nx * ny);
      }
    }
  }
}

TEST_CASE("parity decomposition of the norm") {
  oracle::Gen gen(35);
  for (const Signature& s : standard_signatures()) {
    for (int t = 0; t < 50; ++t) {
      const Multivector x = to_library(gen.mv(), s);
      const GradedParts parts = parity_split(x);
      const ParityNorms pn = parity_norm_decomposition(x);
      CHECK(pn.even == octonion_norm(parts.even));
      CHECK(pn.odd == octonion_norm(parts.odd));
      CHECK(pn.even + pn.odd == octonion_norm(x));
      // N(x+) = <x+ x+^dag>_0 by the oracle
      const oracle::Mv e = to_oracle(parts.even);
      CHECK(pn.even == oracle::geometric(e, oracle::reverse_factors(e, lambdas(s)), lambdas(s))[0]);
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(g30(), BulletVariant::plus) == HurwitzClass::O);
  CHECK(classify(g30(), BulletVariant::minus) == HurwitzClass::Os);
  CHECK(classify(g21(), BulletVariant::plus) == HurwitzClass::Os);
  CHECK(classify(g21(), BulletVariant::minus) == HurwitzClass::Os);
  CHECK(classify(g12(), BulletVariant::plus) == HurwitzClass::Os);
  CHECK(classify(g12(), BulletVariant::minus) == HurwitzClass::Os);
  CHECK(classify(g03(), BulletVariant::plus) == HurwitzClass::Os);
  CHECK(classify(g03(), BulletVariant::minus) == HurwitzClass::O);
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      bool definite = true;
      for (int d : oracle_diagonal(s, v)) definite = definite && d > 0;
      CHECK(classify(s, v) == (definite ? HurwitzClass::O : HurwitzClass::Os));
    }
  }
}

TEST_CASE("composition and alternativity checkers") {
  for (const Signature& s : standard_signatures()) {
    for (BulletVariant v : kBulletVariants) {
      const CompositionVerdict c = check_composition(s, v, 50, 7);
      CHECK(c.holds);
      CHECK(c.basis_pairs == 64);
      CHECK(c.random_pairs == 50);
      CHECK_FALSE(c.counterexample.has_value());
      const AlternativityVerdict a = check_alternativity(s, v, 20, 7);
      CHECK(a.holds);
      CHECK(a.basis_pairs == 64);
      CHECK(a.random_pairs == 20);
    }
  }
}

TEST_CASE("non-associativity witness") {
  const AssociatorWitness w = nonassociativity_witness(g30(), BulletVariant::plus);
  CHECK(w.x == E1);
  CHECK(w.y == E2);
  CHECK(w.z == E3);
  CHECK(w.left == Multivector::basis(g30(), E123));
  CHECK(w.right == Multivector::basis(g30(), E123, -1));
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      const AssociatorWitness u = nonassociativity_witness(s, v);
      oracle::Mv x, y, z;
      x[static_cast<std::size_t>(u.x.mask)] = 1;
      y[static_cast<std::size_t>(u.y.mask)] = 1;
      z[static_cast<std::size_t>(u.z.mask)] = 1;
      const auto& l = lambdas(s);
      const oracle::Mv left = oracle::bullet(oracle::bullet(x, y, is_plus(v), l), z, is_plus(v), l);
      const oracle::Mv right = oracle::bullet(x, oracle::bullet(y, z, is_plus(v), l), is_plus(v), l);
      CHECK(to_oracle(u.left) == left);
      CHECK(to_oracle(u.right) == right);
      CHECK(left != right);
    }
  }
}

TEST_CASE("bullet Cayley tables") {
  const AlgebraTable t = cayley_table_bullet(g30(), BulletVariant::plus);
  CHECK(t.name() == "bullet:3,0:+");
  CHECK(t.labels() == std::vector<std::string>{"1", "e1", "e2", "e3", "e12", "e23", "e13", "e123"});
  CHECK(t.product(1, 1) == TableEntry{0, -1});
  CHECK(t.product(1, 2) == TableEntry{4, 1});
  for (const Signature& s : all_metrics()) {
    for (BulletVariant v : kBulletVariants) {
      const AlgebraTable table = cayley_table_bullet(s, v);
      CHECK(table.is_signed_monomial());
      for (int i = 0; i < 8; ++i) {
        CHECK(table.conj_sign(i) == (i == 0 ? 1 : -1));
        for (int j = 0; j < 8; ++j) {
          oracle::Mv x, y;
          x[static_cast<std::size_t>(kBasisOrder[static_cast<std::size_t>(i)].mask)] = 1;
          y[static_cast<std::size_t>(kBasisOrder[static_cast<std::size_t>(j)].mask)] = 1;
          const oracle::Mv xy = oracle::bullet(x, y, is_plus(v), lambdas(s));
          const TableEntry& e = table.product(i, j);
          CHECK(xy[static_cast<std::size_t>(kBasisOrder[static_cast<std::size_t>(e.index)].mask)] == e.sign);
        }
      }
      // Alternativity on the table itself, independent of the multivector path.
      const oracle::Mv probe = [] {
        oracle::Mv p;
        for (int m = 0; m < 8; ++m) p[static_cast<std::size_t>(m)] = m + 1;
        return p;
      }();
      CHECK(oracle::bullet(probe, oracle::bullet(probe, probe, is_plus(v), lambdas(s)), is_plus(v), lambdas(s)) ==
            oracle::bullet(oracle::bullet(probe, probe, is_plus(v), lambdas(s)), probe, is_plus(v), lambdas(s)));
    }
  }
}
