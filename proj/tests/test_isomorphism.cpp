#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/isomorphism.hpp"

using namespace hurwitz;
using namespace testing_support;

namespace {

oracle::Mv blade_mv(int mask) {
  oracle::Mv x;
  x[static_cast<std::size_t>(mask)] = 1;
  return x;
}

std::array<oracle::Mv, 8> oracle_frame(const Signature& s) { return oracle::biquaternion_frame(lambdas(s)); }

std::vector<oracle::Q> oracle_coordinates(const oracle::Mv& x, const Signature& s) {
  return oracle::biquaternion_coordinates(x, lambdas(s));
}

std::vector<oracle::Q> as_vector(const std::array<Rational, 8>& a) { return {a.begin(), a.end()}; }

// Table built from the oracle product on the given masks.
void check_against_oracle(const AlgebraTable& t, const std::vector<int>& masks, const Signature& s) {
  REQUIRE(t.dim() == static_cast<int>(masks.size()));
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      const oracle::Mv ab = oracle::geometric(blade_mv(masks[a]), blade_mv(masks[b]), lambdas(s));
      const TableEntry& e = t.product(static_cast<int>(a), static_cast<int>(b));
      CHECK(ab[static_cast<std::size_t>(masks[static_cast<std::size_t>(e.index)])] == e.sign);
    }
  }
}

const std::array<int, 8> kTilde{1, 1, -1, -1, -1, -1, -1, -1};
const std::array<int, 8> kBar{1, -1, 1, 1, 1, -1, -1, -1};
const std::array<int, 8> kDagger{1, -1, -1, -1, -1, 1, 1, 1};

}  // namespace

TEST_CASE("subalgebra tables agree with the oracle") {
  for (const Signature& s : all_metrics()) {
    const AlgebraTable ga = geometric_product_table(s);
    CHECK(ga.name() == "ga:" + s.tag());
    check_against_oracle(ga, {0, 1, 2, 4, 3, 6, 5, 7}, s);
    for (int i = 0; i < 8; ++i) {
      const int g = kBasisOrder[static_cast<std::size_t>(i)].grade();
      CHECK(ga.conj_sign(i) == (g < 2 ? 1 : -1));
    }
    check_against_oracle(even_subalgebra_table(s), {0, 3, 6, 5}, s);
    check_against_oracle(pseudoscalar_table(s), {0, 7}, s);
    CHECK(even_subalgebra_table(s).product(1, 2) == TableEntry{3, s.lambda(1)});
  }
  CHECK(even_subalgebra_table(g30()).name() == "even:3,0");
  CHECK(pseudoscalar_table(g12()).name() == "ps:1,2");
}

TEST_CASE("pseudoscalar and even classes") {
  CHECK(pseudoscalar_class(g30()) == HurwitzClass::C);
  CHECK(pseudoscalar_class(g21()) == HurwitzClass::Cs);
  CHECK(pseudoscalar_class(g12()) == HurwitzClass::C);
  CHECK(pseudoscalar_class(g03()) == HurwitzClass::Cs);
  CHECK(even_class(g30()) == HurwitzClass::H);
  CHECK(even_class(g21()) == HurwitzClass::Hs);
  CHECK(even_class(g12()) == HurwitzClass::Hs);
  CHECK(even_class(g03()) == HurwitzClass::H);
  for (const Signature& s : all_metrics()) {
    const oracle::Q sq = oracle::geometric(blade_mv(7), blade_mv(7), lambdas(s))[0];
    CHECK(pseudoscalar_class(s) == (sq < 0 ? HurwitzClass::C : HurwitzClass::Cs));
    CHECK(identify(share(pseudoscalar_table(s))) == pseudoscalar_class(s));
    // H exactly when every even bivector squares to -1.
    bool all_negative = true;
    for (int m : {3, 6, 5}) all_negative = all_negative && oracle::geometric(blade_mv(m), blade_mv(m), lambdas(s))[0] < 0;
    CHECK(even_class(s) == (all_negative ? HurwitzClass::H : HurwitzClass::Hs));
  }
}

TEST_CASE("biquaternion frame") {
  for (const Signature& s : standard_signatures()) {
    const BiquaternionFrame f = biquaternion_frame(s);
    CHECK(f.images[1] == SignedBlade{1, Blade{7}});
    CHECK(f.images[2] == SignedBlade{1, Blade{3}});
    CHECK(f.images[3] == SignedBlade{1, Blade{6}});
    CHECK(f.images[4] == SignedBlade{s.lambda(1), Blade{5}});
  }
  for (const Signature& s : all_metrics()) {
    const BiquaternionFrame f = biquaternion_frame(s);
    const auto expected = oracle_frame(s);
    for (std::size_t n = 0; n < 8; ++n) {
      CHECK(to_oracle(Multivector::basis(s, f.images[n].blade, f.images[n].sign)) == expected[n]);
    }
  }
}

TEST_CASE("biquaternion coordinates match an exact linear solve") {
  const BiquaternionCoords one = biquaternion_decompose(Multivector::scalar(g30(), 1));
  CHECK(one.z[0][0] == 1);
  CHECK(biquaternion_decompose(mv("e12", g30())).z[1][0] == 1);
  for (const Signature& s : standard_signatures()) {
    // e1 = -l2 l3 iota j
    const BiquaternionCoords c = biquaternion_decompose(mv("e1", s));
    CHECK(c.z[2][1] == -s.lambda(1) * s.lambda(2));
    CHECK(as_vector(flatten(c)) == oracle_coordinates(blade_mv(1), s));
  }
  oracle::Gen gen(41);
  for (const Signature& s : all_metrics()) {
    for (int t = 0; t < 40; ++t) {
      const oracle::Mv x = gen.mv();
      const Multivector lx = to_library(x, s);
      const BiquaternionCoords c = biquaternion_decompose(lx);
      CHECK(as_vector(flatten(c)) == oracle_coordinates(x, s));
      CHECK(biquaternion_recompose(c, s) == lx);
      CHECK(unflatten(flatten(c)) == c);
    }
  }
}

TEST_CASE("transported and biquaternion tables") {
  for (const Signature& s : all_metrics()) {
    const AlgebraTable tr = transported_table(s);
    const AlgebraTable bq = biquaternion_table(s);
    CHECK(tr.name() == "transported:" + s.tag());
    CHECK(tr.labels() == biquaternion_labels());
    CHECK(tr.same_structure(bq));
    const auto frame = oracle_frame(s);
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const auto coords = oracle_coordinates(
            oracle::geometric(frame[static_cast<std::size_t>(a)], frame[static_cast<std::size_t>(b)], lambdas(s)), s);
        const TableEntry& e = tr.product(a, b);
        CHECK(coords[static_cast<std::size_t>(e.index)] == e.sign);
      }
    }
  }
}

TEST_CASE("involution dictionary") {
  for (const Signature& s : standard_signatures()) {
    const auto checks = involution_dictionary(s);
    CHECK(checks.size() == 24);
    for (const auto& c : checks) {
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
  CHECK(corresponding_conjugation(Involution::reversion) == BiquaternionConjugation::dagger);
  CHECK(corresponding_conjugation(Involution::inversion) == BiquaternionConjugation::bar);
  CHECK(corresponding_conjugation(Involution::clifford_conjugation) == BiquaternionConjugation::tilde);
  CHECK(biquaternion_conjugation_signs(BiquaternionConjugation::tilde) == kTilde);
  CHECK(biquaternion_conjugation_signs(BiquaternionConjugation::bar) == kBar);
  CHECK(biquaternion_conjugation_signs(BiquaternionConjugation::dagger) == kDagger);

  // Grade signs on the multivector side, coordinate signs on the other.
  const std::array<std::array<int, 4>, 3> grade = {{{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  const std::array<std::array<int, 8>, 3> coord = {kDagger, kBar, kTilde};
  oracle::Gen gen(42);
  for (const Signature& s : all_metrics()) {
    for (int t = 0; t < 20; ++t) {
      const oracle::Mv x = gen.mv();
      const auto base = oracle_coordinates(x, s);
      for (std::size_t n = 0; n < 3; ++n) {
        const oracle::Mv y = oracle::grade_signs(x, grade[n]);
        CHECK(to_oracle(apply(kInvolutions[n], to_library(x, s))) == y);
        const auto image = oracle_coordinates(y, s);
        for (std::size_t m = 0; m < 8; ++m) CHECK(image[m] == coord[n][m] * base[m]);
      }
    }
  }
}

TEST_CASE("find_isomorphism agrees with brute force") {
  std::vector<std::pair<TablePtr, TablePtr>> pairs;
  for (const Signature& s : standard_signatures()) {
    for (HurwitzClass c : {HurwitzClass::C, HurwitzClass::Cs}) pairs.emplace_back(share(pseudoscalar_table(s)), canonical_table(c));
    for (HurwitzClass c : {HurwitzClass::H, HurwitzClass::Hs}) pairs.emplace_back(share(even_subalgebra_table(s)), canonical_table(c));
    for (BulletVariant v : kBulletVariants) {
      for (HurwitzClass c : {HurwitzClass::O, HurwitzClass::Os}) pairs.emplace_back(share(cayley_table_bullet(s, v)), canonical_table(c));
    }
  }
  pairs.emplace_back(canonical_table(HurwitzClass::H), canonical_table(HurwitzClass::Hs));
  pairs.emplace_back(canonical_table(HurwitzClass::O), canonical_table(HurwitzClass::Os));
  pairs.emplace_back(canonical_table(HurwitzClass::Os), canonical_table(HurwitzClass::Os));
  for (const auto& [a, b] : pairs) {
    CAPTURE(a->name());
    CAPTURE(b->name());
    const auto w = find_isomorphism(a, b);
    CHECK(w.has_value() == oracle::brute_force_isomorphic(*a, *b));
    if (w) {
      CHECK(verify_witness(*w));
      // Direct grid check.
      for (int i = 0; i < a->dim(); ++i) {
        for (int j = 0; j < a->dim(); ++j) {
          const TableEntry& e = a->product(i, j);
          const TableEntry& mi = w->map[static_cast<std::size_t>(i)];
          const TableEntry& mj = w->map[static_cast<std::size_t>(j)];
          const TableEntry& f = b->product(mi.index, mj.index);
          const TableEntry& me = w->map[static_cast<std::size_t>(e.index)];
          CHECK(me.index == f.index);
          CHECK(e.sign * me.sign == mi.sign * mj.sign * f.sign);
        }
      }
    }
  }
}

TEST_CASE("witness verification rejects tampering") {
  const TablePtr src = share(cayley_table_bullet(g30(), BulletVariant::plus));
  const auto w = find_isomorphism(src, canonical_table(HurwitzClass::O));
  REQUIRE(w);
  for (int i = 1; i < 8; ++i) {
    IsomorphismWitness bad = *w;
    bad.map[static_cast<std::size_t>(i)].sign = -bad.map[static_cast<std::size_t>(i)].sign;
    CHECK_FALSE(verify_witness(bad));
  }
  IsomorphismWitness swapped = *w;
  std::swap(swapped.map[1], swapped.map[2]);
  CHECK_FALSE(verify_witness(swapped));
  IsomorphismWitness collapsed = *w;
  collapsed.map[2] = collapsed.map[1];
  CHECK_FALSE(verify_witness(collapsed));

  IsomorphismWitness identity{canonical_table(HurwitzClass::Os), canonical_table(HurwitzClass::Os), {}};
  for (int i = 0; i < 8; ++i) identity.map.push_back({i, 1});
  CHECK(verify_witness(identity));
}

TEST_CASE("find_isomorphism input errors") {
  CHECK_THROWS_AS(find_isomorphism(canonical_table(HurwitzClass::H), canonical_table(HurwitzClass::O)),
                  std::invalid_argument);
  std::vector<TableEntry> p = canonical_table(HurwitzClass::C)->products();
  p[3] = {0, 0};
  const TablePtr degenerate = share(AlgebraTable("deg", {"1", "e1"}, p, {1, -1}));
  CHECK_THROWS_AS(find_isomorphism(degenerate, canonical_table(HurwitzClass::C)), std::invalid_argument);
}

TEST_CASE("classification rows") {
  const std::array<std::array<std::string, 5>, 4> expected = {{{"C⊗H", "H", "C", "O", "Os"},
                                                               {"Cs⊗Hs", "Hs", "Cs", "Os", "Os"},
                                                               {"C⊗Hs", "Hs", "C", "Os", "Os"},
                                                               {"Cs⊗H", "H", "Cs", "Os", "O"}}};
  for (std::size_t n = 0; n < 4; ++n) {
    const ClassificationRow r = classification_row(standard_signatures()[n]);
    CHECK(r.tensor_label() == expected[n][0]);
    CHECK(to_string(r.even) == expected[n][1]);
    CHECK(to_string(r.pseudoscalar) == expected[n][2]);
    CHECK(to_string(r.bullet) == expected[n][3]);
    CHECK(to_string(r.bullet_minus) == expected[n][4]);
  }
}
