#include "hurwitz/octonify.hpp"

#include <algorithm>

namespace hurwitz {

std::string_view to_string(BulletVariant v) { return v == BulletVariant::plus ? "+" : "-"; }

std::optional<BulletVariant> parse_bullet_variant(std::string_view text) {
  if (text == "+" || text == "plus") return BulletVariant::plus;
  if (text == "-" || text == "minus") return BulletVariant::minus;
  return std::nullopt;
}

Multivector bullet_product(const Multivector& x, const Multivector& y, BulletVariant v) {
  require_same_signature(x, y);
  const auto [xe, xo] = parity_split(x);
  const auto [ye, yo] = parity_split(y);
  const Multivector cross = clifford_conjugation(yo) * xo;
  const Multivector even = v == BulletVariant::plus ? xe * ye + cross : xe * ye - cross;
  const Multivector odd = yo * xe + xo * clifford_conjugation(ye);
  return even + odd;
}

Multivector bullet_product_reversion_form(const Multivector& x, const Multivector& y, BulletVariant v) {
  require_same_signature(x, y);
  const auto [xe, xo] = parity_split(x);
  const auto [ye, yo] = parity_split(y);
  const Multivector cross = reversion(yo) * xo;
  const Multivector even = v == BulletVariant::plus ? xe * ye - cross : xe * ye + cross;
  return even + yo * xe + xo * reversion(ye);
}

Multivector octonion_conjugate(const Multivector& x) {
  const auto [even, odd] = parity_split(x);
  return clifford_conjugation(even) - odd;
}

bool NormDiagonal::positive_definite() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

std::string to_string(const NormDiagonal& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.signs.size(); ++i) {
    if (i) out += ",";
    out += d.signs[i] > 0 ? "+" : "-";
  }
  return out + ")";
}

NormDiagonal norm_diagonal(const Signature& sig, BulletVariant v) {
  const int l1 = sig.lambda(0);
  const int l2 = sig.lambda(1);
  const int l3 = sig.lambda(2);
  const int odd = v == BulletVariant::plus ? 1 : -1;
  return {{1, l1 * l2, l2 * l3, l1 * l3, odd * l1, odd * l2, odd * l3, odd * l1 * l2 * l3}};
}

Rational diagonal_norm(const Multivector& x, BulletVariant v) {
  const NormDiagonal d = norm_diagonal(x.signature(), v);
  const Multivector::Coeffs c = x.coefficients();
  Rational sum;
  for (std::size_t i = 0; i < 8; ++i) {
    const Rational sq = c[i] * c[i];
    if (d.signs[i] > 0) {
      sum += sq;
    } else {
      sum -= sq;
    }
  }
  return sum;
}

Rational octonion_norm(const Multivector& x, BulletVariant v) {
  const Multivector prod = bullet_product(x, octonion_conjugate(x), v);
  if (prod != Multivector::scalar(x.signature(), scalar_part(prod))) {
    throw ConsistencyError("x * x* is not a scalar for x = " + to_string(x));
  }
  const Rational n = v == BulletVariant::plus ? Rational(scalar_part(x * reversion(x))) : diagonal_norm(x, v);
  if (n != scalar_part(prod)) {
    throw ConsistencyError("norm routes disagree for x = " + to_string(x));
  }
  return n;
}

HurwitzClass classify(const Signature& sig, BulletVariant v) {
  return norm_diagonal(sig, v).positive_definite() ? HurwitzClass::O : HurwitzClass::Os;
}

ParityNorms parity_norm_decomposition(const Multivector& x) {
  const auto [even, odd] = parity_split(x);
  return {octonion_norm(even), octonion_norm(odd)};
}

namespace {

Multivector random_multivector(const Signature& sig, RationalSampler& rng) {
  return {sig, rng.next_array<8>()};
}

std::uint64_t case_seed(std::uint64_t seed, std::string_view what, const Signature& sig, BulletVariant v) {
  return derive_seed(seed, std::string(what) + ":" + sig.tag() + ":" + std::string(to_string(v)));
}

}  // namespace

CompositionVerdict check_composition(const Signature& sig, BulletVariant v, std::size_t trials, std::uint64_t seed) {
  CompositionVerdict verdict;
  auto check = [&](const Multivector& x, const Multivector& y) {
    if (octonion_norm(bullet_product(x, y, v), v) != octonion_norm(x, v) * octonion_norm(y, v)) {
      verdict.holds = false;
      verdict.counterexample.emplace(x, y);
    }
    return verdict.holds;
  };
  for (Blade a : kBasisOrder) {
    for (Blade b : kBasisOrder) {
      ++verdict.basis_pairs;
      if (!check(Multivector::basis(sig, a), Multivector::basis(sig, b))) return verdict;
    }
  }
  RationalSampler rng(case_seed(seed, "composition", sig, v));
  for (std::size_t t = 0; t < trials; ++t) {
    const Multivector x = random_multivector(sig, rng);
    const Multivector y = random_multivector(sig, rng);
    ++verdict.random_pairs;
    if (!check(x, y)) return verdict;
  }
  return verdict;
}

AlternativityVerdict check_alternativity(const Signature& sig, BulletVariant v, std::size_t trials,
                                         std::uint64_t seed) {
  AlternativityVerdict verdict;
  auto check = [&](const Multivector& x, const Multivector& y) {
    const Multivector xx = bullet_product(x, x, v);
    const bool left = bullet_product(x, bullet_product(x, y, v), v) == bullet_product(xx, y, v);
    const bool right = bullet_product(bullet_product(y, x, v), x, v) == bullet_product(y, xx, v);
    if (!left || !right) {
      verdict.holds = false;
      verdict.counterexample.emplace(x, y);
    }
    return verdict.holds;
  };
  for (Blade a : kBasisOrder) {
    for (Blade b : kBasisOrder) {
      ++verdict.basis_pairs;
      if (!check(Multivector::basis(sig, a), Multivector::basis(sig, b))) return verdict;
    }
  }
  RationalSampler rng(case_seed(seed, "alternativity", sig, v));
  for (std::size_t t = 0; t < trials; ++t) {
    const Multivector x = random_multivector(sig, rng);
    const Multivector y = random_multivector(sig, rng);
    ++verdict.random_pairs;
    if (!check(x, y)) return verdict;
  }
  return verdict;
}

AssociatorWitness nonassociativity_witness(const Signature& sig, BulletVariant v) {
  for (Blade a : kBasisOrder) {
    for (Blade b : kBasisOrder) {
      for (Blade c : kBasisOrder) {
        const Multivector x = Multivector::basis(sig, a);
        const Multivector y = Multivector::basis(sig, b);
        const Multivector z = Multivector::basis(sig, c);
        Multivector left = bullet_product(bullet_product(x, y, v), z, v);
        Multivector right = bullet_product(x, bullet_product(y, z, v), v);
        if (left != right) return {a, b, c, std::move(left), std::move(right)};
      }
    }
  }
  throw ConsistencyError("no associator witness for " + sig.name() + " variant " + std::string(to_string(v)));
}

AlgebraTable cayley_table_bullet(const Signature& sig, BulletVariant v) {
  std::vector<std::string> labels;
  for (Blade b : kBasisOrder) labels.emplace_back(b.label());

  std::vector<TableEntry> product;
  for (Blade a : kBasisOrder) {
    for (Blade b : kBasisOrder) {
      const Multivector r = bullet_product(Multivector::basis(sig, a), Multivector::basis(sig, b), v);
      std::optional<TableEntry> entry;
      for (Blade out : kBasisOrder) {
        const Rational& c = r[out];
        if (sgn(c) == 0) continue;
        if (entry || (c != 1 && c != -1)) {
          throw ConsistencyError("bullet product of " + std::string(a.label()) + " and " + std::string(b.label()) +
                                 " is not a signed blade: " + to_string(r));
        }
        entry = TableEntry{basis_position(out), sgn(c)};
      }
      if (!entry) throw ConsistencyError("bullet product of two blades vanished");
      product.push_back(*entry);
    }
  }

  std::vector<int> conj;
  for (Blade b : kBasisOrder) {
    conj.push_back(sgn(octonion_conjugate(Multivector::basis(sig, b))[b]));
  }
  return {"bullet:" + sig.tag() + ":" + std::string(to_string(v)), std::move(labels), std::move(product),
          std::move(conj), 0};
}

}  // namespace hurwitz
