#include "hurwitz/suites.hpp"

#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "hurwitz/canonical_algebras.hpp"
#include "hurwitz/isomorphism.hpp"
#include "hurwitz/octonify.hpp"

namespace hurwitz {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::ga_axioms: return "ga-axioms";
    case Suite::involutions: return "involutions";
    case Suite::hurwitz_properties: return "hurwitz-properties";
    case Suite::composition: return "composition";
    case Suite::norm_lemma: return "norm-lemma";
    case Suite::isomorphisms: return "isomorphisms";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

using Records = std::vector<CheckRecord>;
using Case = std::function<Records()>;

// ---------------------------------------------------------------------------
// Documented reference values

struct ClassRow {
  const char* tensor;
  HurwitzClass even;
  HurwitzClass ps;
  HurwitzClass bullet;
  HurwitzClass bullet_minus;
};

using H = HurwitzClass;

const ClassRow* documented_row(const Signature& sig) {
  static const std::map<std::array<int, 3>, ClassRow> rows = {
      {{1, 1, 1}, {"C⊗H", H::H, H::C, H::O, H::Os}},
      {{1, 1, -1}, {"Cs⊗Hs", H::Hs, H::Cs, H::Os, H::Os}},
      {{-1, -1, 1}, {"C⊗Hs", H::Hs, H::C, H::Os, H::Os}},
      {{-1, -1, -1}, {"Cs⊗H", H::H, H::Cs, H::Os, H::O}},
  };
  const auto it = rows.find(sig.lambdas());
  return it == rows.end() ? nullptr : &it->second;
}

// Norm signs of the plus product on x0..x7; the minus product flips x4..x7.
std::optional<NormDiagonal> documented_diagonal(const Signature& sig, BulletVariant v) {
  static const std::map<std::array<int, 3>, std::array<int, 8>> plus = {
      {{1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}},
      {{1, 1, -1}, {1, 1, -1, -1, 1, 1, -1, -1}},
      {{-1, -1, 1}, {1, 1, -1, -1, -1, -1, 1, 1}},
      {{-1, -1, -1}, {1, 1, 1, 1, -1, -1, -1, -1}},
  };
  const auto it = plus.find(sig.lambdas());
  if (it == plus.end()) return std::nullopt;
  NormDiagonal d{it->second};
  if (v == BulletVariant::minus) {
    for (std::size_t i = 4; i < 8; ++i) d.signs[i] = -d.signs[i];
  }
  return d;
}

struct PropertyRow {
  bool commutative;
  bool associative;
  bool alternative;
  bool flexible;
  bool division;
};

PropertyRow documented_properties(HurwitzClass c) {
  switch (c) {
    case H::R: return {true, true, true, true, true};
    case H::C: return {true, true, true, true, true};
    case H::Cs: return {true, true, true, true, false};
    case H::H: return {false, true, true, true, true};
    case H::Hs: return {false, true, true, true, false};
    case H::O: return {false, false, true, true, true};
    case H::Os: return {false, false, true, true, false};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Helpers

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string prefix(std::string_view suite, const Signature& sig) {
  return std::string(suite) + "/" + sig.name();
}

std::string prefix(std::string_view suite, const Signature& sig, BulletVariant v) {
  return prefix(suite, sig) + "/" + std::string(to_string(v));
}

Multivector random_multivector(const Signature& sig, RationalSampler& rng) {
  return {sig, rng.next_array<8>()};
}

RationalSampler sampler(const SuiteOptions& o, std::string_view what, const Signature& sig) {
  return RationalSampler(derive_seed(o.seed, std::string(what) + ":" + sig.tag()));
}

// Runs `body`; an escaping exception becomes a failed record.
CheckRecord guarded(std::string name, const std::function<std::optional<std::string>()>& body) {
  try {
    auto failure = body();
    return {std::move(name), !failure.has_value(), std::move(failure)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::vector<Signature> signatures(const SuiteOptions& o) {
  if (o.signature) return {*o.signature};
  return {standard_signatures().begin(), standard_signatures().end()};
}

// ---------------------------------------------------------------------------
// ga-axioms

Records ga_axioms(const Signature& sig, const SuiteOptions& o) {
  const std::string p = prefix("ga-axioms", sig);
  Records out;
  auto blade = [&](Blade b) { return Multivector::basis(sig, b); };
  const std::array<Blade, 3> vectors = {Blade{1}, Blade{2}, Blade{4}};

  out.push_back(guarded(p + "/blade-associativity", [&]() -> std::optional<std::string> {
    for (Blade a : kBasisOrder) {
      for (Blade b : kBasisOrder) {
        for (Blade c : kBasisOrder) {
          if ((blade(a) * blade(b)) * blade(c) != blade(a) * (blade(b) * blade(c))) {
            return std::string(a.label()) + ", " + std::string(b.label()) + ", " + std::string(c.label());
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/associativity", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "ga-associativity", sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      const Multivector y = random_multivector(sig, rng);
      const Multivector z = random_multivector(sig, rng);
      if ((x * y) * z != x * (y * z)) {
        return "x = " + to_string(x) + ", y = " + to_string(y) + ", z = " + to_string(z);
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/pseudoscalar-central", [&]() -> std::optional<std::string> {
    const Multivector ps = blade(Blade{7});
    for (Blade b : kBasisOrder) {
      if (ps * blade(b) != blade(b) * ps) return "e123 does not commute with " + std::string(b.label());
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/vector-squares", [&]() -> std::optional<std::string> {
    for (int i = 0; i < 3; ++i) {
      const Multivector e = blade(vectors[static_cast<std::size_t>(i)]);
      if (e * e != Multivector::scalar(sig, sig.lambda(i))) {
        return std::string(vectors[static_cast<std::size_t>(i)].label()) + "^2 = " + to_string(e * e);
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/anticommutation", [&]() -> std::optional<std::string> {
    for (Blade a : vectors) {
      for (Blade b : vectors) {
        if (a == b) continue;
        if (blade(a) * blade(b) != -(blade(b) * blade(a))) {
          return std::string(a.label()) + std::string(b.label()) + " != -" + std::string(b.label()) +
                 std::string(a.label());
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/bivector-squares", [&]() -> std::optional<std::string> {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Multivector b = blade(vectors[static_cast<std::size_t>(i)]) * blade(vectors[static_cast<std::size_t>(j)]);
        if (b * b != Multivector::scalar(sig, -sig.lambda(i) * sig.lambda(j))) {
          return "(e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + ")^2 = " + to_string(b * b);
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/pseudoscalar-square", [&]() -> std::optional<std::string> {
    const Multivector ps = blade(Blade{1}) * blade(Blade{2}) * blade(Blade{4});
    const int expected = -sig.lambda(0) * sig.lambda(1) * sig.lambda(2);
    if (ps * ps != Multivector::scalar(sig, expected)) return "(e1e2e3)^2 = " + to_string(ps * ps);
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/even-closure", [&]() -> std::optional<std::string> {
    even_subalgebra_table(sig);
    return std::nullopt;
  }));
  return out;
}

// ---------------------------------------------------------------------------
// involutions

Records involutions(const Signature& sig, const SuiteOptions& o) {
  const std::string p = prefix("involutions", sig);
  Records out;
  try {
    for (const InvolutionCheck& c : involution_dictionary(sig)) {
      out.push_back({p + "/" + std::string(to_string(c.involution)) + "/" + std::string(c.blade.label()), c.passed,
                     c.passed ? std::nullopt : std::optional<std::string>(c.detail)});
    }
  } catch (const std::exception& e) {
    out.push_back({p + "/dictionary", false, std::string("exception: ") + e.what()});
  }
  out.push_back(guarded(p + "/decompose-roundtrip", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "biquaternion-roundtrip", sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      if (biquaternion_recompose(biquaternion_decompose(x), sig) != x) return "x = " + to_string(x);
    }
    return std::nullopt;
  }));
  return out;
}

// ---------------------------------------------------------------------------
// hurwitz-properties

Records hurwitz_properties(HurwitzClass c, const SuiteOptions& o) {
  const std::string p = "hurwitz-properties/" + std::string(to_string(c));
  const PropertyRow want = documented_properties(c);
  PropertyOptions popts;
  popts.composition_trials = o.trials;
  popts.seed = derive_seed(o.seed, "properties:" + std::string(to_string(c)));
  PropertyRecord got;
  try {
    got = check_properties(c, popts);
  } catch (const std::exception& e) {
    return {{p, false, std::string("exception: ") + e.what()}};
  }
  auto first_note = [&](std::string_view property) -> std::string {
    for (const auto& line : got.counterexamples) {
      if (line.rfind(property, 0) == 0) return line;
    }
    return {};
  };
  Records out;
  auto compare = [&](const char* property, bool have, bool expected) {
    std::optional<std::string> why;
    if (have != expected) {
      why = std::string(property) + " = " + yes_no(have) + ", expected " + yes_no(expected);
      if (const std::string note = first_note(property); !note.empty()) *why += " (" + note + ")";
    }
    out.push_back({p + "/" + property, have == expected, why});
  };
  compare("unital", got.unital, true);
  compare("commutative", got.commutative, want.commutative);
  compare("associative", got.associative, want.associative);
  compare("alternative", got.alternative, want.alternative);
  compare("flexible", got.flexible, want.flexible);
  compare("composition", got.composition, true);
  compare("conjugation-antiautomorphism", got.conjugation_antiautomorphism, true);

  out.push_back(guarded(p + "/division", [&]() -> std::optional<std::string> {
    if (want.division) {
      if (!got.positive_definite) return std::string("norm is not positive definite");
      if (got.zero_divisor) return "unexpected zero divisor " + to_string(got.zero_divisor->left);
      return std::nullopt;
    }
    if (got.positive_definite) return std::string("norm is positive definite");
    if (!got.zero_divisor) return std::string("no zero divisor found");
    const Element& x = got.zero_divisor->left;
    const Element& y = got.zero_divisor->right;
    if (x.is_zero() || y.is_zero() || !(x * y).is_zero()) {
      return "x = " + to_string(x) + ", y = " + to_string(y) + ", x*y = " + to_string(x * y);
    }
    if (sgn(norm(x)) != 0 || sgn(norm(y)) != 0) return "nonzero norm on zero divisor " + to_string(x);
    return std::nullopt;
  }));
  return out;
}

// ---------------------------------------------------------------------------
// composition

Records composition(const Signature& sig, BulletVariant v, const SuiteOptions& o) {
  const std::string p = prefix("composition", sig, v);
  Records out;

  out.push_back(guarded(p + "/norm-multiplicative", [&]() -> std::optional<std::string> {
    const CompositionVerdict r = check_composition(sig, v, o.trials, o.seed);
    if (r.holds) return std::nullopt;
    const auto& [x, y] = *r.counterexample;
    return "x = " + to_string(x) + ", y = " + to_string(y);
  }));

  out.push_back(guarded(p + "/alternative", [&]() -> std::optional<std::string> {
    const AlternativityVerdict r = check_alternativity(sig, v, o.trials, o.seed);
    if (r.holds) return std::nullopt;
    const auto& [x, y] = *r.counterexample;
    return "x = " + to_string(x) + ", y = " + to_string(y);
  }));

  out.push_back(guarded(p + "/non-associative", [&]() -> std::optional<std::string> {
    const AssociatorWitness w = nonassociativity_witness(sig, v);
    const Multivector x = Multivector::basis(sig, w.x);
    const Multivector y = Multivector::basis(sig, w.y);
    const Multivector z = Multivector::basis(sig, w.z);
    const Multivector left = bullet_product(bullet_product(x, y, v), z, v);
    const Multivector right = bullet_product(x, bullet_product(y, z, v), v);
    if (left == right || left != w.left || right != w.right) {
      return "witness (" + std::string(w.x.label()) + ", " + std::string(w.y.label()) + ", " +
             std::string(w.z.label()) + ") does not re-verify";
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/unital", [&]() -> std::optional<std::string> {
    const Multivector one = Multivector::scalar(sig, 1);
    for (Blade b : kBasisOrder) {
      const Multivector e = Multivector::basis(sig, b);
      if (bullet_product(one, e, v) != e || bullet_product(e, one, v) != e) return std::string(b.label());
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/conjugation-norm", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "conjugation-norm:" + std::string(to_string(v)), sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      const Multivector lhs = bullet_product(x, octonion_conjugate(x), v);
      if (lhs != Multivector::scalar(sig, diagonal_norm(x, v))) return "x = " + to_string(x) + ", x*x* = " + to_string(lhs);
    }
    return std::nullopt;
  }));

  // The ordered-pair form and the reversion form agree blade by blade.
  out.push_back(guarded(p + "/reversion-form", [&]() -> std::optional<std::string> {
    for (Blade a : kBasisOrder) {
      for (Blade b : kBasisOrder) {
        const Multivector x = Multivector::basis(sig, a);
        const Multivector y = Multivector::basis(sig, b);
        if (bullet_product(x, y, v) != bullet_product_reversion_form(x, y, v)) {
          return std::string(a.label()) + ", " + std::string(b.label());
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

// ---------------------------------------------------------------------------
// norm-lemma

Records norm_lemma(const Signature& sig, const SuiteOptions& o) {
  const std::string p = prefix("norm-lemma", sig);
  Records out;

  out.push_back(guarded(p + "/lemma", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "lemma", sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      const Multivector xx = bullet_product(x, octonion_conjugate(x));
      if (xx != Multivector::scalar(sig, scalar_part(xx)) || scalar_part(x * reversion(x)) != scalar_part(xx)) {
        return "x = " + to_string(x);
      }
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/corollary", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "corollary", sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      const ParityNorms parts = parity_norm_decomposition(x);
      if (octonion_norm(x) != parts.even + parts.odd) return "x = " + to_string(x);
    }
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/conjugate-identity", [&]() -> std::optional<std::string> {
    RationalSampler rng = sampler(o, "conjugate-identity", sig);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Multivector x = random_multivector(sig, rng);
      const Multivector c = octonion_conjugate(x);
      if (c != Multivector::scalar(sig, 2 * scalar_part(x)) - x || c != full_grade_inversion(x)) {
        return "x = " + to_string(x);
      }
    }
    return std::nullopt;
  }));

  for (BulletVariant v : kBulletVariants) {
    const std::string pv = p + "/" + std::string(to_string(v));
    if (const auto want = documented_diagonal(sig, v)) {
      out.push_back(guarded(pv + "/diagonal", [&]() -> std::optional<std::string> {
        const NormDiagonal got = norm_diagonal(sig, v);
        if (got != *want) return "got " + to_string(got) + ", expected " + to_string(*want);
        return std::nullopt;
      }));
    }
    // Each diagonal sign equals the norm of the corresponding blade.
    out.push_back(guarded(pv + "/diagonal-on-basis", [&]() -> std::optional<std::string> {
      const NormDiagonal d = norm_diagonal(sig, v);
      for (std::size_t i = 0; i < 8; ++i) {
        const Multivector e = Multivector::basis(sig, kCoefficientOrder[i]);
        const Multivector n = bullet_product(e, octonion_conjugate(e), v);
        if (n != Multivector::scalar(sig, d.signs[i])) {
          return "N(" + std::string(kCoefficientOrder[i].label()) + ") = " + to_string(n);
        }
      }
      return std::nullopt;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// isomorphisms

Records isomorphisms(const Signature& sig, const SuiteOptions&) {
  const std::string p = prefix("isomorphisms", sig);
  Records out;
  std::optional<ClassificationRow> row;
  try {
    row = classification_row(sig);
  } catch (const std::exception& e) {
    out.push_back({p + "/classification", false, std::string("exception: ") + e.what()});
  }
  if (row) {
    if (const ClassRow* want = documented_row(sig)) {
      auto cell = [&](const char* name, const std::string& have, const std::string& expected) {
        out.push_back({p + "/" + name, have == expected,
                       have == expected ? std::nullopt : std::optional<std::string>(have + ", expected " + expected)});
      };
      cell("tensor", row->tensor_label(), want->tensor);
      cell("even", std::string(to_string(row->even)), std::string(to_string(want->even)));
      cell("pseudoscalar", std::string(to_string(row->pseudoscalar)), std::string(to_string(want->ps)));
      cell("bullet+", std::string(to_string(row->bullet)), std::string(to_string(want->bullet)));
      cell("bullet-", std::string(to_string(row->bullet_minus)), std::string(to_string(want->bullet_minus)));
    }
  }

  out.push_back(guarded(p + "/pseudoscalar-formula", [&]() -> std::optional<std::string> {
    const auto found = identify(share(pseudoscalar_table(sig)));
    if (found != pseudoscalar_class(sig)) return std::string("search and -l1l2l3 disagree");
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/factorization", [&]() -> std::optional<std::string> {
    const AlgebraTable transported = transported_table(sig);
    const AlgebraTable expected = biquaternion_table(sig);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (transported.product(i, j) != expected.product(i, j)) {
          return transported.label(i) + "*" + transported.label(j) + " = " + transported.render_entry(i, j) +
                 ", expected " + expected.render_entry(i, j);
        }
      }
    }
    if (transported.conj_signs() != expected.conj_signs()) return std::string("transported reversion differs from dagger");
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/pseudoscalar-central-transported", [&]() -> std::optional<std::string> {
    bool ga_central = true;
    const Multivector ps = Multivector::basis(sig, Blade{7});
    for (Blade b : kBasisOrder) {
      const Multivector e = Multivector::basis(sig, b);
      ga_central = ga_central && ps * e == e * ps;
    }
    const AlgebraTable biq = biquaternion_table(sig);
    const int iota = *biq.index_of("iota");
    bool biq_central = true;
    for (int j = 0; j < 8; ++j) biq_central = biq_central && biq.product(iota, j) == biq.product(j, iota);
    if (ga_central != biq_central) return "e123 central: " + yes_no(ga_central) + ", iota central: " + yes_no(biq_central);
    if (!ga_central) return std::string("e123 is not central");
    return std::nullopt;
  }));

  out.push_back(guarded(p + "/even-witness", [&]() -> std::optional<std::string> {
    const TablePtr even = share(even_subalgebra_table(sig));
    const auto w = find_isomorphism(even, canonical_table(even_class(sig)));
    if (!w || !verify_witness(*w)) return std::string("no verified witness onto ") + std::string(to_string(even_class(sig)));
    return std::nullopt;
  }));

  for (BulletVariant v : kBulletVariants) {
    const std::string pv = p + "/" + std::string(to_string(v));
    const HurwitzClass cls = classify(sig, v);
    const HurwitzClass other = cls == HurwitzClass::O ? HurwitzClass::Os : HurwitzClass::O;
    const std::string cls_name(to_string(cls));
    const std::string other_name(to_string(other));
    out.push_back(guarded(pv + "/witness-" + cls_name, [&]() -> std::optional<std::string> {
      const auto w = find_isomorphism(share(cayley_table_bullet(sig, v)), canonical_table(cls));
      if (!w) throw ConsistencyError("classified as " + cls_name + " but no signed-basis witness exists");
      if (!verify_witness(*w)) return std::string("witness fails re-verification");
      return std::nullopt;
    }));
    out.push_back(guarded(pv + "/no-witness-" + other_name, [&]() -> std::optional<std::string> {
      if (find_isomorphism(share(cayley_table_bullet(sig, v)), canonical_table(other))) {
        return "unexpected witness onto " + other_name;
      }
      return std::nullopt;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------

void collect_cases(Suite s, const SuiteOptions& o, std::vector<Case>& cases) {
  const auto sigs = signatures(o);
  switch (s) {
    case Suite::ga_axioms:
      for (const auto& sig : sigs) cases.emplace_back([sig, &o] { return ga_axioms(sig, o); });
      break;
    case Suite::involutions:
      for (const auto& sig : sigs) cases.emplace_back([sig, &o] { return involutions(sig, o); });
      break;
    case Suite::hurwitz_properties:
      for (HurwitzClass c : kHurwitzClasses) cases.emplace_back([c, &o] { return hurwitz_properties(c, o); });
      break;
    case Suite::composition:
      for (const auto& sig : sigs) {
        for (BulletVariant v : kBulletVariants) cases.emplace_back([sig, v, &o] { return composition(sig, v, o); });
      }
      break;
    case Suite::norm_lemma:
      for (const auto& sig : sigs) cases.emplace_back([sig, &o] { return norm_lemma(sig, o); });
      break;
    case Suite::isomorphisms:
      for (const auto& sig : sigs) cases.emplace_back([sig, &o] { return isomorphisms(sig, o); });
      break;
    case Suite::all:
      for (Suite each : kSuites) {
        if (each != Suite::all) collect_cases(each, o, cases);
      }
      break;
  }
}

}  // namespace

std::vector<CheckRecord> run_suite(Suite s, const SuiteOptions& options) {
  std::vector<Case> cases;
  collect_cases(s, options, cases);

  std::vector<Records> results(cases.size());
  if (options.parallel) {
    std::vector<std::future<Records>> pending;
    pending.reserve(cases.size());
    for (auto& c : cases) pending.push_back(std::async(std::launch::async, c));
    for (std::size_t i = 0; i < pending.size(); ++i) results[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) results[i] = cases[i]();
  }

  Records out;
  for (auto& r : results) {
    for (auto& rec : r) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace hurwitz
