#include "hurwitz/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

namespace {

// Geometric product restricted to `blades`; conjugation from reversion.
AlgebraTable blade_subalgebra_table(const Signature& sig, const std::vector<Blade>& blades, std::string name) {
  auto position = [&](Blade b) -> int {
    for (std::size_t i = 0; i < blades.size(); ++i) {
      if (blades[i] == b) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<std::string> labels;
  for (Blade b : blades) labels.emplace_back(b.label());
  std::vector<TableEntry> product;
  for (Blade a : blades) {
    for (Blade b : blades) {
      const SignedBlade sb = blade_product(a, b, sig);
      const int k = position(sb.blade);
      if (k < 0) {
        throw ConsistencyError(name + ": " + std::string(a.label()) + std::string(b.label()) + " leaves the span");
      }
      product.push_back({k, sb.sign});
    }
  }
  std::vector<int> conj;
  for (Blade b : blades) conj.push_back(sgn(reversion(Multivector::basis(sig, b))[b]));
  return {std::move(name), std::move(labels), std::move(product), std::move(conj), 0};
}

}  // namespace

AlgebraTable geometric_product_table(const Signature& sig) {
  return blade_subalgebra_table(sig, {kBasisOrder.begin(), kBasisOrder.end()}, "ga:" + sig.tag());
}

AlgebraTable even_subalgebra_table(const Signature& sig) {
  return blade_subalgebra_table(sig, {Blade{0}, Blade{3}, Blade{6}, Blade{5}}, "even:" + sig.tag());
}

AlgebraTable pseudoscalar_table(const Signature& sig) {
  return blade_subalgebra_table(sig, {Blade{0}, Blade{7}}, "ps:" + sig.tag());
}

HurwitzClass pseudoscalar_class(const Signature& sig) {
  const int square = -sig.lambda(0) * sig.lambda(1) * sig.lambda(2);
  return square < 0 ? HurwitzClass::C : HurwitzClass::Cs;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

struct Mono {
  int index = 0;
  int sign = 0;  // 0 encodes the zero element

  friend bool operator==(const Mono&, const Mono&) = default;
};

Mono mul(const AlgebraTable& t, Mono a, Mono b) {
  if (a.sign == 0 || b.sign == 0) return {};
  const TableEntry& e = t.product(a.index, b.index);
  return {e.index, a.sign * b.sign * e.sign};
}

// e_target = sign * e_left * e_right, all indices in the source table.
struct Derivation {
  int target;
  int left;
  int right;
  int sign;
};

struct GeneratingSet {
  std::vector<int> generators;
  std::vector<Derivation> derivations;  // in dependency order
};

GeneratingSet generating_set(const AlgebraTable& t) {
  const int n = t.dim();
  GeneratingSet gs;
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<int> order{t.unit_index()};
  reached[static_cast<std::size_t>(t.unit_index())] = true;

  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<int> snapshot = order;
      for (int a : snapshot) {
        for (int b : snapshot) {
          const TableEntry& e = t.product(a, b);
          if (e.sign == 0 || reached[static_cast<std::size_t>(e.index)]) continue;
          reached[static_cast<std::size_t>(e.index)] = true;
          order.push_back(e.index);
          // e_a e_b = s e_k  =>  e_k = s e_a e_b
          gs.derivations.push_back({e.index, a, b, e.sign});
          grew = true;
        }
      }
    }
  };

  for (int i = 0; i < n; ++i) {
    if (reached[static_cast<std::size_t>(i)]) continue;
    gs.generators.push_back(i);
    reached[static_cast<std::size_t>(i)] = true;
    order.push_back(i);
    close();
  }
  return gs;
}

void require_searchable(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("isomorphism search needs tables of equal dimension");
  if (!a.is_signed_monomial() || !b.is_signed_monomial()) {
    throw std::invalid_argument("isomorphism search needs signed-monomial tables");
  }
}

}  // namespace

bool verify_witness(const IsomorphismWitness& w) {
  if (!w.source || !w.target) return false;
  const AlgebraTable& s = *w.source;
  const AlgebraTable& t = *w.target;
  const int n = s.dim();
  if (t.dim() != n || w.map.size() != static_cast<std::size_t>(n)) return false;

  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const TableEntry& m : w.map) {
    if (m.index < 0 || m.index >= n || (m.sign != 1 && m.sign != -1)) return false;
    if (hit[static_cast<std::size_t>(m.index)]) return false;
    hit[static_cast<std::size_t>(m.index)] = true;
  }
  if (w.map[static_cast<std::size_t>(s.unit_index())] != TableEntry{t.unit_index(), 1}) return false;

  auto image = [&](int i) {
    const TableEntry& m = w.map[static_cast<std::size_t>(i)];
    return Mono{m.index, m.sign};
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const TableEntry& e = s.product(i, j);
      Mono lhs{};
      if (e.sign != 0) {
        const Mono k = image(e.index);
        lhs = {k.index, k.sign * e.sign};
      }
      const Mono rhs = mul(t, image(i), image(j));
      if (lhs.sign == 0 && rhs.sign == 0) continue;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<IsomorphismWitness> find_isomorphism(const TablePtr& source, const TablePtr& target) {
  const AlgebraTable& s = *source;
  const AlgebraTable& t = *target;
  require_searchable(s, t);
  const int n = s.dim();
  const GeneratingSet gs = generating_set(s);
  const std::size_t g = gs.generators.size();

  std::vector<Mono> candidates;
  for (int k = 0; k < n; ++k) {
    if (k == t.unit_index()) continue;
    candidates.push_back({k, 1});
    candidates.push_back({k, -1});
  }

  std::vector<Mono> images(g);
  std::optional<IsomorphismWitness> found;

  auto consistent = [&](std::size_t depth) {
    const int ga = gs.generators[depth];
    const Mono ia = images[depth];
    // squares
    const Mono sq_src = mul(s, {ga, 1}, {ga, 1});
    const Mono sq_tgt = mul(t, ia, ia);
    if (sq_src.index == s.unit_index() || sq_tgt.index == t.unit_index()) {
      if (sq_src.index == s.unit_index() && sq_tgt.index == t.unit_index()) {
        if (sq_src.sign != sq_tgt.sign) return false;
      } else {
        return false;
      }
    }
    // commutation sign against earlier generators
    for (std::size_t e = 0; e < depth; ++e) {
      const int gb = gs.generators[e];
      const Mono ab = mul(s, {ga, 1}, {gb, 1});
      const Mono ba = mul(s, {gb, 1}, {ga, 1});
      const Mono iab = mul(t, ia, images[e]);
      const Mono iba = mul(t, images[e], ia);
      if ((ab.index == ba.index) != (iab.index == iba.index)) return false;
      if (ab.index == ba.index && ab.sign * ba.sign != iab.sign * iba.sign) return false;
    }
    return true;
  };

  auto try_leaf = [&]() -> bool {
    std::vector<std::optional<Mono>> phi(static_cast<std::size_t>(n));
    phi[static_cast<std::size_t>(s.unit_index())] = Mono{t.unit_index(), 1};
    for (std::size_t i = 0; i < g; ++i) phi[static_cast<std::size_t>(gs.generators[i])] = images[i];
    for (const Derivation& d : gs.derivations) {
      const Mono p = mul(t, *phi[static_cast<std::size_t>(d.left)], *phi[static_cast<std::size_t>(d.right)]);
      phi[static_cast<std::size_t>(d.target)] = Mono{p.index, p.sign * d.sign};
    }
    IsomorphismWitness w{source, target, {}};
    for (const auto& m : phi) {
      if (!m || m->sign == 0) return false;
      w.map.push_back({m->index, m->sign});
    }
    if (!verify_witness(w)) return false;
    found = std::move(w);
    return true;
  };

  // Depth-first over generator images in fixed order.
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == g) return try_leaf();
    for (const Mono& c : candidates) {
      images[depth] = c;
      if (consistent(depth) && self(self, depth + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

std::optional<HurwitzClass> identify(const TablePtr& table) {
  for (HurwitzClass c : kHurwitzClasses) {
    if (dimension(c) != table->dim()) continue;
    if (find_isomorphism(table, canonical_table(c))) return c;
  }
  return std::nullopt;
}

HurwitzClass even_class(const Signature& sig) {
  const auto cls = identify(share(even_subalgebra_table(sig)));
  if (!cls || (*cls != HurwitzClass::H && *cls != HurwitzClass::Hs)) {
    throw ConsistencyError(sig.name() + ": even subalgebra is neither H nor Hs");
  }
  return *cls;
}

// ---------------------------------------------------------------------------
// Biquaternion coordinates

BiquaternionFrame biquaternion_frame(const Signature& sig) {
  constexpr std::array<Blade, 3> bivectors = {Blade{3}, Blade{6}, Blade{5}};  // e12, e23, e13
  std::size_t first = 3;
  for (std::size_t b = 0; b < 3; ++b) {
    if (blade_product(bivectors[b], bivectors[b], sig).sign < 0) {
      first = b;
      break;
    }
  }
  if (first == 3) throw ConsistencyError(sig.name() + ": no bivector squares to -1");
  const std::size_t second = first == 0 ? 1 : 0;

  const SignedBlade one{1, Blade{0}};
  const SignedBlade iota{1, Blade{7}};
  const SignedBlade i{1, bivectors[first]};
  const SignedBlade j{1, bivectors[second]};
  auto times = [&](SignedBlade a, SignedBlade b) {
    const SignedBlade p = blade_product(a.blade, b.blade, sig);
    return SignedBlade{a.sign * b.sign * p.sign, p.blade};
  };
  const SignedBlade k = times(i, j);
  return {{one, iota, i, j, k, times(iota, i), times(iota, j), times(iota, k)}};
}

std::array<Rational, 8> flatten(const BiquaternionCoords& c) {
  return {c.z[0][0], c.z[0][1], c.z[1][0], c.z[2][0], c.z[3][0], c.z[1][1], c.z[2][1], c.z[3][1]};
}

BiquaternionCoords unflatten(const std::array<Rational, 8>& f) {
  BiquaternionCoords c;
  c.z[0] = {f[0], f[1]};
  c.z[1] = {f[2], f[5]};
  c.z[2] = {f[3], f[6]};
  c.z[3] = {f[4], f[7]};
  return c;
}

BiquaternionCoords biquaternion_decompose(const Multivector& x) {
  const BiquaternionFrame frame = biquaternion_frame(x.signature());
  std::array<Rational, 8> flat;
  std::array<bool, 8> covered{};
  for (std::size_t p = 0; p < 8; ++p) {
    const SignedBlade& im = frame.images[p];
    if (covered[im.blade.mask]) throw ConsistencyError("biquaternion frame is not a basis");
    covered[im.blade.mask] = true;
    // x_m e_m with e_m = sign * b_p
    flat[p] = im.sign > 0 ? x[im.blade] : Rational(-x[im.blade]);
  }
  return unflatten(flat);
}

Multivector biquaternion_recompose(const BiquaternionCoords& coords, const Signature& sig) {
  const BiquaternionFrame frame = biquaternion_frame(sig);
  const std::array<Rational, 8> flat = flatten(coords);
  Multivector x(sig);
  for (std::size_t p = 0; p < 8; ++p) {
    const SignedBlade& im = frame.images[p];
    x = x + Multivector::basis(sig, im.blade, im.sign > 0 ? flat[p] : Rational(-flat[p]));
  }
  return x;
}

AlgebraTable biquaternion_table(const Signature& sig) { return build_biquaternion(pseudoscalar_class(sig), even_class(sig)); }

namespace {

Multivector biquaternion_basis(const Signature& sig, std::size_t p) {
  std::array<Rational, 8> flat;
  flat[p] = 1;
  return biquaternion_recompose(unflatten(flat), sig);
}

// The single nonzero coordinate of a signed basis element.
TableEntry as_signed_basis(const std::array<Rational, 8>& flat, const std::string& what) {
  std::optional<TableEntry> entry;
  for (std::size_t p = 0; p < 8; ++p) {
    if (sgn(flat[p]) == 0) continue;
    if (entry || (flat[p] != 1 && flat[p] != -1)) throw ConsistencyError(what + " is not a signed basis element");
    entry = TableEntry{static_cast<int>(p), sgn(flat[p])};
  }
  if (!entry) throw ConsistencyError(what + " vanished");
  return *entry;
}

}  // namespace

AlgebraTable transported_table(const Signature& sig) {
  std::vector<TableEntry> product;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const Multivector p = biquaternion_basis(sig, a) * biquaternion_basis(sig, b);
      product.push_back(as_signed_basis(flatten(biquaternion_decompose(p)),
                                        biquaternion_labels()[a] + "*" + biquaternion_labels()[b]));
    }
  }
  std::vector<int> conj;
  for (std::size_t a = 0; a < 8; ++a) {
    const auto flat = flatten(biquaternion_decompose(reversion(biquaternion_basis(sig, a))));
    const TableEntry e = as_signed_basis(flat, "reversion of " + biquaternion_labels()[a]);
    if (e.index != static_cast<int>(a)) throw ConsistencyError("reversion does not act diagonally");
    conj.push_back(e.sign);
  }
  return {"transported:" + sig.tag(), biquaternion_labels(), std::move(product), std::move(conj), 0};
}

// ---------------------------------------------------------------------------
// Involutions

std::string_view to_string(Involution inv) {
  switch (inv) {
    case Involution::reversion: return "reversion";
    case Involution::inversion: return "inversion";
    case Involution::clifford_conjugation: return "clifford_conjugation";
  }
  return "?";
}

Multivector apply(Involution inv, const Multivector& x) {
  switch (inv) {
    case Involution::reversion: return reversion(x);
    case Involution::inversion: return inversion(x);
    case Involution::clifford_conjugation: return clifford_conjugation(x);
  }
  throw std::invalid_argument("unknown involution");
}

BiquaternionConjugation corresponding_conjugation(Involution inv) {
  switch (inv) {
    case Involution::reversion: return BiquaternionConjugation::dagger;
    case Involution::inversion: return BiquaternionConjugation::bar;
    case Involution::clifford_conjugation: return BiquaternionConjugation::tilde;
  }
  throw std::invalid_argument("unknown involution");
}

std::vector<InvolutionCheck> involution_dictionary(const Signature& sig) {
  const TablePtr table = share(biquaternion_table(sig));
  auto as_element = [&](const Multivector& x) {
    const auto flat = flatten(biquaternion_decompose(x));
    return Element(table, std::vector<Rational>(flat.begin(), flat.end()));
  };
  std::vector<InvolutionCheck> out;
  for (Involution inv : kInvolutions) {
    for (Blade b : kBasisOrder) {
      const Multivector x = Multivector::basis(sig, b);
      const Element ga_side = as_element(apply(inv, x));
      const Element biq_side = biquaternion_conjugate(as_element(x), corresponding_conjugation(inv));
      InvolutionCheck rec{inv, b, ga_side == biq_side, {}};
      rec.detail = std::string(to_string(inv)) + "(" + std::string(b.label()) + ") = " + to_string(ga_side) + ", " +
                   std::string(to_string(corresponding_conjugation(inv))) + " = " + to_string(biq_side);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification rows

std::string ClassificationRow::tensor_label() const {
  return std::string(to_string(pseudoscalar)) + "⊗" + std::string(to_string(even));
}

ClassificationRow classification_row(const Signature& sig) {
  const auto ps = identify(share(pseudoscalar_table(sig)));
  if (!ps || (*ps != HurwitzClass::C && *ps != HurwitzClass::Cs)) {
    throw ConsistencyError(sig.name() + ": pseudoscalar subalgebra is neither C nor Cs");
  }
  return {sig, *ps, even_class(sig), classify(sig, BulletVariant::plus), classify(sig, BulletVariant::minus)};
}

}  // namespace hurwitz
