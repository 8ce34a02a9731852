#pragma once

// Subalgebras of G(p,q), the biquaternion identification
// G(p,q) = Ps(G) (x) G(p,q)+, the involution dictionary, and signed-basis
// isomorphism search between structure-constant tables.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/canonical_algebras.hpp"
#include "hurwitz/ga_core.hpp"
#include "hurwitz/octonify.hpp"

namespace hurwitz {

// Geometric product on all 8 blades (basis order), named "ga:<tag>", with
// reversion as its conjugation.
AlgebraTable geometric_product_table(const Signature& sig);

// Geometric product on {1, e12, e23, e13}, named "even:<tag>". Throws
// ConsistencyError if the span is not closed.
AlgebraTable even_subalgebra_table(const Signature& sig);

// Geometric product on {1, e123}, named "ps:<tag>".
AlgebraTable pseudoscalar_table(const Signature& sig);

// (e1e2e3)^2 = -l1 l2 l3 read as C (-1) or Cs (+1).
HurwitzClass pseudoscalar_class(const Signature& sig);

// ---------------------------------------------------------------------------
// Signed-basis isomorphisms

struct IsomorphismWitness {
  TablePtr source;
  TablePtr target;
  // map[i] = sign * target basis element that source basis element i goes to.
  std::vector<TableEntry> map;
};

// Picks a generating set of the source greedily in index order, assigns each
// generator an image +-e_t (t ascending, + before -) pruned by squares and
// pairwise commutation signs, extends multiplicatively and verifies the whole
// grid. Returns the first witness in that order, or nullopt.
// Throws std::invalid_argument unless both tables are signed-monomial with
// equal dimension.
std::optional<IsomorphismWitness> find_isomorphism(const TablePtr& source, const TablePtr& target);

// Bijectivity, unit preservation and the full dim x dim homomorphism grid,
// checked directly from the map.
bool verify_witness(const IsomorphismWitness& w);

// First canonical Hurwitz table (in kHurwitzClasses order) of equal
// dimension that `table` is isomorphic to.
std::optional<HurwitzClass> identify(const TablePtr& table);

// Class of the even subalgebra (H or Hs), found by isomorphism search.
// Throws ConsistencyError if neither matches.
HurwitzClass even_class(const Signature& sig);

// ---------------------------------------------------------------------------
// Biquaternion coordinates

// Images in G(p,q) of the biquaternion basis 1, iota, i, j, k, iota_i,
// iota_j, iota_k. iota = e123; i is the first of e12, e23, e13 squaring to -1,
// j the first of the other two in that order, and k = ij. For the standard signatures this
// is i = e12, j = e23, k = l2 e13.
struct BiquaternionFrame {
  std::array<SignedBlade, 8> images;
};

BiquaternionFrame biquaternion_frame(const Signature& sig);

// x = z0 + z1 i + z2 j + z3 k with z_n = re + im * iota.
struct BiquaternionCoords {
  std::array<std::array<Rational, 2>, 4> z;

  friend bool operator==(const BiquaternionCoords&, const BiquaternionCoords&) = default;
};

BiquaternionCoords biquaternion_decompose(const Multivector& x);
Multivector biquaternion_recompose(const BiquaternionCoords& coords, const Signature& sig);

// Coordinates on the basis 1, iota, i, j, k, iota_i, iota_j, iota_k.
std::array<Rational, 8> flatten(const BiquaternionCoords& coords);
BiquaternionCoords unflatten(const std::array<Rational, 8>& flat);

// build_biquaternion(pseudoscalar class, even class).
AlgebraTable biquaternion_table(const Signature& sig);

// The geometric product carried to the biquaternion basis through
// recompose / decompose, named "transported:<tag>", with the transported
// reversion as conjugation. Throws ConsistencyError if some product is not a
// signed basis element.
AlgebraTable transported_table(const Signature& sig);

// ---------------------------------------------------------------------------
// Involutions

enum class Involution { reversion, inversion, clifford_conjugation };

inline constexpr std::array<Involution, 3> kInvolutions = {Involution::reversion, Involution::inversion,
                                                           Involution::clifford_conjugation};

std::string_view to_string(Involution inv);
Multivector apply(Involution inv, const Multivector& x);

// reversion <-> dagger, inversion <-> bar, clifford conjugation <-> tilde.
BiquaternionConjugation corresponding_conjugation(Involution inv);

struct InvolutionCheck {
  Involution involution;
  Blade blade;
  bool passed = false;
  std::string detail;  // both sides, in biquaternion coordinates
};

// One record per (involution, blade): decompose(inv(b)) against the
// corresponding biquaternion conjugation of decompose(b).
std::vector<InvolutionCheck> involution_dictionary(const Signature& sig);

// ---------------------------------------------------------------------------
// Classification rows

struct ClassificationRow {
  Signature sig;
  HurwitzClass pseudoscalar;
  HurwitzClass even;
  HurwitzClass bullet;
  HurwitzClass bullet_minus;

  // e.g. "C⊗H"
  std::string tensor_label() const;
};

// Even and pseudoscalar classes by isomorphism search, bullet classes by the
// norm diagonal.
ClassificationRow classification_row(const Signature& sig);

}  // namespace hurwitz
