#pragma once

// Signed-monomial structure-constant tables for the seven Hurwitz algebras and
// the four biquaternion algebras, with conjugation, norm and property checks.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/random.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class HurwitzClass { R, C, Cs, H, Hs, O, Os };

inline constexpr std::array<HurwitzClass, 7> kHurwitzClasses = {
    HurwitzClass::R, HurwitzClass::C,  HurwitzClass::Cs, HurwitzClass::H,
    HurwitzClass::Hs, HurwitzClass::O, HurwitzClass::Os};

std::string_view to_string(HurwitzClass c);
std::optional<HurwitzClass> parse_hurwitz_class(std::string_view name);
int dimension(HurwitzClass c);
bool is_division(HurwitzClass c);

// product(i, j) = sign * e_index. sign is 0 only for tables that are not
// signed-monomial (none of the canonical ones).
struct TableEntry {
  int index = 0;
  int sign = 1;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

class AlgebraTable {
 public:
  // `product` is row-major dim x dim. Validates shape, index ranges, the unit
  // law and conj_signs[unit] == +1; throws std::invalid_argument otherwise.
  AlgebraTable(std::string name, std::vector<std::string> labels, std::vector<TableEntry> product,
               std::vector<int> conj_signs, int unit_index = 0);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view label) const;

  const TableEntry& product(int i, int j) const {
    return product_[static_cast<std::size_t>(i * dim() + j)];
  }
  const std::vector<TableEntry>& products() const { return product_; }
  int conj_sign(int i) const { return conj_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& conj_signs() const { return conj_; }
  int unit_index() const { return unit_; }

  bool is_signed_monomial() const;

  // Same dimension, unit, products and conjugation; names and labels ignored.
  bool same_structure(const AlgebraTable& other) const;

  // e.g. "-e3", "1", "0".
  std::string render_entry(int i, int j) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<TableEntry> product_;
  std::vector<int> conj_;
  int unit_;
};

using TablePtr = std::shared_ptr<const AlgebraTable>;

inline TablePtr share(AlgebraTable table) { return std::make_shared<const AlgebraTable>(std::move(table)); }

class Element {
 public:
  // Throws std::invalid_argument if coords.size() != table->dim().
  Element(TablePtr table, std::vector<Rational> coords);

  static Element zero(const TablePtr& table);
  static Element unit(const TablePtr& table);
  static Element basis(const TablePtr& table, int index, const Rational& coeff = 1);

  const AlgebraTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  friend bool operator==(const Element& u, const Element& v);
  friend Element operator+(const Element& u, const Element& v);
  friend Element operator-(const Element& u, const Element& v);
  friend Element operator-(const Element& u);
  friend Element operator*(const Rational& s, const Element& u);
  // Table product.
  friend Element operator*(const Element& u, const Element& v);

 private:
  TablePtr table_;
  std::vector<Rational> coords_;
};

// Throws std::invalid_argument when the two tables differ structurally.
void require_same_table(const Element& u, const Element& v);

std::string to_string(const Element& u);

Element table_product(const Element& u, const Element& v);
// Applies the table's conjugation signs.
Element conjugate(const Element& u);
// u * conjugate(u) as a scalar. Throws ConsistencyError if the product is not
// a multiple of the unit.
Rational norm(const Element& u);
// n(u + v) - n(u) - n(v).
Rational polarize(const Element& u, const Element& v);

// n(e_i) read off e_i * conjugate(e_i) for each basis element. Throws
// ConsistencyError when some basis product is not a multiple of the unit.
std::vector<int> diagonal_form(const AlgebraTable& table);
// sum_i d_i u_i^2 with d = diagonal_form(table).
Rational diagonal_quadratic_form(const Element& u, const std::vector<int>& diag);

AlgebraTable build_table(HurwitzClass c);
// Built once per class; immutable and shareable.
const TablePtr& canonical_table(HurwitzClass c);

// The seven positively oriented triples (a,b,c), a*b = c, of the split-octonion
// product. Each of the 21 unordered pairs of imaginary units lies in exactly
// one triple.
const std::array<std::array<int, 3>, 7>& split_octonion_triples();
// The seven octonion triples (i, i+1, i+3), indices mod 7 in 1..7.
std::array<std::array<int, 3>, 7> octonion_triples();

struct ZeroDivisorWitness {
  Element left;
  Element right;
};

// Searches binomials e_i + e_j and e_j - e_i (i < j) over pairs whose diagonal
// norms have opposite signs; returns the first pair (x, y) in that order with
// x * y == 0.
std::optional<ZeroDivisorWitness> find_zero_divisor(const TablePtr& table);

struct PropertyOptions {
  std::size_t pair_trials = 1000;           // random pairs for alternative/flexible
  std::size_t composition_trials = 10000;   // random pairs for n(uv) = n(u)n(v)
  std::uint64_t seed = kDefaultSeed;
};

enum class NormSource {
  conjugation,  // u * conjugate(u) is a scalar for every u
  diagonal,     // fallback: diagonal quadratic form on the basis
};

struct PropertyRecord {
  std::optional<bool> ordered;  // static annotation, known only for canonical classes
  bool unital = false;
  bool commutative = false;
  bool associative = false;
  bool alternative = false;
  bool flexible = false;
  bool composition = false;
  bool conjugation_antiautomorphism = false;
  NormSource norm_source = NormSource::diagonal;
  // Basis orthogonal under the norm polarization and every n(e_i) > 0.
  bool positive_definite = false;
  std::optional<ZeroDivisorWitness> zero_divisor;
  // One line per failed property describing the first counterexample found.
  std::vector<std::string> counterexamples;
};

PropertyRecord check_properties(const TablePtr& table, const PropertyOptions& options = {});
PropertyRecord check_properties(HurwitzClass c, const PropertyOptions& options = {});

// Basis order 1, iota, i, j, k, iota_i, iota_j, iota_k. `c` must be C or Cs and
// `h` must be H or Hs (std::invalid_argument otherwise). The table's own
// conjugation is the dagger conjugation.
AlgebraTable build_biquaternion(HurwitzClass c, HurwitzClass h);
const std::vector<std::string>& biquaternion_labels();

enum class BiquaternionConjugation {
  tilde,   // z (x) conj(q)
  bar,     // conj(z) (x) q
  dagger,  // conj(z) (x) conj(q), defined as bar(tilde(x))
};

std::string_view to_string(BiquaternionConjugation which);
// Signs applied to the basis (1, iota, i, j, k, iota_i, iota_j, iota_k).
std::array<int, 8> biquaternion_conjugation_signs(BiquaternionConjugation which);
// Requires an element of a table with the biquaternion labels.
Element biquaternion_conjugate(const Element& x, BiquaternionConjugation which);

}  // namespace hurwitz
