#include "hurwitz/canonical_algebras.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

// ---------------------------------------------------------------------------
// HurwitzClass

std::string_view to_string(HurwitzClass c) {
  switch (c) {
    case HurwitzClass::R: return "R";
    case HurwitzClass::C: return "C";
    case HurwitzClass::Cs: return "Cs";
    case HurwitzClass::H: return "H";
    case HurwitzClass::Hs: return "Hs";
    case HurwitzClass::O: return "O";
    case HurwitzClass::Os: return "Os";
  }
  return "?";
}

std::optional<HurwitzClass> parse_hurwitz_class(std::string_view name) {
  for (HurwitzClass c : kHurwitzClasses) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

int dimension(HurwitzClass c) {
  switch (c) {
    case HurwitzClass::R: return 1;
    case HurwitzClass::C:
    case HurwitzClass::Cs: return 2;
    case HurwitzClass::H:
    case HurwitzClass::Hs: return 4;
    case HurwitzClass::O:
    case HurwitzClass::Os: return 8;
  }
  return 0;
}

bool is_division(HurwitzClass c) {
  return c == HurwitzClass::R || c == HurwitzClass::C || c == HurwitzClass::H || c == HurwitzClass::O;
}

// ---------------------------------------------------------------------------
// AlgebraTable

AlgebraTable::AlgebraTable(std::string name, std::vector<std::string> labels,
                           std::vector<TableEntry> product, std::vector<int> conj_signs,
                           int unit_index)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      product_(std::move(product)),
      conj_(std::move(conj_signs)),
      unit_(unit_index) {
  const int n = dim();
  if (n == 0) throw std::invalid_argument(name_ + ": empty basis");
  if (product_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument(name_ + ": product table must be dim x dim");
  }
  if (conj_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(name_ + ": one conjugation sign per basis element required");
  }
  if (unit_ < 0 || unit_ >= n) throw std::invalid_argument(name_ + ": unit index out of range");
  for (const TableEntry& e : product_) {
    if (e.index < 0 || e.index >= n || e.sign < -1 || e.sign > 1) {
      throw std::invalid_argument(name_ + ": malformed product entry");
    }
  }
  for (int s : conj_) {
    if (s != 1 && s != -1) throw std::invalid_argument(name_ + ": conjugation signs must be +-1");
  }
  if (conj_[static_cast<std::size_t>(unit_)] != 1) {
    throw std::invalid_argument(name_ + ": conjugation must fix the unit");
  }
  for (int j = 0; j < n; ++j) {
    if (this->product(unit_, j) != TableEntry{j, 1} || this->product(j, unit_) != TableEntry{j, 1}) {
      throw std::invalid_argument(name_ + ": unit law fails at " + labels_[static_cast<std::size_t>(j)]);
    }
  }
}

std::optional<int> AlgebraTable::index_of(std::string_view label) const {
  for (int i = 0; i < dim(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

bool AlgebraTable::is_signed_monomial() const {
  return std::none_of(product_.begin(), product_.end(), [](const TableEntry& e) { return e.sign == 0; });
}

bool AlgebraTable::same_structure(const AlgebraTable& other) const {
  return dim() == other.dim() && unit_ == other.unit_ && product_ == other.product_ && conj_ == other.conj_;
}

std::string AlgebraTable::render_entry(int i, int j) const {
  const TableEntry& e = product(i, j);
  if (e.sign == 0) return "0";
  return (e.sign < 0 ? "-" : "") + label(e.index);
}

// ---------------------------------------------------------------------------
// Element

Element::Element(TablePtr table, std::vector<Rational> coords) : table_(std::move(table)), coords_(std::move(coords)) {
  if (!table_) throw std::invalid_argument("element without a table");
  if (coords_.size() != static_cast<std::size_t>(table_->dim())) {
    throw std::invalid_argument(table_->name() + ": expected " + std::to_string(table_->dim()) +
                                " coordinates, got " + std::to_string(coords_.size()));
  }
}

Element Element::zero(const TablePtr& table) {
  return {table, std::vector<Rational>(static_cast<std::size_t>(table->dim()))};
}

Element Element::unit(const TablePtr& table) { return basis(table, table->unit_index()); }

Element Element::basis(const TablePtr& table, int index, const Rational& coeff) {
  std::vector<Rational> c(static_cast<std::size_t>(table->dim()));
  c.at(static_cast<std::size_t>(index)) = coeff;
  return {table, std::move(c)};
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

void require_same_table(const Element& u, const Element& v) {
  if (u.table_ptr() != v.table_ptr() && !u.table().same_structure(v.table())) {
    throw std::invalid_argument("table mismatch: " + u.table().name() + " vs " + v.table().name());
  }
}

bool operator==(const Element& u, const Element& v) {
  if (u.table_ != v.table_ && !u.table().same_structure(v.table())) return false;
  return u.coords_ == v.coords_;
}

Element operator+(const Element& u, const Element& v) {
  require_same_table(u, v);
  std::vector<Rational> c(u.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = u.coords_[i] + v.coords_[i];
  return {u.table_, std::move(c)};
}

Element operator-(const Element& u, const Element& v) {
  require_same_table(u, v);
  std::vector<Rational> c(u.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = u.coords_[i] - v.coords_[i];
  return {u.table_, std::move(c)};
}

Element operator-(const Element& u) {
  std::vector<Rational> c(u.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -u.coords_[i];
  return {u.table_, std::move(c)};
}

Element operator*(const Rational& s, const Element& u) {
  std::vector<Rational> c(u.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * u.coords_[i];
  return {u.table_, std::move(c)};
}

Element operator*(const Element& u, const Element& v) {
  require_same_table(u, v);
  const AlgebraTable& t = *u.table_;
  const int n = t.dim();
  std::vector<Rational> c(static_cast<std::size_t>(n));
  Rational term;
  for (int i = 0; i < n; ++i) {
    const Rational& ui = u.coords_[static_cast<std::size_t>(i)];
    if (sgn(ui) == 0) continue;
    for (int j = 0; j < n; ++j) {
      const Rational& vj = v.coords_[static_cast<std::size_t>(j)];
      if (sgn(vj) == 0) continue;
      const TableEntry& e = t.product(i, j);
      if (e.sign == 0) continue;
      term = ui * vj;
      if (e.sign > 0) {
        c[static_cast<std::size_t>(e.index)] += term;
      } else {
        c[static_cast<std::size_t>(e.index)] -= term;
      }
    }
  }
  return {u.table_, std::move(c)};
}

std::string to_string(const Element& u) {
  std::string out;
  for (int i = 0; i < u.table().dim(); ++i) {
    const Rational& c = u[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (i == u.table().unit_index()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += u.table().label(i);
    }
  }
  return out.empty() ? "0" : out;
}

Element table_product(const Element& u, const Element& v) { return u * v; }

Element conjugate(const Element& u) {
  std::vector<Rational> c = u.coords();
  for (int i = 0; i < u.table().dim(); ++i) {
    if (u.table().conj_sign(i) < 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
  }
  return {u.table_ptr(), std::move(c)};
}

Rational norm(const Element& u) {
  const Element p = u * conjugate(u);
  const int unit = u.table().unit_index();
  for (int i = 0; i < p.table().dim(); ++i) {
    if (i != unit && sgn(p[i]) != 0) {
      throw ConsistencyError(u.table().name() + ": u * conj(u) is not scalar for u = " + to_string(u));
    }
  }
  return p[unit];
}

Rational polarize(const Element& u, const Element& v) { return norm(u + v) - norm(u) - norm(v); }

std::vector<int> diagonal_form(const AlgebraTable& table) {
  std::vector<int> diag(static_cast<std::size_t>(table.dim()));
  for (int i = 0; i < table.dim(); ++i) {
    const TableEntry& e = table.product(i, i);
    if (e.sign == 0 || e.index != table.unit_index()) {
      throw ConsistencyError(table.name() + ": " + table.label(i) + " squares outside the unit line");
    }
    diag[static_cast<std::size_t>(i)] = e.sign * table.conj_sign(i);
  }
  return diag;
}

Rational diagonal_quadratic_form(const Element& u, const std::vector<int>& diag) {
  Rational sum;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const Rational sq = u.coords()[i] * u.coords()[i];
    if (diag[i] > 0) {
      sum += sq;
    } else {
      sum -= sq;
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Canonical tables

namespace {

class TableBuilder {
 public:
  TableBuilder(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)), n_(static_cast<int>(labels_.size())),
        cells_(static_cast<std::size_t>(n_ * n_)) {
    for (int i = 0; i < n_; ++i) {
      set_one(0, i, {i, 1});
      if (i != 0) set_one(i, 0, {i, 1});
    }
  }

  void square(int i, int sign) { set_one(i, i, {0, sign}); }

  // e_a e_b = s e_c and e_b e_a = -s e_c.
  void anticommuting(int a, int b, int c, int s) {
    set_one(a, b, {c, s});
    set_one(b, a, {c, -s});
  }

  // Completes a quaternionic triple from a*b = c using alternativity:
  // b*c = -(b^2) a and c*a = -(a^2) b.
  void triple(int a, int b, int c) {
    const int a2 = square_sign(a);
    const int b2 = square_sign(b);
    anticommuting(a, b, c, 1);
    anticommuting(b, c, a, -b2);
    anticommuting(c, a, b, -a2);
  }

  AlgebraTable finish() {
    std::vector<TableEntry> product;
    product.reserve(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (!cells_[k]) {
        throw ConsistencyError(name_ + ": product " + labels_[k / static_cast<std::size_t>(n_)] + "*" +
                               labels_[k % static_cast<std::size_t>(n_)] + " left undefined");
      }
      product.push_back(*cells_[k]);
    }
    std::vector<int> conj(static_cast<std::size_t>(n_), -1);
    conj[0] = 1;
    return {name_, labels_, std::move(product), std::move(conj), 0};
  }

 private:
  int square_sign(int i) const {
    const auto& cell = cells_[static_cast<std::size_t>(i * n_ + i)];
    if (!cell) throw ConsistencyError(name_ + ": square of " + labels_[static_cast<std::size_t>(i)] + " needed first");
    return cell->sign;
  }

  void set_one(int i, int j, TableEntry e) {
    auto& cell = cells_[static_cast<std::size_t>(i * n_ + j)];
    if (cell && *cell != e) {
      throw ConsistencyError(name_ + ": conflicting definitions for " + labels_[static_cast<std::size_t>(i)] +
                             "*" + labels_[static_cast<std::size_t>(j)]);
    }
    cell = e;
  }

  std::string name_;
  std::vector<std::string> labels_;
  int n_;
  std::vector<std::optional<TableEntry>> cells_;
};

std::vector<std::string> imaginary_labels(int dim) {
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// 1-based index arithmetic mod m, results in 1..m.
int wrap(int i, int m) { return ((i - 1) % m + m) % m + 1; }

AlgebraTable make_complex(bool split) {
  TableBuilder b(split ? "Cs" : "C", imaginary_labels(2));
  b.square(1, split ? 1 : -1);
  return b.finish();
}

AlgebraTable make_quaternion() {
  TableBuilder b("H", imaginary_labels(4));
  for (int i = 1; i <= 3; ++i) b.square(i, -1);
  // e_i e_{i+1} = e_{i+2}, indices mod 3
  for (int i = 1; i <= 3; ++i) b.anticommuting(i, wrap(i + 1, 3), wrap(i + 2, 3), 1);
  return b.finish();
}

AlgebraTable make_split_quaternion() {
  TableBuilder b("Hs", imaginary_labels(4));
  b.square(1, -1);
  b.square(2, 1);
  b.square(3, 1);
  // e_{i+1} e_i = (-1)^i e_{i+2}, indices mod 3
  for (int i = 1; i <= 3; ++i) b.anticommuting(wrap(i + 1, 3), i, wrap(i + 2, 3), i % 2 ? -1 : 1);
  return b.finish();
}

AlgebraTable make_octonion() {
  TableBuilder b("O", imaginary_labels(8));
  for (int i = 1; i <= 7; ++i) b.square(i, -1);
  for (const auto& t : octonion_triples()) b.triple(t[0], t[1], t[2]);
  return b.finish();
}

AlgebraTable make_split_octonion() {
  TableBuilder b("Os", imaginary_labels(8));
  for (int i = 1; i <= 7; ++i) b.square(i, i <= 3 ? -1 : 1);
  for (const auto& t : split_octonion_triples()) b.triple(t[0], t[1], t[2]);
  return b.finish();
}

}  // namespace

std::array<std::array<int, 3>, 7> octonion_triples() {
  std::array<std::array<int, 3>, 7> out;
  for (int i = 1; i <= 7; ++i) out[static_cast<std::size_t>(i - 1)] = {i, wrap(i + 1, 7), wrap(i + 3, 7)};
  return out;
}

const std::array<std::array<int, 3>, 7>& split_octonion_triples() {
  static const std::array<std::array<int, 3>, 7> triples = {
      {{1, 2, 3}, {1, 5, 4}, {1, 7, 6}, {2, 6, 4}, {2, 5, 7}, {3, 7, 4}, {3, 6, 5}}};
  return triples;
}

AlgebraTable build_table(HurwitzClass c) {
  switch (c) {
    case HurwitzClass::R: {
      TableBuilder b("R", {"1"});
      return b.finish();
    }
    case HurwitzClass::C: return make_complex(false);
    case HurwitzClass::Cs: return make_complex(true);
    case HurwitzClass::H: return make_quaternion();
    case HurwitzClass::Hs: return make_split_quaternion();
    case HurwitzClass::O: return make_octonion();
    case HurwitzClass::Os: return make_split_octonion();
  }
  throw std::invalid_argument("unknown Hurwitz class");
}

const TablePtr& canonical_table(HurwitzClass c) {
  static const std::array<TablePtr, 7> tables = [] {
    std::array<TablePtr, 7> t;
    for (std::size_t i = 0; i < kHurwitzClasses.size(); ++i) t[i] = share(build_table(kHurwitzClasses[i]));
    return t;
  }();
  return tables[static_cast<std::size_t>(c)];
}

// ---------------------------------------------------------------------------
// Zero divisors and properties

std::optional<ZeroDivisorWitness> find_zero_divisor(const TablePtr& table) {
  std::vector<int> diag;
  try {
    diag = diagonal_form(*table);
  } catch (const ConsistencyError&) {
    return std::nullopt;
  }
  std::vector<Element> candidates;
  for (int i = 0; i < table->dim(); ++i) {
    for (int j = i + 1; j < table->dim(); ++j) {
      if (diag[static_cast<std::size_t>(i)] == diag[static_cast<std::size_t>(j)]) continue;
      const Element ei = Element::basis(table, i);
      const Element ej = Element::basis(table, j);
      candidates.push_back(ei + ej);
      candidates.push_back(ej - ei);
    }
  }
  for (const Element& x : candidates) {
    for (const Element& y : candidates) {
      if ((x * y).is_zero()) return ZeroDivisorWitness{x, y};
    }
  }
  return std::nullopt;
}

namespace {

// Signed monomial on a table's basis; sign 0 means zero.
struct Mono {
  int index = 0;
  int sign = 0;
};

Mono mul(const AlgebraTable& t, Mono a, Mono b) {
  if (a.sign == 0 || b.sign == 0) return {};
  const TableEntry& e = t.product(a.index, b.index);
  return {e.index, a.sign * b.sign * e.sign};
}

// (e_i e_j) e_k - e_i (e_j e_k) accumulated into `acc` with multiplicity `w`.
void add_associator(const AlgebraTable& t, int i, int j, int k, int w, std::vector<int>& acc) {
  const Mono left = mul(t, mul(t, {i, 1}, {j, 1}), {k, 1});
  const Mono right = mul(t, {i, 1}, mul(t, {j, 1}, {k, 1}));
  if (left.sign) acc[static_cast<std::size_t>(left.index)] += w * left.sign;
  if (right.sign) acc[static_cast<std::size_t>(right.index)] -= w * right.sign;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string mono_text(const AlgebraTable& t, Mono m) {
  if (m.sign == 0) return "0";
  return (m.sign < 0 ? "-" : "") + t.label(m.index);
}

bool conjugation_norm_is_scalar(const TablePtr& table) {
  const int n = table->dim();
  try {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Element u = Element::basis(table, i);
        if (j != i) u = u + Element::basis(table, j);
        (void)norm(u);
      }
    }
  } catch (const ConsistencyError&) {
    return false;
  }
  return true;
}

Element random_element(const TablePtr& table, RationalSampler& rng) {
  return {table, rng.next_vector(static_cast<std::size_t>(table->dim()))};
}

}  // namespace

PropertyRecord check_properties(const TablePtr& table_ptr, const PropertyOptions& options) {
  const AlgebraTable& t = *table_ptr;
  const int n = t.dim();
  PropertyRecord rec;
  auto note = [&rec](std::string s) { rec.counterexamples.push_back(std::move(s)); };

  rec.unital = true;
  for (int j = 0; j < n && rec.unital; ++j) {
    rec.unital = t.product(t.unit_index(), j) == TableEntry{j, 1} && t.product(j, t.unit_index()) == TableEntry{j, 1};
  }

  rec.commutative = true;
  for (int i = 0; i < n && rec.commutative; ++i) {
    for (int j = i + 1; j < n && rec.commutative; ++j) {
      if (t.product(i, j) != t.product(j, i)) {
        rec.commutative = false;
        note("commutative: " + t.label(i) + "*" + t.label(j) + " = " + t.render_entry(i, j) + " but " +
             t.label(j) + "*" + t.label(i) + " = " + t.render_entry(j, i));
      }
    }
  }

  // Multilinear identities on basis triples. Alternativity and flexibility use
  // their linearizations: the associator is alternating in the relevant slots.
  rec.associative = true;
  bool left_alt = true;
  bool right_alt = true;
  bool flex = true;
  std::vector<int> acc(static_cast<std::size_t>(n));
  auto reset = [&acc] { std::fill(acc.begin(), acc.end(), 0); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        reset();
        add_associator(t, i, j, k, 1, acc);
        if (rec.associative && !all_zero(acc)) {
          rec.associative = false;
          const Mono ij = mul(t, {i, 1}, {j, 1});
          const Mono jk = mul(t, {j, 1}, {k, 1});
          note("associative: (" + t.label(i) + "*" + t.label(j) + ")*" + t.label(k) + " = " +
               mono_text(t, mul(t, ij, {k, 1})) + " but " + t.label(i) + "*(" + t.label(j) + "*" +
               t.label(k) + ") = " + mono_text(t, mul(t, {i, 1}, jk)));
        }
        if (left_alt) {
          reset();
          add_associator(t, i, j, k, 1, acc);
          add_associator(t, j, i, k, 1, acc);
          if (!all_zero(acc)) {
            left_alt = false;
            note("alternative: [" + t.label(i) + "," + t.label(j) + "," + t.label(k) + "] + [" + t.label(j) +
                 "," + t.label(i) + "," + t.label(k) + "] != 0");
          }
        }
        if (right_alt) {
          reset();
          add_associator(t, i, j, k, 1, acc);
          add_associator(t, i, k, j, 1, acc);
          if (!all_zero(acc)) {
            right_alt = false;
            note("alternative: [" + t.label(i) + "," + t.label(j) + "," + t.label(k) + "] + [" + t.label(i) +
                 "," + t.label(k) + "," + t.label(j) + "] != 0");
          }
        }
        if (flex) {
          reset();
          add_associator(t, i, j, k, 1, acc);
          add_associator(t, k, j, i, 1, acc);
          if (!all_zero(acc)) {
            flex = false;
            note("flexible: [" + t.label(i) + "," + t.label(j) + "," + t.label(k) + "] + [" + t.label(k) + "," +
                 t.label(j) + "," + t.label(i) + "] != 0");
          }
        }
      }
    }
  }

  RationalSampler pair_rng(derive_seed(options.seed, "pairs:" + t.name()));
  for (std::size_t trial = 0; trial < options.pair_trials && (left_alt || right_alt || flex); ++trial) {
    const Element x = random_element(table_ptr, pair_rng);
    const Element y = random_element(table_ptr, pair_rng);
    const Element xx = x * x;
    if (left_alt && x * (x * y) != xx * y) {
      left_alt = false;
      note("alternative: x(xy) != (xx)y for x = " + to_string(x) + ", y = " + to_string(y));
    }
    if (right_alt && (y * x) * x != y * xx) {
      right_alt = false;
      note("alternative: (yx)x != y(xx) for x = " + to_string(x) + ", y = " + to_string(y));
    }
    if (flex && x * (y * x) != (x * y) * x) {
      flex = false;
      note("flexible: x(yx) != (xy)x for x = " + to_string(x) + ", y = " + to_string(y));
    }
  }
  rec.alternative = left_alt && right_alt;
  rec.flexible = flex;

  rec.conjugation_antiautomorphism = true;
  for (int i = 0; i < n && rec.conjugation_antiautomorphism; ++i) {
    for (int j = 0; j < n && rec.conjugation_antiautomorphism; ++j) {
      const Element ei = Element::basis(table_ptr, i);
      const Element ej = Element::basis(table_ptr, j);
      if (conjugate(ei * ej) != conjugate(ej) * conjugate(ei)) {
        rec.conjugation_antiautomorphism = false;
        note("conjugation: conj(" + t.label(i) + "*" + t.label(j) + ") != conj(" + t.label(j) + ")*conj(" +
             t.label(i) + ")");
      }
    }
  }

  std::vector<int> diag;
  bool has_diag = true;
  try {
    diag = diagonal_form(t);
  } catch (const ConsistencyError&) {
    has_diag = false;
  }

  rec.norm_source = conjugation_norm_is_scalar(table_ptr) ? NormSource::conjugation : NormSource::diagonal;
  auto quad = [&](const Element& u) {
    return rec.norm_source == NormSource::conjugation ? norm(u) : diagonal_quadratic_form(u, diag);
  };

  if (rec.norm_source == NormSource::conjugation || has_diag) {
    rec.composition = true;
    RationalSampler comp_rng(derive_seed(options.seed, "composition:" + t.name()));
    for (std::size_t trial = 0; trial < options.composition_trials; ++trial) {
      const Element x = random_element(table_ptr, comp_rng);
      const Element y = random_element(table_ptr, comp_rng);
      const Rational lhs = quad(x * y);
      const Rational rhs = quad(x) * quad(y);
      if (lhs != rhs) {
        rec.composition = false;
        note("composition: n(xy) = " + to_string(lhs) + " != n(x)n(y) = " + to_string(rhs) + " for x = " +
             to_string(x) + ", y = " + to_string(y));
        break;
      }
    }
  } else {
    note("composition: no scalar norm available");
  }

  if (rec.norm_source == NormSource::conjugation) {
    rec.positive_definite = true;
    for (int i = 0; i < n && rec.positive_definite; ++i) {
      const Element ei = Element::basis(table_ptr, i);
      if (sgn(norm(ei)) <= 0) rec.positive_definite = false;
      for (int j = i + 1; j < n && rec.positive_definite; ++j) {
        if (sgn(polarize(ei, Element::basis(table_ptr, j))) != 0) rec.positive_definite = false;
      }
    }
  } else if (has_diag) {
    rec.positive_definite = std::all_of(diag.begin(), diag.end(), [](int d) { return d > 0; });
  }

  rec.zero_divisor = find_zero_divisor(table_ptr);
  return rec;
}

PropertyRecord check_properties(HurwitzClass c, const PropertyOptions& options) {
  PropertyRecord rec = check_properties(canonical_table(c), options);
  // Total order is not decidable from a multiplication table.
  rec.ordered = c == HurwitzClass::R;
  return rec;
}

// ---------------------------------------------------------------------------
// Biquaternions

const std::vector<std::string>& biquaternion_labels() {
  static const std::vector<std::string> labels = {"1", "iota", "i", "j", "k", "iota_i", "iota_j", "iota_k"};
  return labels;
}

namespace {

// Basis position -> (complex factor index, quaternion factor index).
constexpr std::array<std::array<int, 2>, 8> kTensorFactors = {
    {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}}};

int tensor_position(int z, int q) {
  for (int i = 0; i < 8; ++i) {
    if (kTensorFactors[static_cast<std::size_t>(i)] == std::array<int, 2>{z, q}) return i;
  }
  throw std::logic_error("bad tensor factor");
}

}  // namespace

AlgebraTable build_biquaternion(HurwitzClass c, HurwitzClass h) {
  if (c != HurwitzClass::C && c != HurwitzClass::Cs) {
    throw std::invalid_argument("biquaternion complex factor must be C or Cs");
  }
  if (h != HurwitzClass::H && h != HurwitzClass::Hs) {
    throw std::invalid_argument("biquaternion quaternion factor must be H or Hs");
  }
  const AlgebraTable& ct = *canonical_table(c);
  const AlgebraTable& ht = *canonical_table(h);

  std::vector<TableEntry> product;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto [za, qa] = kTensorFactors[static_cast<std::size_t>(a)];
      const auto [zb, qb] = kTensorFactors[static_cast<std::size_t>(b)];
      const TableEntry& z = ct.product(za, zb);
      const TableEntry& q = ht.product(qa, qb);
      product.push_back({tensor_position(z.index, q.index), z.sign * q.sign});
    }
  }
  const auto dagger = biquaternion_conjugation_signs(BiquaternionConjugation::dagger);
  return {"biq:" + std::string(to_string(c)) + "," + std::string(to_string(h)), biquaternion_labels(),
          std::move(product), std::vector<int>(dagger.begin(), dagger.end()), 0};
}

std::string_view to_string(BiquaternionConjugation which) {
  switch (which) {
    case BiquaternionConjugation::tilde: return "tilde";
    case BiquaternionConjugation::bar: return "bar";
    case BiquaternionConjugation::dagger: return "dagger";
  }
  return "?";
}

std::array<int, 8> biquaternion_conjugation_signs(BiquaternionConjugation which) {
  std::array<int, 8> signs{};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto [z, q] = kTensorFactors[i];
    const int tilde = q == 0 ? 1 : -1;  // quaternionic conjugation on the H factor
    const int bar = z == 0 ? 1 : -1;    // complex conjugation on the C factor
    switch (which) {
      case BiquaternionConjugation::tilde: signs[i] = tilde; break;
      case BiquaternionConjugation::bar: signs[i] = bar; break;
      case BiquaternionConjugation::dagger: signs[i] = bar * tilde; break;
    }
  }
  return signs;
}

Element biquaternion_conjugate(const Element& x, BiquaternionConjugation which) {
  if (x.table().labels() != biquaternion_labels()) {
    throw std::invalid_argument(x.table().name() + " is not a biquaternion table");
  }
  if (which == BiquaternionConjugation::dagger) {
    return biquaternion_conjugate(biquaternion_conjugate(x, BiquaternionConjugation::tilde),
                                  BiquaternionConjugation::bar);
  }
  const auto signs = biquaternion_conjugation_signs(which);
  std::vector<Rational> c = x.coords();
  for (std::size_t i = 0; i < 8; ++i) {
    if (signs[i] < 0) c[i] = -c[i];
  }
  return {x.table_ptr(), std::move(c)};
}

}  // namespace hurwitz
