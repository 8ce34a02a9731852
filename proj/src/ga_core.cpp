#include "hurwitz/ga_core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hurwitz {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(int l1, int l2, int l3) : lambdas_{l1, l2, l3} {
  for (int l : lambdas_) {
    if (l != 1 && l != -1) throw std::invalid_argument("metric signs must be +1 or -1");
  }
}

Signature Signature::from_pq(int p, int q) {
  if (p < 0 || q < 0 || p + q != 3) {
    throw std::invalid_argument("signature (" + std::to_string(p) + "," + std::to_string(q) +
                                "): p + q must be 3");
  }
  switch (p) {
    case 3: return {1, 1, 1};
    case 2: return {1, 1, -1};
    case 1: return {-1, -1, 1};
    default: return {-1, -1, -1};
  }
}

int Signature::p() const { return static_cast<int>(std::count(lambdas_.begin(), lambdas_.end(), 1)); }
int Signature::q() const { return 3 - p(); }

std::string Signature::name() const {
  std::string out = "G(" + std::to_string(p()) + "," + std::to_string(q()) + ")";
  if (*this != from_pq(p(), q())) {
    out += "[";
    for (int i = 0; i < 3; ++i) {
      if (i) out += ",";
      out += std::to_string(lambdas_[static_cast<std::size_t>(i)]);
    }
    out += "]";
  }
  return out;
}

std::string Signature::tag() const {
  if (*this == from_pq(p(), q())) return std::to_string(p()) + "," + std::to_string(q());
  return std::to_string(lambdas_[0]) + "," + std::to_string(lambdas_[1]) + "," + std::to_string(lambdas_[2]);
}

const std::array<Signature, 4>& standard_signatures() {
  static const std::array<Signature, 4> sigs = {Signature::from_pq(3, 0), Signature::from_pq(2, 1),
                                                Signature::from_pq(1, 2), Signature::from_pq(0, 3)};
  return sigs;
}

// ---------------------------------------------------------------------------
// Blades

namespace {

constexpr std::array<std::string_view, 8> kLabelsByMask = {"1",  "e1",  "e2",  "e12",
                                                           "e3", "e13", "e23", "e123"};

constexpr std::array<int, 4> kReversionSigns = {1, 1, -1, -1};
constexpr std::array<int, 4> kInversionSigns = {1, -1, 1, -1};
constexpr std::array<int, 4> kCliffordSigns = {1, -1, -1, 1};
constexpr std::array<int, 4> kFullGradeSigns = {1, -1, -1, -1};

Multivector apply_grade_signs(const Multivector& x, const std::array<int, 4>& signs) {
  Multivector::Coeffs c = x.by_mask();
  for (unsigned m = 0; m < 8; ++m) {
    if (signs[static_cast<std::size_t>(std::popcount(m))] < 0) c[m] = -c[m];
  }
  return {x.signature(), std::move(c)};
}

}  // namespace

std::string_view Blade::label() const { return kLabelsByMask.at(mask); }

int basis_position(Blade b) {
  for (int i = 0; i < 8; ++i) {
    if (kBasisOrder[static_cast<std::size_t>(i)] == b) return i;
  }
  throw std::invalid_argument("blade mask out of range");
}

int coefficient_position(Blade b) {
  for (int i = 0; i < 8; ++i) {
    if (kCoefficientOrder[static_cast<std::size_t>(i)] == b) return i;
  }
  throw std::invalid_argument("blade mask out of range");
}

SignedBlade blade_product(Blade a, Blade b, const Signature& sig) {
  // Each generator of a must move past every lower-indexed generator of b.
  int swaps = 0;
  for (unsigned rest = static_cast<unsigned>(a.mask) >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b.mask);
  }
  int sign = (swaps & 1) ? -1 : 1;
  for (unsigned common = static_cast<unsigned>(a.mask & b.mask); common != 0; common &= common - 1) {
    sign *= sig.lambda(std::countr_zero(common));
  }
  return {sign, Blade{static_cast<std::uint8_t>(a.mask ^ b.mask)}};
}

// ---------------------------------------------------------------------------
// Multivector

Multivector Multivector::scalar(const Signature& sig, const Rational& value) {
  return basis(sig, Blade{0}, value);
}

Multivector Multivector::basis(const Signature& sig, Blade b, const Rational& coeff) {
  Coeffs c;
  c.at(b.mask) = coeff;
  return {sig, std::move(c)};
}

Multivector Multivector::from_coefficients(const Signature& sig, const Coeffs& x) {
  Coeffs c;
  for (std::size_t i = 0; i < 8; ++i) c[kCoefficientOrder[i].mask] = x[i];
  return {sig, std::move(c)};
}

Multivector::Coeffs Multivector::coefficients() const {
  Coeffs x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = c_[kCoefficientOrder[i].mask];
  return x;
}

bool Multivector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

void require_same_signature(const Multivector& x, const Multivector& y) {
  if (x.signature() != y.signature()) {
    throw std::invalid_argument("signature mismatch: " + x.signature().name() + " vs " +
                                y.signature().name());
  }
}

Multivector operator+(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector::Coeffs c;
  for (std::size_t m = 0; m < 8; ++m) c[m] = x.c_[m] + y.c_[m];
  return {x.sig_, std::move(c)};
}

Multivector operator-(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector::Coeffs c;
  for (std::size_t m = 0; m < 8; ++m) c[m] = x.c_[m] - y.c_[m];
  return {x.sig_, std::move(c)};
}

Multivector operator-(const Multivector& x) {
  Multivector::Coeffs c;
  for (std::size_t m = 0; m < 8; ++m) c[m] = -x.c_[m];
  return {x.sig_, std::move(c)};
}

Multivector operator*(const Rational& s, const Multivector& x) {
  Multivector::Coeffs c;
  for (std::size_t m = 0; m < 8; ++m) c[m] = s * x.c_[m];
  return {x.sig_, std::move(c)};
}

namespace {

// Numerators over a common denominator: x_m = num[m] / den.
struct Scaled {
  std::array<mpz_class, 8> num;
  mpz_class den = 1;
};

Scaled scale(const Multivector::Coeffs& c) {
  Scaled s;
  for (const Rational& r : c) {
    if (sgn(r) != 0) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), r.get_den_mpz_t());
  }
  for (std::size_t m = 0; m < 8; ++m) {
    if (sgn(c[m]) != 0) s.num[m] = c[m].get_num() * (s.den / c[m].get_den());
  }
  return s;
}

// blade_product signs for all 64 mask pairs, one table per metric.
const std::array<std::int8_t, 64>& sign_table(const Signature& sig) {
  static const auto tables = [] {
    std::array<std::array<std::int8_t, 64>, 8> t{};
    for (unsigned metric = 0; metric < 8; ++metric) {
      const Signature s((metric & 1) ? -1 : 1, (metric & 2) ? -1 : 1, (metric & 4) ? -1 : 1);
      for (unsigned a = 0; a < 8; ++a) {
        for (unsigned b = 0; b < 8; ++b) {
          t[metric][a * 8 + b] = static_cast<std::int8_t>(
              blade_product(Blade{static_cast<std::uint8_t>(a)}, Blade{static_cast<std::uint8_t>(b)}, s).sign);
        }
      }
    }
    return t;
  }();
  const unsigned metric = (sig.lambda(0) < 0 ? 1u : 0u) | (sig.lambda(1) < 0 ? 2u : 0u) | (sig.lambda(2) < 0 ? 4u : 0u);
  return tables[metric];
}

}  // namespace

// Integer accumulation with a single canonicalization per output coefficient.
Multivector operator*(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  const Scaled sx = scale(x.c_);
  const Scaled sy = scale(y.c_);
  const auto& signs = sign_table(x.sig_);
  std::array<mpz_class, 8> acc;
  for (std::uint8_t a = 0; a < 8; ++a) {
    if (sgn(sx.num[a]) == 0) continue;
    for (std::uint8_t b = 0; b < 8; ++b) {
      if (sgn(sy.num[b]) == 0) continue;
      mpz_ptr target = acc[a ^ b].get_mpz_t();
      if (signs[a * 8u + b] > 0) {
        mpz_addmul(target, sx.num[a].get_mpz_t(), sy.num[b].get_mpz_t());
      } else {
        mpz_submul(target, sx.num[a].get_mpz_t(), sy.num[b].get_mpz_t());
      }
    }
  }
  const mpz_class den = sx.den * sy.den;
  Multivector::Coeffs c;
  for (std::size_t m = 0; m < 8; ++m) {
    if (sgn(acc[m]) == 0) continue;
    c[m] = Rational(acc[m], den);
    c[m].canonicalize();
  }
  return {x.sig_, std::move(c)};
}

Multivector geometric_product(const Multivector& x, const Multivector& y) { return x * y; }

Multivector grade_select(const Multivector& x, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("grade must be in 0..3, got " + std::to_string(k));
  Multivector::Coeffs c;
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) == k) c[m] = x.by_mask()[m];
  }
  return {x.signature(), std::move(c)};
}

const Rational& scalar_part(const Multivector& x) { return x[Blade{0}]; }

GradedParts parity_split(const Multivector& x) {
  Multivector::Coeffs even;
  Multivector::Coeffs odd;
  for (unsigned m = 0; m < 8; ++m) {
    (std::popcount(m) % 2 == 0 ? even : odd)[m] = x.by_mask()[m];
  }
  return {Multivector(x.signature(), std::move(even)), Multivector(x.signature(), std::move(odd))};
}

Multivector inner(const Multivector& x, const Multivector& y) {
  return Rational(1, 2) * (x * y + y * x);
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  return Rational(1, 2) * (x * y - y * x);
}

Multivector reversion(const Multivector& x) { return apply_grade_signs(x, kReversionSigns); }
Multivector inversion(const Multivector& x) { return apply_grade_signs(x, kInversionSigns); }
Multivector clifford_conjugation(const Multivector& x) { return apply_grade_signs(x, kCliffordSigns); }
Multivector full_grade_inversion(const Multivector& x) { return apply_grade_signs(x, kFullGradeSigns); }

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Multivector& x) {
  std::string out;
  for (Blade b : kBasisOrder) {
    const Rational& c = x[b];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (b.mask == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += b.label();
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

  Multivector parse() {
    Multivector::Coeffs acc;
    skip_ws();
    if (at_end()) fail("empty multivector");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, blade] = parse_term();
      if (sign < 0) coeff = -coeff;
      acc[blade.blade.mask] += blade.sign > 0 ? coeff : Rational(-coeff);
      skip_ws();
    }
    return {sig_, std::move(acc)};
  }

 private:
  std::pair<Rational, SignedBlade> parse_term() {
    if (peek() == 'e') return {Rational(1), parse_label()};
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient or blade label");
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    Rational coeff = parse_rational(s_.substr(start, pos_ - start));
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '1' && (pos_ + 1 == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        return {coeff, SignedBlade{1, Blade{0}}};
      }
      return {coeff, parse_label()};
    }
    return {coeff, SignedBlade{1, Blade{0}}};
  }

  // e followed by 1..3 distinct generator indices in any order.
  SignedBlade parse_label() {
    if (at_end() || take() != 'e') fail("expected blade label");
    std::vector<int> gens;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const int g = take() - '0';
      if (g < 1 || g > 3) fail("generator index must be 1, 2 or 3");
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) fail("repeated generator in blade label");
      gens.push_back(g);
    }
    if (gens.empty()) fail("blade label without generators");
    int inversions = 0;
    std::uint8_t mask = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      mask |= static_cast<std::uint8_t>(1u << (gens[i] - 1));
      for (std::size_t j = i + 1; j < gens.size(); ++j) inversions += gens[i] > gens[j];
    }
    return {inversions % 2 ? -1 : 1, Blade{mask}};
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse multivector '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Signature sig_;
};

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) {
  return TermParser(text, sig).parse();
}

}  // namespace hurwitz
