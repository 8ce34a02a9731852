#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

// Exact scalar used everywhere in the kernel. Always kept canonical.
using Rational = mpq_class;

// Raised when a result contradicts a structural invariant the code relies on
// (a corrupted table, a non-scalar norm, a failed witness search).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hurwitz
