#pragma once

#include <string>

#include "hurwitz/ga_core.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

inline oracle::Lambdas lambdas(const hurwitz::Signature& s) { return s.lambdas(); }

inline hurwitz::Multivector to_library(const oracle::Mv& x, const hurwitz::Signature& s) {
  return {s, x};
}

inline oracle::Mv to_oracle(const hurwitz::Multivector& x) { return x.by_mask(); }

inline hurwitz::Multivector mv(const std::string& text, const hurwitz::Signature& s) {
  return hurwitz::parse_multivector(text, s);
}

inline hurwitz::Signature g30() { return hurwitz::Signature::from_pq(3, 0); }
inline hurwitz::Signature g21() { return hurwitz::Signature::from_pq(2, 1); }
inline hurwitz::Signature g12() { return hurwitz::Signature::from_pq(1, 2); }
inline hurwitz::Signature g03() { return hurwitz::Signature::from_pq(0, 3); }

// Every metric triple, not only the four standard ones.
inline std::vector<hurwitz::Signature> all_metrics() {
  std::vector<hurwitz::Signature> out;
  for (int m = 0; m < 8; ++m) out.emplace_back(m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1);
  return out;
}

}  // namespace testing_support
