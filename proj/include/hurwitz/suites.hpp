#pragma once

// Named verification suites driving the invariants of every module. Each check
// yields one CheckRecord; records come back in a fixed order regardless of how
// cases were scheduled.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hurwitz/ga_core.hpp"
#include "hurwitz/random.hpp"
#include "hurwitz/report.hpp"

namespace hurwitz {

enum class Suite { ga_axioms, involutions, hurwitz_properties, composition, norm_lemma, isomorphisms, all };

inline constexpr std::array<Suite, 7> kSuites = {Suite::ga_axioms,   Suite::involutions, Suite::hurwitz_properties,
                                                 Suite::composition, Suite::norm_lemma,  Suite::isomorphisms,
                                                 Suite::all};

// "ga-axioms", "involutions", "hurwitz-properties", "composition",
// "norm-lemma", "isomorphisms", "all".
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteOptions {
  // Restricts signature-dependent cases; all four standard signatures if unset.
  std::optional<Signature> signature;
  std::size_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  // Run independent cases on separate threads.
  bool parallel = true;
};

std::vector<CheckRecord> run_suite(Suite s, const SuiteOptions& options = {});

}  // namespace hurwitz
