#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/canonical_algebras.hpp"

namespace hurwitz::cli {

// Runs one command line (without the program name). Returns the exit status:
// 0 all checks passed, 1 a check failed, 2 usage error.
// The default seed comes from HURWITZ_GA_SEED when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Same, with the environment seed passed explicitly (nullopt = unset).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed);

// Algebra specs accepted by `table`:
//   R C Cs H Hs O Os           canonical Hurwitz tables
//   ga:p,q                     geometric product of G(p,q)
//   bullet:p,q:+  bullet:p,q:- octonionic products on G(p,q)
//   biq:C,H (C|Cs, H|Hs)       biquaternion algebras
//   even:p,q  ps:p,q           even and pseudoscalar subalgebras
//   transported:p,q            G(p,q) in the biquaternion basis
// Throws std::invalid_argument for anything else.
AlgebraTable table_from_spec(std::string_view spec);

}  // namespace hurwitz::cli
