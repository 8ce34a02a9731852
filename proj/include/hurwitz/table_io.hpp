#pragma once

// Text, JSON and CSV renderings of structure-constant tables and isomorphism
// witnesses.
//
// JSON table:   {"name", "dim", "basis_labels", "product": [[{"k","s"}...]...], "conj"}
// JSON witness: {"source", "target", "map": [[target_index, sign], ...]}
// CSV:          header row and column of basis labels, entries such as "-e3".

#include <json.hpp>
#include <string>

#include "hurwitz/canonical_algebras.hpp"
#include "hurwitz/isomorphism.hpp"

namespace hurwitz {

// Row labels on the left, column labels on top, columns padded to a common
// width.
std::string render_text(const AlgebraTable& table);
std::string render_csv(const AlgebraTable& table);

nlohmann::json table_to_json(const AlgebraTable& table);
// Inverse of table_to_json. Throws std::invalid_argument on schema violations.
AlgebraTable table_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const IsomorphismWitness& w);

}  // namespace hurwitz
