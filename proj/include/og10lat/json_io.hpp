#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "og10lat/lattice.hpp"

namespace og10lat::jsonio {

/// On-disk lattice document: {"name": ..., "gram": [[...]],
/// "vectors": {"label": [...]}, "glue": [["1/3", 2, ...], ...]}.
struct LatticeDocument {
    std::string name; // empty = absent
    IntMatrix gram;
    std::map<std::string, RowVec> vectors;
    std::vector<RatVec> glue;

    IntegralLattice lattice() const { return IntegralLattice(gram, name); }
};

LatticeDocument parse_lattice_document(const nlohmann::json& j);
LatticeDocument load_lattice_document(const std::string& path);
nlohmann::json to_json(const LatticeDocument& doc);

/// mpz as a JSON value: a number when it fits in 64 bits, else a decimal
/// string.
nlohmann::json json_int(const Int& v);
nlohmann::json json_vec(const RowVec& v);
nlohmann::json json_rat_vec(const RatVec& v);
nlohmann::json json_matrix(const IntMatrix& m);

Int parse_int(const nlohmann::json& j);
Rat parse_rat(const nlohmann::json& j); // integer or "p/q" string
RowVec parse_int_vec(const nlohmann::json& j);
RatVec parse_rat_vec(const nlohmann::json& j);

// CLI string grammar: comma-separated integers, ';'-separated vectors,
// rationals "p/q" only in glue vectors
RowVec parse_vector_arg(const std::string& s);
RatVec parse_rat_vector_arg(const std::string& s);
std::vector<RowVec> parse_span_arg(const std::string& s);

} // namespace og10lat::jsonio
