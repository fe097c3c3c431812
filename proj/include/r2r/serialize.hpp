#pragma once

#include "r2r/combinatorics.hpp"
#include "r2r/frobenius.hpp"
#include "r2r/lifting.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/word.hpp"
#include "r2r/wordspace.hpp"

#include "json.hpp"

namespace r2r {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// {"<word text>": "p/q", ...}
Json to_json(const WordVector& v);
WordVector word_vector_from_json(const Json& j);

Json to_json(const SkewShape& s);
SkewShape skew_shape_from_json(const Json& j);

// {order: [...], scale: "1/16", entries: [[...]]}
Json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const Json& j);

Json to_json(const StripEigenvalue& e);
Json to_json(const SpectrumReport& r);
Json to_json(const WordEigenvalue& w);
Json to_json(const EigenbasisEntry& e);
EigenbasisEntry eigenbasis_entry_from_json(const Json& j);
// {"3,2,1": 1, "4,1,1": 2}
Json to_json(const SchurExpansion& s);
SchurExpansion schur_expansion_from_json(const Json& j);

}  // namespace r2r
