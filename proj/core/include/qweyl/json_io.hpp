#pragma once

// JSON interchange for every public type, plus the plain-text element
// encodings the command line uses. Key order is fixed so identical inputs
// serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "qweyl/burnside.hpp"
#include "qweyl/census.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/field.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/reduce.hpp"
#include "qweyl/solutions.hpp"

namespace qweyl {

using json = nlohmann::ordered_json;

json to_json(const FieldCtx& ctx);
FieldCtx ctx_from_json(const json& j);

// Prime elements are integers, cyclotomic elements arrays of "num/den"
// strings of length phi(l).
json to_json(const FieldElem& v);
FieldElem elem_from_json(const FieldCtx& ctx, const json& j);

json to_json(const Mat& m);
Mat mat_from_json(const FieldCtx& ctx, const json& j);

json to_json(const Solution& s);
Solution solution_from_json(const json& j);

json to_json(const CanonicalForm& form);
CanonicalForm canonical_from_json(const FieldCtx& ctx, const json& j);

json to_json(const RelationReport& r);
json to_json(const StructuralReport& r);
json to_json(const ElementaryCombination& c);
json to_json(const Reduction& r);
json to_json(const CensusReport& r);
json to_json(const CrossValidation& v);
json to_json(const Error& e);

// Command-line text forms: prime elements are decimal integers, cyclotomic
// elements comma-separated rationals; lists of elements split on ';'.
std::string elem_to_text(const FieldElem& v);
FieldElem elem_from_text(const FieldCtx& ctx, const std::string& text);
std::vector<FieldElem> elems_from_text(const FieldCtx& ctx, const std::string& text);

}  // namespace qweyl
