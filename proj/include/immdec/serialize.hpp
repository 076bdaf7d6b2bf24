#pragma once

#include <initializer_list>
#include <string>

#include "json.hpp"

#include "immdec/ambient.hpp"
#include "immdec/cdga.hpp"
#include "immdec/lift.hpp"

namespace immdec {

// Key order is preserved on output so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

// Rejects objects with keys outside required + optional and objects missing
// a required key; 'where' names the object in diagnostics.
void require_keys(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const std::string& where);

// Object keys standing for degrees: digits only.
int degree_from_json_key(const std::string& key, const std::string& what);

// Coordinate vectors as arrays of rational strings ("3", "-2/5").
// expected_len < 0 skips the length check.
QVec qvec_from_json(const Json& j, int expected_len, const std::string& what);
Json qvec_to_json(const QVec& v);

RationalMatrix matrix_from_json(const Json& j, const std::string& what);
Json matrix_to_json(const RationalMatrix& m);

// Elements as term lists [[coefficient, {generator: exponent}], ...] in the
// canonical monomial order; the unit monomial is the empty object.
Json element_to_json(const Element& e);
Element element_from_json(const GenSetPtr& gens, const Json& j,
                          const std::string& what);

// {"generators": [[name, degree], ...], "differential": {name: terms}};
// generators without an entry under "differential" are closed.
Json free_cdga_to_json(const FreeCDGA& a);
FreeCDGA free_cdga_from_json(const Json& j, const std::string& what);

/* {"basis": {"<degree>": [names...]},
 *  "products": [[left, right, value-vector], ...],
 *  "differential": {"<degree>": matrix},      (optional; maps k to k+1,
 *                                              dim(k+1) x dim(k))
 *  "unit_name": "1"}                          (optional)                  */
FinitePresentation::Data presentation_data_from_json(const Json& j,
                                                     const std::string& what);

// The whole relative model in the free-algebra schema, with the split into
// base and fiber generators alongside.
Json relative_model_to_json(const RelativeModel& r);

}  // namespace immdec
