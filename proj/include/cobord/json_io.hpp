#pragma once

#include <string>

#include "cobord/poly.hpp"

namespace cobord {

// Canonical JSON form of a truncated polynomial:
//
//   {"ring":    {"base": "integers"|"rationals",
//                "generators": [{"name": ..., "grade": ...}, ...]},
//    "variables": [...],
//    "cap": N,
//    "terms": [{"exps": [...],
//               "coeff": [{"mono": {gen: exp, ...}, "num": "...", "den": "..."}, ...]},
//              ...]}
//
// Terms follow the canonical term order, coefficient monomials sort by
// generator name, and scalars are decimal strings in lowest terms, so a
// render -> parse -> render round trip is byte-identical.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

} // namespace cobord
