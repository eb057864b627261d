#pragma once

#include <json.hpp>
#include <string>

#include "skewps/level.hpp"
#include "skewps/ring.hpp"

namespace skewps {

using json = nlohmann::json;

// Literal grammar (JSON). Canonical output is json::dump() without
// indentation; object keys come out sorted.
//
// Rings:
//   {"kind":"Zp","p":2,"N":6}
//   {"kind":"FqSeries","q":4,"N":3}
//   {"kind":"Matrix","n":2,"inner":<ring>}
//   {"kind":"Product","factors":[<ring>,...]}
//
// Elements are read against a ring:
//   Zp        integer (reduced to the least nonnegative residue)
//   FqSeries  [c_0, c_1, ...] coefficients of π^i; each c_i in 0..q-1 encodes
//             an F_q element by its base-p digits in the basis 1, w, w^2, ...
//   Matrix    [[row], [row], ...]
//   Product   [factor_0, factor_1, ...]
// Any element may be wrapped as {"prec":k,"value":<payload>} to state that it
// is known modulo level k only; unwrapped literals are at the ring cap.

json ring_to_json(const Ring& ring);
Ring ring_from_json(const json& j);

json element_to_json(const Element& e);
Element element_from_json(const Ring& ring, const json& j);

json level_to_json(const Level& l);

/// Parses text as JSON, raising ParseError with the byte position on failure.
json parse_text(const std::string& text, const std::string& what = "literal");
/// Reads a file and parses it; ParseError if unreadable.
json parse_file(const std::string& path);

inline std::string canonical(const json& j) { return j.dump(); }

}  // namespace skewps
