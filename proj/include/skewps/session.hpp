#pragma once

#include <map>
#include <string>

#include "skewps/expr.hpp"
#include "skewps/reparam.hpp"
#include "skewps/serialize.hpp"
#include "skewps/untwist.hpp"
#include "skewps/weierstrass.hpp"

namespace skewps {

// JSON-level operations shared by the command-line tool and the Python
// module. Inputs are literals in the grammar of serialize.hpp; outputs are
// canonical JSON objects.

struct SessionOptions {
  int cap = -1;          // override of the context cap
  bool checked = true;   // run the Leibniz/compatibility gate
  int trials = 32;
  uint64_t seed = 0;
};

/// True for {"ring", "sigma_witness", "delta_witness", ...}.
bool is_witnessed_context(const json& j);

/// {"ring":..., "twist":... (optional), "cap":... (optional)}.
Context context_from_json(const json& j, const SessionOptions& opts = {});

/// A witnessed context, built into the untwisting isomorphism.
UntwistingIsomorphism isomorphism_from_json(const json& j, const SessionOptions& opts = {});

/// A series literal; a bare list is read as the coefficient list.
SkewSeries series_argument(const Context& ctx, json j);

/// {"context", "result"}; inputs maps names to series literals.
json session_eval(const Context& ctx, const std::string& expr, const std::map<std::string, json>& inputs = {});

/// {"target", "series", "f_x", "f_y"} for y = x − t (shift) or y = a x (scale).
json session_change_variable(const Context& ctx, const json& series, MoveKind kind, const json& elt);

/// {"source", "target", "n", "new_variable", "certificate_chain"}.
json session_untwist(const UntwistingIsomorphism& phi);

/// {"target", "matrix"}.
json session_iso_apply(const UntwistingIsomorphism& phi, const json& series);

/// {"source", "series"}; accepts the bare matrix or the output of session_iso_apply.
json session_iso_unapply(const UntwistingIsomorphism& phi, const json& matrix);

/// Depolarizes, then prepares: {"context", "depolarized", "prepared"}.
json session_prepare(const Context& ctx, const json& series);

/// Right-ideal extraction over a leaf ring: {"polynomial", "multiplier", "prepared", "verified"}.
json session_right_ideal_poly(const Context& ctx, const json& generator);

/// Two-sided extraction through the isomorphism:
/// {"polynomial", "degree", "entry", "left", "right", "verified"}.
json session_two_sided_ideal_poly(const UntwistingIsomorphism& phi, const json& generator);

}  // namespace skewps
