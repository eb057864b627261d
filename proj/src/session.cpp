#include "skewps/session.hpp"

#include "skewps/errors.hpp"

namespace skewps {

bool is_witnessed_context(const json& j) { return j.is_object() && j.contains("sigma_witness"); }

Context context_from_json(const json& j, const SessionOptions& opts) {
  if (is_witnessed_context(j)) throw ParseError("expected {ring, twist, cap}, got a witnessed context");
  if (!j.is_object() || !j.contains("ring")) throw ParseError("context: expected {\"ring\":..,\"twist\":..,\"cap\":..}");
  const Ring ring = ring_from_json(j.at("ring"));
  const json twist_j = j.value("twist", json(nullptr));
  const Twist twist = twist_j.is_null() ? Twist{} : twist_from_json(ring, twist_j);
  ContextOptions co;
  co.cap = opts.cap;
  if (co.cap < 0 && j.contains("cap")) {
    if (!j.at("cap").is_number_integer()) throw ParseError("context cap must be an integer");
    co.cap = j.at("cap").get<int>();
  }
  co.checked = opts.checked;
  co.trials = opts.trials;
  co.seed = opts.seed;
  return make_context(ring, twist, co);
}

UntwistingIsomorphism isomorphism_from_json(const json& j, const SessionOptions& opts) {
  if (!is_witnessed_context(j)) throw ParseError("expected a witnessed context (sigma_witness, delta_witness)");
  WitnessedContext w = witnessed_from_json(j);
  if (opts.cap > 0) w.cap = opts.cap;
  return UntwistingIsomorphism::build(w, opts.trials, opts.seed);
}

SkewSeries series_argument(const Context& ctx, json j) {
  if (j.is_array()) j = {{"coeffs", j}};
  return series_from_json(ctx, j);
}

json session_eval(const Context& ctx, const std::string& expr, const std::map<std::string, json>& inputs) {
  std::map<std::string, SkewSeries> names;
  for (const auto& [name, lit] : inputs) {
    if (name.empty() || name == "x" || name == "val" || name == "inv")
      throw ParseError("input name '" + name + "' is reserved");
    names[name] = series_argument(ctx, lit);
  }
  return {{"context", context_to_json(ctx)}, {"result", expr_value_to_json(evaluate(expr, ctx, names))}};
}

json session_change_variable(const Context& ctx, const json& series, MoveKind kind, const json& elt) {
  const Element e = element_from_json(ctx->ring, elt);
  const SkewSeries p = series_argument(ctx, series);
  const ChangeOfVariable cv = change_variable(p, kind == MoveKind::Shift ? Move::shift(e) : Move::scale(e));
  return {{"target", context_to_json(cv.target)},
          {"series", series_to_json(cv.image)},
          {"f_x", level_to_json(sps_val(p))},
          {"f_y", level_to_json(sps_val(cv.image))}};
}

json session_untwist(const UntwistingIsomorphism& phi) {
  return {{"source", context_to_json(phi.source())},
          {"target", context_to_json(phi.target())},
          {"n", phi.n()},
          {"new_variable", series_to_json(phi.new_variable_in_source())},
          {"certificate_chain", phi.certificate_chain()}};
}

json session_iso_apply(const UntwistingIsomorphism& phi, const json& series) {
  const SkewSeries p = series_argument(phi.source(), series);
  return {{"target", context_to_json(phi.target())}, {"matrix", matrix_series_to_json(phi.apply(p))}};
}

json session_iso_unapply(const UntwistingIsomorphism& phi, const json& matrix) {
  const json& m = matrix.is_object() && matrix.contains("matrix") ? matrix.at("matrix") : matrix;
  const MatrixSeries ms = matrix_series_from_json(phi.target(), phi.n(), m);
  return {{"source", context_to_json(phi.source())}, {"series", series_to_json(phi.unapply(ms))}};
}

json session_prepare(const Context& ctx, const json& series) {
  const SkewSeries r = series_argument(ctx, series);
  const Depolarized dp = depolarize(r);
  PreparedForm pf = prepare(dp.s);
  pf.m = dp.m;
  return {{"context", context_to_json(ctx)}, {"depolarized", series_to_json(dp.s)}, {"prepared", prepared_to_json(pf)}};
}

json session_right_ideal_poly(const Context& ctx, const json& generator) {
  const SkewSeries r = series_argument(ctx, generator);
  const RightIdealPolynomial c = polynomial_in_right_ideal(r);
  return {{"polynomial", series_to_json(c.q)},
          {"multiplier", series_to_json(c.w)},
          {"prepared", prepared_to_json(c.prepared)},
          {"verified", verify_right_ideal_certificate(r, c)}};
}

json session_two_sided_ideal_poly(const UntwistingIsomorphism& phi, const json& generator) {
  const SkewSeries r = series_argument(phi.source(), generator);
  const TwoSidedIdealPolynomial c = polynomial_in_two_sided_ideal_matrix(r, phi);
  json left = json::array(), right = json::array();
  for (size_t l = 0; l < c.left.size(); ++l) {
    left.push_back(series_to_json(c.left[l]));
    right.push_back(series_to_json(c.right[l]));
  }
  return {{"polynomial", series_to_json(c.poly)},
          {"degree", c.degree},
          {"entry", {c.row, c.col}},
          {"left", left},
          {"right", right},
          {"verified", verify_two_sided_certificate(r, c)}};
}

}  // namespace skewps
