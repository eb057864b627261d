#include "skewps/reparam.hpp"

#include <algorithm>

#include "skewps/errors.hpp"
#include "skewps/random.hpp"

namespace skewps {
namespace {

void require_admissible_t(const Element& t, bool allow_unit_t) {
  if (allow_unit_t) return;
  if (!t.val().at_least_value(1))
    throw ValueTooLow("shift x - t needs v(t) >= 1, got v(t) = " + t.val().str());
}

std::vector<Element> lifted_coeffs(const SkewSeries& p) {
  std::vector<Element> c;
  for (const auto& e : p.coeffs()) c.push_back(e.lifted());
  return c;
}

/// out_j = Σ_{n >= j} r_n T_{n,n−j} for a triangular table T.
std::vector<Element> apply_table(const std::vector<Element>& r, const std::vector<std::vector<Element>>& rows) {
  const Ring& ring = r[0].ring();
  std::vector<Element> out(r.size(), Element::zero(ring));
  for (size_t n = 0; n < r.size(); ++n) {
    if (r[n].is_exact_zero()) continue;
    for (size_t j = 0; j <= n; ++j) out[j] = out[j] + r[n] * rows[n][n - j];
  }
  return out;
}

SkewSeries in_context(const Context& ctx, const SkewSeries& s) { return SkewSeries(ctx, s.coeffs()); }

json poly_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p) arr.push_back(element_to_json(c));
  return arr;
}

}  // namespace

BetaTable beta_coeffs(const Twist& twist, const Element& t, int n_max, bool allow_unit_t) {
  require_admissible_t(t, allow_unit_t);
  const Ring& ring = t.ring();
  const Element tl = t.lifted();
  BetaTable table{t, {{Element::one(ring)}}};
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = table.rows[n];
    std::vector<Element> row(n + 2, Element::zero(ring));
    for (int i = 0; i <= n + 1; ++i) {
      if (i <= n) row[i] = row[i] + apply_sigma(twist, prev[i]);
      if (i >= 1) row[i] = row[i] + apply_delta(twist, prev[i - 1]) - tl * prev[i - 1];
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

GammaTable gamma_coeffs(const Twist& twist, const Element& a, int n_max) {
  a.invert_unit();  // NotAUnit
  const Ring& ring = a.ring();
  const Element al = a.lifted();
  GammaTable table{a, {{Element::one(ring)}}};
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = table.rows[n];
    std::vector<Element> row(n + 2, Element::zero(ring));
    for (int i = 0; i <= n + 1; ++i) {
      if (i <= n) row[i] = row[i] + al * apply_sigma(twist, prev[i]);
      if (i >= 1) row[i] = row[i] + al * apply_delta(twist, prev[i - 1]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

/// The substitution is filtered, so an input known modulo level L (the lifted
/// representative is off by f >= L) gives an output known modulo level L.
SkewSeries settled(const Context& ctx, std::vector<Element> c, int level) {
  for (int j = 0; j < static_cast<int>(c.size()); ++j) c[j] = c[j].truncated(std::max(0, level - j));
  return SkewSeries(ctx, std::move(c));
}

}  // namespace

SkewSeries substitute_with_table(const SkewSeries& p, const std::vector<std::vector<Element>>& rows) {
  if (static_cast<int>(rows.size()) < p.cap()) throw ShapeMismatch("substitution table shorter than the cap");
  return settled(p.context(), apply_table(lifted_coeffs(p), rows), sps_precision(p));
}

SkewSeries substitute_shift(const SkewSeries& p, const Element& t) {
  const Context& ctx = p.context();
  return substitute_with_table(p, beta_coeffs(ctx->twist, t, ctx->cap - 1).rows);
}

SkewSeries substitute_scale(const SkewSeries& p, const Element& a) {
  const Context& ctx = p.context();
  return substitute_with_table(p, gamma_coeffs(ctx->twist, a, ctx->cap - 1).rows);
}

Polynomial poly_substitute_shift(const Twist& twist, const Polynomial& p, const Element& t, bool allow_unit_t) {
  if (p.empty()) return {};
  BetaTable b = beta_coeffs(twist, t, static_cast<int>(p.size()) - 1, allow_unit_t);
  return apply_table(p, b.rows);
}

Polynomial poly_substitute_scale(const Twist& twist, const Polynomial& p, const Element& a) {
  if (p.empty()) return {};
  GammaTable g = gamma_coeffs(twist, a, static_cast<int>(p.size()) - 1);
  return apply_table(p, g.rows);
}

Level poly_val(const Polynomial& p) {
  Level f = Level::infinity();
  for (size_t i = 0; i < p.size(); ++i) f = Level::min(f, p[i].val().plus(static_cast<int64_t>(i)));
  return f;
}

Polynomial poly_mul(const Twist& twist, const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  const Ring& ring = a[0].ring();
  Polynomial out(a.size() + b.size() - 1, Element::zero(ring));
  std::vector<Element> xb = b;  // x^i·b
  for (size_t i = 0; i < a.size(); ++i) {
    if (i > 0) xb = x_times(twist, xb);
    if (a[i].is_exact_zero()) continue;
    for (size_t j = 0; j < xb.size(); ++j) out[j] = out[j] + a[i] * xb[j];
  }
  return out;
}

Twist moved_twist(const Twist& twist, const Move& move) {
  Twist out = twist;
  if (move.kind == MoveKind::Shift) {
    // (x−t)r = σ(r)(x−t) + δ(r) − (tr − σ(r)t)
    out.delta = sum(twist.delta, DerivDescriptor::inner(-move.elt));
  } else {
    // (ax)r = (aσ(r)a^{-1})(ax) + aδ(r)
    out.sigma = compose(AutoDescriptor::conjugation(move.elt), twist.sigma);
    out.delta = DerivDescriptor::left_multiple(move.elt, twist.delta);
  }
  return out;
}

std::pair<Element, Element> read_off_twist(const Context& ctx, const Move& move, const Element& r) {
  const Ring& ring = ctx->ring;
  // y = y0 + y1·x
  const Element y0 = move.kind == MoveKind::Shift ? -move.elt : Element::zero(ring);
  const Element y1 = move.kind == MoveKind::Shift ? Element::one(ring) : move.elt;
  // y·r = y0·r + y1·(x·r)
  std::vector<Element> xr = x_times(ctx->twist, {r});
  const Element c0 = y0 * r + y1 * xr[0];
  const Element c1 = y1 * xr[1];
  // σ'(r)·y = σ'(r)y0 + σ'(r)y1·x
  const Element sigma_r = c1 * y1.invert_unit();
  const Element delta_r = c0 - sigma_r * y0;
  return {sigma_r, delta_r};
}

Context moved_context(const Context& ctx, const Move& move, int trials, uint64_t seed) {
  if (!same_ring(move.elt.ring(), ctx->ring)) throw DescriptorMismatch("change of variable by an element of another ring");
  if (move.kind == MoveKind::Shift) {
    if (!move.elt.val().at_least_value(1))
      throw HypothesisViolated("y = x - t needs v(t) >= 1, got v(t) = " + move.elt.val().str());
  } else {
    try {
      move.elt.invert_unit();
    } catch (const NotAUnit&) {
      throw HypothesisViolated("y = a x needs a unit a with v(a) = v(a^-1) = 0");
    }
  }
  const Twist moved = moved_twist(ctx->twist, move);
  Rng base(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    Element r = random_coefficient(ctx->ring, rng);
    auto [s_read, d_read] = read_off_twist(ctx, move, r);
    if (!congruent(s_read, apply_sigma(moved, r)) || !congruent(d_read, apply_delta(moved, r)))
      throw HypothesisViolated("induced twist disagrees with y*r read off in the old ring at r = " +
                               element_to_json(r).dump());
  }
  ContextOptions opts;
  opts.cap = ctx->cap;
  opts.trials = trials;
  opts.seed = seed;
  try {
    return make_context(ctx->ring, moved, opts);
  } catch (const NotCompatible& e) {
    throw HypothesisViolated(std::string("induced twist is not compatible: ") + e.what());
  }
}

ChangeOfVariable change_variable(const SkewSeries& s, const Move& move) {
  Context target = moved_context(s.context(), move);
  SkewSeries as_poly = in_context(target, s);
  // x = y + t = y − (−t), resp. x = a^{-1} y, evaluated inside R[[y;σ',δ']]
  SkewSeries image = move.kind == MoveKind::Shift ? substitute_shift(as_poly, -move.elt)
                                                  : substitute_scale(as_poly, move.elt.invert_unit());
  return {target, image};
}

SkewSeries change_variable_back(const Context& source, const SkewSeries& q, const Move& move) {
  SkewSeries as_poly = in_context(source, q);
  return move.kind == MoveKind::Shift ? substitute_shift(as_poly, move.elt) : substitute_scale(as_poly, move.elt);
}

CheckReport check_filtration_equality(const Context& ctx, const Move& move, int trials, uint64_t seed) {
  CheckReport rep;
  rep.property = move.kind == MoveKind::Shift ? "f_x = f_(x-t)" : "f_x = f_(ax)";
  rep.seed = seed;
  Context target = moved_context(ctx, move, 16, seed);
  const Element back_elt = move.kind == MoveKind::Shift ? -move.elt : move.elt.invert_unit();
  Rng base(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    // x -> y
    SkewSeries p = random_series(ctx, rng);
    SkewSeries in_y = move.kind == MoveKind::Shift ? substitute_shift(in_context(target, p), back_elt)
                                                   : substitute_scale(in_context(target, p), back_elt);
    SkewSeries again = change_variable_back(ctx, in_y, move);
    // y -> x
    SkewSeries q = random_series(target, rng);
    SkewSeries in_x = change_variable_back(ctx, q, move);
    ++rep.trials;
    const Level fx = sps_val(p), fy = sps_val(in_y), gy = sps_val(q), gx = sps_val(in_x);
    std::string failure;
    if (!(fx == fy)) failure = "f_x(p) != f_y(p)";
    else if (!congruent(again, p)) failure = "round trip x -> y -> x is not the identity";
    else if (!(gy == gx)) failure = "f_y(q) != f_x(q)";
    if (!failure.empty()) {
      rep.passed = false;
      rep.detail = failure;
      rep.witness = {{"p", series_to_json(p)}, {"p_in_y", series_to_json(in_y)}, {"f_x(p)", fx.str()},
                     {"f_y(p)", fy.str()},     {"q", series_to_json(q)},         {"q_in_x", series_to_json(in_x)},
                     {"f_y(q)", gy.str()},     {"f_x(q)", gx.str()}};
      return rep;
    }
  }
  return rep;
}

CheckReport check_unit_shift_counterexample(const Ring& ring, int n_max) {
  CheckReport rep;
  rep.property = "f_x = f_(x+1)";
  const Twist plain;
  const Element t = Element::from_int(ring, -1);  // y = x − t = x + 1
  json table = json::array();
  for (int n = 1; n <= n_max; ++n) {
    Polynomial y_n(n + 1, Element::zero(ring));
    y_n[n] = Element::one(ring);
    Polynomial in_x = poly_substitute_shift(plain, y_n, t, /*allow_unit_t=*/true);  // (x+1)^n
    const Level fx = poly_val(in_x), fy = poly_val(y_n);
    ++rep.trials;
    table.push_back({{"n", n}, {"f_x", fx.str()}, {"f_y", fy.str()}, {"poly_x", poly_to_json(in_x)}});
    if (rep.passed && !(fx == fy)) {
      rep.passed = false;
      rep.detail = "(x+1)^" + std::to_string(n) + ": f_x = " + fx.str() + " but f_y = " + fy.str();
    }
  }
  rep.witness = table;
  return rep;
}

}  // namespace skewps
