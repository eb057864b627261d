#include "skewps/untwist.hpp"

#include <algorithm>
#include <set>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

bool same_value(const Element& a, const Element& b) { return congruent(a, b); }

/// Compares two twists pointwise on random samples; returns the first r where
/// they disagree (as JSON) or null.
json compare_twists(const Ring& ring, const Twist& a, const Twist& b, int trials, uint64_t seed) {
  Rng base(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    Element r = random_coefficient(ring, rng);
    if (!same_value(apply_sigma(a, r), apply_sigma(b, r)) || !same_value(apply_delta(a, r), apply_delta(b, r)))
      return {{"r", element_to_json(r)}};
  }
  return nullptr;
}

/// Compares a twist with the values read off from y·r in the old ring.
json compare_read_off(const Context& old_ctx, const Move& move, const Twist& claimed, int trials, uint64_t seed) {
  Rng base(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    Element r = random_coefficient(old_ctx->ring, rng);
    auto [s, d] = read_off_twist(old_ctx, move, r);
    if (!same_value(s, apply_sigma(claimed, r)) || !same_value(d, apply_delta(claimed, r)))
      return {{"r", element_to_json(r)},
              {"sigma_read_off", element_to_json(s)},
              {"delta_read_off", element_to_json(d)}};
  }
  return nullptr;
}

CheckReport report_from(const std::string& property, const json& witness, int trials, uint64_t seed) {
  CheckReport rep;
  rep.property = property;
  rep.trials = trials;
  rep.seed = seed;
  rep.passed = witness.is_null();
  rep.witness = witness;
  return rep;
}

const Ring& leaf_of(const Ring& o) {
  if (o->kind != RingKind::Matrix || !o->inner->is_leaf())
    throw ShapeMismatch("expected a matrix ring over Zp or FqSeries, got " + o->canonical);
  return o->inner;
}

Context fixed_context(const Ring& ring, const Twist& twist, int cap, int trials, uint64_t seed) {
  ContextOptions opts;
  opts.cap = cap;
  opts.trials = trials;
  opts.seed = seed;
  return make_context(ring, twist, opts);
}

}  // namespace

// ------------------------------------------------------------------ orbits

std::pair<SkewSeries, SkewSeries> OrbitSplit::apply(const SkewSeries& s) const {
  if (trivial) return {s, SkewSeries()};
  std::vector<Element> cb, cc;
  for (const auto& e : s.coeffs()) {
    cb.push_back(project_factors(b->ring, b_factors, e));
    cc.push_back(project_factors(c->ring, c_factors, e));
  }
  return {SkewSeries(b, std::move(cb)), SkewSeries(c, std::move(cc))};
}

SkewSeries OrbitSplit::unapply(const SkewSeries& sb, const SkewSeries& sc) const {
  if (trivial) return sb;
  std::vector<Element> out;
  for (int i = 0; i < whole->cap; ++i)
    out.push_back(embed_factors(whole->ring, b_factors, sb.coeff(i)) +
                  embed_factors(whole->ring, c_factors, sc.coeff(i)));
  return SkewSeries(whole, std::move(out));
}

OrbitSplit split_orbits(const Context& ctx, std::vector<int> factors, int trials, uint64_t seed) {
  const Ring& ring = ctx->ring;
  if (ring->kind != RingKind::Product) throw ShapeMismatch("orbit splitting needs a product ring");
  const int m = static_cast<int>(ring->factors.size());
  std::set<int> chosen(factors.begin(), factors.end());
  for (int i : chosen)
    if (i < 0 || i >= m) throw ShapeMismatch("factor index " + std::to_string(i) + " out of range");
  OrbitSplit out;
  out.whole = ctx;
  if (chosen.empty() || static_cast<int>(chosen.size()) == m) {
    out.trivial = true;
    out.b = ctx;
    for (int i = 0; i < m; ++i) out.b_factors.push_back(i);
    return out;
  }
  for (int i = 0; i < m; ++i) (chosen.count(i) ? out.b_factors : out.c_factors).push_back(i);

  // σ(A_i) = A_ρ(i): the chosen set must be a union of orbits, and δ must not
  // leak across; checked on the idempotent and on samples supported on each side.
  auto leaks = [&](const std::vector<int>& side, const std::vector<int>& other, const Element& r) {
    const Element s = apply_sigma(ctx->twist, r), d = apply_delta(ctx->twist, r);
    for (int j : other)
      if (!s.parts()[j].is_zero() || !d.parts()[j].is_zero()) return true;
    (void)side;
    return false;
  };
  Rng base(seed);
  for (int pass = 0; pass < 2; ++pass) {
    const auto& side = pass == 0 ? out.b_factors : out.c_factors;
    const auto& other = pass == 0 ? out.c_factors : out.b_factors;
    Ring sub = restricted_ring(ring, side);
    std::vector<Element> probes{Element::one(sub)};
    Rng rng = base.child(static_cast<uint64_t>(pass));
    for (int i = 0; i < trials; ++i) probes.push_back(random_coefficient(sub, rng));
    for (const auto& p : probes) {
      Element r = embed_factors(ring, side, p);
      if (leaks(side, other, r))
        throw OrbitNotClosed("sigma/delta move factors " + json(side).dump() + " into " + json(other).dump() +
                             " at r = " + element_to_json(r).dump());
    }
  }
  auto restricted = [&](const std::vector<int>& side) {
    Twist t;
    t.sigma = AutoDescriptor::restrict_to(ring, side, ctx->twist.sigma);
    t.delta = DerivDescriptor::restrict_to(ring, side, ctx->twist.sigma, ctx->twist.delta);
    return fixed_context(restricted_ring(ring, side), t, ctx->cap, trials, seed);
  };
  out.b = restricted(out.b_factors);
  out.c = restricted(out.c_factors);
  return out;
}

// ------------------------------------------------------------------ witnesses

NormalizedSigma normalize_inner(const Ring& o, const FactoredSigma& f, int trials, uint64_t seed) {
  leaf_of(o);
  const Element& a = f.inner;
  if (!same_ring(a.ring(), o)) throw DescriptorMismatch("inner witness lives in another ring");
  const Level v = a.val();
  if (v.is_infinite() || !v.is_exact()) throw NotInvertible("inner witness a is zero at precision");
  NormalizedSigma out;
  out.k = static_cast<int>(v.value());
  // the witness literal is taken as an exact representative
  out.b = a.divided_by_uniformiser_power(out.k).lifted();
  try {
    out.b.invert_unit();
  } catch (const NotAUnit&) {
    throw NotInvertible("a = pi^" + std::to_string(out.k) + " * b with b not a unit: " + element_to_json(out.b).dump());
  }
  out.tau = f.tau;  // c_Π is trivial on the commutative D, so τ' = τ
  // c_b(M(τ')(r))·a = a·M(τ)(r), i.e. c_b∘M(τ') = c_a∘M(τ) without inverting a in Q
  const AutoDescriptor lhs = compose(AutoDescriptor::conjugation(out.b), AutoDescriptor::matrix_lift(out.tau));
  const AutoDescriptor mt = AutoDescriptor::matrix_lift(f.tau);
  json witness = nullptr;
  Rng base(seed);
  for (int i = 0; i < trials && witness.is_null(); ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    Element r = random_coefficient(o, rng);
    if (!congruent(apply_sigma(lhs, r) * a, a * apply_sigma(mt, r))) witness = {{"r", element_to_json(r)}};
  }
  out.check = report_from("c_b∘M(tau') = c_a∘M(tau)", witness, trials, seed);
  if (!out.check.passed) throw NotInvertible("normalized automorphism disagrees with c_a∘M(tau): " + witness.dump());
  return out;
}

UntwistedDelta untwist_delta(const Ring& o, const FactoredDelta& f, const AutoDescriptor& tau, int trials,
                             uint64_t seed) {
  const Ring& d = leaf_of(o);
  const Element& u = f.u;
  if (!same_ring(u.ring(), o)) throw DescriptorMismatch("inner derivation witness lives in another ring");
  const int n = o->n;
  UntwistedDelta out;
  out.u11 = u.entry(0, 0).lifted();
  // u ≡ u11·1 mod F_1 O is what compatibility forces; verify it
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element e = i == j ? u.entry(i, j) - out.u11 : u.entry(i, j);
      if (!e.val().at_least_value(1))
        throw NotCompatible("u is not congruent to u11*I modulo F_1: entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") breaks it");
    }
  const AutoDescriptor mt = AutoDescriptor::matrix_lift(tau);
  Twist original{mt, sum(DerivDescriptor::matrix_lift(f.theta, tau), DerivDescriptor::inner_with(u, mt))};
  if (structural_gain(original.delta) < 1) {
    CheckReport c = check_compatible(o, original, trials, seed);
    if (!c.passed) throw NotCompatible("M(theta) + d(u) is not compatible: " + c.witness.dump());
  }
  out.u_prime = u - Element::scalar_matrix(o, out.u11);
  out.theta_prime = sum(f.theta, DerivDescriptor::inner_with(out.u11, tau));
  Twist rebuilt{mt, sum(DerivDescriptor::matrix_lift(out.theta_prime, tau), DerivDescriptor::inner_with(out.u_prime, mt))};
  out.check = report_from("M(theta') + d(u') = M(theta) + d(u)", compare_twists(o, original, rebuilt, trials, seed),
                          trials, seed);
  if (!out.check.passed) throw NotCompatible("untwisted derivation does not reconstruct delta");
  (void)d;
  return out;
}

Twist presented_twist(const Element& b, const AutoDescriptor& tau, const FactoredDelta& f) {
  const AutoDescriptor mt = AutoDescriptor::matrix_lift(tau);
  Twist t;
  t.sigma = compose(AutoDescriptor::conjugation(b), mt);
  t.delta = DerivDescriptor::left_multiple(
      b, sum(DerivDescriptor::matrix_lift(f.theta, tau), DerivDescriptor::inner_with(f.u, mt)));
  return t;
}

// ------------------------------------------------------------------ matrices of series

MatrixSeries MatrixSeries::zero(const Context& ctx, int n) {
  return {ctx, n, std::vector<SkewSeries>(n * n, SkewSeries::zero(ctx))};
}

MatrixSeries MatrixSeries::identity(const Context& ctx, int n) {
  MatrixSeries m = zero(ctx, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SkewSeries::one(ctx);
  return m;
}

MatrixSeries MatrixSeries::unit(const Context& ctx, int n, int i, int j, const SkewSeries& s) {
  MatrixSeries m = zero(ctx, n);
  m.at(i, j) = s;
  return m;
}

MatrixSeries MatrixSeries::operator+(const MatrixSeries& o) const {
  if (n != o.n) throw ShapeMismatch("matrix size mismatch");
  MatrixSeries r = *this;
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] + o.entries[i];
  return r;
}

MatrixSeries MatrixSeries::operator*(const MatrixSeries& o) const {
  if (n != o.n) throw ShapeMismatch("matrix size mismatch");
  MatrixSeries r = zero(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r.at(i, k) = r.at(i, k) + at(i, j) * o.at(j, k);
  return r;
}

MatrixSeries MatrixSeries::scaled(const SkewSeries& s) const {
  MatrixSeries r = *this;
  for (auto& e : r.entries) e = s * e;
  return r;
}

Level matrix_series_val(const MatrixSeries& m) {
  Level f = Level::infinity();
  for (const auto& e : m.entries) f = Level::min(f, sps_val(e));
  return f;
}

bool congruent(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.n != b.n) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (!congruent(a.entries[i], b.entries[i])) return false;
  return true;
}

json matrix_series_to_json(const MatrixSeries& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(series_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

MatrixSeries matrix_series_from_json(const Context& ctx, int n, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("matrix of series needs " + std::to_string(n) + " rows");
  MatrixSeries m = MatrixSeries::zero(ctx, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw ParseError("matrix of series row needs " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) m.at(r, c) = series_from_json(ctx, j[r][c]);
  }
  return m;
}

// ------------------------------------------------------- untwisting isomorphism

WitnessedContext witnessed_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("witnessed context must be an object");
  auto need = [&](const json& obj, const char* key) -> const json& {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("witnessed context: missing \"") + key + "\"");
    return obj.at(key);
  };
  WitnessedContext w;
  w.ring = ring_from_json(need(j, "ring"));
  const Ring& d = leaf_of(w.ring);
  const json& sw = need(j, "sigma_witness");
  w.sigma.inner = element_from_json(w.ring, need(sw, "inner"));
  w.sigma.tau = auto_from_json(d, sw.value("tau", json::array()));
  const json& dw = need(j, "delta_witness");
  w.delta.theta = deriv_from_json(d, dw.value("theta", json::array()));
  w.delta.u = dw.contains("u") ? element_from_json(w.ring, dw.at("u")) : Element::zero(w.ring);
  if (j.contains("declared")) w.declared = twist_from_json(w.ring, j.at("declared"));
  if (j.contains("cap")) w.cap = j.at("cap").get<int>();
  return w;
}

json witnessed_to_json(const WitnessedContext& w) {
  json j = {{"ring", ring_to_json(w.ring)},
            {"sigma_witness", {{"inner", element_to_json(w.sigma.inner)}, {"tau", auto_to_json(w.sigma.tau)}}},
            {"delta_witness", {{"theta", deriv_to_json(w.delta.theta)}, {"u", element_to_json(w.delta.u)}}}};
  if (w.declared) j["declared"] = twist_to_json(*w.declared);
  if (w.cap >= 0) j["cap"] = w.cap;
  return j;
}

json CertificateStage::to_json() const {
  json j = {{"stage", stage}, {"check", check.to_json()}};
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

UntwistingIsomorphism UntwistingIsomorphism::build(const WitnessedContext& w, int trials, uint64_t seed) {
  UntwistingIsomorphism m;
  const Ring& o = w.ring;
  const Ring& d = leaf_of(o);
  m.n_ = o->n;
  const int cap = w.cap < 0 ? o->level_cap() : w.cap;
  Rng base(seed);
  auto stage_seed = [&](const char* label) { return base.child(label).seed(); };

  // 1. a = π^k b
  m.norm_ = normalize_inner(o, w.sigma, trials, stage_seed("normalize_inner"));
  m.b_inv_ = m.norm_.b.invert_unit();
  m.chain_.push_back({"normalize_inner", m.norm_.check,
                      {{"b", element_to_json(m.norm_.b)}, {"k", m.norm_.k}, {"tau_prime", auto_to_json(m.norm_.tau)}}});

  // presented ring O[[x;σ,δ]]
  const Twist presented = presented_twist(m.norm_.b, m.norm_.tau, w.delta);
  if (w.declared) {
    const uint64_t s = stage_seed("declared");
    json bad = compare_twists(o, *w.declared, presented, trials, s);
    m.chain_.push_back({"declared_twist", report_from("declared (sigma,delta) = witnessed", bad, trials, s), nullptr});
    if (!bad.is_null()) throw HypothesisViolated("declared twist disagrees with its witnesses at " + bad.dump());
  }
  {
    const uint64_t s = stage_seed("source");
    m.ctx0_ = fixed_context(o, presented, cap, trials, s);
    CheckReport c = check_compatible(o, presented, trials, s);
    c.structural = m.ctx0_->certified;
    m.chain_.push_back({"source_compatible", c, {{"structural_gain", m.ctx0_->gain}}});
  }

  // 2. x' = b^{-1} x: (M(τ), M(θ) + d(u)), read off inside O[[x;σ,δ]]
  const AutoDescriptor mt = AutoDescriptor::matrix_lift(m.norm_.tau);
  const Twist scaled{mt, sum(DerivDescriptor::matrix_lift(w.delta.theta, m.norm_.tau),
                             DerivDescriptor::inner_with(w.delta.u, mt))};
  {
    const uint64_t s = stage_seed("scale");
    json bad = compare_read_off(m.ctx0_, Move::scale(m.b_inv_), scaled, trials, s);
    m.chain_.push_back({"scale_by_b_inverse", report_from("x' r = M(tau)(r) x' + (M(theta)+d(u))(r)", bad, trials, s),
                        {{"b_inverse", element_to_json(m.b_inv_)}}});
    if (!bad.is_null()) throw HypothesisViolated("scaled twist disagrees with the read-off at " + bad.dump());
    m.ctx1_ = fixed_context(o, scaled, cap, trials, s);
  }

  // 3. u' = u − u11·1, θ' = θ + d_{τ,u11}
  m.untw_ = untwist_delta(o, w.delta, m.norm_.tau, trials, stage_seed("untwist_delta"));
  m.chain_.push_back({"untwist_delta", m.untw_.check,
                      {{"u11", element_to_json(m.untw_.u11)},
                       {"u_prime", element_to_json(m.untw_.u_prime)},
                       {"val_u_prime", level_to_json(m.untw_.u_prime.val())},
                       {"theta_prime", deriv_to_json(m.untw_.theta_prime)}}});

  // 4. x'' = x' − u': (M(τ), M(θ'))
  const Twist shifted{mt, DerivDescriptor::matrix_lift(m.untw_.theta_prime, m.norm_.tau)};
  {
    const uint64_t s = stage_seed("shift");
    json bad = compare_read_off(m.ctx1_, Move::shift(m.untw_.u_prime), shifted, trials, s);
    m.chain_.push_back({"shift_by_u_prime", report_from("x'' r = M(tau)(r) x'' + M(theta')(r)", bad, trials, s), nullptr});
    if (!bad.is_null()) throw HypothesisViolated("shifted twist disagrees with the read-off at " + bad.dump());
    m.ctx2_ = fixed_context(o, shifted, cap, trials, s);
  }

  // 5. Σ q_i x''^i ↦ (Σ (q_i)_{jk} y^i)_{jk}
  m.dctx_ = fixed_context(d, Twist{m.norm_.tau, m.untw_.theta_prime}, cap, trials, stage_seed("target"));
  m.apply_scale_ = gamma_coeffs(m.ctx1_->twist, m.norm_.b, cap - 1).rows;
  m.apply_shift_ = beta_coeffs(m.ctx2_->twist, -m.untw_.u_prime, cap - 1).rows;
  m.unapply_shift_ = beta_coeffs(m.ctx1_->twist, m.untw_.u_prime, cap - 1).rows;
  m.unapply_scale_ = gamma_coeffs(m.ctx0_->twist, m.b_inv_, cap - 1).rows;
  {
    const uint64_t s = stage_seed("transpose");
    json bad = nullptr;
    Rng rng(s);
    for (int i = 0; i < std::min(trials, 16) && bad.is_null(); ++i) {
      SkewSeries x = random_series(m.ctx0_, rng);
      if (!congruent(m.unapply(m.apply(x)), x)) bad = {{"s", series_to_json(x)}};
    }
    m.chain_.push_back({"transpose", report_from("phi^-1(phi(s)) = s", bad, std::min(trials, 16), s),
                        {{"target", context_to_json(m.dctx_)}}});
    if (!bad.is_null()) throw HypothesisViolated("isomorphism round trip failed at " + bad.dump());
  }
  return m;
}

MatrixSeries UntwistingIsomorphism::apply(const SkewSeries& s) const {
  if (s.context()->key != ctx0_->key) throw TwistMismatch("series is not in the source ring of the isomorphism");
  // x = b x', then x' = x'' + u'
  SkewSeries s1 = substitute_with_table(SkewSeries(ctx1_, s.coeffs()), apply_scale_);
  SkewSeries s2 = substitute_with_table(SkewSeries(ctx2_, s1.coeffs()), apply_shift_);
  MatrixSeries out = MatrixSeries::zero(dctx_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      std::vector<Element> c;
      for (const auto& q : s2.coeffs()) c.push_back(q.entry(j, k));
      out.at(j, k) = SkewSeries(dctx_, std::move(c));
    }
  return out;
}

SkewSeries UntwistingIsomorphism::unapply(const MatrixSeries& m) const {
  if (m.n != n_ || m.ctx->key != dctx_->key) throw TwistMismatch("matrix is not in the target ring of the isomorphism");
  std::vector<Element> c;
  for (int i = 0; i < ctx2_->cap; ++i) {
    std::vector<Element> entries;
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) entries.push_back(m.at(j, k).coeff(i));
    c.push_back(Element::matrix(ctx2_->ring, std::move(entries)));
  }
  // x'' = x' − u', then x' = b^{-1} x
  SkewSeries s1 = substitute_with_table(SkewSeries(ctx1_, c), unapply_shift_);
  return substitute_with_table(SkewSeries(ctx0_, s1.coeffs()), unapply_scale_);
}

MatrixSeries UntwistingIsomorphism::iota(const Element& r) const {
  MatrixSeries out = MatrixSeries::zero(dctx_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) out.at(j, k) = SkewSeries::constant(dctx_, r.entry(j, k));
  return out;
}

SkewSeries UntwistingIsomorphism::new_variable_in_source() const { return SkewSeries(ctx0_, {-untw_.u_prime, b_inv_}); }

json UntwistingIsomorphism::certificate_chain() const {
  json arr = json::array();
  for (const auto& s : chain_) arr.push_back(s.to_json());
  return arr;
}

// ------------------------------------------------------------------ random contexts

namespace {

struct LeafTwist {
  Twist twist;
  bool trivial_mod_pi = true;  // τ(r) ≡ r mod F_{v(r)+1}
};

LeafTwist random_leaf_twist_impl(const Ring& base, Rng& rng) {
  LeafTwist out;
  if (base->kind == RingKind::Zp) return out;  // Z_p has no nontrivial automorphisms or derivations here
  if (base->kind != RingKind::FqSeries) throw ShapeMismatch("leaf twist needs Zp or FqSeries");
  const int degree = base->field->degree();
  const Element pi = uniformiser(base);
  const int64_t e = degree > 1 ? static_cast<int64_t>(rng.below(degree)) : 0;
  const bool scale = rng.coin();
  if (e != 0) out.twist.sigma = AutoDescriptor::frobenius(e);
  if (scale) {
    // u ≡ 1 mod π keeps the scaling trivial modulo π
    Element u = Element::one(base) + random_val_at_least(base, 1, rng);
    out.twist.sigma = compose(out.twist.sigma, AutoDescriptor::scale_uniformiser(u));
  }
  out.trivial_mod_pi = e == 0;
  switch (rng.below(3)) {
    case 0:
      break;
    case 1: {
      // t(r − τ(r)); v(t) = 0 is allowed when τ is trivial mod π
      Element t = out.trivial_mod_pi ? random_coefficient(base, rng) : random_val_at_least(base, 1, rng);
      if (!t.is_zero()) out.twist.delta = DerivDescriptor::inner_tau_times(t.lifted());
      break;
    }
    default:
      if (out.twist.sigma.is_identity()) {
        // π^j·d/dπ with j >= 2 is a compatible derivation that is not inner
        const int j = rng.uniform_int(2, 3);
        out.twist.delta = DerivDescriptor::left_multiple(Element::one(base).times_uniformiser_power(j).lifted(),
                                                         DerivDescriptor::pi_derivative());
      } else {
        out.twist.delta = DerivDescriptor::inner_tau_times(pi);
      }
  }
  return out;
}

}  // namespace

Twist random_leaf_twist(const Ring& base, Rng& rng) { return random_leaf_twist_impl(base, rng).twist; }

WitnessedContext random_witnessed_context(const Ring& base, int n, int cap, Rng& rng) {
  WitnessedContext w;
  w.ring = RingDescriptor::matrix(n, base);
  w.cap = cap;
  LeafTwist lt = random_leaf_twist_impl(base, rng);
  w.sigma.tau = lt.twist.sigma;
  w.delta.theta = lt.twist.delta;
  const int k = rng.uniform_int(0, 2);
  w.sigma.inner = random_unit(w.ring, rng).times_uniformiser_power(k).lifted();
  const Element u11 = lt.trivial_mod_pi ? random_coefficient(base, rng) : random_val_at_least(base, 1, rng);
  w.delta.u = (Element::scalar_matrix(w.ring, u11) + random_val_at_least(w.ring, 1, rng)).lifted();
  return w;
}

}  // namespace skewps
