#include "skewps/twist.hpp"

#include <algorithm>

#include "skewps/errors.hpp"
#include "skewps/random.hpp"

namespace skewps {
namespace {

using AK = AutoPrimitive::Kind;
using DK = DerivPrimitive::Kind;

Element scale_apply(const Element& u, const Element& r) {
  if (r.kind() != RingKind::FqSeries || !same_ring(u.ring(), r.ring()))
    throw ShapeMismatch("ScaleUniformiser applies to FqSeries elements of its own ring");
  if (r.is_exact_zero()) return r;
  const Ring& ring = r.ring();
  const Element upi = u.lifted() * uniformiser(ring);
  Element acc = Element::zero(ring);
  Element power = Element::one(ring);
  const auto& c = r.fq_coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      std::vector<uint32_t> k(1, c[i]);
      acc = acc + Element::fq_series(ring, std::move(k)) * power;
    }
    power = power * upi;
  }
  return acc.lifted().truncated(r.leaf_precision());
}

Element apply_primitive(const AutoPrimitive& p, const Element& r) {
  switch (p.kind) {
    case AK::Frobenius: {
      if (r.kind() != RingKind::FqSeries) throw ShapeMismatch("Frobenius applies to FqSeries elements");
      if (r.is_exact_zero()) return r;
      std::vector<uint32_t> c = r.fq_coeffs();
      for (auto& x : c) x = r.ring()->field->frobenius(x, p.exponent);
      return Element::fq_series(r.ring(), std::move(c), r.leaf_precision());
    }
    case AK::ScaleUniformiser:
      return scale_apply(p.elt, r);
    case AK::Conjugation:
      if (!same_ring(p.elt.ring(), r.ring())) throw ShapeMismatch("conjugation by an element of another ring");
      return p.elt * r * p.elt_inv;
    case AK::MatrixLift: {
      if (r.kind() != RingKind::Matrix) throw ShapeMismatch("MatrixLift applies to matrix elements");
      std::vector<Element> e;
      for (const auto& x : r.parts()) e.push_back(apply_sigma(p.inner[0], x));
      return Element::matrix(r.ring(), std::move(e));
    }
    case AK::FactorPermutation: {
      if (r.kind() != RingKind::Product || p.indices.size() != r.parts().size())
        throw ShapeMismatch("factor permutation does not match the product");
      std::vector<Element> out(r.parts().size());
      for (size_t i = 0; i < p.indices.size(); ++i) {
        const int j = p.indices[i];
        if (!same_ring(r.ring()->factors[i], r.ring()->factors[j]))
          throw ShapeMismatch("factor permutation moves between different factor rings");
        out[j] = r.parts()[i];
      }
      return Element::product(r.ring(), std::move(out));
    }
    case AK::Factorwise: {
      if (r.kind() != RingKind::Product || p.inner.size() != r.parts().size())
        throw ShapeMismatch("factorwise automorphism does not match the product");
      std::vector<Element> out;
      for (size_t i = 0; i < p.inner.size(); ++i) out.push_back(apply_sigma(p.inner[i], r.parts()[i]));
      return Element::product(r.ring(), std::move(out));
    }
    case AK::Restrict: {
      Ring sub = restricted_ring(p.parent, p.indices);
      if (!same_ring(sub, r.ring())) throw ShapeMismatch("restricted automorphism applied outside its factor ring");
      return project_factors(sub, p.indices, apply_sigma(p.inner[0], embed_factors(p.parent, p.indices, r)));
    }
  }
  throw ShapeMismatch("unknown automorphism primitive");
}

AutoPrimitive invert_primitive(const AutoPrimitive& p) {
  AutoPrimitive q = p;
  switch (p.kind) {
    case AK::Frobenius:
      q.exponent = -p.exponent;
      return q;
    case AK::ScaleUniformiser: {
      // w with S_w(u)·w = 1, so that S_w(S_u(π)) = π; one π-adic digit per pass
      const Ring& ring = p.elt.ring();
      Element w = Element::fq_series(ring, {ring->field->inv(p.elt.fq_coeffs()[0])}).lifted();
      for (int pass = 0; pass <= ring->cap; ++pass) w = scale_apply(w, p.elt).invert_unit();
      q.elt = w;
      return q;
    }
    case AK::Conjugation:
      std::swap(q.elt, q.elt_inv);
      return q;
    case AK::MatrixLift:
      q.inner[0] = inverse(p.inner[0]);
      return q;
    case AK::FactorPermutation:
      for (size_t i = 0; i < p.indices.size(); ++i) q.indices[p.indices[i]] = static_cast<int>(i);
      return q;
    case AK::Factorwise:
      for (auto& s : q.inner) s = inverse(s);
      return q;
    case AK::Restrict:
      q.inner[0] = inverse(p.inner[0]);
      return q;
  }
  return q;
}

AutoDescriptor infer_tau(const AutoDescriptor& ambient) {
  if (ambient.is_identity()) return ambient;
  if (ambient.seq.size() == 1 && ambient.seq[0].kind == AK::MatrixLift) return ambient.seq[0].inner[0];
  throw ShapeMismatch("MatrixLift derivation needs an explicit tau when the ambient automorphism is not M_n(tau)");
}

Element apply_term(const DerivPrimitive& p, const AutoDescriptor& ambient, const Element& r) {
  switch (p.kind) {
    case DK::Zero:
      return Element::zero(r.ring());
    case DK::Inner: {
      const AutoDescriptor& s = p.sigma ? *p.sigma : ambient;
      return p.elt * r - apply_sigma(s, r) * p.elt;
    }
    case DK::InnerTauTimes: {
      if (!r.ring()->is_commutative()) throw ShapeMismatch("InnerTauTimes needs a commutative ring");
      const AutoDescriptor& s = p.sigma ? *p.sigma : ambient;
      return p.elt * (r - apply_sigma(s, r));
    }
    case DK::MatrixLift: {
      if (r.kind() != RingKind::Matrix) throw ShapeMismatch("MatrixLift derivation applies to matrix elements");
      const AutoDescriptor tau = p.sigma ? *p.sigma : infer_tau(ambient);
      std::vector<Element> e;
      for (const auto& x : r.parts()) e.push_back(apply_delta(p.inner[0], tau, x));
      return Element::matrix(r.ring(), std::move(e));
    }
    case DK::LeftMultiple: {
      if (p.sigma) return p.elt * apply_delta(p.inner[0], compose(*p.sigma, ambient), r);
      if (!r.ring()->is_commutative())
        throw ShapeMismatch("left multiple by a non-unit needs a commutative ring");
      return p.elt * apply_delta(p.inner[0], ambient, r);
    }
    case DK::PiDerivative: {
      if (r.kind() != RingKind::FqSeries) throw ShapeMismatch("d/dpi applies to FqSeries elements");
      if (r.is_exact_zero()) return r;
      const auto& f = *r.ring()->field;
      const auto& c = r.fq_coeffs();
      const int prec = std::max(0, r.leaf_precision() - 1);
      std::vector<uint32_t> out(prec, 0);
      for (int i = 0; i < prec; ++i) out[i] = f.mul(f.from_int(i + 1), c[i + 1]);
      return Element::fq_series(r.ring(), std::move(out), prec);
    }
    case DK::Restrict: {
      Ring sub = restricted_ring(p.parent, p.indices);
      if (!same_ring(sub, r.ring())) throw ShapeMismatch("restricted derivation applied outside its factor ring");
      return project_factors(sub, p.indices, apply_delta(p.inner[0], *p.sigma, embed_factors(p.parent, p.indices, r)));
    }
  }
  throw ShapeMismatch("unknown derivation primitive");
}

}  // namespace

// ------------------------------------------------------------------ factories

AutoDescriptor AutoDescriptor::frobenius(int64_t e) {
  AutoPrimitive p;
  p.kind = AK::Frobenius;
  p.exponent = e;
  return {{p}};
}

AutoDescriptor AutoDescriptor::scale_uniformiser(const Element& u) {
  if (u.kind() != RingKind::FqSeries) throw ShapeMismatch("ScaleUniformiser needs an FqSeries unit");
  u.invert_unit();  // NotAUnit if not a unit
  AutoPrimitive p;
  p.kind = AK::ScaleUniformiser;
  p.elt = u;
  return {{p}};
}

AutoDescriptor AutoDescriptor::conjugation(const Element& a) {
  AutoPrimitive p;
  p.kind = AK::Conjugation;
  p.elt = a;
  p.elt_inv = a.invert_unit();
  return {{p}};
}

AutoDescriptor AutoDescriptor::matrix_lift(AutoDescriptor inner) {
  AutoPrimitive p;
  p.kind = AK::MatrixLift;
  p.inner.push_back(std::move(inner));
  return {{p}};
}

AutoDescriptor AutoDescriptor::factor_permutation(std::vector<int> perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw ParseError("factor permutation is not a permutation");
  AutoPrimitive p;
  p.kind = AK::FactorPermutation;
  p.indices = std::move(perm);
  return {{p}};
}

AutoDescriptor AutoDescriptor::factorwise(std::vector<AutoDescriptor> per_factor) {
  AutoPrimitive p;
  p.kind = AK::Factorwise;
  p.inner = std::move(per_factor);
  return {{p}};
}

AutoDescriptor AutoDescriptor::restrict_to(const Ring& parent, std::vector<int> factors, AutoDescriptor parent_sigma) {
  restricted_ring(parent, factors);
  AutoPrimitive p;
  p.kind = AK::Restrict;
  p.parent = parent;
  p.indices = std::move(factors);
  p.inner.push_back(std::move(parent_sigma));
  return {{p}};
}

AutoDescriptor compose(const AutoDescriptor& a, const AutoDescriptor& b) {
  AutoDescriptor out = a;
  out.seq.insert(out.seq.end(), b.seq.begin(), b.seq.end());
  return out;
}

AutoDescriptor inverse(const AutoDescriptor& s) {
  AutoDescriptor out;
  for (auto it = s.seq.rbegin(); it != s.seq.rend(); ++it) out.seq.push_back(invert_primitive(*it));
  return out;
}

DerivDescriptor DerivDescriptor::inner(const Element& t) {
  DerivPrimitive p;
  p.kind = DK::Inner;
  p.elt = t;
  return {{p}};
}

DerivDescriptor DerivDescriptor::inner_with(const Element& t, AutoDescriptor sigma) {
  DerivPrimitive p;
  p.kind = DK::Inner;
  p.elt = t;
  p.sigma = std::move(sigma);
  return {{p}};
}

DerivDescriptor DerivDescriptor::inner_tau_times(const Element& t) {
  if (!t.ring()->is_commutative()) throw ShapeMismatch("InnerTauTimes needs a commutative ring");
  DerivPrimitive p;
  p.kind = DK::InnerTauTimes;
  p.elt = t;
  return {{p}};
}

DerivDescriptor DerivDescriptor::matrix_lift(DerivDescriptor inner, std::optional<AutoDescriptor> tau) {
  DerivPrimitive p;
  p.kind = DK::MatrixLift;
  p.inner.push_back(std::move(inner));
  p.sigma = std::move(tau);
  return {{p}};
}

DerivDescriptor DerivDescriptor::left_multiple(const Element& a, DerivDescriptor inner) {
  DerivPrimitive p;
  p.kind = DK::LeftMultiple;
  p.elt = a;
  p.inner.push_back(std::move(inner));
  try {
    p.sigma = AutoDescriptor::conjugation(a.invert_unit());
  } catch (const NotAUnit&) {
    if (!a.ring()->is_commutative())
      throw ShapeMismatch("left multiple by a non-unit needs a commutative ring");
  }
  return {{p}};
}

DerivDescriptor DerivDescriptor::pi_derivative() { DerivPrimitive p;
  p.kind = DK::PiDerivative;
  return {{p}}; }

DerivDescriptor DerivDescriptor::restrict_to(const Ring& parent, std::vector<int> factors, AutoDescriptor parent_sigma,
                                             DerivDescriptor parent_delta) {
  restricted_ring(parent, factors);
  DerivPrimitive p;
  p.kind = DK::Restrict;
  p.parent = parent;
  p.indices = std::move(factors);
  p.sigma = std::move(parent_sigma);
  p.inner.push_back(std::move(parent_delta));
  return {{p}};
}

DerivDescriptor sum(const DerivDescriptor& a, const DerivDescriptor& b) {
  DerivDescriptor out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

// ------------------------------------------------------------------ evaluation

Element apply_sigma(const AutoDescriptor& s, const Element& r) {
  Element out = r;
  for (auto it = s.seq.rbegin(); it != s.seq.rend(); ++it) out = apply_primitive(*it, out);
  return out;
}

Element apply_delta(const DerivDescriptor& d, const AutoDescriptor& ambient, const Element& r) {
  Element acc = Element::zero(r.ring());
  for (const auto& term : d.terms) acc = acc + apply_term(term, ambient, r);
  return acc;
}

int structural_gain(const DerivDescriptor& d) {
  int gain = kInfiniteGain;
  for (const auto& t : d.terms) {
    int g = kInfiniteGain;
    switch (t.kind) {
      case DK::Zero:
        break;
      case DK::Inner:
      case DK::InnerTauTimes: {
        Level v = t.elt.val();
        g = v.is_infinite() ? kInfiniteGain : static_cast<int>(std::min<int64_t>(v.value(), kInfiniteGain));
        break;
      }
      case DK::MatrixLift:
      case DK::Restrict:
        g = structural_gain(t.inner[0]);
        break;
      case DK::LeftMultiple: {
        Level v = t.elt.val();
        int inner = structural_gain(t.inner[0]);
        g = (v.is_infinite() || inner >= kInfiniteGain)
                ? kInfiniteGain
                : static_cast<int>(std::min<int64_t>(inner + v.value(), kInfiniteGain));
        break;
      }
      case DK::PiDerivative:
        g = -1;
        break;
    }
    gain = std::min(gain, g);
  }
  return gain;
}

// ------------------------------------------------------------------ checkers

json CheckReport::to_json() const {
  json j = {{"property", property}, {"passed", passed}, {"trials", trials},
            {"seed", seed},         {"structural", structural}};
  if (!passed) j["witness"] = witness;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

CheckReport check_leibniz(const Ring& ring, const Twist& twist, int trials, uint64_t seed) {
  CheckReport rep;
  rep.property = "leibniz";
  rep.seed = seed;
  Rng base(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    Element r = rng.coin() ? random_stratified(ring, rng) : random_element(ring, rng);
    Element s = rng.coin() ? random_stratified(ring, rng) : random_element(ring, rng);
    Element lhs = apply_delta(twist, r * s);
    Element rhs = apply_delta(twist, r) * s + apply_sigma(twist, r) * apply_delta(twist, s);
    ++rep.trials;
    if (!congruent(lhs, rhs)) {
      rep.passed = false;
      rep.witness = {{"r", element_to_json(r)},
                     {"s", element_to_json(s)},
                     {"delta(rs)", element_to_json(lhs)},
                     {"delta(r)s+sigma(r)delta(s)", element_to_json(rhs)}};
      return rep;
    }
  }
  return rep;
}

CheckReport check_compatible(const Ring& ring, const Twist& twist, int trials, uint64_t seed) {
  CheckReport rep;
  rep.property = "compatible";
  rep.seed = seed;
  rep.structural = structural_gain(twist.delta) >= 1;
  const int cap = ring->level_cap();
  const int n = std::max(trials, cap);
  Rng base(seed);
  for (int i = 0; i < n; ++i) {
    Rng rng = base.child(static_cast<uint64_t>(i));
    const int k = i % cap;
    Element r = random_with_val(ring, k, rng);
    Level vs = apply_sigma(twist, r).val();
    Level vd = apply_delta(twist, r).val();
    ++rep.trials;
    const bool sigma_ok = vs.is_exact() && !vs.is_infinite() && vs.value() == k;
    const bool delta_ok = vd.greater_than(k);
    if (!sigma_ok || !delta_ok) {
      rep.passed = false;
      rep.witness = {{"r", element_to_json(r)},
                     {"val_r", k},
                     {"val_sigma_r", level_to_json(vs)},
                     {"val_delta_r", level_to_json(vd)}};
      rep.detail = sigma_ok ? "v(delta(r)) <= v(r)" : "v(sigma(r)) != v(r)";
      return rep;
    }
  }
  return rep;
}

// ------------------------------------------------------------------ JSON

namespace {

const json& member(const json& obj, const char* name, const std::string& primitive) {
  if (!obj.is_object() || !obj.contains(name))
    throw ParseError("primitive \"" + primitive + "\" needs the field \"" + name + "\", got " + obj.dump());
  return obj.at(name);
}

}  // namespace


json auto_to_json(const AutoDescriptor& s) {
  json arr = json::array();
  for (const auto& p : s.seq) {
    switch (p.kind) {
      case AK::Frobenius:
        arr.push_back({{"frob", p.exponent}});
        break;
      case AK::ScaleUniformiser:
        arr.push_back({{"scale", element_to_json(p.elt)}});
        break;
      case AK::Conjugation:
        arr.push_back({{"conj", element_to_json(p.elt)}});
        break;
      case AK::MatrixLift:
        arr.push_back({{"matlift", auto_to_json(p.inner[0])}});
        break;
      case AK::FactorPermutation:
        arr.push_back({{"perm", p.indices}});
        break;
      case AK::Factorwise: {
        json parts = json::array();
        for (const auto& s2 : p.inner) parts.push_back(auto_to_json(s2));
        arr.push_back({{"factorwise", parts}});
        break;
      }
      case AK::Restrict:
        arr.push_back({{"restrict",
                        {{"factors", p.indices}, {"parent", ring_to_json(p.parent)}, {"sigma", auto_to_json(p.inner[0])}}}});
        break;
    }
  }
  return arr;
}

json deriv_to_json(const DerivDescriptor& d) {
  json arr = json::array();
  for (const auto& t : d.terms) {
    switch (t.kind) {
      case DK::Zero:
        arr.push_back({{"zero", 1}});
        break;
      case DK::Inner:
      case DK::InnerTauTimes: {
        const char* key = t.kind == DK::Inner ? "inner" : "tautimes";
        if (t.sigma)
          arr.push_back({{key, {{"t", element_to_json(t.elt)}, {"sigma", auto_to_json(*t.sigma)}}}});
        else
          arr.push_back({{key, element_to_json(t.elt)}});
        break;
      }
      case DK::MatrixLift:
        if (t.sigma)
          arr.push_back({{"matlift", {{"delta", deriv_to_json(t.inner[0])}, {"tau", auto_to_json(*t.sigma)}}}});
        else
          arr.push_back({{"matlift", deriv_to_json(t.inner[0])}});
        break;
      case DK::LeftMultiple:
        arr.push_back({{"leftmul", {{"a", element_to_json(t.elt)}, {"delta", deriv_to_json(t.inner[0])}}}});
        break;
      case DK::PiDerivative:
        arr.push_back({{"dpi", 1}});
        break;
      case DK::Restrict:
        arr.push_back({{"restrict",
                        {{"factors", t.indices},
                         {"parent", ring_to_json(t.parent)},
                         {"sigma", auto_to_json(*t.sigma)},
                         {"delta", deriv_to_json(t.inner[0])}}}});
        break;
    }
  }
  return arr;
}

json twist_to_json(const Twist& t) { return {{"sigma", auto_to_json(t.sigma)}, {"delta", deriv_to_json(t.delta)}}; }

namespace {

std::pair<std::string, const json*> single_key(const json& item, const char* ctx) {
  if (!item.is_object() || item.size() != 1)
    throw ParseError(std::string(ctx) + ": each primitive is a one-key object, got " + item.dump());
  auto it = item.begin();
  return {it.key(), &it.value()};
}

std::vector<int> int_list(const json& j, const char* ctx) {
  if (!j.is_array()) throw ParseError(std::string(ctx) + ": expected an integer list");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(ctx) + ": expected an integer list");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

AutoDescriptor auto_from_json(const Ring& ring, const json& j) {
  if (j.is_null()) return AutoDescriptor::identity();
  if (!j.is_array()) throw ParseError("sigma must be a list of primitives, got " + j.dump());
  AutoDescriptor out;
  for (const auto& item : j) {
    auto [key, val] = single_key(item, "sigma");
    AutoDescriptor piece;
    if (key == "id") {
      continue;
    } else if (key == "frob") {
      if (ring->kind != RingKind::FqSeries) throw ShapeMismatch("frob needs an FqSeries ring");
      piece = AutoDescriptor::frobenius(val->get<int64_t>());
    } else if (key == "scale") {
      piece = AutoDescriptor::scale_uniformiser(element_from_json(ring, *val));
    } else if (key == "conj") {
      piece = AutoDescriptor::conjugation(element_from_json(ring, *val));
    } else if (key == "matlift") {
      if (ring->kind != RingKind::Matrix) throw ShapeMismatch("matlift needs a Matrix ring");
      piece = AutoDescriptor::matrix_lift(auto_from_json(ring->inner, *val));
    } else if (key == "perm") {
      if (ring->kind != RingKind::Product) throw ShapeMismatch("perm needs a Product ring");
      piece = AutoDescriptor::factor_permutation(int_list(*val, "perm"));
      if (piece.seq[0].indices.size() != ring->factors.size()) throw ShapeMismatch("perm arity");
    } else if (key == "factorwise") {
      if (ring->kind != RingKind::Product || !val->is_array() || val->size() != ring->factors.size())
        throw ShapeMismatch("factorwise needs one automorphism per product factor");
      std::vector<AutoDescriptor> parts;
      for (size_t i = 0; i < val->size(); ++i) parts.push_back(auto_from_json(ring->factors[i], (*val)[i]));
      piece = AutoDescriptor::factorwise(std::move(parts));
    } else if (key == "restrict") {
      Ring parent = ring_from_json(member(*val, "parent", key));
      piece = AutoDescriptor::restrict_to(parent, int_list(member(*val, "factors", key), "restrict.factors"),
                                          auto_from_json(parent, member(*val, "sigma", key)));
    } else {
      throw ParseError("unknown automorphism primitive \"" + key + "\"");
    }
    out = compose(out, piece);
  }
  return out;
}

DerivDescriptor deriv_from_json(const Ring& ring, const json& j) {
  if (j.is_null()) return DerivDescriptor::zero();
  if (!j.is_array()) throw ParseError("delta must be a list of primitives, got " + j.dump());
  DerivDescriptor out;
  for (const auto& item : j) {
    auto [key, val] = single_key(item, "delta");
    DerivDescriptor piece;
    if (key == "zero") {
      continue;
    } else if (key == "inner" || key == "tautimes") {
      const bool wrapped = val->is_object() && val->contains("t");
      const bool explicit_sigma = wrapped && val->contains("sigma");
      Element t = element_from_json(ring, wrapped ? member(*val, "t", key) : *val);
      if (key == "inner") {
        piece = explicit_sigma ? DerivDescriptor::inner_with(t, auto_from_json(ring, member(*val, "sigma", key)))
                               : DerivDescriptor::inner(t);
      } else {
        piece = DerivDescriptor::inner_tau_times(t);
        if (explicit_sigma) piece.terms[0].sigma = auto_from_json(ring, member(*val, "sigma", key));
      }
    } else if (key == "matlift") {
      if (ring->kind != RingKind::Matrix) throw ShapeMismatch("matlift needs a Matrix ring");
      if (val->is_object())
        piece = DerivDescriptor::matrix_lift(deriv_from_json(ring->inner, member(*val, "delta", key)),
                                             auto_from_json(ring->inner, member(*val, "tau", key)));
      else
        piece = DerivDescriptor::matrix_lift(deriv_from_json(ring->inner, *val));
    } else if (key == "leftmul") {
      piece = DerivDescriptor::left_multiple(element_from_json(ring, member(*val, "a", key)),
                                             deriv_from_json(ring, member(*val, "delta", key)));
    } else if (key == "dpi") {
      if (ring->kind != RingKind::FqSeries) throw ShapeMismatch("dpi needs an FqSeries ring");
      piece = DerivDescriptor::pi_derivative();
    } else if (key == "restrict") {
      Ring parent = ring_from_json(member(*val, "parent", key));
      piece = DerivDescriptor::restrict_to(parent, int_list(member(*val, "factors", key), "restrict.factors"),
                                           auto_from_json(parent, member(*val, "sigma", key)),
                                           deriv_from_json(parent, member(*val, "delta", key)));
    } else {
      throw ParseError("unknown derivation primitive \"" + key + "\"");
    }
    out = sum(out, piece);
  }
  return out;
}

Twist twist_from_json(const Ring& ring, const json& j) {
  if (j.is_null()) return {};
  if (!j.is_object()) throw ParseError("twist must be an object {\"sigma\":[...],\"delta\":[...]}");
  Twist t;
  if (j.contains("sigma")) t.sigma = auto_from_json(ring, j.at("sigma"));
  if (j.contains("delta")) t.delta = deriv_from_json(ring, j.at("delta"));
  return t;
}

}  // namespace skewps
