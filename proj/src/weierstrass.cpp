#include "skewps/weierstrass.hpp"

#include <algorithm>
#include <climits>

#include "skewps/errors.hpp"

namespace skewps {
namespace {

const Ring& leaf_ring(const SkewSeries& s) {
  const Ring& ring = s.context()->ring;
  if (!ring->is_leaf()) throw ShapeMismatch("expected a series over Zp or FqSeries, got " + ring->canonical);
  return ring;
}

/// The same series with every coefficient taken as an exact representative.
SkewSeries lift_series(const SkewSeries& s) {
  std::vector<Element> c;
  for (const auto& e : s.coeffs()) c.push_back(e.lifted());
  return SkewSeries(s.context(), std::move(c));
}

SkewSeries times_pi_power(const SkewSeries& s, int m) {
  const Element pm = Element::one(s.context()->ring).times_uniformiser_power(m).lifted();
  return s * SkewSeries::constant(s.context(), pm);
}

SkewSeries divide_by_pi_power(const SkewSeries& s, int m) {
  std::vector<Element> c;
  for (const auto& e : s.coeffs()) {
    if (e.is_zero()) {
      c.push_back(Element::zero(e.ring()).truncated(std::max(0, e.precision() - m)));
    } else {
      c.push_back(e.divided_by_uniformiser_power(m));
    }
  }
  return SkewSeries(s.context(), std::move(c));
}

}  // namespace

Context with_cap(const Context& ctx, int cap) {
  if (cap == ctx->cap) return ctx;
  ContextOptions opts;
  opts.cap = cap;
  opts.checked = false;  // same twist as an already validated context
  return make_context(ctx->ring, ctx->twist, opts);
}

SkewSeries recap(const SkewSeries& s, const Context& ctx) {
  std::vector<Element> c = s.coeffs();
  // slots beyond the old cap are unknown, not zero
  for (int i = s.cap(); i < ctx->cap; ++i) c.push_back(Element::zero(ctx->ring).truncated(0));
  return SkewSeries(ctx, std::move(c));
}

int series_degree(const SkewSeries& s) {
  for (int i = s.cap() - 1; i >= 0; --i)
    if (!s.coeff(i).is_zero()) return i;
  return -1;
}

bool is_polynomial_of_degree_at_most(const SkewSeries& s, int degree) { return series_degree(s) <= degree; }

// ------------------------------------------------------------------ π-normality

SkewSeries pi_normal_conjugate(const SkewSeries& s) {
  const Ring& ring = leaf_ring(s);
  const Context& ctx = s.context();
  const int n = ctx->cap;
  const Element pi = uniformiser(ring);
  // W[l] = coefficients of y^l·π, W[l][l] = τ^l(π)
  std::vector<std::vector<Element>> w{{pi}};
  for (int l = 1; l < n; ++l) w.push_back(x_times(ctx->twist, w.back()));
  std::vector<Element> out(n, Element::zero(ring));
  for (int i = n - 1; i >= 0; --i) {
    Element rhs = pi * s.coeff(i);
    for (int l = i + 1; l < n; ++l)
      if (!out[l].is_exact_zero()) rhs = rhs - out[l] * w[l][i];
    if (rhs.is_exact_zero()) continue;
    const Element unit = w[i][i].divided_by_uniformiser_power(1).lifted().invert_unit();
    Element q;
    try {
      q = rhs.is_zero() ? Element::zero(ring).truncated(std::max(0, rhs.precision() - 1))
                        : rhs.divided_by_uniformiser_power(1);
    } catch (const NotSolvable&) {
      throw NotSolvable("pi*s = s'*pi has no solution at degree " + std::to_string(i));
    }
    out[i] = q * unit;
  }
  return SkewSeries(ctx, std::move(out));
}

SkewSeries pi_normal_conjugate_inverse(const SkewSeries& s) {
  leaf_ring(s);
  return divide_by_pi_power(times_pi_power(s, 1), 1);
}

// ------------------------------------------------------------------ depolarize

Depolarized depolarize(const SkewSeries& r) {
  leaf_ring(r);
  const Context& ctx = r.context();
  int m = INT_MAX;
  for (const auto& c : r.coeffs()) {
    const Level v = c.val();
    if (v.is_exact() && !v.is_infinite()) m = std::min<int>(m, static_cast<int>(v.value()));
  }
  if (m == INT_MAX) throw InsufficientPrecision("series vanishes at precision; cannot certify its pi-adic valuation");
  Context small = with_cap(ctx, ctx->cap - m);
  std::vector<Element> c;
  for (int i = 0; i < small->cap; ++i) {
    const Element& e = r.coeff(i);
    c.push_back(e.is_zero() ? Element::zero(e.ring()).truncated(std::max(0, e.precision() - m))
                            : e.divided_by_uniformiser_power(m));
  }
  // r = π^m·s̃ = N^m(s̃)·π^m
  SkewSeries s(small, std::move(c));
  for (int k = 0; k < m; ++k) s = pi_normal_conjugate(s);
  return {s, m};
}

// ------------------------------------------------------------------ preparation

int reduced_degree(const SkewSeries& s) {
  for (int i = 0; i < s.cap(); ++i) {
    const Level v = s.coeff(i).val();
    if (v.is_exact() && !v.is_infinite() && v.value() == 0) return i;
  }
  return -1;
}

bool is_distinguished(const SkewSeries& p, int d) {
  if (d >= p.cap() || series_degree(p) != d) return false;
  if (!congruent(p.coeff(d), Element::one(p.context()->ring))) return false;
  for (int i = 0; i < d; ++i)
    if (!p.coeff(i).val().at_least_value(1)) return false;
  return true;
}

PreparedForm prepare(const SkewSeries& s_in, PrepareSchedule schedule) {
  const Ring& ring = leaf_ring(s_in);
  const Context& ctx = s_in.context();
  const int k = ctx->cap;
  PreparedForm out;
  out.d = reduced_degree(s_in);
  if (out.d < 0)
    throw ReducedDegreeTooHigh("no coefficient of valuation 0 below the cap " + std::to_string(k) +
                               "; P cannot be separated from the tail");
  out.input_level = sps_precision(s_in);
  const SkewSeries s = lift_series(s_in);
  const SkewSeries one = SkewSeries::one(ctx);
  if (out.d == 0) {
    out.P = one;
    out.u = s_in;
    return out;
  }
  const int d = out.d;
  const AutoDescriptor tau_inv = inverse(ctx->twist.sigma);
  SkewSeries w = schedule == PrepareSchedule::FromOne ? one : one + SkewSeries::x(ctx);
  SkewSeries e = s * w;
  // s·w = e_low + g·y^d; push g towards 1 by w ← w·c with y^d·c ≈ g^{-1}·y^d
  for (int it = 0;; ++it) {
    std::vector<Element> high(e.coeffs().begin() + d, e.coeffs().end());
    SkewSeries g(ctx, high);
    if (congruent(g, one)) break;
    if (it > 2 * k + 4) throw NotSolvable("Weierstrass iteration did not converge");
    SkewSeries gamma = sps_invert_unit(lift_series(g));
    std::vector<Element> c;
    for (const auto& gj : gamma.coeffs()) {
      Element v = gj;
      for (int t = 0; t < d; ++t) v = apply_sigma(tau_inv, v);
      c.push_back(v.lifted());
    }
    w = lift_series(w * SkewSeries(ctx, std::move(c)));
    e = s * w;
    out.iterations = it + 1;
  }
  std::vector<Element> p(e.coeffs().begin(), e.coeffs().begin() + d);
  p.push_back(Element::one(ring));
  out.P = SkewSeries(ctx, std::move(p));
  out.u = sps_invert_unit(w);
  if (!congruent(s_in, out.P * out.u)) throw NotSolvable("residual s - P*u does not vanish at precision");
  return out;
}

namespace {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

SkewSeries truncated_slots(const SkewSeries& s, const std::vector<int>& prec) {
  std::vector<Element> c;
  for (int i = 0; i < s.cap(); ++i) c.push_back(s.coeff(i).truncated(prec[i]));
  return SkewSeries(s.context(), std::move(c));
}

}  // namespace

PreparedForm certified_residues(const PreparedForm& p) {
  if (p.d == 0) return p;
  PreparedForm out = p;
  const int k = p.P.cap(), L = p.input_level;
  std::vector<int> pp(k), up(k);
  for (int i = 0; i < k; ++i) {
    // the monic top coefficient and the zero slots above it are exact by construction
    pp[i] = i >= p.d ? k - i : std::min(k - i, ceil_div(L - i, p.d));
    up[i] = std::min(k - i, ceil_div(L - p.d - i, p.d));
  }
  out.P = truncated_slots(p.P, pp);
  out.u = truncated_slots(p.u, up);
  return out;
}

// ------------------------------------------------------------------ ideals

RightIdealPolynomial polynomial_in_right_ideal(const SkewSeries& r) {
  const Context& ctx = r.context();
  Depolarized dp = depolarize(r);
  RightIdealPolynomial out;
  out.prepared = prepare(dp.s);
  out.prepared.m = dp.m;
  const int m = dp.m;
  // r = P·u·π^m = P·π^m·u' with π^m·u' = u·π^m
  SkewSeries u_pi = times_pi_power(recap(out.prepared.u, ctx), m);
  SkewSeries u_prime = recap(divide_by_pi_power(u_pi, m), dp.s.context());
  out.w = recap(sps_invert_unit(u_prime), ctx);
  out.q = times_pi_power(recap(out.prepared.P, ctx), m);
  return out;
}

bool verify_right_ideal_certificate(const SkewSeries& r, const RightIdealPolynomial& c) {
  return is_polynomial_of_degree_at_most(c.q, c.prepared.d) && series_degree(c.q) >= 0 && congruent(r * c.w, c.q);
}

TwoSidedIdealPolynomial polynomial_in_two_sided_ideal_matrix(const SkewSeries& r, const UntwistingIsomorphism& phi) {
  const MatrixSeries image = phi.apply(r);
  const int n = phi.n();
  // pick the entry with the smallest certified π-exponent
  int best = -1, best_m = INT_MAX;
  for (int idx = 0; idx < n * n; ++idx) {
    for (const auto& c : image.entries[idx].coeffs()) {
      const Level v = c.val();
      if (v.is_exact() && !v.is_infinite() && v.value() < best_m) {
        best_m = static_cast<int>(v.value());
        best = idx;
      }
    }
  }
  if (best < 0) throw InsufficientPrecision("phi(r) vanishes at precision");
  TwoSidedIdealPolynomial out;
  out.row = best / n;
  out.col = best % n;
  out.scalar = polynomial_in_right_ideal(image.at(out.row, out.col));
  const Context& dctx = phi.target();
  const SkewSeries one = SkewSeries::one(dctx);
  // Σ_l E_{l,row}·φ(r)·(w E_{col,l}) = (R_{row,col}·w)·I = Q·I
  for (int l = 0; l < n; ++l) {
    out.left.push_back(phi.unapply(MatrixSeries::unit(dctx, n, l, out.row, one)));
    out.right.push_back(phi.unapply(MatrixSeries::unit(dctx, n, out.col, l, out.scalar.w)));
  }
  MatrixSeries qi = MatrixSeries::zero(dctx, n);
  for (int l = 0; l < n; ++l) qi.at(l, l) = out.scalar.q;
  out.poly = phi.unapply(qi);
  out.degree = series_degree(out.poly);
  return out;
}

bool verify_two_sided_certificate(const SkewSeries& r, const TwoSidedIdealPolynomial& c) {
  if (c.degree < 0 || c.degree > c.scalar.prepared.d) return false;
  SkewSeries acc = SkewSeries::zero(r.context());
  for (size_t l = 0; l < c.left.size(); ++l) acc = acc + c.left[l] * r * c.right[l];
  return congruent(acc, c.poly);
}

json prepared_to_json(const PreparedForm& p) {
  const PreparedForm c = certified_residues(p);
  return {{"P", series_to_json(p.P)},
          {"u", series_to_json(p.u)},
          {"d", p.d},
          {"m", p.m},
          {"iterations", p.iterations},
          {"residual_level", p.input_level},
          {"certified", {{"P", series_to_json(c.P)}, {"u", series_to_json(c.u)}}}};
}

}  // namespace skewps
