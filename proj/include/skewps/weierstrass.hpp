#pragma once

#include <vector>

#include "skewps/series.hpp"
#include "skewps/untwist.hpp"

namespace skewps {

/// s' with π·s = s'·π in D[[y;τ,θ]] (D = Zp or FqSeries, π central in D).
/// Solved coefficientwise from the top degree down; each coefficient keeps its
/// jagged precision except where π·s_i would exceed the ring cap. NotSolvable
/// if a division by π fails (cannot happen for compatible twists).
SkewSeries pi_normal_conjugate(const SkewSeries& s);
/// z with π·z = s·π, i.e. the inverse of pi_normal_conjugate: z = (s·π)/π.
SkewSeries pi_normal_conjugate_inverse(const SkewSeries& s);

struct Depolarized {
  SkewSeries s;  // in the same ring at cap N − m
  int m = 0;
};
/// r = s·π^m with min_i v(s_i) = 0. InsufficientPrecision if r vanishes at
/// precision. The result lives at cap N − m, the level to which it is known.
Depolarized depolarize(const SkewSeries& r);

/// Context of the same ring and twist at a smaller cap (unchecked: the twist
/// was validated with the original context).
Context with_cap(const Context& ctx, int cap);
/// Copies a series into a context of a different cap (truncating or padding).
SkewSeries recap(const SkewSeries& s, const Context& ctx);

enum class PrepareSchedule { FromOne, FromOnePlusY };

struct PreparedForm {
  SkewSeries P;  // monic of degree d, lower coefficients of val >= 1
  SkewSeries u;  // unit
  int d = 0;     // reduced degree
  int m = 0;     // π-exponent (set by callers that depolarize first)
  int iterations = 0;
  int input_level = 0;  // certified level L of the input s
};

/// s = P·u (right-hand preparation). ReducedDegreeTooHigh when no coefficient
/// of val 0 lies below the cap; the residual s − P·u is verified ≡ 0.
PreparedForm prepare(const SkewSeries& s, PrepareSchedule schedule = PrepareSchedule::FromOne);
/// Reduced degree: the first index with v(s_i) = 0 exactly, or -1.
int reduced_degree(const SkewSeries& s);
/// P and u truncated to what the input determines. Input noise of level >= L
/// moves P_j only by val >= ceil((L − j)/d) and u_b by val >= ceil((L − d − b)/d)
/// (weight d on π, 1 on y; the initial form of P is monic of degree d). The
/// representatives in PreparedForm satisfy s ≡ P·u at level L; these residues
/// are the part that does not depend on the iteration schedule.
PreparedForm certified_residues(const PreparedForm& p);
bool is_distinguished(const SkewSeries& p, int d);

struct RightIdealPolynomial {
  SkewSeries q;        // P·π^m, a polynomial in y
  SkewSeries w;        // multiplier: r·w = q
  PreparedForm prepared;
};
/// A nonzero polynomial element of r·D[[y;τ,θ]], with its certificate.
RightIdealPolynomial polynomial_in_right_ideal(const SkewSeries& r);
/// r·w ≡ q at the certified level, and q is a polynomial.
bool verify_right_ideal_certificate(const SkewSeries& r, const RightIdealPolynomial& c);

struct TwoSidedIdealPolynomial {
  SkewSeries poly;  // polynomial in x lying in (r)
  int row = 0, col = 0;  // entry of φ(r) used
  RightIdealPolynomial scalar;  // extraction inside D[[y]]
  std::vector<SkewSeries> left, right;  // Σ_l left_l · r · right_l = poly
  int degree = -1;
};
/// Morita step through the untwisting isomorphism: a nonzero polynomial element
/// of the two-sided ideal generated by r in O[[x;σ,δ]], with multipliers.
TwoSidedIdealPolynomial polynomial_in_two_sided_ideal_matrix(const SkewSeries& r, const UntwistingIsomorphism& phi);
bool verify_two_sided_certificate(const SkewSeries& r, const TwoSidedIdealPolynomial& c);

/// Highest index with a nonzero coefficient at precision, or -1.
int series_degree(const SkewSeries& s);
/// True when every coefficient above `degree` is zero at precision.
bool is_polynomial_of_degree_at_most(const SkewSeries& s, int degree);

json prepared_to_json(const PreparedForm& p);

}  // namespace skewps
