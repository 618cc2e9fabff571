#pragma once

#include "symquot/geometry.hpp"
#include "symquot/multigraded.hpp"

#include <string>
#include <vector>

namespace symquot {

inline const AxisSystem& xy_axes() {
  static const AxisSystem axes{"x", "y"};
  return axes;
}

inline const AxisSystem& xyt_axes() {
  static const AxisSystem axes{"x", "y", "t"};
  return axes;
}

inline const AxisSystem& hht_axes() {
  static const AxisSystem axes{"hh", "t"};
  return axes;
}

// One symmetric-quotient invariant: dims of the n-th coefficient, on (p,q),
// on the single Hochschild axis, or on (x,y) with age shifts. n = 0 always
// carries the unit series.
struct SymQuotResult {
  int n = 0;
  GradedDimension dims;
};

// A series on (x, y, t) truncated at t^N; coefficients are exact dimensions.
using TrivariateSeries = GradedDimension;

// One verification outcome; detail names the first offending monomial on
// failure and is empty on success.
struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// "axis^d ..." rendering of one degree, shared by check details and the CLI.
std::string format_degree(const AxisSystem& axes, const Degree& d);

// Exact comparison; on mismatch the detail names the first differing degree.
CheckResult compare_series(const std::string& name, const GradedDimension& lhs,
                           const GradedDimension& rhs);

struct ClosedLowDegrees {
  Integer hh1;
  Integer hh2;
};

// The pieces of the degree-2 invariants of the Hilbert scheme of n points on a
// surface S: tangent cohomology, structure-sheaf cohomology and bivector
// sections, each derived from the S-tables alone, plus the Hochschild numbers
// they must reassemble to.
struct DeformationSummary {
  Integer h0_tangent;    // h^0(Hilb, T) = h^0(S, T)
  Integer h1_tangent;    // h^1(Hilb, T) = h^1(S,T) + h^0(S,T) h^1(S,O) + h^0(S, omega^{-1})
  Integer h2_structure;  // h^2(Hilb, O) = h^2(S,O) + C(h^1(S,O), 2)
  Integer h0_bivectors;  // h^0(Hilb, wedge^2 T) = C(h^0(S,T), 2) + h^0(S, omega^{-1})
  Integer hh1;           // = h^0 tangent + h^1 structure
  Integer hh2;           // = h1_tangent + h2_structure + h0_bivectors
};

// Direct sum over partitions nu of n of tensor_i Sym^{lambda_i}(table_i), super
// on both of (p, q). Ignores any collapsed-axis shifts the family records;
// those only exist after collapsing.
SymQuotResult inertia_hodge_sym(const CoefficientFamily& f, int n);

// The collapsed variant: each factor is the q-p collapse of table_i translated
// by -shift_i, then symmetrized super on the Hochschild axis. Equals the
// collapse of inertia_hodge_sym when all shifts vanish.
SymQuotResult hh_with_coefficients_sym(const CoefficientFamily& f, int n);

// Same numbers computed from the variety alone: factors are the
// HS_{1+(k-1)i}(X) tables; when (k-1) dim X is odd only partitions with all
// parts odd contribute (the others vanish summand by summand).
SymQuotResult hs_sym(const VarietyData& x, int k, int n);

// All coefficients 0..N at once via the windowed product
// prod_{k>=1} prod_j (1 - (-s)^j t^k)^{-(-1)^j dim_j factor_k}; the t^n slice
// must match hh_with_coefficients_sym(f, n).
std::vector<SymQuotResult> hh_series_product(const CoefficientFamily& f, int N);

// Degree 1 and 2 of the k = 0 series of the n-th symmetric quotient, n >= 2,
// in closed form: hh1 = HS_0^1(X); hh2 = HS_0^2(X) + C(hh1, 2) plus
// HS_{-1}^2(X) when dim X = 2, plus HS_{-2}^2(X) when dim X = 1 and n >= 3.
ClosedLowDegrees closed_hh1_hh2(const VarietyData& x, int n);

// Partition sum on (x, y): the part-i factor is table_i translated by
// (i-1, i-1) before symmetrizing, so each nu-summand sits at (age nu, age nu).
// Requires an unshifted family.
SymQuotResult orbifold_hodge_age(const CoefficientFamily& f, int n);

// Windowed expansion through t^N of
// prod_{k>=1} prod_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} t^k)^{-(-1)^{p+q} h^{p,q}(table_k)}.
// Requires an unshifted family with tables through k = N.
TrivariateSeries corrected_conjecture_rhs(const CoefficientFamily& f, int N);

// The same product with table_1 reused for every k; diffing against the
// corrected series isolates exactly the monomials the k-th-power tables change.
TrivariateSeries boissiere_original_rhs(const CoefficientFamily& f, int N);

// Three specializations of corrected_conjecture_rhs, each against an
// independently assembled series: (a) x = s^{-1}, y = s collapses onto the
// Hochschild product; (b) the x = 0 slice is the symmetric algebra of the
// p = 0 column of table_1; (c) the y = 0 slice is the binomial product over
// the q = 0 column of table_1.
std::vector<CheckResult> specialization_checks(const CoefficientFamily& f, int N);

// Exact rational-series identity through t^N: the x -> -y, y -> -1 signed
// specialization of corrected_conjecture_rhs equals
// exp(sum_{m>=1} t^m/m sum_{k>=1} (t y)^{(k-1) m} chi_{-y^m}(table_k)).
std::vector<CheckResult> chi_y_identity(const CoefficientFamily& f, int N);

// Degree <= 2 deformation bookkeeping for the Hilbert scheme of n points on a
// surface; throws std::logic_error when the pieces fail to reassemble into the
// closed and partition-sum Hochschild numbers.
DeformationSummary deformation_summary(const VarietyData& s, int n);

// Sym of v placed at every t^m, m = 1..N: the Fock-space character of v.
GradedDimension fock_space(const GradedDimension& v, int N);

// Fock(a + b) = Fock(a) (x) Fock(b) through t^N, as a whole and slice by slice.
std::vector<CheckResult> sod_fock_check(const GradedDimension& a, const GradedDimension& b,
                                        int N);

}  // namespace symquot
