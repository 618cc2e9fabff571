#include "symquot/engine.hpp"

#include "symquot/partitions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symquot {

namespace {

using Rational = boost::multiprecision::cpp_rational;

const CollapseMap& pq_to_hh() {
  static const CollapseMap m(pq_axes(), {{"hh", {{"q", 1}, {"p", -1}}}});
  return m;
}

const CollapseMap& xyt_to_hht() {
  static const CollapseMap m(xyt_axes(), {{"hh", {{"y", 1}, {"x", -1}}}, {"t", {{"t", 1}}}});
  return m;
}

void require_tables(const CoefficientFamily& f, int needed) {
  if (needed > f.max_i()) {
    throw std::invalid_argument("coefficient family (" + f.provenance + ") has tables through i = " +
                                std::to_string(f.max_i()) + " but i = " + std::to_string(needed) +
                                " is needed");
  }
}

void require_unshifted(const CoefficientFamily& f, const std::string& op) {
  for (int i = 1; i <= f.max_i(); ++i) {
    if (f.shift(i) != 0) {
      throw std::invalid_argument(op + " needs an unshifted family, but (" + f.provenance +
                                  ") shifts i = " + std::to_string(i) + " by " +
                                  std::to_string(f.shift(i)));
    }
  }
}

// Collapsed coefficient of the part i: translate the q-p collapse by -shift_i
// before any symmetric power is taken, so the parity of each generator is the
// parity of its final Hochschild degree.
GradedDimension collapsed_factor(const CoefficientFamily& f, int i) {
  GradedDimension c = collapse(f.table(i), pq_to_hh());
  if (f.shift(i) != 0) c = translate(c, {-f.shift(i)});
  return c;
}

GradedDimension partition_sum(int n, const AxisSystem& axes, const SuperAxes& k_axes,
                              const std::function<GradedDimension(int)>& factor,
                              const std::function<bool(const CycleType&)>& keep) {
  GradedDimension out(axes);
  for (const CycleType& nu : partitions_of(n)) {
    if (!keep(nu)) continue;
    GradedDimension summand = GradedDimension::unit(axes);
    for (const auto& [part, count] : nu.multiplicities()) {
      summand = tensor(summand, sym_n(factor(part), count, k_axes));
    }
    out = direct_sum(out, summand);
  }
  return out;
}

}  // namespace

std::string format_degree(const AxisSystem& axes, const Degree& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0) out << " ";
    out << axes.name(i) << "^" << d[i];
  }
  return out.str();
}

CheckResult compare_series(const std::string& name, const GradedDimension& lhs,
                           const GradedDimension& rhs) {
  CheckResult r{name, true, ""};
  if (lhs == rhs) return r;
  r.ok = false;
  std::map<Degree, std::pair<Integer, Integer>> merged;
  for (const auto& [d, m] : lhs.support()) merged[d].first = m;
  for (const auto& [d, m] : rhs.support()) merged[d].second = m;
  for (const auto& [d, pair] : merged) {
    if (pair.first != pair.second) {
      r.detail = format_degree(lhs.axes(), d) + ": " + pair.first.str() + " vs " +
                 pair.second.str();
      break;
    }
  }
  if (r.detail.empty()) r.detail = "axis systems differ";
  return r;
}

SymQuotResult inertia_hodge_sym(const CoefficientFamily& f, int n) {
  if (n < 0) throw std::invalid_argument("symmetric quotients need n >= 0");
  require_tables(f, n);
  GradedDimension dims = partition_sum(
      n, pq_axes(), SuperAxes{"p", "q"}, [&](int i) { return f.table(i); },
      [](const CycleType&) { return true; });
  return {n, std::move(dims)};
}

SymQuotResult hh_with_coefficients_sym(const CoefficientFamily& f, int n) {
  if (n < 0) throw std::invalid_argument("symmetric quotients need n >= 0");
  require_tables(f, n);
  GradedDimension dims = partition_sum(
      n, hh_axes(), SuperAxes{"hh"}, [&](int i) { return collapsed_factor(f, i); },
      [](const CycleType&) { return true; });
  return {n, std::move(dims)};
}

SymQuotResult hs_sym(const VarietyData& x, int k, int n) {
  if (n < 0) throw std::invalid_argument("symmetric quotients need n >= 0");
  const bool odd_parts_only = ((k - 1) * x.dim) % 2 != 0;
  GradedDimension dims = partition_sum(
      n, hh_axes(), SuperAxes{"hh"},
      [&](int i) { return hs_of_variety(x, 1 + (k - 1) * i).dims; },
      [&](const CycleType& nu) { return !odd_parts_only || all_parts_odd(nu); });
  return {n, std::move(dims)};
}

std::vector<SymQuotResult> hh_series_product(const CoefficientFamily& f, int N) {
  if (N < 0) throw std::invalid_argument("series need N >= 0");
  require_tables(f, N);
  GradedDimension generators(hht_axes());
  for (int k = 1; k <= N; ++k) {
    generators = direct_sum(generators, append_axis(collapsed_factor(f, k), "t", k));
  }
  const GradedDimension series =
      sym_total(generators, SuperAxes{"hh"}, TruncationWindow::upto(hht_axes(), "t", N));
  std::vector<SymQuotResult> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.push_back({n, slice(series, "t", n)});
  return out;
}

ClosedLowDegrees closed_hh1_hh2(const VarietyData& x, int n) {
  if (n < 2) throw std::invalid_argument("closed low-degree forms cover n >= 2 only");
  if (x.hodge_diamond().at({0, 0}) != 1) {
    throw std::invalid_argument(x.name + ": closed forms need a connected input, h^{0,0} = 1");
  }
  const GradedDimension hs0 = hs_of_variety(x, 0).dims;
  ClosedLowDegrees r;
  r.hh1 = hs0.at({1});
  r.hh2 = hs0.at({2}) + binomial(r.hh1, 2);
  if (x.dim == 2) r.hh2 += hs_of_variety(x, -1).dims.at({2});
  if (x.dim == 1 && n >= 3) r.hh2 += hs_of_variety(x, -2).dims.at({2});
  return r;
}

SymQuotResult orbifold_hodge_age(const CoefficientFamily& f, int n) {
  if (n < 0) throw std::invalid_argument("symmetric quotients need n >= 0");
  require_tables(f, n);
  require_unshifted(f, "the age-shifted partition sum");
  GradedDimension dims = partition_sum(
      n, xy_axes(), SuperAxes{"x", "y"},
      [&](int i) { return translate(rename_axes(f.table(i), xy_axes()), {i - 1, i - 1}); },
      [](const CycleType&) { return true; });
  return {n, std::move(dims)};
}

namespace {

TrivariateSeries product_rhs(const CoefficientFamily& f, int N, bool k_dependent) {
  if (N < 0) throw std::invalid_argument("series need N >= 0");
  require_tables(f, k_dependent ? N : std::min(1, N));
  require_unshifted(f, "the (x, y, t) product");
  GradedDimension generators(xyt_axes());
  for (int k = 1; k <= N; ++k) {
    const GradedDimension placed =
        translate(rename_axes(f.table(k_dependent ? k : 1), xy_axes()), {k - 1, k - 1});
    generators = direct_sum(generators, append_axis(placed, "t", k));
  }
  return sym_total(generators, SuperAxes{"x", "y"},
                   TruncationWindow::upto(xyt_axes(), "t", N));
}

}  // namespace

TrivariateSeries corrected_conjecture_rhs(const CoefficientFamily& f, int N) {
  return product_rhs(f, N, true);
}

TrivariateSeries boissiere_original_rhs(const CoefficientFamily& f, int N) {
  return product_rhs(f, N, false);
}

std::vector<CheckResult> specialization_checks(const CoefficientFamily& f, int N) {
  const TrivariateSeries rhs = corrected_conjecture_rhs(f, N);
  std::vector<CheckResult> out;

  // (a) x = s^{-1}, y = s: the collapse y - x of the trivariate product must be
  // the Hochschild generating series assembled on (hh, t) directly.
  GradedDimension hh_assembled(hht_axes());
  for (const SymQuotResult& r : hh_series_product(f, N)) {
    hh_assembled = direct_sum(hh_assembled, append_axis(r.dims, "t", r.n));
  }
  out.push_back(compare_series("x = s^{-1}, y = s collapse equals the Hochschild series",
                               collapse(rhs, xyt_to_hht()), hh_assembled));

  // (b) x = 0: only k = 1, p = 0 factors survive, leaving Sym of the p = 0
  // column placed at t^1.
  const AxisSystem yt_axes{"y", "t"};
  const GradedDimension column =
      rename_axes(slice(f.table(1), "p", 0), AxisSystem{"y"});
  GradedDimension column_sym(yt_axes);
  for (int n = 0; n <= N; ++n) {
    column_sym = direct_sum(column_sym, append_axis(sym_n(column, n, SuperAxes{"y"}), "t", n));
  }
  out.push_back(compare_series("x = 0 slice equals Sym of the section column",
                               slice(rhs, "x", 0), column_sym));

  // (c) y = 0: only k = 1, q = 0 factors survive; expand the binomial product
  // over the q = 0 column by hand.
  const AxisSystem xt_axes{"x", "t"};
  std::map<std::pair<int, int>, Integer> poly{{{0, 0}, Integer(1)}};
  for (const auto& [deg, mult] : f.table(1).support()) {
    if (deg[1] != 0) continue;
    const int p = deg[0];
    std::map<std::pair<int, int>, Integer> factor;
    if (p % 2 != 0) {
      for (long a = 0; a <= N && Integer(a) <= mult; ++a) {
        factor[{p * static_cast<int>(a), static_cast<int>(a)}] = binomial(mult, a);
      }
    } else {
      for (long a = 0; a <= N; ++a) {
        factor[{p * static_cast<int>(a), static_cast<int>(a)}] = binomial(mult + a - 1, a);
      }
    }
    std::map<std::pair<int, int>, Integer> next;
    for (const auto& [da, ca] : poly) {
      for (const auto& [db, cb] : factor) {
        if (da.second + db.second > N) continue;
        next[{da.first + db.first, da.second + db.second}] += ca * cb;
      }
    }
    poly = std::move(next);
  }
  GradedDimension binomial_product(xt_axes);
  for (const auto& [d, c] : poly) binomial_product.add({d.first, d.second}, c);
  out.push_back(compare_series("y = 0 slice equals the binomial section product",
                               slice(rhs, "y", 0), binomial_product));
  return out;
}

namespace {

// Signed series in (y, t) with exact rational coefficients, truncated at t^N.
using SignedSeries = std::map<std::pair<int, int>, Rational>;

void prune(SignedSeries& s) {
  for (auto it = s.begin(); it != s.end();) {
    it = (it->second == 0) ? s.erase(it) : std::next(it);
  }
}

SignedSeries multiply(const SignedSeries& a, const SignedSeries& b, int N) {
  SignedSeries out;
  for (const auto& [da, ca] : a) {
    for (const auto& [db, cb] : b) {
      if (da.second + db.second > N) continue;
      out[{da.first + db.first, da.second + db.second}] += ca * cb;
    }
  }
  prune(out);
  return out;
}

}  // namespace

std::vector<CheckResult> chi_y_identity(const CoefficientFamily& f, int N) {
  const TrivariateSeries rhs = corrected_conjecture_rhs(f, N);

  // x -> -y, y -> -1: the monomial c x^a y^b t^k becomes c (-1)^{a+b} y^a t^k.
  SignedSeries specialized;
  for (const auto& [d, c] : rhs.support()) {
    const Rational value = (d[0] + d[1]) % 2 == 0 ? Rational(c) : -Rational(c);
    specialized[{d[0], d[2]}] += value;
  }
  prune(specialized);

  // exp(sum_m t^m/m sum_k (t y)^{(k-1) m} chi_{-y^m}(table_k)) with
  // chi_{-y^m}(table_k) = sum_p (-1)^p y^{m p} sum_q (-1)^q h^{p,q}(table_k).
  SignedSeries exponent;
  for (int m = 1; m <= N; ++m) {
    for (int k = 1; k * m <= N; ++k) {
      for (const auto& [d, c] : f.table(k).support()) {
        const int sign = (d[0] + d[1]) % 2 == 0 ? 1 : -1;
        exponent[{(k - 1) * m + m * d[0], k * m}] += Rational(sign * c) / m;
      }
    }
  }
  prune(exponent);

  SignedSeries expanded{{{0, 0}, Rational(1)}};
  SignedSeries power{{{0, 0}, Rational(1)}};
  Rational inv_factorial(1);
  for (int r = 1; r <= N; ++r) {
    power = multiply(power, exponent, N);
    if (power.empty()) break;
    inv_factorial /= r;
    for (const auto& [d, c] : power) expanded[d] += c * inv_factorial;
  }
  prune(expanded);

  CheckResult r{"chi_y specialization equals the exponential of twisted chi_y genera", true, ""};
  if (specialized != expanded) {
    r.ok = false;
    std::map<std::pair<int, int>, std::pair<Rational, Rational>> merged;
    for (const auto& [d, c] : specialized) merged[d].first = c;
    for (const auto& [d, c] : expanded) merged[d].second = c;
    for (const auto& [d, pair] : merged) {
      if (pair.first != pair.second) {
        std::ostringstream detail;
        detail << "y^" << d.first << " t^" << d.second << ": " << pair.first << " vs "
               << pair.second;
        r.detail = detail.str();
        break;
      }
    }
  }
  return {r};
}

DeformationSummary deformation_summary(const VarietyData& s, int n) {
  if (s.dim != 2) {
    throw std::invalid_argument(s.name + ": deformation bookkeeping needs a surface");
  }
  if (n < 2) throw std::invalid_argument("deformation bookkeeping covers n >= 2 only");
  const GradedDimension& structure = s.hodge_diamond();
  const GradedDimension& anticanonical = s.omega_table(-1);

  // h^q(S, T) = h^{1,q}(omega^{-1}) and h^0(S, omega^{-1}) = h^{0,0}(omega^{-1}).
  const Integer h0_t = anticanonical.at({1, 0});
  const Integer h1_t = anticanonical.at({1, 1});
  const Integer h0_anti = anticanonical.at({0, 0});
  const Integer h1_o = structure.at({0, 1});
  const Integer h2_o = structure.at({0, 2});

  DeformationSummary r;
  r.h0_tangent = h0_t;
  r.h1_tangent = h1_t + h0_t * h1_o + h0_anti;
  r.h2_structure = h2_o + binomial(h1_o, 2);
  r.h0_bivectors = binomial(h0_t, 2) + h0_anti;

  const GradedDimension invariants = hs_sym(s, 0, n).dims;
  r.hh1 = invariants.at({1});
  r.hh2 = invariants.at({2});

  const ClosedLowDegrees closed = closed_hh1_hh2(s, n);
  if (closed.hh1 != r.hh1 || closed.hh2 != r.hh2) {
    throw std::logic_error(s.name + ": closed low-degree forms disagree with the partition sum");
  }
  if (r.hh1 != h0_t + h1_o) {
    throw std::logic_error(s.name + ": h^0(T) + h^1(O) = " + Integer(h0_t + h1_o).str() +
                           " does not match the degree-1 invariants " + r.hh1.str());
  }
  if (r.h1_tangent + r.h2_structure + r.h0_bivectors != r.hh2) {
    throw std::logic_error(s.name +
                           ": tangent, structure and bivector pieces do not reassemble into the "
                           "degree-2 invariants " +
                           r.hh2.str());
  }
  return r;
}

GradedDimension fock_space(const GradedDimension& v, int N) {
  if (N < 0) throw std::invalid_argument("series need N >= 0");
  if (!(v.axes() == hh_axes())) {
    throw std::invalid_argument("Fock input must live on the Hochschild axis");
  }
  GradedDimension generators(hht_axes());
  for (int m = 1; m <= N; ++m) generators = direct_sum(generators, append_axis(v, "t", m));
  return sym_total(generators, SuperAxes{"hh"}, TruncationWindow::upto(hht_axes(), "t", N));
}

std::vector<CheckResult> sod_fock_check(const GradedDimension& a, const GradedDimension& b,
                                        int N) {
  const GradedDimension fock_a = fock_space(a, N);
  const GradedDimension fock_b = fock_space(b, N);
  const GradedDimension fock_sum = fock_space(direct_sum(a, b), N);

  std::vector<CheckResult> out;
  out.push_back(compare_series(
      "Fock of the direct sum factors through the pieces",
      fock_sum, tensor(fock_a, fock_b, TruncationWindow::upto(hht_axes(), "t", N))));

  bool slices_ok = true;
  std::string detail;
  for (int n = 0; n <= N && slices_ok; ++n) {
    GradedDimension assembled(hh_axes());
    for (int i = 0; i <= n; ++i) {
      assembled =
          direct_sum(assembled, tensor(slice(fock_a, "t", i), slice(fock_b, "t", n - i)));
    }
    const CheckResult piece =
        compare_series("slice", slice(fock_sum, "t", n), assembled);
    if (!piece.ok) {
      slices_ok = false;
      detail = "t^" + std::to_string(n) + ": " + piece.detail;
    }
  }
  out.push_back({"Kunneth assembly of the Fock slices", slices_ok, detail});
  return out;
}

}  // namespace symquot
