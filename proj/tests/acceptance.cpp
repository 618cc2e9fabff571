// Acceptance gate: one line per criterion, PASS or FAIL, exact integer checks
// throughout. Exits non-zero if any criterion fails.

#include "symquot/bwb.hpp"
#include "symquot/engine.hpp"
#include "symquot/geometry.hpp"
#include "symquot/multigraded.hpp"
#include "symquot/quiver.hpp"
#include "symquot/verify.hpp"

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace symquot;

namespace {

int failures = 0;

void criterion(int idx, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " " << label;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

GradedDimension hh_poly(const std::vector<long long>& coeffs, int start = 0) {
  GradedDimension v(hh_axes());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) v.add({start + static_cast<int>(i)}, coeffs[i]);
  }
  return v;
}

bool expect_series(std::string& detail, const std::string& what, const GradedDimension& got,
                   const GradedDimension& want) {
  const CheckResult r = compare_series(what, got, want);
  if (!r.ok) detail = what + ": " + r.detail;
  return r.ok;
}

bool all_ok(std::string& detail, const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.ok) {
      detail = c.name + ": " + c.detail;
      return false;
    }
  }
  return true;
}

VarietyData k3_like() {
  VarietyData x;
  x.name = "k3-like";
  x.dim = 2;
  x.omega_order = 1;
  GradedDimension diamond(pq_axes());
  diamond.add({0, 0}, 1);
  diamond.add({2, 0}, 1);
  diamond.add({0, 2}, 1);
  diamond.add({1, 1}, 20);
  diamond.add({2, 2}, 1);
  x.omega_tables[0] = diamond;
  validate(x);
  return x;
}

// Independent expansion of the classical Hodge-number product
// prod_{m>=1} prod_{p,q} (1 - x^{p+m-1} y^{q+m-1} t^m)^{-h^{p,q}} through t^N,
// valid verbatim when every Hodge number sits in even total degree.
GradedDimension classical_product(const GradedDimension& diamond, int N) {
  std::map<Degree, Integer> acc;
  acc[{0, 0, 0}] = 1;
  for (int m = 1; m <= N; ++m) {
    for (const auto& [d, h] : diamond.support()) {
      if ((d[0] + d[1]) % 2 != 0) throw std::logic_error("odd class in an even-type diamond");
      std::map<Degree, Integer> factor;
      for (int a = 0; a * m <= N; ++a) {
        factor[{a * (d[0] + m - 1), a * (d[1] + m - 1), a * m}] = binomial(h + a - 1, a);
      }
      std::map<Degree, Integer> next;
      for (const auto& [da, ca] : acc) {
        for (const auto& [df, cf] : factor) {
          if (da[2] + df[2] > N) continue;
          next[{da[0] + df[0], da[1] + df[1], da[2] + df[2]}] += ca * cf;
        }
      }
      acc = std::move(next);
    }
  }
  GradedDimension out(xyt_axes());
  for (const auto& [d, c] : acc) {
    if (c != 0) out.add(d, c);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "Sym^2 P^1 Hochschild series from geometry and from the tilting algebra", [](std::string& detail) {
    const GradedDimension geom = hs_sym(preset("p1"), 0, 2).dims;
    if (!expect_series(detail, "engine series", geom, hh_poly({1, 3, 3}))) return false;
    const std::vector<Integer> algebra = sym2_p1_series();
    if (algebra != std::vector<Integer>{1, 3, 3}) {
      detail = "algebra series is not (1, 3, 3)";
      return false;
    }
    for (int j = 0; j <= 2; ++j) {
      if (geom.at({j}) != algebra[j]) {
        detail = "engine and algebra disagree at degree " + std::to_string(j);
        return false;
      }
    }
    return true;
  });

  criterion(2, "Hilbert square of the plane: series, polyvector columns and chi = 52", [](std::string& detail) {
    const GradedDimension series = hs_sym(preset("p2"), 0, 2).dims;
    if (!expect_series(detail, "engine series", series, hh_poly({1, 8, 48, 115, 83}))) return false;
    const Hilb2P2HKR hkr = hilb2_p2_hkr();
    if (!expect_series(detail, "column sums", hkr.hochschild, series)) return false;
    const std::vector<std::map<int, Integer>> expected_wedge = {
        {{0, 1}}, {{0, 8}, {1, 10}}, {{0, 38}, {1, 35}}, {{0, 80}, {1, 28}}, {{0, 55}}};
    if (hkr.wedge != expected_wedge) {
      detail = "polyvector columns differ from (1), (8;10), (38;35), (80;28), (55)";
      return false;
    }
    if (hkr.chi_wedge3 != 52) {
      detail = "chi of wedge^3 T is " + hkr.chi_wedge3.str() + ", not 52";
      return false;
    }
    return true;
  });

  criterion(3, "bielliptic Hilbert squares and their input tables from the presets alone", [](std::string& detail) {
    const std::map<int, GradedDimension> hilb2 = {
        {2, hh_poly({1, 2, 3, 8, 12, 8, 3, 2, 1})},
        {3, hh_poly({1, 2, 2, 2, 2, 2, 1})},
        {4, hh_poly({1, 2, 2, 2, 1})},
        {6, hh_poly({1, 2, 2, 2, 1})},
    };
    const std::map<int, GradedDimension> hh_star = {
        {2, hh_poly({1, 2, 2, 2, 1})},
        {3, hh_poly({1, 2, 1})},
        {4, hh_poly({1, 2, 1})},
        {6, hh_poly({1, 2, 1})},
    };
    const std::map<int, GradedDimension> hs_minus1 = {
        {2, hh_poly({2, 4, 2}, 3)},
        {3, hh_poly({1, 2, 1}, 4)},
        {4, GradedDimension(hh_axes())},
        {6, GradedDimension(hh_axes())},
    };
    for (const int ord : {2, 3, 4, 6}) {
      const VarietyData s = preset("bielliptic" + std::to_string(ord));
      const std::string tag = "order " + std::to_string(ord);
      if (!expect_series(detail, tag + " Hilb^2", hs_sym(s, 0, 2).dims, hilb2.at(ord))) return false;
      if (!expect_series(detail, tag + " HH^*(S)", hs_of_variety(s, 0).dims, hh_star.at(ord))) return false;
      if (!expect_series(detail, tag + " HS_{-1}(S)", hs_of_variety(s, -1).dims, hs_minus1.at(ord))) return false;
    }
    return true;
  });

  criterion(4, "corrected vs original series differ in exactly three monomials on (P^2, O(3), n = 2)", [](std::string& detail) {
    const CoefficientFamily fam = line_bundle_family(preset("p2"), "O3", 2);
    const TrivariateSeries corrected = corrected_conjecture_rhs(fam, 2);
    const TrivariateSeries original = boissiere_original_rhs(fam, 2);
    std::map<Degree, std::pair<Integer, Integer>> merged;
    for (const auto& [d, m] : corrected.support()) merged[d].first = m;
    for (const auto& [d, m] : original.support()) merged[d].second = m;
    const std::map<Degree, std::pair<Integer, Integer>> expected = {
        {{1, 1, 2}, {28, 10}}, {{2, 1, 2}, {35, 8}}, {{3, 1, 2}, {10, 1}}};
    std::map<Degree, std::pair<Integer, Integer>> differing;
    for (const auto& [d, pair] : merged) {
      if (pair.first != pair.second) differing[d] = pair;
    }
    if (differing != expected) {
      detail = "found " + std::to_string(differing.size()) + " differing monomials";
      return false;
    }
    return true;
  });

  criterion(5, "three-path identity on every preset for k in {-1,0,1,2}, n <= 4", [](std::string& detail) {
    return all_ok(detail, verify_three_path(4));
  });

  criterion(6, "brute-force oracle matrix for n <= 4 plus 200 randomized Sym instances", [](std::string& detail) {
    return all_ok(detail, verify_oracle(4));
  });

  criterion(7, "specialization suite on every preset and bundle family through t^4", [](std::string& detail) {
    return all_ok(detail, verify_specializations(4));
  });

  criterion(8, "deformation summaries: h^1(T) values and the HH^1/HH^2 reassembly", [](std::string& detail) {
    for (const int ord : {2, 3, 4, 6}) {
      const VarietyData s = preset("bielliptic" + std::to_string(ord));
      const Integer expected = ord == 2 ? 3 : 2;
      for (int n = 2; n <= 4; ++n) {
        const DeformationSummary d = deformation_summary(s, n);
        if (d.h1_tangent != expected) {
          detail = s.name + " n=" + std::to_string(n) + ": h^1(T) = " + d.h1_tangent.str() +
                   ", expected " + expected.str();
          return false;
        }
      }
    }
    if (deformation_summary(preset("p2"), 2).h1_tangent != 10) {
      detail = "p2 n=2: h^1(T) != 10";
      return false;
    }
    for (const std::string name : {"p2", "bielliptic2", "bielliptic3", "bielliptic4", "bielliptic6"}) {
      const VarietyData s = preset(name);
      for (int n = 2; n <= 4; ++n) {
        const DeformationSummary d = deformation_summary(s, n);
        const GradedDimension hh = hs_sym(s, 0, n).dims;
        if (d.hh1 != hh.at({1}) || d.hh2 != hh.at({2})) {
          detail = name + " n=" + std::to_string(n) + ": summary HH does not match the engine";
          return false;
        }
      }
    }
    return true;
  });

  criterion(9, "Schur dimensions at rank 3 and the 38 = 10 + 10 + 8 + 10 assembly", [](std::string& detail) {
    const std::map<GLWeight, Integer> expected = {
        {{1, 0, -1}, 8}, {{1, 1, -2}, 10}, {{2, 1, -3}, 35}, {{2, -1, -1}, 10}};
    for (const auto& [weight, dim] : expected) {
      if (schur_dim(weight, 3) != dim) {
        detail = "wrong dimension for a rank-3 Schur functor";
        return false;
      }
    }
    const Integer assembled = 2 * schur_dim({1, 1, -2}, 3) + schur_dim({1, 0, -1}, 3) +
                              schur_dim({2, -1, -1}, 3);
    if (assembled != 38) {
      detail = "assembly gives " + assembled.str() + ", not 38";
      return false;
    }
    return true;
  });

  criterion(10, "Fock factorization for HH(P^1) + HH(P^2) and the classical K3-type expansion", [](std::string& detail) {
    const GradedDimension hh_p1 = hs_of_variety(preset("p1"), 0).dims;
    const GradedDimension hh_p2 = hs_of_variety(preset("p2"), 0).dims;
    if (!all_ok(detail, sod_fock_check(hh_p1, hh_p2, 4))) return false;

    const VarietyData k3 = k3_like();
    const GradedDimension classical = classical_product(k3.hodge_diamond(), 3);
    const TrivariateSeries engine_series =
        corrected_conjecture_rhs(canonical_power_family(k3, 0, 3), 3);
    if (!expect_series(detail, "K3-type trivariate series", engine_series, classical)) return false;
    if (classical.at({1, 1, 2}) != 21) {
      detail = "h^{1,1}(Hilb^2) = " + classical.at({1, 1, 2}).str() + ", not 21";
      return false;
    }
    const CollapseMap to_hht(xyt_axes(), {{"hh", {{"y", 1}, {"x", -1}}}, {"t", {{"t", 1}}}});
    const GradedDimension collapsed = collapse(classical, to_hht);
    for (int n = 0; n <= 3; ++n) {
      if (!expect_series(detail, "K3-type homology slice t^" + std::to_string(n),
                         slice(collapsed, "t", n), hs_sym(k3, 1, n).dims)) {
        return false;
      }
    }
    return true;
  });

  std::cout << "acceptance: " << (10 - failures) << " of 10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
