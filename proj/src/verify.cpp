#include "symquot/verify.hpp"

#include "symquot/geometry.hpp"
#include "symquot/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace symquot {

namespace {

// The coefficient families attached to a preset: every Serre family the
// three-path identity covers, the canonical powers, and the stored bundles.
std::vector<std::pair<std::string, CoefficientFamily>> family_menu(const VarietyData& x,
                                                                   int max_i) {
  std::vector<std::pair<std::string, CoefficientFamily>> out;
  for (int k = -1; k <= 2; ++k) {
    out.emplace_back("serre k=" + std::to_string(k), serre_family(x, k, max_i));
  }
  out.emplace_back("powers of O", canonical_power_family(x, 0, max_i));
  out.emplace_back("powers of omega", canonical_power_family(x, 1, max_i));
  out.emplace_back("powers of omega^{-1}", canonical_power_family(x, -1, max_i));
  for (const auto& [label, tables] : x.line_bundles) {
    out.emplace_back("powers of " + label, line_bundle_family(x, label, max_i));
  }
  return out;
}

// The unshifted sub-menu: the trivariate specializations reject shifted
// families by contract.
std::vector<std::pair<std::string, CoefficientFamily>> unshifted_menu(const VarietyData& x,
                                                                      int max_i) {
  std::vector<std::pair<std::string, CoefficientFamily>> out;
  for (auto& [name, fam] : family_menu(x, max_i)) {
    bool shifted = false;
    for (int i = 1; i <= fam.max_i(); ++i) shifted = shifted || fam.shift(i) != 0;
    if (!shifted) out.emplace_back(name, std::move(fam));
  }
  return out;
}

GradedDimension random_table(std::mt19937& rng, const AxisSystem& axes) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> entries(1, 4);
  GradedDimension v(axes);
  const int count = entries(rng);
  for (int e = 0; e < count; ++e) {
    Degree d(axes.size(), 0);
    for (std::size_t i = 0; i < axes.size(); ++i) d[i] = coord(rng);
    v.add(d, mult(rng));
  }
  return v;
}

}  // namespace

std::vector<CheckResult> verify_three_path(int max_n) {
  std::vector<CheckResult> out;
  for (const auto& name : preset_names()) {
    const VarietyData x = preset(name);
    for (int k = -1; k <= 2; ++k) {
      const CoefficientFamily fam = serre_family(x, k, std::max(max_n, 1));
      const auto series = hh_series_product(fam, max_n);
      CheckResult r{"three-path " + name + " k=" + std::to_string(k) + " (n <= " +
                        std::to_string(max_n) + ")",
                    true, ""};
      for (int n = 0; n <= max_n && r.ok; ++n) {
        const GradedDimension direct = hs_sym(x, k, n).dims;
        for (const auto& [route, dims] :
             {std::pair<const char*, GradedDimension>{"coefficient route",
                                                      hh_with_coefficients_sym(fam, n).dims},
              {"product series", series[n].dims}}) {
          const CheckResult piece = compare_series("", direct, dims);
          if (!piece.ok) {
            r.ok = false;
            r.detail = "n=" + std::to_string(n) + " " + route + ": " + piece.detail;
            break;
          }
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> verify_oracle(int max_n) {
  std::vector<CheckResult> out;
  for (const auto& name : preset_names()) {
    const VarietyData x = preset(name);
    for (const auto& [fname, fam] : family_menu(x, std::max(max_n, 1))) {
      CheckResult r{"oracle inertia " + name + ", " + fname + " (n <= " + std::to_string(max_n) +
                        ")",
                    true, ""};
      std::string notes;
      for (int n = 1; n <= max_n && r.ok; ++n) {
        try {
          const std::vector<GradedDimension> tables(fam.tables.begin(),
                                                    fam.tables.begin() + n);
          const GradedDimension brute = inertia_sum_bruteforce(tables, n, SuperAxes{"p", "q"});
          const CheckResult piece = compare_series("", inertia_hodge_sym(fam, n).dims, brute);
          if (!piece.ok) {
            r.ok = false;
            r.detail = "n=" + std::to_string(n) + ": " + piece.detail;
          }
        } catch (const SizeGuardError& e) {
          if (!notes.empty()) notes += "; ";
          notes += "n=" + std::to_string(n) + " skipped (" + e.what() + ")";
        } catch (const NonIntegralError& e) {
          r.ok = false;
          r.detail = "n=" + std::to_string(n) + ": " + e.what();
        }
      }
      if (r.ok) r.detail = notes;
      out.push_back(std::move(r));
    }
  }

  std::mt19937 rng(271828);
  CheckResult randomized{"oracle randomized Sym (200 instances)", true, ""};
  for (int trial = 0; trial < 200 && randomized.ok; ++trial) {
    const bool two_axes = rng() % 2 == 0;
    const AxisSystem axes = two_axes ? AxisSystem{"a", "b"} : AxisSystem{"a"};
    const GradedDimension v = random_table(rng, axes);
    SuperAxes k_axes;
    switch (rng() % (two_axes ? 4 : 2)) {
      case 1: k_axes = SuperAxes{"a"}; break;
      case 2: k_axes = SuperAxes{"b"}; break;
      case 3: k_axes = SuperAxes{"a", "b"}; break;
      default: break;
    }
    const int n = static_cast<int>(rng() % 6);
    try {
      const CheckResult piece = compare_series(
          "", sym_n(v, n, k_axes), sym_bruteforce(SignedBasis::from_series(v), n, k_axes));
      if (!piece.ok) {
        randomized.ok = false;
        randomized.detail = "instance " + std::to_string(trial) + ": " + piece.detail;
      }
    } catch (const NonIntegralError& e) {
      randomized.ok = false;
      randomized.detail = "instance " + std::to_string(trial) + ": " + e.what();
    }
  }
  out.push_back(std::move(randomized));
  return out;
}

std::vector<CheckResult> verify_specializations(int max_n) {
  std::vector<CheckResult> out;
  for (const auto& name : preset_names()) {
    const VarietyData x = preset(name);
    for (const auto& [fname, fam] : unshifted_menu(x, std::max(max_n, 1))) {
      for (const auto& battery : {specialization_checks(fam, max_n), chi_y_identity(fam, max_n)}) {
        for (const CheckResult& c : battery) {
          out.push_back({name + ", " + fname + ": " + c.name, c.ok, c.detail});
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify_fock(int max_n) {
  std::vector<CheckResult> out;
  for (const auto& name : preset_names()) {
    const VarietyData x = preset(name);
    const GradedDimension fock = fock_space(hs_of_variety(x, 1).dims, max_n);
    CheckResult r{"fock " + name + ": slices match the k=1 series (n <= " +
                      std::to_string(max_n) + ")",
                  true, ""};
    for (int n = 0; n <= max_n && r.ok; ++n) {
      const CheckResult piece =
          compare_series("", slice(fock, "t", n), hs_sym(x, 1, n).dims);
      if (!piece.ok) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + ": " + piece.detail;
      }
    }
    out.push_back(std::move(r));
  }

  const GradedDimension point = GradedDimension::single(hh_axes(), {0}, 1);
  const std::vector<std::pair<std::string, std::pair<GradedDimension, GradedDimension>>> pairs = {
      {"HH(p1) + HH(p2)",
       {hs_of_variety(preset("p1"), 0).dims, hs_of_variety(preset("p2"), 0).dims}},
      {"HH(bielliptic2) + HH(p1)",
       {hs_of_variety(preset("bielliptic2"), 0).dims, hs_of_variety(preset("p1"), 0).dims}},
      {"point + point", {point, point}},
  };
  for (const auto& [pname, ab] : pairs) {
    for (const CheckResult& c : sod_fock_check(ab.first, ab.second, max_n)) {
      out.push_back({"fock sod " + pname + ": " + c.name, c.ok, c.detail});
    }
  }
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"three-path", "oracle", "specializations",
                                                 "fock"};
  return names;
}

std::vector<CheckResult> verify_suite(const std::string& name, int max_n) {
  if (name == "three-path") return verify_three_path(max_n);
  if (name == "oracle") return verify_oracle(max_n);
  if (name == "specializations") return verify_specializations(max_n);
  if (name == "fock") return verify_fock(max_n);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& suite : verify_suite_names()) {
      auto part = verify_suite(suite, max_n);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  std::string known = "all";
  for (const auto& s : verify_suite_names()) known += ", " + s;
  throw std::invalid_argument("unknown verify suite '" + name + "' (known: " + known + ")");
}

}  // namespace symquot
