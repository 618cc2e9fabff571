#include "symquot/bwb.hpp"
#include "symquot/engine.hpp"
#include "symquot/geometry.hpp"
#include "symquot/quiver.hpp"
#include "symquot/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace symquot;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// Raised after a verify suite reported a mismatch; carries the first failure.
struct VerifyFailure {
  std::string message;
};

long long to_ll(const Integer& m) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (m < lo || m > hi) {
    throw std::runtime_error("dimension " + m.str() + " exceeds the JSON integer range");
  }
  return m.convert_to<long long>();
}

std::string degree_key(const Degree& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out;
}

json dims_to_json(const GradedDimension& v) {
  json dims = json::object();
  for (const auto& [d, m] : v.support()) dims[degree_key(d)] = to_ll(m);
  return dims;
}

json axes_to_json(const AxisSystem& axes) {
  json out = json::array();
  for (const auto& name : axes.names()) out.push_back(name);
  return out;
}

// "1 + 8 t + 48 t^2" from a one-axis table; negative exponents print as t^-2.
std::string polynomial_text(const GradedDimension& v, const std::string& var) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [d, m] : v.support()) {
    if (!out.empty()) out += " + ";
    const int e = d[0];
    if (e == 0) {
      out += m.str();
    } else {
      if (m != 1) out += m.str() + " ";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string breakdown_text(const GradedDimension& v, const std::string& indent) {
  std::string out;
  for (const auto& [d, m] : v.support()) {
    out += indent + format_degree(v.axes(), d) + ": " + m.str() + "\n";
  }
  return out;
}

json meta(const char* command) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = json::object();
  j["truncation"] = json::object();
  return j;
}

struct SourceOpts {
  std::string preset_name;
  std::string input_path;
};

void add_source(CLI::App* sub, SourceOpts& s) {
  auto* p = sub->add_option("--preset", s.preset_name,
                            "built-in variety: p1, p2, p3, bielliptic2/3/4/6");
  auto* i = sub->add_option("--input", s.input_path, "variety JSON file");
  p->excludes(i);
  i->excludes(p);
}

VarietyData resolve(const SourceOpts& s) {
  if (!s.preset_name.empty()) return preset(s.preset_name);
  if (!s.input_path.empty()) return load_variety(s.input_path);
  throw CLI::RequiredError("--preset or --input");
}

json source_json(const SourceOpts& s) {
  return s.preset_name.empty() ? json(s.input_path) : json(s.preset_name);
}

struct OutOpts {
  std::string format = "text";
  std::string out_path;
};

void add_output(CLI::App* sub, OutOpts& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out_path, "write the output to a file instead of stdout");
}

void emit(const OutOpts& o, const std::string& text, const json& doc) {
  const std::string payload = o.format == "json" ? doc.dump(2) + "\n" : text;
  if (o.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
  file << payload;
}

// Shared renderer for the hs/hh family of per-n results.
void emit_sym_results(const OutOpts& out, json doc, const std::string& label,
                      const std::vector<SymQuotResult>& results) {
  std::string text;
  doc["axes"] = axes_to_json(hh_axes());
  json rows = json::array();
  for (const SymQuotResult& r : results) {
    text += label + " n = " + std::to_string(r.n) + ": " + polynomial_text(r.dims, "t") + "\n";
    text += breakdown_text(r.dims, "  ");
    text += "  total: " + r.dims.total().str() + "\n";
    json row;
    row["n"] = r.n;
    row["polynomial"] = polynomial_text(r.dims, "t");
    row["dims"] = dims_to_json(r.dims);
    row["total"] = to_ll(r.dims.total());
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  emit(out, text, doc);
}

std::string weight_text(const GLWeight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hochschild-Serre and twisted Hodge series of symmetric quotient stacks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // hs: Hochschild-Serre cohomology of [Sym^n X], straight from the tables.
  SourceOpts hs_src;
  OutOpts hs_out;
  int hs_k = 0, hs_n = 0, hs_max_n = 6;
  bool hs_series = false;
  auto* hs_cmd = app.add_subcommand("hs", "Hochschild-Serre cohomology of [Sym^n X]");
  add_source(hs_cmd, hs_src);
  add_output(hs_cmd, hs_out);
  hs_cmd->add_option("--k", hs_k, "Hochschild-Serre index (0 cohomology, 1 homology)")
      ->required();
  auto* hs_n_opt = hs_cmd->add_option("--n", hs_n, "single symmetric power");
  auto* hs_series_flag = hs_cmd->add_flag("--series", hs_series, "all powers n = 0..max-n");
  hs_cmd->add_option("--max-n", hs_max_n, "series truncation")->needs(hs_series_flag);
  hs_n_opt->excludes(hs_series_flag);
  hs_series_flag->excludes(hs_n_opt);
  hs_cmd->callback([&] {
    if (!hs_series && hs_n_opt->count() == 0) throw CLI::RequiredError("--n or --series");
    const VarietyData x = resolve(hs_src);
    std::vector<SymQuotResult> results;
    for (int n = hs_series ? 0 : hs_n; n <= (hs_series ? hs_max_n : hs_n); ++n) {
      results.push_back(hs_sym(x, hs_k, n));
    }
    json doc = meta("hs");
    doc["inputs"]["variety"] = source_json(hs_src);
    doc["inputs"]["k"] = hs_k;
    if (hs_series) {
      doc["truncation"]["max_n"] = hs_max_n;
    } else {
      doc["inputs"]["n"] = hs_n;
    }
    emit_sym_results(hs_out, std::move(doc), "HS_" + std::to_string(hs_k), results);
  });

  // hh: the same dimensions through the coefficient-family route.
  SourceOpts hh_src;
  OutOpts hh_out;
  int hh_k = 1, hh_n = 0, hh_max_n = 6;
  bool hh_series = false;
  std::string hh_bundle;
  auto* hh_cmd =
      app.add_subcommand("hh", "Hochschild homology of [Sym^n X], optionally with coefficients");
  add_source(hh_cmd, hh_src);
  add_output(hh_cmd, hh_out);
  auto* hh_k_opt = hh_cmd->add_option("--k", hh_k, "Hochschild-Serre index (default 1)");
  auto* hh_bundle_opt =
      hh_cmd->add_option("--line-bundle", hh_bundle, "coefficients in powers of a stored bundle");
  hh_k_opt->excludes(hh_bundle_opt);
  hh_bundle_opt->excludes(hh_k_opt);
  auto* hh_n_opt = hh_cmd->add_option("--n", hh_n, "single symmetric power");
  auto* hh_series_flag = hh_cmd->add_flag("--series", hh_series, "all powers n = 0..max-n");
  hh_cmd->add_option("--max-n", hh_max_n, "series truncation")->needs(hh_series_flag);
  hh_n_opt->excludes(hh_series_flag);
  hh_series_flag->excludes(hh_n_opt);
  hh_cmd->callback([&] {
    if (!hh_series && hh_n_opt->count() == 0) throw CLI::RequiredError("--n or --series");
    const VarietyData x = resolve(hh_src);
    const int top = hh_series ? hh_max_n : hh_n;
    const CoefficientFamily fam = hh_bundle.empty()
                                      ? serre_family(x, hh_k, std::max(top, 1))
                                      : line_bundle_family(x, hh_bundle, std::max(top, 1));
    std::vector<SymQuotResult> results;
    if (hh_series) {
      results = hh_series_product(fam, hh_max_n);
    } else {
      results.push_back(hh_with_coefficients_sym(fam, hh_n));
    }
    json doc = meta("hh");
    doc["inputs"]["variety"] = source_json(hh_src);
    doc["inputs"]["family"] = fam.provenance;
    if (hh_series) {
      doc["truncation"]["max_n"] = hh_max_n;
    } else {
      doc["inputs"]["n"] = hh_n;
    }
    emit_sym_results(hh_out, std::move(doc), "HH", results);
  });

  // hodge-hilb: trivariate twisted Hodge series of the symmetric quotients.
  SourceOpts hilb_src;
  OutOpts hilb_out;
  int hilb_max_n = 6;
  std::string hilb_bundle;
  auto* hilb_cmd = app.add_subcommand(
      "hodge-hilb", "twisted Hodge generating series sum_n t^n h(x,y) of [Sym^n X]");
  add_source(hilb_cmd, hilb_src);
  add_output(hilb_cmd, hilb_out);
  hilb_cmd->add_option("--max-n", hilb_max_n, "series truncation");
  hilb_cmd->add_option("--line-bundle", hilb_bundle,
                       "twist by powers of a stored bundle (default: structure sheaf)");
  hilb_cmd->callback([&] {
    const VarietyData x = resolve(hilb_src);
    const int max_i = std::max(hilb_max_n, 1);
    const CoefficientFamily fam = hilb_bundle.empty()
                                      ? canonical_power_family(x, 0, max_i)
                                      : line_bundle_family(x, hilb_bundle, max_i);
    const TrivariateSeries series = corrected_conjecture_rhs(fam, hilb_max_n);
    std::string text;
    for (int n = 0; n <= hilb_max_n; ++n) {
      const GradedDimension coeff = slice(series, "t", n);
      text += "t^" + std::to_string(n) + ":\n" + breakdown_text(coeff, "  ");
    }
    json doc = meta("hodge-hilb");
    doc["inputs"]["variety"] = source_json(hilb_src);
    doc["inputs"]["family"] = fam.provenance;
    doc["truncation"]["max_n"] = hilb_max_n;
    doc["axes"] = axes_to_json(series.axes());
    doc["dims"] = dims_to_json(series);
    emit(hilb_out, text, doc);
  });

  // boissiere-diff: corrected vs original right-hand side of the conjecture.
  SourceOpts diff_src;
  OutOpts diff_out;
  int diff_max_n = 6;
  std::string diff_bundle;
  auto* diff_cmd = app.add_subcommand(
      "boissiere-diff", "monomials where the corrected series departs from the original one");
  add_source(diff_cmd, diff_src);
  add_output(diff_cmd, diff_out);
  diff_cmd->add_option("--max-n", diff_max_n, "series truncation");
  diff_cmd->add_option("--line-bundle", diff_bundle, "twisting bundle")->required();
  diff_cmd->callback([&] {
    const VarietyData x = resolve(diff_src);
    const CoefficientFamily fam = line_bundle_family(x, diff_bundle, std::max(diff_max_n, 1));
    const TrivariateSeries corrected = corrected_conjecture_rhs(fam, diff_max_n);
    const TrivariateSeries original = boissiere_original_rhs(fam, diff_max_n);
    std::map<Degree, std::pair<Integer, Integer>> merged;
    for (const auto& [d, m] : corrected.support()) merged[d].first = m;
    for (const auto& [d, m] : original.support()) merged[d].second = m;
    std::string text;
    json rows = json::array();
    int count = 0;
    for (const auto& [d, pair] : merged) {
      if (pair.first == pair.second) continue;
      ++count;
      text += format_degree(corrected.axes(), d) + ": " + pair.first.str() + " vs " +
              pair.second.str() + "\n";
      json row;
      row["degree"] = degree_key(d);
      row["corrected"] = to_ll(pair.first);
      row["original"] = to_ll(pair.second);
      rows.push_back(std::move(row));
    }
    text = (count == 0 ? "no differences through t^" + std::to_string(diff_max_n)
                       : std::to_string(count) + " differing monomials through t^" +
                             std::to_string(diff_max_n)) +
           "\n" + text;
    json doc = meta("boissiere-diff");
    doc["inputs"]["variety"] = source_json(diff_src);
    doc["inputs"]["line_bundle"] = diff_bundle;
    doc["truncation"]["max_n"] = diff_max_n;
    doc["axes"] = axes_to_json(corrected.axes());
    doc["differences"] = std::move(rows);
    emit(diff_out, text, doc);
  });

  // deformation: degree <= 2 invariants of Hilb^n of a surface.
  SourceOpts def_src;
  OutOpts def_out;
  int def_n = 2;
  auto* def_cmd =
      app.add_subcommand("deformation", "tangent and bivector cohomology of Hilb^n of a surface");
  add_source(def_cmd, def_src);
  add_output(def_cmd, def_out);
  def_cmd->add_option("--n", def_n, "number of points (default 2)");
  def_cmd->callback([&] {
    const VarietyData x = resolve(def_src);
    const DeformationSummary d = deformation_summary(x, def_n);
    std::string text = "Hilb^" + std::to_string(def_n) + " of " + x.name + ":\n";
    text += "h^0(T) = " + d.h0_tangent.str() + "\n";
    text += "h^1(T) = " + d.h1_tangent.str() + "\n";
    text += "h^2(O) = " + d.h2_structure.str() + "\n";
    text += "h^0(wedge^2 T) = " + d.h0_bivectors.str() + "\n";
    text += "HH^1 = " + d.hh1.str() + "\n";
    text += "HH^2 = " + d.hh2.str() + "\n";
    json doc = meta("deformation");
    doc["inputs"]["variety"] = source_json(def_src);
    doc["inputs"]["n"] = def_n;
    doc["h0_tangent"] = to_ll(d.h0_tangent);
    doc["h1_tangent"] = to_ll(d.h1_tangent);
    doc["h2_structure"] = to_ll(d.h2_structure);
    doc["h0_bivectors"] = to_ll(d.h0_bivectors);
    doc["hh1"] = to_ll(d.hh1);
    doc["hh2"] = to_ll(d.hh2);
    emit(def_out, text, doc);
  });

  // schur-dim: Weyl dimension formula.
  OutOpts schur_out;
  std::vector<int> schur_weight;
  int schur_rank = 0;
  auto* schur_cmd = app.add_subcommand("schur-dim", "dimension of a Schur functor");
  add_output(schur_cmd, schur_out);
  schur_cmd->add_option("--weight", schur_weight, "dominant weight, comma separated")
      ->required()
      ->delimiter(',');
  auto* schur_rank_opt =
      schur_cmd->add_option("--rank", schur_rank, "rank of the space (default: weight length)");
  schur_cmd->callback([&] {
    const int rank = schur_rank_opt->count() ? schur_rank : static_cast<int>(schur_weight.size());
    const Integer dim = schur_dim(schur_weight, rank);
    const std::string text =
        "dim S_" + weight_text(schur_weight) + " of a rank-" + std::to_string(rank) +
        " space = " + dim.str() + "\n";
    json doc = meta("schur-dim");
    doc["inputs"]["weight"] = schur_weight;
    doc["inputs"]["rank"] = rank;
    doc["dim"] = to_ll(dim);
    emit(schur_out, text, doc);
  });

  // bwb: the rho-shift algorithm on Gr(k, n+1).
  OutOpts bwb_out;
  std::vector<int> bwb_ls, bwb_lq;
  int bwb_n = 0;
  auto* bwb_cmd =
      app.add_subcommand("bwb", "cohomology of an irreducible homogeneous bundle on Gr(k, n+1)");
  add_output(bwb_cmd, bwb_out);
  bwb_cmd->add_option("--lambda-s", bwb_ls, "weight on the tautological subbundle")
      ->required()
      ->delimiter(',');
  bwb_cmd->add_option("--lambda-q", bwb_lq, "weight on the quotient bundle")
      ->required()
      ->delimiter(',');
  bwb_cmd->add_option("--n", bwb_n, "ambient projective space dimension")->required();
  bwb_cmd->callback([&] {
    const BWBResult r = bwb_cohomology(BundleWeight{bwb_ls, bwb_lq}, bwb_n);
    std::string text;
    json doc = meta("bwb");
    doc["inputs"]["lambda_s"] = bwb_ls;
    doc["inputs"]["lambda_q"] = bwb_lq;
    doc["inputs"]["n"] = bwb_n;
    doc["zero"] = r.zero;
    if (r.zero) {
      text = "all cohomology vanishes\n";
    } else {
      text = "H^" + std::to_string(r.degree) + ": weight " + weight_text(r.weight) + ", dim " +
             r.dim().str() + "\n";
      doc["degree"] = r.degree;
      doc["weight"] = r.weight;
      doc["dim"] = to_ll(r.dim());
    }
    emit(bwb_out, text, doc);
  });

  // bott: h^q(P^n, Omega^p(j)).
  OutOpts bott_out;
  int bott_p = 0, bott_j = 0, bott_n = 0;
  auto* bott_cmd = app.add_subcommand("bott", "h^q(P^n, Omega^p(j)) for all q");
  add_output(bott_cmd, bott_out);
  bott_cmd->add_option("--p", bott_p, "form degree")->required();
  bott_cmd->add_option("--j", bott_j, "twist")->required();
  bott_cmd->add_option("--n", bott_n, "projective space dimension")->required();
  bott_cmd->callback([&] {
    const std::map<int, Integer> column = bott(bott_p, bott_j, bott_n);
    std::string text;
    json dims = json::object();
    for (const auto& [q, m] : column) {
      text += "h^" + std::to_string(q) + " = " + m.str() + "\n";
      dims[std::to_string(q)] = to_ll(m);
    }
    if (column.empty()) text = "all cohomology vanishes\n";
    json doc = meta("bott");
    doc["inputs"]["p"] = bott_p;
    doc["inputs"]["j"] = bott_j;
    doc["inputs"]["n"] = bott_n;
    doc["dims"] = std::move(dims);
    emit(bott_out, text, doc);
  });

  // quiver: Cartan and Coxeter matrices, trace formula, Hochschild series.
  OutOpts quiver_out;
  std::string quiver_input;
  auto* quiver_cmd =
      app.add_subcommand("quiver", "Coxeter matrix and Euler characteristic of a Cartan matrix");
  add_output(quiver_cmd, quiver_out);
  quiver_cmd->add_option("--input", quiver_input,
                         "Cartan matrix as a JSON array of integer rows "
                         "(default: the Sym^2 P^1 tilting algebra)");
  quiver_cmd->callback([&] {
    CartanMatrix a;
    if (quiver_input.empty()) {
      a = sym2_p1_cartan();
    } else {
      std::ifstream file(quiver_input);
      if (!file) throw std::runtime_error("cannot open Cartan matrix file '" + quiver_input + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      a = cartan_from_json_text(buffer.str());
    }
    const IntMatrix c = coxeter(a);
    Integer trace = 0;
    for (int i = 0; i < a.size(); ++i) trace += c[i][i];
    std::string text = "Cartan matrix: " + std::to_string(a.size()) + " x " +
                       std::to_string(a.size()) + "\n";
    text += "Coxeter matrix -A^{-1} A^T:\n";
    json coxeter_rows = json::array();
    for (const auto& row : c) {
      text += " ";
      json json_row = json::array();
      for (const Integer& entry : row) {
        text += " " + entry.str();
        json_row.push_back(to_ll(entry));
      }
      text += "\n";
      coxeter_rows.push_back(std::move(json_row));
    }
    const Integer chi = -trace;
    text += "tr C = " + trace.str() + "\n";
    text += "Euler characteristic -tr C = " + chi.str() + "\n";
    json doc = meta("quiver");
    doc["inputs"]["cartan"] = quiver_input.empty() ? json("sym2-p1") : json(quiver_input);
    doc["size"] = a.size();
    doc["coxeter"] = std::move(coxeter_rows);
    doc["trace"] = to_ll(trace);
    doc["euler_characteristic"] = to_ll(chi);
    if (quiver_input.empty()) {
      const std::vector<Integer> series = sym2_p1_series();
      GradedDimension poly(AxisSystem{"t"});
      json series_json = json::array();
      for (int i = 0; i < static_cast<int>(series.size()); ++i) {
        poly.add({i}, series[i]);
        series_json.push_back(to_ll(series[i]));
      }
      text += "Hochschild series: " + polynomial_text(poly, "t") + "\n";
      doc["series"] = std::move(series_json);
    }
    emit(quiver_out, text, doc);
  });

  // verify: the cross-check batteries; exit 3 on the first mismatch.
  OutOpts verify_out;
  std::string verify_name;
  int verify_max_n = 4;
  auto* verify_cmd = app.add_subcommand("verify", "run a cross-check suite");
  add_output(verify_cmd, verify_out);
  verify_cmd
      ->add_option("suite", verify_name, "all, three-path, oracle, specializations or fock")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n, "symmetric-power cutoff (default 4)");
  verify_cmd->callback([&] {
    const std::vector<CheckResult> checks = verify_suite(verify_name, verify_max_n);
    std::string text;
    json rows = json::array();
    const CheckResult* first_fail = nullptr;
    int passed = 0;
    for (const CheckResult& c : checks) {
      if (c.ok) {
        ++passed;
        text += "ok " + c.name + (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
      } else {
        if (first_fail == nullptr) first_fail = &c;
        text += "FAIL " + c.name + ": " + c.detail + "\n";
      }
      json row;
      row["name"] = c.name;
      row["ok"] = c.ok;
      row["detail"] = c.detail;
      rows.push_back(std::move(row));
    }
    text += std::to_string(passed) + " of " + std::to_string(checks.size()) + " checks passed\n";
    json doc = meta("verify");
    doc["inputs"]["suite"] = verify_name;
    doc["truncation"]["max_n"] = verify_max_n;
    doc["passed"] = passed;
    doc["failed"] = static_cast<int>(checks.size()) - passed;
    doc["checks"] = std::move(rows);
    emit(verify_out, text, doc);
    if (first_fail != nullptr) {
      throw VerifyFailure{first_fail->name + ": " + first_fail->detail};
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const VerifyFailure& f) {
    std::cerr << "verify failed: " << f.message << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
