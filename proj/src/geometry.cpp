#include "symquot/geometry.hpp"

#include "symquot/bwb.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symquot {

namespace {

int reduce_mod(int m, int order) { return ((m % order) + order) % order; }

std::string table_desc(int m) { return "omega power " + std::to_string(m); }

}  // namespace

bool VarietyData::has_omega_table(int m) const {
  if (omega_tables.count(m) > 0) return true;
  if (omega_order > 0) {
    const int r = reduce_mod(m, omega_order);
    for (const auto& [stored, table] : omega_tables) {
      (void)table;
      if (reduce_mod(stored, omega_order) == r) return true;
    }
  }
  return false;
}

const GradedDimension& VarietyData::omega_table(int m) const {
  auto it = omega_tables.find(m);
  if (it != omega_tables.end()) return it->second;
  if (omega_order > 0) {
    const int r = reduce_mod(m, omega_order);
    for (const auto& [stored, table] : omega_tables) {
      if (reduce_mod(stored, omega_order) == r) return table;
    }
  }
  throw std::invalid_argument(name + ": no twisted Hodge table stored for " + table_desc(m));
}

const GradedDimension& VarietyData::line_bundle_table(const std::string& label, int k) const {
  auto lit = line_bundles.find(label);
  if (lit == line_bundles.end()) {
    throw std::invalid_argument(name + ": no line bundle named '" + label + "'");
  }
  auto it = lit->second.find(k);
  if (it == lit->second.end()) {
    throw std::invalid_argument(name + ": line bundle '" + label + "' has no table for power " +
                                std::to_string(k));
  }
  return it->second;
}

namespace {

// Every stored table lives on the (p, q) axes and is supported in the box [0, d]^2.
void check_box(const std::string& owner, const GradedDimension& table, int dim,
               const std::string& what) {
  if (table.axes() != pq_axes()) {
    throw std::invalid_argument(owner + ": table for " + what + " is not graded by (p, q)");
  }
  for (const auto& [deg, mult] : table.support()) {
    (void)mult;
    if (deg[0] < 0 || deg[0] > dim || deg[1] < 0 || deg[1] > dim) {
      throw std::invalid_argument(owner + ": table for " + what + " has support at (p, q) = (" +
                                  std::to_string(deg[0]) + ", " + std::to_string(deg[1]) +
                                  ") outside the box [0, " + std::to_string(dim) + "]^2");
    }
  }
}

}  // namespace

void validate(const VarietyData& x) {
  if (x.dim < 1) throw std::invalid_argument(x.name + ": dimension must be at least 1");
  if (x.omega_order < 0) {
    throw std::invalid_argument(x.name + ": canonical bundle order must be non-negative");
  }
  if (!x.has_omega_table(0)) {
    throw std::invalid_argument(x.name + ": no Hodge diamond stored (omega power 0)");
  }

  for (const auto& [m, table] : x.omega_tables) {
    check_box(x.name, table, x.dim, table_desc(m));
  }
  for (const auto& [label, powers] : x.line_bundles) {
    for (const auto& [k, table] : powers) {
      if (k < 0) {
        throw std::invalid_argument(x.name + ": line bundle '" + label +
                                    "' has a table for negative power " + std::to_string(k));
      }
      check_box(x.name, table, x.dim, "line bundle '" + label + "' power " + std::to_string(k));
    }
  }

  // Tables whose omega powers agree modulo the order of omega must coincide.
  if (x.omega_order > 0) {
    for (auto i = x.omega_tables.begin(); i != x.omega_tables.end(); ++i) {
      for (auto j = std::next(i); j != x.omega_tables.end(); ++j) {
        if (reduce_mod(i->first, x.omega_order) != reduce_mod(j->first, x.omega_order)) continue;
        if (!(i->second == j->second)) {
          throw std::invalid_argument(
              x.name + ": tables for omega powers " + std::to_string(i->first) + " and " +
              std::to_string(j->first) + " disagree although the powers are congruent mod " +
              std::to_string(x.omega_order));
        }
      }
    }
  }

  // Twisted Serre duality: h^{p,q}(omega^m) = h^{d-p,d-q}(omega^{-m}) whenever both sides
  // are stored.
  for (const auto& [m, table] : x.omega_tables) {
    if (!x.has_omega_table(-m)) continue;
    const GradedDimension& dual = x.omega_table(-m);
    for (int p = 0; p <= x.dim; ++p) {
      for (int q = 0; q <= x.dim; ++q) {
        const Integer lhs = table.at({p, q});
        const Integer rhs = dual.at({x.dim - p, x.dim - q});
        if (lhs != rhs) {
          throw std::invalid_argument(
              x.name + ": twisted Serre duality fails, h^{" + std::to_string(p) + "," +
              std::to_string(q) + "}(omega^" + std::to_string(m) + ") = " + lhs.str() +
              " but h^{" + std::to_string(x.dim - p) + "," + std::to_string(x.dim - q) +
              "}(omega^" + std::to_string(-m) + ") = " + rhs.str());
        }
      }
    }
  }
}

HSTable hs_of_variety(const VarietyData& x, int k) {
  const GradedDimension& table = x.omega_table(k - 1);
  GradedDimension out(hh_axes());
  for (const auto& [deg, mult] : table.support()) {
    const int j = (deg[1] - deg[0]) - (k - 1) * x.dim;
    out.add({j}, mult);
  }
  return HSTable{k, std::move(out)};
}

CoefficientFamily serre_family(const VarietyData& x, int k, int max_i) {
  if (max_i < 1) throw std::invalid_argument("coefficient family needs at least one table");
  CoefficientFamily fam;
  fam.provenance = x.name + ": omega^{" + std::to_string(k - 1) + " i}";
  const bool odd_total = ((k - 1) * x.dim) % 2 != 0;
  for (int i = 1; i <= max_i; ++i) {
    if (odd_total && i % 2 == 0) {
      // Sign representation forces vanishing when the shift is odd and the cycle is even.
      fam.tables.push_back(GradedDimension(pq_axes()));
    } else {
      fam.tables.push_back(x.omega_table((k - 1) * i));
    }
    fam.shifts.push_back((k - 1) * i * x.dim);
  }
  return fam;
}

CoefficientFamily line_bundle_family(const VarietyData& x, const std::string& label, int max_i) {
  if (max_i < 1) throw std::invalid_argument("coefficient family needs at least one table");
  CoefficientFamily fam;
  fam.provenance = x.name + ": '" + label + "' powers";
  for (int i = 1; i <= max_i; ++i) {
    fam.tables.push_back(x.line_bundle_table(label, i));
    fam.shifts.push_back(0);
  }
  return fam;
}

CoefficientFamily canonical_power_family(const VarietyData& x, int e, int max_i) {
  if (max_i < 1) throw std::invalid_argument("coefficient family needs at least one table");
  CoefficientFamily fam;
  fam.provenance = x.name + ": omega^{" + std::to_string(e) + " i}";
  for (int i = 1; i <= max_i; ++i) {
    fam.tables.push_back(x.omega_table(e * i));
    fam.shifts.push_back(0);
  }
  return fam;
}

namespace {

GradedDimension bott_table(int n, int degree) {
  GradedDimension table(pq_axes());
  for (int p = 0; p <= n; ++p) {
    for (const auto& [q, mult] : bott(p, degree, n)) {
      table.add({p, q}, mult);
    }
  }
  return table;
}

}  // namespace

VarietyData preset_projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective space needs positive dimension");
  VarietyData x;
  x.name = "p" + std::to_string(n);
  x.dim = n;
  x.omega_order = 0;
  for (int m = -14; m <= 14; ++m) {
    x.omega_tables[m] = bott_table(n, -(n + 1) * m);
  }
  const int hyperplane_power = (n == 2) ? 3 : 1;
  const std::string label = "O" + std::to_string(hyperplane_power);
  for (int k = 0; k <= 9; ++k) {
    x.line_bundles[label][k] = bott_table(n, hyperplane_power * k);
  }
  return x;
}

namespace {

// h^q of the line bundle (pullback from the Albanese elliptic curve) that the m-th power of
// the eigensheaf decomposition of Omega^p twists by; non-zero only in the listed residue
// classes of the power modulo the order.
int bielliptic_summand(int power, int q, int order) {
  const int r = reduce_mod(power, order);
  const bool trivial = r == 0;
  const bool canonical_like = r == order - 1;
  switch (q) {
    case 0: return trivial ? 1 : 0;
    case 1: return (trivial ? 1 : 0) + (canonical_like ? 1 : 0);
    case 2: return canonical_like ? 1 : 0;
    default: return 0;
  }
}

}  // namespace

VarietyData preset_bielliptic(int order) {
  if (order != 2 && order != 3 && order != 4 && order != 6) {
    throw std::invalid_argument("bielliptic surfaces have canonical order 2, 3, 4 or 6");
  }
  VarietyData x;
  x.name = "bielliptic" + std::to_string(order);
  x.dim = 2;
  x.omega_order = order;
  for (int m = 0; m < order; ++m) {
    GradedDimension table(pq_axes());
    // Omega^1 splits off the Albanese direction: omega^m Omega^p is a sum of the pullback
    // line bundles with powers -m (from Omega^0 parts) and -m-1 (from the fibre direction).
    for (int q = 0; q <= 2; ++q) {
      table.add({0, q}, bielliptic_summand(-m, q, order));
      table.add({1, q}, bielliptic_summand(-m, q, order) + bielliptic_summand(-m - 1, q, order));
      table.add({2, q}, bielliptic_summand(-m - 1, q, order));
    }
    x.omega_tables[m] = table;
  }
  return x;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "p1", "p2", "p3", "bielliptic2", "bielliptic3", "bielliptic4", "bielliptic6"};
  return names;
}

VarietyData preset(const std::string& name) {
  if (name == "p1") return preset_projective_space(1);
  if (name == "p2") return preset_projective_space(2);
  if (name == "p3") return preset_projective_space(3);
  if (name == "bielliptic2") return preset_bielliptic(2);
  if (name == "bielliptic3") return preset_bielliptic(3);
  if (name == "bielliptic4") return preset_bielliptic(4);
  if (name == "bielliptic6") return preset_bielliptic(6);
  std::string known;
  for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
  throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json table_to_matrix(const GradedDimension& table, int dim) {
  ordered_json rows = ordered_json::array();
  for (int p = 0; p <= dim; ++p) {
    ordered_json row = ordered_json::array();
    for (int q = 0; q <= dim; ++q) {
      row.push_back(table.at({p, q}).convert_to<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GradedDimension matrix_to_table(const ordered_json& rows, int dim, const std::string& what) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim + 1)) {
    throw std::invalid_argument(what + ": expected " + std::to_string(dim + 1) + " rows");
  }
  GradedDimension table(pq_axes());
  for (int p = 0; p <= dim; ++p) {
    const auto& row = rows[static_cast<std::size_t>(p)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim + 1)) {
      throw std::invalid_argument(what + ": row " + std::to_string(p) + " must have " +
                                  std::to_string(dim + 1) + " entries");
    }
    for (int q = 0; q <= dim; ++q) {
      const auto& cell = row[static_cast<std::size_t>(q)];
      if (!cell.is_number_integer()) {
        throw std::invalid_argument(what + ": entry at (p, q) = (" + std::to_string(p) + ", " +
                                    std::to_string(q) + ") is not an integer");
      }
      const long long value = cell.get<long long>();
      if (value < 0) {
        throw std::invalid_argument(what + ": entry at (p, q) = (" + std::to_string(p) + ", " +
                                    std::to_string(q) + ") is negative");
      }
      table.add({p, q}, Integer(value));
    }
  }
  return table;
}

int parse_int_key(const std::string& key, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": key '" + key + "' is not an integer");
  }
}

}  // namespace

VarietyData variety_from_json_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("variety input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("variety input must be a JSON object");
  for (const char* field : {"name", "dim", "omega_order", "omega_tables"}) {
    if (!doc.contains(field)) {
      throw std::invalid_argument(std::string("variety input is missing field '") + field + "'");
    }
  }

  VarietyData x;
  if (!doc["name"].is_string()) throw std::invalid_argument("field 'name' must be a string");
  x.name = doc["name"].get<std::string>();
  if (!doc["dim"].is_number_integer()) {
    throw std::invalid_argument("field 'dim' must be an integer");
  }
  x.dim = doc["dim"].get<int>();
  if (!doc["omega_order"].is_number_integer()) {
    throw std::invalid_argument("field 'omega_order' must be an integer");
  }
  x.omega_order = doc["omega_order"].get<int>();

  if (!doc["omega_tables"].is_object()) {
    throw std::invalid_argument("field 'omega_tables' must be an object keyed by omega power");
  }
  for (const auto& [key, matrix] : doc["omega_tables"].items()) {
    const int m = parse_int_key(key, "omega_tables");
    x.omega_tables[m] = matrix_to_table(matrix, x.dim, x.name + ": " + table_desc(m));
  }

  if (doc.contains("line_bundles")) {
    if (!doc["line_bundles"].is_object()) {
      throw std::invalid_argument("field 'line_bundles' must be an object keyed by label");
    }
    for (const auto& [label, powers] : doc["line_bundles"].items()) {
      if (!powers.is_object()) {
        throw std::invalid_argument("line bundle '" + label +
                                    "' must map powers to dimension tables");
      }
      for (const auto& [key, matrix] : powers.items()) {
        const int k = parse_int_key(key, "line bundle '" + label + "'");
        x.line_bundles[label][k] = matrix_to_table(
            matrix, x.dim, x.name + ": line bundle '" + label + "' power " + std::to_string(k));
      }
    }
  }

  validate(x);
  return x;
}

std::string variety_to_json_text(const VarietyData& x) {
  ordered_json doc;
  doc["name"] = x.name;
  doc["dim"] = x.dim;
  doc["omega_order"] = x.omega_order;
  ordered_json tables = ordered_json::object();
  for (const auto& [m, table] : x.omega_tables) {
    tables[std::to_string(m)] = table_to_matrix(table, x.dim);
  }
  doc["omega_tables"] = std::move(tables);
  if (!x.line_bundles.empty()) {
    ordered_json bundles = ordered_json::object();
    for (const auto& [label, powers] : x.line_bundles) {
      ordered_json entry = ordered_json::object();
      for (const auto& [k, table] : powers) {
        entry[std::to_string(k)] = table_to_matrix(table, x.dim);
      }
      bundles[label] = std::move(entry);
    }
    doc["line_bundles"] = std::move(bundles);
  }
  return doc.dump(2) + "\n";
}

VarietyData load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open variety file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return variety_from_json_text(buffer.str());
}

}  // namespace symquot
