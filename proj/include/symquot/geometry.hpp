#pragma once

#include "symquot/multigraded.hpp"

#include <map>
#include <string>
#include <vector>

namespace symquot {

inline const AxisSystem& pq_axes() {
  static const AxisSystem axes{"p", "q"};
  return axes;
}

inline const AxisSystem& hh_axes() {
  static const AxisSystem axes{"hh"};
  return axes;
}

// The sole geometric input: the dimension d of X together with the twisted
// Hodge tables h^{p,q}(X, omega^m) = h^q(X, Omega^p (x) omega^m), and
// optionally tables for powers of further line bundles. omega_order r > 0
// declares omega^r = O (tables then looked up modulo r); r = 0 means every
// needed power must be stored explicitly.
struct VarietyData {
  std::string name;
  int dim = 1;
  int omega_order = 0;
  std::map<int, GradedDimension> omega_tables;  // m -> table on (p,q)
  std::map<std::string, std::map<int, GradedDimension>> line_bundles;  // label -> k -> table

  bool has_omega_table(int m) const;
  const GradedDimension& omega_table(int m) const;
  const GradedDimension& line_bundle_table(const std::string& label, int k) const;
  const GradedDimension& hodge_diamond() const { return omega_table(0); }

  friend bool operator==(const VarietyData&, const VarietyData&) = default;
};

// Enforces the input contract: supports inside [0,d]x[0,d], tables constant on
// residue classes when omega is torsion, and twisted Serre duality
// h^{p,q}(omega^m) = h^{d-p,d-q}(omega^{-m}) whenever both powers resolve.
// Violations name the offending table entry.
void validate(const VarietyData& x);

// One conjugacy-class coefficient table per part size i = 1..max_i, each on the
// (p,q) axes, together with the cohomological shift the engine applies on the
// collapsed axis before symmetrizing.
struct CoefficientFamily {
  std::string provenance;
  std::vector<GradedDimension> tables;  // index i-1
  std::vector<int> shifts;              // index i-1

  int max_i() const { return static_cast<int>(tables.size()); }
  const GradedDimension& table(int i) const { return tables.at(i - 1); }
  int shift(int i) const { return shifts.at(i - 1); }
};

// One summand of the Hochschild-Serre decomposition: dims of HS_k^j(X) on the
// single axis "hh".
struct HSTable {
  int k = 0;
  GradedDimension dims;
};

// HS_k^j(X) = sum over q-p = j+(k-1)d of h^{p,q}(X, omega^{k-1}); support lies
// in [-kd, 2d-kd].
HSTable hs_of_variety(const VarietyData& x, int k);

// table_i = h^{p,q}(X, omega^{(k-1)i}) with shift (k-1)id, except that the
// table is zero when (k-1)d is odd and i even (the cyclic invariants vanish).
CoefficientFamily serre_family(const VarietyData& x, int k, int max_i);

// table_i = h^{p,q}(X, L^i) for a stored line-bundle label; no vanishing, no shift.
CoefficientFamily line_bundle_family(const VarietyData& x, const std::string& label, int max_i);

// table_i = h^{p,q}(X, omega^{e i}) with no shift; e in {0, 1, -1} covers the
// built-in coefficient choices O, omega, omega^{-1}.
CoefficientFamily canonical_power_family(const VarietyData& x, int e, int max_i);

// P^n with omega-tables over m in [-14, 14] assembled from Bott's formula, plus
// a line bundle ("O1" in degrees 1 and 3, "O3" on the plane) in powers 0..9.
VarietyData preset_projective_space(int n);

// Bielliptic surface whose canonical bundle has the given order (2, 3, 4 or 6);
// tables follow from T = O + alb*L with L torsion of that order.
VarietyData preset_bielliptic(int ord);

// Named presets: p1, p2, p3, bielliptic2, bielliptic3, bielliptic4, bielliptic6.
VarietyData preset(const std::string& name);
const std::vector<std::string>& preset_names();

// JSON round-trip; load validates and names the failing datum on error.
VarietyData load_variety(const std::string& path);
VarietyData variety_from_json_text(const std::string& text);
std::string variety_to_json_text(const VarietyData& x);

}  // namespace symquot
