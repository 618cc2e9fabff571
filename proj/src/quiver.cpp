#include "symquot/quiver.hpp"

#include "json.hpp"

#include <stdexcept>
#include <utility>

namespace symquot {

namespace {

std::string entry_desc(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Solves A X = B for unitriangular A by back substitution; everything stays
// integral because the pivots are 1.
IntMatrix solve_unitriangular(const IntMatrix& a, const IntMatrix& b) {
  const int r = static_cast<int>(a.size());
  const int c = static_cast<int>(b.front().size());
  IntMatrix x(r, std::vector<Integer>(c, 0));
  for (int i = r - 1; i >= 0; --i) {
    for (int j = 0; j < c; ++j) {
      Integer value = b[i][j];
      for (int k = i + 1; k < r; ++k) value -= a[i][k] * x[k][j];
      x[i][j] = std::move(value);
    }
  }
  return x;
}

}  // namespace

void validate(const CartanMatrix& a) {
  const int r = a.size();
  if (r == 0) throw std::invalid_argument("Cartan matrix is empty");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(a.entries[i].size()) != r) {
      throw std::invalid_argument("Cartan matrix is not square: row " + std::to_string(i) +
                                  " has " + std::to_string(a.entries[i].size()) +
                                  " entries but there are " + std::to_string(r) + " rows");
    }
    if (a.entries[i][i] != 1) {
      throw std::invalid_argument("Cartan matrix diagonal entry " + entry_desc(i, i) + " is " +
                                  a.entries[i][i].str() + ", expected 1");
    }
    for (int j = 0; j < i; ++j) {
      if (a.entries[i][j] != 0) {
        throw std::invalid_argument("Cartan matrix entry " + entry_desc(i, j) + " = " +
                                    a.entries[i][j].str() +
                                    " lies below the diagonal, expected 0");
      }
    }
  }
}

IntMatrix coxeter(const CartanMatrix& a) {
  validate(a);
  const int r = a.size();
  // C = -A^{-1} A^T: solve A C = -A^T column by column.
  IntMatrix rhs(r, std::vector<Integer>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) rhs[i][j] = -a.entries[j][i];
  }
  return solve_unitriangular(a.entries, rhs);
}

Integer hh_euler_characteristic(const CartanMatrix& a) {
  const IntMatrix c = coxeter(a);
  Integer trace = 0;
  for (int i = 0; i < a.size(); ++i) trace += c[i][i];
  return -trace;
}

CartanMatrix sym2_p1_cartan() {
  CartanMatrix a;
  a.entries = {{1, 0, 2, 3, 1},
               {0, 1, 2, 1, 3},
               {0, 0, 1, 2, 2},
               {0, 0, 0, 1, 0},
               {0, 0, 0, 0, 1}};
  return a;
}

std::vector<Integer> sym2_p1_series() {
  const Integer h0 = 1;  // the algebra is connected
  const Integer h1 = 3;  // outer automorphisms form PGL_2
  const Integer chi = hh_euler_characteristic(sym2_p1_cartan());
  const Integer h2 = chi - h0 + h1;  // global dimension 2, so the series stops here
  if (h2 < 0) {
    throw std::logic_error("Euler characteristic " + chi.str() +
                           " is inconsistent with h^0 = 1, h^1 = 3 in global dimension 2");
  }
  return {h0, h1, h2};
}

CartanMatrix cartan_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("Cartan matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw std::invalid_argument("Cartan matrix file must hold a JSON array of integer arrays");
  }
  CartanMatrix a;
  for (int i = 0; i < static_cast<int>(doc.size()); ++i) {
    const auto& row = doc[i];
    if (!row.is_array()) {
      throw std::invalid_argument("Cartan matrix row " + std::to_string(i) + " is not an array");
    }
    std::vector<Integer> out;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      if (!row[j].is_number_integer()) {
        throw std::invalid_argument("Cartan matrix entry " + entry_desc(i, j) +
                                    " is not an integer");
      }
      out.emplace_back(row[j].get<long long>());
    }
    a.entries.push_back(std::move(out));
  }
  validate(a);
  return a;
}

}  // namespace symquot
