#pragma once

#include "symquot/multigraded.hpp"

#include <string>
#include <vector>

namespace symquot {

using IntMatrix = std::vector<std::vector<Integer>>;

// Cartan matrix of a finite-dimensional algebra with a directed complete set
// of primitive idempotents: entry (i,j) is dim e_j A e_i. Unitriangular, so
// invertible over the integers with determinant 1.
struct CartanMatrix {
  IntMatrix entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// Throws std::invalid_argument naming the offending entry unless the matrix
// is square, upper triangular, and has unit diagonal.
void validate(const CartanMatrix& a);

// Coxeter matrix C = -A^{-1} A^T, computed exactly over the integers by back
// substitution against the unitriangular A.
IntMatrix coxeter(const CartanMatrix& a);

// Happel's trace formula: for an algebra of finite global dimension,
// sum_i (-1)^i dim HH^i = -tr C.
Integer hh_euler_characteristic(const CartanMatrix& a);

// Cartan matrix of the tilting algebra of Sym^2 P^1 coming from its 3-block
// exceptional collection (5 indecomposable projectives).
CartanMatrix sym2_p1_cartan();

// Hochschild cohomology dimensions (h^0, h^1, h^2) of that algebra: h^0 = 1
// by connectedness, h^1 = dim PGL_2 = 3, and global dimension 2 plus the
// trace formula force h^2 = chi - h^0 + h^1. Throws std::logic_error if the
// trace formula yields a negative h^2.
std::vector<Integer> sym2_p1_series();

// Parses a JSON array of integer arrays into a validated Cartan matrix.
CartanMatrix cartan_from_json_text(const std::string& text);

}  // namespace symquot
