#pragma once

#include "symquot/multigraded.hpp"

#include <map>
#include <vector>

namespace symquot {

// A GL(r) weight; dominant means non-increasing entries.
using GLWeight = std::vector<int>;

bool is_dominant(const GLWeight& lambda);

// Weyl dimension formula for the Schur functor S_lambda of a rank-r space:
// prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i). Exact.
Integer schur_dim(const GLWeight& lambda, int r);

// The irreducible homogeneous bundle S_{lambda_s}(S) (x) S_{lambda_q}(Q) on
// Gr(k, n+1), where S is the rank-k tautological subbundle and Q the quotient.
struct BundleWeight {
  GLWeight lambda_s;
  GLWeight lambda_q;
};

// Bott's algorithm output: either everything vanishes, or exactly one
// cohomology degree survives and carries the irreducible GL(n+1) module of the
// stated dominant weight.
struct BWBResult {
  bool zero = true;
  int degree = 0;
  GLWeight weight;  // dominant, length n+1

  Integer dim() const {
    return zero ? Integer(0) : schur_dim(weight, static_cast<int>(weight.size()));
  }
};

// The rho-shift algorithm on Gr(k, n+1): concatenate (lambda_q, lambda_s), add
// rho = (n, ..., 0); a repeated entry kills all cohomology, otherwise the
// number of inversions is the surviving degree and sorting minus rho gives the
// weight of H^degree.
BWBResult bwb_cohomology(const BundleWeight& w, int n);

// h^q(P^n, Omega^p(j)) for all q, via bwb_cohomology on Gr(1, n+1) with
// Omega^p(j) = S_{(p-j)}(S) (x) S_{(0,...,0,-1,...,-1)}(Q). At most one q is
// nonzero.
std::map<int, Integer> bott(int p, int j, int n);

// Cohomology of the polyvector fields on the Hilbert square of the plane,
// assembled from the fixed pushforward decompositions along
// Hilb^2 P^2 -> Gr(2,3) and Bott's algorithm.
struct Hilb2P2HKR {
  // wedge[p] maps q to h^q(Hilb^2 P^2, wedge^p T); p = 0..4
  std::vector<std::map<int, Integer>> wedge;
  // sum over p+q = k on the axis "hh": 1, 8, 48, 115, 83
  GradedDimension hochschild;
  Integer chi_wedge3;  // Euler characteristic of wedge^3 T
};

Hilb2P2HKR hilb2_p2_hkr();

}  // namespace symquot
