#pragma once

#include "symquot/multigraded.hpp"
#include "symquot/partitions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symquot {

// Hard limits for the brute-force verifiers. Exceeding one is an error, never a
// silent truncation; callers that want to skip oversized cases catch it.
inline constexpr int kMaxSymN = 6;
inline constexpr int kMaxSymGenerators = 12;
inline constexpr long kMaxGroupOrder = 720;
inline constexpr long kMaxFixedMonomials = 100000;
inline constexpr int kMaxInertiaN = 5;

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signals a sign bug: group averaging produced a fractional or negative dimension.
class NonIntegralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit basis with one labelled generator per dimension; the signed
// counterpart of a GradedDimension, used where Koszul signs must be tracked
// generator by generator instead of through a product formula.
struct SignedBasis {
  AxisSystem axes;
  std::vector<std::pair<std::string, Degree>> generators;

  static SignedBasis from_series(const GradedDimension& v);
  GradedDimension series() const;

  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

// Multiset enumeration of Sym^n: odd-|.|_K generators may appear at most once,
// even ones without restriction. The independent check of multigraded::sym_n.
GradedDimension sym_bruteforce(const SignedBasis& b, int n, const SuperAxes& k_axes);

std::vector<Permutation> symmetric_group(int n);
std::vector<Permutation> cyclic_group(int n);
// The product of symmetric groups on consecutive index blocks of these sizes.
std::vector<Permutation> young_group(const std::vector<int>& block_sizes);

// Dimension of the G-invariants of factors[0] x ... x factors[n-1], where each
// permutation acts by moving tensor slots (slot j to slot g(j)) with the Koszul
// sign of the reordering. Computed by averaging signed traces over the group;
// traces are counted on fixed monomials, so the result is exact and any
// non-integral or negative average aborts.
GradedDimension invariants_by_trace(const std::vector<SignedBasis>& factors,
                                    const std::vector<Permutation>& group,
                                    const SuperAxes& k_axes);
GradedDimension invariants_by_trace(const SignedBasis& b, int n,
                                    const std::vector<Permutation>& group,
                                    const SuperAxes& k_axes);

// Full conjugacy-class sum: for each partition nu of n, the Young-group
// invariants of the tensor product of tables[i-1]^{(x lambda_i)}, summed over
// all nu with no class-size weighting. tables[i-1] is the (already
// cyclic-invariant) coefficient table attached to parts of size i.
GradedDimension inertia_sum_bruteforce(const std::vector<GradedDimension>& tables, int n,
                                       const SuperAxes& k_axes);

}  // namespace symquot
