#pragma once

#include "symquot/multigraded.hpp"

#include <map>
#include <vector>

namespace symquot {

Integer factorial(long n);

// A partition nu of n stored by multiplicities: lambda_i copies of the part i,
// sum of i*lambda_i equal to n. Doubles as the cycle type of a permutation.
class CycleType {
 public:
  CycleType() = default;  // empty partition of 0
  explicit CycleType(std::map<int, int> multiplicities);
  static CycleType from_parts(const std::vector<int>& parts);

  int n() const { return n_; }
  const std::map<int, int>& multiplicities() const { return mult_; }
  int multiplicity(int part) const;
  std::vector<int> parts() const;  // weakly decreasing
  int num_parts() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  int n_ = 0;
  std::map<int, int> mult_;  // part -> multiplicity, positive entries only
};

// All partitions of n, each exactly once, in reverse-lexicographic order on the
// weakly decreasing part lists: (n) first, (1,...,1) last.
std::vector<CycleType> partitions_of(int n);

// z_nu = prod_i i^{lambda_i} lambda_i!, the order of the centralizer in S_n.
Integer centralizer_order(const CycleType& c);

// n!/z_nu, the number of permutations of this cycle type.
Integer class_size(const CycleType& c);

// sum_i (i-1) lambda_i, the age of (the conjugacy class of) the cycle type.
int age(const CycleType& c);

// True iff every part is odd (no even i with lambda_i > 0).
bool all_parts_odd(const CycleType& c);

// A permutation of {0,...,n-1} given by its image list.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;  // each orbit in traversal order from its minimum
  CycleType type;
};

OrbitDecomposition orbit_decomposition(const Permutation& g);

}  // namespace symquot
