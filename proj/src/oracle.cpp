#include "symquot/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace symquot {

namespace {

std::string degree_label(const Degree& d, int j) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")#" << j;
  return os.str();
}

void validate_basis(const SignedBasis& b) {
  std::set<std::string> labels;
  for (const auto& [label, d] : b.generators) {
    if (d.size() != b.axes.size()) throw std::invalid_argument("generator degree arity mismatch");
    if (!labels.insert(label).second)
      throw std::invalid_argument("duplicate generator label: " + label);
  }
}

bool is_identity(const Permutation& g) {
  for (int i = 0; i < g.size(); ++i)
    if (g(i) != i) return false;
  return true;
}

}  // namespace

SignedBasis SignedBasis::from_series(const GradedDimension& v) {
  SignedBasis b{v.axes(), {}};
  for (const auto& [d, m] : v.support()) {
    if (m > 10000) throw SizeGuardError("dimension too large for an explicit basis");
    for (long j = 0; j < static_cast<long>(m); ++j)
      b.generators.emplace_back(degree_label(d, static_cast<int>(j)), d);
  }
  return b;
}

GradedDimension SignedBasis::series() const {
  GradedDimension v(axes);
  for (const auto& [label, d] : generators) v.add(d, 1);
  return v;
}

GradedDimension sym_bruteforce(const SignedBasis& b, int n, const SuperAxes& k_axes) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  if (n > kMaxSymN) throw SizeGuardError("sym_bruteforce: n exceeds guard");
  if (static_cast<int>(b.generators.size()) > kMaxSymGenerators)
    throw SizeGuardError("sym_bruteforce: too many generators");
  validate_basis(b);
  const auto mask = k_axes.mask(b.axes);
  GradedDimension out(b.axes);
  // choose a multiplicity for each generator in turn; odd generators cap at 1
  auto rec = [&](auto&& self, std::size_t i, int remaining, const Degree& acc) -> void {
    if (remaining == 0) {
      out.add(acc, 1);
      return;
    }
    if (i == b.generators.size()) return;
    const auto& [label, d] = b.generators[i];
    int cap = degree_parity(d, mask) == 1 ? 1 : remaining;
    Degree cur = acc;
    for (int c = 0; c <= cap && c <= remaining; ++c) {
      self(self, i + 1, remaining - c, cur);
      cur = cur + d;
    }
  };
  rec(rec, 0, n, Degree(b.axes.size(), 0));
  return out;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> cyclic_group(int n) {
  std::vector<Permutation> out;
  for (int j = 0; j < std::max(n, 1); ++j) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = (i + j) % n;
    out.emplace_back(std::move(images));
  }
  return out;
}

std::vector<Permutation> young_group(const std::vector<int>& block_sizes) {
  int n = 0;
  for (int b : block_sizes) {
    if (b < 0) throw std::invalid_argument("negative block size");
    n += b;
  }
  std::vector<Permutation> out = {Permutation::identity(n)};
  int offset = 0;
  for (int b : block_sizes) {
    std::vector<Permutation> next;
    for (const auto& block_perm : symmetric_group(b))
      for (const auto& g : out) {
        std::vector<int> images = g.images();
        for (int i = 0; i < b; ++i) images[offset + i] = offset + block_perm(i);
        next.emplace_back(std::move(images));
      }
    out = std::move(next);
    offset += b;
  }
  return out;
}

GradedDimension invariants_by_trace(const std::vector<SignedBasis>& factors,
                                    const std::vector<Permutation>& group,
                                    const SuperAxes& k_axes) {
  if (group.empty()) throw std::invalid_argument("empty group");
  if (static_cast<long>(group.size()) > kMaxGroupOrder)
    throw SizeGuardError("invariants_by_trace: group order exceeds guard");
  const int n = static_cast<int>(factors.size());
  AxisSystem axes = n > 0 ? factors[0].axes : AxisSystem{};
  for (const auto& f : factors) {
    validate_basis(f);
    if (!(f.axes == axes)) throw std::invalid_argument("axis-system mismatch between factors");
  }
  const auto mask = n > 0 ? k_axes.mask(axes) : std::vector<bool>{};
  for (const auto& g : group) {
    if (g.size() != n) throw std::invalid_argument("group degree does not match factor count");
    for (int j = 0; j < n; ++j)
      if (!(factors[g(j)] == factors[j]))
        throw std::invalid_argument("permutation moves a slot onto a different factor");
  }

  // parity of each generator of each factor, precomputed
  std::vector<std::vector<int>> parity(n);
  for (int j = 0; j < n; ++j)
    for (const auto& [label, d] : factors[j].generators)
      parity[j].push_back(degree_parity(d, mask));

  std::map<Degree, Integer> trace_sum;
  for (const auto& g : group) {
    if (is_identity(g)) {
      // unsigned trace of the identity is the full convolution of the factors
      GradedDimension conv = GradedDimension::unit(axes);
      for (const auto& f : factors) conv = tensor(conv, f.series());
      for (const auto& [d, m] : conv.support()) trace_sum[d] += m;
      continue;
    }
    auto od = orbit_decomposition(g);
    long fixed_count = 1;
    for (const auto& orbit : od.orbits) {
      fixed_count *= static_cast<long>(factors[orbit[0]].generators.size());
      if (fixed_count > kMaxFixedMonomials)
        throw SizeGuardError("invariants_by_trace: fixed-monomial basis exceeds guard");
    }
    // monomials fixed by g are constant on its orbits; enumerate one generator
    // choice per orbit
    std::vector<std::size_t> choice(od.orbits.size(), 0);
    std::vector<int> slot_gen(n, 0);
    while (true) {
      bool admissible = true;
      for (std::size_t o = 0; o < od.orbits.size(); ++o) {
        if (choice[o] >= factors[od.orbits[o][0]].generators.size()) {
          admissible = false;
          break;
        }
        for (int pos : od.orbits[o]) slot_gen[pos] = static_cast<int>(choice[o]);
      }
      if (!admissible) break;
      Degree deg(axes.size(), 0);
      for (int j = 0; j < n; ++j) deg = deg + factors[j].generators[slot_gen[j]].second;
      // Koszul sign: each crossing of two odd factors contributes -1
      int flips = 0;
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (g(j) > g(k) && parity[j][slot_gen[j]] == 1 && parity[k][slot_gen[k]] == 1) ++flips;
      trace_sum[deg] += (flips % 2 == 0) ? 1 : -1;
      // advance the odometer over orbit choices
      std::size_t o = 0;
      while (o < od.orbits.size()) {
        if (++choice[o] < factors[od.orbits[o][0]].generators.size()) break;
        choice[o] = 0;
        ++o;
      }
      if (o == od.orbits.size()) break;
    }
  }

  const Integer order(static_cast<long>(group.size()));
  GradedDimension out(axes);
  for (const auto& [d, s] : trace_sum) {
    if (s == 0) continue;
    if (s < 0 || s % order != 0)
      throw NonIntegralError("invariants_by_trace: trace average is not a dimension");
    out.add(d, s / order);
  }
  return out;
}

GradedDimension invariants_by_trace(const SignedBasis& b, int n,
                                    const std::vector<Permutation>& group,
                                    const SuperAxes& k_axes) {
  return invariants_by_trace(std::vector<SignedBasis>(n, b), group, k_axes);
}

GradedDimension inertia_sum_bruteforce(const std::vector<GradedDimension>& tables, int n,
                                       const SuperAxes& k_axes) {
  if (n < 0) throw std::invalid_argument("negative symmetric quotient size");
  if (n > kMaxInertiaN) throw SizeGuardError("inertia_sum_bruteforce: n exceeds guard");
  if (static_cast<int>(tables.size()) < n)
    throw std::invalid_argument("need coefficient tables for every part size up to n");
  AxisSystem axes = tables.empty() ? AxisSystem{} : tables[0].axes();
  for (const auto& t : tables)
    if (!(t.axes() == axes)) throw std::invalid_argument("axis-system mismatch between tables");
  GradedDimension out(axes);
  for (const auto& nu : partitions_of(n)) {
    std::vector<SignedBasis> factors;
    std::vector<int> blocks;
    for (const auto& [part, count] : nu.multiplicities()) {
      auto basis = SignedBasis::from_series(tables[part - 1]);
      for (int c = 0; c < count; ++c) factors.push_back(basis);
      blocks.push_back(count);
    }
    out = direct_sum(out, invariants_by_trace(factors, young_group(blocks), k_axes));
  }
  return out;
}

}  // namespace symquot
