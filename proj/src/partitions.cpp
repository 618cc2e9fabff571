#include "symquot/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace symquot {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

CycleType::CycleType(std::map<int, int> multiplicities) {
  for (const auto& [part, count] : multiplicities) {
    if (part < 1) throw std::invalid_argument("partition part must be positive");
    if (count < 0) throw std::invalid_argument("negative part multiplicity");
    if (count == 0) continue;
    mult_[part] = count;
    n_ += part * count;
  }
}

CycleType CycleType::from_parts(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  return CycleType(std::move(mult));
}

int CycleType::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<int> CycleType::parts() const {
  std::vector<int> out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
    out.insert(out.end(), it->second, it->first);
  return out;
}

int CycleType::num_parts() const {
  int k = 0;
  for (const auto& [part, count] : mult_) k += count;
  return k;
}

std::vector<CycleType> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition target");
  std::vector<CycleType> out;
  std::vector<int> parts;
  // Weakly decreasing part lists in reverse-lexicographic order: extend with the
  // largest part allowed, backtrack by shrinking the last part.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(CycleType::from_parts(parts));
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

Integer centralizer_order(const CycleType& c) {
  Integer z = 1;
  for (const auto& [part, count] : c.multiplicities()) {
    for (int j = 0; j < count; ++j) z *= part;
    z *= factorial(count);
  }
  return z;
}

Integer class_size(const CycleType& c) { return factorial(c.n()) / centralizer_order(c); }

int age(const CycleType& c) {
  int a = 0;
  for (const auto& [part, count] : c.multiplicities()) a += (part - 1) * count;
  return a;
}

bool all_parts_odd(const CycleType& c) {
  for (const auto& [part, count] : c.multiplicities())
    if (part % 2 == 0) return false;
  return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

OrbitDecomposition orbit_decomposition(const Permutation& g) {
  OrbitDecomposition out;
  const int n = g.size();
  std::vector<bool> visited(n, false);
  std::vector<int> parts;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit;
    for (int i = start; !visited[i]; i = g(i)) {
      visited[i] = true;
      orbit.push_back(i);
    }
    parts.push_back(static_cast<int>(orbit.size()));
    out.orbits.push_back(std::move(orbit));
  }
  out.type = CycleType::from_parts(parts);
  return out;
}

}  // namespace symquot
