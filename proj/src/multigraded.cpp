#include "symquot/multigraded.hpp"

#include <algorithm>
#include <stdexcept>

namespace symquot {

Integer binomial(const Integer& n, long k) {
  if (k < 0 || n < 0) return 0;
  if (n < k) return 0;
  Integer c = 1;
  // c stays integral at every step: after j factors it equals C(n-k+j, j).
  for (long j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;
  }
  return c;
}

static void require_same_arity(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degree arity mismatch");
}

Degree operator+(const Degree& a, const Degree& b) {
  require_same_arity(a, b);
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Degree operator-(const Degree& a) {
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Degree scaled(const Degree& d, int c) {
  Degree r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r[i] = c * d[i];
  return r;
}

AxisSystem::AxisSystem(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate axis name: " + names_[i]);
}

AxisSystem::AxisSystem(std::initializer_list<std::string> names)
    : AxisSystem(std::vector<std::string>(names)) {}

std::size_t AxisSystem::index(const std::string& axis) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == axis) return i;
  throw std::invalid_argument("unknown axis: " + axis);
}

bool AxisSystem::has(const std::string& axis) const {
  return std::find(names_.begin(), names_.end(), axis) != names_.end();
}

std::vector<bool> SuperAxes::mask(const AxisSystem& sys) const {
  std::vector<bool> m(sys.size(), false);
  for (const auto& a : axes_) m[sys.index(a)] = true;
  return m;
}

int degree_parity(const Degree& d, const std::vector<bool>& k_mask) {
  if (d.size() != k_mask.size()) throw std::invalid_argument("degree arity mismatch");
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (k_mask[i]) s += d[i];
  return static_cast<int>(((s % 2) + 2) % 2);
}

TruncationWindow::TruncationWindow(const AxisSystem& axes)
    : lower_(axes.size()), upper_(axes.size()) {}

TruncationWindow& TruncationWindow::bound(const AxisSystem& axes, const std::string& axis,
                                          int lower, int upper) {
  if (lower_.size() < axes.size()) {
    lower_.resize(axes.size());
    upper_.resize(axes.size());
  }
  if (lower > upper) throw std::invalid_argument("window lower bound exceeds upper bound");
  std::size_t i = axes.index(axis);
  lower_[i] = lower;
  upper_[i] = upper;
  return *this;
}

TruncationWindow TruncationWindow::upto(const AxisSystem& axes, const std::string& axis,
                                        int upper) {
  TruncationWindow w(axes);
  std::size_t i = axes.index(axis);
  w.upper_[i] = upper;
  return w;
}

bool TruncationWindow::boundless() const {
  for (const auto& b : lower_)
    if (b) return false;
  for (const auto& b : upper_)
    if (b) return false;
  return true;
}

bool TruncationWindow::contains(const Degree& d) const {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i < lower_.size() && lower_[i] && d[i] < *lower_[i]) return false;
    if (i < upper_.size() && upper_[i] && d[i] > *upper_[i]) return false;
  }
  return true;
}

bool TruncationWindow::below_upper(const Degree& d) const {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i < upper_.size() && upper_[i] && d[i] > *upper_[i]) return false;
  return true;
}

GradedDimension GradedDimension::unit(const AxisSystem& axes) {
  GradedDimension v(axes);
  v.add(Degree(axes.size(), 0), 1);
  return v;
}

GradedDimension GradedDimension::single(const AxisSystem& axes, const Degree& d,
                                        const Integer& dim) {
  GradedDimension v(axes);
  v.add(d, dim);
  return v;
}

Integer GradedDimension::at(const Degree& d) const {
  auto it = support_.find(d);
  return it == support_.end() ? Integer(0) : it->second;
}

Integer GradedDimension::total() const {
  Integer s = 0;
  for (const auto& [d, m] : support_) s += m;
  return s;
}

void GradedDimension::add(const Degree& d, const Integer& dim) {
  if (d.size() != axes_.size()) throw std::invalid_argument("degree arity mismatch");
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (dim == 0) return;
  support_[d] += dim;
}

static void require_same_axes(const GradedDimension& u, const GradedDimension& v) {
  if (!(u.axes() == v.axes())) throw std::invalid_argument("axis-system mismatch");
}

GradedDimension translate(const GradedDimension& v, const Degree& d) {
  GradedDimension r(v.axes());
  for (const auto& [e, m] : v.support()) r.add(e + d, m);
  return r;
}

GradedDimension shift(const GradedDimension& v, const Degree& d) { return translate(v, -d); }

GradedDimension direct_sum(const GradedDimension& u, const GradedDimension& v) {
  require_same_axes(u, v);
  GradedDimension r = u;
  for (const auto& [d, m] : v.support()) r.add(d, m);
  return r;
}

GradedDimension tensor(const GradedDimension& u, const GradedDimension& v) {
  require_same_axes(u, v);
  GradedDimension r(u.axes());
  for (const auto& [a, ma] : u.support())
    for (const auto& [b, mb] : v.support()) r.add(a + b, ma * mb);
  return r;
}

GradedDimension tensor(const GradedDimension& u, const GradedDimension& v,
                       const TruncationWindow& window) {
  require_same_axes(u, v);
  GradedDimension r(u.axes());
  for (const auto& [a, ma] : u.support())
    for (const auto& [b, mb] : v.support()) {
      Degree d = a + b;
      if (window.contains(d)) r.add(d, ma * mb);
    }
  return r;
}

namespace {

// One generator degree of the symmetric-power product formula, expanded in the
// auxiliary counting variable: coefficient of u^a is C(r+a-1, a) s^{ad} for
// |d|_K even and C(r, a) s^{ad} for |d|_K odd.
Integer factor_coefficient(const Integer& r, int parity, long a) {
  return parity == 0 ? binomial(r + a - 1, a) : binomial(r, a);
}

}  // namespace

GradedDimension sym_n(const GradedDimension& v, int n, const SuperAxes& k_axes) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  const auto mask = k_axes.mask(v.axes());
  // product[a] is the u^a slice of the partial product of expanded factors
  std::vector<GradedDimension> product(n + 1, GradedDimension(v.axes()));
  product[0] = GradedDimension::unit(v.axes());
  for (const auto& [d, r] : v.support()) {
    int parity = degree_parity(d, mask);
    std::vector<GradedDimension> next(n + 1, GradedDimension(v.axes()));
    for (int a = 0; a <= n; ++a) {
      Integer c = factor_coefficient(r, parity, a);
      if (c == 0) continue;
      Degree da = scaled(d, a);
      for (int b = 0; a + b <= n; ++b)
        for (const auto& [e, m] : product[b].support()) next[a + b].add(e + da, m * c);
    }
    product = std::move(next);
  }
  return product[n];
}

GradedDimension sym_total(const GradedDimension& v, const SuperAxes& k_axes,
                          const TruncationWindow& window) {
  const auto mask = k_axes.mask(v.axes());
  const std::size_t arity = v.axes().size();
  // Soundness of truncation-as-we-go: bounded axes must only ever grow.
  for (std::size_t i = 0; i < arity; ++i) {
    if (!window.upper(i) && !window.lower(i)) continue;
    for (const auto& [d, m] : v.support())
      if (d[i] < 0)
        throw std::invalid_argument("sym_total: negative support degree on windowed axis " +
                                    v.axes().name(i));
  }
  GradedDimension result = GradedDimension::unit(v.axes());
  for (const auto& [d, r] : v.support()) {
    int parity = degree_parity(d, mask);
    // Highest power of this factor that can stay inside the window.
    long max_a = -1;
    for (std::size_t i = 0; i < arity; ++i)
      if (window.upper(i) && d[i] > 0) {
        long cut = *window.upper(i) / d[i];
        max_a = max_a < 0 ? cut : std::min(max_a, cut);
      }
    if (parity == 1) {
      // (1 + s^d)^r terminates at a = r regardless of the window.
      if (r > 1000000) throw std::invalid_argument("sym_total: factor dimension too large");
      long cap = static_cast<long>(r);
      max_a = max_a < 0 ? cap : std::min(max_a, cap);
    } else if (max_a < 0) {
      throw std::invalid_argument("sym_total: missing window on divergent axis (factor of even parity)");
    }
    GradedDimension next(v.axes());
    for (long a = 0; a <= max_a; ++a) {
      Integer c = factor_coefficient(r, parity, a);
      if (c == 0) continue;
      Degree da = scaled(d, static_cast<int>(a));
      for (const auto& [e, m] : result.support()) {
        Degree sum = e + da;
        if (window.below_upper(sum)) next.add(sum, m * c);
      }
    }
    result = std::move(next);
  }
  if (window.boundless()) return result;
  GradedDimension filtered(v.axes());
  for (const auto& [d, m] : result.support())
    if (window.contains(d)) filtered.add(d, m);
  return filtered;
}

CollapseMap::CollapseMap(const AxisSystem& from, const std::vector<Column>& columns)
    : from_(from) {
  std::vector<std::string> names;
  for (const auto& col : columns) {
    names.push_back(col.name);
    std::vector<int> row(from.size(), 0);
    for (const auto& [axis, c] : col.terms) row[from.index(axis)] += c;
    coeff_.push_back(std::move(row));
  }
  to_ = AxisSystem(names);
}

Degree CollapseMap::apply(const Degree& d) const {
  if (d.size() != from_.size()) throw std::invalid_argument("degree arity mismatch");
  Degree r(coeff_.size(), 0);
  for (std::size_t j = 0; j < coeff_.size(); ++j)
    for (std::size_t i = 0; i < d.size(); ++i) r[j] += coeff_[j][i] * d[i];
  return r;
}

GradedDimension collapse(const GradedDimension& v, const CollapseMap& m) {
  if (!(v.axes() == m.from())) throw std::invalid_argument("axis-system mismatch");
  GradedDimension r(m.to());
  for (const auto& [d, dim] : v.support()) r.add(m.apply(d), dim);
  return r;
}

GradedDimension rename_axes(const GradedDimension& v, const AxisSystem& axes) {
  if (axes.size() != v.axes().size()) throw std::invalid_argument("axis arity mismatch");
  GradedDimension r(axes);
  for (const auto& [d, m] : v.support()) r.add(d, m);
  return r;
}

GradedDimension append_axis(const GradedDimension& v, const std::string& axis, int value) {
  std::vector<std::string> names = v.axes().names();
  names.push_back(axis);
  GradedDimension r{AxisSystem(names)};
  for (const auto& [d, m] : v.support()) {
    Degree e = d;
    e.push_back(value);
    r.add(e, m);
  }
  return r;
}

GradedDimension slice(const GradedDimension& v, const std::string& axis, int value) {
  std::size_t cut = v.axes().index(axis);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.axes().size(); ++i)
    if (i != cut) names.push_back(v.axes().name(i));
  GradedDimension r{AxisSystem(names)};
  for (const auto& [d, m] : v.support()) {
    if (d[cut] != value) continue;
    Degree e;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (i != cut) e.push_back(d[i]);
    r.add(e, m);
  }
  return r;
}

}  // namespace symquot
