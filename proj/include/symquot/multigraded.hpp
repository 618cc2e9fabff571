#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

using Integer = boost::multiprecision::cpp_int;

// Exact binomial coefficient; n may be any non-negative Integer, k a machine int.
Integer binomial(const Integer& n, long k);

// A degree vector; one entry per axis of the ambient axis system.
using Degree = std::vector<int>;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);
Degree scaled(const Degree& d, int c);

// Ordered, named grading axes. Axes are nominal so that (p,q) tables cannot be
// silently transposed into (q,p) ones.
class AxisSystem {
 public:
  AxisSystem() = default;
  explicit AxisSystem(std::vector<std::string> names);
  AxisSystem(std::initializer_list<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(const std::string& axis) const;
  bool has(const std::string& axis) const;

  friend bool operator==(const AxisSystem&, const AxisSystem&) = default;

 private:
  std::vector<std::string> names_;
};

// The subset K of axes carrying Koszul signs: a homogeneous element of degree d
// is odd iff |d|_K = sum of the K-components of d is odd.
class SuperAxes {
 public:
  SuperAxes() = default;
  SuperAxes(std::initializer_list<std::string> axes) : axes_(axes) {}
  explicit SuperAxes(std::vector<std::string> axes) : axes_(std::move(axes)) {}

  const std::vector<std::string>& names() const { return axes_; }
  // Membership mask against an axis system; unknown axis names are an error.
  std::vector<bool> mask(const AxisSystem& sys) const;

 private:
  std::vector<std::string> axes_;
};

// |d|_K mod 2 for the mask of K.
int degree_parity(const Degree& d, const std::vector<bool>& k_mask);

// Per-axis optional inclusive bounds; series expansions discard degrees outside.
class TruncationWindow {
 public:
  TruncationWindow() = default;
  explicit TruncationWindow(const AxisSystem& axes);

  TruncationWindow& bound(const AxisSystem& axes, const std::string& axis, int lower, int upper);
  static TruncationWindow upto(const AxisSystem& axes, const std::string& axis, int upper);

  bool boundless() const;
  bool contains(const Degree& d) const;
  bool below_upper(const Degree& d) const;  // ignores lower bounds
  std::optional<int> lower(std::size_t i) const {
    return i < lower_.size() ? lower_[i] : std::nullopt;
  }
  std::optional<int> upper(std::size_t i) const {
    return i < upper_.size() ? upper_[i] : std::nullopt;
  }

 private:
  std::vector<std::optional<int>> lower_, upper_;
};

// Finitely supported map degree -> positive dimension; the carrier for Hodge
// tables, Hochschild series and the trivariate (x,y,t) series alike.
class GradedDimension {
 public:
  GradedDimension() = default;
  explicit GradedDimension(AxisSystem axes) : axes_(std::move(axes)) {}

  static GradedDimension unit(const AxisSystem& axes);  // one dimension in degree 0
  static GradedDimension single(const AxisSystem& axes, const Degree& d, const Integer& dim);

  const AxisSystem& axes() const { return axes_; }
  const std::map<Degree, Integer>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Integer at(const Degree& d) const;
  Integer total() const;
  // Adds dim (>= 0) in degree d, keeping the canonical no-zero-entries form.
  void add(const Degree& d, const Integer& dim);

  friend bool operator==(const GradedDimension&, const GradedDimension&) = default;

 private:
  AxisSystem axes_;
  std::map<Degree, Integer> support_;
};

// Support moved by +d; shift is the cohomological counterpart moving it by -d.
GradedDimension translate(const GradedDimension& v, const Degree& d);

// (V[d])_i = V_{i+d}, i.e. support moved by -d.
GradedDimension shift(const GradedDimension& v, const Degree& d);

GradedDimension direct_sum(const GradedDimension& u, const GradedDimension& v);

GradedDimension tensor(const GradedDimension& u, const GradedDimension& v);
GradedDimension tensor(const GradedDimension& u, const GradedDimension& v,
                       const TruncationWindow& window);

// n-th symmetric power, super-graded on the axes in K: odd generators square to
// zero, even generators are unconstrained. Computed by expanding each factor
// (1 - (-1)^{|d|_K} u s^d)^{-(-1)^{|d|_K} dim V_d} in an auxiliary counting
// variable u with exact binomials and extracting the u^n slice.
GradedDimension sym_n(const GradedDimension& v, int n, const SuperAxes& k_axes);

// Total symmetric power prod_d (1 - (-1)^{|d|_K} s^d)^{-(-1)^{|d|_K} dim V_d},
// expanded inside the window. Every axis bounded by the window must see only
// non-negative support degrees (so truncation during accumulation is sound),
// and every K-even degree must be cut off by some bounded axis.
GradedDimension sym_total(const GradedDimension& v, const SuperAxes& k_axes,
                          const TruncationWindow& window);

// Signed integer linear re-grading of the axis system, e.g. (p,q) -> q-p.
class CollapseMap {
 public:
  struct Column {
    std::string name;
    std::vector<std::pair<std::string, int>> terms;  // (source axis, coefficient)
  };
  CollapseMap(const AxisSystem& from, const std::vector<Column>& columns);

  const AxisSystem& from() const { return from_; }
  const AxisSystem& to() const { return to_; }
  Degree apply(const Degree& d) const;

 private:
  AxisSystem from_, to_;
  std::vector<std::vector<int>> coeff_;  // coeff_[j][i]: weight of old axis i in new axis j
};

GradedDimension collapse(const GradedDimension& v, const CollapseMap& m);

// Same support, new axis names (arity must match).
GradedDimension rename_axes(const GradedDimension& v, const AxisSystem& axes);

// Adds a trailing axis held at the constant degree `value`.
GradedDimension append_axis(const GradedDimension& v, const std::string& axis, int value);

// Entries with the named axis at `value`, with that axis dropped.
GradedDimension slice(const GradedDimension& v, const std::string& axis, int value);

}  // namespace symquot
