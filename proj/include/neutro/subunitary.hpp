#pragma once

#include <string>
#include <vector>

namespace neutro {

/// Closed interval [lo, hi]; a point is the degenerate case lo == hi.
struct interval {
  double lo;
  double hi;

  bool is_point() const { return lo == hi; }
  bool operator==(const interval&) const = default;
};

/// A set of reals represented as a finite union of closed intervals and
/// points, kept canonical: pieces sorted by lo, pairwise non-overlapping
/// (pieces closer than merge_gap are fused), never empty.  Values are not
/// restricted to [0,1]; intermediate arithmetic may leave the unit interval.
class subunitary_set {
public:
  static constexpr double merge_gap = 1e-9;

  explicit subunitary_set(double point) : subunitary_set(point, point) {}
  subunitary_set(double lo, double hi);
  explicit subunitary_set(std::vector<interval> pieces);

  static subunitary_set point(double v) { return subunitary_set(v); }
  static subunitary_set unite(const subunitary_set& a, const subunitary_set& b);

  const std::vector<interval>& pieces() const { return pieces_; }
  double inf() const { return pieces_.front().lo; }
  double sup() const { return pieces_.back().hi; }

  bool is_point() const { return pieces_.size() == 1 && pieces_[0].is_point(); }
  /// Only meaningful when is_point().
  double value() const { return pieces_.front().lo; }

  bool contains(double x, double tol = 0.0) const;

  bool operator==(const subunitary_set& other) const = default;

private:
  std::vector<interval> pieces_;
};

/// { x + y : x in a, y in b }
subunitary_set oplus(const subunitary_set& a, const subunitary_set& b);
/// { x - y : x in a, y in b }
subunitary_set ominus(const subunitary_set& a, const subunitary_set& b);
/// { x * y : x in a, y in b }
subunitary_set odot(const subunitary_set& a, const subunitary_set& b);
/// { x / k : x in a }; k must be nonzero
subunitary_set oslash(const subunitary_set& a, double k);

/// Intersection with [0,1]; throws eval_error when the result is empty.
subunitary_set clamp_unit(const subunitary_set& a);

/// Pointwise images of min/max over the product of the two sets.
subunitary_set piece_min(const subunitary_set& a, const subunitary_set& b);
subunitary_set piece_max(const subunitary_set& a, const subunitary_set& b);

/// { 1 - x : x in a } (endpoint reflection about 1/2 per piece).
subunitary_set reflect_unit(const subunitary_set& a);

bool approx_equal(const subunitary_set& a, const subunitary_set& b,
                  double tol = 1e-12);

/// Textual syntax: `0.3` (point), `{0.3}` or `{0.1,0.2}` (points),
/// `[0.2,0.3]` (interval), unions joined with `U`; whitespace-insensitive;
/// a number may carry a `%` suffix (divided by 100).
subunitary_set parse_set(const std::string& text);
/// Same syntax, 6 decimal places; a lone point prints bare, point pieces
/// inside a union print braced.
std::string format_set(const subunitary_set& s);

} // namespace neutro
