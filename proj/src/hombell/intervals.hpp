#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace hombell {

// Finite union of disjoint intervals of the real line, possibly unbounded on
// either side. Stored as ordered (lo, hi) segments with lo < hi; ±infinity is
// allowed at the outer ends only. Boundary membership is irrelevant for every
// use here (the sets only ever enter integrals).
class IntervalSet {
 public:
  using Segment = std::pair<double, double>;

  IntervalSet() = default;  // empty set

  static IntervalSet empty() { return IntervalSet{}; }
  static IntervalSet real_line();

  // I = [b0,b1] ∪ [b2,b3] ∪ ... with optional unbounded head (-inf, b0] and
  // tail [b_last, +inf). Boundaries must be finite and strictly increasing,
  // and the count left after assigning head/tail must pair up evenly.
  static IntervalSet from_boundaries(const std::vector<double>& boundaries, bool unbounded_head,
                                     bool unbounded_tail);

  // Segments with ±infinity endpoints allowed; must be sorted and disjoint.
  static IntervalSet from_segments(std::vector<Segment> segments);

  static IntervalSet single(double lo, double hi) { return from_segments({{lo, hi}}); }

  const std::vector<Segment>& segments() const { return segments_; }
  bool is_empty() const { return segments_.empty(); }
  bool is_real_line() const;
  bool contains(double x) const;

  // Exact complement: reuses the same boundary values.
  IntervalSet complement() const;

  // All finite boundary values in increasing order.
  std::vector<double> boundaries() const;
  bool unbounded_head() const;
  bool unbounded_tail() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Segment> segments_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace hombell
