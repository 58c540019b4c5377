#include "hombell/intervals.hpp"

#include <cmath>
#include <stdexcept>

namespace hombell {

IntervalSet IntervalSet::real_line() {
  IntervalSet s;
  s.segments_ = {{-kInf, kInf}};
  return s;
}

IntervalSet IntervalSet::from_boundaries(const std::vector<double>& boundaries,
                                         bool unbounded_head, bool unbounded_tail) {
  for (size_t i = 0; i < boundaries.size(); ++i) {
    if (!std::isfinite(boundaries[i]))
      throw std::invalid_argument("IntervalSet: boundaries must be finite");
    if (i > 0 && boundaries[i] <= boundaries[i - 1])
      throw std::invalid_argument("IntervalSet: boundaries must be strictly increasing");
  }
  const size_t n = boundaries.size();
  if (n == 0) {
    if (unbounded_head && unbounded_tail) return real_line();
    if (unbounded_head || unbounded_tail)
      throw std::invalid_argument("IntervalSet: unbounded flag needs a boundary");
    return empty();
  }
  std::vector<Segment> segs;
  size_t i = 0;
  size_t end = n;  // boundaries[i..end) remain for pairing into finite segments
  if (unbounded_head) {
    segs.push_back({-kInf, boundaries[0]});
    i = 1;
  }
  if (unbounded_tail) {
    if (end == i) throw std::invalid_argument("IntervalSet: not enough boundaries for tail");
    --end;
  }
  if (i > end || (end - i) % 2 != 0)
    throw std::invalid_argument("IntervalSet: boundary count does not pair into intervals");
  for (; i < end; i += 2) segs.push_back({boundaries[i], boundaries[i + 1]});
  if (unbounded_tail) segs.push_back({boundaries[n - 1], kInf});
  return from_segments(std::move(segs));
}

IntervalSet IntervalSet::from_segments(std::vector<Segment> segments) {
  for (size_t i = 0; i < segments.size(); ++i) {
    auto [lo, hi] = segments[i];
    if (std::isnan(lo) || std::isnan(hi) || lo >= hi)
      throw std::invalid_argument("IntervalSet: segment endpoints must satisfy lo < hi");
    if (lo == -kInf && i != 0)
      throw std::invalid_argument("IntervalSet: -inf only allowed in the first segment");
    if (hi == kInf && i + 1 != segments.size())
      throw std::invalid_argument("IntervalSet: +inf only allowed in the last segment");
    if (i > 0 && lo <= segments[i - 1].second)
      throw std::invalid_argument("IntervalSet: segments must be disjoint and sorted");
  }
  IntervalSet s;
  s.segments_ = std::move(segments);
  return s;
}

bool IntervalSet::is_real_line() const {
  return segments_.size() == 1 && segments_[0].first == -kInf && segments_[0].second == kInf;
}

bool IntervalSet::contains(double x) const {
  for (const auto& [lo, hi] : segments_)
    if (x >= lo && x <= hi) return true;
  return false;
}

IntervalSet IntervalSet::complement() const {
  std::vector<Segment> out;
  double cursor = -kInf;
  for (const auto& [lo, hi] : segments_) {
    if (lo > cursor) out.push_back({cursor, lo});
    cursor = hi;
  }
  if (cursor < kInf) out.push_back({cursor, kInf});
  return from_segments(std::move(out));
}

std::vector<double> IntervalSet::boundaries() const {
  std::vector<double> out;
  for (const auto& [lo, hi] : segments_) {
    if (std::isfinite(lo)) out.push_back(lo);
    if (std::isfinite(hi)) out.push_back(hi);
  }
  return out;
}

bool IntervalSet::unbounded_head() const {
  return !segments_.empty() && segments_.front().first == -kInf;
}

bool IntervalSet::unbounded_tail() const {
  return !segments_.empty() && segments_.back().second == kInf;
}

}  // namespace hombell
