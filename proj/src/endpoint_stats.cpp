#include "dis/endpoint_stats.hpp"

namespace dis {

EndpointStats endpoint_stats(const Society& society) {
  if (!society.has_distinct_endpoints()) {
    throw ValidationError("endpoint statistics need distinct endpoints");
  }
  std::vector<Interval> all;
  all.reserve(2 * society.size());
  for (const Voter& v : society.voters()) {
    all.push_back(v.first);
    all.push_back(v.second);
  }

  EndpointStats stats;
  stats.intervals.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    IntervalStats& s = stats.intervals[i];
    s.voter = i / 2;
    s.second = (i % 2) == 1;
    const Interval& me = all[i];
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j == i || !all[j].meets(me)) continue;
      const bool has_lo = all[j].contains(me.lo);
      const bool has_hi = all[j].contains(me.hi);
      if (has_lo && has_hi) {
        ++s.both;
      } else if (has_lo) {
        ++s.left;
      } else if (has_hi) {
        ++s.right;
      } else {
        ++s.center;
      }
    }
    stats.sum_both += s.both;
    stats.sum_center += s.center;
  }
  return stats;
}

}  // namespace dis
