#ifndef DIS_ENDPOINT_STATS_HPP_
#define DIS_ENDPOINT_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dis/society.hpp"

namespace dis {

// How the other 2n-1 intervals of a society meet one interval I = [lo, hi]:
//   left   - contain lo but not hi
//   right  - contain hi but not lo
//   both   - contain lo and hi
//   center - meet I while containing neither endpoint
struct IntervalStats {
  std::size_t voter = 0;
  bool second = false;
  int left = 0;
  int right = 0;
  int both = 0;
  int center = 0;

  int total() const { return left + right + both + center; }
};

struct EndpointStats {
  // Entry 2v is voter v's first interval, 2v+1 its second.
  std::vector<IntervalStats> intervals;
  std::int64_t sum_both = 0;
  std::int64_t sum_center = 0;

  const IntervalStats& of(std::size_t voter, bool second) const {
    return intervals[2 * voter + (second ? 1 : 0)];
  }
  // Sum of all four counts over both of the voter's intervals.
  int voter_total(std::size_t voter) const {
    return of(voter, false).total() + of(voter, true).total();
  }
};

// Requires all endpoints distinct; throws ValidationError otherwise.
EndpointStats endpoint_stats(const Society& society);

}  // namespace dis

#endif  // DIS_ENDPOINT_STATS_HPP_
