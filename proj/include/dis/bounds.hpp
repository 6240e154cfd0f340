#ifndef DIS_BOUNDS_HPP_
#define DIS_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dis/society.hpp"

namespace dis {

// Every pairwise-intersecting n-voter society with approval number a
// satisfies (4n - a)(a - 1) >= n(n - 1). All integer bounds below are solved
// from this quadratic exactly.
bool approval_inequality_holds(std::int64_t n, std::int64_t a);

// Smallest a >= 1 with the inequality satisfied; 1 for n = 1.
std::int64_t approval_lower_bound(std::int64_t n);

// Largest n with the inequality satisfied. Requires a >= 2.
std::int64_t max_society_size(std::int64_t a);

// Floating evaluations of the radical forms, kept for cross-checking:
//   ceil(2n + 1/2 - sqrt(3n^2 - n + 1/4))
//   floor(2a - 3/2 + sqrt(3a^2 - 5a + 9/4))
std::int64_t approval_lower_bound_closed_form(std::int64_t n);
std::int64_t max_society_size_closed_form(std::int64_t a);

// 2 - sqrt(3) + (3 + sqrt(3))/(6n) - sqrt(3)/(24n^2), a floor estimate of the
// approval ratio. The exact guarantee is approval_lower_bound(n) / n.
long double ratio_lower_bound_estimate(std::int64_t n);

// Limit of ratio_lower_bound_estimate as n grows.
long double ratio_lower_bound_limit();

// max(ceil((n-1)/3), 8*floor(n/23)): the first term extends the 3r+1 case to
// all n, the second uses delta(23r) >= 8r with monotonicity of delta.
std::int64_t delta_theoretical_lower(std::int64_t n);

// Asymptotic bounds on delta(n)/n for double-n string societies.
inline const Ratio kDeltaRatioLower{8, 23};
inline const Ratio kDeltaRatioUpper{5, 13};

struct BoundsRow {
  std::int64_t approval = 0;
  std::int64_t max_n = 0;
  Ratio min_ratio;  // approval / max_n, reduced
};

// Requires 2 <= lo <= hi <= 10^6.
std::vector<BoundsRow> bounds_table(std::int64_t lo, std::int64_t hi);

// Header `a,max_n,min_ratio_num,min_ratio_den`.
std::string format_bounds_csv(const std::vector<BoundsRow>& rows);
// Aligned columns: a(S), "<= max_n", ">= ratio" rounded to 3 decimals.
std::string format_bounds_text(const std::vector<BoundsRow>& rows);

// Rounds half up to `digits` decimals, exactly: 11/38 -> "0.289".
std::string format_ratio_decimal(Ratio r, int digits = 3);

}  // namespace dis

#endif  // DIS_BOUNDS_HPP_
