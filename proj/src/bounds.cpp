#include "dis/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dis {

namespace {

constexpr std::int64_t kMaxTableApproval = 1'000'000;

// (4n - a)(a - 1) - n(n - 1), in 128-bit to stay exact for n, a up to 10^9.
__int128 slack(std::int64_t n, std::int64_t a) {
  const __int128 N = n;
  const __int128 A = a;
  return (4 * N - A) * (A - 1) - N * (N - 1);
}

}  // namespace

bool approval_inequality_holds(std::int64_t n, std::int64_t a) {
  return slack(n, a) >= 0;
}

std::int64_t approval_lower_bound(std::int64_t n) {
  if (n < 1) throw ValidationError("approval_lower_bound needs n >= 1");
  // slack(n, .) increases on [1, n] and slack(n, n) = 2n(n-1) >= 0.
  std::int64_t lo = 1;
  std::int64_t hi = n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (approval_inequality_holds(n, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t max_society_size(std::int64_t a) {
  if (a < 2) throw ValidationError("max_society_size needs a >= 2");
  // slack(., a) decreases past its vertex near 2a; slack(2a, a) = 3a^2 - 5a
  // >= 0 and slack(6a, a) < 0.
  std::int64_t lo = 2 * a;
  std::int64_t hi = 6 * a;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (approval_inequality_holds(mid, a)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::int64_t approval_lower_bound_closed_form(std::int64_t n) {
  const long double x = static_cast<long double>(n);
  return static_cast<std::int64_t>(
      std::ceil(2 * x + 0.5L - std::sqrt(3 * x * x - x + 0.25L)));
}

std::int64_t max_society_size_closed_form(std::int64_t a) {
  const long double x = static_cast<long double>(a);
  return static_cast<std::int64_t>(
      std::floor(2 * x - 1.5L + std::sqrt(3 * x * x - 5 * x + 2.25L)));
}

long double ratio_lower_bound_estimate(std::int64_t n) {
  if (n < 1) throw ValidationError("ratio estimate needs n >= 1");
  const long double s3 = std::sqrt(3.0L);
  const long double x = static_cast<long double>(n);
  return 2 - s3 + (3 + s3) / (6 * x) - s3 / (24 * x * x);
}

long double ratio_lower_bound_limit() { return 2 - std::sqrt(3.0L); }

std::int64_t delta_theoretical_lower(std::int64_t n) {
  if (n < 1) throw ValidationError("delta_theoretical_lower needs n >= 1");
  return std::max((n - 1 + 2) / 3, 8 * (n / 23));
}

std::vector<BoundsRow> bounds_table(std::int64_t lo, std::int64_t hi) {
  if (lo < 2 || hi > kMaxTableApproval || lo > hi) {
    throw ValidationError("approval range must lie within [2, 1000000]");
  }
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t a = lo; a <= hi; ++a) {
    const std::int64_t n = max_society_size(a);
    rows.push_back({a, n, Ratio(a, n)});
  }
  return rows;
}

std::string format_ratio_decimal(Ratio r, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const __int128 num = static_cast<__int128>(r.numerator()) * scale * 2 +
                       r.denominator();
  const __int128 den = static_cast<__int128>(r.denominator()) * 2;
  const auto scaled = static_cast<std::int64_t>(num / den);
  std::ostringstream out;
  out << scaled / scale;
  if (digits > 0) {
    out << '.' << std::setw(digits) << std::setfill('0') << scaled % scale;
  }
  return out.str();
}

std::string format_bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "a,max_n,min_ratio_num,min_ratio_den\n";
  for (const BoundsRow& row : rows) {
    out += std::to_string(row.approval) + ',' + std::to_string(row.max_n) +
           ',' + std::to_string(row.min_ratio.numerator()) + ',' +
           std::to_string(row.min_ratio.denominator()) + '\n';
  }
  return out;
}

std::string format_bounds_text(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "a(S)" << std::setw(12) << "n"
      << "Approval Ratio\n";
  for (const BoundsRow& row : rows) {
    out << std::left << std::setw(8) << row.approval << std::setw(12)
        << ("<= " + std::to_string(row.max_n))
        << ">= " << format_ratio_decimal(row.min_ratio) << '\n';
  }
  return out.str();
}

}  // namespace dis
