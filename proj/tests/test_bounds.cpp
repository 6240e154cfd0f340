#include <gtest/gtest.h>

#include <cmath>

#include "dis/bounds.hpp"
#include "dis/double_string.hpp"

namespace {

// Linear scans over the defining inequality, in plain 64-bit arithmetic
// (exact for the ranges used here).
bool holds(std::int64_t n, std::int64_t a) {
  return (4 * n - a) * (a - 1) >= n * (n - 1);
}

std::int64_t scan_lower_bound(std::int64_t n) {
  std::int64_t a = 1;
  while (!holds(n, a)) ++a;
  return a;
}

std::int64_t scan_max_size(std::int64_t a) {
  std::int64_t n = 2 * a;
  while (holds(n + 1, a)) ++n;
  return n;
}

}  // namespace

TEST(Bounds, TableRows) {
  const std::int64_t expected[] = {4, 8, 12, 15, 19, 23, 26, 30, 34, 38, 41};
  const char* ratios[] = {"0.500", "0.375", "0.333", "0.333", "0.316", "0.304",
                          "0.308", "0.300", "0.294", "0.289", "0.293"};
  const auto rows = dis::bounds_table(2, 12);
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].approval, static_cast<std::int64_t>(i) + 2);
    EXPECT_EQ(rows[i].max_n, expected[i]);
    EXPECT_EQ(rows[i].min_ratio, dis::Ratio(rows[i].approval, expected[i]));
    EXPECT_EQ(dis::format_ratio_decimal(rows[i].min_ratio), ratios[i]);
  }
  EXPECT_THROW(dis::bounds_table(1, 5), dis::ValidationError);
  EXPECT_THROW(dis::bounds_table(2, 1'000'001), dis::ValidationError);
  EXPECT_THROW(dis::max_society_size(1), dis::ValidationError);
}

TEST(Bounds, Formatting) {
  EXPECT_EQ(dis::format_ratio_decimal(dis::Ratio(1, 3)), "0.333");
  EXPECT_EQ(dis::format_ratio_decimal(dis::Ratio(2, 3)), "0.667");
  EXPECT_EQ(dis::format_ratio_decimal(dis::Ratio(1, 8)), "0.125");
  EXPECT_EQ(dis::format_ratio_decimal(dis::Ratio(1, 16)), "0.063");  // half up
  EXPECT_EQ(dis::format_ratio_decimal(dis::Ratio(1)), "1.000");
  const auto rows = dis::bounds_table(2, 3);
  EXPECT_EQ(dis::format_bounds_csv(rows),
            "a,max_n,min_ratio_num,min_ratio_den\n2,4,1,2\n3,8,3,8\n");
}

TEST(Bounds, ExampleValues) {
  EXPECT_EQ(dis::approval_lower_bound(1), 1);
  EXPECT_EQ(dis::approval_lower_bound(4), 2);
  EXPECT_EQ(dis::approval_lower_bound(8), 3);
  EXPECT_EQ(dis::approval_lower_bound(12), 4);
  EXPECT_EQ(dis::approval_lower_bound(13), 5);
  EXPECT_EQ(dis::max_society_size(10), 34);
  EXPECT_EQ(dis::max_society_size(12), 41);
}

TEST(Bounds, AgreesWithLinearScan) {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    ASSERT_EQ(dis::approval_lower_bound(n), scan_lower_bound(n)) << n;
  }
  for (std::int64_t a = 2; a <= 1000; ++a) {
    ASSERT_EQ(dis::max_society_size(a), scan_max_size(a)) << a;
  }
}

TEST(Bounds, Adjunction) {
  for (std::int64_t a = 2; a <= 2000; ++a) {
    const std::int64_t n = dis::max_society_size(a);
    ASSERT_EQ(dis::approval_lower_bound(n), a);
    ASSERT_EQ(dis::approval_lower_bound(n + 1), a + 1);
  }
}

TEST(Bounds, ClosedFormsAgreeToOneMillion) {
  for (std::int64_t x = 2; x <= 1'000'000; ++x) {
    ASSERT_EQ(dis::approval_lower_bound(x), dis::approval_lower_bound_closed_form(x)) << x;
    ASSERT_EQ(dis::max_society_size(x), dis::max_society_size_closed_form(x)) << x;
  }
}

TEST(Bounds, RatioEstimate) {
  // 2 - sqrt(3) + (3 + sqrt(3))/60 - sqrt(3)/2400, evaluated by hand.
  EXPECT_NEAR(static_cast<double>(dis::ratio_lower_bound_estimate(10)), 0.346095, 1e-6);
  EXPECT_NEAR(static_cast<double>(dis::ratio_lower_bound_estimate(10)), 0.3456, 1e-3);
  EXPECT_NEAR(static_cast<double>(dis::ratio_lower_bound_limit()), 0.26795, 1e-5);
  EXPECT_NEAR(static_cast<double>(dis::ratio_lower_bound_estimate(1'000'000'000)),
              0.26795, 1e-5);
  for (std::int64_t n = 1; n <= 10'000; ++n) {
    const long double exact = static_cast<long double>(dis::approval_lower_bound(n)) /
                              static_cast<long double>(n);
    ASSERT_LE(dis::ratio_lower_bound_estimate(n), exact + 1e-15L) << n;
  }
}

TEST(Bounds, DeltaLower) {
  EXPECT_EQ(dis::delta_theoretical_lower(1), 0);
  EXPECT_EQ(dis::delta_theoretical_lower(5), 2);
  EXPECT_EQ(dis::delta_theoretical_lower(23), 8);
  EXPECT_EQ(dis::delta_theoretical_lower(46), 16);
  EXPECT_EQ(dis::delta_theoretical_lower(22), 7);
  EXPECT_EQ(dis::kDeltaRatioLower, dis::Ratio(8, 23));
  EXPECT_EQ(dis::kDeltaRatioUpper, dis::Ratio(5, 13));
}

TEST(Bounds, SandwichAgainstConstructions) {
  for (int n = 3; n <= 500; ++n) {
    const auto lower = dis::delta_theoretical_lower(n);
    ASSERT_LE(lower, dis::diameter(dis::construct_thirteen(n)).diameter) << n;
    if (n <= 200) {
      ASSERT_LE(lower, dis::quarter_diameter(n)) << n;
    }
  }
  // The thirteen bound approaches 5/13 of n from above, the lower bound
  // 8/23 from below.
  const double n = 13.0 * 1000;
  EXPECT_NEAR(dis::thirteen_diameter_bound(13000) / n, 5.0 / 13, 1e-3);
  EXPECT_NEAR(dis::delta_theoretical_lower(23000) / 23000.0, 8.0 / 23, 1e-3);
}
