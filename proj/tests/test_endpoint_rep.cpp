#include <gtest/gtest.h>

#include <random>

#include "dis/corpus.hpp"
#include "dis/endpoint_rep.hpp"
#include "dis/endpoint_stats.hpp"
#include "oracles.hpp"

using dis::Coord;

TEST(EndpointRep, FourVoters) {
  const auto rep = dis::parse_endpoint_rep(dis::corpus::kFourVoters);
  EXPECT_EQ(rep.voter_count(), 4u);
  EXPECT_EQ(rep.names(), (std::vector<std::string>{"A", "C", "B", "D"}));
  EXPECT_EQ(rep.to_string(), dis::corpus::kFourVoters);
  const auto s = dis::society_from_endpoint_rep(rep);
  EXPECT_EQ(s[0].name, "A");
  EXPECT_EQ(s[0].first, (dis::Interval{Coord(1), Coord(4)}));
}

TEST(EndpointRep, MinimalVoter) {
  const auto s = dis::society_from_endpoint_rep(dis::parse_endpoint_rep("+A-A+A-A"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].first, (dis::Interval{Coord(1), Coord(2)}));
  EXPECT_EQ(s[0].second, (dis::Interval{Coord(3), Coord(4)}));
}

TEST(EndpointRep, EightVoterListing) {
  const auto rep = dis::parse_endpoint_rep(dis::corpus::kEightVoters);
  EXPECT_EQ(dis::society_from_endpoint_rep(rep).size(), 8u);
}

namespace {

void expect_parse_error(std::string_view text, const std::string& symbol,
                        std::size_t index) {
  try {
    dis::parse_endpoint_rep(text);
    ADD_FAILURE() << "accepted " << text;
  } catch (const dis::ParseError& e) {
    EXPECT_EQ(e.symbol(), symbol) << text;
    EXPECT_EQ(e.index(), index) << text;
  }
}

}  // namespace

TEST(EndpointRep, ErrorsNameSymbolAndIndex) {
  expect_parse_error("+A+A-A-A", "A", 1);
  expect_parse_error("-A+A-A+A", "A", 0);
  expect_parse_error("+A-A+A-A+A", "A", 4);
  expect_parse_error("+A-A+A", "A", 0);
  expect_parse_error("+A-A+A-A*B", "*", 4);
  expect_parse_error("+A-A+A-A+", "", 4);
  EXPECT_THROW(dis::parse_endpoint_rep(""), dis::ParseError);
}

TEST(EndpointRep, WhitespaceIgnored) {
  EXPECT_EQ(dis::parse_endpoint_rep(" +A -A\n+A\t-A "),
            dis::parse_endpoint_rep("+A-A+A-A"));
}

TEST(EndpointRep, RoundTripOnRandomSocieties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto s = oracle::random_distinct_society(rng, n);
    const auto rep = dis::endpoint_rep_from_society(s);
    EXPECT_EQ(dis::endpoint_rep_from_society(dis::society_from_endpoint_rep(rep)),
              rep);
    // Realization preserves the approval number and intersections.
    const auto realized = dis::society_from_endpoint_rep(rep);
    EXPECT_EQ(dis::approval_number(realized).approval_number,
              dis::approval_number(s).approval_number);
    EXPECT_EQ(oracle::pairwise(realized), oracle::pairwise(s));
  }
  const auto four = dis::parse_endpoint_rep(dis::corpus::kFourVoters);
  EXPECT_EQ(dis::endpoint_rep_from_society(dis::society_from_endpoint_rep(four))
                .to_string(),
            dis::corpus::kFourVoters);
}

TEST(EndpointRep, CoincidentEndpointsRejected) {
  const dis::Society s({{"A", {Coord(0), Coord(1)}, {Coord(2), Coord(3)}},
                        {"B", {Coord(1), Coord(4)}, {Coord(5), Coord(6)}}});
  EXPECT_THROW(dis::endpoint_rep_from_society(s), dis::ValidationError);
  EXPECT_THROW(dis::endpoint_stats(s), dis::ValidationError);
}
