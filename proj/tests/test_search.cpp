#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../src/swap_engine.hpp"
#include "dis/bounds.hpp"
#include "dis/corpus.hpp"
#include "dis/search.hpp"
#include "oracles.hpp"

namespace {

// All representations on voters A.. whose letters appear in the given
// multiset order; the side of each token follows from its occurrence count.
dis::EndpointRepresentation rep_from_letters(const std::string& letters) {
  std::vector<dis::EndpointToken> tokens;
  int seen[26] = {};
  for (char c : letters) {
    const int k = seen[c - 'A']++;
    tokens.push_back({k % 2 == 0 ? dis::Side::open : dis::Side::close,
                      std::string(1, c)});
  }
  return dis::EndpointRepresentation(std::move(tokens));
}

// Objective pieces recomputed through the geometric model.
std::pair<int, int> full_eval(const dis::EndpointRepresentation& rep) {
  const auto s = dis::society_from_endpoint_rep(rep);
  int missing = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!oracle::agree(s[i], s[j])) ++missing;
    }
  }
  return {oracle::approval(s), missing};
}

dis::SearchConfig config(int target, std::uint64_t seed) {
  dis::SearchConfig c;
  c.target_approval = target;
  c.rng_seed = seed;
  c.max_iterations = 20'000;
  c.restarts = 20;
  c.sideways_limit = 1'000;
  return c;
}

}  // namespace

TEST(Search, NeighborsOfAllSmallReps) {
  for (const std::string base : {"AAAA", "AAAABBBB", "AAAABBBBCCCC"}) {
    std::string letters = base;
    do {
      const auto rep = rep_from_letters(letters);
      const auto state = dis::make_search_state(rep);
      const auto [a, missing] = full_eval(rep);
      ASSERT_EQ(state.approval, a);
      ASSERT_EQ(static_cast<int>(state.missing_pairs.size()), missing);

      const auto legal = dis::legal_swaps(rep);
      const auto next = dis::neighbors(state);
      ASSERT_EQ(next.size(), legal.size());
      for (std::size_t i = 0; i < next.size(); ++i) {
        const std::size_t k = next[i].position;
        ASSERT_EQ(k, legal[i]);
        std::string swapped = letters;
        std::swap(swapped[k], swapped[k + 1]);
        ASSERT_EQ(next[i].state.rep, rep_from_letters(swapped));
        const auto [na, nm] = full_eval(next[i].state.rep);
        ASSERT_EQ(next[i].state.approval, na);
        ASSERT_EQ(static_cast<int>(next[i].state.missing_pairs.size()), nm);
      }
      // Every excluded position exchanges a voter with itself.
      for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
        if (!std::binary_search(legal.begin(), legal.end(), k)) {
          ASSERT_EQ(letters[k], letters[k + 1]);
        }
      }
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
}

TEST(Search, SwapExamples) {
  const auto rep = dis::parse_endpoint_rep("+A-A+A-A+B-B+B-B");
  const auto state = dis::make_search_state(rep);
  EXPECT_EQ(state.approval, 1);
  ASSERT_EQ(state.missing_pairs.size(), 1u);
  EXPECT_EQ(state.missing_pairs[0], (std::pair<std::string, std::string>{"A", "B"}));
  const auto next = dis::neighbors(state);
  const auto it = std::find_if(next.begin(), next.end(),
                               [](const dis::Neighbor& nb) { return nb.position == 3; });
  ASSERT_NE(it, next.end());
  EXPECT_EQ(it->state.rep.to_string(), "+A-A+A+B-A-B+B-B");
  EXPECT_EQ(it->state.approval, 2);
  EXPECT_TRUE(it->state.missing_pairs.empty());

  EXPECT_TRUE(dis::legal_swaps(dis::parse_endpoint_rep("+A-A+A-A")).empty());
  const auto opens = dis::legal_swaps(dis::parse_endpoint_rep("+A+B-A-B+A+B-A-B"));
  EXPECT_EQ(opens.front(), 0u);
}

TEST(Search, ExchangeMovesMatchRecomputation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto rep = dis::endpoint_rep_from_society(oracle::random_distinct_society(rng, n));
    dis::internal::SwapEngine engine(rep);
    const int target = 1 + static_cast<int>(rng() % n);
    for (int step = 0; step < 300; ++step) {
      const std::size_t i = rng() % engine.size();
      const std::size_t j = rng() % engine.size();
      dis::Objective predicted;
      if (rng() % 2 == 0 && i < j && engine.exchangeable(i, j)) {
        predicted = engine.peek_exchange(i, j, target);
        engine.apply_exchange(i, j);
        ASSERT_EQ(engine.approval(), dis::make_search_state(rep).approval);
      } else if (i + 1 < engine.size() && engine.legal(i)) {
        predicted = engine.peek(i, target);
        engine.apply(i);
      } else {
        continue;
      }
      rep = engine.rep();
      ASSERT_NO_THROW(engine.check_consistency());
      ASSERT_EQ(engine.objective(target), predicted);
      const auto [a, missing] = full_eval(rep);
      ASSERT_EQ(engine.approval(), a);
      ASSERT_EQ(engine.missing(), missing);
    }
  }
}

TEST(Search, FindsSmallSocieties) {
  auto c = config(3, 1);
  const auto r4 = dis::hill_climb(dis::starting_rep(4, 3), c);
  EXPECT_TRUE(r4.success);
  EXPECT_TRUE(dis::verify_certificate(r4.best.rep, 3).pass);

  const auto start8 = dis::endpoint_rep_from_string(
      dis::parse_double_string(dis::corpus::kEightVoterSource), 2);
  const auto r8 = dis::hill_climb(start8, c);
  ASSERT_TRUE(r8.success);
  const auto report = dis::verify_certificate(r8.best.rep, 3);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.n, 8u);
  EXPECT_GE(report.approval, dis::approval_lower_bound(8));
  EXPECT_FALSE(r8.extraordinary);
}

TEST(Search, DeterministicAcrossJobs) {
  auto c = config(4, 3);
  c.restarts = 6;
  c.max_iterations = 3'000;
  const auto start = dis::starting_rep(12, 4);
  const auto a = dis::hill_climb(start, c);
  const auto b = dis::hill_climb(start, c);
  c.jobs = 3;
  const auto p = dis::hill_climb(start, c);
  EXPECT_EQ(a.best.rep, b.best.rep);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.moves, b.moves);
  EXPECT_EQ(a.best.rep, p.best.rep);
  EXPECT_EQ(a.trace, p.trace);
  EXPECT_EQ(a.run, p.run);
}

TEST(Search, TraceIsMonotonePerRun) {
  auto c = config(4, 9);
  c.restarts = 4;
  c.max_iterations = 2'000;
  c.validate_incremental = true;
  const auto r = dis::hill_climb(dis::starting_rep(12, 4), c);
  ASSERT_FALSE(r.trace.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    if (r.trace[i].run != r.trace[i - 1].run) {
      ASSERT_GT(r.trace[i].run, r.trace[i - 1].run);
      continue;
    }
    ASSERT_LT(r.trace[i].objective, r.trace[i - 1].objective);
    ASSERT_GT(r.trace[i].iteration, r.trace[i - 1].iteration);
  }
  EXPECT_EQ(r.best.objective(4), r.objective);
  const auto [a, missing] = full_eval(r.best.rep);
  EXPECT_EQ(r.best.approval, a);
  EXPECT_EQ(static_cast<int>(r.best.missing_pairs.size()), missing);
}

TEST(Search, RefusesInfeasibleTarget) {
  EXPECT_THROW(dis::hill_climb(dis::starting_rep(4, 1), config(1, 1)),
               dis::InfeasibleTarget);
  EXPECT_THROW(dis::hill_climb(dis::starting_rep(12, 3), config(3, 1)),
               dis::InfeasibleTarget);
}

TEST(Search, StringRealization) {
  // At width d the realization is the string society itself.
  for (const char* text : {"ABCDEBECAD", "ABCDEFGHEADFCGBH", "AA", "ABAB"}) {
    const auto s = dis::parse_double_string(text);
    const int d = dis::diameter(s).diameter;
    const auto rep = dis::endpoint_rep_from_string(s, std::max(d, 1));
    const auto report = dis::verify_certificate(rep, std::nullopt);
    EXPECT_TRUE(report.pairwise_intersecting) << text;
    EXPECT_EQ(report.approval, s.n() == 1 ? 1 : d + 1) << text;
  }
  EXPECT_EQ(dis::starting_rep(1, 1).to_string(), "+A-A+A-A");
  EXPECT_EQ(dis::voter_name(25), "Z");
  EXPECT_EQ(dis::voter_name(26), "V26");
}

TEST(Search, VerifyCorpus) {
  for (const auto& listing : dis::corpus::kSwapListings) {
    const auto report =
        dis::verify_certificate(dis::parse_endpoint_rep(listing.rep), listing.approval);
    EXPECT_TRUE(report.pass) << listing.n;
    EXPECT_EQ(report.n, static_cast<std::size_t>(listing.n));
    EXPECT_EQ(report.ratio, dis::Ratio(listing.approval, listing.n));
    EXPECT_TRUE(dis::conjecture_holds(report.approval, listing.n));
  }
  const auto wrong =
      dis::verify_certificate(dis::parse_endpoint_rep(dis::corpus::kFourVoters), 4);
  EXPECT_FALSE(wrong.pass);
  EXPECT_NE(dis::format_report(wrong).find("approval mismatch"), std::string::npos);
  const auto apart =
      dis::verify_certificate(dis::parse_endpoint_rep("+A-A+A-A+B-B+B-B"), std::nullopt);
  EXPECT_FALSE(apart.pass);
  ASSERT_EQ(apart.missing_pairs.size(), 1u);
  EXPECT_FALSE(dis::conjecture_holds(3, 10));
  EXPECT_TRUE(dis::conjecture_holds(4, 12));
}

TEST(Search, CertificateRoundTrip) {
  const auto state = dis::make_search_state(dis::parse_endpoint_rep(dis::corpus::kFourVoters));
  const std::string text = dis::format_certificate(state, 42);
  EXPECT_EQ(text.substr(0, text.find('\n')), "# n=4 a=3 ratio=3/4 seed=42");
  const auto cert = dis::parse_certificate(text + "# run=0 moves=7\n");
  EXPECT_EQ(cert.rep, state.rep);
  EXPECT_EQ(cert.claimed, 3);
  EXPECT_EQ(cert.seed, 42u);
  EXPECT_THROW(dis::parse_certificate("# a=x\n+A-A+A-A\n"), dis::ParseError);
  EXPECT_THROW(dis::parse_certificate("# n=1\n"), dis::ParseError);
}
