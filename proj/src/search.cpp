#include "dis/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "dis/bounds.hpp"
#include "swap_engine.hpp"

namespace dis {

using internal::SwapEngine;

SearchState make_search_state(const EndpointRepresentation& rep) {
  return SwapEngine(rep).state();
}

std::vector<std::size_t> legal_swaps(const EndpointRepresentation& rep) {
  std::vector<std::size_t> out;
  const auto tokens = rep.tokens();
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    if (tokens[k].name != tokens[k + 1].name) out.push_back(k);
  }
  return out;
}

std::vector<Neighbor> neighbors(const SearchState& state) {
  const SwapEngine base(state.rep);
  std::vector<Neighbor> out;
  for (std::size_t k = 0; k + 1 < base.size(); ++k) {
    if (!base.legal(k)) continue;
    SwapEngine next = base;
    next.apply(k);
    out.push_back({k, next.state()});
  }
  return out;
}

std::string voter_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "V" + std::to_string(index);
}

bool conjecture_holds(std::int64_t approval, std::int64_t n) {
  return 3 * approval >= n;
}

EndpointRepresentation endpoint_rep_from_string(const DoubleNString& s,
                                                int width) {
  if (width < 0) throw ValidationError("width must be nonnegative");
  struct Endpoint {
    long key;
    Side side;
    int code;
  };
  std::vector<Endpoint> endpoints;
  endpoints.reserve(2 * s.length());
  for (std::size_t c = 0; c < s.n(); ++c) {
    const int code = static_cast<int>(c);
    const auto [p0, p1] = s.positions(code);
    const long first_close = p0 + width;
    endpoints.push_back({3L * p0 + 1, Side::open, code});
    // A close ties after opens at the same coordinate, except that a voter's
    // first interval always ends before its second begins.
    endpoints.push_back({first_close < p1 ? 3 * first_close + 2 : 3L * p1,
                         Side::close, code});
    endpoints.push_back({3L * p1 + 1, Side::open, code});
    endpoints.push_back({3L * (p1 + width) + 2, Side::close, code});
  }
  std::stable_sort(endpoints.begin(), endpoints.end(),
                   [](const Endpoint& a, const Endpoint& b) {
                     return a.key < b.key;
                   });
  std::vector<EndpointToken> tokens;
  tokens.reserve(endpoints.size());
  for (const Endpoint& e : endpoints) {
    tokens.push_back({e.side, voter_name(static_cast<std::size_t>(e.code))});
  }
  return EndpointRepresentation(std::move(tokens));
}

namespace {

DoubleNString small_string(int n) {
  if (n == 1) return from_labels(std::vector<int>{1, 1});
  if (n == 2) return from_labels(std::vector<int>{1, 2, 1, 2});
  return construct_quarter(n);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t seed, int run) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(run)));
}

// A construction with each maximal run of consecutive labels shuffled in
// place and the labels randomly renamed.
DoubleNString randomized_construction(int n, int run, std::mt19937_64& rng) {
  DoubleNString base = n >= 3 && run % 2 == 0 ? construct_thirteen(n)
                                              : small_string(n);
  std::vector<int> labels;
  for (const auto& sym : base.symbols()) labels.push_back(std::stoi(sym));
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= labels.size(); ++k) {
    if (k == labels.size() || labels[k] != labels[k - 1] + 1) {
      std::shuffle(labels.begin() + static_cast<long>(begin),
                   labels.begin() + static_cast<long>(k), rng);
      begin = k;
    }
  }
  std::vector<int> rename(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rename[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(rename.begin(), rename.end(), rng);
  for (int& l : labels) l = rename[static_cast<std::size_t>(l - 1)];
  return from_labels(labels);
}

struct RunResult {
  SearchState best;
  Objective objective;
  std::uint64_t moves = 0;
  std::vector<TraceEntry> trace;
};

RunResult run_once(const EndpointRepresentation& start, int run,
                   const SearchConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SwapEngine engine(start);
  const int target = config.target_approval;
  Objective current = engine.objective(target);
  RunResult result{engine.state(), current, 0, {{run, 0, current}}};
  if (config.validate_incremental) engine.check_consistency();

  // Moves 0..slots-1 are adjacent swaps; the rest index same-side
  // exchanges of tokens pairs[i].
  const std::size_t slots = engine.size() - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < engine.size(); ++i) {
    for (std::size_t j = i + 2; j < engine.size(); ++j) pairs.emplace_back(i, j);
  }
  const std::size_t total = slots + pairs.size();
  auto legal = [&](std::size_t m) {
    return m < slots ? engine.legal(m)
                     : engine.exchangeable(pairs[m - slots].first,
                                           pairs[m - slots].second);
  };
  auto peek = [&](std::size_t m) {
    return m < slots ? engine.peek(m, target)
                     : engine.peek_exchange(pairs[m - slots].first,
                                            pairs[m - slots].second, target);
  };
  std::vector<std::size_t> ties;
  std::uint64_t sideways = 0;
  for (std::uint64_t it = 1; it <= config.max_iterations && !current.solved();
       ++it) {
    result.moves = it;
    const std::size_t offset =
        std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    std::size_t chosen = total;
    ties.clear();
    for (std::size_t i = 0; i < total; ++i) {
      const std::size_t m = (offset + i) % total;
      if (!legal(m)) continue;
      const Objective next = peek(m);
      if (next < current) {
        chosen = m;
        break;
      }
      if (next == current) ties.push_back(m);
    }
    if (chosen != total) {
      sideways = 0;
    } else if (!ties.empty() && sideways < config.sideways_limit) {
      chosen = ties[std::uniform_int_distribution<std::size_t>(
          0, ties.size() - 1)(rng)];
      ++sideways;
    } else {
      break;
    }
    if (chosen < slots) {
      engine.apply(chosen);
    } else {
      engine.apply_exchange(pairs[chosen - slots].first,
                            pairs[chosen - slots].second);
    }
    if (config.validate_incremental) engine.check_consistency();
    current = engine.objective(target);
    if (current < result.objective) {
      result.objective = current;
      result.best = engine.state();
      result.trace.push_back({run, it, current});
    }
  }
  return result;
}

void preserve(const SearchState& state, std::uint64_t seed,
              const SearchConfig& config) {
  const std::size_t n = state.rep.voter_count();
  std::cerr << "EXTRAORDINARY: approval ratio " << state.approval << "/" << n
            << " is below 1/3\n"
            << format_certificate(state, seed);
  if (!config.preserve_dir) return;
  std::filesystem::create_directories(*config.preserve_dir);
  const auto path = *config.preserve_dir /
                    ("extraordinary_n" + std::to_string(n) + "_a" +
                     std::to_string(state.approval) + "_seed" +
                     std::to_string(seed) + ".txt");
  std::ofstream(path) << format_certificate(state, seed);
}

}  // namespace

EndpointRepresentation starting_rep(int n, int target) {
  if (n < 1) throw ValidationError("n must be positive");
  return endpoint_rep_from_string(small_string(n), std::max(0, target - 1));
}

SearchResult hill_climb(const EndpointRepresentation& initial,
                        const SearchConfig& config) {
  const auto n = static_cast<std::int64_t>(initial.voter_count());
  const std::int64_t floor = approval_lower_bound(n);
  if (config.target_approval < floor) {
    throw InfeasibleTarget("target approval " +
                           std::to_string(config.target_approval) +
                           " is below the lower bound " + std::to_string(floor) +
                           " for n = " + std::to_string(n));
  }
  const int runs = std::max(1, config.restarts);
  std::vector<std::optional<RunResult>> results(static_cast<std::size_t>(runs));
  std::atomic<int> next{0};
  std::atomic<int> first_success{runs};

  auto work = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= runs || r > first_success.load()) return;
      const std::uint64_t seed = run_seed(config.rng_seed, r);
      std::mt19937_64 start_rng(seed ^ 0x5bd1e995ULL);
      const EndpointRepresentation start =
          r == 0 ? initial
                 : endpoint_rep_from_string(
                       randomized_construction(static_cast<int>(n), r,
                                               start_rng),
                       std::max(0, config.target_approval - 1));
      RunResult res = run_once(start, r, config, seed);
      if (res.objective.solved()) {
        int seen = first_success.load();
        while (r < seen && !first_success.compare_exchange_weak(seen, r)) {
        }
      }
      results[static_cast<std::size_t>(r)] = std::move(res);
    }
  };
  const int jobs = std::clamp(config.jobs, 1, runs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  const int last = std::min(first_success.load(), runs - 1);
  int best_run = 0;
  for (int r = 1; r <= last; ++r) {
    if (results[static_cast<std::size_t>(r)]->objective <
        results[static_cast<std::size_t>(best_run)]->objective) {
      best_run = r;
    }
  }
  const RunResult& winner = *results[static_cast<std::size_t>(best_run)];
  SearchResult out{winner.best, winner.objective, winner.objective.solved(),
                   best_run, 0, {}, false};
  for (int r = 0; r <= last; ++r) {
    const RunResult& res = *results[static_cast<std::size_t>(r)];
    out.moves += res.moves;
    out.trace.insert(out.trace.end(), res.trace.begin(), res.trace.end());
  }
  if (out.success && !conjecture_holds(out.best.approval, n)) {
    out.extraordinary = true;
    preserve(out.best, config.rng_seed, config);
  }
  return out;
}

CertificateReport verify_certificate(const EndpointRepresentation& rep,
                                     std::optional<int> claimed) {
  return verify_society(society_from_endpoint_rep(rep), claimed);
}

CertificateReport verify_society(const Society& society,
                                 std::optional<int> claimed) {
  const ApprovalResult approval = approval_number(society);
  const IntersectionReport meets = is_pairwise_intersecting(society);
  CertificateReport report;
  report.n = society.size();
  report.approval = approval.approval_number;
  report.ratio = approval.approval_ratio;
  report.pairwise_intersecting = meets.pairwise_intersecting;
  for (const auto& [i, j] : meets.violating_pairs) {
    report.missing_pairs.emplace_back(society[i].name, society[j].name);
  }
  report.claimed = claimed;
  report.pass = report.pairwise_intersecting &&
                (!claimed || *claimed == report.approval);
  return report;
}

std::string format_report(const CertificateReport& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS" : "FAIL") << " n=" << report.n
      << " a=" << report.approval << " ratio=" << report.ratio.numerator()
      << "/" << report.ratio.denominator() << " ("
      << format_ratio_decimal(report.ratio) << ")"
      << " pairwise=" << (report.pairwise_intersecting ? "yes" : "no");
  if (report.claimed) out << " claimed=" << *report.claimed;
  out << '\n';
  for (const auto& [a, b] : report.missing_pairs) {
    out << "  missing pair " << a << " " << b << '\n';
  }
  if (report.claimed && *report.claimed != report.approval) {
    out << "  approval mismatch: claimed " << *report.claimed << ", computed "
        << report.approval << '\n';
  }
  return out.str();
}

std::string format_certificate(const SearchState& state, std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(state.rep.voter_count());
  const Ratio ratio(state.approval, n);
  return "# n=" + std::to_string(n) + " a=" + std::to_string(state.approval) +
         " ratio=" + std::to_string(ratio.numerator()) + "/" +
         std::to_string(ratio.denominator()) + " seed=" + std::to_string(seed) +
         "\n" + state.rep.to_string() + "\n";
}

Certificate parse_certificate(std::string_view text) {
  std::optional<int> claimed;
  std::optional<std::uint64_t> seed;
  std::string body;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') {
      std::istringstream fields(line.substr(first + 1));
      std::string field;
      while (fields >> field) {
        try {
          if (field.rfind("a=", 0) == 0) claimed = std::stoi(field.substr(2));
          if (field.rfind("seed=", 0) == 0) seed = std::stoull(field.substr(5));
        } catch (const std::exception&) {
          throw ParseError("malformed certificate header field '" + field + "'",
                           field, 0);
        }
      }
      continue;
    }
    body += line;
    body += '\n';
  }
  return {parse_endpoint_rep(body), claimed, seed};
}

}  // namespace dis
