#ifndef DIS_SEARCH_HPP_
#define DIS_SEARCH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dis/double_string.hpp"
#include "dis/endpoint_rep.hpp"
#include "dis/society.hpp"

namespace dis {

// Target approval below the guaranteed lower bound for this n.
class InfeasibleTarget : public Error {
 public:
  using Error::Error;
};

// Lexicographic search objective: (approval above target, missing pairs).
struct Objective {
  int excess = 0;
  int missing = 0;

  bool solved() const { return excess == 0 && missing == 0; }
  friend auto operator<=>(const Objective&, const Objective&) = default;
};

struct SearchState {
  EndpointRepresentation rep;
  int approval = 0;
  // Voter pairs with no common platform, names in first-appearance order.
  std::vector<std::pair<std::string, std::string>> missing_pairs;
  // Sum over voter pairs of (meeting interval pairs - 1), for pairs that meet.
  int duplicate_adjacency_slack = 0;

  Objective objective(int target) const {
    return {std::max(0, approval - target),
            static_cast<int>(missing_pairs.size())};
  }
};

// Full evaluation of a representation.
SearchState make_search_state(const EndpointRepresentation& rep);

// Adjacent transpositions that keep every voter's open, close, open, close
// pattern: exactly the positions i whose tokens i and i+1 name different
// voters.
std::vector<std::size_t> legal_swaps(const EndpointRepresentation& rep);

struct Neighbor {
  std::size_t position;  // tokens position and position+1 were exchanged
  SearchState state;
};

// Every legal neighbor, with approval and missing pairs updated
// incrementally from `state`.
std::vector<Neighbor> neighbors(const SearchState& state);

struct SearchConfig {
  int target_approval = 0;
  std::uint64_t max_iterations = 100'000;  // moves per run
  int restarts = 1;                        // number of runs
  std::uint64_t sideways_limit = 1'000;    // consecutive equal moves
  std::uint64_t rng_seed = 1;
  int jobs = 1;
  // Recompute the objective from scratch after every move and throw
  // std::logic_error on disagreement.
  bool validate_incremental = false;
  // Where certificates below ratio 1/3 are written, if anywhere.
  std::optional<std::filesystem::path> preserve_dir;
};

struct TraceEntry {
  int run = 0;
  std::uint64_t iteration = 0;
  Objective objective;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct SearchResult {
  SearchState best;
  Objective objective;
  bool success = false;
  int run = 0;  // run that produced `best`
  std::uint64_t moves = 0;
  // Improvements of each run's incumbent, runs in index order.
  std::vector<TraceEntry> trace;
  // Set when a success has approval ratio below 1/3.
  bool extraordinary = false;
};

// Run 0 starts from `initial`; later runs start from randomized
// constructions realized at width target - 1. Moves are the legal adjacent
// swaps plus exchanges of two same-side endpoints (two opens or two closes)
// that keep both voters' patterns; the latter leave the approval number
// unchanged and only move meetings between voters. Each run accepts the first
// strictly improving move found from a random scan offset, otherwise a random
// equal-objective move while fewer than sideways_limit have been taken in a
// row. The search stops at the first run reaching objective (0, 0); the
// result is identical for any `jobs`.
SearchResult hill_climb(const EndpointRepresentation& initial,
                        const SearchConfig& config);

// Realizes a double-n string at the given width: occurrence p spans
// [p, p + width], touching intervals are ordered open-before-close, and a
// symbol whose first interval would reach its second is cut just before it.
EndpointRepresentation endpoint_rep_from_string(const DoubleNString& s,
                                                int width);

// Default starting layout for n voters: construct_quarter(n) (or the obvious
// strings for n < 3) with letter names, at width target - 1.
EndpointRepresentation starting_rep(int n, int target);

// A(0) .. Z(25), then V26, V27, ...
std::string voter_name(std::size_t index);

// Approval ratio at least 1/3.
bool conjecture_holds(std::int64_t approval, std::int64_t n);

struct CertificateReport {
  std::size_t n = 0;
  int approval = 0;
  Ratio ratio;
  bool pairwise_intersecting = false;
  std::vector<std::pair<std::string, std::string>> missing_pairs;
  std::optional<int> claimed;
  bool pass = false;
};

// PASS iff pairwise-intersecting and (when claimed) approval == claimed.
CertificateReport verify_certificate(const EndpointRepresentation& rep,
                                     std::optional<int> claimed);
CertificateReport verify_society(const Society& society,
                                 std::optional<int> claimed);
std::string format_report(const CertificateReport& report);

struct Certificate {
  EndpointRepresentation rep;
  std::optional<int> claimed;
  std::optional<std::uint64_t> seed;
};

// `# n=<n> a=<a> ratio=<p>/<q> seed=<seed>` followed by the representation.
std::string format_certificate(const SearchState& state, std::uint64_t seed);
// Reads an optional header; other '#' lines are ignored.
Certificate parse_certificate(std::string_view text);

}  // namespace dis

#endif  // DIS_SEARCH_HPP_
