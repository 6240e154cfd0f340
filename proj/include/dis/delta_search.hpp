#ifndef DIS_DELTA_SEARCH_HPP_
#define DIS_DELTA_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "dis/double_string.hpp"
#include "dis/society.hpp"

namespace dis {

// Requested n is above the configured enumeration limit.
class SearchLimitExceeded : public Error {
 public:
  using Error::Error;
};

struct DeltaOptions {
  int limit = 8;
  // Worker threads; subtrees below fixed prefixes are split among them.
  int jobs = 1;
  // When deciding "diameter <= d" with d < n/2, force the first n-d symbols
  // to be distinct.
  bool distinct_prefix_pruning = true;
};

struct DeltaResult {
  int delta = 0;
  DoubleNString witness;
  // Search-tree nodes expanded over all decision rounds.
  std::uint64_t nodes = 0;
};

// (2n-1)!!, the number of canonical double-n strings; saturates at
// UINT64_MAX.
std::uint64_t canonical_string_count(int n);

// Visits every canonical double-n string (labels 1..n introduced in order).
// Returns the number visited.
std::uint64_t for_each_canonical_string(
    int n, const std::function<void(std::span<const int>)>& visit);

// Lexicographically first canonical string of diameter <= d, if any.
std::optional<DoubleNString> find_string_within(int n, int d,
                                                const DeltaOptions& options = {},
                                                std::uint64_t* nodes = nullptr);

// Minimum diameter over all double-n strings, with a witness. Decides
// "diameter <= d" for d descending from a construction's diameter.
DeltaResult delta_exhaustive(int n, const DeltaOptions& options = {});

}  // namespace dis

#endif  // DIS_DELTA_SEARCH_HPP_
