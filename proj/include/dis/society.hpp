#ifndef DIS_SOCIETY_HPP_
#define DIS_SOCIETY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace dis {

// Spectrum positions and approval ratios are exact rationals.
using Coord = boost::rational<std::int64_t>;
using Ratio = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural invariant of an input object is violated.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `index` is the 0-based token (or line) position the
// problem was detected at; `symbol` is the offending name when there is one.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string symbol, std::size_t index)
      : Error(what), symbol_(std::move(symbol)), index_(index) {}

  const std::string& symbol() const { return symbol_; }
  std::size_t index() const { return index_; }

 private:
  std::string symbol_;
  std::size_t index_;
};

// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  Coord lo;
  Coord hi;

  bool contains(Coord p) const { return lo <= p && p <= hi; }
  bool meets(const Interval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Voter {
  std::string name;
  Interval first;
  Interval second;

  bool approves(Coord p) const {
    return first.contains(p) || second.contains(p);
  }
  bool agrees_with(const Voter& other) const {
    return first.meets(other.first) || first.meets(other.second) ||
           second.meets(other.first) || second.meets(other.second);
  }
  friend bool operator==(const Voter&, const Voter&) = default;
};

// Voter names are nonempty runs of [A-Za-z0-9_].
bool is_valid_name(std::string_view name);

// A double-interval society. Construction validates every voter; an instance
// is immutable afterwards.
class Society {
 public:
  explicit Society(std::vector<Voter> voters);

  std::size_t size() const { return voters_.size(); }
  std::span<const Voter> voters() const { return voters_; }
  const Voter& operator[](std::size_t i) const { return voters_[i]; }

  // True when all 4n endpoint coordinates are pairwise distinct.
  bool has_distinct_endpoints() const;

  friend bool operator==(const Society&, const Society&) = default;

 private:
  std::vector<Voter> voters_;
};

struct ApprovalResult {
  int approval_number = 0;
  Coord witness_platform;  // leftmost platform reaching approval_number
  Ratio approval_ratio;
};

// Number of voters approving platform p.
int approval_at(const Society& society, Coord p);

// Maximum approval over all platforms, by an endpoint sweep that applies all
// opens at a coordinate before any close there.
ApprovalResult approval_number(const Society& society);

struct IntersectionReport {
  bool pairwise_intersecting = true;
  // Index pairs (i < j) of voters that share no platform.
  std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
};

IntersectionReport is_pairwise_intersecting(const Society& society);

// Coordinates are integers or p/q rationals.
Coord parse_coord(std::string_view text);
std::string format_coord(Coord c);

// One voter per line: `NAME lo1 hi1 lo2 hi2`. Blank lines and lines starting
// with '#' are skipped.
Society parse_society(std::string_view text);
std::string format_society(const Society& society);

}  // namespace dis

#endif  // DIS_SOCIETY_HPP_
