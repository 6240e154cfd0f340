#ifndef DIS_DOUBLE_STRING_HPP_
#define DIS_DOUBLE_STRING_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dis/society.hpp"

namespace dis {

// A length-2n sequence over n symbols, each appearing exactly twice.
class DoubleNString {
 public:
  explicit DoubleNString(std::vector<std::string> symbols);

  std::span<const std::string> symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }
  // Number of distinct symbols.
  std::size_t n() const { return alphabet_.size(); }

  // Distinct symbols in order of first occurrence.
  std::span<const std::string> alphabet() const { return alphabet_; }
  // codes()[k] is the alphabet index of symbols()[k].
  std::span<const int> codes() const { return codes_; }
  // 0-based positions of both occurrences of alphabet symbol `code`.
  const std::array<int, 2>& positions(int code) const {
    return positions_[static_cast<std::size_t>(code)];
  }
  int code_of(std::string_view symbol) const;  // -1 when absent

  friend bool operator==(const DoubleNString& a, const DoubleNString& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::vector<std::string> alphabet_;
  std::vector<int> codes_;
  std::vector<std::array<int, 2>> positions_;
};

enum class StringStyle {
  automatic,  // compact when every symbol is one character, else comma
  compact,    // "ABCDEBECAD"
  comma,      // "1,2,3,1,2,3"
};

// When the text contains a comma, symbols are runs of [A-Za-z0-9_] separated
// by commas, parentheses or whitespace; otherwise every non-space character is
// one symbol.
DoubleNString parse_double_string(std::string_view text);
std::string to_string(const DoubleNString& s,
                      StringStyle style = StringStyle::automatic);

// Relabels symbols 1..n by order of first occurrence.
DoubleNString canonicalize(const DoubleNString& s);

// Minimum position difference over the four occurrence pairs of a and b.
int distance(const DoubleNString& s, std::string_view a, std::string_view b);

struct DiameterReport {
  int diameter = 0;
  // A symbol pair at distance `diameter`; empty for n = 1.
  std::optional<std::pair<std::string, std::string>> witness;
};

DiameterReport diameter(const DoubleNString& s);

// Occurrence at 1-based position p becomes the closed interval
// [p, p + width]. width must be at least the diameter. A symbol whose
// occurrences are exactly `width` apart would touch itself; its second
// interval is shifted right by 1/2, which keeps every adjacency of the
// string. Closer occurrences are rejected.
Society society_from_string(const DoubleNString& s, int width);

// S1 S2 S3 S4 S1 S3 S2 S4 with block lengths chosen by n mod 4; diameter is
// 2r-1, 2r, 2r, 2r+1 for n = 4r, 4r+1, 4r+2, 4r+3. Requires n >= 3.
DoubleNString construct_quarter(int n);

// The fixed 13-symbol string of diameter 4.
std::span<const int> thirteen_seed();

// Expands each seed symbol i to the run k(i-1)+1..ki with k = ceil(n/13) and
// drops symbols above n. Diameter is at most 5*ceil(n/13) - 1. Requires n >= 1.
DoubleNString construct_thirteen(int n);

// Upper bound on the diameter of construct_thirteen(n).
int thirteen_diameter_bound(int n);
// Exact diameter of construct_quarter(n) by residue class.
int quarter_diameter(int n);

// "1", "2", ... for integer labels.
DoubleNString from_labels(std::span<const int> labels);

}  // namespace dis

#endif  // DIS_DOUBLE_STRING_HPP_
