#ifndef DIS_ENDPOINT_REP_HPP_
#define DIS_ENDPOINT_REP_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dis/society.hpp"

namespace dis {

enum class Side : unsigned char { open, close };

struct EndpointToken {
  Side side;
  std::string name;

  friend bool operator==(const EndpointToken&, const EndpointToken&) = default;
};

// Left-to-right order of all 4n endpoints of a society. Every name occurs
// exactly four times, as open, close, open, close.
class EndpointRepresentation {
 public:
  explicit EndpointRepresentation(std::vector<EndpointToken> tokens);

  std::span<const EndpointToken> tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  std::size_t voter_count() const { return tokens_.size() / 4; }

  // Voter names in order of first appearance.
  std::vector<std::string> names() const;

  // "+A+C+B-A...", no separators.
  std::string to_string() const;

  friend bool operator==(const EndpointRepresentation&,
                         const EndpointRepresentation&) = default;

 private:
  std::vector<EndpointToken> tokens_;
};

// Whitespace between tokens is ignored; names are case-sensitive.
EndpointRepresentation parse_endpoint_rep(std::string_view text);

// Realizes the representation with endpoint k (1-based) at coordinate k.
// Voters are listed in order of first appearance.
Society society_from_endpoint_rep(const EndpointRepresentation& rep);

// Requires all endpoint coordinates distinct.
EndpointRepresentation endpoint_rep_from_society(const Society& society);

}  // namespace dis

#endif  // DIS_ENDPOINT_REP_HPP_
