#include "dis/endpoint_rep.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace dis {

namespace {

char sign_of(Side side) { return side == Side::open ? '+' : '-'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

EndpointRepresentation::EndpointRepresentation(std::vector<EndpointToken> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) {
    throw ParseError("empty endpoint representation", "", 0);
  }
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const EndpointToken& t = tokens_[i];
    if (!is_valid_name(t.name)) {
      throw ParseError("token " + std::to_string(i) + ": invalid name '" +
                           t.name + "'",
                       t.name, i);
    }
    int& count = seen[t.name];
    if (count == 4) {
      throw ParseError("token " + std::to_string(i) + ": '" + t.name +
                           "' occurs more than 4 times",
                       t.name, i);
    }
    const Side expected = count % 2 == 0 ? Side::open : Side::close;
    if (t.side != expected) {
      throw ParseError("token " + std::to_string(i) + ": expected " +
                           sign_of(expected) + t.name + " but found " +
                           sign_of(t.side) + t.name,
                       t.name, i);
    }
    ++count;
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& name = tokens_[i].name;
    if (seen[name] != 4) {
      throw ParseError("'" + name + "' occurs " + std::to_string(seen[name]) +
                           " times (first at token " + std::to_string(i) +
                           "), expected 4",
                       name, i);
    }
  }
}

std::vector<std::string> EndpointRepresentation::names() const {
  std::vector<std::string> out;
  out.reserve(voter_count());
  std::unordered_map<std::string_view, bool> seen;
  for (const EndpointToken& t : tokens_) {
    if (!seen[t.name]) {
      seen[t.name] = true;
      out.push_back(t.name);
    }
  }
  return out;
}

std::string EndpointRepresentation::to_string() const {
  std::string out;
  for (const EndpointToken& t : tokens_) {
    out += sign_of(t.side);
    out += t.name;
  }
  return out;
}

EndpointRepresentation parse_endpoint_rep(std::string_view text) {
  std::vector<EndpointToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '+' && c != '-') {
      throw ParseError("token " + std::to_string(tokens.size()) +
                           ": expected '+' or '-' but found '" +
                           std::string(1, c) + "'",
                       std::string(1, c), tokens.size());
    }
    std::size_t j = i + 1;
    while (j < text.size() && is_name_char(text[j])) ++j;
    if (j == i + 1) {
      throw ParseError("token " + std::to_string(tokens.size()) +
                           ": missing name after '" + std::string(1, c) + "'",
                       "", tokens.size());
    }
    tokens.push_back({c == '+' ? Side::open : Side::close,
                      std::string(text.substr(i + 1, j - i - 1))});
    i = j;
  }
  return EndpointRepresentation(std::move(tokens));
}

Society society_from_endpoint_rep(const EndpointRepresentation& rep) {
  std::unordered_map<std::string_view, std::size_t> index;
  std::vector<Voter> voters;
  std::vector<int> seen;
  const auto tokens = rep.tokens();
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto [it, inserted] = index.try_emplace(tokens[k].name, voters.size());
    if (inserted) {
      voters.push_back({tokens[k].name, {}, {}});
      seen.push_back(0);
    }
    Voter& v = voters[it->second];
    const Coord at(static_cast<std::int64_t>(k + 1));
    switch (seen[it->second]++) {
      case 0: v.first.lo = at; break;
      case 1: v.first.hi = at; break;
      case 2: v.second.lo = at; break;
      default: v.second.hi = at; break;
    }
  }
  return Society(std::move(voters));
}

EndpointRepresentation endpoint_rep_from_society(const Society& society) {
  struct Endpoint {
    Coord at;
    Side side;
    const std::string* name;
  };
  std::vector<Endpoint> endpoints;
  endpoints.reserve(4 * society.size());
  for (const Voter& v : society.voters()) {
    endpoints.push_back({v.first.lo, Side::open, &v.name});
    endpoints.push_back({v.first.hi, Side::close, &v.name});
    endpoints.push_back({v.second.lo, Side::open, &v.name});
    endpoints.push_back({v.second.hi, Side::close, &v.name});
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [](const Endpoint& a, const Endpoint& b) { return a.at < b.at; });
  for (std::size_t i = 1; i < endpoints.size(); ++i) {
    if (endpoints[i].at == endpoints[i - 1].at) {
      throw ValidationError(
          "coincident endpoints at " + format_coord(endpoints[i].at) + " (" +
          *endpoints[i - 1].name + ", " + *endpoints[i].name +
          "); perturb the society or use approval_number directly");
    }
  }
  std::vector<EndpointToken> tokens;
  tokens.reserve(endpoints.size());
  for (const Endpoint& e : endpoints) tokens.push_back({e.side, *e.name});
  return EndpointRepresentation(std::move(tokens));
}

}  // namespace dis
