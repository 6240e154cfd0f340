#include "dis/society.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

namespace dis {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Society::Society(std::vector<Voter> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw ValidationError("society has no voters");
  std::unordered_set<std::string> seen;
  for (const Voter& v : voters_) {
    if (!is_valid_name(v.name)) {
      throw ValidationError("invalid voter name '" + v.name + "'");
    }
    if (!seen.insert(v.name).second) {
      throw ValidationError("duplicate voter name '" + v.name + "'");
    }
    if (v.first.hi < v.first.lo || v.second.hi < v.second.lo) {
      throw ValidationError("voter " + v.name + " has an interval with hi < lo");
    }
    if (!(v.first.hi < v.second.lo)) {
      throw ValidationError("voter " + v.name +
                            ": first interval must end strictly before the "
                            "second begins");
    }
  }
}

bool Society::has_distinct_endpoints() const {
  std::set<Coord> coords;
  for (const Voter& v : voters_) {
    for (Coord c : {v.first.lo, v.first.hi, v.second.lo, v.second.hi}) {
      if (!coords.insert(c).second) return false;
    }
  }
  return true;
}

int approval_at(const Society& society, Coord p) {
  int count = 0;
  for (const Voter& v : society.voters()) count += v.approves(p) ? 1 : 0;
  return count;
}

ApprovalResult approval_number(const Society& society) {
  struct Event {
    Coord at;
    int delta;  // +1 open, -1 close
  };
  std::vector<Event> events;
  events.reserve(4 * society.size());
  for (const Voter& v : society.voters()) {
    for (const Interval& iv : {v.first, v.second}) {
      events.push_back({iv.lo, +1});
      events.push_back({iv.hi, -1});
    }
  }
  // Opens sort before closes at the same coordinate.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.at != b.at) return a.at < b.at;
    return a.delta > b.delta;
  });

  ApprovalResult result;
  int depth = 0;
  for (std::size_t i = 0; i < events.size();) {
    const Coord at = events[i].at;
    for (; i < events.size() && events[i].at == at && events[i].delta > 0; ++i)
      ++depth;
    // The voter's own intervals are disjoint, so depth counts voters.
    if (depth > result.approval_number) {
      result.approval_number = depth;
      result.witness_platform = at;
    }
    for (; i < events.size() && events[i].at == at; ++i) --depth;
  }
  result.approval_ratio = Ratio(result.approval_number,
                                static_cast<std::int64_t>(society.size()));
  return result;
}

IntersectionReport is_pairwise_intersecting(const Society& society) {
  IntersectionReport report;
  const auto voters = society.voters();
  for (std::size_t i = 0; i < voters.size(); ++i) {
    for (std::size_t j = i + 1; j < voters.size(); ++j) {
      if (!voters[i].agrees_with(voters[j])) {
        report.violating_pairs.emplace_back(i, j);
      }
    }
  }
  report.pairwise_intersecting = report.violating_pairs.empty();
  return report;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError("malformed coordinate '" + std::string(whole) + "'",
                     std::string(whole), 0);
  }
  return value;
}

}  // namespace

Coord parse_coord(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Coord(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'",
                     std::string(text), 0);
  }
  return Coord(num, den);
}

std::string format_coord(Coord c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Society parse_society(std::string_view text) {
  std::vector<Voter> voters;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    std::string coords[4];
    for (auto& c : coords) {
      if (!(fields >> c)) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected NAME lo1 hi1 lo2 hi2",
                         name, line_no);
      }
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": trailing field '" + extra + "'",
                       name, line_no);
    }
    try {
      voters.push_back({name,
                        {parse_coord(coords[0]), parse_coord(coords[1])},
                        {parse_coord(coords[2]), parse_coord(coords[3])}});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       name, line_no);
    }
  }
  if (voters.empty()) throw ParseError("no voters in society text", "", 0);
  return Society(std::move(voters));
}

std::string format_society(const Society& society) {
  std::string out;
  for (const Voter& v : society.voters()) {
    out += v.name;
    for (Coord c : {v.first.lo, v.first.hi, v.second.lo, v.second.hi}) {
      out += ' ';
      out += format_coord(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dis
