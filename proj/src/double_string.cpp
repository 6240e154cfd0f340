#include "dis/double_string.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace dis {

DoubleNString::DoubleNString(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("empty double-n string");
  std::unordered_map<std::string, int> code;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    const std::string& sym = symbols_[k];
    if (!is_valid_name(sym)) {
      throw ValidationError("invalid symbol '" + sym + "' at position " +
                            std::to_string(k + 1));
    }
    auto [it, inserted] = code.try_emplace(sym, static_cast<int>(alphabet_.size()));
    if (inserted) {
      alphabet_.push_back(sym);
      positions_.push_back({static_cast<int>(k), -1});
    } else {
      auto& pos = positions_[static_cast<std::size_t>(it->second)];
      if (pos[1] >= 0) {
        throw ValidationError("symbol '" + sym + "' occurs more than twice");
      }
      pos[1] = static_cast<int>(k);
    }
    codes_.push_back(it->second);
  }
  for (std::size_t c = 0; c < alphabet_.size(); ++c) {
    if (positions_[c][1] < 0) {
      throw ValidationError("symbol '" + alphabet_[c] + "' occurs only once");
    }
  }
}

int DoubleNString::code_of(std::string_view symbol) const {
  for (std::size_t c = 0; c < alphabet_.size(); ++c) {
    if (alphabet_[c] == symbol) return static_cast<int>(c);
  }
  return -1;
}

DoubleNString parse_double_string(std::string_view text) {
  std::vector<std::string> symbols;
  if (text.find(',') != std::string_view::npos) {
    std::string current;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      const char c = i < text.size() ? text[i] : ',';
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        current += c;
        continue;
      }
      if (c != ',' && c != '(' && c != ')' &&
          !std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError("unexpected character '" + std::string(1, c) +
                             "' at offset " + std::to_string(i),
                         std::string(1, c), i);
      }
      if (!current.empty()) symbols.push_back(std::move(current));
      current.clear();
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      symbols.emplace_back(1, c);
    }
  }
  try {
    return DoubleNString(std::move(symbols));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), "", 0);
  }
}

std::string to_string(const DoubleNString& s, StringStyle style) {
  if (style == StringStyle::automatic) {
    const bool single = std::all_of(s.symbols().begin(), s.symbols().end(),
                                    [](const auto& x) { return x.size() == 1; });
    style = single ? StringStyle::compact : StringStyle::comma;
  }
  std::string out;
  for (std::size_t k = 0; k < s.length(); ++k) {
    if (style == StringStyle::comma && k > 0) out += ',';
    out += s.symbols()[k];
  }
  return out;
}

DoubleNString canonicalize(const DoubleNString& s) {
  std::vector<std::string> out;
  out.reserve(s.length());
  for (int c : s.codes()) out.push_back(std::to_string(c + 1));
  return DoubleNString(std::move(out));
}

namespace {

int code_distance(const DoubleNString& s, int a, int b) {
  int best = static_cast<int>(s.length());
  for (int pa : s.positions(a)) {
    for (int pb : s.positions(b)) best = std::min(best, std::abs(pa - pb));
  }
  return best;
}

}  // namespace

int distance(const DoubleNString& s, std::string_view a, std::string_view b) {
  const int ca = s.code_of(a);
  const int cb = s.code_of(b);
  if (ca < 0 || cb < 0) {
    throw ValidationError("unknown symbol '" + std::string(ca < 0 ? a : b) +
                          "'");
  }
  if (ca == cb) throw ValidationError("distance needs two distinct symbols");
  return code_distance(s, ca, cb);
}

DiameterReport diameter(const DoubleNString& s) {
  DiameterReport report;
  const int n = static_cast<int>(s.n());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int d = code_distance(s, a, b);
      if (!report.witness || d > report.diameter) {
        report.diameter = d;
        report.witness.emplace(s.alphabet()[a], s.alphabet()[b]);
      }
    }
  }
  return report;
}

Society society_from_string(const DoubleNString& s, int width) {
  if (width < 1) throw ValidationError("width must be positive");
  const int d = diameter(s).diameter;
  if (width < d) {
    throw ValidationError("width " + std::to_string(width) +
                          " is below the diameter " + std::to_string(d));
  }
  std::vector<Voter> voters;
  voters.reserve(s.n());
  for (std::size_t c = 0; c < s.n(); ++c) {
    const auto [p0, p1] = s.positions(static_cast<int>(c));
    const int gap = p1 - p0;
    if (gap < width) {
      throw ValidationError("symbol '" + s.alphabet()[c] +
                            "' repeats within width " + std::to_string(width) +
                            "; its two intervals would overlap");
    }
    const Coord first_lo(p0 + 1);
    Coord second_lo(p1 + 1);
    if (gap == width) second_lo += Coord(1, 2);
    voters.push_back({s.alphabet()[c],
                      {first_lo, first_lo + width},
                      {second_lo, second_lo + width}});
  }
  return Society(std::move(voters));
}

DoubleNString from_labels(std::span<const int> labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(std::to_string(l));
  return DoubleNString(std::move(out));
}

DoubleNString construct_quarter(int n) {
  if (n < 3) throw ValidationError("construct_quarter needs n >= 3");
  if (n == 3) {
    const int labels[] = {1, 2, 3, 1, 2, 3};
    return from_labels(labels);
  }
  const int r = n / 4;
  std::array<int, 4> len{r, r, r, r};
  switch (n % 4) {
    case 1: len = {r, r, r, r + 1}; break;
    case 2: len = {r, r + 1, r + 1, r}; break;
    case 3: len = {r, r + 1, r + 1, r + 1}; break;
    default: break;
  }
  std::array<int, 4> start{};
  for (int b = 1; b < 4; ++b) start[b] = start[b - 1] + len[b - 1];
  std::vector<int> labels;
  labels.reserve(2 * static_cast<std::size_t>(n));
  for (int b : {0, 1, 2, 3, 0, 2, 1, 3}) {
    for (int i = 0; i < len[b]; ++i) labels.push_back(start[b] + i + 1);
  }
  return from_labels(labels);
}

int quarter_diameter(int n) {
  if (n < 3) throw ValidationError("construct_quarter needs n >= 3");
  const int r = n / 4;
  switch (n % 4) {
    case 0: return 2 * r - 1;
    case 3: return 2 * r + 1;
    default: return 2 * r;
  }
}

std::span<const int> thirteen_seed() {
  static constexpr int kSeed[] = {1,  2, 3, 4, 5,  6,  7,  8, 9,
                                  10, 1, 11, 6, 12, 13, 5, 4, 7,
                                  11, 10, 9, 2, 3, 13, 12, 8};
  return kSeed;
}

DoubleNString construct_thirteen(int n) {
  if (n < 1) throw ValidationError("construct_thirteen needs n >= 1");
  const int k = (n + 12) / 13;
  std::vector<int> labels;
  labels.reserve(2 * static_cast<std::size_t>(n));
  for (int i : thirteen_seed()) {
    for (int j = k * (i - 1) + 1; j <= k * i && j <= n; ++j) labels.push_back(j);
  }
  return from_labels(labels);
}

int thirteen_diameter_bound(int n) { return 5 * ((n + 12) / 13) - 1; }

}  // namespace dis
