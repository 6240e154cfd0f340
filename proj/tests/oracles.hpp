// Independent reference implementations used as test oracles. They share no
// code with the library beyond the plain data types.
#ifndef DIS_TESTS_ORACLES_HPP_
#define DIS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dis/society.hpp"

namespace oracle {

using dis::Coord;

inline bool inside(const dis::Interval& i, Coord p) { return i.lo <= p && p <= i.hi; }

// Max over every endpoint coordinate of the number of approving voters.
inline int approval(const dis::Society& s) {
  int best = 0;
  for (const dis::Voter& probe : s.voters()) {
    for (Coord p : {probe.first.lo, probe.first.hi, probe.second.lo, probe.second.hi}) {
      int count = 0;
      for (const dis::Voter& v : s.voters()) {
        if (inside(v.first, p) || inside(v.second, p)) ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}

inline bool overlap(const dis::Interval& a, const dis::Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

inline bool agree(const dis::Voter& x, const dis::Voter& y) {
  for (const auto* a : {&x.first, &x.second}) {
    for (const auto* b : {&y.first, &y.second}) {
      if (overlap(*a, *b)) return true;
    }
  }
  return false;
}

inline bool pairwise(const dis::Society& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!agree(s[i], s[j])) return false;
    }
  }
  return true;
}

// Random valid society on small integer coordinates (plenty of shared
// endpoints and touching intervals). Optional half-integer offsets.
inline dis::Society random_society(std::mt19937_64& rng, int n, int span,
                                   bool halves = false) {
  std::uniform_int_distribution<int> coord(0, span);
  std::vector<dis::Voter> voters;
  for (int v = 0; v < n; ++v) {
    std::vector<Coord> c;
    for (int k = 0; k < 4; ++k) {
      Coord x(coord(rng));
      if (halves && rng() % 2) x += Coord(1, 2);
      c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    if (c[1] == c[2]) c[2] += Coord(1, 3);  // keep the two intervals disjoint
    if (c[3] < c[2]) c[3] = c[2];
    voters.push_back({"V" + std::to_string(v), {c[0], c[1]}, {c[2], c[3]}});
  }
  return dis::Society(std::move(voters));
}

// Random society whose 4n endpoints are distinct integers.
inline dis::Society random_distinct_society(std::mt19937_64& rng, int n) {
  std::vector<int> coords(static_cast<std::size_t>(4 * n));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = static_cast<int>(i);
  std::shuffle(coords.begin(), coords.end(), rng);
  std::vector<dis::Voter> voters;
  for (int v = 0; v < n; ++v) {
    std::vector<int> c(coords.begin() + 4 * v, coords.begin() + 4 * v + 4);
    std::sort(c.begin(), c.end());
    voters.push_back({"V" + std::to_string(v),
                      {Coord(c[0]), Coord(c[1])},
                      {Coord(c[2]), Coord(c[3])}});
  }
  return dis::Society(std::move(voters));
}

// Diameter straight from the definition, on integer labels.
inline int diameter(const std::vector<int>& s) {
  std::vector<std::vector<int>> at;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (static_cast<std::size_t>(s[p]) >= at.size()) at.resize(static_cast<std::size_t>(s[p]) + 1);
    at[static_cast<std::size_t>(s[p])].push_back(static_cast<int>(p));
  }
  int best = 0;
  for (std::size_t a = 0; a < at.size(); ++a) {
    for (std::size_t b = a + 1; b < at.size(); ++b) {
      if (at[a].empty() || at[b].empty()) continue;
      int d = 1 << 30;
      for (int x : at[a]) {
        for (int y : at[b]) d = std::min(d, std::abs(x - y));
      }
      best = std::max(best, d);
    }
  }
  return best;
}

inline std::uint64_t double_factorial(int k) {
  std::uint64_t r = 1;
  for (int i = k; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle

#endif  // DIS_TESTS_ORACLES_HPP_
