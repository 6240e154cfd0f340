#include "swap_engine.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace dis::internal {

SwapEngine::SwapEngine(const EndpointRepresentation& rep) {
  names_ = rep.names();
  n_ = static_cast<int>(names_.size());
  std::unordered_map<std::string_view, int> index;
  for (int v = 0; v < n_; ++v) index[names_[static_cast<std::size_t>(v)]] = v;
  pos_.resize(static_cast<std::size_t>(n_));
  std::vector<int> seen(static_cast<std::size_t>(n_), 0);
  for (const EndpointToken& t : rep.tokens()) {
    const int v = index.at(t.name);
    const int occ = seen[static_cast<std::size_t>(v)]++;
    pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(occ)] =
        static_cast<int>(voter_.size());
    voter_.push_back(v);
    open_.push_back(t.side == Side::open);
    occurrence_.push_back(occ);
  }
  rebuild();
}

void SwapEngine::rebuild() {
  const std::size_t m = voter_.size();
  depth_.assign(m, 0);
  depth_count_.assign(static_cast<std::size_t>(2 * n_ + 2), 0);
  max_depth_ = 0;
  int depth = 0;
  for (std::size_t k = 0; k < m; ++k) {
    depth += open_[k] ? 1 : -1;
    depth_[k] = depth;
    ++depth_count_[static_cast<std::size_t>(depth)];
    max_depth_ = std::max(max_depth_, depth);
  }

  std::vector<std::array<int, 4>> pos(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < m; ++k) {
    pos[static_cast<std::size_t>(voter_[k])]
       [static_cast<std::size_t>(occurrence_[k])] = static_cast<int>(k);
  }
  meet_.assign(static_cast<std::size_t>(n_ * n_), 0);
  missing_ = 0;
  duplicate_ = 0;
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      int count = 0;
      const auto& a = pos[static_cast<std::size_t>(x)];
      const auto& b = pos[static_cast<std::size_t>(y)];
      for (int i : {0, 2}) {
        for (int j : {0, 2}) {
          if (a[i] < b[j + 1] && b[j] < a[i + 1]) ++count;
        }
      }
      meet(x, y) = count;
      meet(y, x) = count;
      if (count == 0) ++missing_;
      duplicate_ += std::max(0, count - 1);
    }
  }
}

SwapEngine::Kind SwapEngine::kind(std::size_t k) const {
  if (open_[k] == open_[k + 1]) return Kind::neutral;
  return open_[k] ? Kind::separate : Kind::join;
}

Objective SwapEngine::peek(std::size_t k, int target) const {
  const int x = voter_[k];
  const int y = voter_[k + 1];
  int max_depth = max_depth_;
  int missing = missing_;
  switch (kind(k)) {
    case Kind::neutral:
      break;
    case Kind::separate: {
      const int old = depth_[k];
      if (old == max_depth_ &&
          depth_count_[static_cast<std::size_t>(old)] == 1) {
        max_depth = max_depth_ - 1;
      }
      if (meet(x, y) == 1) ++missing;
      break;
    }
    case Kind::join:
      max_depth = std::max(max_depth_, depth_[k] + 2);
      if (meet(x, y) == 0) --missing;
      break;
  }
  return {std::max(0, max_depth - target), missing};
}

void SwapEngine::apply(std::size_t k) {
  const int x = voter_[k];
  const int y = voter_[k + 1];
  const Kind kd = kind(k);
  if (kd != Kind::neutral) {
    const int old = depth_[k];
    const int now = kd == Kind::join ? old + 2 : old - 2;
    --depth_count_[static_cast<std::size_t>(old)];
    ++depth_count_[static_cast<std::size_t>(now)];
    depth_[k] = now;
    if (now > max_depth_) max_depth_ = now;
    while (depth_count_[static_cast<std::size_t>(max_depth_)] == 0) --max_depth_;

    int& c = meet(x, y);
    if (kd == Kind::join) {
      if (c == 0) --missing_;
      if (c >= 1) ++duplicate_;
      ++c;
    } else {
      if (c == 1) ++missing_;
      if (c >= 2) --duplicate_;
      --c;
    }
    meet(y, x) = c;
  }
  std::swap(voter_[k], voter_[k + 1]);
  std::swap(occurrence_[k], occurrence_[k + 1]);
  const bool tmp = open_[k];
  open_[k] = open_[k + 1];
  open_[k + 1] = tmp;
  pos_[static_cast<std::size_t>(x)][static_cast<std::size_t>(occurrence_[k + 1])] =
      static_cast<int>(k + 1);
  pos_[static_cast<std::size_t>(y)][static_cast<std::size_t>(occurrence_[k])] =
      static_cast<int>(k);
}

bool SwapEngine::exchangeable(std::size_t i, std::size_t j) const {
  if (i >= j || j >= voter_.size() || open_[i] != open_[j]) return false;
  const int x = voter_[i];
  const int y = voter_[j];
  if (x == y) return false;
  // x's token moves right to j, y's token moves left to i; each must stay
  // between its voter's neighbouring endpoints.
  const int ox = occurrence_[i];
  const int oy = occurrence_[j];
  const auto& px = pos_[static_cast<std::size_t>(x)];
  const auto& py = pos_[static_cast<std::size_t>(y)];
  return (ox == 3 || px[static_cast<std::size_t>(ox + 1)] > static_cast<int>(j)) &&
         (oy == 0 || py[static_cast<std::size_t>(oy - 1)] < static_cast<int>(i));
}

std::pair<int, int> SwapEngine::exchange_roles(std::size_t i,
                                               std::size_t j) const {
  // Opens: the earlier voter's interval shrinks. Closes: it grows.
  if (open_[i]) return {voter_[i], voter_[j]};
  return {voter_[j], voter_[i]};
}

Objective SwapEngine::peek_exchange(std::size_t i, std::size_t j,
                                    int target) const {
  const auto [lose, gain] = exchange_roles(i, j);
  const bool flip_open = !open_[i];
  int missing = missing_;
  // A voter z can have at most two tokens in the range; handle both at once.
  for (std::size_t p = i + 1; p < j; ++p) {
    if (open_[p] != flip_open) continue;
    const int z = voter_[p];
    const int oz = occurrence_[p];
    const int other = pos_[static_cast<std::size_t>(z)]
                          [static_cast<std::size_t>(oz ^ 2)];
    const bool twice = other > static_cast<int>(i) && other < static_cast<int>(j);
    if (twice && other < static_cast<int>(p)) continue;
    const int k = twice ? 2 : 1;
    if (meet(lose, z) > 0 && meet(lose, z) - k == 0) ++missing;
    if (meet(gain, z) == 0) --missing;
  }
  return {std::max(0, max_depth_ - target), missing};
}

void SwapEngine::apply_exchange(std::size_t i, std::size_t j) {
  const auto [lose, gain] = exchange_roles(i, j);
  const bool flip_open = !open_[i];
  for (std::size_t p = i + 1; p < j; ++p) {
    if (open_[p] != flip_open) continue;
    const int z = voter_[p];
    int& down = meet(lose, z);
    if (down == 1) ++missing_;
    if (down >= 2) --duplicate_;
    --down;
    meet(z, lose) = down;
    int& up = meet(gain, z);
    if (up == 0) --missing_;
    if (up >= 1) ++duplicate_;
    ++up;
    meet(z, gain) = up;
  }
  const int x = voter_[i];
  const int y = voter_[j];
  std::swap(voter_[i], voter_[j]);
  std::swap(occurrence_[i], occurrence_[j]);
  pos_[static_cast<std::size_t>(x)][static_cast<std::size_t>(occurrence_[j])] =
      static_cast<int>(j);
  pos_[static_cast<std::size_t>(y)][static_cast<std::size_t>(occurrence_[i])] =
      static_cast<int>(i);
}

EndpointRepresentation SwapEngine::rep() const {
  std::vector<EndpointToken> tokens;
  tokens.reserve(voter_.size());
  for (std::size_t k = 0; k < voter_.size(); ++k) {
    tokens.push_back({open_[k] ? Side::open : Side::close,
                      names_[static_cast<std::size_t>(voter_[k])]});
  }
  return EndpointRepresentation(std::move(tokens));
}

SearchState SwapEngine::state() const {
  SearchState s{rep(), max_depth_, {}, duplicate_};
  // Names in first-appearance order of the current arrangement.
  const auto order = s.rep.names();
  std::vector<int> rank(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto it = std::find(names_.begin(), names_.end(), order[i]);
    rank[static_cast<std::size_t>(it - names_.begin())] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (meet(x, y) != 0) continue;
      int a = rank[static_cast<std::size_t>(x)];
      int b = rank[static_cast<std::size_t>(y)];
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) {
    s.missing_pairs.emplace_back(order[static_cast<std::size_t>(a)],
                                 order[static_cast<std::size_t>(b)]);
  }
  return s;
}

bool SwapEngine::positions_consistent() const {
  for (std::size_t k = 0; k < voter_.size(); ++k) {
    if (pos_[static_cast<std::size_t>(voter_[k])]
            [static_cast<std::size_t>(occurrence_[k])] != static_cast<int>(k)) {
      return false;
    }
  }
  return true;
}

void SwapEngine::check_consistency() const {
  SwapEngine fresh = *this;
  fresh.rebuild();
  if (fresh.depth_ != depth_ || fresh.max_depth_ != max_depth_ ||
      fresh.meet_ != meet_ || fresh.missing_ != missing_ ||
      fresh.duplicate_ != duplicate_ || fresh.depth_count_ != depth_count_ ||
      !positions_consistent()) {
    throw std::logic_error("incremental swap state diverged from recomputation");
  }
}

}  // namespace dis::internal
