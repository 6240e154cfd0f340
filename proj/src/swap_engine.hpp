#ifndef DIS_SRC_SWAP_ENGINE_HPP_
#define DIS_SRC_SWAP_ENGINE_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dis/endpoint_rep.hpp"
#include "dis/search.hpp"

namespace dis::internal {

// Integer view of an endpoint representation with O(1) evaluation of adjacent
// swaps. Token k sits at coordinate k, so only the relative order matters:
//  - depth_[k] is the number of open intervals just after token k; the
//    approval number is the largest depth.
//  - meet_[x*n+y] counts interval pairs of voters x and y that intersect.
// Exchanging "open x, close y" separates one interval pair and lowers
// depth_[k] by 2; the reverse joins one pair and raises it by 2. Swaps of two
// opens or two closes change nothing.
class SwapEngine {
 public:
  explicit SwapEngine(const EndpointRepresentation& rep);

  std::size_t size() const { return voter_.size(); }
  int voters() const { return n_; }

  bool legal(std::size_t k) const {
    return k + 1 < voter_.size() && voter_[k] != voter_[k + 1];
  }

  int approval() const { return max_depth_; }
  int missing() const { return missing_; }
  int duplicate_slack() const { return duplicate_; }
  Objective objective(int target) const {
    return {std::max(0, max_depth_ - target), missing_};
  }

  // Objective after exchanging tokens k and k+1; k must be legal.
  Objective peek(std::size_t k, int target) const;
  void apply(std::size_t k);

  // Exchange of two same-side tokens i < j of different voters. The sign
  // sequence, and so the approval number, is unchanged; the intervals ending
  // (for opens) or starting (for closes) strictly between i and j switch
  // from meeting one voter's interval to meeting the other's.
  bool exchangeable(std::size_t i, std::size_t j) const;
  Objective peek_exchange(std::size_t i, std::size_t j, int target) const;
  void apply_exchange(std::size_t i, std::size_t j);

  EndpointRepresentation rep() const;
  SearchState state() const;

  // Throws std::logic_error when the incremental data disagree with a
  // recomputation.
  void check_consistency() const;

 private:
  enum class Kind { neutral, separate, join };
  Kind kind(std::size_t k) const;
  int& meet(int x, int y) { return meet_[static_cast<std::size_t>(x * n_ + y)]; }
  int meet(int x, int y) const {
    return meet_[static_cast<std::size_t>(x * n_ + y)];
  }
  void rebuild();
  bool positions_consistent() const;
  // Voters losing and gaining meetings in an exchange of i < j.
  std::pair<int, int> exchange_roles(std::size_t i, std::size_t j) const;

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> voter_;
  std::vector<bool> open_;
  std::vector<int> occurrence_;          // 0..3 within the token's voter
  std::vector<std::array<int, 4>> pos_;  // token positions per voter
  std::vector<int> depth_;
  std::vector<int> depth_count_;
  int max_depth_ = 0;
  std::vector<int> meet_;
  int missing_ = 0;
  int duplicate_ = 0;
};

}  // namespace dis::internal

#endif  // DIS_SRC_SWAP_ENGINE_HPP_
