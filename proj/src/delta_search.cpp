#include "dis/delta_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace dis {

std::uint64_t canonical_string_count(int n) {
  std::uint64_t count = 1;
  for (std::uint64_t k = 3; k < 2 * static_cast<std::uint64_t>(std::max(n, 0));
       k += 2) {
    if (count > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= k;
  }
  return count;
}

namespace {

void enumerate(std::vector<int>& seq, std::vector<int>& uses, int introduced,
               int n, std::uint64_t& visited,
               const std::function<void(std::span<const int>)>& visit) {
  if (seq.size() == 2 * static_cast<std::size_t>(n)) {
    ++visited;
    visit(seq);
    return;
  }
  for (int label = 1; label <= introduced; ++label) {
    if (uses[label] != 1) continue;
    uses[label] = 2;
    seq.push_back(label);
    enumerate(seq, uses, introduced, n, visited, visit);
    seq.pop_back();
    uses[label] = 1;
  }
  if (introduced < n) {
    uses[introduced + 1] = 1;
    seq.push_back(introduced + 1);
    enumerate(seq, uses, introduced + 1, n, visited, visit);
    seq.pop_back();
    uses[introduced + 1] = 0;
  }
}

// Depth-first decision search for a canonical string of diameter <= d.
// Labels are 0-based internally. `met[x]` holds the symbols already seen
// within distance d of an occurrence of x.
class WithinSolver {
 public:
  WithinSolver(int n, int d, bool distinct_prefix)
      : n_(n),
        d_(d),
        full_((n >= 32 ? ~0u : (1u << n) - 1u)),
        distinct_prefix_len_(distinct_prefix && 2 * d < n ? n - d : 0),
        seq_(2 * static_cast<std::size_t>(n)),
        second_(2 * static_cast<std::size_t>(n)),
        uses_(static_cast<std::size_t>(n)),
        met_(static_cast<std::size_t>(n)) {}

  // Extends the current prefix by `label`; false when the move is pruned.
  // On false the state is left unchanged.
  bool push(int label) {
    const int t = len_;
    if (t < distinct_prefix_len_ && label != introduced_) return false;
    saved_.push_back(met_);
    seq_[t] = label;
    second_[t] = uses_[label] == 1;
    ++uses_[label];
    if (label == introduced_) ++introduced_;
    ++len_;
    for (int s = std::max(0, t - d_); s < t; ++s) {
      const int y = seq_[s];
      if (y == label) continue;
      met_[label] |= 1u << y;
      met_[y] |= 1u << label;
    }
    ++nodes_;
    bool ok = true;
    const int s = t - d_;
    if (s >= 0 && second_[s]) ok = complete(seq_[s]);
    if (ok && len_ == 2 * n_) {
      for (int x = 0; x < n_ && ok; ++x) ok = complete(x);
    }
    if (!ok) pop();
    return ok;
  }

  void pop() {
    --len_;
    const int label = seq_[len_];
    --uses_[label];
    if (uses_[label] == 0) --introduced_;
    met_ = std::move(saved_.back());
    saved_.pop_back();
  }

  // Finds the first completion of the current prefix.
  bool solve() {
    if (len_ == 2 * n_) return true;
    for (int label = 0; label < introduced_; ++label) {
      if (uses_[label] != 1) continue;
      if (push(label)) {
        if (solve()) return true;
        pop();
      }
    }
    if (introduced_ < n_ && push(introduced_)) {
      if (solve()) return true;
      pop();
    }
    return false;
  }

  // All prefixes of length `depth` that survive pruning, in lexicographic
  // order.
  void prefixes(int depth, std::vector<std::vector<int>>& out) {
    if (len_ == depth || len_ == 2 * n_) {
      out.emplace_back(seq_.begin(), seq_.begin() + len_);
      return;
    }
    for (int label = 0; label <= std::min(introduced_, n_ - 1); ++label) {
      if (label < introduced_ && uses_[label] != 1) continue;
      if (push(label)) {
        prefixes(depth, out);
        pop();
      }
    }
  }

  std::vector<int> labels() const {
    std::vector<int> out(seq_.begin(), seq_.begin() + len_);
    for (int& x : out) ++x;
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool complete(int x) const { return (met_[x] | (1u << x)) == full_; }

  int n_;
  int d_;
  unsigned full_;
  int distinct_prefix_len_;
  int len_ = 0;
  int introduced_ = 0;
  std::vector<int> seq_;
  std::vector<char> second_;
  std::vector<int> uses_;
  std::vector<unsigned> met_;
  std::vector<std::vector<unsigned>> saved_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_canonical_string(
    int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) return 0;
  std::vector<int> seq;
  std::vector<int> uses(static_cast<std::size_t>(n) + 2, 0);
  std::uint64_t visited = 0;
  enumerate(seq, uses, 0, n, visited, visit);
  return visited;
}

std::optional<DoubleNString> find_string_within(int n, int d,
                                                const DeltaOptions& options,
                                                std::uint64_t* nodes) {
  if (n < 1) throw ValidationError("n must be positive");
  if (n > 31) throw SearchLimitExceeded("enumeration supports n <= 31");
  if (n == 1) {
    const int one[] = {1, 1};
    return from_labels(one);
  }
  if (d < 1) return std::nullopt;

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    WithinSolver solver(n, d, options.distinct_prefix_pruning);
    const bool found = solver.solve();
    if (nodes) *nodes += solver.nodes();
    if (!found) return std::nullopt;
    return from_labels(solver.labels());
  }

  std::vector<std::vector<int>> prefixes;
  for (int depth = 1; depth <= 2 * n; ++depth) {
    prefixes.clear();
    WithinSolver probe(n, d, options.distinct_prefix_pruning);
    probe.prefixes(depth, prefixes);
    if (prefixes.size() >= 8 * static_cast<std::size_t>(jobs)) break;
  }

  // Subtrees are searched independently; the lowest prefix index with a
  // solution wins, matching the single-threaded lexicographic result.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::atomic<std::uint64_t> total_nodes{0};
  std::mutex mu;
  std::vector<int> best_labels;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || i >= best.load()) return;
      WithinSolver solver(n, d, options.distinct_prefix_pruning);
      bool ok = true;
      for (int label : prefixes[i]) {
        if (!solver.push(label)) {
          ok = false;
          break;
        }
      }
      const bool found = ok && solver.solve();
      total_nodes += solver.nodes();
      if (found) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best = i;
          best_labels = solver.labels();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (nodes) *nodes += total_nodes.load();
  if (best.load() == prefixes.size()) return std::nullopt;
  return from_labels(best_labels);
}

DeltaResult delta_exhaustive(int n, const DeltaOptions& options) {
  if (n < 1) throw ValidationError("n must be positive");
  if (n > options.limit) {
    throw SearchLimitExceeded(
        "n = " + std::to_string(n) + " exceeds the enumeration limit " +
        std::to_string(options.limit) + "; the space holds (2n-1)!! = " +
        std::to_string(canonical_string_count(n)) + " canonical strings");
  }
  if (n == 1) {
    const int one[] = {1, 1};
    return {0, from_labels(one), 1};
  }
  DeltaResult result{0, n == 2 ? from_labels(std::vector<int>{1, 2, 1, 2})
                               : construct_quarter(n),
                     0};
  result.delta = diameter(result.witness).diameter;
  while (result.delta > 1) {
    auto better = find_string_within(n, result.delta - 1, options, &result.nodes);
    if (!better) break;
    result.witness = std::move(*better);
    result.delta = diameter(result.witness).diameter;
  }
  return result;
}

}  // namespace dis
