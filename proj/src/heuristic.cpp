#include "fracint/search.hpp"

#include "fracint/primes.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace fracint {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Subset> enumerate_pool(int n, const UniverseFilter& filter) {
  std::vector<Subset> pool;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (filter.accepts(std::popcount(mask))) pool.push_back(Subset::from_mask(n, mask));
  }
  return pool;
}

// Random subsets whose size is drawn uniformly from the admissible sizes.
std::vector<Subset> sample_pool(int n, const UniverseFilter& filter, std::size_t count,
                                std::mt19937_64& rng) {
  std::vector<int> sizes;
  for (int k = 1; k <= n; ++k) {
    if (filter.accepts(k)) sizes.push_back(k);
  }
  if (sizes.empty()) return {};
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) labels[static_cast<std::size_t>(e)] = e + 1;
  std::set<Subset> seen;
  std::vector<Subset> pool;
  std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
  for (std::size_t attempt = 0; pool.size() < count && attempt < 4 * count; ++attempt) {
    const int k = sizes[pick_size(rng)];
    std::shuffle(labels.begin(), labels.end(), rng);
    auto set = Subset::from_elements(n, std::span<const int>(labels.data(), static_cast<std::size_t>(k)));
    if (seen.insert(set).second) pool.push_back(std::move(set));
  }
  return pool;
}

class LocalSearch {
 public:
  LocalSearch(std::vector<Subset> pool, const LSet& l, std::uint64_t seed)
      : pool_(std::move(pool)), l_(l), rng_(seed),
        in_family_(pool_.size(), false), conflicts_(pool_.size(), 0),
        tabu_until_(pool_.size(), 0) {}

  void greedy_start() {
    std::vector<std::size_t> order(pool_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (auto c : order) {
      if (!in_family_[c] && conflicts_[c] == 0) add(c);
    }
    snapshot();
  }

  void step(std::uint64_t iteration) {
    iteration_ = iteration;
    std::vector<std::size_t> free;
    std::vector<std::size_t> one_conflict;
    for (std::size_t c = 0; c < pool_.size(); ++c) {
      if (in_family_[c] || tabu_until_[c] > iteration) continue;
      if (conflicts_[c] == 0) free.push_back(c);
      else if (conflicts_[c] == 1) one_conflict.push_back(c);
    }
    if (!free.empty()) {
      add(free[pick(free.size())]);
    } else if (!one_conflict.empty() && coin_(rng_) < 0.9) {
      const auto c = one_conflict[pick(one_conflict.size())];
      const auto it = std::find_if(members_.begin(), members_.end(),
                                   [&](std::size_t m) { return !compatible(m, c); });
      remove(*it);
      add(c);
    } else if (!members_.empty()) {
      const int drops = 1 + static_cast<int>(pick(2));
      for (int d = 0; d < drops && !members_.empty(); ++d) remove(members_[pick(members_.size())]);
    }
    if (members_.size() > best_.size()) snapshot();
  }

  const std::vector<std::size_t>& best() const noexcept { return best_; }
  const std::vector<Subset>& pool() const noexcept { return pool_; }

 private:
  static constexpr std::uint64_t kTabuTenure = 7;

  bool compatible(std::size_t i, std::size_t j) const {
    return is_fractional_pair(pool_[i], pool_[j], l_).has_value();
  }

  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  void add(std::size_t c) {
    in_family_[c] = true;
    members_.push_back(c);
    for (std::size_t x = 0; x < pool_.size(); ++x) {
      if (x != c && !compatible(x, c)) ++conflicts_[x];
    }
  }

  void remove(std::size_t c) {
    in_family_[c] = false;
    members_.erase(std::find(members_.begin(), members_.end(), c));
    tabu_until_[c] = iteration_ + kTabuTenure;
    for (std::size_t x = 0; x < pool_.size(); ++x) {
      if (x != c && !compatible(x, c)) --conflicts_[x];
    }
  }

  void snapshot() { best_ = members_; }

  std::vector<Subset> pool_;
  const LSet& l_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> coin_{0.0, 1.0};
  std::vector<bool> in_family_;
  std::vector<std::uint32_t> conflicts_;
  std::vector<std::uint64_t> tabu_until_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> best_;
  std::uint64_t iteration_ = 0;
};

}  // namespace

SearchResult heuristic_grow(int n, const LSet& l, std::uint64_t seed, const HeuristicBudget& budget,
                            const UniverseFilter& filter) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto start = Clock::now();
  std::mt19937_64 pool_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto pool = n <= kSearchGroundCap ? enumerate_pool(n, filter)
                                    : sample_pool(n, filter, budget.sample_pool, pool_rng);

  SearchResult result;
  result.optimal = false;
  LocalSearch search(std::move(pool), l, seed);
  search.greedy_start();
  std::uint64_t done = 0;
  for (; done < budget.iterations; ++done) {
    if (budget.time_limit_seconds &&
        std::chrono::duration<double>(Clock::now() - start).count() >= *budget.time_limit_seconds) {
      result.limits_hit.time = true;
      break;
    }
    search.step(done + 1);
  }

  std::vector<Subset> members;
  for (auto c : search.best()) members.push_back(search.pool()[c]);
  result.best_family = Family(n, std::move(members));
  result.size = result.best_family.size();
  result.nodes_explored = done;
  result.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::vector<ExtremalRow> extremal_table(int n_lo, int n_hi, const LSet& l,
                                        const UniverseFilter& filter, const SearchBudget& budget,
                                        std::size_t vertex_budget, std::uint64_t heuristic_seed) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("invalid n range");
  const bool bisection = l.size() == 1 && l.max() == Fraction(1, 2);
  std::vector<ExtremalRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    ExtremalRow row;
    row.n = n;
    const auto universe = universe_size(n, filter);
    SearchResult found;
    if (n <= kSearchGroundCap && universe <= vertex_budget) {
      const auto graph = build_graph(n, l, filter, vertex_budget);
      row.vertices = graph.size();
      found = max_clique(graph, budget);
    } else {
      row.heuristic = true;
      row.vertices = universe > std::numeric_limits<std::size_t>::max()
                         ? std::numeric_limits<std::size_t>::max()
                         : universe.convert_to<std::size_t>();
      HeuristicBudget hb;
      hb.time_limit_seconds = budget.time_limit_seconds;
      found = heuristic_grow(n, l, heuristic_seed, hb, filter);
    }
    row.size = found.size;
    row.optimal = found.optimal;
    row.witness = found.best_family;
    row.exact_prime_bound = theorem1_bound(n, l).exact_prime_bound;
    if (l.size() == 1) {
      const auto& frac = l.max();
      if (frac.is_zero() || is_prime(static_cast<std::uint64_t>(frac.denominator()))) {
        row.singleton_bound = theorem2_bound(n, frac);
      }
    }
    if (bisection && n % 2 == 0) {
      row.attains_three_halves = static_cast<std::int64_t>(row.size) >= 3 * n / 2 - 2;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fracint
