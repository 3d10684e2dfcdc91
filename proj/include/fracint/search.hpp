// Extremal search: a family is fractional L-intersecting exactly when it is a
// clique of the pairwise compatibility graph, so maxima come from max clique.
#ifndef FRACINT_SEARCH_HPP
#define FRACINT_SEARCH_HPP

#include "fracint/bounds.hpp"
#include "fracint/family.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fracint {

inline constexpr int kSearchGroundCap = 20;
inline constexpr std::size_t kDefaultVertexBudget = 5000;

enum class Parity { even, odd };

/// Restricts the candidate universe by member size. Conditions compose with AND.
struct UniverseFilter {
  std::optional<int> min_size;
  std::optional<int> max_size;
  std::optional<Parity> parity;
  std::optional<std::vector<int>> size_set;

  bool accepts(int size) const noexcept;
};

/// Number of non-empty subsets of [n] the filter admits.
BigInt universe_size(int n, const UniverseFilter& filter);

class CompatibilityGraph {
 public:
  using Word = std::uint64_t;

  /// Edges where is_fractional_pair holds. Vertices are sorted canonically;
  /// throws std::invalid_argument on duplicates.
  CompatibilityGraph(int ground_n, LSet l, std::vector<Subset> vertices);

  int ground_n() const noexcept { return ground_n_; }
  const LSet& l() const noexcept { return l_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Subset>& vertices() const noexcept { return vertices_; }
  const Subset& vertex(std::size_t i) const { return vertices_[i]; }

  std::size_t words_per_row() const noexcept { return words_per_row_; }
  std::span<const Word> row(std::size_t i) const noexcept {
    return {adjacency_.data() + i * words_per_row_, words_per_row_};
  }
  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return (row(i)[j / 64] >> (j % 64)) & 1U;
  }
  std::size_t degree(std::size_t i) const noexcept;
  std::size_t edge_count() const noexcept;

 private:
  int ground_n_;
  LSet l_;
  std::vector<Subset> vertices_;
  std::size_t words_per_row_ = 0;
  std::vector<Word> adjacency_;
};

/// All non-empty subsets of [n] passing the filter. Throws std::invalid_argument
/// when n exceeds kSearchGroundCap or the universe exceeds `vertex_budget`.
CompatibilityGraph build_graph(int n, const LSet& l, const UniverseFilter& filter = {},
                               std::size_t vertex_budget = kDefaultVertexBudget);

struct SearchBudget {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  int threads = 1;
};

struct LimitsHit {
  bool time = false;
  bool nodes = false;
  bool any() const noexcept { return time || nodes; }
};

struct SearchResult {
  Family best_family;
  std::size_t size = 0;
  /// True only when branch and bound proved no larger clique exists.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
  LimitsHit limits_hit;
};

/// Bitset branch and bound with greedy-colouring bounds over a degeneracy
/// order. Top-level branches are shared among `budget.threads` workers. When
/// the search completes, the witness is the first maximum clique in branch
/// order, so both size and family are independent of the thread count.
SearchResult max_clique(const CompatibilityGraph& graph, const SearchBudget& budget = {});

struct HeuristicBudget {
  /// Local-search rounds after the greedy start; 0 returns the greedy start.
  std::uint64_t iterations = 2000;
  std::optional<double> time_limit_seconds;
  /// Candidate pool size when [n] is too large to enumerate.
  std::size_t sample_pool = 20000;
};

/// Seeded randomized greedy plus remove-k / add-many local search. The result
/// is never marked optimal and is reproducible per seed.
SearchResult heuristic_grow(int n, const LSet& l, std::uint64_t seed,
                            const HeuristicBudget& budget = {}, const UniverseFilter& filter = {});

struct ExtremalRow {
  int n = 0;
  std::size_t vertices = 0;
  std::size_t size = 0;
  bool optimal = false;
  bool heuristic = false;
  BigInt exact_prime_bound;
  std::optional<BigInt> singleton_bound;
  /// Even n with L = {1/2}: whether 3n/2 - 2 is reached.
  std::optional<bool> attains_three_halves;
  Family witness;
};

/// One row per n in [n_lo, n_hi]. Exact search when the universe fits the
/// vertex budget, heuristic otherwise.
std::vector<ExtremalRow> extremal_table(int n_lo, int n_hi, const LSet& l,
                                        const UniverseFilter& filter = {},
                                        const SearchBudget& budget = {},
                                        std::size_t vertex_budget = kDefaultVertexBudget,
                                        std::uint64_t heuristic_seed = 1);

}  // namespace fracint

#endif  // FRACINT_SEARCH_HPP
