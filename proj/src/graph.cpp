#include "fracint/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fracint {

bool UniverseFilter::accepts(int size) const noexcept {
  if (min_size && size < *min_size) return false;
  if (max_size && size > *max_size) return false;
  if (parity && (size % 2 == 0) != (*parity == Parity::even)) return false;
  if (size_set && std::find(size_set->begin(), size_set->end(), size) == size_set->end()) return false;
  return true;
}

BigInt universe_size(int n, const UniverseFilter& filter) {
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) {
    if (filter.accepts(k)) total += binomial(n, k);
  }
  return total;
}

CompatibilityGraph::CompatibilityGraph(int ground_n, LSet l, std::vector<Subset> vertices)
    : ground_n_(ground_n), l_(std::move(l)), vertices_(std::move(vertices)) {
  for (const auto& v : vertices_) {
    if (v.ground_n() != ground_n_) throw std::invalid_argument("vertex over a different ground set");
  }
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("duplicate vertex in compatibility graph");
  }
  const auto n = vertices_.size();
  words_per_row_ = (n + 63) / 64;
  adjacency_.assign(n * words_per_row_, Word{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_fractional_pair(vertices_[i], vertices_[j], l_)) continue;
      adjacency_[i * words_per_row_ + j / 64] |= Word{1} << (j % 64);
      adjacency_[j * words_per_row_ + i / 64] |= Word{1} << (i % 64);
    }
  }
}

std::size_t CompatibilityGraph::degree(std::size_t i) const noexcept {
  std::size_t d = 0;
  for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t CompatibilityGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += degree(i);
  return total / 2;
}

CompatibilityGraph build_graph(int n, const LSet& l, const UniverseFilter& filter,
                               std::size_t vertex_budget) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kSearchGroundCap) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the search cap of " +
                                std::to_string(kSearchGroundCap));
  }
  const auto count = universe_size(n, filter);
  if (count > vertex_budget) {
    throw std::invalid_argument("universe has " + count.str() + " vertices, above the budget of " +
                                std::to_string(vertex_budget));
  }
  std::vector<Subset> vertices;
  vertices.reserve(count.convert_to<std::size_t>());
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (filter.accepts(std::popcount(mask))) vertices.push_back(Subset::from_mask(n, mask));
  }
  return CompatibilityGraph(n, l, std::move(vertices));
}

}  // namespace fracint
