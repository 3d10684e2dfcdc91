#include "fracint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

namespace fracint {

namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Adjacency renumbered into search order.
struct OrderedGraph {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<Word> adj;
  std::vector<std::size_t> original;

  const Word* row(std::size_t v) const noexcept { return adj.data() + v * words; }
};

// Vertices removed first by the min-degree peeling go last, so the densest
// core is coloured first.
OrderedGraph degeneracy_order(const CompatibilityGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);

  std::vector<std::size_t> peel;
  peel.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    peel.push_back(pick);
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && graph.adjacent(pick, u)) --degree[u];
    }
  }

  OrderedGraph g;
  g.n = n;
  g.words = (n + 63) / 64;
  g.original.assign(peel.rbegin(), peel.rend());
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[g.original[i]] = i;
  g.adj.assign(n * g.words, Word{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (graph.adjacent(g.original[i], g.original[j])) {
        const auto pj = position[g.original[j]];
        g.adj[i * g.words + pj / 64] |= Word{1} << (pj % 64);
      }
    }
  }
  return g;
}

bool any(const std::vector<Word>& bits) noexcept {
  return std::any_of(bits.begin(), bits.end(), [](Word w) { return w != 0; });
}

void reset_bit(std::vector<Word>& bits, std::size_t v) noexcept {
  bits[v / 64] &= ~(Word{1} << (v % 64));
}

struct Shared {
  std::atomic<std::size_t> best{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  bool stop_at_first = false;
  bool hit_time = false;
  bool hit_nodes = false;
  std::mutex flag_mutex;
  Clock::time_point start = Clock::now();
  std::optional<Clock::time_point> deadline;
  std::optional<std::uint64_t> node_limit;
};

class Worker {
 public:
  Worker(const OrderedGraph& g, Shared& shared) : g_(g), shared_(shared) {}

  void run_branch(std::size_t v, const std::vector<Word>& candidates) {
    clique_.assign(1, v);
    std::vector<Word> p(candidates);
    const Word* nv = g_.row(v);
    for (std::size_t w = 0; w < g_.words; ++w) p[w] &= nv[w];
    if (!any(p)) {
      record();
    } else {
      expand(p);
    }
    clique_.clear();
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(pending_nodes_);
    pending_nodes_ = 0;
  }

  const std::vector<std::size_t>& best() const noexcept { return best_; }

 private:
  void colour(const std::vector<Word>& p, std::size_t kmin, std::vector<std::size_t>& order,
              std::vector<std::size_t>& colours) const {
    std::vector<Word> uncoloured(p);
    std::vector<Word> q(g_.words);
    std::size_t k = 0;
    while (any(uncoloured)) {
      ++k;
      q = uncoloured;
      for (std::size_t w = 0; w < g_.words; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          reset_bit(q, v);
          reset_bit(uncoloured, v);
          const Word* nv = g_.row(v);
          for (std::size_t x = w; x < g_.words; ++x) q[x] &= ~nv[x];
          if (k >= kmin) {
            order.push_back(v);
            colours.push_back(k);
          }
        }
      }
    }
  }

  bool should_stop() {
    if (shared_.stop.load(std::memory_order_relaxed)) return true;
    if (++pending_nodes_ < 256) return false;
    const auto total = shared_.nodes.fetch_add(pending_nodes_) + pending_nodes_;
    pending_nodes_ = 0;
    if (shared_.node_limit && total >= *shared_.node_limit) {
      std::lock_guard lock(shared_.flag_mutex);
      shared_.hit_nodes = true;
      shared_.stop = true;
    } else if (shared_.deadline && Clock::now() >= *shared_.deadline) {
      std::lock_guard lock(shared_.flag_mutex);
      shared_.hit_time = true;
      shared_.stop = true;
    }
    return shared_.stop.load();
  }

  void record() {
    auto current = shared_.best.load();
    while (clique_.size() > current) {
      if (shared_.best.compare_exchange_weak(current, clique_.size())) {
        best_ = clique_;
        if (shared_.stop_at_first) shared_.stop = true;
        return;
      }
    }
  }

  void expand(std::vector<Word>& p) {
    if (should_stop()) return;
    const std::size_t best = shared_.best.load();
    const std::size_t kmin = best + 1 > clique_.size() ? best + 1 - clique_.size() : 1;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colours;
    colour(p, kmin, order, colours);
    std::vector<Word> next(g_.words);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (clique_.size() + colours[idx] <= shared_.best.load()) return;
      const std::size_t v = order[idx];
      clique_.push_back(v);
      const Word* nv = g_.row(v);
      for (std::size_t w = 0; w < g_.words; ++w) next[w] = p[w] & nv[w];
      if (!any(next)) {
        record();
      } else {
        expand(next);
      }
      clique_.pop_back();
      reset_bit(p, v);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const OrderedGraph& g_;
  Shared& shared_;
  std::vector<std::size_t> clique_;
  std::vector<std::size_t> best_;
  std::uint64_t pending_nodes_ = 0;
};

struct RootBranches {
  std::vector<std::size_t> order;
  std::vector<std::size_t> colours;
};

// Greedy colouring of the whole vertex set, as the sequential root would compute it.
RootBranches root_branches(const OrderedGraph& g) {
  RootBranches root;
  std::vector<Word> uncoloured(g.words, Word{0});
  for (std::size_t v = 0; v < g.n; ++v) uncoloured[v / 64] |= Word{1} << (v % 64);
  std::size_t k = 0;
  while (any(uncoloured)) {
    ++k;
    auto q = uncoloured;
    for (std::size_t w = 0; w < g.words; ++w) {
      while (q[w] != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
        reset_bit(q, v);
        reset_bit(uncoloured, v);
        const Word* nv = g.row(v);
        for (std::size_t x = w; x < g.words; ++x) q[x] &= ~nv[x];
        root.order.push_back(v);
        root.colours.push_back(k);
      }
    }
  }
  return root;
}

// Branch idx explores cliques whose first vertex is order[idx] and whose other
// vertices come from order[0..idx).
std::vector<Word> branch_candidates(const OrderedGraph& g, const RootBranches& root, std::size_t idx) {
  std::vector<Word> bits(g.words, Word{0});
  for (std::size_t j = 0; j < idx; ++j) bits[root.order[j] / 64] |= Word{1} << (root.order[j] % 64);
  return bits;
}

std::vector<std::size_t> run_search(const OrderedGraph& g, const RootBranches& root, Shared& shared,
                                    int threads) {
  const std::size_t branches = root.order.size();
  std::atomic<std::size_t> next{0};
  std::vector<Worker> workers;
  const auto count = static_cast<std::size_t>(std::max(1, threads));
  workers.reserve(count);
  for (std::size_t i = 0; i < count; ++i) workers.emplace_back(g, shared);

  auto body = [&](Worker& worker) {
    while (!shared.stop.load()) {
      const std::size_t taken = next.fetch_add(1);
      if (taken >= branches) break;
      const std::size_t idx = branches - 1 - taken;
      if (root.colours[idx] <= shared.best.load()) continue;
      worker.run_branch(root.order[idx], branch_candidates(g, root, idx));
    }
    worker.flush_nodes();
  };

  if (count == 1) {
    body(workers.front());
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (auto& worker : workers) pool.emplace_back(body, std::ref(worker));
  }

  std::vector<std::size_t> best;
  for (const auto& worker : workers) {
    if (worker.best().size() > best.size()) best = worker.best();
  }
  return best;
}

Family to_family(const CompatibilityGraph& graph, const OrderedGraph& g,
                 const std::vector<std::size_t>& clique) {
  std::vector<Subset> members;
  members.reserve(clique.size());
  for (auto v : clique) members.push_back(graph.vertex(g.original[v]));
  return Family(graph.ground_n(), std::move(members));
}

}  // namespace

SearchResult max_clique(const CompatibilityGraph& graph, const SearchBudget& budget) {
  const auto start = Clock::now();
  SearchResult result;
  result.best_family = Family(graph.ground_n(), {});
  if (graph.size() == 0) {
    result.optimal = true;
    return result;
  }

  const OrderedGraph g = degeneracy_order(graph);
  const RootBranches root = root_branches(g);

  Shared shared;
  if (budget.time_limit_seconds) {
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*budget.time_limit_seconds));
  }
  shared.node_limit = budget.node_limit;
  auto best = run_search(g, root, shared, budget.threads);

  result.nodes_explored = shared.nodes.load();
  result.limits_hit = {shared.hit_time, shared.hit_nodes};
  result.optimal = !result.limits_hit.any();

  if (result.optimal && !best.empty()) {
    // Re-derive the witness sequentially: the first clique of the proven size
    // in branch order, whichever worker found the size first.
    Shared witness;
    witness.best = best.size() - 1;
    witness.stop_at_first = true;
    best = run_search(g, root, witness, 1);
  }

  result.best_family = to_family(graph, g, best);
  result.size = result.best_family.size();
  result.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace fracint
