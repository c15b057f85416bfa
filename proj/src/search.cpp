#include "quiver/search.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <stdexcept>

namespace quiver {

namespace {

void mgs_dfs(const ExtendedExchangeMatrix& state, MutationSequence& path, const std::optional<int>& max_len,
             std::vector<MgsRecord>& out) {
  bool any_green = false;
  for (int k = 1; k <= state.n(); ++k) {
    if (vertex_color(state, k) != VertexColor::Green) continue;
    any_green = true;
    if (max_len && static_cast<int>(path.size()) >= *max_len) continue;
    path.steps.push_back(k);
    mgs_dfs(mutate(state, k), path, max_len, out);
    path.steps.pop_back();
  }
  if (!any_green && !path.empty()) out.push_back({path, {}, Permutation{}});
}

template <typename Task>
auto fan_out(int branches, int workers, Task task) {
  using Result = decltype(task(1));
  std::vector<Result> results(branches);
  if (workers <= 1) {
    for (int b = 1; b <= branches; ++b) results[b - 1] = task(b);
    return results;
  }
  for (int first = 1; first <= branches; first += workers) {
    std::vector<std::future<Result>> batch;
    for (int b = first; b < first + workers && b <= branches; ++b) batch.push_back(std::async(std::launch::async, task, b));
    for (std::size_t idx = 0; idx < batch.size(); ++idx) results[first - 1 + idx] = batch[idx].get();
  }
  return results;
}

}  // namespace

std::vector<MgsRecord> enumerate_mgs(int n, const MgsOptions& options) {
  const ExtendedExchangeMatrix start = framed(straight_a(n));
  // Every vertex of the framed quiver is green, so each first step opens a subtree.
  auto subtrees = fan_out(n, options.workers, [&](int first) {
    std::vector<MgsRecord> found;
    if (options.max_len && *options.max_len < 1) return found;
    MutationSequence path{{first}};
    mgs_dfs(mutate(start, first), path, options.max_len, found);
    return found;
  });

  std::vector<MgsRecord> records;
  for (auto& part : subtrees) {
    for (auto& rec : part) records.push_back(std::move(rec));
  }
  const Permutation id = Permutation::identity(n);
  for (MgsRecord& rec : records) {
    rec.word = word_from_sequence(start, rec.sequence);
    rec.permutation = formula_permutation(rec.word, id);
  }
  return records;
}

std::optional<int> ExchangeGraph::find(const ExtendedExchangeMatrix& m) const {
  const auto it = index.find(state_key(m));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ExchangeGraph build_exchange_graph(int n, const ExchangeGraphOptions& options) {
  if (n < 1) throw std::invalid_argument("exchange graph needs n >= 1");
  if (n > options.max_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the configured bound " +
                                std::to_string(options.max_n));
  }
  return build_exchange_graph_from(framed(straight_a(n)), options.max_nodes);
}

ExchangeGraph build_exchange_graph_from(const ExtendedExchangeMatrix& start, std::size_t max_nodes) {
  ExchangeGraph g;
  const int n = start.n();
  g.nodes.push_back(start);
  g.edges.emplace_back(n, -1);
  g.index.emplace(state_key(start), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int k = 1; k <= n; ++k) {
      ExtendedExchangeMatrix next = mutate(g.nodes[v], k);
      auto key = state_key(next);
      auto [it, inserted] = g.index.emplace(std::move(key), static_cast<int>(g.nodes.size()));
      if (inserted) {
        if (g.nodes.size() >= max_nodes) throw std::length_error("exchange graph exceeds node limit");
        g.nodes.push_back(std::move(next));
        g.edges.emplace_back(n, -1);
        queue.push_back(it->second);
      }
      g.edges[v][k - 1] = it->second;
    }
  }
  return g;
}

namespace {

void sequence_dfs(const ExtendedExchangeMatrix& state, MutationSequence& path, int max_len,
                  const std::function<void(const MutationSequence&, const ExtendedExchangeMatrix&)>& visit) {
  if (static_cast<int>(path.size()) >= max_len) return;
  for (int k = 1; k <= state.n(); ++k) {
    path.steps.push_back(k);
    const ExtendedExchangeMatrix next = mutate(state, k);
    visit(path, next);
    sequence_dfs(next, path, max_len, visit);
    path.steps.pop_back();
  }
}

}  // namespace

void visit_sequences(const ExtendedExchangeMatrix& start, int max_len,
                     const std::function<void(const MutationSequence&, const ExtendedExchangeMatrix&)>& visit) {
  MutationSequence path;
  sequence_dfs(start, path, max_len, visit);
}

std::vector<LoopRecord> enumerate_loops(const ExtendedExchangeMatrix& m, int max_len, int workers) {
  if (max_len < 1) return {};
  auto subtrees = fan_out(m.n(), workers, [&](int first) {
    std::vector<LoopRecord> found;
    const ExtendedExchangeMatrix next = mutate(m, first);
    if (auto rho = find_row_permutation(m, next)) found.push_back({MutationSequence{{first}}, *rho});
    visit_sequences(next, max_len - 1, [&](const MutationSequence& tail, const ExtendedExchangeMatrix& state) {
      if (auto rho = find_row_permutation(m, state)) {
        MutationSequence s{{first}};
        s.steps.insert(s.steps.end(), tail.steps.begin(), tail.steps.end());
        found.push_back({std::move(s), *rho});
      }
    });
    return found;
  });
  std::vector<LoopRecord> loops;
  for (auto& part : subtrees) {
    for (auto& rec : part) loops.push_back(std::move(rec));
  }
  std::sort(loops.begin(), loops.end(), [](const LoopRecord& a, const LoopRecord& b) {
    if (a.sequence.size() != b.sequence.size()) return a.sequence.size() < b.sequence.size();
    return a.sequence < b.sequence;
  });
  return loops;
}

MgsCensus census_of(int n, const std::vector<MgsRecord>& records) {
  MgsCensus census;
  census.n = n;
  census.count = records.size();
  for (const MgsRecord& rec : records) {
    const int len = static_cast<int>(rec.sequence.size());
    ++census.lengths[len];
    ++census.permutations[rec.permutation.cycles()];
  }
  if (!census.lengths.empty()) {
    census.min_length = census.lengths.begin()->first;
    census.max_length = census.lengths.rbegin()->first;
  }
  return census;
}

MgsCensus mgs_census(int n, const MgsOptions& options) { return census_of(n, enumerate_mgs(n, options)); }

}  // namespace quiver
