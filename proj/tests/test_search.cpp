#include <doctest.h>

#include <queue>

#include "oracles.hpp"
#include "quiver/search.hpp"

using namespace quiver;

TEST_CASE("A2 maximal green sequences") {
  const auto recs = enumerate_mgs(2);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].sequence == MutationSequence{{1, 2}});
  CHECK(recs[1].sequence == MutationSequence{{2, 1, 2}});
  CHECK(recs[0].permutation.is_identity());
  CHECK(recs[1].permutation == Permutation::transposition(2, 1, 2));
  CHECK(enumerate_mgs(2, {.max_len = 2}).size() == 1);
}

TEST_CASE("MGS counts agree with the multiplicity BFS") {
  const std::size_t frozen[] = {1, 2, 9, 98};
  for (int n = 1; n <= 4; ++n) {
    const std::size_t count = enumerate_mgs(n).size();
    CHECK(count == oracle::count_mgs_bfs(n));
    CHECK(count == frozen[n - 1]);
  }
}

TEST_CASE("MGS lengths lie between n and n(n+1)/2") {
  for (int n = 1; n <= 4; ++n) {
    const auto c = mgs_census(n);
    CHECK(c.min_length == n);
    CHECK(c.max_length == n * (n + 1) / 2);
    std::size_t total = 0;
    for (const auto& [len, count] : c.lengths) total += count;
    CHECK(total == c.count);
  }
}

TEST_CASE("A2 census") {
  const auto c = mgs_census(2);
  CHECK(c.count == 2);
  CHECK(c.lengths == std::map<int, std::size_t>{{2, 1}, {3, 1}});
  CHECK(c.permutations == std::map<std::string, std::size_t>{{"(1 2)", 1}, {"id", 1}});
}

TEST_CASE("parallel enumeration is deterministic") {
  const auto serial = enumerate_mgs(4);
  const auto parallel = enumerate_mgs(4, {.workers = 4});
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k].sequence == parallel[k].sequence);
  for (std::size_t k = 1; k < serial.size(); ++k) CHECK(serial[k - 1].sequence < serial[k].sequence);

  const auto loops1 = enumerate_loops(framed(straight_a(3)), 6, 1);
  const auto loops3 = enumerate_loops(framed(straight_a(3)), 6, 3);
  REQUIRE(loops1.size() == loops3.size());
  for (std::size_t k = 0; k < loops1.size(); ++k) CHECK(loops1[k].sequence == loops3[k].sequence);
}

TEST_CASE("exchange graph sizes agree with the recursive DFS") {
  const std::size_t frozen[] = {2, 10, 84, 1008};
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_exchange_graph(n);
    CHECK(g.size() == oracle::count_exchange_graph_dfs(n));
    CHECK(g.size() == frozen[n - 1]);
  }
}

TEST_CASE("exchange graph structure") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_exchange_graph(n);
    CHECK(g.nodes[0] == framed(straight_a(n)));
    CHECK(g.find(coframed(straight_a(n))).has_value());
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (int k = 1; k <= n; ++k) {
        const int w = g.edges[v][k - 1];
        CHECK(g.edges[w][k - 1] == static_cast<int>(v));
        CHECK(g.nodes[w] == mutate(g.nodes[v], k));
      }
    }
    std::vector<bool> seen(g.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.edges[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          q.push(w);
        }
      }
    }
    CHECK(reached == g.size());
  }
}

TEST_CASE("exchange graph guards") {
  CHECK_THROWS_AS(build_exchange_graph(6), std::invalid_argument);
  CHECK_THROWS_AS(build_exchange_graph_from(framed(straight_a(4)), 100), std::length_error);
}

TEST_CASE("loops at the framed A2 quiver") {
  const auto f = framed(straight_a(2));
  const auto two = enumerate_loops(f, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].sequence == MutationSequence{{1, 1}});
  CHECK(two[1].sequence == MutationSequence{{2, 2}});
  const auto five = enumerate_loops(f, 5);
  REQUIRE(five.size() == 10);
  CHECK(five[8].sequence == MutationSequence{{1, 2, 1, 2, 1}});
  CHECK(five[9].sequence == MutationSequence{{2, 1, 2, 1, 2}});
  CHECK(five[9].rho == Permutation::transposition(2, 1, 2));
  const std::size_t frozen[] = {0, 2, 2, 8, 10, 30};
  for (int len = 1; len <= 6; ++len) {
    const std::size_t count = enumerate_loops(f, len).size();
    CHECK(count == oracle::count_loops_bfs(2, len));
    CHECK(count == frozen[len - 1]);
  }
}

TEST_CASE("visit_sequences covers every sequence once") {
  std::size_t count = 0;
  MutationSequence last;
  visit_sequences(framed(straight_a(3)), 4, [&](const MutationSequence& s, const ExtendedExchangeMatrix& m) {
    CHECK(m == apply_sequence(framed(straight_a(3)), s));
    ++count;
    last = s;
  });
  CHECK(count == 3 + 9 + 27 + 81);
  CHECK(last == MutationSequence{{3, 3, 3, 3}});
}
