#pragma once

// Exhaustive desk-scale enumeration over the mutation class of straight A_n.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiver/formula.hpp"
#include "quiver/picture_group.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

struct MgsRecord {
  MutationSequence sequence;
  PictureWord word;
  Permutation permutation;  // formula value with sigma = id
};

struct MgsOptions {
  std::optional<int> max_len;
  int workers = 1;
};

/// Every maximal green sequence of straight A_n, in lexicographic order.
std::vector<MgsRecord> enumerate_mgs(int n, const MgsOptions& options = {});

struct ExchangeGraph {
  std::vector<ExtendedExchangeMatrix> nodes;        // nodes[0] is the start
  std::vector<std::vector<int>> edges;              // edges[v][k - 1]: target of mutating k
  std::unordered_map<std::vector<int>, int, StateKeyHash> index;

  std::size_t size() const { return nodes.size(); }
  std::optional<int> find(const ExtendedExchangeMatrix& m) const;
};

struct ExchangeGraphOptions {
  int max_n = 5;
  std::size_t max_nodes = 1'000'000;
};

/// Mutation closure of framed(A_n), memoized on the c-matrix.
ExchangeGraph build_exchange_graph(int n, const ExchangeGraphOptions& options = {});
/// Mutation closure of an arbitrary start; throws once max_nodes is exceeded.
ExchangeGraph build_exchange_graph_from(const ExtendedExchangeMatrix& start, std::size_t max_nodes);

/// Depth-first walk over every nonempty sequence of length <= max_len,
/// lexicographically; visit sees each sequence with the state it reaches.
void visit_sequences(const ExtendedExchangeMatrix& start, int max_len,
                     const std::function<void(const MutationSequence&, const ExtendedExchangeMatrix&)>& visit);

struct LoopRecord {
  MutationSequence sequence;
  Permutation rho;
};

/// Loop sequences at m of length 1..max_len ordered by (length, steps).
std::vector<LoopRecord> enumerate_loops(const ExtendedExchangeMatrix& m, int max_len, int workers = 1);

struct MgsCensus {
  int n = 0;
  std::size_t count = 0;
  std::map<int, std::size_t> lengths;
  std::map<std::string, std::size_t> permutations;
  int min_length = 0;
  int max_length = 0;
};

MgsCensus mgs_census(int n, const MgsOptions& options = {});
MgsCensus census_of(int n, const std::vector<MgsRecord>& records);

}  // namespace quiver
