#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ngdb/common.hpp"
#include "ngdb/query.hpp"

namespace ngdb {

struct Triple {
  int32_t head;
  int32_t rel;
  int32_t tail;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Immutable triple store with forward/inverse adjacency. Safe for
// unsynchronized concurrent reads once built.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  // Deduplicates and validates id ranges (throws IdOutOfRange).
  static KnowledgeGraph from_triples(int32_t n_entities, int32_t n_relations,
                                     std::vector<Triple> triples);

  int32_t n_entities() const { return n_entities_; }
  int32_t n_relations() const { return n_relations_; }
  const std::vector<Triple>& triples() const { return triples_; }

  // Sorted tails t with (e, r, t); empty if none.
  const std::vector<int32_t>& neighbors(int32_t e, int32_t r) const;
  // Sorted heads h with (h, r, e); empty if none.
  const std::vector<int32_t>& inverse_neighbors(int32_t e, int32_t r) const;

  // Per-entity edge lists, used by the backward-instantiation sampler.
  const std::vector<std::pair<int32_t, int32_t>>& out_edges(int32_t e) const {
    return out_edges_[e];  // (rel, tail)
  }
  const std::vector<std::pair<int32_t, int32_t>>& in_edges(int32_t e) const {
    return in_edges_[e];  // (rel, head)
  }
  // Entities with at least one inbound edge (candidate sampled answers).
  const std::vector<int32_t>& entities_with_in_edges() const {
    return has_in_;
  }

  bool has_triple(int32_t h, int32_t r, int32_t t) const;

 private:
  static uint64_t key(int32_t e, int32_t r) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(e)) << 32) |
           static_cast<uint32_t>(r);
  }

  int32_t n_entities_ = 0;
  int32_t n_relations_ = 0;
  std::vector<Triple> triples_;
  std::unordered_map<uint64_t, std::vector<int32_t>> adj_out_;
  std::unordered_map<uint64_t, std::vector<int32_t>> adj_in_;
  std::vector<std::vector<std::pair<int32_t, int32_t>>> out_edges_;
  std::vector<std::vector<std::pair<int32_t, int32_t>>> in_edges_;
  std::vector<int32_t> has_in_;
};

struct GraphSplit {
  KnowledgeGraph train;
  std::vector<Triple> valid_edges;
  std::vector<Triple> test_edges;
  KnowledgeGraph full;  // train + valid + test
};

// Loads entities.dict / relations.dict / train.txt / valid.txt / test.txt
// from `dir`. Throws MissingFile, MalformedLine, IdOutOfRange.
GraphSplit load_graph(const std::string& dir);

// Exact denotation set of the query on g, sorted ascending. Negated atoms are
// applied as set difference inside the enclosing intersection.
std::vector<int32_t> answer_query(const KnowledgeGraph& g, const QueryInstance& q);

// obs = answers on train; miss = answers on full minus obs.
std::pair<std::vector<int32_t>, std::vector<int32_t>> predictive_answers(
    const GraphSplit& split, const QueryInstance& q);

}  // namespace ngdb
