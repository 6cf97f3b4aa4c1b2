#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ngdb/common.hpp"

namespace ngdb {

// The 14 supported query shapes. Naming follows the usual CQA benchmark tags
// (identifiers cannot start with a digit, hence the leading letter).
enum class Pattern : uint8_t {
  P1,   // 1p
  P2,   // 2p
  P3,   // 3p
  I2,   // 2i
  I3,   // 3i
  PI,   // pi
  IP,   // ip
  U2,   // 2u
  UP,   // up
  IN2,  // 2in
  IN3,  // 3in
  PIN,  // pin
  PNI,  // pni
  INP,  // inp
};

constexpr int kPatternCount = 14;

struct PatternInfo {
  const char* name;
  int n_anchors;
  int n_relations;
  bool has_union;
  bool has_negation;
  int eval_nodes;   // forward DAG size, eval sink
  int train_nodes;  // forward DAG size, training sink
};

const PatternInfo& pattern_info(Pattern p);
const std::array<Pattern, kPatternCount>& all_patterns();
Pattern parse_pattern(const std::string& name);  // throws UnsupportedPattern

// One concrete query: anchors and relations laid out in the fixed per-pattern
// order documented in pattern_info/build_dag.
struct QueryInstance {
  Pattern pattern = Pattern::P1;
  std::vector<int32_t> anchors;
  std::vector<int32_t> relations;

  void validate() const;  // throws ArityMismatch
};

// JSON-lines record for frozen eval sets:
//   {"pattern":"2in","anchors":[3,9],"relations":[1,4],
//    "answers_obs":[...],"answers_miss":[...]}
struct QueryRecord {
  QueryInstance query;
  std::vector<int32_t> answers_obs;
  std::vector<int32_t> answers_miss;
};

std::string to_jsonl(const QueryRecord& rec);
QueryRecord parse_jsonl(const std::string& line);
std::vector<QueryRecord> load_query_file(const std::string& path);
void save_query_file(const std::string& path, const std::vector<QueryRecord>& recs);

}  // namespace ngdb
