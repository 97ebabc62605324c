#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mstinfer/graph.hpp"
#include "mstinfer/ordering.hpp"

namespace mstinfer {

// One edgelist row: endpoint ids, a non-negative distance, and optional
// region labels for the endpoints (empty string = unlabeled).
struct EdgelistRecord {
  std::string id_a;
  std::string id_b;
  double distance = 0.0;
  std::string region_a;
  std::string region_b;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// CSV edgelist: columns id_a,id_b,distance with optional region_a,region_b.
// A header row is recognized by a non-numeric third field. Self-loops,
// repeated unordered pairs, malformed rows, and conflicting region labels
// raise ParseError with the offending line number.
std::vector<EdgelistRecord> load_edgelist(const std::filesystem::path& path);
std::vector<EdgelistRecord> parse_edgelist(std::istream& in);

enum class ZeroPolicy { ImputeAfterFilter, ImputeBeforeFilter };

struct PreprocessReport {
  int input_nodes = 0;
  int input_edges = 0;
  int dropped_edges = 0;
  int removed_isolates = 0;
  int imputed_zeros = 0;
  int output_nodes = 0;
  int output_edges = 0;
  int output_components = 0;
  double threshold = 0.0;
  double min_positive_distance = 0.0;  // imputation basis; 0 when unused
  double imputed_value = 0.0;          // 0 when nothing was imputed
};

struct PreprocessResult {
  WeightedGraph graph;
  PreprocessReport report;
};

// Distance-network cleanup: drop edges with distance strictly above the
// threshold, drop nodes left without edges, and replace zero distances by
// half the minimum positive retained distance. The alternative policy imputes
// from all positive distances before filtering. An empty result is valid;
// zeros that cannot be imputed (no positive distance available) are an error.
PreprocessResult preprocess(std::span<const EdgelistRecord> records,
                            double threshold = 0.015,
                            ZeroPolicy policy = ZeroPolicy::ImputeAfterFilter);

// The tie-breaking ordering fixed once per analysis; alias of
// weight_ordering, named for its role.
EdgeOrdering fixed_ordering(const WeightedGraph& g, std::uint64_t seed);

// All nodes labeled with the given region. Unlabeled nodes never match; an
// unknown label yields an empty subset.
NodeSubset subset_by_region(const WeightedGraph& g, std::string_view region);

// Graph back to records (named endpoints, regions preserved), suitable for
// re-parsing; used for round-trip checks and the preprocessed-edgelist output.
std::vector<EdgelistRecord> to_records(const WeightedGraph& g);

// Writes records as CSV; region columns appear when any record carries one.
void write_edgelist_csv(std::ostream& out,
                        std::span<const EdgelistRecord> records);

}  // namespace mstinfer
