#include "mstinfer/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "mstinfer/io.hpp"

namespace mstinfer {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// Region labels per node id, merged across rows; conflicting nonempty labels
// are an error.
void merge_region(std::map<std::string, std::string>& regions,
                  const std::string& id, const std::string& label, int line) {
  if (label.empty()) return;
  auto [it, inserted] = regions.emplace(id, label);
  if (!inserted && it->second != label)
    throw ParseError("conflicting region labels for node '" + id + "'", line);
}

}  // namespace

std::vector<EdgelistRecord> parse_edgelist(std::istream& in) {
  std::vector<EdgelistRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::string> regions;
  std::string line;
  int lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto f = split_fields(line);
    if (f.size() != 3 && f.size() != 5)
      throw ParseError("expected id_a,id_b,distance[,region_a,region_b]",
                       lineno);
    double dist = 0.0;
    if (first_content && !parse_double(f[2], dist)) {
      first_content = false;  // header row
      continue;
    }
    first_content = false;
    EdgelistRecord rec;
    rec.id_a = f[0];
    rec.id_b = f[1];
    if (!parse_double(f[2], dist))
      throw ParseError("distance is not a number: '" + f[2] + "'", lineno);
    if (!std::isfinite(dist) || dist < 0.0)
      throw ParseError("distance must be finite and non-negative", lineno);
    rec.distance = dist;
    if (rec.id_a.empty() || rec.id_b.empty())
      throw ParseError("empty node id", lineno);
    if (rec.id_a == rec.id_b)
      throw ParseError("self-loop on node '" + rec.id_a + "'", lineno);
    if (f.size() == 5) {
      rec.region_a = f[3];
      rec.region_b = f[4];
    }
    merge_region(regions, rec.id_a, rec.region_a, lineno);
    merge_region(regions, rec.id_b, rec.region_b, lineno);
    auto key = std::minmax(rec.id_a, rec.id_b);
    if (!seen.insert(key).second)
      throw ParseError(
          "duplicate edge between '" + rec.id_a + "' and '" + rec.id_b + "'",
          lineno);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<EdgelistRecord> load_edgelist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open edgelist: " + path.string());
  return parse_edgelist(in);
}

PreprocessResult preprocess(std::span<const EdgelistRecord> records,
                            double threshold, ZeroPolicy policy) {
  if (!(threshold > 0.0))
    throw std::invalid_argument("preprocess: threshold must be positive");

  // Node universe in first-appearance order; merged region labels.
  std::map<std::string, NodeId> index;
  std::vector<std::string> names;
  std::vector<std::string> regions;
  auto intern = [&](const std::string& id, const std::string& label) {
    auto [it, inserted] = index.emplace(id, static_cast<NodeId>(names.size()));
    if (inserted) {
      names.push_back(id);
      regions.emplace_back();
    }
    std::string& slot = regions[static_cast<std::size_t>(it->second)];
    if (!label.empty()) {
      if (!slot.empty() && slot != label)
        throw std::invalid_argument("preprocess: conflicting region labels for '" + id + "'");
      slot = label;
    }
    return it->second;
  };

  struct Row {
    NodeId a, b;
    double dist;
  };
  std::vector<Row> rows;
  rows.reserve(records.size());
  for (const EdgelistRecord& rec : records)
    rows.push_back({intern(rec.id_a, rec.region_a),
                    intern(rec.id_b, rec.region_b), rec.distance});

  PreprocessReport report;
  report.threshold = threshold;
  report.input_nodes = static_cast<int>(names.size());
  report.input_edges = static_cast<int>(rows.size());

  auto min_positive = [](const std::vector<Row>& rs, const std::vector<char>& live) {
    double m = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (live[i] && rs[i].dist > 0.0 && (m == 0.0 || rs[i].dist < m))
        m = rs[i].dist;
    return m;
  };
  auto impute = [&](std::vector<Row>& rs, const std::vector<char>& live) {
    double m = min_positive(rs, live);
    int zeros = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (live[i] && rs[i].dist == 0.0) ++zeros;
    if (zeros == 0) return;
    if (m == 0.0)
      throw std::runtime_error(
          "preprocess: zero distances present but no positive distance to impute from");
    report.min_positive_distance = m;
    report.imputed_value = m / 2.0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (live[i] && rs[i].dist == 0.0) rs[i].dist = m / 2.0;
    report.imputed_zeros = zeros;
  };

  std::vector<char> live(rows.size(), 1);
  if (policy == ZeroPolicy::ImputeBeforeFilter) impute(rows, live);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].dist > threshold) live[i] = 0;
  report.dropped_edges =
      static_cast<int>(std::count(live.begin(), live.end(), 0));
  if (policy == ZeroPolicy::ImputeAfterFilter) impute(rows, live);

  // Keep only nodes that still touch an edge, preserving appearance order.
  std::vector<char> touched(names.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (live[i]) {
      touched[static_cast<std::size_t>(rows[i].a)] = 1;
      touched[static_cast<std::size_t>(rows[i].b)] = 1;
    }
  std::vector<NodeId> remap(names.size(), -1);
  GraphData d;
  bool any_region = false;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (!touched[v]) continue;
    remap[v] = d.node_count++;
    d.names.push_back(names[v]);
    d.regions.push_back(regions[v]);
    if (!regions[v].empty()) any_region = true;
  }
  if (!any_region) d.regions.clear();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (live[i])
      d.edges.push_back({remap[static_cast<std::size_t>(rows[i].a)],
                         remap[static_cast<std::size_t>(rows[i].b)],
                         rows[i].dist});

  report.removed_isolates = report.input_nodes - d.node_count;
  report.output_nodes = d.node_count;
  report.output_edges = static_cast<int>(d.edges.size());

  PreprocessResult result{WeightedGraph(std::move(d)), report};
  result.report.output_components = component_count(result.graph);
  return result;
}

EdgeOrdering fixed_ordering(const WeightedGraph& g, std::uint64_t seed) {
  return weight_ordering(g, seed);
}

NodeSubset subset_by_region(const WeightedGraph& g, std::string_view region) {
  std::vector<NodeId> picked;
  if (!region.empty() && g.has_regions()) {
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (g.region(v) == region) picked.push_back(v);
  }
  return make_subset(std::move(picked));
}

std::vector<EdgelistRecord> to_records(const WeightedGraph& g) {
  std::vector<EdgelistRecord> records;
  records.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    EdgelistRecord rec;
    rec.id_a = g.has_names() ? g.name(ed.u) : std::to_string(ed.u);
    rec.id_b = g.has_names() ? g.name(ed.v) : std::to_string(ed.v);
    rec.distance = ed.w;
    if (g.has_regions()) {
      rec.region_a = g.region(ed.u);
      rec.region_b = g.region(ed.v);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_edgelist_csv(std::ostream& out,
                        std::span<const EdgelistRecord> records) {
  bool any_region = false;
  for (const EdgelistRecord& r : records)
    if (!r.region_a.empty() || !r.region_b.empty()) any_region = true;
  out << (any_region ? "id_a,id_b,distance,region_a,region_b"
                     : "id_a,id_b,distance")
      << '\n';
  for (const EdgelistRecord& r : records) {
    out << r.id_a << ',' << r.id_b << ',' << format_double(r.distance);
    if (any_region) out << ',' << r.region_a << ',' << r.region_b;
    out << '\n';
  }
}

}  // namespace mstinfer
