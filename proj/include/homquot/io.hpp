#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "homquot/count.hpp"
#include "homquot/graph.hpp"
#include "homquot/groups.hpp"
#include "homquot/hom.hpp"
#include "homquot/partition.hpp"
#include "homquot/perm.hpp"

namespace homquot::io {

using nlohmann::json;

/// Parses a JSON document. Syntax errors become InputError carrying the file
/// name with line and column.
json read_json_file(const std::filesystem::path& path);
json parse_json(const std::string& text, const std::string& source_name);
void write_json_file(const std::filesystem::path& path, const json& doc);

// {"vertices": [...], "edges": [[u, v], ...]}; canonical output sorts both.
json to_json(const Graph& g);
Graph graph_from_json(const json& doc);

// {"blocks": [[...], ...]}
json to_json(const Partition& p, const Graph& g);
Partition partition_from_json(const json& doc, const Graph& g);

// {"generators": [{"v": "f(v)", ...}, ...]}; omitted vertices are fixed.
json to_json(const PermGroup& group, const Graph& g);
PermGroup group_from_json(const json& doc, const Graph& g);

// {"map": {"x": "y", ...}}
json to_json(const HomMap& m);
HomMap hom_from_json(const json& doc, GraphPtr source, GraphPtr target);

json to_json(const ClassificationReport& r);

// {"terms": [{"y", "component_leader", "kX", "kC", "value"}], "total"}
json to_json(const CountBreakdown& b, const HomMap& m);

// {"elements": [...], "identity": "e", "table": {"a": {"b": "ab", ...}, ...}}
FiniteGroup cayley_from_json(const json& doc);
json to_json(const FiniteGroup& g);

}  // namespace homquot::io
