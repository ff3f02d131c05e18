#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homquot/graph.hpp"
#include "homquot/hom_map.hpp"
#include "homquot/io.hpp"

namespace homquot::test {

inline GraphPtr graph(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges) {
  return share(Graph::build(std::move(vertices), edges));
}

inline GraphPtr numbered(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [a, b] : edges) named.emplace_back(std::to_string(a), std::to_string(b));
  return graph(std::move(vertices), named);
}

inline std::string data_path(const std::string& name) { return std::string(HOMQUOT_DATA_DIR) + "/" + name; }

inline GraphPtr data_graph(const std::string& name) {
  return share(io::graph_from_json(io::read_json_file(data_path(name))));
}

inline HomMap data_map(const std::string& map, const GraphPtr& src, const GraphPtr& tgt) {
  return io::hom_from_json(io::read_json_file(data_path(map)), src, tgt);
}

inline GraphPtr yz() { return graph({"y", "z"}, {{"y", "z"}}); }

}  // namespace homquot::test
