#pragma once

#include <map>
#include <string>

#include "homquot/graph.hpp"

namespace homquot {

/// A total vertex map between two graphs.
///
/// Construction checks totality and that every image is a target vertex.
/// Edge preservation is a property queried through validate_hom(), so a
/// HomMap may also carry a candidate map that turns out not to be a
/// homomorphism.
class HomMap {
 public:
  HomMap(GraphPtr source, GraphPtr target, VertexMap image);

  /// Throws InputError when a source vertex is missing from `map` or a key or
  /// value names an undeclared vertex.
  static HomMap from_labels(GraphPtr source, GraphPtr target, const std::map<std::string, std::string>& map);

  const Graph& source() const { return *source_; }
  const Graph& target() const { return *target_; }
  const GraphPtr& source_ptr() const { return source_; }
  const GraphPtr& target_ptr() const { return target_; }

  Vertex operator()(Vertex x) const { return image_[x]; }
  const VertexMap& image() const { return image_; }

  std::map<std::string, std::string> to_labels() const;

 private:
  GraphPtr source_;
  GraphPtr target_;
  VertexMap image_;
};

}  // namespace homquot
