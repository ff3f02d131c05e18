#include "homquot/hom_map.hpp"

#include "homquot/error.hpp"

namespace homquot {

HomMap::HomMap(GraphPtr source, GraphPtr target, VertexMap image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw InputError("map needs both a source and a target graph");
  if (image_.size() != source_->order()) throw InputError("map is not total on the source vertices");
  for (Vertex y : image_)
    if (y >= target_->order()) throw InputError("map image outside the target vertices");
}

HomMap HomMap::from_labels(GraphPtr source, GraphPtr target, const std::map<std::string, std::string>& map) {
  if (!source || !target) throw InputError("map needs both a source and a target graph");
  VertexMap image(source->order(), static_cast<Vertex>(-1));
  for (const auto& [x, y] : map) image[source->index_of(x)] = target->index_of(y);
  for (Vertex x = 0; x < image.size(); ++x)
    if (image[x] == static_cast<Vertex>(-1)) throw InputError("map has no image for vertex '" + source->label(x) + "'");
  return HomMap(std::move(source), std::move(target), std::move(image));
}

std::map<std::string, std::string> HomMap::to_labels() const {
  std::map<std::string, std::string> out;
  for (Vertex x = 0; x < image_.size(); ++x) out.emplace(source_->label(x), target_->label(image_[x]));
  return out;
}

}  // namespace homquot
