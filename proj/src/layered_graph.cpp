#include "bcnfoc/layered_graph.hpp"

#include "bcnfoc/errors.hpp"

namespace bcnfoc {

std::uint64_t LayeredGraph::key(StateIndex state, std::int64_t time) {
  return (static_cast<std::uint64_t>(time + 1) << 32) | state;
}

VertexId LayeredGraph::add_vertex(StateIndex state, std::int64_t time, std::size_t layer) {
  const auto [it, inserted] = index_.try_emplace(key(state, time), static_cast<VertexId>(vertices_.size()));
  if (!inserted) return it->second;
  vertices_.push_back({state, time});
  arcs_.emplace_back();
  preds_.emplace_back();
  if (layers_.size() <= layer) layers_.resize(layer + 1);
  layers_[layer].push_back(it->second);
  return it->second;
}

VertexId LayeredGraph::add_pseudo(std::int64_t time) {
  if (pseudo_) return *pseudo_;
  const auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back({kPseudoState, time});
  arcs_.emplace_back();
  preds_.emplace_back();
  index_.emplace(key(kPseudoState, time), id);
  pseudo_ = id;
  return id;
}

void LayeredGraph::add_arc(VertexId from, VertexId to, double weight, std::optional<InputIndex> control) {
  if (from >= vertices_.size() || to >= vertices_.size()) {
    throw Error(ErrorKind::index_out_of_range, "arc endpoint is not a vertex");
  }
  preds_[to].push_back({from, static_cast<std::uint32_t>(arcs_[from].size())});
  arcs_[from].push_back({to, weight, control});
  ++arc_count_;
}

std::optional<VertexId> LayeredGraph::find(StateIndex state, std::int64_t time) const {
  const auto it = index_.find(key(state, time));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace bcnfoc
