#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bcnfoc/types.hpp"

namespace bcnfoc {

enum class GraphKind { tet_stg, stg_plus, ted_stg };

using VertexId = std::uint32_t;

/// Time stamp of the pseudo-state in graphs where it has none.
inline constexpr std::int64_t kTimeless = -1;

struct GraphVertex {
  StateIndex state;  // kPseudoState for the pseudo-state
  std::int64_t time;
};

struct Arc {
  VertexId target;
  double weight;
  std::optional<InputIndex> control;  // empty on edges into the pseudo-state
};

/// Reference to the `arc`-th out-arc of `source`.
struct ArcRef {
  VertexId source;
  std::uint32_t arc;
};

/// Weighted digraph shared by the TET-STG, STG+ and TED-STG. Vertex 0 is the
/// source (x0 at t = 0) whenever the graph is non-empty.
class LayeredGraph {
 public:
  explicit LayeredGraph(GraphKind kind) : kind_(kind) {}

  GraphKind kind() const noexcept { return kind_; }

  /// Adds (state, time) to `layer`; returns the existing id if present.
  VertexId add_vertex(StateIndex state, std::int64_t time, std::size_t layer);
  VertexId add_pseudo(std::int64_t time);
  void add_arc(VertexId from, VertexId to, double weight, std::optional<InputIndex> control);

  std::optional<VertexId> find(StateIndex state, std::int64_t time) const;
  std::optional<VertexId> pseudo() const noexcept { return pseudo_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  const GraphVertex& vertex(VertexId id) const { return vertices_[id]; }
  std::span<const Arc> arcs(VertexId id) const { return arcs_[id]; }
  std::span<const ArcRef> predecessors(VertexId id) const { return preds_[id]; }
  const Arc& arc(ArcRef ref) const { return arcs_[ref.source][ref.arc]; }
  /// Non-pseudo vertices grouped by layer; the pseudo-state is not listed.
  const std::vector<std::vector<VertexId>>& layers() const noexcept { return layers_; }

 private:
  static std::uint64_t key(StateIndex state, std::int64_t time);

  GraphKind kind_;
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<ArcRef>> preds_;
  std::vector<std::vector<VertexId>> layers_;
  std::unordered_map<std::uint64_t, VertexId> index_;
  std::optional<VertexId> pseudo_;
  std::size_t arc_count_ = 0;
};

}  // namespace bcnfoc
