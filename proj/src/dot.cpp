#include "bcnfoc/dot.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace bcnfoc {

namespace {

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string vertex_name(const GraphVertex& v) {
  if (v.state == kPseudoState) return v.time == kTimeless ? "\"0\"" : "\"0@" + std::to_string(v.time) + "\"";
  return "\"" + std::to_string(v.state) + "@" + std::to_string(v.time) + "\"";
}

}  // namespace

std::string export_dot(const Stg& graph, const DotOptions& options) {
  std::set<std::pair<StateIndex, StateIndex>> highlighted;
  for (std::size_t i = 0; i + 1 < options.highlight_states.size(); ++i) {
    highlighted.emplace(options.highlight_states[i], options.highlight_states[i + 1]);
  }

  std::ostringstream out;
  out << "digraph " << options.name << " {\n";
  out << "  node [shape=circle];\n";
  for (StateIndex v : graph.vertices()) {
    out << "  " << v;
    std::string attrs;
    if (v == graph.x0()) attrs += "shape=doublecircle";
    if (options.terminal_states.contains(v)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "style=filled, fillcolor=gray";
    }
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  for (StateIndex v : graph.vertices()) {
    for (const StgEdge& e : graph.successors(v)) {
      out << "  " << v << " -> " << e.target;
      std::string attrs;
      if (options.show_controls) {
        attrs += "label=\"{";
        for (std::size_t i = 0; i < e.controls.size(); ++i) {
          if (i) attrs += ",";
          attrs += std::to_string(e.controls[i]);
        }
        attrs += "}\"";
      }
      if (highlighted.contains({v, e.target})) {
        if (!attrs.empty()) attrs += ", ";
        attrs += "color=red, penwidth=2";
      }
      if (!attrs.empty()) out << " [" << attrs << "]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const LayeredGraph& graph, const DotOptions& options) {
  std::set<std::pair<VertexId, VertexId>> highlighted;
  for (std::size_t i = 0; i + 1 < options.highlight_path.size(); ++i) {
    highlighted.emplace(options.highlight_path[i], options.highlight_path[i + 1]);
  }

  std::ostringstream out;
  out << "digraph " << options.name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (const auto& layer : graph.layers()) {
    if (graph.kind() == GraphKind::stg_plus) break;
    out << "  { rank=same;";
    for (VertexId id : layer) out << " " << vertex_name(graph.vertex(id)) << ";";
    out << " }\n";
  }
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const GraphVertex& v = graph.vertex(id);
    out << "  " << vertex_name(v) << " [label=\"";
    if (v.state == kPseudoState) {
      out << "0\", shape=box";
    } else {
      out << v.state;
      if (graph.kind() != GraphKind::stg_plus) out << "," << v.time;
      out << "\"";
      if (id == 0) out << ", shape=doublecircle";
      if (options.terminal_states.contains(v.state)) out << ", style=filled, fillcolor=gray";
    }
    out << "];\n";
  }
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    for (const Arc& a : graph.arcs(id)) {
      out << "  " << vertex_name(graph.vertex(id)) << " -> " << vertex_name(graph.vertex(a.target)) << " [label=\"";
      if (a.control) {
        out << "(" << *a.control << ", " << number(a.weight) << ")";
      } else {
        out << number(a.weight);
      }
      out << "\"";
      if (highlighted.contains({id, a.target})) out << ", color=red, penwidth=2";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bcnfoc
