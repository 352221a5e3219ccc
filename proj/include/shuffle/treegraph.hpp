#pragma once

// The traversal tree: every enumeration event becomes a node, linked to the
// event it was derived from. Exports to DOT and JSON.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shuffle/core.hpp"

namespace shuffle::treegraph {

inline constexpr unsigned kTreeMaxWidth = 24;

struct TraversalNode {
  EnumerationEvent event;
  std::vector<std::uint64_t> children;
  // Edges from the root.
  unsigned path_length{0};
  // Number of places where consecutive edges on the root path change kind.
  unsigned turn_count{0};

  friend bool operator==(const TraversalNode&, const TraversalNode&) = default;
};

struct TraversalTree {
  ShuffleSpec spec;
  std::vector<TraversalNode> nodes;  // emission order; node id == event index

  const TraversalNode& root() const { return nodes.front(); }

  friend bool operator==(const TraversalTree&, const TraversalTree&) = default;
};

struct TreeStats {
  std::uint64_t node_count{0};
  unsigned max_path_length{0};
  unsigned max_turn_count{0};
  std::uint64_t shift_edges{0};
  std::uint64_t subtract_edges{0};
  // child count -> number of nodes with that many children
  std::map<std::size_t, std::uint64_t> branching_histogram;
};

namespace detail {

inline void link(TraversalTree& tree, TraversalNode node) {
  if (node.event.parent_index) {
    auto& parent = tree.nodes.at(*node.event.parent_index);
    parent.children.push_back(node.event.index);
    node.path_length = parent.path_length + 1;
    const bool turns = parent.event.edge != EdgeKind::Root && parent.event.edge != node.event.edge;
    node.turn_count = parent.turn_count + (turns ? 1U : 0U);
  }
  tree.nodes.push_back(std::move(node));
}

}  // namespace detail

inline TraversalTree build_tree(const ShuffleSpec& spec) {
  spec.require_fits();
  if (spec.width() > kTreeMaxWidth) {
    throw instance_too_large("tree export limited to width " + std::to_string(kTreeMaxWidth) +
                             ", got " + std::to_string(spec.width()));
  }
  TraversalTree tree{spec, {}};
  enumerate(spec, [&](const EnumerationEvent& e) { detail::link(tree, TraversalNode{e, {}, 0, 0}); });
  return tree;
}

inline TreeStats tree_stats(const TraversalTree& tree) {
  TreeStats stats;
  stats.node_count = tree.nodes.size();
  for (const auto& node : tree.nodes) {
    stats.max_path_length = std::max(stats.max_path_length, node.path_length);
    stats.max_turn_count = std::max(stats.max_turn_count, node.turn_count);
    if (node.event.edge == EdgeKind::Shift) ++stats.shift_edges;
    if (node.event.edge == EdgeKind::Subtract) ++stats.subtract_edges;
    ++stats.branching_histogram[node.children.size()];
  }
  return stats;
}

/// Directed graph keyed by decimal value. Subtract edges carry the
/// subtrahend in binary as their label.
inline std::string export_dot(const TraversalTree& tree) {
  const unsigned width = tree.spec.width();
  std::ostringstream out;
  out << "digraph shuffle_product {\n";
  out << "  // zeros=" << tree.spec.zeros << " ones=" << tree.spec.ones << "\n";
  for (const auto& node : tree.nodes) {
    const auto value = node.event.value.value;
    out << "  " << value << " [label=\"" << to_binary(value, width) << "\\n" << value << "\"];\n";
  }
  for (const auto& node : tree.nodes) {
    if (!node.event.parent_index) continue;
    const auto& parent = tree.nodes[*node.event.parent_index];
    out << "  " << parent.event.value.value << " -> " << node.event.value.value << " [kind="
        << to_string(node.event.edge);
    if (node.event.edge == EdgeKind::Subtract) {
      out << ", label=\"" << to_binary(node.event.subtrahend_used->value) << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline nlohmann::ordered_json to_json(const TraversalTree& tree) {
  const unsigned width = tree.spec.width();
  nlohmann::ordered_json doc;
  doc["spec"] = {{"zeros", tree.spec.zeros}, {"ones", tree.spec.ones}};
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : tree.nodes) {
    const auto& e = node.event;
    nlohmann::ordered_json rec;
    rec["index"] = e.index;
    rec["value"] = e.value.value;
    rec["binary"] = to_binary(e.value.value, width);
    if (e.parent_index) rec["parent_index"] = *e.parent_index;
    rec["edge"] = to_string(e.edge);
    if (e.subtrahend_used) {
      rec["subtrahend"] = e.subtrahend_used->value;
      rec["subtrahend_binary"] = to_binary(e.subtrahend_used->value);
    }
    rec["shift_count"] = e.shift_count;
    rec["subtract_count"] = e.subtract_count;
    rec["path_length"] = node.path_length;
    rec["turn_count"] = node.turn_count;
    nodes.push_back(std::move(rec));
  }
  return doc;
}

inline std::string export_json(const TraversalTree& tree) { return to_json(tree).dump(2) + "\n"; }

inline EdgeKind parse_edge_kind(const std::string& text) {
  if (text == "root") return EdgeKind::Root;
  if (text == "shift") return EdgeKind::Shift;
  if (text == "subtract") return EdgeKind::Subtract;
  throw std::invalid_argument("unknown edge kind: " + text);
}

/// Rebuilds a tree from export_json output. Children lists are recovered from
/// parent links; path metrics are read back as stored.
inline TraversalTree parse_json_tree(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  TraversalTree tree;
  tree.spec = ShuffleSpec{doc.at("spec").at("zeros").get<unsigned>(),
                          doc.at("spec").at("ones").get<unsigned>()};
  for (const auto& rec : doc.at("nodes")) {
    TraversalNode node;
    auto& e = node.event;
    e.index = rec.at("index").get<std::uint64_t>();
    if (e.index != tree.nodes.size()) throw std::invalid_argument("node records out of order");
    e.value = Bitmask{rec.at("value").get<std::uint64_t>()};
    if (rec.contains("parent_index")) e.parent_index = rec["parent_index"].get<std::uint64_t>();
    e.edge = parse_edge_kind(rec.at("edge").get<std::string>());
    if (rec.contains("subtrahend")) e.subtrahend_used = Subtrahend{rec["subtrahend"].get<std::uint64_t>()};
    e.shift_count = rec.at("shift_count").get<unsigned>();
    e.subtract_count = rec.at("subtract_count").get<unsigned>();
    node.path_length = rec.at("path_length").get<unsigned>();
    node.turn_count = rec.at("turn_count").get<unsigned>();
    if (e.parent_index) {
      if (*e.parent_index >= tree.nodes.size()) throw std::invalid_argument("parent follows child");
      tree.nodes[*e.parent_index].children.push_back(e.index);
    }
    tree.nodes.push_back(std::move(node));
  }
  return tree;
}

}  // namespace shuffle::treegraph
