#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeinv/types.hpp"

namespace treeinv {

// One input record: the edge from `parent` down to `child` with its data.
struct EdgeRecord {
  std::string parent;
  std::string child;
  Value w = 0;  // current weight
  Value l = 0;  // lower bound of the adjusted weight
  Value u = 0;  // upper bound of the adjusted weight
  Value c = 1;  // adjustment cost, strictly positive
};

struct EdgeAttributes {
  Value w = 0;
  Value l = 0;
  Value u = 0;
  Value c = 1;
};

// Selector for path sums.
enum class EdgeValue { Weight, Lower, Upper };

// Immutable rooted tree over dense node indices. Nodes are indexed in the
// natural (digit-aware) order of their labels; an edge is identified by its
// child endpoint and edges are ordered by ascending child index.
struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parent;       // per node, -1 at the root
  std::vector<EdgeId> parent_edge;  // per node, -1 at the root
  std::vector<NodeId> edge_child;   // per edge, its child endpoint
  std::vector<int> child_count;     // per node
  std::vector<NodeId> leaves;       // ascending node index
  std::vector<NodeId> bfs_order;    // root first; every parent before its children

  int node_count() const { return static_cast<int>(parent.size()); }
  int edge_count() const { return static_cast<int>(edge_child.size()); }
  bool is_leaf(NodeId v) const { return child_count[v] == 0; }
};

// A full problem input. `t0` designates the leaf whose root path must meet
// the target exactly; it is absent for pure interdiction instances.
// Immutable after construction; safe to share across threads.
struct Instance {
  RootedTree tree;
  std::vector<std::string> labels;    // node -> external label
  std::vector<EdgeAttributes> attrs;  // per edge
  std::optional<NodeId> t0;
  Value target = 0;  // the required shortest root-leaf value D
  Value scale = 1;   // decimal scale used when (de)serializing
  std::vector<char> on_p0;  // per edge: lies on the root->t0 path; empty unless t0

  int node_count() const { return tree.node_count(); }
  int edge_count() const { return tree.edge_count(); }
};

// Ordered edge list of the unique root-to-leaf path.
struct PathView {
  NodeId leaf = -1;
  std::vector<EdgeId> edges;
};

// A candidate weight vector, indexed like Instance::attrs.
struct WeightAssignment {
  std::vector<Value> weights;
};

struct ChangedEdge {
  EdgeId edge = -1;
  Value old_weight = 0;
  Value new_weight = 0;

  friend bool operator==(const ChangedEdge&, const ChangedEdge&) = default;
};

// Digit-aware label order: "v2" < "v10", "a2b" < "a10b".
bool natural_less(std::string_view a, std::string_view b);

// Validates and canonicalizes the input. Throws StructureError,
// AttributeError or InputError with the offending label in the message.
Instance build_instance(const std::vector<EdgeRecord>& records, const std::string& root,
                        const std::optional<std::string>& t0, Value target, Value scale = 1);

// Index of the node carrying `label`; InputError if unknown.
NodeId node_by_label(const Instance& inst, std::string_view label);

// The unique path from the root to `leaf`; InputError on non-leaf nodes.
PathView root_leaf_path(const Instance& inst, NodeId leaf);

// Exact sum of the selected per-edge value along the path. Empty paths sum
// to zero.
Value path_sum(const Instance& inst, const PathView& path, EdgeValue which);

WeightAssignment current_weights(const Instance& inst);

// Edges where the assignment deviates from the instance weights, ascending
// by edge index.
std::vector<ChangedEdge> changed_edges(const Instance& inst, const WeightAssignment& wa);

// Largest cost among changed edges; 0 when nothing changed.
Value bottleneck_objective(const Instance& inst, const WeightAssignment& wa);

}  // namespace treeinv
