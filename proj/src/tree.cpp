#include "treeinv/tree.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace treeinv {

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

std::string_view strip_leading_zeros(std::string_view digits) {
  std::size_t p = digits.find_first_not_of('0');
  if (p == std::string_view::npos) p = digits.size() - 1;  // keep one zero
  return digits.substr(p);
}

void check_value(const std::string& child, const char* field, Value v) {
  if (v > kValueLimit || v < -kValueLimit) {
    throw AttributeError("edge '" + child + "': " + field + " exceeds the magnitude limit");
  }
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i0 = i;
      std::size_t j0 = j;
      while (i < a.size() && is_digit(a[i])) ++i;
      while (j < b.size() && is_digit(b[j])) ++j;
      std::string_view da = strip_leading_zeros(a.substr(i0, i - i0));
      std::string_view db = strip_leading_zeros(b.substr(j0, j - j0));
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (i < a.size() || j < b.size()) return a.size() - i < b.size() - j;
  return a < b;  // tie-break labels that differ only in leading zeros
}

Instance build_instance(const std::vector<EdgeRecord>& records, const std::string& root,
                        const std::optional<std::string>& t0, Value target, Value scale) {
  if (records.empty()) throw InputError("an instance needs at least one edge");
  if (records.size() >= static_cast<std::size_t>(kNodeLimit)) {
    throw InputError("too many edges (limit " + std::to_string(kNodeLimit) + ")");
  }
  bool scale_ok = scale >= 1 && scale <= 1'000'000'000;
  for (Value s = scale; scale_ok && s > 1; s /= 10) {
    if (s % 10 != 0) scale_ok = false;
  }
  if (!scale_ok) throw InputError("scale must be a power of ten in [1, 10^9]");
  if (target > kValueLimit || target < -kValueLimit) {
    throw InputError("target value exceeds the magnitude limit");
  }

  // Canonical node order: natural order of labels.
  std::vector<std::string> labels;
  labels.reserve(records.size() * 2);
  for (const EdgeRecord& r : records) {
    if (r.parent.empty() || r.child.empty()) throw InputError("node labels must be non-empty");
    labels.push_back(r.parent);
    labels.push_back(r.child);
  }
  labels.push_back(root);
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (NodeId v = 0; v < n; ++v) index.emplace(labels[v], v);

  Instance inst;
  inst.labels = labels;
  inst.target = target;
  inst.scale = scale;

  RootedTree& tree = inst.tree;
  tree.root = index.at(root);
  tree.parent.assign(n, -1);
  tree.parent_edge.assign(n, -1);
  tree.child_count.assign(n, 0);

  std::vector<const EdgeRecord*> record_of_node(n, nullptr);
  for (const EdgeRecord& r : records) {
    NodeId pi = index.at(r.parent);
    NodeId ci = index.at(r.child);
    if (pi == ci) throw StructureError("self-loop at node '" + r.child + "'");
    if (ci == tree.root) throw StructureError("root '" + root + "' appears as a child");
    if (record_of_node[ci] != nullptr) {
      throw StructureError("duplicate parent edge for node '" + r.child + "'");
    }
    record_of_node[ci] = &r;
    tree.parent[ci] = pi;
    tree.child_count[pi] += 1;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v != tree.root && tree.parent[v] < 0) {
      throw StructureError("node '" + labels[v] + "' has no parent edge; tree is disconnected");
    }
  }

  // Canonical edges: non-root nodes in ascending index order.
  tree.edge_child.reserve(n - 1);
  inst.attrs.reserve(n - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    EdgeId e = static_cast<EdgeId>(tree.edge_child.size());
    tree.edge_child.push_back(v);
    tree.parent_edge[v] = e;
    const EdgeRecord& r = *record_of_node[v];
    check_value(r.child, "w", r.w);
    check_value(r.child, "l", r.l);
    check_value(r.child, "u", r.u);
    check_value(r.child, "c", r.c);
    if (r.l > r.w || r.w > r.u) {
      throw AttributeError("edge '" + r.child + "': bounds must satisfy l <= w <= u (l=" +
                           std::to_string(r.l) + ", w=" + std::to_string(r.w) +
                           ", u=" + std::to_string(r.u) + ")");
    }
    if (r.c <= 0) {
      throw AttributeError("edge '" + r.child + "': cost must be positive (c=" +
                           std::to_string(r.c) + ")");
    }
    inst.attrs.push_back(EdgeAttributes{r.w, r.l, r.u, r.c});
  }

  // Reach every node from the root; anything unreached sits on a cycle.
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v != tree.root) children[tree.parent[v]].push_back(v);
  }
  tree.bfs_order.reserve(n);
  tree.bfs_order.push_back(tree.root);
  for (std::size_t head = 0; head < tree.bfs_order.size(); ++head) {
    for (NodeId ch : children[tree.bfs_order[head]]) tree.bfs_order.push_back(ch);
  }
  if (static_cast<int>(tree.bfs_order.size()) != n) {
    throw StructureError("edge set contains a cycle");
  }

  for (NodeId v = 0; v < n; ++v) {
    if (tree.child_count[v] == 0) tree.leaves.push_back(v);
  }

  if (t0.has_value()) {
    auto it = index.find(*t0);
    if (it == index.end()) throw InputError("t0 '" + *t0 + "' is not a node of the tree");
    NodeId leaf = it->second;
    if (!tree.is_leaf(leaf)) throw InputError("t0 '" + *t0 + "' is not a leaf");
    inst.t0 = leaf;
    inst.on_p0.assign(tree.edge_count(), 0);
    for (NodeId v = leaf; v != tree.root; v = tree.parent[v]) {
      inst.on_p0[tree.parent_edge[v]] = 1;
    }
  }
  return inst;
}

NodeId node_by_label(const Instance& inst, std::string_view label) {
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (inst.labels[v] == label) return v;
  }
  throw InputError("unknown node label '" + std::string(label) + "'");
}

PathView root_leaf_path(const Instance& inst, NodeId leaf) {
  if (leaf < 0 || leaf >= inst.node_count()) throw InputError("node index out of range");
  if (!inst.tree.is_leaf(leaf)) {
    throw InputError("node '" + inst.labels[leaf] + "' is not a leaf");
  }
  PathView path;
  path.leaf = leaf;
  for (NodeId v = leaf; v != inst.tree.root; v = inst.tree.parent[v]) {
    path.edges.push_back(inst.tree.parent_edge[v]);
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Value path_sum(const Instance& inst, const PathView& path, EdgeValue which) {
  Value sum = 0;
  for (EdgeId e : path.edges) {
    const EdgeAttributes& a = inst.attrs[e];
    switch (which) {
      case EdgeValue::Weight:
        sum += a.w;
        break;
      case EdgeValue::Lower:
        sum += a.l;
        break;
      case EdgeValue::Upper:
        sum += a.u;
        break;
    }
  }
  return sum;
}

WeightAssignment current_weights(const Instance& inst) {
  WeightAssignment wa;
  wa.weights.reserve(inst.edge_count());
  for (const EdgeAttributes& a : inst.attrs) wa.weights.push_back(a.w);
  return wa;
}

std::vector<ChangedEdge> changed_edges(const Instance& inst, const WeightAssignment& wa) {
  if (wa.weights.size() != static_cast<std::size_t>(inst.edge_count())) {
    throw InputError("assignment dimension does not match the edge count");
  }
  std::vector<ChangedEdge> out;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (wa.weights[e] != inst.attrs[e].w) {
      out.push_back(ChangedEdge{e, inst.attrs[e].w, wa.weights[e]});
    }
  }
  return out;
}

Value bottleneck_objective(const Instance& inst, const WeightAssignment& wa) {
  if (wa.weights.size() != static_cast<std::size_t>(inst.edge_count())) {
    throw InputError("assignment dimension does not match the edge count");
  }
  Value best = 0;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (wa.weights[e] != inst.attrs[e].w) best = std::max(best, inst.attrs[e].c);
  }
  return best;
}

}  // namespace treeinv
