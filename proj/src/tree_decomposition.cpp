#include "fkdiv/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

int max_bag_width(const std::vector<std::vector<Vertex>>& bags) {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  const int nodes = td.node_count();
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw Error(ErrorCode::NotATree, "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

void require_tree(const TreeDecomposition& td, const std::vector<std::vector<int>>& adj) {
  const int nodes = td.node_count();
  if (nodes == 0) {
    if (!td.edges.empty()) throw Error(ErrorCode::NotATree, "edges without nodes");
    return;
  }
  if (static_cast<int>(td.edges.size()) != nodes - 1) {
    throw Error(ErrorCode::NotATree, "a tree on " + std::to_string(nodes) + " nodes needs " +
                                         std::to_string(nodes - 1) + " edges");
  }
  std::vector<std::uint8_t> seen(nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int u : adj[t]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != nodes) throw Error(ErrorCode::NotATree, "decomposition tree is disconnected");
}

}  // namespace

int TreeDecomposition::width() const { return max_bag_width(bags); }

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  for (int t = 0; t < node_count(); ++t) {
    td.bags.push_back(nodes[t].bag);
    for (int c : nodes[t].children) td.edges.emplace_back(t, c);
  }
  td.root = root;
  return td;
}

std::vector<Vertex> chordal_peo(const Graph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<std::uint8_t> numbered(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = 1;
    visit.push_back(pick);
    for (Vertex u : graph.neighbors(pick)) {
      if (!numbered[u]) ++weight[u];
    }
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_perfect_elimination_order(graph, visit)) throw Error(ErrorCode::NotChordal, "graph is not chordal");
  return visit;
}

bool is_perfect_elimination_order(const Graph& graph, const std::vector<Vertex>& order) {
  const int n = graph.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : graph.neighbors(v)) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!graph.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

TreeDecomposition clique_tree(const Graph& graph) {
  const int n = graph.vertex_count();
  const std::vector<Vertex> peo = chordal_peo(graph);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  std::set<std::vector<Vertex>> candidates;
  for (Vertex v : peo) {
    std::vector<Vertex> clique{v};
    for (Vertex u : graph.neighbors(v)) {
      if (pos[u] > pos[v]) clique.push_back(u);
    }
    std::sort(clique.begin(), clique.end());
    candidates.insert(std::move(clique));
  }
  TreeDecomposition td;
  for (const auto& c : candidates) {
    bool contained = false;
    for (const auto& d : candidates) {
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) td.bags.push_back(c);
  }

  // Prim on intersection sizes; ties go to the lowest node id.
  const int nodes = td.node_count();
  if (nodes == 0) return td;
  auto overlap = [&](int a, int b) {
    std::vector<Vertex> common;
    std::set_intersection(td.bags[a].begin(), td.bags[a].end(), td.bags[b].begin(), td.bags[b].end(),
                          std::back_inserter(common));
    return static_cast<int>(common.size());
  };
  std::vector<std::uint8_t> in_tree(nodes, 0);
  std::vector<int> key(nodes, -1), parent(nodes, -1);
  in_tree[0] = 1;
  for (int t = 1; t < nodes; ++t) {
    key[t] = overlap(0, t);
    parent[t] = 0;
  }
  for (int step = 1; step < nodes; ++step) {
    int pick = -1;
    for (int t = 0; t < nodes; ++t) {
      if (!in_tree[t] && (pick < 0 || key[t] > key[pick])) pick = t;
    }
    in_tree[pick] = 1;
    td.edges.emplace_back(std::min(parent[pick], pick), std::max(parent[pick], pick));
    for (int t = 0; t < nodes; ++t) {
      if (in_tree[t]) continue;
      const int w = overlap(pick, t);
      if (w > key[t]) {
        key[t] = w;
        parent[t] = pick;
      }
    }
  }
  return td;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  const auto adj = [&] {
    try {
      auto a = tree_adjacency(td);
      require_tree(td, a);
      return a;
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidDecomposition, e.what());
    }
  }();
  NiceTreeDecomposition nice;
  auto add = [&](NiceKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    nice.nodes.push_back({kind, v, std::move(bag), std::move(children)});
    return nice.node_count() - 1;
  };
  // Walks from a node holding `from` to a node holding `to`.
  auto bridge = [&](int top, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> bag = from;
    for (Vertex v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      top = add(NiceKind::Forget, v, bag, {top});
    }
    for (Vertex v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      top = add(NiceKind::Introduce, v, bag, {top});
    }
    return top;
  };

  if (td.node_count() == 0) {
    add(NiceKind::Leaf, -1, {}, {});
    nice.root = 0;
    return nice;
  }
  const int root = td.root.value_or(0);
  if (root < 0 || root >= td.node_count()) throw Error(ErrorCode::InvalidDecomposition, "root out of range");
  std::vector<std::vector<Vertex>> bags = td.bags;
  for (auto& b : bags) std::sort(b.begin(), b.end());

  std::function<int(int, int)> build = [&](int t, int from) {
    std::vector<int> tops;
    for (int c : adj[t]) {
      if (c == from) continue;
      tops.push_back(bridge(build(c, t), bags[c], bags[t]));
    }
    if (tops.empty()) return bridge(add(NiceKind::Leaf, -1, {}, {}), {}, bags[t]);
    int acc = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) acc = add(NiceKind::Join, -1, bags[t], {acc, tops[i]});
    return acc;
  };
  nice.root = bridge(build(root, -1), bags[root], {});
  return nice;
}

TreeDecomposition minfill_decomposition(const Graph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (auto [u, v] : graph.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<std::uint8_t> gone(n, 0);
  std::vector<int> eliminated_at(n, -1);
  std::vector<std::vector<Vertex>> bag_of(n);
  std::vector<Vertex> sequence;

  auto live_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n; ++u) {
      if (!gone[u] && u != v && adj[v][u]) out.push_back(u);
    }
    return out;
  };
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      const auto nb = live_neighbors(v);
      long fill = 0;
      for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) fill += adj[nb[a]][nb[b]] ? 0 : 1;
      }
      if (pick < 0 || fill < best_fill) {
        pick = v;
        best_fill = fill;
      }
    }
    const auto nb = live_neighbors(pick);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) adj[nb[a]][nb[b]] = adj[nb[b]][nb[a]] = 1;
    }
    bag_of[pick] = nb;
    bag_of[pick].push_back(pick);
    std::sort(bag_of[pick].begin(), bag_of[pick].end());
    gone[pick] = 1;
    eliminated_at[pick] = step;
    sequence.push_back(pick);
  }

  // Node i holds the bag of the i-th eliminated vertex. Its parent is the
  // bag of its earliest-eliminated remaining neighbour; parentless nodes are
  // chained together.
  TreeDecomposition td;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = sequence[i];
    td.bags.push_back(bag_of[v]);
    int parent = -1;
    for (Vertex u : bag_of[v]) {
      if (u != v && (parent < 0 || eliminated_at[u] < parent)) parent = eliminated_at[u];
    }
    if (parent >= 0) {
      td.edges.emplace_back(i, parent);
    } else {
      if (previous_root >= 0) td.edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

int verify_decomposition(const Graph& graph, const TreeDecomposition& td) {
  const int n = graph.vertex_count();
  const auto adj = tree_adjacency(td);
  require_tree(td, adj);
  const int nodes = td.node_count();
  std::vector<std::vector<int>> holders(n);
  for (int t = 0; t < nodes; ++t) {
    std::vector<Vertex> bag = td.bags[t];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw Error(ErrorCode::InvalidDecomposition, "bag " + std::to_string(t) + " repeats a vertex");
    }
    for (Vertex v : bag) {
      if (v < 0 || v >= n) throw Error(ErrorCode::InvalidDecomposition, "bag vertex out of range");
      holders[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) throw Error(ErrorCode::MissingVertex, "vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : graph.edges()) {
    bool covered = false;
    for (int t : holders[u]) {
      const auto& bag = td.bags[t];
      if (std::find(bag.begin(), bag.end(), v) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw Error(ErrorCode::MissingEdge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag");
    }
  }
  std::vector<std::uint8_t> holds(nodes, 0), seen(nodes, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(holds.begin(), holds.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (int t : holders[v]) holds[t] = 1;
    std::vector<int> stack{holders[v].front()};
    seen[stack[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int u : adj[t]) {
        if (holds[u] && !seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != holders[v].size()) {
      throw Error(ErrorCode::DisconnectedOccurrence,
                  "bags holding vertex " + std::to_string(v) + " do not form a subtree");
    }
  }
  return max_bag_width(td.bags);
}

int verify_nice(const Graph& graph, const NiceTreeDecomposition& nice) {
  auto fail = [](int t, const std::string& why) {
    return Error(ErrorCode::InvalidDecomposition, "nice node " + std::to_string(t) + ": " + why);
  };
  if (nice.node_count() == 0 || nice.root != nice.node_count() - 1) throw fail(nice.root, "root must be the last node");
  if (!nice.nodes[nice.root].bag.empty()) throw fail(nice.root, "root bag must be empty");
  for (int t = 0; t < nice.node_count(); ++t) {
    const NiceNode& node = nice.nodes[t];
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) throw fail(t, "bag not sorted");
    for (int c : node.children) {
      if (c < 0 || c >= t) throw fail(t, "child index must precede its parent");
    }
    auto with = [](std::vector<Vertex> bag, Vertex v) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      return bag;
    };
    switch (node.kind) {
      case NiceKind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) throw fail(t, "leaf must be childless with an empty bag");
        break;
      case NiceKind::Introduce:
        if (node.children.size() != 1 || std::binary_search(nice.nodes[node.children[0]].bag.begin(),
                                                            nice.nodes[node.children[0]].bag.end(), node.vertex) ||
            with(nice.nodes[node.children[0]].bag, node.vertex) != node.bag) {
          throw fail(t, "introduce rule violated");
        }
        break;
      case NiceKind::Forget:
        if (node.children.size() != 1 || std::binary_search(node.bag.begin(), node.bag.end(), node.vertex) ||
            with(node.bag, node.vertex) != nice.nodes[node.children[0]].bag) {
          throw fail(t, "forget rule violated");
        }
        break;
      case NiceKind::Join:
        if (node.children.size() != 2 || nice.nodes[node.children[0]].bag != node.bag ||
            nice.nodes[node.children[1]].bag != node.bag) {
          throw fail(t, "join rule violated");
        }
        break;
    }
  }
  std::vector<int> parents(nice.node_count(), 0);
  for (const auto& node : nice.nodes) {
    for (int c : node.children) ++parents[c];
  }
  for (int t = 0; t < nice.node_count(); ++t) {
    if (parents[t] != (t == nice.root ? 0 : 1)) throw fail(t, "every non-root node needs exactly one parent");
  }
  return verify_decomposition(graph, nice.as_tree_decomposition());
}

std::vector<Vertex> subtree_vertices(const NiceTreeDecomposition& nice, int t) {
  std::set<Vertex> out;
  std::vector<int> stack{t};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.insert(nice.nodes[u].bag.begin(), nice.nodes[u].bag.end());
    for (int c : nice.nodes[u].children) stack.push_back(c);
  }
  return {out.begin(), out.end()};
}

}  // namespace fkdiv
