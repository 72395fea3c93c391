#include "fkdiv/treedp.hpp"

#include <algorithm>

#include "fkdiv/error.hpp"
#include "fkdiv/parallel.hpp"

namespace fkdiv {

std::vector<BagColoring> enumerate_bag_colorings(const Graph& graph, std::span<const Vertex> bag, int k) {
  std::vector<Vertex> sorted(bag.begin(), bag.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<BagColoring> out;
  std::vector<int> labels(sorted.size(), 0);
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == sorted.size()) {
      out.push_back({sorted, labels});
      return;
    }
    for (int c = 0; c <= k; ++c) {
      bool ok = true;
      for (std::size_t h = 0; h < i && c > 0; ++h) {
        if (labels[h] == c && graph.adjacent(sorted[h], sorted[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      labels[i] = c;
      self(self, i + 1);
    }
    labels[i] = 0;
  };
  go(go, 0);
  return out;
}

std::uint64_t bag_coloring_key(std::span<const int> labels, int k) {
  std::uint64_t key = 0;
  const auto radix = static_cast<std::uint64_t>(k + 1);
  for (int c : labels) {
    if (key > (UINT64_MAX - static_cast<std::uint64_t>(c)) / radix) {
      throw Error(ErrorCode::ProfileSpaceOverflow, "bag coloring key does not fit 64 bits");
    }
    key = key * radix + static_cast<std::uint64_t>(c);
  }
  return key;
}

ProfitProfile bag_profile(const Instance& instance, const BagColoring& coloring) {
  ProfitProfile p(instance.agents(), 0);
  for (std::size_t i = 0; i < coloring.bag.size(); ++i) {
    if (coloring.labels[i]) p[coloring.labels[i] - 1] += instance.profit(coloring.labels[i] - 1, coloring.bag[i]);
  }
  return p;
}

std::ptrdiff_t NodeTable::index_of(std::span<const int> labels, int k) const {
  const std::uint64_t key = bag_coloring_key(labels, k);
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return -1;
  return it - keys.begin();
}

const ProfileSet* NodeTable::find(std::span<const int> labels, int k) const {
  const std::ptrdiff_t i = index_of(labels, k);
  return i < 0 ? nullptr : sets[static_cast<std::size_t>(i)].get();
}

namespace {

// Child labels for a parent coloring: drop (introduce) or insert (forget) the
// vertex at its sorted position in the child bag.
std::vector<int> without(const BagColoring& c, Vertex v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.bag.size(); ++i) {
    if (c.bag[i] != v) out.push_back(c.labels[i]);
  }
  return out;
}

std::vector<int> with(const BagColoring& c, Vertex v, int label) {
  std::vector<int> out;
  bool placed = false;
  for (std::size_t i = 0; i < c.bag.size(); ++i) {
    if (!placed && v < c.bag[i]) {
      out.push_back(label);
      placed = true;
    }
    out.push_back(c.labels[i]);
  }
  if (!placed) out.push_back(label);
  return out;
}

}  // namespace

ProfileSet solve_nice(const Instance& instance, const NiceTreeDecomposition& nice, ForgetRule rule,
                      const TreeDpOptions& options) {
  const Graph& graph = instance.graph();
  const int n = instance.vertex_count();
  const int k = instance.agents();
  ArithmeticPtr arith = options.arithmetic ? options.arithmetic : ProfitArithmetic::for_instance(instance);
  const bool track = options.track_witnesses;

  std::vector<std::unique_ptr<NodeTable>> tables(nice.node_count());
  for (int t = 0; t < nice.node_count(); ++t) {
    const NiceNode& node = nice.nodes[t];
    auto table = std::make_unique<NodeTable>();
    table->node = t;
    table->bag = node.bag;
    table->colorings = enumerate_bag_colorings(graph, node.bag, k);
    for (const auto& c : table->colorings) table->keys.push_back(bag_coloring_key(c.labels, k));
    table->sets.resize(table->colorings.size());

    parallel_for(table->colorings.size(), options.threads, [&](std::size_t i) {
      const BagColoring& c = table->colorings[i];
      std::shared_ptr<const ProfileSet> result;
      switch (node.kind) {
        case NiceKind::Leaf:
          result = std::make_shared<const ProfileSet>(ProfileSet::zero(arith, track, n));
          break;
        case NiceKind::Introduce: {
          const NodeTable& child = *tables[node.children[0]];
          const std::ptrdiff_t at = child.index_of(without(c, node.vertex), k);
          const auto pos = std::lower_bound(c.bag.begin(), c.bag.end(), node.vertex) - c.bag.begin();
          const int label = c.labels[pos];
          if (at < 0) {
            result = std::make_shared<const ProfileSet>(arith, track);
          } else if (!track || label == 0) {
            result = child.sets[static_cast<std::size_t>(at)];
          } else {
            const ProfileSet* src = child.sets[static_cast<std::size_t>(at)].get();
            ProfileSetBuilder builder(arith, track);
            for (std::size_t e = 0; e < src->size(); ++e) {
              builder.insert(src->key(e), [&] {
                PartialColoring w = src->witness(e);
                w.assign(node.vertex, label);
                return w;
              });
            }
            result = std::make_shared<const ProfileSet>(builder.build());
          }
          break;
        }
        case NiceKind::Forget: {
          const NodeTable& child = *tables[node.children[0]];
          ProfileSetBuilder builder(arith, track);
          for (int j = 0; j <= k; ++j) {
            if (j > 0) {
              bool allowed = true;
              for (std::size_t h = 0; h < c.bag.size(); ++h) {
                if (c.labels[h] != j) continue;
                if (rule == ForgetRule::CliqueBags || graph.adjacent(c.bag[h], node.vertex)) allowed = false;
              }
              if (!allowed) continue;
            }
            const ProfileSet* src = child.find(with(c, node.vertex, j), k);
            if (!src) continue;
            const Profit gain = j > 0 ? instance.profit(j - 1, node.vertex) : 0;
            for (std::size_t e = 0; e < src->size(); ++e) {
              builder.insert(j > 0 ? arith->shift(src->key(e), j - 1, gain) : src->key(e),
                             [&] { return src->witness(e); });
            }
          }
          ProfileSet set = builder.build();
          if (options.prune) set = prune_dominated(set);
          result = std::make_shared<const ProfileSet>(std::move(set));
          break;
        }
        case NiceKind::Join: {
          const ProfileSet* left = tables[node.children[0]]->find(c.labels, k);
          const ProfileSet* right = tables[node.children[1]]->find(c.labels, k);
          ProfileSet set = left && right ? minkowski_merge(*left, *right) : ProfileSet(arith, track);
          if (options.prune) set = prune_dominated(set);
          result = std::make_shared<const ProfileSet>(std::move(set));
          break;
        }
      }
      table->sets[i] = std::move(result);
    });

    if (options.observer) options.observer(*table);
    for (int c : node.children) tables[c].reset();
    tables[t] = std::move(table);
  }
  const NodeTable& root = *tables[nice.root];
  return *root.sets.front();
}

ProfileSet solve_chordal(const Instance& instance, const TreeDpOptions& options) {
  return solve_nice(instance, make_nice(clique_tree(instance.graph())), ForgetRule::CliqueBags, options);
}

ProfileSet solve_treewidth(const Instance& instance, const TreeDecomposition& td, const TreeDpOptions& options) {
  try {
    verify_decomposition(instance.graph(), td);
  } catch (const Error& e) {
    if (!is_decomposition_error(e.code())) throw;
    throw Error(ErrorCode::InvalidDecomposition, e.what());
  }
  return solve_nice(instance, make_nice(td), ForgetRule::General, options);
}

}  // namespace fkdiv
