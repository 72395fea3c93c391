#include "fkdiv/cocomp.hpp"

#include <algorithm>

#include "fkdiv/error.hpp"
#include "fkdiv/parallel.hpp"

namespace fkdiv {

std::uint64_t LayerTable::pack(std::span<const int> indices) const {
  std::uint64_t key = 0;
  for (int i : indices) key = key * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>(i);
  return key;
}

std::vector<int> LayerTable::unpack(std::uint64_t key) const {
  std::vector<int> out(k_);
  for (int l = k_ - 1; l >= 0; --l) {
    out[l] = static_cast<int>(key % static_cast<std::uint64_t>(n_ + 1));
    key /= static_cast<std::uint64_t>(n_ + 1);
  }
  return out;
}

const ProfileSet* LayerTable::cell(std::span<const int> indices) const {
  auto it = cells_.find(pack(indices));
  return it == cells_.end() ? nullptr : it->second.get();
}

std::vector<std::pair<std::vector<int>, const ProfileSet*>> LayerTable::cells() const {
  std::vector<std::pair<std::vector<int>, const ProfileSet*>> out;
  out.reserve(cells_.size());
  for (const auto& [key, set] : cells_) out.emplace_back(unpack(key), set.get());
  return out;
}

ProfileSet LayerTable::all_profiles() const {
  const auto& first = *cells_.begin()->second;
  ProfileSetBuilder builder(first.arithmetic_ptr(), first.tracks_witnesses());
  for (const auto& [key, set] : cells_) builder.insert_all(*set);
  return builder.build();
}

LayerTable initial_layer(int n, int k, ArithmeticPtr arithmetic, bool track_witnesses) {
  std::uint64_t space = 1;
  for (int l = 0; l < k; ++l) {
    if (space > UINT64_MAX / static_cast<std::uint64_t>(n + 1)) {
      throw Error(ErrorCode::ProfileSpaceOverflow, "(n+1)^k cell keys do not fit 64 bits");
    }
    space *= static_cast<std::uint64_t>(n + 1);
  }
  LayerTable t(n, k, 0);
  t.cells_[0] = std::make_shared<const ProfileSet>(ProfileSet::zero(arithmetic, track_witnesses, n));
  return t;
}

LayerTable layer_step(const LayerTable& prev, int j, const Instance& instance, const Orientation& orientation,
                      const CocompOptions& options) {
  if (prev.layer() != j - 1) throw Error(ErrorCode::InvalidArgument, "layer_step expects layer j-1");
  const int n = instance.vertex_count();
  const int k = instance.agents();
  const Vertex vj = orientation.order()[j - 1];
  const auto& position = orientation.position();

  // Admissible predecessor positions j' for v_j: 0 and every in-neighbour.
  std::vector<std::uint8_t> admissible(n + 1, 0);
  admissible[0] = 1;
  for (Vertex u : orientation.in_neighbors(vj)) admissible[position[u] + 1] = 1;

  struct Contribution {
    std::uint64_t target;
    int predecessor;
    int agent;
    const ProfileSet* source;
  };
  std::vector<Contribution> contributions;
  for (const auto& [key, set] : prev.cells_) {
    const std::vector<int> idx = prev.unpack(key);
    for (int s = 0; s < k; ++s) {
      if (!admissible[idx[s]]) continue;
      std::vector<int> target = idx;
      target[s] = j;
      contributions.push_back({prev.pack(target), idx[s], s, set.get()});
    }
  }
  std::sort(contributions.begin(), contributions.end(), [](const Contribution& a, const Contribution& b) {
    return a.target != b.target ? a.target < b.target : a.predecessor < b.predecessor;
  });
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < contributions.size(); ++i) {
    if (i == 0 || contributions[i].target != contributions[i - 1].target) group_start.push_back(i);
  }
  group_start.push_back(contributions.size());

  const std::size_t groups = group_start.size() - 1;
  std::vector<std::shared_ptr<const ProfileSet>> built(groups);
  const ProfileSet& any = *prev.cells_.begin()->second;
  parallel_for(groups, options.threads, [&](std::size_t g) {
    ProfileSetBuilder builder(any.arithmetic_ptr(), any.tracks_witnesses());
    const auto& arith = any.arithmetic();
    for (std::size_t c = group_start[g]; c < group_start[g + 1]; ++c) {
      const Contribution& con = contributions[c];
      const Profit gain = instance.profit(con.agent, vj);
      for (std::size_t i = 0; i < con.source->size(); ++i) {
        builder.insert(arith.shift(con.source->key(i), con.agent, gain), [&] {
          PartialColoring w = con.source->witness(i);
          w.assign(vj, con.agent + 1);
          return w;
        });
      }
    }
    ProfileSet set = builder.build();
    if (options.prune) set = prune_dominated(set);
    built[g] = std::make_shared<const ProfileSet>(std::move(set));
  });

  LayerTable next = prev;
  next.layer_ = j;
  for (std::size_t g = 0; g < groups; ++g) next.cells_.emplace(contributions[group_start[g]].target, built[g]);
  return next;
}

Orientation cocomparability_orientation(const Graph& graph) {
  try {
    return transitive_orientation(complement(graph));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotComparability) throw;
    throw Error(ErrorCode::NotCocomparability, "complement of the conflict graph has no transitive orientation");
  }
}

ProfileSet solve_cocomparability(const Instance& instance, const CocompOptions& options) {
  return solve_cocomparability(instance, cocomparability_orientation(instance.graph()), options);
}

ProfileSet solve_cocomparability(const Instance& instance, const Orientation& orientation,
                                 const CocompOptions& options) {
  const int n = instance.vertex_count();
  const int k = instance.agents();
  if (orientation.base() != complement(instance.graph())) {
    throw Error(ErrorCode::StructureMismatch, "orientation is not on the complement of the conflict graph");
  }
  ArithmeticPtr arith = options.arithmetic ? options.arithmetic : ProfitArithmetic::for_instance(instance);
  LayerTable table = initial_layer(n, k, arith, options.track_witnesses);
  if (options.observer) options.observer(table);
  for (int j = 1; j <= n; ++j) {
    table = layer_step(table, j, instance, orientation, options);
    if (options.observer) options.observer(table);
  }
  ProfileSet result = table.all_profiles();
  return options.prune ? prune_dominated(result) : result;
}

}  // namespace fkdiv
