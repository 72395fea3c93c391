#include "fkdiv/biconvex_solver.hpp"

#include <algorithm>

#include "fkdiv/cocomp.hpp"
#include "fkdiv/error.hpp"
#include "fkdiv/parallel.hpp"

namespace fkdiv {

std::vector<Guess> enumerate_guesses(const BiconvexStructure& structure, int k) {
  const int s = static_cast<int>(structure.side_a.size());
  std::vector<int> upper_choices{0}, lower_choices;
  for (int p = 1; p <= structure.left_boundary; ++p) upper_choices.push_back(p);
  for (int p = structure.right_boundary + 2; p <= s; ++p) lower_choices.push_back(p);
  lower_choices.push_back(s + 1);

  std::vector<Guess> out;
  std::vector<int> slots(2 * k, 0);
  auto real = [&](int p) { return p >= 1 && p <= s; };
  auto go = [&](auto&& self, int i) -> void {
    if (i == 2 * k) {
      out.push_back({{slots.begin(), slots.begin() + k}, {slots.begin() + k, slots.end()}});
      return;
    }
    for (int p : (i < k ? upper_choices : lower_choices)) {
      if (real(p) && std::find(slots.begin(), slots.begin() + i, p) != slots.begin() + i) continue;
      slots[i] = p;
      self(self, i + 1);
    }
  };
  go(go, 0);
  return out;
}

ProfileSet lift_witnesses(const ProfileSet& set, std::span<const Vertex> sub_to_full, int full_n) {
  if (!set.tracks_witnesses()) return set;
  ProfileSetBuilder builder(set.arithmetic_ptr(), true);
  for (std::size_t i = 0; i < set.size(); ++i) {
    builder.insert(set.key(i), [&] { return set.witness(i).lifted(sub_to_full, full_n); });
  }
  return builder.build();
}

namespace {

bool covers(const Graph& graph, const BiconvexStructure& s) {
  std::vector<Vertex> all = s.side_a;
  all.insert(all.end(), s.side_b.begin(), s.side_b.end());
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != graph.vertex_count()) return false;
  for (int i = 0; i < graph.vertex_count(); ++i) {
    if (all[i] != i) return false;
  }
  return true;
}

}  // namespace

ProfileSet solve_biconvex_connected(const Instance& instance, const BiconvexStructure& structure,
                                    const BiconvexOptions& options) {
  const Graph& graph = instance.graph();
  const int n = instance.vertex_count();
  const int k = instance.agents();
  if (connected_components(graph).size() > 1) throw Error(ErrorCode::NotConnected, "biconvex solve needs a connected graph");
  if (!covers(graph, structure)) throw Error(ErrorCode::StructureMismatch, "structure does not partition the vertices");

  ArithmeticPtr arith = options.arithmetic ? options.arithmetic : ProfitArithmetic::for_instance(instance);
  const bool track = options.track_witnesses;
  const auto& side_a = structure.side_a;
  const int s = static_cast<int>(side_a.size());
  const auto& middle = structure.middle_vertices;
  const Orientation orientation = cocomparability_orientation(structure.middle_graph);
  const std::vector<Guess> guesses = enumerate_guesses(structure, k);
  auto real = [&](int p) { return p >= 1 && p <= s; };

  std::vector<ProfileSet> per_guess(guesses.size());
  parallel_for(guesses.size(), options.threads, [&](std::size_t g) {
    const Guess& guess = guesses[g];

    // forbidden[j][v]: v may not join class j under this guess.
    std::vector<std::vector<std::uint8_t>> forbidden(k, std::vector<std::uint8_t>(n, 0));
    for (int j = 0; j < k; ++j) {
      for (int p : {guess.upper[j], guess.lower[j]}) {
        if (!real(p)) continue;
        for (Vertex b : graph.neighbors(side_a[p - 1])) forbidden[j][b] = 1;
      }
    }
    std::vector<std::vector<Profit>> profits(k, std::vector<Profit>(middle.size(), 0));
    for (int j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < middle.size(); ++i) {
        profits[j][i] = forbidden[j][middle[i]] ? 0 : instance.profit(j, middle[i]);
      }
    }
    CocompOptions sub_options;
    sub_options.track_witnesses = track;
    sub_options.arithmetic = arith;
    sub_options.prune = options.prune;
    const ProfileSet inner =
        solve_cocomparability(Instance(structure.middle_graph, std::move(profits)), orientation, sub_options);

    // Lift to the full graph, drop zero-profit forbidden members, then place
    // the guessed vertices one at a time.
    ProfileSetBuilder placed(arith, track);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      ProfileKey key = inner.key(i);
      for (int j = 0; j < k; ++j) {
        for (int p : {guess.upper[j], guess.lower[j]}) {
          if (real(p)) key = arith->shift(key, j, instance.profit(j, side_a[p - 1]));
        }
      }
      placed.insert(key, [&] {
        PartialColoring w = inner.witness(i).lifted(middle, n);
        for (Vertex v = 0; v < n; ++v) {
          if (w.color(v) && forbidden[w.color(v) - 1][v]) w.assign(v, 0);
        }
        for (int j = 0; j < k; ++j) {
          for (int p : {guess.upper[j], guess.lower[j]}) {
            if (real(p)) w.assign(side_a[p - 1], j + 1);
          }
        }
        return w;
      });
    }
    ProfileSet current = placed.build();

    auto offer = [&](int p, auto may_join) {
      const Vertex v = side_a[p - 1];
      ProfileSetBuilder next(arith, track);
      next.insert_all(current);
      for (int j = 0; j < k; ++j) {
        if (!may_join(j)) continue;
        const Profit gain = instance.profit(j, v);
        for (std::size_t i = 0; i < current.size(); ++i) {
          next.insert(arith->shift(current.key(i), j, gain), [&] {
            PartialColoring w = current.witness(i);
            w.assign(v, j + 1);
            return w;
          });
        }
      }
      current = next.build();
      if (options.prune) current = prune_dominated(current);
    };
    auto is_guessed = [&](int p) {
      for (int j = 0; j < k; ++j) {
        if (guess.upper[j] == p || guess.lower[j] == p) return true;
      }
      return false;
    };
    for (int p = 1; p <= structure.left_boundary; ++p) {
      if (is_guessed(p)) continue;
      offer(p, [&](int j) { return real(guess.upper[j]) && p < guess.upper[j]; });
    }
    for (int p = s; p >= structure.right_boundary + 2; --p) {
      if (is_guessed(p)) continue;
      offer(p, [&](int j) { return real(guess.lower[j]) && p > guess.lower[j]; });
    }
    per_guess[g] = std::move(current);
  });

  ProfileSetBuilder all(arith, track);
  for (const auto& set : per_guess) all.insert_all(set);
  ProfileSet result = all.build();
  return options.prune ? prune_dominated(result) : result;
}

ProfileSet solve_biconvex(const Instance& instance, std::span<const Vertex> order_a, std::span<const Vertex> order_b,
                          const BiconvexOptions& options) {
  const int n = instance.vertex_count();
  BiconvexOptions sub = options;
  if (!sub.arithmetic) sub.arithmetic = ProfitArithmetic::for_instance(instance);
  if (n == 0) return ProfileSet::zero(sub.arithmetic, options.track_witnesses, 0);
  std::vector<ProfileSet> parts;
  for (const auto& comp : component_structures(instance.graph(), order_a, order_b)) {
    const Instance part = induced_instance(instance, comp.vertices);
    parts.push_back(lift_witnesses(solve_biconvex_connected(part, comp.structure, sub), comp.vertices, n));
  }
  ProfileSet merged = merge_components(parts);
  return options.prune ? prune_dominated(merged) : merged;
}

}  // namespace fkdiv
