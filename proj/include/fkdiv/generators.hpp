#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/io.hpp"

namespace fkdiv {

/// Uniform integer in [lo, hi] by rejection, identical on every platform.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Seeded instance of a named family:
///   edgeless  identical profit rows (the Partition setting)
///   interval  intersection graph of random intervals
///   chordal   vertices added one by one with a clique neighbourhood
///   biconvex  random consecutive neighbourhoods, orderings emitted
///   random    G(n, 1/2)
/// Profits are uniform in 0..max_profit. Throws UnknownFamily or
/// ParameterOutOfRange.
InstanceFile gen_family(std::string_view family, int n, int k, Profit max_profit, std::uint64_t seed);

const std::vector<std::string_view>& family_names();

struct CliqueReductionParams {
  int n = 0;
  int m = 0;
  int ell = 0;
  int k = 0;
  Profit n1 = 0;
  Profit n2 = 0;
  Profit q = 0;
};

/// Throws ParameterOutOfRange unless 2 <= ell < n and k >= 2.
CliqueReductionParams clique_reduction_params(const Graph& source, int ell, int k);

struct CliqueReduction {
  InstanceFile file;
  CliqueReductionParams params;
};

/// Bipartite instance with A = V(G) + {x_1} and B = E(G) + {x_2..x_k}; every
/// source vertex is joined to the edges it lies on and to x_2..x_k. Source
/// vertices are 0..n-1, then x_1, then the source edges in sorted order, then
/// x_2..x_k. Satisfaction q is reachable iff G has a clique of size ell.
CliqueReduction gen_clique_reduction(const Graph& source, int ell, int k);

}  // namespace fkdiv
