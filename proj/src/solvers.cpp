#include "fkdiv/solvers.hpp"

#include <string>

#include "fkdiv/biconvex_solver.hpp"
#include "fkdiv/error.hpp"

namespace fkdiv {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Auto: return "auto";
    case Algorithm::BruteForce: return "bruteforce";
    case Algorithm::Cocomparability: return "cocomp";
    case Algorithm::Biconvex: return "biconvex";
    case Algorithm::Chordal: return "chordal";
    case Algorithm::Treewidth: return "treewidth";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Auto, Algorithm::BruteForce, Algorithm::Cocomparability, Algorithm::Biconvex,
                      Algorithm::Chordal, Algorithm::Treewidth}) {
    if (algorithm_name(a) == name) return a;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

TreeDecomposition treewidth_decomposition(const InstanceFile& file) {
  return file.decomposition ? *file.decomposition : minfill_decomposition(file.instance.graph());
}

ProfileSet run_profile_solver(Algorithm algorithm, const InstanceFile& file, const ProfileRunOptions& options) {
  const Instance& instance = file.instance;
  switch (algorithm) {
    case Algorithm::Cocomparability: {
      CocompOptions o;
      o.arithmetic = options.arithmetic;
      o.track_witnesses = options.track_witnesses;
      o.prune = options.prune;
      o.threads = options.threads;
      o.observer = options.layer_observer;
      return solve_cocomparability(instance, o);
    }
    case Algorithm::Biconvex: {
      if (!file.has_biconvex_ordering()) {
        throw Error(ErrorCode::NoApplicableAlgorithm, "biconvex solver needs 'o A' and 'o B' orderings");
      }
      BiconvexOptions o;
      o.arithmetic = options.arithmetic;
      o.track_witnesses = options.track_witnesses;
      o.prune = options.prune;
      o.threads = options.threads;
      return solve_biconvex(instance, *file.order_a, *file.order_b, o);
    }
    case Algorithm::Chordal:
    case Algorithm::Treewidth: {
      TreeDpOptions o;
      o.arithmetic = options.arithmetic;
      o.track_witnesses = options.track_witnesses;
      o.prune = options.prune;
      o.threads = options.threads;
      o.observer = options.node_observer;
      return algorithm == Algorithm::Chordal ? solve_chordal(instance, o)
                                             : solve_treewidth(instance, treewidth_decomposition(file), o);
    }
    case Algorithm::Auto:
    case Algorithm::BruteForce:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "not a profile-set dynamic program");
}

}  // namespace fkdiv
