#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "fkdiv/cocomp.hpp"
#include "fkdiv/io.hpp"
#include "fkdiv/profile.hpp"
#include "fkdiv/treedp.hpp"

namespace fkdiv {

enum class Algorithm { Auto, BruteForce, Cocomparability, Biconvex, Chordal, Treewidth };

/// CLI names: auto, bruteforce, cocomp, biconvex, chordal, treewidth.
std::string_view algorithm_name(Algorithm algorithm);
/// Throws InvalidArgument for unknown names.
Algorithm parse_algorithm(std::string_view name);

struct ProfileRunOptions {
  ArithmeticPtr arithmetic;
  bool track_witnesses = true;
  bool prune = false;
  int threads = 1;
  std::function<void(const LayerTable&)> layer_observer;
  std::function<void(const NodeTable&)> node_observer;
};

/// Runs one of the profile-set dynamic programs. Biconvex needs orderings in
/// the file; treewidth uses the file's decomposition or a min-fill one.
/// Throws InvalidArgument for Auto and BruteForce.
ProfileSet run_profile_solver(Algorithm algorithm, const InstanceFile& file, const ProfileRunOptions& options = {});

/// The decomposition the treewidth solver will use for this file.
TreeDecomposition treewidth_decomposition(const InstanceFile& file);

}  // namespace fkdiv
