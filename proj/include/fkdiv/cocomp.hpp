#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/orientation.hpp"
#include "fkdiv/profile.hpp"

namespace fkdiv {

struct CocompOptions;

/// Cells P_j(i_1..i_k) of the layered program. Coordinate i_l is the position
/// (1-based, in the topological order) of the last vertex of class l, or 0 if
/// the class is still empty. Absent cells are empty.
///
/// A cell never changes once created, so layer j shares every cell of layer
/// j-1 and only adds cells that mention j.
class LayerTable {
 public:
  LayerTable(int n, int k, int layer) : n_(n), k_(k), layer_(layer) {}

  int layer() const { return layer_; }
  int agents() const { return k_; }
  std::size_t cell_count() const { return cells_.size(); }

  /// nullptr for an empty cell.
  const ProfileSet* cell(std::span<const int> indices) const;
  /// All non-empty cells in lexicographic key order.
  std::vector<std::pair<std::vector<int>, const ProfileSet*>> cells() const;
  /// Union of every cell.
  ProfileSet all_profiles() const;

  std::uint64_t pack(std::span<const int> indices) const;
  std::vector<int> unpack(std::uint64_t key) const;

 private:
  friend LayerTable initial_layer(int, int, ArithmeticPtr, bool);
  friend LayerTable layer_step(const LayerTable&, int, const Instance&, const Orientation&,
                               const CocompOptions&);

  int n_;
  int k_;
  int layer_;
  std::map<std::uint64_t, std::shared_ptr<const ProfileSet>> cells_;
};

struct CocompOptions {
  bool track_witnesses = true;
  /// Drops dominated profiles inside each cell. Changes the profile set.
  bool prune = false;
  int threads = 1;
  /// Defaults to exact arithmetic for the instance.
  ArithmeticPtr arithmetic;
  /// Called with layer 0 and after every layer step.
  std::function<void(const LayerTable&)> observer;
};

/// P_0(0,...,0) = {0}.
LayerTable initial_layer(int n, int k, ArithmeticPtr arithmetic, bool track_witnesses);

/// Layer j from layer j-1: cells where j appears twice stay empty, cells
/// without j are inherited, and a cell with j at coordinate s collects the
/// cells with coordinate s replaced by 0 or an in-neighbour position of v_j,
/// shifted by the profit of v_j for agent s.
LayerTable layer_step(const LayerTable& prev, int j, const Instance& instance, const Orientation& orientation,
                      const CocompOptions& options = {});

/// All profiles of partial k-colorings of a cocomparability conflict graph.
/// Throws NotCocomparability when the complement has no transitive orientation.
ProfileSet solve_cocomparability(const Instance& instance, const CocompOptions& options = {});

/// Same, with a caller-chosen transitive orientation of the complement.
ProfileSet solve_cocomparability(const Instance& instance, const Orientation& orientation,
                                 const CocompOptions& options = {});

/// Transitive orientation of the complement, or NotCocomparability.
Orientation cocomparability_orientation(const Graph& graph);

}  // namespace fkdiv
