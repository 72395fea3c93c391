#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/rounding.hpp"

namespace fkdiv {

// Agents are indexed 0..k-1 everywhere in the library. In a PartialColoring
// the class of agent j is j + 1 and 0 means "uncolored".

/// k-tuple of per-agent profits.
using ProfitProfile = std::vector<Profit>;

/// A profile packed as a big-endian mixed-radix integer, so that numeric
/// order of keys equals lexicographic order of profiles.
using ProfileKey = std::uint64_t;

Profit satisfaction(const ProfitProfile& profile);

/// profile + e_agent(amount).
ProfitProfile shift(ProfitProfile profile, int agent, Profit amount);

/// k pairwise disjoint classes stored as one class label per vertex.
class PartialColoring {
 public:
  PartialColoring() = default;
  PartialColoring(int n, int k);
  /// labels[v] in 0..k. Throws InvalidArgument on out-of-range labels.
  static PartialColoring from_labels(std::span<const int> labels, int k);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int agents() const { return k_; }
  int color(Vertex v) const { return labels_[v]; }
  void assign(Vertex v, int color) { labels_[v] = static_cast<std::uint8_t>(color); }

  /// classes()[j] holds the sorted members of agent j's class.
  std::vector<std::vector<Vertex>> classes() const;
  std::vector<int> labels() const { return {labels_.begin(), labels_.end()}; }
  ProfitProfile profile(const Instance& instance) const;
  /// Every class independent in `graph`.
  bool feasible(const Graph& graph) const;

  /// Union of two colorings of the same vertex set; a vertex colored in both
  /// must carry the same label. Throws InvalidArgument on a clash.
  PartialColoring merged_with(const PartialColoring& other) const;
  /// Lifts a coloring of an induced subgraph; vertex i maps to sub_to_full[i].
  PartialColoring lifted(std::span<const Vertex> sub_to_full, int full_n) const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<std::uint8_t> labels_;
  int k_ = 0;
};

/// Packing of profiles into keys plus the "add profit to one agent" and "add
/// two profiles" operations. In exact mode coordinates are profits 0..Q. In
/// rounded mode a coordinate is 0 for profit zero or t+1 for the grid endpoint
/// (1+eps)^(t/n), and every addition is rounded down onto the grid.
///
/// Solvers only touch profiles through shift() and add(); decode() and
/// coordinate() are counted so tests can confirm a run never branched on
/// profit magnitudes.
class ProfitArithmetic {
 public:
  static std::shared_ptr<const ProfitArithmetic> exact(int k, Profit q_bound);
  static std::shared_ptr<const ProfitArithmetic> for_instance(const Instance& instance);
  static std::shared_ptr<const ProfitArithmetic> rounded(RoundingGrid grid);

  bool is_exact() const { return !grid_.has_value(); }
  int agents() const { return k_; }
  std::uint64_t radix() const { return radix_; }
  /// radix^k, the size of the key space.
  std::uint64_t key_space() const { return key_space_; }
  const RoundingGrid& grid() const { return *grid_; }

  ProfileKey zero() const { return 0; }
  ProfileKey shift(ProfileKey key, int agent, Profit amount) const;
  ProfileKey add(ProfileKey a, ProfileKey b) const;

  ProfileKey encode(const ProfitProfile& coordinates) const;
  ProfitProfile decode(ProfileKey key) const;
  Profit coordinate(ProfileKey key, int agent) const;
  /// Profit value a coordinate stands for (the grid endpoint in rounded mode).
  long double represented_value(ProfileKey key, int agent) const;

  std::uint64_t magnitude_reads() const { return reads_.load(); }

 private:
  ProfitArithmetic(int k, std::uint64_t radix, std::optional<RoundingGrid> grid);
  Profit raw(ProfileKey key, int agent) const { return static_cast<Profit>((key / weight_[agent]) % radix_); }
  Profit rounded_sum(Profit code, long double addend, bool addend_integral) const;

  int k_;
  std::uint64_t radix_;
  std::uint64_t key_space_;
  std::vector<std::uint64_t> weight_;
  std::optional<RoundingGrid> grid_;
  mutable std::atomic<std::uint64_t> reads_{0};
};

using ArithmeticPtr = std::shared_ptr<const ProfitArithmetic>;

/// Set of distinct profiles, sorted by key, with an optional representative
/// partial coloring per profile.
class ProfileSet {
 public:
  ProfileSet() = default;
  ProfileSet(ArithmeticPtr arithmetic, bool track_witnesses);

  /// {(0,...,0)}, witnessed by the empty coloring on n vertices.
  static ProfileSet zero(ArithmeticPtr arithmetic, bool track_witnesses, int n);

  const ProfitArithmetic& arithmetic() const { return *arithmetic_; }
  const ArithmeticPtr& arithmetic_ptr() const { return arithmetic_; }
  bool tracks_witnesses() const { return track_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  std::span<const ProfileKey> keys() const { return keys_; }
  ProfileKey key(std::size_t i) const { return keys_[i]; }
  ProfitProfile profile(std::size_t i) const { return arithmetic_->decode(keys_[i]); }
  const PartialColoring& witness(std::size_t i) const { return witnesses_[i]; }
  std::optional<std::size_t> find(ProfileKey key) const;
  bool contains(const ProfitProfile& profile) const;
  /// All profiles in lexicographic order.
  std::vector<ProfitProfile> profiles() const;

  /// Same profiles, witnesses ignored.
  friend bool same_profiles(const ProfileSet& a, const ProfileSet& b) { return a.keys_ == b.keys_; }

 private:
  friend class ProfileSetBuilder;

  ArithmeticPtr arithmetic_;
  bool track_ = false;
  std::vector<ProfileKey> keys_;
  std::vector<PartialColoring> witnesses_;
};

/// Accumulates profiles, keeping the first witness seen for each. Key spaces
/// up to 2^24 are deduplicated with a reusable bitmap, larger ones with a
/// hash set.
class ProfileSetBuilder {
 public:
  ProfileSetBuilder(ArithmeticPtr arithmetic, bool track_witnesses);
  ~ProfileSetBuilder();
  ProfileSetBuilder(const ProfileSetBuilder&) = delete;
  ProfileSetBuilder& operator=(const ProfileSetBuilder&) = delete;

  bool tracks_witnesses() const { return track_; }
  std::size_t size() const { return keys_.size(); }

  /// `make_witness` is invoked only when the key is new and witnesses are tracked.
  template <class MakeWitness>
  bool insert(ProfileKey key, MakeWitness&& make_witness) {
    if (!mark(key)) return false;
    keys_.push_back(key);
    if (track_) witnesses_.push_back(make_witness());
    return true;
  }
  bool insert(ProfileKey key) {
    return insert(key, [] { return PartialColoring(); });
  }
  void insert_all(const ProfileSet& set);

  ProfileSet build();

 private:
  bool mark(ProfileKey key);
  void release();

  ArithmeticPtr arithmetic_;
  bool track_;
  std::vector<ProfileKey> keys_;
  std::vector<PartialColoring> witnesses_;
  std::vector<std::uint64_t>* bitmap_ = nullptr;
  std::unordered_set<ProfileKey> seen_;
};

/// { a + b : a in A, b in B }; witnesses are unions of the component witnesses.
ProfileSet minkowski_merge(const ProfileSet& a, const ProfileSet& b);

/// Left fold of minkowski_merge. Throws InvalidArgument on an empty sequence.
ProfileSet merge_components(std::span<const ProfileSet> sets);

struct BestProfile {
  Profit value = 0;
  ProfitProfile profile;
  std::optional<PartialColoring> witness;
};

/// Maximum satisfaction; ties go to the lexicographically largest profile.
/// Exact mode only. Throws EmptySet.
BestProfile best(const ProfileSet& set);

/// Drops every profile that another profile dominates componentwise.
ProfileSet prune_dominated(const ProfileSet& set);

}  // namespace fkdiv
