#include "fkdiv/profile.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

constexpr std::uint64_t kDenseKeySpace = std::uint64_t{1} << 24;

// Bitmaps are recycled per thread; builders may nest, so this is a free list.
thread_local std::vector<std::unique_ptr<std::vector<std::uint64_t>>> bitmap_pool;
thread_local std::vector<std::unique_ptr<std::vector<std::uint64_t>>> bitmaps_in_use;

std::vector<std::uint64_t>* acquire_bitmap(std::uint64_t bits) {
  const std::size_t words = static_cast<std::size_t>((bits + 63) / 64);
  for (std::size_t i = 0; i < bitmap_pool.size(); ++i) {
    if (bitmap_pool[i]->size() == words) {
      bitmaps_in_use.push_back(std::move(bitmap_pool[i]));
      bitmap_pool.erase(bitmap_pool.begin() + static_cast<std::ptrdiff_t>(i));
      return bitmaps_in_use.back().get();
    }
  }
  bitmaps_in_use.push_back(std::make_unique<std::vector<std::uint64_t>>(words, 0));
  return bitmaps_in_use.back().get();
}

void return_bitmap(std::vector<std::uint64_t>* bitmap) {
  for (std::size_t i = 0; i < bitmaps_in_use.size(); ++i) {
    if (bitmaps_in_use[i].get() == bitmap) {
      bitmap_pool.push_back(std::move(bitmaps_in_use[i]));
      bitmaps_in_use.erase(bitmaps_in_use.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
  }
}

}  // namespace

Profit satisfaction(const ProfitProfile& profile) {
  if (profile.empty()) return 0;
  return *std::min_element(profile.begin(), profile.end());
}

ProfitProfile shift(ProfitProfile profile, int agent, Profit amount) {
  if (agent < 0 || agent >= static_cast<int>(profile.size())) {
    throw Error(ErrorCode::InvalidArgument, "agent index out of range");
  }
  profile[agent] += amount;
  return profile;
}

// --- PartialColoring -------------------------------------------------------

PartialColoring::PartialColoring(int n, int k) : labels_(n, 0), k_(k) {
  if (k < 1 || k > 255) throw Error(ErrorCode::InvalidArgument, "agent count must be in 1..255");
}

PartialColoring PartialColoring::from_labels(std::span<const int> labels, int k) {
  PartialColoring c(static_cast<int>(labels.size()), k);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] > k) throw Error(ErrorCode::InvalidArgument, "class label out of range");
    c.labels_[v] = static_cast<std::uint8_t>(labels[v]);
  }
  return c;
}

std::vector<std::vector<Vertex>> PartialColoring::classes() const {
  std::vector<std::vector<Vertex>> out(k_);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (labels_[v]) out[labels_[v] - 1].push_back(v);
  }
  return out;
}

ProfitProfile PartialColoring::profile(const Instance& instance) const {
  ProfitProfile p(k_, 0);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (labels_[v]) p[labels_[v] - 1] += instance.profit(labels_[v] - 1, v);
  }
  return p;
}

bool PartialColoring::feasible(const Graph& graph) const {
  if (graph.vertex_count() != vertex_count()) return false;
  for (auto [u, v] : graph.edges()) {
    if (labels_[u] && labels_[u] == labels_[v]) return false;
  }
  return true;
}

PartialColoring PartialColoring::merged_with(const PartialColoring& other) const {
  if (other.vertex_count() != vertex_count() || other.k_ != k_) {
    throw Error(ErrorCode::InvalidArgument, "merging colorings of different shapes");
  }
  PartialColoring out = *this;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!other.labels_[v]) continue;
    if (out.labels_[v] && out.labels_[v] != other.labels_[v]) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " colored differently");
    }
    out.labels_[v] = other.labels_[v];
  }
  return out;
}

PartialColoring PartialColoring::lifted(std::span<const Vertex> sub_to_full, int full_n) const {
  PartialColoring out(full_n, k_);
  for (Vertex v = 0; v < vertex_count(); ++v) out.labels_[sub_to_full[v]] = labels_[v];
  return out;
}

// --- ProfitArithmetic ------------------------------------------------------

ProfitArithmetic::ProfitArithmetic(int k, std::uint64_t radix, std::optional<RoundingGrid> grid)
    : k_(k), radix_(radix), grid_(std::move(grid)) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "agent count must be positive");
  weight_.assign(k, 1);
  std::uint64_t space = 1;
  for (int j = k - 1; j >= 0; --j) {
    weight_[j] = space;
    if (space > UINT64_MAX / radix_) {
      throw Error(ErrorCode::ProfileSpaceOverflow,
                  "(radix " + std::to_string(radix_) + ")^" + std::to_string(k) + " does not fit a 64-bit key");
    }
    space *= radix_;
  }
  key_space_ = space;
}

ArithmeticPtr ProfitArithmetic::exact(int k, Profit q_bound) {
  return std::shared_ptr<const ProfitArithmetic>(
      new ProfitArithmetic(k, static_cast<std::uint64_t>(q_bound) + 1, std::nullopt));
}

ArithmeticPtr ProfitArithmetic::for_instance(const Instance& instance) {
  return exact(instance.agents(), instance.q_bound());
}

ArithmeticPtr ProfitArithmetic::rounded(RoundingGrid grid) {
  const auto radix = static_cast<std::uint64_t>(grid.max_intervals()) + 2;
  const int k = grid.agents();
  return std::shared_ptr<const ProfitArithmetic>(new ProfitArithmetic(k, radix, std::move(grid)));
}

Profit ProfitArithmetic::rounded_sum(Profit code, long double addend, bool addend_integral) const {
  if (code == 0 && addend_integral) {
    return addend < 1.0L ? 0 : grid_->round_down(static_cast<Profit>(addend)) + 1;
  }
  const long double base = code == 0 ? 0.0L : grid_->endpoint(static_cast<int>(code - 1));
  const long double total = base + addend;
  if (total < 1.0L) return 0;
  return grid_->round_down(total) + 1;
}

ProfileKey ProfitArithmetic::shift(ProfileKey key, int agent, Profit amount) const {
  if (amount == 0) return key;
  const Profit current = raw(key, agent);
  Profit next;
  if (is_exact()) {
    next = current + amount;
  } else {
    next = rounded_sum(current, static_cast<long double>(amount), true);
  }
  if (next < 0 || static_cast<std::uint64_t>(next) >= radix_) {
    throw Error(ErrorCode::ProfileSpaceOverflow, "profile coordinate exceeds the key radix");
  }
  return key + static_cast<std::uint64_t>(next - current) * weight_[agent];
}

ProfileKey ProfitArithmetic::add(ProfileKey a, ProfileKey b) const {
  if (is_exact()) {
    for (int j = 0; j < k_; ++j) {
      if (static_cast<std::uint64_t>(raw(a, j) + raw(b, j)) >= radix_) {
        throw Error(ErrorCode::ProfileSpaceOverflow, "profile coordinate exceeds the key radix");
      }
    }
    return a + b;
  }
  ProfileKey out = 0;
  for (int j = 0; j < k_; ++j) {
    const Profit ca = raw(a, j), cb = raw(b, j);
    Profit c;
    if (ca == 0) {
      c = cb;
    } else if (cb == 0) {
      c = ca;
    } else {
      c = rounded_sum(ca, grid_->endpoint(static_cast<int>(cb - 1)), false);
    }
    if (static_cast<std::uint64_t>(c) >= radix_) {
      throw Error(ErrorCode::ProfileSpaceOverflow, "profile coordinate exceeds the key radix");
    }
    out += static_cast<std::uint64_t>(c) * weight_[j];
  }
  return out;
}

ProfileKey ProfitArithmetic::encode(const ProfitProfile& coordinates) const {
  if (static_cast<int>(coordinates.size()) != k_) throw Error(ErrorCode::DimensionMismatch, "profile length != k");
  ProfileKey key = 0;
  for (int j = 0; j < k_; ++j) {
    if (coordinates[j] < 0 || static_cast<std::uint64_t>(coordinates[j]) >= radix_) {
      throw Error(ErrorCode::ProfileSpaceOverflow, "profile coordinate outside 0.." + std::to_string(radix_ - 1));
    }
    key += static_cast<std::uint64_t>(coordinates[j]) * weight_[j];
  }
  return key;
}

ProfitProfile ProfitArithmetic::decode(ProfileKey key) const {
  reads_.fetch_add(1, std::memory_order_relaxed);
  ProfitProfile p(k_);
  for (int j = 0; j < k_; ++j) p[j] = raw(key, j);
  return p;
}

Profit ProfitArithmetic::coordinate(ProfileKey key, int agent) const {
  reads_.fetch_add(1, std::memory_order_relaxed);
  return raw(key, agent);
}

long double ProfitArithmetic::represented_value(ProfileKey key, int agent) const {
  const Profit c = coordinate(key, agent);
  if (is_exact()) return static_cast<long double>(c);
  return c == 0 ? 0.0L : grid_->endpoint(static_cast<int>(c - 1));
}

// --- ProfileSet --------------------------------------------------------------

ProfileSet::ProfileSet(ArithmeticPtr arithmetic, bool track_witnesses)
    : arithmetic_(std::move(arithmetic)), track_(track_witnesses) {}

ProfileSet ProfileSet::zero(ArithmeticPtr arithmetic, bool track_witnesses, int n) {
  ProfileSet s(arithmetic, track_witnesses);
  s.keys_.push_back(arithmetic->zero());
  if (track_witnesses) s.witnesses_.emplace_back(n, arithmetic->agents());
  return s;
}

std::optional<std::size_t> ProfileSet::find(ProfileKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

bool ProfileSet::contains(const ProfitProfile& profile) const {
  for (Profit c : profile) {
    if (c < 0 || static_cast<std::uint64_t>(c) >= arithmetic_->radix()) return false;
  }
  return find(arithmetic_->encode(profile)).has_value();
}

std::vector<ProfitProfile> ProfileSet::profiles() const {
  std::vector<ProfitProfile> out;
  out.reserve(keys_.size());
  for (ProfileKey key : keys_) out.push_back(arithmetic_->decode(key));
  return out;
}

// --- ProfileSetBuilder -------------------------------------------------------

ProfileSetBuilder::ProfileSetBuilder(ArithmeticPtr arithmetic, bool track_witnesses)
    : arithmetic_(std::move(arithmetic)), track_(track_witnesses) {
  if (arithmetic_->key_space() <= kDenseKeySpace) bitmap_ = acquire_bitmap(arithmetic_->key_space());
}

ProfileSetBuilder::~ProfileSetBuilder() { release(); }

void ProfileSetBuilder::release() {
  if (!bitmap_) return;
  for (ProfileKey key : keys_) (*bitmap_)[key >> 6] &= ~(std::uint64_t{1} << (key & 63));
  return_bitmap(bitmap_);
  bitmap_ = nullptr;
}

bool ProfileSetBuilder::mark(ProfileKey key) {
  if (bitmap_) {
    auto& word = (*bitmap_)[key >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (key & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  }
  return seen_.insert(key).second;
}

void ProfileSetBuilder::insert_all(const ProfileSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    insert(set.key(i), [&] { return set.witness(i); });
  }
}

ProfileSet ProfileSetBuilder::build() {
  ProfileSet out(arithmetic_, track_);
  std::vector<std::size_t> order(keys_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
  out.keys_.reserve(keys_.size());
  for (std::size_t i : order) out.keys_.push_back(keys_[i]);
  if (track_) {
    out.witnesses_.reserve(keys_.size());
    for (std::size_t i : order) out.witnesses_.push_back(std::move(witnesses_[i]));
  }
  release();
  keys_.clear();
  witnesses_.clear();
  seen_.clear();
  return out;
}

// --- set operations ----------------------------------------------------------

ProfileSet minkowski_merge(const ProfileSet& a, const ProfileSet& b) {
  const bool track = a.tracks_witnesses() && b.tracks_witnesses();
  const auto& arith = a.arithmetic();
  ProfileSetBuilder builder(a.arithmetic_ptr(), track);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      builder.insert(arith.add(a.key(i), b.key(j)), [&] { return a.witness(i).merged_with(b.witness(j)); });
    }
  }
  return builder.build();
}

ProfileSet merge_components(std::span<const ProfileSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "merge_components needs at least one set");
  ProfileSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = minkowski_merge(acc, sets[i]);
  return acc;
}

BestProfile best(const ProfileSet& set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "best() of an empty profile set");
  if (!set.arithmetic().is_exact()) throw Error(ErrorCode::InvalidArgument, "best() needs exact profiles");
  std::size_t chosen = 0;
  Profit chosen_value = -1;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Profit value = satisfaction(set.profile(i));
    // Keys ascend lexicographically, so >= keeps the largest profile among ties.
    if (value >= chosen_value) {
      chosen_value = value;
      chosen = i;
    }
  }
  BestProfile out{chosen_value, set.profile(chosen), std::nullopt};
  if (set.tracks_witnesses()) out.witness = set.witness(chosen);
  return out;
}

ProfileSet prune_dominated(const ProfileSet& set) {
  std::vector<ProfitProfile> kept;
  std::vector<std::size_t> kept_index;
  // A dominating profile is lexicographically larger, so scan downwards.
  for (std::size_t i = set.size(); i-- > 0;) {
    const ProfitProfile p = set.profile(i);
    bool dominated = false;
    for (const auto& q : kept) {
      if (std::equal(p.begin(), p.end(), q.begin(), [](Profit a, Profit b) { return a <= b; })) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(p);
      kept_index.push_back(i);
    }
  }
  ProfileSetBuilder builder(set.arithmetic_ptr(), set.tracks_witnesses());
  for (auto it = kept_index.rbegin(); it != kept_index.rend(); ++it) {
    builder.insert(set.key(*it), [&] { return set.witness(*it); });
  }
  return builder.build();
}

}  // namespace fkdiv
