#include "fkdiv/oracle.hpp"

#include <algorithm>

#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

class Search {
 public:
  Search(const Instance& instance, const OracleOptions& options)
      : inst_(instance),
        opts_(options),
        n_(instance.vertex_count()),
        k_(instance.agents()),
        arith_(ProfitArithmetic::for_instance(instance)),
        labels_(n_, 0),
        profile_(k_, 0),
        remaining_(k_, std::vector<Profit>(n_ + 1, 0)) {
    for (int j = 0; j < k_; ++j) {
      for (int v = n_ - 1; v >= 0; --v) remaining_[j][v] = remaining_[j][v + 1] + instance.profit(j, v);
    }
    if (options.enumerate_profiles) {
      builder_.emplace(arith_, true);
    }
  }

  OracleResult run() {
    visit(0);
    OracleResult out;
    out.optimum = best_;
    out.witness = PartialColoring::from_labels(best_labels_, k_);
    out.nodes = nodes_;
    if (builder_) out.profiles = builder_->build();
    return out;
  }

 private:
  bool fits(Vertex v, int c) const {
    for (Vertex u : inst_.graph().neighbors(v)) {
      if (u >= v) break;
      if (labels_[u] == c) return false;
    }
    return true;
  }

  void visit(Vertex v) {
    if (++nodes_ > opts_.budget) {
      throw Error(ErrorCode::BudgetExceeded, "search exceeded " + std::to_string(opts_.budget) + " nodes");
    }
    if (v == n_) {
      const Profit value = satisfaction(profile_);
      if (value > best_) {
        best_ = value;
        best_labels_ = labels_;
      }
      if (builder_) {
        builder_->insert(arith_->encode(profile_), [&] { return PartialColoring::from_labels(labels_, k_); });
      }
      return;
    }
    if (!builder_) {
      Profit bound = profile_[0] + remaining_[0][v];
      for (int j = 1; j < k_; ++j) bound = std::min(bound, profile_[j] + remaining_[j][v]);
      if (bound <= best_) return;
    }
    for (int c = 0; c <= k_; ++c) {
      if (c > 0 && !fits(v, c)) continue;
      labels_[v] = c;
      if (c > 0) profile_[c - 1] += inst_.profit(c - 1, v);
      visit(v + 1);
      if (c > 0) profile_[c - 1] -= inst_.profit(c - 1, v);
    }
    labels_[v] = 0;
  }

  const Instance& inst_;
  const OracleOptions& opts_;
  int n_;
  int k_;
  ArithmeticPtr arith_;
  std::vector<int> labels_;
  ProfitProfile profile_;
  std::vector<std::vector<Profit>> remaining_;
  std::optional<ProfileSetBuilder> builder_;
  Profit best_ = -1;
  std::vector<int> best_labels_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force(const Instance& instance, const OracleOptions& options) {
  return Search(instance, options).run();
}

Profit max_weight_independent_set(const Instance& instance, std::uint64_t budget) {
  if (instance.agents() != 1) throw Error(ErrorCode::InvalidArgument, "independent set oracle needs k = 1");
  const Graph& g = instance.graph();
  const int n = g.vertex_count();
  std::vector<std::uint8_t> blocked(n, 0);
  std::vector<Profit> suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + instance.profit(0, v);
  Profit best = 0;
  std::uint64_t nodes = 0;
  auto go = [&](auto&& self, Vertex v, Profit weight) -> void {
    if (++nodes > budget) throw Error(ErrorCode::BudgetExceeded, "independent set search exceeded budget");
    if (v == n) {
      best = std::max(best, weight);
      return;
    }
    if (weight + suffix[v] <= best) return;
    if (!blocked[v]) {
      std::vector<Vertex> newly;
      for (Vertex u : g.neighbors(v)) {
        if (u > v && !blocked[u]) {
          blocked[u] = 1;
          newly.push_back(u);
        }
      }
      self(self, v + 1, weight + instance.profit(0, v));
      for (Vertex u : newly) blocked[u] = 0;
    }
    self(self, v + 1, weight);
  };
  go(go, 0, 0);
  return best;
}

}  // namespace fkdiv
