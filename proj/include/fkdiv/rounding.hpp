#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fkdiv/graph.hpp"

namespace fkdiv {

/// Exact positive rational, used for the approximation parameter so that
/// "0.1" means exactly 1/10 on every platform.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Parses a plain decimal such as "0.25" or "3". Throws InvalidArgument.
  static Rational parse(std::string_view text);

  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// ceil(n * log_{1+eps}(ub)), evaluated exactly. ub = 1 gives 0.
int grid_size(const Rational& epsilon, int n, Profit ub);

/// Geometric grid with endpoints (1+eps)^(t/n), t = 0, 1, ...
/// One interval count per agent; index 0 has endpoint 1.
class RoundingGrid {
 public:
  RoundingGrid(Rational epsilon, int n, std::vector<Profit> upper_bounds);

  const Rational& epsilon() const { return epsilon_; }
  int n() const { return n_; }
  int agents() const { return static_cast<int>(upper_bounds_.size()); }
  Profit upper_bound(int agent) const { return upper_bounds_[agent]; }
  /// u_j for agent j.
  int intervals(int agent) const { return intervals_[agent]; }
  int max_intervals() const;

  long double endpoint(int t) const;
  /// Largest t with endpoint(t) <= value. Requires value >= 1.
  int round_down(long double value) const;
  /// Same for integral values, with ties against an endpoint resolved exactly.
  int round_down(Profit value) const;

 private:
  bool endpoint_at_most(int t, Profit value) const;

  Rational epsilon_;
  int n_;
  std::vector<Profit> upper_bounds_;
  std::vector<int> intervals_;
  long double log_base_;
  std::vector<long double> table_;
};

}  // namespace fkdiv
