#include "fkdiv/fptas.hpp"

#include "fkdiv/error.hpp"

namespace fkdiv {

RoundingGrid grid_for(const Instance& instance, const Rational& epsilon) {
  std::vector<Profit> bounds;
  for (int j = 0; j < instance.agents(); ++j) bounds.push_back(instance.total_profit(j));
  return RoundingGrid(epsilon, instance.vertex_count(), std::move(bounds));
}

FptasResult solve_fptas(const InstanceFile& file, const Rational& epsilon, Algorithm base,
                        const ProfileRunOptions& options) {
  const Instance& instance = file.instance;
  RoundingGrid grid = grid_for(instance, epsilon);
  ArithmeticPtr arith = ProfitArithmetic::rounded(grid);
  ProfileRunOptions run = options;
  run.arithmetic = arith;
  run.track_witnesses = true;
  run.prune = false;

  const std::uint64_t reads_before = arith->magnitude_reads();
  ProfileSet rounded = run_profile_solver(base, file, run);
  const std::uint64_t reads = arith->magnitude_reads() - reads_before;
  if (rounded.empty()) throw Error(ErrorCode::EmptySet, "base solver returned no profiles");

  std::size_t chosen = 0;
  ProfitProfile chosen_profile;
  Profit chosen_value = -1;
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    ProfitProfile p = rounded.witness(i).profile(instance);
    const Profit value = satisfaction(p);
    if (value > chosen_value || (value == chosen_value && p > chosen_profile)) {
      chosen = i;
      chosen_value = value;
      chosen_profile = std::move(p);
    }
  }
  return {chosen_value, chosen_profile, rounded.witness(chosen), std::move(grid), std::move(rounded), reads};
}

}  // namespace fkdiv
