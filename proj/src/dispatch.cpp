#include "fkdiv/dispatch.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"

#include "fkdiv/error.hpp"
#include "fkdiv/fptas.hpp"
#include "fkdiv/oracle.hpp"
#include "fkdiv/tree_decomposition.hpp"

namespace fkdiv {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kMaxBagColorings = 4096;

bool is_chordal(const Graph& g) {
  try {
    (void)chordal_peo(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotChordal) throw;
    return false;
  }
}

bool is_cocomparability(const Graph& g) {
  try {
    (void)cocomparability_orientation(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCocomparability) throw;
    return false;
  }
}

bool brute_force_fits(const Instance& instance, std::uint64_t budget) {
  const double leaves = std::pow(static_cast<double>(instance.agents() + 1), instance.vertex_count());
  return leaves <= static_cast<double>(budget);
}

}  // namespace

Algorithm choose_algorithm(const InstanceFile& file, std::uint64_t budget) {
  const Instance& instance = file.instance;
  const Graph& g = instance.graph();
  if (is_chordal(g)) return Algorithm::Chordal;
  if (is_cocomparability(g)) return Algorithm::Cocomparability;
  if (file.has_biconvex_ordering()) return Algorithm::Biconvex;
  if (file.decomposition) return Algorithm::Treewidth;
  const int width = minfill_decomposition(g).width();
  if (std::pow(static_cast<double>(instance.agents() + 1), width + 1) <= kMaxBagColorings) return Algorithm::Treewidth;
  if (brute_force_fits(instance, budget)) return Algorithm::BruteForce;
  throw Error(ErrorCode::NoApplicableAlgorithm, "no solver applies within the configured limits");
}

SolveReport solve_dispatch(const InstanceFile& file, const SolveRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  const Instance& instance = file.instance;
  const Algorithm algorithm =
      request.algorithm == Algorithm::Auto ? choose_algorithm(file, request.budget) : request.algorithm;

  SolveReport report;
  report.algorithm = std::string(algorithm_name(algorithm));
  report.epsilon = request.epsilon;
  if (request.epsilon && request.keep_profiles) {
    throw Error(ErrorCode::InvalidArgument, "profile output is not available for rounded runs");
  }

  if (algorithm == Algorithm::BruteForce) {
    if (request.epsilon) throw Error(ErrorCode::InvalidArgument, "brute force has no rounded variant");
    OracleOptions o;
    o.budget = request.budget;
    o.enumerate_profiles = request.keep_profiles;
    OracleResult r = brute_force(instance, o);
    report.value = r.optimum;
    report.coloring = r.witness.labels();
    report.profile = r.witness.profile(instance);
    if (request.keep_profiles) {
      report.profile_count = static_cast<std::int64_t>(r.profiles.size());
      report.profiles = r.profiles.profiles();
    }
  } else if (request.epsilon) {
    ProfileRunOptions o;
    o.threads = request.threads;
    FptasResult r = solve_fptas(file, Rational::parse(*request.epsilon), algorithm, o);
    report.value = r.value;
    report.coloring = r.witness.labels();
    report.profile = r.profile;
    report.profile_count = static_cast<std::int64_t>(r.rounded.size());
  } else {
    ProfileRunOptions o;
    o.threads = request.threads;
    o.prune = request.prune && !request.keep_profiles;
    const ProfileSet set = run_profile_solver(algorithm, file, o);
    const BestProfile b = best(set);
    report.value = b.value;
    report.coloring = b.witness->labels();
    report.profile = b.profile;
    report.profile_count = static_cast<std::int64_t>(set.size());
    if (request.keep_profiles) report.profiles = set.profiles();
  }
  report.elapsed_millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  validate_report(instance, report);
  return report;
}

void validate_report(const Instance& instance, const SolveReport& report) {
  const int n = instance.vertex_count();
  const int k = instance.agents();
  auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidArgument, "report rejected: " + why); };
  if (static_cast<int>(report.coloring.size()) != n) throw fail("coloring length differs from n");
  for (int c : report.coloring) {
    if (c < 0 || c > k) throw fail("class label out of range");
  }
  const PartialColoring coloring = PartialColoring::from_labels(report.coloring, k);
  if (!coloring.feasible(instance.graph())) throw fail("a class is not independent");
  if (coloring.profile(instance) != report.profile) throw fail("profile does not match the coloring");
  if (satisfaction(report.profile) != report.value) throw fail("value is not the profile minimum");
}

std::string report_to_json(const SolveReport& report, bool include_elapsed) {
  Json j;
  j["value"] = report.value;
  j["coloring"] = report.coloring;
  j["profile"] = report.profile;
  j["algorithm"] = report.algorithm;
  if (report.epsilon) j["epsilon"] = *report.epsilon;
  if (include_elapsed) j["elapsedMillis"] = report.elapsed_millis;
  if (report.profile_count) j["profileCount"] = *report.profile_count;
  // One key per line, values compact.
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out += first ? "\n  " : ",\n  ";
    out += Json(key).dump() + ": " + value.dump();
    first = false;
  }
  return out + "\n}\n";
}

SolveReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    SolveReport r;
    r.value = j.at("value").get<Profit>();
    r.coloring = j.at("coloring").get<std::vector<int>>();
    r.profile = j.at("profile").get<ProfitProfile>();
    r.algorithm = j.at("algorithm").get<std::string>();
    if (j.contains("epsilon")) r.epsilon = j.at("epsilon").get<std::string>();
    if (j.contains("elapsedMillis")) r.elapsed_millis = j.at("elapsedMillis").get<std::int64_t>();
    if (j.contains("profileCount")) r.profile_count = j.at("profileCount").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed report: ") + e.what());
  }
}

std::string profiles_to_json(const std::vector<ProfitProfile>& profiles) {
  Json j = Json::array();
  for (const auto& p : profiles) j.push_back(p);
  return j.dump() + "\n";
}

}  // namespace fkdiv
