#include "fkdiv/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Sign of (1+eps)^t - value^n, compared as a^t - value^n * b^t with a/b = 1 + eps.
int compare_power(const Rational& eps, int t, int n, Profit value) {
  BigInt a = eps.num + eps.den;
  BigInt b = eps.den;
  BigInt lhs = boost::multiprecision::pow(a, static_cast<unsigned>(t));
  BigInt rhs = boost::multiprecision::pow(BigInt(value), static_cast<unsigned>(n)) *
               boost::multiprecision::pow(b, static_cast<unsigned>(t));
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "not a positive decimal: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  std::size_t i = 0;
  if (text[0] == '+') ++i;
  std::int64_t num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (dot) throw fail();
      dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw fail();
    digits = true;
    if (num > (INT64_MAX - 9) / 10 || (dot && den > INT64_MAX / 10)) throw fail();
    num = num * 10 + (c - '0');
    if (dot) den *= 10;
  }
  if (!digits) throw fail();
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

int grid_size(const Rational& epsilon, int n, Profit ub) {
  if (epsilon.num <= 0 || epsilon.den <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs n >= 1");
  if (ub <= 1) return 0;
  const long double base = 1.0L + epsilon.value();
  long double estimate = std::ceil(static_cast<long double>(n) * std::log(static_cast<long double>(ub)) / std::log(base));
  int u = std::max(0, static_cast<int>(estimate));
  // Smallest u with (1+eps)^u >= ub^n.
  auto reaches = [&](int t) { return compare_power(epsilon, t, n, ub) >= 0; };
  while (u > 0 && reaches(u - 1)) --u;
  while (!reaches(u)) ++u;
  return u;
}

RoundingGrid::RoundingGrid(Rational epsilon, int n, std::vector<Profit> upper_bounds)
    : epsilon_(epsilon), n_(std::max(n, 1)), upper_bounds_(std::move(upper_bounds)) {
  if (epsilon_.num <= 0 || epsilon_.den <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  log_base_ = std::log(1.0L + epsilon_.value());
  for (Profit ub : upper_bounds_) intervals_.push_back(grid_size(epsilon_, n_, std::max<Profit>(ub, 1)));
  const int top = max_intervals() + 2;
  table_.reserve(top + 1);
  for (int t = 0; t <= top; ++t) {
    table_.push_back(t % n_ == 0 ? std::pow(1.0L + epsilon_.value(), static_cast<long double>(t / n_))
                                 : std::exp(static_cast<long double>(t) * log_base_ / n_));
  }
}

int RoundingGrid::max_intervals() const {
  return intervals_.empty() ? 0 : *std::max_element(intervals_.begin(), intervals_.end());
}

long double RoundingGrid::endpoint(int t) const {
  if (t >= 0 && t < static_cast<int>(table_.size())) return table_[t];
  return t % n_ == 0 ? std::pow(1.0L + epsilon_.value(), static_cast<long double>(t / n_))
                     : std::exp(static_cast<long double>(t) * log_base_ / n_);
}

int RoundingGrid::round_down(long double value) const {
  if (!(value >= 1.0L)) throw Error(ErrorCode::InvalidArgument, "round_down needs a value >= 1");
  int t = static_cast<int>(std::floor(static_cast<long double>(n_) * std::log(value) / log_base_));
  t = std::max(t, 0);
  while (endpoint(t + 1) <= value) ++t;
  while (t > 0 && endpoint(t) > value) --t;
  return t;
}

bool RoundingGrid::endpoint_at_most(int t, Profit value) const {
  return compare_power(epsilon_, t, n_, value) <= 0;
}

int RoundingGrid::round_down(Profit value) const {
  const long double v = static_cast<long double>(value);
  int t = round_down(v);
  constexpr long double kTie = 1e-9L;
  if (std::fabs(endpoint(t + 1) - v) <= kTie * v || std::fabs(endpoint(t) - v) <= kTie * v) {
    while (endpoint_at_most(t + 1, value)) ++t;
    while (t > 0 && !endpoint_at_most(t, value)) --t;
  }
  return t;
}

}  // namespace fkdiv
