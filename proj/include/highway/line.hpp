#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "highway/boundary.hpp"
#include "highway/cut.hpp"
#include "highway/instance.hpp"
#include "highway/pricing.hpp"

namespace highway {

/// How a cut-based algorithm obtains its marking.
enum class CutStrategy { random, derandomized };

/// Which case of the combined line guarantee applies for a given r.
enum class BoundRegime { log_ratio, three_over_r, six };

std::string_view to_string(BoundRegime regime);

struct RatioBound {
  long double value = 0;
  BoundRegime regime = BoundRegime::log_ratio;
};

/// Guarantee of the combined line algorithm:
///   4(1 - ln r)  for r <= alpha or r >= 1/sqrt(e),
///   3/r          for alpha < r <= 1/2,
///   6            for 1/2 < r < 1/sqrt(e).
/// Throws std::domain_error outside (0, 1].
RatioBound combined_line_bound(const Rational& r);

/// 4(1 - ln r): cut-based guarantee on line and cycle.
long double cut_ratio_bound(const Rational& r);
/// 3/r for r <= 1/2, else 6: guarantee of the random partial-sum algorithm.
long double random_ratio_bound(const Rational& r);
/// 1 + sum_{k=s+1}^{l} 1/k, the exact factor behind cut_ratio_bound.
Rational harmonic_factor(std::int64_t smallest, std::int64_t largest);

struct LineRunReport {
  PriceVector prices;
  Rational profit;  // coupon profit, re-evaluated from `prices`
  std::optional<std::int64_t> chosen_x;
  std::optional<Marking> marking;
  std::optional<PartialSums> sums;
  BoundRegime regime = BoundRegime::log_ratio;
  std::string source;  // "random" or "cut"
};

/// Uniform integer partial sums s_0..s_n in {0..l}.
PartialSums draw_line_sums(const Instance& instance, std::uint64_t seed);
/// Prices and coupon profit induced by a given draw of partial sums.
LineRunReport line_random_from_sums(const Instance& instance, const PartialSums& sums);
LineRunReport line_random(const Instance& instance, std::uint64_t seed);

/// Closed form  sum_x m_x * x(x+1)(-2x+3l+2) / (6(l+1)^2).
Rational line_random_expected_profit(const Instance& instance);

/// Partial sums 0 on L and x on R, read as line prices.
PriceVector cut_prices(const Marking& marking, std::int64_t x);

/// Steps after the marking: best tau_x over every integer x in [s, l],
/// smallest x on ties.
LineRunReport line_cut_with_marking(const Instance& instance, const Marking& marking);
/// `seed` is used only by CutStrategy::random. The derandomized strategy takes
/// the pairwise-space marking with the largest crossing weight.
LineRunReport line_cut(const Instance& instance, CutStrategy strategy, std::uint64_t seed = 0);

struct IdentityCheck {
  Rational kept_value;     // Val(K)
  Rational reconstructed;  // Profit(tau_s) + sum_{x>s} Profit(tau_x)/x
  Rational difference;
};

IdentityCheck line_cut_identity_check(const Instance& instance, const Marking& marking);

/// Better of line_random(seed) and the derandomized line_cut; the cut vector
/// wins ties.
LineRunReport line_combined(const Instance& instance, std::uint64_t seed);

}  // namespace highway
