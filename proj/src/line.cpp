#include "highway/line.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "highway/oracle.hpp"

namespace highway {

std::string_view to_string(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::log_ratio: return "4(1-ln r)";
    case BoundRegime::three_over_r: return "3/r";
    case BoundRegime::six: return "6";
  }
  return "?";
}

namespace {

void require_ratio(const Rational& r) {
  if (r <= Rational(0) || Rational(1) < r) throw std::domain_error("ratio r must lie in (0, 1], got " + r.str());
}

void require_line(const Instance& instance, const char* op) {
  if (instance.topology() != Topology::line) {
    throw ValidationError(std::string(op) + " requires a line instance, got " +
                          std::string(to_string(instance.topology())));
  }
}

BoundRegime regime_for(const Instance& instance) {
  if (instance.m() == 0) return BoundRegime::log_ratio;
  return combined_line_bound(valuation_profile(instance).ratio).regime;
}

PriceVector zero_prices(const Instance& instance) {
  return PriceVector(static_cast<std::size_t>(instance.n()), Rational(0));
}

}  // namespace

long double cut_ratio_bound(const Rational& r) {
  require_ratio(r);
  return 4.0L * (1.0L - std::log(r.to_long_double()));
}

long double random_ratio_bound(const Rational& r) {
  require_ratio(r);
  if (r <= Rational(1, 2)) return 3.0L / r.to_long_double();
  return 6.0L;
}

RatioBound combined_line_bound(const Rational& r) {
  require_ratio(r);
  const long double alpha = alpha_root();
  const long double inv_sqrt_e = 1.0L / std::sqrt(std::exp(1.0L));
  const long double x = r.to_long_double();
  if (x <= alpha || x >= inv_sqrt_e) return {4.0L * (1.0L - std::log(x)), BoundRegime::log_ratio};
  if (r <= Rational(1, 2)) return {3.0L / x, BoundRegime::three_over_r};
  return {6.0L, BoundRegime::six};
}

Rational harmonic_factor(std::int64_t smallest, std::int64_t largest) {
  Rational factor(1);
  for (std::int64_t k = smallest + 1; k <= largest; ++k) factor += Rational(1, k);
  return factor;
}

PartialSums draw_line_sums(const Instance& instance, std::uint64_t seed) {
  require_line(instance, "line_random");
  PartialSums sums;
  sums.values.assign(static_cast<std::size_t>(instance.n()) + 1, Rational(0));
  if (instance.m() == 0) return sums;
  const std::int64_t largest = valuation_profile(instance).largest;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, largest);
  for (auto& s : sums.values) s = Rational(draw(rng));
  return sums;
}

LineRunReport line_random_from_sums(const Instance& instance, const PartialSums& sums) {
  require_line(instance, "line_random");
  LineRunReport report;
  report.prices = prices_from_partial_sums(sums, instance.n());
  report.profit = profit(instance, report.prices);
  report.sums = sums;
  report.regime = regime_for(instance);
  report.source = "random";
  return report;
}

LineRunReport line_random(const Instance& instance, std::uint64_t seed) {
  return line_random_from_sums(instance, draw_line_sums(instance, seed));
}

Rational line_random_expected_profit(const Instance& instance) {
  require_line(instance, "line_random_expected_profit");
  if (instance.m() == 0) return Rational(0);
  const ValuationProfile profile = valuation_profile(instance);
  const std::int64_t l = profile.largest;
  Rational expected;
  for (const auto& [x, count] : profile.counts) {
    if (count == 0) continue;
    expected += Rational(count * x * (x + 1) * (-2 * x + 3 * l + 2), 6 * (l + 1) * (l + 1));
  }
  return expected;
}

PriceVector cut_prices(const Marking& marking, std::int64_t x) {
  PartialSums sums;
  sums.values.reserve(marking.size());
  for (Side side : marking.sides) sums.values.push_back(side == Side::L ? Rational(0) : Rational(x));
  return prices_from_partial_sums(sums, static_cast<int>(marking.size()) - 1);
}

LineRunReport line_cut_with_marking(const Instance& instance, const Marking& marking) {
  require_line(instance, "line_cut");
  if (marking.size() != static_cast<std::size_t>(instance.n()) + 1) {
    throw ValidationError("line_cut marking must cover u_0..u_n");
  }
  LineRunReport report;
  report.marking = marking;
  report.regime = regime_for(instance);
  report.source = "cut";
  if (instance.m() == 0) {
    report.prices = zero_prices(instance);
    return report;
  }
  const ValuationProfile profile = valuation_profile(instance);
  for (std::int64_t x = profile.smallest; x <= profile.largest; ++x) {
    PriceVector prices = cut_prices(marking, x);
    Rational value = profit(instance, prices);
    if (!report.chosen_x || report.profit < value) {
      report.prices = std::move(prices);
      report.profit = value;
      report.chosen_x = x;
    }
  }
  return report;
}

LineRunReport line_cut(const Instance& instance, CutStrategy strategy, std::uint64_t seed) {
  require_line(instance, "line_cut");
  const BoundaryGraph graph = boundary_graph(instance);
  const auto k = static_cast<std::size_t>(graph.vertex_count);
  Marking marking = strategy == CutStrategy::random
                        ? random_marking(k, seed)
                        : best_marking(graph, pairwise_space(k)).marking;
  return line_cut_with_marking(instance, marking);
}

IdentityCheck line_cut_identity_check(const Instance& instance, const Marking& marking) {
  require_line(instance, "line_cut_identity_check");
  IdentityCheck check;
  if (instance.m() == 0) return check;
  const CutResult cut = crossing(boundary_graph(instance), marking);
  const ValuationProfile profile = valuation_profile(instance);
  check.kept_value = Rational(cut.value);
  for (std::int64_t x = profile.smallest; x <= profile.largest; ++x) {
    Rational tau_profit = profit(instance, cut_prices(marking, x));
    check.reconstructed += x == profile.smallest ? tau_profit : tau_profit / Rational(x);
  }
  check.difference = check.kept_value - check.reconstructed;
  return check;
}

LineRunReport line_combined(const Instance& instance, std::uint64_t seed) {
  LineRunReport random = line_random(instance, seed);
  LineRunReport cut = line_cut(instance, CutStrategy::derandomized);
  return random.profit > cut.profit ? random : cut;
}

}  // namespace highway
