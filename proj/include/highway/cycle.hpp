#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "highway/boundary.hpp"
#include "highway/cut.hpp"
#include "highway/instance.hpp"
#include "highway/line.hpp"
#include "highway/pricing.hpp"

namespace highway {

struct CycleRunReport {
  PriceVector prices;
  Rational profit;
  std::optional<std::int64_t> chosen_x;
  Marking marking;
  std::vector<Arc> kept;  // J_H
};

/// Potential realization on the cycle boundaries: endpoints in L get -x/2,
/// endpoints in R get +x/2, every other boundary inherits the potential of the
/// nearest endpoint counter-clockwise. Item i is priced phi(b_i) - phi(b_{i-1}).
/// All-zero prices when the graph has no arcs.
PriceVector cycle_potential_prices(const BoundaryGraph& graph, const Marking& marking, std::int64_t x);

CycleRunReport cycle_sl_with_marking(const Instance& instance, const Marking& marking);
CycleRunReport cycle_sl(const Instance& instance, CutStrategy strategy, std::uint64_t seed = 0);

struct CycleIdentityCheck {
  Rational kept_value;        // Val(J_H)
  Rational lower_bound_sum;   // bound(p_s) + sum_{x>s} bound(p_x)/x, kept-arc customers only
  Rational realized_sum;      // same weighting over realized coupon profits
  Rational difference;        // kept_value - lower_bound_sum
};

CycleIdentityCheck cycle_identity_check(const Instance& instance, const Marking& marking);

struct PivotSplit {
  int pivot = 0;
  std::vector<std::size_t> in_customers;   // E_in: bundles containing the pivot
  std::vector<std::size_t> out_customers;  // E_out
  std::vector<int> in_items;               // V_in, ascending
  std::vector<int> out_items;              // V_out in cut-open order pivot+1, ..., n, 1, ..., pivot-1
  std::vector<int> position;               // original item -> 1-based line position, 0 if not in V_out
  std::optional<Instance> line_instance;   // G_out relabeled; empty when E_out is empty
};

/// Throws ValidationError unless the instance is a single-valuation cycle and
/// 1 <= pivot <= n.
PivotSplit split_at_pivot(const Instance& instance, int pivot);

enum class DicutStrategy { exact, local, derandomized };

struct SubroutineResult {
  PriceVector prices;   // on the line positions 1..k
  PartialSums sums;     // s_0 = 0 and every s_i in {0, w}
  std::int64_t dicut_value = 0;
  int a = 4;            // certified approximation parameter of the strategy
};

/// Single-valuation line pricing from a directed cut with u_0 forced to L.
/// Partial sums are 0 on L and w on R (w the common valuation).
/// `seed`/`restarts` only affect DicutStrategy::local.
SubroutineResult line_single_val_subroutine(const Instance& line_instance, DicutStrategy strategy,
                                            std::uint64_t seed = 0, int restarts = 16);

int certified_a(DicutStrategy strategy);

/// Classes of E_in customers by whether they extend left/right of the pivot
/// and by the tau price sums beta (left part) and gamma (right part).
struct InClassCounts {
  std::int64_t pivot_only = 0;                     // M_h
  std::array<std::int64_t, 3> left{};              // M_L^(beta), index beta+1
  std::array<std::int64_t, 2> right{};             // M_R^(gamma)
  std::array<std::array<std::int64_t, 2>, 3> both{};  // M_LR^(beta,gamma)

  std::int64_t total() const;
  /// Number of E_in customers paying exactly 1 when the pivot is priced x.
  std::int64_t paying_at(int x) const;
};

struct CycSingleReport {
  PriceVector prices;
  Rational profit;
  int pivot = 0;
  Rational sigma_profit;
  Rational tau_profit;
  Rational in_profit;        // E_in share of tau (normalized units times w)
  int pivot_price = 0;       // chosen x in {-1, 0, 1, 2} (normalized)
  std::array<std::int64_t, 4> paying_by_price{};  // class-table counts for x = -1..2
  InClassCounts classes;
  std::size_t in_count = 0;  // |E_in|
  std::int64_t dicut_value = 0;
  int a = 4;
  Rational certified_ratio;  // (3a+4)/4
  bool chose_sigma = false;
};

/// Without a pivot every item is tried and the best report (smallest pivot on
/// ties) is returned.
CycSingleReport cyc_single_val(const Instance& instance, std::optional<int> pivot, DicutStrategy strategy,
                               std::uint64_t seed = 0, Execution exec = Execution::parallel);

}  // namespace highway
