#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "highway/instance.hpp"
#include "highway/parallel.hpp"
#include "highway/pricing.hpp"

namespace highway {

/// Enumeration caps for the optimum search: n <= 5, m <= 6, sum w_j <= 18.
struct OracleCaps {
  int max_items = 5;
  std::size_t max_customers = 6;
  std::int64_t max_total_valuation = 18;
};

/// Throws GuardError when `instance` is outside `caps`.
void check_oracle_caps(const Instance& instance, const OracleCaps& caps = {});

struct OracleResult {
  Rational opt;                                 // Opt_coup(G)
  PriceVector argmax;                           // lexicographically smallest optimal vector found
  std::map<std::int64_t, Rational> share;       // Opt^x: payments of valuation-x customers at argmax
  std::uint64_t search_space = 0;               // candidate points examined
};

/// Exact Opt_coup for any topology.
///
/// For a fixed set P of paying customers the profit is the linear objective
/// sum_{j in P} p(e_j) over {0 <= p(e_j) <= w_j, j in P}; other customers only
/// add nonnegative payments. An optimum of that LP lies on a minimal face,
/// which meets the intersection of n linearly independent hyperplanes taken
/// from {p(e_j) = 0}, {p(e_j) = w_j} and {p_i = 0}. Every such intersection is
/// solved exactly and scored with the true coupon profit.
OracleResult exact_opt_coupon(const Instance& instance, Execution exec = Execution::parallel,
                              const OracleCaps& caps = {});

/// Integer-lattice search over [-W, W]^n (W = sum w_j): partial sums on the
/// line, per-item partial sums on a tree, per-item prices on a cycle. Equal to
/// Opt on lines; only a lower bound on cycles and trees, whose bundle matrices
/// are not totally unimodular.
OracleResult lattice_opt_coupon(const Instance& instance, Execution exec = Execution::parallel,
                                const OracleCaps& caps = {});

enum class Algorithm { line_random, line_cut, line_sl, cycle_sl, cyc_single, tree_random };

std::string_view to_string(Algorithm algorithm);
/// CLI spellings: line-random, line-cut, line-sl, cycle-sl, cyc-single, tree-random.
Algorithm parse_algorithm(std::string_view text);

inline constexpr std::uint64_t kExpectationGuard = 1'000'000;

/// Exact mean coupon profit over the algorithm's whole randomness space:
/// every partial-sum draw for line_random / tree_random / line_sl (the cut
/// half of line_sl is derandomized), every pairwise-space marking for line_cut
/// and cycle_sl. cyc_single (exact dicut) is deterministic and returns its
/// profit. Throws GuardError beyond kExpectationGuard draws.
Rational exact_expectation(Algorithm algorithm, const Instance& instance, Execution exec = Execution::parallel);

/// Number of equally likely outcomes exact_expectation would enumerate.
std::uint64_t expectation_space_size(Algorithm algorithm, const Instance& instance);

struct MonteCarloSummary {
  Rational mean;             // exact sample mean
  double stddev = 0;         // sample standard deviation
  double half_width = 0;     // 99% normal-approximation half-width
  std::uint64_t trials = 0;
};

/// Trial t draws from derive_seed(seed, t). Randomized strategies are used for
/// the cut algorithms; cyc_single uses local-search dicut seeded per trial.
/// Throws std::invalid_argument for trials < 100.
MonteCarloSummary monte_carlo(Algorithm algorithm, const Instance& instance, std::uint64_t trials,
                              std::uint64_t seed, Execution exec = Execution::parallel);

/// Coupon profit of one seeded run, as monte_carlo sees it.
Rational run_once(Algorithm algorithm, const Instance& instance, std::uint64_t seed);

/// Root of 3/x = 4(1 - ln x) on [0.3, 0.5], bisected to 1e-12. Memoized.
long double alpha_root();

}  // namespace highway
