#include "highway/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "highway/cut.hpp"
#include "highway/cycle.hpp"
#include "highway/line.hpp"
#include "highway/tree.hpp"

namespace highway {

void check_oracle_caps(const Instance& instance, const OracleCaps& caps) {
  if (instance.n() > caps.max_items || instance.m() > caps.max_customers ||
      instance.total_valuation() > caps.max_total_valuation) {
    throw GuardError("oracle guard exceeded: n=" + std::to_string(instance.n()) + ", m=" +
                     std::to_string(instance.m()) + ", sum w=" + std::to_string(instance.total_valuation()) +
                     " (caps n<=" + std::to_string(caps.max_items) + ", m<=" + std::to_string(caps.max_customers) +
                     ", sum w<=" + std::to_string(caps.max_total_valuation) + ")");
  }
}

namespace {

bool lex_less(const PriceVector& a, const PriceVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Candidate {
  bool valid = false;
  Rational value;
  PriceVector prices;

  void offer(Rational v, PriceVector p) {
    if (!valid || value < v || (v == value && lex_less(p, prices))) {
      valid = true;
      value = v;
      prices = std::move(p);
    }
  }
};

void fill_share(const Instance& instance, OracleResult& result) {
  for (const auto& c : instance.customers()) result.share.emplace(c.valuation, Rational(0));
  for (std::size_t j = 0; j < instance.m(); ++j) {
    result.share[instance.customer(j).valuation] += payment(instance, j, result.argmax);
  }
}

struct Hyperplane {
  std::vector<Rational> coef;
  Rational rhs;
};

std::vector<Hyperplane> arrangement(const Instance& instance) {
  const auto n = static_cast<std::size_t>(instance.n());
  std::vector<Hyperplane> planes;
  for (std::size_t j = 0; j < instance.m(); ++j) {
    std::vector<Rational> row(n, Rational(0));
    for (int item : instance.bundle(j)) row[item - 1] += Rational(1);
    planes.push_back({row, Rational(0)});
    planes.push_back({row, Rational(instance.customer(j).valuation)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = Rational(1);
    planes.push_back({row, Rational(0)});
  }
  return planes;
}

// Unique intersection point of the chosen hyperplanes, if they are independent.
std::optional<PriceVector> intersect(const std::vector<Hyperplane>& planes, const std::vector<int>& chosen) {
  const std::size_t n = chosen.size();
  std::vector<std::vector<Rational>> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a[r] = planes[chosen[r]].coef;
    a[r].push_back(planes[chosen[r]].rhs);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t c = col; c <= n; ++c) a[col][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  PriceVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
  return x;
}

std::vector<std::vector<int>> combinations(int pool, int choose) {
  std::vector<std::vector<int>> out;
  if (choose > pool) return out;
  std::vector<int> idx(static_cast<std::size_t>(choose));
  for (int i = 0; i < choose; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = choose - 1;
    while (i >= 0 && idx[i] == pool - choose + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < choose; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

}  // namespace

OracleResult exact_opt_coupon(const Instance& instance, Execution exec, const OracleCaps& caps) {
  check_oracle_caps(instance, caps);
  const std::vector<Hyperplane> planes = arrangement(instance);
  const std::vector<std::vector<int>> combos = combinations(static_cast<int>(planes.size()), instance.n());

  const long long count = static_cast<long long>(combos.size());
  Candidate best;
  // all-zero prices are one of the intersections (the p_i = 0 planes), so
  // `best` is always populated
#pragma omp parallel if (exec == Execution::parallel)
  {
    Candidate local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long c = 0; c < count; ++c) {
      auto point = intersect(planes, combos[c]);
      if (!point) continue;
      Rational value = profit(instance, *point);
      local.offer(value, std::move(*point));
    }
#pragma omp critical
    if (local.valid) best.offer(local.value, local.prices);
  }

  OracleResult result;
  result.opt = best.value;
  result.argmax = best.prices;
  result.search_space = static_cast<std::uint64_t>(count);
  fill_share(instance, result);
  return result;
}

namespace {

struct LatticeBest {
  bool valid = false;
  std::int64_t value = 0;
  std::vector<std::int64_t> coords;

  // chunks are offered in increasing coordinate order, so only strict
  // improvements replace the incumbent
  void offer(std::int64_t v, const std::vector<std::int64_t>& c) {
    if (!valid || v > value) {
      valid = true;
      value = v;
      coords = c;
    }
  }
};

struct LatticeEvaluator {
  const Instance& instance;
  std::vector<int> parent;  // tree: parent per item; line: i-1 as a chain

  std::int64_t operator()(const std::vector<std::int64_t>& coords, std::vector<std::int64_t>& prices) const {
    const std::size_t n = coords.size();
    for (std::size_t i = 0; i < n; ++i) {
      switch (instance.topology()) {
        case Topology::cycle: prices[i] = coords[i]; break;
        case Topology::line: prices[i] = coords[i] - (i == 0 ? 0 : coords[i - 1]); break;
        case Topology::tree: {
          int p = parent[i];
          prices[i] = coords[i] - (p == 0 ? 0 : coords[p - 1]);
          break;
        }
      }
    }
    std::int64_t total = 0;
    for (std::size_t j = 0; j < instance.m(); ++j) {
      std::int64_t sum = 0;
      for (int item : instance.bundle(j)) sum += prices[item - 1];
      if (sum > 0 && sum <= instance.customer(j).valuation) total += sum;
    }
    return total;
  }

  PriceVector prices_of(const std::vector<std::int64_t>& coords) const {
    std::vector<std::int64_t> p(coords.size());
    (*this)(coords, p);
    return PriceVector(p.begin(), p.end());
  }
};

LatticeBest lattice_chunk(const LatticeEvaluator& eval, int n, std::int64_t bound, std::int64_t lead) {
  LatticeBest best;
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n), -bound);
  std::vector<std::int64_t> prices(static_cast<std::size_t>(n));
  coords[0] = lead;
  while (true) {
    best.offer(eval(coords, prices), coords);
    int i = n - 1;
    while (i >= 1 && coords[i] == bound) {
      coords[i] = -bound;
      --i;
    }
    if (i < 1) break;
    ++coords[i];
  }
  return best;
}

}  // namespace

OracleResult lattice_opt_coupon(const Instance& instance, Execution exec, const OracleCaps& caps) {
  check_oracle_caps(instance, caps);
  const int n = instance.n();
  const std::int64_t bound = instance.total_valuation();
  LatticeEvaluator eval{instance, {}};
  if (instance.topology() == Topology::tree) eval.parent = instance.parents();

  const std::int64_t leads = 2 * bound + 1;
  std::vector<LatticeBest> chunks(static_cast<std::size_t>(leads));
  parallel_for(leads, exec, [&](long long c) { chunks[c] = lattice_chunk(eval, n, bound, c - bound); });

  LatticeBest best;
  for (const auto& chunk : chunks) best.offer(chunk.value, chunk.coords);

  OracleResult result;
  result.opt = Rational(best.value);
  result.argmax = eval.prices_of(best.coords);
  std::uint64_t points = 1;
  for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(leads);
  result.search_space = points;
  fill_share(instance, result);
  return result;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::line_random: return "line-random";
    case Algorithm::line_cut: return "line-cut";
    case Algorithm::line_sl: return "line-sl";
    case Algorithm::cycle_sl: return "cycle-sl";
    case Algorithm::cyc_single: return "cyc-single";
    case Algorithm::tree_random: return "tree-random";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::line_random, Algorithm::line_cut, Algorithm::line_sl, Algorithm::cycle_sl,
                      Algorithm::cyc_single, Algorithm::tree_random}) {
    if (to_string(a) == text) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(text) + "'");
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exponent) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > (kExpectationGuard + 1) / std::max<std::uint64_t>(base, 1) + 1) return kExpectationGuard + 1;
    value *= base;
  }
  return value;
}

std::int64_t largest_valuation(const Instance& instance) {
  return instance.m() == 0 ? 0 : valuation_profile(instance).largest;
}

std::vector<std::int64_t> digits(std::uint64_t index, std::size_t count, std::uint64_t base) {
  std::vector<std::int64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<std::int64_t>(index % base);
    index /= base;
  }
  return out;
}

PartialSums as_sums(const std::vector<std::int64_t>& values) {
  PartialSums sums;
  for (auto v : values) sums.values.emplace_back(v);
  return sums;
}

Rational ordered_mean(const std::vector<Rational>& values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total / Rational(static_cast<std::int64_t>(values.size()));
}

}  // namespace

std::uint64_t expectation_space_size(Algorithm algorithm, const Instance& instance) {
  const auto base = static_cast<std::uint64_t>(largest_valuation(instance) + 1);
  switch (algorithm) {
    case Algorithm::line_random:
    case Algorithm::line_sl: return checked_power(base, instance.n() + 1);
    case Algorithm::tree_random: return checked_power(base, instance.n());
    case Algorithm::line_cut: return pairwise_space(static_cast<std::size_t>(instance.n()) + 1).size();
    case Algorithm::cycle_sl: return pairwise_space(static_cast<std::size_t>(instance.n())).size();
    case Algorithm::cyc_single: return 1;
  }
  return 0;
}

Rational exact_expectation(Algorithm algorithm, const Instance& instance, Execution exec) {
  const std::uint64_t size = expectation_space_size(algorithm, instance);
  if (size > kExpectationGuard) {
    throw GuardError("exact_expectation: randomness space exceeds " + std::to_string(kExpectationGuard) +
                     " outcomes for " + std::string(to_string(algorithm)));
  }
  const auto base = static_cast<std::uint64_t>(largest_valuation(instance) + 1);
  std::vector<Rational> profits(size);
  const auto count = static_cast<long long>(size);

  switch (algorithm) {
    case Algorithm::line_random:
    case Algorithm::line_sl: {
      const auto points = static_cast<std::size_t>(instance.n()) + 1;
      const Rational cut_profit =
          algorithm == Algorithm::line_sl ? line_cut(instance, CutStrategy::derandomized).profit : Rational(0);
      parallel_for(count, exec, [&](long long t) {
        Rational p = line_random_from_sums(instance, as_sums(digits(t, points, base))).profit;
        profits[t] = algorithm == Algorithm::line_sl ? max(p, cut_profit) : p;
      });
      break;
    }
    case Algorithm::tree_random: {
      const RootedTreeView view = rooted_view(instance);
      const auto points = static_cast<std::size_t>(instance.n());
      parallel_for(count, exec, [&](long long t) {
        profits[t] = tree_random_from_sums(instance, view, digits(t, points, base)).profit;
      });
      break;
    }
    case Algorithm::line_cut: {
      const auto space = pairwise_space(static_cast<std::size_t>(instance.n()) + 1);
      parallel_for(count, exec, [&](long long t) { profits[t] = line_cut_with_marking(instance, space[t]).profit; });
      break;
    }
    case Algorithm::cycle_sl: {
      const auto space = pairwise_space(static_cast<std::size_t>(instance.n()));
      parallel_for(count, exec, [&](long long t) { profits[t] = cycle_sl_with_marking(instance, space[t]).profit; });
      break;
    }
    case Algorithm::cyc_single:
      profits[0] = cyc_single_val(instance, std::nullopt, DicutStrategy::exact, 0, exec).profit;
      break;
  }
  return ordered_mean(profits);
}

Rational run_once(Algorithm algorithm, const Instance& instance, std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::line_random: return line_random(instance, seed).profit;
    case Algorithm::line_cut: return line_cut(instance, CutStrategy::random, seed).profit;
    case Algorithm::line_sl: return line_combined(instance, seed).profit;
    case Algorithm::cycle_sl: return cycle_sl(instance, CutStrategy::random, seed).profit;
    case Algorithm::cyc_single:
      return cyc_single_val(instance, std::nullopt, DicutStrategy::local, seed, Execution::serial).profit;
    case Algorithm::tree_random: return tree_random(instance, seed).profit;
  }
  return Rational(0);
}

MonteCarloSummary monte_carlo(Algorithm algorithm, const Instance& instance, std::uint64_t trials,
                              std::uint64_t seed, Execution exec) {
  if (trials < 100) throw std::invalid_argument("monte_carlo needs at least 100 trials");
  std::vector<Rational> profits(trials);
  const auto count = static_cast<long long>(trials);
  // line_sl's cut half is deterministic; compute it once
  std::optional<Rational> cut_profit;
  if (algorithm == Algorithm::line_sl) cut_profit = line_cut(instance, CutStrategy::derandomized).profit;
  parallel_for(count, exec, [&](long long t) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
    profits[t] = cut_profit ? max(line_random(instance, s).profit, *cut_profit) : run_once(algorithm, instance, s);
  });
  MonteCarloSummary summary;
  summary.trials = trials;
  summary.mean = ordered_mean(profits);
  const double mean = summary.mean.to_double();
  double squares = 0;
  for (const auto& p : profits) {
    double d = p.to_double() - mean;
    squares += d * d;
  }
  summary.stddev = std::sqrt(squares / static_cast<double>(trials - 1));
  constexpr double z99 = 2.5758293035489004;
  summary.half_width = z99 * summary.stddev / std::sqrt(static_cast<double>(trials));
  return summary;
}

long double alpha_root() {
  static const long double alpha = [] {
    auto h = [](long double x) { return 3.0L / x - 4.0L * (1.0L - std::log(x)); };
    long double lo = 0.3L;
    long double hi = 0.5L;
    // h(lo) > 0 > h(hi)
    while (hi - lo > 1e-12L) {
      long double mid = (lo + hi) / 2;
      (h(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
  }();
  return alpha;
}

}  // namespace highway
