#include "highway/cycle.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace highway {

namespace {

void require_cycle(const Instance& instance, const char* op) {
  if (instance.topology() != Topology::cycle) {
    throw ValidationError(std::string(op) + " requires a cycle instance, got " +
                          std::string(to_string(instance.topology())));
  }
}

void require_single_valuation(const Instance& instance, const char* op) {
  if (instance.m() > 0 && !valuation_profile(instance).single_valuation()) {
    throw ValidationError(std::string(op) + " requires a single-valuation instance");
  }
}

// Sum over kept arcs with valuation >= x of x.
Rational kept_lower_bound(const std::vector<Arc>& kept, std::int64_t x) {
  std::int64_t total = 0;
  for (const auto& arc : kept) {
    if (arc.valuation >= x) total += x;
  }
  return Rational(total);
}

}  // namespace

PriceVector cycle_potential_prices(const BoundaryGraph& graph, const Marking& marking, std::int64_t x) {
  const int n = graph.vertex_count;
  if (marking.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("cycle marking must cover every boundary b_0..b_{n-1}");
  }
  PriceVector prices(static_cast<std::size_t>(n), Rational(0));
  const std::vector<bool> in_u = graph.endpoints();
  int last = -1;
  for (int v = n - 1; v >= 0; --v) {
    if (in_u[v]) {
      last = v;
      break;
    }
  }
  if (last < 0) return prices;

  const Rational half(x, 2);
  std::vector<Rational> potential(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (in_u[v]) last = v;
    potential[v] = marking.left(last) ? -half : half;
  }
  for (int i = 1; i <= n; ++i) prices[i - 1] = potential[i % n] - potential[i - 1];
  return prices;
}

CycleRunReport cycle_sl_with_marking(const Instance& instance, const Marking& marking) {
  require_cycle(instance, "cycle_sl");
  const BoundaryGraph graph = boundary_graph(instance);
  CycleRunReport report;
  CutResult cut = crossing(graph, marking);
  report.marking = marking;
  report.kept = std::move(cut.kept);
  if (instance.m() == 0) {
    report.prices.assign(static_cast<std::size_t>(instance.n()), Rational(0));
    return report;
  }
  const ValuationProfile profile = valuation_profile(instance);
  for (std::int64_t x = profile.smallest; x <= profile.largest; ++x) {
    PriceVector prices = cycle_potential_prices(graph, marking, x);
    Rational value = profit(instance, prices);
    if (!report.chosen_x || report.profit < value) {
      report.prices = std::move(prices);
      report.profit = value;
      report.chosen_x = x;
    }
  }
  return report;
}

CycleRunReport cycle_sl(const Instance& instance, CutStrategy strategy, std::uint64_t seed) {
  require_cycle(instance, "cycle_sl");
  const BoundaryGraph graph = boundary_graph(instance);
  const auto k = static_cast<std::size_t>(graph.vertex_count);
  Marking marking = strategy == CutStrategy::random
                        ? random_marking(k, seed)
                        : best_marking(graph, pairwise_space(k)).marking;
  return cycle_sl_with_marking(instance, marking);
}

CycleIdentityCheck cycle_identity_check(const Instance& instance, const Marking& marking) {
  require_cycle(instance, "cycle_identity_check");
  CycleIdentityCheck check;
  if (instance.m() == 0) return check;
  const BoundaryGraph graph = boundary_graph(instance);
  const CutResult cut = crossing(graph, marking);
  const ValuationProfile profile = valuation_profile(instance);
  check.kept_value = Rational(cut.value);
  for (std::int64_t x = profile.smallest; x <= profile.largest; ++x) {
    const Rational weight = x == profile.smallest ? Rational(1) : Rational(1, x);
    check.lower_bound_sum += kept_lower_bound(cut.kept, x) * weight;
    check.realized_sum += profit(instance, cycle_potential_prices(graph, marking, x)) * weight;
  }
  check.difference = check.kept_value - check.lower_bound_sum;
  return check;
}

PivotSplit split_at_pivot(const Instance& instance, int pivot) {
  require_cycle(instance, "split_at_pivot");
  require_single_valuation(instance, "split_at_pivot");
  const int n = instance.n();
  if (pivot < 1 || pivot > n) throw ValidationError("pivot item " + std::to_string(pivot) + " out of range");

  PivotSplit split;
  split.pivot = pivot;
  std::vector<bool> in_cover(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> out_cover(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t j = 0; j < instance.m(); ++j) {
    const auto& items = instance.bundle(j);
    bool contains = std::find(items.begin(), items.end(), pivot) != items.end();
    (contains ? split.in_customers : split.out_customers).push_back(j);
    for (int i : items) (contains ? in_cover : out_cover)[i] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (in_cover[i]) split.in_items.push_back(i);
  }
  split.position.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int step = 1; step < n; ++step) {
    int item = (pivot - 1 + step) % n + 1;
    if (out_cover[item]) {
      split.out_items.push_back(item);
      split.position[item] = static_cast<int>(split.out_items.size());
    }
  }
  split.position.erase(split.position.begin());  // index by item-1

  if (!split.out_customers.empty()) {
    std::vector<Customer> line_customers;
    for (std::size_t j : split.out_customers) {
      const auto& items = instance.bundle(j);
      line_customers.push_back({split.position[items.front() - 1], split.position[items.back() - 1],
                                instance.customer(j).valuation});
    }
    split.line_instance = make_line(static_cast<int>(split.out_items.size()), line_customers);
  }
  return split;
}

int certified_a(DicutStrategy strategy) { return strategy == DicutStrategy::exact ? 2 : 4; }

SubroutineResult line_single_val_subroutine(const Instance& line_instance, DicutStrategy strategy,
                                            std::uint64_t seed, int restarts) {
  if (line_instance.topology() != Topology::line) {
    throw ValidationError("line_single_val_subroutine requires a line instance");
  }
  require_single_valuation(line_instance, "line_single_val_subroutine");
  const BoundaryGraph graph = boundary_graph(line_instance);
  CutResult cut;
  switch (strategy) {
    case DicutStrategy::exact: cut = exact_max_dicut(graph); break;
    case DicutStrategy::local: {
      // a 1-flip optimum alone does not certify W/4; keep the pairwise-space best as a floor
      cut = local_search_dicut(graph, seed, restarts);
      CutResult floor = best_marking(graph, pairwise_space(static_cast<std::size_t>(graph.vertex_count)));
      if (floor.value > cut.value) cut = std::move(floor);
      break;
    }
    case DicutStrategy::derandomized:
      cut = best_marking(graph, pairwise_space(static_cast<std::size_t>(graph.vertex_count)));
      break;
  }
  Marking marking = cut.marking;
  marking.sides[0] = Side::L;  // u_0 has no incoming arcs
  const std::int64_t w = line_instance.m() > 0 ? line_instance.customer(0).valuation : 1;

  SubroutineResult result;
  for (Side side : marking.sides) result.sums.values.push_back(side == Side::L ? Rational(0) : Rational(w));
  result.prices = prices_from_partial_sums(result.sums, line_instance.n());
  result.dicut_value = crossing(graph, marking).value;
  result.a = certified_a(strategy);
  return result;
}

std::int64_t InClassCounts::total() const {
  std::int64_t sum = pivot_only;
  for (auto c : left) sum += c;
  for (auto c : right) sum += c;
  for (const auto& row : both) sum += row[0] + row[1];
  return sum;
}

std::int64_t InClassCounts::paying_at(int x) const {
  // customer pays 1 iff beta + x + gamma == 1
  std::int64_t count = x == 1 ? pivot_only : 0;
  for (int beta = -1; beta <= 1; ++beta) {
    if (beta + x == 1) count += left[beta + 1];
  }
  for (int gamma = 0; gamma <= 1; ++gamma) {
    if (x + gamma == 1) count += right[gamma];
  }
  for (int beta = -1; beta <= 1; ++beta) {
    for (int gamma = 0; gamma <= 1; ++gamma) {
      if (beta + x + gamma == 1) count += both[beta + 1][gamma];
    }
  }
  return count;
}

namespace {

Instance normalized(const Instance& instance) {
  RawInstance raw = instance.to_raw();
  for (auto& c : raw.customers) c.w = 1;
  return validate_instance(raw);
}

// One pivot on a unit-valuation instance.
CycSingleReport run_pivot(const Instance& unit, int pivot, DicutStrategy strategy, std::uint64_t seed) {
  const int n = unit.n();
  const PivotSplit split = split_at_pivot(unit, pivot);
  CycSingleReport report;
  report.pivot = pivot;
  report.in_count = split.in_customers.size();
  report.a = certified_a(strategy);
  report.certified_ratio = Rational(3 * report.a + 4, 4);

  PriceVector sigma(static_cast<std::size_t>(n), Rational(0));
  sigma[pivot - 1] = Rational(1);
  report.sigma_profit = profit(unit, sigma);

  PriceVector tau(static_cast<std::size_t>(n), Rational(0));
  if (split.line_instance) {
    SubroutineResult sub = line_single_val_subroutine(*split.line_instance, strategy, seed);
    report.dicut_value = sub.dicut_value;
    for (std::size_t p = 0; p < split.out_items.size(); ++p) tau[split.out_items[p] - 1] = sub.prices[p];
  }

  for (std::size_t j : split.in_customers) {
    const auto& items = unit.bundle(j);
    auto at = std::find(items.begin(), items.end(), pivot);
    Rational beta_sum;
    Rational gamma_sum;
    for (auto it = items.begin(); it != at; ++it) beta_sum += tau[*it - 1];
    for (auto it = at + 1; it != items.end(); ++it) gamma_sum += tau[*it - 1];
    const bool has_left = at != items.begin();
    const bool has_right = at + 1 != items.end();
    if (!beta_sum.is_integer() || !gamma_sum.is_integer() || beta_sum.num() < -1 || beta_sum.num() > 1 ||
        gamma_sum.num() < 0 || gamma_sum.num() > 1) {
      throw std::logic_error("pivot class sums out of range for customer " + std::to_string(j));
    }
    const auto beta = static_cast<int>(beta_sum.num());
    const auto gamma = static_cast<int>(gamma_sum.num());
    if (!has_left && !has_right) {
      ++report.classes.pivot_only;
    } else if (has_left && !has_right) {
      ++report.classes.left[beta + 1];
    } else if (!has_left) {
      ++report.classes.right[gamma];
    } else {
      ++report.classes.both[beta + 1][gamma];
    }
  }

  int best_x = -1;
  for (int x = -1; x <= 2; ++x) {
    report.paying_by_price[x + 1] = report.classes.paying_at(x);
    if (report.paying_by_price[x + 1] > report.paying_by_price[best_x + 1]) best_x = x;
  }
  report.pivot_price = best_x;
  report.in_profit = Rational(report.paying_by_price[best_x + 1]);
  tau[pivot - 1] = Rational(best_x);
  report.tau_profit = profit(unit, tau);

  report.chose_sigma = report.tau_profit < report.sigma_profit;
  report.prices = report.chose_sigma ? sigma : tau;
  report.profit = report.chose_sigma ? report.sigma_profit : report.tau_profit;
  return report;
}

void scale(CycSingleReport& report, const Instance& original, std::int64_t w) {
  const Rational factor(w);
  for (auto& p : report.prices) p *= factor;
  report.profit = profit(original, report.prices);
  report.sigma_profit *= factor;
  report.tau_profit *= factor;
  report.in_profit *= factor;
  report.dicut_value *= w;
}

}  // namespace

CycSingleReport cyc_single_val(const Instance& instance, std::optional<int> pivot, DicutStrategy strategy,
                               std::uint64_t seed, Execution exec) {
  require_cycle(instance, "cyc_single_val");
  require_single_valuation(instance, "cyc_single_val");
  const std::int64_t w = instance.m() > 0 ? instance.customer(0).valuation : 1;
  const Instance unit = normalized(instance);

  CycSingleReport best;
  if (pivot) {
    best = run_pivot(unit, *pivot, strategy, seed);
  } else {
    const int n = instance.n();
    std::vector<CycSingleReport> reports(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (int h = 1; h <= n; ++h) {
      try {
        reports[h - 1] = run_pivot(unit, h, strategy, seed);
      } catch (...) {
        errors[h - 1] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    best = reports[0];
    for (int h = 2; h <= n; ++h) {
      if (best.profit < reports[h - 1].profit) best = reports[h - 1];
    }
  }
  scale(best, instance, w);
  return best;
}

}  // namespace highway
