#include "highway/tree.hpp"

#include <deque>
#include <random>
#include <stdexcept>

namespace highway {

RootedTreeView rooted_view(const Instance& instance, std::optional<int> root) {
  if (instance.topology() != Topology::tree) {
    throw ValidationError("tree_random requires a tree instance, got " + std::string(to_string(instance.topology())));
  }
  const int n = instance.n();
  const int r = root.value_or(instance.root());
  if (r < 1 || r > n) throw ValidationError("root item " + std::to_string(r) + " out of range");

  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    int p = instance.parents()[i - 1];
    if (p != 0) {
      adjacent[i].push_back(p);
      adjacent[p].push_back(i);
    }
  }
  RootedTreeView view;
  view.root = r;
  view.parent.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::deque<int> queue{r};
  seen[r] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    view.order.push_back(v);
    for (int u : adjacent[v]) {
      if (!seen[u]) {
        seen[u] = true;
        view.parent[u - 1] = v;
        queue.push_back(u);
      }
    }
  }
  return view;
}

PriceVector tree_prices_from_sums(const RootedTreeView& view, const std::vector<std::int64_t>& sums) {
  if (sums.size() != view.parent.size()) throw ValidationError("tree partial sums must cover every item");
  PriceVector prices(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    int p = view.parent[i];
    prices[i] = Rational(sums[i] - (p == 0 ? 0 : sums[p - 1]));
  }
  return prices;
}

TreeRunReport tree_random_from_sums(const Instance& instance, const RootedTreeView& view,
                                    const std::vector<std::int64_t>& sums) {
  TreeRunReport report;
  report.prices = tree_prices_from_sums(view, sums);
  report.profit = profit(instance, report.prices);
  report.sums = sums;
  report.root = view.root;
  return report;
}

TreeRunReport tree_random(const Instance& instance, std::uint64_t seed, std::optional<int> root) {
  const RootedTreeView view = rooted_view(instance, root);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(instance.n()), 0);
  if (instance.m() > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> draw(0, valuation_profile(instance).largest);
    for (auto& s : sums) s = draw(rng);
  }
  return tree_random_from_sums(instance, view, sums);
}

long double tree_ratio_bound(const Rational& r) {
  if (r <= Rational(0) || Rational(1) < r) throw std::domain_error("ratio r must lie in (0, 1]");
  return 16.0L / (3.0L * r.to_long_double());
}

}  // namespace highway
