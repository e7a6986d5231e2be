#include "highway/boundary.hpp"

namespace highway {

std::int64_t BoundaryGraph::total_weight() const {
  std::int64_t total = 0;
  for (const auto& arc : arcs) total += arc.valuation;
  return total;
}

std::vector<bool> BoundaryGraph::endpoints() const {
  std::vector<bool> used(static_cast<std::size_t>(vertex_count), false);
  for (const auto& arc : arcs) {
    used[arc.tail] = true;
    used[arc.head] = true;
  }
  return used;
}

BoundaryGraph boundary_graph(const Instance& instance) {
  BoundaryGraph graph;
  graph.topology = instance.topology();
  const int n = instance.n();
  switch (instance.topology()) {
    case Topology::line:
      graph.vertex_count = n + 1;
      for (std::size_t j = 0; j < instance.m(); ++j) {
        const auto& c = instance.customer(j);
        graph.arcs.push_back({c.start - 1, c.end, c.valuation, j});
      }
      break;
    case Topology::cycle:
      graph.vertex_count = n;
      for (std::size_t j = 0; j < instance.m(); ++j) {
        const auto& c = instance.customer(j);
        graph.arcs.push_back({(c.start - 1) % n, c.end % n, c.valuation, j});
      }
      break;
    case Topology::tree:
      throw ValidationError("boundary graph is defined for line and cycle instances only");
  }
  return graph;
}

PartialSums partial_sums_from_prices(const PriceVector& prices) {
  PartialSums sums;
  sums.values.reserve(prices.size() + 1);
  Rational running;
  sums.values.push_back(running);
  for (const auto& p : prices) {
    running += p;
    sums.values.push_back(running);
  }
  return sums;
}

PriceVector prices_from_partial_sums(const PartialSums& sums, int n) {
  if (n < 0 || sums.values.size() != static_cast<std::size_t>(n) + 1) {
    throw ValidationError("partial sums must define every boundary u_0..u_" + std::to_string(n) + " (got " +
                          std::to_string(sums.values.size()) + " values)");
  }
  PriceVector prices;
  prices.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) prices.push_back(sums.values[i] - sums.values[i - 1]);
  return prices;
}

}  // namespace highway
