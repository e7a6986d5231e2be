#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "highway/instance.hpp"
#include "highway/pricing.hpp"

namespace highway {

/// Customer j as an arc between the two boundaries of its bundle.
struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t valuation = 0;
  std::size_t customer = 0;
};

/// Directed representation H = (U, F) of a line or cycle instance.
///
/// Line: vertices u_0..u_n, customer [a, b] becomes u_{a-1} -> u_b.
/// Cycle: vertices b_0..b_{n-1}, b_i is the point after item i (b_0 sits after
/// item n); the clockwise run a..b becomes b_{(a-1) mod n} -> b_{b mod n}.
struct BoundaryGraph {
  Topology topology = Topology::line;
  int vertex_count = 0;
  std::vector<Arc> arcs;

  std::int64_t total_weight() const;
  /// Vertices that are the endpoint of at least one arc.
  std::vector<bool> endpoints() const;
};

/// Throws ValidationError for tree instances.
BoundaryGraph boundary_graph(const Instance& instance);

/// s_0..s_n on the line boundaries.
struct PartialSums {
  std::vector<Rational> values;
};

PartialSums partial_sums_from_prices(const PriceVector& prices);
/// p_i = s_i - s_{i-1}. Throws ValidationError unless sums cover u_0..u_n.
PriceVector prices_from_partial_sums(const PartialSums& sums, int n);

}  // namespace highway
