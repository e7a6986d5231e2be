#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "highway/instance.hpp"
#include "highway/pricing.hpp"

namespace highway {

/// The item tree re-rooted at `root`.
struct RootedTreeView {
  int root = 0;
  std::vector<int> parent;  // parent[i-1], 0 for the root
  std::vector<int> order;   // items in nondecreasing depth (BFS from the root)
};

/// Throws ValidationError for non-tree instances or an out-of-range root.
RootedTreeView rooted_view(const Instance& instance, std::optional<int> root = std::nullopt);

struct TreeRunReport {
  PriceVector prices;
  Rational profit;
  std::vector<std::int64_t> sums;  // s_i per item (index i-1)
  int root = 0;
};

/// p_i = s_i - s_parent(i), with the root priced s_root.
PriceVector tree_prices_from_sums(const RootedTreeView& view, const std::vector<std::int64_t>& sums);

/// Integer partial sums drawn uniformly from {0..l} per item.
TreeRunReport tree_random(const Instance& instance, std::uint64_t seed, std::optional<int> root = std::nullopt);

/// Same prices from a supplied draw; used by exhaustive expectation.
TreeRunReport tree_random_from_sums(const Instance& instance, const RootedTreeView& view,
                                    const std::vector<std::int64_t>& sums);

/// 16/(3r).
long double tree_ratio_bound(const Rational& r);

}  // namespace highway
