#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "highway/errors.hpp"
#include "highway/rational.hpp"

namespace highway {

enum class Topology { line, cycle, tree };

std::string_view to_string(Topology topology);
Topology parse_topology(std::string_view text);

/// One single-minded customer. Items are 1-based. On a cycle the bundle is the
/// clockwise run start, start+1, ..., end (wrapping through n -> 1); on a tree
/// it is the path between the two items.
struct Customer {
  int start = 1;
  int end = 1;
  std::int64_t valuation = 1;

  friend bool operator==(const Customer&, const Customer&) = default;
};

/// Unchecked instance description as read from a file.
struct RawInstance {
  std::string topology;
  long long n = 0;
  std::vector<long long> parents;  // tree only; root marked 0
  struct RawCustomer {
    long long start = 0;
    long long end = 0;
    long long w = 0;
  };
  std::vector<RawCustomer> customers;
};

/// Validated reduced instance G = (V, E, {w_j}). Immutable once built.
class Instance {
 public:
  Topology topology() const { return topology_; }
  int n() const { return n_; }
  std::size_t m() const { return customers_.size(); }
  const std::vector<Customer>& customers() const { return customers_; }
  const Customer& customer(std::size_t j) const { return customers_[j]; }

  /// Items (1-based) of customer j's bundle, in traversal order.
  const std::vector<int>& bundle(std::size_t j) const { return bundles_[j]; }
  const std::vector<std::vector<int>>& bundles() const { return bundles_; }

  /// Tree only: parent item of each item (index i-1), 0 for the root.
  const std::vector<int>& parents() const { return parents_; }
  int root() const { return root_; }

  std::int64_t total_valuation() const;

  RawInstance to_raw() const;

  friend Instance validate_instance(const RawInstance& raw);

 private:
  Topology topology_ = Topology::line;
  int n_ = 0;
  int root_ = 0;
  std::vector<int> parents_;
  std::vector<Customer> customers_;
  std::vector<std::vector<int>> bundles_;
};

/// Checks every invariant and returns the instance, or throws ValidationError
/// naming the offending customer.
Instance validate_instance(const RawInstance& raw);

/// Convenience builders for code and tests; both go through validate_instance.
Instance make_line(int n, const std::vector<Customer>& customers);
Instance make_cycle(int n, const std::vector<Customer>& customers);
Instance make_tree(const std::vector<int>& parents, const std::vector<Customer>& customers);

/// Valuation statistics of an instance: s, l, r = s/l and m_x for every
/// integer x in [s, l] (zero counts included).
struct ValuationProfile {
  std::int64_t smallest = 0;
  std::int64_t largest = 0;
  Rational ratio;
  std::map<std::int64_t, std::int64_t> counts;

  bool single_valuation() const { return smallest == largest; }
};

ValuationProfile valuation_profile(const Instance& instance);
ValuationProfile valuation_profile(const std::vector<std::int64_t>& valuations);

}  // namespace highway
