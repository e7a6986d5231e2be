#include "highway/instance.hpp"

#include <algorithm>
#include <numeric>

namespace highway {

std::string_view to_string(Topology topology) {
  switch (topology) {
    case Topology::line: return "line";
    case Topology::cycle: return "cycle";
    case Topology::tree: return "tree";
  }
  return "?";
}

Topology parse_topology(std::string_view text) {
  if (text == "line") return Topology::line;
  if (text == "cycle") return Topology::cycle;
  if (text == "tree") return Topology::tree;
  throw ValidationError("unknown topology '" + std::string(text) + "'");
}

std::int64_t Instance::total_valuation() const {
  std::int64_t total = 0;
  for (const auto& c : customers_) total += c.valuation;
  return total;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  raw.topology = std::string(to_string(topology_));
  raw.n = n_;
  raw.parents.assign(parents_.begin(), parents_.end());
  for (const auto& c : customers_) raw.customers.push_back({c.start, c.end, c.valuation});
  return raw;
}

namespace {

std::string customer_label(std::size_t j) { return "customer " + std::to_string(j); }

std::vector<int> tree_path(const std::vector<int>& parents, const std::vector<int>& depth, int a, int b) {
  std::vector<int> up;
  std::vector<int> down;
  while (depth[a - 1] > depth[b - 1]) {
    up.push_back(a);
    a = parents[a - 1];
  }
  while (depth[b - 1] > depth[a - 1]) {
    down.push_back(b);
    b = parents[b - 1];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = parents[a - 1];
    b = parents[b - 1];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

Instance validate_instance(const RawInstance& raw) {
  Instance inst;
  inst.topology_ = parse_topology(raw.topology);
  if (raw.n < 1 || raw.n > 1'000'000) throw ValidationError("item count n must be in [1, 1000000]");
  const int n = static_cast<int>(raw.n);
  inst.n_ = n;

  std::vector<int> depth;
  if (inst.topology_ == Topology::tree) {
    if (raw.parents.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("tree parents must list exactly n entries");
    }
    inst.parents_.resize(n);
    for (int i = 0; i < n; ++i) {
      long long p = raw.parents[i];
      if (p < 0 || p > n || p == i + 1) {
        throw ValidationError("malformed tree parent map: item " + std::to_string(i + 1) +
                              " has parent " + std::to_string(p));
      }
      inst.parents_[i] = static_cast<int>(p);
      if (p == 0) {
        if (inst.root_ != 0) throw ValidationError("malformed tree parent map: more than one root");
        inst.root_ = i + 1;
      }
    }
    if (inst.root_ == 0) throw ValidationError("malformed tree parent map: no root");
    // depth via memoized walk; a walk longer than n means a cycle
    depth.assign(n, -1);
    depth[inst.root_ - 1] = 0;
    for (int i = 1; i <= n; ++i) {
      std::vector<int> chain;
      int v = i;
      while (depth[v - 1] < 0) {
        chain.push_back(v);
        if (chain.size() > static_cast<std::size_t>(n)) {
          throw ValidationError("malformed tree parent map: cycle through item " + std::to_string(i));
        }
        v = inst.parents_[v - 1];
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        depth[*it - 1] = depth[inst.parents_[*it - 1] - 1] + 1;
      }
    }
  } else if (!raw.parents.empty()) {
    throw ValidationError("parents are only meaningful for tree topology");
  }

  for (std::size_t j = 0; j < raw.customers.size(); ++j) {
    const auto& rc = raw.customers[j];
    if (rc.start < 1 || rc.start > n || rc.end < 1 || rc.end > n) {
      throw ValidationError(customer_label(j) + ": item index out of range [1," + std::to_string(n) + "]", j);
    }
    if (rc.w <= 0) throw ValidationError(customer_label(j) + ": valuation must be positive", j);
    Customer c{static_cast<int>(rc.start), static_cast<int>(rc.end), static_cast<std::int64_t>(rc.w)};
    std::vector<int> items;
    switch (inst.topology_) {
      case Topology::line:
        if (c.start > c.end) throw ValidationError(customer_label(j) + ": start > end on line", j);
        for (int i = c.start; i <= c.end; ++i) items.push_back(i);
        break;
      case Topology::cycle: {
        int size = c.start <= c.end ? c.end - c.start + 1 : n - c.start + 1 + c.end;
        if (size >= n) throw ValidationError(customer_label(j) + ": full-cycle bundle", j);
        for (int k = 0, i = c.start; k < size; ++k, i = i % n + 1) items.push_back(i);
        break;
      }
      case Topology::tree:
        items = tree_path(inst.parents_, depth, c.start, c.end);
        break;
    }
    inst.customers_.push_back(c);
    inst.bundles_.push_back(std::move(items));
  }
  return inst;
}

namespace {

RawInstance raw_from(std::string topology, int n, const std::vector<Customer>& customers) {
  RawInstance raw;
  raw.topology = std::move(topology);
  raw.n = n;
  for (const auto& c : customers) raw.customers.push_back({c.start, c.end, c.valuation});
  return raw;
}

}  // namespace

Instance make_line(int n, const std::vector<Customer>& customers) {
  return validate_instance(raw_from("line", n, customers));
}

Instance make_cycle(int n, const std::vector<Customer>& customers) {
  return validate_instance(raw_from("cycle", n, customers));
}

Instance make_tree(const std::vector<int>& parents, const std::vector<Customer>& customers) {
  RawInstance raw = raw_from("tree", static_cast<int>(parents.size()), customers);
  raw.parents.assign(parents.begin(), parents.end());
  return validate_instance(raw);
}

ValuationProfile valuation_profile(const std::vector<std::int64_t>& valuations) {
  if (valuations.empty()) throw ValidationError("valuation profile of an empty customer list");
  ValuationProfile profile;
  auto [lo, hi] = std::minmax_element(valuations.begin(), valuations.end());
  profile.smallest = *lo;
  profile.largest = *hi;
  profile.ratio = Rational(profile.smallest, profile.largest);
  for (std::int64_t x = profile.smallest; x <= profile.largest; ++x) profile.counts[x] = 0;
  for (auto w : valuations) ++profile.counts[w];
  return profile;
}

ValuationProfile valuation_profile(const Instance& instance) {
  std::vector<std::int64_t> valuations;
  valuations.reserve(instance.m());
  for (const auto& c : instance.customers()) valuations.push_back(c.valuation);
  return valuation_profile(valuations);
}

}  // namespace highway
