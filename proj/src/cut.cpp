#include "highway/cut.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace highway {

Marking random_marking(std::size_t vertex_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Marking marking;
  marking.sides.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) marking.sides.push_back((rng() >> 63) ? Side::L : Side::R);
  return marking;
}

std::vector<Marking> pairwise_space(std::size_t vertex_count) {
  if (vertex_count == 0) return {};
  const int d = std::bit_width(vertex_count);  // ceil(log2(k+1))
  const std::uint64_t points = std::uint64_t{1} << d;
  std::vector<Marking> space;
  space.reserve(points);
  for (std::uint64_t x = 0; x < points; ++x) {
    Marking marking;
    marking.sides.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
      std::uint64_t label = i + 1;
      bool odd = std::popcount(label & x) & 1;
      marking.sides.push_back(odd ? Side::R : Side::L);
    }
    space.push_back(std::move(marking));
  }
  return space;
}

namespace {

std::int64_t crossing_value(const BoundaryGraph& graph, const Marking& marking) {
  std::int64_t value = 0;
  for (const auto& arc : graph.arcs) {
    if (marking.left(arc.tail) && !marking.left(arc.head)) value += arc.valuation;
  }
  return value;
}

}  // namespace

CutResult crossing(const BoundaryGraph& graph, const Marking& marking) {
  if (marking.size() != static_cast<std::size_t>(graph.vertex_count)) {
    throw ValidationError("marking covers " + std::to_string(marking.size()) + " vertices, graph has " +
                          std::to_string(graph.vertex_count));
  }
  CutResult result;
  result.marking = marking;
  for (const auto& arc : graph.arcs) {
    if (marking.left(arc.tail) && !marking.left(arc.head)) {
      result.kept.push_back(arc);
      result.value += arc.valuation;
      ++result.counts_by_valuation[arc.valuation];
    }
  }
  return result;
}

CutResult best_marking(const BoundaryGraph& graph, const std::vector<Marking>& candidates, Execution exec) {
  if (candidates.empty()) throw std::invalid_argument("best_marking needs at least one candidate");
  for (const auto& c : candidates) {
    if (c.size() != static_cast<std::size_t>(graph.vertex_count)) {
      throw ValidationError("candidate marking does not match the graph's vertex count");
    }
  }
  const long long count = static_cast<long long>(candidates.size());
  std::vector<std::int64_t> values(candidates.size());
  parallel_for(count, exec, [&](long long i) { values[i] = crossing_value(graph, candidates[i]); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return crossing(graph, candidates[best]);
}

namespace {

struct MaskBest {
  std::int64_t value = -1;
  std::uint64_t mask = 0;

  void offer(std::int64_t v, std::uint64_t m) {
    if (v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

// Bit (k-1-v) of the mask is the L-indicator of vertex v, so increasing masks
// enumerate indicator vectors in lexicographic order.
std::int64_t mask_value(const std::vector<Arc>& arcs, int k, std::uint64_t mask) {
  std::int64_t value = 0;
  for (const auto& arc : arcs) {
    bool tail_left = (mask >> (k - 1 - arc.tail)) & 1;
    bool head_left = (mask >> (k - 1 - arc.head)) & 1;
    if (tail_left && !head_left) value += arc.valuation;
  }
  return value;
}

}  // namespace

CutResult exact_max_dicut(const BoundaryGraph& graph, Execution exec) {
  const int k = graph.vertex_count;
  if (k > kExactDicutMaxVertices) {
    throw GuardError("exact_max_dicut: " + std::to_string(k) + " vertices exceeds the enumeration guard of " +
                     std::to_string(kExactDicutMaxVertices) + "; use local_search_dicut");
  }
  if (k <= 0) return crossing(graph, Marking{});
  const std::uint64_t total = std::uint64_t{1} << k;
  MaskBest best;
  if (exec == Execution::serial) {
    for (std::uint64_t mask = 0; mask < total; ++mask) best.offer(mask_value(graph.arcs, k, mask), mask);
  } else {
#pragma omp parallel
    {
      MaskBest local;
#pragma omp for schedule(static) nowait
      for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
        local.offer(mask_value(graph.arcs, k, static_cast<std::uint64_t>(mask)), static_cast<std::uint64_t>(mask));
      }
#pragma omp critical
      best.offer(local.value, local.mask);
    }
  }
  Marking marking;
  for (int v = 0; v < k; ++v) marking.sides.push_back(((best.mask >> (k - 1 - v)) & 1) ? Side::L : Side::R);
  return crossing(graph, marking);
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<int, std::int64_t>>> out;
  std::vector<std::vector<std::pair<int, std::int64_t>>> in;
};

Adjacency adjacency(const BoundaryGraph& graph) {
  Adjacency adj;
  adj.out.resize(static_cast<std::size_t>(graph.vertex_count));
  adj.in.resize(static_cast<std::size_t>(graph.vertex_count));
  for (const auto& arc : graph.arcs) {
    if (arc.tail == arc.head) continue;
    adj.out[arc.tail].emplace_back(arc.head, arc.valuation);
    adj.in[arc.head].emplace_back(arc.tail, arc.valuation);
  }
  return adj;
}

// Change in Val if v switches side.
std::int64_t flip_gain(const Adjacency& adj, const Marking& m, int v) {
  std::int64_t as_left = 0;   // v in L keeps out-arcs into R
  std::int64_t as_right = 0;  // v in R keeps in-arcs from L
  for (auto [head, w] : adj.out[v]) {
    if (!m.left(head)) as_left += w;
  }
  for (auto [tail, w] : adj.in[v]) {
    if (m.left(tail)) as_right += w;
  }
  return m.left(v) ? as_right - as_left : as_left - as_right;
}

// Change in sum_{v in L} out(v) + sum_{v in R} in(v) if v switches side. Used to
// leave zero-gain plateaus: (Val, this potential) rises lexicographically on every
// accepted flip, so the climb terminates.
std::int64_t potential_gain(const Adjacency& adj, const Marking& m, int v) {
  std::int64_t out = 0;
  std::int64_t in = 0;
  for (auto [head, w] : adj.out[v]) out += w;
  for (auto [tail, w] : adj.in[v]) in += w;
  return m.left(v) ? in - out : out - in;
}

Marking climb(const Adjacency& adj, Marking m) {
  const int k = static_cast<int>(m.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < k; ++v) {
      const std::int64_t gain = flip_gain(adj, m, v);
      if (gain > 0 || (gain == 0 && potential_gain(adj, m, v) > 0)) {
        m.sides[v] = m.left(v) ? Side::R : Side::L;
        improved = true;
      }
    }
  }
  return m;
}

}  // namespace

CutResult local_search_dicut(const BoundaryGraph& graph, std::uint64_t seed, int restarts, Execution exec) {
  if (restarts < 1) throw std::invalid_argument("local_search_dicut needs restarts >= 1");
  const Adjacency adj = adjacency(graph);
  const auto k = static_cast<std::size_t>(graph.vertex_count);
  std::vector<Marking> optima(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (int t = 0; t < restarts; ++t) {
    std::uint64_t start_seed = t == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(t));
    optima[t] = climb(adj, random_marking(k, start_seed));
  }
  return best_marking(graph, optima, Execution::serial);
}

}  // namespace highway
