#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "highway/boundary.hpp"
#include "highway/parallel.hpp"

namespace highway {

enum class Side : std::uint8_t { L, R };

/// Two-coloring of the boundary vertices; L are the "marked" vertices.
struct Marking {
  std::vector<Side> sides;

  std::size_t size() const { return sides.size(); }
  bool left(int v) const { return sides[static_cast<std::size_t>(v)] == Side::L; }

  static Marking all(std::size_t k, Side side) { return {std::vector<Side>(k, side)}; }

  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Arcs kept by a marking (tail in L, head in R) and their valuation total.
struct CutResult {
  Marking marking;
  std::vector<Arc> kept;
  std::int64_t value = 0;
  std::map<std::int64_t, std::int64_t> counts_by_valuation;
};

/// Each vertex L with probability 1/2, independently; fixed by `seed`.
Marking random_marking(std::size_t vertex_count, std::uint64_t seed);

/// The 2^d-point GF(2) sample space, d = ceil(log2(k+1)): vertex i gets label
/// i+1 and is L at point x iff <label, x> = 0 over GF(2). Uniform and pairwise
/// independent; point x = 0 marks everything L.
std::vector<Marking> pairwise_space(std::size_t vertex_count);

/// Throws ValidationError when the marking does not cover the graph.
CutResult crossing(const BoundaryGraph& graph, const Marking& marking);

/// First candidate with maximum Val(K).
CutResult best_marking(const BoundaryGraph& graph, const std::vector<Marking>& candidates,
                       Execution exec = Execution::parallel);

inline constexpr int kExactDicutMaxVertices = 22;

/// Exhaustive maximum directed cut. Ties go to the lexicographically smallest
/// L-indicator vector (vertex 0 first, R before L). Throws GuardError above
/// kExactDicutMaxVertices.
CutResult exact_max_dicut(const BoundaryGraph& graph, Execution exec = Execution::parallel);

/// Best 1-flip local optimum over `restarts` starts. Restart 0 starts from
/// random_marking(k, seed), restart t > 0 from random_marking(k, derive_seed(seed, t)).
CutResult local_search_dicut(const BoundaryGraph& graph, std::uint64_t seed, int restarts,
                             Execution exec = Execution::parallel);

}  // namespace highway
