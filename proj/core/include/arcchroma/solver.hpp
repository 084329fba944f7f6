#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcchroma/coloring.hpp"
#include "arcchroma/geometry.hpp"
#include "arcchroma/verify.hpp"

namespace arcchroma::solver {

struct SolveLimits {
  long long max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

struct SolveConfig {
  SolveLimits limits{};
  // <= 1 runs the deterministic single-threaded search; larger values split
  // the root branching across workers (same verdict, stats and witness may
  // differ between runs)
  int threads = 1;
  // recompute the propagated state from scratch at every node and compare
  bool paranoid = false;
};

enum class SearchStatus { Found, Exhausted, Limit };
const char* to_string(SearchStatus s);

struct SearchStats {
  long long nodes = 0;
  long long wipeouts = 0;
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Limit;
  SearchStats stats{};
  std::optional<Coloring> coloring;  // present iff status == Found
};

// Backtracking search for an arc-proper k-coloring with forward checking and
// minimum-remaining-values point selection (lowest id breaks ties), ascending
// color order.  Symmetry breaking: point 0 is pinned to color 0 and a point
// may take color c > 0 only when some assigned point already has color c-1.
// Exhausted is claimed modulo color permutation, which is sound for
// existence.  Found colorings are re-validated through the determinant oracle
// before they are returned and may use fewer than k colors.
SearchOutcome solve_coloring(const Geometry& g, int k, const SolveConfig& config = {});

// All arcs of a grid with exactly two points in every row, i.e. of the
// maximum possible size 2n.  Row-by-row enumeration with incremental
// collinearity pruning; results come out sorted and duplicate-free, each
// re-validated through the determinant oracle.  target_size must equal 2n.
std::vector<ArcSet> enumerate_max_arcs(const Geometry& grid, int target_size);

// Exact cover of the grid by k pairwise-disjoint arcs drawn from the given
// list, returned as a Coloring (class j = j-th chosen arc).  Backtracking on
// the uncovered point with the fewest usable arcs; arcs are tried in input
// order.  Every input arc must have exactly point_count/k points.
SearchOutcome partition_from_arcs(const Geometry& grid, const std::vector<ArcSet>& arcs,
                                  int k);

struct KAttempt {
  int k = 0;
  SearchStatus status = SearchStatus::Limit;
  SearchStats stats{};
};

// Everything chi_arc learned: certified lower bound, best upper bound with a
// verified witness, and the per-k search outcomes in the order they ran.
struct ChiEvidence {
  GeometryDescriptor geometry{};
  int lower = 1;
  int upper = 0;
  std::vector<verify::BoundCertificate> certificates;
  std::vector<KAttempt> attempts;
  std::optional<Coloring> witness;  // coloring with `upper` classes
  std::string upper_source;         // "search", "arc-partition", "construction:..."

  bool exact() const { return lower == upper; }
};

// Brackets the arc chromatic number.  Lower bounds come from the
// closed-form certificates plus any exhausted refutations; the upper bound
// is the smallest of a found coloring, a max-arc partition (even-sided
// grids) and the closed-form constructions.  Search climbs k upward from
// the certified lower bound until a coloring is found or a construction
// already matches; a cross-check below the certified bound runs first and
// must not succeed.
ChiEvidence chi_arc(const Geometry& g, const SolveConfig& config = {});

}  // namespace arcchroma::solver
