#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcchroma/coloring.hpp"
#include "arcchroma/geometry.hpp"

namespace arcchroma::verify {

// Trusted oracle: tests every triple against the determinant, deliberately
// without any indexing shortcut.
bool is_arc(const Geometry& g, std::span<const PointId> pts);

// Production path: counts points per stored line.  Cross-validated against
// the oracle; results must always agree.
bool is_arc_line_index(const Geometry& g, std::span<const PointId> pts);

struct Violation {
  int color = -1;                        // offending class, -1 if not class-bound
  std::array<PointId, 3> triple{-1, -1, -1};
  PointId point = -1;                    // coverage violations
  int expected = 0;
  int actual = 0;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::optional<Violation> violation;
};

// Class-by-class arc check through the trusted oracle.  On failure the
// report names the class and a collinear witness triple.
ValidationReport validate_coloring(const Geometry& g, const Coloring& c);

// Additionally checks that every point lies in exactly b classes.
ValidationReport validate_fractional(const Geometry& g, const FractionalColoring& c);

bool is_arc_proper(const Geometry& g, const Coloring& c);
bool is_fractional_arc_proper(const Geometry& g, const FractionalColoring& c);

// Exact maximum arc size by branch and bound.  Capped at q <= 8 for planes
// and n <= 10 for grids; beyond that throws (closed forms cover the planes).
int max_arc_size(const Geometry& g);

// Self-contained lower-bound witnesses for the arc chromatic number.  Each
// certificate can be rechecked from its own numbers without re-running any
// search.
struct BoundCertificate {
  enum class Kind { Pigeonhole, KaramataEvenQ };

  Kind kind{};
  GeometryDescriptor geometry{};
  int bound = 0;

  // pigeonhole: k >= ceil(points / max_arc_bound)
  long long points = 0;
  long long max_arc_bound = 0;

  // Karamata counting for even plane order q: any q-class partition of
  // PG(2,q) into arcs would need at least `pair_sum_required` collinear
  // point pairs inside classes, but the plane's lines tolerate only
  // `pair_sum_available`.
  int q = 0;
  long long pair_sum_required = 0;
  long long pair_sum_available = 0;

  bool recheck() const;
};

const char* to_string(BoundCertificate::Kind kind);

std::vector<BoundCertificate> lower_bound_certificates(const Geometry& g);

// Closed-form upper bound on the maximum arc size used by the certificates:
// q+1 / q+2 for planes (odd / even order), 2n for grids.
long long max_arc_closed_form_bound(const Geometry& g);

}  // namespace arcchroma::verify
