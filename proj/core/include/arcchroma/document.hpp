#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcchroma/coloring.hpp"
#include "arcchroma/geometry.hpp"
#include "arcchroma/solver.hpp"
#include "arcchroma/verify.hpp"

// JSON interchange layer.  Serializers emit two-space indented JSON with
// alphabetically sorted keys and a trailing newline, so equal inputs always
// produce byte-equal text.  Wall-clock timings never enter a document.
// Parsers are strict: unknown keys, missing keys, wrong types, out-of-range
// coordinates and a non-canonical field modulus are all rejected.
namespace arcchroma::doc {

constexpr int kSchemaVersion = 1;

class DocumentError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coloring documents carry classes as native coordinates ([x,y,z] encodings
// for projective planes, [x,y] encodings for affine planes, 1-based [x,y]
// for grids) plus a free-text provenance.  b is omitted when 1.
std::string coloring_document(const Geometry& g, const Coloring& c,
                              const std::string& provenance);
std::string coloring_document(const Geometry& g, const FractionalColoring& c,
                              const std::string& provenance);

std::string geometry_document(const Geometry& g);
std::string arc_list_document(const Geometry& g, const std::vector<ArcSet>& arcs);
std::string bounds_document(const Geometry& g,
                            const std::vector<verify::BoundCertificate>& certs);
std::string search_outcome_document(const Geometry& g, int k,
                                    const solver::SearchOutcome& out);
std::string chi_document(const solver::ChiEvidence& ev);
std::string verdict_document(const Geometry& g, int k, int b,
                             const verify::ValidationReport& report);
std::string fixture_list_document();

struct LoadedColoring {
  explicit LoadedColoring(Geometry g) : geometry(std::move(g)) {}

  Geometry geometry;
  int k = 0;
  int b = 1;
  std::vector<std::vector<PointId>> classes;
  std::string provenance;
};

LoadedColoring parse_coloring_document(const std::string& text);

// b == 1 only; every point must appear in exactly one class.
Coloring integral_coloring(const LoadedColoring& loaded);
FractionalColoring fractional_coloring(const LoadedColoring& loaded);

struct LoadedArcList {
  explicit LoadedArcList(Geometry g) : geometry(std::move(g)) {}

  Geometry geometry;
  int size = 0;
  std::vector<ArcSet> arcs;
};

LoadedArcList parse_arc_list_document(const std::string& text);

// "pg:4", "ag:8", "grid:9"
GeometryDescriptor parse_geometry_arg(const std::string& arg);

}  // namespace arcchroma::doc
