#pragma once

#include <vector>

#include "arcchroma/geometry.hpp"

namespace arcchroma {

// Total assignment of one color in [0, k) to every point of a geometry.
// Every color class is expected to be nonempty; builders renumber classes
// when necessary to keep that invariant.
struct Coloring {
  GeometryDescriptor geometry{};
  int k = 0;
  std::vector<int> color_of;

  std::vector<std::vector<PointId>> classes() const {
    std::vector<std::vector<PointId>> out(k);
    for (PointId p = 0; p < static_cast<PointId>(color_of.size()); ++p)
      out[color_of[p]].push_back(p);
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// (k : b) coloring: k classes, every point a member of exactly b of them.
// Stored class-centric; ids inside a class are sorted.
struct FractionalColoring {
  GeometryDescriptor geometry{};
  int k = 0;
  int b = 1;
  std::vector<std::vector<PointId>> classes;

  friend bool operator==(const FractionalColoring&, const FractionalColoring&) = default;
};

// A point set that should contain no three collinear points.  `certified`
// records that the trusted oracle has confirmed this.
struct ArcSet {
  GeometryDescriptor geometry{};
  std::vector<PointId> points;
  bool certified = false;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

}  // namespace arcchroma
