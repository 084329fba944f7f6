#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcchroma/field.hpp"

namespace arcchroma {

using PointId = std::int32_t;

enum class GeometryKind { ProjectivePlane, AffinePlane, Grid };

const char* to_string(GeometryKind kind);
GeometryKind geometry_kind_from_string(const std::string& s);

struct GeometryDescriptor {
  GeometryKind kind{};
  int param = 0;  // q for planes, n for grids
  friend bool operator==(const GeometryDescriptor&, const GeometryDescriptor&) = default;
};

// A point-line incidence structure over a dense PointId range, together with
// a collinearity oracle.  Three flavors:
//
//   PG(2,q):  q^2+q+1 points as normalized homogeneous triples (first
//             nonzero coordinate 1), in lexicographic encoding order; the
//             q^2+q+1 lines of q+1 points each.
//   AG(2,q):  the PG(2,q) points with z != 0, i.e. pairs (x, y), in
//             lexicographic order; traces of the PG lines other than z = 0.
//   Grid(n):  the n x n integer grid, 1-based, row-major by (x, y); stored
//             lines are the maximal collinear subsets with >= 2 points, so
//             every pair of points lies in exactly one stored line.
//
// The collinearity test is always the 3x3 determinant (over GF(q) for the
// planes, over the integers for grids) and agrees with stored-line
// membership.
class Geometry {
 public:
  static Geometry projective_plane(int q);
  static Geometry affine_plane(int q);
  static Geometry grid(int n);
  static Geometry from_descriptor(const GeometryDescriptor& d);

  GeometryKind kind() const { return kind_; }
  int param() const { return param_; }
  GeometryDescriptor descriptor() const { return {kind_, param_}; }
  const Field* field() const { return field_; }  // null for grids

  std::int32_t point_count() const { return npoints_; }
  std::int32_t line_count() const { return static_cast<std::int32_t>(line_offsets_.size()) - 1; }

  std::span<const PointId> line(std::int32_t li) const;
  std::span<const std::int32_t> lines_through(PointId p) const;
  std::int32_t line_through_pair(PointId a, PointId b) const;
  bool line_contains(std::int32_t li, PointId p) const;

  // Determinant oracle; requires three distinct points.
  bool collinear(PointId a, PointId b, PointId c) const;

  // Coordinate access.  Projective triples are (x, y, z) encodings; affine
  // points report (x, y, 1); grid points are 1-based (x, y, 1).
  std::array<std::uint32_t, 3> coords(PointId p) const;
  std::pair<int, int> grid_coords(PointId p) const;

  PointId point_from_projective(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;
  PointId point_from_affine(std::uint32_t x, std::uint32_t y) const;
  PointId point_from_grid(int x, int y) const;

  // Scales a homogeneous triple so its first nonzero coordinate is 1.
  static std::array<std::uint32_t, 3> normalize_projective(const Field& f,
                                                           std::array<std::uint32_t, 3> v);

 private:
  Geometry() = default;
  void index_lines();  // fills per-point lists and the pair index

  GeometryKind kind_{};
  int param_ = 0;
  const Field* field_ = nullptr;
  std::int32_t npoints_ = 0;

  std::vector<std::array<std::uint32_t, 3>> coords_;  // planes only
  std::vector<std::int32_t> line_offsets_;
  std::vector<PointId> line_data_;
  std::vector<std::int32_t> point_line_offsets_;
  std::vector<std::int32_t> point_line_data_;
  std::vector<std::int32_t> pair_line_;  // triangular pair -> line index
};

}  // namespace arcchroma
