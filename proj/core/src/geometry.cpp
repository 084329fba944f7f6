#include "arcchroma/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arcchroma {
namespace {

// Largest plane/grid order we build structures for.  The binding constraint
// is the dense pair->line index, quadratic in the point count.
constexpr int kMaxPlaneOrder = 64;
constexpr int kMaxGridSide = 64;

std::size_t pair_key(PointId a, PointId b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * (b - 1) / 2 + static_cast<std::size_t>(a);
}

}  // namespace

const char* to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::ProjectivePlane: return "pg";
    case GeometryKind::AffinePlane: return "ag";
    case GeometryKind::Grid: return "grid";
  }
  throw std::logic_error("bad geometry kind");
}

GeometryKind geometry_kind_from_string(const std::string& s) {
  if (s == "pg") return GeometryKind::ProjectivePlane;
  if (s == "ag") return GeometryKind::AffinePlane;
  if (s == "grid") return GeometryKind::Grid;
  throw std::invalid_argument("unknown geometry kind: " + s);
}

std::array<std::uint32_t, 3> Geometry::normalize_projective(const Field& f,
                                                            std::array<std::uint32_t, 3> v) {
  for (std::uint32_t c : v)
    if (c >= f.order()) throw std::invalid_argument("coordinate out of field range");
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i] != 0) {
      first = i;
      break;
    }
  if (first < 0) throw std::invalid_argument("the zero triple is not a projective point");
  const std::uint32_t scale = f.inv(v[first]);
  for (int i = 0; i < 3; ++i) v[i] = f.mul(v[i], scale);
  return v;
}

Geometry Geometry::projective_plane(int q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw std::invalid_argument("projective plane order must be a prime power");
  if (q > kMaxPlaneOrder) throw std::invalid_argument("plane order above the supported cap");
  const Field& f = Field::get(pm->first, pm->second);

  Geometry g;
  g.kind_ = GeometryKind::ProjectivePlane;
  g.param_ = q;
  g.field_ = &f;

  const std::uint32_t Q = f.order();
  // lexicographic enumeration keeps PointId order canonical
  for (std::uint32_t x = 0; x < Q; ++x)
    for (std::uint32_t y = 0; y < Q; ++y)
      for (std::uint32_t z = 0; z < Q; ++z) {
        std::uint32_t first = x ? x : (y ? y : z);
        if (first != 1) continue;
        g.coords_.push_back({x, y, z});
      }
  g.npoints_ = static_cast<std::int32_t>(g.coords_.size());
  if (g.npoints_ != q * q + q + 1) throw std::logic_error("projective point count mismatch");

  // lines are the same normalized triples, read as coefficient vectors
  g.line_offsets_.push_back(0);
  for (const auto& abc : g.coords_) {
    for (PointId p = 0; p < g.npoints_; ++p) {
      const auto& xyz = g.coords_[p];
      std::uint32_t dot = f.add(f.add(f.mul(abc[0], xyz[0]), f.mul(abc[1], xyz[1])),
                                f.mul(abc[2], xyz[2]));
      if (dot == 0) g.line_data_.push_back(p);
    }
    g.line_offsets_.push_back(static_cast<std::int32_t>(g.line_data_.size()));
    const std::int32_t sz = g.line_offsets_.back() - g.line_offsets_[g.line_offsets_.size() - 2];
    if (sz != q + 1) throw std::logic_error("projective line size mismatch");
  }

  g.index_lines();
  return g;
}

Geometry Geometry::affine_plane(int q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw std::invalid_argument("affine plane order must be a prime power");
  if (q > kMaxPlaneOrder) throw std::invalid_argument("plane order above the supported cap");
  const Field& f = Field::get(pm->first, pm->second);

  Geometry g;
  g.kind_ = GeometryKind::AffinePlane;
  g.param_ = q;
  g.field_ = &f;

  const std::uint32_t Q = f.order();
  for (std::uint32_t x = 0; x < Q; ++x)
    for (std::uint32_t y = 0; y < Q; ++y) g.coords_.push_back({x, y, 1});
  g.npoints_ = static_cast<std::int32_t>(g.coords_.size());

  // Coefficient triples [a:b:c] of the projective lines other than z = 0,
  // i.e. (a,b) != (0,0), normalized and in lexicographic order.
  g.line_offsets_.push_back(0);
  auto emit_line = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    for (PointId p = 0; p < g.npoints_; ++p) {
      const auto& xy = g.coords_[p];
      std::uint32_t dot = f.add(f.add(f.mul(a, xy[0]), f.mul(b, xy[1])), c);
      if (dot == 0) g.line_data_.push_back(p);
    }
    g.line_offsets_.push_back(static_cast<std::int32_t>(g.line_data_.size()));
    const std::int32_t sz = g.line_offsets_.back() - g.line_offsets_[g.line_offsets_.size() - 2];
    if (sz != q) throw std::logic_error("affine line size mismatch");
  };
  for (std::uint32_t c = 0; c < Q; ++c) emit_line(0, 1, c);
  for (std::uint32_t b = 0; b < Q; ++b)
    for (std::uint32_t c = 0; c < Q; ++c) emit_line(1, b, c);

  if (g.line_count() != q * q + q) throw std::logic_error("affine line count mismatch");
  g.index_lines();
  return g;
}

Geometry Geometry::grid(int n) {
  if (n < 1 || n > kMaxGridSide) throw std::invalid_argument("grid side must be in [1, 64]");

  Geometry g;
  g.kind_ = GeometryKind::Grid;
  g.param_ = n;
  g.npoints_ = static_cast<std::int32_t>(n) * n;

  auto id_of = [n](int x, int y) { return static_cast<PointId>((x - 1) * n + (y - 1)); };
  auto inside = [n](int x, int y) { return 1 <= x && x <= n && 1 <= y && y <= n; };

  g.line_offsets_.push_back(0);
  auto walk_direction = [&](int dx, int dy) {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        if (inside(x - dx, y - dy)) continue;  // not the head of its chain
        std::vector<PointId> pts;
        for (int cx = x, cy = y; inside(cx, cy); cx += dx, cy += dy)
          pts.push_back(id_of(cx, cy));
        if (pts.size() < 2) continue;
        std::sort(pts.begin(), pts.end());
        g.line_data_.insert(g.line_data_.end(), pts.begin(), pts.end());
        g.line_offsets_.push_back(static_cast<std::int32_t>(g.line_data_.size()));
      }
  };
  walk_direction(0, 1);
  for (int dx = 1; dx < n; ++dx)
    for (int dy = -(n - 1); dy <= n - 1; ++dy)
      if (std::gcd(dx, std::abs(dy)) == 1) walk_direction(dx, dy);

  g.index_lines();
  return g;
}

Geometry Geometry::from_descriptor(const GeometryDescriptor& d) {
  switch (d.kind) {
    case GeometryKind::ProjectivePlane: return projective_plane(d.param);
    case GeometryKind::AffinePlane: return affine_plane(d.param);
    case GeometryKind::Grid: return grid(d.param);
  }
  throw std::logic_error("bad geometry descriptor");
}

void Geometry::index_lines() {
  const std::int32_t nl = line_count();

  std::vector<std::int32_t> degree(npoints_, 0);
  for (PointId p : line_data_) ++degree[p];
  point_line_offsets_.assign(npoints_ + 1, 0);
  for (PointId p = 0; p < npoints_; ++p)
    point_line_offsets_[p + 1] = point_line_offsets_[p] + degree[p];
  point_line_data_.resize(line_data_.size());
  std::vector<std::int32_t> cursor(point_line_offsets_.begin(), point_line_offsets_.end() - 1);
  for (std::int32_t li = 0; li < nl; ++li)
    for (PointId p : line(li)) point_line_data_[cursor[p]++] = li;

  if (npoints_ >= 2) {
    pair_line_.assign(static_cast<std::size_t>(npoints_) * (npoints_ - 1) / 2, -1);
    for (std::int32_t li = 0; li < nl; ++li) {
      const auto pts = line(li);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          std::int32_t& slot = pair_line_[pair_key(pts[i], pts[j])];
          if (slot != -1) throw std::logic_error("point pair covered by two lines");
          slot = li;
        }
    }
    for (std::int32_t v : pair_line_)
      if (v == -1) throw std::logic_error("point pair not covered by any line");
  }
}

std::span<const PointId> Geometry::line(std::int32_t li) const {
  if (li < 0 || li >= line_count()) throw std::out_of_range("line index out of range");
  return {line_data_.data() + line_offsets_[li],
          static_cast<std::size_t>(line_offsets_[li + 1] - line_offsets_[li])};
}

std::span<const std::int32_t> Geometry::lines_through(PointId p) const {
  if (p < 0 || p >= npoints_) throw std::out_of_range("point id out of range");
  return {point_line_data_.data() + point_line_offsets_[p],
          static_cast<std::size_t>(point_line_offsets_[p + 1] - point_line_offsets_[p])};
}

std::int32_t Geometry::line_through_pair(PointId a, PointId b) const {
  if (a < 0 || a >= npoints_ || b < 0 || b >= npoints_)
    throw std::out_of_range("point id out of range");
  if (a == b) throw std::invalid_argument("a pair needs two distinct points");
  return pair_line_[pair_key(a, b)];
}

bool Geometry::line_contains(std::int32_t li, PointId p) const {
  const auto pts = line(li);
  return std::binary_search(pts.begin(), pts.end(), p);
}

bool Geometry::collinear(PointId a, PointId b, PointId c) const {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("collinearity needs three distinct points");
  if (a < 0 || a >= npoints_ || b < 0 || b >= npoints_ || c < 0 || c >= npoints_)
    throw std::out_of_range("point id out of range");
  if (kind_ == GeometryKind::Grid) {
    const auto [x1, y1] = grid_coords(a);
    const auto [x2, y2] = grid_coords(b);
    const auto [x3, y3] = grid_coords(c);
    const long long det = static_cast<long long>(x2 - x1) * (y3 - y1) -
                          static_cast<long long>(x3 - x1) * (y2 - y1);
    return det == 0;
  }
  const Field& f = *field_;
  const auto& A = coords_[a];
  const auto& B = coords_[b];
  const auto& C = coords_[c];
  const std::uint32_t m1 = f.sub(f.mul(B[1], C[2]), f.mul(C[1], B[2]));
  const std::uint32_t m2 = f.sub(f.mul(B[0], C[2]), f.mul(C[0], B[2]));
  const std::uint32_t m3 = f.sub(f.mul(B[0], C[1]), f.mul(C[0], B[1]));
  const std::uint32_t det =
      f.add(f.sub(f.mul(A[0], m1), f.mul(A[1], m2)), f.mul(A[2], m3));
  return det == 0;
}

std::array<std::uint32_t, 3> Geometry::coords(PointId p) const {
  if (p < 0 || p >= npoints_) throw std::out_of_range("point id out of range");
  if (kind_ == GeometryKind::Grid) {
    const auto [x, y] = grid_coords(p);
    return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), 1};
  }
  return coords_[p];
}

std::pair<int, int> Geometry::grid_coords(PointId p) const {
  if (kind_ != GeometryKind::Grid) throw std::logic_error("grid coordinates on a plane");
  if (p < 0 || p >= npoints_) throw std::out_of_range("point id out of range");
  return {static_cast<int>(p) / param_ + 1, static_cast<int>(p) % param_ + 1};
}

PointId Geometry::point_from_projective(std::uint32_t x, std::uint32_t y,
                                        std::uint32_t z) const {
  if (kind_ != GeometryKind::ProjectivePlane)
    throw std::logic_error("projective lookup on a non-projective geometry");
  const auto key = normalize_projective(*field_, {x, y, z});
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), key);
  if (it == coords_.end() || *it != key) throw std::logic_error("projective point not found");
  return static_cast<PointId>(it - coords_.begin());
}

PointId Geometry::point_from_affine(std::uint32_t x, std::uint32_t y) const {
  if (kind_ != GeometryKind::AffinePlane)
    throw std::logic_error("affine lookup on a non-affine geometry");
  const std::uint32_t Q = field_->order();
  if (x >= Q || y >= Q) throw std::invalid_argument("affine coordinate out of range");
  return static_cast<PointId>(x * Q + y);
}

PointId Geometry::point_from_grid(int x, int y) const {
  if (kind_ != GeometryKind::Grid) throw std::logic_error("grid lookup on a plane");
  if (x < 1 || x > param_ || y < 1 || y > param_)
    throw std::invalid_argument("grid coordinate out of range");
  return static_cast<PointId>((x - 1) * param_ + (y - 1));
}

}  // namespace arcchroma
