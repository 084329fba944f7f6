#include "arcchroma/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace arcchroma::verify {
namespace {

std::optional<std::array<PointId, 3>> find_collinear_triple(const Geometry& g,
                                                            std::span<const PointId> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t l = j + 1; l < pts.size(); ++l)
        if (g.collinear(pts[i], pts[j], pts[l]))
          return std::array<PointId, 3>{pts[i], pts[j], pts[l]};
  return std::nullopt;
}

void check_point_range(const Geometry& g, std::span<const PointId> pts) {
  for (PointId p : pts)
    if (p < 0 || p >= g.point_count()) throw std::out_of_range("point id out of range");
}

std::vector<PointId> as_point_set(const Geometry& g, std::span<const PointId> pts) {
  check_point_range(g, pts);
  std::vector<PointId> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

bool is_arc(const Geometry& g, std::span<const PointId> pts) {
  const auto set = as_point_set(g, pts);
  return !find_collinear_triple(g, set).has_value();
}

bool is_arc_line_index(const Geometry& g, std::span<const PointId> pts) {
  const auto set = as_point_set(g, pts);
  std::unordered_map<std::int32_t, int> per_line;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const std::int32_t li = g.line_through_pair(set[i], set[j]);
      // a line holding t points of the set contributes C(t,2) pairs; any
      // count of 3 pairs or more means t >= 3
      if (++per_line[li] >= 3) return false;
    }
  return true;
}

ValidationReport validate_coloring(const Geometry& g, const Coloring& c) {
  if (c.geometry != g.descriptor())
    throw std::invalid_argument("coloring belongs to a different geometry");
  if (static_cast<std::int32_t>(c.color_of.size()) != g.point_count())
    throw std::invalid_argument("coloring is not total");
  if (c.k < 1) throw std::invalid_argument("coloring needs at least one class");
  for (int col : c.color_of)
    if (col < 0 || col >= c.k) throw std::invalid_argument("color out of range");

  for (int cls = 0; cls < c.k; ++cls) {
    std::vector<PointId> members;
    for (PointId p = 0; p < g.point_count(); ++p)
      if (c.color_of[p] == cls) members.push_back(p);
    if (const auto triple = find_collinear_triple(g, members)) {
      ValidationReport r;
      r.ok = false;
      Violation v;
      v.color = cls;
      v.triple = *triple;
      v.message = "class holds three collinear points";
      r.violation = v;
      return r;
    }
  }
  return {};
}

ValidationReport validate_fractional(const Geometry& g, const FractionalColoring& c) {
  if (c.geometry != g.descriptor())
    throw std::invalid_argument("coloring belongs to a different geometry");
  if (c.k < 1 || static_cast<int>(c.classes.size()) != c.k)
    throw std::invalid_argument("class count mismatch");
  if (c.b < 1) throw std::invalid_argument("multiplicity must be positive");

  std::vector<int> coverage(g.point_count(), 0);
  for (int cls = 0; cls < c.k; ++cls) {
    check_point_range(g, c.classes[cls]);
    for (PointId p : c.classes[cls]) ++coverage[p];
    if (const auto triple = find_collinear_triple(g, c.classes[cls])) {
      ValidationReport r;
      r.ok = false;
      Violation v;
      v.color = cls;
      v.triple = *triple;
      v.message = "class holds three collinear points";
      r.violation = v;
      return r;
    }
  }
  for (PointId p = 0; p < g.point_count(); ++p)
    if (coverage[p] != c.b) {
      ValidationReport r;
      r.ok = false;
      Violation v;
      v.point = p;
      v.expected = c.b;
      v.actual = coverage[p];
      v.message = "point is not covered exactly b times";
      r.violation = v;
      return r;
    }
  return {};
}

bool is_arc_proper(const Geometry& g, const Coloring& c) {
  return validate_coloring(g, c).ok;
}

bool is_fractional_arc_proper(const Geometry& g, const FractionalColoring& c) {
  return validate_fractional(g, c).ok;
}

namespace {

struct MaxArcSearch {
  const Geometry& g;
  std::vector<PointId> current;
  int best = 0;

  explicit MaxArcSearch(const Geometry& geom) : g(geom) {}

  void extend(const std::vector<PointId>& candidates) {
    best = std::max(best, static_cast<int>(current.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (static_cast<int>(current.size() + candidates.size() - i) <= best) return;
      const PointId c = candidates[i];
      std::vector<PointId> next;
      next.reserve(candidates.size() - i);
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const PointId d = candidates[j];
        bool ok = true;
        for (PointId e : current)
          if (g.collinear(e, c, d)) {
            ok = false;
            break;
          }
        if (ok) next.push_back(d);
      }
      current.push_back(c);
      extend(next);
      current.pop_back();
    }
  }
};

}  // namespace

int max_arc_size(const Geometry& g) {
  if (g.kind() == GeometryKind::Grid) {
    if (g.param() > 10) throw std::invalid_argument("exact arc search capped at n <= 10");
  } else if (g.param() > 8) {
    throw std::invalid_argument("exact arc search capped at q <= 8");
  }
  std::vector<PointId> all(g.point_count());
  for (PointId p = 0; p < g.point_count(); ++p) all[p] = p;
  MaxArcSearch search(g);
  search.extend(all);
  return search.best;
}

const char* to_string(BoundCertificate::Kind kind) {
  switch (kind) {
    case BoundCertificate::Kind::Pigeonhole: return "pigeonhole";
    case BoundCertificate::Kind::KaramataEvenQ: return "karamata-even-q";
  }
  throw std::logic_error("bad certificate kind");
}

long long max_arc_closed_form_bound(const Geometry& g) {
  if (g.kind() == GeometryKind::Grid)
    return std::min<long long>(2LL * g.param(),
                               static_cast<long long>(g.point_count()));
  return g.param() % 2 == 0 ? g.param() + 2 : g.param() + 1;
}

bool BoundCertificate::recheck() const {
  switch (kind) {
    case Kind::Pigeonhole:
      return points > 0 && max_arc_bound > 0 &&
             bound == ceil_div(points, max_arc_bound);
    case Kind::KaramataEvenQ: {
      if (q < 2 || q % 2 != 0) return false;
      // hypothetical class sizes (q+2, q+1, ..., q+1): descending, q entries,
      // each within the even-order arc cap, summing to the whole plane
      const long long plane = static_cast<long long>(q) * q + q + 1;
      long long total = q + 2 + static_cast<long long>(q - 1) * (q + 1);
      if (total != plane) return false;
      const long long required = choose2(q + 2) + (q - 1) * choose2(q + 1);
      const long long available = (q / 2) * plane;  // q/2 collinear pairs per line
      return required == pair_sum_required && available == pair_sum_available &&
             pair_sum_required > pair_sum_available && bound == q + 1;
    }
  }
  return false;
}

std::vector<BoundCertificate> lower_bound_certificates(const Geometry& g) {
  std::vector<BoundCertificate> out;

  BoundCertificate pigeon;
  pigeon.kind = BoundCertificate::Kind::Pigeonhole;
  pigeon.geometry = g.descriptor();
  pigeon.points = g.point_count();
  pigeon.max_arc_bound = max_arc_closed_form_bound(g);
  pigeon.bound = static_cast<int>(ceil_div(pigeon.points, pigeon.max_arc_bound));
  out.push_back(pigeon);

  if (g.kind() == GeometryKind::ProjectivePlane && g.param() % 2 == 0) {
    const int q = g.param();
    BoundCertificate kara;
    kara.kind = BoundCertificate::Kind::KaramataEvenQ;
    kara.geometry = g.descriptor();
    kara.q = q;
    kara.pair_sum_required = choose2(q + 2) + static_cast<long long>(q - 1) * choose2(q + 1);
    kara.pair_sum_available =
        (q / 2) * (static_cast<long long>(q) * q + q + 1);
    kara.bound = q + 1;
    out.push_back(kara);
  }

  for (const auto& cert : out)
    if (!cert.recheck()) throw std::logic_error("certificate failed its own recheck");
  return out;
}

}  // namespace arcchroma::verify
