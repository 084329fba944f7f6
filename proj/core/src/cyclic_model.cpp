#include "arcchroma/cyclic_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arcchroma/verify.hpp"

namespace arcchroma {
namespace {

// Smallest sorted rotation among the translates of D that contain 0.
std::vector<int> canonicalize_difference_set(const std::vector<int>& d, int n) {
  std::vector<int> best;
  for (int x : d) {
    const int t = (n - x) % n;  // D + t contains 0
    std::vector<int> cand;
    cand.reserve(d.size());
    for (int y : d) cand.push_back((y + t) % n);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

void check_perfect_difference_set(const std::vector<int>& d, int n) {
  std::vector<int> hits(n, 0);
  for (int a : d)
    for (int b : d)
      if (a != b) ++hits[((a - b) % n + n) % n];
  for (int r = 1; r < n; ++r)
    if (hits[r] != 1)
      throw std::logic_error("difference-set property failed at residue " + std::to_string(r));
}

}  // namespace

CyclicModel CyclicModel::build(int q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw std::invalid_argument("cyclic model order must be a prime power");
  const auto [p, k] = *pm;

  CyclicModel model(Geometry::projective_plane(q));
  model.q_ = q;
  model.n_ = q * q + q + 1;

  const Field& ambient = Field::get(p, 3 * k);
  const Field& base = Field::get(p, k);
  const SubfieldEmbedding& emb = subfield_embedding(ambient, base);
  const std::uint32_t g = ambient.primitive_element();

  // Coordinates of every ambient element over GF(q) in the basis {1, g, g^2}.
  // g generates GF(q^3) over GF(q), so this is a basis.
  const std::uint32_t g2 = ambient.mul(g, g);
  std::vector<std::array<std::uint32_t, 3>> coord_of(ambient.order(), {0, 0, 0});
  std::vector<bool> seen(ambient.order(), false);
  for (std::uint32_t c2 = 0; c2 < base.order(); ++c2) {
    const std::uint32_t t2 = ambient.mul(emb.to_ambient[c2], g2);
    for (std::uint32_t c1 = 0; c1 < base.order(); ++c1) {
      const std::uint32_t t1 = ambient.add(t2, ambient.mul(emb.to_ambient[c1], g));
      for (std::uint32_t c0 = 0; c0 < base.order(); ++c0) {
        const std::uint32_t v = ambient.add(t1, emb.to_ambient[c0]);
        if (seen[v]) throw std::logic_error("basis expansion collided");
        seen[v] = true;
        coord_of[v] = {c0, c1, c2};
      }
    }
  }

  model.residue_to_point_.assign(model.n_, -1);
  model.point_to_residue_.assign(model.n_, -1);
  std::vector<int> raw_d;
  std::uint32_t power = 1;  // g^0
  for (int i = 0; i < model.n_; ++i) {
    const auto& c = coord_of[power];
    const auto norm = Geometry::normalize_projective(base, {c[0], c[1], c[2]});
    const PointId pid = model.plane_.point_from_projective(norm[0], norm[1], norm[2]);
    if (model.point_to_residue_[pid] != -1)
      throw std::logic_error("residue-to-point map is not injective");
    model.residue_to_point_[i] = pid;
    model.point_to_residue_[pid] = i;
    if (trace_in_ambient(ambient, power, static_cast<std::uint32_t>(q)) == 0)
      raw_d.push_back(i);
    power = ambient.mul(power, g);
  }
  if (static_cast<int>(raw_d.size()) != q + 1)
    throw std::logic_error("trace-zero residue count mismatch");

  model.diff_set_ = canonicalize_difference_set(raw_d, model.n_);
  check_perfect_difference_set(model.diff_set_, model.n_);

  // Every translate D + t must map onto a stored line of the plane, and all
  // translates together must exhaust the lines.
  std::vector<bool> line_hit(model.plane_.line_count(), false);
  for (int t = 0; t < model.n_; ++t) {
    const auto ids = model.points_of_residues(model.line_residues(t));
    const std::int32_t li = model.plane_.line_through_pair(ids[0], ids[1]);
    const auto stored = model.plane_.line(li);
    if (!std::equal(ids.begin(), ids.end(), stored.begin(), stored.end()))
      throw std::logic_error("translate does not match a coordinate line");
    if (line_hit[li]) throw std::logic_error("two translates map to one line");
    line_hit[li] = true;
  }

  return model;
}

PointId CyclicModel::point_of_residue(int r) const {
  if (r < 0 || r >= n_) throw std::out_of_range("residue out of range");
  return residue_to_point_[r];
}

int CyclicModel::residue_of_point(PointId p) const {
  if (p < 0 || p >= static_cast<PointId>(point_to_residue_.size()))
    throw std::out_of_range("point id out of range");
  return point_to_residue_[p];
}

std::vector<int> CyclicModel::line_residues(int t) const {
  if (t < 0 || t >= n_) throw std::out_of_range("translate out of range");
  std::vector<int> out;
  out.reserve(diff_set_.size());
  for (int d : diff_set_) out.push_back((d + t) % n_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CyclicModel::negate(std::span<const int> s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) {
    if (x < 0 || x >= n_) throw std::out_of_range("residue out of range");
    out.push_back((n_ - x) % n_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointId> CyclicModel::points_of_residues(std::span<const int> s) const {
  std::vector<PointId> out;
  out.reserve(s.size());
  for (int x : s) out.push_back(point_of_residue(x));
  std::sort(out.begin(), out.end());
  return out;
}

Nucleus nucleus_of(const Geometry& pg, std::span<const PointId> arc) {
  if (pg.kind() != GeometryKind::ProjectivePlane)
    throw std::invalid_argument("nucleus is defined on projective planes");
  const int q = pg.param();
  if (q % 2 != 0) throw std::invalid_argument("nucleus needs even plane order");
  if (static_cast<int>(arc.size()) != q + 1)
    throw std::invalid_argument("nucleus needs an arc of size q+1");
  if (!verify::is_arc(pg, arc)) throw std::invalid_argument("input set is not an arc");

  std::vector<bool> in_arc(pg.point_count(), false);
  for (PointId p : arc) in_arc[p] = true;

  // Each point of a (q+1)-arc in even order lies on exactly one tangent.
  std::vector<std::int32_t> tangents;
  for (PointId p : arc) {
    std::int32_t tangent = -1;
    for (std::int32_t li : pg.lines_through(p)) {
      int meet = 0;
      for (PointId r : pg.line(li)) meet += in_arc[r] ? 1 : 0;
      if (meet == 1) {
        if (tangent != -1) throw std::logic_error("arc point with two tangents");
        tangent = li;
      }
    }
    if (tangent == -1) throw std::logic_error("arc point without a tangent");
    tangents.push_back(tangent);
  }

  // All tangents are concurrent; intersect the first two and check the rest.
  const auto l0 = pg.line(tangents[0]);
  const auto l1 = pg.line(tangents[1]);
  PointId nucleus = -1;
  for (PointId p : l0)
    if (std::binary_search(l1.begin(), l1.end(), p)) {
      nucleus = p;
      break;
    }
  if (nucleus == -1) throw std::logic_error("tangents do not meet");
  for (std::int32_t li : tangents)
    if (!pg.line_contains(li, nucleus))
      throw std::logic_error("tangents are not concurrent");
  if (in_arc[nucleus]) throw std::logic_error("nucleus landed on the arc");

  std::vector<PointId> extended(arc.begin(), arc.end());
  extended.push_back(nucleus);
  std::sort(extended.begin(), extended.end());
  if (!verify::is_arc(pg, extended))
    throw std::logic_error("nucleus does not extend the arc");

  Nucleus out;
  out.point = nucleus;
  out.arc.assign(arc.begin(), arc.end());
  return out;
}

std::vector<PointId> nucleus_bijection(const CyclicModel& model) {
  if (model.q() % 2 != 0)
    throw std::invalid_argument("nucleus bijection needs even plane order");
  std::vector<PointId> out(model.modulus(), -1);
  std::vector<bool> used(model.plane().point_count(), false);
  for (int t = 0; t < model.modulus(); ++t) {
    const auto arc = model.points_of_residues(model.negate(model.line_residues(t)));
    const PointId nuc = nucleus_of(model.plane(), arc).point;
    if (used[nuc]) throw std::logic_error("two lines share a nucleus");
    used[nuc] = true;
    out[t] = nuc;
  }
  return out;
}

}  // namespace arcchroma
