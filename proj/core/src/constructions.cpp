#include "arcchroma/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcchroma::constructions {

Coloring pg_cyclic_coloring(const CyclicModel& model) {
  const Geometry& pg = model.plane();
  const int n = model.modulus();

  // translates t with 0 in D + t, i.e. the lines through residue 0
  std::vector<int> ts;
  for (int d : model.difference_set()) ts.push_back((n - d) % n);
  std::sort(ts.begin(), ts.end());

  Coloring c;
  c.geometry = pg.descriptor();
  c.k = model.q() + 1;
  c.color_of.assign(pg.point_count(), -1);

  for (int j = 0; j < static_cast<int>(ts.size()); ++j) {
    // every negated line through 0 contains 0; only the first class keeps it
    for (int r : model.negate(model.line_residues(ts[j]))) {
      if (r == 0 && j > 0) continue;
      PointId p = model.point_of_residue(r);
      if (c.color_of[p] != -1) throw std::logic_error("negated lines through 0 overlap");
      c.color_of[p] = j;
    }
  }
  for (int col : c.color_of)
    if (col == -1) throw std::logic_error("negated lines through 0 miss a point");
  return c;
}

Coloring pg_cyclic_coloring(int q) { return pg_cyclic_coloring(CyclicModel::build(q)); }

Coloring ag_parabola_coloring(int q) {
  const auto pm = prime_power_decomposition(q);
  if (!pm) throw std::invalid_argument("plane order must be a prime power");
  const Field& f = Field::get(pm->first, pm->second);
  Geometry ag = Geometry::affine_plane(q);

  Coloring c;
  c.geometry = ag.descriptor();
  c.k = q;
  c.color_of.assign(ag.point_count(), -1);
  for (PointId p = 0; p < ag.point_count(); ++p) {
    const auto xy = ag.coords(p);
    c.color_of[p] = static_cast<int>(f.sub(xy[1], f.mul(xy[0], xy[0])));
  }
  return c;
}

FractionalColoring pg_fractional_coloring(const CyclicModel& model) {
  const int q = model.q();
  const bool even = q % 2 == 0;

  FractionalColoring c;
  c.geometry = model.plane().descriptor();
  c.k = model.modulus();
  c.b = even ? q + 2 : q + 1;
  c.classes.reserve(c.k);

  std::vector<PointId> nuclei;
  if (even) nuclei = nucleus_bijection(model);

  for (int t = 0; t < c.k; ++t) {
    auto pts = model.points_of_residues(model.negate(model.line_residues(t)));
    if (even) {
      pts.push_back(nuclei[t]);
      std::sort(pts.begin(), pts.end());
    }
    c.classes.push_back(std::move(pts));
  }
  return c;
}

FractionalColoring pg_fractional_coloring(int q) {
  return pg_fractional_coloring(CyclicModel::build(q));
}

int smallest_prime_at_least(int n) {
  if (n > (1 << 20)) throw std::invalid_argument("prime search bound too large");
  int k = std::max(n, 2);
  while (!is_prime(k)) ++k;
  return k;
}

Coloring grid_embedding_coloring(int n) {
  if (n < 1) throw std::invalid_argument("grid side must be positive");
  const int q = smallest_prime_at_least(n);
  Geometry grid = Geometry::grid(n);

  // restriction of the AG(2,q) parabola coloring to the embedded grid,
  // with (x, y) |-> (x-1, y-1) as the embedding
  std::vector<int> raw(grid.point_count());
  for (PointId p = 0; p < grid.point_count(); ++p) {
    const auto [x, y] = grid.grid_coords(p);
    raw[p] = static_cast<int>((((y - 1) - static_cast<long long>(x - 1) * (x - 1)) % q + q) % q);
  }

  std::vector<int> remap(q, -1);
  int next = 0;
  for (int r = 0; r < q; ++r)
    if (std::find(raw.begin(), raw.end(), r) != raw.end()) remap[r] = next++;

  Coloring c;
  c.geometry = grid.descriptor();
  c.k = next;
  c.color_of.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) c.color_of[i] = remap[raw[i]];
  return c;
}

}  // namespace arcchroma::constructions
