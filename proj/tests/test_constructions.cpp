#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "arcchroma/constructions.hpp"
#include "arcchroma/fixtures.hpp"
#include "arcchroma/verify.hpp"
#include "oracles.hpp"

using arcchroma::Coloring;
using arcchroma::CyclicModel;
using arcchroma::Geometry;
using arcchroma::PointId;
namespace cons = arcchroma::constructions;
namespace verify = arcchroma::verify;

namespace {

std::vector<int> class_sizes(const Coloring& c) {
  std::vector<int> sizes(c.k, 0);
  for (int col : c.color_of) ++sizes[col];
  return sizes;
}

// independent check: no collinear triple inside one class
bool no_monochromatic_triple(const Geometry& g, const Coloring& c) {
  for (const auto& t : testoracles::collinear_triples(g))
    if (c.color_of[t[0]] == c.color_of[t[1]] && c.color_of[t[0]] == c.color_of[t[2]])
      return false;
  return true;
}

}  // namespace

TEST_CASE("cyclic coloring of the projective planes") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Geometry pg = Geometry::projective_plane(q);
    const Coloring c = cons::pg_cyclic_coloring(q);
    CHECK(c.k == q + 1);
    CHECK(c.geometry == pg.descriptor());
    CHECK(verify::validate_coloring(pg, c).ok);
    auto sizes = class_sizes(c);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes.front() == q);
    CHECK(sizes.back() == q + 1);
    CHECK(std::count(sizes.begin(), sizes.end(), q) == q);
  }
}

TEST_CASE("cyclic coloring verified against the plain triple scan") {
  for (int q : {2, 3, 4}) {
    const Geometry pg = Geometry::projective_plane(q);
    CHECK(no_monochromatic_triple(pg, cons::pg_cyclic_coloring(q)));
  }
}

TEST_CASE("cyclic coloring accepts a prebuilt model") {
  const CyclicModel m = CyclicModel::build(5);
  const Coloring via_model = cons::pg_cyclic_coloring(m);
  const Coloring via_order = cons::pg_cyclic_coloring(5);
  CHECK(via_model == via_order);
}

TEST_CASE("parabola coloring of the affine planes") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Geometry ag = Geometry::affine_plane(q);
    const Coloring c = cons::ag_parabola_coloring(q);
    CHECK(c.k == q);
    CHECK(verify::validate_coloring(ag, c).ok);
    const auto sizes = class_sizes(c);
    for (int s : sizes) CHECK(s == q);
  }
}

TEST_CASE("parabola color is the residue of y - x^2") {
  const int q = 4;
  const Geometry ag = Geometry::affine_plane(q);
  const auto& f = *ag.field();
  const Coloring c = cons::ag_parabola_coloring(q);
  for (PointId p = 0; p < ag.point_count(); ++p) {
    const auto [x, y, z] = ag.coords(p);
    CHECK(c.color_of[p] == static_cast<int>(f.sub(y, f.mul(x, x))));
  }
}

TEST_CASE("parabola coloring verified against the plain triple scan") {
  for (int q : {2, 3, 4, 5}) {
    const Geometry ag = Geometry::affine_plane(q);
    CHECK(no_monochromatic_triple(ag, cons::ag_parabola_coloring(q)));
  }
}

TEST_CASE("fractional covering of the projective planes") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Geometry pg = Geometry::projective_plane(q);
    const auto c = cons::pg_fractional_coloring(q);
    const int n = q * q + q + 1;
    CHECK(c.k == n);
    CHECK(c.b == (q % 2 == 0 ? q + 2 : q + 1));
    for (const auto& cls : c.classes)
      CHECK(static_cast<int>(cls.size()) == c.b);
    CHECK(verify::validate_fractional(pg, c).ok);
    // strictly better than any integral coloring: k/b < q+1
    CHECK(c.k < (q + 1) * c.b);
    // and exactly the pigeonhole floor: k * max_arc == points * b
    CHECK(static_cast<long long>(c.k) * verify::max_arc_closed_form_bound(pg) ==
          static_cast<long long>(n) * c.b);
  }
}

TEST_CASE("fractional classes for even order carry the nucleus") {
  const int q = 4;
  const CyclicModel m = CyclicModel::build(q);
  const auto c = cons::pg_fractional_coloring(m);
  const auto nb = arcchroma::nucleus_bijection(m);
  for (int t = 0; t < m.modulus(); ++t) {
    auto expected = m.points_of_residues(m.negate(m.line_residues(t)));
    expected.push_back(nb[t]);
    std::sort(expected.begin(), expected.end());
    CHECK(c.classes[t] == expected);
  }
}

TEST_CASE("smallest prime lookup") {
  CHECK(cons::smallest_prime_at_least(1) == 2);
  CHECK(cons::smallest_prime_at_least(2) == 2);
  CHECK(cons::smallest_prime_at_least(3) == 3);
  CHECK(cons::smallest_prime_at_least(4) == 5);
  CHECK(cons::smallest_prime_at_least(6) == 7);
  CHECK(cons::smallest_prime_at_least(8) == 11);
  CHECK(cons::smallest_prime_at_least(12) == 13);
  CHECK(cons::smallest_prime_at_least(14) == 17);
  CHECK(cons::smallest_prime_at_least(24) == 29);
}

TEST_CASE("grid embedding coloring") {
  // color counts after compaction, recomputed independently
  const int expected_k[] = {1, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13};
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const Geometry grid = Geometry::grid(n);
    const Coloring c = cons::grid_embedding_coloring(n);
    CHECK(c.k == expected_k[n - 1]);
    CHECK(verify::validate_coloring(grid, c).ok);
  }
}

TEST_CASE("grid embedding verified against the plain triple scan") {
  for (int n : {3, 4, 5, 6}) {
    const Geometry grid = Geometry::grid(n);
    CHECK(no_monochromatic_triple(grid, cons::grid_embedding_coloring(n)));
  }
}

TEST_CASE("grid embedding colors come from the parabola rule") {
  const int n = 5;  // prime side, so no compaction happens
  const Coloring c = cons::grid_embedding_coloring(n);
  const Geometry grid = Geometry::grid(n);
  for (PointId p = 0; p < grid.point_count(); ++p) {
    const auto [x, y] = grid.grid_coords(p);
    const int raw = (((y - 1) - (x - 1) * (x - 1)) % n + n) % n;
    CHECK(c.color_of[p] == raw);
  }
}

TEST_CASE("constructions are deterministic") {
  CHECK(cons::pg_cyclic_coloring(4) == cons::pg_cyclic_coloring(4));
  CHECK(cons::ag_parabola_coloring(5) == cons::ag_parabola_coloring(5));
  CHECK(cons::pg_fractional_coloring(3) == cons::pg_fractional_coloring(3));
  CHECK(cons::grid_embedding_coloring(7) == cons::grid_embedding_coloring(7));
}

TEST_CASE("recorded fixtures validate") {
  for (const auto& fx : arcchroma::fixtures::all()) {
    CAPTURE(fx.name);
    const Geometry g = Geometry::from_descriptor(fx.coloring.geometry);
    CHECK(verify::validate_coloring(g, fx.coloring).ok);
    CHECK(no_monochromatic_triple(g, fx.coloring));
  }
}

TEST_CASE("fixture lookup") {
  CHECK(arcchroma::fixtures::by_name("grid8-4col").coloring.k == 4);
  CHECK(arcchroma::fixtures::by_name("ag8-7col").coloring.k == 7);
  CHECK_THROWS_AS(arcchroma::fixtures::by_name("missing"), std::invalid_argument);
  const auto names = arcchroma::fixtures::names();
  CHECK(names.size() == arcchroma::fixtures::all().size());
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(cons::pg_cyclic_coloring(6), std::invalid_argument);
  CHECK_THROWS_AS(cons::ag_parabola_coloring(12), std::invalid_argument);
  CHECK_THROWS_AS(cons::grid_embedding_coloring(0), std::invalid_argument);
}
