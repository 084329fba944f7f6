#include "arcchroma/fixtures.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "arcchroma/geometry.hpp"

namespace arcchroma::fixtures {
namespace {

using Class = std::initializer_list<std::pair<int, int>>;

Coloring from_classes(const Geometry& g, std::initializer_list<Class> classes) {
  Coloring c;
  c.geometry = g.descriptor();
  c.k = static_cast<int>(classes.size());
  c.color_of.assign(g.point_count(), -1);
  int color = 0;
  for (const Class& cls : classes) {
    for (const auto& [x, y] : cls) {
      const PointId p = g.kind() == GeometryKind::Grid
                            ? g.point_from_grid(x, y)
                            : g.point_from_affine(static_cast<std::uint32_t>(x),
                                                  static_cast<std::uint32_t>(y));
      if (c.color_of[p] != -1) throw std::logic_error("fixture lists a point twice");
      c.color_of[p] = color;
    }
    ++color;
  }
  for (int col : c.color_of)
    if (col == -1) throw std::logic_error("fixture misses a point");
  return c;
}

std::vector<Fixture> build_all() {
  std::vector<Fixture> out;

  {
    Geometry ag4 = Geometry::affine_plane(4);
    out.push_back({"ag4-3col",
                   "3-coloring of AG(2,4) found by backtracking search",
                   from_classes(ag4,
                                {
                                    {{0, 0}, {0, 1}, {1, 0}, {2, 2}, {1, 2}, {2, 1}},
                                    {{0, 3}, {0, 2}, {3, 0}, {2, 0}, {3, 3}},
                                    {{1, 1}, {3, 1}, {2, 3}, {1, 3}, {3, 2}},
                                })});
    out.push_back({"ag4-daisy-3col",
                   "3-coloring of AG(2,4) assembled from two hyperoval petals",
                   from_classes(ag4,
                                {
                                    {{1, 1}, {2, 3}, {3, 2}, {1, 3}, {2, 2}, {3, 1}},
                                    {{0, 0}, {1, 2}, {2, 1}, {1, 0}, {0, 1}},
                                    {{0, 2}, {0, 3}, {2, 0}, {3, 0}, {3, 3}},
                                })});
  }

  out.push_back(
      {"ag8-7col",
       "7-coloring of AG(2,8) found by backtracking search",
       from_classes(
           Geometry::affine_plane(8),
           {
               {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {7, 5}, {3, 5}, {3, 7}, {5, 7}, {5, 3}, {7, 3}},
               {{0, 5}, {0, 6}, {5, 0}, {6, 0}, {2, 2}, {4, 4}, {5, 2}, {4, 6}, {6, 4}, {2, 5}},
               {{0, 7}, {0, 2}, {7, 0}, {1, 3}, {4, 7}, {7, 1}, {2, 3}, {2, 1}, {4, 2}},
               {{0, 3}, {0, 4}, {4, 0}, {6, 6}, {7, 7}, {6, 7}, {4, 3}, {1, 6}, {7, 4}},
               {{5, 5}, {3, 3}, {5, 1}, {2, 4}, {1, 5}, {6, 3}, {2, 7}, {3, 1}, {1, 7}},
               {{2, 0}, {3, 0}, {7, 2}, {2, 6}, {1, 4}, {6, 5}, {7, 6}, {3, 2}},
               {{1, 2}, {3, 6}, {5, 4}, {6, 1}, {3, 4}, {6, 2}, {4, 5}, {5, 6}, {4, 1}},
           })});

  out.push_back({"grid4-2col",
                 "2-coloring of the 4x4 grid",
                 from_classes(Geometry::grid(4),
                              {
                                  {{1, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 3}, {4, 4}},
                                  {{1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 2}},
                              })});

  out.push_back(
      {"grid5-3col",
       "3-coloring of the 5x5 grid",
       from_classes(Geometry::grid(5),
                    {
                        {{1, 1}, {1, 2}, {2, 1}, {2, 4}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {5, 3}, {5, 5}},
                        {{1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 1}, {4, 4}, {4, 5}, {5, 1}, {5, 2}},
                        {{1, 5}, {2, 2}, {3, 2}, {3, 3}, {4, 1}, {5, 4}},
                    })});

  out.push_back(
      {"grid8-4col",
       "4-coloring of the 8x8 grid assembled from four disjoint 16-point arcs",
       from_classes(Geometry::grid(8),
                    {
                        {{7, 3}, {1, 5}, {8, 2}, {3, 3}, {1, 1}, {5, 4}, {4, 8}, {6, 2},
                         {2, 5}, {6, 8}, {3, 4}, {5, 6}, {4, 7}, {7, 1}, {2, 7}, {8, 6}},
                        {{1, 2}, {8, 5}, {2, 3}, {3, 2}, {3, 8}, {5, 7}, {7, 7}, {7, 5},
                         {8, 1}, {2, 1}, {4, 4}, {1, 6}, {6, 4}, {5, 8}, {4, 6}, {6, 3}},
                        {{5, 1}, {6, 6}, {8, 8}, {4, 5}, {2, 6}, {7, 2}, {6, 5}, {3, 1},
                         {1, 7}, {8, 4}, {1, 3}, {2, 8}, {3, 7}, {4, 3}, {7, 4}, {5, 2}},
                        {{5, 5}, {1, 8}, {3, 5}, {7, 6}, {4, 2}, {2, 2}, {1, 4}, {5, 3},
                         {4, 1}, {7, 8}, {8, 7}, {6, 1}, {6, 7}, {8, 3}, {3, 6}, {2, 4}},
                    })});

  return out;
}

}  // namespace

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = build_all();
  return fixtures;
}

const Fixture& by_name(std::string_view name) {
  for (const Fixture& f : all())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const Fixture& f : all()) out.push_back(f.name);
  return out;
}

}  // namespace arcchroma::fixtures
