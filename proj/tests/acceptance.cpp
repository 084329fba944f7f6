// Acceptance gate: one line per criterion, wall-clock limits enforced, and a
// final determinism pass that reruns the earlier criteria and compares every
// produced document and node count byte for byte.  Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "arcchroma/constructions.hpp"
#include "arcchroma/cyclic_model.hpp"
#include "arcchroma/document.hpp"
#include "arcchroma/fixtures.hpp"
#include "arcchroma/solver.hpp"
#include "arcchroma/verify.hpp"
#include "oracles.hpp"

using arcchroma::ArcSet;
using arcchroma::Coloring;
using arcchroma::CyclicModel;
using arcchroma::Geometry;
using arcchroma::PointId;
namespace cons = arcchroma::constructions;
namespace doc = arcchroma::doc;
namespace solver = arcchroma::solver;
namespace verify = arcchroma::verify;
using solver::SearchStatus;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Everything a criterion produces that must be reproducible: serialized
// documents and search node counts, in production order.
struct Artifacts {
  std::vector<std::pair<std::string, std::string>> items;

  void put(const std::string& name, const std::string& text) { items.emplace_back(name, text); }
  void put(const std::string& name, long long value) {
    items.emplace_back(name, std::to_string(value));
  }
};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

void record_attempts(Artifacts& art, const std::string& prefix,
                     const solver::ChiEvidence& ev) {
  for (const auto& a : ev.attempts)
    art.put(prefix + ":k=" + std::to_string(a.k) + ":nodes", a.stats.nodes);
}

// ---- criterion 1: chromatic numbers of PG(2,q), q = 2, 3, 4 ----

Outcome criterion1(Artifacts& art) {
  Outcome o;
  for (int q : {2, 3, 4}) {
    const Geometry pg = Geometry::projective_plane(q);
    const auto ev = solver::chi_arc(pg);
    art.put("chi-pg" + std::to_string(q), doc::chi_document(ev));
    record_attempts(art, "pg" + std::to_string(q), ev);

    if (!ev.exact() || ev.lower != q + 1) {
      o.fail("PG(2," + std::to_string(q) + ") resolved to [" + std::to_string(ev.lower) +
             "," + std::to_string(ev.upper) + "] instead of " + std::to_string(q + 1));
      continue;
    }
    if (!ev.witness || !verify::validate_coloring(pg, *ev.witness).ok)
      o.fail("PG(2," + std::to_string(q) + ") witness does not validate");

    if (q == 2 || q == 3) {
      bool refuted = false;
      for (const auto& a : ev.attempts)
        refuted |= a.k == q && a.status == SearchStatus::Exhausted;
      if (!refuted) o.fail("no exhausted search at k=" + std::to_string(q));
    }
    if (q == 4) {
      bool counting = false;
      for (const auto& cert : ev.certificates)
        counting |= cert.kind == verify::BoundCertificate::Kind::KaramataEvenQ &&
                    cert.bound == 5 && cert.recheck();
      if (!counting) o.fail("PG(2,4) lacks the counting certificate for bound 5");
    }
  }
  if (o.pass) o.detail = "chi(PG(2,q)) = q+1 for q = 2, 3, 4, refutations included";
  return o;
}

// ---- criterion 2: cyclic models and the negated-line arc property ----

Outcome criterion2(Artifacts& art) {
  Outcome o;
  for (int q : {2, 3, 4, 5, 7, 8}) {
    const CyclicModel m = CyclicModel::build(q);  // verifies itself on construction
    std::ostringstream ds;
    for (int d : m.difference_set()) ds << d << ' ';
    art.put("difference-set-q" + std::to_string(q), ds.str());

    for (int t = 0; t < m.modulus(); ++t) {
      const auto arc = m.points_of_residues(m.negate(m.line_residues(t)));
      if (!verify::is_arc(m.plane(), arc)) {
        o.fail("negated translate " + std::to_string(t) + " of q=" + std::to_string(q) +
               " is not an arc");
        break;
      }
    }
  }
  if (o.pass) o.detail = "negated lines are arcs for every translate, q in {2,3,4,5,7,8}";
  return o;
}

// ---- criterion 3: fractional colorings and nuclei ----

Outcome criterion3(Artifacts& art) {
  Outcome o;
  for (int q : {2, 3, 4, 5, 7, 8}) {
    const Geometry pg = Geometry::projective_plane(q);
    const auto c = cons::pg_fractional_coloring(q);
    art.put("fractional-pg" + std::to_string(q), doc::coloring_document(pg, c, "acceptance"));

    const int expected_b = q % 2 == 0 ? q + 2 : q + 1;
    if (c.b != expected_b)
      o.fail("q=" + std::to_string(q) + " uses b=" + std::to_string(c.b));
    if (!verify::validate_fractional(pg, c).ok)
      o.fail("q=" + std::to_string(q) + " fractional coloring invalid");
    // k/b must sit exactly on the pigeonhole lower bound points/max_arc
    const long long lhs = static_cast<long long>(c.k) * verify::max_arc_closed_form_bound(pg);
    const long long rhs = static_cast<long long>(pg.point_count()) * c.b;
    if (lhs != rhs) o.fail("q=" + std::to_string(q) + " misses the pigeonhole ratio");

    if (q % 2 == 0) {
      const CyclicModel m = CyclicModel::build(q);
      auto nb = arcchroma::nucleus_bijection(m);  // throws unless a bijection
      std::ostringstream ns;
      for (PointId p : nb) ns << p << ' ';
      art.put("nucleus-map-q" + std::to_string(q), ns.str());
    }
  }
  if (o.pass) o.detail = "optimal (k:b) coverings with nuclei for q in {2,4,8}";
  return o;
}

// ---- criterion 4: affine planes ----

Outcome criterion4(Artifacts& art) {
  Outcome o;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Geometry ag = Geometry::affine_plane(q);
    const Coloring c = cons::ag_parabola_coloring(q);
    art.put("parabola-ag" + std::to_string(q), doc::coloring_document(ag, c, "acceptance"));
    if (c.k != q || !verify::validate_coloring(ag, c).ok)
      o.fail("parabola coloring broken for q=" + std::to_string(q));
  }

  for (const auto& fx : arcchroma::fixtures::all()) {
    const Geometry g = Geometry::from_descriptor(fx.coloring.geometry);
    if (!verify::validate_coloring(g, fx.coloring).ok)
      o.fail("fixture " + fx.name + " does not validate");
    art.put("fixture-" + fx.name, doc::coloring_document(g, fx.coloring, fx.name));
  }

  const auto timed_solve = [&](int q, int k, SearchStatus expected, double limit,
                               const char* tag) {
    const Geometry ag = Geometry::affine_plane(q);
    const auto start = std::chrono::steady_clock::now();
    const auto out = solver::solve_coloring(ag, k);
    const double took = seconds_since(start);
    art.put(std::string("solve-") + tag + ":nodes", out.stats.nodes);
    if (out.status != expected)
      o.fail(std::string(tag) + " ended " + solver::to_string(out.status));
    else if (out.status == SearchStatus::Found &&
             !verify::validate_coloring(ag, *out.coloring).ok)
      o.fail(std::string(tag) + " witness invalid");
    if (took > limit)
      o.fail(std::string(tag) + " took " + std::to_string(took) + " s, limit " +
             std::to_string(limit));
  };
  timed_solve(4, 3, SearchStatus::Found, 1.0, "ag4-k3");
  timed_solve(8, 7, SearchStatus::Found, 120.0, "ag8-k7");
  timed_solve(3, 2, SearchStatus::Exhausted, 60.0, "ag3-k2");
  timed_solve(5, 4, SearchStatus::Exhausted, 60.0, "ag5-k4");

  if (o.pass)
    o.detail = "parabola colorings, recorded colorings, and the four search landmarks";
  return o;
}

// ---- criterion 5: the grid table and the 8x8 grid ----

Outcome criterion5(Artifacts& art) {
  Outcome o;
  const int expected[] = {1, 1, 2, 2, 3, 4, 4};
  for (int n = 1; n <= 7; ++n) {
    const Geometry g = Geometry::grid(n);
    const auto ev = solver::chi_arc(g);
    art.put("chi-grid" + std::to_string(n), doc::chi_document(ev));
    record_attempts(art, "grid" + std::to_string(n), ev);
    if (!ev.exact() || ev.lower != expected[n - 1]) {
      o.fail("grid " + std::to_string(n) + " resolved to [" + std::to_string(ev.lower) +
             "," + std::to_string(ev.upper) + "]");
      continue;
    }
    if (expected[n - 1] >= 2) {
      bool refuted = false;
      for (const auto& a : ev.attempts)
        refuted |= a.k == expected[n - 1] - 1 && a.status == SearchStatus::Exhausted;
      if (!refuted)
        o.fail("grid " + std::to_string(n) + " lacks a refutation at " +
               std::to_string(expected[n - 1] - 1));
    }
  }

  const Geometry g8 = Geometry::grid(8);
  const auto arcs = solver::enumerate_max_arcs(g8, 16);
  art.put("grid8-arcs", doc::arc_list_document(g8, arcs));
  if (arcs.size() != 380)
    o.fail("grid 8 has " + std::to_string(arcs.size()) + " maximum arcs, expected 380");

  const auto part = solver::partition_from_arcs(g8, arcs, 4);
  art.put("grid8-partition:nodes", part.stats.nodes);
  if (part.status != SearchStatus::Found || !verify::validate_coloring(g8, *part.coloring).ok)
    o.fail("grid 8 has no verified partition into 4 maximum arcs");
  else
    art.put("grid8-partition", doc::coloring_document(g8, *part.coloring, "arc-partition"));

  if (!verify::validate_coloring(g8, arcchroma::fixtures::by_name("grid8-4col").coloring).ok)
    o.fail("the recorded grid 8 coloring does not validate");

  const auto ev8 = solver::chi_arc(g8);
  art.put("chi-grid8", doc::chi_document(ev8));
  bool pigeonhole4 = false;
  for (const auto& cert : ev8.certificates)
    pigeonhole4 |= cert.kind == verify::BoundCertificate::Kind::Pigeonhole &&
                   cert.bound == 4 && cert.recheck();
  if (!pigeonhole4 || !ev8.exact() || ev8.lower != 4)
    o.fail("grid 8 did not settle at 4 with a pigeonhole certificate");

  if (o.pass) o.detail = "grid table 1..7 with refutations; 380 arcs and a 4-cover on 8x8";
  return o;
}

// ---- criterion 6: the 9x9 grid ----

Outcome criterion6(Artifacts& art) {
  Outcome o;
  const Geometry g9 = Geometry::grid(9);
  const auto ev = solver::chi_arc(g9);
  art.put("chi-grid9", doc::chi_document(ev));
  record_attempts(art, "grid9", ev);

  if (ev.lower < 5 || ev.upper != 6) {
    o.fail("grid 9 resolved to [" + std::to_string(ev.lower) + "," +
           std::to_string(ev.upper) + "], expected lower >= 5 and upper 6");
  }
  if (!ev.witness || ev.witness->k != ev.upper ||
      !verify::validate_coloring(g9, *ev.witness).ok)
    o.fail("grid 9 upper bound lacks a verified witness");

  if (o.pass)
    o.detail = "grid 9 bracketed to [" + std::to_string(ev.lower) + "," +
               std::to_string(ev.upper) + "] with a verified witness";
  return o;
}

// ---- criterion 7: oracle equivalence ----

Outcome criterion7(Artifacts& art) {
  Outcome o;

  struct Probe { Geometry g; int max_k; };
  const Probe probes[] = {
      {Geometry::projective_plane(2), 3},
      {Geometry::affine_plane(2), 2},
      {Geometry::affine_plane(3), 3},
      {Geometry::grid(2), 2},
      {Geometry::grid(3), 3},
      {Geometry::grid(4), 3},
  };
  for (const auto& probe : probes) {
    const std::string tag = std::string(to_string(probe.g.kind())) + ":" +
                            std::to_string(probe.g.param());
    for (int k = 1; k <= probe.max_k; ++k) {
      const bool naive = testoracles::naive_k_colorable(probe.g, k);
      const auto out = solver::solve_coloring(probe.g, k);
      art.put(tag + ":k=" + std::to_string(k) + ":nodes", out.stats.nodes);
      if (out.status == SearchStatus::Limit ||
          (out.status == SearchStatus::Found) != naive) {
        o.fail(tag + " k=" + std::to_string(k) + ": solver says " +
               solver::to_string(out.status) + ", enumeration says " +
               (naive ? "colorable" : "not colorable"));
      }
    }
  }

  for (const Geometry& g : {Geometry::projective_plane(4), Geometry::affine_plane(5),
                            Geometry::grid(7)}) {
    const auto subsets = testoracles::random_subsets(g, 10000, 12, 0xACCE55u);
    long long arcs_seen = 0;
    for (const auto& s : subsets) {
      const bool slow = verify::is_arc(g, s);
      if (slow != verify::is_arc_line_index(g, s)) {
        o.fail(std::string("arc checkers disagree on ") + to_string(g.kind()));
        break;
      }
      arcs_seen += slow ? 1 : 0;
    }
    art.put(std::string("subsets-") + to_string(g.kind()) + ":arcs", arcs_seen);
  }

  for (int q : {2, 3, 4, 5}) {
    const int expected = q % 2 == 0 ? q + 2 : q + 1;
    if (verify::max_arc_size(Geometry::projective_plane(q)) != expected ||
        verify::max_arc_size(Geometry::affine_plane(q)) != expected)
      o.fail("plane maximum arc size disagrees with the closed form at q=" +
             std::to_string(q));
  }
  for (int n = 1; n <= 6; ++n) {
    const Geometry g = Geometry::grid(n);
    if (verify::max_arc_size(g) != testoracles::naive_max_arc(g))
      o.fail("grid maximum arc size disagrees with brute force at n=" + std::to_string(n));
  }

  if (o.pass)
    o.detail = "solver, arc checkers and arc sizes agree with independent enumeration";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)(Artifacts&);
    double limit;
  };
  const Entry entries[] = {
      {"criterion 1", criterion1, 60.0},  {"criterion 2", criterion2, 30.0},
      {"criterion 3", criterion3, 60.0},  {"criterion 4", criterion4, 180.0},
      {"criterion 5", criterion5, 600.0}, {"criterion 6", criterion6, 600.0},
      {"criterion 7", criterion7, 600.0},
  };

  bool all_pass = true;
  std::vector<Artifacts> first_run(6);

  for (std::size_t i = 0; i < std::size(entries); ++i) {
    Artifacts art;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = entries[i].run(art);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(start);
    if (took > entries[i].limit) o.fail("over the " + std::to_string(entries[i].limit) + " s limit");
    if (i < first_run.size()) first_run[i] = std::move(art);
    std::printf("%s: %s (%.2f s) %s\n", entries[i].name, o.pass ? "PASS" : "FAIL", took,
                o.detail.c_str());
    std::fflush(stdout);
    all_pass &= o.pass;
  }

  // criterion 8: the first six criteria, run again, must reproduce every
  // document and node count byte for byte
  {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t compared = 0;
    try {
      for (std::size_t i = 0; i < first_run.size(); ++i) {
        Artifacts again;
        entries[i].run(again);
        if (again.items.size() != first_run[i].items.size()) {
          o.fail(std::string(entries[i].name) + " artifact count changed");
          continue;
        }
        for (std::size_t a = 0; a < again.items.size(); ++a) {
          ++compared;
          if (again.items[a] != first_run[i].items[a]) {
            o.fail(std::string(entries[i].name) + " artifact " + again.items[a].first +
                   " not reproducible");
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(start);
    if (o.pass)
      o.detail = std::to_string(compared) + " documents and counters reproduced exactly";
    std::printf("criterion 8: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", took,
                o.detail.c_str());
    all_pass &= o.pass;
  }

  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
