#include "arcchroma/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>

#include "json.hpp"

#include "arcchroma/fixtures.hpp"

namespace arcchroma::doc {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json geometry_json(const GeometryDescriptor& d) {
  json j;
  j["kind"] = to_string(d.kind);
  if (d.kind == GeometryKind::Grid) {
    j["n"] = d.param;
  } else {
    j["q"] = d.param;
    const auto pm = prime_power_decomposition(d.param);
    if (!pm) throw std::logic_error("plane order is not a prime power");
    const Field& f = Field::get(pm->first, pm->second);
    j["field"] = {{"p", pm->first}, {"m", pm->second}, {"modulus", f.modulus()}};
  }
  return j;
}

json point_json(const Geometry& g, PointId p) {
  if (g.kind() == GeometryKind::Grid) {
    const auto [x, y] = g.grid_coords(p);
    return json::array({x, y});
  }
  const auto c = g.coords(p);
  if (g.kind() == GeometryKind::AffinePlane) return json::array({c[0], c[1]});
  return json::array({c[0], c[1], c[2]});
}

json class_json(const Geometry& g, std::span<const PointId> pts) {
  json arr = json::array();
  for (PointId p : pts) arr.push_back(point_json(g, p));
  return arr;
}

json coloring_json(const Geometry& g, int k, int b,
                   const std::vector<std::vector<PointId>>& classes,
                   const std::string& provenance) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["geometry"] = geometry_json(g.descriptor());
  j["k"] = k;
  if (b != 1) j["b"] = b;
  json arr = json::array();
  for (const auto& cls : classes) arr.push_back(class_json(g, cls));
  j["classes"] = std::move(arr);
  j["provenance"] = provenance;
  return j;
}

json stats_json(const solver::SearchStats& stats) {
  return {{"nodes", stats.nodes}, {"wipeouts", stats.wipeouts}};
}

json certificate_json(const verify::BoundCertificate& cert) {
  json j;
  j["kind"] = verify::to_string(cert.kind);
  j["bound"] = cert.bound;
  if (cert.kind == verify::BoundCertificate::Kind::Pigeonhole) {
    j["points"] = cert.points;
    j["max_arc_bound"] = cert.max_arc_bound;
  } else {
    j["q"] = cert.q;
    j["pair_sum_required"] = cert.pair_sum_required;
    j["pair_sum_available"] = cert.pair_sum_available;
  }
  return j;
}

// ---- strict readers ----

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw DocumentError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DocumentError(std::string("missing key: ") + key);
  return *it;
}

void allow_only(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw DocumentError("expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* k) { return key == k; }) == keys.end())
      throw DocumentError("unknown key: " + key);
}

long long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DocumentError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

int small_int(const json& j, const char* what, long long lo, long long hi) {
  const long long v = integer(j, what);
  if (v < lo || v > hi) throw DocumentError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

void check_schema_version(const json& j) {
  if (small_int(member(j, "schema_version"), "schema_version", 0, 1 << 30) != kSchemaVersion)
    throw DocumentError("unsupported schema_version");
}

GeometryDescriptor parse_geometry_json(const json& j) {
  GeometryDescriptor d;
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw DocumentError("geometry kind must be a string");
  try {
    d.kind = geometry_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  if (d.kind == GeometryKind::Grid) {
    allow_only(j, {"kind", "n"});
    d.param = small_int(member(j, "n"), "n", 1, 1 << 20);
    return d;
  }

  allow_only(j, {"kind", "q", "field"});
  d.param = small_int(member(j, "q"), "q", 2, 1 << 20);
  const json& field = member(j, "field");
  allow_only(field, {"p", "m", "modulus"});
  const int p = small_int(member(field, "p"), "p", 2, 1 << 20);
  const int m = small_int(member(field, "m"), "m", 1, 64);
  const long long modulus = integer(member(field, "modulus"), "modulus");
  const auto pm = prime_power_decomposition(d.param);
  if (!pm || pm->first != p || pm->second != m)
    throw DocumentError("field does not match the plane order");
  const Field& f = Field::get(p, m);
  if (modulus != static_cast<long long>(f.modulus()))
    throw DocumentError("field modulus is not the canonical one");
  return d;
}

PointId parse_point(const Geometry& g, const json& j) {
  if (!j.is_array()) throw DocumentError("point must be an array of coordinates");
  const std::size_t arity = g.kind() == GeometryKind::ProjectivePlane ? 3 : 2;
  if (j.size() != arity) throw DocumentError("point has the wrong number of coordinates");
  try {
    if (g.kind() == GeometryKind::Grid)
      return g.point_from_grid(small_int(j[0], "coordinate", 1, g.param()),
                               small_int(j[1], "coordinate", 1, g.param()));
    const long long hi = g.field()->order() - 1;
    if (g.kind() == GeometryKind::AffinePlane)
      return g.point_from_affine(small_int(j[0], "coordinate", 0, hi),
                                 small_int(j[1], "coordinate", 0, hi));
    return g.point_from_projective(small_int(j[0], "coordinate", 0, hi),
                                   small_int(j[1], "coordinate", 0, hi),
                                   small_int(j[2], "coordinate", 0, hi));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

}  // namespace

std::string coloring_document(const Geometry& g, const Coloring& c,
                              const std::string& provenance) {
  return dump(coloring_json(g, c.k, 1, c.classes(), provenance));
}

std::string coloring_document(const Geometry& g, const FractionalColoring& c,
                              const std::string& provenance) {
  return dump(coloring_json(g, c.k, c.b, c.classes, provenance));
}

std::string geometry_document(const Geometry& g) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "geometry";
  j["geometry"] = geometry_json(g.descriptor());
  j["points"] = g.point_count();
  j["lines"] = g.line_count();
  j["max_arc_bound"] = verify::max_arc_closed_form_bound(g);
  return dump(j);
}

std::string arc_list_document(const Geometry& g, const std::vector<ArcSet>& arcs) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "arc-list";
  j["geometry"] = geometry_json(g.descriptor());
  j["count"] = arcs.size();
  json arr = json::array();
  int size = -1;
  for (const ArcSet& arc : arcs) {
    if (size == -1)
      size = static_cast<int>(arc.points.size());
    else if (size != static_cast<int>(arc.points.size()))
      throw std::invalid_argument("arc list mixes sizes");
    arr.push_back(class_json(g, arc.points));
  }
  j["size"] = size == -1 ? 2 * g.param() : size;
  j["arcs"] = std::move(arr);
  return dump(j);
}

std::string bounds_document(const Geometry& g,
                            const std::vector<verify::BoundCertificate>& certs) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "bounds";
  j["geometry"] = geometry_json(g.descriptor());
  int best = 1;
  json arr = json::array();
  for (const auto& cert : certs) {
    best = std::max(best, cert.bound);
    arr.push_back(certificate_json(cert));
  }
  j["bound"] = best;
  j["certificates"] = std::move(arr);
  return dump(j);
}

std::string search_outcome_document(const Geometry& g, int k,
                                    const solver::SearchOutcome& out) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "search-outcome";
  j["geometry"] = geometry_json(g.descriptor());
  j["k"] = k;
  j["status"] = solver::to_string(out.status);
  j["stats"] = stats_json(out.stats);
  return dump(j);
}

std::string chi_document(const solver::ChiEvidence& ev) {
  const Geometry g = Geometry::from_descriptor(ev.geometry);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "chi";
  j["geometry"] = geometry_json(ev.geometry);
  j["lower"] = ev.lower;
  j["upper"] = ev.upper;
  j["exact"] = ev.exact();
  j["upper_source"] = ev.upper_source;
  json certs = json::array();
  for (const auto& cert : ev.certificates) certs.push_back(certificate_json(cert));
  j["certificates"] = std::move(certs);
  json attempts = json::array();
  for (const auto& a : ev.attempts) {
    json aj;
    aj["k"] = a.k;
    aj["status"] = solver::to_string(a.status);
    aj["stats"] = stats_json(a.stats);
    attempts.push_back(std::move(aj));
  }
  j["attempts"] = std::move(attempts);
  if (ev.witness)
    j["witness"] = coloring_json(g, ev.witness->k, 1, ev.witness->classes(), ev.upper_source);
  return dump(j);
}

std::string verdict_document(const Geometry& g, int k, int b,
                             const verify::ValidationReport& report) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "verdict";
  j["geometry"] = geometry_json(g.descriptor());
  j["k"] = k;
  j["b"] = b;
  j["valid"] = report.ok;
  if (report.violation) {
    const auto& v = *report.violation;
    json vj;
    if (v.color >= 0) {
      vj["kind"] = "collinear-triple";
      vj["class"] = v.color;
      vj["points"] = json::array(
          {point_json(g, v.triple[0]), point_json(g, v.triple[1]), point_json(g, v.triple[2])});
    } else {
      vj["kind"] = "coverage";
      vj["point"] = point_json(g, v.point);
      vj["expected"] = v.expected;
      vj["actual"] = v.actual;
    }
    vj["message"] = v.message;
    j["violation"] = std::move(vj);
  }
  return dump(j);
}

std::string fixture_list_document() {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "fixture-list";
  json arr = json::array();
  for (const auto& f : fixtures::all()) {
    json fj;
    fj["name"] = f.name;
    fj["summary"] = f.summary;
    fj["geometry"] = geometry_json(f.coloring.geometry);
    fj["k"] = f.coloring.k;
    arr.push_back(std::move(fj));
  }
  j["fixtures"] = std::move(arr);
  return dump(j);
}

LoadedColoring parse_coloring_document(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw DocumentError("expected a JSON object");
  allow_only(j, {"schema_version", "geometry", "k", "b", "classes", "provenance"});
  check_schema_version(j);

  LoadedColoring out(Geometry::from_descriptor(parse_geometry_json(member(j, "geometry"))));
  out.k = small_int(member(j, "k"), "k", 1, 1 << 16);
  if (j.contains("b")) out.b = small_int(j["b"], "b", 1, 1 << 20);

  const json& provenance = member(j, "provenance");
  if (!provenance.is_string()) throw DocumentError("provenance must be a string");
  out.provenance = provenance.get<std::string>();

  const json& classes = member(j, "classes");
  if (!classes.is_array()) throw DocumentError("classes must be an array");
  if (static_cast<int>(classes.size()) != out.k)
    throw DocumentError("k does not match the number of classes");
  for (const json& cls : classes) {
    if (!cls.is_array()) throw DocumentError("class must be an array of points");
    std::vector<PointId> ids;
    ids.reserve(cls.size());
    for (const json& pt : cls) ids.push_back(parse_point(out.geometry, pt));
    out.classes.push_back(std::move(ids));
  }
  return out;
}

Coloring integral_coloring(const LoadedColoring& loaded) {
  if (loaded.b != 1) throw DocumentError("expected a plain coloring with b = 1");
  Coloring c;
  c.geometry = loaded.geometry.descriptor();
  c.k = loaded.k;
  c.color_of.assign(loaded.geometry.point_count(), -1);
  for (int cls = 0; cls < loaded.k; ++cls)
    for (PointId p : loaded.classes[cls]) {
      if (c.color_of[p] != -1)
        throw DocumentError("classes do not partition the points: duplicate point");
      c.color_of[p] = cls;
    }
  for (int col : c.color_of)
    if (col == -1) throw DocumentError("classes do not partition the points: missing point");
  return c;
}

FractionalColoring fractional_coloring(const LoadedColoring& loaded) {
  FractionalColoring c;
  c.geometry = loaded.geometry.descriptor();
  c.k = loaded.k;
  c.b = loaded.b;
  c.classes = loaded.classes;
  return c;
}

LoadedArcList parse_arc_list_document(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw DocumentError("expected a JSON object");
  allow_only(j, {"schema_version", "type", "geometry", "count", "size", "arcs"});
  check_schema_version(j);
  const json& type = member(j, "type");
  if (!type.is_string() || type.get<std::string>() != "arc-list")
    throw DocumentError("expected an arc-list document");

  LoadedArcList out(Geometry::from_descriptor(parse_geometry_json(member(j, "geometry"))));
  out.size = small_int(member(j, "size"), "size", 1, 1 << 20);
  const json& arcs = member(j, "arcs");
  if (!arcs.is_array()) throw DocumentError("arcs must be an array");
  if (integer(member(j, "count"), "count") != static_cast<long long>(arcs.size()))
    throw DocumentError("count does not match the number of arcs");
  for (const json& arc : arcs) {
    if (!arc.is_array()) throw DocumentError("arc must be an array of points");
    if (static_cast<int>(arc.size()) != out.size)
      throw DocumentError("arc does not match the declared size");
    ArcSet set;
    set.geometry = out.geometry.descriptor();
    for (const json& pt : arc) set.points.push_back(parse_point(out.geometry, pt));
    out.arcs.push_back(std::move(set));
  }
  return out;
}

GeometryDescriptor parse_geometry_arg(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    throw DocumentError("geometry must look like pg:4, ag:8 or grid:9");
  GeometryDescriptor d;
  try {
    d.kind = geometry_kind_from_string(arg.substr(0, colon));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  const std::string num = arg.substr(colon + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw DocumentError("geometry parameter must be a positive integer");
  try {
    d.param = std::stoi(num);
  } catch (const std::exception&) {
    throw DocumentError("geometry parameter out of range");
  }
  if (d.param < 1) throw DocumentError("geometry parameter must be positive");
  return d;
}

}  // namespace arcchroma::doc
