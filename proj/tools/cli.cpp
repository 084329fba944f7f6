#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "arcchroma/constructions.hpp"
#include "arcchroma/document.hpp"
#include "arcchroma/fixtures.hpp"
#include "arcchroma/geometry.hpp"
#include "arcchroma/solver.hpp"
#include "arcchroma/svg.hpp"
#include "arcchroma/verify.hpp"

namespace arcchroma::cli {
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void write_payload(const std::string& payload, const std::string& emit_path) {
  if (emit_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(emit_path, std::ios::binary);
  if (!out) throw doc::DocumentError("cannot open output file: " + emit_path);
  out << payload;
  if (!out) throw doc::DocumentError("cannot write output file: " + emit_path);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw doc::DocumentError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int env_threads() {
  const char* v = std::getenv("ARCCHROMA_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 0 || n > 256) {
    std::cerr << "warning: ignoring unusable ARCCHROMA_THREADS value\n";
    return 1;
  }
  return n <= 1 ? 1 : static_cast<int>(n);
}

Geometry geometry_from_arg(const std::string& arg) {
  return Geometry::from_descriptor(doc::parse_geometry_arg(arg));
}

std::string default_method(const Geometry& g) {
  switch (g.kind()) {
    case GeometryKind::ProjectivePlane: return "cyclic";
    case GeometryKind::AffinePlane: return "parabola";
    case GeometryKind::Grid: return "embedding";
  }
  throw std::logic_error("bad geometry kind");
}

int run_build(const std::string& geometry_arg, const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  write_payload(doc::geometry_document(g), emit);
  std::cerr << geometry_arg << ": " << g.point_count() << " points, " << g.line_count()
            << " lines\n";
  return kOk;
}

int run_color(const std::string& geometry_arg, std::string method, const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  if (method.empty()) method = default_method(g);

  if (method == "fractional") {
    if (g.kind() != GeometryKind::ProjectivePlane)
      throw doc::DocumentError("method fractional applies to projective planes only");
    const auto fc = constructions::pg_fractional_coloring(g.param());
    write_payload(doc::coloring_document(g, fc, "construction:fractional"), emit);
    std::cerr << geometry_arg << ": " << fc.k << " classes covering every point " << fc.b
              << " times\n";
    return kOk;
  }

  Coloring c;
  if (method == "cyclic") {
    if (g.kind() != GeometryKind::ProjectivePlane)
      throw doc::DocumentError("method cyclic applies to projective planes only");
    c = constructions::pg_cyclic_coloring(g.param());
  } else if (method == "parabola") {
    if (g.kind() != GeometryKind::AffinePlane)
      throw doc::DocumentError("method parabola applies to affine planes only");
    c = constructions::ag_parabola_coloring(g.param());
  } else if (method == "embedding") {
    if (g.kind() != GeometryKind::Grid)
      throw doc::DocumentError("method embedding applies to grids only");
    c = constructions::grid_embedding_coloring(g.param());
  } else {
    throw doc::DocumentError("unknown method: " + method);
  }
  if (!verify::is_arc_proper(g, c))
    throw std::logic_error("construction coloring fails the determinant oracle");
  write_payload(doc::coloring_document(g, c, "construction:" + method), emit);
  std::cerr << geometry_arg << ": " << c.k << " classes\n";
  return kOk;
}

solver::SolveConfig make_config(long long nodes, double seconds) {
  solver::SolveConfig cfg;
  if (nodes > 0) cfg.limits.max_nodes = nodes;
  if (seconds > 0) cfg.limits.max_seconds = seconds;
  cfg.threads = env_threads();
  return cfg;
}

int run_solve(const std::string& geometry_arg, int k, long long nodes, double seconds,
              const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  const auto cfg = make_config(nodes, seconds);
  const auto out = solver::solve_coloring(g, k, cfg);
  std::cerr << geometry_arg << " k=" << k << ": " << solver::to_string(out.status) << " ("
            << out.stats.nodes << " nodes, " << out.stats.wipeouts << " wipeouts, "
            << out.stats.seconds << " s)\n";
  if (out.status == solver::SearchStatus::Found) {
    write_payload(doc::coloring_document(g, *out.coloring, "solve:k=" + std::to_string(k)),
                  emit);
    return kOk;
  }
  write_payload(doc::search_outcome_document(g, k, out), emit);
  return kNegative;
}

int run_enumerate(const std::string& geometry_arg, int size, const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  if (size == 0) size = 2 * g.param();
  const auto arcs = solver::enumerate_max_arcs(g, size);
  write_payload(doc::arc_list_document(g, arcs), emit);
  std::cerr << geometry_arg << ": " << arcs.size() << " arcs of size " << size << "\n";
  return kOk;
}

int run_partition(const std::string& input, int k, const std::string& emit) {
  const auto loaded = doc::parse_arc_list_document(read_input(input));
  const auto out = solver::partition_from_arcs(loaded.geometry, loaded.arcs, k);
  std::cerr << "partition into " << k << ": " << solver::to_string(out.status) << " ("
            << out.stats.nodes << " nodes)\n";
  if (out.status == solver::SearchStatus::Found) {
    write_payload(doc::coloring_document(loaded.geometry, *out.coloring, "arc-partition"),
                  emit);
    return kOk;
  }
  write_payload(doc::search_outcome_document(loaded.geometry, k, out), emit);
  return kNegative;
}

int run_verify(const std::string& input, const std::string& emit) {
  const auto loaded = doc::parse_coloring_document(read_input(input));
  verify::ValidationReport report;
  if (loaded.b == 1) {
    report = verify::validate_coloring(loaded.geometry, doc::integral_coloring(loaded));
  } else {
    report = verify::validate_fractional(loaded.geometry, doc::fractional_coloring(loaded));
  }
  write_payload(doc::verdict_document(loaded.geometry, loaded.k, loaded.b, report), emit);
  if (report.ok) {
    std::cerr << "valid (" << loaded.k << " classes, b=" << loaded.b << ")\n";
    return kOk;
  }
  std::cerr << "invalid: " << report.violation->message << "\n";
  return kNegative;
}

int run_bounds(const std::string& geometry_arg, const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  const auto certs = verify::lower_bound_certificates(g);
  write_payload(doc::bounds_document(g, certs), emit);
  int best = 1;
  for (const auto& cert : certs) best = std::max(best, cert.bound);
  std::cerr << geometry_arg << ": chromatic number at least " << best << "\n";
  return kOk;
}

int run_chi(const std::string& geometry_arg, long long nodes, double seconds,
            const std::string& emit) {
  const Geometry g = geometry_from_arg(geometry_arg);
  const auto cfg = make_config(nodes, seconds);
  const auto ev = solver::chi_arc(g, cfg);
  write_payload(doc::chi_document(ev), emit);
  if (ev.exact())
    std::cerr << geometry_arg << ": chromatic number " << ev.lower << " (exact)\n";
  else
    std::cerr << geometry_arg << ": chromatic number in [" << ev.lower << ", " << ev.upper
              << "]\n";
  return kOk;
}

int run_export(const std::string& input, const std::string& emit) {
  const auto loaded = doc::parse_coloring_document(read_input(input));
  const Coloring c = doc::integral_coloring(loaded);
  write_payload(svg::grid_svg(loaded.geometry, c), emit);
  std::cerr << "svg: " << loaded.geometry.param() << "x" << loaded.geometry.param() << ", "
            << c.k << " classes\n";
  return kOk;
}

int run_fixtures(const std::string& name, const std::string& emit) {
  if (name.empty()) {
    write_payload(doc::fixture_list_document(), emit);
    std::cerr << fixtures::all().size() << " fixtures\n";
    return kOk;
  }
  const auto& fixture = [&]() -> const fixtures::Fixture& {
    try {
      return fixtures::by_name(name);
    } catch (const std::invalid_argument& e) {
      throw doc::DocumentError(e.what());
    }
  }();
  const Geometry g = Geometry::from_descriptor(fixture.coloring.geometry);
  write_payload(doc::coloring_document(g, fixture.coloring, "fixture:" + fixture.name), emit);
  std::cerr << fixture.name << ": " << fixture.summary << "\n";
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"exact toolkit for arc-proper colorings of finite planes and grids"};
  app.require_subcommand(1);

  std::string geometry_arg;
  std::string method;
  std::string emit;
  std::string input;
  std::string fixture_name;
  int colors = 0;
  int size = 0;
  int classes = 0;
  long long node_limit = 0;
  double time_limit = 0;
  bool seedless = false;

  auto* build = app.add_subcommand("build", "describe a geometry");
  build->add_option("--geometry", geometry_arg, "pg:q, ag:q or grid:n")->required();
  build->add_option("--emit", emit, "write JSON to a file instead of stdout");

  auto* color = app.add_subcommand("color", "emit a closed-form coloring");
  color->add_option("--geometry", geometry_arg)->required();
  color->add_option("--method", method, "cyclic, parabola, embedding or fractional");
  color->add_option("--emit", emit);

  auto* solve = app.add_subcommand("solve", "search for a k-coloring");
  solve->add_option("--geometry", geometry_arg)->required();
  solve->add_option("--colors", colors, "number of colors")->required();
  solve->add_option("--node-limit", node_limit, "maximum search nodes");
  solve->add_option("--time-limit", time_limit, "maximum seconds");
  solve->add_flag("--seedless", seedless, "accepted for compatibility; the search is always deterministic");
  solve->add_option("--emit", emit);

  auto* enumerate = app.add_subcommand("enumerate-arcs", "list all two-per-row grid arcs");
  enumerate->add_option("--geometry", geometry_arg)->required();
  enumerate->add_option("--size", size, "arc size, must equal 2n");
  enumerate->add_option("--emit", emit);

  auto* partition = app.add_subcommand("partition", "exact cover from an arc list");
  partition->add_option("--classes", classes, "number of classes")->required();
  partition->add_option("--arcs", input, "arc-list JSON file (default stdin)");
  partition->add_option("--emit", emit);

  auto* verify_cmd = app.add_subcommand("verify", "validate a coloring document");
  verify_cmd->add_option("file", input, "coloring JSON file (default stdin)");
  verify_cmd->add_option("--emit", emit);

  auto* bounds = app.add_subcommand("bounds", "lower-bound certificates");
  bounds->add_option("--geometry", geometry_arg)->required();
  bounds->add_option("--emit", emit);

  auto* chi = app.add_subcommand("chi", "bracket the arc chromatic number");
  chi->add_option("--geometry", geometry_arg)->required();
  chi->add_option("--node-limit", node_limit);
  chi->add_option("--time-limit", time_limit);
  chi->add_option("--emit", emit);

  auto* export_cmd = app.add_subcommand("export", "render a grid coloring as SVG");
  export_cmd->add_option("file", input, "coloring JSON file (default stdin)");
  export_cmd->add_option("--emit", emit, "write SVG to a file instead of stdout");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "recorded colorings");
  fixtures_cmd->add_option("--name", fixture_name, "emit one fixture as a document");
  fixtures_cmd->add_option("--emit", emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(build)) return run_build(geometry_arg, emit);
    if (app.got_subcommand(color)) return run_color(geometry_arg, method, emit);
    if (app.got_subcommand(solve)) return run_solve(geometry_arg, colors, node_limit, time_limit, emit);
    if (app.got_subcommand(enumerate)) return run_enumerate(geometry_arg, size, emit);
    if (app.got_subcommand(partition)) return run_partition(input, classes, emit);
    if (app.got_subcommand(verify_cmd)) return run_verify(input, emit);
    if (app.got_subcommand(bounds)) return run_bounds(geometry_arg, emit);
    if (app.got_subcommand(chi)) return run_chi(geometry_arg, node_limit, time_limit, emit);
    if (app.got_subcommand(export_cmd)) return run_export(input, emit);
    if (app.got_subcommand(fixtures_cmd)) return run_fixtures(fixture_name, emit);
  } catch (const doc::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace arcchroma::cli
