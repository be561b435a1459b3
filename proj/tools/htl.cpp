// htl: build, check and inspect labelings from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 structural or format error,
// 3 search incomplete.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "htl/builders.hpp"
#include "htl/io.hpp"
#include "htl/report.hpp"
#include "htl/search.hpp"
#include "htl/surface.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kStructuralError = 2;
constexpr int kSearchIncomplete = 3;

struct Options {
  std::int64_t k = 0;
  std::int64_t n = 0;
  bool oriented = false;
  std::size_t limit = 0;
  std::uint64_t budget = 0;
  std::string out;
  std::string format;
  std::string input = "-";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw htl::PreconditionError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw htl::PreconditionError("cannot write " + o.out);
  out << text;
}

htl::Labeling read_labeling(const Options& o) {
  // Wrong vertex totals still load so verify can report them.
  return htl::parse_htl(read_input(o.input), htl::ParseOptions{false});
}

std::string render(const htl::Labeling& l, const std::string& format) {
  if (format == "json") return htl::analyze_export(l);
  if (format == "svg") return htl::render_svg(l);
  return htl::emit_htl(l);
}

int run_build(const Options& o, bool want_oriented) {
  const auto l = want_oriented ? htl::build_oriented(o.k) : htl::build(o.k);
  write_output(o, render(l, o.format));
  return kOk;
}

int run_verify(const Options& o) {
  const auto l = read_labeling(o);
  const auto report = htl::verify(l);
  std::ostringstream text;
  for (const auto& v : report.violations) text << v.describe() << "\n";
  const bool ok = report.proper && (!o.oriented || report.oriented);
  if (report.proper) text << (report.oriented ? "proper, oriented\n" : "proper, not oriented\n");
  else text << "not proper\n";
  write_output(o, text.str());
  return ok ? kOk : kVerificationFailure;
}

int run_analyze(const Options& o) {
  const auto l = read_labeling(o);
  write_output(o, htl::analyze_export(l));
  return htl::verify(l).proper ? kOk : kVerificationFailure;
}

int run_search(const Options& o) {
  htl::SearchOptions opts;
  opts.oriented_only = o.oriented;
  if (o.limit > 0) opts.limit = o.limit;
  opts.node_budget = o.budget;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto result = htl::search_labelings(static_cast<std::size_t>(o.k), static_cast<std::size_t>(o.n), opts);

  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = o.k;
    j["n"] = o.n;
    j["status"] = htl::status_name(result.status);
    j["nodes"] = result.nodes;
    if (!result.note.empty()) j["note"] = result.note;
    auto& list = j["labelings"] = nlohmann::ordered_json::array();
    for (const auto& l : result.labelings) list.push_back(l.polygons());
    text = j.dump(2) + "\n";
  } else {
    text = "# status " + std::string(htl::status_name(result.status)) + ", " +
           std::to_string(result.labelings.size()) + " labelings\n";
    if (!result.note.empty()) text += "# " + result.note + "\n";
    for (const auto& l : result.labelings) text += htl::emit_htl(l);
  }
  write_output(o, text);
  return result.status == htl::SearchStatus::kIncomplete ? kSearchIncomplete : kOk;
}

int run_double_cover(const Options& o) {
  const auto l = read_labeling(o);
  write_output(o, render(htl::double_cover(l), o.format));
  return kOk;
}

int run_dual(const Options& o) {
  const auto l = read_labeling(o);
  const auto surface = htl::glue(l);
  const auto d = htl::dual(surface, l);
  nlohmann::ordered_json j;
  j["vertices"] = d.vertices;
  j["edges"] = d.edges;
  j["faces"] = d.faces;
  j["chi"] = d.chi;
  auto& tris = j["triangles"] = nlohmann::ordered_json::array();
  for (const auto& t : d.triangles) {
    tris.push_back({{"label", t.label}, {"polygons", {t.polygons[0] + 1, t.polygons[1] + 1, t.polygons[2] + 1}}});
  }
  write_output(o, j.dump(2) + "\n");
  return kOk;
}

int run_hamilton(const Options& o) {
  const auto graph = htl::parse_graph(read_input(o.input));
  const auto walk = htl::double_hamiltonian(graph, o.oriented, std::max(1u, std::thread::hardware_concurrency()));
  if (!walk) {
    std::cerr << "htl: no double walk" << (o.oriented ? " traversing each edge both ways" : "") << " exists\n";
    return kVerificationFailure;
  }
  write_output(o, render(htl::walk_to_labeling(graph, *walk), o.format));
  return kOk;
}

int run_render(const Options& o) {
  const auto l = read_labeling(o);
  write_output(o, htl::render_svg(l));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper labelings of polygon families and the surfaces they glue into"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"htl", "json", "svg"};

  auto add_out = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--out", o.out, "Output file (default stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->default_val(default_format);
  };
  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", o.input, "Input file, - for stdin")->default_val("-"); };

  auto* build = app.add_subcommand("build", "Minimal proper labeling of k-gons");
  build->add_option("--k", o.k, "Polygon size (>= 7)")->required();
  add_out(build, "htl");

  auto* build_oriented = app.add_subcommand("build-oriented", "Minimal oriented labeling of k-gons");
  build_oriented->add_option("--k", o.k, "Polygon size (>= 7)")->required();
  add_out(build_oriented, "htl");

  auto* verify = app.add_subcommand("verify", "Check conditions (i)-(v) of an HTL document");
  add_input(verify);
  verify->add_flag("--oriented", o.oriented, "Also require an oriented labeling");
  verify->add_option("--out", o.out, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "JSON analysis of an HTL document");
  add_input(analyze);
  analyze->add_option("--out", o.out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Exhaustive search for proper labelings");
  search->add_option("--k", o.k, "Polygon size")->required();
  search->add_option("--n", o.n, "Polygon count")->required();
  search->add_flag("--oriented", o.oriented, "Only oriented labelings");
  search->add_option("--limit", o.limit, "Stop after this many labelings");
  search->add_option("--budget", o.budget, "Node budget (0 = unbounded)");
  search->add_option("--out", o.out, "Output file (default stdout)");
  search->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"htl", "json"}))->default_val("htl");

  auto* cover = app.add_subcommand("double-cover", "Orientation double cover of an HTL document");
  add_input(cover);
  add_out(cover, "htl");

  auto* dual = app.add_subcommand("dual", "Dual triangle tiling as JSON");
  add_input(dual);
  dual->add_option("--out", o.out, "Output file (default stdout)");

  auto* hamilton = app.add_subcommand("hamilton", "Double walk on a cubic graph, as a labeling");
  add_input(hamilton);
  hamilton->add_flag("--oriented", o.oriented, "Traverse each edge once in each direction");
  add_out(hamilton, "htl");

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of an HTL document");
  add_input(render_cmd);
  render_cmd->add_option("--out", o.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kStructuralError;
  }

  try {
    if (*build) return run_build(o, false);
    if (*build_oriented) return run_build(o, true);
    if (*verify) return run_verify(o);
    if (*analyze) return run_analyze(o);
    if (*search) return run_search(o);
    if (*cover) return run_double_cover(o);
    if (*dual) return run_dual(o);
    if (*hamilton) return run_hamilton(o);
    if (*render_cmd) return run_render(o);
  } catch (const htl::ConstructionIncomplete& e) {
    std::cerr << "htl: " << e.what() << "\n";
    return kSearchIncomplete;
  } catch (const htl::NotProperError& e) {
    std::cerr << "htl: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const htl::NotRepresentableError& e) {
    std::cerr << "htl: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const htl::Error& e) {
    std::cerr << "htl: " << e.what() << "\n";
    return kStructuralError;
  }
  return kStructuralError;
}
