#include "htl/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "htl/builders.hpp"
#include "htl/surface.hpp"

namespace htl {

Analysis analyze(const Labeling& labeling, SizeMode size_mode) {
  Analysis a;
  a.n = labeling.polygon_count();
  a.m = labeling.label_count();
  for (const auto& poly : labeling.polygons()) a.sizes.push_back(poly.size());
  a.k = labeling.regular_size();
  a.triangles = static_cast<std::size_t>(a.m);

  auto report = verify(labeling, size_mode);
  a.proper = report.proper;
  if (!a.proper) {
    a.violations = std::move(report.violations);
    return a;
  }
  a.oriented_labeling = report.oriented;

  const GluedSurface s = glue(labeling, size_mode);
  const SurfaceType type = classify(s);
  a.topology = Topology{s.vertices, s.edges, s.faces, s.chi, s.orientable, type.genus, type.crosscaps};
  if (s.chi < 0) a.area = area_from_chi(s.chi);

  if (a.k && *a.k >= kMinPolygonSize) {
    const auto k = static_cast<std::int64_t>(*a.k);
    const auto n = static_cast<std::int64_t>(a.n);
    a.eek_admissible = eek_admissible(static_cast<std::int64_t>(a.m), k);
    a.n_min = n_min(k);
    a.minimal = n == *a.n_min;
    a.triangle_bound_equality = a.area && *a.area == triangle_bound_value(n, k);
    if (*a.minimal) a.subgroup_index = 2 * n * k;
    a.oriented_minimal = s.orientable && a.area && *a.area == minimal_area(k).oriented;
  }
  return a;
}

std::string analyze_export(const Labeling& labeling, SizeMode size_mode) {
  const Analysis a = analyze(labeling, size_mode);
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["m"] = a.m;
  j["k"] = a.k ? nlohmann::ordered_json(*a.k) : nlohmann::ordered_json(nullptr);
  j["sizes"] = a.sizes;
  j["proper"] = a.proper;
  if (!a.proper) {
    auto& list = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : a.violations) {
      list.push_back({{"condition", condition_name(v.condition)}, {"description", v.describe()}});
    }
    return j.dump(2) + "\n";
  }
  j["oriented_labeling"] = a.oriented_labeling;
  const auto& t = *a.topology;
  nlohmann::ordered_json topo{{"vertices", t.vertices}, {"edges", t.edges},          {"faces", t.faces},
                              {"chi", t.chi},           {"orientable", t.orientable}};
  if (t.orientable) {
    topo["genus"] = t.genus;
  } else {
    topo["crosscaps"] = t.crosscaps;
  }
  j["topology"] = topo;
  if (a.area) {
    j["area"] = {{"exact", a.area->to_string()}, {"value", a.area->value()}};
  } else {
    j["area"] = nullptr;
  }
  j["triangles"] = a.triangles;
  auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  j["eek_admissible"] = opt(a.eek_admissible);
  j["n_min"] = opt(a.n_min);
  j["minimal"] = opt(a.minimal);
  j["triangle_bound_equality"] = opt(a.triangle_bound_equality);
  j["subgroup_index"] = opt(a.subgroup_index);
  j["oriented_minimal"] = opt(a.oriented_minimal);
  return j.dump(2) + "\n";
}

namespace {

constexpr double kCell = 260;
constexpr double kRadius = 95;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string colour(std::size_t index, std::size_t count) {
  // Spread hues; alternate lightness so neighbours in the sequence differ.
  const double hue = std::fmod(index * 360.0 / static_cast<double>(count) + (index % 2) * 180.0, 360.0);
  return "hsl(" + fixed(hue) + ",70%," + (index % 3 == 0 ? "40%" : index % 3 == 1 ? "50%" : "30%") + ")";
}

}  // namespace

std::string render_svg(const Labeling& labeling, SizeMode size_mode) {
  if (labeling.polygon_count() > kMaxRenderedPolygons) {
    throw PreconditionError("render_svg: at most " + std::to_string(kMaxRenderedPolygons) + " polygons");
  }
  const PairingTable table = pairing(labeling, size_mode);

  const std::size_t n = labeling.polygon_count();
  const auto columns = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t rows = (n + columns - 1) / columns;
  const double width = static_cast<double>(columns) * kCell;
  const double height = static_cast<double>(rows) * kCell;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < n; ++p) {
    const auto poly = labeling.polygon(p);
    const std::size_t k = poly.size();
    const double cx = (static_cast<double>(p % columns) + 0.5) * kCell;
    const double cy = (static_cast<double>(p / columns) + 0.5) * kCell;
    auto corner = [&](std::size_t i, double r) {
      const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
      return std::pair{cx + r * std::cos(a), cy + r * std::sin(a)};
    };

    out += "<g id=\"polygon-" + std::to_string(p + 1) + "\">\n";
    out += "<text x=\"" + fixed(cx) + "\" y=\"" + fixed(cy + 5) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"#888\">P" +
           std::to_string(p + 1) + "</text>\n";
    for (std::size_t i = 0; i < k; ++i) {
      const EdgeRef e{p, i};
      const ProperPair& pr = table.pair_of(e);
      const auto index = static_cast<std::size_t>(&pr - table.pairs().data());
      const auto [x1, y1] = corner(i, kRadius);
      const auto [x2, y2] = corner((i + 1) % k, kRadius);
      out += "<line class=\"pair-" + std::to_string(index + 1) + "\" x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) +
             "\" x2=\"" + fixed(x2) + "\" y2=\"" + fixed(y2) + "\" stroke=\"" + colour(index, table.size()) +
             "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto [x, y] = corner(i, kRadius + 16);
      out += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(y + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(poly[i]) +
             "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace htl
