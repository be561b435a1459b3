#include "htl/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace htl {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Flat indexing of corner slots across polygons.
class CornerIndex {
 public:
  explicit CornerIndex(const Labeling& labeling) : offsets_(labeling.polygon_count() + 1, 0) {
    for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
      offsets_[p + 1] = offsets_[p] + labeling.polygon_size(p);
      sizes_.push_back(labeling.polygon_size(p));
    }
  }

  std::size_t total() const { return offsets_.back(); }
  std::size_t size(std::size_t polygon) const { return sizes_[polygon]; }
  std::size_t id(CornerRef c) const { return offsets_[c.polygon] + c.position; }

  CornerRef corner(std::size_t id) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
    const auto p = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {p, id - offsets_[p]};
  }

  // Tail and head corners of an edge along the direction given by `sign`.
  std::pair<CornerRef, CornerRef> ends(EdgeRef e, int sign) const {
    const CornerRef start{e.polygon, e.position};
    const CornerRef end{e.polygon, (e.position + 1) % sizes_[e.polygon]};
    return sign > 0 ? std::pair{start, end} : std::pair{end, start};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> sizes_;
};

std::vector<EdgeGluing> gluings_of(const Labeling& labeling, const PairingTable& table) {
  std::vector<EdgeGluing> out;
  out.reserve(table.size());
  for (const auto& pr : table.pairs()) {
    out.push_back({pr.first, pr.second, intrinsic_sign(labeling.tail(pr.first), labeling.head(pr.first)),
                   intrinsic_sign(labeling.tail(pr.second), labeling.head(pr.second))});
  }
  return out;
}

std::vector<std::vector<CornerRef>> collect_classes(DisjointSets& sets, const CornerIndex& index) {
  std::map<std::size_t, std::vector<CornerRef>> groups;
  for (std::size_t id = 0; id < index.total(); ++id) groups[sets.find(id)].push_back(index.corner(id));
  std::vector<std::vector<CornerRef>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool polygons_connected(std::size_t polygon_count, const std::vector<EdgeGluing>& gluings) {
  if (polygon_count == 0) return true;
  DisjointSets sets(polygon_count);
  for (const auto& g : gluings) sets.unite(g.e.polygon, g.f.polygon);
  for (std::size_t p = 1; p < polygon_count; ++p) {
    if (sets.find(p) != sets.find(0)) return false;
  }
  return true;
}

void finish(GluedSurface& s) {
  s.vertices = s.vertex_classes.size();
  s.edges = s.gluings.size();
  s.faces = s.polygon_count;
  s.chi = static_cast<long>(s.vertices) - static_cast<long>(s.edges) + static_cast<long>(s.faces);
  s.connected = polygons_connected(s.polygon_count, s.gluings);
  if (!s.connected) throw ConsistencyError("glued complex is disconnected");
  const auto o = orientability(s);
  s.orientable = o.orientable;
  s.polygon_signs = o.polygon_signs;
}

}  // namespace

GluedSurface glue(const Labeling& labeling, SizeMode size_mode) {
  const auto table = pairing(labeling, size_mode);
  const CornerIndex index(labeling);
  DisjointSets sets(index.total());

  GluedSurface s;
  s.polygon_count = labeling.polygon_count();
  s.gluings = gluings_of(labeling, table);
  for (const auto& g : s.gluings) {
    const auto [te, he] = index.ends(g.e, g.sign_e);
    const auto [tf, hf] = index.ends(g.f, g.sign_f);
    sets.unite(index.id(te), index.id(tf));
    sets.unite(index.id(he), index.id(hf));
  }
  s.vertex_classes = collect_classes(sets, index);

  s.label_class_match = s.vertex_classes.size() == static_cast<std::size_t>(labeling.label_count()) &&
                        std::all_of(s.vertex_classes.begin(), s.vertex_classes.end(), [&](const auto& cls) {
                          return cls.size() == 3 && std::all_of(cls.begin(), cls.end(), [&](CornerRef c) {
                                   return labeling.at(c) == labeling.at(cls.front());
                                 });
                        });
  finish(s);
  return s;
}

Orientability orientability(const GluedSurface& surface) {
  const std::size_t n = surface.polygon_count;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& g : surface.gluings) {
    // sign(P_f) = -sign(P_e) * sign_e * sign_f
    const int rel = -g.sign_e * g.sign_f;
    adj[g.e.polygon].push_back({g.f.polygon, rel});
    adj[g.f.polygon].push_back({g.e.polygon, rel});
  }
  std::vector<int> sign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop();
      for (const auto& [q, rel] : adj[p]) {
        const int want = sign[p] * rel;
        if (sign[q] == 0) {
          sign[q] = want;
          queue.push(q);
        } else if (sign[q] != want) {
          return {false, {}};
        }
      }
    }
  }
  return {true, sign};
}

SurfaceType classify(long chi, bool orientable) {
  if (orientable) {
    if (chi % 2 != 0 || chi > 2) {
      throw ConsistencyError("orientable surface cannot have Euler characteristic " + std::to_string(chi));
    }
    return {true, (2 - chi) / 2, 0};
  }
  if (chi > 1) {
    throw ConsistencyError("non-orientable surface cannot have Euler characteristic " + std::to_string(chi));
  }
  return {false, 0, 2 - chi};
}

SurfaceType classify(const GluedSurface& surface) { return classify(surface.chi, surface.orientable); }

DualTiling dual(const GluedSurface& surface, const Labeling& labeling) {
  if (!surface.label_class_match) throw PreconditionError("dual: vertex classes differ from label classes");
  if (!labeling.regular_size()) throw PreconditionError("dual: labeling is not regular");
  if (surface.polygon_count != labeling.polygon_count()) throw PreconditionError("dual: surface/labeling mismatch");

  const CornerIndex index(labeling);
  // For every edge slot, its gluing partner and whether tail maps to tail.
  struct Across {
    EdgeRef partner;
    int sign_self;
    int sign_partner;
  };
  std::map<EdgeRef, Across> across;
  for (const auto& g : surface.gluings) {
    across[g.e] = {g.f, g.sign_e, g.sign_f};
    across[g.f] = {g.e, g.sign_f, g.sign_e};
  }

  DualTiling d;
  for (const auto& cls : surface.vertex_classes) {
    DualTriangle tri;
    tri.label = labeling.at(cls.front());
    CornerRef c = cls.front();
    EdgeRef leave{c.polygon, c.position};  // edge starting at c
    for (std::size_t step = 0; step < 3; ++step) {
      tri.polygons[step] = c.polygon;
      const auto& a = across.at(leave);
      const bool c_is_tail = index.ends(leave, a.sign_self).first == c;
      const auto partner_ends = index.ends(a.partner, a.sign_partner);
      const CornerRef next = c_is_tail ? partner_ends.first : partner_ends.second;
      // Leave the next corner through its other edge.
      const std::size_t k = index.size(next.polygon);
      const EdgeRef out_edge{next.polygon, next.position};
      const EdgeRef in_edge{next.polygon, (next.position + k - 1) % k};
      leave = a.partner == out_edge ? in_edge : out_edge;
      c = next;
    }
    if (c != cls.front()) throw ConsistencyError("dual: vertex rotation does not close after three corners");
    d.triangles.push_back(tri);
  }
  std::sort(d.triangles.begin(), d.triangles.end(),
            [](const DualTriangle& a, const DualTriangle& b) { return a.label < b.label; });

  for (const auto& g : surface.gluings) {
    const Label a = labeling.tail(g.e);
    const Label b = labeling.head(g.e);
    d.adjacency.push_back({std::min(a, b), std::max(a, b)});
  }
  d.vertices = labeling.polygon_count();
  d.edges = surface.gluings.size();
  d.faces = d.triangles.size();
  d.chi = static_cast<long>(d.vertices) - static_cast<long>(d.edges) + static_cast<long>(d.faces);
  return d;
}

Labeling reorient(const Labeling& labeling, const std::vector<int>& polygon_signs) {
  if (polygon_signs.size() != labeling.polygon_count()) throw PreconditionError("reorient: sign count mismatch");
  std::vector<Polygon> polys = labeling.polygons();
  for (std::size_t p = 0; p < polys.size(); ++p) {
    if (polygon_signs[p] < 0) std::reverse(polys[p].begin(), polys[p].end());
  }
  return Labeling(std::move(polys), labeling.label_count());
}

namespace {

// Union-find over the corners of both sheets, in original polygon coordinates.
// Sheet 0 carries the original orientation, sheet 1 the reversed one.
struct Cover {
  std::vector<EdgeGluing> base;
  std::size_t n = 0;
  std::size_t corners = 0;
  DisjointSets sets{0};
  std::vector<EdgeGluing> lifted;  // in cover coordinates
};

Cover lift(const Labeling& labeling) {
  const auto table = pairing(labeling, SizeMode::kRelaxed);
  const CornerIndex index(labeling);
  Cover c;
  c.base = gluings_of(labeling, table);
  c.n = labeling.polygon_count();
  c.corners = index.total();
  c.sets = DisjointSets(2 * c.corners);

  auto sheet_polygon = [&](std::size_t p, int sheet) { return sheet > 0 ? p : c.n + p; };
  // Edge position inside the reversed copy of a polygon of size k.
  auto cover_edge = [&](EdgeRef e, int sheet) -> EdgeRef {
    if (sheet > 0) return e;
    const std::size_t k = index.size(e.polygon);
    return {sheet_polygon(e.polygon, sheet), (2 * k - 2 - e.position) % k};
  };

  for (const auto& g : c.base) {
    for (int s : {1, -1}) {
      const int s2 = -s * g.sign_e * g.sign_f;
      const auto [te, he] = index.ends(g.e, g.sign_e);
      const auto [tf, hf] = index.ends(g.f, g.sign_f);
      const std::size_t off_e = s > 0 ? 0 : c.corners;
      const std::size_t off_f = s2 > 0 ? 0 : c.corners;
      c.sets.unite(off_e + index.id(te), off_f + index.id(tf));
      c.sets.unite(off_e + index.id(he), off_f + index.id(hf));
      c.lifted.push_back({cover_edge(g.e, s), cover_edge(g.f, s2), s * g.sign_e, s2 * g.sign_f});
    }
  }
  return c;
}

}  // namespace

GluedSurface cover_surface(const Labeling& labeling) {
  auto c = lift(labeling);
  const CornerIndex index(labeling);
  GluedSurface s;
  s.polygon_count = 2 * c.n;
  s.gluings = c.lifted;

  std::map<std::size_t, std::vector<CornerRef>> groups;
  for (std::size_t id = 0; id < 2 * c.corners; ++id) {
    const bool second = id >= c.corners;
    const CornerRef base = index.corner(second ? id - c.corners : id);
    CornerRef mapped = base;
    if (second) {
      const std::size_t k = index.size(base.polygon);
      mapped = {c.n + base.polygon, k - 1 - base.position};
    }
    groups[c.sets.find(id)].push_back(mapped);
  }
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    s.vertex_classes.push_back(std::move(members));
  }
  std::sort(s.vertex_classes.begin(), s.vertex_classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  s.label_class_match = false;
  finish(s);
  return s;
}

Labeling double_cover(const Labeling& labeling) {
  const auto base = glue(labeling, SizeMode::kRelaxed);
  if (base.orientable) throw PreconditionError("double_cover: surface is already orientable");

  auto c = lift(labeling);
  const CornerIndex index(labeling);
  std::map<std::size_t, Label> names;
  std::vector<Polygon> polys;
  for (int sheet : {1, -1}) {
    for (std::size_t p = 0; p < c.n; ++p) {
      const std::size_t k = index.size(p);
      Polygon out;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t pos = sheet > 0 ? j : k - 1 - j;
        const std::size_t id = (sheet > 0 ? 0 : c.corners) + index.id({p, pos});
        const auto root = c.sets.find(id);
        auto [it, inserted] = names.try_emplace(root, static_cast<Label>(names.size() + 1));
        out.push_back(it->second);
      }
      polys.push_back(std::move(out));
    }
  }
  Labeling result(std::move(polys), static_cast<Label>(names.size()));
  const auto report = verify(result, SizeMode::kRelaxed);
  if (!report.proper) {
    throw NotRepresentableError(
        "double_cover: cover vertex classes do not form a proper labeling (condition " +
        std::string(condition_name(*report.first_failure())) + "); fold pairs lift to parallel edges");
  }
  return result;
}

}  // namespace htl
