#include <algorithm>
#include <optional>

#include "htl/labeling.hpp"

namespace htl {

namespace {

// First-occurrence renaming of one rotated polygon against a partial renaming.
// `rename` is updated in place; `fresh` is the next unused target label.
Polygon rename_rotation(std::span<const Label> poly, std::size_t rotation, std::vector<Label>& rename,
                        Label& fresh) {
  const std::size_t k = poly.size();
  Polygon out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Label l = poly[(rotation + i) % k];
    auto& target = rename[static_cast<std::size_t>(l)];
    if (target == 0) target = fresh++;
    out[i] = target;
  }
  return out;
}

// Exact lexicographic minimisation over polygon orders and rotations. Each level
// picks the least renamed next polygon; ties branch.
class Canonicalizer {
 public:
  Canonicalizer(const std::vector<Polygon>& polys, Label label_count)
      : polys_(polys), used_(polys.size(), false), rename_(static_cast<std::size_t>(label_count) + 1, 0) {}

  std::vector<Polygon> run() {
    descend();
    return std::move(*best_);
  }

 private:
  struct Choice {
    std::size_t polygon;
    std::size_t rotation;
  };

  void descend() {
    const std::size_t depth = current_.size();
    if (depth == polys_.size()) {
      if (!best_ || current_ < *best_) best_ = current_;
      return;
    }

    std::optional<Polygon> least;
    std::vector<Choice> ties;
    for (std::size_t p = 0; p < polys_.size(); ++p) {
      if (used_[p]) continue;
      for (std::size_t r = 0; r < polys_[p].size(); ++r) {
        auto scratch = rename_;
        Label fresh = fresh_;
        auto seq = rename_rotation(polys_[p], r, scratch, fresh);
        if (!least || seq < *least) {
          least = std::move(seq);
          ties.assign(1, {p, r});
        } else if (seq == *least) {
          ties.push_back({p, r});
        }
      }
    }

    if (best_ && worse_than_best(*least)) return;

    for (const Choice& c : ties) {
      const auto saved_rename = rename_;
      const Label saved_fresh = fresh_;
      current_.push_back(rename_rotation(polys_[c.polygon], c.rotation, rename_, fresh_));
      used_[c.polygon] = true;
      descend();
      used_[c.polygon] = false;
      current_.pop_back();
      rename_ = saved_rename;
      fresh_ = saved_fresh;
    }
  }

  bool worse_than_best(const Polygon& next) const {
    const std::size_t depth = current_.size();
    for (std::size_t i = 0; i < depth; ++i) {
      if (current_[i] != (*best_)[i]) return (*best_)[i] < current_[i];
    }
    return (*best_)[depth] < next;
  }

  const std::vector<Polygon>& polys_;
  std::vector<bool> used_;
  std::vector<Label> rename_;
  Label fresh_ = 1;
  std::vector<Polygon> current_;
  std::optional<std::vector<Polygon>> best_;
};

std::vector<Polygon> reversed_polygons(const std::vector<Polygon>& polys) {
  std::vector<Polygon> out = polys;
  for (auto& poly : out) std::reverse(poly.begin(), poly.end());
  return out;
}

}  // namespace

Labeling reflect(const Labeling& labeling) {
  return Labeling(reversed_polygons(labeling.polygons()), labeling.label_count());
}

Labeling canonicalize(const Labeling& labeling, bool allow_reflection) {
  auto best = Canonicalizer(labeling.polygons(), labeling.label_count()).run();
  if (allow_reflection) {
    const auto mirrored = reversed_polygons(labeling.polygons());
    auto other = Canonicalizer(mirrored, labeling.label_count()).run();
    if (other < best) best = std::move(other);
  }
  return Labeling(std::move(best), labeling.label_count());
}

Polygon minimal_polygon_form(std::span<const Label> polygon, bool allow_reflection) {
  Label max_label = 0;
  for (Label l : polygon) max_label = std::max(max_label, l);
  std::optional<Polygon> best;
  auto consider = [&](std::span<const Label> poly) {
    for (std::size_t r = 0; r < poly.size(); ++r) {
      std::vector<Label> rename(static_cast<std::size_t>(max_label) + 1, 0);
      Label fresh = 1;
      auto seq = rename_rotation(poly, r, rename, fresh);
      if (!best || seq < *best) best = std::move(seq);
    }
  };
  consider(polygon);
  if (allow_reflection) {
    Polygon mirrored(polygon.rbegin(), polygon.rend());
    consider(mirrored);
  }
  return best.value_or(Polygon{});
}

}  // namespace htl
