#include "htl/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace htl {

std::string_view status_name(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::kComplete:
      return "complete";
    case SearchStatus::kLimitReached:
      return "limit-reached";
    case SearchStatus::kIncomplete:
      return "incomplete";
  }
  return "?";
}

namespace {

// Runs fn(0..count-1) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  // Lowest task index whose own results already fill the limit.
  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
};

struct TaskResult {
  std::vector<Labeling> found;  // discovery order, distinct
  bool aborted = false;
};

// Incremental state for assigning labels slot by slot. push() either accepts a
// label and records how to undo it, or leaves the state untouched.
class LabelSearch {
 public:
  LabelSearch(std::size_t k, std::size_t n, const SearchOptions& options, Shared& shared)
      : k_(k),
        n_(n),
        total_(k * n),
        m_(static_cast<Label>(k * n / 3)),
        options_(options),
        fold_free_(options.fold_free || options.oriented_only),
        shared_(shared),
        seq_(total_, 0),
        count_(static_cast<std::size_t>(m_) + 1, 0),
        pair_count_((static_cast<std::size_t>(m_) + 1) * (static_cast<std::size_t>(m_) + 1), 0),
        pair_sign_(pair_count_.size(), 0),
        neighbours_(static_cast<std::size_t>(m_) + 1, 0) {}

  std::size_t depth() const { return depth_; }
  std::size_t total() const { return total_; }
  const std::vector<Label>& sequence() const { return seq_; }

  Label choices() const { return std::min<Label>(max_used_ + 1, m_); }

  bool push(Label l) {
    const std::size_t t = depth_;
    const std::size_t i = t % k_;
    const std::size_t base = t - i;
    if (count_[l] >= 3 || l > max_used_ + 1) return false;

    if (i >= 1) {
      const Label a = seq_[t - 1];
      if (a == l) {
        if (fold_free_) return false;
      } else {
        // Run of `a` ending just before t.
        std::size_t r = 1;
        while (r < i && seq_[t - 1 - r] == a) ++r;
        const std::size_t s = i - r;
        if (s > 0 && r == 2) return false;
        // a a a exhausts a, so the labels on both sides must match.
        if (s > 0 && r == 3 && seq_[base + s - 1] != l) return false;
        if (i >= 2 && seq_[t - 2] == l) return false;
      }
    }

    Frame frame;
    frame.max_used = max_used_;
    frame.edges_mark = edge_undo_.size();
    frame.forms_mark = forms_.size();
    seq_[t] = l;
    ++count_[l];
    max_used_ = std::max(max_used_, l);
    ++depth_;
    frames_.push_back(frame);

    bool ok = true;
    if (i >= 1 && seq_[t - 1] != l) ok = add_edge(seq_[t - 1], l);
    if (ok && i == k_ - 1) ok = close_polygon(base);
    if (!ok) {
      pop();
      return false;
    }
    return true;
  }

  void pop() {
    const Frame frame = frames_.back();
    frames_.pop_back();
    --depth_;
    const Label l = seq_[depth_];
    --count_[l];
    seq_[depth_] = 0;
    max_used_ = frame.max_used;
    while (edge_undo_.size() > frame.edges_mark) {
      const auto& u = edge_undo_.back();
      pair_count_[u.key] = u.count;
      pair_sign_[u.key] = u.sign;
      neighbours_[u.a] = u.mask_a;
      neighbours_[u.b] = u.mask_b;
      edge_undo_.pop_back();
    }
    forms_.resize(frame.forms_mark);
  }

  bool leaf_accepts(Labeling& out) const {
    std::vector<Polygon> polys;
    for (std::size_t j = 0; j < n_; ++j) {
      polys.emplace_back(seq_.begin() + static_cast<std::ptrdiff_t>(j * k_),
                         seq_.begin() + static_cast<std::ptrdiff_t>((j + 1) * k_));
    }
    Labeling candidate(std::move(polys), m_);
    const auto report = verify(candidate, options_.size_mode);
    if (!report.proper || (options_.oriented_only && !report.oriented)) return false;
    out = std::move(candidate);
    return true;
  }

  // Counts one node; false when the search must stop.
  bool tick() {
    const auto used = ++shared_.nodes;
    if (options_.node_budget != 0 && used > options_.node_budget) {
      shared_.out_of_budget = true;
      return false;
    }
    return !shared_.out_of_budget.load(std::memory_order_relaxed);
  }

 private:
  struct Frame {
    Label max_used;
    std::size_t edges_mark;
    std::size_t forms_mark;
  };
  struct EdgeUndo {
    std::size_t key;
    std::uint8_t count;
    std::int8_t sign;
    Label a, b;
    std::uint64_t mask_a, mask_b;
  };

  std::size_t key(Label a, Label b) const {
    return static_cast<std::size_t>(std::min(a, b)) * (static_cast<std::size_t>(m_) + 1) +
           static_cast<std::size_t>(std::max(a, b));
  }

  // Boundary edge tail -> head with distinct labels.
  bool add_edge(Label tail, Label head) {
    const std::size_t kk = key(tail, head);
    edge_undo_.push_back({kk, pair_count_[kk], pair_sign_[kk], tail, head, neighbours_[tail], neighbours_[head]});
    if (pair_count_[kk] >= 2) return false;
    const auto sign = static_cast<std::int8_t>(intrinsic_sign(tail, head));
    if (options_.oriented_only && pair_count_[kk] == 1 && pair_sign_[kk] == sign) return false;
    ++pair_count_[kk];
    pair_sign_[kk] = sign;
    neighbours_[tail] |= std::uint64_t{1} << head;
    neighbours_[head] |= std::uint64_t{1} << tail;
    return std::popcount(neighbours_[tail]) <= 3 && std::popcount(neighbours_[head]) <= 3;
  }

  bool close_polygon(std::size_t base) {
    const Label last = seq_[base + k_ - 1];
    const Label first = seq_[base];
    if (first == last) {
      if (fold_free_) return false;
    } else if (!add_edge(last, first)) {
      return false;
    }
    const std::span<const Label> poly(seq_.data() + base, k_);
    if (!cyclic_shape_ok(poly)) return false;
    Polygon form = minimal_polygon_form(poly, true);
    if (forms_.empty()) {
      if (!std::equal(form.begin(), form.end(), poly.begin())) return false;
    } else if (form < forms_.back()) {
      return false;
    }
    forms_.push_back(std::move(form));
    return true;
  }

  // Runs of length 1 or 3 and no x a x patterns, read cyclically.
  static bool cyclic_shape_ok(std::span<const Label> poly) {
    const std::size_t k = poly.size();
    std::size_t start = 0;
    while (start < k && poly[start] == poly[(start + k - 1) % k]) ++start;
    if (start == k) return false;
    for (std::size_t i = 0; i < k;) {
      std::size_t r = 1;
      while (r < k && poly[(start + i + r) % k] == poly[(start + i) % k]) ++r;
      if (r != 1 && r != 3) return false;
      i += r;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Label before = poly[(i + k - 1) % k];
      if (before == poly[(i + 1) % k] && before != poly[i]) return false;
    }
    return true;
  }

  std::size_t k_, n_, total_;
  Label m_;
  const SearchOptions& options_;
  bool fold_free_;
  Shared& shared_;

  std::vector<Label> seq_;
  std::vector<std::uint8_t> count_;
  std::vector<std::uint8_t> pair_count_;
  std::vector<std::int8_t> pair_sign_;
  std::vector<std::uint64_t> neighbours_;
  std::vector<Polygon> forms_;
  std::vector<Frame> frames_;
  std::vector<EdgeUndo> edge_undo_;
  std::size_t depth_ = 0;
  Label max_used_ = 0;
};

constexpr std::size_t kSplitDepth = 6;

void collect_prefixes(LabelSearch& s, std::size_t depth, std::vector<std::vector<Label>>& out) {
  if (s.depth() == depth || s.depth() == s.total()) {
    out.emplace_back(s.sequence().begin(), s.sequence().begin() + static_cast<std::ptrdiff_t>(s.depth()));
    return;
  }
  for (Label l = 1; l <= s.choices(); ++l) {
    if (!s.push(l)) continue;
    collect_prefixes(s, depth, out);
    s.pop();
  }
}

class Task {
 public:
  Task(LabelSearch& s, std::size_t index, std::size_t limit, Shared& shared)
      : s_(s), index_(index), limit_(limit), shared_(shared) {}

  TaskResult run() {
    descend();
    return std::move(result_);
  }

 private:
  bool stopped() {
    if (shared_.cutoff.load(std::memory_order_relaxed) < index_) return true;
    return !s_.tick();
  }

  // Returns false to unwind.
  bool descend() {
    if (stopped()) {
      result_.aborted = true;
      return false;
    }
    if (s_.depth() == s_.total()) {
      Labeling candidate;
      if (s_.leaf_accepts(candidate)) {
        auto form = canonicalize(candidate);
        if (seen_.insert(form).second) {
          result_.found.push_back(std::move(form));
          if (result_.found.size() >= limit_) {
            auto current = shared_.cutoff.load();
            while (index_ < current && !shared_.cutoff.compare_exchange_weak(current, index_)) {
            }
            return false;
          }
        }
      }
      return true;
    }
    for (Label l = 1; l <= s_.choices(); ++l) {
      if (!s_.push(l)) continue;
      const bool go_on = descend();
      s_.pop();
      if (!go_on) return false;
    }
    return true;
  }

  LabelSearch& s_;
  std::size_t index_;
  std::size_t limit_;
  Shared& shared_;
  std::set<Labeling> seen_;
  TaskResult result_;
};

}  // namespace

SearchResult search_labelings(std::size_t k, std::size_t n, const SearchOptions& options) {
  if (k < 3 || n < 1) throw PreconditionError("search_labelings: need k >= 3 and n >= 1");
  if (options.size_mode == SizeMode::kStrict && k < kMinPolygonSize) {
    throw PreconditionError("search_labelings: k < 7 requires relaxed size mode");
  }
  if (options.limit == 0) throw PreconditionError("search_labelings: limit must be positive");

  SearchResult result;
  const std::size_t total = n * k;
  if (total % 3 != 0 || (total / 3) % 2 != 0) {
    result.note = "n*k is not divisible by 6";
    return result;
  }
  if (total > options.max_slots) {
    result.status = SearchStatus::kIncomplete;
    result.note = "n*k = " + std::to_string(total) + " exceeds the slot budget " + std::to_string(options.max_slots);
    return result;
  }
  if (total / 3 > 63) {
    result.status = SearchStatus::kIncomplete;
    result.note = "more than 63 labels";
    return result;
  }

  Shared shared;
  std::vector<std::vector<Label>> prefixes;
  {
    LabelSearch s(k, n, options, shared);
    collect_prefixes(s, std::min(kSplitDepth, total), prefixes);
  }

  std::vector<TaskResult> tasks(prefixes.size());
  parallel_for(prefixes.size(), options.threads, [&](std::size_t index) {
    LabelSearch s(k, n, options, shared);
    for (Label l : prefixes[index]) {
      if (!s.push(l)) throw ConsistencyError("search_labelings: prefix replay failed");
    }
    tasks[index] = Task(s, index, options.limit, shared).run();
  });

  // Merge in prefix order so the outcome matches a sequential run.
  std::set<Labeling> merged;
  bool limit_hit = false;
  for (const auto& task : tasks) {
    for (const auto& form : task.found) {
      merged.insert(form);
      if (merged.size() >= options.limit) {
        limit_hit = true;
        break;
      }
    }
    if (limit_hit) break;
  }
  result.nodes = shared.nodes;
  result.labelings.assign(merged.begin(), merged.end());
  if (limit_hit) {
    result.status = SearchStatus::kLimitReached;
  } else if (shared.out_of_budget) {
    result.status = SearchStatus::kIncomplete;
    result.note = "node budget of " + std::to_string(options.node_budget) + " exhausted";
  }
  return result;
}

// ---------------------------------------------------------------------------
// Graphs

std::vector<std::vector<std::size_t>> CubicGraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].first].push_back(e);
    inc[edges[e].second].push_back(e);
  }
  return inc;
}

CubicGraph make_cubic_graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                            bool allow_parallel) {
  std::vector<std::size_t> degree(vertex_count, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw GraphError(GraphDefect::kRange, "edge endpoint outside 1.." + std::to_string(vertex_count));
    }
    if (u == v) throw GraphError(GraphDefect::kLoop, "loop at vertex " + std::to_string(u + 1));
    if (!seen.insert(std::minmax(u, v)).second && !allow_parallel) {
      throw GraphError(GraphDefect::kParallel,
                       "parallel edges between " + std::to_string(u + 1) + " and " + std::to_string(v + 1));
    }
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (degree[v] != 3) {
      throw GraphError(GraphDefect::kDegree,
                       "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(degree[v]) + ", not 3");
    }
  }
  CubicGraph g{vertex_count, std::move(edges)};
  if (vertex_count == 0) throw GraphError(GraphDefect::kDegree, "graph has no vertices");
  const auto inc = g.incidence();
  std::vector<bool> reached(vertex_count, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : inc[v]) {
      const std::size_t w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw GraphError(GraphDefect::kDisconnected, "graph is not connected");
  }
  return g;
}

CubicGraph complete_graph_k4() { return make_cubic_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

namespace {

std::size_t other_end(const CubicGraph& g, std::size_t e, std::size_t v) {
  return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
}

class WalkSearch {
 public:
  WalkSearch(const CubicGraph& g, bool both_directions)
      : g_(g),
        inc_(g.incidence()),
        both_(both_directions),
        length_(2 * g.edges.size()),
        uses_(g.edges.size(), 0),
        forward_(g.edges.size(), false),
        backward_(g.edges.size(), false) {}

  // Calls visit on each completed walk whose first edge is `first`; visit
  // returns true to stop. Returns whether it was stopped.
  template <class Visit>
  bool from_first_edge(std::size_t first, Visit&& visit) {
    walk_ = {};
    if (!step(0, first)) return false;
    const bool stopped = descend(visit);
    if (!stopped) unstep();
    return stopped;
  }

 private:
  bool step(std::size_t v, std::size_t e) {
    if (uses_[e] >= 2) return false;
    if (!walk_.edges.empty() && walk_.edges.back() == e) return false;
    const bool fwd = g_.edges[e].first == v;
    if (both_ && (fwd ? forward_[e] : backward_[e])) return false;
    ++uses_[e];
    (fwd ? forward_[e] : backward_[e]) = true;
    walk_.vertices.push_back(v);
    walk_.edges.push_back(e);
    return true;
  }

  void unstep() {
    const std::size_t v = walk_.vertices.back();
    const std::size_t e = walk_.edges.back();
    --uses_[e];
    // With parallel use of the same direction impossible under both_, resetting is exact;
    // without both_ the flags are unused.
    (g_.edges[e].first == v ? forward_[e] : backward_[e]) = false;
    walk_.vertices.pop_back();
    walk_.edges.pop_back();
  }

  template <class Visit>
  bool descend(Visit& visit) {
    const std::size_t v = other_end(g_, walk_.edges.back(), walk_.vertices.back());
    if (walk_.edges.size() == length_) return v == 0 && walk_.edges.back() != walk_.edges.front() && visit(walk_);
    for (std::size_t e : inc_[v]) {
      if (!step(v, e)) continue;
      if (descend(visit)) return true;
      unstep();
    }
    return false;
  }

  const CubicGraph& g_;
  std::vector<std::vector<std::size_t>> inc_;
  bool both_;
  std::size_t length_;
  std::vector<std::uint8_t> uses_;
  std::vector<bool> forward_, backward_;
  DoubleWalk walk_;
};

}  // namespace

bool is_double_walk(const CubicGraph& graph, const DoubleWalk& walk, bool both_directions) {
  const std::size_t length = walk.edges.size();
  if (length != 2 * graph.edges.size() || walk.vertices.size() != length || length == 0) return false;
  std::vector<int> uses(graph.edges.size(), 0), forward(graph.edges.size(), 0);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t e = walk.edges[i];
    const std::size_t v = walk.vertices[i];
    if (e >= graph.edges.size() || v >= graph.vertex_count) return false;
    const auto [a, b] = graph.edges[e];
    if (v != a && v != b) return false;
    if (other_end(graph, e, v) != walk.vertices[(i + 1) % length]) return false;
    if (walk.edges[(i + 1) % length] == e) return false;
    ++uses[e];
    if (v == a) ++forward[e];
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (uses[e] != 2) return false;
    if (both_directions && forward[e] != 1) return false;
  }
  return true;
}

std::optional<DoubleWalk> double_hamiltonian(const CubicGraph& graph, bool both_directions, unsigned threads) {
  if (graph.vertex_count == 0) return std::nullopt;
  const auto first_edges = graph.incidence()[0];
  std::vector<std::optional<DoubleWalk>> found(first_edges.size());
  parallel_for(first_edges.size(), threads, [&](std::size_t i) {
    WalkSearch search(graph, both_directions);
    search.from_first_edge(first_edges[i], [&](const DoubleWalk& w) {
      found[i] = w;
      return true;
    });
  });
  for (auto& w : found) {
    if (w) return w;
  }
  return std::nullopt;
}

std::vector<DoubleWalk> double_walks(const CubicGraph& graph, bool both_directions, std::size_t limit) {
  std::vector<DoubleWalk> out;
  if (graph.vertex_count == 0 || limit == 0) return out;
  WalkSearch search(graph, both_directions);
  const auto first_edges = graph.incidence()[0];
  for (std::size_t first : first_edges) {
    const bool stopped = search.from_first_edge(first, [&](const DoubleWalk& w) {
      out.push_back(w);
      return out.size() >= limit;
    });
    if (stopped) break;
  }
  return out;
}

Labeling walk_to_labeling(const CubicGraph& graph, const DoubleWalk& walk) {
  if (!is_double_walk(graph, walk)) throw PreconditionError("walk_to_labeling: not a double walk on the graph");
  Polygon poly;
  for (std::size_t v : walk.vertices) poly.push_back(static_cast<Label>(v + 1));
  Labeling out({std::move(poly)}, static_cast<Label>(graph.vertex_count));
  const auto report = verify(out, SizeMode::kRelaxed);
  if (!report.proper) {
    throw NotRepresentableError("walk_to_labeling: walk labeling fails condition " +
                                std::string(condition_name(*report.first_failure())));
  }
  return out;
}

std::pair<CubicGraph, DoubleWalk> labeling_to_walk(const Labeling& labeling) {
  if (labeling.polygon_count() != 1) throw PreconditionError("labeling_to_walk: needs exactly one polygon");
  const auto poly = labeling.polygon(0);
  const std::size_t k = poly.size();
  if (k % 6 != 0) throw PreconditionError("labeling_to_walk: polygon size must be divisible by 6");
  if (labeling.has_equal_neighbours()) throw PreconditionError("labeling_to_walk: equal consecutive labels");
  const auto report = verify(labeling, SizeMode::kRelaxed);
  if (!report.proper) {
    throw PreconditionError("labeling_to_walk: labeling fails condition " +
                            std::string(condition_name(*report.first_failure())));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) {
    const auto u = static_cast<std::size_t>(poly[i] - 1);
    const auto v = static_cast<std::size_t>(poly[(i + 1) % k] - 1);
    index.emplace(std::minmax(u, v), 0);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  for (auto& [pair, id] : index) {
    id = edge_list.size();
    edge_list.push_back(pair);
  }
  CubicGraph graph = make_cubic_graph(static_cast<std::size_t>(labeling.label_count()), std::move(edge_list));
  DoubleWalk walk;
  for (std::size_t i = 0; i < k; ++i) {
    const auto u = static_cast<std::size_t>(poly[i] - 1);
    const auto v = static_cast<std::size_t>(poly[(i + 1) % k] - 1);
    walk.vertices.push_back(u);
    walk.edges.push_back(index.at(std::minmax(u, v)));
  }
  return {std::move(graph), std::move(walk)};
}

}  // namespace htl
