#include "realenum/floors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "realenum/common.hpp"
#include "realenum/parallel.hpp"

namespace realenum {

std::vector<FloorDiagram::Edge> FloorDiagram::all_edges() const {
  std::vector<Edge> out = bounded;
  for (int v = 1; v <= floors; ++v) {
    for (int i = 0; i < bottom_ends[v - 1]; ++i) out.push_back({kBottomSink, v, 1});
  }
  for (int v = 1; v <= floors; ++v) {
    for (int i = 0; i < top_ends[v - 1]; ++i) out.push_back({v, kTopSink, 1});
  }
  return out;
}

long long FloorDiagram::divergence_at(int floor) const {
  long long down = bottom_ends[floor - 1];
  long long up = top_ends[floor - 1];
  for (const Edge& e : bounded) {
    if (e.upper == floor) down += e.weight;
    if (e.lower == floor) up += e.weight;
  }
  return down - up;
}

long long FloorDiagram::total_bottom_weight() const {
  long long total = 0;
  for (int c : bottom_ends) total += c;
  return total;
}

long long FloorDiagram::total_top_weight() const {
  long long total = 0;
  for (int c : top_ends) total += c;
  return total;
}

int FloorDiagram::marking_elements() const {
  return floors + static_cast<int>(bounded.size()) +
         static_cast<int>(total_bottom_weight() + total_top_weight());
}

std::string FloorDiagram::canonical_key() const {
  std::ostringstream os;
  os << "h" << floors << ";d" << divergence << ";e";
  for (const Edge& e : bounded) os << "(" << e.lower << "," << e.upper << "," << e.weight << ")";
  os << ";b";
  for (int c : bottom_ends) os << c << ",";
  os << ";t";
  for (int c : top_ends) os << c << ",";
  return os.str();
}

ToricProblem toric_problem(const LatticePolygon& polygon) {
  ToricProblem p;
  p.height = polygon.height();
  if (p.height == 0) throw input_error("polygon has height 0: no floors to enumerate");
  p.top_len = polygon.top_length();
  p.bottom_len = polygon.bottom_length();
  long long total = p.bottom_len - p.top_len;
  if (total % p.height != 0) throw internal_error("polygon incompatible with constant divergence");
  p.divergence = static_cast<int>(total / p.height);
  return p;
}

namespace {

// Decode a Pruefer sequence over vertices 1..h into sorted tree edges.
std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& seq, int h) {
  std::vector<int> degree(h + 1, 1);
  for (int v : seq) degree[v]++;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(h + 1, false);
  std::vector<int> deg = degree;
  for (int v : seq) {
    for (int leaf = 1; leaf <= h; ++leaf) {
      if (deg[leaf] == 1 && !used[leaf]) {
        edges.push_back({std::min(leaf, v), std::max(leaf, v)});
        used[leaf] = true;
        deg[v]--;
        break;
      }
    }
  }
  int a = 0, b = 0;
  for (int v = 1; v <= h; ++v) {
    if (!used[v] && deg[v] == 1) {
      if (a == 0) {
        a = v;
      } else {
        b = v;
      }
    }
  }
  if (a && b) edges.push_back({a, b});
  std::sort(edges.begin(), edges.end());
  return edges;
}

void enumerate_trees(int h, const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (h == 1) {
    emit({});
    return;
  }
  std::vector<int> seq(h - 2, 1);
  while (true) {
    emit(pruefer_tree(seq, h));
    int pos = h - 3;
    while (pos >= 0 && seq[pos] == h) {
      seq[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    seq[pos]++;
  }
}

// All ways to write `total` as ordered nonnegative parts.
void enumerate_compositions(long long total, int parts,
                            std::vector<long long>& current,
                            const std::function<void()>& emit) {
  if (parts == 1) {
    current.push_back(total);
    emit();
    current.pop_back();
    return;
  }
  for (long long v = total; v >= 0; --v) {
    current.push_back(v);
    enumerate_compositions(total - v, parts - 1, current, emit);
    current.pop_back();
  }
}

struct Builder {
  int h;
  const ToricProblem* problem;
  std::vector<std::pair<int, int>> tree;
  std::vector<long long> tops;
  std::vector<long long> weights;     // parallel to tree
  std::vector<FloorDiagram>* out;

  // Assign weights floor by floor from the top down; at floor v the weights
  // of its down-edges plus the bottom-end count must exhaust the budget
  //   divergence + top(v) + inflow(v),
  // where inflow is the already-fixed weight arriving from higher floors.
  void assign(int v, std::vector<long long>& bots) {
    if (v == 0) {
      finish(bots);
      return;
    }
    long long inflow = 0;
    std::vector<int> down;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (tree[i].first == v) inflow += weights[i];  // assigned while visiting the upper floor
      if (tree[i].second == v) down.push_back(static_cast<int>(i));
    }
    long long budget = problem->divergence + tops[v - 1] + inflow;
    long long need = static_cast<long long>(down.size());
    if (budget < need) return;
    assign_edges(v, down, 0, budget, bots);
  }

  void assign_edges(int v, const std::vector<int>& down, std::size_t pos, long long left,
                    std::vector<long long>& bots) {
    if (pos == down.size()) {
      bots[v - 1] = left;  // slack becomes weight-1 bottom ends
      assign(v - 1, bots);
      bots[v - 1] = 0;
      return;
    }
    long long remaining_edges = static_cast<long long>(down.size() - pos - 1);
    for (long long w = left - remaining_edges; w >= 1; --w) {
      weights[down[pos]] = w;
      assign_edges(v, down, pos + 1, left - w, bots);
      weights[down[pos]] = 0;
    }
  }

  void finish(const std::vector<long long>& bots) {
    long long total_bot = 0;
    for (long long b : bots) total_bot += b;
    if (total_bot != problem->bottom_len) return;
    FloorDiagram d;
    d.floors = h;
    d.divergence = problem->divergence;
    d.bottom_ends.assign(h, 0);
    d.top_ends.assign(h, 0);
    for (int v = 1; v <= h; ++v) {
      d.bottom_ends[v - 1] = static_cast<int>(bots[v - 1]);
      d.top_ends[v - 1] = static_cast<int>(tops[v - 1]);
    }
    for (std::size_t i = 0; i < tree.size(); ++i) {
      d.bounded.push_back({tree[i].first, tree[i].second, weights[i]});
    }
    out->push_back(std::move(d));
  }
};

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(const LatticePolygon& polygon) {
  ToricProblem p = toric_problem(polygon);
  int h = static_cast<int>(p.height);
  std::vector<FloorDiagram> out;

  enumerate_trees(h, [&](const std::vector<std::pair<int, int>>& tree) {
    std::vector<long long> tops;
    enumerate_compositions(p.top_len, h, tops, [&] {
      Builder b;
      b.h = h;
      b.problem = &p;
      b.tree = tree;
      b.tops = tops;
      b.weights.assign(tree.size(), 0);
      b.out = &out;
      std::vector<long long> bots(h, 0);
      b.assign(h, bots);
    });
  });
  return out;
}

namespace {

// Element layout: floors, then bounded-edge points, then bottom ends, then
// top ends.  Ends at the same floor are indistinguishable; chaining them
// into index order counts each multiset order exactly once.
struct MarkingPoset {
  int n = 0;
  std::vector<std::uint64_t> pred_mask;
  std::vector<MarkElement> elements;
};

MarkingPoset build_marking_poset(const FloorDiagram& diagram) {
  MarkingPoset poset;
  poset.n = diagram.marking_elements();
  if (poset.n > 62) throw input_error("class too large for marking enumeration");
  poset.pred_mask.assign(poset.n, 0);
  poset.elements.resize(poset.n);

  auto add_pred = [&](int element, int pred) { poset.pred_mask[element] |= 1ull << pred; };
  for (int v = 1; v <= diagram.floors; ++v) {
    poset.elements[v - 1] = {MarkElement::Kind::floor, v};
    if (v >= 2) add_pred(v - 1, v - 2);
  }
  int idx = diagram.floors;
  for (std::size_t e = 0; e < diagram.bounded.size(); ++e) {
    poset.elements[idx] = {MarkElement::Kind::bounded_edge, static_cast<int>(e)};
    add_pred(idx, diagram.bounded[e].lower - 1);
    add_pred(diagram.bounded[e].upper - 1, idx);
    ++idx;
  }
  int end_pos = 0;
  for (int v = 1; v <= diagram.floors; ++v) {
    for (int i = 0; i < diagram.bottom_ends[v - 1]; ++i) {
      poset.elements[idx] = {MarkElement::Kind::bottom_end, end_pos++};
      add_pred(v - 1, idx);
      if (i > 0) add_pred(idx, idx - 1);
      ++idx;
    }
  }
  for (int v = 1; v <= diagram.floors; ++v) {
    for (int i = 0; i < diagram.top_ends[v - 1]; ++i) {
      poset.elements[idx] = {MarkElement::Kind::top_end, end_pos++};
      add_pred(idx, v - 1);
      if (i > 0) add_pred(idx, idx - 1);
      ++idx;
    }
  }
  return poset;
}

void require_element_count(const FloorDiagram& diagram, long long n_points) {
  int n = diagram.marking_elements();
  if (n_points != n) {
    throw input_error("marking count mismatch: diagram has " + std::to_string(n) +
                      " elements, asked for " + std::to_string(n_points));
  }
}

}  // namespace

Integer count_markings(const FloorDiagram& diagram, long long n_points) {
  if (n_points != diagram.marking_elements() && n_points == 0) {
    return Integer(diagram.marking_elements() == 0 ? 1 : 0);
  }
  require_element_count(diagram, n_points);
  MarkingPoset poset = build_marking_poset(diagram);
  const int n = poset.n;
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  std::unordered_map<std::uint64_t, Integer> memo;
  std::function<Integer(std::uint64_t)> extend = [&](std::uint64_t mask) -> Integer {
    if (mask == full) return Integer(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Integer total(0);
    for (int e = 0; e < n; ++e) {
      std::uint64_t bit = 1ull << e;
      if ((mask & bit) == 0 && (poset.pred_mask[e] & ~mask) == 0) {
        total += extend(mask | bit);
      }
    }
    memo.emplace(mask, total);
    return total;
  };
  return extend(0);
}

std::vector<MarkedFloorDiagram> enumerate_markings(const FloorDiagram& diagram,
                                                   long long n_points) {
  require_element_count(diagram, n_points);
  if (count_markings(diagram, n_points) > Integer(2'000'000)) {
    throw input_error("too many markings to materialize; use count_markings");
  }
  MarkingPoset poset = build_marking_poset(diagram);
  const int n = poset.n;
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

  std::vector<MarkedFloorDiagram> out;
  std::vector<int> order;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t mask) {
    if (mask == full) {
      MarkedFloorDiagram marked;
      marked.diagram = diagram;
      for (int e : order) marked.order.push_back(poset.elements[e]);
      out.push_back(std::move(marked));
      return;
    }
    for (int e = 0; e < n; ++e) {
      std::uint64_t bit = 1ull << e;
      if ((mask & bit) == 0 && (poset.pred_mask[e] & ~mask) == 0) {
        order.push_back(e);
        extend(mask | bit);
        order.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

Integer complex_multiplicity(const FloorDiagram& diagram) {
  Integer out(1);
  for (const FloorDiagram::Edge& e : diagram.bounded) {
    out *= Integer(e.weight) * Integer(e.weight);
  }
  return out;
}

int real_multiplicity(const FloorDiagram& diagram) {
  for (const FloorDiagram::Edge& e : diagram.all_edges()) {
    if (e.weight % 2 == 0) return 0;
  }
  return 1;
}

namespace {

// Fiber-type classes have a height-0 polygon: a single vertical line when
// the edge length is 1, nothing irreducible otherwise.
bool is_fiber_class(const SurfaceModel& m, const DivisorClass& cls, long long* length) {
  LatticePolygon poly = newton_polygon(m, cls);
  if (poly.height() != 0) return false;
  *length = poly.bottom_length();
  return true;
}

void check_effective(const SurfaceModel& m, const DivisorClass& cls) {
  if (cls.surface_id != m.name) throw input_error("class does not live on " + m.name);
  bool all_zero = true;
  for (long long c : cls.coords) {
    if (c < 0) throw input_error("class is not effective on " + m.name);
    if (c != 0) all_zero = false;
  }
  if (all_zero) throw input_error("zero class has no rational curves");
}

Integer sum_over_marked_diagrams(const SurfaceModel& m, const DivisorClass& cls,
                                 bool real_counts) {
  check_effective(m, cls);
  long long fiber_len = 0;
  if (is_fiber_class(m, cls, &fiber_len)) return Integer(fiber_len == 1 ? 1 : 0);

  long long n_points = c1_dot(cls).to_long_long() - 1;
  std::vector<FloorDiagram> diagrams = enumerate_floor_diagrams(newton_polygon(m, cls));

  return parallel_integer_sum(diagrams, [&](const FloorDiagram& d) -> Integer {
    Integer mult = real_counts ? Integer(real_multiplicity(d)) : complex_multiplicity(d);
    if (mult.is_zero()) return Integer(0);
    return mult * count_markings(d, n_points);
  });
}

}  // namespace

Integer gw_toric(const SurfaceModel& m, const DivisorClass& cls) {
  return sum_over_marked_diagrams(m, cls, /*real_counts=*/false);
}

Integer welschinger_toric(const SurfaceModel& m, const DivisorClass& cls) {
  return sum_over_marked_diagrams(m, cls, /*real_counts=*/true);
}

StratifiedCounts relative_real_counts_f2(const DivisorClass& d_glued,
                                         std::optional<long long> k_max) {
  if (d_glued.surface_id != "f0") throw input_error("glued classes live on the f0 lattice");
  const SurfaceModel& f2 = surface("f2");
  long long de = intersect(d_glued, surface("f0").named("E")).to_long_long();
  long long cap = k_max.value_or(d_glued.coords[0]);
  if (cap < 0) throw input_error("k_max must be nonnegative");

  StratifiedCounts counts;
  counts.d_dot_e = de;
  for (long long k = 0; k <= cap; ++k) {
    DivisorClass cls = glued_to_f2(d_glued, k);
    long long a = de + 2 * k;
    if (a < 0) continue;  // the class pairs negatively with E: nothing meets it
    Integer value(0);
    if (cls.coords[0] >= 0 && cls.coords[1] >= 0 && !(cls.coords[0] == 0 && cls.coords[1] == 0)) {
      long long fiber_len = 0;
      if (is_fiber_class(f2, cls, &fiber_len)) {
        value = Integer(fiber_len == 1 ? 1 : 0);
      } else {
        // the polygon's top edge is the intersection with the (-2)-curve;
        // every end there has weight 1, i.e. a real intersection point
        for (const FloorDiagram& d : enumerate_floor_diagrams(newton_polygon(f2, cls))) {
          if (d.total_top_weight() != a) {
            throw internal_error("diagram meets the (-2)-curve in a conjugate pair at s = 0");
          }
        }
        value = welschinger_toric(f2, cls);
      }
    }
    counts.entries[StratumKey{k, a, 0}] = value;
  }
  validate_strata(counts);
  return counts;
}

void validate_strata(const StratifiedCounts& counts) {
  for (const auto& [key, value] : counts.entries) {
    if (key.k < 0 || key.a < 0 || key.b < 0 ||
        key.a + 2 * key.b != counts.d_dot_e + 2 * key.k) {
      throw internal_error("stratum key violates a + 2b = d.E + 2k");
    }
  }
}

Integer kontsevich_cp2(int d) {
  if (d < 1) throw input_error("kontsevich_cp2 needs d >= 1");
  static std::vector<Integer> cache{Integer(0), Integer(1)};  // cache[d] = N(d)
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= d) {
    int n = static_cast<int>(cache.size());
    Integer total(0);
    for (int d1 = 1; d1 < n; ++d1) {
      int d2 = n - d1;
      Integer inner = Integer(d1) * Integer(d2) * binomial(3 * n - 4, 3 * d1 - 2) -
                      Integer(d1) * Integer(d1) * binomial(3 * n - 4, 3 * d1 - 1);
      total += cache[d1] * cache[d2] * Integer(d1) * Integer(d2) * inner;
    }
    cache.push_back(total);
  }
  return cache[d];
}

}  // namespace realenum
