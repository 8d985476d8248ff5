#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "realenum/common.hpp"

namespace realenum::oracles {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool next_odometer(std::vector<long long>& v, long long lo, long long hi) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < hi) {
      v[i]++;
      for (std::size_t j = 0; j < i; ++j) v[j] = lo;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<FloorDiagram> brute_force_diagrams(const LatticePolygon& polygon) {
  ToricProblem p = toric_problem(polygon);
  int h = static_cast<int>(p.height);

  std::vector<std::pair<int, int>> candidates;
  for (int i = 1; i <= h; ++i) {
    for (int j = i + 1; j <= h; ++j) candidates.push_back({i, j});
  }
  long long wmax = p.bottom_len + p.top_len + std::abs(p.divergence) * h + 1;

  std::vector<FloorDiagram> found;
  int nc = static_cast<int>(candidates.size());
  for (unsigned mask = 0; mask < (1u << nc); ++mask) {
    if (__builtin_popcount(mask) != h - 1) continue;
    UnionFind uf(h + 1);
    std::vector<std::pair<int, int>> edges;
    bool tree = true;
    for (int i = 0; i < nc; ++i) {
      if (mask & (1u << i)) {
        edges.push_back(candidates[i]);
        tree = tree && uf.unite(candidates[i].first, candidates[i].second);
      }
    }
    if (!tree) continue;

    std::vector<long long> weights(edges.size(), 1);
    do {
      std::vector<long long> tops(h, 0);
      do {
        if (std::accumulate(tops.begin(), tops.end(), 0ll) != p.top_len) continue;
        std::vector<long long> bots(h, 0);
        do {
          if (std::accumulate(bots.begin(), bots.end(), 0ll) != p.bottom_len) continue;
          bool ok = true;
          for (int v = 1; v <= h && ok; ++v) {
            long long down = bots[v - 1], up = tops[v - 1];
            for (std::size_t e = 0; e < edges.size(); ++e) {
              if (edges[e].second == v) down += weights[e];
              if (edges[e].first == v) up += weights[e];
            }
            ok = down - up == p.divergence;
          }
          if (!ok) continue;
          FloorDiagram d;
          d.floors = h;
          d.divergence = p.divergence;
          d.bottom_ends.assign(h, 0);
          d.top_ends.assign(h, 0);
          for (int v = 1; v <= h; ++v) {
            d.bottom_ends[v - 1] = static_cast<int>(bots[v - 1]);
            d.top_ends[v - 1] = static_cast<int>(tops[v - 1]);
          }
          std::vector<std::size_t> order(edges.size());
          std::iota(order.begin(), order.end(), 0);
          std::sort(order.begin(), order.end(),
                    [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
          for (std::size_t e : order) {
            d.bounded.push_back({edges[e].first, edges[e].second, weights[e]});
          }
          found.push_back(std::move(d));
        } while (next_odometer(bots, 0, p.bottom_len));
      } while (next_odometer(tops, 0, p.top_len));
    } while (next_odometer(weights, 1, wmax));
  }
  return found;
}

Integer brute_force_markings(const FloorDiagram& diagram) {
  // elements: floors, then edge points, then ends; groups mark
  // indistinguishable ends
  int n = diagram.marking_elements();
  if (n > 10) throw input_error("brute-force marking oracle limited to 10 elements");

  std::vector<std::pair<int, int>> before;  // (a, b): a must come before b
  std::vector<int> group(n, -1);
  int idx = diagram.floors;
  for (int v = 2; v <= diagram.floors; ++v) before.push_back({v - 2, v - 1});
  for (const FloorDiagram::Edge& e : diagram.bounded) {
    before.push_back({e.lower - 1, idx});
    before.push_back({idx, e.upper - 1});
    ++idx;
  }
  int group_id = 0;
  for (int v = 1; v <= diagram.floors; ++v) {
    for (int i = 0; i < diagram.bottom_ends[v - 1]; ++i) {
      before.push_back({idx, v - 1});
      group[idx] = group_id;
      ++idx;
    }
    ++group_id;
  }
  for (int v = 1; v <= diagram.floors; ++v) {
    for (int i = 0; i < diagram.top_ends[v - 1]; ++i) {
      before.push_back({v - 1, idx});
      group[idx] = group_id;
      ++idx;
    }
    ++group_id;
  }
  for (int e = 0; e < n; ++e) {
    if (group[e] == -1) group[e] = group_id++;  // floors and edge points are unique
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> signatures;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (const auto& [a, b] : before) {
      if (pos[a] >= pos[b]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::string sig;
    for (int i = 0; i < n; ++i) {
      sig += static_cast<char>('A' + group[perm[i]]);
    }
    signatures.insert(sig);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Integer(static_cast<long long>(signatures.size()));
}

std::vector<long long> vertex_multiplicities(const FloorDiagram& diagram) {
  std::vector<long long> mults;
  for (const FloorDiagram::Edge& e : diagram.all_edges()) {
    // an elevator of weight w meets a floor of direction (1, k) in a vertex
    // of determinant |det((1, k), (0, w))| = w, once per floor endpoint
    if (e.lower != kBottomSink && e.upper != kTopSink) {
      mults.push_back(e.weight);
      mults.push_back(e.weight);
    } else {
      mults.push_back(e.weight);
    }
  }
  return mults;
}

Integer vertex_complex_multiplicity(const FloorDiagram& diagram) {
  Integer out(1);
  for (long long m : vertex_multiplicities(diagram)) out *= Integer(m);
  return out;
}

int vertex_real_multiplicity(const FloorDiagram& diagram) {
  long long solitary = 0;
  for (long long m : vertex_multiplicities(diagram)) {
    if (m % 2 == 0) return 0;
    solitary += (m - 1) / 2;
  }
  return solitary % 2 == 0 ? 1 : -1;
}

Integer oracle_count(const SurfaceModel& m, const DivisorClass& cls, bool real_count) {
  long long n_points = c1_dot(cls).to_long_long() - 1;
  Integer total(0);
  for (const FloorDiagram& d : brute_force_diagrams(newton_polygon(m, cls))) {
    if (d.marking_elements() != n_points) {
      throw internal_error("oracle: marking element count does not match constraints");
    }
    Integer mult =
        real_count ? Integer(vertex_real_multiplicity(d)) : vertex_complex_multiplicity(d);
    if (mult.is_zero()) continue;
    total += mult * brute_force_markings(d);
  }
  return total;
}

}  // namespace realenum::oracles
