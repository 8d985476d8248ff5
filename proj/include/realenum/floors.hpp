#ifndef REALENUM_FLOORS_HPP
#define REALENUM_FLOORS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realenum/integer.hpp"
#include "realenum/lattice.hpp"

namespace realenum {

/*
  Genus-0 marked floor diagrams for the three toric models.

  A diagram has h floors, numbered 1..h from bottom to top (h = lattice
  height of the Newton polygon).  Edges are vertical elevators:

    - bounded edges join two floors, carry a positive weight, and must form
      a tree on the floors (genus 0);
    - unbounded edges leave a floor towards the BOTTOM or TOP sink; the
      marking count forces every unbounded edge to have weight 1, so they
      are stored as per-floor counts.

  The divergence of a floor, (weight leaving downward) - (weight entering
  from above), equals a per-model constant: 1 for cp2, 0 for f0, 2 for f2.
  Total bottom weight / top weight match the bottom / top edge lengths of
  the polygon.

  A marking is a total order on floors plus one point per edge that
  restricts to the floor order and is increasing along every elevator;
  orders differing only by a permutation of indistinguishable parallel
  ends are identified.  Curves of class d through c1.d - 1 vertically
  stretched points correspond one-to-one to marked diagrams; the marking
  count per diagram is what count_markings computes.
*/

constexpr int kBottomSink = 0;
constexpr int kTopSink = -1;

struct FloorDiagram {
  struct Edge {
    int lower = 0;          // floor id, or kBottomSink
    int upper = 0;          // floor id, or kTopSink
    long long weight = 1;
  };

  int floors = 0;
  int divergence = 0;                 // model constant
  std::vector<Edge> bounded;          // tree edges, lower < upper, canonical order
  std::vector<int> bottom_ends;       // bottom_ends[v-1] = weight-1 ends below floor v
  std::vector<int> top_ends;          // top_ends[v-1] = weight-1 ends above floor v

  // Every edge, ends included, as explicit (lower, upper, weight) records.
  std::vector<Edge> all_edges() const;

  long long divergence_at(int floor) const;
  long long total_bottom_weight() const;
  long long total_top_weight() const;
  int marking_elements() const;       // floors + bounded + ends

  std::string canonical_key() const;  // stable across runs, unique per diagram
};

struct ToricProblem {
  long long height = 0;
  long long top_len = 0;
  long long bottom_len = 0;
  int divergence = 0;
};

// Reads height / edge lengths / divergence off a polygon.  Throws
// input_error when the polygon has height 0 (empty class for floors) or
// when the lengths are inconsistent with an integer divergence.
ToricProblem toric_problem(const LatticePolygon& polygon);

// Complete duplicate-free list of genus-0 diagrams, deterministic order.
std::vector<FloorDiagram> enumerate_floor_diagrams(const LatticePolygon& polygon);

struct MarkElement {
  enum class Kind { floor, bounded_edge, bottom_end, top_end };
  Kind kind = Kind::floor;
  int index = 0;  // floor id, bounded-edge position, or end position
};

struct MarkedFloorDiagram {
  FloorDiagram diagram;
  std::vector<MarkElement> order;  // all elements, in marking order
};

// Number of markings; n_points must equal the diagram's element count.
Integer count_markings(const FloorDiagram& diagram, long long n_points);

// The markings themselves (one representative per class of orders that
// differ only by permuting indistinguishable parallel ends).
std::vector<MarkedFloorDiagram> enumerate_markings(const FloorDiagram& diagram,
                                                   long long n_points);

// Product of weight^2 over bounded edges.
Integer complex_multiplicity(const FloorDiagram& diagram);

// 0 when any edge has even weight, else +1: an odd-weight elevator meets a
// floor in a vertex of odd determinant and the two vertices of a bounded
// elevator contribute matching signs, so every all-odd curve counts
// positively in the all-real-points problem.
int real_multiplicity(const FloorDiagram& diagram);

// Sum over marked diagrams of the complex multiplicity: the count of
// rational curves in the class through c1.d - 1 generic points.
Integer gw_toric(const SurfaceModel& surface, const DivisorClass& cls);

// Signed count with real multiplicities (all-real point configuration).
Integer welschinger_toric(const SurfaceModel& surface, const DivisorClass& cls);

struct StratumKey {
  long long k = 0;
  long long a = 0;  // real intersections with the (-2)-curve
  long long b = 0;  // conjugate pairs of intersections

  auto operator<=>(const StratumKey&) const = default;
};

struct StratifiedCounts {
  long long d_dot_e = 0;               // pairing of the glued class with E
  std::map<StratumKey, Integer> entries;
};

// Every key must satisfy a + 2b = d.E + 2k; throws internal_error otherwise.
void validate_strata(const StratifiedCounts& counts);

// Real counts on the f2 summand for the glued class d (on the f0 lattice),
// stratified by k: stratum (k, d.E + 2k, 0) holds the signed count for the
// class d - kE.  All-real configurations can only meet the (-2)-curve in
// real points, so any b > 0 stratum is an internal error.  k_max defaults
// to the number of floors of d (beyond it d - kE is never effective).
StratifiedCounts relative_real_counts_f2(const DivisorClass& d_glued,
                                         std::optional<long long> k_max = std::nullopt);

// Counts of rational plane curves, by the classical recursion
//   N(1) = 1,
//   N(d) = sum over d1 + d2 = d of N(d1) N(d2) d1 d2
//          (d1 d2 C(3d-4, 3d1-2) - d1^2 C(3d-4, 3d1-1)).
// Independent of the floor diagram engine; used as its oracle.
Integer kontsevich_cp2(int d);

}  // namespace realenum

#endif  // REALENUM_FLOORS_HPP
