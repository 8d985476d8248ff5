#ifndef REALENUM_LATTICE_HPP
#define REALENUM_LATTICE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realenum/integer.hpp"

namespace realenum {

/*
  Homology lattice arithmetic for the three toric models.

  Basis conventions (fixed; changing them invalidates every cached count):

    cp2   rank 1, <line>, line.line = 1, c1.line = 3.
    f0    rank 2, <l1, l2>, l1.l1 = l2.l2 = 0, l1.l2 = 1, c1 = (2, 2).
          Doubles as the glued surface of the f2-sum, with the distinguished
          (-2)-class E = l1 - l2.
    f2    rank 2 in trapezoid coordinates (a, b): a is the number of fibers
          met (the polygon height), b the intersection with the (-2)-section.
          Pairing (a,b).(a',b') = 2aa' + ab' + a'b, c1.(a,b) = 4a + 2b, so a
          class (d, 0) passes through 4d - 1 points.  The section itself is
          E = (1, -2); E.E = -2 and c1.E = 0 are asserted at startup.
*/

struct DivisorClass {
  std::string surface_id;
  std::vector<long long> coords;
};

enum class PolygonRule { cp2_triangle, f0_rectangle, f2_trapezoid, none };

struct SurfaceModel {
  std::string name;
  int rank = 0;
  std::vector<std::vector<long long>> intersection_matrix;  // symmetric rank x rank
  std::vector<long long> c1_row;
  std::map<std::string, DivisorClass> distinguished;
  PolygonRule polygon_rule = PolygonRule::none;

  DivisorClass cls(std::vector<long long> coords) const;
  const DivisorClass& named(const std::string& key) const;
  bool has_named(const std::string& key) const;
};

// Built-in models (cp2, f0, f2) and anything registered; throws
// input_error on unknown names.
const SurfaceModel& surface(const std::string& name);

// Registers a user-defined model (validated: symmetric pairing, matching
// rank).  Built-in names cannot be replaced.
void register_surface(SurfaceModel model);

Integer intersect(const DivisorClass& d1, const DivisorClass& d2);
Integer c1_dot(const DivisorClass& d);

// (d.d - c1.d + 2) / 2; throws input_error if odd or negative.
Integer node_count(const DivisorClass& d);

// Splits d across the symplectic sum: (d - k E on the F2 summand, the
// complementary k l1 + (d.E + k) l2 on the quadric summand).  Requires a
// model with a distinguished E; asserts c1.(d - kE) = c1.d when c1.E = 0.
std::pair<DivisorClass, DivisorClass> sum_decompose(const DivisorClass& d, long long k);

// node_count(d - kE) + k (d.E + k) == node_count(d), given E.E = -2, c1.E = 0.
bool check_node_conservation(const DivisorClass& d, long long k);

// r = c1.d - 1 - 2s; throws input_error when negative (overconstrained).
long long constraint_split(const DivisorClass& d, long long s);

// Rewrites a class on the glued f0 surface (E = l1 - l2) in the f2
// trapezoid coordinates of the summand: (x, y) - kE  ->  (x - k, y - x + 2k).
DivisorClass glued_to_f2(const DivisorClass& d_glued, long long k);

struct LatticePolygon {
  std::vector<std::pair<long long, long long>> vertices;  // counterclockwise, no repeats

  long long height() const;         // lattice height = number of floors
  long long top_length() const;     // lattice length of the top horizontal edge
  long long bottom_length() const;  // lattice length of the bottom horizontal edge
};

LatticePolygon newton_polygon(const SurfaceModel& surface, const DivisorClass& cls);

// Finite-support tangency sequences indexed from 1 (support capped at 64).
class TangencyVector {
 public:
  TangencyVector() = default;
  static TangencyVector e(int i);  // single 1 in position i

  int get(int i) const;
  void set(int i, int value);

  long long norm() const;    // |alpha| = sum of entries
  long long inorm() const;   // I alpha = sum of i * alpha_i

  TangencyVector operator+(const TangencyVector& rhs) const;

 private:
  std::vector<int> entries_;  // entries_[i-1] holds alpha_i
};

// A pair of tangency profiles against a curve E is admissible for a class
// d exactly when I(alpha) + I(beta) = d.E.
bool tangency_profile_valid(const TangencyVector& alpha, const TangencyVector& beta,
                            const Integer& d_dot_e);

}  // namespace realenum

#endif  // REALENUM_LATTICE_HPP
