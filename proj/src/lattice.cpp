#include "realenum/lattice.hpp"

#include <algorithm>
#include <mutex>

#include "realenum/common.hpp"

namespace realenum {

DivisorClass SurfaceModel::cls(std::vector<long long> coords) const {
  if (static_cast<int>(coords.size()) != rank) {
    throw input_error("class for " + name + " needs " + std::to_string(rank) + " coordinates");
  }
  return DivisorClass{name, std::move(coords)};
}

const DivisorClass& SurfaceModel::named(const std::string& key) const {
  auto it = distinguished.find(key);
  if (it == distinguished.end()) throw input_error(name + " has no distinguished class " + key);
  return it->second;
}

bool SurfaceModel::has_named(const std::string& key) const {
  return distinguished.count(key) != 0;
}

namespace {

SurfaceModel make_cp2() {
  SurfaceModel m;
  m.name = "cp2";
  m.rank = 1;
  m.intersection_matrix = {{1}};
  m.c1_row = {3};
  m.polygon_rule = PolygonRule::cp2_triangle;
  m.distinguished["line"] = DivisorClass{"cp2", {1}};
  return m;
}

SurfaceModel make_f0() {
  SurfaceModel m;
  m.name = "f0";
  m.rank = 2;
  m.intersection_matrix = {{0, 1}, {1, 0}};
  m.c1_row = {2, 2};
  m.polygon_rule = PolygonRule::f0_rectangle;
  m.distinguished["l1"] = DivisorClass{"f0", {1, 0}};
  m.distinguished["l2"] = DivisorClass{"f0", {0, 1}};
  m.distinguished["E"] = DivisorClass{"f0", {1, -1}};
  return m;
}

SurfaceModel make_f2() {
  SurfaceModel m;
  m.name = "f2";
  m.rank = 2;
  m.intersection_matrix = {{2, 1}, {1, 0}};
  m.c1_row = {4, 2};
  m.polygon_rule = PolygonRule::f2_trapezoid;
  m.distinguished["E"] = DivisorClass{"f2", {1, -2}};
  m.distinguished["f"] = DivisorClass{"f2", {0, 1}};
  return m;
}

// pairing against an explicit model, usable before the registry is ready
long long raw_pair(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
  long long total = 0;
  for (int i = 0; i < m.rank; ++i) {
    for (int j = 0; j < m.rank; ++j) {
      total += a.coords[i] * m.intersection_matrix[i][j] * b.coords[j];
    }
  }
  return total;
}

long long raw_c1(const SurfaceModel& m, const DivisorClass& d) {
  long long total = 0;
  for (int i = 0; i < m.rank; ++i) total += m.c1_row[i] * d.coords[i];
  return total;
}

void self_check(const SurfaceModel& m) {
  for (int i = 0; i < m.rank; ++i) {
    for (int j = 0; j < m.rank; ++j) {
      if (m.intersection_matrix[i][j] != m.intersection_matrix[j][i]) {
        throw internal_error("intersection matrix of " + m.name + " is not symmetric");
      }
    }
  }
  if (m.name == "f2") {
    const DivisorClass& e = m.named("E");
    if (raw_pair(m, e, e) != -2 || raw_c1(m, e) != 0) {
      throw internal_error("f2 conventions broken: need E.E = -2 and c1.E = 0");
    }
    if (raw_c1(m, m.named("f")) != 2) throw internal_error("f2 conventions broken: c1.f != 2");
  }
  if (m.name == "f0") {
    const DivisorClass& l1 = m.named("l1");
    const DivisorClass& l2 = m.named("l2");
    if (raw_pair(m, l1, l1) != 0 || raw_pair(m, l2, l2) != 0 || raw_pair(m, l1, l2) != 1) {
      throw internal_error("f0 conventions broken: need l1.l1 = l2.l2 = 0, l1.l2 = 1");
    }
  }
}

std::map<std::string, SurfaceModel>& user_registry() {
  static std::map<std::string, SurfaceModel> models;
  return models;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

const SurfaceModel& registry(const std::string& name) {
  static const SurfaceModel cp2 = [] { auto m = make_cp2(); self_check(m); return m; }();
  static const SurfaceModel f0 = [] { auto m = make_f0(); self_check(m); return m; }();
  static const SurfaceModel f2 = [] { auto m = make_f2(); self_check(m); return m; }();
  if (name == "cp2") return cp2;
  if (name == "f0") return f0;
  if (name == "f2") return f2;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = user_registry().find(name);
  if (it != user_registry().end()) return it->second;
  throw input_error("unknown surface '" + name + "'");
}

}  // namespace

const SurfaceModel& surface(const std::string& name) { return registry(name); }

void register_surface(SurfaceModel model) {
  if (model.name == "cp2" || model.name == "f0" || model.name == "f2") {
    throw input_error("built-in surface " + model.name + " cannot be replaced");
  }
  if (model.rank <= 0 || static_cast<int>(model.c1_row.size()) != model.rank ||
      static_cast<int>(model.intersection_matrix.size()) != model.rank) {
    throw input_error("surface model has inconsistent rank data");
  }
  for (const auto& row : model.intersection_matrix) {
    if (static_cast<int>(row.size()) != model.rank) {
      throw input_error("surface model has a ragged intersection matrix");
    }
  }
  for (int i = 0; i < model.rank; ++i) {
    for (int j = 0; j < model.rank; ++j) {
      if (model.intersection_matrix[i][j] != model.intersection_matrix[j][i]) {
        throw input_error("surface model pairing must be symmetric");
      }
    }
  }
  for (const auto& [key, cls] : model.distinguished) {
    if (cls.surface_id != model.name || static_cast<int>(cls.coords.size()) != model.rank) {
      throw input_error("distinguished class " + key + " does not live on " + model.name);
    }
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  user_registry().insert_or_assign(model.name, std::move(model));
}

Integer intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.surface_id != d2.surface_id) {
    throw input_error("intersection of classes on different surfaces");
  }
  const SurfaceModel& m = surface(d1.surface_id);
  Integer total(0);
  for (int i = 0; i < m.rank; ++i) {
    for (int j = 0; j < m.rank; ++j) {
      total += Integer(d1.coords[i]) * Integer(m.intersection_matrix[i][j]) * Integer(d2.coords[j]);
    }
  }
  return total;
}

Integer c1_dot(const DivisorClass& d) {
  const SurfaceModel& m = surface(d.surface_id);
  Integer total(0);
  for (int i = 0; i < m.rank; ++i) total += Integer(m.c1_row[i]) * Integer(d.coords[i]);
  return total;
}

Integer node_count(const DivisorClass& d) {
  Integer num = intersect(d, d) - c1_dot(d) + Integer(2);
  if (!num.is_even()) throw input_error("node count undefined: d.d - c1.d + 2 is odd");
  if (num.is_negative()) throw input_error("node count undefined: d.d - c1.d + 2 is negative");
  return num.div_exact(2);
}

std::pair<DivisorClass, DivisorClass> sum_decompose(const DivisorClass& d, long long k) {
  const SurfaceModel& m = surface(d.surface_id);
  if (!m.has_named("E")) throw input_error(m.name + " has no distinguished (-2)-class E");
  const DivisorClass& e = m.named("E");

  DivisorClass x1 = d;
  for (int i = 0; i < m.rank; ++i) x1.coords[i] -= k * e.coords[i];

  long long de = intersect(d, e).to_long_long();
  DivisorClass x0{"f0", {k, de + k}};

  if (c1_dot(e).is_zero() && c1_dot(x1) != c1_dot(d)) {
    throw internal_error("sum_decompose: c1 pairing not preserved");
  }
  return {x1, x0};
}

bool check_node_conservation(const DivisorClass& d, long long k) {
  const SurfaceModel& m = surface(d.surface_id);
  if (!m.has_named("E")) throw input_error(m.name + " has no distinguished (-2)-class E");
  const DivisorClass& e = m.named("E");
  if (intersect(e, e) != Integer(-2) || !c1_dot(e).is_zero()) {
    throw input_error("node conservation needs E.E = -2 and c1.E = 0");
  }
  DivisorClass dk = d;
  for (int i = 0; i < m.rank; ++i) dk.coords[i] -= k * e.coords[i];
  Integer de = intersect(d, e);
  return node_count(dk) + Integer(k) * (de + Integer(k)) == node_count(d);
}

long long constraint_split(const DivisorClass& d, long long s) {
  Integer r = c1_dot(d) - Integer(1) - Integer(2) * Integer(s);
  if (r.is_negative()) throw input_error("overconstrained: c1.d - 1 - 2s < 0");
  return r.to_long_long();
}

DivisorClass glued_to_f2(const DivisorClass& d_glued, long long k) {
  if (d_glued.surface_id != "f0") throw input_error("glued classes live on the f0 lattice");
  long long x = d_glued.coords[0], y = d_glued.coords[1];
  return DivisorClass{"f2", {x - k, y - x + 2 * k}};
}

long long LatticePolygon::height() const {
  long long lo = 0, hi = 0;
  bool first = true;
  for (const auto& v : vertices) {
    if (first || v.second < lo) lo = v.second;
    if (first || v.second > hi) hi = v.second;
    first = false;
  }
  return hi - lo;
}

namespace {
long long horizontal_extent_at(const LatticePolygon& p, long long y) {
  long long lo = 0, hi = 0;
  bool seen = false;
  for (const auto& v : p.vertices) {
    if (v.second != y) continue;
    if (!seen || v.first < lo) lo = v.first;
    if (!seen || v.first > hi) hi = v.first;
    seen = true;
  }
  return seen ? hi - lo : 0;
}
}  // namespace

long long LatticePolygon::top_length() const {
  long long top = 0;
  for (const auto& v : vertices) top = std::max(top, v.second);
  return horizontal_extent_at(*this, top);
}

long long LatticePolygon::bottom_length() const {
  long long bottom = 0;
  bool first = true;
  for (const auto& v : vertices) {
    if (first || v.second < bottom) bottom = v.second;
    first = false;
  }
  return horizontal_extent_at(*this, bottom);
}

LatticePolygon newton_polygon(const SurfaceModel& m, const DivisorClass& cls) {
  if (cls.surface_id != m.name) throw input_error("class does not live on " + m.name);
  for (long long c : cls.coords) {
    if (c < 0) throw input_error("negative coordinates have no Newton polygon");
  }
  LatticePolygon p;
  switch (m.polygon_rule) {
    case PolygonRule::cp2_triangle: {
      long long d = cls.coords[0];
      p.vertices = {{0, 0}, {d, 0}, {0, d}};
      break;
    }
    case PolygonRule::f0_rectangle: {
      long long a = cls.coords[0], b = cls.coords[1];
      p.vertices = {{0, 0}, {b, 0}, {b, a}, {0, a}};
      break;
    }
    case PolygonRule::f2_trapezoid: {
      long long a = cls.coords[0], b = cls.coords[1];
      p.vertices = {{0, 0}, {2 * a + b, 0}, {b, a}, {0, a}};
      break;
    }
    case PolygonRule::none:
      throw input_error(m.name + " is not a toric model");
  }
  // canonicalize: drop repeated vertices of degenerate edges
  std::vector<std::pair<long long, long long>> out;
  for (const auto& v : p.vertices) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  p.vertices = std::move(out);
  return p;
}

TangencyVector TangencyVector::e(int i) {
  TangencyVector t;
  t.set(i, 1);
  return t;
}

int TangencyVector::get(int i) const {
  if (i < 1) throw input_error("tangency indices start at 1");
  if (i > static_cast<int>(entries_.size())) return 0;
  return entries_[i - 1];
}

void TangencyVector::set(int i, int value) {
  if (i < 1 || i > 64) throw input_error("tangency index out of supported range [1, 64]");
  if (value < 0) throw input_error("tangency entries are nonnegative");
  if (i > static_cast<int>(entries_.size())) entries_.resize(i, 0);
  entries_[i - 1] = value;
}

long long TangencyVector::norm() const {
  long long total = 0;
  for (int v : entries_) total += v;
  return total;
}

long long TangencyVector::inorm() const {
  long long total = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) total += static_cast<long long>(i + 1) * entries_[i];
  return total;
}

bool tangency_profile_valid(const TangencyVector& alpha, const TangencyVector& beta,
                            const Integer& d_dot_e) {
  return Integer(alpha.inorm()) + Integer(beta.inorm()) == d_dot_e;
}

TangencyVector TangencyVector::operator+(const TangencyVector& rhs) const {
  TangencyVector out = *this;
  for (std::size_t i = 0; i < rhs.entries_.size(); ++i) {
    if (rhs.entries_[i] != 0) out.set(static_cast<int>(i + 1), out.get(static_cast<int>(i + 1)) + rhs.entries_[i]);
  }
  return out;
}

}  // namespace realenum
