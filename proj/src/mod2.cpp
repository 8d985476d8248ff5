#include "realenum/mod2.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "realenum/common.hpp"

namespace realenum {

GF2Vector GF2Vector::unit(int size, int index) {
  GF2Vector v(size);
  v.set(index, true);
  return v;
}

GF2Vector GF2Vector::from_bits(const std::vector<int>& bits) {
  GF2Vector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(static_cast<int>(i), bits[i] != 0);
  return v;
}

bool GF2Vector::get(int i) const {
  if (i < 0 || i >= size_) throw input_error("GF2Vector index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void GF2Vector::set(int i, bool value) {
  if (i < 0 || i >= size_) throw input_error("GF2Vector index out of range");
  if (value) {
    words_[i / 64] |= 1ull << (i % 64);
  } else {
    words_[i / 64] &= ~(1ull << (i % 64));
  }
}

void GF2Vector::operator^=(const GF2Vector& rhs) {
  if (rhs.size_ != size_) throw input_error("GF2Vector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
}

bool GF2Vector::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

bool GF2Vector::operator==(const GF2Vector& rhs) const {
  return size_ == rhs.size_ && words_ == rhs.words_;
}

std::vector<int> GF2Vector::bits() const {
  std::vector<int> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  GF2Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw input_error("ragged bit rows");
    m.data_[i] = GF2Vector::from_bits(rows[i]);
  }
  return m;
}

bool GF2Matrix::get(int r, int c) const {
  if (r < 0 || r >= rows_) throw input_error("GF2Matrix row out of range");
  return data_[r].get(c);
}

void GF2Matrix::set(int r, int c, bool value) {
  if (r < 0 || r >= rows_) throw input_error("GF2Matrix row out of range");
  data_[r].set(c, value);
}

GF2Vector GF2Matrix::row(int r) const {
  if (r < 0 || r >= rows_) throw input_error("GF2Matrix row out of range");
  return data_[r];
}

void GF2Matrix::set_row(int r, const GF2Vector& v) {
  if (r < 0 || r >= rows_ || v.size() != cols_) throw input_error("GF2Matrix row mismatch");
  data_[r] = v;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw input_error("GF2Matrix shape mismatch");
  GF2Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    GF2Vector acc(rhs.cols_);
    for (int k = 0; k < cols_; ++k) {
      if (data_[i].get(k)) acc ^= rhs.data_[k];
    }
    out.data_[i] = acc;
  }
  return out;
}

GF2Vector GF2Matrix::apply(const GF2Vector& v) const {
  if (v.size() != cols_) throw input_error("GF2Matrix apply mismatch");
  GF2Vector out(rows_);
  for (int i = 0; i < rows_; ++i) {
    // row . v
    bool bit = false;
    for (std::size_t w = 0; w < data_[i].words_.size(); ++w) {
      bit ^= __builtin_parityll(data_[i].words_[w] & v.words_[w]);
    }
    out.set(i, bit);
  }
  return out;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (get(i, j)) out.set(j, i, true);
    }
  }
  return out;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("GF2Matrix shape mismatch");
  GF2Matrix out = *this;
  for (int i = 0; i < rows_; ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

bool GF2Matrix::operator==(const GF2Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool GF2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if (get(i, j) != get(j, i)) return false;
    }
  }
  return true;
}

int GF2Matrix::rank() const {
  std::vector<GF2Vector> rows = data_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i) {
      if (rows[i].get(c)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < rows_; ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

std::vector<GF2Vector> GF2Matrix::kernel_basis() const {
  // column reduction on a copy, tracking pivot columns
  std::vector<GF2Vector> rows = data_;
  std::vector<int> pivot_of_col(cols_, -1);
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i) {
      if (rows[i].get(c)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < rows_; ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<GF2Vector> kernel;
  for (int c = 0; c < cols_; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    GF2Vector v(cols_);
    v.set(c, true);
    for (int c2 = 0; c2 < cols_; ++c2) {
      int p = pivot_of_col[c2];
      if (p >= 0 && rows[p].get(c)) v.set(c2, true);
    }
    kernel.push_back(v);
  }
  return kernel;
}

std::vector<std::vector<int>> GF2Matrix::to_bit_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(data_[i].bits());
  return out;
}

int span_rank(const std::vector<GF2Vector>& vectors) {
  if (vectors.empty()) return 0;
  GF2Matrix m(static_cast<int>(vectors.size()), vectors[0].size());
  for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(static_cast<int>(i), vectors[i]);
  return m.rank();
}

bool independent_modulo(const std::vector<GF2Vector>& candidates,
                        const std::vector<GF2Vector>& base) {
  std::vector<GF2Vector> all = base;
  all.insert(all.end(), candidates.begin(), candidates.end());
  return span_rank(all) == span_rank(base) + static_cast<int>(candidates.size());
}

int rank(const GF2Matrix& m) { return m.rank(); }

namespace {

bool in_span(const GF2Vector& v, const std::vector<GF2Vector>& basis) {
  std::vector<GF2Vector> all = basis;
  all.push_back(v);
  return span_rank(all) == span_rank(basis);
}

}  // namespace

void RealHomologyModel::validate() const {
  int n = dim();
  if (pairing.rows() != n || pairing.cols() != n || tau.rows() != n || tau.cols() != n) {
    throw input_error("model " + name + ": matrix sizes do not match the basis");
  }
  if (kernel_dim < 0 || kernel_dim > n) throw input_error("model " + name + ": bad kernel_dim");
  if (!pairing.is_symmetric()) throw input_error("model " + name + ": pairing not symmetric");
  if (!(tau.multiply(tau) == GF2Matrix::identity(n))) {
    throw input_error("model " + name + ": tau is not an involution");
  }
  for (int i = n - kernel_dim; i < n; ++i) {
    if (!pairing.row(i).is_zero()) {
      throw input_error("model " + name + ": kernel generators must pair to zero");
    }
    if (!(tau.apply(GF2Vector::unit(n, i)) == GF2Vector::unit(n, i))) {
      throw input_error("model " + name + ": kernel generators must be tau-invariant");
    }
  }
  for (const GF2Vector& g : g_generators) {
    if (g.size() != n) throw input_error("model " + name + ": G generator of wrong size");
    if (!(tau.apply(g) == g)) {
      throw input_error("model " + name + ": G generator not tau-invariant");
    }
  }
}

std::vector<GF2Vector> invariant_subspace(const RealHomologyModel& model) {
  return (model.tau + GF2Matrix::identity(model.dim())).kernel_basis();
}

namespace {

std::vector<GF2Vector> g_with_kernel(const RealHomologyModel& model) {
  std::vector<GF2Vector> out = model.g_generators;
  for (int i = model.dim() - model.kernel_dim; i < model.dim(); ++i) {
    out.push_back(GF2Vector::unit(model.dim(), i));
  }
  return out;
}

}  // namespace

int quotient_dimension(const RealHomologyModel& model) {
  model.validate();
  std::vector<GF2Vector> inv = invariant_subspace(model);
  std::vector<GF2Vector> g = g_with_kernel(model);
  for (const GF2Vector& v : g) {
    if (!in_span(v, inv)) {
      throw input_error("model " + model.name + ": G generator outside the invariant subspace");
    }
  }
  return static_cast<int>(inv.size()) - span_rank(g);
}

bool verify_claimed_basis(const RealHomologyModel& model) {
  int q = quotient_dimension(model);
  if (static_cast<int>(model.claimed_basis.size()) != q) return false;
  for (const GF2Vector& v : model.claimed_basis) {
    if (!(model.tau.apply(v) == v)) return false;
  }
  return independent_modulo(model.claimed_basis, g_with_kernel(model));
}

int betti_x_minus_l(int b2_x, int b1_l, bool l_class_nonzero) {
  if (b2_x < 0 || b1_l < 0) throw input_error("Betti numbers are nonnegative");
  return b2_x + b1_l + (l_class_nonzero ? 0 : 1) - 1;
}

namespace {

GF2Vector widen(const GF2Vector& v, int new_size, int insert_at, int insert_count) {
  GF2Vector out(new_size);
  for (int i = 0; i < v.size(); ++i) {
    if (!v.get(i)) continue;
    out.set(i < insert_at ? i : i + insert_count, true);
  }
  return out;
}

}  // namespace

RealHomologyModel blowup_transform(const RealHomologyModel& model, BlowupKind kind) {
  model.validate();
  int n = model.dim();
  int labeled = n - model.kernel_dim;
  RealHomologyModel out;
  out.full_labels = model.full_labels;
  out.full_pairing = model.full_pairing;

  if (kind == BlowupKind::conjugate_pair) {
    // two exceptional classes swapped by tau; their sum is a real curve
    // class of square 0 and lands in G
    int m = n + 2;
    out.name = model.name + "+pair";
    out.kernel_dim = model.kernel_dim;
    out.labels.assign(model.labels.begin(), model.labels.begin() + labeled);
    out.labels.push_back("Ep" + std::to_string(labeled));
    out.labels.push_back("Em" + std::to_string(labeled));
    out.labels.insert(out.labels.end(), model.labels.begin() + labeled, model.labels.end());

    out.pairing = GF2Matrix(m, m);
    out.tau = GF2Matrix(m, m);
    for (int i = 0; i < n; ++i) {
      int ii = i < labeled ? i : i + 2;
      for (int j = 0; j < n; ++j) {
        int jj = j < labeled ? j : j + 2;
        out.pairing.set(ii, jj, model.pairing.get(i, j));
      }
    }
    // rebuild tau column by column from images of the old basis vectors
    for (int i = 0; i < n; ++i) {
      int ii = i < labeled ? i : i + 2;
      GF2Vector image = model.tau.apply(GF2Vector::unit(n, i));
      GF2Vector wide = widen(image, m, labeled, 2);
      for (int r = 0; r < m; ++r) out.tau.set(r, ii, wide.get(r));
    }
    out.pairing.set(labeled, labeled, true);
    out.pairing.set(labeled + 1, labeled + 1, true);
    out.tau.set(labeled, labeled + 1, true);
    out.tau.set(labeled + 1, labeled, true);

    for (const GF2Vector& g : model.g_generators) out.g_generators.push_back(widen(g, m, labeled, 2));
    GF2Vector pair_sum(m);
    pair_sum.set(labeled, true);
    pair_sum.set(labeled + 1, true);
    out.g_generators.push_back(pair_sum);
    for (const GF2Vector& c : model.claimed_basis) out.claimed_basis.push_back(widen(c, m, labeled, 2));
    out.validate();
    return out;
  }

  // real point on L: one tau-fixed exceptional class of odd square, and L
  // gains a crosscap, i.e. one more kernel generator; their sum lands in G
  int m = n + 2;
  out.name = model.name + "+realpt";
  out.kernel_dim = model.kernel_dim + 1;
  out.labels.assign(model.labels.begin(), model.labels.begin() + labeled);
  out.labels.push_back("Eexc" + std::to_string(labeled));
  out.labels.insert(out.labels.end(), model.labels.begin() + labeled, model.labels.end());
  out.labels.push_back("Kexc" + std::to_string(n));

  out.pairing = GF2Matrix(m, m);
  out.tau = GF2Matrix(m, m);
  for (int i = 0; i < n; ++i) {
    int ii = i < labeled ? i : i + 1;
    for (int j = 0; j < n; ++j) {
      int jj = j < labeled ? j : j + 1;
      out.pairing.set(ii, jj, model.pairing.get(i, j));
    }
  }
  for (int i = 0; i < n; ++i) {
    int ii = i < labeled ? i : i + 1;
    GF2Vector image = model.tau.apply(GF2Vector::unit(n, i));
    GF2Vector wide = widen(image, m, labeled, 1);
    for (int r = 0; r < m - 1; ++r) out.tau.set(r, ii, wide.get(r));
  }
  out.pairing.set(labeled, labeled, true);
  out.tau.set(labeled, labeled, true);
  out.tau.set(m - 1, m - 1, true);

  for (const GF2Vector& g : model.g_generators) out.g_generators.push_back(widen(g, m, labeled, 1));
  GF2Vector e_plus_kappa(m);
  e_plus_kappa.set(labeled, true);
  e_plus_kappa.set(m - 1, true);
  out.g_generators.push_back(e_plus_kappa);
  for (const GF2Vector& c : model.claimed_basis) out.claimed_basis.push_back(widen(c, m, labeled, 1));
  out.validate();
  return out;
}

/* ------------------------------------------------------------------ */
/* built-in models                                                     */
/* ------------------------------------------------------------------ */

namespace {

// Gram matrix of a set of vectors under a full-surface pairing.
GF2Matrix gram(const std::vector<GF2Vector>& vectors, const GF2Matrix& full) {
  int n = static_cast<int>(vectors.size());
  GF2Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    GF2Vector mi = full.apply(vectors[i]);
    for (int j = 0; j < n; ++j) {
      bool bit = false;
      for (int c = 0; c < mi.size(); ++c) bit ^= (mi.get(c) && vectors[j].get(c));
      out.set(i, j, bit);
    }
  }
  return out;
}

}  // namespace

RealHomologyModel conic_bundle_model(int n) {
  if (n < 1) throw input_error("conic_bundle needs n >= 1 sphere components");
  // full basis of H2(X): c1, B, F, E2, S2, ..., S_{2n-1}
  int spheres = n >= 2 ? 2 * n - 3 + 1 : 0;  // S2..S_{2n-1}
  int full_dim = 4 + spheres;
  std::vector<std::string> full_labels = {"c1", "B", "F", "E2"};
  for (int i = 2; i <= 2 * n - 1; ++i) full_labels.push_back("S" + std::to_string(i));

  auto idx = [&](const std::string& l) {
    auto it = std::find(full_labels.begin(), full_labels.end(), l);
    if (it == full_labels.end()) throw internal_error("missing label " + l);
    return static_cast<int>(it - full_labels.begin());
  };

  GF2Matrix full(full_dim, full_dim);
  auto put = [&](const std::string& a, const std::string& b) {
    full.set(idx(a), idx(b), true);
    full.set(idx(b), idx(a), true);
  };
  put("c1", "E2");
  put("B", "F");
  full.set(idx("E2"), idx("E2"), true);
  if (n >= 2) {
    put("E2", "S2");
    put("E2", "S3");
    for (int i = 2; i <= 2 * n - 2; ++i) put("S" + std::to_string(i), "S" + std::to_string(i + 1));
  }

  GF2Matrix tau_full = GF2Matrix::identity(full_dim);
  // tau B = B + n F + c1, tau E2 = E2 + F
  if (n % 2 == 1) tau_full.set(idx("F"), idx("B"), true);
  tau_full.set(idx("c1"), idx("B"), true);
  tau_full.set(idx("F"), idx("E2"), true);

  // X \ L basis (L = S1): drop S2
  std::vector<std::string> sub_labels = {"c1", "B", "F", "E2"};
  for (int i = 3; i <= 2 * n - 1; ++i) sub_labels.push_back("S" + std::to_string(i));
  std::vector<GF2Vector> sub_vectors;
  for (const std::string& l : sub_labels) sub_vectors.push_back(GF2Vector::unit(full_dim, idx(l)));

  RealHomologyModel m;
  m.name = "conic_bundle(" + std::to_string(n) + ")";
  m.labels = sub_labels;
  m.kernel_dim = 0;
  m.full_labels = full_labels;
  m.full_pairing = full;
  m.pairing = gram(sub_vectors, full);

  int sub_dim = static_cast<int>(sub_labels.size());
  m.tau = GF2Matrix(sub_dim, sub_dim);
  auto sub_idx = [&](const std::string& l) {
    auto it = std::find(sub_labels.begin(), sub_labels.end(), l);
    if (it == sub_labels.end()) throw internal_error("missing sublabel " + l);
    return static_cast<int>(it - sub_labels.begin());
  };
  for (int j = 0; j < sub_dim; ++j) {
    GF2Vector image = tau_full.apply(GF2Vector::unit(full_dim, idx(sub_labels[j])));
    GF2Vector seen(full_dim);
    for (int i = 0; i < sub_dim; ++i) {
      bool bit = image.get(idx(sub_labels[i]));
      m.tau.set(i, j, bit);
      seen.set(idx(sub_labels[i]), bit);
    }
    if (!(seen == image)) {
      throw internal_error("conic bundle: tau does not preserve the complement basis");
    }
  }

  // transcribed G: the anticanonical class, the fiber, and the interior
  // even Lagrangian spheres S4, ..., S_{2n-2}
  m.g_generators.push_back(GF2Vector::unit(sub_dim, sub_idx("c1")));
  m.g_generators.push_back(GF2Vector::unit(sub_dim, sub_idx("F")));
  for (int i = 4; i <= 2 * n - 2; i += 2) {
    m.g_generators.push_back(GF2Vector::unit(sub_dim, sub_idx("S" + std::to_string(i))));
  }
  for (int i = 3; i <= 2 * n - 1; i += 2) {
    m.claimed_basis.push_back(GF2Vector::unit(sub_dim, sub_idx("S" + std::to_string(i))));
  }
  m.validate();
  return m;
}

namespace {

RealHomologyModel make_dp2() {
  std::vector<std::string> full_labels = {"c1", "E", "S2", "S3", "S4", "S5", "S6", "S7"};
  int full_dim = 8;
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::find(full_labels.begin(), full_labels.end(), l) -
                            full_labels.begin());
  };
  GF2Matrix full(full_dim, full_dim);
  auto put = [&](const std::string& a, const std::string& b) {
    full.set(idx(a), idx(b), true);
    full.set(idx(b), idx(a), true);
  };
  put("c1", "E");
  full.set(idx("E"), idx("E"), true);
  put("E", "S2");
  for (int i = 2; i <= 6; ++i) put("S" + std::to_string(i), "S" + std::to_string(i + 1));

  std::vector<std::string> sub_labels = {"c1", "E", "S3", "S4", "S5", "S6", "S7"};
  std::vector<GF2Vector> sub_vectors;
  for (const std::string& l : sub_labels) sub_vectors.push_back(GF2Vector::unit(full_dim, idx(l)));

  RealHomologyModel m;
  m.name = "dp2";
  m.labels = sub_labels;
  m.kernel_dim = 0;
  m.full_labels = full_labels;
  m.full_pairing = full;
  m.pairing = gram(sub_vectors, full);
  int sub_dim = static_cast<int>(sub_labels.size());
  m.tau = GF2Matrix::identity(sub_dim);
  m.tau.set(0, 1, true);  // tau E = c1 + E
  m.g_generators.push_back(GF2Vector::unit(sub_dim, 0));
  for (int i = 2; i < sub_dim; ++i) m.claimed_basis.push_back(GF2Vector::unit(sub_dim, i));
  m.validate();
  return m;
}

// Shared lattice of the degree-1 Del Pezzo double cover: basis c1, S1..S8;
// the spheres S1-S2-...-S7 form a chain and S8 meets S1; the remaining
// classes are N = c1+S1+S3+S5+S7, S9 = S8+S2+S4, E = c1+S8.  tau acts
// trivially on H2(X).
struct Dp1Data {
  std::vector<std::string> full_labels;
  GF2Matrix full;
  GF2Vector vec_of(const std::string& expr) const;  // "+"-separated labels
};

GF2Vector Dp1Data::vec_of(const std::string& expr) const {
  GF2Vector v(static_cast<int>(full_labels.size()));
  std::stringstream ss(expr);
  std::string part;
  while (std::getline(ss, part, '+')) {
    auto it = std::find(full_labels.begin(), full_labels.end(), part);
    if (it == full_labels.end()) throw internal_error("dp1: unknown label " + part);
    int i = static_cast<int>(it - full_labels.begin());
    v.set(i, !v.get(i));
  }
  return v;
}

Dp1Data dp1_data() {
  Dp1Data d;
  d.full_labels = {"c1", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"};
  int n = 9;
  d.full = GF2Matrix(n, n);
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::find(d.full_labels.begin(), d.full_labels.end(), l) -
                            d.full_labels.begin());
  };
  auto put = [&](const std::string& a, const std::string& b) {
    d.full.set(idx(a), idx(b), true);
    d.full.set(idx(b), idx(a), true);
  };
  d.full.set(idx("c1"), idx("c1"), true);
  for (int i = 1; i <= 6; ++i) put("S" + std::to_string(i), "S" + std::to_string(i + 1));
  put("S8", "S1");
  return d;
}

RealHomologyModel make_dp1_sub(const std::string& name,
                               const std::vector<std::pair<std::string, std::string>>& basis,
                               const std::vector<std::string>& g,
                               const std::vector<std::string>& claimed) {
  Dp1Data d = dp1_data();
  RealHomologyModel m;
  m.name = name;
  m.kernel_dim = 0;
  m.full_labels = d.full_labels;
  m.full_pairing = d.full;
  std::vector<GF2Vector> vectors;
  for (const auto& [label, expr] : basis) {
    m.labels.push_back(label);
    vectors.push_back(d.vec_of(expr));
  }
  m.pairing = gram(vectors, d.full);
  int sub_dim = static_cast<int>(m.labels.size());
  m.tau = GF2Matrix::identity(sub_dim);  // tau trivial on H2(X), kernel 0
  auto unit_of = [&](const std::string& label) {
    auto it = std::find(m.labels.begin(), m.labels.end(), label);
    if (it == m.labels.end()) throw internal_error("dp1: missing model label " + label);
    return GF2Vector::unit(sub_dim, static_cast<int>(it - m.labels.begin()));
  };
  for (const std::string& l : g) m.g_generators.push_back(unit_of(l));
  for (const std::string& l : claimed) m.claimed_basis.push_back(unit_of(l));
  m.validate();
  return m;
}

RealHomologyModel make_dp1_S1() {
  return make_dp1_sub("dp1_S1",
                      {{"c1", "c1"},
                       {"S3", "S3"},
                       {"S4", "S4"},
                       {"S5", "S5"},
                       {"S6", "S6"},
                       {"S7", "S7"},
                       {"S9", "S8+S2+S4"},
                       {"N", "c1+S1+S3+S5+S7"}},
                      {"c1"}, {"S3", "S4", "S5", "S6", "S7", "S9", "N"});
}

RealHomologyModel make_dp1_S7() {
  return make_dp1_sub("dp1_S7",
                      {{"c1", "c1"},
                       {"S1", "S1"},
                       {"S2", "S2"},
                       {"S3", "S3"},
                       {"S4", "S4"},
                       {"S5", "S5"},
                       {"S8", "S8"},
                       {"N", "c1+S1+S3+S5+S7"}},
                      {"c1"}, {"S1", "S2", "S3", "S4", "S5", "S8", "N"});
}

RealHomologyModel make_dp1_N() {
  Dp1Data d = dp1_data();
  RealHomologyModel m;
  m.name = "dp1_N";
  m.full_labels = d.full_labels;
  m.full_pairing = d.full;
  // basis of H2(X \ N): E, S1..S7, and the kernel class B = E + tau E
  m.labels = {"E", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "B"};
  m.kernel_dim = 1;
  std::vector<GF2Vector> vectors;
  vectors.push_back(d.vec_of("c1+S8"));  // E
  for (int i = 1; i <= 7; ++i) vectors.push_back(d.vec_of("S" + std::to_string(i)));
  vectors.push_back(GF2Vector(9));  // B maps to zero in H2(X)
  m.pairing = gram(vectors, d.full);
  int n = static_cast<int>(m.labels.size());
  m.tau = GF2Matrix::identity(n);
  m.tau.set(n - 1, 0, true);  // tau E = E + B
  for (int i = 1; i <= 7; ++i) m.claimed_basis.push_back(GF2Vector::unit(n, i));
  m.validate();
  return m;
}

RealHomologyModel make_f0_el() {
  RealHomologyModel m;
  m.name = "f0_el";
  m.labels = {"V"};  // imaginary representative of l1 + l2, the vanishing class
  m.kernel_dim = 0;
  m.pairing = GF2Matrix(1, 1);  // (l1+l2)^2 = 2 = 0 mod 2
  m.tau = GF2Matrix::identity(1);
  m.g_generators.push_back(GF2Vector::unit(1, 0));  // real curve of square 2
  m.full_labels = {"l1", "l2"};
  m.full_pairing = GF2Matrix::from_rows({{0, 1}, {1, 0}});
  m.validate();
  return m;
}

RealHomologyModel make_f0_hy() {
  RealHomologyModel m;
  m.name = "f0_hy";
  m.labels = {"A1", "A2", "K1", "K2"};  // lifts of l1, l2 and the two torus kernel classes
  m.kernel_dim = 2;
  m.pairing = GF2Matrix(4, 4);
  m.pairing.set(0, 1, true);
  m.pairing.set(1, 0, true);
  m.tau = GF2Matrix::identity(4);
  m.tau.set(2, 0, true);  // tau A1 = A1 + K1: no invariant lift exists
  m.tau.set(3, 1, true);
  m.full_labels = {"l1", "l2"};
  m.full_pairing = GF2Matrix::from_rows({{0, 1}, {1, 0}});
  m.validate();
  return m;
}

RealHomologyModel make_cp2() {
  RealHomologyModel m;
  m.name = "cp2";
  m.labels = {"Q"};  // imaginary conic; maps to 2h = 0, so it spans Ker i
  m.kernel_dim = 1;
  m.pairing = GF2Matrix(1, 1);
  m.tau = GF2Matrix::identity(1);
  m.full_labels = {"h"};
  m.full_pairing = GF2Matrix::from_rows({{1}});
  m.validate();
  return m;
}

}  // namespace

RealHomologyModel builtin_model(const std::string& name) {
  if (name.rfind("conic_bundle(", 0) == 0 && name.back() == ')') {
    int n = std::stoi(name.substr(13, name.size() - 14));
    return conic_bundle_model(n);
  }
  if (name == "dp2") return make_dp2();
  if (name == "dp1_S1") return make_dp1_S1();
  if (name == "dp1_S7") return make_dp1_S7();
  if (name == "dp1_N") return make_dp1_N();
  if (name == "f0_el") return make_f0_el();
  if (name == "f0_hy") return make_f0_hy();
  if (name == "cp2") return make_cp2();
  throw input_error("unknown homology model '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"conic_bundle(1)", "conic_bundle(2)", "conic_bundle(3)", "conic_bundle(4)",
          "conic_bundle(5)", "dp2",             "dp1_S1",          "dp1_S7",
          "dp1_N",           "f0_el",           "f0_hy",           "cp2"};
}

std::string model_to_json(const RealHomologyModel& model) {
  nlohmann::json j;
  j["name"] = model.name;
  j["labels"] = model.labels;
  j["kernel_dim"] = model.kernel_dim;
  j["pairing"] = model.pairing.to_bit_rows();
  j["tau"] = model.tau.to_bit_rows();
  nlohmann::json gens = nlohmann::json::array();
  for (const GF2Vector& g : model.g_generators) gens.push_back(g.bits());
  j["g_generators"] = gens;
  nlohmann::json claimed = nlohmann::json::array();
  for (const GF2Vector& c : model.claimed_basis) claimed.push_back(c.bits());
  j["claimed_basis"] = claimed;
  j["full_labels"] = model.full_labels;
  j["full_pairing"] = model.full_pairing.to_bit_rows();
  return j.dump(2);
}

RealHomologyModel model_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RealHomologyModel m;
  m.name = j.at("name").get<std::string>();
  m.labels = j.at("labels").get<std::vector<std::string>>();
  m.kernel_dim = j.at("kernel_dim").get<int>();
  m.pairing = GF2Matrix::from_rows(j.at("pairing").get<std::vector<std::vector<int>>>());
  m.tau = GF2Matrix::from_rows(j.at("tau").get<std::vector<std::vector<int>>>());
  for (const auto& g : j.at("g_generators")) {
    m.g_generators.push_back(GF2Vector::from_bits(g.get<std::vector<int>>()));
  }
  for (const auto& c : j.at("claimed_basis")) {
    m.claimed_basis.push_back(GF2Vector::from_bits(c.get<std::vector<int>>()));
  }
  if (j.contains("full_labels")) m.full_labels = j.at("full_labels").get<std::vector<std::string>>();
  if (j.contains("full_pairing")) {
    m.full_pairing = GF2Matrix::from_rows(j.at("full_pairing").get<std::vector<std::vector<int>>>());
  }
  m.validate();
  return m;
}

}  // namespace realenum
