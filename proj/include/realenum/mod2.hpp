#ifndef REALENUM_MOD2_HPP
#define REALENUM_MOD2_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace realenum {

// Dense bit vector over GF(2).
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(int size) : size_(size), words_((size + 63) / 64, 0) {}
  static GF2Vector unit(int size, int index);
  static GF2Vector from_bits(const std::vector<int>& bits);

  int size() const { return size_; }
  bool get(int i) const;
  void set(int i, bool value);
  void operator^=(const GF2Vector& rhs);
  bool is_zero() const;
  bool operator==(const GF2Vector& rhs) const;

  std::vector<int> bits() const;

 private:
  friend class GF2Matrix;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense bit matrix, one packed row per GF2Vector.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols);
  static GF2Matrix identity(int n);
  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool value);

  GF2Vector row(int r) const;
  void set_row(int r, const GF2Vector& v);

  GF2Matrix multiply(const GF2Matrix& rhs) const;
  GF2Vector apply(const GF2Vector& v) const;  // matrix * column vector
  GF2Matrix transpose() const;
  GF2Matrix operator+(const GF2Matrix& rhs) const;
  bool operator==(const GF2Matrix& rhs) const;

  bool is_symmetric() const;
  int rank() const;
  std::vector<GF2Vector> kernel_basis() const;

  std::vector<std::vector<int>> to_bit_rows() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<GF2Vector> data_;
};

// Rank of the span of a set of vectors.
int span_rank(const std::vector<GF2Vector>& vectors);

// True when `candidates` are linearly independent modulo span(base).
bool independent_modulo(const std::vector<GF2Vector>& candidates,
                        const std::vector<GF2Vector>& base);

/*
  Mod-2 model of H2(X \ L) for a real rational surface: a basis with the
  intersection pairing of the images in H2(X), the involution action, the
  kernel of the map into H2(X) (its generators sit at the end of the basis
  and pair to zero with everything), and the transcribed generators of the
  subgroup G (curve classes of positive genus or self-intersection >= -1).
  Kernel generators always belong to G and are added implicitly.
*/
struct RealHomologyModel {
  std::string name;
  std::vector<std::string> labels;     // total dimension = labels.size()
  int kernel_dim = 0;                  // last kernel_dim basis vectors span Ker i
  GF2Matrix pairing;                   // symmetric, kernel rows/cols zero
  GF2Matrix tau;                       // involution
  std::vector<GF2Vector> g_generators;
  std::vector<GF2Vector> claimed_basis;

  // Full-surface pairing (basis of H2(X)), kept for rank self-checks.
  std::vector<std::string> full_labels;
  GF2Matrix full_pairing;

  int dim() const { return static_cast<int>(labels.size()); }
  void validate() const;  // involution, symmetry, invariance of G
};

int rank(const GF2Matrix& m);

// Basis of ker(tau + id): the tau-invariant classes.
std::vector<GF2Vector> invariant_subspace(const RealHomologyModel& model);

// dim(invariant classes) - rank(G), with kernel generators counted into G.
int quotient_dimension(const RealHomologyModel& model);

// claimed_basis is tau-invariant, independent modulo G, and of the right size.
bool verify_claimed_basis(const RealHomologyModel& model);

// b2(X \ L) = b2(X) + b1(L) + b1(X \ L) - 1, where b1(X \ L) is 0 when the
// class of L is nonzero and 1 otherwise.
int betti_x_minus_l(int b2_x, int b1_l, bool l_class_nonzero);

enum class BlowupKind { real_point_on_l, conjugate_pair };

RealHomologyModel blowup_transform(const RealHomologyModel& model, BlowupKind kind);

// Built-in models: "conic_bundle(n)", "dp2", "dp1_S1", "dp1_S7", "dp1_N",
// "f0_hy", "f0_el", "cp2".
RealHomologyModel builtin_model(const std::string& name);
RealHomologyModel conic_bundle_model(int n);

std::vector<std::string> builtin_model_names();

std::string model_to_json(const RealHomologyModel& model);
RealHomologyModel model_from_json(const std::string& text);

}  // namespace realenum

#endif  // REALENUM_MOD2_HPP
