#ifndef REALENUM_INTEGER_HPP
#define REALENUM_INTEGER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace realenum {

/*
  Exact signed integer of unbounded size.

  Counts and binomial sums are the product of this tool; nothing here is
  allowed to overflow silently.  Magnitude is stored as base 2^32 limbs,
  little-endian, with no leading zero limb; zero has an empty limb vector
  and sign 0.
*/
class Integer {
 public:
  Integer() = default;
  Integer(long long v);  // NOLINT: implicit by design, mirrors int semantics

  static Integer from_string(std::string_view decimal);
  static Integer pow2(unsigned k);

  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // Value as long long; throws input_error when out of range.
  long long to_long_long() const;
  bool fits_long_long() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // Exact division by a small positive divisor; throws internal_error if a
  // remainder is left over.  Used by the multiplicative binomial formula.
  Integer& div_exact(std::uint32_t divisor);

  // True when 2^k divides the value (always true for zero).
  bool divisible_by_pow2(unsigned k) const;

  int compare(const Integer& rhs) const;
  friend bool operator==(const Integer& a, const Integer& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.compare(b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.compare(b) >= 0; }

  Integer abs() const;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  void trim();
  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
};

// C(n, k), exact.  Zero when k < 0 or k > n; n must be nonnegative.
Integer binomial(long long n, long long k);

}  // namespace realenum

#endif  // REALENUM_INTEGER_HPP
