#include "realenum/integer.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "realenum/common.hpp"

namespace realenum {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Integer::Integer(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // careful with LLONG_MIN: negate in unsigned space
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void Integer::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int Integer::compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> Integer::add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> Integer::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    }
    out.push_back(static_cast<std::uint32_t>(s));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Integer Integer::operator-() const {
  Integer out = *this;
  out.sign_ = -out.sign_;
  return out;
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
    return *this;
  }
  int cmp = compare_magnitude(limbs_, rhs.limbs_);
  if (cmp == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (cmp > 0) {
    limbs_ = sub_magnitude(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_magnitude(rhs.limbs_, limbs_);
    sign_ = rhs.sign_;
  }
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) { return *this += -rhs; }

Integer& Integer::operator*=(const Integer& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[pos] + carry;
      out[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++pos;
    }
  }
  limbs_ = std::move(out);
  sign_ *= rhs.sign_;
  trim();
  return *this;
}

Integer& Integer::div_exact(std::uint32_t divisor) {
  if (divisor == 0) throw input_error("division by zero");
  if (sign_ == 0) return *this;
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  if (rem != 0) throw internal_error("div_exact left a remainder");
  trim();
  return *this;
}

bool Integer::divisible_by_pow2(unsigned k) const {
  if (sign_ == 0) return true;
  unsigned whole = k / 32, rest = k % 32;
  // a nonzero magnitude shorter than k bits cannot be divisible by 2^k
  if (limbs_.size() < whole + (rest ? 1 : 0)) return false;
  for (unsigned i = 0; i < whole; ++i) {
    if (limbs_[i] != 0) return false;
  }
  if (rest == 0) return true;
  return (limbs_[whole] & ((1u << rest) - 1)) == 0;
}

int Integer::compare(const Integer& rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
  if (sign_ == 0) return 0;
  int m = compare_magnitude(limbs_, rhs.limbs_);
  return sign_ > 0 ? m : -m;
}

Integer Integer::abs() const {
  Integer out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

bool Integer::fits_long_long() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
  return mag <= 0x8000000000000000ull;
}

long long Integer::to_long_long() const {
  if (!fits_long_long()) throw input_error("integer does not fit in 64 bits");
  std::uint64_t mag = 0;
  if (limbs_.size() > 0) mag |= limbs_[0];
  if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (sign_ < 0) return static_cast<long long>(~mag + 1);
  return static_cast<long long>(mag);
}

Integer Integer::pow2(unsigned k) {
  Integer out;
  out.sign_ = 1;
  out.limbs_.assign(k / 32, 0);
  out.limbs_.push_back(1u << (k % 32));
  return out;
}

Integer Integer::from_string(std::string_view decimal) {
  std::string_view s = decimal;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw input_error("empty integer literal");
  Integer out;
  for (char c : s) {
    if (c < '0' || c > '9') throw input_error("bad digit in integer literal");
    out *= Integer(10);
    out += Integer(c - '0');
  }
  if (neg) out = -out;
  return out;
}

std::string Integer::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (mag.empty() && rem == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer binomial(long long n, long long k) {
  if (n < 0) throw input_error("binomial with negative upper index");
  if (k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer out(1);
  for (long long i = 1; i <= k; ++i) {
    out *= Integer(n - k + i);
    out.div_exact(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace realenum
