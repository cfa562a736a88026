#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kspf {

/// Thrown when a checked machine-word operation would wrap around.
struct OverflowError : std::overflow_error {
  OverflowError() : std::overflow_error("exact integer arithmetic overflowed int64") {}
};

/// int64 wrapper whose +, -, * throw OverflowError instead of wrapping.
/// Used as the fast coefficient ring; callers fall back to BigInt on throw.
struct CheckedI64 {
  long long v = 0;

  CheckedI64() = default;
  CheckedI64(long long x) : v(x) {}

  friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  CheckedI64 operator-() const {
    if (v == INT64_MIN) throw OverflowError{};
    return -v;
  }
  bool operator==(const CheckedI64&) const = default;

  std::string to_string() const { return std::to_string(v); }
};

inline std::ostream& operator<<(std::ostream& os, CheckedI64 x) { return os << x.v; }

/// Arbitrary-precision signed integer (sign-magnitude, base 2^32 limbs).
/// Small and slow on purpose: it only runs on the overflow fallback path
/// and inside the PSL(2,Z) oracle, where words are short.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long x) {
    if (x == 0) return;
    sign_ = x < 0 ? -1 : 1;
    // avoid UB negating INT64_MIN
    unsigned long long m = x < 0 ? ~static_cast<unsigned long long>(x) + 1ULL
                                 : static_cast<unsigned long long>(x);
    while (m != 0) {
      limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return BigInt{};
      if (c > 0) {
        r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
      } else {
        r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    return r;
  }
  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  bool operator==(const BigInt&) const = default;

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
      // divide magnitude by 10^9, collecting the remainder
      unsigned long long rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        unsigned long long cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      std::string chunk = std::to_string(rem);
      if (m.empty()) {
        digits = chunk + digits;
      } else {
        digits = std::string(9 - chunk.size(), '0') + chunk + digits;
      }
    }
    return (sign_ < 0 ? "-" : "") + digits;
  }

 private:
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros, empty iff zero

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      unsigned long long s = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      long long d = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
      if (d < 0) {
        d += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      unsigned long long carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        unsigned long long cur = r[i + j] +
                                 static_cast<unsigned long long>(a[i]) * b[j] + carry;
        r[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry != 0) {
        unsigned long long cur = r[k] + carry;
        r[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& x) {
  return os << x.to_string();
}

}  // namespace kspf
