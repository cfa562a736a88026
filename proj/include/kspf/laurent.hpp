#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace kspf {

/// Laurent polynomial in one variable t over a coefficient ring C.
/// Terms are kept sorted by exponent with no zero coefficients, so
/// equality is plain structural comparison.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long k) {  // constant polynomial
    if (!(C(k) == C())) terms_.push_back({0, C(k)});
  }

  static LaurentPoly zero() { return LaurentPoly{}; }
  static LaurentPoly one() { return monomial(0, C(1)); }
  static LaurentPoly monomial(int exp, C coeff) {
    LaurentPoly p;
    if (!(coeff == C())) p.terms_.push_back({exp, std::move(coeff)});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == C(1);
  }
  const std::vector<std::pair<int, C>>& terms() const { return terms_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      if (a.terms_[i].first < b.terms_[j].first) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (a.terms_[i].first > b.terms_[j].first) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        C c = a.terms_[i].second + b.terms_[j].second;
        if (!(c == C())) r.terms_.push_back({a.terms_[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly shifted;
      shifted.terms_.reserve(a.terms_.size());
      for (const auto& [ea, ca] : a.terms_) {
        C c = ca * cb;
        if (!(c == C())) shifted.terms_.push_back({ea + eb, std::move(c)});
      }
      r = r + shifted;
    }
    return r;
  }
  bool operator==(const LaurentPoly&) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (e != 0) os << "*t^" << e;
    }
    return os.str();
  }

 private:
  std::vector<std::pair<int, C>> terms_;
};

template <class C>
std::ostream& operator<<(std::ostream& os, const LaurentPoly<C>& p) {
  return os << p.to_string();
}

/// 2x2 matrix over an arbitrary commutative ring element type P.
template <class P>
struct Mat2 {
  P a, b, c, d;  // row-major [[a, b], [c, d]]

  static Mat2 identity() { return {P(1), P(0), P(0), P(1)}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mat2&) const = default;

  P det() const { return a * d - b * c; }
};

}  // namespace kspf
