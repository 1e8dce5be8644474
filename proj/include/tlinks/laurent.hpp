#pragma once

// Integer Laurent polynomials in one variable t, stored densely from the
// lowest nonzero exponent. The coefficient type is a template parameter so
// the same code runs on checked 64-bit integers and on arbitrary precision.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "tlinks/errors.hpp"

namespace tlinks {

namespace laurent_detail {

template <typename C>
C add(const C& a, const C& b) {
  if constexpr (std::is_integral_v<C>) {
    C out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("Laurent coefficient overflow");
    return out;
  } else {
    return a + b;
  }
}

template <typename C>
C sub(const C& a, const C& b) {
  if constexpr (std::is_integral_v<C>) {
    C out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("Laurent coefficient overflow");
    return out;
  } else {
    return a - b;
  }
}

template <typename C>
C mul(const C& a, const C& b) {
  if constexpr (std::is_integral_v<C>) {
    C out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("Laurent coefficient overflow");
    return out;
  } else {
    return a * b;
  }
}

}  // namespace laurent_detail

template <typename C>
class LaurentPoly {
 public:
  using coefficient_type = C;

  LaurentPoly() = default;

  // c * t^exponent
  static LaurentPoly monomial(const C& c, int exponent = 0) {
    LaurentPoly p;
    if (c != C(0)) {
      p.low_ = exponent;
      p.coeffs_.push_back(c);
    }
    return p;
  }

  static LaurentPoly from_terms(const std::map<int, C>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    p.low_ = terms.begin()->first;
    p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), C(0));
    for (const auto& [e, c] : terms) p.coeffs_[e - p.low_] = c;
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return is_zero() ? 0 : high_degree() - low_degree(); }

  C coefficient(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) return C(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  C leading() const { return is_zero() ? C(0) : coeffs_.back(); }

  // Nonzero terms, ascending exponent.
  std::map<int, C> terms() const {
    std::map<int, C> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != C(0)) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  // Value at t = 1.
  C at_one() const {
    C sum(0);
    for (const auto& c : coeffs_) sum = laurent_detail::add(sum, c);
    return sum;
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  // p(t^q), q >= 1.
  LaurentPoly substitute_power(int q) const {
    if (q < 1) throw ParameterError("substitute_power needs q >= 1");
    LaurentPoly p;
    if (is_zero()) return p;
    p.low_ = low_ * q;
    p.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(q) + 1, C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i * q] = coeffs_[i];
    return p;
  }

  // p(t^{-1}).
  LaurentPoly reflected() const {
    LaurentPoly p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high_degree();
    return p;
  }

  template <typename D>
  LaurentPoly<D> convert() const {
    std::map<int, D> out;
    for (const auto& [e, c] : terms()) {
      if constexpr (std::is_integral_v<D> && !std::is_integral_v<C>) {
        if (c > C(std::numeric_limits<D>::max()) || c < C(std::numeric_limits<D>::min()))
          throw OverflowError("Laurent coefficient does not fit the target type");
        out.emplace(e, static_cast<D>(c));
      } else {
        out.emplace(e, D(c));
      }
    }
    return LaurentPoly<D>::from_terms(out);
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = laurent_detail::sub(C(0), c);
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        p.coeffs_[i + j] = laurent_detail::add(p.coeffs_[i + j], laurent_detail::mul(a.coeffs_[i], b.coeffs_[j]));
    }
    p.trim();
    return p;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

  // Exact quotient a / b. Throws ParameterError if b does not divide a in
  // Z[t, t^-1].
  friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ParameterError("division by the zero polynomial");
    LaurentPoly q;
    if (a.is_zero()) return q;
    if (a.coeffs_.size() < b.coeffs_.size()) throw ParameterError("polynomial division is not exact");
    std::vector<C> rem = a.coeffs_;
    const std::size_t qn = a.coeffs_.size() - b.coeffs_.size() + 1;
    q.coeffs_.assign(qn, C(0));
    q.low_ = a.low_ - b.low_;
    const C lead = b.coeffs_.back();
    for (std::size_t k = qn; k-- > 0;) {
      const C& top = rem[k + b.coeffs_.size() - 1];
      if (top == C(0)) continue;
      if (top % lead != C(0)) throw ParameterError("polynomial division is not exact");
      const C factor = top / lead;
      q.coeffs_[k] = factor;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        rem[k + j] = laurent_detail::sub(rem[k + j], laurent_detail::mul(factor, b.coeffs_[j]));
    }
    for (const auto& c : rem)
      if (c != C(0)) throw ParameterError("polynomial division is not exact");
    q.trim();
    return q;
  }

  // Representative of the class of p up to units +-t^k: exponents symmetric
  // about zero (when the span is even) and positive leading coefficient.
  // Odd spans are centred with the extra exponent on the positive side.
  LaurentPoly normalized() const {
    if (is_zero()) return *this;
    LaurentPoly p = *this;
    p.low_ = -(span() / 2);
    if (p.leading() < C(0)) p = -p;
    return p;
  }

  bool equal_up_to_units(const LaurentPoly& o) const { return normalized() == o.normalized(); }

  // "t^-2 - t^-1 + 1 - t + t^2", ascending exponents.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      const bool negative = c < C(0);
      const C mag = negative ? C(0) - c : c;
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != C(1)) os << mag << '*';
      os << var;
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high_degree(), o.high_degree());
    std::vector<C> out(static_cast<std::size_t>(hi - lo + 1), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - lo + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = out[o.low_ - lo + i];
      slot = subtract ? laurent_detail::sub(slot, o.coeffs_[i]) : laurent_detail::add(slot, o.coeffs_[i]);
    }
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  void trim() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == C(0)) ++front;
    if (front == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t back = coeffs_.size();
    while (coeffs_[back - 1] == C(0)) --back;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(back), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
    low_ += static_cast<int>(front);
  }

  int low_ = 0;
  std::vector<C> coeffs_;
};

using Polynomial = LaurentPoly<std::int64_t>;

}  // namespace tlinks
