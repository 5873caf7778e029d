#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "hessenberg/errors.hpp"

namespace hessenberg {

// Exact rational scalar.  No floating point is used anywhere in the matrix
// machinery.
using Rat = boost::multiprecision::cpp_rational;

// Element of the prime field F_q with a runtime modulus.  Default-constructed
// values and small integer literals carry modulus 0 and act as plain integers
// until they meet a moduled element; mixing two distinct nonzero moduli is an
// internal error.
class Fq {
 public:
  Fq() = default;
  Fq(long long v) : v_(v) {}  // NOLINT: implicit for generic matrix code
  Fq(long long v, long long q) : v_(v), q_(q) { reduce(); }

  long long value() const { return v_; }
  long long modulus() const { return q_; }
  bool is_zero() const { return v_ == 0; }

  friend Fq operator+(const Fq& a, const Fq& b) {
    Fq r(a.v_ + b.v_, joint(a, b));
    return r;
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    Fq r(a.v_ - b.v_, joint(a, b));
    return r;
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    Fq r(a.v_ * b.v_, joint(a, b));
    return r;
  }
  Fq operator-() const { return Fq(-v_, q_); }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  friend bool operator==(const Fq& a, const Fq& b) {
    Fq d = a - b;
    return d.v_ == 0;
  }

 private:
  static long long joint(const Fq& a, const Fq& b) {
    if (a.q_ != 0 && b.q_ != 0 && a.q_ != b.q_)
      throw InternalError("Fq: mixed moduli");
    return a.q_ != 0 ? a.q_ : b.q_;
  }
  void reduce() {
    if (q_ != 0) {
      v_ %= q_;
      if (v_ < 0) v_ += q_;
    }
  }
  long long v_ = 0;
  long long q_ = 0;
};

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Fq& x) { return std::to_string(x.value()); }

bool is_prime(long long q);

}  // namespace hessenberg
