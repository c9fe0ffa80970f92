#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superdenom/errors.hpp"

namespace superdenom {

// An element of the affine weight space in the epsilon/delta/imaginary
// coordinates.  All coordinates are stored doubled so that half-integer
// weights (rho for gl(n|n), classical rho' in orbit sums) stay exact.
// The convention: q = e^{-delta}, so a term with imaginary coordinate -k
// carries q^k.
struct Weight {
  std::vector<int64_t> eps2;  // doubled coefficients of eps_1..eps_m
  std::vector<int64_t> del2;  // doubled coefficients of delta_1..delta_n
  int64_t imag2 = 0;          // doubled coefficient of the imaginary root

  Weight() = default;
  Weight(int m, int n) : eps2(m, 0), del2(n, 0) {}

  int m() const { return static_cast<int>(eps2.size()); }
  int n() const { return static_cast<int>(del2.size()); }

  bool is_zero() const {
    if (imag2 != 0) return false;
    for (int64_t c : eps2)
      if (c != 0) return false;
    for (int64_t c : del2)
      if (c != 0) return false;
    return true;
  }

  // True when every underlying coordinate is an integer.
  bool is_integral() const {
    if (imag2 % 2 != 0) return false;
    for (int64_t c : eps2)
      if (c % 2 != 0) return false;
    for (int64_t c : del2)
      if (c % 2 != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_same_space(o);
    for (size_t i = 0; i < eps2.size(); ++i) eps2[i] += o.eps2[i];
    for (size_t i = 0; i < del2.size(); ++i) del2[i] += o.del2[i];
    imag2 += o.imag2;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_space(o);
    for (size_t i = 0; i < eps2.size(); ++i) eps2[i] -= o.eps2[i];
    for (size_t i = 0; i < del2.size(); ++i) del2[i] -= o.del2[i];
    imag2 -= o.imag2;
    return *this;
  }
  Weight& operator*=(int64_t c) {
    for (auto& x : eps2) x *= c;
    for (auto& x : del2) x *= c;
    imag2 *= c;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, int64_t c) { return a *= c; }
  friend Weight operator*(int64_t c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.eps2 == b.eps2 && a.del2 == b.del2 && a.imag2 == b.imag2;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.eps2 != b.eps2) return a.eps2 < b.eps2;
    if (a.del2 != b.del2) return a.del2 < b.del2;
    return a.imag2 < b.imag2;
  }

  // eps_i, delta_i and the imaginary root as basis weights.
  static Weight eps(int m, int n, int i) {
    Weight w(m, n);
    w.eps2[i] = 2;
    return w;
  }
  static Weight del(int m, int n, int i) {
    Weight w(m, n);
    w.del2[i] = 2;
    return w;
  }
  static Weight imaginary(int m, int n) {
    Weight w(m, n);
    w.imag2 = 2;
    return w;
  }

  std::string str() const {
    auto half = [](int64_t c2) {
      if (c2 % 2 == 0) return std::to_string(c2 / 2);
      return std::to_string(c2) + "/2";
    };
    std::string s = "(";
    for (size_t i = 0; i < eps2.size(); ++i) s += (i ? "," : "") + half(eps2[i]);
    s += "|";
    for (size_t i = 0; i < del2.size(); ++i) s += (i ? "," : "") + half(del2[i]);
    s += "|" + half(imag2) + ")";
    return s;
  }

 private:
  void check_same_space(const Weight& o) const {
    if (eps2.size() != o.eps2.size() || del2.size() != o.del2.size())
      throw DimensionMismatch("weights from different spaces");
  }
};

// The invariant bilinear form, normalized so that
// -(eps_i,eps_j) = (delta_i,delta_j) = delta_{ij} and the imaginary root
// pairs to zero with everything, itself included.  Returned multiplied by 4
// (both arguments are doubled) so the value is always an exact integer.
inline int64_t bilinear_times4(const Weight& a, const Weight& b) {
  if (a.eps2.size() != b.eps2.size() || a.del2.size() != b.del2.size())
    throw DimensionMismatch("bilinear: weights from different spaces");
  int64_t s = 0;
  for (size_t i = 0; i < a.eps2.size(); ++i) s -= a.eps2[i] * b.eps2[i];
  for (size_t i = 0; i < a.del2.size(); ++i) s += a.del2[i] * b.del2[i];
  return s;
}

// The form on two lattice vectors; asserts integrality of the result.
inline int64_t bilinear_int(const Weight& a, const Weight& b) {
  int64_t v4 = bilinear_times4(a, b);
  if (v4 % 4 != 0)
    throw InternalCheckError("bilinear value not an integer: " + a.str() + ", " + b.str());
  return v4 / 4;
}

}  // namespace superdenom
