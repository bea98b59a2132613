#pragma once

#include "vk/exactla.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace vk {

using BigRat = boost::multiprecision::cpp_rational;
using Real50 = boost::multiprecision::cpp_bin_float_50;

struct Complex50 {
  Real50 re, im;
};

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) modulo the
// N-th cyclotomic polynomial, with one common positive denominator.
class CycNumber {
 public:
  CycNumber();
  CycNumber(long long v);  // NOLINT: integers embed implicitly
  explicit CycNumber(const BigInt& v);
  explicit CycNumber(const BigRat& v);

  static CycNumber zeta(int n, long long e = 1);
  // sqrt(m) for an integer m; negative m gives i*sqrt(|m|).
  static CycNumber sqrt_int(long long m);
  // sum c_j zeta_n^j over j = 0..n-1
  static CycNumber from_exponents(int n, const std::vector<BigRat>& c);

  int conductor() const { return n_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  BigRat to_rational() const;  // throws if not rational

  CycNumber lift(int m) const;  // m must be a multiple of the conductor
  CycNumber galois(long long a) const;  // zeta -> zeta^a, gcd(a, N) = 1
  CycNumber conj() const { return galois(-1); }
  CycNumber inverse() const;
  // Same number over the smallest cyclotomic field containing it.
  CycNumber normalized() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  Complex50 real_embed() const;
  double approx_re() const;
  double approx_im() const;
  // "c0 + c1*z(N)^1 + ..." over the minimal conductor
  std::string str() const;

 private:
  CycNumber(int n, std::vector<BigInt> num, BigInt den);
  void reduce();

  int n_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

int euler_phi(int n);
int lcm_int(int a, int b);

}  // namespace vk
