#include "vk/cyclo.hpp"

#include "vk/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

namespace vk {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<long long>;  // low degree first

struct Field {
  int n = 1, phi = 1;
  Poly cyc;                // monic, degree phi
  std::vector<long long> pw;  // row j: x^j mod cyc, j = 0..n-1
  int pw_bits = 1;
  const long long* power(int j) const { return pw.data() + static_cast<std::size_t>(j) * phi; }
};

Poly poly_div_exact(Poly a, const Poly& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  Poly q(da - db + 1);
  for (int i = da; i >= db; --i) {
    long long c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly cyclotomic(int n, std::map<int, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<Field> make_field(int n) {
  static std::map<int, Poly> memo;
  auto f = std::make_unique<Field>();
  f->n = n;
  f->phi = euler_phi(n);
  f->cyc = cyclotomic(n, memo);
  int phi = f->phi;
  f->pw.assign(static_cast<std::size_t>(n) * phi, 0);
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  if (phi == 1 && n == 2) cur[0] = 1;
  long long mx = 1;
  for (int j = 0; j < n; ++j) {
    std::copy(cur.begin(), cur.end(), f->pw.begin() + static_cast<std::size_t>(j) * phi);
    for (long long v : cur) mx = std::max(mx, v < 0 ? -v : v);
    // multiply by x and reduce by the monic cyclotomic polynomial
    long long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[i] -= top * f->cyc[i];
  }
  int bits = 1;
  while ((1LL << bits) <= mx) ++bits;
  f->pw_bits = bits;
  return f;
}

const Field& field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_field(n);
  return *slot;
}

unsigned bits_of(const BigInt& x) { return x == 0 ? 0 : boost::multiprecision::msb(abs(x)) + 1; }

unsigned max_bits(const std::vector<BigInt>& v) {
  unsigned b = 0;
  for (const auto& x : v) b = std::max(b, bits_of(x));
  return b;
}

unsigned log2_ceil(unsigned long long x) {
  unsigned b = 0;
  while ((1ULL << b) < x) ++b;
  return b;
}

BigInt from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<unsigned long long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(u & 0xFFFFFFFFFFFFFFFFULL);
  return neg ? BigInt(-r) : r;
}

std::optional<std::vector<BigRat>> solve_rational(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    BigRat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c] != 0) {
        BigRat f = a[i][c];
        for (std::size_t j = c; j < cols; ++j)
          if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        b[i] -= f * b[r];
      }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<BigRat> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

}  // namespace

CycNumber::CycNumber() : n_(1), num_{0}, den_(1) {}
CycNumber::CycNumber(long long v) : n_(1), num_{BigInt(v)}, den_(1) {}
CycNumber::CycNumber(const BigInt& v) : n_(1), num_{v}, den_(1) {}
CycNumber::CycNumber(const BigRat& v) : n_(1), num_{boost::multiprecision::numerator(v)}, den_(boost::multiprecision::denominator(v)) {}

CycNumber::CycNumber(int n, std::vector<BigInt> num, BigInt den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void CycNumber::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  BigInt g = den_;
  for (const auto& x : num_)
    if (x != 0) g = gcd(g, x);
  bool zero = true;
  for (const auto& x : num_)
    if (x != 0) zero = false;
  if (zero) {
    n_ = 1;
    num_.assign(1, 0);
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& x : num_) x /= g;
    den_ /= g;
  }
  bool rational = true;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) rational = false;
  if (rational && n_ != 1) {
    num_.resize(1);
    n_ = 1;
  }
}

CycNumber CycNumber::zeta(int n, long long e) {
  if (n <= 0) throw std::invalid_argument("conductor must be positive");
  e %= n;
  if (e < 0) e += n;
  if (n % 4 == 2) {
    int m = n / 2;
    CycNumber z = zeta(m, (e * ((m + 1) / 2)) % m);
    return (e % 2) ? -z : z;
  }
  const Field& f = field(n);
  std::vector<BigInt> num(f.phi);
  const long long* row = f.power(static_cast<int>(e));
  for (int i = 0; i < f.phi; ++i) num[i] = row[i];
  return CycNumber(n, std::move(num), 1);
}

CycNumber CycNumber::from_exponents(int n, const std::vector<BigRat>& c) {
  CycNumber r;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) r += CycNumber(c[j]) * zeta(n, static_cast<long long>(j));
  return r;
}

CycNumber CycNumber::sqrt_int(long long m) {
  if (m == 0) return CycNumber();
  if (m < 0) return zeta(4) * sqrt_int(-m);
  long long sq = 1, rest = m;
  std::vector<long long> primes;
  for (long long p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) rest /= p, ++e;
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) primes.push_back(p);
  }
  if (rest > 1) primes.push_back(rest);
  CycNumber r(sq);
  for (long long p : primes) {
    if (p == 2) {
      r *= zeta(8, 1) + zeta(8, 7);
      continue;
    }
    // quadratic Gauss sum
    CycNumber g;
    int pi = static_cast<int>(p);
    for (int a = 1; a < pi; ++a) {
      long long leg = 1;  // Euler's criterion
      long long base = a, ex = (p - 1) / 2;
      while (ex) {
        if (ex & 1) leg = leg * base % p;
        base = base * base % p;
        ex >>= 1;
      }
      g += (leg == 1 ? CycNumber(1) : CycNumber(-1)) * zeta(pi, a);
    }
    r *= (p % 4 == 1) ? g : -(zeta(4) * g);
  }
  return r;
}

bool CycNumber::is_zero() const { return n_ == 1 && num_[0] == 0; }

bool CycNumber::is_rational() const { return n_ == 1; }

BigRat CycNumber::to_rational() const {
  if (n_ != 1) throw MathError("cyclotomic number is not rational");
  return BigRat(num_[0], den_);
}

CycNumber CycNumber::lift(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("lift target is not a multiple of the conductor");
  const Field& f = field(m);
  int s = m / n_;
  std::vector<BigInt> num(f.phi);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const long long* row = f.power(static_cast<int>((s * i) % m));
    for (int k = 0; k < f.phi; ++k)
      if (row[k]) num[k] += num_[i] * row[k];
  }
  CycNumber r;
  r.n_ = m;
  r.num_ = std::move(num);
  r.den_ = den_;
  return r;  // deliberately not reduced: callers combine at conductor m
}

CycNumber CycNumber::galois(long long a) const {
  if (n_ == 1) return *this;
  a %= n_;
  if (a < 0) a += n_;
  if (std::gcd(static_cast<long long>(n_), a) != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
  const Field& f = field(n_);
  std::vector<BigInt> num(f.phi);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const long long* row = f.power(static_cast<int>((a * static_cast<long long>(i)) % n_));
    for (int k = 0; k < f.phi; ++k)
      if (row[k]) num[k] += num_[i] * row[k];
  }
  return CycNumber(n_, std::move(num), den_);
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int m = lcm_int(n_, o.n_);
  CycNumber a = lift(m), b = o.lift(m);
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < a.num_.size(); ++i) a.num_[i] += b.num_[i];
  } else {
    for (std::size_t i = 0; i < a.num_.size(); ++i) a.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    a.den_ *= b.den_;
  }
  a.reduce();
  return *this = std::move(a);
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber operator*(const CycNumber& x, const CycNumber& y) {
  if (x.is_zero() || y.is_zero()) return CycNumber();
  if (x.n_ == 1 || y.n_ == 1) {
    const CycNumber& r = x.n_ == 1 ? x : y;
    const CycNumber& o = x.n_ == 1 ? y : x;
    std::vector<BigInt> num = o.num_;
    for (auto& v : num) v *= r.num_[0];
    return CycNumber(o.n_, std::move(num), o.den_ * r.den_);
  }
  int m = lcm_int(x.n_, y.n_);
  CycNumber a = x.lift(m), b = y.lift(m);
  const Field& f = field(m);
  int phi = f.phi;
  std::vector<BigInt> out(phi);
  unsigned ba = max_bits(a.num_), bb = max_bits(b.num_);
  unsigned lp = log2_ceil(static_cast<unsigned long long>(phi) + 1);
  unsigned prod_bits = ba + bb + lp;
  if (ba < 63 && bb < 63 && prod_bits + f.pw_bits + lp + 2 < 126) {
    std::vector<__int128> p(2 * phi - 1, 0);
    std::vector<long long> av(phi), bv(phi);
    for (int i = 0; i < phi; ++i) av[i] = static_cast<long long>(a.num_[i]), bv[i] = static_cast<long long>(b.num_[i]);
    for (int i = 0; i < phi; ++i) {
      if (!av[i]) continue;
      for (int j = 0; j < phi; ++j)
        if (bv[j]) p[i + j] += static_cast<__int128>(av[i]) * bv[j];
    }
    std::vector<__int128> r(p.begin(), p.begin() + phi);
    for (int j = phi; j < 2 * phi - 1; ++j) {
      if (!p[j]) continue;
      const long long* row = f.power(j % m);
      for (int k = 0; k < phi; ++k)
        if (row[k]) r[k] += p[j] * row[k];
    }
    for (int k = 0; k < phi; ++k) out[k] = from_i128(r[k]);
  } else {
    std::vector<BigInt> p(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      for (int j = 0; j < phi; ++j)
        if (b.num_[j] != 0) p[i + j] += a.num_[i] * b.num_[j];
    }
    for (int k = 0; k < phi; ++k) out[k] = p[k];
    for (int j = phi; j < 2 * phi - 1; ++j) {
      if (p[j] == 0) continue;
      const long long* row = f.power(j % m);
      for (int k = 0; k < phi; ++k)
        if (row[k]) out[k] += p[j] * row[k];
    }
  }
  return CycNumber(m, std::move(out), a.den_ * b.den_);
}

CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (n_ == 1) return CycNumber(num_[0] < 0 ? BigRat(-den_, -num_[0]) : BigRat(den_, num_[0]));
  const Field& f = field(n_);
  int phi = f.phi;
  // multiplication-by-A matrix, column j = x^j * A mod cyc
  std::vector<std::vector<BigRat>> mat(phi, std::vector<BigRat>(phi));
  std::vector<BigInt> cur = num_;
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) mat[i][j] = BigRat(cur[i]);
    BigInt top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[i] -= top * f.cyc[i];
  }
  std::vector<BigRat> e(phi);
  e[0] = 1;
  auto y = solve_rational(mat, e);
  if (!y) throw DivisionByZero("singular multiplication matrix");
  BigInt den = 1;
  for (const auto& v : *y) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
  std::vector<BigInt> num(phi);
  for (int i = 0; i < phi; ++i) num[i] = boost::multiprecision::numerator((*y)[i]) * (den / boost::multiprecision::denominator((*y)[i])) * den_;
  return CycNumber(n_, std::move(num), den);
}

CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this = *this * o.inverse(); }

bool operator==(const CycNumber& a, const CycNumber& b) { return (a - b).is_zero(); }

CycNumber CycNumber::normalized() const {
  if (n_ == 1) return *this;
  for (int m = 1; m < n_; ++m) {
    if (n_ % m != 0 || m % 4 == 2) continue;
    bool fixed = true;
    for (int u = 1 + m; u < n_ && fixed; u += m)
      if (std::gcd(u, n_) == 1 && !(galois(u) == *this)) fixed = false;
    if (!fixed) continue;
    int pm = euler_phi(m);
    const Field& f = field(n_);
    int phi = f.phi;
    std::vector<std::vector<BigRat>> mat(phi, std::vector<BigRat>(pm));
    int s = n_ / m;
    for (int j = 0; j < pm; ++j) {
      const long long* row = f.power((s * j) % n_);
      for (int i = 0; i < phi; ++i) mat[i][j] = row[i];
    }
    std::vector<BigRat> rhs(phi);
    for (int i = 0; i < phi; ++i) rhs[i] = BigRat(num_[i], den_);
    auto y = solve_rational(mat, rhs);
    if (!y) continue;
    BigInt den = 1;
    for (const auto& v : *y) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<BigInt> num(pm);
    for (int i = 0; i < pm; ++i) num[i] = boost::multiprecision::numerator((*y)[i]) * (den / boost::multiprecision::denominator((*y)[i]));
    return CycNumber(m, std::move(num), den);
  }
  return *this;
}

Complex50 CycNumber::real_embed() const {
  Complex50 z{0, 0};
  Real50 two_pi = 2 * boost::math::constants::pi<Real50>();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Real50 c(num_[i]);
    Real50 ang = two_pi * static_cast<long>(i) / n_;
    z.re += c * cos(ang);
    z.im += c * sin(ang);
  }
  Real50 d(den_);
  z.re /= d;
  z.im /= d;
  return z;
}

double CycNumber::approx_re() const { return static_cast<double>(real_embed().re); }
double CycNumber::approx_im() const { return static_cast<double>(real_embed().im); }

std::string CycNumber::str() const {
  CycNumber a = normalized();
  auto term = [&](std::size_t i) {
    BigRat c(a.num_[i], a.den_);
    return c;
  };
  if (a.n_ == 1) return term(0).str();
  std::string s;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    BigRat c = term(i);
    if (c == 0) continue;
    std::string mag = (c < 0 ? BigRat(-c) : c).str();
    std::string body = i == 0 ? mag : (mag == "1" ? "" : mag + "*") + "z(" + std::to_string(a.n_) + ")^" + std::to_string(i);
    if (s.empty())
      s = (c < 0 ? "-" : "") + body;
    else
      s += (c < 0 ? " - " : " + ") + body;
  }
  return s;
}

}  // namespace vk
