#include "vk/fusion.hpp"

#include "vk/errors.hpp"
#include "vk/repring.hpp"

#include <algorithm>
#include <numeric>

namespace vk {

CycMatrix cyc_multiply(const CycMatrix& a, const CycMatrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
  CycMatrix c(n, std::vector<CycNumber>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

CycMatrix cyc_conj_transpose(const CycMatrix& a) {
  std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  CycMatrix c(m, std::vector<CycNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c[j][i] = a[i][j].conj();
  return c;
}

CycMatrix cyc_identity(std::size_t n) {
  CycMatrix c(n, std::vector<CycNumber>(n));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = CycNumber(1);
  return c;
}

bool cyc_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

CycMatrix ModularData::T_matrix() const {
  CycMatrix t(size(), std::vector<CycNumber>(size()));
  for (std::size_t i = 0; i < size(); ++i) t[i][i] = T[i];
  return t;
}

std::string ModularCheck::failures() const {
  std::string s;
  auto add = [&](bool ok, const char* what) {
    if (!ok) s += (s.empty() ? "" : ", ") + std::string(what);
  };
  add(symmetric, "S not symmetric");
  add(unitary, "S not unitary");
  add(st_cubed, "(ST)^3 != S^2");
  add(charge_conjugation, "S^2 not an involutive permutation");
  return s;
}

ModularCheck check_modular(const ModularData& d) {
  ModularCheck c;
  std::size_t n = d.size();
  c.symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(d.S[i][j] == d.S[j][i])) c.symmetric = false;
  c.unitary = cyc_equal(cyc_multiply(d.S, cyc_conj_transpose(d.S)), cyc_identity(n));
  CycMatrix s2 = cyc_multiply(d.S, d.S);
  CycMatrix st = cyc_multiply(d.S, d.T_matrix());
  c.st_cubed = cyc_equal(cyc_multiply(cyc_multiply(st, st), st), s2);
  bool perm = true;
  for (std::size_t i = 0; i < n && perm; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (s2[i][j] == CycNumber(1))
        ++ones;
      else if (!s2[i][j].is_zero())
        perm = false;
    }
    if (ones != 1) perm = false;
  }
  c.charge_conjugation = perm && cyc_equal(cyc_multiply(s2, s2), cyc_identity(n));
  return c;
}

// ---------------------------------------------------------------------------
// fusion rings

FusionRing make_fusion_ring(std::vector<std::string> labels) {
  FusionRing r;
  std::size_t n = labels.size();
  r.labels = std::move(labels);
  r.N.assign(n * n * n, 0);
  return r;
}

IntMatrix FusionRing::matrix(std::size_t a) const {
  std::size_t n = size();
  IntMatrix m(n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) m(b, c) = (*this)(a, b, c);
  return m;
}

IntVec FusionRing::product(std::size_t a, std::size_t b) const {
  IntVec v(size());
  for (std::size_t c = 0; c < size(); ++c) v[c] = (*this)(a, b, c);
  return v;
}

std::string FusionRing::product_str(std::size_t a, std::size_t b) const {
  return combination_label(product(a, b), labels);
}

std::size_t FusionRing::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("no primary " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

bool FusionRing::associative() const {
  std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          long long l = 0, r = 0;
          for (std::size_t d = 0; d < n; ++d) {
            l += (*this)(a, b, d) * (*this)(d, c, e);
            r += (*this)(b, c, d) * (*this)(a, d, e);
          }
          if (l != r) return false;
        }
  return true;
}

bool FusionRing::commutative() const {
  std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if ((*this)(a, b, c) != (*this)(b, a, c)) return false;
  return true;
}

bool FusionRing::unit_normalized() const {
  std::size_t n = size();
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      if ((*this)(0, b, c) != (b == c ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SU(2)_k

ModularData su2_modular_data(int k) {
  if (k < 1) throw std::invalid_argument("level must be at least 1");
  int n = k + 2;
  ModularData d;
  for (int l = 0; l <= k; ++l) d.labels.push_back(std::to_string(l));
  CycNumber pref = CycNumber::sqrt_int(2 * n) / CycNumber(n);
  CycNumber twoi = CycNumber(2) * CycNumber::zeta(4);
  d.S.assign(k + 1, std::vector<CycNumber>(k + 1));
  for (int l = 0; l <= k; ++l)
    for (int m = l; m <= k; ++m) {
      long long x = static_cast<long long>(l + 1) * (m + 1);
      CycNumber sine = (CycNumber::zeta(2 * n, x) - CycNumber::zeta(2 * n, -x)) / twoi;
      d.S[l][m] = d.S[m][l] = (pref * sine).normalized();
    }
  for (int l = 0; l <= k; ++l) d.T.push_back(CycNumber::zeta(8 * n, 2LL * l * (l + 2) - k).normalized());
  return d;
}

FusionRing verlinde_matrices(const ModularData& d) {
  std::size_t n = d.size();
  FusionRing r = make_fusion_ring(d.labels);
  std::vector<CycNumber> inv0(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (d.S[0][k].is_zero()) throw NonIntegralFusion("S_0k vanishes");
    inv0[k] = d.S[0][k].inverse();
  }
  CycMatrix sc = cyc_conj_transpose(d.S);  // sc[k][c] = conj S_{ck}
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<CycNumber> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = d.S[a][k] * d.S[b][k] * inv0[k];
      for (std::size_t c = 0; c < n; ++c) {
        CycNumber s;
        for (std::size_t k = 0; k < n; ++k) s += v[k] * sc[k][c];
        if (!s.is_rational()) throw NonIntegralFusion("N_{" + d.labels[a] + "," + d.labels[b] + "}^" + d.labels[c] + " is irrational");
        BigRat q = s.to_rational();
        if (boost::multiprecision::denominator(q) != 1 || q < 0)
          throw NonIntegralFusion("N_{" + d.labels[a] + "," + d.labels[b] + "}^" + d.labels[c] + " = " + q.str());
        long long v2 = static_cast<long long>(boost::multiprecision::numerator(q));
        r.at(a, b, c) = r.at(b, a, c) = v2;
      }
    }
  return r;
}

FusionRing su2_fusion_truncated(int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<std::string> labels;
  for (int l = 0; l <= k; ++l) labels.push_back(std::to_string(l));
  FusionRing r = make_fusion_ring(labels);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) r.at(a, b, c) = 1;
  return r;
}

FGAbelianGroup torus_fusion(const IntMatrix& tau) {
  if (tau.rows != tau.cols) throw std::invalid_argument("level must be square");
  if (determinant(tau) == 0) throw SingularLevel("det of the level matrix is 0");
  return cokernel(tau);
}

FGAbelianGroup fusion_group(const FusionRing& r) {
  std::size_t n = r.size();
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rels;
  rels.push_back({{0, 1}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::size_t c = n;
      for (std::size_t x = 0; x < n; ++x) {
        long long v = r(a, b, x);
        if (v == 0) continue;
        if (v != 1 || c != n) throw std::invalid_argument("fusion ring is not group-like");
        c = x;
      }
      if (c == n) throw std::invalid_argument("fusion ring is not group-like");
      std::vector<std::pair<std::size_t, BigInt>> rel{{c, -1}};
      if (a == b)
        rel.emplace_back(a, 2);
      else
        rel.emplace_back(a, 1), rel.emplace_back(b, 1);
      rels.push_back(rel);
    }
  return Quotient(n, rels, r.labels).group();
}

// ---------------------------------------------------------------------------
// doubles

namespace {

std::vector<std::vector<int>> tuples(const std::vector<int>& orders) {
  std::vector<std::vector<int>> out{{}};
  for (int m : orders) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int x = 0; x < m; ++x) {
        auto u = t;
        u.push_back(x);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

std::string digits(const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

}  // namespace

AbelianDouble double_abelian(const std::vector<int>& orders) {
  for (int m : orders)
    if (m < 1) throw std::invalid_argument("cyclic factor orders must be positive");
  AbelianDouble out;
  out.orders = orders;
  auto els = tuples(orders);
  std::size_t g = els.size(), n = g * g;
  int L = 1;
  for (int m : orders) L = std::lcm(L, m);
  // chi_c(a) = exp(2 pi i sum c_i a_i / m_i), exponent over L
  auto pair_exp = [&](const std::vector<int>& c, const std::vector<int>& a) {
    long long e = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) e += static_cast<long long>(c[i]) * a[i] * (L / orders[i]);
    return e % L;
  };
  for (const auto& a : els)
    for (const auto& c : els) out.data.labels.push_back("(" + digits(a) + ";" + digits(c) + ")");
  out.data.S.assign(n, std::vector<CycNumber>(n));
  CycNumber inv_g(BigRat(1, static_cast<long long>(g)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto &a = els[i / g], &chi = els[i % g];
    out.data.T.push_back(CycNumber::zeta(L, pair_exp(chi, a)).normalized());
    for (std::size_t j = 0; j < n; ++j) {
      const auto &b = els[j / g], &psi = els[j % g];
      out.data.S[i][j] = (CycNumber::zeta(L, -(pair_exp(chi, b) + pair_exp(psi, a))) * inv_g).normalized();
    }
  }
  out.ring = make_fusion_ring(out.data.labels);
  auto add = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders[i];
    std::size_t idx = 0;
    for (std::size_t i = 0; i < z.size(); ++i) idx = idx * orders[i] + z[i];
    return idx;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.ring.at(i, j, add(els[i / g], els[j / g]) * g + add(els[i % g], els[j % g])) = 1;
  IntMatrix rel(2 * orders.size(), 2 * orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    rel(i, i) = orders[i];
    rel(orders.size() + i, orders.size() + i) = orders[i];
  }
  out.group = cokernel(rel);
  return out;
}

AbelianDouble double_of_group(const std::string& name) {
  const QuaternionGroup& g = quaternion_group(name);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (g.mul[a][b] != g.mul[b][a]) throw NonAbelian(name + " is not abelian");
  // finite abelian subgroups of SU(2) are cyclic
  return double_abelian({static_cast<int>(g.size())});
}

TwistedDouble double_cyclic_twisted(int n, int sigma) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (sigma < 1 || sigma > n) throw InvalidTwist("twist must lie in 1.." + std::to_string(n));
  TwistedDouble t;
  t.n = n;
  t.sigma = sigma;
  std::vector<std::string> labels;
  for (int g = 0; g < n; ++g)
    for (int j = 0; j < n; ++j) labels.push_back("(" + std::to_string(g) + ";" + std::to_string(j) + ")");
  t.ring = make_fusion_ring(labels);
  // (g, j)(h, j') = ([g+h], j + j' + 2 sigma carry(g, h))
  for (int g = 0; g < n; ++g)
    for (int j = 0; j < n; ++j)
      for (int h = 0; h < n; ++h)
        for (int jj = 0; jj < n; ++jj) {
          int carry = (g + h) / n;
          int gh = (g + h) % n, jo = (j + jj + 2 * sigma * carry) % n;
          t.ring.at(g * n + j, h * n + jj, gh * n + jo) = 1;
        }
  t.group = cokernel(IntMatrix::from_rows({{n, 0}, {-2LL * sigma, n}}), {"(1;0)", "(0;1)"});
  return t;
}

FGAbelianGroup gcd_formula_group(int n, int sigma) {
  int d = std::gcd(2 * n, sigma);
  long long n2 = static_cast<long long>(n) * n;
  if (n2 % d != 0) throw InvalidTwist("gcd(2n, sigma) = " + std::to_string(d) + " does not divide n^2 = " + std::to_string(n2));
  return cokernel(IntMatrix::from_rows({{d, 0}, {0, n2 / d}}));
}

LevelOne level1_data(const std::string& group) {
  LevelOne out;
  ModularData& d = out.data;
  if (group == "SU3") {
    d.labels = {"(00)", "(10)", "(01)"};
    CycNumber r = CycNumber::sqrt_int(3).inverse();
    d.S.assign(3, std::vector<CycNumber>(3));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) d.S[a][b] = (r * CycNumber::zeta(3, a * b)).normalized();
    // c = 2, h = 1/3 for both nontrivial primaries
    d.T = {CycNumber::zeta(12, -1), CycNumber::zeta(4), CycNumber::zeta(4)};
  } else if (group == "Sp4") {
    d.labels = {"(00)", "(01)", "(10)"};
    CycNumber h(BigRat(1, 2)), r = CycNumber::sqrt_int(2) * h;
    d.S = {{h, h, r}, {h, h, -r}, {r, -r, CycNumber(0)}};
    // c = 5/2; vector (01) has h = 1/2, spinor (10) has h = 5/16
    d.T = {CycNumber::zeta(48, -5), CycNumber::zeta(48, 19), CycNumber::zeta(48, 10)};
  } else {
    throw std::invalid_argument("level-one data available for SU3 and Sp4");
  }
  for (auto& t : d.T) t = t.normalized();
  out.ring = verlinde_matrices(d);
  return out;
}

}  // namespace vk
