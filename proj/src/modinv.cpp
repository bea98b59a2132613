#include "vk/modinv.hpp"

#include "vk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace vk {

namespace {

CycMatrix to_cyc(const IntMatrix& z) {
  CycMatrix c(z.rows, std::vector<CycNumber>(z.cols));
  for (std::size_t i = 0; i < z.rows; ++i)
    for (std::size_t j = 0; j < z.cols; ++j)
      if (z(i, j) != 0) c[i][j] = CycNumber(z(i, j));
  return c;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.data.begin(), a.data.end(), b.data.begin(), b.data.end());
}

}  // namespace

std::string InvariantReport::failures() const {
  std::string s;
  auto add = [&](bool ok, const char* what) {
    if (!ok) s += (s.empty() ? "" : ", ") + std::string(what);
  };
  add(square, "wrong shape");
  add(nonnegative, "negative entry");
  add(normalized, "Z_00 != 1");
  add(commutes_S, "ZS != SZ");
  add(commutes_T, "ZT != TZ");
  return s;
}

InvariantReport check_invariant(const IntMatrix& Z, const ModularData& d) {
  InvariantReport r;
  std::size_t n = d.size();
  r.square = Z.rows == n && Z.cols == n;
  if (!r.square) return r;
  r.nonnegative = std::all_of(Z.data.begin(), Z.data.end(), [](const BigInt& x) { return x >= 0; });
  r.normalized = n > 0 && Z(0, 0) == 1;
  CycMatrix z = to_cyc(Z);
  r.commutes_S = cyc_equal(cyc_multiply(z, d.S), cyc_multiply(d.S, z));
  r.commutes_T = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Z(i, j) != 0 && !(d.T[i] == d.T[j])) r.commutes_T = false;
  return r;
}

// ---------------------------------------------------------------------------
// commutant and enumeration

namespace {

using u64 = unsigned long long;
const u64 P = (1ULL << 61) - 1;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % P); }
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 reduce(const BigInt& x) {
  BigInt r = x % BigInt(P);
  if (r < 0) r += P;
  return static_cast<u64>(r);
}

// Indices of rows that are independent modulo P.
std::vector<std::size_t> independent_rows(const std::vector<IntVec>& rows, std::size_t width) {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots, keep;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<u64> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = reduce(rows[r][j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u64 f = v[pivots[b]];
      if (!f) continue;
      for (std::size_t j = 0; j < width; ++j) v[j] = (v[j] + P - mulmod(f, basis[b][j])) % P;
    }
    std::size_t p = 0;
    while (p < width && !v[p]) ++p;
    if (p == width) continue;
    u64 inv = powmod(v[p], P - 2);
    for (auto& x : v) x = mulmod(x, inv);
    basis.push_back(v);
    pivots.push_back(p);
    keep.push_back(r);
    if (basis.size() == width) break;
  }
  return keep;
}

}  // namespace

IntMatrix commutant_basis(const ModularData& d) {
  std::size_t n = d.size();
  std::vector<long> var(n * n, -1);
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.T[i] == d.T[j]) var[i * n + j] = static_cast<long>(cells.size()), cells.push_back(i * n + j);
  std::size_t nv = cells.size();
  int M = 1;
  for (const auto& row : d.S)
    for (const auto& x : row) M = lcm_int(M, x.conductor());
  std::vector<IntVec> rows;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<CycNumber> coef(nv);
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (var[l * n + v] >= 0 && !d.S[v][m].is_zero()) coef[var[l * n + v]] += d.S[v][m], any = true;
        if (var[v * n + m] >= 0 && !d.S[l][v].is_zero()) coef[var[v * n + m]] -= d.S[l][v], any = true;
      }
      if (!any) continue;
      std::size_t phi = static_cast<std::size_t>(euler_phi(M));
      std::vector<IntVec> comp(phi, IntVec(nv));
      BigInt den = 1;
      std::vector<CycNumber> lifted(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        if (coef[v].is_zero()) continue;
        lifted[v] = coef[v].lift(M);
        den = boost::multiprecision::lcm(den, lifted[v].denominator());
      }
      for (std::size_t v = 0; v < nv; ++v) {
        if (coef[v].is_zero()) continue;
        BigInt scale = den / lifted[v].denominator();
        const auto& num = lifted[v].numerators();
        for (std::size_t c = 0; c < num.size(); ++c) comp[c][v] = num[c] * scale;
      }
      for (auto& c : comp)
        if (std::any_of(c.begin(), c.end(), [](const BigInt& x) { return x != 0; })) rows.push_back(std::move(c));
    }
  auto build = [&](const std::vector<std::size_t>& idx) {
    IntMatrix a(idx.size(), nv);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < nv; ++j) a(r, j) = rows[idx[r]][j];
    return kernel_basis(a);
  };
  auto satisfies_all = [&](const IntMatrix& k) {
    for (std::size_t c = 0; c < k.cols; ++c)
      for (const auto& row : rows) {
        BigInt s = 0;
        for (std::size_t j = 0; j < nv; ++j)
          if (row[j] != 0) s += row[j] * k(j, c);
        if (s != 0) return false;
      }
    return true;
  };
  IntMatrix ker = build(independent_rows(rows, nv));
  if (!satisfies_all(ker)) {
    std::vector<std::size_t> all(rows.size());
    std::iota(all.begin(), all.end(), 0);
    ker = build(all);
  }
  IntMatrix flat(ker.cols, n * n);
  for (std::size_t c = 0; c < ker.cols; ++c)
    for (std::size_t v = 0; v < nv; ++v) flat(c, cells[v]) = ker(v, c);
  return hermite_rows(flat);
}

Enumeration enumerate_invariants(int k, const EnumerationOptions& opt) {
  ModularData d = su2_modular_data(k);
  std::size_t n = d.size();
  IntMatrix H = commutant_basis(d);
  Enumeration out;
  out.commutant_rank = H.rows;
  std::vector<double> dim(n);
  double s00 = static_cast<double>(d.S[0][0].real_embed().re);
  for (std::size_t l = 0; l < n; ++l) dim[l] = static_cast<double>(d.S[l][0].real_embed().re) / s00;
  std::vector<BigInt> upper(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) upper[i * n + j] = static_cast<long long>(std::floor(dim[i] * dim[j] + 1e-9));
  upper[0] = 1;
  std::vector<std::size_t> piv(H.rows);
  for (std::size_t r = 0; r < H.rows; ++r) {
    std::size_t p = 0;
    while (H(r, p) == 0) ++p;
    piv[r] = p;
  }
  // Z_00 = 1 is enforced through the bound; 0 <= Z <= d_l d_m elsewhere
  std::vector<BigInt> cur(n * n, 0);
  BigInt volume = 1;
  std::vector<std::pair<BigInt, BigInt>> range(H.rows);
  auto floor_div = [](const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  auto ceil_div = [&](const BigInt& a, const BigInt& b) { return -floor_div(-a, b); };
  auto lower = [&](std::size_t idx) { return idx == 0 ? BigInt(1) : BigInt(0); };
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (++out.visited > opt.budget)
      throw SearchBudgetExceeded("level " + std::to_string(k) + ": more than " + std::to_string(opt.budget) +
                                 " candidates in a box of " + std::to_string(H.rows) + " coordinates");
    if (r == H.rows) {
      for (std::size_t x = 0; x < n * n; ++x)
        if (cur[x] < lower(x) || cur[x] > upper[x]) return;
      IntMatrix z(n, n);
      z.data = cur;
      out.invariants.push_back(z);
      return;
    }
    std::size_t p = piv[r];
    BigInt h = H(r, p);
    BigInt lo = ceil_div(lower(p) - cur[p], h), hi = floor_div(upper[p] - cur[p], h);
    for (BigInt c = lo; c <= hi; ++c) {
      for (std::size_t x = p; x < n * n; ++x)
        if (H(r, x) != 0) cur[x] += c * H(r, x);
      self(self, r + 1);
      for (std::size_t x = p; x < n * n; ++x)
        if (H(r, x) != 0) cur[x] -= c * H(r, x);
    }
  };
  (void)volume;
  (void)range;
  rec(rec, 0);
  std::sort(out.invariants.begin(), out.invariants.end(), lex_less);
  for (const auto& z : out.invariants)
    if (!check_invariant(z, d).ok()) throw InvariantCheckFailed("enumerated matrix fails the axioms at level " + std::to_string(k));
  return out;
}

// ---------------------------------------------------------------------------
// branchings

namespace {

BranchingRule branching(int k, std::vector<std::string> ext, const std::vector<std::vector<int>>& rows) {
  BranchingRule b;
  b.ext_labels = std::move(ext);
  for (int l = 0; l <= k; ++l) b.base_labels.push_back(std::to_string(l));
  b.b = IntMatrix(rows.size(), k + 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int l : rows[r]) b.b(r, l) += 1;
  return b;
}

}  // namespace

BranchingRule d4_branching() { return branching(4, {"(00)", "(10)", "(01)"}, {{0, 4}, {2}, {2}}); }

BranchingRule e6_branching() { return branching(10, {"(00)", "(01)", "(10)"}, {{0, 6}, {4, 10}, {3, 7}}); }

BranchingRule identity_branching(int k) {
  std::vector<std::string> ext;
  std::vector<std::vector<int>> rows;
  for (int l = 0; l <= k; ++l) ext.push_back(std::to_string(l)), rows.push_back({l});
  return branching(k, ext, rows);
}

IntMatrix embed_invariant(const BranchingRule& b, const ModularData& ext, const ModularData& base) {
  if (b.b.rows != ext.size() || b.b.cols != base.size())
    throw InvariantCheckFailed("branching matrix is " + std::to_string(b.b.rows) + "x" + std::to_string(b.b.cols));
  if (b.b(0, 0) != 1) throw InvariantCheckFailed("vacuum row does not contain the vacuum once");
  IntMatrix z = b.b.transpose() * b.b;
  InvariantReport r = check_invariant(z, base);
  if (!r.ok()) throw InvariantCheckFailed(r.failures());
  return z;
}

IntMatrix z_d4() {
  IntMatrix z(5, 5);
  z(0, 0) = z(0, 4) = z(4, 0) = z(4, 4) = 1;
  z(2, 2) = 2;
  return z;
}

IntMatrix z_e6() {
  IntMatrix z(11, 11);
  for (const auto& blk : std::vector<std::vector<int>>{{0, 6}, {3, 7}, {4, 10}})
    for (int a : blk)
      for (int b : blk) z(a, b) = 1;
  return z;
}

IntMatrix charge_conjugation(const ModularData& d) {
  CycMatrix s2 = cyc_multiply(d.S, d.S);
  IntMatrix c(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!s2[i][j].is_rational()) throw InvariantCheckFailed("S^2 is not a permutation");
      BigRat q = s2[i][j].to_rational();
      if (q != 0 && q != 1) throw InvariantCheckFailed("S^2 is not a permutation");
      c(i, j) = q == 1 ? 1 : 0;
    }
  return c;
}

Cardinalities cardinalities(const IntMatrix& Z, const IntMatrix* b) {
  Cardinalities c;
  for (std::size_t i = 0; i < Z.rows; ++i) c.trZ += Z(i, i);
  for (const auto& x : Z.data) c.trZZt += x * x;
  if (b) {
    c.has_b = true;
    for (const auto& x : b->data) c.trBtB += x * x;
  }
  return c;
}

// ---------------------------------------------------------------------------
// nimreps

IntMatrix ade_graph(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown diagram " + name);
  int n = std::stoi(name.substr(1));
  IntMatrix a(n, n);
  auto edge = [&](int i, int j) { a(i, j) = a(j, i) = 1; };
  switch (name[0]) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      return a;
    case 'D':
      if (n < 4) break;
      for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      return a;
    case 'E':
      if (n < 6 || n > 8) break;
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(2, n - 1);
      return a;
  }
  throw std::invalid_argument("unknown diagram " + name);
}

IntVec characteristic_polynomial(const IntMatrix& A) {
  std::size_t n = A.rows;
  IntVec c(n + 1);
  c[n] = 1;
  IntMatrix M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix AM = A * M;
    for (std::size_t i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
    M = AM;
    IntMatrix AM2 = A * M;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM2(i, i);
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return c;
}

namespace {

std::size_t cyc_rank(CycMatrix m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    CycNumber inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      CycNumber f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<int> diagonal_exponents(const IntMatrix& Z) {
  std::vector<int> e;
  for (std::size_t i = 0; i < Z.rows; ++i)
    for (BigInt m = 0; m < Z(i, i); ++m) e.push_back(static_cast<int>(i));
  return e;
}

NimrepReport nimrep_from_graph(const IntMatrix& A, int k) {
  if (k < 1) throw std::invalid_argument("level must be at least 1");
  std::size_t n = A.rows;
  NimrepReport r;
  r.G.push_back(IntMatrix::identity(n));
  r.G.push_back(A);
  for (int l = 1; l < k; ++l) {
    IntMatrix next = A * r.G[l];
    for (std::size_t x = 0; x < next.data.size(); ++x) next.data[x] -= r.G[l - 1].data[x];
    r.G.push_back(next);
  }
  for (int l = 0; l <= k; ++l)
    for (const auto& x : r.G[l].data)
      if (x < 0) throw NegativeEntry("G_" + std::to_string(l) + " has a negative entry at level " + std::to_string(k));
  IntMatrix tail = A * r.G[k];
  for (std::size_t x = 0; x < tail.data.size(); ++x) tail.data[x] -= r.G[k - 1].data[x];
  r.truncates = tail.is_zero();
  FusionRing f = su2_fusion_truncated(k);
  r.represents_fusion = true;
  for (int a = 0; a <= k && r.represents_fusion; ++a)
    for (int b = 0; b <= k && r.represents_fusion; ++b) {
      IntMatrix lhs = r.G[a] * r.G[b], rhs(n, n);
      for (int c = 0; c <= k; ++c)
        for (long long m = 0; m < f(a, b, c); ++m)
          for (std::size_t x = 0; x < rhs.data.size(); ++x) rhs.data[x] += r.G[c].data[x];
      if (!(lhs == rhs)) r.represents_fusion = false;
    }
  // exponents from exact eigenvalue multiplicities
  int h = k + 2;
  std::vector<CycNumber> predicted{CycNumber(1)};  // polynomial, constant term first
  for (int m = 0; m <= k; ++m) {
    CycNumber ev = CycNumber::zeta(2 * h, m + 1) + CycNumber::zeta(2 * h, -(m + 1));
    CycMatrix shifted = to_cyc(A);
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= ev;
    std::size_t mult = n - cyc_rank(shifted);
    for (std::size_t t = 0; t < mult; ++t) {
      r.exponents.push_back(m);
      std::vector<CycNumber> next(predicted.size() + 1);
      for (std::size_t i = 0; i < predicted.size(); ++i) {
        next[i + 1] += predicted[i];
        next[i] -= ev * predicted[i];
      }
      predicted = next;
    }
  }
  r.charpoly = characteristic_polynomial(A);
  r.charpoly_matches = predicted.size() == r.charpoly.size();
  for (std::size_t i = 0; i < predicted.size() && r.charpoly_matches; ++i)
    if (!(predicted[i] == CycNumber(r.charpoly[i]))) r.charpoly_matches = false;
  return r;
}

BigRat central_charge(long long dim, long long dualcox, long long level) {
  if (level + dualcox == 0) throw std::invalid_argument("level + dual Coxeter number vanishes");
  return BigRat(level * dim, level + dualcox);
}

bool central_charge_check(long long h_dim, long long h_dualcox, long long k, long long g_dim, long long g_dualcox,
                          long long l) {
  return central_charge(h_dim, h_dualcox, k) == central_charge(g_dim, g_dualcox, l);
}

// ---------------------------------------------------------------------------
// alpha-induction for abelian G

namespace {

struct Abelian {
  std::vector<int> orders;
  std::size_t size = 1;
  int L = 1;
  explicit Abelian(std::vector<int> o) : orders(std::move(o)) {
    for (int m : orders) size *= m, L = std::lcm(L, m);
  }
  std::vector<int> digits(std::size_t x) const {
    std::vector<int> d(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) d[i] = static_cast<int>(x % orders[i]), x /= orders[i];
    return d;
  }
  std::size_t index(const std::vector<int>& d) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < d.size(); ++i) x = x * orders[i] + ((d[i] % orders[i]) + orders[i]) % orders[i];
    return x;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return index(x);
  }
  std::size_t neg(std::size_t a) const {
    auto x = digits(a);
    for (auto& v : x) v = -v;
    return index(x);
  }
  // chi_c(a) as an exponent of zeta_L
  int pairing(std::size_t c, std::size_t a) const {
    auto x = digits(c), y = digits(a);
    long long e = 0;
    for (std::size_t i = 0; i < x.size(); ++i) e += static_cast<long long>(x[i]) * y[i] * (L / orders[i]);
    return static_cast<int>(e % L);
  }
  std::string str(std::size_t a) const {
    auto d = digits(a);
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
  }
};

}  // namespace

AlphaInduction alpha_induction_abelian(const std::vector<int>& orders,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& Hin) {
  Abelian G(orders);
  std::size_t g = G.size;
  std::set<std::pair<std::size_t, std::size_t>> H(Hin.begin(), Hin.end());
  for (const auto& [a, b] : H)
    if (a >= g || b >= g) throw std::invalid_argument("element outside G x G");
  for (const auto& x : H)
    for (const auto& y : H)
      if (!H.count({G.add(x.first, y.first), G.add(x.second, y.second)}))
        throw NotASubgroup("H is not closed under the product");
  for (std::size_t a = 0; a < g; ++a)
    if (!H.count({a, a})) throw DiagonalNotContained("(" + G.str(a) + ", " + G.str(a) + ") is not in H");
  AlphaInduction out;
  std::set<std::size_t> N;
  for (const auto& [a, b] : H) N.insert(G.add(a, G.neg(b)));
  out.N.assign(N.begin(), N.end());
  std::vector<std::pair<std::size_t, std::size_t>> hel(H.begin(), H.end());
  // cosets of H in G x G, canonical representative = least pair
  auto coset = [&](std::size_t a, std::size_t b) {
    std::pair<std::size_t, std::size_t> best{g, g};
    for (const auto& [x, y] : hel) best = std::min(best, std::make_pair(G.add(a, x), G.add(b, y)));
    return best;
  };
  // characters of H as restrictions of characters of G x G
  std::map<std::vector<int>, std::size_t> hchars;
  auto restrict_char = [&](std::size_t z, std::size_t p) {
    std::vector<int> v;
    for (const auto& [x, y] : hel) v.push_back((G.pairing(z, x) + G.pairing(p, y)) % G.L);
    return v;
  };
  for (std::size_t z = 0; z < g; ++z)
    for (std::size_t p = 0; p < g; ++p) hchars.emplace(restrict_char(z, p), hchars.size());
  std::set<std::pair<std::size_t, std::size_t>> cosets;
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) cosets.insert(coset(a, b));
  out.full_system_size = cosets.size() * hchars.size();
  std::map<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>, std::size_t> full;
  auto full_index = [&](std::pair<std::size_t, std::size_t> c, std::size_t ch) {
    return full.emplace(std::make_pair(c, ch), full.size()).first->second;
  };
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t z = 0; z < g; ++z) {
      out.labels.push_back("(" + G.str(a) + ";" + G.str(z) + ")");
      out.alpha_plus.push_back(full_index(coset(a, 0), hchars.at(restrict_char(z, 0))));
    }
  for (std::size_t b = 0; b < g; ++b)
    for (std::size_t p = 0; p < g; ++p)
      out.alpha_minus.push_back(full_index(coset(0, G.neg(b)), hchars.at(restrict_char(0, p))));
  std::size_t n = g * g;
  out.Z = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.Z(i, j) = out.alpha_plus[i] == out.alpha_minus[j] ? 1 : 0;
  // neutral system: the double of L = G/N, and sigma-restriction
  std::vector<std::size_t> lcos(g);
  std::set<std::size_t> lreps;
  for (std::size_t a = 0; a < g; ++a) {
    std::size_t best = g;
    for (std::size_t x : out.N) best = std::min(best, G.add(a, x));
    lcos[a] = best;
    lreps.insert(best);
  }
  std::vector<std::size_t> lhat;  // characters of G trivial on N
  for (std::size_t z = 0; z < g; ++z)
    if (std::all_of(out.N.begin(), out.N.end(), [&](std::size_t x) { return G.pairing(z, x) == 0; })) lhat.push_back(z);
  std::vector<std::size_t> lr(lreps.begin(), lreps.end());
  out.neutral_size = lr.size() * lhat.size();
  out.b = IntMatrix(out.neutral_size, n);
  for (std::size_t t = 0; t < out.neutral_size; ++t) {
    std::size_t ell = lr[t / lhat.size()], phi = lhat[t % lhat.size()];
    for (std::size_t a = 0; a < g; ++a)
      if (lcos[a] == ell) out.b(t, a * g + phi) = 1;
  }
  out.z_is_btb = out.b.transpose() * out.b == out.Z;
  out.invariant = check_invariant(out.Z, double_abelian(orders).data).ok();
  for (const auto& x : out.Z.data) out.sum_z_squared += x * x;
  return out;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> overgroups_of_diagonal(const std::vector<int>& orders) {
  Abelian G(orders);
  std::set<std::set<std::size_t>> subs;
  for (std::size_t x = 0; x < G.size; ++x)
    for (std::size_t y = 0; y < G.size; ++y) {
      std::set<std::size_t> s{0};
      std::vector<std::size_t> todo{0};
      while (!todo.empty()) {
        std::size_t a = todo.back();
        todo.pop_back();
        for (std::size_t gen : {x, y}) {
          std::size_t b = G.add(a, gen);
          if (s.insert(b).second) todo.push_back(b);
        }
      }
      subs.insert(s);
    }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  for (const auto& N : subs) {
    std::vector<std::pair<std::size_t, std::size_t>> H;
    for (std::size_t a = 0; a < G.size; ++a)
      for (std::size_t b = 0; b < G.size; ++b)
        if (N.count(G.add(a, G.neg(b)))) H.emplace_back(a, b);
    out.push_back(H);
  }
  return out;
}

// ---------------------------------------------------------------------------
// permutation orbifolds

std::vector<std::vector<int>> symmetric_group(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

BigInt permutation_orbifold_count(int n_labels, int copies, const std::vector<std::vector<int>>& perms) {
  if (n_labels < 1 || copies < 1) throw std::invalid_argument("need at least one label and one copy");
  for (const auto& p : perms)
    if (static_cast<int>(p.size()) != copies) throw std::invalid_argument("permutation of the wrong degree");
  auto act = [&](const std::vector<int>& p, const std::vector<int>& t) {
    std::vector<int> r(copies);
    for (int i = 0; i < copies; ++i) r[p[i]] = t[i];
    return r;
  };
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(copies);
    for (int i = 0; i < copies; ++i) r[i] = p[q[i]];
    return r;
  };
  auto inverse = [&](const std::vector<int>& p) {
    std::vector<int> r(copies);
    for (int i = 0; i < copies; ++i) r[p[i]] = i;
    return r;
  };
  std::set<std::vector<int>> seen;
  BigInt total = 0;
  std::vector<int> t(copies, 0);
  while (true) {
    if (!seen.count(t)) {
      std::vector<std::vector<int>> stab;
      for (const auto& p : perms) {
        auto u = act(p, t);
        seen.insert(u);
        if (u == t) stab.push_back(p);
      }
      // number of conjugacy classes of the stabilizer
      std::set<std::vector<int>> done;
      long long classes = 0;
      for (const auto& x : stab) {
        if (done.count(x)) continue;
        ++classes;
        for (const auto& y : stab) done.insert(compose(compose(y, x), inverse(y)));
      }
      total += classes;
    }
    int i = 0;
    while (i < copies && ++t[i] == n_labels) t[i++] = 0;
    if (i == copies) break;
  }
  return total;
}

}  // namespace vk
