#include "test_main.hpp"

#include "vk/errors.hpp"
#include "vk/modinv.hpp"

#include <cmath>
#include <numeric>
#include <set>

using namespace vk;

namespace {

const double PI = 3.14159265358979323846;

// Oracle: brute force over every nonnegative matrix supported on T-compatible
// cells with entries at most d_l d_m, checking ZS = SZ in floating point.
std::vector<IntMatrix> brute_invariants(int k) {
  int n = k + 2, sz = k + 1;
  std::vector<std::vector<double>> S(sz, std::vector<double>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) S[a][b] = std::sqrt(2.0 / n) * std::sin(PI * (a + 1) * (b + 1) / n);
  auto texp = [&](int l) { return ((2 * l * (l + 2) - k) % (8 * n) + 8 * n) % (8 * n); };
  std::vector<std::pair<int, int>> cells;
  std::vector<int> cap;
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      if (texp(a) == texp(b)) {
        cells.emplace_back(a, b);
        double d = S[a][0] / S[0][0] * S[b][0] / S[0][0];
        cap.push_back(a == 0 && b == 0 ? 1 : static_cast<int>(std::floor(d + 1e-9)));
      }
  std::vector<int> v(cells.size(), 0);
  v[0] = 1;
  std::vector<IntMatrix> out;
  while (true) {
    std::vector<std::vector<double>> Z(sz, std::vector<double>(sz, 0));
    for (std::size_t c = 0; c < cells.size(); ++c) Z[cells[c].first][cells[c].second] = v[c];
    bool ok = true;
    for (int a = 0; a < sz && ok; ++a)
      for (int b = 0; b < sz && ok; ++b) {
        double s = 0;
        for (int c = 0; c < sz; ++c) s += Z[a][c] * S[c][b] - S[a][c] * Z[c][b];
        ok = std::abs(s) < 1e-9;
      }
    if (ok) {
      IntMatrix m(sz, sz);
      for (std::size_t c = 0; c < cells.size(); ++c) m(cells[c].first, cells[c].second) = v[c];
      out.push_back(m);
    }
    std::size_t i = 1;
    while (i < v.size() && ++v[i] > cap[i]) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

IntMatrix d_even(int k) {
  IntMatrix z(k + 1, k + 1);
  for (int l = 0; l <= k; ++l) {
    if (k % 4 == 0 && l % 2 == 0) z(l, k - l) += 1, z(l, l) += 1;
    if (k % 4 == 0 && l == k / 2) z(l, l) = 2;
    if (k % 4 == 2) z(l, l % 2 == 0 ? l : k - l) = 1;
  }
  return z;
}

IntMatrix e8_invariant() {
  IntMatrix z(29, 29);
  for (const auto& blk : std::vector<std::vector<int>>{{0, 10, 18, 28}, {6, 12, 16, 22}})
    for (int a : blk)
      for (int b : blk) z(a, b) = 1;
  return z;
}

IntMatrix e7_invariant() {
  IntMatrix z(17, 17);
  for (const auto& blk : std::vector<std::vector<int>>{{0, 16}, {4, 12}, {6, 10}})
    for (int a : blk)
      for (int b : blk) z(a, b) = 1;
  z(8, 8) = 1;
  for (int a : {2, 14}) z(a, 8) = z(8, a) = 1;
  return z;
}

std::set<std::vector<BigInt>> flat(const std::vector<IntMatrix>& v) {
  std::set<std::vector<BigInt>> s;
  for (const auto& m : v) s.insert(m.data);
  return s;
}

}  // namespace

TEST_CASE("invariant check on known matrices") {
  CHECK(check_invariant(IntMatrix::identity(4), su2_modular_data(3)).ok());
  CHECK(check_invariant(z_d4(), su2_modular_data(4)).ok());
  CHECK(check_invariant(z_e6(), su2_modular_data(10)).ok());
  CHECK(check_invariant(e7_invariant(), su2_modular_data(16)).ok());
  CHECK(check_invariant(d_even(8), su2_modular_data(8)).ok());
  IntMatrix bad = z_d4();
  bad(2, 2) = 1;
  auto r = check_invariant(bad, su2_modular_data(4));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.commutes_S);
  CHECK(r.commutes_T);
  IntMatrix off = IntMatrix::identity(5);
  off(0, 1) = 1;
  CHECK_FALSE(check_invariant(off, su2_modular_data(4)).commutes_T);
  CHECK_FALSE(check_invariant(IntMatrix::identity(4), su2_modular_data(4)).square);
}

TEST_CASE("enumeration matches brute force on small levels") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    auto e = enumerate_invariants(k);
    auto b = brute_invariants(k);
    CHECK(flat(e.invariants) == flat(b));
    CHECK(std::is_sorted(e.invariants.begin(), e.invariants.end(),
                         [](const IntMatrix& x, const IntMatrix& y) { return x.data < y.data; }));
  }
}

TEST_CASE("enumeration counts") {
  std::map<int, std::size_t> expect{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 3}, {16, 3}};
  for (auto [k, c] : expect) {
    CAPTURE(k);
    auto e = enumerate_invariants(k);
    REQUIRE(e.invariants.size() == c);
    std::set<std::vector<BigInt>> s = flat(e.invariants);
    CHECK(s.count(IntMatrix::identity(k + 1).data));
    if (k % 2 == 0 && k >= 4) CHECK(s.count(d_even(k).data));
    for (const auto& z : e.invariants) CHECK(s.count(z.transpose().data));
  }
  CHECK(flat(enumerate_invariants(10).invariants).count(z_e6().data));
  CHECK(flat(enumerate_invariants(16).invariants).count(e7_invariant().data));
}

TEST_CASE("enumeration at level 28 and budget") {
  auto e = enumerate_invariants(28);
  CHECK(e.invariants.size() == 3);
  CHECK(flat(e.invariants).count(e8_invariant().data));
  CHECK_THROWS_AS(enumerate_invariants(28, EnumerationOptions{10}), SearchBudgetExceeded);
}

TEST_CASE("invariants from conformal embeddings") {
  auto su3 = level1_data("SU3"), sp4 = level1_data("Sp4");
  CHECK(embed_invariant(d4_branching(), su3.data, su2_modular_data(4)) == z_d4());
  CHECK(embed_invariant(e6_branching(), sp4.data, su2_modular_data(10)) == z_e6());
  CHECK(embed_invariant(identity_branching(3), su2_modular_data(3), su2_modular_data(3)) == IntMatrix::identity(4));
  // T eigenvalues of each extended primary match its branching content
  for (auto [br, ext, k] : {std::tuple{d4_branching(), su3.data, 4}, std::tuple{e6_branching(), sp4.data, 10}}) {
    auto base = su2_modular_data(k);
    for (std::size_t r = 0; r < br.b.rows; ++r)
      for (std::size_t c = 0; c < br.b.cols; ++c)
        if (br.b(r, c) != 0) CHECK(base.T[c] * ext.T[0] == ext.T[r] * base.T[0]);
  }
  BranchingRule broken = d4_branching();
  broken.b(1, 2) = 0;
  broken.b(1, 1) = 1;
  CHECK_THROWS_AS(embed_invariant(broken, su3.data, su2_modular_data(4)), InvariantCheckFailed);
}

TEST_CASE("cardinalities") {
  IntMatrix bd = d4_branching().b, be = e6_branching().b;
  auto c4 = cardinalities(z_d4(), &bd);
  CHECK(c4.trZ == 4);
  CHECK(c4.trZZt == 8);
  CHECK(c4.trBtB == 4);
  auto c10 = cardinalities(z_e6(), &be);
  CHECK(c10.trZ == 6);
  CHECK(c10.trZZt == 12);
  CHECK(c10.trBtB == 6);
  CHECK_FALSE(cardinalities(z_e6()).has_b);
}

TEST_CASE("charge conjugation is trivial for SU(2)") {
  for (int k = 1; k <= 8; ++k) CHECK(charge_conjugation(su2_modular_data(k)) == IntMatrix::identity(k + 1));
  IntMatrix c = charge_conjugation(level1_data("SU3").data);
  CHECK(c(0, 0) == 1);
  CHECK(c(1, 2) == 1);
  CHECK(c(2, 1) == 1);
}

TEST_CASE("ADE nimreps") {
  struct Case {
    std::string g;
    int k;
    std::vector<int> exps;
  };
  std::vector<Case> cases{{"D4", 4, {0, 2, 2, 4}},
                          {"E6", 10, {0, 3, 4, 6, 7, 10}},
                          {"E7", 16, {0, 4, 6, 8, 10, 12, 16}},
                          {"E8", 28, {0, 6, 10, 12, 16, 18, 22, 28}},
                          {"D6", 8, {0, 2, 4, 4, 6, 8}}};
  for (int k = 1; k <= 7; ++k) {
    std::vector<int> e(k + 1);
    std::iota(e.begin(), e.end(), 0);
    cases.push_back({"A" + std::to_string(k + 1), k, e});
  }
  for (const auto& c : cases) {
    CAPTURE(c.g);
    auto r = nimrep_from_graph(ade_graph(c.g), c.k);
    CHECK(r.exponents == c.exps);
    CHECK(r.represents_fusion);
    CHECK(r.truncates);
    CHECK(r.charpoly_matches);
  }
  CHECK(diagonal_exponents(z_d4()) == std::vector<int>{0, 2, 2, 4});
  CHECK(diagonal_exponents(z_e6()) == std::vector<int>{0, 3, 4, 6, 7, 10});
  CHECK(diagonal_exponents(e7_invariant()) == std::vector<int>{0, 4, 6, 8, 10, 12, 16});
  CHECK(diagonal_exponents(e8_invariant()) == std::vector<int>{0, 6, 10, 12, 16, 18, 22, 28});
  // wrong level: the recursion leaves the nonnegative cone or fails to truncate
  bool rejected = false;
  try {
    auto r = nimrep_from_graph(ade_graph("E6"), 12);
    rejected = !r.truncates;
  } catch (const NegativeEntry&) {
    rejected = true;
  }
  CHECK(rejected);
  CHECK_THROWS_AS(nimrep_from_graph(ade_graph("A3"), 5), NegativeEntry);
}

TEST_CASE("characteristic polynomial") {
  // A3 path: x^3 - 2x
  CHECK(characteristic_polynomial(ade_graph("A3")) == IntVec{0, -2, 0, 1});
  // oracle: D4 star, x^4 - 3x^2
  CHECK(characteristic_polynomial(ade_graph("D4")) == IntVec{0, 0, -3, 0, 1});
  CHECK(ade_graph("E6")(2, 5) == 1);
  CHECK(ade_graph("D5")(2, 4) == 1);
  CHECK_THROWS_AS(ade_graph("E9"), std::invalid_argument);
}

TEST_CASE("central charge") {
  CHECK(central_charge(3, 2, 4) == BigRat(2));
  CHECK(central_charge(8, 3, 1) == BigRat(2));
  CHECK(central_charge_check(3, 2, 4, 8, 3, 1));
  CHECK(central_charge_check(3, 2, 10, 10, 3, 1));
  CHECK(central_charge_check(3, 2, 28, 14, 4, 1));
  CHECK(central_charge_check(3, 2, 16, 35, 6, 1) == false);
  CHECK(central_charge_check(3, 2, 16, 28, 6, 1) == false);
  CHECK(central_charge_check(8, 3, 2, 8, 3, 2));
  CHECK_FALSE(central_charge_check(3, 2, 5, 8, 3, 1));
  CHECK_FALSE(central_charge_check(3, 2, 9, 10, 3, 1));
}

TEST_CASE("alpha-induction for abelian doubles") {
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {6}}) {
    std::size_t g = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
    auto Hs = overgroups_of_diagonal(orders);
    for (const auto& H : Hs) {
      auto a = alpha_induction_abelian(orders, H);
      CAPTURE(a.N.size());
      CHECK(a.invariant);
      CHECK(a.z_is_btb);
      CHECK(a.full_system_size == g * g);
      CHECK(a.neutral_size == (g / a.N.size()) * (g / a.N.size()));
      CHECK(a.sum_z_squared == BigInt(g * g));
      // oracle: Z = [a - b in N][zeta = psi][zeta trivial on N]
      std::set<std::size_t> N(a.N.begin(), a.N.end());
      auto dig = [&](std::size_t x) {
        std::vector<int> d(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) d[i] = static_cast<int>(x % orders[i]), x /= orders[i];
        return d;
      };
      auto sub = [&](std::size_t x, std::size_t y) {
        auto p = dig(x), q = dig(y);
        std::size_t r = 0;
        for (std::size_t i = 0; i < p.size(); ++i) r = r * orders[i] + (p[i] - q[i] + orders[i]) % orders[i];
        return r;
      };
      auto trivial_on_N = [&](std::size_t z) {
        for (std::size_t x : N) {
          auto p = dig(z), q = dig(x);
          double t = 0;
          for (std::size_t i = 0; i < p.size(); ++i) t += static_cast<double>(p[i] * q[i]) / orders[i];
          if (std::abs(t - std::round(t)) > 1e-9) return false;
        }
        return true;
      };
      for (std::size_t i = 0; i < g * g; ++i)
        for (std::size_t j = 0; j < g * g; ++j) {
          bool expect = N.count(sub(i / g, j / g)) && i % g == j % g && trivial_on_N(i % g);
          CHECK(a.Z(i, j) == (expect ? 1 : 0));
        }
    }
  }
  CHECK(overgroups_of_diagonal({2, 2}).size() == 5);
  CHECK(overgroups_of_diagonal({4}).size() == 3);
  std::vector<std::pair<std::size_t, std::size_t>> partial{{0, 0}};
  CHECK_THROWS_AS(alpha_induction_abelian({2}, partial), DiagonalNotContained);
  std::vector<std::pair<std::size_t, std::size_t>> open{{0, 0}, {1, 1}, {2, 2}, {0, 1}};
  CHECK_THROWS_AS(alpha_induction_abelian({3}, open), NotASubgroup);
}

TEST_CASE("permutation orbifold counts") {
  auto s2 = symmetric_group(2);
  // oracle: n fixed pairs with two stabilizer irreps each, n(n-1)/2 free orbits
  for (int n = 1; n <= 8; ++n) CHECK(permutation_orbifold_count(n, 2, s2) == BigInt(2 * n + n * (n - 1) / 2));
  // double of an abelian group of order m has m^2 primaries: (m^4 + 3m^2)/2
  for (int m = 1; m <= 6; ++m)
    CHECK(permutation_orbifold_count(m * m, 2, s2) == BigInt((m * m * m * m + 3 * m * m) / 2));
  CHECK(permutation_orbifold_count(4, 2, s2) == 14);
  CHECK(permutation_orbifold_count(3, 2, s2) == 9);
  // oracle for S3 on three copies of a 2-label theory:
  // orbits {aaa} x2 with stabilizer S3 (3 classes), {aab} x2 with stabilizer Z2 (2 classes)
  CHECK(permutation_orbifold_count(2, 3, symmetric_group(3)) == 2 * 3 + 2 * 2);
  CHECK(permutation_orbifold_count(5, 1, symmetric_group(1)) == 5);
}
