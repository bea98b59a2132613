#include "test_main.hpp"

#include "vk/errors.hpp"
#include "vk/fusion.hpp"

#include <cmath>
#include <complex>
#include <numeric>

using namespace vk;
using cplx = std::complex<long double>;

namespace {

const long double PI = 3.14159265358979323846264338327950288L;

cplx e(long double t) { return std::polar(1.0L, 2 * PI * t); }

// Oracle: the w_sigma-twisted double of Z_n built numerically. Simple objects are
// pairs (g, chi) with chi a theta_g-projective character found by root extraction;
// tensor products are identified by comparing characters.
FusionRing twisted_double_oracle(int n, int sigma) {
  auto omega = [&](int a, int b, int c) {
    return e(static_cast<long double>(sigma) * a * (b + c - (b + c) % n) / (static_cast<long double>(n) * n));
  };
  auto theta = [&](int g, int x, int y) { return omega(g, x, y) * omega(x, y, g) / omega(x, g, y); };
  auto gamma = [&](int x, int g, int h) { return omega(g, h, x) * omega(x, g, h) / omega(g, x, h); };
  struct Obj {
    int g;
    std::vector<cplx> chi;
  };
  std::vector<Obj> objs;
  for (int g = 0; g < n; ++g) {
    cplx prod = 1;
    for (int t = 0; t < n; ++t) prod *= theta(g, t, 1);
    long double arg = std::arg(prod);
    for (int k = 0; k < n; ++k) {
      cplx c = e((arg / (2 * PI) + k) / n);
      std::vector<cplx> chi(n);
      chi[0] = 1;
      for (int x = 0; x + 1 < n; ++x) chi[x + 1] = chi[x] * c / theta(g, x, 1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) REQUIRE(std::abs(chi[x] * chi[y] - theta(g, x, y) * chi[(x + y) % n]) < 1e-12L);
      objs.push_back({g, chi});
    }
  }
  std::vector<std::string> labels;
  std::size_t unit = 0;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    labels.push_back(std::to_string(i));
    bool triv = objs[i].g == 0;
    for (auto v : objs[i].chi) triv = triv && std::abs(v - cplx(1)) < 1e-12L;
    if (triv) unit = i;
  }
  std::swap(labels[0], labels[unit]);
  std::vector<std::size_t> pos(objs.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::swap(pos[0], pos[unit]);  // pos[label index] = object index
  std::vector<std::size_t> where(objs.size());
  for (std::size_t i = 0; i < pos.size(); ++i) where[pos[i]] = i;
  FusionRing r = make_fusion_ring(labels);
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b) {
      int gh = (objs[a].g + objs[b].g) % n;
      std::vector<cplx> ch(n);
      for (int x = 0; x < n; ++x) ch[x] = objs[a].chi[x] * objs[b].chi[x] * gamma(x, objs[a].g, objs[b].g);
      int found = 0;
      for (std::size_t c = 0; c < objs.size(); ++c) {
        if (objs[c].g != gh) continue;
        long double d = 0;
        for (int x = 0; x < n; ++x) d = std::max(d, std::abs(ch[x] - objs[c].chi[x]));
        if (d < 1e-9L) {
          r.at(where[a], where[b], where[c]) = 1;
          ++found;
        }
      }
      REQUIRE(found == 1);
    }
  return r;
}

}  // namespace

TEST_CASE("SU(2)_k S matrix against the sine formula") {
  for (int k = 1; k <= 16; ++k) {
    ModularData d = su2_modular_data(k);
    int n = k + 2;
    for (int l = 0; l <= k; ++l)
      for (int m = 0; m <= k; ++m) {
        long double s = std::sqrt(2.0L / n) * std::sin(PI * (l + 1) * (m + 1) / n);
        auto v = d.S[l][m].real_embed();
        CHECK(std::abs(static_cast<long double>(v.re) - s) < 1e-15L);
        CHECK(std::abs(static_cast<long double>(v.im)) < 1e-15L);
      }
  }
  ModularData d1 = su2_modular_data(1);
  CycNumber r = CycNumber::sqrt_int(2).inverse();
  CHECK(d1.S[0][0] == r);
  CHECK(d1.S[1][1] == -r);
}

TEST_CASE("eigenvalue ratios at levels 4 and 10") {
  for (int k : {4, 10}) {
    ModularData d = su2_modular_data(k);
    int h = 2 * (k + 2);
    for (int l = 0; l <= k; ++l)
      CHECK(d.S[1][l] / d.S[0][l] == CycNumber::zeta(h, l + 1) + CycNumber::zeta(h, -(l + 1)));
  }
}

TEST_CASE("SU(2)_k modular axioms and Verlinde fusion") {
  for (int k = 1; k <= 16; ++k) {
    INFO("k = " << k);
    ModularData d = su2_modular_data(k);
    ModularCheck c = check_modular(d);
    CHECK(c.ok());
    FusionRing v = verlinde_matrices(d);
    CHECK(v == su2_fusion_truncated(k));
    CHECK(v.associative());
    CHECK(v.unit_normalized());
  }
  FusionRing f1 = su2_fusion_truncated(1);
  CHECK(f1(1, 1, 0) == 1);
  CHECK(f1(1, 1, 1) == 0);
  FusionRing f2 = verlinde_matrices(su2_modular_data(2));
  CHECK(f2(1, 1, 0) == 1);
  CHECK(f2(1, 1, 1) == 0);
  CHECK(f2(1, 1, 2) == 1);
}

TEST_CASE("non-integral input is rejected") {
  ModularData d = su2_modular_data(2);
  d.S[1][1] = d.S[1][1] + CycNumber(BigRat(1, 3));
  CHECK_THROWS_AS(verlinde_matrices(d), NonIntegralFusion);
}

TEST_CASE("level one theories") {
  LevelOne su3 = level1_data("SU3");
  CHECK(check_modular(su3.data).ok());
  CHECK(su3.ring.product_str(1, 1) == "(01)");
  CHECK(su3.ring.product_str(1, 2) == "(00)");
  LevelOne sp4 = level1_data("Sp4");
  CHECK(check_modular(sp4.data).ok());
  std::size_t s = sp4.ring.index_of("(10)"), v = sp4.ring.index_of("(01)");
  CHECK(sp4.ring.product_str(s, s) == "(00)+(01)");
  CHECK(sp4.ring.product_str(v, v) == "(00)");
  CHECK(sp4.ring.product_str(v, s) == "(10)");
}

TEST_CASE("torus fusion groups") {
  CHECK(torus_fusion(IntMatrix::from_rows({{2}})).torsion == std::vector<BigInt>{2});
  CHECK(torus_fusion(IntMatrix::identity(2)).is_zero());
  CHECK(torus_fusion(IntMatrix::from_rows({{2, 0}, {0, 2}})).torsion == std::vector<BigInt>{2, 2});
  CHECK_THROWS_AS(torus_fusion(IntMatrix::from_rows({{1, 2}, {2, 4}})), SingularLevel);
}

TEST_CASE("untwisted abelian doubles") {
  for (int m = 1; m <= 6; ++m) {
    AbelianDouble d = double_abelian({m});
    CHECK(d.data.size() == static_cast<std::size_t>(m * m));
    CHECK(check_modular(d.data).ok());
    // the S matrix reproduces the group fusion through the Verlinde formula
    CHECK(verlinde_matrices(d.data) == d.ring);
    CHECK(d.group.order() == m * m);
  }
  CHECK(double_abelian({2}).group.torsion == std::vector<BigInt>{2, 2});
  CHECK(double_abelian({3}).group.torsion == std::vector<BigInt>{3, 3});
  AbelianDouble k4 = double_abelian({2, 2});
  CHECK(check_modular(k4.data).ok());
  CHECK(fusion_group(k4.ring).same_type(k4.group));
  CHECK_THROWS_AS(double_of_group("D4"), NonAbelian);
  CHECK(double_of_group("A3").group.torsion == std::vector<BigInt>{4, 4});
}

TEST_CASE("twisted cyclic doubles against the numerical construction") {
  for (int n = 1; n <= 6; ++n)
    for (int s = 1; s <= n; ++s) {
      INFO("n = " << n << ", sigma = " << s);
      TwistedDouble t = double_cyclic_twisted(n, s);
      FusionRing oracle = twisted_double_oracle(n, s);
      CHECK(fusion_group(oracle).same_type(t.group));
      CHECK(fusion_group(t.ring).same_type(t.group));
      CHECK(t.ring.associative());
    }
  for (int n = 1; n <= 12; ++n)
    for (int s = 1; s <= n; ++s) CHECK(double_cyclic_twisted(n, s).group.order() == n * n);
  // sigma = n is the untwisted double
  CHECK(double_cyclic_twisted(2, 2).group.torsion == std::vector<BigInt>{2, 2});
  CHECK(double_cyclic_twisted(3, 1).group.torsion == std::vector<BigInt>{9});
  // the double semion: a nontrivial twist on Z_2 still has fusion group Z_2 x Z_2
  CHECK(double_cyclic_twisted(2, 1).group.torsion == std::vector<BigInt>{2, 2});
  CHECK(gcd_formula_group(2, 1).torsion == std::vector<BigInt>{4});
  CHECK_THROWS_AS(gcd_formula_group(3, 2), InvalidTwist);
  CHECK_THROWS_AS(double_cyclic_twisted(3, 0), InvalidTwist);
}
