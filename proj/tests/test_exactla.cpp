#include "test_main.hpp"

#include "vk/exactla.hpp"

#include <functional>
#include <random>

using namespace vk;

namespace {

// Oracle: determinantal divisors. d_1 * ... * d_k = gcd of all k x k minors.
BigInt minor_det(const IntMatrix& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
  IntMatrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = m(rs[i], cs[j]);
  return determinant(s);
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<BigInt> invariant_factors_oracle(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows, k, rs);
    subsets(m.cols, k, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = gcd(g, abs(minor_det(m, r, c)));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (auto& x : m.data) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith form examples") {
  auto s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.D == IntMatrix::identity(3));
  s = smith_normal_form(IntMatrix(2, 2));
  CHECK(s.D.is_zero());
  CHECK(s.diag.empty());
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  s = smith_normal_form(m);
  CHECK(s.diag == std::vector<BigInt>{2, 4});
  CHECK(s.U * m * s.V == s.D);
  CHECK(invariant_factors_oracle(m) == s.diag);
}

TEST_CASE("smith form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.Uinv == IntMatrix::identity(r));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.diag == invariant_factors_oracle(m));
    for (std::size_t i = 1; i < s.diag.size(); ++i) CHECK(s.diag[i] % s.diag[i - 1] == 0);
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntMatrix(2, 0)).same_type(FGAbelianGroup::free(2)));
  CHECK(cokernel(IntMatrix(2, 2)).free_rank == 2);
  for (int k = 2; k < 7; ++k) {
    IntMatrix m(1, 1);
    m(0, 0) = k;
    auto g = cokernel(m);
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<BigInt>{k});
  }
  IntMatrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  auto g = cokernel(d);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<BigInt>{2});
  CHECK(g.str() == "Z₂⊕Z");
  CHECK(g.ascii() == "Z2+Z");
}

TEST_CASE("group rendering") {
  FGAbelianGroup g;
  g.torsion = {2, 2, 2, 2};
  g.free_rank = 1;
  CHECK(g.str() == "Z₂⁴⊕Z");
  CHECK(FGAbelianGroup().str() == "0");
  CHECK(FGAbelianGroup::free(19).str() == "Z¹⁹");
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(IntMatrix::identity(3)).cols == 0);
  auto k = kernel_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k.cols == 1);
  CHECK(k.column(0) == IntVec{1, -1});
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 2}});
  k = kernel_basis(m);
  REQUIRE(k.cols == 1);
  CHECK(k.column(0) == IntVec{2, -1});
}

TEST_CASE("kernel basis is a saturated basis on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 3, c = 2 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 5);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    // rank-nullity over Q
    CHECK(rank(m) + k.cols == c);
    // saturation: cokernel of the basis inclusion is torsion-free
    CHECK(cokernel(k).is_free());
  }
}

TEST_CASE("presented modules") {
  PresentedModule p({"g1", "g2"}, IntMatrix(2, 0));
  CHECK(fgab_from_relations(p).same_type(FGAbelianGroup::free(2)));
  IntMatrix r(1, 1);
  r(0, 0) = 3;
  CHECK(fgab_from_relations(PresentedModule({"g"}, r)).torsion == std::vector<BigInt>{3});
  IntMatrix r2 = IntMatrix::from_rows({{1, 0}, {-1, 2}});
  auto g = fgab_from_relations(PresentedModule({"g1", "g2"}, r2));
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<BigInt>{2});
  CHECK(invariant_factors_oracle(r2) == std::vector<BigInt>{1, 2});
}

TEST_CASE("connecting solve examples") {
  auto res = connecting_solve(IntMatrix(2, 1));
  CHECK(res.ker.group.free_rank == 1);
  CHECK(res.coker.same_type(FGAbelianGroup::free(2)));
  res = connecting_solve(IntMatrix::from_rows({{1, 1}, {1, -1}}));
  CHECK(res.ker.group.is_zero());
  CHECK(res.coker.torsion == std::vector<BigInt>{2});
  CHECK(res.coker.free_rank == 0);
}

TEST_CASE("quotient with sparse elimination matches dense smith form") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 5, m = rng() % 6;
    IntMatrix rel = random_matrix(rng, n, m, 3);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    Quotient q(PresentedModule(labels, rel));
    auto s = smith_normal_form(rel, false);
    std::vector<BigInt> tors;
    for (const auto& d : s.diag)
      if (d != 1) tors.push_back(d);
    CHECK(q.group().torsion == tors);
    CHECK(q.group().free_rank == n - s.diag.size());
    // relations project to zero, generator representatives project to unit vectors
    for (std::size_t j = 0; j < m; ++j) CHECK(q.is_zero(rel.column(j)));
    const auto& gv = q.generator_vectors();
    for (std::size_t i = 0; i < gv.size(); ++i) {
      auto c = q.coords(gv[i]);
      for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("map between presented modules") {
  // Z/4 -> Z/2 reduction map: kernel 2Z/4Z = Z/2, cokernel 0
  IntMatrix r4(1, 1), r2(1, 1), f(1, 1);
  r4(0, 0) = 4;
  r2(0, 0) = 2;
  f(0, 0) = 1;
  auto ms = solve_map(PresentedModule({"a"}, r4), PresentedModule({"b"}, r2), f);
  CHECK(ms.coker_group.is_zero());
  CHECK(ms.ker_group.torsion == std::vector<BigInt>{2});
  CHECK(ms.ker.generator_labels[0] == "2a");
  CHECK(combination_label(IntVec{1, 1, 1, 1}, {"1", "s1", "s2", "s3"}) == "1+s1+s2+s3");
  CHECK(combination_label(IntVec{1, 0, -1}, {"s0", "s1", "s2"}) == "s0-s2");
}

TEST_CASE("hermite rows") {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  IntMatrix h = hermite_rows(m);
  REQUIRE(h.rows == 3);
  // upper triangular, positive pivots, reduced above the pivots
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(h(i, i) > 0);
    for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
    for (std::size_t j = 0; j < i; ++j) CHECK((h(j, i) >= 0 && h(j, i) < h(i, i)));
  }
  // same lattice: each basis expresses the other
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(solve_integer(h.transpose(), m.row(i)));
    CHECK(solve_integer(m.transpose(), h.row(i)));
  }
  auto x = solve_integer(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVec{4, 9});
  REQUIRE(x);
  CHECK(*x == IntVec{2, 3});
  CHECK(!solve_integer(IntMatrix::from_rows({{2, 0}, {0, 3}}), IntVec{1, 9}));
}
