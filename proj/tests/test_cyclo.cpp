#include "test_main.hpp"

#include "vk/cyclo.hpp"
#include "vk/errors.hpp"

#include <complex>
#include <random>

using namespace vk;
using cplx = std::complex<long double>;

namespace {

// Oracle: floating evaluation of sum c_j exp(2 pi i j / n).
cplx eval_exponents(int n, const std::vector<std::pair<int, long long>>& terms) {
  const long double pi = 3.14159265358979323846264338327950288L;
  cplx z = 0;
  for (auto [j, c] : terms) z += static_cast<long double>(c) * std::polar(1.0L, 2 * pi * j / n);
  return z;
}

cplx approx(const CycNumber& a) {
  auto e = a.real_embed();
  return {static_cast<long double>(e.re), static_cast<long double>(e.im)};
}

CycNumber random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-4, 4);
  CycNumber r;
  for (int j = 0; j < n; ++j) r += CycNumber(d(rng)) * CycNumber::zeta(n, j);
  return r / CycNumber(1 + rng() % 3);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(CycNumber::zeta(4) * CycNumber::zeta(4) == CycNumber(-1));
  CHECK(CycNumber::zeta(3) + CycNumber::zeta(3, 2) == CycNumber(-1));
  CycNumber z8 = CycNumber::zeta(8), z87 = CycNumber::zeta(8, 7);
  CycNumber prod = (CycNumber(1) + z8) * (CycNumber(1) + z87);
  CycNumber expect = CycNumber(2) + z8 + z87;
  CHECK(prod == expect);
  CHECK(std::abs(approx(prod) - eval_exponents(8, {{0, 2}, {1, 1}, {7, 1}})) < 1e-15L);
  CHECK(std::abs(approx(prod) - cplx(2 + std::sqrt(2.0L), 0)) < 1e-15L);
  CHECK(CycNumber(-1).inverse() == CycNumber(-1));
  CHECK(CycNumber(-3).inverse() * CycNumber(-3) == CycNumber(1));
}

TEST_CASE("conjugation examples") {
  CHECK(CycNumber::zeta(5).conj() == CycNumber::zeta(5, 4));
  CHECK(CycNumber(3).conj() == CycNumber(3));
  CycNumber a = CycNumber::zeta(8) + CycNumber::zeta(8, 3);
  CHECK(a.conj() == CycNumber::zeta(8, 5) + CycNumber::zeta(8, 7));
}

TEST_CASE("real embedding examples") {
  auto i = CycNumber::zeta(4).real_embed();
  CHECK(abs(i.re) < Real50("1e-30"));
  CHECK(abs(i.im - 1) < Real50("1e-30"));
  auto h = (CycNumber::zeta(6) + CycNumber::zeta(6, -1)).real_embed();
  CHECK(abs(h.re - 1) < Real50("1e-30"));
  auto s3 = (CycNumber::zeta(12) + CycNumber::zeta(12, -1)).real_embed();
  CHECK(abs(s3.re - sqrt(Real50(3))) < Real50("1e-30"));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(3);
  const int conductors[] = {3, 4, 5, 8, 12, 15, 24};
  for (int t = 0; t < 30; ++t) {
    int n1 = conductors[rng() % 7], n2 = conductors[rng() % 7];
    CycNumber a = random_element(rng, n1), b = random_element(rng, n2), c = random_element(rng, n1);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
    }
    cplx za = approx(a), zb = approx(b);
    CHECK(std::abs(approx(a * b) - za * zb) < 1e-12L);
    // |a|^2 = a * conj(a)
    auto n = (a * a.conj()).real_embed();
    auto e = a.real_embed();
    CHECK(abs(n.re - (e.re * e.re + e.im * e.im)) < Real50("1e-30"));
  }
}

TEST_CASE("square roots from Gauss sums") {
  for (long long m = 1; m <= 40; ++m) {
    CycNumber r = CycNumber::sqrt_int(m);
    CHECK(r * r == CycNumber(m));
    auto e = r.real_embed();
    CHECK(abs(e.re - sqrt(Real50(m))) < Real50("1e-30"));
    CHECK(abs(e.im) < Real50("1e-30"));
  }
  CHECK(CycNumber::sqrt_int(-1) == CycNumber::zeta(4));
}

TEST_CASE("minimal conductor normalization") {
  CycNumber a = CycNumber::zeta(12, 4) + CycNumber::zeta(12, 8);  // = -1
  CHECK(a.normalized().conductor() == 1);
  CycNumber b = CycNumber::zeta(24, 8).lift(48);
  CHECK(b.normalized().conductor() == 3);
  CycNumber r2 = CycNumber::sqrt_int(2).lift(40);
  CHECK(r2.normalized().conductor() == 8);
  CHECK(r2.normalized() == r2);
  CHECK(r2.normalized().normalized().conductor() == 8);
  CHECK(CycNumber::zeta(6).conductor() == 3);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(CycNumber(1) / CycNumber(0), DivisionByZero);
}

TEST_CASE("text rendering") {
  CHECK(CycNumber(3).str() == "3");
  CHECK(CycNumber::zeta(4).str() == "z(4)^1");
  CHECK((CycNumber(1) - CycNumber::zeta(5)).str() == "1 - z(5)^1");
}
