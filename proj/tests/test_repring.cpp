#include "test_main.hpp"

#include "vk/errors.hpp"
#include "vk/repring.hpp"

#include <array>
#include <cmath>

using namespace vk;

namespace {

VirtualRep rep(const std::string& g, const std::string& expr) {
  TablePtr t = character_table(g);
  VirtualRep r = VirtualRep::zero(t);
  std::size_t p = 0;
  while (p < expr.size()) {
    std::size_t q = expr.find('+', p);
    std::string term = expr.substr(p, q == std::string::npos ? std::string::npos : q - p);
    long long c = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) c = term[0] - '0', term = term.substr(1);
    r.coeffs[t->index_of(term)] += c;
    if (q == std::string::npos) break;
    p = q + 1;
  }
  return r;
}

void check_induction(const std::string& h, const std::string& g,
                     const std::vector<std::pair<std::string, std::string>>& table) {
  Embedding e = canonical_embedding(h, g);
  for (const auto& [src, dst] : table) {
    INFO(h << " -> " << g << ": " << src);
    CHECK(induce(VirtualRep::irrep(e.sub, src), e) == rep(g, dst));
  }
}

using Q = std::array<double, 4>;

Q qmul(const Q& a, const Q& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

// Oracle: the 24 Hurwitz units.
std::vector<Q> hurwitz_units() {
  std::vector<Q> out;
  for (int k = 0; k < 4; ++k)
    for (int s : {1, -1}) {
      Q q{0, 0, 0, 0};
      q[k] = s;
      out.push_back(q);
    }
  for (int m = 0; m < 16; ++m)
    out.push_back({m & 1 ? -0.5 : 0.5, m & 2 ? -0.5 : 0.5, m & 4 ? -0.5 : 0.5, m & 8 ? -0.5 : 0.5});
  return out;
}

}  // namespace

TEST_CASE("group orders and table sizes") {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases{
      {"A1", 2, 2}, {"A3", 4, 4}, {"A5", 6, 6}, {"D4", 8, 5}, {"D5", 12, 6}, {"E6", 24, 7}, {"E7", 48, 8}, {"E8", 120, 9}};
  for (const auto& [name, order, irreps] : cases) {
    TablePtr t = character_table(name);
    CHECK(t->group->size() == order);
    CHECK(t->size() == irreps);
    long long s = 0;
    for (int d : t->dims) s += d * d;
    CHECK(s == static_cast<long long>(order));
    CHECK_NOTHROW(verify_orthogonality(*t));
  }
  CHECK(character_table("E6")->dims == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(character_table("A1")->labels == std::vector<std::string>{"r''_1", "r''_-1"});
  CHECK(character_table("D4")->labels == std::vector<std::string>{"s0", "s1", "s2", "s3", "t"});
}

TEST_CASE("restriction of the defining representation") {
  CHECK(restrict_su2(2, character_table("A1")) == rep("A1", "2r''_-1"));
  CHECK(restrict_su2(2, character_table("A3")) == rep("A3", "r'_i+r'_-i"));
  CHECK(restrict_su2(2, character_table("A5")) == rep("A5", "r_-w+r_-w2"));
  CHECK(restrict_su2(2, character_table("D4")) == rep("D4", "t"));
  CHECK(restrict_su2(2, character_table("D5")) == rep("D5", "t'"));
  CHECK(restrict_su2(2, character_table("E6")) == rep("E6", "y"));
  O2Virtual s3 = restrict_su2_to_o2(3);
  CHECK(s3.delta == 1);
  CHECK(s3.one == 0);
  CHECK(s3.kappa == std::map<int, BigInt>{{2, 1}});
  CHECK(restrict_su2_to_o2(5).one == 1);
  CHECK(restrict_su2_to_torus(3) == LaurentPoly::monomial(2) + LaurentPoly::constant(1) + LaurentPoly::monomial(-2));
}

TEST_CASE("the seven induction tables") {
  check_induction("A1", "A3", {{"r''_1", "r'_1+r'_-1"}, {"r''_-1", "r'_i+r'_-i"}});
  check_induction("A1", "A5", {{"r''_1", "r_1+r_w+r_w2"}, {"r''_-1", "r_-1+r_-w+r_-w2"}});
  check_induction("A3", "D4", {{"r'_1", "s0+s2"}, {"r'_-1", "s1+s3"}, {"r'_i", "t"}, {"r'_-i", "t"}});
  check_induction("A3", "E6", {{"r'_1", "x+x'+x''+z"}, {"r'_-1", "2z"}, {"r'_i", "y+y'+y''"}, {"r'_-i", "y+y'+y''"}});
  check_induction("D4", "E6", {{"s0", "x+x'+x''"}, {"s1", "z"}, {"s2", "z"}, {"s3", "z"}, {"t", "y+y'+y''"}});
  check_induction("A5", "D5",
                  {{"r_1", "s'0+s'1"}, {"r_-1", "s'2+s'3"}, {"r_w", "t''"}, {"r_w2", "t''"}, {"r_-w", "t'"}, {"r_-w2", "t'"}});
  check_induction("A5", "E6",
                  {{"r_1", "x+z"}, {"r_-1", "y'+y''"}, {"r_w", "x''+z"}, {"r_w2", "x'+z"}, {"r_-w", "y+y'"}, {"r_-w2", "y+y''"}});
}

TEST_CASE("Frobenius reciprocity on every supported pair") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"A1", "A3"}, {"A1", "A5"}, {"A1", "D4"}, {"A1", "D5"}, {"A1", "E6"}, {"A1", "E7"}, {"A3", "D4"}, {"A3", "D5"},
      {"A3", "E6"}, {"A3", "E7"}, {"A5", "D5"}, {"A5", "E6"}, {"D4", "E6"}, {"D4", "E7"}, {"E6", "E7"}};
  for (const auto& [h, g] : pairs) {
    Embedding e = canonical_embedding(h, g);
    for (std::size_t i = 0; i < e.sub->size(); ++i)
      for (std::size_t j = 0; j < e.super->size(); ++j) {
        VirtualRep ind = induce(VirtualRep::irrep(e.sub, e.sub->labels[i]), e);
        VirtualRep res = restrict(VirtualRep::irrep(e.super, e.super->labels[j]), e);
        CHECK(ind.coeffs[j] == res.coeffs[i]);
      }
  }
  CHECK_THROWS_AS(canonical_embedding("A5", "D4"), NotASubgroup);
}

TEST_CASE("tensor products") {
  TablePtr d4 = character_table("D4");
  CHECK(tensor_decompose(rep("D4", "s0"), rep("D4", "t")) == rep("D4", "t"));
  CHECK(tensor_decompose(rep("D4", "t"), rep("D4", "t")) == rep("D4", "s0+s1+s2+s3"));
  // oracle: floating characters of Q8 with s_k read off from the signs on i and j
  std::vector<Q> q8;
  for (int k = 0; k < 4; ++k)
    for (int s : {1, -1}) {
      Q q{0, 0, 0, 0};
      q[k] = s;
      q8.push_back(q);
    }
  for (int idx = 0; idx < 4; ++idx) {
    double sum = 0;
    for (const Q& g : q8) {
      double si = (idx & 1) ? -1 : 1, sj = (idx & 2) ? -1 : 1;
      double s = std::abs(g[1]) > 0.5 ? si : std::abs(g[2]) > 0.5 ? sj : std::abs(g[3]) > 0.5 ? si * sj : 1;
      sum += 4 * g[0] * g[0] * s;
    }
    CHECK(std::abs(sum / 8 - 1) < 1e-12);
  }
  // E6: y (x) y has norm 2 and contains the trivial rep once, so it is 1 + (3-dim)
  double n2 = 0, n1 = 0;
  for (const Q& g : hurwitz_units()) {
    double c = 4 * g[0] * g[0];
    n2 += c * c, n1 += c;
  }
  CHECK(std::abs(n2 / 24 - 2) < 1e-12);
  CHECK(std::abs(n1 / 24 - 1) < 1e-12);
  CHECK(tensor_decompose(rep("E6", "y"), rep("E6", "y")) == rep("E6", "x+z"));
  CHECK_THROWS_AS(tensor_decompose(rep("E6", "y"), rep("D4", "t")), GroupMismatch);
}

TEST_CASE("McKay graphs are affine ADE") {
  const std::vector<std::tuple<std::string, std::size_t, std::string>> cases{
      {"A1", 2, "A1~"}, {"A3", 4, "A3~"}, {"A5", 6, "A5~"}, {"D4", 5, "D4~"},
      {"D5", 6, "D5~"}, {"E6", 7, "E6~"}, {"E7", 8, "E7~"}, {"E8", 9, "E8~"}};
  for (const auto& [name, nodes, type] : cases) {
    TablePtr t = character_table(name);
    IntMatrix a = mckay_graph(t);
    CHECK(a.rows == nodes);
    CHECK(a == a.transpose());
    CHECK(affine_ade_name(a) == type);
    IntVec d;
    for (int x : t->dims) d.push_back(x);
    IntVec r = a * d;
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(2 * d[i] == r[i]);
  }
  // D4: central node t joined to the four one-dimensionals
  IntMatrix a = mckay_graph(character_table("D4"));
  for (std::size_t i = 0; i < 4; ++i) CHECK(a(i, 4) == 1);
}

TEST_CASE("gradings and folding") {
  FoldResult a3 = graded_fold(character_table("A3"));
  CHECK(a3.kernel_nodes == 2);
  CHECK(a3.kernel_graph_name == "A1~");
  CHECK(a3.fold_consistent);
  FoldResult d4 = graded_fold(character_table("D4"));
  CHECK(d4.kernel_graph_name == "A3~");
  CHECK(d4.kernel_nodes == 4);
  CHECK(d4.fold_consistent);
  CHECK(d4.graded_rank == 1);   // t
  CHECK(d4.graded_rank1 == 2);  // two pairs of one-dimensionals
  FoldResult e7 = graded_fold(character_table("E7"));
  CHECK(e7.kernel_graph_name == "E6~");
  CHECK(e7.fold_consistent);
  CHECK(gradings(character_table("D4")).size() == 3);
  CHECK(gradings(character_table("E7")).size() == 1);
  for (const char* g : {"A2", "A4", "E6", "E8"}) {
    CHECK(hom_to_z2_count(quaternion_group(g)) == 1);
    CHECK_THROWS_AS(graded_fold(character_table(g)), NoGradingExists);
  }
  auto gs = gradings(character_table("D4"));
  std::size_t t = character_table("D4")->index_of("t");
  bool some_horizontal = false;
  for (const auto& e : gs) {
    CHECK(classify_graded(e, 0) == GradedType::type_2_1);
    if (classify_graded(e, t) == GradedType::type_1_2) some_horizontal = true;
  }
  CHECK(some_horizontal);
}

TEST_CASE("Dirac induction") {
  CHECK(dirac_induce_torus_to_su2(0).c.empty());
  CHECK(dirac_induce_torus_to_su2(2).c == std::map<int, BigInt>{{2, 1}});
  CHECK(dirac_induce_torus_to_su2(-3).c == std::map<int, BigInt>{{3, -1}});
  CHECK(dirac_induce_finite_to_o2(rep("D4", "s0+s1+s2+s3"), "s1") == 0);
  for (const char* d : {"s1", "s2", "s3"}) CHECK(dirac_induce_finite_to_o2(rep("D4", "t"), d) == 0);
  CHECK(dirac_induce_finite_to_o2(rep("D4", "s0"), "s1") == 1);
  CHECK_THROWS_AS(dirac_induce_finite_to_o2(rep("D4", "s0"), "t"), InvalidEmbedding);
}

TEST_CASE("ADE recognition of ordinary diagrams") {
  auto path = [](std::size_t n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1;
    return a;
  };
  CHECK(ade_name(path(5)) == "A5");
  IntMatrix e6 = path(5);
  IntMatrix g(6, 6);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) g(i, j) = e6(i, j);
  g(2, 5) = g(5, 2) = 1;
  CHECK(ade_name(g) == "E6");
}
