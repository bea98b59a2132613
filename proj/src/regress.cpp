#include "vk/regress.hpp"

#include "vk/errors.hpp"
#include "vk/fusion.hpp"
#include "vk/khomology.hpp"
#include "vk/modinv.hpp"
#include "vk/repring.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace vk {

Suite parse_suite(const std::string& s) {
  if (s == "golden") return Suite::golden;
  if (s == "properties") return Suite::properties;
  if (s == "all") return Suite::all;
  throw UsageError("unknown suite " + s + " (golden, properties, all)");
}

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

// "x+x'+2z" over the irreducibles of g.
VirtualRep parse_rep(const std::string& g, const std::string& expr) {
  TablePtr t = character_table(g);
  VirtualRep r = VirtualRep::zero(t);
  std::size_t p = 0;
  for (;;) {
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

void c1(Outcome& o) {
  for (int k = 1; k <= 16; ++k) {
    ModularData d = su2_modular_data(k);
    ModularCheck c = check_modular(d);
    o.require(c.ok(), "k=" + std::to_string(k) + " " + c.failures());
    FusionRing v = verlinde_matrices(d);
    o.require(v == su2_fusion_truncated(k), "k=" + std::to_string(k) + " Verlinde differs from Clebsch-Gordan");
  }
  if (o.pass) o.detail << "k = 1..16: S symmetric unitary, (ST)^3 = S^2, Verlinde = truncated Clebsch-Gordan";
}

void c2(Outcome& o) {
  struct Bullet {
    std::string h, g;
    std::vector<std::pair<std::string, std::string>> rows;
  };
  const std::vector<Bullet> bullets{
      {"A1", "A3", {{"r''_1", "r'_1+r'_-1"}, {"r''_-1", "r'_i+r'_-i"}}},
      {"A1", "A5", {{"r''_1", "r_1+r_w+r_w2"}, {"r''_-1", "r_-1+r_-w+r_-w2"}}},
      {"A3", "D4", {{"r'_1", "s0+s2"}, {"r'_-1", "s1+s3"}, {"r'_i", "t"}, {"r'_-i", "t"}}},
      {"A3", "E6", {{"r'_1", "x+x'+x''+z"}, {"r'_-1", "2z"}, {"r'_i", "y+y'+y''"}, {"r'_-i", "y+y'+y''"}}},
      {"D4", "E6", {{"s0", "x+x'+x''"}, {"s1", "z"}, {"s2", "z"}, {"s3", "z"}, {"t", "y+y'+y''"}}},
      {"A5", "D5",
       {{"r_1", "s'0+s'1"}, {"r_-1", "s'2+s'3"}, {"r_w", "t''"}, {"r_w2", "t''"}, {"r_-w", "t'"}, {"r_-w2", "t'"}}},
      {"A5", "E6",
       {{"r_1", "x+z"}, {"r_-1", "y'+y''"}, {"r_w", "x''+z"}, {"r_w2", "x'+z"}, {"r_-w", "y+y'"}, {"r_-w2", "y+y''"}}}};
  int rows = 0;
  for (const auto& b : bullets) {
    Embedding e = canonical_embedding(b.h, b.g);
    for (const auto& [src, dst] : b.rows) {
      VirtualRep r = VirtualRep::irrep(e.sub, src);
      VirtualRep ind = induce(r, e);
      o.require(ind == parse_rep(b.g, dst), "Ind " + src + " from " + b.h + " to " + b.g);
      for (std::size_t j = 0; j < e.super->size(); ++j) {
        VirtualRep res = restrict(VirtualRep::irrep(e.super, e.super->labels[j]), e);
        o.require(ind.coeffs[j] == res.coeffs[e.sub->index_of(src)], "Frobenius reciprocity " + b.h + " in " + b.g);
      }
      ++rows;
    }
  }
  if (o.pass) o.detail << rows << " induction rows in 7 tables, Frobenius reciprocity holds";
}

void c3(Outcome& o) {
  const std::vector<std::pair<std::string, std::size_t>> cases{{"A1", 2}, {"A3", 4}, {"A5", 6}, {"D4", 5},
                                                               {"D5", 6}, {"E6", 7}, {"E7", 8}};
  for (const auto& [name, nodes] : cases) {
    TablePtr t = character_table(name);
    IntMatrix a = mckay_graph(t);
    o.require(a.rows == nodes, name + " has " + std::to_string(a.rows) + " nodes");
    o.require(affine_ade_name(a) == name + "~", name + " graph is " + affine_ade_name(a));
    IntVec d;
    for (int x : t->dims) d.push_back(x);
    IntVec r = a * d;
    for (std::size_t i = 0; i < d.size(); ++i) o.require(2 * d[i] == r[i], name + ": (2I - A) dims != 0");
  }
  if (o.pass) o.detail << "A1~ A3~ A5~ D4~ D5~ E6~ E7~ with 2,4,6,5,6,7,8 nodes; (2I - A) dims = 0";
}

void c4(Outcome& o) {
  auto fold = [&](const std::string& g, const std::string& want) {
    TablePtr t = character_table(g);
    auto gs = gradings(t);
    o.require(!gs.empty(), g + " has no grading");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      FoldResult f = graded_fold(t, i);
      o.require(f.kernel_graph_name == want, g + " folds to " + f.kernel_graph_name);
      o.require(f.fold_consistent, g + " restriction does not intertwine the graphs");
    }
  };
  fold("A3", "A1~");
  fold("D4", "A3~");
  fold("E7", "E6~");
  for (const char* g : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8"}) {
    bool trivial = hom_to_z2_count(quaternion_group(g)) == 1;
    bool threw = false;
    try {
      graded_fold(character_table(g));
    } catch (const NoGradingExists&) {
      threw = true;
    }
    o.require(threw == trivial, std::string(g) + ": NoGradingExists does not track Hom(G, Z2)");
  }
  if (o.pass) o.detail << "A3 -> A1~, D4 -> A3~, E7 -> E6~; NoGradingExists exactly for A2, A4, E6, E8";
}

void c5(Outcome& o) {
  for (int k = 1; k <= 10; ++k) {
    KPair u = circle_level(k, false), g = circle_level(k, true);
    o.require(u.K0.same_type(FGAbelianGroup::free(k)) && u.K1.is_zero(), "k=" + std::to_string(k) + " " + u.str());
    o.require(g.K0.same_type(FGAbelianGroup::free(k)) && g.K1.is_zero(), "graded k=" + std::to_string(k) + " " + g.str());
    o.require(g.check("cyclic") == (k % 2 == 1), "graded k=" + std::to_string(k) + " cyclicity");
  }
  if (o.pass) o.detail << "rank k, K1 = 0 for k <= 10; graded ring cyclic exactly for odd k";
}

void c6(Outcome& o) {
  for (int k = 0; k <= 12; ++k) {
    KPair p = su2_adjoint(k);
    std::string at = "k=" + std::to_string(k) + " ";
    o.require(p.K0.same_type(FGAbelianGroup::free(k + 1)) && p.K1.is_zero(), at + p.str());
    o.require(p.check("beta injective"), at + "beta not injective");
    o.require(p.check("fusion product"), at + "induced product differs from truncated fusion");
  }
  if (o.pass) o.detail << "(Z^{k+1}, 0) for k <= 12 with the truncated Clebsch-Gordan product";
}

void c7(Outcome& o) {
  for (int k = 1; k <= 8; ++k) {
    KPair p = torus_on_su2(k);
    o.require(p.K0.same_type(FGAbelianGroup::free(2 * k + 2)) && p.K1.is_zero(), "k=" + std::to_string(k) + " " + p.str());
  }
  BigInt d = maximal_rank_dim("SU2", "T");
  o.require(d == 4, "maximal_rank_dim(SU2, T) = " + d.str());
  o.require(torus_on_su2(1).K0.free_rank == d, "k=1 rank differs from maximal_rank_dim");
  if (o.pass) o.detail << "(Z^{2k+2}, 0) for k <= 8; maximal_rank_dim(SU2, T) = 4";
}

void c8(Outcome& o) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> dist(-5, 5);
  int done = 0;
  while (done < 10) {
    long long k = dist(rng), l = dist(rng), m = dist(rng), n = dist(rng);
    long long det = (k + l) * m - (m + n) * k;
    if (det == 0) continue;
    ++done;
    IntMatrix K = IntMatrix::from_rows({{k, l}, {m, n}});
    IntMatrix rel = IntMatrix::from_rows({{k + l, k}, {m + n, m}});
    SmithForm s = smith_normal_form(rel, false);
    std::vector<BigInt> want;
    for (const auto& x : s.diag)
      if (abs(x) != 1) want.push_back(abs(x));
    FGAbelianGroup g = t2_group(K);
    std::string at = "K=[[" + std::to_string(k) + "," + std::to_string(l) + "],[" + std::to_string(m) + "," +
                     std::to_string(n) + "]] ";
    o.require(g.order() == std::llabs(det), at + "order");
    o.require(g.torsion == want, at + g.str());
    o.require(t2_level(K).check("rank equals group order"), at + "group ring rank");
    if (done <= 3) o.detail << (done > 1 ? ", " : "") << at << g.str();
  }
  if (o.pass) o.detail << ", ...";
}

void c9(Outcome& o) {
  std::ostringstream circ, su2;
  for (int k = 1; k <= 6; ++k) {
    KPair p = circle_s2_orbifold(k, 0);
    circ << (k > 1 ? " " : "") << p.str();
    o.require(p.K1.same_type(FGAbelianGroup::free(k)) && p.K0.same_type(FGAbelianGroup::free(k * (k + 1))),
              "circle k=" + std::to_string(k) + " gives " + p.str());
  }
  for (int k = 1; k <= 6; ++k) {
    try {
      KPair p = su2_s2_orbifold(k);
      su2 << (k > 1 ? " " : "") << p.str();
      o.require(p.K0.same_type(FGAbelianGroup::free(k * (k + 7) / 2)) && p.K1.is_zero(),
                "SU(2) k=" + std::to_string(k) + " gives " + p.str());
    } catch (const SearchError& e) {
      su2 << (k > 1 ? " " : "") << "unstable";
      o.require(false, "SU(2) k=" + std::to_string(k) + " " + e.what());
    }
  }
  o.detail << (o.pass ? "" : " | ") << "circle: " << circ.str() << " | SU(2): " << su2.str();
}

void c10(Outcome& o) {
  KPair p = d4_chain(true);
  for (const auto& [name, want] : std::vector<std::pair<std::string, std::string>>{
           {"step 1: ab d1", "(Z⁴, Z)"}, {"step 2: D4 orbit d1", "(Z, Z³)"}, {"step 3: A3 orbit d1", "(Z₂⁴⊕Z, Z³)"}})
    o.require(p.step(name).observed == want, name + " gives " + p.step(name).observed);
  o.require(p.str() == "(Z₂⁴⊕Z, Z)", "final " + p.str());
  if (o.pass) o.detail << "Z⁴; (Z, Z³); Z₂⁴⊕Z; final " << p.str();
}

void c11(Outcome& o) {
  KPair p = e6_tor_pipeline();
  o.require(p.K0.same_type(FGAbelianGroup::free(2)) && p.K1.same_type(FGAbelianGroup::free(2)), p.str());
  o.require(p.check("H0 basis {1, s}") && p.check("s^2 = 2"), "H0 is not Z[s]/(s^2 - 2)");
  o.require(p.check("coprime certificate"), "no coprimality certificate");
  if (o.pass) o.detail << "H0 = H1 = Z², s² = 2, " << p.provenance.front().note;
}

void c12(Outcome& o) {
  KPair p = e6_orbit_chain(false);
  o.require(p.step("step 1: tetrahedron d1").K1.str() == "Z⁴", "tetrahedron K1 " + p.step("step 1: tetrahedron d1").K1.str());
  o.require(p.step("step 2: chords d1").K0.str() == "Z¹⁹", "chords K0 " + p.step("step 2: chords d1").K0.str());
  o.require(p.str() == "(Z¹², Z¹⁶)", "final " + p.str());
  o.detail << (o.pass ? "" : " | ") << "Z⁴; Z¹⁹; final " << p.str();
}

void c13(Outcome& o) {
  std::map<int, std::size_t> counts{{2, 1}, {4, 2}, {10, 3}, {16, 3}};
  std::map<int, Enumeration> e;
  for (auto [k, c] : counts) {
    e[k] = enumerate_invariants(k);
    o.require(e[k].invariants.size() == c, "k=" + std::to_string(k) + " count " + std::to_string(e[k].invariants.size()));
  }
  auto contains = [](const Enumeration& en, const IntMatrix& z) {
    return std::find(en.invariants.begin(), en.invariants.end(), z) != en.invariants.end();
  };
  o.require(contains(e[4], z_d4()), "Z_D4 missing at k=4");
  o.require(contains(e[10], z_e6()), "Z_E6 missing at k=10");
  auto su3 = level1_data("SU3"), sp4 = level1_data("Sp4");
  o.require(embed_invariant(d4_branching(), su3.data, su2_modular_data(4)) == z_d4(), "embedding does not give Z_D4");
  o.require(embed_invariant(e6_branching(), sp4.data, su2_modular_data(10)) == z_e6(), "embedding does not give Z_E6");
  auto cd = cardinalities(z_d4()), ce = cardinalities(z_e6());
  o.require(cd.trZ == 4 && cd.trZZt == 8, "Z_D4 cardinalities");
  o.require(ce.trZ == 6 && ce.trZZt == 12, "Z_E6 cardinalities");
  if (o.pass) o.detail << "counts 1, 2, 3, 3 at k = 2, 4, 10, 16; (trZ, trZZ^t) = (4, 8) and (6, 12)";
}

void c14(Outcome& o) {
  auto d4 = nimrep_from_graph(ade_graph("D4"), 4);
  auto e6 = nimrep_from_graph(ade_graph("E6"), 10);
  o.require(d4.exponents == std::vector<int>{0, 2, 2, 4}, "D4 exponents");
  o.require(e6.exponents == std::vector<int>{0, 3, 4, 6, 7, 10}, "E6 exponents");
  o.require(d4.charpoly_matches && e6.charpoly_matches, "characteristic polynomials differ");
  o.require(diagonal_exponents(z_d4()) == d4.exponents, "D4 spectrum differs from diag Z");
  o.require(diagonal_exponents(z_e6()) == e6.exponents, "E6 spectrum differs from diag Z");
  if (o.pass) o.detail << "D4: {0,2,2,4}, E6: {0,3,4,6,7,10}";
}

void c15(Outcome& o) {
  for (int m = 1; m <= 6; ++m) {
    AbelianDouble d = double_abelian({m});
    o.require(check_modular(d.data).ok(), "untwisted m=" + std::to_string(m));
  }
  int total = 0, agree = 0, listed = 0;
  std::ostringstream bad;
  for (int n = 1; n <= 6; ++n)
    for (int s = 1; s <= n; ++s) {
      ++total;
      FGAbelianGroup direct = double_cyclic_twisted(n, s).group;
      std::string formula;
      bool same = false;
      try {
        FGAbelianGroup f = gcd_formula_group(n, s);
        formula = f.ascii();
        same = f.same_type(direct);
      } catch (const InvalidTwist&) {
        formula = "InvalidTwist";
      }
      if (same) ++agree;
      else if (listed++ < 4) bad << " (" << n << "," << s << "): " << direct.ascii() << " vs " << formula;
    }
  o.require(agree == total, std::to_string(total - agree) + " of " + std::to_string(total) +
                                " twists differ from the gcd(2n, sigma) formula;" + bad.str());
  if (o.pass) o.detail << "untwisted m <= 6 modular; all twisted groups match";
}

void c16(Outcome& o) {
  int cases = 0;
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {4}, {2, 2}})
    for (const auto& H : overgroups_of_diagonal(orders)) {
      auto a = alpha_induction_abelian(orders, H);
      o.require(a.z_is_btb, "Z != b^t b");
      o.require(a.invariant, "Z is not a modular invariant");
      ++cases;
    }
  if (o.pass) o.detail << cases << " subgroups H over Z2, Z4, Z2xZ2: Z = <alpha+, alpha-> = b^t b";
}

void c17(Outcome& o) {
  auto s2 = symmetric_group(2);
  std::ostringstream counts;
  for (int m = 1; m <= 6; ++m) {
    BigInt c = permutation_orbifold_count(m * m, 2, s2);
    BigInt want = (BigInt(m) * m * m * m + m * m) / 2;
    counts << (m > 1 ? " " : "") << c;
    o.require(c == want, "m=" + std::to_string(m) + ": " + c.str() + " vs " + want.str());
  }
  struct Emb {
    const char* name;
    long long hd, hh, k, gd, gh, l;
  };
  for (const Emb& e : {Emb{"SU(2)_4 in SU(3)_1", 3, 2, 4, 8, 3, 1}, Emb{"SU(2)_10 in Sp(4)_1", 3, 2, 10, 10, 3, 1},
                       Emb{"SU(2)_28 in G2_1", 3, 2, 28, 14, 4, 1}, Emb{"T_2 in SU(2)_1", 1, 0, 2, 3, 2, 1}}) {
    o.require(central_charge_check(e.hd, e.hh, e.k, e.gd, e.gh, e.l), std::string(e.name) + " central charge");
    // a torus has c = rank at every level, so the shifted level is the outer one
    bool torus = e.hh == 0;
    for (int d : {-1, 1}) {
      bool c = torus ? central_charge_check(e.hd, e.hh, e.k, e.gd, e.gh, e.l + d)
                     : central_charge_check(e.hd, e.hh, e.k + d, e.gd, e.gh, e.l);
      o.require(!c, std::string(e.name) + " accepts an off-by-one level");
    }
  }
  o.detail << (o.pass ? "" : " | ") << "orbifold counts m = 1..6: " << counts.str() << "; central charges as listed";
}

struct Criterion {
  int id;
  const char* name;
  const char* citation;
  void (*run)(Outcome&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "SU(2)_k modular data", "computed: exact S, T and Verlinde fusion for k <= 16", c1},
      {2, "induction tables", "tabulated inductions against Frobenius computation", c2},
      {3, "McKay graphs", "affine ADE recognition and dimension vector", c3},
      {4, "graded foldings", "kernel graphs and Hom(G, Z2)", c4},
      {5, "circle Verlinde algebra", "expected: rank k; cyclic iff k odd", c5},
      {6, "SU(2) on SU(2)", "expected: Z^{k+1}, 0 with fusion product", c6},
      {7, "T on SU(2)", "expected: Z^{2k+2}, 0; maximal rank count 4", c7},
      {8, "T^2 level", "computed: Smith form of the relation pair", c8},
      {9, "S2-orbifolds", "expected: (k, k(k+1)) and k(k+7)/2", c9},
      {10, "D4 chain", "expected: (Z₂⁴⊕Z, Z) and its intermediates", c10},
      {11, "E6 Tor", "expected: H0 = H1 = Z² with s² = 2", c11},
      {12, "E6 orbit chain", "expected: Z⁴, Z¹⁹, (Z¹², Z¹⁶)", c12},
      {13, "modular invariants", "expected: counts, Z_D4, Z_E6, cardinalities", c13},
      {14, "nimreps", "expected: exponent sets at k = 4 and 10", c14},
      {15, "doubles", "expected: Z_d x Z_{n^2/d}, d = gcd(2n, sigma)", c15},
      {16, "alpha-induction", "computed: Z = b^t b over all H containing the diagonal", c16},
      {17, "orbifold counts and central charges", "expected: (m^4 + m^2)/2; four conformal embeddings", c17}};
  return all;
}

}  // namespace

const std::vector<int>& suite_members(Suite s) {
  static const std::vector<int> golden{2, 5, 6, 7, 9, 10, 11, 12, 13, 14, 17};
  static const std::vector<int> properties{1, 3, 4, 8, 15, 16};
  static const std::vector<int> all = [] {
    std::vector<int> v(17);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }();
  switch (s) {
    case Suite::golden: return golden;
    case Suite::properties: return properties;
    case Suite::all: break;
  }
  return all;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 17) throw UsageError("criteria are numbered 1 to 17");
  const Criterion& c = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  r.citation = c.citation;
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run_suite(Suite s) {
  std::vector<CriterionResult> out;
  for (int id : suite_members(s)) out.push_back(run_criterion(id));
  return out;
}

}  // namespace vk
