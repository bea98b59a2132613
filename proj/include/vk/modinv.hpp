#pragma once

#include "vk/fusion.hpp"

#include <string>
#include <vector>

namespace vk {

struct InvariantReport {
  bool square = false, nonnegative = false, normalized = false, commutes_S = false, commutes_T = false;
  bool ok() const { return square && nonnegative && normalized && commutes_S && commutes_T; }
  std::string failures() const;
};

InvariantReport check_invariant(const IntMatrix& Z, const ModularData& d);

struct EnumerationOptions {
  unsigned long long budget = 50'000'000ULL;  // candidate points visited before giving up
};

struct Enumeration {
  std::vector<IntMatrix> invariants;  // lexicographic on the flattened matrix
  std::size_t commutant_rank = 0;
  unsigned long long visited = 0;
};

// All normalized SU(2)_k modular invariants. Throws SearchBudgetExceeded.
Enumeration enumerate_invariants(int k, const EnumerationOptions& opt = {});
// Integer basis (rows, Hermite form) of {Z : ZS = SZ, ZT = TZ} in the flattened basis.
IntMatrix commutant_basis(const ModularData& d);

// Rows: extended primaries, columns: base primaries.
struct BranchingRule {
  std::vector<std::string> ext_labels, base_labels;
  IntMatrix b;
};

BranchingRule d4_branching();  // SU(2)_4 in SU(3)_1
BranchingRule e6_branching();  // SU(2)_10 in Sp(4)_1
BranchingRule identity_branching(int k);
// Z = b^t b, checked against the base data; throws InvariantCheckFailed.
IntMatrix embed_invariant(const BranchingRule& b, const ModularData& ext, const ModularData& base);

IntMatrix z_d4();
IntMatrix z_e6();
// S^2 as a permutation matrix.
IntMatrix charge_conjugation(const ModularData& d);

struct Cardinalities {
  BigInt trZ, trZZt, trBtB;
  bool has_b = false;
};
Cardinalities cardinalities(const IntMatrix& Z, const IntMatrix* b = nullptr);

// Unextended A_n, D_n, E6, E7, E8. A_n is a path; D_n is a path 0..n-3 with
// nodes n-2, n-1 attached to n-3; E_n is a path 0..n-2 with node n-1 attached to node 2.
IntMatrix ade_graph(const std::string& name);

struct NimrepReport {
  std::vector<IntMatrix> G;  // G_0 .. G_k
  std::vector<int> exponents;  // sorted, with multiplicity
  bool represents_fusion = false;
  bool truncates = false;  // G_1 G_k = G_{k-1}
  bool charpoly_matches = false;
  IntVec charpoly;  // coefficients, constant term first
};

// Throws NegativeEntry when some G_lambda has a negative entry.
NimrepReport nimrep_from_graph(const IntMatrix& A, int k);
// Exponents read off the diagonal of Z.
std::vector<int> diagonal_exponents(const IntMatrix& Z);
IntVec characteristic_polynomial(const IntMatrix& A);

bool central_charge_check(long long h_dim, long long h_dualcox, long long k, long long g_dim, long long g_dualcox,
                          long long l);
BigRat central_charge(long long dim, long long dualcox, long long level);

// Subgroup H of G x G with G = prod Z/orders[i]; elements are index pairs.
struct AbelianPairGroup {
  std::vector<int> orders;
  std::vector<std::pair<std::size_t, std::size_t>> elements;
};

struct AlphaInduction {
  std::vector<std::string> labels;  // primaries of D(G)
  std::size_t full_system_size = 0;
  std::vector<std::size_t> N;  // {a b^-1 : (a, b) in H}
  std::size_t neutral_size = 0;  // |L|^2 with L = G/N
  IntMatrix Z, b;  // b: rows primaries of D(L), columns primaries of D(G)
  std::vector<std::size_t> alpha_plus, alpha_minus;  // indices into the full system
  bool z_is_btb = false;
  bool invariant = false;
  BigInt sum_z_squared;
};

// Throws DiagonalNotContained when H misses some (g, g).
AlphaInduction alpha_induction_abelian(const std::vector<int>& orders,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& H);
// Every H with diagonal <= H <= G x G, one per subgroup N of G.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> overgroups_of_diagonal(const std::vector<int>& orders);

// Sum over orbits of the permutation group on label tuples of #Irr(stabilizer).
BigInt permutation_orbifold_count(int n_labels, int copies, const std::vector<std::vector<int>>& perms);
std::vector<std::vector<int>> symmetric_group(int n);

}  // namespace vk
