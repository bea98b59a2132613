#pragma once

#include "vk/cyclo.hpp"
#include "vk/exactla.hpp"
#include "vk/polyring.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vk {

struct Quaternion {
  CycNumber w, x, y, z;  // w + x i + y j + z k, real coordinates

  static Quaternion one() { return {CycNumber(1), CycNumber(0), CycNumber(0), CycNumber(0)}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  bool operator==(const Quaternion& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }
  std::string str() const;
};

using ClassFunction = std::vector<CycNumber>;

// Finite subgroup of SU(2) given by its elements as unit quaternions.
struct QuaternionGroup {
  std::string name;
  std::vector<Quaternion> elements;  // elements[0] is the identity
  std::vector<std::size_t> generators;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv, order;
  std::vector<std::size_t> class_of, class_reps, class_sizes;
  ClassFunction rho;  // trace of the defining 2-dim representation
  int exponent = 1;

  std::size_t size() const { return elements.size(); }
  std::size_t num_classes() const { return class_reps.size(); }
  // Index of a quaternion, or size() if absent.
  std::size_t find(const Quaternion& q) const;

  std::map<std::string, std::size_t> lookup;  // approximate-coordinate key
};

// Closure of the given unit quaternions under multiplication.
QuaternionGroup generate_group(const std::string& name, const std::vector<Quaternion>& gens);
QuaternionGroup cyclic_group(int m);           // A_{m-1}
QuaternionGroup binary_dihedral_group(int m);  // D_{m+2}, order 4m
QuaternionGroup binary_polyhedral_group(int n);  // n = 6, 7, 8

struct CharacterTable {
  std::shared_ptr<const QuaternionGroup> group;
  std::vector<std::string> labels;
  std::vector<ClassFunction> chars;
  std::vector<int> dims;

  std::size_t size() const { return chars.size(); }
  std::size_t index_of(const std::string& label) const;
  std::string name() const { return group->name; }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Named groups: A<n>, D<n>, E6, E7, E8, C<m>, BD<m>. Built once and cached.
TablePtr character_table(const std::string& name);
const QuaternionGroup& quaternion_group(const std::string& name);
// Builds the table for an explicit group (no caching); labels are generic.
CharacterTable compute_character_table(std::shared_ptr<const QuaternionGroup> g);

BigRat inner_product(const QuaternionGroup& g, const ClassFunction& a, const ClassFunction& b);
// Throws OrthogonalityFailure when either relation fails.
void verify_orthogonality(const CharacterTable& t);

struct VirtualRep {
  TablePtr table;
  IntVec coeffs;

  static VirtualRep irrep(TablePtr t, const std::string& label);
  static VirtualRep zero(TablePtr t);
  ClassFunction character() const;
  BigInt dimension() const;
  std::string str() const;
  VirtualRep& operator+=(const VirtualRep& o);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b);
  friend VirtualRep operator*(const BigInt& c, VirtualRep a);
  bool operator==(const VirtualRep& o) const;
};

// Multiplicities of the irreducibles in a class function; throws
// OrthogonalityFailure if any multiplicity is not an integer.
VirtualRep decompose(TablePtr t, const ClassFunction& chi);
VirtualRep tensor_decompose(const VirtualRep& a, const VirtualRep& b);
// The defining representation restricted to the group.
VirtualRep defining_rep(TablePtr t);

// Injective homomorphism sub -> super on element indices.
struct Embedding {
  TablePtr sub, super;
  std::vector<std::size_t> image;
};

// Generator images given as quaternions of the supergroup.
Embedding make_embedding(TablePtr sub, TablePtr super, const std::vector<Quaternion>& gen_images);
// Fixed inclusions among A1, A3, A5, D4, D5, E6, E7.
Embedding canonical_embedding(const std::string& sub, const std::string& super);

VirtualRep restrict(const VirtualRep& r, const Embedding& e);
VirtualRep induce(const VirtualRep& r, const Embedding& e);
// Matrix with column j = Ind of irrep j of sub, over the irreps of super.
IntMatrix induction_matrix(const Embedding& e);

IntMatrix mckay_graph(TablePtr t);

// Affine (extended) or ordinary ADE name of a graph, or "" when not ADE.
std::string affine_ade_name(const IntMatrix& a);
std::string ade_name(const IntMatrix& a);

struct Grading {
  TablePtr table;
  std::size_t sign_char;  // index of the +-1 valued linear character
  std::vector<std::size_t> kernel;  // element indices
};

std::vector<Grading> gradings(TablePtr t);
// Number of homomorphisms G -> Z2 (including the trivial one).
std::size_t hom_to_z2_count(const QuaternionGroup& g);

enum class GradedType { type_2_1, type_1_2 };
std::string to_string(GradedType t);
GradedType classify_graded(const Grading& e, std::size_t irrep);

struct FoldResult {
  std::string group, graph_name, kernel_graph_name;
  std::size_t nodes = 0, kernel_nodes = 0;
  IntMatrix graph, kernel_graph;
  IntMatrix restriction;  // rows: kernel irreps, columns: G irreps
  std::size_t graded_rank = 0;   // number of type 1_2 irreps
  std::size_t graded_rank1 = 0;  // number of type 2_1 pairs
  bool fold_consistent = false;
};

// Throws NoGradingExists when Hom(G, Z2) is trivial.
FoldResult graded_fold(TablePtr t, std::size_t grading_index = 0);

// Symbolic representation rings of SU(2) and O(2).
struct SU2Virtual {
  std::map<int, BigInt> c;  // coefficient of sigma_n, n >= 1
  std::string str() const;
  bool operator==(const SU2Virtual& o) const { return c == o.c; }
};

struct O2Virtual {
  BigInt one, delta;
  std::map<int, BigInt> kappa;  // kappa_i, i >= 1
  std::string str() const;
  bool operator==(const O2Virtual& o) const;
};

O2Virtual restrict_su2_to_o2(int n);
LaurentPoly restrict_su2_to_torus(int n);
VirtualRep restrict_su2(int n, TablePtr t);
SU2Virtual dirac_induce_torus_to_su2(int lambda);
// Coefficient of 1^- : Mult_1(rho) - Mult_d(rho); d must be one-dimensional.
BigInt dirac_induce_finite_to_o2(const VirtualRep& rho, const std::string& d);

}  // namespace vk
