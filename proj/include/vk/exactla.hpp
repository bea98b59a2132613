#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace vk {

using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<BigInt>;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rs);
  static IntMatrix from_columns(const std::vector<IntVec>& cs, std::size_t height);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);  // Bareiss

// Z^free_rank + sum Z/d_i. Generator labels: torsion generators first, then free ones.
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  std::vector<std::string> generators;

  static FGAbelianGroup free(std::size_t n);
  std::size_t num_generators() const { return torsion.size() + free_rank; }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  BigInt order() const;  // 0 when infinite
  // Same isomorphism type, labels ignored.
  bool same_type(const FGAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string str() const;  // e.g. "Z₂⁴⊕Z", "0"
  std::string ascii() const;  // e.g. "Z2^4+Z"
};

struct PresentedModule {
  std::vector<std::string> generator_labels;
  IntMatrix relations;  // columns are relations; rows == generator count

  PresentedModule() = default;
  PresentedModule(std::vector<std::string> labels, IntMatrix rel)
      : generator_labels(std::move(labels)), relations(std::move(rel)) {}
  static PresentedModule free(std::vector<std::string> labels);
  std::size_t size() const { return generator_labels.size(); }
};

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

struct SmithForm {
  IntMatrix U, Uinv, D, V;
  std::vector<BigInt> diag;  // nonzero diagonal, divisibility chain
};

// U*M*V = D. With track == false only D and diag are filled.
SmithForm smith_normal_form(const IntMatrix& m, bool track = true);

std::string combination_label(const IntVec& coeffs, const std::vector<std::string>& labels);

// Quotient of Z^n by a relation lattice, with sparse unit-pivot elimination
// before the dense Smith step. Keeps what is needed to map vectors to
// invariant-factor coordinates.
class Quotient {
 public:
  Quotient(std::size_t ngens, const std::vector<std::vector<std::pair<std::size_t, BigInt>>>& rels,
           std::vector<std::string> labels = {});
  explicit Quotient(const PresentedModule& p);

  const FGAbelianGroup& group() const { return group_; }
  // Coordinates in the order of group().generators; torsion coordinates reduced mod d.
  IntVec coords(const IntVec& x) const;
  bool is_zero(const IntVec& x) const;
  // Representative vectors (original basis) of the group generators.
  const std::vector<IntVec>& generator_vectors() const { return gen_vectors_; }
  std::size_t ngens() const { return n_; }

 private:
  struct Elim {
    std::size_t gen;
    std::vector<std::pair<std::size_t, BigInt>> expr;  // gen = sum c*h
  };
  void build(const std::vector<std::vector<std::pair<std::size_t, BigInt>>>& rels,
             const std::vector<std::string>& labels);

  std::size_t n_ = 0;
  std::vector<Elim> elims_;
  std::vector<std::size_t> survivors_;
  std::vector<long> survivor_pos_;
  IntMatrix U_;
  std::vector<BigInt> diag_;
  std::size_t skip_ = 0;  // unit invariant factors dropped from the output
  FGAbelianGroup group_;
  std::vector<IntVec> gen_vectors_;
};

FGAbelianGroup cokernel(const IntMatrix& m, const std::vector<std::string>& labels = {});
FGAbelianGroup fgab_from_relations(const PresentedModule& p);

// Columns form a Z-basis of ker m, in reduced echelon form.
IntMatrix kernel_basis(const IntMatrix& m);
// Rows of the result: the Hermite normal form of the row lattice of m (zero rows dropped).
IntMatrix hermite_rows(const IntMatrix& m);
// Integer solution of m*x = b, if any.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);
std::size_t rank(const IntMatrix& m);

struct KernelGroup {
  FGAbelianGroup group;
  IntMatrix basis;  // columns, in the domain basis
};

struct ConnectingResult {
  KernelGroup ker;
  FGAbelianGroup coker;
};

// Kernel and cokernel of a map between free labelled modules.
ConnectingResult connecting_solve(const IntMatrix& beta,
                                  const std::vector<std::string>& dom_labels = {},
                                  const std::vector<std::string>& cod_labels = {});

// Kernel and cokernel of a map between presented modules; the kernel comes back
// presented over a basis of its preimage lattice.
struct MapSolve {
  PresentedModule ker;  // generators are combinations of dom generators
  IntMatrix ker_embedding;  // dom.size() x ker.size()
  PresentedModule coker;
  FGAbelianGroup ker_group, coker_group;
};
MapSolve solve_map(const PresentedModule& dom, const PresentedModule& cod, const IntMatrix& f);

}  // namespace vk
