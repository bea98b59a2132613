#pragma once

#include "vk/cyclo.hpp"
#include "vk/exactla.hpp"

#include <string>
#include <vector>

namespace vk {

using CycMatrix = std::vector<std::vector<CycNumber>>;

CycMatrix cyc_multiply(const CycMatrix& a, const CycMatrix& b);
CycMatrix cyc_conj_transpose(const CycMatrix& a);
CycMatrix cyc_identity(std::size_t n);
bool cyc_equal(const CycMatrix& a, const CycMatrix& b);

struct ModularData {
  std::vector<std::string> labels;
  CycMatrix S;
  std::vector<CycNumber> T;  // diagonal

  std::size_t size() const { return labels.size(); }
  CycMatrix T_matrix() const;
};

struct ModularCheck {
  bool symmetric = false, unitary = false, st_cubed = false, charge_conjugation = false;
  bool ok() const { return symmetric && unitary && st_cubed && charge_conjugation; }
  std::string failures() const;
};

ModularCheck check_modular(const ModularData& d);

// Structure constants N_{ab}^c, label 0 is the unit.
struct FusionRing {
  std::vector<std::string> labels;
  std::vector<long long> N;  // index (a*n + b)*n + c

  std::size_t size() const { return labels.size(); }
  long long operator()(std::size_t a, std::size_t b, std::size_t c) const {
    std::size_t n = size();
    return N[(a * n + b) * n + c];
  }
  long long& at(std::size_t a, std::size_t b, std::size_t c) {
    std::size_t n = size();
    return N[(a * n + b) * n + c];
  }
  IntMatrix matrix(std::size_t a) const;  // (N_a)_{bc} = N_{ab}^c
  IntVec product(std::size_t a, std::size_t b) const;
  std::string product_str(std::size_t a, std::size_t b) const;
  std::size_t index_of(const std::string& label) const;
  bool associative() const;
  bool commutative() const;
  bool unit_normalized() const;
  bool operator==(const FusionRing& o) const { return labels == o.labels && N == o.N; }
};

FusionRing make_fusion_ring(std::vector<std::string> labels);

ModularData su2_modular_data(int k);
// Throws NonIntegralFusion when some N is not a nonnegative integer.
FusionRing verlinde_matrices(const ModularData& d);
FusionRing su2_fusion_truncated(int k);

// Fusion group L*/tau(L); throws SingularLevel when det tau = 0.
FGAbelianGroup torus_fusion(const IntMatrix& tau);

// Abelian group of a fusion ring in which every product is a single label.
FGAbelianGroup fusion_group(const FusionRing& r);

struct AbelianDouble {
  std::vector<int> orders;  // G = prod Z/orders[i]
  ModularData data;
  FusionRing ring;
  FGAbelianGroup group;
};

AbelianDouble double_abelian(const std::vector<int>& orders);
// Double of a named finite subgroup of SU(2); throws NonAbelian unless it is abelian.
AbelianDouble double_of_group(const std::string& name);

struct TwistedDouble {
  int n = 0, sigma = 0;
  FusionRing ring;
  FGAbelianGroup group;
};

// D^w(Z_n) with the cocycle w(a,b,c) = exp(2 pi i sigma a (b + c - [b+c]) / n^2), 1 <= sigma <= n.
TwistedDouble double_cyclic_twisted(int n, int sigma);
// Z_d x Z_{n^2/d} with d = gcd(2n, sigma); throws InvalidTwist when d does not divide n^2.
FGAbelianGroup gcd_formula_group(int n, int sigma);

struct LevelOne {
  ModularData data;
  FusionRing ring;
};

LevelOne level1_data(const std::string& group);  // "SU3" or "Sp4"

}  // namespace vk
