#pragma once

#include "vk/exactla.hpp"
#include "vk/polyring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vk {

struct ChainStep {
  std::string name;
  std::string citation;
  std::vector<std::string> dom_labels, cod_labels;
  IntMatrix map;  // cod x dom; empty for windowed steps
  FGAbelianGroup ker, coker;
  bool has_result = false;  // K0, K1 of the space glued at this step
  FGAbelianGroup K0, K1;
  std::string expected, observed;  // target value for this step, empty if none
  bool matches = true;
  // rank K0 - rank K1 of the glued space against the alternating corner sum
  long long euler_glued = 0, euler_corners = 0;
  std::string note;
  bool euler_ok() const { return euler_glued == euler_corners; }
};

struct KPair {
  FGAbelianGroup K0, K1;
  std::vector<ChainStep> provenance;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;

  std::string str() const;  // "(K0, K1)"
  bool all_match() const;
  bool check(const std::string& name) const;  // false when absent
  const ChainStep& step(const std::string& name) const;
};

struct WindowOptions {
  int half_width = 0;  // 0: VK_WINDOW if set, else 4k+16
  int stride = 5;
};
int default_window(int k);

// Z[a^{+-1}]/(1 - a^k), or (1 + a^k) when graded. Checks "cyclic" records
// whether some signed monomial generates the fusion ring.
KPair circle_level(int k, bool graded, const WindowOptions& w = {});
KPair su2_adjoint(int k, const WindowOptions& w = {});
KPair torus_on_su2(int k, const WindowOptions& w = {});
// K = [[k, l], [m, n]]. Throws SingularLevel.
KPair t2_level(const IntMatrix& K);
// The finite group Z^2 / <(k+l, m+n), (k, m)>.
FGAbelianGroup t2_group(const IntMatrix& K);
KPair circle_s2_orbifold(int k, int l, const WindowOptions& w = {});

// literal: the four relation families as a Z-span; cokernel_alpha: coker of the
// connecting map alpha on R_{SU2 x T}^2 + R_U, computed directly.
enum class OrbifoldPresentation { literal, cokernel_alpha };
std::string to_string(OrbifoldPresentation p);
KPair su2_s2_orbifold(int k, OrbifoldPresentation p = OrbifoldPresentation::literal, const WindowOptions& w = {});

// Strict mode throws ChainMismatch at the first step that misses its target value.
KPair d4_chain(bool strict = true);
KPair e6_orbit_chain(bool strict = true);
KPair e6_tor_pipeline();

// d * dim Ver_1(G), d = |W_G| / |W_H|. Names: A<n>, B<n>, C<n>, D<n>, E6-8, F4, G2,
// SU<n>, SO<n>, Sp<n>, T<r>; H may be a product joined by 'x'. Throws NotMaximalRank.
BigInt maximal_rank_dim(const std::string& G, const std::string& H);

}  // namespace vk
