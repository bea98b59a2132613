#pragma once

#include "vk/exactla.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vk {

using Exponent = std::array<int, 2>;

// Laurent polynomial over Z in one or two variables.
struct LaurentPoly {
  int nvars = 1;
  std::map<Exponent, BigInt> terms;  // no zero coefficients

  LaurentPoly() = default;
  explicit LaurentPoly(int nv) : nvars(nv) {}
  static LaurentPoly constant(const BigInt& c, int nvars = 1);
  static LaurentPoly monomial(int e0, int e1 = 0, const BigInt& c = 1, int nvars = 1);
  // Ordinary one-variable polynomial from coefficients, low degree first.
  static LaurentPoly from_coeffs(const std::vector<long long>& c);

  bool is_zero() const { return terms.empty(); }
  int min_deg(int v) const;
  int max_deg(int v) const;
  BigInt coeff(int e0, int e1 = 0) const;
  LaurentPoly shifted(int d0, int d1 = 0) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const BigInt& c, const LaurentPoly& a);
  bool operator==(const LaurentPoly& o) const { return nvars == o.nvars && terms == o.terms; }

  std::string str(const std::string& x = "a", const std::string& y = "b") const;
};

struct TruncationWindow {
  int nvars = 1;
  Exponent lo{0, 0}, hi{0, 0};
  int stride = 5;

  static TruncationWindow symmetric(int half_width, int nvars = 1, int stride = 5);
  void validate() const;  // hi - lo >= 2 * stride per variable
  TruncationWindow enlarged() const;
};

using SparseRelation = std::vector<std::pair<std::size_t, BigInt>>;

// Finite piece of an infinite presentation, produced for a given window.
struct WindowPresentation {
  std::vector<std::string> labels;
  std::vector<SparseRelation> relations;
  std::size_t index_of(const std::string& label) const;
};

using PresentationBuilder = std::function<WindowPresentation(const TruncationWindow&)>;

struct StabilizedQuotient {
  TruncationWindow window;
  WindowPresentation presentation;
  std::shared_ptr<Quotient> quotient;
  const FGAbelianGroup& group() const { return quotient->group(); }
  IntVec vector_of(const std::vector<std::pair<std::string, BigInt>>& combo) const;
};

// Computes the quotient on W and on W enlarged by the stride; throws
// StabilizationFailure unless the invariant factors agree.
StabilizedQuotient stabilized_quotient(const PresentationBuilder& build, const TruncationWindow& w);

// Monomial labels "1", "a", "a^-2", "a^3b^-1", ...
std::string monomial_label(const Exponent& e, int nvars, const std::string& x = "a", const std::string& y = "b");

// Z[a^{+-1}(,b^{+-1})]/(relations) realized on the window box.
WindowPresentation laurent_window(const std::vector<LaurentPoly>& relations, const TruncationWindow& w);
FGAbelianGroup truncated_quotient(const std::vector<LaurentPoly>& relations, const TruncationWindow& w);
StabilizedQuotient truncated_quotient_full(const std::vector<LaurentPoly>& relations, const TruncationWindow& w);

struct CoprimeCertificate {
  bool coprime = false;
  LaurentPoly u, w;  // u*f + w*g = 1 when coprime
  BigInt resultant;
  std::string reason;
};

BigInt resultant(const LaurentPoly& f, const LaurentPoly& g);
// Decides (f, g) = (1) in Z[s]; throws Inconclusive when neither side can be certified.
CoprimeCertificate coprime_certificate(const LaurentPoly& f, const LaurentPoly& g);

struct TorResult {
  FGAbelianGroup H0, H1;
  PresentedModule H0_presentation, H1_presentation;  // over the basis {1, s}, relation s^2 = 2
  CoprimeCertificate certificate;
  bool h0_basis_is_1_s = false;
  bool h1_rank_two = false;
  bool s_squared_is_two = false;
  IntVec image_spinor, image_vector;  // coordinates over {1, s} in H0
  int degree_window = 0;
};

// Tor of the Sp(4) level-1 Verlinde algebra against R_SU2 via the length-two free resolution.
TorResult e6_tor(int degree_window = 30, int stride = 5);

}  // namespace vk
