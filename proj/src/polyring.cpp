#include "vk/polyring.hpp"

#include "vk/errors.hpp"

#include <algorithm>
#include <optional>

namespace vk {

LaurentPoly LaurentPoly::constant(const BigInt& c, int nvars) { return monomial(0, 0, c, nvars); }

LaurentPoly LaurentPoly::monomial(int e0, int e1, const BigInt& c, int nvars) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms[{e0, nvars == 2 ? e1 : 0}] = c;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long long>& c) {
  LaurentPoly p(1);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) p.terms[{static_cast<int>(i), 0}] = c[i];
  return p;
}

int LaurentPoly::min_deg(int v) const {
  if (terms.empty()) throw std::logic_error("degree of zero polynomial");
  int m = terms.begin()->first[v];
  for (const auto& [e, c] : terms) m = std::min(m, e[v]);
  return m;
}

int LaurentPoly::max_deg(int v) const {
  if (terms.empty()) throw std::logic_error("degree of zero polynomial");
  int m = terms.begin()->first[v];
  for (const auto& [e, c] : terms) m = std::max(m, e[v]);
  return m;
}

BigInt LaurentPoly::coeff(int e0, int e1) const {
  auto it = terms.find({e0, e1});
  return it == terms.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int d0, int d1) const {
  LaurentPoly p(nvars);
  for (const auto& [e, c] : terms) p.terms[{e[0] + d0, e[1] + (nvars == 2 ? d1 : 0)}] = c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  nvars = std::max(nvars, o.nvars);
  for (const auto& [e, c] : o.terms) {
    BigInt& s = terms[e];
    s += c;
    if (s == 0) terms.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  nvars = std::max(nvars, o.nvars);
  for (const auto& [e, c] : o.terms) {
    BigInt& s = terms[e];
    s -= c;
    if (s == 0) terms.erase(e);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p(std::max(a.nvars, b.nvars));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
      BigInt& s = p.terms[e];
      s += ca * cb;
      if (s == 0) p.terms.erase(e);
    }
  return p;
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& a) { return LaurentPoly::constant(c, a.nvars) * a; }

std::string monomial_label(const Exponent& e, int nvars, const std::string& x, const std::string& y) {
  auto part = [](const std::string& v, int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return v;
    return v + "^" + std::to_string(k);
  };
  std::string s = part(x, e[0]) + (nvars == 2 ? part(y, e[1]) : "");
  return s.empty() ? "1" : s;
}

std::string LaurentPoly::str(const std::string& x, const std::string& y) const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_label(e, nvars, x, y);
    BigInt mag = abs(c);
    std::string body = mono == "1" ? mag.str() : (mag == 1 ? "" : mag.str() + "*") + mono;
    if (s.empty())
      s = (c < 0 ? "-" : "") + body;
    else
      s += (c < 0 ? " - " : " + ") + body;
  }
  return s;
}

TruncationWindow TruncationWindow::symmetric(int half_width, int nvars, int stride) {
  TruncationWindow w;
  w.nvars = nvars;
  w.lo = {-half_width, nvars == 2 ? -half_width : 0};
  w.hi = {half_width, nvars == 2 ? half_width : 0};
  w.stride = stride;
  return w;
}

void TruncationWindow::validate() const {
  if (stride < 1) throw std::invalid_argument("stabilization stride must be positive");
  for (int v = 0; v < nvars; ++v)
    if (hi[v] - lo[v] < 2 * stride) throw std::invalid_argument("truncation window narrower than twice the stride");
}

TruncationWindow TruncationWindow::enlarged() const {
  TruncationWindow w = *this;
  for (int v = 0; v < nvars; ++v) {
    w.lo[v] -= stride;
    w.hi[v] += stride;
  }
  return w;
}

std::size_t WindowPresentation::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("label outside the truncation window: " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

IntVec StabilizedQuotient::vector_of(const std::vector<std::pair<std::string, BigInt>>& combo) const {
  IntVec v(presentation.labels.size());
  for (const auto& [lab, c] : combo) v[presentation.index_of(lab)] += c;
  return v;
}

StabilizedQuotient stabilized_quotient(const PresentationBuilder& build, const TruncationWindow& w) {
  w.validate();
  StabilizedQuotient out;
  out.window = w;
  out.presentation = build(w);
  out.quotient = std::make_shared<Quotient>(out.presentation.labels.size(), out.presentation.relations,
                                            out.presentation.labels);
  WindowPresentation big = build(w.enlarged());
  Quotient q2(big.labels.size(), big.relations, big.labels);
  if (!q2.group().same_type(out.quotient->group()))
    throw StabilizationFailure("quotient changed from " + out.quotient->group().ascii() + " to " +
                               q2.group().ascii() + " when the window grew by " + std::to_string(w.stride));
  return out;
}

WindowPresentation laurent_window(const std::vector<LaurentPoly>& relations, const TruncationWindow& w) {
  WindowPresentation p;
  int n1lo = w.nvars == 2 ? w.lo[1] : 0, n1hi = w.nvars == 2 ? w.hi[1] : 0;
  int width1 = n1hi - n1lo + 1;
  auto index = [&](int e0, int e1) {
    return static_cast<std::size_t>((e0 - w.lo[0]) * width1 + (e1 - n1lo));
  };
  for (int e0 = w.lo[0]; e0 <= w.hi[0]; ++e0)
    for (int e1 = n1lo; e1 <= n1hi; ++e1) p.labels.push_back(monomial_label({e0, e1}, w.nvars));
  for (const auto& f : relations) {
    if (f.is_zero()) continue;
    int a0 = w.lo[0] - f.min_deg(0), b0 = w.hi[0] - f.max_deg(0);
    int a1 = 0, b1 = 0;
    if (w.nvars == 2) a1 = n1lo - f.min_deg(1), b1 = n1hi - f.max_deg(1);
    for (int d0 = a0; d0 <= b0; ++d0)
      for (int d1 = a1; d1 <= b1; ++d1) {
        SparseRelation r;
        for (const auto& [e, c] : f.terms) r.emplace_back(index(e[0] + d0, e[1] + d1), c);
        p.relations.push_back(std::move(r));
      }
  }
  return p;
}

StabilizedQuotient truncated_quotient_full(const std::vector<LaurentPoly>& relations, const TruncationWindow& w) {
  return stabilized_quotient([&](const TruncationWindow& win) { return laurent_window(relations, win); }, w);
}

FGAbelianGroup truncated_quotient(const std::vector<LaurentPoly>& relations, const TruncationWindow& w) {
  return truncated_quotient_full(relations, w).group();
}

// ---------------------------------------------------------------------------
// coprimality in Z[s]

namespace {

IntVec dense_coeffs(const LaurentPoly& f, int len) {
  IntVec v(len);
  for (const auto& [e, c] : f.terms) {
    if (e[0] < 0 || e[0] >= len) throw std::invalid_argument("polynomial outside the coefficient window");
    v[e[0]] = c;
  }
  return v;
}

void require_ordinary(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.nvars != 1 || f.min_deg(0) < 0) throw std::invalid_argument("expected an ordinary one-variable polynomial");
}

// Division by a polynomial with unit leading coefficient.
void divmod_monic(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
  int db = b.max_deg(0);
  BigInt lead = b.coeff(db);
  q = LaurentPoly(1);
  r = a;
  while (!r.is_zero() && r.max_deg(0) >= db) {
    int dr = r.max_deg(0);
    BigInt c = r.coeff(dr) * lead;  // lead is +-1
    LaurentPoly t = LaurentPoly::monomial(dr - db, 0, c);
    q += t;
    r -= t * b;
  }
}

}  // namespace

BigInt resultant(const LaurentPoly& f, const LaurentPoly& g) {
  require_ordinary(f);
  require_ordinary(g);
  int m = f.max_deg(0), n = g.max_deg(0);
  IntMatrix s(m + n, m + n);
  if (m + n == 0) return 1;
  for (int i = 0; i < n; ++i)
    for (const auto& [e, c] : f.terms) s(m + n - 1 - (e[0] + i), i) = c;
  for (int j = 0; j < m; ++j)
    for (const auto& [e, c] : g.terms) s(m + n - 1 - (e[0] + j), n + j) = c;
  return determinant(s);
}

CoprimeCertificate coprime_certificate(const LaurentPoly& f, const LaurentPoly& g) {
  require_ordinary(f);
  require_ordinary(g);
  CoprimeCertificate out;
  int df = f.max_deg(0), dg = g.max_deg(0);
  int bound = df + dg + 8;
  int du = bound - df, dw = bound - dg;
  std::vector<IntVec> cols;
  for (int i = 0; i <= du; ++i) cols.push_back(dense_coeffs(f.shifted(i), bound + 1));
  for (int j = 0; j <= dw; ++j) cols.push_back(dense_coeffs(g.shifted(j), bound + 1));
  IntMatrix m = IntMatrix::from_columns(cols, bound + 1);
  IntVec e0(bound + 1);
  e0[0] = 1;
  out.resultant = resultant(f, g);
  if (auto x = solve_integer(m, e0)) {
    LaurentPoly u(1), w(1);
    for (int i = 0; i <= du; ++i)
      if ((*x)[i] != 0) u.terms[{i, 0}] = (*x)[i];
    for (int j = 0; j <= dw; ++j)
      if ((*x)[du + 1 + j] != 0) w.terms[{j, 0}] = (*x)[du + 1 + j];
    // shorten the witness when g has a unit leading coefficient
    if (abs(g.coeff(dg)) == 1) {
      LaurentPoly q, r;
      divmod_monic(u, g, q, r);
      LaurentPoly rest = LaurentPoly::constant(1) - r * f, wq, wr;
      divmod_monic(rest, g, wq, wr);
      if (wr.is_zero()) u = r, w = wq;
    }
    if (!((u * f + w * g) == LaurentPoly::constant(1))) throw MathError("coprimality witness failed to verify");
    out.coprime = true;
    out.u = u;
    out.w = w;
    out.reason = "explicit witness u*f + w*g = 1";
    return out;
  }
  if (out.resultant == 0) {
    out.reason = "resultant vanishes: common factor over Q";
    return out;
  }
  bool unit_lead = abs(f.coeff(df)) == 1 || abs(g.coeff(dg)) == 1;
  if (unit_lead && abs(out.resultant) != 1) {
    out.reason = "resultant " + out.resultant.str() + " is not a unit: common root modulo a prime divisor";
    return out;
  }
  throw Inconclusive("degree window " + std::to_string(bound) + " certifies neither outcome");
}

// ---------------------------------------------------------------------------
// the Tor computation

namespace {

const LaurentPoly& poly_a() {  // restriction of the vector representation, s^4 - 3 s^2 + 1
  static const LaurentPoly p = LaurentPoly::from_coeffs({1, 0, -3, 0, 1});
  return p;
}
const LaurentPoly& poly_b() {  // s^3 (s^2 - 3)
  static const LaurentPoly p = LaurentPoly::from_coeffs({0, 0, 0, -3, 0, 1});
  return p;
}
const LaurentPoly& poly_c() {  // s^2 - 2
  static const LaurentPoly p = LaurentPoly::from_coeffs({-2, 0, 1});
  return p;
}

std::string power_label(int i) { return monomial_label({i, 0}, 1, "s"); }

WindowPresentation h0_window(int d) {
  WindowPresentation p;
  for (int i = 0; i <= d; ++i) p.labels.push_back(power_label(i));
  LaurentPoly ca = poly_c() * poly_a(), cb = poly_c() * poly_b();
  for (const LaurentPoly* f : {&ca, &cb}) {
    for (int i = 0; i + f->max_deg(0) <= d; ++i) {
      SparseRelation r;
      for (const auto& [e, c] : f->terms) r.emplace_back(static_cast<std::size_t>(e[0] + i), c);
      p.relations.push_back(std::move(r));
    }
  }
  return p;
}

struct H1Window {
  IntMatrix kernel;  // columns: basis of ker d1 in the (p, q) coordinates
  std::unique_ptr<Quotient> quotient;
  int dp = 0, dq = 0;
};

// (p, q) coordinates: p coefficients 0..dp, then q coefficients 0..dq
IntVec pair_vector(const LaurentPoly& p, const LaurentPoly& q, int dp, int dq) {
  IntVec v(dp + dq + 2);
  for (const auto& [e, c] : p.terms) v.at(e[0]) = c;
  for (const auto& [e, c] : q.terms) v.at(dp + 1 + e[0]) = c;
  return v;
}

H1Window h1_window(int d) {
  H1Window h;
  LaurentPoly ca = poly_c() * poly_a(), cb = poly_c() * poly_b();
  h.dp = d - ca.max_deg(0);
  h.dq = d - cb.max_deg(0);
  std::vector<IntVec> cols;
  for (int i = 0; i <= h.dp; ++i) cols.push_back(dense_coeffs(ca.shifted(i), d + 1));
  for (int j = 0; j <= h.dq; ++j) cols.push_back(dense_coeffs(cb.shifted(j), d + 1));
  IntMatrix d1 = IntMatrix::from_columns(cols, d + 1);
  h.kernel = kernel_basis(d1);
  // image of d2: t -> (c*b*t, -c*a*t)
  int dt = std::min(h.dp - cb.max_deg(0), h.dq - ca.max_deg(0));
  std::vector<SparseRelation> rels;
  for (int t = 0; t <= dt; ++t) {
    IntVec v = pair_vector((cb).shifted(t), (LaurentPoly::constant(-1) * ca).shifted(t), h.dp, h.dq);
    auto c = solve_integer(h.kernel, v);
    if (!c) throw MathError("boundary not contained in the cycles");
    SparseRelation r;
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i] != 0) r.emplace_back(i, (*c)[i]);
    rels.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < h.kernel.cols; ++j) labels.push_back("z" + std::to_string(j));
  h.quotient = std::make_unique<Quotient>(h.kernel.cols, rels, labels);
  return h;
}

// Coordinates of x over a two-element basis of a rank-2 free group, if it is one.
std::optional<IntVec> over_basis(const IntVec& b1, const IntVec& b2, const IntVec& x) {
  IntMatrix m = IntMatrix::from_columns({b1, b2}, b1.size());
  if (m.rows != 2 || abs(determinant(m)) != 1) return std::nullopt;
  return solve_integer(m, x);
}

}  // namespace

TorResult e6_tor(int degree_window, int stride) {
  TorResult out;
  out.degree_window = degree_window;
  out.certificate = coprime_certificate(poly_a(), poly_b());

  TruncationWindow w;
  w.lo = {0, 0};
  w.hi = {degree_window, 0};
  w.stride = stride;
  auto h0 = stabilized_quotient(
      [](const TruncationWindow& win) { return h0_window(win.hi[0]); }, w);
  out.H0 = h0.group();
  const Quotient& q0 = *h0.quotient;
  auto at = [&](const LaurentPoly& p) {
    IntVec v(degree_window + 1);
    for (const auto& [e, c] : p.terms) v.at(e[0]) = c;
    return q0.coords(v);
  };
  IntVec one = at(LaurentPoly::constant(1)), s = at(LaurentPoly::monomial(1));
  if (out.H0.is_free() && out.H0.free_rank == 2) {
    out.h0_basis_is_1_s = over_basis(one, s, one).has_value();
    IntVec s2 = at(LaurentPoly::monomial(2));
    IntVec two_one = one;
    for (auto& x : two_one) x *= 2;
    out.s_squared_is_two = s2 == two_one;
    // spinor restricts to s^3 - 2s, vector to s^4 - 3s^2 + 1
    if (out.h0_basis_is_1_s) {
      out.image_spinor = *over_basis(one, s, at(LaurentPoly::from_coeffs({0, -2, 0, 1})));
      out.image_vector = *over_basis(one, s, at(poly_a()));
    }
  }
  out.H0_presentation = PresentedModule::free({"1", "s"});

  H1Window a = h1_window(degree_window), b = h1_window(degree_window + stride);
  if (!a.quotient->group().same_type(b.quotient->group()))
    throw StabilizationFailure("H1 changed from " + a.quotient->group().ascii() + " to " +
                               b.quotient->group().ascii());
  out.H1 = a.quotient->group();
  // the cycles (b*t, -a*t) for t = 1, s should give a basis
  auto cyc = [&](int t) {
    IntVec v = pair_vector(poly_b().shifted(t), (LaurentPoly::constant(-1) * poly_a()).shifted(t), a.dp, a.dq);
    auto c = solve_integer(a.kernel, v);
    if (!c) throw MathError("expected cycle not in the kernel");
    return a.quotient->coords(*c);
  };
  if (out.H1.is_free() && out.H1.free_rank == 2) {
    IntVec c0 = cyc(0), c1 = cyc(1), c2 = cyc(2);
    IntVec two = c0;
    for (auto& x : two) x *= 2;
    out.h1_rank_two = over_basis(c0, c1, c0).has_value() && c2 == two;
  }
  out.H1_presentation = PresentedModule::free({"(b,-a)", "s(b,-a)"});
  return out;
}

}  // namespace vk
