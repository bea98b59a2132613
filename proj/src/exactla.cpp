#include "vk/exactla.hpp"

#include "vk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <cctype>

namespace vk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rs) {
  IntMatrix m;
  m.rows = rs.size();
  m.cols = rs.size() ? rs.begin()->size() : 0;
  for (const auto& r : rs) {
    if (r.size() != m.cols) throw std::invalid_argument("ragged matrix rows");
    for (long long v : r) m.data.emplace_back(v);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cs, std::size_t height) {
  IntMatrix m(height, cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].size() != height) throw std::invalid_argument("column height mismatch");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cs[j][i];
  }
  return m;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data.begin() + i * cols, data.begin() + (i + 1) * cols);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec y(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (x[j] != 0 && a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
  IntMatrix c(a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) c(i, a.cols + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("vstack column mismatch");
  IntMatrix c(a.rows + b.rows, a.cols);
  std::copy(a.data.begin(), a.data.end(), c.data.begin());
  std::copy(b.data.begin(), b.data.end(), c.data.begin() + a.data.size());
  return c;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows + b.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) c(a.rows + i, a.cols + j) = b(i, j);
  return c;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

const char* kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(const BigInt& v, const char** table) {
  std::string s = v.str(), out;
  for (char c : s) out += table[c - '0'];
  return out;
}

}  // namespace

FGAbelianGroup FGAbelianGroup::free(std::size_t n) {
  FGAbelianGroup g;
  g.free_rank = n;
  for (std::size_t i = 0; i < n; ++i) g.generators.push_back("e" + std::to_string(i));
  return g;
}

BigInt FGAbelianGroup::order() const {
  if (free_rank) return 0;
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string FGAbelianGroup::str() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string p = "Z" + digits(torsion[i], kSub);
    if (j - i > 1) p += digits(BigInt(j - i), kSup);
    parts.push_back(p);
    i = j;
  }
  if (free_rank) parts.push_back(free_rank == 1 ? "Z" : "Z" + digits(BigInt(free_rank), kSup));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "⊕" : "") + parts[i];
  return s;
}

std::string FGAbelianGroup::ascii() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string p = "Z" + torsion[i].str();
    if (j - i > 1) p += "^" + std::to_string(j - i);
    parts.push_back(p);
    i = j;
  }
  if (free_rank) parts.push_back(free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
  return s;
}

PresentedModule PresentedModule::free(std::vector<std::string> labels) {
  std::size_t n = labels.size();
  return PresentedModule(std::move(labels), IntMatrix(n, 0));
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  auto labels = a.generator_labels;
  labels.insert(labels.end(), b.generator_labels.begin(), b.generator_labels.end());
  return PresentedModule(std::move(labels), block_diag(a.relations, b.relations));
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWork {
  IntMatrix A, U, Uinv, V;
  bool track;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A(i, c), A(j, c));
    if (!track) return;
    for (std::size_t c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv(r, i), Uinv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A(r, i), A(r, j));
    if (track)
      for (std::size_t r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& q, std::size_t from) {
    for (std::size_t c = from; c < A.cols; ++c)
      if (A(j, c) != 0) A(i, c) += q * A(j, c);
    if (!track) return;
    for (std::size_t c = 0; c < U.cols; ++c)
      if (U(j, c) != 0) U(i, c) += q * U(j, c);
    for (std::size_t r = 0; r < Uinv.rows; ++r)
      if (Uinv(r, i) != 0) Uinv(r, j) -= q * Uinv(r, i);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& q, std::size_t from) {
    for (std::size_t r = from; r < A.rows; ++r)
      if (A(r, j) != 0) A(r, i) += q * A(r, j);
    if (track)
      for (std::size_t r = 0; r < V.rows; ++r)
        if (V(r, j) != 0) V(r, i) += q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols; ++c) A(i, c) = -A(i, c);
    if (!track) return;
    for (std::size_t c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv(r, i) = -Uinv(r, i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool track) {
  SmithWork w{m, {}, {}, {}, track};
  if (track) {
    w.U = IntMatrix::identity(m.rows);
    w.Uinv = IntMatrix::identity(m.rows);
    w.V = IntMatrix::identity(m.cols);
  }
  IntMatrix& A = w.A;
  std::size_t r = m.rows, c = m.cols, t = 0;
  for (; t < std::min(r, c); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t pi = r, pj = c;
    BigInt best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (A(i, j) != 0 && (pi == r || abs(A(i, j)) < best)) {
          best = abs(A(i, j));
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (A(i, t) != 0) {
          BigInt q = A(i, t) / A(t, t);
          if (q != 0) w.add_row(i, t, -q, t);
          if (A(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (A(t, j) != 0) {
          BigInt q = A(t, j) / A(t, t);
          if (q != 0) w.add_col(j, t, -q, t);
          if (A(t, j) != 0) clean = false;
        }
      if (!clean) {
        // move the smallest remainder of row/column t into the pivot
        std::size_t bi = t, bj = t;
        BigInt b = abs(A(t, t));
        for (std::size_t i = t + 1; i < r; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < b) b = abs(A(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < b) b = abs(A(t, j)), bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (A(i, j) != 0 && A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      w.add_row(t, bad, 1, t);
    }
    if (A(t, t) < 0) w.negate_row(t);
  }
  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.diag.push_back(A(i, i));
  out.D = std::move(A);
  if (track) {
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
  }
  return out;
}

std::string combination_label(const IntVec& coeffs, const std::vector<std::string>& labels) {
  std::string s;
  std::size_t nterms = 0;
  for (const auto& x : coeffs)
    if (x != 0) ++nterms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigInt& x = coeffs[i];
    if (x == 0) continue;
    std::string lab = i < labels.size() ? labels[i] : "g" + std::to_string(i);
    bool compound = lab.find_first_of("+-", 1) != std::string::npos;
    if (compound && (nterms > 1 || abs(x) != 1)) lab = "(" + lab + ")";
    std::string coef;
    if (abs(x) != 1) {
      coef = BigInt(abs(x)).str();
      if (!(std::isalpha(static_cast<unsigned char>(lab[0])) || lab[0] == '(' || lab[0] == '[')) coef += "*";
    }
    if (x < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += coef + lab;
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(std::size_t ngens,
                   const std::vector<std::vector<std::pair<std::size_t, BigInt>>>& rels,
                   std::vector<std::string> labels)
    : n_(ngens) {
  build(rels, labels);
}

Quotient::Quotient(const PresentedModule& p) : n_(p.size()) {
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rels;
  for (std::size_t j = 0; j < p.relations.cols; ++j) {
    std::vector<std::pair<std::size_t, BigInt>> r;
    for (std::size_t i = 0; i < p.relations.rows; ++i)
      if (p.relations(i, j) != 0) r.emplace_back(i, p.relations(i, j));
    rels.push_back(std::move(r));
  }
  build(rels, p.generator_labels);
}

void Quotient::build(const std::vector<std::vector<std::pair<std::size_t, BigInt>>>& input,
                     const std::vector<std::string>& labels) {
  using Row = std::map<std::size_t, BigInt>;
  std::vector<Row> rel;
  std::vector<std::set<std::size_t>> occ(n_);
  for (const auto& r : input) {
    Row row;
    for (const auto& [g, c] : r) {
      if (g >= n_) throw std::out_of_range("relation refers to unknown generator");
      row[g] += c;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (row.empty()) continue;
    for (const auto& kv : row) occ[kv.first].insert(rel.size());
    rel.push_back(std::move(row));
  }
  std::vector<char> alive_rel(rel.size(), 1), alive_gen(n_, 1);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ri = 0; ri < rel.size(); ++ri) {
      if (!alive_rel[ri]) continue;
      if (rel[ri].empty()) {
        alive_rel[ri] = 0;
        continue;
      }
      std::size_t g = n_, best = 0;
      for (const auto& [h, c] : rel[ri])
        if (abs(c) == 1 && (g == n_ || occ[h].size() < best)) g = h, best = occ[h].size();
      if (g == n_) continue;
      BigInt cg = rel[ri][g];  // +-1
      Elim e;
      e.gen = g;
      for (const auto& [h, c] : rel[ri])
        if (h != g) e.expr.emplace_back(h, -cg * c);
      std::vector<std::size_t> others(occ[g].begin(), occ[g].end());
      for (std::size_t r2 : others) {
        if (r2 == ri) continue;
        BigInt f = rel[r2][g] * cg;
        for (const auto& [h, c] : rel[ri]) {
          BigInt& slot = rel[r2][h];
          slot -= f * c;
          if (slot == 0) {
            rel[r2].erase(h);
            occ[h].erase(r2);
          } else {
            occ[h].insert(r2);
          }
        }
      }
      for (const auto& kv : rel[ri]) occ[kv.first].erase(ri);
      rel[ri].clear();
      alive_rel[ri] = 0;
      alive_gen[g] = 0;
      elims_.push_back(std::move(e));
      changed = true;
    }
  }

  survivor_pos_.assign(n_, -1);
  for (std::size_t g = 0; g < n_; ++g)
    if (alive_gen[g]) {
      survivor_pos_[g] = static_cast<long>(survivors_.size());
      survivors_.push_back(g);
    }
  std::vector<std::size_t> live;
  for (std::size_t ri = 0; ri < rel.size(); ++ri)
    if (alive_rel[ri] && !rel[ri].empty()) live.push_back(ri);
  std::size_t s = survivors_.size();
  IntMatrix dense(s, live.size());
  for (std::size_t j = 0; j < live.size(); ++j)
    for (const auto& [h, c] : rel[live[j]]) dense(static_cast<std::size_t>(survivor_pos_[h]), j) = c;

  SmithForm snf = smith_normal_form(dense, true);
  U_ = std::move(snf.U);
  diag_ = snf.diag;
  skip_ = 0;
  while (skip_ < diag_.size() && diag_[skip_] == 1) ++skip_;

  for (std::size_t i = skip_; i < diag_.size(); ++i) group_.torsion.push_back(diag_[i]);
  group_.free_rank = s - diag_.size();
  for (std::size_t i = skip_; i < s; ++i) {
    IntVec v(n_);
    for (std::size_t k = 0; k < s; ++k) v[survivors_[k]] = snf.Uinv(k, i);
    group_.generators.push_back(combination_label(v, labels));
    gen_vectors_.push_back(std::move(v));
  }
}

IntVec Quotient::coords(const IntVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("vector length does not match generator count");
  IntVec y = x;
  for (const auto& e : elims_) {
    if (y[e.gen] == 0) continue;
    BigInt c = y[e.gen];
    y[e.gen] = 0;
    for (const auto& [h, k] : e.expr) y[h] += c * k;
  }
  std::size_t s = survivors_.size();
  IntVec out;
  for (std::size_t i = skip_; i < s; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < s; ++k)
      if (U_(i, k) != 0 && y[survivors_[k]] != 0) acc += U_(i, k) * y[survivors_[k]];
    if (i < diag_.size()) {
      acc %= diag_[i];
      if (acc < 0) acc += diag_[i];
    }
    out.push_back(acc);
  }
  return out;
}

bool Quotient::is_zero(const IntVec& x) const {
  for (const auto& v : coords(x))
    if (v != 0) return false;
  return true;
}

FGAbelianGroup cokernel(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::vector<std::string> l = labels;
  if (l.empty())
    for (std::size_t i = 0; i < m.rows; ++i) l.push_back("e" + std::to_string(i));
  return Quotient(PresentedModule(l, m)).group();
}

FGAbelianGroup fgab_from_relations(const PresentedModule& p) { return Quotient(p).group(); }

// ---------------------------------------------------------------------------
// kernels and lattices

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix A = m;
  std::size_t r = A.rows, c = A.cols, p = 0;
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < c; ++k)
      if (A(j, k) != 0) A(i, k) += q * A(j, k);
  };
  for (std::size_t col = 0; col < c && p < r; ++col) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (A(i, col) != 0 && (best == r || abs(A(i, col)) < abs(A(best, col)))) best = i;
      if (best == r) break;
      if (best != p)
        for (std::size_t k = 0; k < c; ++k) std::swap(A(p, k), A(best, k));
      bool done = true;
      for (std::size_t i = p + 1; i < r; ++i)
        if (A(i, col) != 0) {
          add_row(i, p, -(A(i, col) / A(p, col)));
          if (A(i, col) != 0) done = false;
        }
      if (done) break;
    }
    if (A(p, col) == 0) continue;
    if (A(p, col) < 0)
      for (std::size_t k = 0; k < c; ++k) A(p, k) = -A(p, k);
    for (std::size_t i = 0; i < p; ++i) {
      BigInt q = A(i, col) / A(p, col);
      if (A(i, col) - q * A(p, col) < 0) q -= 1;
      if (q != 0) add_row(i, p, -q);
    }
    ++p;
  }
  IntMatrix out(p, c);
  std::copy(A.data.begin(), A.data.begin() + p * c, out.data.begin());
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  std::size_t r = m.rows, c = m.cols;
  IntMatrix A = m, V = IntMatrix::identity(c);
  std::vector<char> active(c, 1);
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& q, std::size_t from) {
    for (std::size_t k = from; k < r; ++k)
      if (A(k, j) != 0) A(k, i) += q * A(k, j);
    for (std::size_t k = 0; k < c; ++k)
      if (V(k, j) != 0) V(k, i) += q * V(k, j);
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (;;) {
      std::size_t piv = c;
      std::size_t count = 0;
      for (std::size_t j = 0; j < c; ++j)
        if (active[j] && A(i, j) != 0) {
          ++count;
          if (piv == c || abs(A(i, j)) < abs(A(i, piv))) piv = j;
        }
      if (piv == c) break;
      if (count == 1) {
        active[piv] = 0;
        break;
      }
      for (std::size_t j = 0; j < c; ++j)
        if (j != piv && active[j] && A(i, j) != 0) add_col(j, piv, -(A(i, j) / A(i, piv)), i);
    }
  }
  std::size_t nk = 0;
  for (char a : active) nk += a;
  IntMatrix K(nk, c);  // kernel vectors as rows
  std::size_t t = 0;
  for (std::size_t j = 0; j < c; ++j)
    if (active[j]) {
      for (std::size_t k = 0; k < c; ++k) K(t, k) = V(k, j);
      ++t;
    }
  return hermite_rows(K).transpose();
}

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("right-hand side length mismatch");
  SmithForm s = smith_normal_form(m, true);
  IntVec ub = s.U * b;
  IntVec y(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i < s.diag.size()) {
      if (ub[i] % s.diag[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m, false).diag.size(); }

ConnectingResult connecting_solve(const IntMatrix& beta, const std::vector<std::string>& dom_labels,
                                  const std::vector<std::string>& cod_labels) {
  ConnectingResult out;
  out.ker.basis = kernel_basis(beta);
  out.ker.group.free_rank = out.ker.basis.cols;
  for (std::size_t j = 0; j < out.ker.basis.cols; ++j)
    out.ker.group.generators.push_back(combination_label(out.ker.basis.column(j), dom_labels));
  out.coker = cokernel(beta, cod_labels);
  return out;
}

MapSolve solve_map(const PresentedModule& dom, const PresentedModule& cod, const IntMatrix& f) {
  if (f.rows != cod.size() || f.cols != dom.size())
    throw std::invalid_argument("map shape does not match presented modules");
  MapSolve out;
  out.coker = PresentedModule(cod.generator_labels, hstack(cod.relations, f));
  out.coker_group = fgab_from_relations(out.coker);

  IntMatrix K = kernel_basis(hstack(f, cod.relations));
  IntMatrix P(K.cols, dom.size());  // rows: projections to the domain part
  for (std::size_t j = 0; j < K.cols; ++j)
    for (std::size_t i = 0; i < dom.size(); ++i) P(j, i) = K(i, j);
  IntMatrix B = hermite_rows(P).transpose();  // dom.size() x m
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < B.cols; ++j) labels.push_back(combination_label(B.column(j), dom.generator_labels));
  IntMatrix C(B.cols, dom.relations.cols);
  for (std::size_t j = 0; j < dom.relations.cols; ++j) {
    auto x = solve_integer(B, dom.relations.column(j));
    if (!x) throw MathError("map is not well defined on the domain relations");
    for (std::size_t i = 0; i < B.cols; ++i) C(i, j) = (*x)[i];
  }
  out.ker = PresentedModule(labels, C);
  out.ker_embedding = B;
  out.ker_group = fgab_from_relations(out.ker);
  return out;
}

}  // namespace vk
