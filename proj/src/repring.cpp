#include "vk/repring.hpp"

#include "vk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

namespace vk {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string Quaternion::str() const {
  return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

namespace {

struct Approx {
  double w, x, y, z;
};

Approx approx(const Quaternion& q) { return {q.w.approx_re(), q.x.approx_re(), q.y.approx_re(), q.z.approx_re()}; }

std::string key_of(const Approx& a) {
  auto r = [](double v) { return std::to_string(std::llround(v * 1e6)); };
  return r(a.w) + "," + r(a.x) + "," + r(a.y) + "," + r(a.z);
}

Approx mul(const Approx& a, const Approx& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

CycNumber half(const CycNumber& c) { return c / CycNumber(2); }

// e^{2 pi i / m} as the quaternion cos + i sin.
Quaternion rotation(int m) {
  CycNumber z = CycNumber::zeta(m), zi = CycNumber::zeta(m, -1);
  CycNumber c = half(z + zi), s = (z - zi) / (CycNumber(2) * CycNumber::zeta(4));
  return {c.normalized(), s.normalized(), CycNumber(0), CycNumber(0)};
}

Quaternion quat(CycNumber w, CycNumber x, CycNumber y, CycNumber z) { return {w, x, y, z}; }

}  // namespace

std::size_t QuaternionGroup::find(const Quaternion& q) const {
  auto it = lookup.find(key_of(approx(q)));
  if (it == lookup.end() || !(elements[it->second] == q)) return size();
  return it->second;
}

QuaternionGroup generate_group(const std::string& name, const std::vector<Quaternion>& gens) {
  QuaternionGroup g;
  g.name = name;
  g.elements.push_back(Quaternion::one());
  g.lookup[key_of(approx(g.elements[0]))] = 0;
  auto add = [&](const Quaternion& q) {
    std::string k = key_of(approx(q));
    auto it = g.lookup.find(k);
    if (it != g.lookup.end()) return it->second;
    g.elements.push_back(q);
    g.lookup[k] = g.elements.size() - 1;
    return g.elements.size() - 1;
  };
  for (const auto& q : gens) g.generators.push_back(add(q));
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (g.elements.size() > 10000) throw std::invalid_argument("generators do not span a finite group");
    for (const auto& q : gens) add(g.elements[i] * q);
  }
  std::size_t n = g.size();
  std::vector<Approx> ap(n);
  for (std::size_t i = 0; i < n; ++i) ap[i] = approx(g.elements[i]);
  g.mul.assign(n, std::vector<std::size_t>(n));
  g.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = g.lookup.find(key_of(mul(ap[i], ap[j])));
      if (it == g.lookup.end()) throw std::logic_error("group closure incomplete in " + name);
      g.mul[i][j] = it->second;
      if (it->second == 0) g.inv[i] = j;
    }
  g.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1, p = i;
    while (p != 0) p = g.mul[p][i], ++k;
    g.order[i] = k;
    g.exponent = std::lcm(g.exponent, static_cast<int>(k));
  }
  g.class_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.class_of[i] != n) continue;
    std::size_t c = g.class_reps.size(), size = 0;
    g.class_reps.push_back(i);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = g.mul[g.mul[x][i]][g.inv[x]];
      if (g.class_of[y] == n) g.class_of[y] = c, ++size;
    }
    g.class_sizes.push_back(size);
  }
  for (std::size_t r : g.class_reps) g.rho.push_back((CycNumber(2) * g.elements[r].w).normalized());
  return g;
}

QuaternionGroup cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  return generate_group("A" + std::to_string(m - 1), {rotation(m)});
}

QuaternionGroup binary_dihedral_group(int m) {
  if (m < 2) throw std::invalid_argument("binary dihedral parameter must be at least 2");
  Quaternion j = quat(0, 0, 1, 0);
  return generate_group("D" + std::to_string(m + 2), {rotation(2 * m), j});
}

QuaternionGroup binary_polyhedral_group(int n) {
  CycNumber h(BigRat(1, 2));
  Quaternion i = quat(0, 1, 0, 0), j = quat(0, 0, 1, 0), h6 = quat(h, h, h, h);
  if (n == 6) return generate_group("E6", {i, j, h6});
  if (n == 7) {
    CycNumber r = half(CycNumber::sqrt_int(2));
    return generate_group("E7", {i, h6, quat(r, r, 0, 0)});
  }
  if (n == 8) {
    CycNumber phi = half(CycNumber(1) + CycNumber::sqrt_int(5));
    return generate_group("E8", {i, h6, quat(half(phi), h, half(phi - CycNumber(1)), 0)});
  }
  throw std::invalid_argument("binary polyhedral groups are E6, E7, E8");
}

// ---------------------------------------------------------------------------
// characters

BigRat inner_product(const QuaternionGroup& g, const ClassFunction& a, const ClassFunction& b) {
  CycNumber s;
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    s += CycNumber(static_cast<long long>(g.class_sizes[c])) * a[c] * b[c].conj();
  if (!s.is_rational()) throw OrthogonalityFailure("inner product is not rational in " + g.name);
  return s.to_rational() / BigRat(static_cast<long long>(g.size()));
}

namespace {

ClassFunction cf_mul(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * b[i]).normalized();
  return r;
}

ClassFunction cf_galois(const ClassFunction& a, int e) {
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].galois(e);
  return r;
}

bool cf_equal(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

BigInt integral(const BigRat& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1) throw OrthogonalityFailure(what + " is not an integer");
  return boost::multiprecision::numerator(r);
}

// Homomorphisms G -> Z/L (L the exponent), as exponent tables over elements.
std::vector<std::vector<int>> linear_characters(const QuaternionGroup& g, int modulus) {
  std::size_t n = g.size(), ng = g.generators.size();
  // BFS spanning tree over the generators
  std::vector<std::pair<std::size_t, std::size_t>> parent(n, {n, 0});
  std::vector<std::size_t> bfs{0};
  parent[0] = {0, 0};
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (std::size_t k = 0; k < ng; ++k) {
      std::size_t y = g.mul[bfs[h]][g.generators[k]];
      if (parent[y].first == n) parent[y] = {bfs[h], k}, bfs.push_back(y);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> choice(ng, 0);
  std::vector<int> step(ng);
  for (std::size_t k = 0; k < ng; ++k) step[k] = modulus / static_cast<int>(g.order[g.generators[k]]);
  while (true) {
    std::vector<int> val(n, 0);
    for (std::size_t h = 1; h < bfs.size(); ++h) {
      auto [p, k] = parent[bfs[h]];
      val[bfs[h]] = (val[p] + choice[k] * step[k]) % modulus;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t k = 0; k < ng && ok; ++k)
        if (val[g.mul[x][g.generators[k]]] != (val[x] + choice[k] * step[k]) % modulus) ok = false;
    if (ok) out.push_back(val);
    std::size_t k = 0;
    while (k < ng && ++choice[k] == static_cast<int>(g.order[g.generators[k]])) choice[k++] = 0;
    if (k == ng) break;
  }
  return out;
}

std::string dim_label(int d, int k) { return std::to_string(d) + static_cast<char>('a' + k); }

// Value of a character at a given element.
const CycNumber& at(const CharacterTable& t, std::size_t irrep, std::size_t elem) {
  return t.chars[irrep][t.group->class_of[elem]];
}

void assign_labels(CharacterTable& t) {
  const QuaternionGroup& g = *t.group;
  const std::string& nm = g.name;
  std::size_t n = t.size();
  t.labels.assign(n, "");
  auto gen = [&](std::size_t k) { return g.generators[k]; };
  auto is = [](const CycNumber& v, const CycNumber& w) { return v == w; };
  CycNumber I = CycNumber::zeta(4), w = CycNumber::zeta(3);
  if (nm == "A1" || nm == "A3" || nm == "A5") {
    int m = static_cast<int>(g.size());
    std::map<int, std::string> names;
    if (m == 2) names = {{0, "r''_1"}, {1, "r''_-1"}};
    if (m == 4) names = {{0, "r'_1"}, {2, "r'_-1"}, {1, "r'_i"}, {3, "r'_-i"}};
    // generator is e^{i pi/3}: omega = z^2, -omega = z^5, omega^2 = z^4, -omega^2 = z
    if (m == 6) names = {{0, "r_1"}, {3, "r_-1"}, {2, "r_w"}, {5, "r_-w"}, {4, "r_w2"}, {1, "r_-w2"}};
    for (std::size_t r = 0; r < n; ++r)
      for (auto& [e, lab] : names)
        if (is(at(t, r, gen(0)), CycNumber::zeta(m, e))) t.labels[r] = lab;
  } else if (nm == "D4") {
    for (std::size_t r = 0; r < n; ++r) {
      if (t.dims[r] == 2) {
        t.labels[r] = "t";
        continue;
      }
      int idx = (is(at(t, r, gen(0)), CycNumber(-1)) ? 1 : 0) + (is(at(t, r, gen(1)), CycNumber(-1)) ? 2 : 0);
      t.labels[r] = "s" + std::to_string(idx);
    }
  } else if (nm == "D5") {
    for (std::size_t r = 0; r < n; ++r) {
      const CycNumber &a = at(t, r, gen(0)), &b = at(t, r, gen(1));
      if (t.dims[r] == 2)
        t.labels[r] = is(at(t, r, g.find(quat(-1, 0, 0, 0))), CycNumber(-2)) ? "t'" : "t''";
      else if (is(a, CycNumber(1)))
        t.labels[r] = is(b, CycNumber(1)) ? "s'0" : "s'1";
      else
        t.labels[r] = is(b, I) ? "s'2" : "s'3";
    }
  } else if (nm == "E6") {
    // x' and y' take the value omega^2 (times the trivial value) at h6
    for (std::size_t r = 0; r < n; ++r) {
      const CycNumber& h = at(t, r, gen(2));
      std::string base = t.dims[r] == 1 ? "x" : t.dims[r] == 2 ? "y" : "z";
      if (t.dims[r] == 3 || is(h, CycNumber(1)))
        t.labels[r] = base;
      else
        t.labels[r] = base + (is(h, w * w) ? "'" : "''");
    }
  }
  if (nm.rfind("C", 0) == 0) {
    int m = static_cast<int>(g.size());
    for (std::size_t r = 0; r < n; ++r)
      for (int e = 0; e < m; ++e)
        if (is(at(t, r, gen(0)), CycNumber::zeta(m, e))) t.labels[r] = "c" + std::to_string(e);
  }
  std::map<int, int> seen;
  for (std::size_t r = 0; r < n; ++r)
    if (t.labels[r].empty()) t.labels[r] = dim_label(t.dims[r], seen[t.dims[r]]++);
  std::set<std::string> uniq(t.labels.begin(), t.labels.end());
  if (uniq.size() != n) throw OrthogonalityFailure("irrep labels are not distinct in " + nm);
}

std::vector<std::string> table_order(const std::string& nm) {
  if (nm == "A1") return {"r''_1", "r''_-1"};
  if (nm == "A3") return {"r'_1", "r'_-1", "r'_i", "r'_-i"};
  if (nm == "A5") return {"r_1", "r_-1", "r_w", "r_-w", "r_w2", "r_-w2"};
  if (nm == "D4") return {"s0", "s1", "s2", "s3", "t"};
  if (nm == "D5") return {"s'0", "s'1", "s'2", "s'3", "t'", "t''"};
  if (nm == "E6") return {"x", "x'", "x''", "y", "y'", "y''", "z"};
  return {};
}

}  // namespace

CharacterTable compute_character_table(std::shared_ptr<const QuaternionGroup> gp) {
  const QuaternionGroup& g = *gp;
  CharacterTable t;
  t.group = gp;
  int L = g.exponent;
  for (const auto& val : linear_characters(g, L)) {
    ClassFunction c;
    for (std::size_t r : g.class_reps) c.push_back(CycNumber::zeta(L, val[r]).normalized());
    t.chars.push_back(c);
  }
  auto total = [&] {
    BigInt s = 0;
    for (const auto& c : t.chars) {
      BigInt d = boost::multiprecision::numerator(c[0].to_rational());
      s += d * d;
    }
    return s;
  };
  auto try_add = [&](const ClassFunction& cand) {
    ClassFunction rem = cand;
    for (const auto& c : t.chars) {
      BigRat m = inner_product(g, cand, c);
      if (m == 0) continue;
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = (rem[i] - CycNumber(m) * c[i]).normalized();
    }
    BigRat nrm = inner_product(g, rem, rem);
    if (nrm != 1) return false;
    if (rem[0].to_rational() < 0)
      for (auto& v : rem) v = -v;
    t.chars.push_back(rem);
    return true;
  };
  std::vector<int> units;
  for (int a = 2; a < L; ++a)
    if (std::gcd(a, L) == 1) units.push_back(a);
  while (total() < BigInt(static_cast<long long>(g.size()))) {
    bool progress = false;
    std::vector<ClassFunction> pool{g.rho};
    for (const auto& c : t.chars) pool.push_back(c);
    for (std::size_t a = 0; a < pool.size() && !progress; ++a)
      for (std::size_t b = 0; b < t.chars.size() && !progress; ++b) {
        ClassFunction p = cf_mul(pool[a], t.chars[b]);
        if (try_add(p)) progress = true;
        for (int u : units) {
          if (progress) break;
          if (try_add(cf_galois(p, u))) progress = true;
        }
      }
    if (!progress) throw OrthogonalityFailure("character peeling stalled for " + g.name);
  }
  std::stable_sort(t.chars.begin(), t.chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
    return a[0].to_rational() < b[0].to_rational();
  });
  for (const auto& c : t.chars) t.dims.push_back(static_cast<int>(boost::multiprecision::numerator(c[0].to_rational())));
  assign_labels(t);
  auto order = table_order(g.name);
  if (!order.empty()) {
    std::vector<std::size_t> perm;
    for (const auto& lab : order) perm.push_back(t.index_of(lab));
    CharacterTable s = t;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      s.labels[i] = t.labels[perm[i]];
      s.chars[i] = t.chars[perm[i]];
      s.dims[i] = t.dims[perm[i]];
    }
    t = s;
  }
  verify_orthogonality(t);
  return t;
}

std::size_t CharacterTable::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("no irrep " + label + " in " + name());
  return static_cast<std::size_t>(it - labels.begin());
}

void verify_orthogonality(const CharacterTable& t) {
  const QuaternionGroup& g = *t.group;
  std::size_t n = t.size();
  if (n != g.num_classes()) throw OrthogonalityFailure("table of " + g.name + " is not square");
  BigInt sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sq += t.dims[i] * t.dims[i];
    for (std::size_t j = 0; j < n; ++j)
      if (inner_product(g, t.chars[i], t.chars[j]) != (i == j ? 1 : 0))
        throw OrthogonalityFailure("row relation fails for " + t.labels[i] + ", " + t.labels[j]);
  }
  if (sq != static_cast<long long>(g.size())) throw OrthogonalityFailure("sum of squared dimensions differs from |G|");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      CycNumber s;
      for (std::size_t i = 0; i < n; ++i) s += t.chars[i][a] * t.chars[i][b].conj();
      CycNumber expect = a == b ? CycNumber(BigRat(static_cast<long long>(g.size()),
                                                    static_cast<long long>(g.class_sizes[a])))
                                : CycNumber(0);
      if (!(s == expect)) throw OrthogonalityFailure("column relation fails in " + g.name);
    }
}

namespace {

std::mutex cache_mu;
std::map<std::string, TablePtr> cache;

std::shared_ptr<QuaternionGroup> build_named(const std::string& nm) {
  auto num = [&](std::size_t from) { return std::stoi(nm.substr(from)); };
  try {
    if (nm == "E6" || nm == "E7" || nm == "E8") return std::make_shared<QuaternionGroup>(binary_polyhedral_group(nm[1] - '0'));
    if (nm.rfind("BD", 0) == 0) {
      auto g = std::make_shared<QuaternionGroup>(binary_dihedral_group(num(2)));
      g->name = nm;
      return g;
    }
    if (nm[0] == 'A') return std::make_shared<QuaternionGroup>(cyclic_group(num(1) + 1));
    if (nm[0] == 'C') {
      auto g = std::make_shared<QuaternionGroup>(cyclic_group(num(1)));
      g->name = nm;
      return g;
    }
    if (nm[0] == 'D' && num(1) >= 4) return std::make_shared<QuaternionGroup>(binary_dihedral_group(num(1) - 2));
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unknown group name " + nm);
}

}  // namespace

TablePtr character_table(const std::string& name) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<const CharacterTable>(compute_character_table(build_named(name)));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(name, t).first->second;
}

const QuaternionGroup& quaternion_group(const std::string& name) { return *character_table(name)->group; }

// ---------------------------------------------------------------------------
// virtual representations

VirtualRep VirtualRep::irrep(TablePtr t, const std::string& label) {
  VirtualRep r = zero(t);
  r.coeffs[t->index_of(label)] = 1;
  return r;
}

VirtualRep VirtualRep::zero(TablePtr t) {
  VirtualRep r;
  r.coeffs.assign(t->size(), 0);
  r.table = std::move(t);
  return r;
}

ClassFunction VirtualRep::character() const {
  ClassFunction c(table->group->num_classes());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += CycNumber(coeffs[i]) * table->chars[i][k];
  }
  return c;
}

BigInt VirtualRep::dimension() const {
  BigInt d = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) d += coeffs[i] * table->dims[i];
  return d;
}

std::string VirtualRep::str() const { return combination_label(coeffs, table->labels); }

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (table != o.table) throw GroupMismatch(table->name() + " vs " + o.table->name());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

VirtualRep operator-(VirtualRep a, const VirtualRep& b) {
  if (a.table != b.table) throw GroupMismatch(a.table->name() + " vs " + b.table->name());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
  return a;
}

VirtualRep operator*(const BigInt& c, VirtualRep a) {
  for (auto& x : a.coeffs) x *= c;
  return a;
}

bool VirtualRep::operator==(const VirtualRep& o) const { return table == o.table && coeffs == o.coeffs; }

VirtualRep decompose(TablePtr t, const ClassFunction& chi) {
  VirtualRep r = VirtualRep::zero(t);
  for (std::size_t i = 0; i < t->size(); ++i)
    r.coeffs[i] = integral(inner_product(*t->group, chi, t->chars[i]), "multiplicity of " + t->labels[i]);
  return r;
}

VirtualRep tensor_decompose(const VirtualRep& a, const VirtualRep& b) {
  if (a.table != b.table) throw GroupMismatch(a.table->name() + " vs " + b.table->name());
  return decompose(a.table, cf_mul(a.character(), b.character()));
}

VirtualRep defining_rep(TablePtr t) { return decompose(t, t->group->rho); }

// ---------------------------------------------------------------------------
// embeddings

Embedding make_embedding(TablePtr sub, TablePtr super, const std::vector<Quaternion>& gen_images) {
  const QuaternionGroup &h = *sub->group, &g = *super->group;
  if (gen_images.size() != h.generators.size()) throw InvalidEmbedding("one image per generator is required");
  std::vector<std::size_t> gi;
  for (const auto& q : gen_images) {
    std::size_t k = g.find(q);
    if (k == g.size()) throw NotASubgroup(q.str() + " is not an element of " + g.name);
    gi.push_back(k);
  }
  Embedding e{sub, super, std::vector<std::size_t>(h.size(), g.size())};
  e.image[0] = 0;
  std::vector<std::size_t> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gi.size(); ++k) {
      std::size_t y = h.mul[bfs[i]][h.generators[k]];
      if (e.image[y] == g.size()) e.image[y] = g.mul[e.image[bfs[i]]][gi[k]], bfs.push_back(y);
    }
  for (std::size_t x = 0; x < h.size(); ++x)
    for (std::size_t k = 0; k < gi.size(); ++k)
      if (e.image[h.mul[x][h.generators[k]]] != g.mul[e.image[x]][gi[k]])
        throw InvalidEmbedding("generator images do not define a homomorphism " + h.name + " -> " + g.name);
  std::set<std::size_t> distinct(e.image.begin(), e.image.end());
  if (distinct.size() != h.size()) throw InvalidEmbedding(h.name + " -> " + g.name + " is not injective");
  return e;
}

Embedding canonical_embedding(const std::string& sub, const std::string& super) {
  TablePtr h = character_table(sub), g = character_table(super);
  std::vector<Quaternion> imgs;
  for (std::size_t k : h->group->generators) imgs.push_back(h->group->elements[k]);
  CycNumber half(BigRat(1, 2));
  if (sub == "A3" && super == "D5") imgs = {quat(0, 0, 1, 0)};
  if (sub == "A5" && (super == "E6" || super == "E7")) imgs = {quat(half, half, half, half)};
  return make_embedding(h, g, imgs);
}

VirtualRep restrict(const VirtualRep& r, const Embedding& e) {
  if (r.table != e.super) throw GroupMismatch("restriction expects a representation of " + e.super->name());
  ClassFunction chi = r.character(), res;
  const QuaternionGroup &h = *e.sub->group, &g = *e.super->group;
  for (std::size_t rep : h.class_reps) res.push_back(chi[g.class_of[e.image[rep]]]);
  return decompose(e.sub, res);
}

VirtualRep induce(const VirtualRep& r, const Embedding& e) {
  if (r.table != e.sub) throw GroupMismatch("induction expects a representation of " + e.sub->name());
  const QuaternionGroup &h = *e.sub->group, &g = *e.super->group;
  std::vector<std::size_t> pre(g.size(), h.size());
  for (std::size_t x = 0; x < h.size(); ++x) pre[e.image[x]] = x;
  ClassFunction chi = r.character(), ind;
  for (std::size_t rep : g.class_reps) {
    CycNumber s;
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::size_t y = g.mul[g.mul[x][rep]][g.inv[x]];
      if (pre[y] != h.size()) s += chi[h.class_of[pre[y]]];
    }
    ind.push_back(s / CycNumber(static_cast<long long>(h.size())));
  }
  return decompose(e.super, ind);
}

IntMatrix induction_matrix(const Embedding& e) {
  IntMatrix m(e.super->size(), e.sub->size());
  for (std::size_t j = 0; j < e.sub->size(); ++j) {
    VirtualRep v = induce(VirtualRep::irrep(e.sub, e.sub->labels[j]), e);
    for (std::size_t i = 0; i < m.rows; ++i) m(i, j) = v.coeffs[i];
  }
  return m;
}

IntMatrix mckay_graph(TablePtr t) {
  std::size_t n = t->size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    VirtualRep v = decompose(t, cf_mul(t->group->rho, t->chars[i]));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v.coeffs[j];
  }
  return a;
}

// ---------------------------------------------------------------------------
// Dynkin diagram recognition

namespace {

struct Shape {
  std::size_t n = 0;
  bool simple = true;  // 0/1 entries, zero diagonal
  bool connected = true;
  std::size_t edges = 0;
  std::vector<std::size_t> deg;
  std::vector<std::vector<std::size_t>> adj;
};

Shape shape_of(const IntMatrix& a) {
  Shape s;
  s.n = a.rows;
  s.deg.assign(s.n, 0);
  s.adj.assign(s.n, {});
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1 || i == j || a(j, i) != 1) s.simple = false;
      s.adj[i].push_back(j);
      ++s.deg[i];
      if (i < j) ++s.edges;
    }
  std::vector<bool> seen(s.n, false);
  std::vector<std::size_t> st{0};
  if (s.n) seen[0] = true;
  while (!st.empty()) {
    std::size_t v = st.back();
    st.pop_back();
    for (std::size_t w : s.adj[v])
      if (!seen[w]) seen[w] = true, st.push_back(w);
  }
  s.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  return s;
}

// Lengths of the arms hanging off a branch node, sorted.
std::vector<std::size_t> arms(const Shape& s, std::size_t center) {
  std::vector<std::size_t> out;
  for (std::size_t first : s.adj[center]) {
    std::size_t len = 1, prev = center, cur = first;
    while (s.deg[cur] == 2) {
      std::size_t nxt = s.adj[cur][0] == prev ? s.adj[cur][1] : s.adj[cur][0];
      prev = cur, cur = nxt, ++len;
    }
    out.push_back(s.deg[cur] == 1 ? len : 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string affine_ade_name(const IntMatrix& a) {
  std::size_t n = a.rows;
  if (n == 1) return a(0, 0) == 2 ? "A0~" : "";
  if (n == 2 && a(0, 1) == 2 && a(1, 0) == 2 && a(0, 0) == 0 && a(1, 1) == 0) return "A1~";
  Shape s = shape_of(a);
  if (!s.simple || !s.connected) return "";
  if (std::all_of(s.deg.begin(), s.deg.end(), [](std::size_t d) { return d == 2; }))
    return "A" + std::to_string(n - 1) + "~";
  if (s.edges != n - 1) return "";
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (s.deg[v] >= 3) branch.push_back(v);
  if (branch.size() == 1 && s.deg[branch[0]] == 4 && n == 5) return "D4~";
  if (branch.size() == 2 && s.deg[branch[0]] == 3 && s.deg[branch[1]] == 3) {
    auto a0 = arms(s, branch[0]), a1 = arms(s, branch[1]);
    if (a0[0] == 0 && a0[1] == 1 && a0[2] == 1 && a1[0] == 0 && a1[1] == 1 && a1[2] == 1)
      return "D" + std::to_string(n - 1) + "~";
  }
  if (branch.size() == 1 && s.deg[branch[0]] == 3) {
    auto ar = arms(s, branch[0]);
    if (ar == std::vector<std::size_t>{2, 2, 2}) return "E6~";
    if (ar == std::vector<std::size_t>{1, 3, 3}) return "E7~";
    if (ar == std::vector<std::size_t>{1, 2, 5}) return "E8~";
  }
  return "";
}

std::string ade_name(const IntMatrix& a) {
  std::size_t n = a.rows;
  if (n == 1) return a(0, 0) == 0 ? "A1" : "";
  Shape s = shape_of(a);
  if (!s.simple || !s.connected || s.edges != n - 1) return "";
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (s.deg[v] >= 3) branch.push_back(v);
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() != 1 || s.deg[branch[0]] != 3) return "";
  auto ar = arms(s, branch[0]);
  if (ar[0] == 1 && ar[1] == 1) return "D" + std::to_string(n);
  if (ar == std::vector<std::size_t>{1, 2, 2}) return "E6";
  if (ar == std::vector<std::size_t>{1, 2, 3}) return "E7";
  if (ar == std::vector<std::size_t>{1, 2, 4}) return "E8";
  return "";
}

// ---------------------------------------------------------------------------
// gradings

std::size_t hom_to_z2_count(const QuaternionGroup& g) {
  std::size_t c = 0;
  int L = g.exponent;
  for (const auto& val : linear_characters(g, L)) {
    bool sign = true;
    for (int v : val)
      if (v != 0 && 2 * v != L) sign = false;
    if (sign) ++c;
  }
  return c;
}

std::vector<Grading> gradings(TablePtr t) {
  std::vector<Grading> out;
  const QuaternionGroup& g = *t->group;
  for (std::size_t r = 0; r < t->size(); ++r) {
    if (t->dims[r] != 1) continue;
    bool sign = true, nontrivial = false;
    for (const auto& v : t->chars[r]) {
      if (v == CycNumber(-1))
        nontrivial = true;
      else if (!(v == CycNumber(1)))
        sign = false;
    }
    if (!sign || !nontrivial) continue;
    Grading e{t, r, {}};
    for (std::size_t x = 0; x < g.size(); ++x)
      if (at(*t, r, x) == CycNumber(1)) e.kernel.push_back(x);
    out.push_back(std::move(e));
  }
  return out;
}

std::string to_string(GradedType t) { return t == GradedType::type_2_1 ? "2_1" : "1_2"; }

GradedType classify_graded(const Grading& e, std::size_t irrep) {
  const CharacterTable& t = *e.table;
  CycNumber s;
  for (std::size_t x : e.kernel) s += at(t, irrep, x) * at(t, irrep, x).conj();
  BigRat nrm = s.to_rational() / BigRat(static_cast<long long>(e.kernel.size()));
  if (nrm == 1) return GradedType::type_2_1;
  if (nrm == 2) return GradedType::type_1_2;
  throw OrthogonalityFailure("restriction of " + t.labels[irrep] + " to the grading kernel has norm " + nrm.str());
}

FoldResult graded_fold(TablePtr t, std::size_t grading_index) {
  const QuaternionGroup& g = *t->group;
  auto gs = gradings(t);
  if (gs.empty()) throw NoGradingExists(g.name + " has no homomorphism onto Z2");
  if (grading_index >= gs.size()) throw std::invalid_argument("grading index out of range");
  const Grading& e = gs[grading_index];
  // kernel as its own quaternion group, from a small generating set
  std::vector<Quaternion> gens;
  std::set<std::size_t> closure{0};
  for (std::size_t x : e.kernel) {
    if (closure.count(x)) continue;
    gens.push_back(g.elements[x]);
    std::vector<std::size_t> cur(closure.begin(), closure.end());
    std::vector<std::size_t> gi;
    for (const auto& q : gens) gi.push_back(g.find(q));
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t k : gi) {
        std::size_t y = g.mul[cur[i]][k];
        if (closure.insert(y).second) cur.push_back(y);
      }
  }
  auto hg = std::make_shared<QuaternionGroup>(generate_group("ker(" + g.name + ")", gens));
  auto ht = std::make_shared<const CharacterTable>(compute_character_table(hg));
  Embedding emb = make_embedding(ht, t, gens);

  FoldResult f;
  f.group = g.name;
  f.graph = mckay_graph(t);
  f.kernel_graph = mckay_graph(ht);
  f.graph_name = affine_ade_name(f.graph);
  f.kernel_graph_name = affine_ade_name(f.kernel_graph);
  f.nodes = t->size();
  f.kernel_nodes = ht->size();
  f.restriction = IntMatrix(ht->size(), t->size());
  bool ok = true;
  const ClassFunction& eps = t->chars[e.sign_char];
  for (std::size_t j = 0; j < t->size(); ++j) {
    VirtualRep r = restrict(VirtualRep::irrep(t, t->labels[j]), emb);
    for (std::size_t i = 0; i < ht->size(); ++i) f.restriction(i, j) = r.coeffs[i];
    bool fixed = cf_equal(cf_mul(t->chars[j], eps), t->chars[j]);
    GradedType ty = classify_graded(e, j);
    if (fixed != (ty == GradedType::type_1_2)) ok = false;
    if (fixed)
      ++f.graded_rank;
    else
      ++f.graded_rank1;
  }
  f.graded_rank1 /= 2;
  if (f.kernel_nodes != 2 * f.graded_rank + f.graded_rank1) ok = false;
  if (!(f.restriction * f.graph == f.kernel_graph * f.restriction)) ok = false;
  for (std::size_t i = 0; i < ht->size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < t->size(); ++j)
      if (f.restriction(i, j) != 0) hit = true;
    if (!hit) ok = false;
  }
  f.fold_consistent = ok;
  return f;
}

// ---------------------------------------------------------------------------
// SU(2), O(2), T

std::string SU2Virtual::str() const {
  IntVec co;
  std::vector<std::string> labs;
  for (const auto& [n, v] : c) co.push_back(v), labs.push_back("sigma_" + std::to_string(n));
  return combination_label(co, labs);
}

bool O2Virtual::operator==(const O2Virtual& o) const {
  auto strip = [](std::map<int, BigInt> m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
  };
  return one == o.one && delta == o.delta && strip(kappa) == strip(o.kappa);
}

std::string O2Virtual::str() const {
  IntVec co{one, delta};
  std::vector<std::string> labs{"1", "delta"};
  for (const auto& [i, v] : kappa) co.push_back(v), labs.push_back("kappa_" + std::to_string(i));
  return combination_label(co, labs);
}

O2Virtual restrict_su2_to_o2(int n) {
  if (n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
  O2Virtual r;
  for (int w = n - 1; w > 0; w -= 2) r.kappa[w] += 1;
  if (n % 2 == 1) {
    if (((n - 1) / 2) % 2 == 0)
      r.one += 1;
    else
      r.delta += 1;
  }
  return r;
}

LaurentPoly restrict_su2_to_torus(int n) {
  if (n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
  LaurentPoly p(1);
  for (int w = n - 1; w >= -(n - 1); w -= 2) p += LaurentPoly::monomial(w);
  return p;
}

VirtualRep restrict_su2(int n, TablePtr t) {
  if (n < 1) throw std::invalid_argument("sigma_n needs n >= 1");
  const QuaternionGroup& g = *t->group;
  ClassFunction prev(g.num_classes(), CycNumber(0)), cur(g.num_classes(), CycNumber(1));
  for (int m = 2; m <= n; ++m) {
    ClassFunction next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = (g.rho[i] * cur[i] - prev[i]).normalized();
    prev = cur;
    cur = next;
  }
  return decompose(t, cur);
}

SU2Virtual dirac_induce_torus_to_su2(int lambda) {
  SU2Virtual r;
  if (lambda > 0) r.c[lambda] = 1;
  if (lambda < 0) r.c[-lambda] = -1;
  return r;
}

BigInt dirac_induce_finite_to_o2(const VirtualRep& rho, const std::string& d) {
  std::size_t k = rho.table->index_of(d);
  if (rho.table->dims[k] != 1) throw InvalidEmbedding(d + " is not one-dimensional");
  return rho.coeffs[0] - rho.coeffs[k];
}

}  // namespace vk
