// vk: command-line front end. Reports are JSON (--json) or an indented text rendering of the same payload.
#include "vk/errors.hpp"
#include "vk/fusion.hpp"
#include "vk/khomology.hpp"
#include "vk/modinv.hpp"
#include "vk/regress.hpp"
#include "vk/repring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace vk;

namespace {

struct Config {
  std::optional<int> level;
  int window = 0;
  int stride = 5;
  bool json_out = false;
  std::string output;
  // per-command arguments
  std::string group, sub, super, irrep, graph, matrix_file, orders, presentation = "literal", H;
  std::vector<long long> K, charge;
  int grading = 0, cyclic = 0, twist = 0, labels = 0, copies = 2, l = 0;
  bool graded = false, lenient = false;
  unsigned long long budget = EnumerationOptions{}.budget;
};

int need_level(const Config& c) {
  if (!c.level) throw UsageError("--level is required");
  return *c.level;
}

WindowOptions window_of(const Config& c) {
  if (c.window < 0) throw UsageError("--window must be positive");
  if (c.stride < 1) throw UsageError("--stride must be positive");
  return {c.window, c.stride};
}

json num(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

json vec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

json mat(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) a.push_back(vec(m.row(i)));
  return a;
}

json group(const FGAbelianGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(num(d));
  return {{"group", g.str()}, {"free_rank", g.free_rank}, {"torsion", t}};
}

json cyc_matrix(const CycMatrix& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    a.push_back(r);
  }
  return a;
}

json fusion_json(const FusionRing& r) {
  json n = json::array();
  for (std::size_t a = 0; a < r.size(); ++a) {
    json rows = json::array();
    for (std::size_t b = 0; b < r.size(); ++b) {
      json cs = json::array();
      for (std::size_t c = 0; c < r.size(); ++c) cs.push_back(r(a, b, c));
      rows.push_back(cs);
    }
    n.push_back(rows);
  }
  return n;
}

json modular_json(const ModularData& d) {
  json t = json::array();
  for (const auto& x : d.T) t.push_back(x.str());
  ModularCheck c = check_modular(d);
  return {{"labels", d.labels},
          {"S", cyc_matrix(d.S)},
          {"T", t},
          {"checks",
           {{"symmetric", c.symmetric}, {"unitary", c.unitary}, {"st_cubed", c.st_cubed},
            {"charge_conjugation", c.charge_conjugation}}}};
}

json kpair_json(const KPair& p) {
  json steps = json::array();
  for (const auto& s : p.provenance) {
    json j = {{"name", s.name}, {"citation", s.citation}, {"ker", s.ker.str()}, {"coker", s.coker.str()}};
    if (s.has_result) j["result"] = "(" + s.K0.str() + ", " + s.K1.str() + ")";
    if (!s.expected.empty()) {
      j["expected"] = s.expected;
      j["matches"] = s.matches;
    }
    if (s.euler_glued != s.euler_corners) j["euler_mismatch"] = true;
    if (!s.note.empty()) j["note"] = s.note;
    steps.push_back(j);
  }
  json checks = json::object();
  for (const auto& [name, ok] : p.checks) checks[name] = ok;
  return {{"K0", group(p.K0)}, {"K1", group(p.K1)}, {"provenance", steps},
          {"checks", checks},  {"notes", p.notes},   {"result", p.str()}};
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("expected comma-separated integers, got " + s);
    }
  }
  if (out.empty()) throw UsageError("expected comma-separated integers");
  return out;
}

IntMatrix read_matrix(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(file + ": " + e.what());
  }
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  if (!j.is_array() || j.empty()) throw UsageError(file + ": expected a nonempty array of rows");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols) throw UsageError(file + ": rows have different lengths");
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (!j[i][c].is_number_integer()) throw UsageError(file + ": entries must be integers");
      m(i, c) = j[i][c].get<long long>();
    }
  }
  return m;
}

// Text form: one "key: value" per line, nested objects indented.
void render(std::ostream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render(out, v, indent + 2);
    } else if (flat(v)) {
      out << pad << key << ":";
      for (const auto& x : v) out << ' ' << scalar(x);
      out << '\n';
    } else if (v.is_array()) {
      out << pad << key << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render(out, x, indent + 4);
        } else if (flat(x)) {
          out << pad << "  ";
          for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << scalar(x[i]);
          out << '\n';
        } else {
          out << pad << "  " << x.dump() << '\n';
        }
      }
    } else {
      out << pad << key << ": " << scalar(v) << '\n';
    }
  }
}

struct Report {
  json payload;
  int exit_code = 0;
};

// ---------------------------------------------------------------------------

Report fusion_cmd(const std::string& what, const Config& c) {
  json j = {{"command", "fusion " + what}};
  if (what == "su2") {
    int k = need_level(c);
    if (k < 1) throw UsageError("level must be at least 1");
    ModularData d = su2_modular_data(k);
    FusionRing v = verlinde_matrices(d);
    j["level"] = k;
    j["modular"] = modular_json(d);
    j["N"] = fusion_json(v);
    j["verlinde_equals_clebsch_gordan"] = v == su2_fusion_truncated(k);
    return {j, check_modular(d).ok() ? 0 : 2};
  }
  if (what == "double") {
    if (c.cyclic < 1) throw UsageError("--cyclic n is required");
    j["n"] = c.cyclic;
    if (c.twist == 0) {
      AbelianDouble d = double_abelian({c.cyclic});
      j["group"] = group(d.group);
      j["modular"] = modular_json(d.data);
      return {j, check_modular(d.data).ok() ? 0 : 2};
    }
    TwistedDouble t = double_cyclic_twisted(c.cyclic, c.twist);
    j["sigma"] = c.twist;
    j["group"] = group(t.group);
    try {
      FGAbelianGroup f = gcd_formula_group(c.cyclic, c.twist);
      j["gcd_formula"] = group(f);
      j["formula_agrees"] = f.same_type(t.group);
    } catch (const InvalidTwist& e) {
      j["gcd_formula"] = e.what();
      j["formula_agrees"] = false;
    }
    j["N"] = fusion_json(t.ring);
    return {j, 0};
  }
  if (what == "level1") {
    LevelOne l = level1_data(c.group);
    j["group"] = c.group;
    j["modular"] = modular_json(l.data);
    j["N"] = fusion_json(l.ring);
    return {j, check_modular(l.data).ok() ? 0 : 2};
  }
  throw UsageError("unknown fusion command " + what);
}

Report repring_cmd(const std::string& what, const Config& c) {
  json j = {{"command", "repring " + what}};
  if (what == "table") {
    TablePtr t = character_table(c.group);
    const QuaternionGroup& g = *t->group;
    json classes = json::array(), chars = json::object();
    for (std::size_t i = 0; i < g.num_classes(); ++i)
      classes.push_back({{"size", g.class_sizes[i]}, {"order", g.order[g.class_reps[i]]}});
    for (std::size_t r = 0; r < t->size(); ++r) {
      json row = json::array();
      for (const auto& x : t->chars[r]) row.push_back(x.str());
      chars[t->labels[r]] = row;
    }
    j["group"] = c.group;
    j["order"] = g.size();
    j["classes"] = classes;
    j["dims"] = t->dims;
    j["characters"] = chars;
    return {j, 0};
  }
  if (what == "induce" || what == "restrict") {
    Embedding e = canonical_embedding(c.sub, c.super);
    VirtualRep r = what == "induce" ? induce(VirtualRep::irrep(e.sub, c.irrep), e)
                                    : restrict(VirtualRep::irrep(e.super, c.irrep), e);
    j["sub"] = c.sub;
    j["super"] = c.super;
    j["irrep"] = c.irrep;
    j["coefficients"] = vec(r.coeffs);
    j["result"] = combination_label(r.coeffs, r.table->labels);
    return {j, 0};
  }
  if (what == "mckay") {
    TablePtr t = character_table(c.group);
    IntMatrix a = mckay_graph(t);
    std::ostringstream dot;
    dot << "graph " << c.group << " {\n";
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = i; k < a.cols; ++k)
        for (BigInt m = 0; m < a(i, k); ++m) dot << "  \"" << t->labels[i] << "\" -- \"" << t->labels[k] << "\";\n";
    dot << "}\n";
    j["group"] = c.group;
    j["labels"] = t->labels;
    j["adjacency"] = mat(a);
    j["type"] = affine_ade_name(a);
    j["dot"] = dot.str();
    return {j, 0};
  }
  if (what == "fold") {
    FoldResult f = graded_fold(character_table(c.group), static_cast<std::size_t>(c.grading));
    j["group"] = f.group;
    j["graph"] = f.graph_name;
    j["nodes"] = f.nodes;
    j["kernel_graph"] = f.kernel_graph_name;
    j["kernel_nodes"] = f.kernel_nodes;
    j["restriction"] = mat(f.restriction);
    j["graded_rank_1_2"] = f.graded_rank;
    j["graded_pairs_2_1"] = f.graded_rank1;
    j["fold_consistent"] = f.fold_consistent;
    return {j, f.fold_consistent ? 0 : 2};
  }
  throw UsageError("unknown repring command " + what);
}

Report invariants_cmd(const std::string& what, const Config& c) {
  json j = {{"command", "invariants " + what}};
  auto named = [&](const std::string& g) -> std::pair<IntMatrix, BranchingRule> {
    if (g == "D4") return {z_d4(), d4_branching()};
    if (g == "E6") return {z_e6(), e6_branching()};
    throw UsageError("expected D4 or E6");
  };
  if (what == "enumerate") {
    int k = need_level(c);
    if (k < 1) throw UsageError("level must be at least 1");
    Enumeration e = enumerate_invariants(k, EnumerationOptions{c.budget});
    ModularData d = su2_modular_data(k);
    json list = json::array();
    for (const auto& z : e.invariants) {
      Cardinalities cz = cardinalities(z);
      json exps = json::array();
      for (int x : diagonal_exponents(z)) exps.push_back(x);
      list.push_back({{"Z", mat(z)}, {"trZ", num(cz.trZ)}, {"trZZt", num(cz.trZZt)}, {"exponents", exps}});
    }
    j["level"] = k;
    j["commutant_rank"] = e.commutant_rank;
    j["visited"] = e.visited;
    j["invariants"] = list;
    j["count"] = e.invariants.size();
    return {j, 0};
  }
  if (what == "check") {
    int k = need_level(c);
    if (c.matrix_file.empty()) throw UsageError("--matrix file.json is required");
    IntMatrix z = read_matrix(c.matrix_file);
    InvariantReport r = check_invariant(z, su2_modular_data(k));
    j["level"] = k;
    j["square"] = r.square;
    j["nonnegative"] = r.nonnegative;
    j["normalized"] = r.normalized;
    j["commutes_S"] = r.commutes_S;
    j["commutes_T"] = r.commutes_T;
    if (r.square) {
      Cardinalities cz = cardinalities(z);
      j["trZ"] = num(cz.trZ);
      j["trZZt"] = num(cz.trZZt);
    }
    j["valid"] = r.ok();
    return {j, r.ok() ? 0 : 2};
  }
  if (what == "nimrep") {
    int k = need_level(c);
    NimrepReport r = nimrep_from_graph(ade_graph(c.graph), k);
    j["graph"] = c.graph;
    j["level"] = k;
    j["exponents"] = r.exponents;
    j["charpoly"] = vec(r.charpoly);
    j["represents_fusion"] = r.represents_fusion;
    j["truncates"] = r.truncates;
    j["charpoly_matches"] = r.charpoly_matches;
    return {j, r.represents_fusion && r.truncates && r.charpoly_matches ? 0 : 2};
  }
  if (what == "embed") {
    auto [z, b] = named(c.graph);
    bool d4 = c.graph == "D4";
    ModularData ext = level1_data(d4 ? "SU3" : "Sp4").data;
    IntMatrix got = embed_invariant(b, ext, su2_modular_data(d4 ? 4 : 10));
    j["embedding"] = d4 ? "SU(2)_4 in SU(3)_1" : "SU(2)_10 in Sp(4)_1";
    j["branching"] = mat(b.b);
    j["Z"] = mat(got);
    j["matches_tabulated"] = got == z;
    return {j, got == z ? 0 : 2};
  }
  if (what == "cardinalities") {
    auto [z, b] = named(c.graph);
    Cardinalities cz = cardinalities(z, &b.b);
    j["graph"] = c.graph;
    j["trZ"] = num(cz.trZ);
    j["trZZt"] = num(cz.trZZt);
    j["trBtB"] = num(cz.trBtB);
    return {j, 0};
  }
  if (what == "charge") {
    if (c.charge.size() != 6) throw UsageError("charge takes dimH hH k dimG hG l");
    const auto& v = c.charge;
    j["c_H"] = central_charge(v[0], v[1], v[2]).str();
    j["c_G"] = central_charge(v[3], v[4], v[5]).str();
    bool ok = central_charge_check(v[0], v[1], v[2], v[3], v[4], v[5]);
    j["equal"] = ok;
    return {j, 0};
  }
  throw UsageError("unknown invariants command " + what);
}

Report double_cmd(const std::string& what, const Config& c) {
  json j = {{"command", "double " + what}};
  if (what == "alpha") {
    std::vector<int> orders = parse_ints(c.orders);
    json list = json::array();
    bool all_ok = true;
    for (const auto& H : overgroups_of_diagonal(orders)) {
      AlphaInduction a = alpha_induction_abelian(orders, H);
      json h = json::array();
      for (auto [x, y] : H) h.push_back({x, y});
      list.push_back({{"H", h},
                      {"N", a.N},
                      {"full_system", a.full_system_size},
                      {"neutral_system", a.neutral_size},
                      {"trZ", num(a.sum_z_squared)},
                      {"Z_is_btb", a.z_is_btb},
                      {"modular_invariant", a.invariant}});
      all_ok = all_ok && a.z_is_btb && a.invariant;
    }
    j["orders"] = orders;
    j["subgroups"] = list;
    return {j, all_ok ? 0 : 2};
  }
  if (what == "orbifold-count") {
    if (c.labels < 1) throw UsageError("--labels n is required");
    if (c.copies < 1 || c.copies > 6) throw UsageError("--copies must be between 1 and 6");
    j["labels"] = c.labels;
    j["copies"] = c.copies;
    j["count"] = num(permutation_orbifold_count(c.labels, c.copies, symmetric_group(c.copies)));
    return {j, 0};
  }
  throw UsageError("unknown double command " + what);
}

Report khom_cmd(const std::string& what, const Config& c) {
  json j = {{"command", "khom " + what}};
  WindowOptions w = window_of(c);
  KPair p;
  if (what == "circle") {
    p = circle_level(need_level(c), c.graded, w);
  } else if (what == "su2-adjoint") {
    p = su2_adjoint(need_level(c), w);
  } else if (what == "torus-su2") {
    p = torus_on_su2(need_level(c), w);
  } else if (what == "t2") {
    if (c.K.size() != 4) throw UsageError("--matrix k,l,m,n is required");
    p = t2_level(IntMatrix::from_rows({{c.K[0], c.K[1]}, {c.K[2], c.K[3]}}));
  } else if (what == "circle-orb") {
    p = circle_s2_orbifold(need_level(c), c.l, w);
  } else if (what == "su2-orb") {
    OrbifoldPresentation pr;
    if (c.presentation == "literal") pr = OrbifoldPresentation::literal;
    else if (c.presentation == "alpha") pr = OrbifoldPresentation::cokernel_alpha;
    else throw UsageError("--presentation is literal or alpha");
    p = su2_s2_orbifold(need_level(c), pr, w);
  } else if (what == "d4-chain") {
    p = d4_chain(!c.lenient);
  } else if (what == "e6-chain") {
    p = e6_orbit_chain(!c.lenient);
  } else if (what == "e6-tor") {
    p = e6_tor_pipeline();
  } else if (what == "maxrank") {
    if (c.group.empty() || c.H.empty()) throw UsageError("maxrank takes <G> <H>");
    j["G"] = c.group;
    j["H"] = c.H;
    j["result"] = num(maximal_rank_dim(c.group, c.H));
    return {j, 0};
  } else {
    throw UsageError("unknown khom computation " + what);
  }
  if (c.level) j["level"] = *c.level;
  json body = kpair_json(p);
  for (auto& [k, v] : body.items()) j[k] = v;
  return {j, 0};
}

Report regress_cmd(const std::string& what) {
  Suite s = parse_suite(what);
  json list = json::array();
  int failed = 0;
  for (const auto& r : run_suite(s)) {
    list.push_back({{"id", r.id}, {"name", r.name}, {"citation", r.citation}, {"pass", r.pass}, {"detail", r.detail}});
    failed += !r.pass;
  }
  json j = {{"command", "regress " + what}, {"criteria", list}};
  j["passed"] = list.size() - failed;
  j["failed"] = failed;
  return {j, failed ? 2 : 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verlinde algebras, representation rings and twisted equivariant K-homology, computed exactly"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags; flags win");
  Config c;
  app.add_option("--level,-k", c.level, "level k");
  app.add_option("--window", c.window, "truncation half width (default: VK_WINDOW, else 4k+16)");
  app.add_option("--stride", c.stride, "window growth used to confirm stabilization");
  app.add_flag("--json", c.json_out, "emit JSON");
  app.add_option("--output,-o", c.output, "write the report to a file");

  std::string cmd, what;
  auto sub = [&](const std::string& name, const std::string& help, std::vector<std::string> choices) {
    CLI::App* s = app.add_subcommand(name, help);
    s->require_subcommand(1);
    for (const auto& ch : choices) {
      CLI::App* leaf = s->add_subcommand(ch);
      leaf->callback([&cmd, &what, name, ch] {
        cmd = name;
        what = ch;
      });
    }
    return s;
  };

  CLI::App* fusion = sub("fusion", "fusion rings and modular data", {"su2", "double", "level1"});
  fusion->get_subcommand("double")->add_option("--cyclic", c.cyclic, "n for Z_n");
  fusion->get_subcommand("double")->add_option("--twist", c.twist, "sigma in 1..n; omit for the untwisted double");
  fusion->get_subcommand("level1")->add_option("group", c.group, "SU3 or Sp4")->required();

  CLI::App* rep = sub("repring", "finite subgroups of SU(2)", {"table", "induce", "restrict", "mckay", "fold"});
  rep->get_subcommand("table")->add_option("group", c.group)->required();
  rep->get_subcommand("mckay")->add_option("group", c.group)->required();
  rep->get_subcommand("fold")->add_option("group", c.group)->required();
  rep->get_subcommand("fold")->add_option("--grading", c.grading, "index of the Z2 grading");
  for (const char* op : {"induce", "restrict"}) {
    CLI::App* s = rep->get_subcommand(op);
    s->add_option("sub", c.sub)->required();
    s->add_option("super", c.super)->required();
    s->add_option("irrep", c.irrep)->required();
  }

  CLI::App* inv =
      sub("invariants", "SU(2) modular invariants", {"enumerate", "check", "nimrep", "embed", "cardinalities", "charge"});
  inv->get_subcommand("enumerate")->add_option("--budget", c.budget, "candidate points before giving up");
  inv->get_subcommand("check")->add_option("--matrix", c.matrix_file, "JSON file with the matrix rows");
  inv->get_subcommand("nimrep")->add_option("--graph", c.graph, "ADE graph, e.g. D4")->required();
  inv->get_subcommand("embed")->add_option("graph", c.graph, "D4 or E6")->required();
  inv->get_subcommand("cardinalities")->add_option("graph", c.graph, "D4 or E6")->required();
  inv->get_subcommand("charge")->add_option("values", c.charge, "dimH hH k dimG hG l")->expected(6);

  CLI::App* dbl = sub("double", "abelian doubles", {"alpha", "orbifold-count"});
  dbl->get_subcommand("alpha")->add_option("--orders", c.orders, "e.g. 2,2")->required();
  dbl->get_subcommand("orbifold-count")->add_option("--labels", c.labels, "primaries of the seed theory");
  dbl->get_subcommand("orbifold-count")->add_option("--copies", c.copies, "number of copies permuted by S_n");

  CLI::App* kh = sub("khom", "twisted equivariant K-homology",
                     {"circle", "su2-adjoint", "torus-su2", "t2", "circle-orb", "su2-orb", "d4-chain", "e6-tor",
                      "e6-chain", "maxrank"});
  kh->get_subcommand("circle")->add_flag("--graded", c.graded, "use 1 + a^k");
  kh->get_subcommand("t2")->add_option("--matrix", c.K, "k,l,m,n")->delimiter(',')->expected(4);
  kh->get_subcommand("circle-orb")->add_option("--l", c.l, "second level");
  kh->get_subcommand("su2-orb")->add_option("--presentation", c.presentation, "literal or alpha");
  kh->get_subcommand("d4-chain")->add_flag("--lenient", c.lenient, "report mismatches instead of failing");
  kh->get_subcommand("e6-chain")->add_flag("--lenient", c.lenient, "report mismatches instead of failing");
  kh->get_subcommand("maxrank")->add_option("G", c.group)->required();
  kh->get_subcommand("maxrank")->add_option("H", c.H)->required();

  sub("regress", "acceptance suites", {"golden", "properties", "all"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report r;
  try {
    if (cmd == "fusion") r = fusion_cmd(what, c);
    else if (cmd == "repring") r = repring_cmd(what, c);
    else if (cmd == "invariants") r = invariants_cmd(what, c);
    else if (cmd == "double") r = double_cmd(what, c);
    else if (cmd == "khom") r = khom_cmd(what, c);
    else r = regress_cmd(what);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const SearchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream text;
  if (c.json_out) text << r.payload.dump(2) << '\n';
  else render(text, r.payload, 0);
  if (c.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(c.output);
    if (!out) {
      std::cerr << "error: cannot write " << c.output << '\n';
      return 1;
    }
    out << text.str();
  }
  return r.exit_code;
}
