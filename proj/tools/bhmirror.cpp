#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bhmirror/bhmirror.hpp"

using namespace bhmirror;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "bhmirror/1";

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string polynomial;
  std::string group;
  std::string K = "min";
  std::string format = "text";
  bool weights = false;
  bool diamonds = false;
  bool mirror = false;
  std::string catalog;
  std::string case_name;

  Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text; }
};

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

ordered_json report_json(const Report& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"statement", row.statement}, {"cell", row.cell}, {"lhs", row.lhs}, {"rhs", row.rhs},
                    {"pass", row.pass}});
  return {{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"pass", r.ok()}, {"rows", rows}};
}

ordered_json diamond_json(const BigradedDims& d) {
  ordered_json a = ordered_json::array();
  for (const auto& [pq, v] : d)
    if (v) a.push_back({{"p", to_string(pq.first)}, {"q", to_string(pq.second)}, {"dim", v}});
  return a;
}

std::string diamond_text(const BigradedDims& d) {
  std::string s;
  for (const auto& [pq, v] : d)
    if (v) s += " " + bidegree_string(pq) + "=" + std::to_string(v);
  return s;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const RunConfig& cfg) {
  auto P = parse_polynomial(cfg.polynomial);
  auto aut = aut_group(P);
  auto sl = sl_group(P);
  std::optional<CyclicSplit> split;
  try {
    split = split_cyclic(P);
  } catch (const Error&) {
  }
  std::optional<SymmetryGroup> H;
  if (!cfg.group.empty()) H = parse_group_spec(P, cfg.group);

  std::vector<std::int64_t> w(P.weights().begin(), P.weights().end());
  if (cfg.fmt() == Format::Json) {
    ordered_json atoms = ordered_json::array();
    for (const auto& a : P.atoms()) {
      ordered_json vars = ordered_json::array();
      for (auto v : a.vars) vars.push_back(P.var_names()[v]);
      atoms.push_back({{"kind", atom_kind_name(a.kind)}, {"variables", vars}, {"exponents", a.exponents}});
    }
    ordered_json out = {{"schema", kSchema},
                        {"command", "analyze"},
                        {"polynomial", P.to_string()},
                        {"variables", P.var_names()},
                        {"weights", w},
                        {"degree", P.degree()},
                        {"calabi_yau", is_calabi_yau(P)},
                        {"atoms", atoms},
                        {"aut_order", aut.order()},
                        {"sl_order", sl.order()},
                        {"j", j_element(P).to_string()}};
    if (split) {
      out["k"] = split->k;
      out["s"] = s_element(P).to_string();
    }
    if (H) {
      out["group"] = cfg.group;
      out["group_order"] = H->order();
      out["dual_group_order"] = dual_group(P, *H).order();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "polynomial  " << P.to_string() << "\n";
  std::cout << "weights     " << vec_string(w) << "\n";
  std::cout << "degree      " << P.degree() << "\n";
  std::cout << "calabi-yau  " << (is_calabi_yau(P) ? "yes" : "no") << "\n";
  std::cout << "atoms      ";
  for (const auto& a : P.atoms()) {
    std::cout << " " << atom_kind_name(a.kind) << "(";
    for (std::size_t i = 0; i < a.vars.size(); ++i) std::cout << (i ? "," : "") << P.var_names()[a.vars[i]];
    std::cout << ")";
  }
  std::cout << "\n|Aut|       " << aut.order() << "\n";
  std::cout << "|SL|        " << sl.order() << "\n";
  std::cout << "j           " << j_element(P).to_string() << "\n";
  if (split) std::cout << "s           " << s_element(P).to_string() << "  (k = " << split->k << ")\n";
  if (H) std::cout << "group       " << cfg.group << "  order " << H->order() << ", dual order " << dual_group(P, *H).order() << "\n";
  return 0;
}

// ---------------------------------------------------------------- mirror

int cmd_mirror(const RunConfig& cfg) {
  auto P = parse_polynomial(cfg.polynomial);
  auto Pv = transpose(P);
  ordered_json out = {{"schema", kSchema}, {"command", "mirror"}, {"polynomial", P.to_string()}, {"transpose", Pv.to_string()}};
  std::ostringstream text;
  text << "polynomial  " << P.to_string() << "\n";
  text << "transpose   " << Pv.to_string() << "\n";

  if (!cfg.group.empty()) {
    auto H = parse_group_spec(P, cfg.group);
    auto Hv = dual_group(P, H);
    ordered_json gens = ordered_json::array();
    for (const auto& g : Hv.generators()) gens.push_back(g.to_string());
    out["group"] = {{"spec", cfg.group}, {"order", H.order()}};
    out["dual_group"] = {{"order", Hv.order()}, {"generators", gens}};
    text << "group       " << cfg.group << "  order " << H.order() << "\n";
    text << "dual group  order " << Hv.order() << "  generators";
    for (const auto& g : Hv.generators()) text << " " << g.to_string();
    text << "\n";
  } else {
    auto M = build_mirror_pair(P, parse_k_spec(P, cfg.K));
    ordered_json gens = ordered_json::array();
    for (const auto& g : M.K_dual_f.generators()) gens.push_back(g.to_string());
    out["K"] = {{"spec", cfg.K}, {"order", M.source.K.order()}};
    out["mirror_K"] = {{"order", M.K_dual_f.order()}, {"generators", gens}};
    out["k"] = M.source.k;
    out["H_order"] = M.source.H.order();
    out["mirror_H_order"] = M.target.H.order();
    text << "K           " << cfg.K << "  order " << M.source.K.order() << "\n";
    text << "mirror K    order " << M.K_dual_f.order() << "  generators";
    for (const auto& g : M.K_dual_f.generators()) text << " " << g.to_string();
    text << "\n|K[j]|      " << M.source.H.order() << "  mirror " << M.target.H.order() << "\n";
  }
  if (cfg.fmt() == Format::Json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

// ---------------------------------------------------------------- table

void print_grid_text(const SectorGrid& G, const InvertiblePolynomial& W, const std::string& K, bool weights,
                     bool diamonds) {
  const int k = G.k;
  std::cout << "W = " << W.to_string() << ", K = " << K << ", k = " << k
            << (G.calabi_yau ? ", Calabi-Yau" : "") << "\n";
  auto lab = [k](int i) { return i == 0 ? std::string("0") : std::to_string(i) + "/" + std::to_string(k); };
  std::cout << std::left << std::setw(9) << "d_s\\d_j";
  for (int a = 0; a < k; ++a) std::cout << std::right << std::setw(6) << lab(a);
  std::cout << std::right << std::setw(8) << "total" << "\n";
  for (int b = 0; b < k; ++b) {
    std::cout << std::left << std::setw(9) << lab(b);
    for (int a = 0; a < k; ++a) std::cout << std::right << std::setw(6) << G.at(b, a).total;
    std::cout << std::right << std::setw(8) << G.row_total(b) << "\n";
  }
  if (!weights && !diamonds) return;
  std::cout << "\n";
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) {
      const auto& c = G.at(b, a);
      if (!c.total) continue;
      if (diamonds) std::cout << "d_s=" << lab(b) << " d_j=" << lab(a) << ":" << diamond_text(c.diamond) << "\n";
      if (weights)
        for (const auto& [w, d] : c.by_weight)
          std::cout << "d_s=" << lab(b) << " d_j=" << lab(a) << " weight " << w << ":" << diamond_text(d) << "\n";
    }
}

int cmd_table(const RunConfig& cfg) {
  auto W = parse_polynomial(cfg.polynomial);
  auto K = parse_k_spec(W, cfg.K);
  StateTable H;
  InvertiblePolynomial shown = W;
  std::string kname = cfg.K;
  if (cfg.mirror) {
    auto M = build_mirror_pair(W, K);
    H = M.H_target;
    shown = M.target.W;
    kname = "dual of " + cfg.K + " (order " + std::to_string(M.K_dual_f.order()) + ")";
  } else {
    H = build_H(admissible_setup(W, K));
  }
  auto G = sector_grid(H, shown);

  if (cfg.fmt() == Format::Csv) {
    std::cout << "b,a,p,q,weight,dim\n";
    for (int b = 0; b < G.k; ++b)
      for (int a = 0; a < G.k; ++a)
        for (const auto& [w, d] : G.at(b, a).by_weight)
          for (const auto& [pq, v] : d)
            if (v)
              std::cout << b << "," << a << "," << to_string(pq.first) << "," << to_string(pq.second) << "," << w << ","
                        << v << "\n";
    return 0;
  }
  if (cfg.fmt() == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (int b = 0; b < G.k; ++b) {
      ordered_json cells = ordered_json::array();
      for (int a = 0; a < G.k; ++a) {
        const auto& c = G.at(b, a);
        ordered_json cell = {{"a", a}, {"total", c.total}};
        if (cfg.diamonds) cell["diamond"] = diamond_json(c.diamond);
        if (cfg.weights) {
          ordered_json ws = ordered_json::array();
          for (const auto& [w, d] : c.by_weight) ws.push_back({{"weight", w}, {"diamond", diamond_json(d)}});
          cell["weights"] = ws;
        }
        cells.push_back(cell);
      }
      rows.push_back({{"b", b}, {"cells", cells}});
    }
    ordered_json out = {{"schema", kSchema},     {"command", "table"},           {"polynomial", shown.to_string()},
                        {"K", kname},            {"mirror", cfg.mirror},         {"k", G.k},
                        {"calabi_yau", G.calabi_yau}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_grid_text(G, shown, kname, cfg.weights, cfg.diamonds);
  return 0;
}

// ---------------------------------------------------------------- verify

struct Catalog {
  std::vector<PolyCase> polys;
  std::vector<CyclicCase> cyclic;
};

Catalog load_catalog(const RunConfig& cfg) {
  Catalog c;
  if (cfg.catalog.empty()) {
    c.polys = polynomial_catalog();
    c.cyclic = cyclic_catalog();
  } else {
    std::ifstream in(cfg.catalog);
    if (!in) throw std::invalid_argument("cannot open catalog " + cfg.catalog);
    auto j = nlohmann::json::parse(in);
    for (const auto& e : j.value("polynomials", nlohmann::json::array()))
      c.polys.push_back({e.at("name").get<std::string>(), e.at("poly").get<std::string>()});
    for (const auto& e : j.value("cyclic", nlohmann::json::array()))
      c.cyclic.push_back({e.at("name").get<std::string>(), e.at("poly").get<std::string>(), e.value("K", "min"),
                          e.value("k3", false)});
  }
  if (!cfg.case_name.empty()) {
    std::erase_if(c.polys, [&](const PolyCase& p) { return p.name != cfg.case_name; });
    std::erase_if(c.cyclic, [&](const CyclicCase& p) { return p.name != cfg.case_name; });
    if (c.polys.empty() && c.cyclic.empty()) throw std::invalid_argument("no catalog case named " + cfg.case_name);
  }
  return c;
}

int cmd_verify(const RunConfig& cfg) {
  auto cat = load_catalog(cfg);
  std::vector<CaseResult> results(cat.polys.size() + cat.cyclic.size());
  detail::parallel_for(results.size(), [&](std::size_t i) {
    results[i] = i < cat.polys.size() ? run_polynomial_case(cat.polys[i]) : run_cyclic_case(cat.cyclic[i - cat.polys.size()]);
  });
  bool all = true;
  for (const auto& r : results) all = all && r.ok();

  if (cfg.fmt() == Format::Json) {
    ordered_json cases = ordered_json::array();
    for (const auto& r : results) {
      ordered_json reps = ordered_json::array();
      for (const auto& rep : r.reports) reps.push_back(report_json(rep));
      ordered_json c = {{"name", r.name}, {"polynomial", r.poly}, {"pass", r.ok()}, {"reports", reps}};
      if (!r.error.empty()) c["error"] = r.error;
      cases.push_back(c);
    }
    std::cout << ordered_json{{"schema", kSchema}, {"command", "verify"}, {"pass", all}, {"cases", cases}}.dump(2) << "\n";
  } else if (cfg.fmt() == Format::Csv) {
    std::cout << "case,report,checked,failed\n";
    for (const auto& r : results) {
      if (!r.error.empty()) std::cout << r.name << ",error,0,1\n";
      for (const auto& rep : r.reports) std::cout << r.name << "," << rep.name << "," << rep.checked << "," << rep.failed << "\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name;
      if (!r.error.empty()) std::cout << " error: " << r.error;
      for (const auto& rep : r.reports) std::cout << " " << rep.name.substr(0, rep.name.find(' ')) << " " << rep.checked - rep.failed << "/" << rep.checked;
      std::cout << "\n";
      for (const auto& rep : r.reports)
        for (const auto& row : rep.rows)
          if (!row.pass)
            std::cout << "    " << rep.name << ": " << row.statement << " " << row.cell << " lhs=" << row.lhs
                      << " rhs=" << row.rhs << "\n";
    }
    std::cout << (all ? "all checks passed" : "verification failed") << "\n";
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- k3

int cmd_k3(const RunConfig& cfg) {
  auto W = parse_polynomial(cfg.polynomial);
  auto M = build_mirror_pair(W, parse_k_spec(W, cfg.K));
  auto R = k3_report(M);
  const auto& P = R.params;
  const auto& Q = R.mirror_params;
  bool lattice_ok = true;
  if (R.lattice)
    lattice_ok = R.mirror_lattice->r == 20 - R.lattice->r && R.mirror_lattice->a == R.lattice->a;

  if (cfg.fmt() == Format::Json) {
    auto params = [](const K3Params& x) {
      ordered_json j = {{"a", x.a}, {"a_dual", x.a_v}, {"g", x.g}, {"g_dual", x.g_v}};
      if (x.order4()) {
        j["b"] = x.b;
        j["b_dual"] = x.b_v;
        j["c"] = x.c;
        j["c_dual"] = x.c_v;
      }
      return j;
    };
    auto inv = [](const K3Invariants& x) {
      ordered_json j = {{"N1", x.N1}, {"g1", x.g1}, {"f1", x.f1}};
      if (x.N2) {
        j["N2"] = *x.N2;
        j["g2"] = *x.g2;
      }
      return j;
    };
    ordered_json out = {{"schema", kSchema},
                        {"command", "k3"},
                        {"polynomial", W.to_string()},
                        {"K", cfg.K},
                        {"k", R.k},
                        {"params", params(P)},
                        {"mirror_params", params(Q)},
                        {"invariants", inv(R.inv)},
                        {"mirror_invariants", inv(R.mirror_inv)}};
    if (R.lattice) {
      out["lattice"] = {{"r", R.lattice->r}, {"a", R.lattice->a}};
      out["mirror_lattice"] = {{"r", R.mirror_lattice->r}, {"a", R.mirror_lattice->a}};
      out["lattice_mirror"] = lattice_ok;
    }
    out["checks"] = report_json(R.checks);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "W = " << W.to_string() << ", K = " << cfg.K << ", order " << R.k << "\n";
    std::cout << "table       a=" << P.a << " a'=" << P.a_v << " g=" << P.g << " g'=" << P.g_v;
    if (P.order4()) std::cout << " b=" << P.b << " b'=" << P.b_v << " c=" << P.c << " c'=" << P.c_v;
    std::cout << "\nfixed locus N1=" << R.inv.N1 << " g1=" << R.inv.g1 << " f1=" << R.inv.f1;
    if (R.inv.N2) std::cout << " N2=" << *R.inv.N2 << " g2=" << *R.inv.g2;
    std::cout << "\nmirror      N1=" << R.mirror_inv.N1 << " g1=" << R.mirror_inv.g1 << " f1=" << R.mirror_inv.f1;
    if (R.mirror_inv.N2) std::cout << " N2=" << *R.mirror_inv.N2 << " g2=" << *R.mirror_inv.g2;
    std::cout << "\n";
    if (R.lattice)
      std::cout << "lattice     (r,a)=(" << R.lattice->r << "," << R.lattice->a << ")  mirror (" << R.mirror_lattice->r
                << "," << R.mirror_lattice->a << ")  " << (lattice_ok ? "mirror lattices" : "NOT mirror lattices")
                << "\n";
    for (const auto& row : R.checks.rows)
      std::cout << (row.pass ? "  ok   " : "  FAIL ") << row.statement << (row.cell.empty() ? "" : " " + row.cell)
                << ": " << row.lhs << " vs " << row.rhs << "\n";
  }
  return R.checks.ok() && lattice_ok ? 0 : 1;
}

int emit_error(const RunConfig& cfg, const std::string& code, const std::string& msg, std::optional<std::size_t> pos,
               int status) {
  if (cfg.fmt() == Format::Json) {
    ordered_json e = {{"code", code}, {"message", msg}};
    if (pos) e["position"] = *pos;
    std::cout << ordered_json{{"schema", kSchema}, {"error", e}}.dump(2) << "\n";
  }
  std::cerr << "error: " << code << ": " << msg;
  if (pos) std::cerr << " (at " << *pos << ")";
  std::cerr << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berglund-Hubsch mirror computations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_poly = [&](CLI::App* sc) { sc->add_option("polynomial", cfg.polynomial, "e.g. x0^6+x1^3+x2^2")->required(); };

  auto* analyze = app.add_subcommand("analyze", "weights, atoms and symmetry groups");
  add_poly(analyze);
  analyze->add_option("--group", cfg.group, "J, SL, full, trivial or gen:[..];gen:[..]");
  add_format(analyze);

  auto* mirror = app.add_subcommand("mirror", "transpose polynomial and dual group");
  add_poly(mirror);
  mirror->add_option("--group", cfg.group, "group on all variables; its dual is printed");
  mirror->add_option("--K", cfg.K, "group on the variables of f (min, trivial, SL, J, full or generators)");
  add_format(mirror);

  auto* table = app.add_subcommand("table", "sector table of (W, K)");
  add_poly(table);
  table->add_option("--K", cfg.K, "group on the variables of f (min, trivial, SL, J, full or generators)");
  table->add_flag("--weights", cfg.weights, "resolve cells by s-weight");
  table->add_flag("--diamonds", cfg.diamonds, "resolve cells by bidegree");
  table->add_flag("--mirror", cfg.mirror, "print the table of the mirror pair");
  add_format(table);

  auto* verify = app.add_subcommand("verify", "run all checks over a catalog");
  verify->add_option("--catalog", cfg.catalog, "JSON catalog file; the built-in catalog by default");
  verify->add_option("--case", cfg.case_name, "run a single named case");
  add_format(verify);

  auto* k3 = app.add_subcommand("k3", "K3 table fit, fixed locus and lattice invariants");
  add_poly(k3);
  k3->add_option("--K", cfg.K, "group on the variables of f");
  add_format(k3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "mirror") return cmd_mirror(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "k3") return cmd_k3(cfg);
  } catch (const Error& e) {
    return emit_error(cfg, code_name(e.code()), e.detail(), e.position(), is_internal(e.code()) ? 3 : 2);
  } catch (const nlohmann::json::exception& e) {
    return emit_error(cfg, "CatalogError", e.what(), std::nullopt, 2);
  } catch (const std::invalid_argument& e) {
    return emit_error(cfg, "InvalidArgument", e.what(), std::nullopt, 2);
  } catch (const std::exception& e) {
    return emit_error(cfg, "InternalError", e.what(), std::nullopt, 3);
  }
  return 2;
}
