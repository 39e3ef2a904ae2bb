#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pieri/cone.hpp"
#include "pieri/diagrams.hpp"
#include "pieri/error.hpp"
#include "pieri/hibi.hpp"
#include "pieri/multiplicity.hpp"
#include "pieri/poset.hpp"
#include "pieri/standard_monomials.hpp"
#include "pieri/verify.hpp"

namespace pieri::cli {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "pieri/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure {};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw UsageError("malformed " + what + ": '" + text + "'");
  return v;
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const int v = parse_int(part, what);
    if (v < 0) throw UsageError("negative entry in " + what + ": '" + text + "'");
    out.push_back(v);
  }
  return out;
}

YoungDiagram parse_diagram(const std::string& text, const std::string& what) {
  auto rows = parse_list(text, what);
  if (!std::is_sorted(rows.rbegin(), rows.rend())) throw UsageError(what + " rows must be weakly decreasing: '" + text + "'");
  return YoungDiagram(std::move(rows));
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  for (const auto& part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError("malformed Z entry '" + part + "', expected s:t");
    out.emplace_back(parse_int(trim(part.substr(0, colon)), "Z"), parse_int(trim(part.substr(colon + 1)), "Z"));
  }
  return out;
}

json diagram_json(const YoungDiagram& d) { return json(std::vector<int>(d.rows().begin(), d.rows().end())); }
json composition_json(const Composition& c) { return json(std::vector<int>(c.parts().begin(), c.parts().end())); }

json point_json(const ConePoint& g) {
  const auto& p = g.poset();
  json rows = json::object();
  for (int level = -p.ell(); level <= p.ell(); ++level) rows[std::to_string(level)] = composition_json(row(g, level));
  json eps = json::object();
  for (int s = 1; s <= p.ell(); ++s)
    for (int t = s + 1; t <= p.ell(); ++t)
      eps[std::to_string(s) + "," + std::to_string(t)] = g.value(GammaElement::eps(s, t));
  return {{"rows", rows}, {"eps", eps}};
}

json record(const std::string& command, json parameters) {
  return {{"format", kFormat}, {"command", command}, {"parameters", std::move(parameters)}};
}

/// Options shared by the commands that take (k, ell, n?, D, P, F).
struct Query {
  std::string group = "o";
  int k = 1;
  int ell = 1;
  int n = 0;
  std::string d, p, f;
  CLI::Option* k_opt = nullptr;
  CLI::Option* ell_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App* cmd, bool with_group, bool with_f) {
    if (with_group) cmd->add_option("--group", group, "o, sp or gl")->check(CLI::IsMember({"o", "sp", "gl"}));
    k_opt = cmd->add_option("--k", k, "number of rows of D")->check(CLI::PositiveNumber);
    ell_opt = cmd->add_option("--ell", ell, "number of one-row factors")->check(CLI::PositiveNumber);
    n_opt = cmd->add_option("--n", n, "rank parameter of the group")->check(CLI::PositiveNumber);
    cmd->add_option("--D", d, "diagram D, e.g. 2,1");
    cmd->add_option("--P", p, "degrees p_1,...,p_ell");
    if (with_f) cmd->add_option("--F", f, "diagram F");
  }

  bool has_n() const { return n_opt->count() > 0; }

  YoungDiagram diagram_d() const { return parse_diagram(d, "D"); }
  YoungDiagram diagram_f() const { return parse_diagram(f, "F"); }

  /// P padded to ell entries when omitted; ell follows P when only P is given.
  Composition composition_p() {
    auto parts = parse_list(p, "P");
    if (group == "gl") return Composition(std::move(parts));
    if (!p.empty() && ell_opt->count() == 0 && !parts.empty()) ell = static_cast<int>(parts.size());
    if (parts.empty()) parts.assign(static_cast<std::size_t>(ell), 0);
    if (parts.size() != static_cast<std::size_t>(ell))
      throw UsageError("P must have ell = " + std::to_string(ell) + " entries");
    return Composition(std::move(parts));
  }

  int require_n() const {
    if (!has_n()) throw UsageError("--n is required for group " + group);
    return n;
  }

  json parameters(const YoungDiagram& dd, const Composition& pp, const std::optional<YoungDiagram>& ff) const {
    json j{{"group", group}, {"D", diagram_json(dd)}, {"P", composition_json(pp)}};
    if (group != "gl") {
      j["k"] = k;
      j["ell"] = ell;
    }
    if (has_n()) j["n"] = n;
    if (ff) j["F"] = diagram_json(*ff);
    return j;
  }
};

std::uint64_t gl_multiplicity(const YoungDiagram& f, const YoungDiagram& d, const Composition& p, int n) {
  if (f.num_rows() > n || !f.contains(d)) return 0;
  return kostka(SkewShape(f, d), p);
}

DiagramTable decompose(Query& q, const YoungDiagram& d, const Composition& p) {
  if (q.group == "gl") return gl_iterated_pieri(d, p, q.require_n());
  if (q.group == "sp") return decompose_sp(q.k, q.ell, d, p, q.require_n());
  return decompose_o(q.k, q.ell, d, p, q.has_n() ? std::optional<int>(q.n) : std::nullopt);
}

void check_o_range(const Query& q) {
  if (q.group == "o" && q.has_n() && !(2 * (q.k + q.ell) < q.n))
    throw Error("outside stable range: 2(k+ell) < n is required for this multiplicity formula");
  if (q.group == "sp" && q.k + q.ell > q.require_n())
    throw Error("k + ell <= n is required for the symplectic Pieri algebra");
}

int default_n(const CLI::Option* opt, int n, int k, int ell) { return opt->count() ? n : 2 * (k + ell) + 1; }

void write_table(std::ostream& os, const DiagramTable& table) {
  std::size_t width = 1;
  for (const auto& [f, m] : table) width = std::max(width, f.to_string().size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << "F" << "multiplicity\n";
  for (const auto& [f, m] : table) os << std::left << std::setw(static_cast<int>(width) + 2) << f.to_string() << m << '\n';
}

std::string dot_id(const std::string& s) { return '"' + s + '"'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pieri-rule multiplicities and Pieri algebra checks"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "write results to FILE instead of stdout");
  std::ostringstream buffer;

  Query mult_q;
  bool mult_verify = false, mult_json = false;
  auto* mult = app.add_subcommand("mult", "multiplicity of F in D (x) (p_1) (x) ... (x) (p_ell)");
  mult_q.attach(mult, true, true);
  mult->add_flag("--verify", mult_verify, "also count the fiber lattice points");
  mult->add_flag("--json", mult_json, "emit a JSON record");

  Query dec_q;
  bool dec_json = false;
  auto* dec = app.add_subcommand("decompose", "full decomposition table");
  dec_q.attach(dec, true, false);
  dec->add_flag("--json", dec_json, "emit a JSON record");

  Query cone_q;
  bool cone_list = false, cone_json = false;
  auto* cone = app.add_subcommand("cone", "lattice points of the fiber polytope");
  cone_q.attach(cone, false, true);
  cone->add_flag("--list", cone_list, "list the points as JSON");
  cone->add_flag("--json", cone_json, "emit the count as a JSON record");

  int hasse_k = 1, hasse_ell = 1;
  std::string hasse_format = "dot";
  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of the poset");
  auto* lattice_cmd = app.add_subcommand("lattice", "Hasse diagram of the lattice of increasing sets");
  for (auto* cmd : {poset_cmd, lattice_cmd}) {
    cmd->add_option("--k", hasse_k)->check(CLI::PositiveNumber);
    cmd->add_option("--ell", hasse_ell)->check(CLI::PositiveNumber);
    cmd->add_option("--format", hasse_format)->check(CLI::IsMember({"dot", "json"}));
  }

  int eta_k = 1, eta_ell = 1, eta_n = 0, eta_c = 0;
  std::string eta_i, eta_j, eta_z;
  bool eta_json = false;
  auto* eta = app.add_subcommand("eta", "generator polynomial and its leading monomial");
  eta->add_option("--k", eta_k)->check(CLI::PositiveNumber);
  eta->add_option("--ell", eta_ell)->check(CLI::PositiveNumber);
  auto* eta_n_opt = eta->add_option("--n", eta_n, "defaults to 2(k+ell)+1")->check(CLI::PositiveNumber);
  eta->add_option("--c", eta_c);
  eta->add_option("--I", eta_i, "index set, e.g. 1,2");
  eta->add_option("--J", eta_j, "index set");
  eta->add_option("--Z", eta_z, "eps members, e.g. 1:2,1:3");
  eta->add_flag("--json", eta_json, "emit a JSON record");

  int ver_k = 1, ver_ell = 1, ver_n = 0;
  unsigned ver_seed = 1;
  std::string ver_suite = "all";
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  ver->add_option("--suite", ver_suite)->check(CLI::IsMember(suites));
  ver->add_option("--k", ver_k)->check(CLI::PositiveNumber);
  ver->add_option("--ell", ver_ell)->check(CLI::PositiveNumber);
  auto* ver_n_opt = ver->add_option("--n", ver_n, "defaults to 2(k+ell)+1")->check(CLI::PositiveNumber);
  ver->add_option("--seed", ver_seed, "seed for random cone samples");
  ver->add_flag("--json", ver_json, "emit a JSON record");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ExitCode::ok : ExitCode::usage;
  }

  int status = ExitCode::ok;
  try {
    auto& os = buffer;
    if (*mult) {
      auto& q = mult_q;
      const auto d = q.diagram_d();
      const auto p = q.composition_p();
      const auto f = q.diagram_f();
      std::uint64_t m = 0;
      std::optional<std::uint64_t> cone_count;
      if (q.group == "gl") {
        m = gl_multiplicity(f, d, p, q.require_n());
      } else {
        check_o_range(q);
        m = multiplicity(q.k, q.ell, f, d, p);
        if (mult_verify) cone_count = multiplicity_via_cone(q.k, q.ell, f, d, p);
      }
      if (cone_count && *cone_count != m) status = ExitCode::verification;
      if (mult_json) {
        auto j = record("mult", q.parameters(d, p, f));
        j["multiplicity"] = m;
        if (cone_count) {
          j["cone_count"] = *cone_count;
          j["agree"] = *cone_count == m;
        }
        os << j.dump(2) << '\n';
      } else {
        os << m << '\n';
        if (cone_count) os << "cone count: " << *cone_count << (*cone_count == m ? " (agrees)" : " (MISMATCH)") << '\n';
      }
    } else if (*dec) {
      auto& q = dec_q;
      const auto d = q.diagram_d();
      const auto p = q.composition_p();
      const auto table = decompose(q, d, p);
      if (dec_json) {
        auto j = record("decompose", q.parameters(d, p, std::nullopt));
        j["results"] = json::array();
        for (const auto& [f, m] : table) j["results"].push_back({{"F", diagram_json(f)}, {"multiplicity", m}});
        os << j.dump(2) << '\n';
      } else {
        write_table(os, table);
      }
    } else if (*cone) {
      auto& q = cone_q;
      const auto d = q.diagram_d();
      const auto p = q.composition_p();
      const auto f = q.diagram_f();
      check_o_range(q);
      const auto points = enumerate_fiber(make_gamma_poset(q.k, q.ell), f, d, p);
      if (cone_list || cone_json) {
        auto j = record("cone", q.parameters(d, p, f));
        j["count"] = points.size();
        if (cone_list) {
          j["points"] = json::array();
          for (const auto& g : points) j["points"].push_back(point_json(g));
        }
        os << j.dump(2) << '\n';
      } else {
        os << points.size() << '\n';
      }
    } else if (*poset_cmd || *lattice_cmd) {
      const bool is_poset = static_cast<bool>(*poset_cmd);
      const auto poset = make_gamma_poset(hasse_k, hasse_ell);
      std::vector<std::string> nodes;
      std::vector<std::pair<std::string, std::string>> edges;
      if (is_poset) {
        for (const auto& e : poset->elements()) nodes.push_back(e.to_string());
        for (const auto& [upper, lower] : poset->hasse_edges()) edges.emplace_back(upper.to_string(), lower.to_string());
      } else {
        for (const auto& a : enumerate_generators(poset)) nodes.push_back(a.key().to_string());
        for (const auto& [lower, upper] : lattice_hasse(poset))
          edges.emplace_back(upper.key().to_string(), lower.key().to_string());
      }
      const std::string name = is_poset ? "poset" : "lattice";
      if (hasse_format == "json") {
        auto j = record(name, {{"k", hasse_k}, {"ell", hasse_ell}});
        j["nodes"] = nodes;
        j["edges"] = json::array();
        for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
        os << j.dump(2) << '\n';
      } else {
        os << "digraph " << name << " {\n";
        for (const auto& v : nodes) os << "  " << dot_id(v) << ";\n";
        for (const auto& [a, b] : edges) os << "  " << dot_id(a) << " -> " << dot_id(b) << ";\n";
        os << "}\n";
      }
    } else if (*eta) {
      const int n = default_n(eta_n_opt, eta_n, eta_k, eta_ell);
      const auto ctx = PieriContext::create(n, eta_k, eta_ell, false);
      const auto set = from_cijz(ctx->poset(), eta_c, parse_list(eta_i, "I"), parse_list(eta_j, "J"), parse_pairs(eta_z));
      for (const auto& [s, t] : set.key().z_set)
        if (!ctx->poset()->contains(GammaElement::eps(s, t))) throw Error("Z entries need 1 <= s < t <= ell");
      const auto poly = ctx->generator(set);
      const auto lm = monomial_to_string(*ctx->ring(), poly.leading_monomial());
      if (eta_json) {
        auto j = record("eta", {{"k", eta_k}, {"ell", eta_ell}, {"n", n}, {"key", set.key().to_string()}});
        j["polynomial"] = poly.to_string();
        j["lm"] = lm;
        j["lm_predicted"] = monomial_to_string(*ctx->ring(), lm_predicted(*ctx, chi(set)));
        os << j.dump(2) << '\n';
      } else {
        os << poly.to_string() << "\nLM: " << lm << '\n';
      }
    } else if (*ver) {
      const int n = default_n(ver_n_opt, ver_n, ver_k, ver_ell);
      const auto ctx = PieriContext::create(n, ver_k, ver_ell);
      const auto reports = run_suite(ver_suite, *ctx, ver_seed);
      bool all_ok = true;
      for (const auto& r : reports) all_ok = all_ok && r.ok();
      if (ver_json) {
        auto j = record("verify", {{"k", ver_k}, {"ell", ver_ell}, {"n", n}, {"suite", ver_suite}, {"seed", ver_seed}});
        j["suites"] = json::array();
        for (const auto& r : reports)
          j["suites"].push_back({{"name", r.name}, {"checked", r.checked}, {"passed", r.ok()}, {"failures", r.failures}});
        j["passed"] = all_ok;
        os << j.dump(2) << '\n';
      } else {
        for (const auto& r : reports) {
          os << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checked << " checked, " << r.failures.size()
             << " failed)\n";
          for (const auto& msg : r.failures) os << "  " << msg << '\n';
        }
      }
      if (!all_ok) status = ExitCode::verification;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::domain;
  }

  if (out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_file << '\n';
      return ExitCode::usage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace pieri::cli
