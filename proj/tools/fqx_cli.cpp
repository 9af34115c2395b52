// fqx -- combinatorics of F_q[x] and exact simulation of its measure-
// preserving actions. Reports are deterministic JSON (or CSV): identical
// inputs and seed produce byte-identical output. Rationals are always
// serialized as "num/den"; no floating point appears in any verdict path.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fqx/ideal.hpp"
#include "fqx/mds.hpp"
#include "fqx/sets.hpp"

using nlohmann::json;
using namespace fqx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

// Operation -> subcommand dispatch table; every core operation is reachable
// from exactly one subcommand (pinned by the coverage test).
const std::vector<std::pair<std::string, std::string>> kDispatch = {
    {"poly_divmod", "reduce"},
    {"reduce", "reduce"},
    {"ideal_member", "reduce"},
    {"ip_witness", "ideal-witness"},
    {"fs_set", "fs"},
    {"delta_set", "fs"},
    {"canonical_index", "fs"},
    {"is_syndetic", "syndetic"},
    {"is_thick", "classify-set"},
    {"is_ip_truncated", "classify-set"},
    {"central_necessary", "classify-set"},
    {"ipstar_proxy", "ipstar"},
    {"ip_obstruction", "ipstar"},
    {"ramsey_refine", "ramsey"},
    {"deg_pullback", "pullback"},
    {"enumerate_polys", "pullback"},
    {"build_system", "simulate"},
    {"correlation", "correlate"},
    {"correlation_set", "correlate"},
    {"classify_mixing", "correlate"},
    {"khintchine_set", "khintchine"},
};

struct GlobalOpts {
  int p = 0, q = 0, e = 1;
  std::string modulus;
  int D = 4;
  std::string eps = "1/10";
  unsigned long long seed = 0;
  std::string format = "json";
  bool pretty = false;
};

Field make_field_from(const GlobalOpts& g) {
  int p = g.p, e = g.e;
  if (g.q) {
    // Accept q = p^e for e <= 2.
    for (int cand = 2; cand <= g.q; ++cand) {
      if (cand * cand == g.q) { p = cand; e = 2; break; }
      if (cand == g.q) { p = cand; e = 1; break; }
    }
  }
  if (!p) throw Error("field not specified: pass --q or --p");
  std::vector<int> mod;
  if (!g.modulus.empty()) {
    std::stringstream ss(g.modulus);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        mod.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw Error("malformed modulus token '" + tok + "'");
      }
  }
  return make_field(p, e, std::move(mod));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@file" loads the file; otherwise the literal itself, with ';' standing
// in for line breaks in inline set programs.
std::string resolve_text(const std::string& arg, bool semicolon_lines) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  if (!semicolon_lines) return arg;
  std::string s = arg;
  std::replace(s.begin(), s.end(), ';', '\n');
  return s;
}

std::vector<Poly> parse_poly_list(const std::string& s, const Field& F) {
  std::vector<Poly> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '|')) out.push_back(poly_parse(tok, F));
  if (out.empty()) throw Error("empty polynomial list");
  return out;
}

// "X1:<poly>;X2:<poly>" -> generators (variable index, univariate poly).
IdealGens parse_gens(const std::string& s, int nvars, const Field& F) {
  std::vector<std::pair<int, Poly>> gens;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || tok.size() < 2 || tok[0] != 'X')
      throw Error("malformed generator '" + tok + "' (want Xi:coeffs)");
    int var;
    try {
      var = std::stoi(tok.substr(1, colon - 1)) - 1;
    } catch (const std::logic_error&) {
      throw Error("malformed generator variable in '" + tok + "'");
    }
    gens.emplace_back(var, poly_parse(tok.substr(colon + 1), F));
  }
  return IdealGens::make(nvars, std::move(gens));
}

json poly_json(const Poly& f, bool pretty) {
  return pretty ? poly_pretty(f) : poly_to_string(f);
}

json poly_list_json(const std::vector<Poly>& v, bool pretty) {
  json a = json::array();
  for (const auto& f : v) a.push_back(poly_json(f, pretty));
  return a;
}

json set_json(const TruncatedSet& s) {
  json j;
  j["universe"] = {{"p", s.spec().p}, {"e", s.spec().e}, {"D", s.D()},
                   {"size", s.size()}};
  j["count"] = s.count();
  j["members"] = s.members();
  return j;
}

json rat_json(const Rat& r) { return r.str(); }

// Events: "states:0,2" or "cyl:coordIdx=sym,coordIdx=sym" or @file.
struct EventSpec {
  bool cylinder = false;
  std::vector<long long> states;
  Cylinder cyl;
};

EventSpec parse_event(const std::string& arg, const Field& F) {
  std::string s = resolve_text(arg, false);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  EventSpec ev;
  if (s.rfind("states:", 0) == 0) {
    std::stringstream ss(s.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        ev.states.push_back(std::stoll(tok));
      } catch (const std::logic_error&) {
        throw Error("malformed state index '" + tok + "'");
      }
  } else if (s.rfind("cyl:", 0) == 0) {
    ev.cylinder = true;
    std::stringstream ss(s.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw Error("malformed cylinder constraint '" + tok + "'");
      long long coord;
      int sym;
      try {
        coord = std::stoll(tok.substr(0, eq));
        sym = std::stoi(tok.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw Error("malformed cylinder constraint '" + tok + "'");
      }
      ev.cyl.constraints.emplace_back(poly_from_index(coord, F, 16), sym);
    }
  } else {
    throw Error("event literal must start with 'states:' or 'cyl:'");
  }
  return ev;
}

EventSet realize_event(const EventSpec& ev, const FiniteMDS& sys, const Field& F) {
  if (ev.cylinder) return cylinder_to_event(sys, ev.cyl, F);
  return EventSet::from_indices(sys, ev.states);
}

json correlation_report_json(const CorrelationReport& rep) {
  json j;
  json values = json::array();
  for (long long i = 0; i < (long long)rep.values.size(); ++i)
    if (rep.values[i])
      values.push_back({i, rep.values[i]->num(), rep.values[i]->den()});
  j["values"] = values;
  j["product"] = rat_json(rep.product);
  j["epsilon"] = rat_json(rep.eps);
  j["good_set"] = rep.good.members();
  j["overflow"] = rep.excluded;
  return j;
}

json mixing_report_json(const MixingReport& rep, bool pretty) {
  json j = correlation_report_json(rep.corr);
  json v;
  v["cofinite"] = {{"holds", rep.cofinite},
                   {"band_degree", rep.cofinite_band},
                   {"complement", rep.complement}};
  if (rep.ipstar) {
    v["ipstar_proxy"] = {{"verdict", "yes"},
                         {"m", rep.ipstar->m},
                         {"exceptions",
                          poly_list_json(rep.ipstar->exceptions_removed, pretty)}};
  } else {
    v["ipstar_proxy"] = {{"verdict", "no"}};
  }
  if (rep.syndetic_cover) {
    v["syndetic"] = {{"verdict", "yes"},
                     {"cover", poly_list_json(*rep.syndetic_cover, pretty)}};
  } else {
    v["syndetic"] = {{"verdict", "no"}};
  }
  v["central_necessary"] = {{"piecewise_syndetic", rep.central.piecewise_syndetic}};
  j["verdicts"] = v;
  return j;
}

void emit(const json& j, const GlobalOpts& g) {
  if (g.format == "csv") {
    // Flat key,value rows; arrays inline as JSON text.
    std::ostringstream out;
    out << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ",\"" << it.value().dump() << "\"\n";
    std::cout << out.str();
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of F_q[x] and exact measure-preserving simulation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GlobalOpts g;
  app.add_option("--p", g.p, "prime characteristic");
  app.add_option("--q", g.q, "field size p^e (e <= 2)");
  app.add_option("--e", g.e, "extension degree");
  app.add_option("--modulus", g.modulus, "extension modulus coefficients, e.g. 1,1,1");
  app.add_option("--D", g.D, "universe degree bound");
  app.add_option("--eps", g.eps, "epsilon as a/b");
  app.add_option("--seed", g.seed, "seed for randomized commands");
  app.add_option("--format", g.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--pretty", g.pretty, "render polynomials as 1+X^2 for humans");

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "multivariate reduction / ideal membership");
  int nvars = 1;
  std::string arg_g, arg_gens;
  bool want_member = false;
  cmd_reduce->add_option("--nvars", nvars);
  cmd_reduce->add_option("--g", arg_g, "multipoly literal coef@e1,..;..")->required();
  cmd_reduce->add_option("--gens", arg_gens, "X1:coeffs;X2:coeffs")->required();
  cmd_reduce->add_flag("--member", want_member);

  // ideal-witness
  auto* cmd_wit = app.add_subcommand("ideal-witness", "finite-sum-into-ideal witness");
  std::string arg_seq, arg_seq_file;
  int scan_cap = 0, random_n = 0;
  cmd_wit->add_option("--nvars", nvars);
  cmd_wit->add_option("--gens", arg_gens)->required();
  cmd_wit->add_option("--seq", arg_seq, "multipoly list, '|' separated");
  cmd_wit->add_option("--seq-file", arg_seq_file, "file with one multipoly per line");
  cmd_wit->add_option("--scan-cap", scan_cap);
  cmd_wit->add_option("--random", random_n, "generate a seeded random injective sequence");

  // fs
  auto* cmd_fs = app.add_subcommand("fs", "finite sums / products / differences");
  std::string arg_family = "fs", arg_semigroup = "add", arg_polys;
  cmd_fs->add_option("--family", arg_family)->check(CLI::IsMember({"fs", "delta"}));
  cmd_fs->add_option("--semigroup", arg_semigroup)->check(CLI::IsMember({"add", "mul"}));
  cmd_fs->add_option("--gens", arg_polys, "poly list, '|' separated")->required();

  // classify-set
  auto* cmd_cls = app.add_subcommand("classify-set", "depth-k IP / thick / central-necessary");
  std::string arg_set;
  int depth = 3, thick_e = 1, central_m = 1;
  cmd_cls->add_option("--set", arg_set, "set program literal or @file")->required();
  cmd_cls->add_option("--depth", depth);
  cmd_cls->add_option("--thick-e", thick_e);
  cmd_cls->add_option("--central-m", central_m);

  // syndetic
  auto* cmd_syn = app.add_subcommand("syndetic", "translate cover search");
  int m_max = 2;
  bool mult = false;
  cmd_syn->add_option("--set", arg_set)->required();
  cmd_syn->add_option("--m-max", m_max);
  cmd_syn->add_flag("--mult", mult, "multiplicative cover");

  // ipstar
  auto* cmd_ipstar = app.add_subcommand("ipstar", "ideal-containment IP* proxy / obstruction");
  long long max_exceptions = 0;
  std::string arg_coset;
  cmd_ipstar->add_option("--set", arg_set);
  cmd_ipstar->add_option("--max-exceptions", max_exceptions);
  cmd_ipstar->add_option("--obstruct", arg_coset, "zero-free coset 'm r0,r1,..' with --seq");
  cmd_ipstar->add_option("--seq", arg_seq, "candidate sequence, '|' separated");

  // ramsey
  auto* cmd_ram = app.add_subcommand("ramsey", "monochromatic difference refinement");
  int target_len = 2, first_n = 0;
  cmd_ram->add_option("--set", arg_set)->required();
  cmd_ram->add_option("--seq", arg_seq);
  cmd_ram->add_option("--first", first_n, "use the first N universe polynomials");
  cmd_ram->add_option("--target-len", target_len);

  // pullback
  auto* cmd_pull = app.add_subcommand("pullback", "degree-map preimage");
  std::string arg_nat;
  bool nat_even = false;
  cmd_pull->add_option("--nat", arg_nat, "degree list, e.g. 0,2,4");
  cmd_pull->add_flag("--nat-even", nat_even);

  // simulate
  auto* cmd_sim = app.add_subcommand("simulate", "build and verify a system");
  std::string arg_system;
  cmd_sim->add_option("--system", arg_system, "system spec JSON file")->required();

  // correlate
  auto* cmd_cor = app.add_subcommand("correlate", "mu(A cap T_f B) and mixing verdicts");
  std::string arg_A, arg_B, arg_f;
  bool all_f = false, do_classify = false;
  cmd_cor->add_option("--system", arg_system)->required();
  cmd_cor->add_option("--A", arg_A)->required();
  cmd_cor->add_option("--B", arg_B);
  cmd_cor->add_option("--f", arg_f, "single acting polynomial");
  cmd_cor->add_flag("--all", all_f, "tabulate every acting f");
  cmd_cor->add_flag("--classify", do_classify, "attach mixing verdicts");

  // khintchine
  auto* cmd_kh = app.add_subcommand("khintchine", "recurrence set and syndetic verdict");
  std::string arg_coeffs;
  int powers = 0;
  int kh_m_max = -1;
  cmd_kh->add_option("--system", arg_system)->required();
  cmd_kh->add_option("--A", arg_A)->required();
  cmd_kh->add_option("--coeffs", arg_coeffs, "coefficient list, '|' separated");
  cmd_kh->add_option("--powers", powers, "power depth k (pullback systems)");
  cmd_kh->add_option("--m-max", kh_m_max, "syndetic cover degree bound");

  // ops (dispatch table, used by the coverage test)
  auto* cmd_ops = app.add_subcommand("ops", "print the operation dispatch table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    json out;

    if (cmd_ops->parsed()) {
      for (const auto& [op, sub] : kDispatch) out[op] = sub;
      emit(out, g);
      return kExitOk;
    }

    const Field F = make_field_from(g);

    if (cmd_reduce->parsed()) {
      const IdealGens gens = parse_gens(arg_gens, nvars, F);
      const MultiPoly gp = multipoly_parse(resolve_text(arg_g, false), nvars, F);
      const Reduction red = reduce(gp, gens, F);
      out["remainder"] = multipoly_to_string(red.remainder);
      json qs = json::array();
      for (const auto& h : red.quotients) qs.push_back(multipoly_to_string(h));
      out["quotients"] = qs;
      if (want_member) out["member"] = red.remainder.is_zero();
    } else if (cmd_wit->parsed()) {
      const IdealGens gens = parse_gens(arg_gens, nvars, F);
      std::vector<MultiPoly> seq;
      if (random_n > 0) {
        std::mt19937_64 rng(g.seed);
        std::set<MultiPoly> seen;
        while ((int)seq.size() < random_n) {
          MultiPoly m{nvars, {}};
          const int terms = 1 + int(rng() % 4);
          for (int t = 0; t < terms; ++t) {
            std::vector<int> e(nvars);
            for (int v = 0; v < nvars; ++v) e[v] = int(rng() % 5);
            const int c = int(rng() % F.q());
            if (c) m.terms[e] = c;
          }
          if (!m.is_zero() && seen.insert(m).second) seq.push_back(m);
        }
      } else {
        std::string text = !arg_seq_file.empty() ? slurp(arg_seq_file)
                                                 : resolve_text(arg_seq, false);
        std::stringstream ss(text);
        std::string line;
        const char sep = arg_seq_file.empty() ? '|' : '\n';
        while (std::getline(ss, line, sep))
          if (!line.empty()) seq.push_back(multipoly_parse(line, nvars, F));
      }
      if (scan_cap == 0)
        scan_cap = int((F.p() - 1) * gens.remainder_space(F) + 1);
      const Witness w = ip_witness(seq, gens, F, scan_cap);
      out["indices"] = w.indices;
      out["sum"] = multipoly_to_string(w.sum);
      out["class"] = w.card == Witness::Card::Singleton ? "singleton" : "p-fold";
    } else if (cmd_fs->parsed()) {
      const auto polys = parse_poly_list(resolve_text(arg_polys, false), F);
      if (arg_family == "fs") {
        const auto op = arg_semigroup == "add" ? SemigroupOp::Additive
                                               : SemigroupOp::Multiplicative;
        const FsResult r = fs_set(polys, op, F, g.D);
        out = set_json(r.set);
        out["overflow"] = r.overflow;
      } else {
        out = set_json(delta_set(polys, F, g.D));
      }
    } else if (cmd_cls->parsed()) {
      const TruncatedSet A = parse_set_program(resolve_text(arg_set, true), F, g.D);
      const IpSearchResult ip = is_ip_truncated(A, depth, F);
      out["ip_depth"] = {{"depth", depth},
                        {"found", ip.found},
                        {"generators", poly_list_json(ip.generators, g.pretty)}};
      const ThickResult th = is_thick(A, thick_e, F);
      json thick = {{"thick", th.thick}};
      if (th.witness) thick["witness"] = poly_json(*th.witness, g.pretty);
      out["thick"] = thick;
      const CentralNecessaryResult cn = central_necessary(A, central_m, thick_e, F);
      out["central_necessary"] = {{"piecewise_syndetic", cn.piecewise_syndetic}};
      out["params"] = {{"thick_e", thick_e}, {"central_m", central_m}};
      out["universe"] = set_json(A)["universe"];
    } else if (cmd_syn->parsed()) {
      const TruncatedSet A = parse_set_program(resolve_text(arg_set, true), F, g.D);
      const auto cover = mult ? is_syndetic_mult(A, m_max, F)
                              : is_syndetic(A, m_max, F);
      out["verdict"] = cover ? "yes" : "no";
      if (cover) out["cover"] = poly_list_json(*cover, g.pretty);
      out["params"] = {{"m_max", m_max}, {"mult", mult}};
      out["universe"] = set_json(A)["universe"];
    } else if (cmd_ipstar->parsed()) {
      if (!arg_coset.empty()) {
        std::stringstream ss(arg_coset);
        CosetStructure c;
        std::string rs;
        if (!(ss >> c.m >> rs)) throw Error("malformed coset literal '" + arg_coset + "'");
        std::stringstream is(rs);
        std::string tok;
        while (std::getline(is, tok, ','))
          c.residues.push_back(poly_from_index(std::stoll(tok), F, c.m));
        const auto seq = parse_poly_list(resolve_text(arg_seq, false), F);
        const Obstruction o = ip_obstruction(c, seq, F);
        out["indices"] = o.indices;
        out["sum"] = poly_json(o.sum, g.pretty);
      } else {
        if (arg_set.empty()) throw Error("ipstar needs --set or --obstruct");
        const TruncatedSet A = parse_set_program(resolve_text(arg_set, true), F, g.D);
        const auto c = ipstar_proxy(A, max_exceptions, F);
        out["verdict"] = c ? "yes" : "no";
        if (c) {
          out["m"] = c->m;
          out["exceptions"] = poly_list_json(c->exceptions_removed, g.pretty);
        }
        out["universe"] = set_json(A)["universe"];
      }
    } else if (cmd_ram->parsed()) {
      const TruncatedSet S = parse_set_program(resolve_text(arg_set, true), F, g.D);
      std::vector<Poly> seq;
      if (first_n > 0)
        for (long long i = 0; i < first_n; ++i) seq.push_back(poly_from_index(i, F, g.D));
      else
        seq = parse_poly_list(resolve_text(arg_seq, false), F);
      const RamseyResult r = ramsey_refine(seq, S, target_len, F);
      out["color"] = r.color;
      out["subsequence"] = r.subsequence;
      json polys = json::array();
      for (int i : r.subsequence) polys.push_back(poly_json(seq[i], g.pretty));
      out["polynomials"] = polys;
    } else if (cmd_pull->parsed()) {
      NatSet C;
      if (nat_even) {
        C = NatSet::evens(g.D);
      } else {
        std::vector<int> ns;
        std::stringstream ss(arg_nat);
        std::string tok;
        while (std::getline(ss, tok, ','))
          try {
            ns.push_back(std::stoi(tok));
          } catch (const std::logic_error&) {
            throw Error("malformed degree token '" + tok + "'");
          }
        C = NatSet::from_list(ns, g.D);
      }
      out = set_json(deg_pullback(C, F, g.D));
    } else if (cmd_sim->parsed()) {
      const SystemConfig cfg = parse_system_json(slurp(arg_system));
      const Field SF = make_field(cfg.p, cfg.e, cfg.modulus);
      const FiniteMDS sys = build_system(cfg, SF);
      verify_measure_preserving(sys, cfg.D, SF);
      out["kind"] = cfg.kind == SystemKind::Translation ? "translation"
                    : cfg.kind == SystemKind::Bernoulli ? "bernoulli"
                                                        : "pullback";
      out["states"] = sys.n_states;
      json w = json::array();
      for (const auto& r : sys.weights) w.push_back(rat_json(r));
      out["weights"] = w;
      out["measure_preserving"] = true;
      out["D"] = cfg.D;
    } else if (cmd_cor->parsed() || cmd_kh->parsed()) {
      const SystemConfig cfg = parse_system_json(slurp(arg_system));
      const Field SF = make_field(cfg.p, cfg.e, cfg.modulus);
      const FiniteMDS sys = build_system(cfg, SF);
      const Rat eps = Rat::parse(g.eps);
      const EventSpec evA = parse_event(arg_A, SF);
      const EventSet A = realize_event(evA, sys, SF);
      if (cmd_cor->parsed()) {
        const EventSpec evB = parse_event(arg_B.empty() ? arg_A : arg_B, SF);
        const EventSet B = realize_event(evB, sys, SF);
        if (!arg_f.empty()) {
          const Poly f = poly_parse(arg_f, SF);
          const Rat v = correlation(sys, A, B, f, SF);
          const Rat prod = A.measure(sys) * B.measure(sys);
          out["value"] = rat_json(v);
          out["product"] = rat_json(prod);
          out["in_good_set"] = (v - prod).abs() < eps;
          if (evA.cylinder && evB.cylinder && sys.kind == SystemKind::Bernoulli)
            out["cylinder_value"] = rat_json(
                cylinder_correlation(evA.cyl, evB.cyl, f, sys.sym_weights, SF));
        } else if (do_classify) {
          out = mixing_report_json(
              classify_mixing(sys, A, B, eps, cfg.D, SF), g.pretty);
        } else if (all_f) {
          out = correlation_report_json(correlation_set(sys, A, B, eps, cfg.D, SF));
        } else {
          throw Error("correlate needs --f, --all, or --classify");
        }
      } else {
        KhintchineReport rep = [&] {
          if (powers > 0)
            return khintchine_multiplicative(sys, A, powers, eps, cfg.D, SF, kh_m_max);
          if (arg_coeffs.empty()) throw Error("khintchine needs --coeffs or --powers");
          return khintchine_additive(sys, A,
                                     parse_poly_list(resolve_text(arg_coeffs, false), SF),
                                     eps, cfg.D, SF, kh_m_max);
        }();
        json values = json::array();
        for (long long i = 0; i < (long long)rep.values.size(); ++i)
          if (rep.values[i])
            values.push_back({i, rep.values[i]->num(), rep.values[i]->den()});
        out["values"] = values;
        out["threshold"] = rat_json(rep.threshold);
        out["set"] = rep.set.members();
        out["overflow"] = rep.overflow;
        out["syndetic"] = rep.syndetic_cover
                              ? json{{"verdict", "yes"},
                                     {"cover", poly_list_json(*rep.syndetic_cover, g.pretty)}}
                              : json{{"verdict", "no"}};
      }
    }

    emit(out, g);
    return kExitOk;
  } catch (const Error& e) {
    json err = {{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    json err = {{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return kExitDomain;
  }
}
