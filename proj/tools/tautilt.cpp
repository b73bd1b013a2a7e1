#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "tautilt/coinv/coinvariant.hpp"
#include "tautilt/io/json.hpp"

using namespace tautilt;
using io::json;

namespace {

constexpr int kExitParse = 64;
constexpr int kExitBudget = 4;
constexpr int kExitDomain = 5;
constexpr int kExitInternal = 70;

struct Globals {
  std::uint64_t seed = 0;
  bool json_out = false;
  unsigned threads = 1;
  std::size_t max_group_order = 100000;
  std::size_t max_dim = kDefaultGramCap;
};

struct GroupArgs {
  std::size_t n = 0;
  std::string group;
  std::uint32_t p = 0;
};

PermutationGroup make_group(const Globals& g, std::size_t n, const std::string& gens) {
  if (n == 0) throw InvalidArgument("--n must be positive");
  return PermutationGroup(n, parse_generators(gens, n), g.max_group_order);
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string matrix_text(const SymmetricIntegerMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.size(); ++j) s += (j ? ", " : "") + std::to_string(m(i, j));
    s += "]\n";
  }
  return s;
}

std::string vector_text(const IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

int run_decide(const Globals& g, std::uint32_t p, std::uint64_t m, std::size_t n, const std::string& group) {
  const auto h = make_group(g, n, group);
  const auto v = decide(p, m, n, h, g.seed);
  std::string text = to_string(v.verdict) + " (rule " + v.rule + ")\n";
  text += "  l = " + std::to_string(v.l) + ", p^l >= n: " + (v.pl_ge_n ? "yes" : "no") +
          ", #IBr H = " + std::to_string(v.ibr) + "\n";
  if (v.hyperfocal) text += "  rank of R = " + std::to_string(v.hyperfocal->rank) + "\n";
  if (!v.witness.empty()) text += "  witness v = " + vector_text(v.witness) + "\n";
  emit(g, io::verdict_to_json(v), text);
  return exit_code(v.verdict);
}

int run_cartan(const Globals& g, const GroupArgs& a, bool verify) {
  const auto h = make_group(g, a.n, a.group);
  const auto r = cartan_formula(a.n, h, a.p, g.seed);
  auto j = io::cartan_to_json(a.n, a.group, a.p, r);
  std::string text = "Cartan matrix over F_" + std::to_string(r.field.order()) + ":\n" + matrix_text(r.matrix);
  if (verify) {
    const auto c = cartan_via_chop(a.n, h, r);
    const bool eq = c == r.matrix;
    j["chop_matrix"] = io::symmetric_matrix_to_json(c);
    j["verified"] = eq;
    text += std::string("verified by chop: ") + (eq ? "true" : "false") + "\n";
    emit(g, j, text);
    return eq ? 0 : 1;
  }
  emit(g, j, text);
  return 0;
}

int run_screen(const Globals& g, const std::string& file, const std::string& nakayama, bool weakly_symmetric) {
  const auto c = io::symmetric_matrix_from_json(io::read_file(file));
  ScreenVerdict v;
  if (weakly_symmetric) {
    if (!nakayama.empty()) throw InvalidArgument("--nakayama and --weakly-symmetric are exclusive");
    v = weakly_symmetric_screen(c);
  } else {
    const auto nu = nakayama.empty() ? Permutation::identity(c.size()) : parse_cycles(nakayama, c.size());
    v = selfinjective_screen(c, nu);
  }
  std::string text = to_string(v.verdict) + "\n";
  if (v.witness) text += "  witness " + vector_text(*v.witness) + "\n";
  text += "  " + v.justification + "\n";
  emit(g, io::screen_to_json(v), text);
  return io::exit_code(v.verdict);
}

int run_selfinjective(const Globals& g, const GroupArgs& a) {
  const auto h = make_group(g, a.n, a.group);
  if (!is_prime(a.p)) throw InvalidArgument("p must be prime");
  const SkewAlgebra<FiniteField> alg(a.n, h, FiniteField(a.p, 1));
  const auto cert = gram_matrix(alg, g.threads, g.max_dim);
  std::string text = "dim = " + std::to_string(alg.dimension()) + ", rank = " + std::to_string(cert.rank) +
                     (cert.nondegenerate ? ", nondegenerate\n" : ", degenerate\n");
  emit(g, io::gram_to_json(a.n, a.group, cert), text);
  return cert.nondegenerate ? 0 : 1;
}

BasedAlgebra fixture(const std::string& name) {
  const FiniteField f2(2, 1);
  if (name == "dual-numbers") return truncated_polynomial_algebra(f2, 2);
  if (name == "a2") return from_quiver(f2, 2, {{"a", 0, 1}}, {}, 4);
  if (name == "klein-four") return from_group_algebra(PermutationGroup(4, parse_generators("(1 2)(3 4), (1 3)(2 4)", 4)), f2);
  if (name == "coinvariant-n2") return from_skew_coinvariant(2, PermutationGroup(2, {}), 2);
  if (name == "two-loop") return two_loop_counterexample_algebra(f2);
  throw InvalidArgument("unknown fixture '" + name + "'");
}

int run_explore(const Globals& g, const std::string& file, const std::string& fix, const GroupArgs& skew,
                std::size_t budget, bool complexes, bool dump_algebra) {
  const int sources = !file.empty() + !fix.empty() + (skew.n != 0);
  if (sources != 1) throw InvalidArgument("give exactly one of --algebra, --fixture, or --n/--group/--p");
  std::optional<BasedAlgebra> alg;
  if (!file.empty()) alg.emplace(io::algebra_from_json(io::read_file(file)));
  else if (!fix.empty()) alg.emplace(fixture(fix));
  else alg.emplace(from_skew_coinvariant(skew.n, make_group(g, skew.n, skew.group), skew.p));
  if (alg->dimension() > g.max_dim) throw DimensionBudget("algebra dimension exceeds --max-dim");
  const auto graph = explore(*alg, budget, g.threads);
  auto j = io::exchange_graph_to_json(*alg, graph, complexes);
  if (dump_algebra) j["algebra"] = io::algebra_to_json(*alg);
  std::string text = to_string(graph.status) + ": " + std::to_string(graph.objects.size()) + " objects, " +
                     std::to_string(graph.edges.size()) + " mutation edges\n";
  for (std::size_t i = 0; i < graph.objects.size() && i < 20; ++i) {
    text += "  ";
    for (const auto& row : graph.key(*alg, i)) text += vector_text(row) + " ";
    text += "\n";
  }
  if (graph.objects.size() > 20) text += "  ...\n";
  emit(g, j, text);
  return io::exit_code(graph.status);
}

int run_coinv(const Globals& g, std::size_t n, const std::string& poly, std::uint32_t p, const std::string& trace,
              bool hilbert) {
  if (n == 0) throw InvalidArgument("--n must be positive");
  json j{{"n", n}};
  std::string text;
  if (!poly.empty()) {
    const auto ip = parse_polynomial(poly, n);
    std::string nf;
    json terms = json::array();
    if (p == 0) {
      const auto e = normal_form(ip, RationalField{});
      nf = to_string(e);
      for (const auto& [i, c] : e.terms()) terms.push_back({{"monomial", monomial_to_string(e.ring().monomial(i))}, {"coeff", c.get_str()}});
    } else {
      if (!is_prime(p)) throw InvalidArgument("p must be prime");
      const auto e = normal_form(ip, FiniteField(p, 1));
      nf = to_string(e);
      for (const auto& [i, c] : e.terms()) terms.push_back({{"monomial", monomial_to_string(e.ring().monomial(i))}, {"coeff", c}});
      j["p"] = p;
    }
    j["normal_form"] = nf;
    j["terms"] = terms;
    text += "normal form: " + nf + "\n";
  }
  if (!trace.empty()) {
    const auto t = trace_of_permutation(parse_cycles(trace, n), n);
    j["trace"] = t;
    text += "trace: " + std::to_string(t) + "\n";
  }
  if (hilbert) {
    const auto h = hilbert_function(n);
    j["hilbert"] = h;
    text += "Hilbert function:";
    for (auto x : h) text += " " + std::to_string(x);
    text += "\n";
  }
  if (poly.empty() && trace.empty() && !hilbert) throw InvalidArgument("coinv needs --normal-form, --trace or --hilbert");
  emit(g, j, text);
  return 0;
}

int report_error(const Globals& g, const std::string& kind, const std::string& what, int code) {
  std::cerr << "error (" << kind << "): " << what << "\n";
  if (g.json_out) std::cout << json{{"error", kind}, {"message", what}, {"exit_code", code}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting finiteness tools for skew group algebras of coinvariant algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized module computations")->capture_default_str();
  app.add_flag("--json", g.json_out, "emit JSON on stdout");
  app.add_option("--threads", g.threads, "worker threads for Gram rows and exploration")->capture_default_str();
  app.add_option("--max-group-order", g.max_group_order, "abort if a group exceeds this order")->capture_default_str();
  app.add_option("--max-dim", g.max_dim, "abort if an algebra exceeds this dimension")->capture_default_str();

  std::uint32_t dp = 0;
  std::uint64_t dm = 0;
  std::size_t dn = 0;
  std::string dgroup;
  auto* dec = app.add_subcommand("decide", "tau-tilting finiteness of k[(Z/mZ)^n x| H]");
  dec->add_option("--p", dp, "characteristic")->required();
  dec->add_option("--m", dm, "exponent of the abelian normal subgroup")->required();
  dec->add_option("--n", dn, "rank / degree of H")->required();
  dec->add_option("--group", dgroup, "generators of H in cycle notation")->required();

  GroupArgs ca;
  bool verify = false;
  auto* car = app.add_subcommand("cartan", "Cartan matrix of the skew group algebra (H a p'-group)");
  car->add_option("--n", ca.n)->required();
  car->add_option("--group", ca.group)->required();
  car->add_option("--p", ca.p)->required();
  car->add_flag("--verify-chop", verify, "recompute every entry with the MeatAxe");

  std::string cartan_file, nakayama;
  bool weakly = false;
  auto* scr = app.add_subcommand("screen", "quadratic-form screens on a Cartan matrix");
  scr->add_option("--cartan", cartan_file, "JSON file with the matrix")->required()->check(CLI::ExistingFile);
  scr->add_option("--nakayama", nakayama, "Nakayama permutation in cycle notation");
  scr->add_flag("--weakly-symmetric", weakly, "use the weakly symmetric screen");

  GroupArgs sa;
  auto* sel = app.add_subcommand("selfinjective", "Gram certificate of the Frobenius pairing");
  sel->add_option("--n", sa.n)->required();
  sel->add_option("--group", sa.group)->required();
  sel->add_option("--p", sa.p)->required();

  std::string alg_file, fix;
  GroupArgs ea;
  std::size_t budget = 1000;
  bool complexes = false, dump_algebra = false;
  auto* exp = app.add_subcommand("explore", "breadth-first search of two-term silting mutations");
  exp->add_option("--algebra", alg_file, "BasedAlgebra JSON file")->check(CLI::ExistingFile);
  exp->add_option("--fixture", fix, "dual-numbers | a2 | klein-four | coinvariant-n2 | two-loop");
  exp->add_option("--n", ea.n, "skew coinvariant algebra: n");
  exp->add_option("--group", ea.group, "skew coinvariant algebra: H");
  exp->add_option("--p", ea.p, "skew coinvariant algebra: characteristic");
  exp->add_option("--budget", budget, "maximum number of objects")->capture_default_str();
  exp->add_flag("--complexes", complexes, "include every summand complex in the JSON");
  exp->add_flag("--dump-algebra", dump_algebra, "include the algebra's structure constants in the JSON");

  std::size_t cn = 0;
  std::string poly, trace;
  std::uint32_t cp = 0;
  bool hilbert = false;
  auto* coi = app.add_subcommand("coinv", "coinvariant algebra utilities");
  coi->add_option("--n", cn)->required();
  coi->add_option("--normal-form", poly, "polynomial in x1..xn");
  coi->add_option("--p", cp, "reduce coefficients mod p (default: rational)");
  coi->add_option("--trace", trace, "trace of a permutation on the coinvariant algebra");
  coi->add_flag("--hilbert", hilbert, "graded dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*dec) return run_decide(g, dp, dm, dn, dgroup);
    if (*car) return run_cartan(g, ca, verify);
    if (*scr) return run_screen(g, cartan_file, nakayama, weakly);
    if (*sel) return run_selfinjective(g, sa);
    if (*exp) return run_explore(g, alg_file, fix, ea, budget, complexes, dump_algebra);
    if (*coi) return run_coinv(g, cn, poly, cp, trace, hilbert);
  } catch (const ParseError& e) {
    return report_error(g, e.kind(), e.what(), kExitParse);
  } catch (const OrderBudgetExceeded& e) {
    return report_error(g, e.kind(), e.what(), kExitBudget);
  } catch (const DimensionBudget& e) {
    return report_error(g, e.kind(), e.what(), kExitBudget);
  } catch (const RandomBudgetExhausted& e) {
    return report_error(g, e.kind(), e.what(), kExitBudget);
  } catch (const Error& e) {
    return report_error(g, e.kind(), e.what(), kExitDomain);
  } catch (const std::exception& e) {
    return report_error(g, "internal", e.what(), kExitInternal);
  }
  return kExitInternal;
}
