#include "cuntz/commands.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuntz/dynamics.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/gamma.hpp"
#include "cuntz/invertibility.hpp"
#include "cuntz/random_gen.hpp"
#include "cuntz/stabilize.hpp"
#include "cuntz/text.hpp"

namespace cuntz {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CuntzError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CuntzError("cannot write " + path);
  out << content;
}

json words_json(const std::vector<Word>& ws, int n) {
  json a = json::array();
  for (const Word& w : ws) a.push_back(format_word(w, n));
  return a;
}

json cylinder_json(const CylinderUnion& c) { return words_json(c.words(), c.alphabet()); }

json cycle_json(const GammaGraph& g, const GammaCycle& c) {
  json a = json::array();
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    a.push_back(words_json(g.vertices[static_cast<std::size_t>(c.vertices[i])], g.n));
    a.push_back(std::to_string(c.labels[i]));
  }
  a.push_back(words_json(g.vertices[static_cast<std::size_t>(c.vertices.front())], g.n));
  return a;
}

json point_json(const EpPoint& p, int n) {
  return json{{"preperiod", format_word(p.preperiod(), n)},
              {"period", format_word(p.period(), n)}};
}

struct CommandOutcome {
  json body;
  int exit_code = 0;
};

CommandOutcome cmd_verify(const std::string& file) {
  PolyUnitary u = parse_unitary(slurp(file));
  json j{{"schema", "1"},       {"valid", true},
         {"n", u.alphabet()},   {"pairs", u.pairs().size()},
         {"ell", u.ell()},      {"ell_prime", u.ell_prime()}};
  return {j, 0};
}

CommandOutcome cmd_diag(const std::string& file, const std::string& dot_path) {
  PolyUnitary u = parse_unitary(slurp(file));
  DiagonalVerdict v = decide_diagonal(u);
  json j{{"schema", "1"},
         {"vertices", v.graph.vertices.size()},
         {"edges", v.graph.edge_count()}};
  if (v.automorphism) {
    j["verdict"] = "automorphism";
  } else {
    j["verdict"] = "not_automorphism";
    j["cycle"] = cycle_json(v.graph, *v.cycle);
    j["witness_vertex"] = words_json(v.witness_vertex(), v.graph.n);
  }
  if (!dot_path.empty()) spit(dot_path, to_dot(v.graph));
  return {j, 0};
}

CommandOutcome cmd_stabilize(const std::string& file, const std::string& word, int max_k) {
  PolyUnitary u = parse_unitary(slurp(file));
  Word gamma = parse_word(word, u.alphabet());
  StabilizationResult r = stabilize_projection(u, gamma, max_k);
  json j{{"schema", "1"}, {"max_k", max_k}, {"trace", r.length_trace}};
  if (r.stabilized) {
    j["verdict"] = "stabilized";
    j["k"] = r.k;
    j["limit"] = cylinder_json(r.set);
    return {j, 0};
  }
  j["verdict"] = "budget_exceeded";
  j["last"] = cylinder_json(r.set);
  return {j, 2};
}

CommandOutcome cmd_check_level(const std::string& file, int max_k) {
  PolyUnitary u = parse_unitary(slurp(file));
  LevelCheck r = check_all_level(u, max_k);
  json j{{"schema", "1"}, {"level", u.ell_prime()}, {"max_k", max_k}};
  if (r.all_stabilized) {
    j["verdict"] = "all_stabilized";
    j["max_k_used"] = r.max_k_used;
    return {j, 0};
  }
  j["verdict"] = "failures";
  j["failures"] = words_json(r.failures, u.alphabet());
  return {j, 2};
}

CommandOutcome cmd_invert(const std::string& file, int depth, int max_k) {
  PolyUnitary u = parse_unitary(slurp(file));
  Budgets budgets;
  budgets.depth = depth;
  budgets.k_max = max_k;
  InvertibilityVerdict v = decide_invertible(u, budgets);
  json j{{"schema", "1"},
         {"budget", json{{"depth", depth}, {"k_max", max_k}}},
         {"stage", v.stage}};
  switch (v.kind) {
    case Invertibility::Invertible: {
      j["verdict"] = "invertible";
      j["gauge_applied"] = v.gauge_applied;
      if (!v.template_name.empty()) j["template"] = v.template_name;
      if (v.presentation) j["level"] = v.presentation->k;
      if (v.degree_one)
        j["degree_one_word"] = json{{"mu", format_word(v.degree_one->alpha, u.alphabet())},
                                    {"nu", format_word(v.degree_one->beta, u.alphabet())}};
      if (!v.certificates.empty()) {
        json certs = json::array();
        for (const auto& [key, cert] : v.certificates) {
          json labels = json::array();
          for (const OmegaPair& p : cert.pairs)
            labels.push_back(format_word(p.total_label, u.alphabet()));
          certs.push_back(json{{"from", format_word(key.first, u.alphabet())},
                               {"to", format_word(key.second, u.alphabet())},
                               {"cover", labels}});
        }
        j["certificates"] = certs;
      }
      return {j, 0};
    }
    case Invertibility::NotInvertible: {
      j["verdict"] = "not_invertible";
      j["witness_vertex"] = words_json(v.witness_vertex, u.alphabet());
      return {j, 0};
    }
    case Invertibility::Inconclusive:
    default:
      j["verdict"] = "inconclusive";
      return {j, 2};
  }
}

CommandOutcome cmd_compose(const std::string& file1, const std::string& file2,
                           const std::string& out_path) {
  PolyUnitary u = parse_unitary(slurp(file1));
  PolyUnitary w = parse_unitary(slurp(file2));
  PolyUnitary c = compose(u, w);
  spit(out_path, format_unitary(c));
  return {json{{"schema", "1"}, {"written", out_path}, {"pairs", c.pairs().size()}}, 0};
}

CommandOutcome cmd_adjoint(const std::string& file, const std::string& out_path) {
  PolyUnitary u = parse_unitary(slurp(file));
  PolyUnitary a = u.adjoint_unitary();
  spit(out_path, format_unitary(a));
  return {json{{"schema", "1"}, {"written", out_path}, {"pairs", a.pairs().size()}}, 0};
}

CommandOutcome cmd_fixed_points(const std::string& file, int depth, bool ad_classify) {
  PolyUnitary u = parse_unitary(slurp(file));
  json j{{"schema", "1"}, {"depth", depth}};
  if (ad_classify) {
    FixedPointReport r = classify_ad_fixed(u);
    json attract = json::array();
    json repel = json::array();
    for (const auto& [p, kind] : r.isolated)
      (kind == FixedKind::Attractor ? attract : repel).push_back(point_json(p, u.alphabet()));
    j["ad"] = json{{"clopen", cylinder_json(r.clopen_part)},
                   {"attractors", attract},
                   {"repellers", repel}};
  }
  DiagonalVerdict dv = decide_diagonal(u);
  if (dv.automorphism) {
    j["fixed_approx"] = cylinder_json(fixed_set_approx(u, depth));
  } else if (ad_classify) {
    j["fixed_approx"] = nullptr;
  } else {
    throw NotDiagonalAutomorphismError(
        "fixed set approximation needs a diagonal automorphism (use --ad-classify for the "
        "inner classification)");
  }
  return {j, 0};
}

CommandOutcome cmd_orbit(const std::string& file, const std::string& point, int steps) {
  PolyUnitary u = parse_unitary(slurp(file));
  auto colon = point.find(':');
  if (colon == std::string::npos) throw ParseError(0, "point must be SIGMA:TAU");
  EpPoint x(parse_word(point.substr(0, colon), u.alphabet()),
            parse_word(point.substr(colon + 1), u.alphabet()));
  json pts = json::array();
  pts.push_back(point_json(x, u.alphabet()));
  for (int i = 0; i < steps; ++i) {
    x = ad_point_map(u, x);
    pts.push_back(point_json(x, u.alphabet()));
  }
  return {json{{"schema", "1"}, {"steps", steps}, {"points", pts}}, 0};
}

CommandOutcome cmd_dim(const std::string& file, const std::string& corner, int level) {
  PolyUnitary u = parse_unitary(slurp(file));
  Word gamma = parse_word(corner, u.alphabet());
  int d = corner_dimension(u, gamma, level);
  return {json{{"schema", "1"}, {"dimension", d}, {"corner", corner}, {"level", level}}, 0};
}

CommandOutcome cmd_random(int n, int pairs, int max_len, std::uint64_t seed,
                          const std::string& out_path) {
  PolyUnitary u = random_unitary(n, pairs, max_len, seed);
  spit(out_path, format_unitary(u));
  return {json{{"schema", "1"}, {"written", out_path}, {"n", n}, {"pairs", u.pairs().size()}},
          0};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for unitary sums of words and their endomorphisms"};
  app.require_subcommand(1);

  std::string file, file2, out_path, word, point, corner, dot_path;
  int max_k = 50, depth = 12, level = 1, steps = 20;
  int rn = 2, rpairs = 3, rmax_len = 3;
  std::uint64_t seed = 1;
  bool json_flag = false, ad_classify = false;

  auto* verify = app.add_subcommand("verify", "validate a unitary file");
  verify->add_option("file", file)->required();

  auto* diag = app.add_subcommand("diag", "diagonal automorphism verdict via the word graph");
  diag->add_option("file", file)->required();
  diag->add_option("--dot", dot_path, "write the graph in DOT format");
  diag->add_flag("--json", json_flag, "JSON output (the default)");

  auto* stab = app.add_subcommand("stabilize", "iterate one projection to its limit");
  stab->add_option("file", file)->required();
  stab->add_option("--word", word)->required();
  stab->add_option("--max-k", max_k);

  auto* lvl = app.add_subcommand("check-level", "stabilize every word at the finite level");
  lvl->add_option("file", file)->required();
  lvl->add_option("--max-k", max_k);

  auto* inv = app.add_subcommand("invert", "global invertibility verdict");
  inv->add_option("file", file)->required();
  inv->add_option("--depth", depth);
  inv->add_option("--max-k", max_k);

  auto* comp = app.add_subcommand("compose", "compose two unitaries");
  comp->add_option("file1", file)->required();
  comp->add_option("file2", file2)->required();
  comp->add_option("-o,--output", out_path)->required();

  auto* adj = app.add_subcommand("adjoint", "adjoint of a unitary");
  adj->add_option("file", file)->required();
  adj->add_option("-o,--output", out_path)->required();

  auto* fix = app.add_subcommand("fixed-points", "fixed structure of the induced point map");
  fix->add_option("file", file)->required();
  fix->add_option("--depth", depth);
  fix->add_flag("--ad-classify", ad_classify, "inner attractor/repeller classification");

  auto* orb = app.add_subcommand("orbit", "orbit of an eventually periodic point");
  orb->add_option("file", file)->required();
  orb->add_option("--point", point)->required();
  orb->add_option("--steps", steps);

  auto* dim = app.add_subcommand("dim", "dimension of a compressed diagonal corner");
  dim->add_option("file", file)->required();
  dim->add_option("--corner", corner)->required();
  dim->add_option("--level", level);

  auto* rnd = app.add_subcommand("random", "seeded random unitary");
  rnd->add_option("--n", rn);
  rnd->add_option("--pairs", rpairs);
  rnd->add_option("--max-len", rmax_len);
  rnd->add_option("--seed", seed);
  rnd->add_option("-o,--output", out_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    CommandOutcome outcome;
    if (*verify)
      outcome = cmd_verify(file);
    else if (*diag)
      outcome = cmd_diag(file, dot_path);
    else if (*stab)
      outcome = cmd_stabilize(file, word, max_k);
    else if (*lvl)
      outcome = cmd_check_level(file, max_k);
    else if (*inv)
      outcome = cmd_invert(file, depth, max_k);
    else if (*comp)
      outcome = cmd_compose(file, file2, out_path);
    else if (*adj)
      outcome = cmd_adjoint(file, out_path);
    else if (*fix)
      outcome = cmd_fixed_points(file, depth, ad_classify);
    else if (*orb)
      outcome = cmd_orbit(file, point, steps);
    else if (*dim)
      outcome = cmd_dim(file, corner, level);
    else if (*rnd)
      outcome = cmd_random(rn, rpairs, rmax_len, seed, out_path);
    out << outcome.body.dump() << "\n";
    return outcome.exit_code;
  } catch (const BudgetExceededError& e) {
    err << json{{"schema", "1"}, {"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const CuntzError& e) {
    err << json{{"schema", "1"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace cuntz
