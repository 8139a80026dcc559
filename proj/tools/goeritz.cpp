#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goeritz/complex.hpp"
#include "goeritz/errors.hpp"
#include "goeritz/lens.hpp"
#include "goeritz/presentation.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/serialize.hpp"
#include "goeritz/shell_bridge.hpp"
#include "goeritz/verify.hpp"

namespace {

using namespace goeritz;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInvalid = 2;

constexpr int kMaxDepthCap = 4096;
constexpr int kMaxVerifyP = 500;
constexpr int kMaxVerifyLen = 16;

struct Config {
  std::string format = "text";
  int max_depth = kDefaultBridgeDepth;
  bool quiet = false;
};

void require_format(const Config& cfg, std::initializer_list<std::string_view> allowed, std::string_view cmd) {
  for (std::string_view f : allowed) {
    if (cfg.format == f) return;
  }
  throw InvalidInput("format " + cfg.format + " is not available for " + std::string(cmd));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string window_text(const std::optional<TypeWindow>& w) {
  if (!w) return "none";
  return "m=" + std::to_string(w->m) + " r=" + std::to_string(w->r);
}

int cmd_analyze(const Config& cfg, std::int64_t p, std::int64_t q) {
  require_format(cfg, {"text", "json"}, "analyze");
  const LensSpace L(p, q);
  const HeegaardSpaceReport rep = heegaard_space_report(L);
  if (cfg.format == "json") {
    Json j = lens_report(L);
    j["presentation"] = to_json(rep.quotient);
    j["heegaardSpace"] = to_json(rep);
    j["heegaardSpace"].erase("quotient");
    print_json(j);
    return kOk;
  }
  const LensInvariants inv = invariants(L);
  const DiffPi1Report pi = pi1_diff(L);
  std::cout << "L(" << p << "," << q << ")\n"
            << "q' = " << inv.q_prime << "\n"
            << "q^2 = 1 mod p: " << (inv.q_squared_is_one ? "yes" : "no") << "\n"
            << "classification: " << to_string(inv.classification) << "\n"
            << "window(q): " << window_text(inv.window_q) << "\n"
            << "window(q'): " << window_text(inv.window_q_prime) << "\n"
            << "pi1(Diff): " << to_string(pi.group) << (pi.smale_conditional ? " (Smale-conditional)" : "") << "\n"
            << "sequence: " << rep.sequence << "\n";
  if (const auto* g = std::get_if<GroupPresentation>(&rep.quotient)) {
    std::cout << "Goeritz group: " << pretty(*g) << "\n"
              << "abelianization: " << to_string(abelianization(*g)) << "\n";
  } else {
    std::cout << "Goeritz group: connected case; " << std::get<ConnectedCaseStub>(rep.quotient).note << "\n";
  }
  std::cout << "pi1(H): " << rep.conclusion << "\n";
  return kOk;
}

int cmd_shell(const Config& cfg, std::int64_t p, std::int64_t qbar) {
  require_format(cfg, {"text", "json"}, "shell");
  const Shell s = shell_words(p, qbar);
  const Json j = to_json(s);
  if (cfg.format == "json") {
    print_json(j);
    return kOk;
  }
  std::cout << "(" << p << "," << qbar << ")-shell around E = x\n";
  for (const Json& w : j["words"]) {
    std::cout << "E_" << w["k"].get<std::int64_t>() << "  " << w["word"].get<std::string>()
              << (w["primitive"].get<bool>() ? "  primitive" : "") << "\n";
  }
  return kOk;
}

int cmd_bridge(const Config& cfg, std::int64_t p, std::int64_t qbar) {
  require_format(cfg, {"text", "json"}, "bridge");
  const Bridge b = find_bridge(LensSpace(p, qbar), qbar, cfg.max_depth);
  if (cfg.format == "json") {
    print_json(to_json(b));
    return kOk;
  }
  const EndHomology h = bridge_end_homology(b);
  std::cout << "L(" << p << "," << qbar << ") qbar=" << qbar << " m=" << b.m << " r=" << b.r << "\n"
            << "w = " << (b.w.empty() ? "ε" : b.w) << "\n"
            << "D = " << format_word(b.d_word) << "\n"
            << "simplices: " << b.simplex_count << (b.tie ? " (tie at minimal depth)" : "") << "\n"
            << "homology: [l_E] = " << h.class_e << ", [l_D] = " << h.class_d << "\n";
  for (const auto& t : b.corridor) std::cout << "  {" << t[0] << ", " << t[1] << ", " << t[2] << "}\n";
  return kOk;
}

int cmd_presentation(const Config& cfg, std::int64_t p, std::int64_t q, const std::string& stabilizer, bool gap) {
  require_format(cfg, {"text", "json"}, "presentation");
  GoeritzResult res = [&]() -> GoeritzResult {
    if (stabilizer.empty()) return goeritz_presentation(LensSpace(p, q));
    const auto kind = parse_stabilizer_kind(stabilizer);
    if (!kind) throw InvalidInput("unknown stabilizer kind " + stabilizer);
    return stabilizer_presentation(*kind);
  }();
  const auto* g = std::get_if<GroupPresentation>(&res);
  if (gap) {
    if (!g) throw NotForest("connected case: no presentation is computed");
    std::cout << export_gap(*g);
    return kOk;
  }
  if (cfg.format == "json") {
    print_json(to_json(res));
  } else if (g) {
    std::cout << export_text(*g);
    if (!cfg.quiet) std::cout << "# " << pretty(*g) << "\n";
  } else {
    std::cout << std::get<ConnectedCaseStub>(res).manifold << ": connected case; "
              << std::get<ConnectedCaseStub>(res).note << "\n";
  }
  return kOk;
}

struct ComplexArgs {
  std::string kind;
  std::vector<std::int64_t> params;
  int depth = 3;
  int radius = 2;
  int branching = 3;
  std::string output;
};

int cmd_complex(const Config& cfg, const ComplexArgs& a) {
  require_format(cfg, {"text", "json", "dot"}, "complex");
  if (a.params.size() != 2) throw InvalidInput("complex " + a.kind + " takes two integers");
  const std::int64_t p = a.params[0];
  const std::int64_t q = a.params[1];
  SimplicialComplex2 c;
  if (a.kind == "shell") {
    c = build_shell_complex(shell_words(p, q));
  } else if (a.kind == "principal") {
    const auto w = type_window(p, q);
    if (!w) throw NotForest("qbar = " + std::to_string(q) + " has no (m, r) window for p = " + std::to_string(p));
    c = build_principal_complex(p, q, w->m, w->r, a.depth);
  } else if (a.kind == "bridge") {
    c = build_bridge_corridor(find_bridge(LensSpace(p, q), q, cfg.max_depth));
  } else if (a.kind == "tree") {
    c = build_tree_of_trees_ball(LensSpace(p, q), a.radius, a.branching);
  } else {
    throw InvalidInput("unknown complex kind " + a.kind + " (shell, principal, bridge, tree)");
  }
  std::string doc;
  if (cfg.format == "dot") {
    doc = export_dot(c);
  } else if (cfg.format == "json") {
    doc = export_json(c);
  } else {
    std::ostringstream out;
    out << a.kind << " complex: " << c.vertices().size() << " vertices, " << c.edges().size() << " edges, "
        << c.triangles().size() << " triangles, euler characteristic " << c.euler_characteristic() << "\n";
    for (const auto& [label, v] : c.vertices()) {
      out << "  " << label;
      if (v.word) out << "  " << format_word(*v.word);
      if (v.primitive && *v.primitive) out << "  primitive";
      out << "\n";
    }
    doc = out.str();
  }
  if (a.output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + a.output);
    f << doc;
  }
  return kOk;
}

int cmd_verify(const Config& cfg, VerifyConfig vc, const std::vector<std::string>& suites) {
  require_format(cfg, {"text", "json"}, "verify");
  if (vc.max_p < 2 || vc.max_p > kMaxVerifyP) throw InvalidInput("--max-p must be in [2, " + std::to_string(kMaxVerifyP) + "]");
  if (vc.max_len < 1 || vc.max_len > kMaxVerifyLen) {
    throw InvalidInput("--max-len must be in [1, " + std::to_string(kMaxVerifyLen) + "]");
  }
  if (vc.oz_max_len < 1 || vc.oz_max_len > kMaxEnumerationLength) {
    throw InvalidInput("--oz-len must be in [1, " + std::to_string(kMaxEnumerationLength) + "]");
  }
  vc.max_depth = cfg.max_depth;
  std::vector<SuiteResult> results;
  for (const std::string& name : suites.empty() ? suite_names() : suites) results.push_back(run_suite(name, vc));
  bool ok = true;
  Json all = Json::array();
  for (const SuiteResult& r : results) {
    ok = ok && r.passed;
    all.push_back(to_json(r));
  }
  if (cfg.format == "json") {
    print_json(Json{{"passed", ok}, {"suites", all}});
  } else {
    for (const SuiteResult& r : results) {
      if (cfg.quiet && r.passed) continue;
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  checked=" << r.checked << " failures=" << r.failures
                << "\n";
      for (const Json& ce : r.counterexamples) std::cout << "  " << ce.dump() << "\n";
    }
    std::cout << (ok ? "all suites passed" : "verification failed") << "\n";
  }
  return ok ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 Goeritz groups of lens spaces: primitivity, shells, bridges and presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "Bridge search depth limit")
      ->check(CLI::Range(0, kMaxDepthCap))
      ->capture_default_str();
  app.add_flag("--quiet", cfg.quiet, "Less output");

  std::int64_t p = 0;
  std::int64_t q = 0;
  auto add_pq = [&](CLI::App* sub, const char* second) {
    sub->add_option("p", p, "p")->required();
    sub->add_option(second, q, second)->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Invariants, classification and presentation of L(p,q)");
  add_pq(analyze, "q");
  auto* shell = app.add_subcommand("shell", "Shell words around a primitive disk");
  add_pq(shell, "qbar");
  auto* bridge = app.add_subcommand("bridge", "Minimal bridge in L(p,qbar) for type qbar");
  add_pq(bridge, "qbar");

  auto* presentation = app.add_subcommand("presentation", "Goeritz group or stabilizer presentation");
  std::vector<std::int64_t> pres_pq;
  std::string stabilizer;
  bool gap = false;
  presentation->add_option("pq", pres_pq, "p q")->expected(0, 2);
  presentation->add_option("--stabilizer", stabilizer, "Stabilizer kind, e.g. Vertex or TTVertex_qSq1");
  presentation->add_flag("--gap", gap, "Emit GAP input");

  auto* complex = app.add_subcommand("complex", "Export a finite complex (shell, principal, bridge, tree)");
  ComplexArgs cargs;
  complex->add_option("kind", cargs.kind, "shell | principal | bridge | tree")
      ->required()
      ->check(CLI::IsMember({"shell", "principal", "bridge", "tree"}));
  complex->add_option("params", cargs.params, "p q (or p qbar)")->expected(2);
  complex->add_option("--depth", cargs.depth, "Principal complex depth")->capture_default_str();
  complex->add_option("--radius", cargs.radius, "Tree ball radius")->capture_default_str();
  complex->add_option("--branching", cargs.branching, "Children drawn per tree vertex")->capture_default_str();
  complex->add_option("-o,--output", cargs.output, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  VerifyConfig vc;
  std::vector<std::string> suites;
  std::string inject;
  verify->add_option("--max-p", vc.max_p, "Largest p for shell, bridge and presentation sweeps")->capture_default_str();
  verify->add_option("--classification-max-p", vc.classification_max_p, "Largest p for the classification sweep")
      ->capture_default_str();
  verify->add_option("--max-len", vc.max_len, "Exhaustive word length for obstruction soundness")->capture_default_str();
  verify->add_option("--oz-len", vc.oz_max_len, "Primitive enumeration length for OZ necessity")->capture_default_str();
  verify->add_option("--random-words", vc.random_words, "Random words for obstruction soundness")->capture_default_str();
  verify->add_option("--seed", vc.seed, "Random seed");
  verify->add_option("--threads", vc.threads, "Worker threads (0: all cores)");
  verify->add_option("--suite", suites, "Run only these suites")->check(CLI::IsMember(suite_names()));
  verify->add_option("--inject-failure", inject, "Testing only: force a failure in a suite (or all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, p, q);
    if (*shell) return cmd_shell(cfg, p, q);
    if (*bridge) return cmd_bridge(cfg, p, q);
    if (*presentation) {
      if (stabilizer.empty() && pres_pq.size() != 2) throw InvalidInput("presentation needs p q or --stabilizer");
      return cmd_presentation(cfg, pres_pq.empty() ? 0 : pres_pq[0], pres_pq.size() < 2 ? 0 : pres_pq[1], stabilizer,
                              gap);
    }
    if (*complex) return cmd_complex(cfg, cargs);
    if (*verify) {
      if (!inject.empty()) vc.inject_failure = inject;
      return cmd_verify(cfg, vc, suites);
    }
  } catch (const NotForest& e) {
    std::cerr << "goeritz: not a forest case: " << e.what() << "\n";
    return kDomain;
  } catch (const DepthLimitExceeded& e) {
    std::cerr << "goeritz: " << e.what() << " (raise --max-depth)\n";
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "goeritz: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "goeritz: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
