#include "goeritz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "goeritz/complex.hpp"
#include "goeritz/errors.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/presentation.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/shell_bridge.hpp"

namespace goeritz {

namespace {

struct Partial {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::vector<Json> counterexamples;
  std::size_t cap = 20;

  void fail(Json j) {
    ++failures;
    if (counterexamples.size() < cap) counterexamples.push_back(std::move(j));
  }
  void merge(Partial&& o) {
    checked += o.checked;
    failures += o.failures;
    for (Json& j : o.counterexamples) {
      if (counterexamples.size() < cap) counterexamples.push_back(std::move(j));
    }
  }
};

unsigned thread_count(const VerifyConfig& c) {
  if (c.threads != 0) return c.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(i, partial) for i in [0, n) on contiguous ranges and merges the
// partials in range order, so output does not depend on scheduling.
Partial parallel_for(std::size_t n, const VerifyConfig& c, const std::function<void(std::size_t, Partial&)>& body) {
  const std::size_t t = std::min<std::size_t>(thread_count(c), std::max<std::size_t>(n, 1));
  std::vector<Partial> parts(t);
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < t; ++k) {
    parts[k].cap = c.max_counterexamples;
    pool.emplace_back([&, k] {
      const std::size_t lo = n * k / t;
      const std::size_t hi = n * (k + 1) / t;
      for (std::size_t i = lo; i < hi; ++i) body(i, parts[k]);
    });
  }
  for (std::thread& th : pool) th.join();
  Partial out;
  out.cap = c.max_counterexamples;
  for (Partial& p : parts) out.merge(std::move(p));
  return out;
}

bool own_least_rotation(const std::vector<Letter>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j) == 0;
}

void extend(std::vector<Letter>& cur, int length, std::vector<std::vector<Letter>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    if (length > 1 && cur.back() == inverse(cur.front())) return;
    if (own_least_rotation(cur)) out.push_back(cur);
    return;
  }
  for (int l = 0; l < 4; ++l) {
    const auto letter = static_cast<Letter>(l);
    if (!cur.empty() && letter < cur.front()) continue;
    if (!cur.empty() && letter == inverse(cur.back())) continue;
    cur.push_back(letter);
    extend(cur, length, out);
    cur.pop_back();
  }
}

std::vector<std::int64_t> sorted_vector(const std::set<std::int64_t>& s) { return {s.begin(), s.end()}; }

Partial suite_l12_5(const VerifyConfig& c) {
  Partial out;
  out.cap = c.max_counterexamples;
  const Bridge b = find_bridge(LensSpace(12, 5), 5, c.max_depth);
  ++out.checked;
  const std::string d = format_word(b.d_word);
  if (!b.w.empty() || d != "xy^5xy^5xy^5xy^5xy^4" || b.simplex_count != 2) {
    out.fail({{"w", b.w}, {"dWord", d}, {"simplexCount", b.simplex_count}});
  }
  return out;
}

Partial suite_shell(const VerifyConfig& c) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cases;
  for (std::int64_t p = 4; p <= c.max_p; ++p) {
    for (std::int64_t qbar = 2; 2 * qbar <= p; ++qbar) {
      if (gcd(p, qbar) == 1) cases.emplace_back(p, qbar);
    }
  }
  return parallel_for(cases.size(), c, [&](std::size_t i, Partial& part) {
    const auto [p, qbar] = cases[i];
    const Shell s = shell_words(p, qbar);
    ++part.checked;
    const std::set<std::int64_t> got = oracle_primitive_indices(s);
    bool shape = s.words.front() == Word::generator(Gen::y, p);
    for (std::size_t k = 1; k < s.words.size(); ++k) {
      const AbelianPair a = abelianize(s.words[k]);
      shape = shape && is_cyclically_reduced(s.words[k]) && a.ex == static_cast<std::int64_t>(k) && a.ey == p;
      for (const Syllable& syl : s.words[k].syllables()) shape = shape && syl.exp > 0;
    }
    if (got != s.primitive_indices || !shape) {
      part.fail({{"p", p}, {"qbar", qbar}, {"expected", sorted_vector(s.primitive_indices)},
                 {"oracle", sorted_vector(got)}, {"shapeOk", shape}});
    }
  });
}

void check_soundness(const CyclicWord& w, Partial& part) {
  ++part.checked;
  const auto cert = certify_nonprimitive(w);
  if (!cert) return;
  const PrimitivityVerdict v = is_primitive_power(w);
  if (v.is_primitive_power) {
    part.fail({{"word", format_word(w.canonical())}, {"obstruction", to_json(*cert)}, {"oracle", to_json(v)}});
  }
}

Partial suite_soundness(const VerifyConfig& c) {
  Partial out;
  out.cap = c.max_counterexamples;
  for (int len = 1; len <= c.max_len; ++len) {
    const auto words = canonical_cyclic_words(len);
    out.merge(parallel_for(words.size(), c, [&](std::size_t i, Partial& part) {
      check_soundness(CyclicWord(Word::from_letters(words[i])), part);
    }));
  }
  // Random words: one generator per index so the sample does not depend on threads.
  const std::size_t n = static_cast<std::size_t>(std::max<std::int64_t>(c.random_words, 0));
  out.merge(parallel_for(n, c, [&](std::size_t i, Partial& part) {
    std::mt19937_64 rng(c.seed ^ (0x2545f4914f6cdd1dULL * (i + 1)));
    std::uniform_int_distribution<int> len_dist(1, c.random_max_len);
    std::uniform_int_distribution<int> letter_dist(0, 3);
    const int len = len_dist(rng);
    std::vector<Letter> raw;
    for (int k = 0; k < len; ++k) raw.push_back(static_cast<Letter>(letter_dist(rng)));
    const CyclicReduction red = cyclic_reduce(reduce(raw));
    if (red.cyclic.empty()) return;
    check_soundness(red.cyclic, part);
  }));
  return out;
}

Partial suite_oz(const VerifyConfig& c) {
  const std::vector<CyclicWord> prims = enumerate_primitives(c.oz_max_len);
  return parallel_for(prims.size(), c, [&](std::size_t i, Partial& part) {
    ++part.checked;
    if (!oz_form_check(prims[i])) part.fail({{"word", format_word(prims[i].canonical())}});
  });
}

void check_bridge(const LensSpace& L, std::int64_t qbar, const VerifyConfig& c, Partial& part) {
  ++part.checked;
  Json where{{"p", L.p()}, {"q", L.q()}, {"qbar", qbar}};
  const Bridge b = find_bridge(L, qbar, c.max_depth);
  std::vector<std::string> problems;
  const std::int64_t off = b.d.n_exp - qbar;
  if (off != 1 && off != -1) problems.push_back("n_exp not qbar +- 1");
  if (!is_primitive(cyclic_reduce(b.d_word).cyclic).is_primitive) problems.push_back("D not primitive");
  for (const CorridorVertex& v : b.vertices) {
    if (v.label == "E" || v.label == "D") continue;
    if (is_primitive(cyclic_reduce(v.word).cyclic).is_primitive) problems.push_back("interior " + v.label + " primitive");
  }
  if (b.simplex_count != static_cast<std::int64_t>(b.w.size()) + 2) problems.push_back("simplex count");
  const EndHomology h = bridge_end_homology(b);
  if (h.class_e == h.class_d) problems.push_back("end classes coincide");
  if (!problems.empty()) {
    where["problems"] = problems;
    where["bridge"] = to_json(b);
    part.fail(std::move(where));
  }
}

std::vector<LensSpace> forest_cases(int max_p) {
  std::vector<LensSpace> out;
  for (std::int64_t p = 2; p <= max_p; ++p) {
    for (std::int64_t q = 1; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      LensSpace L(p, q);
      if (invariants(L).classification == Classification::Forest) out.push_back(L);
    }
  }
  return out;
}

Partial suite_bridge(const VerifyConfig& c) {
  const std::vector<LensSpace> cases = forest_cases(c.max_p);
  return parallel_for(cases.size(), c, [&](std::size_t i, Partial& part) {
    const LensSpace& L = cases[i];
    const LensInvariants inv = invariants(L);
    for (const std::int64_t qbar : std::set<std::int64_t>{L.q(), inv.q_prime}) {
      try {
        check_bridge(L, qbar, c, part);
      } catch (const Error& e) {
        part.fail({{"p", L.p()}, {"q", L.q()}, {"qbar", qbar}, {"error", e.what()}});
      }
    }
  });
}

Partial suite_presentations(const VerifyConfig& c) {
  Partial out;
  out.cap = c.max_counterexamples;
  for (int k = 0; k <= static_cast<int>(StabilizerKind::TTEdge); ++k) {
    const GroupPresentation g = stabilizer_presentation(static_cast<StabilizerKind>(k));
    ++out.checked;
    if (const auto errs = consistency_errors(g); !errs.empty()) out.fail({{"name", g.name}, {"errors", errs}});
  }
  struct Expect {
    std::int64_t p, q;
    std::size_t gens;
    std::string abelian;
  };
  for (const Expect& e : {Expect{12, 5, 6, "(Z/2)^5+Z"}, Expect{23, 7, 8, "(Z/2)^5+Z^3"}}) {
    ++out.checked;
    const GoeritzResult res = goeritz_presentation(LensSpace(e.p, e.q));
    const auto* g = std::get_if<GroupPresentation>(&res);
    if (!g) {
      out.fail({{"p", e.p}, {"q", e.q}, {"error", "no presentation"}});
      continue;
    }
    const auto torsion = std::count_if(g->relators.begin(), g->relators.end(),
                                       [](const Relator& r) { return r.kind == Relator::Kind::Power; });
    const std::string ab = to_string(abelianization(*g));
    if (g->generators.size() != e.gens || torsion != 5 || ab != e.abelian) {
      out.fail({{"p", e.p}, {"q", e.q}, {"generators", g->generators.size()}, {"torsion", torsion},
                {"abelianization", ab}});
    }
  }
  const std::vector<LensSpace> cases = forest_cases(c.max_p);
  out.merge(parallel_for(cases.size(), c, [&](std::size_t i, Partial& part) {
    ++part.checked;
    const GoeritzResult res = goeritz_presentation(cases[i]);
    const auto* g = std::get_if<GroupPresentation>(&res);
    const bool hnn = g && g->structure.kind == StructureNode::Kind::HNN;
    if (!g || !consistency_errors(*g).empty() || hnn == invariants(cases[i]).q_squared_is_one) {
      part.fail({{"p", cases[i].p()}, {"q", cases[i].q()}});
    }
  }));
  return out;
}

Partial suite_classification(const VerifyConfig& c) {
  Partial out;
  out.cap = c.max_counterexamples;
  for (std::int64_t p = 2; p <= c.classification_max_p; ++p) {
    for (std::int64_t q = 1; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      ++out.checked;
      const LensInvariants inv = invariants(LensSpace(p, q));
      const bool pm = is_pm_one_mod(p, q);
      const bool no_window = !type_window(p, q).has_value();
      const bool pm_prime = is_pm_one_mod(p, inv.q_prime);
      if (pm != no_window || pm != pm_prime) {
        out.fail({{"p", p}, {"q", q}, {"qPrime", inv.q_prime}, {"pmOneModQ", pm}, {"noWindow", no_window},
                  {"pmOneModQPrime", pm_prime}});
      }
    }
  }
  return out;
}

Partial suite_exports(const VerifyConfig& c) {
  Partial out;
  out.cap = c.max_counterexamples;
  auto build = [&] {
    const LensSpace L(12, 5);
    std::vector<std::pair<std::string, SimplicialComplex2>> cs;
    cs.emplace_back("shell", build_shell_complex(shell_words(12, 5)));
    cs.emplace_back("principal", build_principal_complex(12, 5, 2, 2, 3));
    cs.emplace_back("bridge", build_bridge_corridor(find_bridge(L, 5, c.max_depth)));
    std::vector<std::pair<std::string, std::string>> docs;
    for (const auto& [name, cx] : cs) {
      docs.emplace_back(name + ".json", export_json(cx));
      docs.emplace_back(name + ".dot", export_dot(cx));
    }
    return docs;
  };
  const auto first = build();
  const auto second = build();
  for (std::size_t i = 0; i < first.size(); ++i) {
    ++out.checked;
    if (first[i].second != second[i].second) out.fail({{"export", first[i].first}});
    const SimplicialComplex2 cx = first[i].first.ends_with(".json") ? import_json(first[i].second) : SimplicialComplex2{};
    if (first[i].first.ends_with(".json") && (export_json(cx) != first[i].second || !validate(cx).empty())) {
      out.fail({{"export", first[i].first}, {"error", "round trip or validation"}});
    }
  }
  return out;
}

using SuiteFn = Partial (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"l12_5-bridge", suite_l12_5},
      {"shell-sweep", suite_shell},
      {"obstruction-soundness", suite_soundness},
      {"oz-necessity", suite_oz},
      {"bridge-sweep", suite_bridge},
      {"presentations", suite_presentations},
      {"classification", suite_classification},
      {"export-determinism", suite_exports},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyConfig& config) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Partial p;
    p.cap = config.max_counterexamples;
    try {
      p = fn(config);
    } catch (const std::exception& e) {
      p.fail({{"error", e.what()}});
    }
    if (config.inject_failure && (*config.inject_failure == n || *config.inject_failure == "all")) {
      p.fail({{"injected", true}, {"suite", n}});
    }
    SuiteResult r;
    r.name = n;
    r.checked = p.checked;
    r.failures = p.failures;
    r.passed = p.failures == 0;
    r.counterexamples = std::move(p.counterexamples);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw InvalidInput("unknown verify suite " + std::string(name));
}

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
  std::vector<SuiteResult> out;
  for (const std::string& n : suite_names()) out.push_back(run_suite(n, config));
  return out;
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["counterexamples"] = r.counterexamples;
  return j;
}

std::vector<std::vector<Letter>> canonical_cyclic_words(int length) {
  std::vector<std::vector<Letter>> out;
  if (length < 1) return out;
  std::vector<Letter> cur;
  cur.reserve(static_cast<std::size_t>(length));
  extend(cur, length, out);
  return out;
}

}  // namespace goeritz
