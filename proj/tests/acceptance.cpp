// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "goeritz/complex.hpp"
#include "goeritz/errors.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/presentation.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/shell_bridge.hpp"
#include "goeritz/verify.hpp"
#include "oracle.hpp"

using namespace goeritz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path + ">";
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void expect_golden(Outcome& o, const std::string& name, const std::string& actual) {
  if (read_file(std::string(GOLDEN_DIR) + "/" + name) != actual) o.fail(name + " differs from golden");
}

std::string pq(std::int64_t p, std::int64_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Outcome bridge_l12_5() {
  Outcome o;
  const Bridge b = find_bridge(LensSpace(12, 5), 5);
  if (!b.w.empty()) o.fail("w = " + b.w);
  if (format_word(cyclic_reduce(b.d_word).cyclic.word()) != "xy^5xy^5xy^5xy^5xy^4") o.fail("D = " + format_word(b.d_word));
  if (b.simplex_count != 2) o.fail("simplex_count = " + std::to_string(b.simplex_count));
  if (!is_primitive(CyclicWord(b.d_word)).is_primitive) o.fail("D not primitive");
  return o;
}

Outcome shell_sweep() {
  Outcome o;
  for (std::int64_t p = 4; p <= 50; ++p) {
    for (std::int64_t qbar = 2; 2 * qbar <= p; ++qbar) {
      if (gcd(p, qbar) != 1) continue;
      const Shell s = shell_words(p, qbar);
      const std::int64_t qp = normalized_inverse(p, qbar);
      const std::set<std::int64_t> expect{1, qp, p - qp, p - 1};
      if (oracle_primitive_indices(s) != expect) o.fail("Whitehead indices differ at " + pq(p, qbar));
      std::set<std::int64_t> christoffel;
      for (std::size_t k = 0; k < s.words.size(); ++k) {
        if (oracle::christoffel_primitive(s.words[k].letters())) christoffel.insert(static_cast<std::int64_t>(k));
      }
      if (christoffel != expect) o.fail("Christoffel indices differ at " + pq(p, qbar));
    }
  }
  return o;
}

Outcome obstruction_soundness() {
  Outcome o;
  auto check = [&](const CyclicWord& w) {
    if (!certify_nonprimitive(w)) return;
    if (is_primitive_power(w).is_primitive_power || oracle::christoffel_primitive_power(w.word().letters())) {
      o.fail("certified primitive power " + format_word(w.canonical()));
    }
  };
  for (int n = 1; n <= 14; ++n) {
    for (const auto& letters : canonical_cyclic_words(n)) check(CyclicWord(Word::from_letters(letters)));
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> len(1, 20);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int i = 0; i < 100000; ++i) {
    std::vector<Letter> raw(static_cast<std::size_t>(len(rng)));
    for (Letter& l : raw) l = static_cast<Letter>(letter(rng));
    const CyclicReduction red = cyclic_reduce(reduce(raw));
    if (!red.cyclic.empty()) check(red.cyclic);
  }
  return o;
}

Outcome oz_necessity() {
  Outcome o;
  std::size_t count = 0;
  for (const CyclicWord& w : enumerate_primitives(16)) {
    ++count;
    if (!oz_form_check(w)) o.fail("OZ rejects " + format_word(w.canonical()));
  }
  if (count == 0) o.fail("no primitives enumerated");
  return o;
}

Outcome bridge_sweep() {
  Outcome o;
  for (std::int64_t p = 5; p <= 60; ++p) {
    for (std::int64_t q = 2; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const LensSpace L(p, q);
      const LensInvariants inv = invariants(L);
      if (inv.classification != Classification::Forest) continue;
      for (const std::int64_t qbar : {q, inv.q_prime}) {
        const std::string at = "L" + pq(p, q) + " qbar=" + std::to_string(qbar);
        Bridge b = [&] {
          try {
            return find_bridge(L, qbar, 64);
          } catch (const Error& e) {
            o.fail(at + ": " + e.what());
            throw;
          }
        }();
        if (b.d.n_exp != qbar + 1 && b.d.n_exp != qbar - 1) o.fail(at + ": n_exp");
        if (!is_primitive(cyclic_reduce(b.d_word).cyclic).is_primitive) o.fail(at + ": D not primitive");
        for (const CorridorVertex& v : b.vertices) {
          if (v.label == "E" || v.label == "D") continue;
          if (is_primitive(cyclic_reduce(v.word).cyclic).is_primitive) o.fail(at + ": interior " + v.label + " primitive");
        }
        if (b.simplex_count != static_cast<std::int64_t>(b.w.size()) + 2) o.fail(at + ": simplex count");
        const EndHomology h = bridge_end_homology(b);
        if (h.class_e == h.class_d) o.fail(at + ": end classes agree");
      }
    }
  }
  return o;
}

Outcome presentation_goldens() {
  Outcome o;
  struct Case {
    std::int64_t p, q;
    std::string file;
    std::size_t gens;
    std::string abelian;
  };
  for (const Case& c : {Case{12, 5, "presentation_L12_5", 6, "(Z/2)^5+Z"}, Case{23, 7, "presentation_L23_7", 8, "(Z/2)^5+Z^3"}}) {
    const GoeritzResult r = goeritz_presentation(LensSpace(c.p, c.q));
    const auto* g = std::get_if<GroupPresentation>(&r);
    if (!g) {
      o.fail(c.file + ": no presentation");
      continue;
    }
    expect_golden(o, c.file + ".txt", export_text(*g));
    expect_golden(o, c.file + ".json", to_json(r).dump(2) + "\n");
    std::size_t torsion = 0;
    for (const Relator& rel : g->relators) torsion += rel.kind == Relator::Kind::Power ? 1 : 0;
    if (g->generators.size() != c.gens || torsion != 5) o.fail(c.file + ": generator or torsion count");
    if (to_string(abelianization(*g)) != c.abelian) o.fail(c.file + ": abelianization " + to_string(abelianization(*g)));
    std::vector<std::pair<std::string, std::int64_t>> powers;
    for (const Relator& rel : g->relators) {
      if (rel.kind == Relator::Kind::Power) powers.emplace_back(rel.a, rel.exponent);
    }
    const auto d = oracle::diagonal_abelianization(g->generators, powers);
    const AbelianGroup a = abelianization(*g);
    if (d.free_rank != a.free_rank || d.torsion != a.torsion) o.fail(c.file + ": oracle abelianization differs");
    if (!consistency_errors(*g).empty()) o.fail(c.file + ": inconsistent");
  }
  return o;
}

Outcome classification() {
  Outcome o;
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q = 1; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const bool pm = p % q == 1 % q || p % q == q - 1;
      bool window = false;
      for (std::int64_t r = 2; r <= q - 2; ++r) window = window || (p - r) % q == 0;
      if (pm == window) o.fail("window criterion at " + pq(p, q));
      const std::int64_t qp = normalized_inverse(p, q);
      const bool pm_prime = p % qp == 1 % qp || p % qp == qp - 1;
      if (pm != pm_prime) o.fail("q versus q' at " + pq(p, q));
      const bool forest = invariants(LensSpace(p, q)).classification == Classification::Forest;
      if (forest == pm) o.fail("classification at " + pq(p, q));
    }
  }
  return o;
}

Outcome export_determinism() {
  Outcome o;
  const std::vector<std::pair<std::string, std::function<SimplicialComplex2()>>> builds{
      {"shell_12_5", [] { return build_shell_complex(shell_words(12, 5)); }},
      {"principal_12_5_d3", [] { return build_principal_complex(12, 5, 2, 2, 3); }},
      {"bridge_12_5", [] { return build_bridge_corridor(find_bridge(LensSpace(12, 5), 5)); }},
  };
  for (const auto& [name, build] : builds) {
    const SimplicialComplex2 a = build();
    const SimplicialComplex2 b = build();
    if (export_json(a) != export_json(b) || export_dot(a) != export_dot(b)) o.fail(name + ": runs differ");
    expect_golden(o, name + ".json", export_json(a));
    expect_golden(o, name + ".dot", export_dot(a));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_seconds;
  };
  const Criterion criteria[] = {
      {1, "L(12,5) bridge reproduction", bridge_l12_5, 1.0},
      {2, "shell primitivity sweep p <= 50", shell_sweep, 60.0},
      {3, "obstruction soundness (length <= 14, 1e5 random)", obstruction_soundness, 300.0},
      {4, "OZ necessity for enumerate_primitives(16)", oz_necessity, 0.0},
      {5, "bridge validity sweep p <= 60", bridge_sweep, 0.0},
      {6, "presentation goldens and abelianization", presentation_goldens, 0.0},
      {7, "classification equivalence p <= 200", classification, 0.0},
      {8, "complex export determinism and goldens", export_determinism, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.fail("runtime " + std::to_string(secs) + " s over limit");
    std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.ok ? "" : ": ",
                o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
