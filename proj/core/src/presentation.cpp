#include "goeritz/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "goeritz/errors.hpp"

namespace goeritz {

namespace {

using ojson = nlohmann::ordered_json;

struct Collector {
  std::vector<std::string> gens;
  std::map<std::string, std::int64_t> torsion;
  std::set<std::pair<std::string, std::string>> comms;

  void add_gen(const std::string& g) {
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
};

void generators_of(const StructureNode& s, std::vector<std::string>& out) {
  auto add = [&](const std::string& g) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  };
  if (s.kind == StructureNode::Kind::Cyclic) add(s.generator);
  for (const StructureNode& c : s.children) generators_of(c, out);
  if (s.kind == StructureNode::Kind::HNN) add(s.stable_letter);
}

void collect(const StructureNode& s, Collector& c) {
  switch (s.kind) {
    case StructureNode::Kind::Cyclic:
      c.add_gen(s.generator);
      if (s.order > 0) c.torsion[s.generator] = s.order;
      return;
    case StructureNode::Kind::DirectSum: {
      std::vector<std::vector<std::string>> parts;
      for (const StructureNode& child : s.children) {
        collect(child, c);
        parts.emplace_back();
        generators_of(child, parts.back());
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          for (const std::string& a : parts[i]) {
            for (const std::string& b : parts[j]) c.comms.insert({a, b});
          }
        }
      }
      return;
    }
    case StructureNode::Kind::FreeProduct:
    case StructureNode::Kind::Amalgam:
      for (const StructureNode& child : s.children) collect(child, c);
      return;
    case StructureNode::Kind::HNN:
      for (const StructureNode& child : s.children) collect(child, c);
      c.add_gen(s.stable_letter);
      for (const std::string& o : s.over) c.comms.insert({o, s.stable_letter});
      return;
  }
}

ojson node_json(const StructureNode& s) {
  ojson j;
  j["type"] = std::string(to_string(s.kind));
  if (!s.label.empty()) j["label"] = s.label;
  if (s.kind == StructureNode::Kind::Cyclic) {
    j["generator"] = s.generator;
    j["order"] = s.order == 0 ? ojson(nullptr) : ojson(s.order);
    return j;
  }
  if (s.kind == StructureNode::Kind::HNN) {
    j["base"] = node_json(s.children.at(0));
  } else {
    ojson parts = ojson::array();
    for (const StructureNode& c : s.children) parts.push_back(node_json(c));
    j["factors"] = std::move(parts);
  }
  if (!s.over.empty()) j["over"] = s.over;
  if (s.kind == StructureNode::Kind::HNN) j["stableLetter"] = s.stable_letter;
  return j;
}

std::string unicode_name(const std::string& g) {
  static const std::map<std::string, std::string> greek{
      {"alpha", "α"}, {"beta", "β"}, {"gamma", "γ"}, {"sigma", "σ"}, {"tau", "τ"}, {"upsilon", "υ"}};
  static const char* const subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::size_t cut = g.size();
  while (cut > 0 && g[cut - 1] >= '0' && g[cut - 1] <= '9') --cut;
  const auto it = greek.find(g.substr(0, cut));
  std::string out = it == greek.end() ? g.substr(0, cut) : it->second;
  for (std::size_t i = cut; i < g.size(); ++i) out += subscripts[g[i] - '0'];
  return out;
}

GroupPresentation from_structure(std::string name, StructureNode s) {
  FlatPresentation flat = flatten(s);
  return {std::move(name), std::move(flat.generators), std::move(flat.relators), std::move(s)};
}

StructureNode alpha_factor() { return StructureNode::cyclic("alpha", 2); }

StructureNode tt_vertex(bool q_sq_one) {
  std::vector<StructureNode> rest;
  if (q_sq_one) {
    rest = {StructureNode::cyclic("beta", 0), StructureNode::cyclic("gamma", 2),
            StructureNode::cyclic("sigma1", 2), StructureNode::cyclic("sigma2", 2)};
  } else {
    rest = {StructureNode::cyclic("beta1", 0),  StructureNode::cyclic("beta2", 0),
            StructureNode::cyclic("gamma1", 2), StructureNode::cyclic("gamma2", 2),
            StructureNode::cyclic("sigma1", 2), StructureNode::cyclic("sigma2", 2)};
  }
  return StructureNode::direct_sum("G_T1", {alpha_factor(), StructureNode::free_product("", std::move(rest))});
}

StructureNode tt_edge_union() {
  return StructureNode::direct_sum("G_T1uT2", {alpha_factor(), StructureNode::cyclic("tau", 2)});
}

}  // namespace

std::vector<std::pair<std::string, int>> Relator::letters() const {
  std::vector<std::pair<std::string, int>> out;
  if (kind == Kind::Power) {
    const int s = exponent < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < exponent * s; ++i) out.emplace_back(a, s);
  } else {
    out = {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
  }
  return out;
}

StructureNode StructureNode::cyclic(std::string gen, std::int64_t order) {
  StructureNode n{Kind::Cyclic, {}, std::move(gen), order, {}, {}, {}};
  return n;
}

StructureNode StructureNode::direct_sum(std::string label, std::vector<StructureNode> children) {
  return {Kind::DirectSum, std::move(label), {}, 0, std::move(children), {}, {}};
}

StructureNode StructureNode::free_product(std::string label, std::vector<StructureNode> children) {
  return {Kind::FreeProduct, std::move(label), {}, 0, std::move(children), {}, {}};
}

StructureNode StructureNode::amalgam(std::string label, StructureNode a, StructureNode b,
                                     std::vector<std::string> over) {
  return {Kind::Amalgam, std::move(label), {}, 0, {std::move(a), std::move(b)}, std::move(over), {}};
}

StructureNode StructureNode::hnn(std::string label, StructureNode base, std::vector<std::string> over,
                                 std::string stable) {
  return {Kind::HNN, std::move(label), {}, 0, {std::move(base)}, std::move(over), std::move(stable)};
}

std::string_view to_string(StructureNode::Kind k) {
  switch (k) {
    case StructureNode::Kind::Cyclic:
      return "Cyclic";
    case StructureNode::Kind::DirectSum:
      return "DirectSum";
    case StructureNode::Kind::FreeProduct:
      return "FreeProduct";
    case StructureNode::Kind::Amalgam:
      return "AmalgamatedProduct";
    case StructureNode::Kind::HNN:
      return "HNN";
  }
  return "?";
}

FlatPresentation flatten(const StructureNode& s) {
  Collector c;
  collect(s, c);
  auto pos = [&](const std::string& g) {
    return static_cast<std::size_t>(std::find(c.gens.begin(), c.gens.end(), g) - c.gens.begin());
  };
  FlatPresentation out;
  out.generators = c.gens;
  for (const std::string& g : c.gens) {
    if (const auto it = c.torsion.find(g); it != c.torsion.end()) out.relators.push_back(Relator::power(g, it->second));
  }
  std::vector<std::pair<std::size_t, std::size_t>> comms;
  for (const auto& [a, b] : c.comms) {
    const std::size_t i = pos(a);
    const std::size_t j = pos(b);
    if (i != j) comms.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  for (const auto& [i, j] : comms) out.relators.push_back(Relator::commutator(c.gens[i], c.gens[j]));
  return out;
}

std::vector<std::string> consistency_errors(const GroupPresentation& g) {
  std::vector<std::string> errors;
  const std::set<std::string> declared(g.generators.begin(), g.generators.end());
  if (declared.size() != g.generators.size()) errors.push_back("duplicate generator");
  for (const Relator& r : g.relators) {
    for (const auto& [gen, sign] : r.letters()) {
      if (!declared.count(gen)) errors.push_back("relator " + format_relator(r) + " uses undeclared " + gen);
    }
  }
  const FlatPresentation flat = flatten(g.structure);
  if (flat.generators != g.generators) errors.push_back("structure generators differ from the presentation");
  if (flat.relators != g.relators) errors.push_back("structure relators differ from the presentation");
  return errors;
}

std::string_view to_string(StabilizerKind k) {
  switch (k) {
    case StabilizerKind::Vertex:
      return "Vertex";
    case StabilizerKind::OrderedPair:
      return "OrderedPair";
    case StabilizerKind::UnorderedPairSwappable:
      return "UnorderedPairSwappable";
    case StabilizerKind::UnorderedPairRigid:
      return "UnorderedPairRigid";
    case StabilizerKind::TTVertex_qSq1:
      return "TTVertex_qSq1";
    case StabilizerKind::TTVertex_qSqNot1:
      return "TTVertex_qSqNot1";
    case StabilizerKind::TTEdgeUnion_qSq1:
      return "TTEdgeUnion_qSq1";
    case StabilizerKind::TTEdge:
      return "TTEdge";
  }
  return "?";
}

std::optional<StabilizerKind> parse_stabilizer_kind(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(StabilizerKind::TTEdge); ++i) {
    const auto k = static_cast<StabilizerKind>(i);
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

GroupPresentation stabilizer_presentation(StabilizerKind kind) {
  const std::string name(to_string(kind));
  switch (kind) {
    case StabilizerKind::Vertex:
      return from_structure(
          name, StructureNode::direct_sum(
                    "G_E", {alpha_factor(), StructureNode::free_product("", {StructureNode::cyclic("beta", 0),
                                                                            StructureNode::cyclic("gamma", 2)})}));
    case StabilizerKind::OrderedPair:
    case StabilizerKind::UnorderedPairRigid:
    case StabilizerKind::TTEdge:
      return from_structure(name, alpha_factor());
    case StabilizerKind::UnorderedPairSwappable:
      return from_structure(name,
                            StructureNode::direct_sum("G_{D,E}", {alpha_factor(), StructureNode::cyclic("sigma", 2)}));
    case StabilizerKind::TTVertex_qSq1:
      return from_structure(name, tt_vertex(true));
    case StabilizerKind::TTVertex_qSqNot1:
      return from_structure(name, tt_vertex(false));
    case StabilizerKind::TTEdgeUnion_qSq1:
      return from_structure(name, tt_edge_union());
  }
  throw InvalidInput("unknown stabilizer kind");
}

GoeritzResult goeritz_presentation(const LensSpace& L) {
  const LensInvariants inv = invariants(L);
  const std::string name = "L(" + std::to_string(L.p()) + "," + std::to_string(L.q()) + ")";
  if (inv.classification == Classification::Contractible) {
    return ConnectedCaseStub{name,
                             "p = +-1 (mod q): the primitive disk complex is connected; the Goeritz group "
                             "presentation for this case is known from prior work and is not computed here"};
  }
  if (inv.q_squared_is_one) {
    return from_structure("G(" + name + ")",
                          StructureNode::amalgam("G_T1 *_<alpha> G_T1uT2", tt_vertex(true), tt_edge_union(), {"alpha"}));
  }
  return from_structure("G(" + name + ")", StructureNode::hnn("G_T1 *_<alpha>", tt_vertex(false), {"alpha"}, "upsilon"));
}

AbelianGroup abelianization(const GroupPresentation& g) {
  const std::size_t cols = g.generators.size();
  std::vector<std::vector<std::int64_t>> m;
  for (const Relator& r : g.relators) {
    std::vector<std::int64_t> row(cols, 0);
    for (const auto& [gen, sign] : r.letters()) {
      const auto it = std::find(g.generators.begin(), g.generators.end(), gen);
      if (it == g.generators.end()) throw InvalidInput("relator uses undeclared generator " + gen);
      row[static_cast<std::size_t>(it - g.generators.begin())] += sign;
    }
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size();
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    for (;;) {
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t k = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= k * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t k = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= k * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (m.size() <= t || m[t][t] == 0) break;
    diag.push_back(std::llabs(m[t][t]));
  }
  AbelianGroup out;
  out.free_rank = static_cast<std::int64_t>(cols - diag.size());
  for (std::int64_t d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::string to_string(const AbelianGroup& a) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < a.torsion.size();) {
    std::size_t j = i;
    while (j < a.torsion.size() && a.torsion[j] == a.torsion[i]) ++j;
    const std::string z = "Z/" + std::to_string(a.torsion[i]);
    parts.push_back(j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i));
    i = j;
  }
  if (a.free_rank == 1) parts.push_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

std::string format_relator(const Relator& r) {
  if (r.kind == Relator::Kind::Power) return r.a + "^" + std::to_string(r.exponent);
  return "[" + r.a + "," + r.b + "]";
}

std::string export_text(const GroupPresentation& g) {
  std::ostringstream out;
  out << "# " << g.name << "\n";
  out << "generators:";
  for (const std::string& s : g.generators) out << ' ' << s;
  out << "\nrelators:\n";
  for (const Relator& r : g.relators) out << format_relator(r) << "\n";
  return out.str();
}

std::string export_json(const GroupPresentation& g) {
  ojson j;
  j["name"] = g.name;
  j["generators"] = g.generators;
  ojson rels = ojson::array();
  for (const Relator& r : g.relators) rels.push_back(format_relator(r));
  j["relators"] = std::move(rels);
  j["structure"] = node_json(g.structure);
  return j.dump(2) + "\n";
}

std::string export_gap(const GroupPresentation& g) {
  std::ostringstream out;
  out << "F := FreeGroup(";
  for (std::size_t i = 0; i < g.generators.size(); ++i) out << (i ? ", " : "") << '"' << g.generators[i] << '"';
  out << ");;\n";
  for (std::size_t i = 0; i < g.generators.size(); ++i) out << g.generators[i] << " := F." << i + 1 << ";;\n";
  out << "G := F / [ ";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    const Relator& r = g.relators[i];
    out << (i ? ", " : "");
    if (r.kind == Relator::Kind::Power) {
      out << r.a << '^' << r.exponent;
    } else {
      out << "Comm(" << r.a << ", " << r.b << ')';
    }
  }
  out << " ];\n";
  return out.str();
}

std::string pretty(const GroupPresentation& g) {
  static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = "⟨";
  for (std::size_t i = 0; i < g.generators.size(); ++i) out += (i ? ", " : "") + unicode_name(g.generators[i]);
  out += " | ";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    const Relator& r = g.relators[i];
    if (i) out += ", ";
    if (r.kind == Relator::Kind::Power) {
      out += unicode_name(r.a);
      for (char c : std::to_string(r.exponent)) out += c == '-' ? "⁻" : sup[c - '0'];
    } else {
      out += "[" + unicode_name(r.a) + "," + unicode_name(r.b) + "]";
    }
  }
  return out + "⟩";
}

HeegaardSpaceReport heegaard_space_report(const SplitManifold& M) {
  HeegaardSpaceReport out;
  out.kernel = pi1_diff(M);
  out.quotient_description = "Goeritz group up to finite extensions";
  if (std::holds_alternative<Sphere3>(M)) {
    out.manifold = "S3";
    out.quotient = ConnectedCaseStub{"S3", "the primitive disk complex is connected; presentation known from prior work"};
  } else {
    const LensSpace& L = std::get<LensSpace>(M);
    out.manifold = "L(" + std::to_string(L.p()) + "," + std::to_string(L.q()) + ")";
    out.quotient = goeritz_presentation(L);
  }
  out.sequence = "1 -> pi1(Diff(" + out.manifold + ")) -> pi1(H(" + out.manifold + ")) -> G(" + out.manifold + ") -> 1";
  out.conclusion = "finitely presented";
  return out;
}

}  // namespace goeritz
