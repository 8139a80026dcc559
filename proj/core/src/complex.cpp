#include "goeritz/complex.hpp"

#include <algorithm>
#include <sstream>

#include "goeritz/errors.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/serialize.hpp"

namespace goeritz {

namespace {

Edge sorted(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

Triangle sorted(std::string a, std::string b, std::string c) {
  Triangle t{std::move(a), std::move(b), std::move(c)};
  std::sort(t.begin(), t.end());
  return t;
}

bool oracle_primitive(const Word& w) {
  return is_primitive(cyclic_reduce(w).cyclic).is_primitive;
}

ComplexVertex disk(std::string label, const Word& w) {
  return {std::move(label), w, oracle_primitive(w), std::nullopt, std::nullopt};
}

ComplexVertex principal(std::string label, const PrincipalVertex& v, std::int64_t qbar) {
  ComplexVertex out = disk(std::move(label), v.word(qbar));
  out.m_exp = v.m_exp;
  out.n_exp = v.n_exp;
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void SimplicialComplex2::add_vertex(ComplexVertex v) {
  std::string key = v.label;
  vertices_[std::move(key)] = std::move(v);
}

void SimplicialComplex2::add_edge(std::string a, std::string b) {
  for (const std::string* l : {&a, &b}) {
    if (!has_vertex(*l)) throw InvalidInput("edge endpoint " + *l + " is not a vertex");
  }
  if (a == b) throw InvalidInput("degenerate edge at " + a);
  edges_.insert(sorted(std::move(a), std::move(b)));
}

void SimplicialComplex2::add_triangle(std::string a, std::string b, std::string c) {
  if (a == b || b == c || a == c) throw InvalidInput("degenerate triangle");
  add_edge(a, b);
  add_edge(b, c);
  add_edge(a, c);
  triangles_.insert(sorted(std::move(a), std::move(b), std::move(c)));
}

void SimplicialComplex2::insert_raw_edge(Edge e) { edges_.insert(std::move(e)); }
void SimplicialComplex2::insert_raw_triangle(Triangle t) { triangles_.insert(std::move(t)); }

const ComplexVertex& SimplicialComplex2::vertex(std::string_view label) const {
  const auto it = vertices_.find(std::string(label));
  if (it == vertices_.end()) throw InvalidInput("no vertex " + std::string(label));
  return it->second;
}

std::int64_t SimplicialComplex2::euler_characteristic() const {
  return static_cast<std::int64_t>(vertices_.size()) - static_cast<std::int64_t>(edges_.size()) +
         static_cast<std::int64_t>(triangles_.size());
}

std::vector<std::string> validate(const SimplicialComplex2& c) {
  std::vector<std::string> errors;
  for (const auto& [label, v] : c.vertices()) {
    if (label != v.label) errors.push_back("vertex key " + label + " holds label " + v.label);
  }
  for (const Edge& e : c.edges()) {
    if (!(e[0] < e[1])) errors.push_back("edge " + e[0] + "-" + e[1] + " is not strictly sorted");
    for (const std::string& l : e) {
      if (!c.has_vertex(l)) errors.push_back("edge " + e[0] + "-" + e[1] + " has missing endpoint " + l);
    }
  }
  for (const Triangle& t : c.triangles()) {
    if (!(t[0] < t[1] && t[1] < t[2])) errors.push_back("triangle " + t[0] + "," + t[1] + "," + t[2] + " is not strictly sorted");
    for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[1], t[2]}, Edge{t[0], t[2]}}) {
      if (!c.edges().count(e)) {
        errors.push_back("triangle " + t[0] + "," + t[1] + "," + t[2] + " lacks edge " + e[0] + "-" + e[1]);
      }
    }
  }
  return errors;
}

SimplicialComplex2 build_shell_complex(const Shell& shell) {
  SimplicialComplex2 c;
  c.add_vertex(disk("E", shell.center));
  for (std::size_t k = 0; k < shell.words.size(); ++k) c.add_vertex(disk("E_" + std::to_string(k), shell.words[k]));
  for (std::int64_t k = 0; k < shell.p; ++k) {
    c.add_triangle("E", "E_" + std::to_string(k), "E_" + std::to_string(k + 1));
  }
  c.meta["kind"] = "shell";
  c.meta["p"] = shell.p;
  c.meta["qbar"] = shell.qbar;
  c.meta["primitiveIndices"] = shell.primitive_indices;
  return c;
}

SimplicialComplex2 build_principal_complex(std::int64_t p, std::int64_t qbar, std::int64_t m, std::int64_t r,
                                           int depth) {
  if (depth < 0) throw InvalidInput("principal complex depth must be nonnegative");
  if (depth > kMaxPrincipalDepth) {
    throw ResourceLimit("principal complex depth " + std::to_string(depth) + " exceeds " +
                        std::to_string(kMaxPrincipalDepth));
  }
  // Validates (m, r) against (p, qbar).
  principal_vertex(p, qbar, m, r, "");
  const auto roots = principal_roots(qbar, m, r);
  SimplicialComplex2 c;
  c.add_vertex(disk("E", Word::generator(Gen::x)));
  c.add_vertex(principal("E_m", roots[0], qbar));
  c.add_vertex(principal("E_{m+1}", roots[1], qbar));
  c.add_triangle("E", "E_m", "E_{m+1}");

  struct Frame {
    std::string left;
    std::string right;
    PrincipalVertex lv;
    PrincipalVertex rv;
    std::string w;
  };
  std::vector<Frame> level{{"E_m", "E_{m+1}", roots[0], roots[1], ""}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Frame> next;
    for (const Frame& f : level) {
      const PrincipalVertex apex = mediant(f.lv, f.rv, qbar);
      const std::string label = principal_label(f.w);
      c.add_vertex(principal(label, apex, qbar));
      c.add_triangle(f.left, f.right, label);
      next.push_back({label, f.right, apex, f.rv, f.w + "L"});
      next.push_back({f.left, label, f.lv, apex, f.w + "R"});
    }
    level = std::move(next);
  }
  c.meta["kind"] = "principal";
  c.meta["p"] = p;
  c.meta["qbar"] = qbar;
  c.meta["m"] = m;
  c.meta["r"] = r;
  c.meta["depth"] = depth;
  return c;
}

SimplicialComplex2 build_bridge_corridor(const Bridge& b) {
  SimplicialComplex2 c;
  for (const CorridorVertex& v : b.vertices) {
    if (v.vertex) {
      c.add_vertex(principal(v.label, *v.vertex, b.qbar));
    } else {
      c.add_vertex(disk(v.label, v.word));
    }
  }
  for (const auto& t : b.corridor) c.add_triangle(t[0], t[1], t[2]);
  const EndHomology h = bridge_end_homology(b);
  c.meta["kind"] = "bridge";
  c.meta["p"] = b.lens.p();
  c.meta["q"] = b.lens.q();
  c.meta["qbar"] = b.qbar;
  c.meta["w"] = b.w;
  c.meta["simplexCount"] = b.simplex_count;
  c.meta["homology"] = {{"E", h.class_e}, {"D", h.class_d}};
  return c;
}

SimplicialComplex2 build_tree_of_trees_ball(const LensSpace& L, int radius, int branching) {
  if (radius < 0 || branching < 1) throw InvalidInput("tree ball needs radius >= 0 and branching >= 1");
  if (radius > kMaxTreeRadius || branching > kMaxTreeBranching) {
    throw ResourceLimit("tree ball caps: radius <= " + std::to_string(kMaxTreeRadius) + ", branching <= " +
                        std::to_string(kMaxTreeBranching));
  }
  const LensInvariants inv = invariants(L);
  if (inv.classification != Classification::Forest) {
    throw NotForest("L(" + std::to_string(L.p()) + "," + std::to_string(L.q()) +
                    ") is not a forest case (p = +-1 mod q)");
  }
  SimplicialComplex2 c;
  std::vector<std::string> level{"T"};
  c.add_vertex({"T", std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  for (int d = 0; d < radius; ++d) {
    std::vector<std::string> next;
    for (const std::string& parent : level) {
      for (int i = 0; i < branching; ++i) {
        std::string child = parent + "." + std::to_string(i);
        c.add_vertex({child, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        c.add_edge(parent, child);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  c.meta["kind"] = "treeOfTrees";
  c.meta["schematic"] = true;
  c.meta["truncation"] = {{"radius", radius}, {"branching", branching}, {"trueValency", "infinite"}};
  c.meta["p"] = L.p();
  c.meta["q"] = L.q();
  c.meta["quotient"] = inv.q_squared_is_one ? "single edge, two vertices" : "single edge, one vertex (loop)";
  Json bridges = Json::array();
  for (const std::int64_t qbar : std::set<std::int64_t>{L.q(), inv.q_prime}) {
    if (inv.window(qbar, L.q())) bridges.push_back(to_json(find_bridge(L, qbar)));
  }
  c.meta["edgeBridges"] = std::move(bridges);
  return c;
}

std::string export_dot(const SimplicialComplex2& c) {
  std::ostringstream out;
  out << "graph complex {\n";
  std::size_t id = 0;
  for (const Triangle& t : c.triangles()) {
    out << "  // triangle t" << id++ << ": " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  for (const auto& [label, v] : c.vertices()) {
    std::string text = quoted(label);
    if (v.word) text.insert(text.size() - 1, "\\n" + format_word(*v.word));
    out << "  " << quoted(label) << " [label=" << text;
    if (v.primitive && *v.primitive) out << ", peripheries=2";
    out << "];\n";
  }
  for (const Edge& e : c.edges()) out << "  " << quoted(e[0]) << " -- " << quoted(e[1]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const SimplicialComplex2& c) {
  Json j;
  Json verts = Json::array();
  for (const auto& [label, v] : c.vertices()) {
    Json jv;
    jv["label"] = label;
    if (v.word) jv["word"] = format_word(*v.word);
    if (v.primitive) jv["primitive"] = *v.primitive;
    if (v.m_exp) jv["mExp"] = *v.m_exp;
    if (v.n_exp) jv["nExp"] = *v.n_exp;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["edges"] = Json::array();
  for (const Edge& e : c.edges()) j["edges"].push_back(e);
  j["triangles"] = Json::array();
  for (const Triangle& t : c.triangles()) j["triangles"].push_back(t);
  j["meta"] = c.meta;
  return j.dump(2) + "\n";
}

SimplicialComplex2 import_json(std::string_view text) {
  SimplicialComplex2 c;
  try {
    const Json j = Json::parse(text);
    for (const Json& jv : j.at("vertices")) {
      ComplexVertex v{jv.at("label").get<std::string>(), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
      if (jv.contains("word")) v.word = parse_word(jv["word"].get<std::string>());
      if (jv.contains("primitive")) v.primitive = jv["primitive"].get<bool>();
      if (jv.contains("mExp")) v.m_exp = jv["mExp"].get<std::int64_t>();
      if (jv.contains("nExp")) v.n_exp = jv["nExp"].get<std::int64_t>();
      c.add_vertex(std::move(v));
    }
    for (const Json& e : j.at("edges")) {
      c.insert_raw_edge(sorted(e.at(0).get<std::string>(), e.at(1).get<std::string>()));
    }
    for (const Json& t : j.at("triangles")) {
      c.insert_raw_triangle(sorted(t.at(0).get<std::string>(), t.at(1).get<std::string>(), t.at(2).get<std::string>()));
    }
    if (j.contains("meta")) c.meta = j["meta"];
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("complex JSON: ") + e.what());
  }
  return c;
}

}  // namespace goeritz
