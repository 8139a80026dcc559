#pragma once

// Finite labeled 2-complexes for shells, principal complexes, bridge corridors
// and truncated tree-of-trees balls, with DOT and JSON export.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "goeritz/lens.hpp"
#include "goeritz/shell_bridge.hpp"
#include "goeritz/word.hpp"

namespace goeritz {

struct ComplexVertex {
  std::string label;
  std::optional<Word> word;
  std::optional<bool> primitive;
  std::optional<std::int64_t> m_exp;
  std::optional<std::int64_t> n_exp;
  friend bool operator==(const ComplexVertex&, const ComplexVertex&) = default;
};

using Edge = std::array<std::string, 2>;
using Triangle = std::array<std::string, 3>;

/// Simplices are stored with sorted labels, so there are no duplicates.
class SimplicialComplex2 {
 public:
  /// Replaces any vertex with the same label.
  void add_vertex(ComplexVertex v);
  /// Endpoints must already exist; throws InvalidInput otherwise.
  void add_edge(std::string a, std::string b);
  /// Adds the three boundary edges too.
  void add_triangle(std::string a, std::string b, std::string c);
  /// Inserts without closure or existence checks (for import and tests).
  void insert_raw_edge(Edge e);
  void insert_raw_triangle(Triangle t);

  bool has_vertex(std::string_view label) const { return vertices_.find(std::string(label)) != vertices_.end(); }
  const ComplexVertex& vertex(std::string_view label) const;
  const std::map<std::string, ComplexVertex>& vertices() const noexcept { return vertices_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  const std::set<Triangle>& triangles() const noexcept { return triangles_; }
  std::int64_t euler_characteristic() const;

  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  friend bool operator==(const SimplicialComplex2&, const SimplicialComplex2&) = default;

 private:
  std::map<std::string, ComplexVertex> vertices_;
  std::set<Edge> edges_;
  std::set<Triangle> triangles_;
};

/// Empty when every edge's endpoints exist and every triangle's edges exist.
std::vector<std::string> validate(const SimplicialComplex2& c);

/// Fan {E, E_i, E_{i+1}} for 0 <= i < p; vertices carry words and oracle flags.
SimplicialComplex2 build_shell_complex(const Shell& shell);

inline constexpr int kMaxPrincipalDepth = 12;

/// Base triangle {E, E_m, E_{m+1}} plus {left(w), right(w), E_w} for every
/// L/R word w with |w| < depth. Throws ResourceLimit past kMaxPrincipalDepth.
SimplicialComplex2 build_principal_complex(std::int64_t p, std::int64_t qbar, std::int64_t m, std::int64_t r,
                                           int depth);

SimplicialComplex2 build_bridge_corridor(const Bridge& b);

inline constexpr int kMaxTreeRadius = 4;
inline constexpr int kMaxTreeBranching = 16;

/// Schematic 1-dimensional ball in the tree of trees: every vertex within
/// distance radius - 1 of the root "T" gets `branching` children "T.0", ....
/// Throws NotForest for contractible lens spaces and ResourceLimit past caps.
SimplicialComplex2 build_tree_of_trees_ball(const LensSpace& L, int radius, int branching);

std::string export_dot(const SimplicialComplex2& c);
std::string export_json(const SimplicialComplex2& c);
/// Inverse of export_json. Throws InvalidInput on schema violations.
SimplicialComplex2 import_json(std::string_view text);

}  // namespace goeritz
