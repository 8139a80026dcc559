#pragma once

// Finite presentations of stabilizer subgroups and of genus-2 Goeritz groups
// of lens spaces, with the structural decomposition they were assembled from.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "goeritz/lens.hpp"

namespace goeritz {

/// g^n (n >= 2) or the commutator [a, b] = a b a^-1 b^-1.
struct Relator {
  enum class Kind { Power, Commutator };
  Kind kind;
  std::string a;
  std::string b;  // Commutator only
  std::int64_t exponent = 0;  // Power only

  static Relator power(std::string g, std::int64_t n) { return {Kind::Power, std::move(g), {}, n}; }
  static Relator commutator(std::string a, std::string b) {
    return {Kind::Commutator, std::move(a), std::move(b), 0};
  }
  /// Free-group letters as (generator, +-1), e.g. [a,b] -> a b a^-1 b^-1.
  std::vector<std::pair<std::string, int>> letters() const;
  friend bool operator==(const Relator&, const Relator&) = default;
};

/// Structure tree. Cyclic leaves carry one generator (order 0 means infinite
/// cyclic); DirectSum adds commutators between generators of different
/// factors; Amalgam glues factors along the shared generators listed in
/// `over`; HNN adds a stable letter commuting with `over`.
struct StructureNode {
  enum class Kind { Cyclic, DirectSum, FreeProduct, Amalgam, HNN };
  Kind kind;
  std::string label;
  std::string generator;     // Cyclic
  std::int64_t order = 0;    // Cyclic
  std::vector<StructureNode> children;
  std::vector<std::string> over;  // Amalgam, HNN
  std::string stable_letter;      // HNN

  static StructureNode cyclic(std::string gen, std::int64_t order);
  static StructureNode direct_sum(std::string label, std::vector<StructureNode> children);
  static StructureNode free_product(std::string label, std::vector<StructureNode> children);
  static StructureNode amalgam(std::string label, StructureNode a, StructureNode b, std::vector<std::string> over);
  static StructureNode hnn(std::string label, StructureNode base, std::vector<std::string> over, std::string stable);
};

std::string_view to_string(StructureNode::Kind k);

struct GroupPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  StructureNode structure;
};

/// Generators and relators of a structure tree. Generators appear in tree
/// order without repetition; relators are the torsion relators in generator
/// order followed by commutators ordered by generator position.
struct FlatPresentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;
};
FlatPresentation flatten(const StructureNode& s);

/// Empty if the presentation is consistent: every relator mentions only
/// declared generators and flatten(structure) reproduces generators and
/// relators exactly. Otherwise one message per problem.
std::vector<std::string> consistency_errors(const GroupPresentation& g);

enum class StabilizerKind {
  Vertex,
  OrderedPair,
  UnorderedPairSwappable,
  UnorderedPairRigid,
  TTVertex_qSq1,
  TTVertex_qSqNot1,
  TTEdgeUnion_qSq1,
  TTEdge,
};

std::string_view to_string(StabilizerKind k);
std::optional<StabilizerKind> parse_stabilizer_kind(std::string_view s);

GroupPresentation stabilizer_presentation(StabilizerKind kind);

/// The connected case p = +-1 (mod q) (and S^3): the primitive disk complex is
/// connected and the presentation is not computed here.
struct ConnectedCaseStub {
  std::string manifold;
  std::string note;
};

using GoeritzResult = std::variant<GroupPresentation, ConnectedCaseStub>;

/// Amalgamated product over <alpha> when q^2 = 1 (mod p), HNN extension with
/// stable letter upsilon otherwise, the stub when p = +-1 (mod q).
GoeritzResult goeritz_presentation(const LensSpace& L);

/// Z^free_rank + sum of Z/t for t in torsion (each t >= 2, t_i | t_{i+1}).
struct AbelianGroup {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Smith normal form of the relator exponent matrix.
AbelianGroup abelianization(const GroupPresentation& g);
/// e.g. "(Z/2)^5+Z^3"; the trivial group is "0".
std::string to_string(const AbelianGroup& a);

/// One relator per line after a generator header; `g^n` and `[a,b]`.
std::string export_text(const GroupPresentation& g);
/// Mirrors the structure tree; newline terminated.
std::string export_json(const GroupPresentation& g);
/// GAP input: free group, generator bindings, then `F / [ ... ]`.
std::string export_gap(const GroupPresentation& g);
/// Human-oriented Unicode rendering, e.g. "⟨α, β | α², [α,β]⟩".
std::string pretty(const GroupPresentation& g);
std::string format_relator(const Relator& r);

/// 1 -> pi_1(Diff M) -> pi_1(H(M)) -> G(M) -> 1.
struct HeegaardSpaceReport {
  std::string manifold;
  DiffPi1Report kernel;
  std::string sequence;
  std::string quotient_description;
  GoeritzResult quotient;
  std::string conclusion;
};

HeegaardSpaceReport heegaard_space_report(const SplitManifold& M);

}  // namespace goeritz
