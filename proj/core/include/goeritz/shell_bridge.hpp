#pragma once

// Shell word sequences around a primitive disk, the principal complex grown by
// L/R replacements, and the minimal bridge leaving a tree component.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "goeritz/lens.hpp"
#include "goeritz/word.hpp"

namespace goeritz {

inline constexpr std::int64_t kMaxShellP = 2048;

/// Boundary words of a (p, qbar)-shell: words[k] is the word of E_k for
/// 0 <= k <= p, and `center` is the word of E (always x).
struct Shell {
  std::int64_t p;
  std::int64_t qbar;
  std::vector<Word> words;
  Word center;
  std::set<std::int64_t> primitive_indices;
};

/// words[0] = y^p and, for k >= 1, words[k] = x y^g1 ... x y^gk where g1..gk are
/// the cyclic gaps of {0, qbar, ..., (k-1) qbar} mod p in increasing order from 0.
/// Throws InvalidInput unless gcd(p, qbar) = 1 and 1 <= qbar < p; ResourceLimit
/// if p > kMaxShellP.
Shell shell_words(std::int64_t p, std::int64_t qbar);

/// {1, k, p-k, p-1} with k the normalized inverse of qbar mod p.
std::set<std::int64_t> shell_primitive_indices(std::int64_t p, std::int64_t qbar);

/// Indices whose words the Whitehead oracle reports primitive.
std::set<std::int64_t> oracle_primitive_indices(const Shell& shell);

/// Vertex E_w of the principal complex: its disk word is (x y^qbar)^m_exp x y^n_exp.
struct PrincipalVertex {
  std::string w;
  std::int64_t m_exp;
  std::int64_t n_exp;

  Word word(std::int64_t qbar) const;
  friend bool operator==(const PrincipalVertex&, const PrincipalVertex&) = default;
};

/// The replacement rule for a pair (m1, n1), (m2, n2).
PrincipalVertex mediant(const PrincipalVertex& left, const PrincipalVertex& right, std::int64_t qbar);

/// Root pair (E_m, E_{m+1}) = ((m-1, qbar+r), (m, r)).
std::array<PrincipalVertex, 2> principal_roots(std::int64_t qbar, std::int64_t m, std::int64_t r);

/// Walks the L/R word from the root pair: the vertex is the mediant of the
/// current pair; R keeps (left, mediant), L keeps (mediant, right).
/// Throws InvalidInput if (m, r) is not the window of (p, qbar) or w has a
/// letter other than L and R.
PrincipalVertex principal_vertex(std::int64_t p, std::int64_t qbar, std::int64_t m, std::int64_t r,
                                 std::string_view w);

/// Stable vertex label for E_w: "E_eps" for the empty word, else "E_" + w.
std::string principal_label(std::string_view w);

inline constexpr int kDefaultBridgeDepth = 64;

struct CorridorVertex {
  std::string label;
  Word word;
  std::optional<PrincipalVertex> vertex;  // absent for E
};

struct Bridge {
  LensSpace lens;
  std::int64_t qbar;
  std::int64_t m;
  std::int64_t r;
  std::string w;
  PrincipalVertex d;
  Word d_word;
  /// Labeled 2-simplices; the first is {E, E_m, E_{m+1}}.
  std::vector<std::array<std::string, 3>> corridor;
  /// E, E_m, E_{m+1}, E_<prefix> for each proper prefix of w, then D = E_w.
  std::vector<CorridorVertex> vertices;
  std::int64_t simplex_count;
  /// More than one vertex with n = qbar +- 1 at the minimal depth.
  bool tie;

  const CorridorVertex& vertex(std::string_view label) const;
};

/// Minimal bridge starting at Delta_1 = {E, E_m, E_{m+1}}: breadth-first search
/// of the principal complex, L before R, for the shortest w with
/// n_w = qbar +- 1. Throws NotForest when L is contractible or qbar has no
/// window, InvalidInput when qbar is neither q nor q', and DepthLimitExceeded
/// past max_depth.
Bridge find_bridge(const LensSpace& L, std::int64_t qbar, int max_depth = kDefaultBridgeDepth);

/// Classes of the dual curves of the end disks in H_1(L) = Z/p, normalized
/// into [1, p/2]: E gives 1, D gives qbar.
struct EndHomology {
  std::int64_t class_e;
  std::int64_t class_d;
};
EndHomology bridge_end_homology(const Bridge& b);

/// Residue of v mod p folded into [0, p/2] (classes up to sign).
std::int64_t fold_residue(std::int64_t v, std::int64_t p);

}  // namespace goeritz
