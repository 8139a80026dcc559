#pragma once

// Primitivity in F2 = <x, y> decided by Whitehead length reduction.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "goeritz/word.hpp"

namespace goeritz {

/// A rank-2 Nielsen transvection. `target` is the generator being rewritten;
/// the image is target * other^sign (right multiplication) or other^sign * target.
struct WhiteheadMove {
  int id;
  std::string_view name;
  Gen target;
  bool right;
  int sign;
};

/// The hard-coded move set, in id order (ties in the reduction are broken by id):
///   0 x->xy  1 x->xy^-1  2 x->yx  3 x->y^-1x  4 y->yx  5 y->yx^-1  6 y->xy  7 y->x^-1y
std::span<const WhiteheadMove> whitehead_moves();

/// Image of w under move^power (the transvection by other^(sign*power)).
Word apply_move(const Word& w, const WhiteheadMove& move, std::int64_t power = 1);
/// Cyclic image: the result is cyclically reduced again.
CyclicWord apply_move(const CyclicWord& w, const WhiteheadMove& move, std::int64_t power = 1);

struct TraceStep {
  int move_id;
  std::int64_t power;   // the move is applied this many times in one step
  std::int64_t length;  // cyclic length after the step
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct PrimitivityVerdict {
  bool is_primitive = false;
  bool is_primitive_power = false;
  /// Set iff is_primitive_power: the primitive u with w = u^power_exponent.
  std::optional<Word> power_root;
  std::int64_t power_exponent = 0;
  /// Whitehead reduction of the root of w (w itself when it is not a proper
  /// power). Lengths strictly decrease.
  std::vector<TraceStep> reduction_trace;
  /// Cyclic length of the root after the last step.
  std::int64_t minimal_length = 0;
};

/// Greedy Whitehead reduction: at each step take the move with the shortest
/// cyclic image (ties by id), then raise it to the power that minimizes length.
struct WhiteheadReduction {
  CyclicWord minimal;
  std::vector<TraceStep> trace;
};
WhiteheadReduction whitehead_reduce(const CyclicWord& w);

/// Re-applies a trace to w, checking every recorded length. Returns the final
/// word, or nullopt if any recorded length does not match.
std::optional<CyclicWord> replay_trace(const CyclicWord& w, std::span<const TraceStep> trace);

struct CyclicRoot {
  Word root;  // empty for the identity
  std::int64_t exponent = 0;
};
/// Smallest u with w = u^k as cyclic words (k >= 1), via the failure function
/// of the syllable sequence.
CyclicRoot cyclic_root(const CyclicWord& w);

PrimitivityVerdict is_primitive(const CyclicWord& w);
PrimitivityVerdict is_primitive_power(const CyclicWord& w);

/// Osborne-Zieschang shape: a product of terms x^e y^n, x^e y^(n+1) for fixed
/// e = +-1 and some integer n, or the same with x and y exchanged. Necessary for
/// primitivity of a nonempty cyclically reduced word.
bool oz_form_check(const CyclicWord& w);

inline constexpr int kMaxEnumerationLength = 20;

/// All primitive conjugacy classes of cyclic length <= max_len, by closure of
/// {x, x^-1, y, y^-1} under the moves and the signed permutations of {x, y},
/// keeping only images of length <= max_len. Sorted shortlex.
/// Throws ResourceLimit if max_len > kMaxEnumerationLength.
std::vector<CyclicWord> enumerate_primitives(int max_len);

}  // namespace goeritz
