#pragma once

// Sound but incomplete certificates that a cyclic word is not a (positive
// power of a) primitive element. Every predicate quantifies over the eight
// relabelings x -> x^(+-1), y -> y^(+-1), optionally composed with x <-> y,
// and matches subwords cyclically.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "goeritz/word.hpp"

namespace goeritz {

enum class Rule {
  PP2a,       // both xy and xy^-1
  PP2b,       // both xy^n x and y^(n+2), n >= 0
  KEY1,       // clause 1: xy, (xy^-1)^+-1; clause 2: xy, (x^-1y)^+-1; clause 3: x^2, y^2
  KEY2,       // x y^e1..y^el x^-1 with nonzero exponent sum
  KEY3,       // x y..x and x y..x whose exponent sums differ by >= 2
  BLOCKDIFF,  // not of Osborne-Zieschang shape in either generator role
};

std::string_view rule_name(Rule r);

/// Relabeling applied to the canonical word before matching: first exchange
/// x and y if `swap`, then send x -> x^sx and y -> y^sy.
struct Orientation {
  bool swap = false;
  int sx = 1;
  int sy = 1;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// The eight relabelings in the fixed search order.
const std::array<Orientation, 8>& orientations();

/// A cyclic letter interval [start, start + length) of the canonical word.
struct LetterSpan {
  std::int64_t start;
  std::int64_t length;
  friend bool operator==(const LetterSpan&, const LetterSpan&) = default;
};

struct Obstruction {
  Rule rule;
  int clause = 0;  // KEY1 only
  Orientation orientation;
  /// Matched terms, in the order they appear in the rule statement. For
  /// BLOCKDIFF: the offending pair for the x-role followed by the pair for the
  /// y-role (either pair may be absent when that role has no letters).
  std::vector<LetterSpan> witness;
  /// Rule arithmetic: PP2b {n}; KEY2 {sum}; KEY3 {sum1, sum2}; BLOCKDIFF the
  /// offending values per role.
  std::vector<std::int64_t> values;
};

std::optional<Obstruction> check_pp2(const CyclicWord& w);
std::optional<Obstruction> check_key(const CyclicWord& w);
std::optional<Obstruction> check_key2(const CyclicWord& w);
std::optional<Obstruction> check_key3(const CyclicWord& w);

/// First firing rule among PP2a, PP2b, KEY1, KEY2, KEY3 (rule-major, then
/// orientation order), else BLOCKDIFF if the OZ shape fails. Some(...) implies
/// w is not a positive power of a primitive element; nullopt is inconclusive.
std::optional<Obstruction> certify_nonprimitive(const CyclicWord& w);

/// Letters of w.canonical() under the orientation, as a flat sequence; used to
/// re-read witnesses.
std::vector<Letter> oriented_letters(const CyclicWord& w, const Orientation& o);

}  // namespace goeritz
