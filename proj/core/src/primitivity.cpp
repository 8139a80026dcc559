#include "goeritz/primitivity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <unordered_set>

#include "goeritz/errors.hpp"

namespace goeritz {

namespace {

constexpr std::array<WhiteheadMove, 8> kMoves{{
    {0, "x->xy", Gen::x, true, 1},
    {1, "x->xy^-1", Gen::x, true, -1},
    {2, "x->yx", Gen::x, false, 1},
    {3, "x->y^-1x", Gen::x, false, -1},
    {4, "y->yx", Gen::y, true, 1},
    {5, "y->yx^-1", Gen::y, true, -1},
    {6, "y->xy", Gen::y, false, 1},
    {7, "y->x^-1y", Gen::y, false, -1},
}};

CyclicWord cyclic_of(const Word& w) { return cyclic_reduce(w).cyclic; }

std::int64_t image_length(const CyclicWord& w, const WhiteheadMove& m, std::int64_t power) {
  return apply_move(w, m, power).length();
}

}  // namespace

std::span<const WhiteheadMove> whitehead_moves() { return kMoves; }

Word apply_move(const Word& w, const WhiteheadMove& move, std::int64_t power) {
  const Word t = Word::generator(move.target);
  const Word o = Word::generator(other(move.target), move.sign * power);
  const Word image = move.right ? t * o : o * t;
  return move.target == Gen::x ? w.substitute(image, Word::generator(Gen::y))
                               : w.substitute(Word::generator(Gen::x), image);
}

CyclicWord apply_move(const CyclicWord& w, const WhiteheadMove& move, std::int64_t power) {
  return cyclic_of(apply_move(w.word(), move, power));
}

WhiteheadReduction whitehead_reduce(const CyclicWord& w) {
  WhiteheadReduction out{w, {}};
  std::int64_t len = w.length();
  while (len > 1) {
    const WhiteheadMove* best = nullptr;
    std::int64_t best_len = len;
    for (const WhiteheadMove& m : kMoves) {
      const std::int64_t l = image_length(out.minimal, m, 1);
      if (l < best_len) {
        best_len = l;
        best = &m;
      }
    }
    if (best == nullptr) break;

    // Gallop on the power of the chosen move, then bisect for the first power
    // after which the length stops decreasing.
    std::int64_t lo = 1;
    std::int64_t lo_len = best_len;
    std::int64_t hi = 2;
    std::int64_t hi_len = image_length(out.minimal, *best, hi);
    while (hi_len < lo_len && hi < (std::int64_t{1} << 40)) {
      lo = hi;
      lo_len = hi_len;
      hi *= 2;
      hi_len = image_length(out.minimal, *best, hi);
    }
    std::int64_t a = lo;
    std::int64_t b = hi - 1;
    while (a < b) {
      const std::int64_t mid = a + (b - a) / 2;
      if (image_length(out.minimal, *best, mid + 1) < image_length(out.minimal, *best, mid)) {
        a = mid + 1;
      } else {
        b = mid;
      }
    }
    // The length is convex in the power, so `a` is a minimizer; fall back to the
    // gallop point if that ever fails.
    const std::int64_t power = image_length(out.minimal, *best, a) <= lo_len ? a : lo;
    out.minimal = apply_move(out.minimal, *best, power);
    len = out.minimal.length();
    out.trace.push_back({best->id, power, len});
  }
  return out;
}

std::optional<CyclicWord> replay_trace(const CyclicWord& w, std::span<const TraceStep> trace) {
  CyclicWord cur = w;
  std::int64_t prev = cur.length();
  for (const TraceStep& step : trace) {
    if (step.move_id < 0 || step.move_id >= static_cast<int>(kMoves.size())) return std::nullopt;
    cur = apply_move(cur, kMoves[static_cast<std::size_t>(step.move_id)], step.power);
    if (cur.length() != step.length || step.length >= prev) return std::nullopt;
    prev = step.length;
  }
  return cur;
}

CyclicRoot cyclic_root(const CyclicWord& w) {
  const auto& s = w.word().syllables();
  if (s.empty()) return {Word{}, 0};
  if (s.size() == 1) {
    const std::int64_t e = s.front().exp;
    return {Word::generator(s.front().gen, e < 0 ? -1 : 1), e < 0 ? -e : e};
  }
  // s has an even number of syllables >= 2 and alternates generators, so any
  // cyclic period of the word is a period of the syllable sequence.
  const std::size_t n = s.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(s[i] == s[k])) k = fail[k];
    if (s[i] == s[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t period = n - fail[n];
  if (n % period != 0) period = n;
  std::vector<Syllable> root(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(period));
  return {Word::from_syllables(root), static_cast<std::int64_t>(n / period)};
}

PrimitivityVerdict is_primitive(const CyclicWord& w) {
  PrimitivityVerdict v;
  if (w.empty()) return v;
  const CyclicRoot root = cyclic_root(w);
  WhiteheadReduction red = whitehead_reduce(CyclicWord(root.root));
  v.minimal_length = red.minimal.length();
  v.reduction_trace = std::move(red.trace);
  v.is_primitive_power = v.minimal_length == 1;
  if (v.is_primitive_power) {
    v.power_root = root.root;
    v.power_exponent = root.exponent;
  }
  v.is_primitive = v.is_primitive_power && root.exponent == 1;
  return v;
}

PrimitivityVerdict is_primitive_power(const CyclicWord& w) { return is_primitive(w); }

namespace {

// One generator role of the OZ shape: every letter of `iso` carries the same
// sign, and the runs of the other generator between consecutive `iso` letters
// (zero inside an iso-run of length >= 2) take at most two adjacent values.
bool oz_role(const std::vector<Syllable>& s, Gen iso) {
  int sign = 0;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  auto include = [&](std::int64_t v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (const Syllable& syl : s) {
    if (syl.gen == iso) {
      const int sg = syl.exp < 0 ? -1 : 1;
      if (sign == 0) {
        sign = sg;
      } else if (sign != sg) {
        return false;
      }
      if (syl.exp >= 2 || syl.exp <= -2) include(0);
    } else {
      include(syl.exp);
    }
  }
  if (sign == 0) return false;
  if (lo > hi) return true;  // a single iso letter
  return hi - lo <= 1;
}

}  // namespace

bool oz_form_check(const CyclicWord& w) {
  const auto& s = w.canonical().syllables();
  if (s.empty()) return false;
  return oz_role(s, Gen::x) || oz_role(s, Gen::y);
}

std::vector<CyclicWord> enumerate_primitives(int max_len) {
  if (max_len > kMaxEnumerationLength) {
    throw ResourceLimit("enumerate_primitives: max_len " + std::to_string(max_len) + " exceeds " +
                        std::to_string(kMaxEnumerationLength));
  }
  std::vector<CyclicWord> out;
  if (max_len < 1) return out;

  const Word x = Word::generator(Gen::x);
  const Word y = Word::generator(Gen::y);
  // Signed permutations of the basis; together with the transvections they
  // generate Aut(F2).
  const std::array<std::pair<Word, Word>, 3> perms{{{y, x}, {x.inverse(), y}, {x, y.inverse()}}};

  std::unordered_set<CyclicWord> seen;
  std::deque<CyclicWord> queue;
  for (const Word& g : {x, x.inverse(), y, y.inverse()}) {
    CyclicWord c(g);
    if (seen.insert(c).second) queue.push_back(c);
  }
  auto visit = [&](CyclicWord c) {
    if (c.length() <= max_len && seen.insert(c).second) queue.push_back(std::move(c));
  };
  while (!queue.empty()) {
    const CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const WhiteheadMove& m : kMoves) visit(apply_move(cur, m));
    for (const auto& [ix, iy] : perms) visit(cyclic_of(cur.word().substitute(ix, iy)));
  }
  out.assign(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace goeritz
