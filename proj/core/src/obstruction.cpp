#include "goeritz/obstruction.hpp"

#include <algorithm>

#include "goeritz/primitivity.hpp"

namespace goeritz {

namespace {

std::int64_t mag(std::int64_t e) { return e < 0 ? -e : e; }
int sgn(std::int64_t e) { return e < 0 ? -1 : 1; }

// Canonical syllables relabeled by an orientation, with letter offsets.
struct Oriented {
  std::vector<Syllable> s;
  std::vector<std::int64_t> start;
  std::int64_t letters = 0;

  std::size_t size() const { return s.size(); }
  const Syllable& at(std::size_t i) const { return s[i % s.size()]; }
  std::int64_t wrap(std::int64_t p) const { return ((p % letters) + letters) % letters; }

  bool is(std::size_t i, Gen g, int sign) const {
    const Syllable& t = at(i);
    return t.gen == g && sgn(t.exp) == sign;
  }
  // The two letters straddling the boundary after syllable i.
  LetterSpan boundary(std::size_t i) const {
    return {wrap(start[i % s.size()] + mag(at(i).exp) - 1), 2};
  }
  // Last letter of syllable i through the first letter of syllable i+2.
  LetterSpan bracket(std::size_t i) const {
    return {wrap(start[i % s.size()] + mag(at(i).exp) - 1), mag(at(i + 1).exp) + 2};
  }
  LetterSpan head(std::size_t i, std::int64_t len) const { return {start[i % s.size()], len}; }
};

Oriented orient(const Word& canonical, const Orientation& o) {
  Oriented out;
  out.s.reserve(canonical.syllable_count());
  out.start.reserve(canonical.syllable_count());
  for (const Syllable& syl : canonical.syllables()) {
    const Gen g = o.swap ? other(syl.gen) : syl.gen;
    const int flip = g == Gen::x ? o.sx : o.sy;
    out.s.push_back({g, syl.exp * flip});
    out.start.push_back(out.letters);
    out.letters += mag(syl.exp);
  }
  return out;
}

std::optional<std::size_t> find_boundary(const Oriented& w, Gen g1, int s1, Gen g2, int s2) {
  if (w.size() < 2) return std::nullopt;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.is(i, g1, s1) && w.is(i + 1, g2, s2)) return i;
  }
  return std::nullopt;
}

// A syllable of generator g, positive after orientation, with exponent >= min_exp.
std::optional<std::size_t> find_run(const Oriented& w, Gen g, std::int64_t min_exp) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.s[i].gen == g && w.s[i].exp >= min_exp) return i;
  }
  return std::nullopt;
}

Obstruction make(Rule r, const Orientation& o, std::vector<LetterSpan> witness,
                 std::vector<std::int64_t> values = {}, int clause = 0) {
  return Obstruction{r, clause, o, std::move(witness), std::move(values)};
}

std::optional<Obstruction> pp2a(const Oriented& w, const Orientation& o) {
  const auto a = find_boundary(w, Gen::x, 1, Gen::y, 1);
  const auto b = find_boundary(w, Gen::x, 1, Gen::y, -1);
  if (!a || !b) return std::nullopt;
  return make(Rule::PP2a, o, {w.boundary(*a), w.boundary(*b)});
}

std::optional<Obstruction> pp2b(const Oriented& w, const Orientation& o) {
  if (w.size() < 2) return std::nullopt;
  // n = 0: the term x y^0 x is xx.
  if (const auto xx = find_run(w, Gen::x, 2)) {
    if (const auto yy = find_run(w, Gen::y, 2)) {
      return make(Rule::PP2b, o, {w.head(*xx, 2), w.head(*yy, 2)}, {0});
    }
  }
  std::int64_t max_y = 0;
  std::size_t max_at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.s[i].gen == Gen::y && w.s[i].exp > max_y) {
      max_y = w.s[i].exp;
      max_at = i;
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.is(i, Gen::x, 1) || !w.is(i + 1, Gen::y, 1) || !w.is(i + 2, Gen::x, 1)) continue;
    const std::int64_t n = w.at(i + 1).exp;
    if (max_y >= n + 2) {
      return make(Rule::PP2b, o, {w.bracket(i), w.head(max_at, n + 2)}, {n});
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> key1(const Oriented& w, const Orientation& o) {
  if (w.size() < 2) return std::nullopt;
  const auto xy = find_boundary(w, Gen::x, 1, Gen::y, 1);
  if (xy) {
    // Clause 1: (xy^-1)^+1 = xy^-1 or (xy^-1)^-1 = yx^-1.
    if (const auto t = find_boundary(w, Gen::x, 1, Gen::y, -1)) {
      return make(Rule::KEY1, o, {w.boundary(*xy), w.boundary(*t)}, {}, 1);
    }
    if (const auto t = find_boundary(w, Gen::y, 1, Gen::x, -1)) {
      return make(Rule::KEY1, o, {w.boundary(*xy), w.boundary(*t)}, {}, 1);
    }
    // Clause 2: x^-1 y or y^-1 x.
    if (const auto t = find_boundary(w, Gen::x, -1, Gen::y, 1)) {
      return make(Rule::KEY1, o, {w.boundary(*xy), w.boundary(*t)}, {}, 2);
    }
    if (const auto t = find_boundary(w, Gen::y, -1, Gen::x, 1)) {
      return make(Rule::KEY1, o, {w.boundary(*xy), w.boundary(*t)}, {}, 2);
    }
  }
  const auto xx = find_run(w, Gen::x, 2);
  const auto yy = find_run(w, Gen::y, 2);
  if (xx && yy) return make(Rule::KEY1, o, {w.head(*xx, 2), w.head(*yy, 2)}, {}, 3);
  return std::nullopt;
}

std::optional<Obstruction> key2(const Oriented& w, const Orientation& o) {
  if (w.size() < 4) return std::nullopt;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.is(i, Gen::x, 1) && w.at(i + 1).gen == Gen::y && w.is(i + 2, Gen::x, -1)) {
      return make(Rule::KEY2, o, {w.bracket(i)}, {w.at(i + 1).exp});
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> key3(const Oriented& w, const Orientation& o) {
  if (w.size() < 4) return std::nullopt;
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.is(i, Gen::x, 1) || w.at(i + 1).gen != Gen::y || !w.is(i + 2, Gen::x, 1)) continue;
    const std::int64_t b = w.at(i + 1).exp;
    if (!lo || b < w.at(*lo + 1).exp) lo = i;
    if (!hi || b > w.at(*hi + 1).exp) hi = i;
  }
  if (!lo || !hi) return std::nullopt;
  const std::int64_t blo = w.at(*lo + 1).exp;
  const std::int64_t bhi = w.at(*hi + 1).exp;
  if (bhi - blo < 2) return std::nullopt;
  const std::size_t first = std::min(*lo, *hi);
  const std::size_t second = std::max(*lo, *hi);
  return make(Rule::KEY3, o, {w.bracket(first), w.bracket(second)},
              {w.at(first + 1).exp, w.at(second + 1).exp});
}

using Check = std::optional<Obstruction> (*)(const Oriented&, const Orientation&);

std::optional<Obstruction> search(const CyclicWord& w, std::initializer_list<Check> checks) {
  if (w.empty()) return std::nullopt;
  for (Check c : checks) {
    for (const Orientation& o : orientations()) {
      if (auto hit = c(orient(w.canonical(), o), o)) return hit;
    }
  }
  return std::nullopt;
}

// Witness for failure of one OZ role: either two iso-runs of opposite sign, or
// two gap sources (other-generator runs, or the zero gap inside an iso-run of
// length >= 2) whose values differ by at least two.
void oz_violation(const Oriented& w, Gen iso, Obstruction& out) {
  std::optional<std::size_t> pos;
  std::optional<std::size_t> neg;
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  auto value = [&](std::size_t i) { return w.s[i].gen == iso ? std::int64_t{0} : w.s[i].exp; };
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Syllable& t = w.s[i];
    if (t.gen == iso) {
      (t.exp > 0 ? pos : neg) = (t.exp > 0 ? pos : neg).value_or(i);
      if (mag(t.exp) < 2) continue;
    }
    if (!lo || value(i) < value(*lo)) lo = i;
    if (!hi || value(i) > value(*hi)) hi = i;
  }
  if (pos && neg) {
    out.witness.push_back(w.head(*pos, 1));
    out.witness.push_back(w.head(*neg, 1));
    out.values.push_back(1);
    out.values.push_back(-1);
    return;
  }
  if (!pos && !neg) return;
  if (lo && hi && value(*hi) - value(*lo) >= 2) {
    auto span = [&](std::size_t i) {
      return w.s[i].gen == iso ? w.head(i, 2) : w.head(i, mag(w.s[i].exp));
    };
    out.witness.push_back(span(*lo));
    out.witness.push_back(span(*hi));
    out.values.push_back(value(*lo));
    out.values.push_back(value(*hi));
  }
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::PP2a:
      return "PP2a";
    case Rule::PP2b:
      return "PP2b";
    case Rule::KEY1:
      return "KEY1";
    case Rule::KEY2:
      return "KEY2";
    case Rule::KEY3:
      return "KEY3";
    case Rule::BLOCKDIFF:
      return "BLOCKDIFF";
  }
  return "?";
}

const std::array<Orientation, 8>& orientations() {
  static const std::array<Orientation, 8> all{{
      {false, 1, 1},
      {false, 1, -1},
      {false, -1, 1},
      {false, -1, -1},
      {true, 1, 1},
      {true, 1, -1},
      {true, -1, 1},
      {true, -1, -1},
  }};
  return all;
}

std::vector<Letter> oriented_letters(const CyclicWord& w, const Orientation& o) {
  const Oriented ow = orient(w.canonical(), o);
  return Word::from_syllables(ow.s).letters();
}

std::optional<Obstruction> check_pp2(const CyclicWord& w) { return search(w, {pp2a, pp2b}); }
std::optional<Obstruction> check_key(const CyclicWord& w) { return search(w, {key1}); }
std::optional<Obstruction> check_key2(const CyclicWord& w) { return search(w, {key2}); }
std::optional<Obstruction> check_key3(const CyclicWord& w) { return search(w, {key3}); }

std::optional<Obstruction> certify_nonprimitive(const CyclicWord& w) {
  if (auto hit = search(w, {pp2a, pp2b, key1, key2, key3})) return hit;
  if (w.empty() || oz_form_check(w)) return std::nullopt;
  Obstruction out{Rule::BLOCKDIFF, 0, Orientation{}, {}, {}};
  const Oriented ow = orient(w.canonical(), Orientation{});
  oz_violation(ow, Gen::x, out);
  oz_violation(ow, Gen::y, out);
  return out;
}

}  // namespace goeritz
