#include "goeritz/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "goeritz/errors.hpp"

namespace goeritz {

namespace {

// Hard cap on materialized syllables; parse and pow refuse to expand past it.
constexpr std::size_t kMaxSyllables = std::size_t{1} << 24;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("word exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("word exponent overflow");
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("word exponent overflow");
  return -a;
}

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// Token order on syllables whose lexicographic extension agrees with the
// letter order on rotations that start at syllable boundaries. Within one
// signed letter a longer x-run is smaller (it continues with an x-letter where
// the shorter one already moved on to a y-letter); for y-runs it is reversed.
int compare_tokens(const Syllable& a, const Syllable& b) {
  const auto la = static_cast<int>(a.letter());
  const auto lb = static_cast<int>(b.letter());
  if (la != lb) return la < lb ? -1 : 1;
  const std::int64_t ma = a.exp < 0 ? -a.exp : a.exp;
  const std::int64_t mb = b.exp < 0 ? -b.exp : b.exp;
  if (ma == mb) return 0;
  if (a.gen == Gen::x) return ma > mb ? -1 : 1;
  return ma < mb ? -1 : 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_ws();
    if (pos_ == text_.size()) return Word{};
    Word w = parse_word(0);
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return w;
  }

 private:
  Word parse_word(int depth) {
    if (depth > 256) throw ParseError("nesting too deep", pos_);
    Word out;
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      if (c == 'x' || c == 'y') {
        ++pos_;
        std::int64_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          e = parse_int();
        }
        out.push_back({c == 'x' ? Gen::x : Gen::y, e});
        any = true;
      } else if (c == '(') {
        const std::size_t open = pos_;
        ++pos_;
        Word inner = parse_word(depth + 1);
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] != ')') throw ParseError("missing ')'", open);
        ++pos_;
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] != '^') {
          throw ParseError("expected '^' after ')'", pos_);
        }
        ++pos_;
        const std::size_t at = pos_;
        const std::int64_t e = parse_int();
        if (inner.syllable_count() > 1 &&
            static_cast<double>(inner.syllable_count()) * static_cast<double>(checked_abs(e)) >
                static_cast<double>(kMaxSyllables)) {
          throw ParseError("power expands past the syllable limit", at);
        }
        out *= inner.pow(e);
        any = true;
      } else {
        break;
      }
      if (out.syllable_count() > kMaxSyllables) throw ParseError("word exceeds the syllable limit", pos_);
    }
    if (!any) throw ParseError("expected 'x', 'y' or '('", pos_);
    return out;
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer exponent", pos_);
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, d, &v)) {
        throw ParseError("exponent out of range", start);
      }
      ++pos_;
    }
    return negative ? -v : v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AbelianPair operator+(const AbelianPair& a, const AbelianPair& b) {
  return {checked_add(a.ex, b.ex), checked_add(a.ey, b.ey)};
}

AbelianPair operator-(const AbelianPair& a) { return {checked_neg(a.ex), checked_neg(a.ey)}; }

Word Word::generator(Gen g, std::int64_t exp) {
  Word w;
  w.push_back({g, exp});
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (Letter l : letters) w.push_back({gen_of(l), sign_of(l)});
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const Syllable& s : syllables) w.push_back(s);
  return w;
}

void Word::push_back(Syllable s) {
  if (s.exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == s.gen) {
    const std::int64_t e = checked_add(syl_.back().exp, s.exp);
    if (e == 0) {
      syl_.pop_back();
    } else {
      syl_.back().exp = e;
    }
    return;
  }
  syl_.push_back(s);
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syl_) n = checked_add(n, checked_abs(s.exp));
  return n;
}

std::vector<Letter> Word::letters() const {
  const std::int64_t n = length();
  if (static_cast<std::uint64_t>(n) > (std::uint64_t{1} << 32)) {
    throw ResourceLimit("word too long to expand into letters");
  }
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const Syllable& s : syl_) {
    const Letter l = s.letter();
    for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) out.push_back(l);
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, checked_neg(it->exp)});
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0 || syl_.empty()) return Word{};
  if (k < 0) return inverse().pow(checked_neg(k));
  if (syl_.size() == 1) return generator(syl_.front().gen, checked_mul(syl_.front().exp, k));
  // A word that is not cyclically reduced conjugates a cyclically reduced core.
  const CyclicReduction cr = cyclic_reduce(*this);
  const Word& core = cr.cyclic.word();
  if (core.syl_.size() == 1) {
    return cr.conjugator * generator(core.syl_.front().gen, checked_mul(core.syl_.front().exp, k)) *
           cr.conjugator.inverse();
  }
  if (static_cast<double>(core.syl_.size()) * static_cast<double>(k) > static_cast<double>(kMaxSyllables)) {
    throw ResourceLimit("power exceeds the syllable limit");
  }
  Word body;
  body.syl_.reserve(core.syl_.size() * static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    body.syl_.insert(body.syl_.end(), core.syl_.begin(), core.syl_.end());
  }
  return cr.conjugator * body * cr.conjugator.inverse();
}

Word Word::substitute(const Word& image_x, const Word& image_y) const {
  Word out;
  for (const Syllable& s : syl_) out *= (s.gen == Gen::x ? image_x : image_y).pow(s.exp);
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  if (this == &rhs) {
    const Word copy = rhs;
    return *this *= copy;
  }
  std::size_t i = 0;
  // Cancel across the junction, then merge the first surviving syllable.
  while (i < rhs.syl_.size() && !syl_.empty() && syl_.back().gen == rhs.syl_[i].gen &&
         syl_.back().exp == -rhs.syl_[i].exp) {
    syl_.pop_back();
    ++i;
  }
  if (i < rhs.syl_.size()) {
    push_back(rhs.syl_[i]);
    ++i;
  }
  syl_.insert(syl_.end(), rhs.syl_.begin() + static_cast<std::ptrdiff_t>(i), rhs.syl_.end());
  return *this;
}

Word reduce(std::span<const Letter> letters) { return Word::from_letters(letters); }

AbelianPair abelianize(const Word& w) {
  AbelianPair a;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == Gen::x) {
      a.ex = checked_add(a.ex, s.exp);
    } else {
      a.ey = checked_add(a.ey, s.exp);
    }
  }
  return a;
}

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_word(const Word& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    out += s.gen == Gen::x ? 'x' : 'y';
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

bool is_cyclically_reduced(const Word& w) noexcept {
  const auto& s = w.syllables();
  return s.size() <= 1 || s.front().gen != s.back().gen;
}

Word least_rotation(const Word& w) {
  const auto& s = w.syllables();
  const std::size_t n = s.size();
  if (n <= 1) return w;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const int c = compare_tokens(s[(i + k) % n], s[(j + k) % n]);
    if (c == 0) {
      ++k;
      continue;
    }
    if (c > 0) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  std::vector<Syllable> rotated;
  rotated.reserve(n);
  for (std::size_t t = 0; t < n; ++t) rotated.push_back(s[(start + t) % n]);
  return Word::from_syllables(rotated);
}

std::strong_ordering compare_letters(const Word& a, const Word& b) {
  const auto& sa = a.syllables();
  const auto& sb = b.syllables();
  std::size_t ia = 0;
  std::size_t ib = 0;
  std::int64_t ra = sa.empty() ? 0 : checked_abs(sa[0].exp);
  std::int64_t rb = sb.empty() ? 0 : checked_abs(sb[0].exp);
  while (ia < sa.size() && ib < sb.size()) {
    const Letter la = sa[ia].letter();
    const Letter lb = sb[ib].letter();
    if (la != lb) return la <=> lb;
    const std::int64_t step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0 && ++ia < sa.size()) ra = checked_abs(sa[ia].exp);
    if (rb == 0 && ++ib < sb.size()) rb = checked_abs(sb[ib].exp);
  }
  if (ia == sa.size() && ib == sb.size()) return std::strong_ordering::equal;
  return ia == sa.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

CyclicWord::CyclicWord(Word w) : rep_(std::move(w)) {
  if (!is_cyclically_reduced(rep_)) throw std::invalid_argument("word is not cyclically reduced");
  canon_ = least_rotation(rep_);
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(rep_.inverse()); }

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  const std::int64_t la = a.length();
  const std::int64_t lb = b.length();
  if (la != lb) return la <=> lb;
  return compare_letters(a.canon_, b.canon_);
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& s = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  std::vector<Syllable> conj;
  // Peel matching x^a ... x^-a pairs off both ends.
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    const Syllable& first = s[lo];
    const Syllable& last = s[hi - 1];
    if (first.exp == -last.exp) {
      conj.push_back(first);
      ++lo;
      --hi;
      continue;
    }
    // Partial cancellation: move the shared part into the conjugator and fold
    // the remainder into one end.
    const bool same_sign = (first.exp > 0) == (last.exp > 0);
    if (same_sign) break;  // e.g. x^2 y x^3: core is x^5 y up to rotation
    const std::int64_t shared = std::min(checked_abs(first.exp), checked_abs(last.exp));
    const std::int64_t unit = first.exp > 0 ? 1 : -1;
    conj.push_back({first.gen, unit * shared});
    std::vector<Syllable> core(s.begin() + static_cast<std::ptrdiff_t>(lo),
                               s.begin() + static_cast<std::ptrdiff_t>(hi));
    core.front().exp -= unit * shared;
    core.back().exp += unit * shared;
    Word g = Word::from_syllables(conj);
    Word c = Word::from_syllables(core);
    CyclicReduction inner = cyclic_reduce(c);
    return {std::move(inner.cyclic), g * inner.conjugator};
  }
  std::vector<Syllable> core(s.begin() + static_cast<std::ptrdiff_t>(lo),
                             s.begin() + static_cast<std::ptrdiff_t>(hi));
  Word g = Word::from_syllables(conj);
  if (core.size() >= 2 && core.front().gen == core.back().gen) {
    // x^a ... x^b with a, b of the same sign: rotate the tail x^b to the front.
    Syllable tail = core.back();
    core.pop_back();
    Word rotated;
    rotated.push_back(tail);
    for (const Syllable& t : core) rotated.push_back(t);
    // w = g * (t^-1 * rotated * t) * g^-1 where t = tail.
    Word t = Word::generator(tail.gen, tail.exp);
    return {CyclicWord(std::move(rotated)), g * t.inverse()};
  }
  return {CyclicWord(Word::from_syllables(core)), std::move(g)};
}

}  // namespace goeritz

std::size_t std::hash<goeritz::Word>::operator()(const goeritz::Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const goeritz::Syllable& s : w.syllables()) {
    const auto v = static_cast<std::uint64_t>(s.exp) * 2U + static_cast<std::uint64_t>(s.gen);
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
