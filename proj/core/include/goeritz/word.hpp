#pragma once

// Elements of the rank-2 free group <x, y> in syllable (run-length) form, and
// their conjugacy classes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace goeritz {

enum class Gen : std::uint8_t { x = 0, y = 1 };

/// Signed letters. The enumerator order is the canonical letter order
/// x < x^-1 < y < y^-1 used for least rotations.
enum class Letter : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

constexpr Gen other(Gen g) noexcept { return g == Gen::x ? Gen::y : Gen::x; }
constexpr Gen gen_of(Letter l) noexcept { return static_cast<std::uint8_t>(l) < 2 ? Gen::x : Gen::y; }
constexpr int sign_of(Letter l) noexcept { return (static_cast<std::uint8_t>(l) & 1U) ? -1 : 1; }
constexpr Letter make_letter(Gen g, int sign) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(g) * 2U + (sign < 0 ? 1U : 0U));
}
constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1U);
}

struct Syllable {
  Gen gen;
  std::int64_t exp;  // nonzero in any reduced word

  Letter letter() const noexcept { return make_letter(gen, exp < 0 ? -1 : 1); }
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Exponent sums (e_x, e_y).
struct AbelianPair {
  std::int64_t ex = 0;
  std::int64_t ey = 0;

  friend bool operator==(const AbelianPair&, const AbelianPair&) = default;
  friend AbelianPair operator+(const AbelianPair& a, const AbelianPair& b);
  friend AbelianPair operator-(const AbelianPair& a);
};

/// A freely reduced word. Adjacent syllables always have distinct generators
/// and no syllable has exponent zero; the empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word generator(Gen g, std::int64_t exp = 1);
  static Word from_letters(std::span<const Letter> letters);
  /// Merges adjacent same-generator syllables and drops zero exponents.
  static Word from_syllables(std::span<const Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  std::size_t syllable_count() const noexcept { return syl_.size(); }
  /// Number of letters. Throws std::overflow_error if it does not fit.
  std::int64_t length() const;
  std::vector<Letter> letters() const;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  /// Image under the endomorphism x -> image_x, y -> image_y.
  Word substitute(const Word& image_x, const Word& image_y) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

  /// Appends one syllable with free reduction at the junction.
  void push_back(Syllable s);

 private:
  std::vector<Syllable> syl_;
};

/// Free reduction of a letter sequence.
Word reduce(std::span<const Letter> letters);
AbelianPair abelianize(const Word& w);

/// Parses the word grammar
///   word := term+ ;  term := letter ['^' int] | '(' word ')' '^' int ;  letter := x | y
/// with whitespace ignored. Empty input is the identity. Throws ParseError.
Word parse_word(std::string_view text);
/// Canonical text: expanded reduced syllables, exponent omitted when 1.
std::string format_word(const Word& w);

/// A cyclically reduced word up to rotation. word() keeps the rotation the
/// value was built from; equality, ordering and hashing use canonical(), the
/// lexicographically least rotation under x < x^-1 < y < y^-1.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Throws std::invalid_argument if w is not cyclically reduced.
  explicit CyclicWord(Word w);

  const Word& word() const noexcept { return rep_; }
  const Word& canonical() const noexcept { return canon_; }
  bool empty() const noexcept { return rep_.empty(); }
  std::int64_t length() const { return canon_.length(); }

  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.canon_ == b.canon_; }
  /// Shortlex on canonical letters.
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

 private:
  Word rep_;
  Word canon_;
};

bool is_cyclically_reduced(const Word& w) noexcept;

/// Lexicographically least rotation of a cyclically reduced word.
Word least_rotation(const Word& w);

/// Compares letter sequences lexicographically (a proper prefix is smaller).
std::strong_ordering compare_letters(const Word& a, const Word& b);

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // w == conjugator * cyclic.word() * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

}  // namespace goeritz

template <>
struct std::hash<goeritz::Word> {
  std::size_t operator()(const goeritz::Word& w) const noexcept;
};

template <>
struct std::hash<goeritz::CyclicWord> {
  std::size_t operator()(const goeritz::CyclicWord& c) const noexcept {
    return std::hash<goeritz::Word>{}(c.canonical());
  }
};
