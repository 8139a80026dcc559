#include <random>

#include <gtest/gtest.h>

#include "goeritz/obstruction.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/verify.hpp"
#include "oracle.hpp"

using namespace goeritz;

namespace {

CyclicWord cw(std::string_view s) { return CyclicWord(parse_word(s)); }

std::vector<Letter> span_letters(const std::vector<Letter>& w, const LetterSpan& s) {
  std::vector<Letter> out;
  const auto n = static_cast<std::int64_t>(w.size());
  for (std::int64_t i = 0; i < s.length; ++i) out.push_back(w[static_cast<std::size_t>((s.start + i) % n)]);
  return out;
}

std::int64_t y_sum(const std::vector<Letter>& l) {
  std::int64_t s = 0;
  for (Letter c : l) {
    if (c == Letter::y) ++s;
    if (c == Letter::Y) --s;
  }
  return s;
}

}  // namespace

TEST(CheckPP2, Examples) {
  const auto a = check_pp2(cw("xyxy^-1"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::PP2a);

  const auto b = check_pp2(cw("xy^3xy^5"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->rule, Rule::PP2b);
  EXPECT_EQ(b->values, std::vector<std::int64_t>{3});

  EXPECT_FALSE(check_pp2(cw("(xy^5)^4xy^4")));
}

TEST(CheckKey, Examples) {
  const auto a = check_key(cw("x^2y^2"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::KEY1);
  EXPECT_EQ(a->clause, 3);
  const auto b = check_key(cw("xyxy^-1"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->clause, 1);
  EXPECT_FALSE(check_key(cw("xy")));
}

TEST(CheckKey2, Examples) {
  const auto a = check_key2(cw("xy^2x^-1y^-1"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::KEY2);
  EXPECT_EQ(a->values, std::vector<std::int64_t>{2});
  EXPECT_FALSE(check_key2(cw("(xy^5)^4xy^4")));
  // x y y^-1 x^-1 reduces to the identity, which has no span at all.
  EXPECT_TRUE(reduce(std::vector<Letter>{Letter::x, Letter::y, Letter::Y, Letter::X}).empty());
}

TEST(CheckKey3, Examples) {
  const auto a = check_key3(cw("xyxy^4"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::KEY3);
  EXPECT_EQ((std::set<std::int64_t>{a->values[0], a->values[1]}), (std::set<std::int64_t>{1, 4}));
  EXPECT_FALSE(is_primitive_power(cw("xyxy^4")).is_primitive_power);
  EXPECT_FALSE(check_key3(cw("xy^3xy^4")));
  EXPECT_FALSE(check_key3(cw("xy^5xy^5xy^4")));
  EXPECT_TRUE(is_primitive(cw("xy^5xy^5xy^4")).is_primitive);
}

TEST(Certify, Examples) {
  EXPECT_TRUE(certify_nonprimitive(cw("x^2y^3")));
  EXPECT_FALSE(certify_nonprimitive(cw("x")));
  EXPECT_TRUE(certify_nonprimitive(cw("xy^3xy^3xy")));
}

TEST(Certify, ShapeFailuresAreCaughtByNamedRules) {
  // The named rules already cover every shape failure here, so the shape
  // fallback never decides.
  for (int n = 1; n <= 11; ++n) {
    for (const auto& letters : canonical_cyclic_words(n)) {
      const CyclicWord w(Word::from_letters(letters));
      const auto o = certify_nonprimitive(w);
      if (!oz_form_check(w)) {
        ASSERT_TRUE(o) << format_word(w.canonical());
        EXPECT_NE(o->rule, Rule::BLOCKDIFF);
      }
    }
  }
}

TEST(Certify, SoundExhaustiveTo11) {
  for (int n = 1; n <= 11; ++n) {
    for (const auto& letters : canonical_cyclic_words(n)) {
      const CyclicWord w(Word::from_letters(letters));
      if (certify_nonprimitive(w)) {
        ASSERT_FALSE(oracle::christoffel_primitive_power(letters)) << format_word(w.canonical());
      }
    }
  }
}

TEST(Certify, WitnessArithmetic) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& letters : canonical_cyclic_words(n)) {
      const CyclicWord w(Word::from_letters(letters));
      const auto o = certify_nonprimitive(w);
      if (!o || o->rule == Rule::BLOCKDIFF) continue;
      const std::vector<Letter> oriented = oriented_letters(w, o->orientation);
      switch (o->rule) {
        case Rule::PP2b: {
          const auto first = span_letters(oriented, o->witness[0]);
          const auto second = span_letters(oriented, o->witness[1]);
          EXPECT_EQ(y_sum(first), o->values[0]);
          EXPECT_EQ(static_cast<std::int64_t>(second.size()), o->values[0] + 2);
          for (Letter c : second) EXPECT_EQ(c, Letter::y);
          break;
        }
        case Rule::KEY2: {
          const auto s = span_letters(oriented, o->witness[0]);
          EXPECT_EQ(s.front(), Letter::x);
          EXPECT_EQ(s.back(), Letter::X);
          EXPECT_NE(y_sum(s), 0);
          EXPECT_EQ(y_sum(s), o->values[0]);
          break;
        }
        case Rule::KEY3: {
          const auto a = span_letters(oriented, o->witness[0]);
          const auto b = span_letters(oriented, o->witness[1]);
          EXPECT_GE(std::llabs(y_sum(a) - y_sum(b)), 2);
          break;
        }
        default: {
          for (const LetterSpan& s : o->witness) EXPECT_EQ(s.length, 2);
          break;
        }
      }
    }
  }
}

TEST(Certify, RotationAndInversionInvariant) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int i = 0; i < 3000; ++i) {
    std::vector<Letter> raw(static_cast<std::size_t>(2 + i % 18));
    for (Letter& l : raw) l = static_cast<Letter>(letter(rng));
    const CyclicReduction red = cyclic_reduce(reduce(raw));
    if (red.cyclic.empty()) continue;
    const bool fires = certify_nonprimitive(red.cyclic).has_value();
    EXPECT_EQ(certify_nonprimitive(red.cyclic.inverse()).has_value(), fires);
    const auto& syl = red.cyclic.word().syllables();
    if (syl.size() >= 2) {
      std::vector<Syllable> rot(syl.begin() + 1, syl.end());
      rot.push_back(syl.front());
      EXPECT_EQ(certify_nonprimitive(CyclicWord(Word::from_syllables(rot))).has_value(), fires);
    }
  }
}
