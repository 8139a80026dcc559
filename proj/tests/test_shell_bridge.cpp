#include <array>
#include <tuple>

#include <gtest/gtest.h>

#include "goeritz/errors.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/shell_bridge.hpp"
#include "oracle.hpp"

using namespace goeritz;

namespace {

Word gap_word(const std::vector<std::int64_t>& gaps) {
  Word w;
  for (std::int64_t g : gaps) w *= Word::generator(Gen::x) * Word::generator(Gen::y, g);
  return w;
}

}  // namespace

TEST(Shell, Examples) {
  const Shell s73 = shell_words(7, 3);
  ASSERT_EQ(s73.words.size(), 8U);
  EXPECT_EQ(s73.words[3], parse_word("xy^3xy^3xy"));
  EXPECT_EQ(s73.words[7], parse_word("(xy)^7"));
  EXPECT_EQ(s73.words[0], parse_word("y^7"));
  EXPECT_EQ(s73.center, parse_word("x"));
  EXPECT_EQ(shell_words(12, 5).words[3], parse_word("(xy^5)^2xy^2"));
  EXPECT_EQ(shell_words(12, 5).words[2], parse_word("xy^5xy^7"));
}

TEST(Shell, PrimitiveIndexExamples) {
  EXPECT_EQ(shell_primitive_indices(7, 3), (std::set<std::int64_t>{1, 2, 5, 6}));
  EXPECT_EQ(shell_primitive_indices(12, 5), (std::set<std::int64_t>{1, 5, 7, 11}));
  EXPECT_EQ(shell_primitive_indices(5, 2), (std::set<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(oracle_primitive_indices(shell_words(12, 5)), (std::set<std::int64_t>{1, 5, 7, 11}));
}

TEST(Shell, GapModelAgainstIndependentGaps) {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      const Shell s = shell_words(p, q);
      for (std::int64_t k = 1; k <= p; ++k) {
        EXPECT_EQ(s.words[static_cast<std::size_t>(k)], gap_word(oracle::shell_gaps(p, q, k)));
      }
    }
  }
}

TEST(Shell, ClosedFormsForSmallK) {
  for (std::int64_t p = 5; p <= 40; ++p) {
    for (std::int64_t q = 2; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const Shell s = shell_words(p, q);
      for (std::int64_t k = 1; (k - 1) * q < p; ++k) {
        const Word expect = (parse_word("xy").substitute(Word::generator(Gen::x), Word::generator(Gen::y, q)))
                                .pow(k - 1) *
                            Word::generator(Gen::x) * Word::generator(Gen::y, p - (k - 1) * q);
        EXPECT_EQ(s.words[static_cast<std::size_t>(k)], expect) << p << "," << q << "," << k;
      }
      EXPECT_EQ(CyclicWord(s.words[static_cast<std::size_t>(p - 1)]), CyclicWord(parse_word("xy").pow(p - 2) * parse_word("xy^2")));
    }
  }
}

TEST(Shell, SweepShapeAndPrimitivity) {
  for (std::int64_t p = 4; p <= 50; ++p) {
    for (std::int64_t q = 2; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const Shell s = shell_words(p, q);
      std::set<std::int64_t> christoffel;
      for (std::size_t k = 0; k < s.words.size(); ++k) {
        const Word& w = s.words[k];
        EXPECT_TRUE(is_cyclically_reduced(w));
        if (k > 0) {
          EXPECT_EQ(abelianize(w), (AbelianPair{static_cast<std::int64_t>(k), p}));
          for (const Syllable& syl : w.syllables()) EXPECT_GT(syl.exp, 0);
        }
        if (oracle::christoffel_primitive(w.letters())) christoffel.insert(static_cast<std::int64_t>(k));
      }
      EXPECT_EQ(christoffel, s.primitive_indices) << p << "," << q;
    }
  }
}

TEST(Shell, Guards) {
  EXPECT_THROW(shell_words(12, 4), InvalidInput);
  EXPECT_THROW(shell_words(5, 5), InvalidInput);
  EXPECT_THROW(shell_words(kMaxShellP + 1, 2), ResourceLimit);
}

TEST(PrincipalVertex, FigureLabels) {
  // (p, qbar) = (12, 5): m = 2, r = 2.
  const std::int64_t q = 5, m = 2, r = 2;
  auto n = [&](std::string_view w) { return principal_vertex(12, q, m, r, w).n_exp; };
  EXPECT_EQ(principal_vertex(12, q, m, r, "").m_exp, 2 * m);
  EXPECT_EQ(n(""), 2 * r);
  EXPECT_EQ(principal_vertex(12, q, m, r, "R").m_exp, 3 * m);
  EXPECT_EQ(n("R"), 3 * r);
  EXPECT_EQ(n("L"), 3 * r - q);
  EXPECT_EQ(n("RR"), 4 * r);
  EXPECT_EQ(n("LL"), 4 * r - 2 * q);
  EXPECT_EQ(n("RL"), 5 * r - q);
  EXPECT_EQ(n("LR"), 5 * r - 2 * q);
  const PrincipalVertex l = principal_vertex(12, q, m, r, "L");
  EXPECT_EQ(l.m_exp, 7);
  EXPECT_EQ(l.n_exp, 1);
  EXPECT_EQ(l.word(q), parse_word("(xy^5)^7xy"));
}

TEST(PrincipalVertex, StemBrocotBookkeeping) {
  // Every n_exp is c r - d qbar with (c, d) following the same recursion.
  for (const auto& [p, qbar] : {std::pair<std::int64_t, std::int64_t>{12, 5}, {23, 7}, {47, 9}, {31, 11}}) {
    const auto win = type_window(p, qbar);
    ASSERT_TRUE(win);
    struct CD {
      std::int64_t c, d, mm;
    };
    std::vector<std::tuple<std::string, CD, CD>> level{{"", CD{1, -1, win->m - 1}, CD{1, 0, win->m}}};
    for (int depth = 0; depth <= 10; ++depth) {
      std::vector<std::tuple<std::string, CD, CD>> next;
      for (const auto& [w, a, b] : level) {
        const CD mid{a.c + b.c, a.d + b.d + 1, a.mm + b.mm + 1};
        const PrincipalVertex v = principal_vertex(p, qbar, win->m, win->r, w);
        ASSERT_EQ(v.n_exp, mid.c * win->r - mid.d * qbar) << w;
        ASSERT_EQ(v.m_exp, mid.mm);
        EXPECT_GE(mid.c, 0);
        EXPECT_GE(mid.d, 0);
        next.emplace_back(w + "L", mid, b);
        next.emplace_back(w + "R", a, mid);
      }
      level = std::move(next);
    }
  }
}

TEST(PrincipalVertex, Errors) {
  EXPECT_THROW(principal_vertex(12, 5, 3, 2, ""), InvalidInput);
  EXPECT_THROW(principal_vertex(12, 5, 2, 2, "LX"), InvalidInput);
}

TEST(FindBridge, Examples) {
  const Bridge a = find_bridge(LensSpace(12, 5), 5);
  EXPECT_EQ(a.w, "");
  EXPECT_EQ(format_word(a.d_word), "xy^5xy^5xy^5xy^5xy^4");
  EXPECT_EQ(a.simplex_count, 2);
  const std::array<std::string, 3> first{"E", "E_m", "E_{m+1}"};
  EXPECT_EQ(a.corridor.front(), first);

  const Bridge b = find_bridge(LensSpace(23, 7), 7);
  EXPECT_EQ(b.w, "R");
  EXPECT_EQ(b.d_word, parse_word("(xy^7)^9xy^6"));
  EXPECT_EQ(b.simplex_count, 3);

  const Bridge c = find_bridge(LensSpace(17, 5), 5);
  EXPECT_EQ(c.w, "");
  EXPECT_EQ(c.d_word, parse_word("(xy^5)^6xy^4"));
}

TEST(FindBridge, Errors) {
  EXPECT_THROW(find_bridge(LensSpace(7, 3), 3), NotForest);
  EXPECT_THROW(find_bridge(LensSpace(23, 7), 4), InvalidInput);
  EXPECT_THROW(find_bridge(LensSpace(23, 7), 7, 0), DepthLimitExceeded);
}

TEST(FindBridge, Homology) {
  const EndHomology a = bridge_end_homology(find_bridge(LensSpace(12, 5), 5));
  EXPECT_EQ(a.class_e, 1);
  EXPECT_EQ(a.class_d, 5);
  const EndHomology b = bridge_end_homology(find_bridge(LensSpace(23, 7), 7));
  EXPECT_EQ(b.class_e, 1);
  EXPECT_EQ(b.class_d, 7);
}

TEST(FindBridge, SweepAgainstUnprunedSearch) {
  for (std::int64_t p = 5; p <= 60; ++p) {
    for (std::int64_t q = 2; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const LensSpace L(p, q);
      const LensInvariants inv = invariants(L);
      if (inv.classification != Classification::Forest) continue;
      for (const std::int64_t qbar : {q, inv.q_prime}) {
        const auto win = inv.window(qbar, q);
        ASSERT_TRUE(win);
        const Bridge b = find_bridge(L, qbar);
        const auto ref = oracle::brute_bridge(qbar, win->m, win->r, 14);
        ASSERT_TRUE(ref) << p << "," << q << "," << qbar;
        EXPECT_EQ(b.w, ref->w);
        EXPECT_EQ(b.d.n_exp, ref->n_exp);
        EXPECT_EQ(b.d.m_exp, ref->m_exp);
        EXPECT_EQ(b.simplex_count, static_cast<std::int64_t>(b.w.size()) + 2);
        EXPECT_TRUE(b.d.n_exp == qbar + 1 || b.d.n_exp == qbar - 1);
        EXPECT_TRUE(oracle::christoffel_primitive(cyclic_reduce(b.d_word).cyclic.word().letters()));
        for (const CorridorVertex& v : b.vertices) {
          if (v.label == "E" || v.label == "D") continue;
          const CyclicWord cwd = cyclic_reduce(v.word).cyclic;
          EXPECT_FALSE(oracle::christoffel_primitive(cwd.word().letters())) << v.label;
          EXPECT_TRUE(certify_nonprimitive(cwd) || !is_primitive(cwd).is_primitive);
        }
        for (std::size_t i = 1; i < b.corridor.size(); ++i) {
          int shared = 0;
          for (const auto& a : b.corridor[i - 1]) {
            for (const auto& c : b.corridor[i]) shared += a == c ? 1 : 0;
          }
          EXPECT_EQ(shared, 2);
        }
        const EndHomology h = bridge_end_homology(b);
        EXPECT_NE(h.class_e, h.class_d);
      }
    }
  }
}

TEST(FindBridge, Deterministic) {
  const Bridge a = find_bridge(LensSpace(47, 9), 9);
  const Bridge b = find_bridge(LensSpace(47, 9), 9);
  EXPECT_EQ(a.w, b.w);
  EXPECT_EQ(a.corridor, b.corridor);
}
