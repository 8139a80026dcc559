#include <gtest/gtest.h>

#include "goeritz/errors.hpp"
#include "goeritz/lens.hpp"
#include "goeritz/serialize.hpp"

using namespace goeritz;

TEST(LensSpace, Validation) {
  EXPECT_THROW(LensSpace(12, 4), InvalidInput);
  EXPECT_THROW(LensSpace(12, 7), InvalidInput);
  EXPECT_THROW(LensSpace(1, 1), InvalidInput);
  EXPECT_THROW(LensSpace(5, 0), InvalidInput);
  EXPECT_NO_THROW(LensSpace(2, 1));
}

TEST(Invariants, Examples) {
  const LensInvariants a = invariants(LensSpace(12, 5));
  EXPECT_EQ(a.q_prime, 5);
  EXPECT_TRUE(a.q_squared_is_one);
  EXPECT_EQ(a.classification, Classification::Forest);
  EXPECT_EQ(a.window_q, (TypeWindow{2, 2}));

  const LensInvariants b = invariants(LensSpace(7, 3));
  EXPECT_EQ(b.q_prime, 2);
  EXPECT_EQ(b.classification, Classification::Contractible);

  const LensInvariants c = invariants(LensSpace(23, 7));
  EXPECT_EQ(c.q_prime, 10);
  EXPECT_FALSE(c.q_squared_is_one);
  EXPECT_EQ(c.classification, Classification::Forest);
  EXPECT_EQ(c.window_q, (TypeWindow{3, 2}));
}

TEST(Invariants, InverseSweep) {
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q = 1; 2 * q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const LensInvariants inv = invariants(LensSpace(p, q));
      EXPECT_GE(inv.q_prime, 1);
      EXPECT_LE(2 * inv.q_prime, p);
      const std::int64_t prod = (q * inv.q_prime) % p;
      EXPECT_TRUE(prod == 1 % p || prod == p - 1) << p << "," << q;
      EXPECT_EQ(inv.q_squared_is_one, (q * q) % p == 1 % p);
      if (q == 1) EXPECT_EQ(inv.classification, Classification::Contractible);
      if (inv.classification == Classification::Forest) {
        EXPECT_TRUE(inv.window_q.has_value());
        EXPECT_TRUE(inv.window_q_prime.has_value()) << "q' window missing for " << p << "," << q;
      }
    }
  }
}

TEST(Invariants, WindowDefinition) {
  for (std::int64_t p = 2; p <= 120; ++p) {
    for (std::int64_t qbar = 1; qbar < p; ++qbar) {
      const auto w = type_window(p, qbar);
      bool exists = false;
      for (std::int64_t m = 0; m * qbar <= p; ++m) {
        const std::int64_t r = p - qbar * m;
        if (r >= 2 && r <= qbar - 2) {
          exists = true;
          ASSERT_TRUE(w.has_value());
          EXPECT_EQ(*w, (TypeWindow{m, r}));
        }
      }
      EXPECT_EQ(w.has_value(), exists);
    }
  }
}

TEST(Invariants, WindowRejectsOtherTypes) {
  const LensInvariants inv = invariants(LensSpace(23, 7));
  EXPECT_THROW(inv.window(4, 7), InvalidInput);
  EXPECT_EQ(inv.window(10, 7), (TypeWindow{2, 3}));
}

TEST(Pi1Diff, CaseTable) {
  EXPECT_EQ(pi1_diff(Sphere3{}).group, DiffPi1::Z2);
  const DiffPi1Report l21 = pi1_diff(LensSpace(2, 1));
  EXPECT_EQ(l21.group, DiffPi1::Z2xZ2);
  EXPECT_TRUE(l21.smale_conditional);
  EXPECT_EQ(pi1_diff(LensSpace(3, 1)).group, DiffPi1::Z);
  EXPECT_EQ(pi1_diff(LensSpace(4, 1)).group, DiffPi1::ZxZ2);
  EXPECT_EQ(pi1_diff(LensSpace(12, 5)).group, DiffPi1::ZxZ);
  EXPECT_FALSE(pi1_diff(LensSpace(12, 5)).smale_conditional);
  EXPECT_EQ(to_string(DiffPi1::ZxZ2), "Z+Z/2");
}

TEST(LensReport, Schema) {
  const Json j = lens_report(LensSpace(23, 7));
  EXPECT_EQ(j["p"], 23);
  EXPECT_EQ(j["qPrime"], 10);
  EXPECT_EQ(j["qSquaredIsOne"], false);
  EXPECT_EQ(j["classification"], "forest");
  EXPECT_EQ(j["perType"]["q"]["m"], 3);
  EXPECT_EQ(j["perType"]["qPrime"]["r"], 3);
  EXPECT_EQ(j["pi1Diff"], "Z+Z");
  EXPECT_TRUE(lens_report(LensSpace(7, 3))["perType"]["q"].is_null());
}
