#include <gtest/gtest.h>

#include <random>

#include "fermat/chars.hpp"
#include "fermat/oracle.hpp"

using namespace fermat;

TEST(Chars, Dimensions) {
  EXPECT_EQ(dim_Vm({6, 1}), 10);
  EXPECT_EQ(dim_Vm({4, 2}), 6);
  EXPECT_EQ(dim_Vm({5, 13}), 125);
  EXPECT_EQ(dim_Vm({7, 0}), 1);
  EXPECT_EQ(genus(4), 3);
}

TEST(Chars, IdentityTraceIsDimension) {
  for (int n = 4; n <= 12; ++n) {
    for (std::int64_t m = 0; m <= 20; ++m) {
      EXPECT_EQ(char_Vm({n, m}, GroupElement{}), Cyclo(n, dim_Vm({n, m}))) << n << " " << m;
    }
    for (std::int64_t m = 2; m <= 6; ++m) {
      EXPECT_EQ(char_Im({n, m}, GroupElement{}), Cyclo(n, triangle_size(m * (n - 3) - n)));
    }
  }
}

TEST(Chars, RotationVanishesOffDivisibility) {
  for (int n : {4, 5, 7, 8}) {
    for (std::int64_t m : {1, 2, 4, 5}) {
      for (int a = 0; a < n; ++a) {
        EXPECT_TRUE(char_Wm({n, m}, GroupElement{a, 2, Perm::s}).is_zero());
      }
    }
  }
}

TEST(Chars, V1EqualsW1) {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& g : FermatGroup(n).elements()) EXPECT_EQ(char_Vm({n, 1}, g), char_Wm({n, 1}, g));
  }
}

TEST(Chars, AgreeWithOracleTraces) {
  for (int n = 4; n <= 8; ++n) {
    const auto elems = FermatGroup(n).elements();
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (const auto& g : elems) {
        ASSERT_EQ(char_Wm({n, m}, g), trace_char(n, m, g, TraceKind::W)) << n << " " << m << " " << to_string(g.perm);
        ASSERT_EQ(char_Im({n, m}, g), trace_char(n, m, g, TraceKind::I)) << n << " " << m << " " << to_string(g.perm);
        ASSERT_EQ(char_Vm({n, m}, g), trace_char(n, m, g, TraceKind::V));
      }
    }
  }
}

TEST(Chars, ClassFunction) {
  std::mt19937_64 rng(31337);
  for (int n = 4; n <= 8; ++n) {
    const FermatGroup G(n);
    const auto elems = G.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (int trial = 0; trial < 25; ++trial) {
        const auto& g = elems[pick(rng)];
        const auto& h = elems[pick(rng)];
        EXPECT_EQ(char_Vm({n, m}, G.conjugate(g, h)), char_Vm({n, m}, g));
      }
    }
  }
}
