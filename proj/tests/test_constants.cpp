#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "twd/constants.hpp"
#include "twd/errors.hpp"

namespace twd {
namespace {

using namespace constants;

Bound B(long long v) { return Bound(BigInt(v)); }

// Pascal's recurrence for R(p, q) <= R(p-1, q) + R(p, q-1).
BigInt pascal_ramsey(int p, int q) {
  std::vector<std::vector<BigInt>> t(p + 1, std::vector<BigInt>(q + 1, 0));
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= q; ++j) {
      t[i][j] = (i == 1 || j == 1) ? BigInt(1) : t[i - 1][j] + t[i][j - 1];
    }
  }
  return t[p][q];
}

TEST(Constants, HandValues) {
  EXPECT_EQ(pigeonhole(B(3), B(4)), B(10));
  EXPECT_EQ(biclique_family(B(1), B(2)), B(4));
  EXPECT_EQ(biclique_family(B(2), B(2)), B(66));
  EXPECT_EQ(degree_bound(B(4)), B(12));
  EXPECT_EQ(block_bound(B(1)), B(4));
}

TEST(Constants, RamseyUpperMatchesRecurrence) {
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) {
      EXPECT_EQ(ramsey_upper(B(p), B(q)).value, pascal_ramsey(p, q)) << p << "," << q;
      EXPECT_TRUE(ramsey_upper(B(p), B(q)).exact);
    }
  }
}

TEST(Constants, RamseyExact) {
  EXPECT_EQ(ramsey_exact(3, 3), 6);
  EXPECT_EQ(ramsey_exact(3, 4), 9);
  EXPECT_EQ(ramsey_exact(4, 3), 9);
  EXPECT_EQ(ramsey_exact(2, 7), 7);
  EXPECT_EQ(ramsey_exact(1, 9), 1);
  EXPECT_EQ(oracle::ramsey(3, 3, 6), 6);
  EXPECT_THROW(ramsey_exact(4, 4), ContractError);
}

TEST(Constants, IteratedRamsey) {
  EXPECT_EQ(ramsey_iterated(B(0), B(3), B(3)), ramsey_upper(B(3), B(3)));
  EXPECT_EQ(ramsey_iterated(B(1), B(3), B(3)), ramsey_upper(B(6), B(3)));
  EXPECT_EQ(ramsey_iterated(B(5), B(1), B(7)), B(1));
}

TEST(Constants, IdentitiesForSmallArguments) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Bound pa = pigeonhole(B(a), B(b));
      EXPECT_EQ(pa.value, BigInt(a * (b - 1) + 1));
      BigInt r = pow(BigInt(a), b) * (b - 1) + 1;
      BigInt cab = 2 * (pow(BigInt(a), r.convert_to<unsigned>()) * (b - 1) + 1);
      Bound cc = biclique_family(B(a), B(b));
      EXPECT_TRUE(cc.exact);
      EXPECT_EQ(cc.value, cab);
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (int p = 1; p <= 3; ++p) {
      const Bound qv = q(B(r), B(p));
      EXPECT_EQ(qv, ramsey_upper(B(r), biclique_family(B(r * p), B(p))));
      const Bound cv = c(B(r), B(p));
      EXPECT_EQ(cv, ramsey_iterated(qv, B(r), biclique_family(B(p), B(p))));
      EXPECT_EQ(d(B(r), B(p)), cv + qv);
      EXPECT_EQ(m(B(r), B(p)), ramsey_upper(cv + qv, B(2 * p)));
      if (!qv.exact) EXPECT_FALSE(cv.exact);
    }
  }
}

TEST(Constants, MonotoneInArguments) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      EXPECT_LE(biclique_family(B(a), B(b)).value, biclique_family(B(a + 1), B(b)).value);
      EXPECT_LE(biclique_family(B(a), B(b)).value, biclique_family(B(a), B(b + 1)).value);
      EXPECT_LE(m(B(a), B(b)).value, m(B(a + 1), B(b)).value);
      EXPECT_LE(m(B(a), B(b)).value, m(B(a), B(b + 1)).value);
    }
  }
}

TEST(Constants, HugeValuesAreLowerBounds) {
  Bound v = m(B(2), B(2));
  EXPECT_FALSE(v.exact);
  EXPECT_GT(v.value, BigInt(1000000));
  EXPECT_EQ(v.str().substr(0, 3), ">= ");
}

TEST(Constants, EvaluateDispatch) {
  const long long p34[] = {3, 4};
  EXPECT_EQ(evaluate("P", p34).str(), "10");
  const long long c12[] = {1, 2};
  EXPECT_EQ(evaluate("C", c12).str(), "4");
  const long long r33[] = {3, 3};
  EXPECT_EQ(evaluate("R_exact", r33).str(), "6");
  EXPECT_EQ(evaluate("R", r33).str(), "6");
  const long long it[] = {0, 3, 3};
  EXPECT_EQ(evaluate("R_iter", it).str(), "6");
  EXPECT_THROW(evaluate("Z", p34), SpecError);
  EXPECT_THROW(evaluate("b", p34), SpecError);
  const long long zero[] = {0, 2};
  EXPECT_THROW(evaluate("P", zero), SpecError);
  const long long big[] = {5, 5};
  EXPECT_THROW(evaluate("R_exact", big), SpecError);
}

}  // namespace
}  // namespace twd
