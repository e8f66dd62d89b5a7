#include <gtest/gtest.h>

#include "equichord/refutation.hpp"
#include "test_support.hpp"

using namespace equichord;
using equichord::testing::Gen;
using equichord::testing::q;
using equichord::testing::qpoly;

namespace {

const CoefficientTable& symbolic10() {
  static const CoefficientTable t = solve_coefficients(10, CoefficientMode::symbolic());
  return t;
}

}  // namespace

TEST(HelfensteinPoly, TranscribedShape) {
  const QPoly p = helfenstein_poly();
  EXPECT_EQ(p.degree(), 9);
  EXPECT_EQ(p[0], q(1));
  EXPECT_EQ(p.lc(), q(144));
}

TEST(HelfensteinPoly, HasARootAtOneHalf) {
  // Hand evaluation: 144/512 - 648/256 + 1176/128 - 1092/64 + 168/32
  //                  + 798/16 - 846/8 + 357/4 - 59/2 + 1 = 0.
  EXPECT_TRUE(helfenstein_poly().evaluate(q(1, 2)).is_zero());
}

TEST(DeltaAn, VanishesForSolvedEvenOrders) {
  for (int n = 2; n <= 10; n += 2) EXPECT_TRUE(delta_an(n, symbolic10()).is_zero()) << n;
}

TEST(DeltaAn, CubeHook) {
  const RationalFunction c = RationalFunction::variable();
  EXPECT_EQ(reflection_defect(c * c * c), RationalFunction(ZPoly{-1, 3, -3, 2}));
}

TEST(DeltaAn, RangeAndModeErrors) {
  EXPECT_THROW(delta_an(12, symbolic10()), UsageError);
  EXPECT_THROW(delta_an(-1, symbolic10()), UsageError);
  EXPECT_THROW(delta_an(2, solve_coefficients(2, CoefficientMode::fixed(q(1, 3)))), UsageError);
}

TEST(Sturm, Examples) {
  EXPECT_EQ(count_real_roots(qpoly({2, -3, 1}), q(0), q(3, 2)), 1);
  EXPECT_EQ(count_real_roots(qpoly({1, 0, 1}), ExtendedRat::neg_inf(), ExtendedRat::pos_inf()), 0);
  EXPECT_EQ(count_real_roots(qpoly({2, -3, 1}), ExtendedRat::neg_inf(), ExtendedRat::pos_inf()), 2);
  // Distinct roots: (c - 1)^2 (c + 2) has two.
  EXPECT_EQ(count_real_roots(qpoly({1, -2, 1}) * qpoly({2, 1}), q(-5), q(5)), 2);
}

TEST(Sturm, ErrorCases) {
  EXPECT_THROW(count_real_roots(QPoly(), q(0), q(1)), UsageError);
  EXPECT_THROW(count_real_roots(qpoly({1, 1}), q(1), q(0)), UsageError);
  EXPECT_THROW(count_real_roots(qpoly({-1, 1}), q(1), q(2)), UsageError);
}

TEST(Sturm, CountsAreInvariantUnderPositiveScaling) {
  Gen g(0x701);
  for (int i = 0; i < 80; ++i) {
    const QPoly p = to_qpoly(g.nonzero_zpoly(7));
    BigRat s = abs(g.rational()) + q(1, 7);
    const BigRat lo = g.rational(4), hi = lo + abs(g.rational(4)) + q(1, 3);
    if (p.evaluate(lo).is_zero() || p.evaluate(hi).is_zero()) continue;
    EXPECT_EQ(count_real_roots(p, lo, hi), count_real_roots(p * s, lo, hi));
  }
}

TEST(Sturm, OddDegreeHasARealRoot) {
  Gen g(0x702);
  for (int i = 0; i < 80; ++i) {
    ZPoly z = g.nonzero_zpoly(4);
    z = z * ZPoly{g.integer(-9, 9), g.integer(1, 9)};
    if (z.degree() % 2 == 0) z = z * ZPoly{g.integer(-9, 9), 1};
    EXPECT_GE(count_real_roots(to_qpoly(z), ExtendedRat::neg_inf(), ExtendedRat::pos_inf()), 1);
  }
}

TEST(Sturm, AgreesWithRootsOfProductsOfLinearFactors) {
  Gen g(0x703);
  for (int i = 0; i < 50; ++i) {
    std::vector<BigRat> roots;
    QPoly p = qpoly({1});
    const int k = static_cast<int>(g.integer(1, 5));
    for (int j = 0; j < k; ++j) {
      BigRat r = g.rational(9);
      roots.push_back(r);
      p = p * QPoly({-r, BigRat(1)});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const BigRat lo = q(-1, 3) + BigRat(BigInt(g.integer(-9, 0))) + q(1, 97);
    const BigRat hi = lo + BigRat(BigInt(g.integer(1, 12)));
    int expect = 0;
    for (const auto& r : roots) expect += (lo < r && r < hi) ? 1 : 0;
    EXPECT_EQ(count_real_roots(p, lo, hi), expect);
  }
}

TEST(Sturm, SqrtBracketContainsTheRoot) {
  const RationalBracket b = sqrt_bracket(q(3), 40);
  EXPECT_LT(b.lo * b.lo, q(3));
  EXPECT_GT(b.hi * b.hi, q(3));
  EXPECT_LE(b.hi - b.lo, BigRat(BigInt(1), BigInt(1) << 40));
}

TEST(Sturm, ClassicalRangeCountStabilizes) {
  const StableRootCount all = count_real_roots_stable(helfenstein_poly(), classical_c_range_brackets);
  EXPECT_TRUE(all.stabilized);
  EXPECT_EQ(all.count, 1);  // the rational root c = 1/2
  const StableRootCount rest = count_real_roots_stable(deflate(helfenstein_poly(), q(1, 2)), classical_c_range_brackets);
  EXPECT_TRUE(rest.stabilized);
  EXPECT_EQ(rest.count, 0);
}

TEST(Refutation, StandardRun) {
  const RefutationVerdict v = refutation_report(symbolic10());
  EXPECT_TRUE(v.delta_a6_is_zero);
  EXPECT_EQ(v.helfenstein_poly.degree(), 9);
  EXPECT_TRUE(v.count_stabilized);
  EXPECT_EQ(v.roots_in_interval, 1);
  EXPECT_TRUE(v.half_is_root);
  EXPECT_EQ(v.roots_in_interval_excluding_half, 0);
  EXPECT_TRUE(v.invariance.all_invariant());
  EXPECT_EQ(v.invariance.entries.size(), 5u);
  EXPECT_TRUE(v.paper_refuted());
  EXPECT_GE(v.narrative.size(), 4u);
}

TEST(Refutation, NeedsOrderSix) {
  EXPECT_THROW(refutation_report(solve_coefficients(4, CoefficientMode::symbolic())), UsageError);
}
