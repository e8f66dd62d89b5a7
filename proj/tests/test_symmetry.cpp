#include <gtest/gtest.h>

#include <variant>

#include "equichord/symmetry.hpp"
#include "test_support.hpp"

using namespace equichord;
using equichord::testing::Gen;
using equichord::testing::qpoly;

namespace {

const CoefficientTable& symbolic10() {
  static const CoefficientTable t = solve_coefficients(10, CoefficientMode::symbolic());
  return t;
}

const RationalFunction& b_of(const ToBResult& r) { return std::get<BForm>(r).b; }

}  // namespace

TEST(ReflectC, Examples) {
  const RationalFunction c = RationalFunction::variable();
  EXPECT_EQ(reflect_c(c), RationalFunction(1) - c);
  EXPECT_EQ(reflect_c(c * c * c), RationalFunction(ZPoly{1, -3, 3, -1}));
  EXPECT_EQ(reflect_c(symbolic10()[2]), symbolic10()[2]);
}

TEST(ReflectC, InvolutionOnCanonicalForms) {
  Gen g(0x601);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction r = g.rational_function(5);
    EXPECT_EQ(reflect_c(reflect_c(r)), r);
  }
}

TEST(ToB, PrintedB2B4B6) {
  const auto& t = symbolic10();
  EXPECT_TRUE(b_of(to_b(t[2])).equals_fraction(qpoly({1}), qpoly({1, 1})));
  EXPECT_TRUE(b_of(to_b(t[4])).equals_fraction(qpoly({1, 6, -3}), qpoly({1, 8, 14, 8, 1})));
  EXPECT_TRUE(b_of(to_b(t[6])).equals_fraction(qpoly({2, 42, 204, -20, -110, 10}),
                                               qpoly({1, 24, 172, 488, 678, 488, 172, 24, 1})));
}

TEST(ToB, AsymmetricInputYieldsWitness) {
  const ToBResult r = to_b(RationalFunction::variable());
  ASSERT_TRUE(std::holds_alternative<OddWitness>(r));
  EXPECT_EQ(std::get<OddWitness>(r).odd, RationalFunction(equichord::testing::q(1, 2)));
}

TEST(ToB, SucceedsExactlyForReflectionSymmetricFunctions) {
  Gen g(0x602);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction r = g.rational_function(3, 6);
    const RationalFunction sym = r * reflect_c(r);
    EXPECT_TRUE(std::holds_alternative<BForm>(to_b(sym)));
    const bool symmetric = (r - reflect_c(r)).is_zero();
    EXPECT_EQ(std::holds_alternative<BForm>(to_b(r)), symmetric);
  }
}

TEST(CheckInvariance, AllEvenOrdersThroughTen) {
  const InvarianceReport rep = check_invariance(symbolic10());
  ASSERT_EQ(rep.entries.size(), 5u);
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.invariant) << "n=" << e.n;
    EXPECT_TRUE(std::holds_alternative<BForm>(e.b_or_witness));
  }
  EXPECT_TRUE(rep.all_invariant());
}

TEST(CheckInvariance, RejectsFixedTables) {
  EXPECT_THROW(check_invariance(solve_coefficients(4, CoefficientMode::fixed(equichord::testing::q(7, 10)))), UsageError);
}

TEST(CheckInvariance, ReportsAnAsymmetricEntry) {
  CoefficientTable t = solve_coefficients(4, CoefficientMode::symbolic());
  t.a[4] = t.a[4] + RationalFunction::variable();
  const InvarianceReport rep = check_invariance(t);
  EXPECT_TRUE(rep.entries[0].invariant);
  EXPECT_FALSE(rep.entries[1].invariant);
  EXPECT_TRUE(std::holds_alternative<OddWitness>(rep.entries[1].b_or_witness));
  EXPECT_FALSE(rep.all_invariant());
}
