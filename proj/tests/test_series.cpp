#include <gtest/gtest.h>

#include "equichord/series.hpp"
#include "equichord/rational_function.hpp"
#include "test_support.hpp"

using namespace equichord;
using equichord::testing::Gen;
using equichord::testing::q;

using QS = TruncatedSeries<BigRat>;

namespace {

QS series_of(int order, std::initializer_list<BigRat> cs) {
  std::vector<BigRat> v(cs);
  v.resize(static_cast<std::size_t>(order) + 1, BigRat(0));
  return QS(order, std::move(v));
}

QS random_series(Gen& g, int order, bool unit_constant) {
  std::vector<BigRat> v;
  for (int i = 0; i <= order; ++i) v.push_back(g.rational(12));
  if (unit_constant) v[0] = q(1) + abs(v[0]);
  return QS(order, std::move(v));
}

}  // namespace

TEST(Series, ReciprocalOfOneMinusXIsGeometric) {
  const QS r = series_recip(series_of(6, {1, -1}));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(r[k], q(1));
}

TEST(Series, SqrtOfOnePlusXMatchesBinomialSeries) {
  const QS s = series_sqrt(series_of(4, {1, 1}), q(1));
  EXPECT_EQ(s[0], q(1));
  EXPECT_EQ(s[1], q(1, 2));
  EXPECT_EQ(s[2], q(-1, 8));
  EXPECT_EQ(s[3], q(1, 16));
  EXPECT_EQ(s[4], q(-5, 128));
}

TEST(Series, SqrtBranchFollowsRootZero) {
  const QS a = series_of(4, {4, 0, 1});
  EXPECT_EQ(series_sqrt(a, q(-2))[2], q(-1, 4));
  EXPECT_EQ(series_sqrt(a, q(2))[2], q(1, 4));
  EXPECT_THROW(series_sqrt(a, q(3)), BranchError);
}

TEST(Series, SingularInputsAreRejected) {
  EXPECT_THROW(series_recip(series_of(3, {0, 1})), SingularSeriesError);
  EXPECT_THROW(series_compose(series_of(3, {0, 1}), series_of(3, {1, 1})), CompositionDomainError);
  EXPECT_THROW(series_mul(series_of(3, {1}), series_of(4, {1})), UsageError);
}

TEST(Series, ComposeExample) {
  // (x + x^2) o (2x) = 2x + 4x^2
  const QS r = series_compose(series_of(3, {0, 1, 1}), series_of(3, {0, 2}));
  EXPECT_EQ(r, series_of(3, {0, 2, 4}));
}

TEST(Series, SymbolicSqrtOfCSquaredPlusXSquared) {
  using RS = TruncatedSeries<RationalFunction>;
  const RationalFunction c = RationalFunction::variable();
  RS a = RS::constant(4, c * c) + RS::x(4) * RS::x(4);
  RS s = series_sqrt(a, c);
  EXPECT_EQ(s[2], RationalFunction(1) / (RationalFunction(2) * c));
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_EQ(s * s, a);
}

TEST(Series, ReciprocalAndSqrtProperties) {
  Gen g(0x5e41e5);
  for (int i = 0; i < 60; ++i) {
    const int order = static_cast<int>(g.integer(0, 8));
    QS a = random_series(g, order, true);
    EXPECT_EQ(a * series_recip(a), QS::constant(order, q(1)));
    QS sq = a * a;
    EXPECT_EQ(series_sqrt(sq, a[0]), a);
  }
}

TEST(Series, TruncationCommutesWithOperations) {
  Gen g(0x5e41e6);
  for (int i = 0; i < 60; ++i) {
    QS a = random_series(g, 8, true);
    QS b = random_series(g, 8, false);
    b[0] = q(0);
    const int k = static_cast<int>(g.integer(0, 8));
    EXPECT_EQ((a * b).truncate(k), a.truncate(k) * b.truncate(k));
    EXPECT_EQ(series_recip(a).truncate(k), series_recip(a.truncate(k)));
    EXPECT_EQ(series_compose(a, b).truncate(k), series_compose(a.truncate(k), b.truncate(k)));
  }
}

TEST(Series, CompositionIsAssociative) {
  Gen g(0x5e41e7);
  for (int i = 0; i < 20; ++i) {
    QS a = random_series(g, 6, false);
    QS b = random_series(g, 6, false);
    QS c = random_series(g, 6, false);
    b[0] = q(0);
    c[0] = q(0);
    EXPECT_EQ(series_compose(series_compose(a, b), c), series_compose(a, series_compose(b, c)));
  }
}
