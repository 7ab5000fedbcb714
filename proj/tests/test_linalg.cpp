#include <gtest/gtest.h>

#include <random>

#include "modinv/group.hpp"
#include "modinv/linalg.hpp"

using namespace modinv;

namespace {

MatrixFq random_matrix(const Field& f, std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias) {
  MatrixFq m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 10) >= zero_bias) m.raw(i, j) = static_cast<std::uint32_t>(rng() % f.order());
  return m;
}

}  // namespace

TEST(Linalg, Examples) {
  const Field f2 = field_of_order(2);
  EXPECT_EQ(rank(MatrixFq::identity(f2, 3)), 3u);
  EXPECT_EQ(nullspace(MatrixFq(f2, 2, 5)).cols(), 5u);

  const Field f3 = field_of_order(3);
  const auto x = solve(MatrixFq::from_ints(f3, {{1, 1}, {0, 1}}), {f3.one(), f3.one()});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], f3.zero());
  EXPECT_EQ((*x)[1], f3.one());

  EXPECT_FALSE(solve(MatrixFq::from_ints(f3, {{1, 1}, {1, 1}}), {f3.zero(), f3.one()}).has_value());
  EXPECT_THROW(solve(MatrixFq::from_ints(f3, {{1, 1}}), {f3.zero(), f3.one()}), std::invalid_argument);
  EXPECT_THROW(MatrixFq::from_ints(f3, {{1, 1}, {1}}), std::invalid_argument);
}

TEST(Linalg, FixedSpaceExamples) {
  const Field f2 = field_of_order(2);
  EXPECT_EQ(fixed_space({MatrixFq::identity(f2, 4)}).cols(), 4u);
  const MatrixFq swap = MatrixFq::from_ints(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(fixed_space({swap}).cols(), 2u);
  EXPECT_THROW(fixed_space({}), std::invalid_argument);
  EXPECT_THROW(fixed_space({swap, MatrixFq::identity(f2, 2)}), std::invalid_argument);
}

// SL2(F_2) generators acting on the 10 degree-2 monomials fix a 3-dimensional space.
TEST(Linalg, FixedSpaceOfSl2OnDegreeTwo) {
  const Field f = field_of_order(2);
  const auto monos = monomials_of_degree(2);
  std::vector<MatrixFq> ops;
  for (const auto& g : generators(GroupId{GroupKind::SL2, f})) {
    MatrixFq m(f, monos.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const Poly img = act(g, Poly::monomial(f, monos[j], f.one()));
      for (std::size_t i = 0; i < monos.size(); ++i) m.set(i, j, img.coefficient(monos[i]));
    }
    ops.push_back(m);
  }
  const MatrixFq fixed = fixed_space(ops);
  EXPECT_EQ(fixed.cols(), 3u);
  for (const auto& op : ops) EXPECT_EQ(op * fixed, fixed);
}

TEST(Linalg, EliminationProperties) {
  std::mt19937 rng(42);
  for (std::uint64_t q : {2, 3, 4, 7, 9}) {
    const Field f = field_of_order(q);
    for (int it = 0; it < 30; ++it) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      const MatrixFq m = random_matrix(f, rng, r, c, static_cast<int>(rng() % 8));
      const auto rr = rref(m);
      EXPECT_EQ(rref(rr.reduced).reduced, rr.reduced);
      EXPECT_EQ(rank(m), rr.pivots.size());
      const MatrixFq ns = nullspace(m);
      EXPECT_EQ(rank(m) + ns.cols(), c);
      EXPECT_TRUE((m * ns).is_zero());
      EXPECT_EQ(rank(ns), ns.cols());

      // A consistent right-hand side built from a known solution.
      const MatrixFq x0 = random_matrix(f, rng, c, 1, 0);
      const MatrixFq b = m * x0;
      const auto x = solve(m, b.column(0));
      ASSERT_TRUE(x.has_value());
      MatrixFq xm(f, c, 1);
      for (std::size_t i = 0; i < c; ++i) xm.set(i, 0, (*x)[i]);
      EXPECT_EQ(m * xm, b);
    }
  }
}

TEST(Linalg, FixedSpaceVectorsAreFixed) {
  std::mt19937 rng(8);
  const Field f = field_of_order(5);
  for (int it = 0; it < 20; ++it) {
    // Random permutation matrices: the fixed space has one vector per cycle.
    std::vector<MatrixFq> ops;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::size_t> perm = {0, 1, 2, 3, 4, 5};
      std::shuffle(perm.begin(), perm.end(), rng);
      MatrixFq p(f, 6, 6);
      for (std::size_t i = 0; i < 6; ++i) p.raw(perm[i], i) = 1;
      ops.push_back(p);
    }
    const MatrixFq fixed = fixed_space(ops);
    EXPECT_GE(fixed.cols(), 1u);
    for (const auto& op : ops) EXPECT_EQ(op * fixed, fixed);
  }
}
