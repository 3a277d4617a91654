#include "tbm/lattice.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace tbm {
namespace {

TEST(Frame, RejectsBadLabels) {
  EXPECT_THROW(Frame(std::vector<std::string>{}), InvalidArgument);
  EXPECT_THROW(Frame({"a", "a"}), InvalidArgument);
  EXPECT_THROW(Frame({"a", ""}), InvalidArgument);
  EXPECT_THROW(Frame({"a|b"}), InvalidArgument);
  EXPECT_THROW(Frame::of_size(21), InvalidArgument);
  EXPECT_NO_THROW(Frame::of_size(20));
  EXPECT_THROW(Frame::of_size(11).require_matrix_size(), InvalidArgument);
  EXPECT_NO_THROW(Frame::of_size(4, Caps{4, 2}));
  EXPECT_THROW(Frame::of_size(4, Caps{4, 2}).require_matrix_size(), InvalidArgument);
}

TEST(Frame, SetAlgebraOnPair) {
  const Frame frame({"a", "b"});
  const Subset a = frame.singleton("a");
  const Subset b = frame.singleton("b");
  EXPECT_EQ(frame.intersect(a, b), Subset{});
  EXPECT_EQ(frame.complement(Subset{}), frame.universe());
  EXPECT_TRUE(frame.includes(a, frame.universe()));
  EXPECT_FALSE(frame.includes(frame.universe(), a));
  EXPECT_EQ(frame.unite(a, b), frame.universe());
}

TEST(Frame, SubsetOutsideFrameIsMismatch) {
  const Frame frame({"a", "b"});
  EXPECT_THROW(frame.complement(Subset(4)), FrameMismatch);
  EXPECT_THROW(frame.unite(Subset(1), Subset(8)), FrameMismatch);
  EXPECT_THROW(require_same_frame(frame, Frame({"a", "c"})), FrameMismatch);
  EXPECT_NO_THROW(require_same_frame(frame, Frame({"a", "b"})));
}

TEST(Frame, KeysAreCanonical) {
  const Frame frame({"a", "b", "c"});
  EXPECT_EQ(frame.key(frame.parse_key("c|a")), "a|c");
  EXPECT_EQ(frame.parse_key(""), Subset{});
  EXPECT_EQ(frame.key(frame.universe()), "a|b|c");
  EXPECT_THROW(frame.parse_key("a|d"), FrameMismatch);
  EXPECT_THROW(frame.parse_key("a|a"), InvalidArgument);
  EXPECT_EQ(display(frame, Subset{}), "∅");
  EXPECT_EQ(display(frame, frame.universe()), "Ω");
  EXPECT_EQ(display(frame, frame.parse_key("b|c")), "{b,c}");
}

TEST(Lattice, ForEachSubsetVisitsAll) {
  int count = 0;
  for_each_subset_of(Subset(0b1011), [&](Subset s) {
    EXPECT_TRUE(is_subset(s, Subset(0b1011)));
    ++count;
  });
  EXPECT_EQ(count, 8);
}

TEST(Zeta, UnitVectors) {
  const Frame frame = Frame::of_size(3);
  const Eigen::Index size = frame.subset_count();
  const Vector bottom = Vector::Unit(size, 0);
  const Vector top = Vector::Unit(size, size - 1);

  EXPECT_EQ(zeta_subsets(bottom), Vector::Ones(size));
  EXPECT_EQ(zeta_subsets(top), top);
  EXPECT_EQ(zeta_supersets(top), Vector::Ones(size));
  EXPECT_EQ(zeta_supersets(bottom), bottom);
  EXPECT_EQ(mobius_subsets(Vector::Ones(size)), bottom);
  for (Eigen::Index i = 0; i < size; ++i) {
    const Vector e = Vector::Unit(size, i);
    EXPECT_EQ(mobius_supersets(zeta_supersets(e)), e);
    EXPECT_EQ(mobius_subsets(zeta_subsets(e)), e);
  }
}

TEST(Zeta, IntegerScalarsAreExact) {
  Eigen::VectorXi f(4);
  f << 1, 2, 3, 4;
  const Eigen::VectorXi g = zeta_subsets(f);
  EXPECT_EQ(g(3), 10);
  EXPECT_EQ(mobius_subsets(g), f);
}

TEST(Zeta, RejectsNonPowerOfTwo) { EXPECT_THROW(zeta_subsets(Vector::Ones(3)), InvalidArgument); }

TEST(Zeta, LatticeVectorOverloadsKeepFrame) {
  const Frame frame = Frame::of_size(2);
  const LatticeVector f(frame, Vector::Unit(4, 0));
  const LatticeVector g = zeta_subsets(f);
  EXPECT_EQ(g.frame, frame);
  EXPECT_EQ(g[frame.universe()], 1.0);
  EXPECT_THROW(LatticeVector(frame, Vector::Ones(3)), InvalidArgument);
}

TEST(ZetaProperty, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const int trials = n <= 4 ? 200 : 1000 / (n - 3);
    for (int t = 0; t < trials; ++t) {
      const Vector f = oracle::random_vector(Eigen::Index{1} << n, rng);
      ASSERT_LE(oracle::max_diff(zeta_subsets(f), oracle::naive_zeta_subsets(f)), 1e-12) << "n=" << n;
      ASSERT_LE(oracle::max_diff(zeta_supersets(f), oracle::naive_zeta_supersets(f)), 1e-12) << "n=" << n;
    }
  }
}

TEST(ZetaProperty, Linear) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const Vector f = oracle::random_vector(64, rng);
    const Vector g = oracle::random_vector(64, rng);
    const double alpha = u(rng), beta = u(rng);
    EXPECT_LE(oracle::max_diff(zeta_subsets(alpha * f + beta * g), alpha * zeta_subsets(f) + beta * zeta_subsets(g)),
              1e-12);
    EXPECT_LE(oracle::max_diff(zeta_supersets(alpha * f + beta * g),
                               alpha * zeta_supersets(f) + beta * zeta_supersets(g)),
              1e-12);
  }
}

TEST(ZetaProperty, RoundTripsBothOrders) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Vector f = oracle::random_vector(64, rng);
    EXPECT_LE(oracle::max_diff(mobius_subsets(zeta_subsets(f)), f), 1e-12);
    EXPECT_LE(oracle::max_diff(zeta_subsets(mobius_subsets(f)), f), 1e-12);
    EXPECT_LE(oracle::max_diff(mobius_supersets(zeta_supersets(f)), f), 1e-12);
    EXPECT_LE(oracle::max_diff(zeta_supersets(mobius_supersets(f)), f), 1e-12);
  }
}

}  // namespace
}  // namespace tbm
