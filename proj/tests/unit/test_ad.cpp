#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "aumol/ad/gradcheck.hpp"
#include "aumol/ad/ops.hpp"

namespace ad = aumol::ad;
using ad::DiffArray;

namespace {

DiffArray random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(r * c);
  for (auto& x : v) x = dist(rng);
  return DiffArray::matrix(r, c, std::move(v));
}

std::vector<double> values(const DiffArray& a) { return {a.data().begin(), a.data().end()}; }

}  // namespace

TEST(Ops, ReluClampsNegatives) {
  auto y = ad::relu(DiffArray::vector({-1.0, 0.0, 2.0}));
  EXPECT_EQ(values(y), (std::vector<double>{0.0, 0.0, 2.0}));
}

TEST(Ops, LayerNormOfConstantIsZero) {
  auto x = DiffArray::vector({3.0, 3.0, 3.0, 3.0});
  auto y = ad::layer_norm(x, DiffArray::vector({1, 1, 1, 1}), DiffArray::vector({0, 0, 0, 0}));
  for (double v : y.data()) EXPECT_EQ(v, 0.0);
}

TEST(Ops, CosineOfOrthogonalIsZero) {
  auto c = ad::cosine_similarity(DiffArray::vector({1.0, 0.0}), DiffArray::vector({0.0, 1.0}));
  EXPECT_EQ(c.item(), 0.0);
  EXPECT_EQ(c.shape().size(), 0u);
}

TEST(Ops, ShapeErrorNamesBothShapes) {
  try {
    ad::matmul(DiffArray::zeros({2, 3}), DiffArray::zeros({4, 5}));
    FAIL() << "expected ShapeError";
  } catch (const aumol::ShapeError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("(2, 3)"), std::string::npos);
    EXPECT_NE(msg.find("(4, 5)"), std::string::npos);
  }
}

TEST(Ops, NonFiniteOutputIsAnError) {
  auto big = DiffArray::vector({1e200});
  EXPECT_THROW(ad::mul(big, big), aumol::NumericError);
}

TEST(Ops, CausalSoftmaxMasksFuture) {
  std::mt19937_64 rng(3);
  auto p = ad::softmax(random_matrix(rng, 4, 4), true);
  for (std::size_t i = 0; i < 4; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j > i) EXPECT_EQ(p.at(i, j), 0.0);
      EXPECT_GE(p.at(i, j), 0.0);
      s += p.at(i, j);
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(Backward, SumGivesOnes) {
  auto x = DiffArray::vector({0.5, -2.0, 7.0}, true);
  ad::backward(ad::sum(x));
  EXPECT_EQ(std::vector<double>(x.grad().begin(), x.grad().end()), (std::vector<double>{1, 1, 1}));
}

TEST(Backward, ProductGradIsOtherFactor) {
  auto x = DiffArray::vector({1.0, 2.0, 3.0}, true);
  auto y = DiffArray::vector({4.0, -5.0, 6.0});
  ad::backward(ad::sum(ad::mul(x, y)));
  EXPECT_EQ(std::vector<double>(x.grad().begin(), x.grad().end()), values(y));
  EXPECT_FALSE(y.has_grad());
}

TEST(Backward, NonScalarLossIsContractError) {
  auto x = DiffArray::vector({1.0, 2.0}, true);
  EXPECT_THROW(ad::backward(ad::relu(x)), aumol::ContractError);
}

TEST(Backward, AccumulatesAcrossUsesAndCalls) {
  auto x = DiffArray::vector({1.0, 2.0}, true);
  ad::backward(ad::sum(ad::add(x, x)));
  EXPECT_EQ(x.grad()[0], 2.0);
  ad::backward(ad::sum(x));
  EXPECT_EQ(x.grad()[0], 3.0);
  x.zero_grad();
  EXPECT_FALSE(x.has_grad());
}

TEST(Backward, TapeIsTopological) {
  auto x = DiffArray::vector({1.0, 2.0}, true);
  auto h = ad::relu(x);
  auto loss = ad::sum(ad::mul(h, h));
  auto tape = ad::Tape::record(loss);
  ASSERT_EQ(tape.size(), 4u);
  EXPECT_EQ(tape.nodes().front(), x.node());
  EXPECT_EQ(tape.nodes().back(), loss.node());
}

TEST(GradCheck, SumOfSquares) {
  auto f = [](const DiffArray& x) { return ad::sum(ad::mul(x, x)); };
  auto x = DiffArray::vector({1.0, 2.0}, true);
  ad::backward(f(x));
  EXPECT_DOUBLE_EQ(x.grad()[0], 2.0);
  EXPECT_DOUBLE_EQ(x.grad()[1], 4.0);
  EXPECT_LT(ad::finite_diff_check(f, DiffArray::vector({1.0, 2.0}), 1e-5), 1e-8);
}

// Every op, randomized over 20 seeds, against central differences.
class OpGradients : public ::testing::TestWithParam<int> {};

TEST_P(OpGradients, MatchFiniteDifferences) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const auto a = random_matrix(rng, 3, 4);
  const auto b = random_matrix(rng, 3, 4);
  const auto w = random_matrix(rng, 5, 4);
  const auto row = DiffArray::vector({0.3, -0.2, 0.1, 0.7});
  const auto gain = DiffArray::vector({1.1, 0.9, -0.5, 2.0});
  const auto weights = random_matrix(rng, 3, 5);  // fixed random projection so outputs are not symmetric
  const std::vector<std::int32_t> ids{2, 0, 2, 1};
  auto project = [&](const DiffArray& y) { return ad::sum(ad::mul(y, weights)); };

  const double tol = 1e-6;
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return project(ad::matmul_t(x, w)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return project(ad::matmul_t(a, x)); }, w), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::matmul(x, ad::transpose(b)), ad::slice_cols(weights, 0, 3))); }, a),
            tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return project(ad::slice_cols(ad::concat({x, x}, 1), 2, 7)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::add(x, b), ad::sub(x, b))); }, a), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::add_row(x, row), a)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::add_row(a, x), b)); }, row), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::relu(x), b)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) { return ad::sum(ad::mul(ad::layer_norm(x, gain, row), b)); }, a),
            tol);
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) { return ad::sum(ad::mul(ad::layer_norm(a, x, row), b)); }, gain),
            tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::sum(ad::mul(ad::softmax(x), b)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) {
                  auto sq = ad::matmul_t(x, x);
                  return ad::sum(ad::mul(ad::softmax(sq, true), ad::slice_cols(weights, 0, 3)));
                },
                a),
            tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::mean(ad::mul(x, x)); }, a), tol);
  EXPECT_LT(ad::finite_diff_check([&](const DiffArray& x) { return ad::l1_distance(x, b); }, a), tol);
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) { return ad::sum(ad::mul(ad::cosine_similarity(x, b), DiffArray::vector({1.0, -2.0, 0.5}))); },
                a),
            tol);
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) {
                  auto rotated = ad::concat({ad::slice_rows(x, 1, 3), ad::slice_rows(x, 0, 1)}, 0);
                  return project(ad::matmul_t(rotated, w));
                },
                a),
            tol);
  const auto lookup_weights = ad::concat({b, ad::slice_rows(b, 0, 1)}, 0);  // (4 x 4)
  EXPECT_LT(ad::finite_diff_check(
                [&](const DiffArray& x) { return ad::sum(ad::mul(ad::embedding_lookup(x, ids), lookup_weights)); }, a),
            tol);
}

INSTANTIATE_TEST_SUITE_P(Seeds, OpGradients, ::testing::Range(0, 20));

TEST(Backward, LinearInLossCombination) {
  std::mt19937_64 rng(11);
  const auto b = random_matrix(rng, 3, 4);
  auto f = [&](const DiffArray& x) { return ad::sum(ad::mul(ad::relu(x), b)); };
  auto g = [&](const DiffArray& x) { return ad::mean(ad::mul(x, x)); };
  const auto x0 = random_matrix(rng, 3, 4);

  auto grad_of = [&](auto&& fn) {
    auto x = x0.clone();
    x.set_requires_grad(true);
    ad::backward(fn(x));
    return std::vector<double>(x.grad().begin(), x.grad().end());
  };
  const double ca = 2.5, cb = -0.75;
  auto combined = grad_of([&](const DiffArray& x) { return ad::add(ad::scale(f(x), ca), ad::scale(g(x), cb)); });
  auto gf = grad_of(f);
  auto gg = grad_of(g);
  for (std::size_t i = 0; i < combined.size(); ++i) EXPECT_NEAR(combined[i], ca * gf[i] + cb * gg[i], 1e-12);
}

TEST(Backward, Deterministic) {
  auto run = [] {
    std::mt19937_64 rng(5);
    auto a = random_matrix(rng, 6, 8);
    a.set_requires_grad(true);
    auto w = random_matrix(rng, 8, 8);
    auto y = ad::softmax(ad::matmul_t(ad::layer_norm(a, DiffArray::vector(std::vector<double>(8, 1.0)),
                                                     DiffArray::vector(std::vector<double>(8, 0.0))),
                                      w));
    ad::backward(ad::mean(ad::mul(y, y)));
    return std::vector<double>(a.grad().begin(), a.grad().end());
  };
  EXPECT_EQ(run(), run());
}
