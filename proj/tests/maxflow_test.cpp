#include "fractri/maxflow.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace fractri {
namespace {

using testing::brute_force_min_cut;
using testing::random_network;
using testing::to_rational;

ArcNetwork<Rational> network(int nodes, std::vector<std::tuple<int, int, Rational>> arcs) {
  ArcNetwork<Rational> net;
  net.node_count = nodes;
  net.source = 0;
  net.sink = nodes - 1;
  for (auto& [u, v, c] : arcs) net.add_arc(u, v, c);
  return net;
}

TEST(MaxFlow, SingleArc) {
  const auto net = network(2, {{0, 1, make_rational(5, 3)}});
  const auto res = max_flow(net);
  EXPECT_EQ(res.value, make_rational(5, 3));
  EXPECT_EQ(res.flow[0], make_rational(5, 3));
  EXPECT_TRUE(verify_flow(net, res));
}

TEST(MaxFlow, ParallelPaths) {
  // s=0, a=1, b=2, t=3
  const auto net = network(4, {{0, 1, Rational(1)}, {0, 2, Rational(1)}, {1, 3, Rational(1)}, {2, 3, Rational(1)}});
  const auto res = max_flow(net);
  EXPECT_EQ(res.value, Rational(2));
  // Both source arcs and both sink arcs are tight; the canonical residual cut is {s}.
  EXPECT_EQ(res.source_side, (std::vector<bool>{true, false, false, false}));
  EXPECT_EQ(res.cut_capacity, Rational(2));
}

TEST(MaxFlow, FourNodeChain) {
  const auto net =
      network(4, {{0, 1, Rational(2)}, {1, 2, Rational(1)}, {1, 3, Rational(1)}, {2, 3, Rational(2)}});
  const auto res = max_flow(net);
  EXPECT_EQ(res.value, Rational(2));
  EXPECT_EQ(brute_force_min_cut(net), Rational(2));
  EXPECT_TRUE(verify_flow(net, res));
}

TEST(MaxFlow, DisconnectedAndEmpty) {
  const auto net = network(3, {{0, 1, Rational(4)}});
  const auto res = max_flow(net);
  EXPECT_EQ(res.value, Rational(0));
  EXPECT_TRUE(verify_flow(net, res));
}

TEST(MaxFlow, RejectsBadInput) {
  auto net = network(2, {{0, 1, Rational(-1)}});
  EXPECT_THROW(max_flow(net), std::invalid_argument);
  net = network(2, {{0, 5, Rational(1)}});
  EXPECT_THROW(max_flow(net), std::invalid_argument);
  net = network(2, {});
  net.sink = net.source;
  EXPECT_THROW(max_flow(net), std::invalid_argument);
}

TEST(MaxFlow, MatchesCutEnumerationOnRandomNetworks) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto net = random_network(rng);
    const auto res = max_flow(net);
    ASSERT_EQ(res.value, brute_force_min_cut(net)) << "trial " << trial;
    std::string why;
    ASSERT_TRUE(verify_flow(net, res, &why)) << why;
  }
}

TEST(MaxFlow, RationalPathsAgree) {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto base = random_network(rng, 8);
    ArcNetwork<Rational> net = to_rational(base);
    for (auto& arc : net.arcs) arc.capacity /= Rational(den(rng));
    const auto scaled = max_flow(net);
    const auto direct = max_flow_rational_direct(net);
    ASSERT_EQ(scaled.value, direct.value);
    EXPECT_EQ(scaled.value, brute_force_min_cut(net));
    EXPECT_TRUE(verify_flow(net, scaled));
    EXPECT_TRUE(verify_flow(net, direct));
  }
}

TEST(MaxFlow, HugeDenominatorsFallBackToRationals) {
  // Common denominator far beyond 64 bits.
  ArcNetwork<Rational> net;
  net.node_count = 4;
  net.source = 0;
  net.sink = 3;
  const BigInt p1 = BigInt(1) << 70;
  const BigInt p2 = (BigInt(1) << 71) - 1;
  net.add_arc(0, 1, Rational(BigInt(1), p1));
  net.add_arc(0, 2, Rational(BigInt(1), p2));
  net.add_arc(1, 3, Rational(1));
  net.add_arc(2, 3, Rational(1));
  const auto res = max_flow(net);
  EXPECT_EQ(res.value, Rational(BigInt(1), p1) + Rational(BigInt(1), p2));
  EXPECT_TRUE(verify_flow(net, res));
}

TEST(MaxFlow, MonotoneInCapacities) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    auto net = random_network(rng);
    const auto before = max_flow(net).value;
    if (net.arcs.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, net.arcs.size() - 1);
    net.arcs[pick(rng)].capacity += 3;
    const auto after = max_flow(net).value;
    EXPECT_GE(after, before);
    EXPECT_LE(after, before + 3);
  }
}

TEST(MaxFlow, FloatAgreesWithExact) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = random_network(rng);
    ArcNetwork<double> net;
    net.node_count = base.node_count;
    net.source = base.source;
    net.sink = base.sink;
    for (const auto& a : base.arcs) net.add_arc(a.tail, a.head, static_cast<double>(a.capacity) / 7.0);
    const auto res = max_flow(net);
    EXPECT_NEAR(res.value, static_cast<double>(max_flow(base).value) / 7.0, 1e-9);
    EXPECT_TRUE(verify_flow(net, res));
  }
}

TEST(VerifyFlow, DetectsInjectedFaults) {
  const auto net =
      network(4, {{0, 1, Rational(2)}, {1, 2, Rational(1)}, {1, 3, Rational(1)}, {2, 3, Rational(2)}});
  const auto good = max_flow(net);
  ASSERT_TRUE(verify_flow(net, good));

  auto over = good;
  over.flow[1] = Rational(3, 2);  // arc a->b has capacity 1
  std::string why;
  EXPECT_FALSE(verify_flow(net, over, &why));
  EXPECT_FALSE(why.empty());

  auto leak = good;
  leak.flow[2] = Rational(1, 2);  // a no longer balances
  EXPECT_FALSE(verify_flow(net, leak));

  auto wrong_value = good;
  wrong_value.value = Rational(3);
  EXPECT_FALSE(verify_flow(net, wrong_value));

  auto wrong_cut = good;
  wrong_cut.source_side.assign(4, true);
  EXPECT_FALSE(verify_flow(net, wrong_cut));
}

}  // namespace
}  // namespace fractri
