#include <doctest.h>

#include <numeric>
#include <set>

#include "netproj/error.hpp"
#include "netproj/metrics.hpp"
#include "netproj/stats.hpp"
#include "support.hpp"

using namespace netproj;
using testing::unit_graph;

namespace {

WeightedGraph random_unit(Rng& rng, std::size_t n, double p) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (rng.unit() < p) pairs.emplace_back(a, b);
  return unit_graph(n, pairs);
}

WeightedGraph triangle_with_pendant() { return unit_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

WeightedGraph two_triangles() { return unit_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

// Q straight from the definition: Σ_ij (A_ij - k_i k_j / 2m) δ(c_i, c_j) / 2m.
double direct_modularity(const WeightedGraph& g, const std::vector<std::uint32_t>& c, bool weighted) {
  Eigen::MatrixXd a = testing::dense_weights(g);
  if (!weighted) a = (a.array() > 0).cast<double>();
  const Eigen::VectorXd k = a.rowwise().sum();
  const double two_m = k.sum();
  double q = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.rows(); ++j)
      if (c[i] == c[j]) q += a(i, j) - k(i) * k(j) / two_m;
  return q / two_m;
}

}  // namespace

TEST_CASE("coverage") {
  CHECK(coverage(WeightedGraph(testing::names('v', 4), {})) == 0.0);
  CHECK(coverage(testing::path(5)) == 1.0);
  CHECK(coverage(unit_graph(10, {{0, 1}, {1, 2}, {3, 4}, {5, 6}, {6, 0}})) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(coverage(WeightedGraph()), UndefinedError);
}

TEST_CASE("transitivity of small graphs") {
  CHECK(transitivity(testing::complete(3)) == 1.0);
  CHECK(transitivity(testing::star(4)) == 0.0);
  CHECK(transitivity(testing::path(2)) == 0.0);
  const auto counts = triangle_counts(triangle_with_pendant());
  CHECK(counts.triangles == 1);
  CHECK(counts.triads == 5);
  CHECK(transitivity(triangle_with_pendant()) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("triangle counts against triple enumeration") {
  Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_unit(rng, 3 + rng.index(10), 0.45);
    const auto a = testing::dense_weights(g);
    std::uint64_t triangles = 0, triads = 0;
    const auto n = a.rows();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) triangles += a(i, j) > 0 && a(j, k) > 0 && a(i, k) > 0;
    for (Eigen::Index centre = 0; centre < n; ++centre)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) triads += a(centre, i) > 0 && a(centre, j) > 0;
    const auto counts = triangle_counts(g);
    CHECK(counts.triangles == triangles);
    CHECK(counts.triads == triads);
  }
}

TEST_CASE("neighbour Jaccard") {
  const auto g = triangle_with_pendant();
  CHECK(neighbor_jaccard(g, g) == 1.0);
  CHECK(neighbor_jaccard(unit_graph(4, {{0, 1}, {2, 3}}), unit_graph(4, {{0, 2}, {1, 3}})) == 0.0);
  // u = node 0: {1,2} vs {2,3} scores 1/3; node 2 scores 1, nodes 1 and 3 score 0.
  const auto g1 = unit_graph(4, {{0, 1}, {0, 2}});
  const auto g2 = unit_graph(4, {{0, 2}, {0, 3}});
  CHECK(neighbor_jaccard(g1, g2) == doctest::Approx((1.0 / 3.0 + 1.0) / 4.0).epsilon(1e-15));
  // Node 4 is isolated in both and stays out of the mean.
  const auto h1 = unit_graph(5, {{0, 1}, {0, 2}});
  const auto h2 = unit_graph(5, {{0, 2}, {0, 3}});
  CHECK(neighbor_jaccard(h1, h2) == doctest::Approx(neighbor_jaccard(g1, g2)).epsilon(1e-15));
  CHECK_THROWS_AS(neighbor_jaccard(unit_graph(3, {}), unit_graph(3, {})), UndefinedError);
  CHECK_THROWS(neighbor_jaccard(unit_graph(3, {{0, 1}}), unit_graph(4, {{0, 1}})));
}

TEST_CASE("similarities are symmetric") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_unit(rng, 9, 0.4);
    const auto b = random_unit(rng, 9, 0.4);
    CHECK(neighbor_jaccard(a, b) == neighbor_jaccard(b, a));
    CHECK(cc_similarity(a, b).similarity == cc_similarity(b, a).similarity);
  }
}

TEST_CASE("clustering coefficient similarity") {
  const auto k3 = testing::complete(3);
  CHECK(cc_similarity(k3, k3).similarity == 1.0);
  const auto vs_star = cc_similarity(k3, testing::star(3));
  CHECK(vs_star.similarity == 0.0);
  CHECK(vs_star.distance == 1.0);
  CHECK(cc_similarity(triangle_with_pendant(), testing::star(5)).similarity == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("degree correlation") {
  Rng rng(3);
  const auto g = random_unit(rng, 10, 0.4);
  CHECK(degree_correlation(g, g) == doctest::Approx(1.0).epsilon(1e-15));
  // Degrees (1,2,1,0) against (0,1,2,1) after shifting the path by one node.
  const auto p = unit_graph(4, {{0, 1}, {1, 2}});
  const auto q = unit_graph(4, {{1, 2}, {2, 3}});
  const Eigen::Vector4d rp(2.5, 4.0, 2.5, 1.0), rq(1.0, 2.5, 4.0, 2.5);
  const Eigen::Vector4d cp = rp.array() - rp.mean(), cq = rq.array() - rq.mean();
  CHECK(degree_correlation(p, q) == doctest::Approx(cp.dot(cq) / (cp.norm() * cq.norm())).epsilon(1e-14));
  CHECK_THROWS_AS(degree_correlation(testing::cycle(5), testing::path(5)), UndefinedError);
  CHECK_THROWS_AS(degree_correlation(testing::path(2), testing::path(2)), UndefinedError);
}

TEST_CASE("average ranks and Spearman") {
  const Eigen::Vector3d up(1, 2, 3), down(3, 2, 1);
  CHECK(*spearman(up, down) == doctest::Approx(-1.0).epsilon(1e-15));
  const Eigen::VectorXd tied = (Eigen::VectorXd(6) << 5, 1, 5, 3, 1, 5).finished();
  const Eigen::VectorXd expected = (Eigen::VectorXd(6) << 5, 1.5, 5, 3, 1.5, 5).finished();
  CHECK(average_ranks(tied) == expected);
  // Brute-force ranks: 1 + #smaller + (#equal - 1) / 2.
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd v(12);
    for (auto& x : v) x = static_cast<double>(rng.index(5));
    const auto r = average_ranks(v);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double smaller = (v.array() < v(i)).count();
      const double equal = (v.array() == v(i)).count();
      CHECK(r(i) == 1 + smaller + (equal - 1) / 2);
    }
  }
  CHECK_FALSE(pearson(Eigen::Vector3d(1, 1, 1), up).has_value());
}

TEST_CASE("betweenness of a path") {
  const auto b = betweenness(testing::path(5));
  const Eigen::VectorXd expected = (Eigen::VectorXd(5) << 0, 3, 4, 3, 0).finished() / 6.0;
  CHECK((b - expected).cwiseAbs().maxCoeff() <= 1e-15);
  const auto oracle = testing::PathOracle(testing::adjacency_bits(testing::path(5))).betweenness();
  CHECK((oracle - expected).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(centralization(testing::path(5)) ==
        doctest::Approx((expected.maxCoeff() * 5 - expected.sum()) / 4.0).epsilon(1e-14));
}

TEST_CASE("betweenness against exhaustive shortest paths") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_unit(rng, 3 + rng.index(6), 0.2 + 0.6 * rng.unit());
    const auto oracle = testing::PathOracle(testing::adjacency_bits(g)).betweenness();
    CHECK((betweenness(g) - oracle).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("centralization calibration") {
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(centralization(testing::star(n)) == 1.0);
    CHECK(centralization(testing::complete(n)) == 0.0);
    CHECK(centralization(testing::cycle(n)) == 0.0);
  }
  CHECK_THROWS_AS(centralization(testing::path(2)), UndefinedError);
  CHECK_THROWS_AS(betweenness(testing::path(2)), UndefinedError);
}

TEST_CASE("centralization is invariant under relabelling") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_unit(rng, 9, 0.35);
    std::vector<NodeId> perm(9);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    rng.shuffle(std::span<NodeId>(perm));
    std::vector<std::pair<NodeId, NodeId>> moved;
    for (const auto& e : g.edges()) moved.emplace_back(perm[e.a], perm[e.b]);
    const auto h = unit_graph(9, moved);
    CHECK(centralization(h) == doctest::Approx(centralization(g)).epsilon(1e-12));
    CHECK(transitivity(h) == transitivity(g));
  }
}

TEST_CASE("modularity of fixed partitions") {
  const std::vector<std::uint32_t> halves{0, 0, 0, 1, 1, 1};
  CHECK(modularity(two_triangles(), halves, EdgeWeighting::Unweighted) == doctest::Approx(0.5).epsilon(1e-15));
  const std::vector<std::uint32_t> one(6, 0);
  CHECK(modularity(testing::complete(6), one, EdgeWeighting::Unweighted) == doctest::Approx(0.0));
  CHECK_THROWS_AS(modularity(unit_graph(3, {}), std::vector<std::uint32_t>(3, 0), EdgeWeighting::Unweighted),
                  UndefinedError);
}

TEST_CASE("modularity against the pairwise definition") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto base = random_unit(rng, 10, 0.35);
    if (base.edge_count() == 0) continue;
    std::vector<WeightedEdge> edges(base.edges().begin(), base.edges().end());
    for (auto& e : edges) e.weight = 1.0 + static_cast<double>(rng.index(4));
    const WeightedGraph g(base.labels(), edges);
    std::vector<std::uint32_t> c(10);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng.index(4));
    for (bool weighted : {false, true}) {
      const double q = modularity(g, c, weighted ? EdgeWeighting::Weighted : EdgeWeighting::Unweighted);
      CHECK(q == doctest::Approx(direct_modularity(g, c, weighted)).epsilon(1e-12));
      CHECK(q >= -0.5);
      CHECK(q <= 1.0);
    }
  }
}

TEST_CASE("modularity search") {
  const auto found = modularity_partition(two_triangles(), 1);
  CHECK(found.modularity == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(found.community == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});

  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_unit(rng, 14, 0.25);
    if (g.edge_count() == 0) continue;
    const auto p = modularity_partition(g, trial);
    CHECK(p.modularity >= modularity(g, std::vector<std::uint32_t>(14, 0), EdgeWeighting::Unweighted) - 1e-12);
    CHECK(p.modularity == doctest::Approx(modularity(g, p.community, EdgeWeighting::Unweighted)).epsilon(1e-12));
    CHECK(p.community[0] == 0);
    const auto again = modularity_partition(g, trial);
    CHECK(again.community == p.community);
  }
  // Complete graph: nothing beats one community.
  const auto k = modularity_partition(testing::complete(7), 3);
  CHECK(std::set<std::uint32_t>(k.community.begin(), k.community.end()).size() == 1);
  CHECK(k.modularity == doctest::Approx(0.0));
}

TEST_CASE("weighted modularity search follows heavy edges") {
  // A 6-cycle whose alternate triples are tied by heavy edges.
  const WeightedGraph g(testing::names('v', 6), {{0, 1, 10}, {1, 2, 10}, {2, 3, 1}, {3, 4, 10}, {4, 5, 10}, {5, 0, 1}});
  const auto p = modularity_partition(g, 0, EdgeWeighting::Weighted);
  CHECK(p.community == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("topology report") {
  const auto g = unit_graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto r = topology_report(g);
  CHECK(r.node_count == 7);
  CHECK(r.edge_count == 4);
  CHECK(r.coverage == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
  CHECK(r.transitivity == doctest::Approx(0.6).epsilon(1e-15));
  REQUIRE(r.modularity.has_value());
  REQUIRE(r.centralization.has_value());
  // Isolates do not enter the centralization.
  CHECK(*r.centralization == doctest::Approx(centralization(triangle_with_pendant())).epsilon(1e-15));
  const auto empty = topology_report(unit_graph(3, {}));
  CHECK_FALSE(empty.modularity.has_value());
  CHECK_FALSE(empty.centralization.has_value());
  TopologyOptions options;
  options.with_centralization = false;
  CHECK_FALSE(topology_report(g, options).centralization.has_value());
}
