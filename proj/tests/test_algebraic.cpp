#include "gspec/algebraic.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/quotient.hpp"

#include <catch_amalgamated.hpp>

using namespace gspec;

namespace {

// Graph relabelled into joined-union block order.
Graph to_block_order(const AlgebraicGraph& ag)
{
    std::vector<Edge> e;
    for (auto [u, v] : ag.graph.edges()) e.emplace_back(ag.to_blocks[u], ag.to_blocks[v]);
    return Graph(ag.graph.order(), e);
}

} // namespace

TEST_CASE("divisor arithmetic")
{
    auto d = divisor_data(30);
    CHECK(d.proper == std::vector<std::size_t>{2, 3, 5, 6, 10, 15});
    CHECK(euler_phi(30) == 8);
    CHECK(divisor_count(30) == 8);
    CHECK(divisor_data(13).proper.empty());
    CHECK(euler_phi(13) == 12);
    for (std::size_t p : {2, 3, 5})
        for (std::size_t l = 1, pl = p; l <= 4; ++l, pl *= p) {
            std::size_t sum = 0;
            for (std::size_t i = 1, pi = p; i <= l; ++i, pi *= p) sum += euler_phi(pi);
            CHECK(sum == pl - 1);
        }
}

TEST_CASE("divisibility and quotient skeletons")
{
    auto g12 = divisibility_graph(12); // divisors 2, 3, 4, 6
    CHECK(g12.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(divisibility_graph(30).order() == 6);
    CHECK_THROWS(divisibility_graph(7));
    for (std::size_t n : {12, 30, 36, 60, 72})
        CHECK(divisibility_graph(n).order() == divisor_count(n) - 2);

    auto u30 = zero_divisor_quotient_graph(30); // divisors 2, 3, 5, 6, 10, 15
    CHECK(u30.edges() == std::vector<Edge>{{0, 5}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto u12 = zero_divisor_quotient_graph(12);
    CHECK(are_isomorphic(u12, path_graph(4)));
    CHECK(u12.has_edge(1, 2)); // 3 ~ 4
    CHECK(zero_divisor_quotient_graph(49).order() == 1);
    CHECK(zero_divisor_quotient_graph(49).size() == 0);
}

TEST_CASE("power graphs")
{
    CHECK(power_graph(27).graph.is_complete());
    CHECK(power_graph(8).graph.is_complete());
    auto p6 = power_graph(6);
    CHECK(p6.graph.has_edge(2, 4));
    CHECK(p6.graph.neighbors(3) == std::vector<std::size_t>{0, 1, 5});
    CHECK(are_isomorphic(p6.graph, join(disjoint_union({complete_graph(1), complete_graph(2)}), complete_graph(3))));
    auto p30 = power_graph(30);
    CHECK(p30.graph.order() == 30);
    CHECK(p30.decomposition.spec.parts.size() == 7); // units with 0, then one part per proper divisor
    CHECK_THROWS_AS(power_graph(2), ParameterError);
}

TEST_CASE("zero-divisor graphs")
{
    auto z30 = zero_divisor_graph(30);
    CHECK(z30.graph.order() == 21);
    std::vector<std::size_t> orders;
    for (const auto& part : z30.decomposition.spec.parts) orders.push_back(part.order());
    CHECK(orders == std::vector<std::size_t>{8, 4, 2, 4, 2, 1}); // phi(30/d) for d = 2, 3, 5, 6, 10, 15
    for (std::size_t p : {3, 5, 7}) CHECK(are_isomorphic(zero_divisor_graph(p * p).graph, complete_graph(p - 1)));
    for (std::size_t p : {2, 3}) {
        auto g = zero_divisor_graph(p * p * p).graph;
        CHECK(are_isomorphic(g, complete_split(p - 1, p * p - 1)));
    }
    CHECK_THROWS(zero_divisor_graph(11));
}

TEST_CASE("direct and joined-union constructions coincide")
{
    for (std::size_t n = 3; n <= 120; ++n) {
        auto p = power_graph(n);
        REQUIRE(to_block_order(p) == joined_union(p.decomposition.spec));
        if (divisor_data(n).proper.empty()) continue;
        auto z = zero_divisor_graph(n);
        REQUIRE(to_block_order(z) == joined_union(z.decomposition.spec));
        std::size_t total = 0;
        for (const auto& part : z.decomposition.spec.parts) total += part.order();
        REQUIRE(total == n - euler_phi(n) - 1);
        for (std::size_t i = 0; i < z.decomposition.labels.size(); ++i) {
            const auto d = z.decomposition.labels[i];
            const bool clique = (d * d) % n == 0;
            REQUIRE((z.decomposition.kinds[i] == PartKind::Clique) == clique);
        }
    }
}
