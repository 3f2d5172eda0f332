#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gspec;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

} // namespace

TEST_CASE("named families have the expected shape")
{
    auto s4 = star_graph(4);
    CHECK(degree_profile(s4).degrees == std::vector<std::size_t>{3, 1, 1, 1});

    auto f2 = friendship_graph(2);
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2.max_degree() == 4);

    CHECK(are_isomorphic(t4_2a2b(1, 1), path_graph(5)));
    CHECK(clique_star_cycle(4, 3, 5).order() == 4 * 4 + 5 - 3);
}

TEST_CASE("joined union of empty parts on K_2 is complete bipartite")
{
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 1; b <= 4; ++b)
            CHECK(are_isomorphic(joined_union({Graph(2, {{0, 1}}), {Graph(a), Graph(b)}}), complete_bipartite(a, b)));
}

TEST_CASE("joined union on P_3 with K_1, K_2, K_3")
{
    auto g = joined_union({path_graph(3), {complete_graph(1), complete_graph(2), complete_graph(3)}});
    CHECK(g.order() == 6);
    // 0 + 1 + 3 inside parts, 1*2 + 2*3 between
    CHECK(g.size() == 12);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("join order and size")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_graph(1 + rng() % 6, 0.5, rng);
        auto b = random_graph(1 + rng() % 6, 0.5, rng);
        auto j = join(a, b);
        CHECK(j.order() == a.order() + b.order());
        CHECK(j.size() == a.size() + b.size() + a.order() * b.order());
    }
}

TEST_CASE("joined union keeps the skeleton diameter")
{
    std::mt19937_64 rng(11);
    for (std::size_t s = 3; s <= 5; ++s)
        for (const auto& sk : enumerate_graphs(s, true)) {
            if (sk.is_complete()) continue;
            std::vector<Graph> parts;
            for (std::size_t i = 0; i < s; ++i) parts.push_back(rng() % 2 ? complete_graph(1 + rng() % 3) : cycle_graph(3));
            CHECK(distances(joined_union({sk, parts})).diameter == distances(sk).diameter);
        }
}

TEST_CASE("distances of small graphs")
{
    auto d = distances(path_graph(3));
    CHECK(d.dist == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    CHECK(d.transmission == std::vector<std::size_t>{3, 2, 3});
    CHECK(d.wiener == 4);

    auto c4 = distances(cycle_graph(4));
    CHECK(c4.transmission_regular);
    CHECK(c4.wiener == 8);

    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b)
            CHECK(distances(complete_bipartite(a, b)).wiener == a * b + a * (a - 1) + b * (b - 1));

    CHECK_THROWS_AS(distances(Graph(3, {{0, 1}})), ConnectivityError);
}

TEST_CASE("distances form a metric on connected graphs up to 7 vertices")
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto d = distances(g).dist;
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(d[i][i] == 0);
                for (std::size_t j = 0; j < n; ++j) {
                    REQUIRE(d[i][j] == d[j][i]);
                    for (std::size_t k = 0; k < n; ++k) REQUIRE(d[i][k] <= d[i][j] + d[j][k]);
                }
            }
        }
}

TEST_CASE("degree profiles")
{
    auto s = degree_profile(star_graph(4));
    CHECK(s.conjugate == std::vector<std::size_t>{4, 1, 1, 0});
    CHECK(s.average == Catch::Approx(1.5));
    auto k = degree_profile(complete_graph(4));
    CHECK(k.degrees == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(k.conjugate == std::vector<std::size_t>{4, 4, 4, 0});

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto p = degree_profile(random_graph(1 + rng() % 9, 0.4, rng));
        std::size_t a = 0, b = 0;
        for (auto x : p.degrees) a += x;
        for (auto x : p.conjugate) b += x;
        CHECK(a == b);
    }
}

TEST_CASE("graph6 round trip")
{
    CHECK(from_graph6(to_graph6(complete_graph(3))) == complete_graph(3));
    CHECK(from_graph6("D?{").order() == 5);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(1 + rng() % 70, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6("D?"), ParseError);
    CHECK_THROWS_AS(from_graph6(""), ParseError);
}

TEST_CASE("enumeration counts match the published sequences")
{
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(enumerate_graphs(n, false).size() == all[n - 1]);
        CHECK(enumerate_graphs(n, true).size() == connected[n - 1]);
    }
    CHECK(enumerate_graphs(1, false).front().order() == 1);
    CHECK_THROWS_AS(enumerate_graphs(9, true), CapacityError);
}

TEST_CASE("enumeration at 8 vertices matches the published count")
{
    CHECK(enumerate_graphs(8, true).size() == 11117);
}
