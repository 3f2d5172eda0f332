#include "gspec/algebraic.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/quotient.hpp"

#include <catch_amalgamated.hpp>

#include <map>
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

JoinedUnionSpec random_spec(std::mt19937_64& rng)
{
    const std::size_t s = 2 + rng() % 4;
    Graph sk;
    do sk = random_graph(s, 0.5, rng);
    while (!is_connected(sk));
    std::vector<Graph> parts;
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t order = 1 + rng() % 6;
        switch (rng() % 4) {
        case 0: parts.push_back(complete_graph(order)); break;
        case 1: parts.push_back(Graph(order)); break;
        case 2: parts.push_back(order >= 3 ? cycle_graph(order) : Graph(order)); break;
        default: parts.push_back(complete_bipartite(order, order)); break;
        }
    }
    return {sk, parts};
}

} // namespace

TEST_CASE("quotient of an equitable partition")
{
    auto m = build_matrix(star_graph(5), MatrixKind::L);
    auto qm = quotient_matrix(m, {{0}, {1, 2, 3, 4}});
    CHECK(qm.equitable);
    CHECK(qm.exact);
    CHECK(qm.q == RationalMatrix{{4, -4}, {-1, 1}});
    auto ev = quotient_eigenvalues(qm);
    CHECK(same_values(ev, {5, 0}));

    auto uneven = quotient_matrix(build_matrix(path_graph(4), MatrixKind::A), {{0, 1}, {2, 3}});
    CHECK_FALSE(uneven.equitable);
    CHECK_THROWS(quotient_matrix(m, {{0, 1}, {1, 2, 3, 4}}));
    CHECK_THROWS(quotient_matrix(m, {{0}, {1, 2, 3}}));
}

TEST_CASE("quotient eigenvalues are eigenvalues of the parent for equitable partitions")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto deg = degree_profile(g).degrees;
            std::map<std::size_t, std::vector<std::size_t>> by_degree;
            for (std::size_t v = 0; v < n; ++v) by_degree[deg[v]].push_back(v);
            Partition p;
            for (auto& [d, vs] : by_degree) p.push_back(vs);
            auto qm = quotient_matrix(build_matrix(g, MatrixKind::A), p);
            if (!qm.equitable) continue;
            auto parent = spectrum(g, MatrixKind::A);
            for (double x : quotient_eigenvalues(qm)) REQUIRE(parent.multiplicity(x, 1e-8) > 0);
        }
}

TEST_CASE("joined-union shortcut matches the dense spectrum")
{
    std::mt19937_64 rng(20);
    for (int t = 0; t < 150; ++t) {
        auto spec = random_spec(rng);
        auto g = joined_union(spec);
        INFO("graph " << to_edge_list(g));
        auto nl = nl_joined_union_spectrum(spec);
        REQUIRE(nl.combined.total() == g.order());
        REQUIRE(max_deviation(nl.combined.values(), spectrum(g, MatrixKind::NL).values()) <= 1e-8);
        auto dq = dsq_joined_union_spectrum(spec);
        REQUIRE(dq.combined.total() == g.order());
        const double scale = std::max(1.0, spectrum(g, MatrixKind::DistQ).largest());
        REQUIRE(max_deviation(dq.combined.values(), spectrum(g, MatrixKind::DistQ).values()) <= 1e-8 * scale);
        REQUIRE(nl.inherited_count() + static_cast<std::size_t>(nl.quotient.rows()) == g.order());
    }
}

TEST_CASE("joined-union shortcut rejects invalid input")
{
    JoinedUnionSpec spec{Graph(3, {{0, 1}}), {complete_graph(2), complete_graph(2), complete_graph(2)}};
    CHECK_THROWS(dsq_joined_union_spectrum(spec));
    JoinedUnionSpec irregular{path_graph(2), {path_graph(3), complete_graph(2)}};
    CHECK_THROWS(nl_joined_union_spectrum(irregular));
}

TEST_CASE("zero-divisor graph of Z_30 distance signless Laplacian")
{
    auto z = zero_divisor_graph(30);
    auto s = dsq_joined_union_spectrum(z.decomposition.spec);
    std::map<double, std::size_t> inherited;
    for (const auto& e : s.inherited)
        if (e.multiplicity > 0) inherited[std::round(e.value * 1e6) / 1e6] += e.multiplicity;
    CHECK(inherited == std::map<double, std::size_t>{{29, 1}, {33, 3}, {43, 7}, {46, 4}});

    auto sextic = s.quotient_char_poly();
    REQUIRE(sextic);
    CHECK(sextic->to_string() == "x^6 - 263x^5 + 27575x^4 - 1489941x^3 + 44016528x^2 - 676666908x + 4239569664");

    // full characteristic polynomial from the dense rational matrix, divided by the inherited factors
    auto full = char_poly_exact(build_matrix(z.graph, MatrixKind::DistQ));
    Polynomial rest = full;
    for (auto [v, m] : inherited)
        rest = rest.exact_div(pow(Polynomial::linear(Rational(static_cast<long>(v))), static_cast<int>(m)));
    CHECK(rest == *sextic);

    const std::vector<double> roots{87.1555290591, 44.5461262908, 40.57272034, 35.0097628767, 30.5596567218,
                                    25.1562047117};
    auto q = s.quotient_eigenvalues;
    std::sort(q.rbegin(), q.rend());
    REQUIRE(q.size() == roots.size());
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i] == Catch::Approx(roots[i]).epsilon(1e-10));
    CHECK(max_deviation(s.combined.values(), spectrum(z.graph, MatrixKind::DistQ).values()) <= 1e-9);
}

TEST_CASE("algebraic graphs through the shortcut")
{
    for (std::size_t n = 4; n <= 60; ++n) {
        auto p = power_graph(n);
        if (p.decomposition.spec.parts.size() >= 2) {
            auto nl = nl_joined_union_spectrum(p.decomposition.spec);
            REQUIRE(max_deviation(nl.combined.values(), spectrum(p.graph, MatrixKind::NL).values()) <= 1e-8);
        }
        if (divisor_data(n).proper.empty()) continue;
        auto z = zero_divisor_graph(n);
        if (z.decomposition.spec.parts.size() < 2) continue;
        auto dq = dsq_joined_union_spectrum(z.decomposition.spec);
        REQUIRE(max_deviation(dq.combined.values(), spectrum(z.graph, MatrixKind::DistQ).values()) <=
                1e-8 * dq.combined.largest());
    }
}

TEST_CASE("symmetric block reduction")
{
    std::mt19937_64 rng(31);
    std::normal_distribution<double> nd;
    auto sym = [&](Eigen::Index k) {
        Eigen::MatrixXd m(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = i; j < k; ++j) m(i, j) = m(j, i) = nd(rng);
        return m;
    };
    for (int t = 0; t < 40; ++t) {
        const Eigen::Index p = 1 + static_cast<Eigen::Index>(rng() % 3);
        const Eigen::Index q = 1 + static_cast<Eigen::Index>(rng() % 3);
        const std::size_t c = 1 + rng() % 4;
        Eigen::MatrixXd x = sym(p), b = sym(q), cb = sym(q), beta(p, q);
        for (Eigen::Index i = 0; i < p; ++i)
            for (Eigen::Index j = 0; j < q; ++j) beta(i, j) = nd(rng);
        auto full = symmetric_eigenvalues(assemble_block_matrix(x, beta, b, cb, c));
        auto r = block_symmetric_reduce(x, beta, b, cb, c);
        REQUIRE(r.inherited_multiplicity == c - 1);
        REQUIRE(max_deviation(block_reduction_values(r), full) <= 1e-9);
    }
    Eigen::MatrixXd one = Eigen::MatrixXd::Identity(1, 1);
    CHECK_THROWS(block_symmetric_reduce(one, one, one, one, 0));
}
