#include "gspec/conjecture.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/tree.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gspec;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& predicate)
{
    for (const auto& r : rs)
        if (r.predicate == predicate) return r;
    throw std::runtime_error("missing predicate " + predicate);
}

} // namespace

TEST_CASE("partial-sum bound on small graphs")
{
    auto k4 = brouwer_check(complete_graph(4));
    REQUIRE(k4.margins.size() == 4);
    CHECK(k4.margins[0] == Catch::Approx(3));
    CHECK(k4.margins[1] == Catch::Approx(1));
    CHECK(k4.margins[2] == Catch::Approx(0).margin(1e-12));
    CHECK(k4.pass);
    CHECK(k4.worst_k == 3);

    auto c5 = brouwer_check(cycle_graph(5));
    CHECK(c5.margins[1] == Catch::Approx(5 + 3 - (5 + std::sqrt(5.0))).epsilon(1e-12));
}

TEST_CASE("conjugate degree bound")
{
    auto s4 = gmb_check(star_graph(4));
    CHECK(s4.margins[0] == Catch::Approx(0).margin(1e-12));
    CHECK(s4.pass);
    CHECK(s4.equality);
    CHECK(is_threshold(star_graph(4)));
    CHECK(is_threshold(complete_split(3, 6)));
    CHECK_FALSE(is_threshold(path_graph(4)));
    CHECK_FALSE(is_threshold(cycle_graph(4)));

    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, false)) {
            auto r = gmb_check(g);
            REQUIRE(r.pass);
            if (is_threshold(g)) REQUIRE(r.equality);
        }
}

TEST_CASE("structure hints")
{
    CHECK(maximum_clique(complete_graph(5)).size() == 5);
    CHECK(maximum_clique(cycle_graph(5)).size() == 2);
    auto b = maximum_biclique(complete_bipartite(2, 3));
    REQUIRE(b);
    CHECK(b->larger.size() == 3);
    CHECK(b->smaller.size() == 2);
    CHECK_THROWS(validate_hints(path_graph(3), {std::vector<std::size_t>{0, 2}, std::nullopt}));
}

TEST_CASE("partial-sum upper bounds from structure")
{
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto rs = sk_upper_bounds(g, laplacian_values(g), find_hints(g), instance_id(g));
            for (const auto& r : rs) {
                INFO(r.instance << " " << r.predicate);
                REQUIRE(r.pass);
            }
        }
    // star: tree bound at k = 1 is tight
    auto rs = sk_upper_bounds(star_graph(5), laplacian_values(star_graph(5)), find_hints(star_graph(5)), "s5");
    CHECK(find(rs, "tree-sk").margins[0] == Catch::Approx(0).margin(1e-9));
    CHECK_FALSE(find(sk_upper_bounds(cycle_graph(5), laplacian_values(cycle_graph(5)), {}, "c5"), "pendant-sk").applicable);
}

TEST_CASE("degree majorization and the eigenvalue lower bound")
{
    auto rs = majorization_checks(star_graph(4), laplacian_values(star_graph(4)), "s4");
    CHECK(find(rs, "eigenvalue-lower-bound").margins[0] == Catch::Approx(0).margin(1e-9));
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, false))
            for (const auto& r : majorization_checks(g, laplacian_values(g), instance_id(g))) REQUIRE(r.pass);
    CHECK(is_clique_plus_isolated(Graph(4, {{0, 1}, {0, 2}, {1, 2}}), 3));
    CHECK_FALSE(is_clique_plus_isolated(path_graph(3), 3));
}

TEST_CASE("tree energy references")
{
    CHECK(star_laplacian_energy(4) == Rational(5));
    CHECK(path_laplacian_energy(5) == Catch::Approx(laplacian_energy(path_graph(5)).value));
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK(star_laplacian_energy(n).get_d() == Catch::Approx(laplacian_energy(star_graph(n)).value));

    for (std::size_t n = 2; n <= 11; ++n) {
        auto ref = tree_energy_reference(n);
        for (const auto& t : enumerate_trees(n))
            for (const auto& r : le_checks(t, ref, instance_id(t))) {
                INFO(r.instance << " " << r.predicate << " " << r.note);
                REQUIRE(r.pass);
            }
    }
    CHECK_THROWS(le_checks(cycle_graph(4), tree_energy_reference(4), "c4"));
    CHECK_THROWS(le_checks(path_graph(4), tree_energy_reference(5), "p4"));
}

TEST_CASE("generalized distance radius bounds")
{
    auto dd = distances(cycle_graph(4));
    auto rb = radius_bounds(dd, 0.5);
    CHECK(rb.lower == Catch::Approx(4));
    auto rs = dalpha_bounds(cycle_graph(4), Rational(1, 2), "c4");
    CHECK(find(rs, "dalpha-radius-lower").equality);
    CHECK(find(rs, "dalpha-radius-lower").margins[0] == Catch::Approx(0).margin(1e-9));

    // the quadratic root with the minus sign in the constant term against the displayed radicand
    const double a = 0.5, ti = 5, tj = 3, d = 1;
    auto q = radius_pair_bound(a, ti, tj, d);
    REQUIRE(q);
    CHECK(*q * *q - (a * ti + tj - (1 - a) * d) * *q + a * ti * tj - (1 - a) * ti * d == Catch::Approx(0).margin(1e-9));

    std::size_t displayed_below = 0, checked = 0;
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto gd = distances(g);
            const double rho = symmetric_eigenvalues(build_matrix(g, MatrixKind::Dalpha, Rational(1, 2)).d).front();
            auto b = radius_bounds(gd, 0.5);
            REQUIRE(rho <= b.upper + 1e-9 * std::max(1.0, rho));
            ++checked;
            if (!(rho <= b.displayed + 1e-9 * std::max(1.0, rho))) ++displayed_below;
        }
    CHECK(checked == 1 + 2 + 6 + 21 + 112);
    CHECK(displayed_below > 0);
}

TEST_CASE("generalized distance bounds on small connected graphs")
{
    for (int q : {0, 1, 2, 3}) {
        const Rational alpha(q, 4);
        for (std::size_t n = 2; n <= 6; ++n)
            for (const auto& g : enumerate_graphs(n, true))
                for (const auto& r : dalpha_bounds(g, alpha, instance_id(g))) {
                    INFO(r.instance << " " << r.predicate << " alpha=" << to_string(alpha) << " " << r.note);
                    REQUIRE(r.pass);
                }
    }
    CHECK_THROWS(dalpha_bounds(path_graph(3), 1, "p3"));
    CHECK_THROWS(dalpha_bounds(Graph(3), Rational(1, 2), "e3"));
}

TEST_CASE("star energy equality region")
{
    // equality holds up to and including alpha = 2n/(3n-2)
    for (std::size_t n = 4; n <= 10; ++n) {
        const Rational thr(2 * static_cast<long>(n), 3 * static_cast<long>(n) - 2);
        for (const Rational& a : std::vector<Rational>{thr, Rational(1, 10), Rational(thr + Rational(1, 100))}) {
            if (a >= 1) continue;
            auto rs = dalpha_bounds(star_graph(n), a, "star");
            const auto& r = find(rs, "dalpha-tree-energy");
            REQUIRE(r.pass);
            REQUIRE(r.equality == (a <= thr));
        }
    }
}

TEST_CASE("edge deletion raises generalized distance eigenvalues")
{
    std::mt19937_64 rng(16);
    std::size_t done = 0;
    while (done < 60) {
        const std::size_t n = 4 + rng() % 5;
        std::vector<Edge> e;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g(n, e);
        if (!is_connected(g) || g.size() == n - 1) continue;
        for (auto [u, v] : g.edges()) {
            if (!is_connected(remove_edge(g, u, v))) continue;
            for (const Rational& a : {Rational(1, 2), Rational(3, 4), Rational(1)})
                REQUIRE(dalpha_edge_deletion_check(g, u, v, a, instance_id(g)).pass);
            ++done;
            break;
        }
    }
    CHECK_THROWS(dalpha_edge_deletion_check(cycle_graph(4), 0, 1, Rational(1, 4), "c4"));
    CHECK_THROWS(dalpha_edge_deletion_check(path_graph(3), 0, 1, Rational(1, 2), "p3"));
}

TEST_CASE("perfect square sequence")
{
    CHECK(perfect_square_seq(0) == std::pair<std::uint64_t, std::uint64_t>{0, 9});
    CHECK(perfect_square_seq(1) == std::pair<std::uint64_t, std::uint64_t>{16, 25});
    CHECK(perfect_square_seq(2).second == 49);
    CHECK(perfect_square_seq(10).second == 529);
    for (std::uint64_t t = 0; t <= 200; ++t) {
        const auto x = perfect_square_seq(t).second;
        CHECK(x == (2 * t + 3) * (2 * t + 3));
    }
}

TEST_CASE("sweep summary")
{
    SweepSummary s;
    s.add(brouwer_check(complete_graph(4)));
    s.add(brouwer_check(path_graph(4)));
    CheckReport na;
    na.applicable = false;
    s.add(na);
    CHECK(s.checked == 2);
    CHECK(s.failed == 0);
    CHECK(s.min_margin == Catch::Approx(0).margin(1e-12));
}
