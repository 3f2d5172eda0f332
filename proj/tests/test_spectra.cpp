#include "gspec/catalog.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/matrix.hpp"
#include "gspec/spectrum.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace gspec;

namespace {

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> e;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g(n, e);
        if (is_connected(g)) return g;
    }
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(g.order(), -1);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<std::size_t> q{s};
        for (std::size_t h = 0; h < q.size(); ++h)
            for (auto w : g.neighbors(q[h])) {
                if (side[w] < 0) {
                    side[w] = 1 - side[q[h]];
                    q.push_back(w);
                } else if (side[w] == side[q[h]]) {
                    return false;
                }
            }
    }
    return true;
}

} // namespace

TEST_CASE("matrix builders")
{
    auto l = build_matrix(path_graph(2), MatrixKind::L);
    CHECK(l.q == RationalMatrix{{1, -1}, {-1, 1}});

    auto dq = build_matrix(cycle_graph(4), MatrixKind::DistQ);
    const std::vector<long> circ{0, 1, 2, 1};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(dq.q[i][j] == Rational((i == j ? 4 : 0) + circ[(j + 4 - i) % 4]));

    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        auto g = random_connected(2 + rng() % 7, 0.5, rng);
        CHECK(build_matrix(g, MatrixKind::Dalpha, 0).q == build_matrix(g, MatrixKind::Dist).q);
    }
}

TEST_CASE("spectra of small graphs")
{
    auto k3 = spectrum(complete_graph(3), MatrixKind::L);
    CHECK(k3.pairs.size() == 2);
    CHECK(k3.multiplicity(3) == 2);
    CHECK(k3.multiplicity(0) == 1);

    auto s = spectrum(star_graph(4), MatrixKind::L);
    CHECK(same_values(s.values(), {4, 1, 1, 0}));

    auto nl = spectrum(complete_bipartite(2, 3), MatrixKind::NL);
    CHECK(nl.multiplicity(1) == 3);
    CHECK(nl.multiplicity(2) == 1);
    CHECK(nl.multiplicity(0) == 1);

    auto j = to_json(k3);
    CHECK(j["kind"] == "L");
    CHECK(j["pairs"].size() == 2);
}

TEST_CASE("exact characteristic polynomials")
{
    CHECK(char_poly_exact(build_matrix(path_graph(2), MatrixKind::A)).to_string() == "x^2 - 1");
    CHECK(char_poly_exact(build_matrix(path_graph(3), MatrixKind::L)).to_string() == "x^3 - 4x^2 + 3x");

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 10;
        RationalMatrix m(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
        auto p = char_poly_exact(m);
        double scale = 0;
        for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
        for (double x : symmetric_eigenvalues(to_dense(m))) CHECK(std::abs(p.eval(x)) <= 1e-6 * scale);
    }
}

TEST_CASE("partial sums")
{
    CHECK(s_k(spectrum(complete_graph(4), MatrixKind::L), 2) == Catch::Approx(8));
    const double n = 4, k = 1;
    CHECK(s_k(spectrum(star_graph(4), MatrixKind::L), 1) == Catch::Approx(n - 2 + 2 * k - (2 * k - 2) / n));
    auto c = spectrum(cycle_graph(6), MatrixKind::L);
    CHECK(s_k(c, 6) == Catch::Approx(12));
    CHECK_THROWS(s_k(c, 7));
    CHECK_THROWS(s_k(c, 0));
}

TEST_CASE("Laplacian energy")
{
    auto s = laplacian_energy(star_graph(4));
    CHECK(s.value == Catch::Approx(5));
    CHECK(s.sigma == 1);

    auto p5 = laplacian_energy(path_graph(5));
    CHECK(p5.value == Catch::Approx(6.0722).margin(1e-4));
    CHECK(p5.value <= 2 + 4 * 5 / std::numbers::pi);
    CHECK(laplacian_energy(path_graph(4)).value == Catch::Approx(4.828427).margin(1e-6));

    for (std::size_t n = 3; n <= 9; ++n) {
        auto k = laplacian_energy(complete_graph(n));
        CHECK(k.sigma == n - 1);
        CHECK(k.value == Catch::Approx(2.0 * (n - 1)));
    }
}

TEST_CASE("Laplacian energy forms agree on all connected graphs up to 7 vertices")
{
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto e = laplacian_energy(g);
            REQUIRE(std::abs(e.value - e.sigma_form) <= 1e-8 * n);
            REQUIRE(std::abs(e.value - e.max_form) <= 1e-8 * n);
        }
}

TEST_CASE("generalized distance energy")
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto g = random_connected(3 + rng() % 6, 0.5, rng);
        auto d = spectrum(g, MatrixKind::Dist).values();
        double ed = 0, mean = 0;
        for (double x : d) ed += std::abs(x - mean);
        CHECK(generalized_distance_energy(g, 0).value == Catch::Approx(ed));

        auto q = spectrum(g, MatrixKind::DistQ).values();
        double eq = 0, qm = 0;
        for (double x : q) qm += x / static_cast<double>(q.size());
        for (double x : q) eq += std::abs(x - qm);
        CHECK(2 * generalized_distance_energy(g, Rational(1, 2)).value == Catch::Approx(eq));
    }
    auto s4 = generalized_distance_energy(star_graph(4), Rational(1, 4));
    CHECK(s4.value == Catch::Approx(star_dalpha_energy(4, 0.25)));
    CHECK_THROWS(generalized_distance_energy(Graph(2), Rational(1, 2)));
    CHECK_THROWS(generalized_distance_energy(path_graph(3), 1));
}

TEST_CASE("normalized Laplacian spectra lie in [0,2] and sum to n")
{
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            auto v = spectrum(g, MatrixKind::NL).values();
            double sum = 0;
            for (double x : v) {
                REQUIRE(x >= -1e-9);
                REQUIRE(x <= 2 + 1e-9);
                sum += x;
            }
            REQUIRE(sum == Catch::Approx(static_cast<double>(n)));
            REQUIRE((std::abs(v.front() - 2) < 1e-8) == is_bipartite(g));
        }
}

TEST_CASE("bipartite graphs share Laplacian and signless Laplacian spectra")
{
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, false))
            if (is_bipartite(g))
                REQUIRE(same_values(spectrum(g, MatrixKind::L).values(), spectrum(g, MatrixKind::Q).values(), 1e-8));
}

TEST_CASE("generalized distance moments")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        auto g = random_connected(2 + rng() % 9, 0.4, rng);
        auto dd = distances(g);
        for (int q = 0; q <= 3; ++q) {
            const double a = q / 4.0;
            auto ev = symmetric_eigenvalues(build_matrix(g, MatrixKind::Dalpha, Rational(q, 4)).d);
            double s1 = 0, s2 = 0, tr2 = 0, fro = 0;
            for (double x : ev) s1 += x, s2 += x * x;
            for (std::size_t i = 0; i < g.order(); ++i) {
                tr2 += static_cast<double>(dd.transmission[i] * dd.transmission[i]);
                for (std::size_t j = 0; j < g.order(); ++j) fro += static_cast<double>(dd.dist[i][j] * dd.dist[i][j]);
            }
            CHECK(s1 == Catch::Approx(2 * a * static_cast<double>(dd.wiener)).epsilon(1e-7).margin(1e-9));
            CHECK(s2 == Catch::Approx(a * a * tr2 + (1 - a) * (1 - a) * fro).epsilon(1e-7).margin(1e-9));
        }
    }
}

TEST_CASE("closed-form catalog matches the dense eigensolver")
{
    for (const auto& e : catalog())
        for (const auto& c : catalog_sweep(e)) {
            INFO(e.family << " " << kind_name(e.kind) << " p0=" << c.params[0] << " alpha=" << c.alpha);
            REQUIRE(catalog_deviation(e, c) <= 1e-8);
        }
}

TEST_CASE("star generalized distance energy closed form")
{
    // values from the eigensolver at n = 4, alpha = 1/2
    auto v = star_dalpha_values(4, 0.5);
    std::sort(v.begin(), v.end());
    CHECK(v[0] == Catch::Approx((6 - std::sqrt(12.0)) / 2));
    CHECK(v[1] == Catch::Approx(1.5));
    CHECK(v[2] == Catch::Approx(1.5));
    CHECK(v[3] == Catch::Approx((6 + std::sqrt(12.0)) / 2));
    CHECK(star_dalpha_k(4, 0.5) == Catch::Approx(12));

    for (std::size_t n = 4; n <= 30; ++n)
        for (int i = 1; i <= 19; ++i) {
            const double a = i / 20.0;
            const double dense = generalized_distance_energy(star_graph(n), Rational(i, 20)).value;
            REQUIRE(star_dalpha_energy(n, a) == Catch::Approx(dense).epsilon(1e-10));
        }
}

TEST_CASE("printed upper branch of the star energy disagrees with the eigensolver")
{
    std::size_t wrong = 0, total = 0;
    for (std::size_t n = 4; n <= 30; ++n)
        for (int i = 1; i <= 19; ++i) {
            const double a = i / 20.0;
            if (a < star_energy_threshold(n)) continue;
            ++total;
            const double dense = generalized_distance_energy(star_graph(n), Rational(i, 20)).value;
            if (std::abs(star_dalpha_energy_printed_upper(n, a) - dense) > 1e-6) ++wrong;
        }
    CHECK(total > 0);
    CHECK(wrong > 0);
}
