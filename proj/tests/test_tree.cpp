#include "gspec/families.hpp"
#include "gspec/matrix.hpp"
#include "gspec/spectrum.hpp"
#include "gspec/tree.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace gspec;

namespace {

// All labelled trees via Prufer codes, deduplicated by canonical string.
std::size_t count_by_prufer(std::size_t n)
{
    if (n <= 2) return 1;
    std::set<std::string> seen;
    std::vector<std::size_t> code(n - 2, 0);
    for (;;) {
        seen.insert(tree_canonical_string(prufer_decode(code)));
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == n) code[i++] = 0;
        if (i == code.size()) break;
    }
    return seen.size();
}

std::size_t dense_count(const std::vector<double>& mu, double lo, double hi)
{
    std::size_t c = 0;
    for (double x : mu)
        if (x > lo && x <= hi) ++c;
    return c;
}

} // namespace

TEST_CASE("tree counts agree with Prufer enumeration")
{
    const auto& counts = free_tree_counts();
    for (std::size_t n = 1; n <= 9; ++n) {
        CHECK(enumerate_trees(n).size() == counts[n]);
        CHECK(count_by_prufer(n) == counts[n]);
    }
    CHECK(counts[16] == 19320);
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(10)) {
        REQUIRE(is_tree(t));
        seen.insert(tree_canonical_string(t));
    }
    CHECK(seen.size() == counts[10]);
}

TEST_CASE("canonical string identifies isomorphic trees")
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto g = random_tree(2 + rng() % 15, rng);
        std::vector<std::size_t> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(tree_canonical_string(relabel(g, perm)) == tree_canonical_string(g));
    }
    CHECK(tree_canonical_string(path_graph(4)) != tree_canonical_string(star_graph(4)));
}

TEST_CASE("rooted characteristic polynomial equals the dense one")
{
    for (std::size_t n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n))
            REQUIRE(tree_charpoly(t) == char_poly_exact(build_matrix(t, MatrixKind::L)));
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        auto g = random_tree(10 + rng() % 15, rng);
        auto r = root_tree(g, rng() % g.order());
        REQUIRE(tree_charpoly(r) == char_poly_exact(build_matrix(g, MatrixKind::L)));
    }
    CHECK(tree_charpoly(path_graph(3)).to_string() == "x^3 - 4x^2 + 3x");
}

TEST_CASE("closed-form polynomials of special trees")
{
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 1; b <= 4; ++b)
            CHECK(t4_2a2b_charpoly(a, b) == tree_charpoly(t4_2a2b(a, b)));
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t s1 = 2; s1 <= 4; ++s1)
            CHECK(t_prime_charpoly(r, s1) == tree_charpoly(t_prime(r, s1)));
    std::size_t with_minus = 0, with_plus = 0, total = 0;
    for (std::size_t r = 3; r <= 5; ++r)
        for (std::size_t s1 = 2; s1 <= 4; ++s1)
            for (std::size_t s2 = 2; s2 <= 4; ++s2) {
                auto dense = tree_charpoly(t_double_prime(r, s1, s2));
                ++total;
                if (t_double_prime_charpoly(r, s1, s2, -1) == dense) ++with_minus;
                if (t_double_prime_charpoly(r, s1, s2, +1) == dense) ++with_plus;
            }
    CHECK(with_minus == total);
    CHECK(with_plus == 0);
}

TEST_CASE("diagonalization gives the inertia of L + alpha I")
{
    auto d = diagonalize_tree(path_graph(3), Rational(-1));
    CHECK(d.positive == 1);
    CHECK(d.negative == 1);
    CHECK(d.zero == 1);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-24, 0);
    for (int t = 0; t < 200; ++t) {
        auto g = random_tree(2 + rng() % 20, rng);
        const Rational a(num(rng), 4);
        auto mu = laplacian_values(g);
        std::size_t pos = 0, neg = 0, zero = 0;
        for (double x : mu) {
            const double y = x + a.get_d();
            if (std::abs(y) <= 1e-9) ++zero;
            else if (y > 0) ++pos;
            else ++neg;
        }
        auto r = diagonalize_tree(root_tree(g, rng() % g.order()), a);
        REQUIRE(r.positive == pos);
        REQUIRE(r.negative == neg);
        REQUIRE(r.zero == zero);
    }
}

TEST_CASE("interval counts agree with the eigensolver")
{
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> num(0, 24);
    for (int t = 0; t < 200; ++t) {
        auto g = random_tree(2 + rng() % 25, rng);
        Rational lo(num(rng), 4), hi(num(rng), 4);
        if (lo > hi) std::swap(lo, hi);
        auto mu = laplacian_values(g);
        // skip endpoints that sit on an eigenvalue within floating tolerance
        bool near = false;
        for (double x : mu) near = near || std::abs(x - lo.get_d()) < 1e-7 || std::abs(x - hi.get_d()) < 1e-7;
        const auto exact = count_in_interval(root_tree(g), lo, hi);
        if (!near) REQUIRE(exact == dense_count(mu, lo.get_d(), hi.get_d()));
    }

    // counts over a partition of [0, n] add up to n minus the zero eigenvalue
    for (std::size_t n = 2; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n)) {
            auto r = root_tree(t);
            std::size_t sum = 0;
            for (std::size_t i = 0; i < 2 * n; ++i) sum += count_in_interval(r, Rational(i, 2), Rational(i + 1, 2));
            REQUIRE(sum == n - 1);
        }
}

TEST_CASE("sigma of trees")
{
    CHECK(sigma_tree(star_graph(6)) == 1);
    CHECK(sigma_tree(double_broom3(2, 3)) == 2);
    CHECK(sigma_tree(path_graph(2)) == 1);
    for (std::size_t n = 2; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n))
            REQUIRE(sigma_tree(t) == laplacian_energy(t).sigma);
}

TEST_CASE("edge deletion interlaces Laplacian eigenvalues of a tree")
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 50; ++t) {
        auto g = random_tree(3 + rng() % 12, rng);
        auto e = g.edges()[rng() % g.size()];
        auto mu = laplacian_values(g);
        auto nu = laplacian_values(remove_edge(g, e.first, e.second));
        for (std::size_t i = 0; i < mu.size(); ++i) {
            REQUIRE(nu[i] <= mu[i] + 1e-9);
            if (i + 1 < mu.size()) REQUIRE(nu[i] >= mu[i + 1] - 1e-9);
        }
    }
}

TEST_CASE("tree input validation")
{
    CHECK_THROWS(root_tree(cycle_graph(4)));
    CHECK_THROWS(diagonalize_tree(Graph(3, {{0, 1}}), Rational(0)));
    CHECK_THROWS(prufer_decode({5}));
}
