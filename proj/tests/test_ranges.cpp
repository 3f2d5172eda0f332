#include "gspec/enumerate.hpp"
#include "gspec/families.hpp"
#include "gspec/ranges.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace gspec;

TEST_CASE("exact floor and ceiling of quadratic roots")
{
    for (long a = -30; a <= 30; ++a)
        for (long d = 0; d <= 400; ++d) {
            const long double s = std::sqrt(static_cast<long double>(d));
            REQUIRE(detail::floor_minus_root(a, d) == static_cast<long>(std::floor((a - s) / 2)));
            REQUIRE(detail::ceil_plus_root(a, d) == static_cast<long>(std::ceil((a + s) / 2)));
        }
}

TEST_CASE("range formatting and membership")
{
    auto r = clique_range(6, 1, 0);
    CHECK(r.to_string() == "[1,2] U [7,n]");
    CHECK(r.contains(2));
    CHECK_FALSE(r.contains(3));
    CHECK(r.contains(100));
    CHECK(r.values(8) == std::vector<std::size_t>{1, 2, 7, 8});

    CHECK(balanced_biclique_range(9, 2, 2).to_string() == "all k");
    CHECK(star_cycle_range(5, 3).to_string() == "[1,3] U [6,n]");
    CHECK(cyclic_attachment_range(3, 2, 0).all);
    CHECK(cyclic_attachment_range(3, 2, 1).to_string() == "[1,3] U [5,9]");
    CHECK(cyclic_attachment_range(3, 2, 2).to_string() == "all k");

    auto fb = cyclic_attachment_range(2, 5, 1);
    CHECK_FALSE(fb.reason.empty());
    CHECK(fb.source == "cyclic-attachment");
}

TEST_CASE("clique range with one tree remainder")
{
    // with r = 1 and c = 0 the discriminants are 16 omega + 1 and (2 omega - 1)^2
    for (long w = 2; w <= 30; ++w) {
        auto r = clique_range(w, 1, 0);
        for (long k = 1; k <= 3 * w; ++k) {
            const bool low = k <= w - 2 && 4 * k * k - 4 * (2 * w + 3) * k + (4 * w * w + 12 * w + 9 - 16 * w - 1) >= 0 &&
                             2 * k <= 2 * w + 3;
            const bool high = k >= w - 1 && 2 * k - 3 >= 2 * w - 1;
            REQUIRE(r.contains(static_cast<std::size_t>(k)) == (low || high));
        }
    }
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(clique_range(1, 0, 0), ParameterError);
    CHECK_THROWS_AS(cyclic_attachment_range(3, 0, 0), ParameterError);
    CHECK_THROWS_AS(star_cycle_range(3, 2), ParameterError);
    CHECK_THROWS_AS(star_cycle_range(3, 4, 1), ParameterError);
    CHECK_THROWS_AS(two_degree_range(6, 7, 2, 2, 1, 3), ParameterError);
    CHECK_THROWS_AS(single_degree_range(6, 7, 0, 1), ParameterError);
}

TEST_CASE("cyclic attachment ranges hold on generated instances")
{
    SweepSummary s;
    for (const auto& inst : cyclic_attachment_instances(4, 3, 2)) {
        auto r = check_in_range(inst.graph, inst.range, inst.id);
        INFO(inst.id << " range " << inst.range.to_string());
        REQUIRE(r.pass);
        s.add(r);
    }
    CHECK(s.checked > 0);
    CHECK(s.failed == 0);
}

TEST_CASE("star-cycle ranges hold on generated instances")
{
    for (const auto& inst : star_cycle_instances(4, 4, {3, 4, 5})) {
        INFO(inst.id << " range " << inst.range.to_string());
        auto r = check_in_range(inst.graph, inst.range, inst.id);
        REQUIRE((r.pass || !r.applicable));
    }
}

TEST_CASE("degree and clique ranges hold on all graphs up to 7 vertices")
{
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, false)) {
            const auto id = to_graph6(g);
            for (const auto& range : degree_ranges(g)) {
                auto r = check_in_range(g, range, id);
                INFO(id << " " << range.source << " " << range.to_string());
                REQUIRE((r.pass || !r.applicable));
                checked += r.applicable;
            }
            if (auto range = clique_range_for(g)) {
                auto r = check_in_range(g, *range, id);
                INFO(id << " clique " << range->to_string());
                REQUIRE((r.pass || !r.applicable));
            }
        }
    CHECK(checked > 0);
}
