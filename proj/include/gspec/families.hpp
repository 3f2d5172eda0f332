#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gspec {

// Named families. Vertex order is hub-first, then level order.
enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Star,
    CompleteSplit,
    Wheel,
    Cone,
    Friendship,
    Firefly,
    GeneralizedWheel,
    DoubleBroom3,
    DoubleBroom4,
    T4_2a2b,
    TPrime,
    TDoublePrime,
    SNSTree,
};

struct FamilySpec {
    Family family;
    std::vector<std::size_t> params;
};

namespace detail {

inline void require(bool ok, const std::string& msg)
{
    if (!ok) throw ParameterError(msg);
}

} // namespace detail

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n)
{
    detail::require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n)
{
    detail::require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(std::size_t n)
{
    detail::require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph complete_multipartite(const std::vector<std::size_t>& parts)
{
    detail::require(!parts.empty(), "complete multipartite graph needs at least one part");
    std::vector<Graph> g;
    for (auto p : parts) {
        detail::require(p >= 1, "complete multipartite parts must be nonempty");
        g.push_back(empty_graph(p));
    }
    return joined_union({complete_graph(parts.size()), g});
}

inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    return complete_multipartite({a, b});
}

// K_{1,n-1} with the center at vertex 0.
inline Graph star_graph(std::size_t n)
{
    detail::require(n >= 2, "star needs n >= 2");
    return complete_bipartite(1, n - 1);
}

// K_omega joined with an independent set of n - omega vertices; clique first.
inline Graph complete_split(std::size_t omega, std::size_t n)
{
    detail::require(omega >= 1 && omega <= n, "complete split needs 1 <= omega <= n");
    if (omega == n) return complete_graph(n);
    return join(complete_graph(omega), empty_graph(n - omega));
}

// Hub 0 joined to C_{n-1}.
inline Graph wheel_graph(std::size_t n)
{
    detail::require(n >= 4, "wheel needs n >= 4");
    return join(Graph(1), cycle_graph(n - 1));
}

// Independent set of b apexes joined to C_a; apexes first.
inline Graph cone_graph(std::size_t a, std::size_t b)
{
    detail::require(a >= 3 && b >= 1, "cone needs a >= 3, b >= 1");
    return join(empty_graph(b), cycle_graph(a));
}

inline Graph friendship_graph(std::size_t n)
{
    detail::require(n >= 1, "friendship graph needs n >= 1");
    std::vector<Graph> parts{Graph(1)};
    for (std::size_t i = 0; i < n; ++i) parts.push_back(complete_graph(2));
    return joined_union({star_graph(n + 1), parts});
}

// Hub joined to p isolated vertices and n - p copies of K_2; order 2n - p + 1.
inline Graph firefly_graph(std::size_t n, std::size_t p)
{
    detail::require(n >= 1 && p <= n, "firefly needs n >= 1 and 0 <= p <= n");
    std::vector<Graph> parts{Graph(1)};
    for (std::size_t i = 0; i < p; ++i) parts.push_back(Graph(1));
    for (std::size_t i = p; i < n; ++i) parts.push_back(complete_graph(2));
    return joined_union({star_graph(n + 1), parts});
}

// Hub joined to a disjoint copies of C_b; order ab + 1.
inline Graph generalized_wheel(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 3, "generalized wheel needs a >= 1, b >= 3");
    std::vector<Graph> parts{Graph(1)};
    for (std::size_t i = 0; i < a; ++i) parts.push_back(cycle_graph(b));
    return joined_union({star_graph(a + 1), parts});
}

// Adjacent centers 0 and 1 carrying a and b pendants.
inline Graph double_broom3(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 1, "diameter-3 double broom needs a, b >= 1");
    std::vector<Edge> e{{0, 1}};
    std::size_t v = 2;
    for (std::size_t i = 0; i < a; ++i) e.emplace_back(0, v++);
    for (std::size_t i = 0; i < b; ++i) e.emplace_back(1, v++);
    return Graph(v, e);
}

// Middle vertex 0 of degree two between hubs 1 and 2 carrying a and b pendants.
inline Graph double_broom4(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 1, "diameter-4 double broom needs a, b >= 1");
    std::vector<Edge> e{{0, 1}, {0, 2}};
    std::size_t v = 3;
    for (std::size_t i = 0; i < a; ++i) e.emplace_back(1, v++);
    for (std::size_t i = 0; i < b; ++i) e.emplace_back(2, v++);
    return Graph(v, e);
}

// Root 0 with p pendants and r children v_1..v_r, child v_i carrying s_i pendants.
// Order: root, children, root pendants, then pendants of v_1, v_2, ...
inline Graph sns_tree(std::size_t p, const std::vector<std::size_t>& s)
{
    const std::size_t r = s.size();
    detail::require(r >= 2, "SNS tree needs r >= 2 level-one vertices");
    for (auto si : s) detail::require(si >= 1, "SNS tree needs every s_i >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= r; ++i) e.emplace_back(0, i);
    std::size_t v = r + 1;
    for (std::size_t i = 0; i < p; ++i) e.emplace_back(0, v++);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s[i]; ++j) e.emplace_back(i + 1, v++);
    return Graph(v, e);
}

// SNS tree with p = 0 and a + b level-one vertices each carrying one pendant.
inline Graph t4_2a2b(std::size_t a, std::size_t b)
{
    detail::require(a >= 1 && b >= 1, "T(4;2a,2b) needs a, b >= 1");
    return sns_tree(0, std::vector<std::size_t>(a + b, 1));
}

inline Graph t_prime(std::size_t r, std::size_t s1)
{
    detail::require(r >= 2 && s1 >= 2, "T' needs r >= 2, s1 >= 2");
    std::vector<std::size_t> s(r, 1);
    s[0] = s1;
    return sns_tree(0, s);
}

inline Graph t_double_prime(std::size_t r, std::size_t s1, std::size_t s2)
{
    detail::require(r >= 3 && s1 >= 2 && s2 >= 2, "T'' needs r >= 3, s1 >= 2, s2 >= 2");
    std::vector<std::size_t> s(r, 1);
    s[0] = s1;
    s[1] = s2;
    return sns_tree(0, s);
}

// Identifies vertex `root` of a copy of h with each vertex of K_omega.
// Clique occupies 0..omega-1; the remaining vertices of copy i follow in h's order.
inline Graph clique_with_rooted_copies(std::size_t omega, const std::vector<Graph>& hs,
                                       const std::vector<std::size_t>& roots)
{
    detail::require(omega >= 1 && hs.size() == omega && roots.size() == omega,
                    "need one rooted graph per clique vertex");
    std::vector<Edge> e = complete_graph(omega).edges();
    std::size_t next = omega;
    for (std::size_t i = 0; i < omega; ++i) {
        const Graph& h = hs[i];
        detail::require(roots[i] < h.order(), "root outside attached graph");
        std::vector<std::size_t> map(h.order());
        for (std::size_t v = 0; v < h.order(); ++v) map[v] = v == roots[i] ? i : next++;
        for (auto [u, v] : h.edges()) e.emplace_back(map[u], map[v]);
    }
    return Graph(next, e);
}

// Same c-cyclic graph c_graph (order a + 1) fused at vertex `root` to every clique vertex.
inline Graph clique_with_cyclic_copies(std::size_t omega, const Graph& c_graph, std::size_t root)
{
    return clique_with_rooted_copies(omega, std::vector<Graph>(omega, c_graph),
                                     std::vector<std::size_t>(omega, root));
}

// K_omega; vertices 0..omega-2 carry a pendants, vertex omega-1 carries a - 2 pendants and a C_t.
inline Graph clique_star_cycle(std::size_t omega, std::size_t a, std::size_t t)
{
    detail::require(omega >= 2 && a >= 2 && t >= 3, "clique-star-cycle needs omega >= 2, a >= 2, t >= 3");
    std::vector<Graph> hs(omega - 1, star_graph(a + 1));
    std::vector<std::size_t> roots(omega, 0);
    std::vector<Edge> he;
    for (std::size_t i = 0; i < t; ++i) he.emplace_back(i, (i + 1) % t);
    for (std::size_t i = 0; i + 2 < a; ++i) he.emplace_back(0, t + i);
    hs.push_back(Graph(t + a - 2, he));
    return clique_with_rooted_copies(omega, hs, roots);
}

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::CompleteMultipartite: return "complete-multipartite";
    case Family::Star: return "star";
    case Family::CompleteSplit: return "complete-split";
    case Family::Wheel: return "wheel";
    case Family::Cone: return "cone";
    case Family::Friendship: return "friendship";
    case Family::Firefly: return "firefly";
    case Family::GeneralizedWheel: return "generalized-wheel";
    case Family::DoubleBroom3: return "double-broom3";
    case Family::DoubleBroom4: return "double-broom4";
    case Family::T4_2a2b: return "t4-2a2b";
    case Family::TPrime: return "t-prime";
    case Family::TDoublePrime: return "t-double-prime";
    case Family::SNSTree: return "sns-tree";
    }
    return "unknown";
}

inline Family parse_family(const std::string& name)
{
    for (int i = 0; i <= static_cast<int>(Family::SNSTree); ++i)
        if (family_name(static_cast<Family>(i)) == name) return static_cast<Family>(i);
    throw ParameterError("unknown family '" + name + "'");
}

inline Graph build_named(const FamilySpec& spec)
{
    const auto& p = spec.params;
    auto need = [&](std::size_t k) {
        detail::require(p.size() == k, family_name(spec.family) + " takes " + std::to_string(k) +
                                           " parameter(s), got " + std::to_string(p.size()));
    };
    switch (spec.family) {
    case Family::Path: need(1); return path_graph(p[0]);
    case Family::Cycle: need(1); return cycle_graph(p[0]);
    case Family::Complete: need(1); return complete_graph(p[0]);
    case Family::CompleteBipartite: need(2); return complete_bipartite(p[0], p[1]);
    case Family::CompleteMultipartite: return complete_multipartite(p);
    case Family::Star: need(1); return star_graph(p[0]);
    case Family::CompleteSplit: need(2); return complete_split(p[0], p[1]);
    case Family::Wheel: need(1); return wheel_graph(p[0]);
    case Family::Cone: need(2); return cone_graph(p[0], p[1]);
    case Family::Friendship: need(1); return friendship_graph(p[0]);
    case Family::Firefly: need(2); return firefly_graph(p[0], p[1]);
    case Family::GeneralizedWheel: need(2); return generalized_wheel(p[0], p[1]);
    case Family::DoubleBroom3: need(2); return double_broom3(p[0], p[1]);
    case Family::DoubleBroom4: need(2); return double_broom4(p[0], p[1]);
    case Family::T4_2a2b: need(2); return t4_2a2b(p[0], p[1]);
    case Family::TPrime: need(2); return t_prime(p[0], p[1]);
    case Family::TDoublePrime: need(3); return t_double_prime(p[0], p[1], p[2]);
    case Family::SNSTree: {
        detail::require(p.size() >= 3, "sns-tree takes p followed by s_1..s_r (r >= 2)");
        return sns_tree(p[0], std::vector<std::size_t>(p.begin() + 1, p.end()));
    }
    }
    throw ParameterError("unknown family");
}

} // namespace gspec
