#pragma once

#include "gspec/catalog.hpp"
#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/matrix.hpp"
#include "gspec/spectrum.hpp"
#include "gspec/tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

inline constexpr double kFailScale = 1e-6;

inline double fail_tolerance(std::size_t n) { return kFailScale * static_cast<double>(std::max<std::size_t>(n, 1)); }

// margin is bound minus achieved (or achieved minus bound for lower bounds); negative means violated.
struct CheckReport {
    std::string instance;
    std::string predicate;
    bool applicable = true;
    bool pass = true;
    std::size_t worst_k = 0;
    double margin = INFINITY;
    bool exact_bound = true; // bound side evaluated in exact rationals
    bool equality = false;   // every margin within tolerance of zero
    bool bound = true;       // false for agreement checks, whose margin is not a slack
    std::vector<double> margins;
    std::string note;
};

namespace detail {

inline CheckReport open_report(const std::string& id, const std::string& predicate)
{
    CheckReport r;
    r.instance = id;
    r.predicate = predicate;
    return r;
}

inline CheckReport not_applicable(const std::string& id, const std::string& predicate, const std::string& why)
{
    CheckReport r = open_report(id, predicate);
    r.applicable = false;
    r.note = why;
    return r;
}

inline void record(CheckReport& r, std::size_t k, double margin)
{
    r.margins.push_back(margin);
    if (margin < r.margin) {
        r.margin = margin;
        r.worst_k = k;
    }
}

inline void close_report(CheckReport& r, std::size_t n)
{
    const double tol = fail_tolerance(n);
    r.pass = !(r.margin < -tol);
    r.equality = !r.margins.empty();
    for (double m : r.margins)
        if (std::abs(m) > tol) r.equality = false;
}

inline double rational_d(long num, long den = 1) { return Rational(num, den).get_d(); }

} // namespace detail

inline std::string instance_id(const Graph& g) { return g.order() <= 62 ? to_graph6(g) : to_edge_list(g); }

// S_k(G) <= m + k(k+1)/2 for every k.
inline CheckReport brouwer_check(const Graph& g, const std::vector<double>& mu, const std::string& id)
{
    auto r = detail::open_report(id, "brouwer");
    const long m = static_cast<long>(g.size());
    double partial = 0;
    for (std::size_t k = 1; k <= mu.size(); ++k) {
        partial += mu[k - 1];
        const long kk = static_cast<long>(k);
        detail::record(r, k, static_cast<double>(m + kk * (kk + 1) / 2) - partial);
    }
    detail::close_report(r, g.order());
    return r;
}

inline CheckReport brouwer_check(const Graph& g) { return brouwer_check(g, laplacian_values(g), instance_id(g)); }

// S_k(G) <= d_1* + ... + d_k*.
inline CheckReport gmb_check(const Graph& g, const std::vector<double>& mu, const std::string& id)
{
    auto r = detail::open_report(id, "gmb");
    const auto conj = degree_profile(g).conjugate;
    double partial = 0;
    long bound = 0;
    for (std::size_t k = 1; k <= mu.size(); ++k) {
        partial += mu[k - 1];
        bound += static_cast<long>(k - 1 < conj.size() ? conj[k - 1] : 0);
        detail::record(r, k, static_cast<double>(bound) - partial);
    }
    detail::close_report(r, g.order());
    if (r.equality) r.note = "equality at every k";
    return r;
}

inline CheckReport gmb_check(const Graph& g) { return gmb_check(g, laplacian_values(g), instance_id(g)); }

// Repeatedly strip an isolated or dominating vertex.
inline bool is_threshold(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::size_t left = n;
    while (left > 0) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n && pick == n; ++v)
            if (alive[v] && (deg[v] == 0 || deg[v] == left - 1)) pick = v;
        if (pick == n) return false;
        alive[pick] = false;
        --left;
        for (auto w : g.neighbors(pick))
            if (alive[w]) --deg[w];
    }
    return true;
}

inline constexpr std::size_t kMaxHintOrder = 20;

struct Biclique {
    std::vector<std::size_t> larger;
    std::vector<std::size_t> smaller;
};

struct StructureHints {
    std::optional<std::vector<std::size_t>> clique;
    std::optional<Biclique> biclique;
};

namespace detail {

inline std::uint32_t neighbour_mask(const Graph& g, std::size_t v)
{
    std::uint32_t m = 0;
    for (auto w : g.neighbors(v)) m |= std::uint32_t(1) << w;
    return m;
}

inline void bron_kerbosch(const std::vector<std::uint32_t>& nb, std::uint32_t r, std::uint32_t p, std::uint32_t x,
                          std::uint32_t& best)
{
    if (!p && !x) {
        if (std::popcount(r) > std::popcount(best)) best = r;
        return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    const std::uint32_t px = p | x;
    const int pivot = std::countr_zero(px);
    std::uint32_t cand = p & ~nb[pivot];
    while (cand) {
        const int v = std::countr_zero(cand);
        const std::uint32_t bit = std::uint32_t(1) << v;
        bron_kerbosch(nb, r | bit, p & nb[v], x & nb[v], best);
        p &= ~bit;
        x |= bit;
        cand &= ~bit;
    }
}

inline std::vector<std::size_t> bits_to_vertices(std::uint32_t m)
{
    std::vector<std::size_t> v;
    while (m) {
        v.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return v;
}

} // namespace detail

// Exact maximum clique (lexicographically first found); n <= 20.
inline std::vector<std::size_t> maximum_clique(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kMaxHintOrder) throw CapacityError("maximum clique search is limited to n <= 20");
    if (n == 0) return {};
    std::vector<std::uint32_t> nb(n);
    for (std::size_t v = 0; v < n; ++v) nb[v] = detail::neighbour_mask(g, v);
    std::uint32_t best = 1;
    detail::bron_kerbosch(nb, 0, (n == 32 ? ~0u : ((std::uint32_t(1) << n) - 1)), 0, best);
    return detail::bits_to_vertices(best);
}

// Complete bipartite subgraph with the most edges, ties broken by the first subset found; n <= 20.
inline std::optional<Biclique> maximum_biclique(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kMaxHintOrder) throw CapacityError("biclique search is limited to n <= 20");
    if (g.size() == 0) return std::nullopt;
    std::vector<std::uint32_t> nb(n);
    for (std::size_t v = 0; v < n; ++v) nb[v] = detail::neighbour_mask(g, v);
    const std::uint32_t all = (std::uint32_t(1) << n) - 1;
    std::uint64_t best_edges = 0;
    std::uint32_t best_a = 0, best_b = 0;
    for (std::uint32_t a = 1; a <= all; ++a) {
        std::uint32_t common = all;
        for (std::uint32_t s = a; s; s &= s - 1) common &= nb[std::countr_zero(s)];
        const auto ca = static_cast<std::uint64_t>(std::popcount(a));
        const auto cb = static_cast<std::uint64_t>(std::popcount(common));
        if (cb == 0 || ca > cb) continue;
        if (ca * cb > best_edges) {
            best_edges = ca * cb;
            best_a = a;
            best_b = common;
        }
    }
    Biclique b;
    b.larger = detail::bits_to_vertices(best_b);
    b.smaller = detail::bits_to_vertices(best_a);
    return b;
}

inline StructureHints find_hints(const Graph& g)
{
    StructureHints h;
    if (g.order() > kMaxHintOrder) return h;
    h.clique = maximum_clique(g);
    h.biclique = maximum_biclique(g);
    return h;
}

// Components of g minus a set of edges: isolated vertices and cyclomatic numbers of the rest.
struct ComponentCensus {
    std::size_t trivial = 0;
    std::vector<long> cyclomatic;

    long excess() const
    {
        long s = 0;
        for (auto c : cyclomatic) s += c - 1;
        return s;
    }
    bool uniform() const
    {
        return std::all_of(cyclomatic.begin(), cyclomatic.end(), [&](long c) { return c == cyclomatic.front(); });
    }
};

inline ComponentCensus census_without(const Graph& g, const std::vector<Edge>& removed)
{
    std::vector<Edge> keep;
    for (auto e : g.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) keep.push_back(e);
    Graph h(g.order(), keep);
    ComponentCensus c;
    for (const auto& comp : components(h)) {
        if (comp.size() == 1) {
            ++c.trivial;
            continue;
        }
        long edges = 0;
        for (auto v : comp) edges += static_cast<long>(h.degree(v));
        edges /= 2;
        c.cyclomatic.push_back(edges - static_cast<long>(comp.size()) + 1);
    }
    return c;
}

inline std::vector<Edge> clique_edges(const std::vector<std::size_t>& clique)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            e.emplace_back(std::min(clique[i], clique[j]), std::max(clique[i], clique[j]));
    return e;
}

inline std::vector<Edge> biclique_edges(const Biclique& b)
{
    std::vector<Edge> e;
    for (auto u : b.larger)
        for (auto v : b.smaller) e.emplace_back(std::min(u, v), std::max(u, v));
    return e;
}

inline void validate_hints(const Graph& g, const StructureHints& h)
{
    if (h.clique) {
        for (auto v : *h.clique)
            if (v >= g.order()) throw PreconditionError("clique hint names a vertex outside the graph");
        for (auto [u, v] : clique_edges(*h.clique))
            if (!g.has_edge(u, v)) throw PreconditionError("clique hint is not a clique");
    }
    if (h.biclique) {
        for (auto [u, v] : biclique_edges(*h.biclique))
            if (u >= g.order() || v >= g.order() || !g.has_edge(u, v))
                throw PreconditionError("biclique hint is not a complete bipartite subgraph");
    }
}

// Upper bounds on S_k from trees, a clique, a complete bipartite subgraph and pendant vertices.
inline std::vector<CheckReport> sk_upper_bounds(const Graph& g, const std::vector<double>& mu, const StructureHints& h,
                                                const std::string& id)
{
    validate_hints(g, h);
    std::vector<CheckReport> out;
    const long n = static_cast<long>(g.order());
    const long m = static_cast<long>(g.size());
    std::vector<double> s(mu.size() + 1, 0.0);
    for (std::size_t k = 1; k <= mu.size(); ++k) s[k] = s[k - 1] + mu[k - 1];

    if (is_tree(g) && n >= 2) {
        auto r = detail::open_report(id, "tree-sk");
        for (long k = 1; k <= n; ++k) {
            Rational b = Rational(n - 2 + 2 * k) - Rational(2 * k - 2, n);
            detail::record(r, static_cast<std::size_t>(k), b.get_d() - s[k]);
        }
        detail::close_report(r, g.order());
        out.push_back(r);
    } else {
        out.push_back(detail::not_applicable(id, "tree-sk", "not a tree"));
    }

    if (h.clique && h.clique->size() >= 2) {
        auto r = detail::open_report(id, "clique-sk");
        const long w = static_cast<long>(h.clique->size());
        auto c = census_without(g, clique_edges(*h.clique));
        const long base = n - static_cast<long>(c.trivial) + 2 * c.excess();
        for (long k = 1; k <= n; ++k) {
            const long b = k >= w - 1 ? w * (w - 1) + base + 2 * k : k * (w + 2) + base;
            detail::record(r, static_cast<std::size_t>(k), static_cast<double>(b) - s[k]);
        }
        r.note = "omega=" + std::to_string(w) + " p=" + std::to_string(c.trivial) +
                 " sum(c_i-1)=" + std::to_string(c.excess());
        detail::close_report(r, g.order());
        out.push_back(r);
    } else {
        out.push_back(detail::not_applicable(id, "clique-sk", "no clique hint"));
    }

    if (h.biclique && h.biclique->larger.size() >= 2) {
        auto r = detail::open_report(id, "biclique-sk");
        const long s1 = static_cast<long>(h.biclique->larger.size());
        const long s2 = static_cast<long>(h.biclique->smaller.size());
        auto c = census_without(g, biclique_edges(*h.biclique));
        const long base = n - static_cast<long>(c.trivial) + 2 * c.excess();
        for (long k = 1; k <= n; ++k) {
            const long b = k >= s1 + s2 - 1 ? 2 * s1 * s2 + base + 2 * k : s2 + k * s1 + base + 2 * k;
            detail::record(r, static_cast<std::size_t>(k), static_cast<double>(b) - s[k]);
        }
        r.note = "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2);
        detail::close_report(r, g.order());
        out.push_back(r);
    } else {
        out.push_back(detail::not_applicable(id, "biclique-sk", "no biclique hint with a side of size >= 2"));
    }

    const long p = static_cast<long>(pendant_count(g));
    if (is_connected(g) && p >= 1) {
        auto r = detail::open_report(id, "pendant-sk");
        const long delta = static_cast<long>(g.max_degree());
        for (long k = 1; k <= n; ++k)
            detail::record(r, static_cast<std::size_t>(k), static_cast<double>(2 * m - n + 3 * k - delta + p + 1) - s[k]);
        detail::close_report(r, g.order());
        out.push_back(r);
    } else {
        out.push_back(detail::not_applicable(id, "pendant-sk", "needs a connected graph with a pendant vertex"));
    }
    return out;
}

// K_i together with n - i isolated vertices.
inline bool is_clique_plus_isolated(const Graph& g, std::size_t i)
{
    if (g.size() != i * (i - 1) / 2) return false;
    std::size_t big = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto d = g.degree(v);
        if (d == 0) continue;
        if (d != i - 1) return false;
        ++big;
    }
    return i <= 1 ? g.size() == 0 : big == i;
}

// Partial sums of mu dominate 1 + partial sums of degrees; mu_i >= d_i - i + 2.
inline std::vector<CheckReport> majorization_checks(const Graph& g, const std::vector<double>& mu,
                                                    const std::string& id)
{
    std::vector<CheckReport> out;
    const auto deg = degree_profile(g).degrees;
    const std::size_t n = g.order();
    if (is_connected(g) && g.size() >= 1) {
        auto r = detail::open_report(id, "degree-majorization");
        double sm = 0;
        long sd = 0;
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            sm += mu[k - 1];
            sd += static_cast<long>(deg[k - 1]);
            detail::record(r, k, sm - static_cast<double>(1 + sd));
        }
        detail::close_report(r, n);
        out.push_back(r);
    } else {
        out.push_back(detail::not_applicable(id, "degree-majorization", "needs a connected graph with an edge"));
    }
    auto r = detail::open_report(id, "eigenvalue-lower-bound");
    for (std::size_t i = 1; i <= n; ++i) {
        if (is_clique_plus_isolated(g, i)) continue;
        detail::record(r, i, mu[i - 1] - (static_cast<double>(deg[i - 1]) - static_cast<double>(i) + 2));
    }
    detail::close_report(r, n);
    out.push_back(r);
    return out;
}

inline double path_laplacian_energy(std::size_t n)
{
    if (n < 1) throw ParameterError("path energy needs n >= 1");
    const double avg = 2.0 - 2.0 / static_cast<double>(n);
    double e = 0;
    for (std::size_t j = 0; j < n; ++j)
        e += std::abs(2 - 2 * std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)) - avg);
    return e;
}

inline Rational star_laplacian_energy(std::size_t n)
{
    if (n < 2) throw ParameterError("star energy needs n >= 2");
    const long nn = static_cast<long>(n);
    Rational avg(2 * nn - 2, nn);
    avg.canonicalize();
    Rational e = abs(Rational(nn) - avg) + avg;
    e += Rational(nn - 2) * abs(Rational(1) - avg);
    return e;
}

struct TreeEnergyReference {
    std::size_t n = 0;
    double path = 0;
    double star = 0;
};

inline TreeEnergyReference tree_energy_reference(std::size_t n)
{
    return {n, path_laplacian_energy(n), star_laplacian_energy(n).get_d()};
}

// Laplacian energy of a tree against the path and star, and the lower bounds derived from degrees and edge cuts.
inline std::vector<CheckReport> le_checks(const Graph& t, const TreeEnergyReference& ref, const std::string& id)
{
    if (!is_tree(t) || t.order() < 2) throw PreconditionError("energy checks need a tree with at least 2 vertices");
    const std::size_t n = t.order();
    if (ref.n != n) throw ParameterError("energy reference computed for a different order");
    const double nn = static_cast<double>(n);
    const double tol = fail_tolerance(n);
    const auto mu = laplacian_values(t);
    const double avg = 2.0 - 2.0 / nn;
    const auto le = laplacian_energy(mu, avg);
    std::vector<CheckReport> out;

    auto single = [&](const std::string& name, double margin, bool exact, const std::string& note = "") {
        auto r = detail::open_report(id, name);
        detail::record(r, 0, margin);
        r.exact_bound = exact;
        r.note = note;
        detail::close_report(r, n);
        out.push_back(r);
    };

    single("le-lower", le.value - ref.path, false);
    single("le-upper", ref.star - le.value, true);
    {
        auto r = detail::open_report(id, "le-forms");
        const double dev = std::max(std::abs(le.value - le.sigma_form), std::abs(le.value - le.max_form));
        detail::record(r, 0, 1e-8 * nn - dev);
        r.pass = dev <= 1e-8 * nn;
        r.bound = false;
        out.push_back(r);
    }
    const auto sig = sigma_tree(t);
    single("le-sigma", sig == le.sigma ? 0.0 : -1.0, true,
           "exact sigma " + std::to_string(sig) + ", floating sigma " + std::to_string(le.sigma));
    out.back().bound = false;
    single("le-path-bound", 2 + 4 * nn / std::numbers::pi - ref.path, false);

    const auto deg = degree_profile(t).degrees;
    {
        auto r = detail::open_report(id, "le-degree-sum");
        Rational sd = 0;
        Rational avg_q(2 * static_cast<long>(n) - 2, static_cast<long>(n));
        avg_q.canonicalize();
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            sd += static_cast<long>(deg[k - 1]);
            Rational bound = 2 * (1 + sd - Rational(static_cast<long>(k)) * avg_q);
            detail::record(r, k, le.value - bound.get_d());
        }
        detail::close_report(r, n);
        out.push_back(r);
    }
    const std::size_t s = n - pendant_count(t);
    const double sd = static_cast<double>(s);
    if (n >= 4 && (std::numbers::pi - 2) / std::numbers::pi * nn >= sd + 2 - 2 * sd / nn)
        single("le-few-internal", le.value - ref.path, false, "s=" + std::to_string(s));
    else
        out.push_back(detail::not_applicable(id, "le-few-internal", "internal-vertex condition not met"));
    // s <= 9n/25 - 2  <=>  25 s <= 9 n - 50
    if (n >= 4 && 25 * static_cast<long>(s) <= 9 * static_cast<long>(n) - 50)
        single("le-sparse-internal", le.value - (2 + 4 * nn / std::numbers::pi), false, "s=" + std::to_string(s));
    else
        out.push_back(detail::not_applicable(id, "le-sparse-internal", "s > 9n/25 - 2"));

    if (n >= 8) {
        auto r = detail::open_report(id, "le-edge-cut");
        r.exact_bound = false;
        const double cut_avg = 2.0 - 4.0 / nn;
        std::size_t idx = 0;
        for (auto [u, v] : t.edges()) {
            ++idx;
            if (t.degree(u) == 1 || t.degree(v) == 1) continue;
            Graph f = remove_edge(t, u, v);
            std::size_t sigma = 0;
            double bound = 0;
            for (const auto& comp : components(f)) {
                const auto part = induced_subgraph(f, comp);
                const auto pm = laplacian_values(part);
                for (double x : pm)
                    if (x >= cut_avg - kSigmaGuard) {
                        ++sigma;
                        bound += 2 * x;
                    }
            }
            bound += -4.0 * static_cast<double>(sigma) + 4.0 * static_cast<double>(sigma) / nn;
            detail::record(r, idx, le.value - bound);
        }
        if (r.margins.empty()) {
            out.push_back(detail::not_applicable(id, "le-edge-cut", "no non-pendant edge"));
        } else {
            detail::close_report(r, n);
            out.push_back(r);
        }
    } else {
        out.push_back(detail::not_applicable(id, "le-edge-cut", "needs n >= 8"));
    }

    {
        Rational avg_q(2 * static_cast<long>(n) - 2, static_cast<long>(n));
        avg_q.canonicalize();
        const auto below = diagonalize_tree(t, -avg_q).negative;
        single("le-half-below-average", static_cast<double>(below) - static_cast<double>(n / 2), true,
               std::to_string(below) + " eigenvalues below the average degree");
    }
    (void)tol;
    return out;
}

// Largest root of the quadratic bounding the generalized distance spectral radius for the pair (i, j).
inline std::optional<double> radius_pair_bound(double a, double ti, double tj, double dij)
{
    const double b = a * ti + tj - (1 - a) * dij;
    const double c = a * ti * tj - (1 - a) * ti * dij;
    const double disc = b * b - 4 * c;
    if (disc < 0) return std::nullopt;
    return (b + std::sqrt(disc)) / 2;
}

// The displayed closed form of the same bound, kept for comparison.
inline std::optional<double> radius_pair_bound_displayed(double a, double ti, double tj, double dij)
{
    const double rad = (a * ti - tj) * (a * ti - tj) + (1 - a) * (1 - a - 2 * tj - 4 * ti - 2 * a * ti) * dij;
    if (rad < 0) return std::nullopt;
    return (a * ti + tj - (1 - a) * dij + std::sqrt(rad)) / 2;
}

struct RadiusBounds {
    double lower = 0;     // max(2W/n, sqrt(sum Tr^2 / n))
    double upper = 0;     // max over pairs of the quadratic's larger root
    double displayed = 0; // max over pairs of the displayed form (NaN if never real)
};

inline RadiusBounds radius_bounds(const DistanceData& dd, double a)
{
    const std::size_t n = dd.transmission.size();
    RadiusBounds rb;
    double sq = 0;
    for (auto t : dd.transmission) sq += static_cast<double>(t) * static_cast<double>(t);
    rb.lower = std::max(2.0 * static_cast<double>(dd.wiener) / static_cast<double>(n), std::sqrt(sq / static_cast<double>(n)));
    rb.upper = -INFINITY;
    rb.displayed = -INFINITY;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double ti = static_cast<double>(dd.transmission[i]);
            const double tj = static_cast<double>(dd.transmission[j]);
            const double d = static_cast<double>(dd.dist[i][j]);
            if (auto x = radius_pair_bound(a, ti, tj, d)) rb.upper = std::max(rb.upper, *x);
            if (auto x = radius_pair_bound_displayed(a, ti, tj, d)) rb.displayed = std::max(rb.displayed, *x);
        }
    if (n == 1) rb.upper = 0;
    if (rb.displayed == -INFINITY) rb.displayed = NAN;
    return rb;
}

inline std::optional<std::vector<std::size_t>> bipartition(const Graph& g)
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
                    return std::nullopt;
                }
            }
    }
    std::vector<std::size_t> zero;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (side[v] == 0) zero.push_back(v);
    return zero;
}

// Moment identities, radius sandwich, energy forms, and the tree/star/bipartite energy bounds for D_alpha.
inline std::vector<CheckReport> dalpha_bounds(const Graph& g, const Rational& alpha, const std::string& id)
{
    if (alpha < 0 || alpha >= 1) throw ParameterError("generalized distance bounds need alpha in [0,1)");
    const auto dd = distances(g);
    const std::size_t n = g.order();
    const double nn = static_cast<double>(n);
    const double a = alpha.get_d();
    const auto en = generalized_distance_energy(g, alpha);
    const auto& ev = en.eigenvalues;
    const double w = static_cast<double>(dd.wiener);
    std::vector<CheckReport> out;

    auto single = [&](const std::string& name, double margin, bool exact, const std::string& note = "") {
        auto r = detail::open_report(id, name);
        detail::record(r, 0, margin);
        r.exact_bound = exact;
        r.note = note;
        detail::close_report(r, n);
        out.push_back(r);
        return &out.back();
    };

    {
        double s1 = 0, s2 = 0, s3 = 0;
        for (double x : ev) {
            s1 += x;
            s2 += x * x;
            s3 += (x - en.mean) * (x - en.mean);
        }
        Rational tr2 = 0, fro = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr2 += Rational(static_cast<long>(dd.transmission[i])) * static_cast<long>(dd.transmission[i]);
            for (std::size_t j = 0; j < n; ++j)
                fro += Rational(static_cast<long>(dd.dist[i][j])) * static_cast<long>(dd.dist[i][j]);
        }
        const Rational one_minus = 1 - alpha;
        const Rational m1 = 2 * alpha * static_cast<long>(dd.wiener);
        const Rational m2 = alpha * alpha * tr2 + one_minus * one_minus * fro;
        const Rational m3 = m2 - 4 * alpha * alpha * Rational(static_cast<long>(dd.wiener)) *
                                     static_cast<long>(dd.wiener) / static_cast<long>(n);
        auto rel = [](double got, const Rational& want) {
            return std::abs(got - want.get_d()) / std::max(1.0, std::abs(want.get_d()));
        };
        const double worst = std::max({rel(s1, m1), rel(s2, m2), rel(s3, m3)});
        auto r = detail::open_report(id, "dalpha-moments");
        detail::record(r, 0, 1e-7 - worst);
        r.pass = worst <= 1e-7;
        r.bound = false;
        out.push_back(r);
    }

    const auto rb = radius_bounds(dd, a);
    const double rho = ev.front();
    {
        auto* r = single("dalpha-radius-lower", rho - rb.lower, false);
        const bool eq = std::abs(rho - 2 * w / nn) <= 1e-8 * std::max(1.0, rho);
        r->equality = eq;
        if (eq != dd.transmission_regular) {
            r->pass = false;
            r->note = "equality with 2W/n does not match transmission regularity";
        } else {
            r->note = eq ? "equality: transmission regular" : "strict";
        }
    }
    {
        auto* r = single("dalpha-radius-upper", rb.upper - rho, false);
        r->note = "displayed form gives " + std::to_string(rb.displayed);
        if (dd.transmission_regular) r->equality = std::abs(rb.upper - rho) <= 1e-8 * std::max(1.0, rho);
    }
    {
        auto r = detail::open_report(id, "dalpha-energy-forms");
        const double dev = std::abs(en.value - en.max_form);
        detail::record(r, 0, 1e-8 * nn - dev);
        r.pass = dev <= 1e-8 * nn * std::max(1.0, en.value);
        r.bound = false;
        out.push_back(r);
    }

    if (is_tree(g) && n >= 4) {
        const auto star = star_dalpha_values(n, a);
        const double star_rho = *std::max_element(star.begin(), star.end());
        const bool is_star = g.max_degree() == n - 1;
        {
            auto* r = single("dalpha-tree-radius", rho - star_rho, false);
            r->equality = std::abs(rho - star_rho) <= 1e-8 * rho;
            if (r->equality != is_star) {
                r->pass = false;
                r->note = "radius equality does not match being a star";
            }
        }
        {
            const double bound = 2 * star_rho - 4 * a * w / nn;
            auto* r = single("dalpha-tree-energy", en.value - bound, false);
            r->equality = std::abs(en.value - bound) <= 1e-8 * std::max(1.0, en.value);
            const long nl = static_cast<long>(n);
            const bool expect = is_star && alpha > 0 && alpha <= Rational(2 * nl, 3 * nl - 2);
            if (a > 0 && r->equality != expect) {
                r->pass = false;
                r->note = "energy equality does not match star below the threshold";
            }
        }
        if (is_star && a > 0) {
            const double closed = star_dalpha_energy(n, a);
            auto* r = single("dalpha-star-energy", -std::abs(en.value - closed) + 1e-8 * std::max(1.0, en.value), false);
            r->pass = std::abs(en.value - closed) <= 1e-8 * std::max(1.0, en.value);
            r->bound = false;
        }
    }

    if (a >= 0.5 && n >= 2 && is_connected(g)) {
        if (auto side = bipartition(g)) {
            const std::size_t sa = std::min(side->size(), n - side->size());
            const auto kv = bipartite_dalpha_values(sa, n, a);
            double best = -INFINITY, partial = 0;
            std::size_t best_t = 0;
            for (std::size_t t = 1; t <= n; ++t) {
                partial += kv[t - 1];
                const double b = 2 * partial - 4 * static_cast<double>(t) * a * w / nn;
                if (b > best) {
                    best = b;
                    best_t = t;
                }
            }
            auto* r = single("dalpha-bipartite-energy", en.value - best, false,
                             "a=" + std::to_string(sa) + " t=" + std::to_string(best_t));
            r->worst_k = best_t;
        }
    }
    return out;
}

// Every D_alpha eigenvalue weakly increases when a non-bridge edge is deleted (alpha >= 1/2).
inline CheckReport dalpha_edge_deletion_check(const Graph& g, std::size_t u, std::size_t v, const Rational& alpha,
                                              const std::string& id)
{
    if (alpha < Rational(1, 2) || alpha > 1) throw ParameterError("edge deletion monotonicity needs alpha in [1/2,1]");
    Graph h = remove_edge(g, u, v);
    if (!is_connected(h)) throw PreconditionError("edge deletion disconnects the graph");
    auto before = symmetric_eigenvalues(build_matrix(g, MatrixKind::Dalpha, alpha).d);
    auto after = symmetric_eigenvalues(build_matrix(h, MatrixKind::Dalpha, alpha).d);
    auto r = detail::open_report(id, "dalpha-edge-deletion");
    for (std::size_t i = 0; i < before.size(); ++i)
        detail::record(r, i + 1, after[i] - before[i] + 1e-9 * std::max(1.0, std::abs(before[i])));
    detail::close_report(r, g.order());
    return r;
}

// b_t = b_{t-1} + 8(t+1), b_0 = 0; x_t = b_t + 9.
inline std::pair<std::uint64_t, std::uint64_t> perfect_square_seq(std::uint64_t t)
{
    std::uint64_t b = 0;
    for (std::uint64_t i = 1; i <= t; ++i) b += 8 * (i + 1);
    return {b, b + 9};
}

struct SweepSummary {
    std::size_t checked = 0;
    std::size_t failed = 0;
    double min_margin = INFINITY;
    std::string worst_instance;
    std::size_t worst_k = 0;

    void add(const CheckReport& r)
    {
        if (!r.applicable) return;
        ++checked;
        if (!r.pass) ++failed;
        if (r.bound && r.margin < min_margin) {
            min_margin = r.margin;
            worst_instance = r.instance;
            worst_k = r.worst_k;
        }
    }
    void merge(const SweepSummary& o)
    {
        checked += o.checked;
        failed += o.failed;
        if (o.min_margin < min_margin) {
            min_margin = o.min_margin;
            worst_instance = o.worst_instance;
            worst_k = o.worst_k;
        }
    }
};

} // namespace gspec
