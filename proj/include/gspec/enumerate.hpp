#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gspec {

inline constexpr std::size_t kMaxCanonicalOrder = 11;
inline constexpr std::size_t kMaxEnumerationOrder = 8;

namespace detail {

// Isomorphism-invariant colour refinement: colours are ranks of sorted signatures.
inline std::vector<std::size_t> refine_colours(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<std::size_t> nb;
            for (auto w : g.neighbors(v)) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<std::size_t>> uniq(sig);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (uniq.size() == classes) break;
        classes = uniq.size();
    }
    return colour;
}

inline std::size_t pair_offset(std::size_t j) { return j * (j - 1) / 2; }

struct CanonSearch {
    const Graph& g;
    std::size_t n;
    std::size_t total_bits;
    std::vector<std::size_t> cell_of_position;
    std::vector<std::size_t> colour;
    std::vector<std::size_t> placed; // placed[p] = vertex at position p
    std::vector<char> used;
    std::uint64_t best = 0;
    bool have_best = false;

    void run(std::size_t p, std::uint64_t partial)
    {
        if (p == n) {
            if (!have_best || partial < best) {
                best = partial;
                have_best = true;
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || colour[v] != cell_of_position[p]) continue;
            std::uint64_t code = partial;
            for (std::size_t i = 0; i < p; ++i)
                if (g.has_edge(placed[i], v)) code |= std::uint64_t{1} << (total_bits - 1 - (pair_offset(p) + i));
            if (have_best) {
                std::size_t known = pair_offset(p + 1);
                std::size_t shift = total_bits - known;
                if ((code >> shift) > (best >> shift)) continue;
            }
            used[v] = 1;
            placed[p] = v;
            run(p + 1, code);
            used[v] = 0;
        }
    }
};

} // namespace detail

// Minimum upper-triangle code over all relabelings compatible with the refined colour order.
// Two graphs of equal order are isomorphic iff their codes are equal.
inline std::uint64_t canonical_code(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kMaxCanonicalOrder)
        throw CapacityError("canonical forms are limited to order " + std::to_string(kMaxCanonicalOrder));
    if (n <= 1) return 0;
    detail::CanonSearch s{g, n, n * (n - 1) / 2, {}, detail::refine_colours(g), std::vector<std::size_t>(n),
                          std::vector<char>(n, 0)};
    std::vector<std::size_t> sorted = s.colour;
    std::sort(sorted.begin(), sorted.end());
    s.cell_of_position = sorted;
    s.run(0, 0);
    return s.best;
}

inline Graph graph_from_code(std::size_t n, std::uint64_t code)
{
    const std::size_t total = n * (n - 1) / 2;
    std::vector<Edge> e;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if ((code >> (total - 1 - (detail::pair_offset(j) + i))) & 1) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

// One canonical representative per isomorphism class, ordered by canonical code.
inline std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only)
{
    if (n == 0) throw ParameterError("enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder)
        throw CapacityError("built-in enumeration stops at n = " + std::to_string(kMaxEnumerationOrder) +
                            "; supply larger corpora as graph6 files");
    std::vector<std::uint64_t> level{0};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        const std::size_t prev = k - 1;
        for (auto code : level) {
            Graph base = graph_from_code(prev, code);
            auto edges = base.edges();
            for (std::uint32_t mask = 0; mask < (1u << prev); ++mask) {
                auto e = edges;
                for (std::size_t v = 0; v < prev; ++v)
                    if ((mask >> v) & 1) e.emplace_back(v, prev);
                next.insert(canonical_code(Graph(k, e)));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    for (auto code : level) {
        Graph g = graph_from_code(n, code);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

} // namespace gspec
