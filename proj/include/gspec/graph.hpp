#pragma once

#include "gspec/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph with sorted neighbour lists. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n)
    {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") out of range for order " + std::to_string(n));
            if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }

    std::size_t order() const { return adj_.size(); }

    std::size_t size() const
    {
        std::size_t s = 0;
        for (const auto& row : adj_) s += row.size();
        return s / 2;
    }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    bool has_edge(std::size_t u, std::size_t v) const
    {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (auto v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> d(order());
        for (std::size_t v = 0; v < order(); ++v) d[v] = degree(v);
        return d;
    }

    bool is_regular() const
    {
        for (std::size_t v = 1; v < order(); ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

    std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (const auto& row : adj_) d = std::max(d, row.size());
        return d;
    }

    bool is_complete() const { return size() * 2 == order() * (order() - 1); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::vector<std::vector<std::size_t>> adj_;
};

inline std::vector<std::vector<std::size_t>> components(const Graph& g)
{
    std::vector<int> seen(g.order(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

inline Graph complement(const Graph& g)
{
    std::vector<Edge> e;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph(g.order(), e);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices)
{
    std::vector<std::size_t> index(g.order(), SIZE_MAX);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (auto w : g.neighbors(vertices[i]))
            if (index[w] != SIZE_MAX && i < index[w]) e.emplace_back(i, index[w]);
    return Graph(vertices.size(), e);
}

// Vertex v of g becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, const std::vector<std::size_t>& perm)
{
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

inline Graph remove_edge(const Graph& g, std::size_t u, std::size_t v)
{
    std::vector<Edge> e;
    for (auto ed : g.edges())
        if (!((ed.first == u && ed.second == v) || (ed.first == v && ed.second == u))) e.push_back(ed);
    return Graph(g.order(), e);
}

inline Graph add_edge(const Graph& g, std::size_t u, std::size_t v)
{
    auto e = g.edges();
    e.emplace_back(u, v);
    return Graph(g.order(), e);
}

inline Graph disjoint_union(const std::vector<Graph>& parts)
{
    std::vector<Edge> e;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) e.emplace_back(u + offset, v + offset);
        offset += p.order();
    }
    return Graph(offset, e);
}

enum class PartKind { Clique, Coclique, General };

inline PartKind part_kind(const Graph& g)
{
    if (g.is_complete()) return PartKind::Clique;
    if (g.size() == 0) return PartKind::Coclique;
    return PartKind::General;
}

// Skeleton vertex i is replaced by parts[i]; parts i and j are fully joined iff i~j in the skeleton.
// Part i occupies a consecutive block of vertices in skeleton order.
struct JoinedUnionSpec {
    Graph skeleton;
    std::vector<Graph> parts;
};

inline std::vector<std::size_t> block_offsets(const JoinedUnionSpec& spec)
{
    std::vector<std::size_t> off(spec.parts.size() + 1, 0);
    for (std::size_t i = 0; i < spec.parts.size(); ++i) off[i + 1] = off[i] + spec.parts[i].order();
    return off;
}

inline void validate(const JoinedUnionSpec& spec)
{
    if (spec.parts.size() != spec.skeleton.order())
        throw ParameterError("joined union needs " + std::to_string(spec.skeleton.order()) + " parts, got " +
                             std::to_string(spec.parts.size()));
    for (std::size_t i = 0; i < spec.parts.size(); ++i)
        if (spec.parts[i].order() == 0) throw ParameterError("part " + std::to_string(i) + " is empty");
}

inline Graph joined_union(const JoinedUnionSpec& spec)
{
    validate(spec);
    auto off = block_offsets(spec);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < spec.parts.size(); ++i)
        for (auto [u, v] : spec.parts[i].edges()) e.emplace_back(u + off[i], v + off[i]);
    for (auto [i, j] : spec.skeleton.edges())
        for (std::size_t u = off[i]; u < off[i + 1]; ++u)
            for (std::size_t v = off[j]; v < off[j + 1]; ++v) e.emplace_back(u, v);
    return Graph(off.back(), e);
}

inline Graph join(const Graph& a, const Graph& b)
{
    return joined_union({Graph(2, {{0, 1}}), {a, b}});
}

struct DistanceData {
    std::vector<std::vector<std::size_t>> dist;
    std::vector<std::size_t> transmission;
    std::size_t wiener = 0;
    std::size_t diameter = 0;
    bool transmission_regular = false;
};

// All-pairs BFS. Throws ConnectivityError naming an unreachable pair.
inline DistanceData distances(const Graph& g)
{
    const std::size_t n = g.order();
    DistanceData out;
    out.dist.assign(n, std::vector<std::size_t>(n, SIZE_MAX));
    out.transmission.assign(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = out.dist[s];
        d[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : g.neighbors(u))
                if (d[w] == SIZE_MAX) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (d[t] == SIZE_MAX) throw ConnectivityError(s, t);
            out.transmission[s] += d[t];
            out.diameter = std::max(out.diameter, d[t]);
        }
    }
    std::size_t twice = std::accumulate(out.transmission.begin(), out.transmission.end(), std::size_t{0});
    out.wiener = twice / 2;
    out.transmission_regular = std::all_of(out.transmission.begin(), out.transmission.end(),
                                           [&](std::size_t t) { return t == out.transmission.front(); });
    return out;
}

struct DegreeProfile {
    std::vector<std::size_t> degrees;   // descending
    std::vector<std::size_t> conjugate; // d*_k = #{v : d_v >= k}, k = 1..n
    double average = 0.0;
};

inline DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.degrees = g.degrees();
    std::sort(p.degrees.rbegin(), p.degrees.rend());
    const std::size_t n = g.order();
    p.conjugate.assign(n, 0);
    for (std::size_t k = 1; k <= n; ++k)
        p.conjugate[k - 1] = static_cast<std::size_t>(
            std::count_if(p.degrees.begin(), p.degrees.end(), [k](std::size_t d) { return d >= k; }));
    p.average = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(n);
    return p;
}

inline std::size_t pendant_count(const Graph& g)
{
    std::size_t p = 0;
    for (std::size_t v = 0; v < g.order(); ++v) p += g.degree(v) == 1;
    return p;
}

// "n m" header then one "u v" line per edge, 0-indexed.
inline std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace gspec
