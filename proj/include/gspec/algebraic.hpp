#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> f;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::size_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::size_t euler_phi(std::size_t n)
{
    std::size_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::size_t divisor_count(std::size_t n)
{
    std::size_t t = 1;
    for (auto [p, e] : factorize(n)) t *= e + 1;
    return t;
}

struct DivisorData {
    std::size_t n = 0;
    std::vector<std::size_t> proper;     // divisors other than 1 and n, ascending
    std::vector<std::size_t> proper_phi; // phi of each proper divisor
    std::size_t tau = 0;
    std::size_t phi = 0;
};

inline DivisorData divisor_data(std::size_t n)
{
    if (n < 2) throw ParameterError("divisor data needs n >= 2, got " + std::to_string(n));
    DivisorData d;
    d.n = n;
    for (std::size_t k = 2; k < n; ++k)
        if (n % k == 0) {
            d.proper.push_back(k);
            d.proper_phi.push_back(euler_phi(k));
        }
    d.tau = divisor_count(n);
    d.phi = euler_phi(n);
    return d;
}

namespace detail {

inline const DivisorData& require_proper(const DivisorData& d)
{
    if (d.proper.empty())
        throw ParameterError(std::to_string(d.n) + " is prime: no proper divisors, so the graph has no vertices");
    return d;
}

} // namespace detail

// Vertex i is the i-th proper divisor; edge iff one divides the other.
inline Graph divisibility_graph(std::size_t n)
{
    auto d = divisor_data(n);
    detail::require_proper(d);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < d.proper.size(); ++i)
        for (std::size_t j = i + 1; j < d.proper.size(); ++j)
            if (d.proper[j] % d.proper[i] == 0) e.emplace_back(i, j);
    return Graph(d.proper.size(), e);
}

// Vertex i is the i-th proper divisor; edge iff n divides the product.
inline Graph zero_divisor_quotient_graph(std::size_t n)
{
    auto d = divisor_data(n);
    detail::require_proper(d);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < d.proper.size(); ++i)
        for (std::size_t j = i + 1; j < d.proper.size(); ++j)
            if ((d.proper[i] * d.proper[j]) % n == 0) e.emplace_back(i, j);
    return Graph(d.proper.size(), e);
}

struct ZnDecomposition {
    JoinedUnionSpec spec;
    std::vector<std::size_t> labels;               // divisor per part; 0 marks the identity-and-generators part
    std::vector<PartKind> kinds;
    std::vector<std::vector<std::size_t>> classes; // residues per part, ascending
};

struct AlgebraicGraph {
    Graph graph;                        // built from the definition
    std::vector<std::size_t> residues;  // residue of each vertex of graph
    ZnDecomposition decomposition;
    std::vector<std::size_t> to_blocks; // vertex of graph -> vertex of joined_union(decomposition.spec)
};

namespace detail {

inline std::vector<std::size_t> block_map(const std::vector<std::size_t>& residues,
                                          const std::vector<std::vector<std::size_t>>& classes, std::size_t n)
{
    std::vector<std::size_t> index_of_residue(n, SIZE_MAX);
    for (std::size_t v = 0; v < residues.size(); ++v) index_of_residue[residues[v]] = v;
    std::vector<std::size_t> map(residues.size(), SIZE_MAX);
    std::size_t next = 0;
    for (const auto& cls : classes)
        for (auto r : cls) map[index_of_residue[r]] = next++;
    return map;
}

inline Graph part_graph(PartKind k, std::size_t order)
{
    std::vector<Edge> e;
    if (k == PartKind::Clique)
        for (std::size_t u = 0; u < order; ++u)
            for (std::size_t v = u + 1; v < order; ++v) e.emplace_back(u, v);
    return Graph(order, e);
}

} // namespace detail

// Power graph of the additive group Z_n: x ~ y iff one lies in the cyclic subgroup generated by the other.
// x lies in <y> iff gcd(y, n) divides x.
inline AlgebraicGraph power_graph(std::size_t n)
{
    if (n < 3) throw ParameterError("power graph needs n >= 3, got " + std::to_string(n));
    AlgebraicGraph out;
    std::vector<Edge> e;
    for (std::size_t x = 0; x < n; ++x) {
        out.residues.push_back(x);
        for (std::size_t y = x + 1; y < n; ++y)
            if (x % std::gcd(y, n) == 0 || y % std::gcd(x, n) == 0) e.emplace_back(x, y);
    }
    out.graph = Graph(n, e);

    auto d = divisor_data(n);
    auto& dec = out.decomposition;
    std::vector<std::size_t> head{0};
    for (std::size_t x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) head.push_back(x);
    dec.classes.push_back(head);
    dec.labels.push_back(0);
    for (auto div : d.proper) {
        std::vector<std::size_t> cls;
        for (std::size_t x = 1; x < n; ++x)
            if (std::gcd(x, n) == n / div) cls.push_back(x);
        dec.classes.push_back(cls);
        dec.labels.push_back(div);
    }
    std::vector<Edge> se;
    for (std::size_t i = 0; i < d.proper.size(); ++i) {
        se.emplace_back(0, i + 1);
        for (std::size_t j = i + 1; j < d.proper.size(); ++j)
            if (d.proper[j] % d.proper[i] == 0) se.emplace_back(i + 1, j + 1);
    }
    dec.spec.skeleton = Graph(d.proper.size() + 1, se);
    for (const auto& cls : dec.classes) {
        dec.kinds.push_back(PartKind::Clique);
        dec.spec.parts.push_back(detail::part_graph(PartKind::Clique, cls.size()));
    }
    out.to_blocks = detail::block_map(out.residues, dec.classes, n);
    return out;
}

// Zero-divisor graph of Z_n on the nonzero zero divisors: u ~ v iff n | uv.
inline AlgebraicGraph zero_divisor_graph(std::size_t n)
{
    auto d = divisor_data(n);
    detail::require_proper(d);
    AlgebraicGraph out;
    for (std::size_t x = 1; x < n; ++x)
        if (std::gcd(x, n) > 1) out.residues.push_back(x);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < out.residues.size(); ++i)
        for (std::size_t j = i + 1; j < out.residues.size(); ++j)
            if ((out.residues[i] * out.residues[j]) % n == 0) e.emplace_back(i, j);
    out.graph = Graph(out.residues.size(), e);

    auto& dec = out.decomposition;
    dec.spec.skeleton = zero_divisor_quotient_graph(n);
    for (auto div : d.proper) {
        std::vector<std::size_t> cls;
        for (auto x : out.residues)
            if (std::gcd(x, n) == div) cls.push_back(x);
        PartKind k = (div * div) % n == 0 ? PartKind::Clique : PartKind::Coclique;
        dec.classes.push_back(cls);
        dec.labels.push_back(div);
        dec.kinds.push_back(k);
        dec.spec.parts.push_back(detail::part_graph(k, cls.size()));
    }
    out.to_blocks = detail::block_map(out.residues, dec.classes, n);
    return out;
}

inline nlohmann::json to_json(const ZnDecomposition& dec)
{
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < dec.labels.size(); ++i)
        parts.push_back({{"divisor", dec.labels[i]},
                         {"kind", dec.kinds[i] == PartKind::Clique ? "clique" : "coclique"},
                         {"order", dec.classes[i].size()},
                         {"residues", dec.classes[i]}});
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : dec.spec.skeleton.edges()) edges.push_back({u, v});
    return {{"skeleton_order", dec.spec.skeleton.order()}, {"skeleton_edges", edges}, {"parts", parts}};
}

} // namespace gspec
