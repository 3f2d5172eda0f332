#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/matrix.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/spectrum.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gspec {

using Partition = std::vector<std::vector<std::size_t>>;

struct QuotientMatrix {
    Partition blocks;
    bool exact = false;
    RationalMatrix q;          // average row sums, exact when the parent is exact
    Eigen::MatrixXd d;         // average row sums
    Eigen::MatrixXd symmetric; // block sums / sqrt(|P_i| |P_j|), similar to d
    bool equitable = false;
};

inline void validate_partition(const Partition& p, std::size_t n)
{
    std::vector<char> seen(n, 0);
    std::size_t count = 0;
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (p[b].empty()) throw ParameterError("partition block " + std::to_string(b) + " is empty");
        for (auto v : p[b]) {
            if (v >= n) throw ParameterError("partition index " + std::to_string(v) + " out of range");
            if (seen[v]) throw ParameterError("partition index " + std::to_string(v) + " appears twice");
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n) throw ParameterError("partition does not cover all " + std::to_string(n) + " indices");
}

inline QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& blocks)
{
    const std::size_t n = m.order();
    validate_partition(blocks, n);
    const std::size_t s = blocks.size();
    QuotientMatrix out;
    out.blocks = blocks;
    out.exact = m.exact;
    out.d = Eigen::MatrixXd::Zero(s, s);
    out.symmetric = Eigen::MatrixXd::Zero(s, s);
    out.equitable = true;
    if (m.exact) out.q.assign(s, std::vector<Rational>(s, Rational(0)));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            double total = 0;
            Rational exact_total = 0;
            std::optional<Rational> first_exact;
            std::optional<double> first;
            for (auto u : blocks[i]) {
                double row = 0;
                Rational exact_row = 0;
                for (auto v : blocks[j]) {
                    row += m.d(u, v);
                    if (m.exact) exact_row += m.q[u][v];
                }
                total += row;
                if (m.exact) {
                    exact_total += exact_row;
                    if (!first_exact) first_exact = exact_row;
                    else if (*first_exact != exact_row) out.equitable = false;
                } else {
                    if (!first) first = row;
                    else if (std::abs(*first - row) > 1e-9 * std::max(1.0, std::abs(row))) out.equitable = false;
                }
            }
            const double ni = static_cast<double>(blocks[i].size());
            const double nj = static_cast<double>(blocks[j].size());
            out.d(i, j) = total / ni;
            out.symmetric(i, j) = total / std::sqrt(ni * nj);
            if (m.exact) out.q[i][j] = exact_total / Rational(static_cast<unsigned long>(blocks[i].size()));
        }
    return out;
}

inline std::vector<double> quotient_eigenvalues(const QuotientMatrix& qm) { return symmetric_eigenvalues(qm.symmetric); }

// Blocks of joined_union(spec) in skeleton order.
inline Partition joined_union_partition(const JoinedUnionSpec& spec)
{
    auto off = block_offsets(spec);
    Partition p(spec.parts.size());
    for (std::size_t i = 0; i < spec.parts.size(); ++i)
        for (std::size_t v = off[i]; v < off[i + 1]; ++v) p[i].push_back(v);
    return p;
}

struct InheritedEigenvalue {
    double value = 0;
    std::optional<Rational> exact; // present when the part spectrum is known exactly
    std::size_t multiplicity = 0;
    std::size_t part = 0;
    double lambda = 0; // adjacency eigenvalue of the part that produced it
};

struct ShortcutSpectrum {
    MatrixKind kind = MatrixKind::NL;
    std::vector<InheritedEigenvalue> inherited;
    Eigen::MatrixXd quotient;            // non-symmetric quotient
    std::optional<RationalMatrix> exact_quotient;
    Eigen::MatrixXd symmetric_quotient;  // after similarity by diag(sqrt(n_i))
    std::vector<double> quotient_eigenvalues;
    Spectrum combined;

    std::size_t inherited_count() const
    {
        std::size_t c = 0;
        for (const auto& e : inherited) c += e.multiplicity;
        return c;
    }

    std::optional<Polynomial> quotient_char_poly() const
    {
        if (!exact_quotient) return std::nullopt;
        return char_poly_exact(*exact_quotient);
    }
};

namespace detail {

struct PartAdjacency {
    std::size_t regularity = 0;
    // Adjacency eigenvalues with one copy of the regularity removed.
    std::vector<std::pair<double, std::size_t>> rest;
    std::vector<std::optional<Rational>> rest_exact;
};

inline PartAdjacency part_adjacency(const Graph& g, std::size_t index)
{
    if (!g.is_regular())
        throw PreconditionError("part " + std::to_string(index) + " is not regular");
    PartAdjacency pa;
    const std::size_t m = g.order();
    pa.regularity = g.degree(0);
    auto kind = part_kind(g);
    if (kind == PartKind::Clique) {
        if (m > 1) {
            pa.rest.emplace_back(-1.0, m - 1);
            pa.rest_exact.emplace_back(Rational(-1));
        }
        return pa;
    }
    if (kind == PartKind::Coclique) {
        pa.rest.emplace_back(0.0, m - 1);
        pa.rest_exact.emplace_back(Rational(0));
        return pa;
    }
    auto values = symmetric_eigenvalues(build_matrix(g, MatrixKind::A).d);
    // values are descending and values[0] equals the regularity
    auto grouped = group_values(std::vector<double>(values.begin() + 1, values.end()), "A");
    for (const auto& [v, mult] : grouped.pairs) {
        double snapped = std::abs(v - std::round(v)) < 1e-9 ? std::round(v) : v;
        pa.rest.emplace_back(snapped, mult);
        if (snapped == std::round(snapped)) pa.rest_exact.emplace_back(Rational(static_cast<long>(snapped)));
        else pa.rest_exact.emplace_back(std::nullopt);
    }
    return pa;
}

inline void require_connected_skeleton(const JoinedUnionSpec& spec)
{
    validate(spec);
    if (!is_connected(spec.skeleton)) {
        auto comps = components(spec.skeleton);
        throw ConnectivityError(comps[0][0], comps[1][0]);
    }
}

inline Spectrum combine(const std::vector<InheritedEigenvalue>& inherited, const std::vector<double>& quotient,
                        MatrixKind kind)
{
    std::vector<double> all = quotient;
    for (const auto& e : inherited) all.insert(all.end(), e.multiplicity, e.value);
    return group_values(all, kind_name(kind));
}

} // namespace detail

// Normalized Laplacian spectrum of a joined union with regular parts.
inline ShortcutSpectrum nl_joined_union_spectrum(const JoinedUnionSpec& spec)
{
    detail::require_connected_skeleton(spec);
    const std::size_t s = spec.parts.size();
    std::vector<double> ni(s), ri(s), ai(s), deg(s);
    ShortcutSpectrum out;
    out.kind = MatrixKind::NL;
    std::vector<detail::PartAdjacency> pas;
    for (std::size_t i = 0; i < s; ++i) {
        pas.push_back(detail::part_adjacency(spec.parts[i], i));
        ni[i] = static_cast<double>(spec.parts[i].order());
        ri[i] = static_cast<double>(pas[i].regularity);
    }
    for (std::size_t i = 0; i < s; ++i) {
        ai[i] = 0;
        for (auto j : spec.skeleton.neighbors(i)) ai[i] += ni[j];
        deg[i] = ri[i] + ai[i];
        if (deg[i] == 0)
            throw PreconditionError("part " + std::to_string(i) + " has isolated vertices; normalized Laplacian undefined");
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < pas[i].rest.size(); ++k) {
            InheritedEigenvalue e;
            e.part = i;
            e.lambda = pas[i].rest[k].first;
            e.multiplicity = pas[i].rest[k].second;
            e.value = 1.0 - e.lambda / deg[i];
            if (pas[i].rest_exact[k])
                e.exact = 1 - *pas[i].rest_exact[k] /
                                  Rational(static_cast<unsigned long>(pas[i].regularity) +
                                           static_cast<unsigned long>(ai[i]));
            out.inherited.push_back(e);
        }
    out.quotient = Eigen::MatrixXd::Zero(s, s);
    out.symmetric_quotient = Eigen::MatrixXd::Zero(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        out.quotient(i, i) = ai[i] / deg[i];
        out.symmetric_quotient(i, i) = ai[i] / deg[i];
        for (auto j : spec.skeleton.neighbors(i)) {
            out.quotient(i, j) = -ni[j] / std::sqrt(deg[i] * deg[j]);
            out.symmetric_quotient(i, j) = -std::sqrt(ni[i] * ni[j]) / std::sqrt(deg[i] * deg[j]);
        }
    }
    out.quotient_eigenvalues = symmetric_eigenvalues(out.symmetric_quotient);
    out.combined = detail::combine(out.inherited, out.quotient_eigenvalues, out.kind);
    return out;
}

// Distance signless Laplacian spectrum of a joined union with regular parts.
// A part whose skeleton vertex has no neighbour must be complete (only possible for a one-vertex skeleton).
inline ShortcutSpectrum dsq_joined_union_spectrum(const JoinedUnionSpec& spec)
{
    detail::require_connected_skeleton(spec);
    const std::size_t s = spec.parts.size();
    auto sd = distances(spec.skeleton);
    std::vector<long> ni(s), ri(s), nprime(s, 0);
    std::vector<detail::PartAdjacency> pas;
    for (std::size_t i = 0; i < s; ++i) {
        pas.push_back(detail::part_adjacency(spec.parts[i], i));
        ni[i] = static_cast<long>(spec.parts[i].order());
        ri[i] = static_cast<long>(pas[i].regularity);
        if (spec.skeleton.degree(i) == 0 && !spec.parts[i].is_complete()) {
            if (!is_connected(spec.parts[i])) {
                auto comps = components(spec.parts[i]);
                throw ConnectivityError(comps[0][0], comps[1][0]);
            }
            throw PreconditionError("part " + std::to_string(i) +
                                    " has no skeleton neighbour and is not complete; distance shortcut needs diameter <= 2");
        }
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < s; ++k)
            if (k != i) nprime[i] += ni[k] * static_cast<long>(sd.dist[i][k]);

    ShortcutSpectrum out;
    out.kind = MatrixKind::DistQ;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < pas[i].rest.size(); ++k) {
            InheritedEigenvalue e;
            e.part = i;
            e.lambda = pas[i].rest[k].first;
            e.multiplicity = pas[i].rest[k].second;
            const long base = 2 * ni[i] + nprime[i] - ri[i] - 4;
            e.value = static_cast<double>(base) - e.lambda;
            if (pas[i].rest_exact[k]) e.exact = Rational(base) - *pas[i].rest_exact[k];
            out.inherited.push_back(e);
        }
    RationalMatrix q(s, std::vector<Rational>(s, Rational(0)));
    out.quotient = Eigen::MatrixXd::Zero(s, s);
    out.symmetric_quotient = Eigen::MatrixXd::Zero(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j) q[i][i] = 4 * ni[i] + nprime[i] - 2 * ri[i] - 4;
            else q[i][j] = ni[j] * static_cast<long>(sd.dist[i][j]);
            out.quotient(i, j) = q[i][j].get_d();
            out.symmetric_quotient(i, j) =
                i == j ? q[i][i].get_d()
                       : std::sqrt(static_cast<double>(ni[i] * ni[j])) * static_cast<double>(sd.dist[i][j]);
        }
    out.exact_quotient = q;
    out.quotient_eigenvalues = symmetric_eigenvalues(out.symmetric_quotient);
    out.combined = detail::combine(out.inherited, out.quotient_eigenvalues, out.kind);
    return out;
}

inline nlohmann::json to_json(const ShortcutSpectrum& s)
{
    nlohmann::json inh = nlohmann::json::array();
    for (const auto& e : s.inherited) {
        nlohmann::json row = {{"value", e.value}, {"multiplicity", e.multiplicity}, {"part", e.part},
                              {"lambda", e.lambda}};
        if (e.exact) row["exact"] = to_string(*e.exact);
        inh.push_back(row);
    }
    nlohmann::json q = nlohmann::json::array();
    for (Eigen::Index i = 0; i < s.quotient.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < s.quotient.cols(); ++j) {
            if (s.exact_quotient) row.push_back(to_string((*s.exact_quotient)[i][j]));
            else row.push_back(s.quotient(i, j));
        }
        q.push_back(row);
    }
    nlohmann::json out = {{"kind", kind_name(s.kind)},
                          {"inherited", inh},
                          {"quotient", q},
                          {"quotient_eigenvalues", s.quotient_eigenvalues},
                          {"spectrum", to_json(s.combined)}};
    if (auto cp = s.quotient_char_poly()) out["quotient_char_poly"] = cp->to_string();
    return out;
}

struct BlockReduction {
    std::vector<double> inherited; // eigenvalues of B - C, each with multiplicity c - 1
    std::size_t inherited_multiplicity = 0;
    Eigen::MatrixXd reduced;       // [[X, sqrt(c) beta], [sqrt(c) beta^T, B + (c-1) C]]
};

// M = [[X, beta, ..., beta], [beta^T, B, C, ..., C], ..., [beta^T, C, ..., C, B]] with c copies of B.
inline Eigen::MatrixXd assemble_block_matrix(const Eigen::MatrixXd& x, const Eigen::MatrixXd& beta,
                                             const Eigen::MatrixXd& b, const Eigen::MatrixXd& c_block, std::size_t c)
{
    const Eigen::Index p = x.rows();
    const Eigen::Index q = b.rows();
    const auto cc = static_cast<Eigen::Index>(c);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p + cc * q, p + cc * q);
    if (p > 0) m.topLeftCorner(p, p) = x;
    for (Eigen::Index i = 0; i < cc; ++i) {
        if (p > 0) {
            m.block(0, p + i * q, p, q) = beta;
            m.block(p + i * q, 0, q, p) = beta.transpose();
        }
        for (Eigen::Index j = 0; j < cc; ++j) m.block(p + i * q, p + j * q, q, q) = i == j ? b : c_block;
    }
    return m;
}

inline BlockReduction block_symmetric_reduce(const Eigen::MatrixXd& x, const Eigen::MatrixXd& beta,
                                             const Eigen::MatrixXd& b, const Eigen::MatrixXd& c_block, std::size_t c)
{
    if (c < 1) throw ParameterError("block reduction needs c >= 1");
    const Eigen::Index p = x.rows();
    const Eigen::Index q = b.rows();
    if (x.cols() != p || b.cols() != q || c_block.rows() != q || c_block.cols() != q ||
        (p > 0 && (beta.rows() != p || beta.cols() != q)))
        throw ParameterError("block reduction: inconsistent block dimensions");
    BlockReduction out;
    out.inherited_multiplicity = c - 1;
    if (c > 1) out.inherited = symmetric_eigenvalues(b - c_block);
    const double root = std::sqrt(static_cast<double>(c));
    out.reduced = Eigen::MatrixXd::Zero(p + q, p + q);
    if (p > 0) {
        out.reduced.topLeftCorner(p, p) = x;
        out.reduced.topRightCorner(p, q) = root * beta;
        out.reduced.bottomLeftCorner(q, p) = root * beta.transpose();
    }
    out.reduced.bottomRightCorner(q, q) = b + static_cast<double>(c - 1) * c_block;
    return out;
}

inline std::vector<double> block_reduction_values(const BlockReduction& r)
{
    std::vector<double> all = symmetric_eigenvalues(r.reduced);
    for (std::size_t k = 0; k < r.inherited_multiplicity; ++k) all.insert(all.end(), r.inherited.begin(), r.inherited.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

} // namespace gspec
